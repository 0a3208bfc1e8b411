#include "rackcert/rackcert.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "rackcert/replay.hpp"
#include "rackcert/serialize.hpp"

struct rc_rack {
    rackcert::RackTable table;
};

struct rc_config {
    std::int64_t search_budget = 50000;
    std::int64_t word_depth = 12;
    std::int64_t twist_length = 8;
};

struct rc_certificate {
    rackcert::Certificate cert;
};

namespace {

using namespace rackcert;

thread_local std::string last_error;

template <class F>
rc_status guard(F&& f) noexcept
{
    try {
        f();
        return RC_OK;
    } catch (const InputError& e) {
        last_error = e.what();
        return RC_INPUT_ERROR;
    } catch (const DefectError& e) {
        last_error = e.what();
        return RC_DEFECT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return RC_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return RC_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown exception";
        return RC_INTERNAL_ERROR;
    }
}

rc_status null_argument(const char* name) noexcept
{
    last_error = std::string("null argument: ") + name;
    return RC_NULL_ARGUMENT;
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::int64_t parse_positive(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw InputError("config " + key + " must be an integer, got '" + value + "'");
    }
    if (used != value.size() || v <= 0)
        throw InputError("config " + key + " must be a positive integer, got '" + value + "'");
    return v;
}

std::int64_t* config_slot(rc_config& cfg, const std::string& key)
{
    if (key == "search_budget")
        return &cfg.search_budget;
    if (key == "word_depth")
        return &cfg.word_depth;
    if (key == "twist_length")
        return &cfg.twist_length;
    throw InputError("unknown config key '" + key + "'");
}

RackTable named_rack(const std::string& name)
{
    const auto colon = name.find(':');
    const std::string kind = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    const auto number = [&] {
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 6)
            throw InputError("rack '" + name + "' needs a positive integer argument");
        return std::stoi(arg);
    };
    if (name == "octahedral")
        return octahedral_rack();
    if (kind == "Xn")
        return dihedral_square_rack(number());
    if (kind == "Dn")
        return dihedral_rack(number());
    if (kind == "trivial")
        return trivial_rack(static_cast<std::size_t>(number()));
    if (kind == "square" && !arg.empty())
        return square_rack(named_rack(arg));
    if (kind == "file" && !arg.empty()) {
        std::ifstream in(arg);
        if (!in)
            throw InputError("cannot open rack file '" + arg + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw InputError("rack file '" + arg + "' is not valid JSON: " + e.what());
        }
        return rack_from_json(j);
    }
    throw InputError("unknown rack '" + name + "' (octahedral, Xn:<odd n>, Dn:<n>, trivial:<n>, square:<name>, "
                     "file:<path>)");
}

ClassifyOptions options(const rc_config* cfg)
{
    ClassifyOptions o;
    if (cfg)
        o.search_budget = static_cast<std::size_t>(cfg->search_budget);
    return o;
}

json replay_json(const ReplayResult& r)
{
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
    json certs = json::array();
    for (const auto& c : r.certificates)
        certs.push_back(to_json(c));
    return {{"tag", r.tag},         {"summary", r.summary},   {"ok", r.ok}, {"defect", r.defect},
            {"message", r.message}, {"steps", std::move(steps)}, {"certificates", std::move(certs)}};
}

} // namespace

extern "C" {

const char* rc_version(void)
{
    return kToolVersion;
}

const char* rc_schema_version(void)
{
    return kSchemaVersion;
}

const char* rc_status_name(rc_status s)
{
    switch (s) {
    case RC_OK:
        return "ok";
    case RC_INPUT_ERROR:
        return "input error";
    case RC_DEFECT:
        return "defect";
    case RC_NULL_ARGUMENT:
        return "null argument";
    case RC_INTERNAL_ERROR:
        return "internal error";
    }
    return "unknown status";
}

const char* rc_last_error(void)
{
    return last_error.c_str();
}

uint64_t rc_defect_count(void)
{
    return defect_count();
}

void rc_string_free(char* s)
{
    std::free(s);
}

rc_status rc_config_new(rc_config** out)
{
    if (!out)
        return null_argument("out");
    return guard([&] { *out = new rc_config(); });
}

void rc_config_free(rc_config* cfg)
{
    delete cfg;
}

rc_status rc_config_set(rc_config* cfg, const char* key, const char* value)
{
    if (!cfg || !key || !value)
        return null_argument(!cfg ? "cfg" : !key ? "key" : "value");
    return guard([&] { *config_slot(*cfg, key) = parse_positive(key, value); });
}

rc_status rc_config_get(const rc_config* cfg, const char* key, int64_t* out)
{
    if (!cfg || !key || !out)
        return null_argument(!cfg ? "cfg" : !key ? "key" : "out");
    return guard([&] { *out = *config_slot(const_cast<rc_config&>(*cfg), key); });
}

rc_status rc_rack_named(const char* name, rc_rack** out)
{
    if (!name || !out)
        return null_argument(!name ? "name" : "out");
    return guard([&] { *out = new rc_rack{named_rack(name)}; });
}

void rc_rack_free(rc_rack* rack)
{
    delete rack;
}

size_t rc_rack_size(const rc_rack* rack)
{
    return rack ? rack->table.size() : 0;
}

rc_status rc_rack_op(const rc_rack* rack, size_t i, size_t j, size_t* out)
{
    if (!rack || !out)
        return null_argument(!rack ? "rack" : "out");
    return guard([&] {
        const auto n = rack->table.size();
        if (i >= n || j >= n)
            throw InputError("index out of range for a rack of size " + std::to_string(n));
        *out = static_cast<size_t>(rack->table.op(static_cast<int>(i), static_cast<int>(j)));
    });
}

rc_status rc_rack_label(const rc_rack* rack, size_t i, char** out)
{
    if (!rack || !out)
        return null_argument(!rack ? "rack" : "out");
    return guard([&] {
        if (i >= rack->table.size())
            throw InputError("index out of range");
        *out = dup(rack->table.label(static_cast<int>(i)));
    });
}

rc_status rc_rack_to_json(const rc_rack* rack, char** out)
{
    if (!rack || !out)
        return null_argument(!rack ? "rack" : "out");
    return guard([&] { *out = dup(to_json(rack->table).dump()); });
}

rc_status rc_rack_check_axioms(const rc_rack* rack, int* ok, size_t* checked, char** message)
{
    if (!rack || !ok)
        return null_argument(!rack ? "rack" : "ok");
    return guard([&] {
        const auto d = check_rack(rack->table);
        *ok = d.ok ? 1 : 0;
        if (checked)
            *checked = d.checked;
        if (message)
            *message = dup(d.message);
    });
}

rc_status rc_rack_check_braid(const rc_rack* rack, int* ok, size_t* checked, char** message)
{
    if (!rack || !ok)
        return null_argument(!rack ? "rack" : "ok");
    return guard([&] {
        const auto d = check_braid_equation(Cocycle::constant(rack->table, RootOfUnity::minus_one()));
        *ok = d.ok ? 1 : 0;
        if (checked)
            *checked = d.checked;
        if (message)
            *message = dup(d.message);
    });
}

rc_status rc_partitions(size_t m, char** out)
{
    if (!out)
        return null_argument("out");
    return guard([&] {
        if (m == 0 || m > 64)
            throw InputError("degree must be between 1 and 64");
        json a = json::array();
        for (const auto& t : partitions(m))
            a.push_back(t.to_string());
        *out = dup(a.dump());
    });
}

rc_status rc_classify(const char* group, const char* class_label, const rc_config* cfg, rc_certificate** out)
{
    if (!group || !class_label || !out)
        return null_argument(!group ? "group" : !class_label ? "class_label" : "out");
    return guard([&] {
        const std::string g = group;
        const std::string label = class_label;
        std::size_t a = 0;
        const auto num = [&](const std::string& s, const char* what) -> std::uint64_t {
            if (s.empty() || s.size() > 10 || s.find_first_not_of("0123456789") != std::string::npos)
                throw InputError(std::string("bad ") + what + " in group '" + g + "'");
            return std::stoull(s);
        };
        if (g.rfind("sym:", 0) == 0) {
            const auto m = num(g.substr(4), "degree");
            const auto t = CycleType::parse(label);
            if (t.degree() != m)
                throw InputError("cycle type " + t.to_string() + " has degree " + std::to_string(t.degree()) +
                                 ", not " + std::to_string(m));
            *out = new rc_certificate{classify_sym_class(m, t, options(cfg))};
            return;
        }
        if (g.rfind("gl:", 0) == 0 && (a = g.find(':', 3)) != std::string::npos) {
            const auto n = num(g.substr(3, a - 3), "dimension");
            const auto p = num(g.substr(a + 1), "modulus");
            if (p > UINT32_MAX)
                throw InputError("modulus too large");
            *out = new rc_certificate{classify_gl_class(n, static_cast<std::uint32_t>(p), label, options(cfg))};
            return;
        }
        throw InputError("group must be sym:<m> or gl:<n>:<p>, got '" + g + "'");
    });
}

void rc_certificate_free(rc_certificate* cert)
{
    delete cert;
}

rc_status rc_certificate_verdict(const rc_certificate* cert, rc_verdict* out)
{
    if (!cert || !out)
        return null_argument(!cert ? "cert" : "out");
    switch (cert->cert.verdict.kind) {
    case VerdictKind::InfiniteAllReps:
        *out = RC_INFINITE_ALL_REPS;
        break;
    case VerdictKind::InfiniteWhenQMinusOne:
        *out = RC_INFINITE_WHEN_Q_MINUS_ONE;
        break;
    case VerdictKind::NoCriterion:
        *out = RC_NO_CRITERION;
        break;
    }
    return RC_OK;
}

rc_status rc_certificate_construction(const rc_certificate* cert, char** out)
{
    if (!cert || !out)
        return null_argument(!cert ? "cert" : "out");
    return guard([&] { *out = dup(cert->cert.construction); });
}

rc_status rc_certificate_to_json(const rc_certificate* cert, char** out)
{
    if (!cert || !out)
        return null_argument(!cert ? "cert" : "out");
    return guard([&] { *out = dup(certificate_to_string(cert->cert)); });
}

rc_status rc_certificate_from_json(const char* text, rc_certificate** out)
{
    if (!text || !out)
        return null_argument(!text ? "text" : "out");
    return guard([&] { *out = new rc_certificate{certificate_from_string(text)}; });
}

rc_status rc_certificate_verify(const rc_certificate* cert, int* ok, char** message)
{
    if (!cert || !ok)
        return null_argument(!cert ? "cert" : "ok");
    return guard([&] {
        const auto d = check_certificate(cert->cert);
        *ok = d.ok ? 1 : 0;
        if (message)
            *message = dup(d.message);
    });
}

size_t rc_example_count(void)
{
    return replay_tags().size();
}

const char* rc_example_tag(size_t i)
{
    const auto& tags = replay_tags();
    return i < tags.size() ? tags[i].c_str() : nullptr;
}

rc_status rc_run_example(const char* tag, const rc_config* cfg, int* ok, char** report)
{
    if (!tag || !ok)
        return null_argument(!tag ? "tag" : "ok");
    bool defect = false;
    const rc_status s = guard([&] {
        ReplayOptions opts;
        if (cfg) {
            opts.word_depth = static_cast<int>(cfg->word_depth);
            opts.twist_length = static_cast<int>(cfg->twist_length);
        }
        const auto r = replay_example(tag, opts);
        *ok = r.ok ? 1 : 0;
        defect = r.defect;
        if (!r.ok)
            last_error = r.message;
        if (report)
            *report = dup(replay_json(r).dump());
    });
    return s == RC_OK && defect ? RC_DEFECT : s;
}

} // extern "C"
