#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rackcert/rackcert.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDefect = 2;
constexpr int kExitInput = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(rc_status s, const std::string& context)
{
    const int code = s == RC_DEFECT ? kExitDefect : s == RC_INPUT_ERROR || s == RC_NULL_ARGUMENT ? kExitInput : 1;
    throw CliError{code, context + ": " + rc_last_error()};
}

void call(rc_status s, const std::string& context)
{
    if (s != RC_OK)
        fail(s, context);
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    rc_string_free(s);
    return out;
}

using ConfigPtr = std::unique_ptr<rc_config, decltype(&rc_config_free)>;
using CertPtr = std::unique_ptr<rc_certificate, decltype(&rc_certificate_free)>;
using RackPtr = std::unique_ptr<rc_rack, decltype(&rc_rack_free)>;

struct Settings {
    std::string config_path;
    std::optional<std::int64_t> search_budget;
    std::optional<std::int64_t> word_depth;
    std::string cache_path;
    bool json = false;
    bool timing = false;
    bool no_cache = false;
};

struct Run {
    ConfigPtr cfg{nullptr, rc_config_free};
    bool json = false;
    bool timing = false;
    std::string cache_path;
};

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

Run make_run(const Settings& st)
{
    Run run;
    rc_config* raw = nullptr;
    call(rc_config_new(&raw), "config");
    run.cfg.reset(raw);
    std::string format;
    if (!st.config_path.empty()) {
        std::ifstream in(st.config_path);
        if (!in)
            throw CliError{kExitInput, "cannot open config file '" + st.config_path + "'"};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = trim(line.substr(0, line.find('#')));
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw CliError{kExitInput, st.config_path + ":" + std::to_string(lineno) + ": expected key=value"};
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "cache_path")
                run.cache_path = value;
            else if (key == "output_format")
                format = value;
            else
                call(rc_config_set(run.cfg.get(), key.c_str(), value.c_str()),
                     st.config_path + ":" + std::to_string(lineno));
        }
    }
    if (!format.empty() && format != "text" && format != "json")
        throw CliError{kExitInput, "output_format must be text or json, got '" + format + "'"};
    run.json = st.json || format == "json";
    if (st.search_budget)
        call(rc_config_set(run.cfg.get(), "search_budget", std::to_string(*st.search_budget).c_str()), "--search-budget");
    if (st.word_depth)
        call(rc_config_set(run.cfg.get(), "word_depth", std::to_string(*st.word_depth).c_str()), "--word-depth");
    if (const char* env = std::getenv("RACKCERT_CACHE"); env && *env)
        run.cache_path = env;
    if (!st.cache_path.empty())
        run.cache_path = st.cache_path;
    if (st.no_cache)
        run.cache_path.clear();
    run.timing = st.timing;
    return run;
}

json config_json(const Run& run)
{
    json j;
    for (const char* key : {"search_budget", "word_depth", "twist_length"}) {
        std::int64_t v = 0;
        call(rc_config_get(run.cfg.get(), key, &v), "config");
        j[key] = v;
    }
    return j;
}

json report(const Run& run, const std::string& command, json inputs)
{
    inputs["config"] = config_json(run);
    return {{"schema", rc_schema_version()}, {"tool_version", rc_version()}, {"command", command},
            {"inputs", std::move(inputs)},   {"defects", json::array()}};
}

class Timer {
public:
    void phase(const std::string& name)
    {
        const auto now = std::chrono::steady_clock::now();
        if (!current_.empty())
            ms_[current_] += std::chrono::duration<double, std::milli>(now - start_).count();
        current_ = name;
        start_ = now;
    }
    json finish()
    {
        phase("");
        json j;
        for (const auto& [k, v] : ms_)
            j[k + "_ms"] = v;
        return j;
    }

private:
    std::string current_;
    std::chrono::steady_clock::time_point start_;
    std::map<std::string, double> ms_;
};

int finish(const Run& run, json rep, Timer& timer, std::uint64_t defects_before)
{
    const auto defects = rc_defect_count() - defects_before;
    if (defects)
        rep["defects"].push_back("internal identities failed " + std::to_string(defects) + " time(s)");
    if (run.timing)
        rep["timing"] = timer.finish();
    if (run.json)
        std::cout << rep.dump(2) << "\n";
    else if (run.timing)
        for (const auto& [k, v] : rep["timing"].items())
            std::cout << "time " << k << " " << v.get<double>() << "\n";
    return rep["defects"].empty() ? kExitOk : kExitDefect;
}

// ---- certificates -------------------------------------------------------

struct Classified {
    json certificate;
    bool verified = false;
    std::string verify_message;
    bool from_cache = false;
};

CertPtr parse_certificate(const std::string& text)
{
    rc_certificate* raw = nullptr;
    call(rc_certificate_from_json(text.c_str(), &raw), "certificate");
    return {raw, rc_certificate_free};
}

std::pair<bool, std::string> verify(const rc_certificate* c)
{
    int ok = 0;
    char* msg = nullptr;
    call(rc_certificate_verify(c, &ok, &msg), "verify");
    return {ok == 1, take(msg)};
}

Classified classify(const Run& run, const std::string& group, const std::string& cls)
{
    rc_certificate* raw = nullptr;
    call(rc_classify(group.c_str(), cls.c_str(), run.cfg.get(), &raw), group + " " + cls);
    CertPtr cert(raw, rc_certificate_free);
    char* text = nullptr;
    call(rc_certificate_to_json(cert.get(), &text), "serialize");
    Classified out;
    const std::string s = take(text);
    out.certificate = json::parse(s);
    // checked on the serialized form, as a consumer would see it
    auto [ok, msg] = verify(parse_certificate(s).get());
    out.verified = ok;
    out.verify_message = msg;
    return out;
}

void print_certificate(const Classified& c)
{
    const auto& j = c.certificate;
    std::cout << j["class"]["group"].get<std::string>() << "  " << j["class"]["label"].get<std::string>() << "\n";
    std::cout << "  verdict       " << j["verdict"].get<std::string>() << "\n";
    std::string basis;
    for (const auto& b : j["basis"])
        basis += (basis.empty() ? "" : ", ") + b.get<std::string>();
    std::cout << "  basis         " << (basis.empty() ? "-" : basis) << "\n";
    std::cout << "  construction  " << j["construction"].get<std::string>() << "\n";
    if (!j["k"].is_null())
        std::cout << "  k             " << j["k"] << "\n";
    if (!j["d"].is_null())
        std::cout << "  d, e          " << j["d"] << ", " << j["e"] << "\n";
    if (!j["minus_one_twists"].empty())
        std::cout << "  det twists    " << j["minus_one_twists"].dump() << "\n";
    std::cout << "  witnesses     " << j["witnesses"].size() << "\n";
    if (!j["note"].get<std::string>().empty())
        std::cout << "  note          " << j["note"].get<std::string>() << "\n";
    std::cout << "  verified      " << (c.verified ? "yes" : "NO: " + c.verify_message) << "\n";
}

// ---- cache --------------------------------------------------------------

class Cache {
public:
    explicit Cache(std::string path) : path_(std::move(path))
    {
        if (path_.empty())
            return;
        std::ifstream in(path_);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (trim(line).empty())
                continue;
            try {
                const auto j = json::parse(line);
                const auto& k = j.at("key");
                if (k.at("version").get<std::string>() != rc_version())
                    continue;
                entries_[key(k.at("group").get<std::string>(), k.at("class").get<std::string>())] =
                    j.at("certificate").dump();
            } catch (const json::exception&) {
                std::cerr << "warning: cache " << path_ << ":" << lineno << " is corrupt, entry ignored\n";
            }
        }
    }

    bool enabled() const { return !path_.empty(); }

    std::optional<Classified> lookup(const std::string& group, const std::string& cls) const
    {
        const auto it = entries_.find(key(group, cls));
        if (it == entries_.end())
            return std::nullopt;
        rc_certificate* raw = nullptr;
        if (rc_certificate_from_json(it->second.c_str(), &raw) != RC_OK) {
            std::cerr << "warning: cached certificate for " << group << " " << cls << " is unreadable, recomputing\n";
            return std::nullopt;
        }
        CertPtr cert(raw, rc_certificate_free);
        auto [ok, msg] = verify(cert.get());
        if (!ok) {
            std::cerr << "warning: cached certificate for " << group << " " << cls << " fails verification ("
                      << msg << "), recomputing\n";
            return std::nullopt;
        }
        Classified c;
        c.certificate = json::parse(it->second);
        c.verified = true;
        c.from_cache = true;
        return c;
    }

    void store(const std::string& group, const std::string& cls, const json& cert)
    {
        const json line{{"key", {{"group", group}, {"class", cls}, {"version", rc_version()}}}, {"certificate", cert}};
        std::ofstream out(path_, std::ios::app);
        if (!out)
            throw CliError{kExitInput, "cannot write cache file '" + path_ + "'"};
        out << line.dump() << "\n";
        entries_[key(group, cls)] = cert.dump();
    }

private:
    static std::string key(const std::string& g, const std::string& c) { return g + "|" + c; }

    std::string path_;
    std::map<std::string, std::string> entries_;
};

// ---- commands -----------------------------------------------------------

int cmd_rack(const Run& run, const std::string& name, const std::vector<std::string>& checks)
{
    const auto before = rc_defect_count();
    Timer timer;
    timer.phase("build");
    rc_rack* raw = nullptr;
    call(rc_rack_named(name.c_str(), &raw), "rack " + name);
    RackPtr rack(raw, rc_rack_free);
    const std::size_t n = rc_rack_size(rack.get());

    json rep = report(run, "rack", {{"name", name}, {"checks", checks}});
    char* text = nullptr;
    call(rc_rack_to_json(rack.get(), &text), "rack");
    rep["rack"] = json::parse(take(text));

    timer.phase("axioms");
    int ok = 0;
    std::size_t checked = 0;
    char* msg = nullptr;
    call(rc_rack_check_axioms(rack.get(), &ok, &checked, &msg), "axioms");
    rep["axioms"] = {{"ok", ok == 1}, {"checked", checked}, {"message", take(msg)}};
    bool all_ok = ok == 1;
    for (const auto& c : checks) {
        if (c != "braid")
            throw CliError{kExitInput, "unknown check '" + c + "' (available: braid)"};
        timer.phase("braid");
        call(rc_rack_check_braid(rack.get(), &ok, &checked, &msg), "braid");
        rep["braid"] = {{"ok", ok == 1}, {"checked", checked}, {"message", take(msg)}, {"cocycle", "constant -1"}};
        all_ok = all_ok && ok == 1;
    }

    if (!run.json) {
        const auto& labels = rep["rack"]["labels"];
        const auto& table = rep["rack"]["table"];
        std::size_t w = 1;
        for (const auto& l : labels)
            w = std::max(w, l.get<std::string>().size());
        std::cout << name << " (" << n << " elements), row i, column j: i ▷ j\n";
        std::cout << std::string(w + 2, ' ');
        for (const auto& l : labels)
            std::cout << std::setw(static_cast<int>(w) + 1) << l.get<std::string>();
        std::cout << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            std::cout << std::setw(static_cast<int>(w)) << labels[i].get<std::string>() << " |";
            for (std::size_t j = 0; j < n; ++j)
                std::cout << std::setw(static_cast<int>(w) + 1) << labels[table[i][j].get<std::size_t>()].get<std::string>();
            std::cout << "\n";
        }
        const auto line = [](const char* what, const json& r) {
            std::cout << what << (r["ok"].get<bool>() ? "pass" : "FAIL") << " (" << r["checked"] << " checked)";
            if (!r["message"].get<std::string>().empty())
                std::cout << ": " << r["message"].get<std::string>();
            std::cout << "\n";
        };
        line("rack axioms: ", rep["axioms"]);
        if (rep.contains("braid"))
            line("braid equation, q ≡ -1: ", rep["braid"]);
    }
    const int code = finish(run, rep, timer, before);
    return code != kExitOk ? code : all_ok ? kExitOk : 1;
}

int cmd_classify(const Run& run, const std::string& group, const std::string& cls)
{
    const auto before = rc_defect_count();
    Timer timer;
    timer.phase("classify");
    const auto c = classify(run, group, cls);
    json rep = report(run, "classify", {{"group", group}, {"class", cls}});
    rep["certificates"] = json::array({c.certificate});
    if (!c.verified)
        rep["defects"].push_back("certificate fails verification: " + c.verify_message);
    if (!run.json)
        print_certificate(c);
    return finish(run, rep, timer, before);
}

std::pair<int, int> parse_degrees(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int m = std::stoi(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return {m, m};
        }
        const int a = std::stoi(s.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument(s);
        const std::string tail = s.substr(dots + 2);
        const int b = std::stoi(tail, &used);
        if (used != tail.size())
            throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::exception&) {
        throw CliError{kExitInput, "degrees must look like 6 or 4..8, got '" + s + "'"};
    }
}

int cmd_sweep(const Run& run, const std::string& degrees, unsigned threads)
{
    const auto before = rc_defect_count();
    const auto [lo, hi] = parse_degrees(degrees);
    if (lo < 2 || hi > 14 || lo > hi)
        throw CliError{kExitInput, "sweep degrees must satisfy 2 ≤ a ≤ b ≤ 14, got " + degrees};
    Timer timer;
    timer.phase("enumerate");
    struct Job {
        std::string group;
        std::string cls;
        std::optional<Classified> result;
        std::string error;
        rc_status status = RC_OK;
    };
    std::vector<Job> jobs;
    for (int m = lo; m <= hi; ++m) {
        char* text = nullptr;
        call(rc_partitions(static_cast<std::size_t>(m), &text), "partitions");
        for (const auto& t : json::parse(take(text)))
            jobs.push_back({"sym:" + std::to_string(m), t.get<std::string>(), std::nullopt, "", RC_OK});
    }

    timer.phase("cache");
    Cache cache(run.cache_path);
    std::size_t hits = 0;
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (cache.enabled())
            jobs[i].result = cache.lookup(jobs[i].group, jobs[i].cls);
        if (jobs[i].result)
            ++hits;
        else
            todo.push_back(i);
    }

    timer.phase("classify");
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < todo.size();) {
            Job& job = jobs[todo[t]];
            try {
                job.result = classify(run, job.group, job.cls);
            } catch (const CliError& e) {
                job.error = e.message;
                job.status = e.code == kExitDefect ? RC_DEFECT : RC_INPUT_ERROR;
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    timer.phase("merge");
    json rep = report(run, "sweep", {{"degrees", {lo, hi}}});
    rep["certificates"] = json::array();
    std::map<std::string, int> tally;
    for (auto& job : jobs) {
        if (!job.result) {
            if (job.status == RC_DEFECT)
                rep["defects"].push_back(job.group + " " + job.cls + ": " + job.error);
            else
                throw CliError{kExitInput, job.error};
            continue;
        }
        if (!job.result->verified)
            rep["defects"].push_back(job.group + " " + job.cls + ": " + job.result->verify_message);
        if (cache.enabled() && !job.result->from_cache)
            cache.store(job.group, job.cls, job.result->certificate);
        const auto& c = job.result->certificate;
        ++tally[c["verdict"].get<std::string>()];
        rep["certificates"].push_back(c);
        if (!run.json)
            std::cout << job.group << "  " << job.cls << "  " << c["verdict"].get<std::string>() << "  "
                      << c["construction"].get<std::string>() << (job.result->verified ? "" : "  UNVERIFIED") << "\n";
    }
    rep["summary"] = tally;
    if (cache.enabled())
        std::cerr << "cache: " << hits << " hit(s), " << todo.size() << " computed\n";
    if (!run.json) {
        std::cout << jobs.size() << " classes:";
        for (const auto& [k, v] : tally)
            std::cout << " " << k << "=" << v;
        std::cout << "\n";
    }
    return finish(run, rep, timer, before);
}

int cmd_examples(const Run& run, const std::string& selector, bool verbose)
{
    const auto before = rc_defect_count();
    Timer timer;
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < rc_example_count(); ++i)
        tags.emplace_back(rc_example_tag(i));
    if (selector != "all") {
        if (std::find(tags.begin(), tags.end(), selector) == tags.end()) {
            std::string known;
            for (const auto& t : tags)
                known += " " + t;
            throw CliError{kExitInput, "unknown example '" + selector + "'; available: all" + known};
        }
        tags = {selector};
    }
    json rep = report(run, "examples", {{"selector", selector}});
    rep["examples"] = json::array();
    for (const auto& tag : tags) {
        timer.phase(tag);
        int ok = 0;
        char* text = nullptr;
        const rc_status s = rc_run_example(tag.c_str(), run.cfg.get(), &ok, &text);
        if (s != RC_OK && s != RC_DEFECT)
            fail(s, "example " + tag);
        const json r = json::parse(take(text));
        if (s == RC_DEFECT || !ok)
            rep["defects"].push_back(tag + ": " + r["message"].get<std::string>());
        rep["examples"].push_back(r);
        if (!run.json) {
            std::cout << (ok ? "PASS " : "FAIL ") << tag << "  " << r["summary"].get<std::string>() << " ("
                      << r["steps"].size() << " checks)\n";
            if (verbose || !ok)
                for (const auto& st : r["steps"]) {
                    std::cout << "    " << (st["ok"].get<bool>() ? "ok   " : "FAIL ") << st["name"].get<std::string>();
                    if (!st["detail"].get<std::string>().empty())
                        std::cout << "  [" << st["detail"].get<std::string>() << "]";
                    std::cout << "\n";
                }
        }
    }
    return finish(run, rep, timer, before);
}

int cmd_verify(const Run& run, const std::vector<std::string>& files)
{
    const auto before = rc_defect_count();
    Timer timer;
    timer.phase("verify");
    json rep = report(run, "verify", {{"files", files}});
    rep["results"] = json::array();
    bool all_ok = true;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in)
            throw CliError{kExitInput, "cannot open '" + path + "'"};
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw CliError{kExitInput, path + ": not valid JSON: " + e.what()};
        }
        // a bare certificate, or a report carrying several
        std::vector<json> certs;
        if (doc.contains("certificates"))
            certs.assign(doc["certificates"].begin(), doc["certificates"].end());
        else if (doc.contains("examples"))
            for (const auto& ex : doc["examples"])
                certs.insert(certs.end(), ex["certificates"].begin(), ex["certificates"].end());
        else
            certs.push_back(doc);
        for (const auto& c : certs) {
            auto [ok, msg] = verify(parse_certificate(c.dump()).get());
            all_ok = all_ok && ok;
            const std::string what = c.at("class").at("group").get<std::string>() + " " +
                                     c.at("class").at("label").get<std::string>();
            rep["results"].push_back({{"file", path}, {"class", what}, {"ok", ok}, {"message", msg}});
            if (!run.json)
                std::cout << (ok ? "valid    " : "INVALID  ") << path << "  " << what << (ok ? "" : "  " + msg)
                          << "\n";
        }
    }
    const int code = finish(run, rep, timer, before);
    return code != kExitOk ? code : all_ok ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rackcert: certificates for infinite-dimensional Nichols algebras over conjugacy classes"};
    app.set_version_flag("--version", std::string(rc_version()));
    app.require_subcommand(1);
    app.fallthrough();

    Settings st;
    app.add_option("--config", st.config_path, "flat key=value configuration file")->check(CLI::ExistingFile);
    app.add_flag("--json", st.json, "print a JSON report instead of text");
    app.add_flag("--timing", st.timing, "add per-phase timings to the report");
    app.add_option("--search-budget", st.search_budget, "candidates for the generic D_3 search");
    app.add_option("--word-depth", st.word_depth, "word depth when evaluating characters");
    app.add_option("--cache", st.cache_path, "JSON-lines result cache (overrides RACKCERT_CACHE)");
    app.add_flag("--no-cache", st.no_cache, "ignore any configured cache");

    std::string rack_name;
    std::vector<std::string> checks;
    auto* rack = app.add_subcommand("rack", "print a rack, check the axioms and optionally the braid equation");
    rack->add_option("name", rack_name, "octahedral, Xn:<odd n>, Dn:<n>, trivial:<n>, square:<name>, file:<path>")
        ->required();
    rack->add_option("--check", checks, "extra checks: braid");

    std::string group;
    std::string cls;
    auto* classify_cmd = app.add_subcommand("classify", "classify one conjugacy class");
    classify_cmd->add_option("--group", group, "sym:<m> or gl:<n>:<p>")->required();
    classify_cmd->add_option("--class", cls, "cycle type (1,2,3 or 2^3,1) or diag:λ,… / antidiag:c")->required();

    std::string degrees;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* sweep = app.add_subcommand("sweep", "classify every cycle type of S_a … S_b");
    sweep->add_option("--degrees", degrees, "a..b with 2 ≤ a ≤ b ≤ 14")->required();
    sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    std::string selector = "all";
    bool verbose = false;
    auto* examples = app.add_subcommand("examples", "replay the worked examples");
    examples->add_option("tag", selector, "all or one example tag");
    examples->add_flag("-v,--verbose", verbose, "list every check");

    std::vector<std::string> files;
    auto* verify_cmd = app.add_subcommand("verify", "re-verify certificates from JSON files");
    verify_cmd->add_option("files", files, "certificate or report files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        const Run run = make_run(st);
        if (*rack)
            return cmd_rack(run, rack_name, checks);
        if (*classify_cmd)
            return cmd_classify(run, group, cls);
        if (*sweep)
            return cmd_sweep(run, degrees, threads);
        if (*examples)
            return cmd_examples(run, selector, verbose);
        return cmd_verify(run, files);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
