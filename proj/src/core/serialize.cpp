#include "rackcert/serialize.hpp"

namespace rackcert {

namespace {

template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

template <GroupElement G>
json elements(const std::vector<G>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(to_json(x));
    return a;
}

template <GroupElement G, std::size_t N>
json elements(const std::array<G, N>& xs)
{
    return elements(std::vector<G>(xs.begin(), xs.end()));
}

template <GroupElement G>
json optional_element(const std::optional<G>& x)
{
    return x ? to_json(*x) : json(nullptr);
}

template <GroupElement G>
json family_json(const DpFamily<G>& f)
{
    return {{"kind", "dp"}, {"p", f.p}, {"members", elements(f.members)}};
}

template <GroupElement G>
json family_json(const Dp2Family<G>& f)
{
    return {{"kind", "dp2"}, {"p", f.p()}, {"mu", elements(f.mu.members)}, {"nu", elements(f.nu.members)},
            {"g_inf", optional_element(f.g_inf)}};
}

json family_json(const Octa2Family<Permutation>& f)
{
    return {{"kind", "octa2"}, {"sigma", elements(f.sigma.members)}, {"tau", elements(f.tau.members)},
            {"g", optional_element(f.g)}};
}

template <GroupElement G>
G element_as(const json& j);

template <>
Permutation element_as<Permutation>(const json& j)
{
    return permutation_from_json(j);
}

template <>
PrimeFieldMatrix element_as<PrimeFieldMatrix>(const json& j)
{
    return matrix_from_json(j);
}

template <GroupElement G>
std::vector<G> elements_as(const json& a)
{
    if (!a.is_array())
        throw InputError("expected an array of group elements");
    std::vector<G> out;
    for (const auto& x : a)
        out.push_back(element_as<G>(x));
    return out;
}

template <GroupElement G>
std::optional<G> optional_as(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    return element_as<G>(j);
}

template <GroupElement G>
Witness witness_as(const json& j, const std::string& kind)
{
    if (kind == "dp")
        return DpFamily<G>{j.at("p").get<int>(), elements_as<G>(j.at("members"))};
    const int p = j.at("p").get<int>();
    return Dp2Family<G>{{p, elements_as<G>(j.at("mu"))}, {p, elements_as<G>(j.at("nu"))},
                        optional_as<G>(j.at("g_inf"))};
}

template <class T>
json optional_value(const std::optional<T>& x)
{
    return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace

json to_json(const Permutation& x)
{
    return {{"degree", x.degree()}, {"cycles", x.to_string()}};
}

json to_json(const PrimeFieldMatrix& x)
{
    return {{"p", x.modulus()}, {"n", x.dim()}, {"rows", x.rows()}};
}

json to_json(const Element& x)
{
    return std::visit([](const auto& e) { return to_json(e); }, x);
}

json to_json(const RackTable& t)
{
    return {{"labels", t.labels()}, {"table", t.table()}};
}

json to_json(const Cocycle& q)
{
    return {{"rack", to_json(q.rack())}, {"L", q.order()}, {"exponents", q.exponents()}};
}

json to_json(const Diagnosis& d)
{
    return {{"ok", d.ok}, {"message", d.message}, {"checked", d.checked}};
}

json to_json(const Witness& w)
{
    return std::visit([](const auto& f) { return family_json(f); }, w);
}

json to_json(const ClassRef& c)
{
    return {{"group", c.group},
            {"label", c.label},
            {"representative", to_json(c.representative)},
            {"element_order", c.element_order},
            {"is_real", c.is_real},
            {"size", optional_value(c.size)}};
}

json to_json(const Certificate& c)
{
    json w = json::array();
    for (const auto& x : c.witnesses)
        w.push_back(to_json(x));
    return {{"schema", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"class", to_json(c.cls)},
            {"verdict", to_string(c.verdict.kind)},
            {"basis", c.verdict.basis},
            {"construction", c.construction},
            {"witnesses", std::move(w)},
            {"k", optional_value(c.k)},
            {"transporter", c.transporter ? to_json(*c.transporter) : json(nullptr)},
            {"d", optional_value(c.d)},
            {"e", optional_value(c.e)},
            {"minus_one_twists", c.minus_one_twists},
            {"search_tried", c.search_tried},
            {"note", c.note}};
}

json to_json(const ConditionalReport& r)
{
    json hs = json::array();
    for (const auto& h : r.hypotheses) {
        json v = nullptr;
        if (h.value)
            v = {{"order", h.value->order()}, {"exponent", h.value->exponent()}, {"text", h.value->to_string()}};
        hs.push_back({{"name", h.name}, {"statement", h.statement}, {"value", v}, {"holds", optional_value(h.holds)}});
    }
    return {{"family_kind", r.family_kind}, {"hypotheses", std::move(hs)}, {"verdict", to_string(r.verdict)}};
}

Permutation permutation_from_json(const json& j)
{
    return guarded("permutation", [&] {
        return Permutation::parse(j.at("degree").get<std::size_t>(), j.at("cycles").get<std::string>());
    });
}

PrimeFieldMatrix matrix_from_json(const json& j)
{
    return guarded("matrix", [&] {
        const auto n = j.at("n").get<std::size_t>();
        const auto rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
        if (rows.size() != n)
            throw InputError("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
        return PrimeFieldMatrix::from_rows(j.at("p").get<std::uint32_t>(), rows);
    });
}

Element element_from_json(const json& j)
{
    if (j.is_object() && j.contains("cycles"))
        return permutation_from_json(j);
    if (j.is_object() && j.contains("rows"))
        return matrix_from_json(j);
    throw InputError("group element must be a permutation or a matrix");
}

RackTable rack_from_json(const json& j)
{
    return guarded("rack", [&] {
        return RackTable(j.at("labels").get<std::vector<std::string>>(),
                         j.at("table").get<std::vector<std::vector<int>>>());
    });
}

Cocycle cocycle_from_json(const json& j)
{
    return guarded("cocycle", [&] {
        return Cocycle(rack_from_json(j.at("rack")), j.at("L").get<std::int64_t>(),
                       j.at("exponents").get<std::vector<std::vector<std::int64_t>>>());
    });
}

Witness witness_from_json(const json& j)
{
    return guarded("witness", [&]() -> Witness {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "octa2") {
            const auto s = elements_as<Permutation>(j.at("sigma"));
            const auto t = elements_as<Permutation>(j.at("tau"));
            if (s.size() != 6 || t.size() != 6)
                throw InputError("octa2 witness needs six σ and six τ");
            Octa2Family<Permutation> f;
            std::copy(s.begin(), s.end(), f.sigma.members.begin());
            std::copy(t.begin(), t.end(), f.tau.members.begin());
            f.g = optional_as<Permutation>(j.at("g"));
            return f;
        }
        if (kind != "dp" && kind != "dp2")
            throw InputError("unknown witness kind '" + kind + "'");
        const json& first = kind == "dp" ? j.at("members") : j.at("mu");
        if (!first.is_array() || first.empty())
            throw InputError("witness has no members");
        if (std::holds_alternative<Permutation>(element_from_json(first.at(0))))
            return witness_as<Permutation>(j, kind);
        return witness_as<PrimeFieldMatrix>(j, kind);
    });
}

ClassRef class_from_json(const json& j)
{
    return guarded("class", [&] {
        return ClassRef{j.at("group").get<std::string>(),           j.at("label").get<std::string>(),
                        element_from_json(j.at("representative")), j.at("element_order").get<std::int64_t>(),
                        j.at("is_real").get<bool>(),                optional_from<std::uint64_t>(j, "size")};
    });
}

Certificate certificate_from_json(const json& j)
{
    return guarded("certificate", [&] {
        if (j.at("schema").get<std::string>() != kSchemaVersion)
            throw InputError("unsupported certificate schema " + j.at("schema").dump());
        Certificate c;
        c.cls = class_from_json(j.at("class"));
        c.verdict = {parse_verdict(j.at("verdict").get<std::string>()), j.at("basis").get<std::vector<std::string>>()};
        c.construction = j.at("construction").get<std::string>();
        for (const auto& w : j.at("witnesses"))
            c.witnesses.push_back(witness_from_json(w));
        c.k = optional_from<std::int64_t>(j, "k");
        if (j.contains("transporter") && !j.at("transporter").is_null())
            c.transporter = element_from_json(j.at("transporter"));
        c.d = optional_from<int>(j, "d");
        c.e = optional_from<int>(j, "e");
        c.minus_one_twists = j.value("minus_one_twists", std::vector<std::uint32_t>{});
        c.search_tried = j.value("search_tried", std::size_t{0});
        c.note = j.value("note", std::string{});
        return c;
    });
}

std::string certificate_to_string(const Certificate& c)
{
    return to_json(c).dump();
}

Certificate certificate_from_string(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

} // namespace rackcert
