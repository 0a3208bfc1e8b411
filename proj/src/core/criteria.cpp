#include "rackcert/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "rackcert/symfam.hpp"

namespace rackcert {

namespace {

using u128 = unsigned __int128;

struct GroupSpec {
    bool sym = true;
    std::size_t n = 0;
    std::uint32_t p = 0;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

std::uint64_t parse_unsigned(const std::string& s, const std::string& what)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw InputError("bad " + what + ": '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw InputError("bad " + what + ": '" + s + "'");
    }
}

std::int64_t parse_signed(const std::string& s, const std::string& what)
{
    const bool neg = !s.empty() && s[0] == '-';
    const auto mag = parse_unsigned(neg ? s.substr(1) : s, what);
    if (mag > static_cast<std::uint64_t>(INT64_MAX))
        throw InputError(what + " out of range: '" + s + "'");
    return neg ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

GroupSpec parse_group(const std::string& g)
{
    const auto parts = split(g, ':');
    if (parts.size() == 2 && parts[0] == "sym")
        return {true, static_cast<std::size_t>(parse_unsigned(parts[1], "degree")), 0};
    if (parts.size() == 3 && parts[0] == "gl") {
        const auto p = parse_unsigned(parts[2], "modulus");
        if (p > UINT32_MAX)
            throw InputError("modulus too large: " + parts[2]);
        return {false, static_cast<std::size_t>(parse_unsigned(parts[1], "dimension")), static_cast<std::uint32_t>(p)};
    }
    throw InputError("group must be sym:<m> or gl:<n>:<p>, got '" + g + "'");
}

std::uint32_t reduce(std::int64_t x, std::uint32_t p)
{
    const std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

struct GlLabel {
    bool antidiag = false;
    std::uint32_t c = 0;
    std::vector<std::uint32_t> lambda;
};

GlLabel parse_gl_label(std::size_t n, std::uint32_t p, const std::string& label)
{
    GlLabel out;
    const auto colon = label.find(':');
    if (colon == std::string::npos)
        throw InputError("class label must be diag:<λ,…> or antidiag:<c>, got '" + label + "'");
    const std::string kind = label.substr(0, colon);
    const std::string body = label.substr(colon + 1);
    if (kind == "antidiag") {
        if (n != 2)
            throw InputError("antidiag classes live in GL(2, p), not GL(" + std::to_string(n) + ", p)");
        out.antidiag = true;
        out.c = reduce(parse_signed(body, "antidiag constant"), p);
        if (out.c == 0)
            throw InputError("antidiag constant must be nonzero mod p");
        return out;
    }
    if (kind != "diag")
        throw InputError("unknown class label kind '" + kind + "'");
    for (const auto& v : split(body, ',')) {
        const auto x = reduce(parse_signed(v, "diagonal entry"), p);
        if (x == 0)
            throw InputError("diagonal entries must be nonzero mod p");
        out.lambda.push_back(x);
    }
    if (out.lambda.size() != n)
        throw InputError("diag label has " + std::to_string(out.lambda.size()) + " entries, need " + std::to_string(n));
    return out;
}

std::string gl_label_text(const GlLabel& l)
{
    if (l.antidiag)
        return "antidiag:" + std::to_string(l.c);
    std::string s = "diag:";
    for (std::size_t i = 0; i < l.lambda.size(); ++i)
        s += (i ? "," : "") + std::to_string(l.lambda[i]);
    return s;
}

std::uint64_t multiplicative_order(std::uint32_t x, std::uint32_t p)
{
    std::uint64_t n = p - 1;
    std::uint64_t rest = n;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q)
            continue;
        while (rest % q == 0)
            rest /= q;
        while (n % q == 0 && mod_pow(x, n / q, p) == 1)
            n /= q;
    }
    if (rest > 1)
        while (n % rest == 0 && mod_pow(x, n / rest, p) == 1)
            n /= rest;
    return n;
}

std::optional<u128> checked_mul(std::optional<u128> a, u128 b)
{
    u128 r;
    if (!a || __builtin_mul_overflow(*a, b, &r))
        return std::nullopt;
    return r;
}

std::optional<u128> gl_order(std::size_t n, std::uint32_t p)
{
    std::optional<u128> pn = 1;
    for (std::size_t i = 0; i < n; ++i)
        pn = checked_mul(pn, p);
    if (!pn)
        return std::nullopt;
    std::optional<u128> total = 1;
    u128 pi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total = checked_mul(total, *pn - pi);
        pi *= p;
    }
    return total;
}

std::optional<std::uint64_t> narrow(std::optional<u128> v)
{
    if (!v || *v > UINT64_MAX)
        return std::nullopt;
    return static_cast<std::uint64_t>(*v);
}

bool is_scalar(const PrimeFieldMatrix& x)
{
    for (std::size_t r = 0; r < x.dim(); ++r)
        for (std::size_t c = 0; c < x.dim(); ++c)
            if ((r == c && x.at(r, c) != x.at(0, 0)) || (r != c && x.at(r, c) != 0))
                return false;
    return true;
}

Verdict corollary_verdict(const ClassRef& c, const char* criterion)
{
    if (c.is_real)
        return {VerdictKind::InfiniteAllReps, {criterion, tag::odd_order}};
    return {VerdictKind::InfiniteWhenQMinusOne, {criterion}};
}

template <GroupElement G>
void require_members_in_class(const ClassRef& c, const std::vector<G>& xs, const std::string& name)
{
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!in_class(c, Element{xs[i]}))
            throw InputError(name + "_" + std::to_string(i) + " is not in the class " + c.label);
}

template <GroupElement G>
Certificate dp_corollary(const ClassRef& c, const DpFamily<G>& fam, std::int64_t k, const std::string& construction)
{
    if (!is_odd_prime(fam.p))
        throw InputError("p must be an odd prime, got " + std::to_string(fam.p));
    const auto checked = verify_dp(fam.members, fam.p);
    if (!checked)
        throw InputError("family is not of type D_p: " + checked.diagnosis.message);
    require_members_in_class(c, fam.members, "μ");
    const G mu0k = group_power(fam[0], k);
    if (mu0k == fam[0])
        throw InputError("μ_0^k = μ_0 for k = " + std::to_string(k));
    if (!in_class(c, Element{mu0k}))
        throw InputError("μ_0^k is not in the class for k = " + std::to_string(k));
    const auto companion = power_companion(fam, k);
    if (!companion)
        throw InputError("power companion for k = " + std::to_string(k) + " fails: " + companion.diagnosis.message);

    Certificate cert;
    cert.cls = c;
    cert.verdict = corollary_verdict(c, tag::dp_power);
    cert.construction = construction;
    cert.witnesses = {fam, *companion.value};
    cert.k = k;
    cert.transporter = Element{*companion.value->g_inf};
    return cert;
}

Certificate degenerate(const ClassRef& c, const char* construction, std::string note)
{
    Certificate cert;
    cert.cls = c;
    cert.verdict = lemma_odd_verdict(c.element_order, c.is_real);
    cert.construction = construction;
    cert.note = std::move(note);
    return cert;
}

Certificate with_note(Certificate cert, std::string note)
{
    cert.note = std::move(note);
    return cert;
}

} // namespace

std::string to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::InfiniteAllReps:
        return "InfiniteAllReps";
    case VerdictKind::InfiniteWhenQMinusOne:
        return "InfiniteWhenQMinusOne";
    case VerdictKind::NoCriterion:
        return "NoCriterion";
    }
    return "NoCriterion";
}

VerdictKind parse_verdict(const std::string& name)
{
    for (auto k : {VerdictKind::InfiniteAllReps, VerdictKind::InfiniteWhenQMinusOne, VerdictKind::NoCriterion})
        if (to_string(k) == name)
            return k;
    throw InputError("unknown verdict '" + name + "'");
}

Verdict lemma_odd_verdict(std::int64_t element_order, bool is_real)
{
    if (element_order == 1)
        return {VerdictKind::NoCriterion, {tag::identity}};
    if (is_real && element_order % 2 == 1)
        return {VerdictKind::InfiniteAllReps, {tag::odd_order}};
    return {VerdictKind::NoCriterion, {}};
}

Verdict lemma_odd_verdict(const ClassData& c)
{
    return lemma_odd_verdict(c.element_order, c.is_real);
}

ClassRef sym_class_ref(std::size_t m, const CycleType& t)
{
    const ClassData d = class_data(m, t);
    return {"sym:" + std::to_string(m), t.to_string(), d.representative, d.element_order, d.is_real, d.size};
}

ClassRef gl_class_ref(std::size_t n, std::uint32_t p, const std::string& label)
{
    if (n == 0)
        throw InputError("dimension must be positive");
    if (!is_prime(p) || p >= (1u << 31))
        throw InputError("modulus must be a prime below 2^31, got " + std::to_string(p));
    const GlLabel l = parse_gl_label(n, p, label);
    ClassRef c;
    c.group = "gl:" + std::to_string(n) + ":" + std::to_string(p);
    c.label = gl_label_text(l);
    const auto total = gl_order(n, p);
    if (l.antidiag) {
        c.representative = PrimeFieldMatrix::from_rows(p, {{0, 1}, {l.c, 0}});
        c.element_order = 2 * static_cast<std::int64_t>(multiplicative_order(l.c, p));
        c.is_real = static_cast<std::uint64_t>(l.c) * l.c % p == 1;
        const bool square = p == 2 || mod_pow(l.c, (p - 1) / 2, p) == 1;
        const u128 cent = p == 2 ? u128{2} : square ? u128(p - 1) * (p - 1) : u128(p) * p - 1;
        c.size = narrow(total ? std::optional<u128>(*total / cent) : std::nullopt);
        return c;
    }
    std::vector<std::int64_t> diag(l.lambda.begin(), l.lambda.end());
    c.representative = PrimeFieldMatrix::diagonal(p, diag);
    std::int64_t order = 1;
    for (auto x : l.lambda)
        order = std::lcm(order, static_cast<std::int64_t>(multiplicative_order(x, p)));
    c.element_order = order;
    auto sorted = l.lambda;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint32_t> inverses;
    for (auto x : l.lambda)
        inverses.push_back(mod_inverse(x, p));
    std::sort(inverses.begin(), inverses.end());
    c.is_real = sorted == inverses;
    std::optional<u128> cent = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const auto block = gl_order(j - i, p);
        cent = block ? checked_mul(cent, *block) : std::nullopt;
        i = j;
    }
    c.size = (total && cent) ? narrow(*total / *cent) : std::nullopt;
    return c;
}

bool in_class(const ClassRef& c, const Element& x)
{
    const GroupSpec g = parse_group(c.group);
    if (g.sym) {
        const auto* perm = std::get_if<Permutation>(&x);
        return perm && perm->degree() == g.n && perm->cycle_type() == CycleType::parse(c.label);
    }
    const auto* a = std::get_if<PrimeFieldMatrix>(&x);
    if (!a || a->modulus() != g.p || a->dim() != g.n)
        return false;
    const GlLabel l = parse_gl_label(g.n, g.p, c.label);
    if (l.antidiag)
        return *a * *a == PrimeFieldMatrix::diagonal(g.p, {l.c, l.c}) && !is_scalar(*a);
    return is_diagonalizable_with(*a, l.lambda);
}

Certificate corollary_dp(const ClassRef& c, const DpFamily<Permutation>& fam, std::int64_t k,
                         const std::string& construction)
{
    return dp_corollary(c, fam, k, construction);
}

Certificate corollary_dp(const ClassRef& c, const DpFamily<PrimeFieldMatrix>& fam, std::int64_t k,
                         const std::string& construction)
{
    return dp_corollary(c, fam, k, construction);
}

Certificate corollary_octa2(const ClassRef& c, const Octa2Family<Permutation>& fam, int d, int e,
                            const std::string& construction)
{
    if (!fam.g)
        throw InputError("𝔒^(2) family needs its transporter g");
    const std::vector<Permutation> s(fam.sigma.members.begin(), fam.sigma.members.end());
    const std::vector<Permutation> t(fam.tau.members.begin(), fam.tau.members.end());
    const auto checked = verify_octa2(s, t, fam.g);
    if (!checked)
        throw InputError("family is not of type 𝔒^(2): " + checked.diagnosis.message);
    require_members_in_class(c, s, "σ");
    require_members_in_class(c, t, "τ");
    if (fam.sigma(6) != power(fam.sigma(1), d))
        throw InputError("σ_6 ≠ σ_1^" + std::to_string(d));
    if (fam.tau(1) != power(fam.sigma(1), e))
        throw InputError("τ_1 ≠ σ_1^" + std::to_string(e));

    Certificate cert;
    cert.cls = c;
    cert.verdict = corollary_verdict(c, tag::octa2_power);
    cert.construction = construction;
    cert.witnesses = {fam};
    cert.d = d;
    cert.e = e;
    return cert;
}

Certificate classify_sym_class(std::size_t m, const CycleType& t, const ClassifyOptions& opts)
{
    const ClassRef c = sym_class_ref(m, t);
    const auto& s = std::get<Permutation>(c.representative);
    const std::int64_t order = c.element_order;
    if (order == 1)
        return degenerate(c, tag::identity, "identity class: q_ss = 1 is forced, no criterion applies");
    if (order % 2 == 1)
        return degenerate(c, tag::odd_order, "real class of odd order " + std::to_string(order));

    const std::int64_t k = order - 1;
    const int mi = static_cast<int>(m);
    const auto has_long = [&] {
        for (int j = 3; j <= mi; ++j)
            if (t.count(j) >= 1)
                return true;
        return false;
    }();

    for (int j = 6; j <= mi; ++j) {
        if (t.count(j) == 0)
            continue;
        for (int p = 3; 2 * p <= j; p += 2)
            if (is_odd_prime(p) && j % (2 * p) == 0) {
                const auto split = sym_dp2_split(s, j, p);
                return with_note(corollary_dp(c, split.mu, k, tag::dp_split),
                                 "D_" + std::to_string(p) + " family on the first " + std::to_string(j) + "-cycle");
            }
    }
    if (t.count(1) >= 1 && t.count(2) >= 1 && has_long)
        return corollary_dp(c, sym_d3_transposition_triple(s), k, tag::transposition_triple);
    for (int j = 4; j <= mi; j += 2)
        if (t.count(j) >= 3)
            return with_note(corollary_dp(c, sym_d3_three_even_cycles(s, j), k, tag::three_even_cycles),
                             "three " + std::to_string(j) + "-cycles");
    if (t.count(2) >= 3 && has_long)
        return corollary_dp(c, sym_d3_involution_plus(s), k, tag::involution_triple);
    if (t.count(2) >= 6) {
        const auto plain = sym_d3sq_six_transpositions(s, SextupleVariant::Plain);
        const auto bar = sym_d3sq_six_transpositions(s, SextupleVariant::Bar);
        Certificate cert;
        cert.cls = c;
        cert.verdict = {VerdictKind::InfiniteWhenQMinusOne, {tag::dp2_transporter}};
        cert.construction = tag::six_transpositions;
        cert.witnesses = {plain.family, bar.family};
        cert.note = "the plain or the bar sextuple applies depending on ρ; extending to every ρ needs "
                    "representation theory of the centralizer that is not implemented here";
        return cert;
    }
    const auto parts = t.parts();
    const bool eight_shape = std::all_of(parts.begin(), parts.end(), [](int x) { return x == 1 || x == 2 || x == 8; });
    if (eight_shape && (t.count(8) == 1 || t.count(8) == 2)) {
        const auto f = sym_o2_8cycle(s);
        return corollary_octa2(c, f.family, f.d, f.e, tag::eight_cycle);
    }
    if (order > 2) {
        const auto found = sym_d3_search(s, opts.search_budget);
        if (found.family) {
            auto cert = corollary_dp(c, *found.family, k, tag::generic_search);
            cert.search_tried = found.tried;
            return cert;
        }
        Certificate cert = degenerate(c, tag::generic_search, "");
        cert.search_tried = found.tried;
        cert.note = found.budget_exhausted
                        ? "no D_3 family found within the budget of " + std::to_string(opts.search_budget) + " candidates"
                        : "no D_3 family through the representative (" + std::to_string(found.tried) +
                              " candidates, class exhausted)";
        return cert;
    }
    return degenerate(c, tag::none, "involution class: no construction applies and μ_0^k = μ_0 for every odd k");
}

Certificate classify_gl_class(std::size_t n, std::uint32_t p, const std::string& label, const ClassifyOptions&)
{
    const ClassRef c = gl_class_ref(n, p, label);
    if (c.element_order == 1)
        return degenerate(c, tag::identity, "identity class: q_ss = 1 is forced, no criterion applies");
    if (c.is_real && c.element_order % 2 == 1)
        return degenerate(c, tag::odd_order, "real class of odd order " + std::to_string(c.element_order));
    const GlLabel l = parse_gl_label(n, p, c.label);
    const auto omega = primitive_cube_root(p);
    if (!omega)
        return degenerate(c, tag::none, "GF(" + std::to_string(p) + ") has no primitive cube root of unity");

    if (l.antidiag) {
        const auto fam = gl2_d3_family(p, *omega, l.c);
        for (std::int64_t k = 3; k < c.element_order; k += 2) {
            const auto mu0k = group_power(fam[0], k);
            if (mu0k != fam[0] && in_class(c, Element{mu0k}))
                return corollary_dp(c, fam, k, tag::gl2_antidiagonal);
        }
        return degenerate(c, tag::none, "no odd power of μ_0 other than μ_0 lies in the class");
    }

    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < n && !pair; ++a)
        for (std::size_t b = a + 1; b < n && !pair; ++b)
            if ((l.lambda[a] + l.lambda[b]) % p == 0)
                pair = {a, b};
    if (n < 4 || !pair)
        return degenerate(c, tag::none, "diag class needs N ≥ 4 and a pair λ_a = −λ_b");
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != pair->first && i != pair->second)
            rest.push_back(i);
    std::optional<std::pair<std::size_t, std::size_t>> distinct;
    for (std::size_t a = 0; a < rest.size() && !distinct; ++a)
        for (std::size_t b = a + 1; b < rest.size() && !distinct; ++b)
            if (l.lambda[rest[a]] != l.lambda[rest[b]])
                distinct = {a, b};
    if (!distinct)
        return degenerate(c, tag::none, "the entries outside λ_a = −λ_b are all equal");

    std::vector<std::int64_t> ordered{l.lambda[pair->first], l.lambda[pair->second], l.lambda[rest[distinct->first]],
                                      l.lambda[rest[distinct->second]]};
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (i != distinct->first && i != distinct->second)
            ordered.push_back(l.lambda[rest[i]]);
    const auto f = gln_d3sq_family(p, *omega, ordered);
    const auto report = gln_criterion_report(p, ordered);

    Certificate cert;
    cert.cls = c;
    cert.verdict = {VerdictKind::InfiniteWhenQMinusOne, {tag::det_character}};
    cert.construction = tag::gln_diagonal;
    cert.witnesses = {f.family};
    cert.minus_one_twists = report.minus_one_twists;
    cert.note = "holds for ρ = det^h with χ(λ) = −1, i.e. h in minus_one_twists";
    return cert;
}

namespace {

struct CheckState {
    const Certificate& cert;
    std::size_t checked = 0;

    void require(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok)
            throw InputError(what);
    }
};

template <GroupElement G>
void check_witness(CheckState& st, const DpFamily<G>& f)
{
    st.require(is_odd_prime(f.p), "witness p is not an odd prime");
    const auto v = verify_dp(f.members, f.p);
    st.require(v.value.has_value(), "witness is not of type D_p: " + v.diagnosis.message);
    require_members_in_class(st.cert.cls, f.members, "μ");
    st.checked += f.members.size();
}

template <GroupElement G>
void check_witness(CheckState& st, const Dp2Family<G>& f)
{
    st.require(is_odd_prime(f.p()), "witness p is not an odd prime");
    const auto v = verify_dp2(f.mu.members, f.nu.members, f.g_inf, f.p());
    st.require(v.value.has_value(), "witness is not of type D_p^(2): " + v.diagnosis.message);
    require_members_in_class(st.cert.cls, f.mu.members, "μ");
    require_members_in_class(st.cert.cls, f.nu.members, "ν");
    st.checked += 2 * f.mu.members.size();
}

void check_witness(CheckState& st, const Octa2Family<Permutation>& f)
{
    const std::vector<Permutation> s(f.sigma.members.begin(), f.sigma.members.end());
    const std::vector<Permutation> t(f.tau.members.begin(), f.tau.members.end());
    const auto v = verify_octa2(s, t, f.g);
    st.require(v.value.has_value(), "witness is not of type 𝔒^(2): " + v.diagnosis.message);
    require_members_in_class(st.cert.cls, s, "σ");
    require_members_in_class(st.cert.cls, t, "τ");
    st.checked += 12;
}

template <class T>
const T& witness_as(CheckState& st, std::size_t i)
{
    st.require(i < st.cert.witnesses.size(), "missing witness " + std::to_string(i));
    const T* w = std::get_if<T>(&st.cert.witnesses[i]);
    st.require(w != nullptr, "witness " + std::to_string(i) + " has the wrong kind");
    return *w;
}

template <GroupElement G>
void check_power_pair(CheckState& st)
{
    const auto& cert = st.cert;
    st.require(cert.witnesses.size() == 2, "D_p certificate needs a family and its power companion");
    const auto& fam = witness_as<DpFamily<G>>(st, 0);
    const auto& comp = witness_as<Dp2Family<G>>(st, 1);
    st.require(cert.k.has_value(), "missing exponent k");
    st.require(cert.transporter.has_value(), "missing transporter");
    const G* g = std::get_if<G>(&*cert.transporter);
    st.require(g != nullptr, "transporter has the wrong kind");
    const std::int64_t k = *cert.k;
    const G mu0k = group_power(fam[0], k);
    st.require(mu0k != fam[0], "μ_0^k = μ_0");
    st.require(in_class(cert.cls, Element{mu0k}), "μ_0^k is not in the class");
    st.require(conjugate(*g, fam[0]) == mu0k, "transporter does not carry μ_0 to μ_0^k");
    st.require(comp.mu == fam, "companion μ differs from the family");
    st.require(comp.g_inf == std::optional<G>(*g), "companion transporter differs from the recorded one");
    st.require(comp.nu.members.size() == fam.members.size(), "companion has the wrong size");
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        st.require(comp.nu.members[i] == group_power(fam.members[i], k), "ν_i ≠ μ_i^k");
}

Verdict expected_verdict(CheckState& st)
{
    const auto& cert = st.cert;
    const auto& c = cert.cls;
    const std::string& con = cert.construction;
    if (con == tag::identity || con == tag::odd_order || con == tag::none ||
        (con == tag::generic_search && cert.witnesses.empty())) {
        st.require(cert.witnesses.empty(), "no witnesses expected for construction " + con);
        const Verdict v = lemma_odd_verdict(c.element_order, c.is_real);
        if (con == tag::identity)
            st.require(c.element_order == 1, "identity construction on a nontrivial class");
        if (con == tag::odd_order)
            st.require(v.kind == VerdictKind::InfiniteAllReps, "odd-order lemma does not apply");
        return v;
    }
    for (const auto& w : cert.witnesses)
        std::visit([&](const auto& f) { check_witness(st, f); }, w);

    const bool sym = parse_group(c.group).sym;
    if (con == tag::dp_split || con == tag::transposition_triple || con == tag::three_even_cycles ||
        con == tag::involution_triple || con == tag::generic_search || con == tag::gl2_antidiagonal) {
        if (sym)
            check_power_pair<Permutation>(st);
        else
            check_power_pair<PrimeFieldMatrix>(st);
        return corollary_verdict(c, tag::dp_power);
    }
    if (con == tag::eight_cycle) {
        st.require(cert.witnesses.size() == 1, "𝔒^(2) certificate needs exactly one witness");
        const auto& f = witness_as<Octa2Family<Permutation>>(st, 0);
        st.require(cert.d && cert.e, "missing exponents d, e");
        st.require(f.sigma(6) == power(f.sigma(1), *cert.d), "σ_6 ≠ σ_1^d");
        st.require(f.tau(1) == power(f.sigma(1), *cert.e), "τ_1 ≠ σ_1^e");
        return corollary_verdict(c, tag::octa2_power);
    }
    if (con == tag::six_transpositions) {
        st.require(cert.witnesses.size() == 2, "sextuple certificate needs both sextuples");
        for (std::size_t i = 0; i < 2; ++i)
            st.require(witness_as<Dp2Family<Permutation>>(st, i).g_inf.has_value(), "sextuple without transporter");
        return {VerdictKind::InfiniteWhenQMinusOne, {tag::dp2_transporter}};
    }
    if (con == tag::gln_diagonal) {
        st.require(cert.witnesses.size() == 1, "GL(N) certificate needs exactly one witness");
        const auto& f = witness_as<Dp2Family<PrimeFieldMatrix>>(st, 0);
        st.require(f.g_inf.has_value(), "GL(N) sextuple without transporter");
        const GroupSpec g = parse_group(c.group);
        const GlLabel l = parse_gl_label(g.n, g.p, c.label);
        std::vector<std::int64_t> lambda(l.lambda.begin(), l.lambda.end());
        st.require(gln_criterion_report(g.p, lambda).minus_one_twists == cert.minus_one_twists,
                   "twist list does not match the determinant of the class");
        return {VerdictKind::InfiniteWhenQMinusOne, {tag::det_character}};
    }
    throw InputError("unknown construction '" + con + "'");
}

} // namespace

Diagnosis check_certificate(const Certificate& cert)
{
    CheckState st{cert};
    try {
        const GroupSpec g = parse_group(cert.cls.group);
        const ClassRef fresh = g.sym ? sym_class_ref(g.n, CycleType::parse(cert.cls.label))
                                     : gl_class_ref(g.n, g.p, cert.cls.label);
        st.require(fresh == cert.cls, "class data does not match the class label");
        const Verdict expected = expected_verdict(st);
        st.require(expected == cert.verdict, "verdict does not follow: expected " + to_string(expected.kind));
    } catch (const InputError& e) {
        return Diagnosis::fail(e.what(), st.checked);
    } catch (const DefectError& e) {
        return Diagnosis::fail(std::string("defect: ") + e.what(), st.checked);
    }
    return Diagnosis::pass(st.checked);
}

bool verify_certificate(const Certificate& cert)
{
    return check_certificate(cert).ok;
}

} // namespace rackcert
