#include "rackcert/replay.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rackcert/braided.hpp"
#include "rackcert/symfam.hpp"

namespace rackcert {

namespace {

class Log {
public:
    explicit Log(ReplayResult& r) : r_(r) {}

    void check(const std::string& name, bool ok, const std::string& detail = {})
    {
        r_.steps.push_back({name, ok, detail});
        if (!ok && r_.ok) {
            r_.ok = false;
            r_.message = name + (detail.empty() ? "" : ": " + detail);
        }
    }

    void diagnosis(const std::string& name, const Diagnosis& d)
    {
        check(name, d.ok, d.ok ? std::to_string(d.checked) + " checks" : d.message);
    }

    void certificate(const Certificate& c, VerdictKind expected)
    {
        const auto d = check_certificate(c);
        check(c.cls.group + " " + c.cls.label + " certificate (" + c.construction + ")",
              d.ok && c.verdict.kind == expected, d.ok ? to_string(c.verdict.kind) : d.message);
        r_.certificates.push_back(c);
    }

private:
    ReplayResult& r_;
};

Permutation P(std::size_t m, const char* s)
{
    return Permutation::parse(m, s);
}

Permutation rep(std::size_t m, const char* type)
{
    return class_data(m, CycleType::parse(type)).representative;
}

std::vector<Permutation> tilde_sigma()
{
    return {P(4, "(1 2 3 4)"), P(4, "(1 2 4 3)"), P(4, "(1 3 2 4)"),
            P(4, "(1 3 4 2)"), P(4, "(1 4 2 3)"), P(4, "(1 4 3 2)")};
}

std::vector<Permutation> tilde_g()
{
    const auto s = tilde_sigma();
    return {s[0], s[4], s[1], s[2], s[3], s[1] * s[1] * s[0]};
}

template <GroupElement G>
void dp2_suite(Log& log, const std::string& what, const Dp2Family<G>& f)
{
    const auto v = verify_dp2(f.mu.members, f.nu.members, f.g_inf, f.p());
    log.diagnosis(what + ": D_p^(2) relations", v.diagnosis);
    const G sq = f.mu[0] * f.mu[0];
    const G prod = f.mu[0] * f.nu[0];
    bool squares = true;
    bool products = true;
    for (int i = 0; i < f.p(); ++i) {
        squares = squares && f.mu[i] * f.mu[i] == sq && f.nu[i] * f.nu[i] == f.nu[0] * f.nu[0];
        products = products && f.mu[i] * f.nu[i] == prod;
    }
    log.check(what + ": μ_i² constant", squares);
    log.check(what + ": μ_iν_i = μ_0ν_0", products);
    if (f.g_inf && is_odd_prime(f.p())) {
        const auto r = transporter_cocycle_report(f);
        log.check(what + ": twists α = δ = μ_0, β = g_inf⁻¹μ_0g_inf, γ = ν_0",
                  r.alpha == f.mu[0] && r.delta == f.mu[0] && r.gamma == f.nu[0] &&
                      r.beta == f.g_inf->inverse() * f.mu[0] * *f.g_inf);
    }
}

void split_case(Log& log, std::size_t m, const char* type, int j, int p)
{
    const std::string what = std::string("(") + type + ") in S_" + std::to_string(m);
    const auto sigma = rep(m, type);
    const auto f = sym_dp2_split(sigma, j, p);
    std::vector<Permutation> all = f.mu.members;
    all.insert(all.end(), f.nu.members.begin(), f.nu.members.end());
    std::sort(all.begin(), all.end());
    log.check(what + ": 2p members distinct", std::adjacent_find(all.begin(), all.end()) == all.end());
    bool no_inverse = true;
    for (const auto& a : f.mu.members)
        for (const auto& b : f.mu.members)
            no_inverse = no_inverse && a != b.inverse();
    log.check(what + ": σ_t ≠ σ_l⁻¹", no_inverse);
    log.check(what + ": σ_0 = σ", f.mu[0] == sigma);
    dp2_suite(log, what, f);
}

void run_octahedral_s4(Log& log, const ReplayOptions&)
{
    const auto s = tilde_sigma();
    const auto full = verify_octa(s);
    log.diagnosis("4-cycles of S_4: octahedral relations", full.diagnosis);
    const auto reduced = octa_from_reduced(s);
    log.diagnosis("4-cycles of S_4: reduced identities", reduced.diagnosis);
    if (full) {
        const auto c = octa_consequences(*full.value);
        log.check("σ_i⁴ common value is the identity", c.fourth_power.is_identity());
        log.check("σ_1σ_6 = σ_2σ_4 = σ_3σ_5", c.product == s[0] * s[5]);
    }
    const auto g = tilde_g();
    bool transport = true;
    for (std::size_t i = 0; i < 6; ++i)
        transport = transport && conjugate(g[i], s[0]) == s[i];
    log.check("g̃_i ▷ σ̃_1 = σ̃_i", transport);
}

void run_octahedral_yd(Log& log, const ReplayOptions& opts)
{
    const auto s = tilde_sigma();
    const CosetSection<Permutation> sec(s[0], s, tilde_g());
    const Character<Permutation> chi(s[0], {s[0]}, {RootOfUnity::minus_one()}, opts.word_depth);
    log.check("χ_−((1 2 3 4)) = −1", chi.q_ss() && chi.q_ss()->is_minus_one());
    const auto q = yd_cocycle<Permutation>({{sec, chi, ""}});
    log.check("YD rack is the octahedral rack", q.rack().table() == octahedral_rack().table());
    log.check("YD cocycle is constant −1 on 6 elements",
              q == Cocycle::constant(octahedral_rack(), RootOfUnity::minus_one()));
    const auto q2 = yd_cocycle<Permutation>({{sec, chi, "x"}, {sec, chi, "y"}});
    const auto sq = square_rack(octahedral_rack());
    const auto target = Cocycle::constant(sq, RootOfUnity::minus_one());
    log.check("doubled YD rack is the octahedral square", q2.rack().table() == sq.table());
    log.check("doubled YD cocycle is constant −1 on 12 elements", q2 == target);
    std::vector<int> id(12);
    std::iota(id.begin(), id.end(), 0);
    log.check("g̃_i ↦ x_i, g̃_{i+6} ↦ y_i is an isomorphism of braided vector spaces",
              check_bvs_isomorphism(q2, target, {id, true}));
    log.diagnosis("braid equation for the constant −1 square", check_braid_equation(target));
}

void run_dp_split(Log& log, const ReplayOptions&)
{
    split_case(log, 6, "6", 6, 3);
    split_case(log, 8, "2,6", 6, 3);
    split_case(log, 10, "10", 10, 5);
    log.certificate(classify_sym_class(6, CycleType::parse("6")), VerdictKind::InfiniteAllReps);
}

void dp_family_replay(Log& log, std::size_t m, const char* type, const char* construction,
                      const std::function<DpFamily<Permutation>(const Permutation&)>& build)
{
    const std::string what = std::string("(") + type + ") in S_" + std::to_string(m);
    const auto sigma = rep(m, type);
    const auto fam = build(sigma);
    log.diagnosis(what + ": D_3 relations", verify_dp(fam.members, 3).diagnosis);
    log.check(what + ": μ_0 = σ", fam[0] == sigma);
    const auto k = sigma.order() - 1;
    const auto comp = power_companion(fam, k);
    log.diagnosis(what + ": power companion k = " + std::to_string(k), comp.diagnosis);
    if (comp)
        dp2_suite(log, what + " companion", *comp.value);
    const auto cert = classify_sym_class(m, CycleType::parse(type));
    log.check(what + ": dispatch picks " + construction, cert.construction == construction, cert.construction);
    log.certificate(cert, VerdictKind::InfiniteAllReps);
}

void run_transposition_triple(Log& log, const ReplayOptions&)
{
    dp_family_replay(log, 6, "1,2,3", tag::transposition_triple, sym_d3_transposition_triple);
}

void run_three_even_cycles(Log& log, const ReplayOptions&)
{
    dp_family_replay(log, 12, "4^3", tag::three_even_cycles,
                     [](const Permutation& s) { return sym_d3_three_even_cycles(s, 4); });
}

void run_involution_triple(Log& log, const ReplayOptions&)
{
    dp_family_replay(log, 9, "2^3,3", tag::involution_triple, sym_d3_involution_plus);
}

void run_six_transpositions(Log& log, const ReplayOptions&)
{
    const auto sigma = rep(12, "2^6");
    for (auto variant : {SextupleVariant::Plain, SextupleVariant::Bar}) {
        const std::string what = to_string(variant) + " sextuple";
        const auto sx = sym_d3sq_six_transpositions(sigma, variant);
        const auto& f = sx.family;
        const auto& tau1 = f.nu[0];
        log.check(what + ": g ▷ σ = τ_1", conjugate(sx.g, sigma) == tau1);
        log.check(what + ": τ_1 = gσg", tau1 == sx.g * sigma * sx.g);
        if (variant == SextupleVariant::Plain) {
            log.check(what + ": τ_1 = σB", tau1 == sigma * sx.B);
            log.check(what + ": σ_2τ_2 = Bα²", f.mu[1] * f.nu[1] == sx.B * sx.alpha * sx.alpha);
        } else {
            log.check(what + ": τ_1 = Bα", tau1 == sx.B * sx.alpha);
            log.check(what + ": σ_2τ_2 = xBα²", f.mu[1] * f.nu[1] == sx.x * sx.B * sx.alpha * sx.alpha);
        }
        log.check(what + ": g commutes with σ_2τ_2", commute(sx.g, f.mu[1] * f.nu[1]));
        dp2_suite(log, what, f);
    }
    log.certificate(classify_sym_class(12, CycleType::parse("2^6")), VerdictKind::InfiniteWhenQMinusOne);
}

void eight_cycle_case(Log& log, const ReplayOptions& opts, std::size_t m, const char* type)
{
    const std::string what = std::string("(") + type + ") in S_" + std::to_string(m);
    const auto sigma = rep(m, type);
    const auto e = sym_o2_8cycle(sigma);
    const auto& f = e.family;
    const std::vector<Permutation> s(f.sigma.members.begin(), f.sigma.members.end());
    const std::vector<Permutation> t(f.tau.members.begin(), f.tau.members.end());
    log.diagnosis(what + ": 𝔒^(2) relations (36 + 36 + 72)", verify_octa2(s, t, f.g).diagnosis);
    log.check(what + ": σ_6 = σ³", f.sigma(6) == sigma.pow(3));
    log.check(what + ": τ_1 = σ⁵", f.tau(1) == sigma.pow(5));
    log.check(what + ": τ_6 = σ⁻¹", f.tau(6) == sigma.inverse());
    for (const auto* half : {&f.sigma, &f.tau}) {
        const auto c = octa_consequences(*half);
        log.check(what + ": fourth powers and products agree",
                  c.fourth_power == (*half)(1).pow(4) && c.product == (*half)(1) * (*half)(6));
    }
    const auto tr = octa_transporters(f);
    bool transport = true;
    for (int k = 1; k <= 12; ++k)
        transport = transport && conjugate(tr(k), sigma) == f.member(k);
    log.check(what + ": g_k ▷ σ_1 is the k-th member", transport);

    const auto twists = octa_twist_suite(f, opts.twist_length);
    log.diagnosis(what + ": 144 twists have odd words", twists.diagnosis);
    if (twists)
        log.check(what + ": 36 twists per class",
                  twists->per_class == std::array<int, 4>{36, 36, 36, 36} && twists->twists.size() == 144);

    const auto sq = square_rack(octahedral_rack());
    std::vector<std::vector<std::int64_t>> exps(12, std::vector<std::int64_t>(12, 0));
    bool powers = true;
    for (int i = 1; i <= 12; ++i)
        for (int j = 1; j <= 12; ++j) {
            const auto tw = tr(octa2_op(i, j)).inverse() * f.member(i) * tr(j);
            int k = 0;
            while (k < 8 && sigma.pow(k) != tw)
                ++k;
            powers = powers && k < 8;
            exps[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = k % 2;
        }
    log.check(what + ": every twist is a power of σ", powers);
    if (powers) {
        const Cocycle q(sq, 2, exps);
        std::vector<int> id(12);
        std::iota(id.begin(), id.end(), 0);
        log.check(what + ": braiding with χ(σ) = −1 matches the constant −1 square",
                  check_bvs_isomorphism(q, Cocycle::constant(sq, RootOfUnity::minus_one()), {id, true}));
    }
    log.certificate(classify_sym_class(m, CycleType::parse(type)), VerdictKind::InfiniteAllReps);
}

void run_eight_cycle(Log& log, const ReplayOptions& opts)
{
    eight_cycle_case(log, opts, 8, "8");
    eight_cycle_case(log, opts, 16, "8^2");
}

void run_gl2_triple(Log& log, const ReplayOptions&)
{
    const auto fam = gl2_d3_family(7, 2, -1);
    log.diagnosis("GL(2, 7), ω = 2, c = −1: D_3 relations", verify_dp(fam.members, 3).diagnosis);
    bool sl = true;
    for (const auto& m : fam.members)
        sl = sl && m.det() == 1;
    log.check("members lie in SL(2, 7)", sl);
    log.certificate(classify_gl_class(2, 7, "antidiag:6"), VerdictKind::InfiniteAllReps);
}

void run_gln_diagonal(Log& log, const ReplayOptions&)
{
    const auto f = gln_d3sq_family(7, 2, {1, 6, 2, 3});
    dp2_suite(log, "GL(4, 7), λ = (1, 6, 2, 3)", f.family);
    log.check("transporter g is an involution", (f.g * f.g).is_identity());
    log.check("g ▷ σ_1 = τ_1", conjugate(f.g, f.family.mu[0]) == f.family.nu[0]);
    const auto report = gln_criterion_report(7, {1, 6, 2, 3});
    log.check("det λ = 1, so no det twist sends λ to −1", report.det_lambda == 1 && report.minus_one_twists.empty());
    log.certificate(classify_gl_class(4, 7, "diag:1,6,2,3"), VerdictKind::InfiniteWhenQMinusOne);
}

using Runner = void (*)(Log&, const ReplayOptions&);

struct Entry {
    const char* tag;
    const char* summary;
    Runner run;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table{
        {"octahedral-s4", "the six 4-cycles of S_4 form a family of type 𝔒", run_octahedral_s4},
        {"octahedral-yd", "M(4-cycles, χ_−) ⊕ M(4-cycles, χ_−) is the octahedral square with q ≡ −1",
         run_octahedral_yd},
        {"dp-split", "D_p^(2) split families in types (6), (2,6) and (10)", run_dp_split},
        {"transposition-triple", "D_3 family from a transposition and a fixed point, type (1,2,3)",
         run_transposition_triple},
        {"three-even-cycles", "D_3 family from three 4-cycles, type (4^3)", run_three_even_cycles},
        {"involution-triple", "D_3 family from three transpositions, type (2^3,3)", run_involution_triple},
        {"six-transpositions", "both D_3^(2) sextuples in type (2^6)", run_six_transpositions},
        {"eight-cycle", "𝔒^(2) families for one and two 8-cycles", run_eight_cycle},
        {"gl2-triple", "D_3 family in GL(2, 7)", run_gl2_triple},
        {"gln-diagonal", "D_3^(2) family in GL(4, 7)", run_gln_diagonal},
    };
    return table;
}

} // namespace

const std::vector<std::string>& replay_tags()
{
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& e : entries())
            out.push_back(e.tag);
        return out;
    }();
    return tags;
}

ReplayResult replay_example(const std::string& tag, const ReplayOptions& opts)
{
    for (const auto& e : entries()) {
        if (tag != e.tag)
            continue;
        ReplayResult r;
        r.tag = e.tag;
        r.summary = e.summary;
        Log log(r);
        try {
            e.run(log, opts);
        } catch (const DefectError& ex) {
            r.defect = true;
            log.check("defect", false, ex.what());
        } catch (const InputError& ex) {
            log.check("construction", false, ex.what());
        }
        return r;
    }
    throw InputError("unknown example '" + tag + "'");
}

std::vector<ReplayResult> replay_all(const ReplayOptions& opts)
{
    std::vector<ReplayResult> out;
    for (const auto& t : replay_tags())
        out.push_back(replay_example(t, opts));
    return out;
}

} // namespace rackcert
