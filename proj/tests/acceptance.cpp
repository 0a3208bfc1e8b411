// Acceptance run: one PASS/FAIL line per criterion, with its runtime bound.
// With --suite-report the binary instead prints the deterministic full-suite
// report that criterion 10 compares across two child processes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rackcert/braided.hpp"
#include "rackcert/criteria.hpp"
#include "rackcert/replay.hpp"
#include "rackcert/serialize.hpp"
#include "rackcert/symfam.hpp"

using namespace rackcert;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<void(Outcome&)> run;
};

// Every verified family built anywhere in the run; criterion 5 checks the
// lemma suites on all of them.
struct Registry {
    std::vector<std::pair<std::string, Dp2Family<Permutation>>> dp2_perm;
    std::vector<std::pair<std::string, Dp2Family<PrimeFieldMatrix>>> dp2_mat;
    std::vector<std::pair<std::string, OctaFamily<Permutation>>> octa;
    std::vector<std::pair<std::string, Octa2Family<Permutation>>> octa2;
};

Registry registry;

Permutation P(std::size_t m, const char* s)
{
    return Permutation::parse(m, s);
}

Permutation rep(std::size_t m, const char* type)
{
    return class_data(m, CycleType::parse(type)).representative;
}

Permutation random_perm(int m, std::mt19937_64& rng)
{
    std::vector<int> a(static_cast<std::size_t>(m));
    std::iota(a.begin(), a.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    return Permutation::from_images(a);
}

// Plain image-vector conjugation, independent of the library's group law.
std::vector<int> conj_images(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> r(b.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        r[static_cast<std::size_t>(a[x] - 1)] = a[static_cast<std::size_t>(b[x] - 1)];
    return r;
}

template <class G>
bool all_distinct(std::vector<G> xs)
{
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// ---- 1 ------------------------------------------------------------------

void octahedral_fidelity(Outcome& out)
{
    // rows[i-1][j-1] = i ▷ j
    static constexpr std::array<std::array<int, 6>, 6> rows{{
        {1, 5, 2, 3, 4, 6},
        {3, 2, 6, 4, 1, 5},
        {4, 1, 3, 6, 5, 2},
        {5, 2, 1, 4, 6, 3},
        {2, 6, 3, 1, 5, 4},
        {1, 3, 4, 5, 2, 6},
    }};
    const auto o = octahedral_rack();
    out.require(o.size() == 6, "six elements");
    int matched = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const bool same = o.label(o.op(i, j)) == std::to_string(rows[i][j]);
            matched += same ? 1 : 0;
            out.require(same, std::to_string(i + 1) + " ▷ " + std::to_string(j + 1));
        }
    const auto at = [&](int i, int j) { return std::stoi(o.label(o.op(i - 1, j - 1))); };
    out.require(at(2, 1) == 3 && at(1, 2) == 5 && at(5, 4) == 1 && at(6, 6) == 6, "spot list");

    // the same table from conjugation of the six 4-cycles of S_4
    const std::array<const char*, 6> cycles{"(1 2 3 4)", "(1 2 4 3)", "(1 3 2 4)",
                                            "(1 3 4 2)", "(1 4 2 3)", "(1 4 3 2)"};
    std::vector<std::vector<int>> imgs;
    for (const char* c : cycles)
        imgs.push_back(P(4, c).images());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            out.require(conj_images(imgs[static_cast<std::size_t>(i)], imgs[static_cast<std::size_t>(j)]) ==
                            imgs[static_cast<std::size_t>(rows[i][j] - 1)],
                        "4-cycle conjugation disagrees at " + std::to_string(i + 1) + "," + std::to_string(j + 1));

    const auto axioms = check_rack(o);
    out.require(axioms.ok, "rack axioms: " + axioms.message);
    const auto braid = check_braid_equation(Cocycle::constant(o, RootOfUnity::minus_one()));
    out.require(braid.ok, "braid equation: " + braid.message);
    out.require(braid.checked == 216, "216 basis triples, checked " + std::to_string(braid.checked));
    out.detail = std::to_string(matched) + "/36 entries, axioms, " + std::to_string(braid.checked) + " braid triples";
}

// ---- 2 ------------------------------------------------------------------

void dihedral_squares(Outcome& out)
{
    for (int n : {3, 5, 7}) {
        const auto x = dihedral_square_rack(n);
        out.require(x.size() == static_cast<std::size_t>(2 * n), "X_" + std::to_string(n) + " has 2n elements");
        const auto d = check_rack(x);
        out.require(d.ok, "X_" + std::to_string(n) + " axioms: " + d.message);
    }
    const auto transp = conjugation_closure<Permutation>({P(3, "(1 2)"), P(3, "(1 3)")}, 10);
    out.require(transp.value.has_value() && transp.value->size() == 3, "S_3 transposition class");
    if (transp.value) {
        const auto sq = square_rack(conjugation_rack(*transp.value));
        const auto iso = find_isomorphism(dihedral_square_rack(3), sq);
        out.require(iso.has_value() && iso->is_isomorphism, "X_3 ≅ square of the transposition rack");
    }
    const auto x3 = dihedral_square_rack(3);
    const auto x9 = dihedral_square_rack(9);
    std::vector<int> map;
    for (int a = 0; a < 6; ++a)
        map.push_back(a < 3 ? 3 * a : 9 + 3 * (a - 3));
    out.require(is_morphism(x3, x9, map), "i ↦ 3i is a rack morphism X_3 → X_9");
    out.require(all_distinct(map), "i ↦ 3i is injective");
    out.detail = "X_3, X_5, X_7 axioms; X_3 ≅ square; X_3 ↪ X_9";
}

// ---- 3 ------------------------------------------------------------------

void split_case(Outcome& out, std::size_t m, const char* type, int j, int p)
{
    const std::string what = std::string("(") + type + ") in S_" + std::to_string(m);
    const auto sigma = rep(m, type);
    const auto f = sym_dp2_split(sigma, j, p);
    const auto v = verify_dp2(f.mu.members, f.nu.members, f.g_inf, p);
    out.require(v.value.has_value(), what + ": verify_dp2: " + v.diagnosis.message);
    std::vector<Permutation> all = f.mu.members;
    all.insert(all.end(), f.nu.members.begin(), f.nu.members.end());
    out.require(all.size() == static_cast<std::size_t>(2 * p) && all_distinct(all), what + ": 2p distinct members");
    for (const auto& a : f.mu.members)
        for (const auto& b : f.mu.members)
            out.require(a != b.inverse(), what + ": σ_t = σ_l⁻¹ for some t, l");
    out.require(f.mu[0] == sigma, what + ": σ_0 = σ");
    registry.dp2_perm.emplace_back("split " + what, f);
}

void dp_split(Outcome& out)
{
    struct Case {
        std::size_t m;
        const char* type;
        int j;
        int p;
    };
    std::string times;
    for (const auto& c : {Case{6, "6", 6, 3}, Case{8, "2,6", 6, 3}, Case{10, "10", 10, 5}}) {
        const auto start = std::chrono::steady_clock::now();
        split_case(out, c.m, c.type, c.j, c.p);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.require(ms < 100, std::string("(") + c.type + ") exceeded 100 ms");
        std::ostringstream t;
        t << std::fixed << std::setprecision(1) << ms;
        times += std::string(times.empty() ? "" : ", ") + "(" + c.type + ") " + t.str() + " ms";
    }
    out.detail = "2p distinct members, σ_t ≠ σ_l⁻¹, verify_dp2; " + times;
}

// ---- 4 ------------------------------------------------------------------

void register_companion(Outcome& out, const std::string& what, const DpFamily<Permutation>& fam)
{
    const auto k = fam[0].order() - 1;
    const auto comp = power_companion(fam, k);
    out.require(comp.value.has_value(), what + ": power companion: " + comp.diagnosis.message);
    if (comp.value)
        registry.dp2_perm.emplace_back(what + " companion", *comp.value);
}

void example_replays(Outcome& out)
{
    const auto before = defect_count();
    const auto results = replay_all();
    std::size_t steps = 0;
    for (const auto& r : results) {
        out.require(r.ok && !r.defect, r.tag + ": " + r.message);
        steps += r.steps.size();
        for (const auto& c : r.certificates) {
            const auto d = check_certificate(certificate_from_string(certificate_to_string(c)));
            out.require(d.ok, r.tag + " certificate: " + d.message);
        }
    }

    const auto s12 = rep(12, "4^3");
    const auto three = sym_d3_three_even_cycles(s12, 4);
    out.require(verify_dp(three.members, 3).value.has_value(), "(4^3) D_3");
    register_companion(out, "(4^3) in S_12", three);

    const auto s9 = rep(9, "2^3,3");
    const auto inv = sym_d3_involution_plus(s9);
    out.require(verify_dp(inv.members, 3).value.has_value(), "(2^3,3) D_3");
    register_companion(out, "(2^3,3) in S_9", inv);

    const auto s6 = rep(6, "1,2,3");
    register_companion(out, "(1,2,3) in S_6", sym_d3_transposition_triple(s6));

    const auto x = rep(12, "2^6");
    for (auto variant : {SextupleVariant::Plain, SextupleVariant::Bar}) {
        const auto sx = sym_d3sq_six_transpositions(x, variant);
        const auto& f = sx.family;
        const std::string what = to_string(variant) + " sextuple";
        out.require(verify_dp2(f.mu.members, f.nu.members, f.g_inf, 3).value.has_value(), what + ": D_3^(2)");
        out.require(conjugate(sx.g, x) == f.nu[0], what + ": g ▷ σ = τ_1");
        out.require(f.nu[0] == sx.g * x * sx.g, what + ": τ_1 = gσg");
        if (variant == SextupleVariant::Plain)
            out.require(f.nu[0] == x * sx.B, what + ": τ_1 = σB");
        else
            out.require(f.nu[0] == sx.B * sx.alpha, what + ": τ_1 = Bα");
        registry.dp2_perm.emplace_back(what, f);
    }

    for (auto [m, type] : {std::pair<std::size_t, const char*>{8, "8"}, {16, "8^2"}}) {
        const auto sigma = rep(m, type);
        const auto e = sym_o2_8cycle(sigma);
        const auto& f = e.family;
        const std::string what = std::string("(") + type + ") in S_" + std::to_string(m);
        out.require(f.sigma(6) == sigma.pow(3), what + ": σ_6 = σ³");
        out.require(f.tau(1) == sigma.pow(5), what + ": τ_1 = σ⁵");
        const std::vector<Permutation> s(f.sigma.members.begin(), f.sigma.members.end());
        const std::vector<Permutation> t(f.tau.members.begin(), f.tau.members.end());
        out.require(verify_octa2(s, t, f.g).value.has_value(), what + ": 𝔒^(2)");
        registry.octa2.emplace_back(what, f);
        registry.octa.emplace_back(what + " σ", f.sigma);
        registry.octa.emplace_back(what + " τ", f.tau);
    }
    out.require(defect_count() == before, "defects raised");
    out.detail = std::to_string(results.size()) + " replays, " + std::to_string(steps) + " checks, 0 defects";
}

// ---- 5 ------------------------------------------------------------------

template <GroupElement G>
void dp2_lemmas(Outcome& out, const std::string& what, const Dp2Family<G>& f)
{
    const G sq = f.mu[0] * f.mu[0];
    const G prod = f.mu[0] * f.nu[0];
    for (int i = 0; i < f.p(); ++i) {
        out.require(f.mu[i] * f.mu[i] == sq, what + ": μ_i² not constant");
        out.require(f.mu[i] * f.nu[i] == prod, what + ": μ_iν_i ≠ μ_0ν_0");
    }
    out.require(f.g_inf.has_value(), what + ": no g_∞");
    if (!f.g_inf)
        return;
    const G& g = *f.g_inf;
    const auto r = transporter_cocycle_report(f);
    out.require(r.alpha == f.mu[0], what + ": α ≠ μ_0");
    out.require(r.delta == f.mu[0], what + ": δ ≠ μ_0");
    out.require(r.beta == g.inverse() * f.mu[0] * g, what + ": β ≠ g_∞⁻¹μ_0g_∞");
    out.require(r.gamma == f.nu[0], what + ": γ ≠ ν_0");
}

template <GroupElement G>
void octa_lemmas(Outcome& out, const std::string& what, const OctaFamily<G>& f)
{
    const auto pw = [](const G& x, int k) { return group_power(x, k); };
    for (int i = 2; i <= 6; ++i)
        out.require(pw(f(i), 4) == pw(f(1), 4), what + ": (i) σ_i⁴");
    out.require(f(1) * f(6) == f(2) * f(4) && f(2) * f(4) == f(3) * f(5), what + ": (ii) products");
    const G iii = pw(f(1), 3) * f(6);
    out.require(pw(f(2), 2) * pw(f(5), 2) == iii && pw(f(3), 2) * pw(f(2), 2) == iii, what + ": (iii)");
    const G iv = f(1) * pw(f(6), 3);
    out.require(pw(f(5), 2) * pw(f(2), 2) == iv && pw(f(2), 2) * pw(f(3), 2) == iv, what + ": (iv)");
}

template <GroupElement G>
void octa2_lemmas(Outcome& out, const std::string& what, const Octa2Family<G>& f)
{
    const auto& s = f.sigma;
    const auto& t = f.tau;
    const auto pw = [](const G& x, int k) { return group_power(x, k); };
    const G c = s(1) * t(6);
    out.require(s(6) * t(1) == c && s(2) * t(4) == c && s(4) * t(2) == c && s(3) * t(5) == c && s(5) * t(3) == c,
                what + ": (i) σ_iτ_{7−i} products");
    for (int j = 2; j <= 6; ++j)
        out.require(s(j).inverse() * t(j) == s(1).inverse() * t(1), what + ": (ii) σ_j⁻¹τ_j");
    out.require(pw(t(2), -2) * s(5) * t(5) == t(1).inverse() * s(6), what + ": (iii)");
    out.require(pw(t(2), -2) * s(3) * t(3) == s(1) * t(6).inverse(), what + ": (iv)");
    out.require(pw(s(2), -2) * s(5) * t(5) == pw(s(1), -2) * t(1) * s(6), what + ": (v)");
    out.require(pw(s(2), -2) * s(3) * t(3) == t(1) * s(6).inverse(), what + ": (vi)");

    const auto twists = octa_twist_suite(f);
    out.require(twists.value.has_value(), what + ": twist suite: " + twists.diagnosis.message);
    if (!twists.value)
        return;
    out.require(twists->twists.size() == 144, what + ": 144 twists");
    out.require(twists->per_class == std::array<int, 4>{36, 36, 36, 36}, what + ": 36 twists per class");
    const auto tr = octa_transporters(f);
    for (const auto& tf : twists->twists) {
        out.require(tf.odd(), what + ": even twist");
        const auto& g = *f.g;
        const G gi = g.inverse();
        const std::array<std::array<G, 3>, 4> bases{{
            {s(1), s(6), g.identity()},
            {s(1), gi * t(6) * g, g.identity()},
            {s(1), gi * s(1) * g, gi * s(6) * g},
            {s(1), t(1), s(6)},
        }};
        const auto& b = bases[static_cast<std::size_t>(tf.cls)];
        const G word = pw(b[0], tf.exponents[0]) * pw(b[1], tf.exponents[1]) * pw(b[2], tf.exponents[2]);
        out.require(word == tr(octa2_op(tf.i, tf.j)).inverse() * f.member(tf.i) * tr(tf.j),
                    what + ": twist word does not evaluate to the twist");
    }
}

void lemma_suites(Outcome& out)
{
    for (const auto& [what, f] : registry.dp2_perm)
        dp2_lemmas(out, what, f);
    for (const auto& [what, f] : registry.dp2_mat)
        dp2_lemmas(out, what, f);
    for (const auto& [what, f] : registry.octa)
        octa_lemmas(out, what, f);
    for (const auto& [what, f] : registry.octa2) {
        octa_lemmas(out, what + " σ", f.sigma);
        octa_lemmas(out, what + " τ", f.tau);
        octa2_lemmas(out, what, f);
    }
    out.require(!registry.dp2_perm.empty() && !registry.octa2.empty(), "no families registered");
    out.detail = std::to_string(registry.dp2_perm.size() + registry.dp2_mat.size()) + " D_p^(2), " +
                 std::to_string(registry.octa.size()) + " 𝔒, " + std::to_string(registry.octa2.size()) +
                 " 𝔒^(2) families (" + std::to_string(registry.octa2.size() * 144) + " twists)";
}

// ---- 6 ------------------------------------------------------------------

void characterizations(Outcome& out)
{
    std::size_t pairs = 0;
    std::size_t d3 = 0;
    for (auto [type, count] : {std::pair<const char*, std::size_t>{"1^2,2", 6}, {"4", 6}}) {
        const auto x = rep(4, type);
        std::set<Permutation> cls;
        std::vector<int> images{1, 2, 3, 4};
        do
            cls.insert(conjugate(Permutation::from_images(images), x));
        while (std::next_permutation(images.begin(), images.end()));
        out.require(cls.size() == count, std::string("class ") + type);
        for (const auto& a : cls)
            for (const auto& b : cls) {
                ++pairs;
                const bool fast = d3_characterize(a, b).value.has_value();
                const bool full = verify_dp<Permutation>({a, b, conjugate(a, b)}, 3).value.has_value();
                out.require(fast == full, "d3_characterize disagrees on " + a.to_string() + ", " + b.to_string());
                d3 += full ? 1 : 0;
            }
    }
    out.require(d3 > 0, "no D_3 pairs among the exhaustive pairs");

    std::mt19937_64 rng(20261015);

    // nine identities: conjugated and reshuffled positives, plus perturbations
    std::vector<Dp2Family<Permutation>> seeds;
    for (const auto& [what, f] : registry.dp2_perm)
        if (f.p() == 3)
            seeds.push_back(f);
    out.require(!seeds.empty(), "no D_3^(2) seeds");
    std::size_t nine_tried = 0;
    std::size_t nine_accepted = 0;
    for (const auto& f : seeds) {
        const auto r = nine_identity_d3sq<Permutation>({f.mu[0], f.mu[1], f.mu[2]}, {f.nu[0], f.nu[1], f.nu[2]});
        out.require(r.value.has_value(), "constructed positive rejected by the nine identities");
    }
    for (int n = 0; n < 600 && !seeds.empty(); ++n) {
        const auto& f = seeds[static_cast<std::size_t>(n) % seeds.size()];
        const int m = static_cast<int>(f.mu[0].degree());
        const auto h = random_perm(m, rng);
        std::array<Permutation, 3> s;
        std::array<Permutation, 3> t;
        for (std::size_t i = 0; i < 3; ++i) {
            s[i] = conjugate(h, f.mu[static_cast<std::int64_t>(i)]);
            t[i] = conjugate(h, f.nu[static_cast<std::int64_t>(i)]);
        }
        switch (n % 5) {
        case 0:
            break;
        case 1:
            std::swap(t[0], t[1 + rng() % 2]);
            break;
        case 2:
            s[rng() % 3] = conjugate(random_perm(m, rng), s[0]);
            break;
        case 3:
            std::swap(s, t);
            break;
        default:
            t[rng() % 3] = conjugate(random_perm(m, rng), t[0]);
        }
        ++nine_tried;
        const auto r = nine_identity_d3sq<Permutation>(s, t);
        if (!r.value)
            continue;
        ++nine_accepted;
        const auto full = verify_dp2<Permutation>({s.begin(), s.end()}, {t.begin(), t.end()}, std::nullopt, 3);
        out.require(full.value.has_value(), "nine identities accepted a candidate the full verifier rejects");
    }

    // reduced octahedral identities
    std::vector<std::vector<Permutation>> octs;
    for (const auto& [what, f] : registry.octa)
        octs.emplace_back(f.members.begin(), f.members.end());
    octs.push_back({P(4, "(1 2 3 4)"), P(4, "(1 2 4 3)"), P(4, "(1 3 2 4)"), P(4, "(1 3 4 2)"), P(4, "(1 4 2 3)"),
                    P(4, "(1 4 3 2)")});
    std::size_t octa_tried = 0;
    std::size_t octa_accepted = 0;
    for (const auto& o : octs)
        out.require(octa_from_reduced(o).value.has_value(), "constructed 𝔒 positive rejected by the reduced test");
    for (int n = 0; n < 600; ++n) {
        auto cand = octs[static_cast<std::size_t>(n) % octs.size()];
        const int m = static_cast<int>(cand.front().degree());
        const auto h = random_perm(m, rng);
        for (auto& c : cand)
            c = conjugate(h, c);
        switch (n % 4) {
        case 0:
            break;
        case 1:
            std::swap(cand[rng() % 6], cand[rng() % 6]);
            break;
        case 2:
            cand[rng() % 6] = conjugate(random_perm(m, rng), cand[0]);
            break;
        default:
            std::shuffle(cand.begin(), cand.end(), rng);
        }
        ++octa_tried;
        const auto r = octa_from_reduced(cand);
        if (!r.value)
            continue;
        ++octa_accepted;
        out.require(verify_octa(cand).value.has_value(), "reduced test accepted a candidate the full verifier rejects");
        registry.octa.emplace_back("random 𝔒 positive", *r.value);
    }
    out.require(nine_tried >= 500 && octa_tried >= 500, "fewer than 500 randomized candidates");
    out.require(nine_accepted > 0 && nine_accepted < nine_tried, "nine-identity candidates are not mixed");
    out.require(octa_accepted > 0 && octa_accepted < octa_tried, "𝔒 candidates are not mixed");
    out.detail = std::to_string(pairs) + " exhaustive pairs (" + std::to_string(d3) + " D_3); nine identities " +
                 std::to_string(nine_accepted) + "/" + std::to_string(nine_tried) + " accepted; reduced 𝔒 " +
                 std::to_string(octa_accepted) + "/" + std::to_string(octa_tried) + " accepted";
}

// ---- 7 ------------------------------------------------------------------

void yd_cocycle_check(Outcome& out)
{
    const std::vector<Permutation> s{P(4, "(1 2 3 4)"), P(4, "(1 2 4 3)"), P(4, "(1 3 2 4)"),
                                     P(4, "(1 3 4 2)"), P(4, "(1 4 2 3)"), P(4, "(1 4 3 2)")};
    const std::vector<Permutation> g{s[0], s[4], s[1], s[2], s[3], s[1] * s[1] * s[0]};
    const CosetSection<Permutation> sec(s[0], s, g);
    const Character<Permutation> chi(s[0], {s[0]}, {RootOfUnity::minus_one()});
    out.require(chi.q_ss() && chi.q_ss()->is_minus_one(), "χ_−((1 2 3 4)) = −1");
    const auto oct = octahedral_rack();
    const auto q = yd_cocycle<Permutation>({{sec, chi, ""}});
    out.require(q.rack().table() == oct.table(), "YD rack is the octahedral rack");
    out.require(q == Cocycle::constant(oct, RootOfUnity::minus_one()), "constant −1 on 6 elements");
    const auto q2 = yd_cocycle<Permutation>({{sec, chi, "x"}, {sec, chi, "y"}});
    const auto sq = square_rack(oct);
    const auto target = Cocycle::constant(sq, RootOfUnity::minus_one());
    out.require(q2.rack().table() == sq.table(), "doubled YD rack is the octahedral square");
    out.require(q2 == target, "constant −1 on 12 elements");
    std::vector<int> id(12);
    std::iota(id.begin(), id.end(), 0);
    out.require(check_bvs_isomorphism(q2, target, {id, true}), "g̃_i ↦ x_i, g̃_{i+6} ↦ y_i");
    out.detail = "constant −1 on 6 and 12 elements, braided isomorphism confirmed";
}

// ---- 8 ------------------------------------------------------------------

void sweep_s6(Outcome& out)
{
    const auto types = partitions(6);
    out.require(types.size() == 11, "11 cycle types");
    std::map<std::string, Certificate> by_type;
    for (const auto& t : types) {
        const auto c = classify_sym_class(6, t);
        const auto back = certificate_from_string(certificate_to_string(c));
        out.require(back == c, t.to_string() + ": JSON round trip changed the certificate");
        const auto d = check_certificate(back);
        out.require(d.ok, t.to_string() + ": " + d.message);
        by_type.emplace(t.to_string(), c);
    }
    const auto verdict = [&](const char* type) {
        const auto it = by_type.find(CycleType::parse(type).to_string());
        return it == by_type.end() ? std::string("missing") : to_string(it->second.verdict.kind);
    };
    const auto construction = [&](const char* type) {
        const auto it = by_type.find(CycleType::parse(type).to_string());
        return it == by_type.end() ? std::string("missing") : it->second.construction;
    };
    out.require(verdict("1,2,3") == "InfiniteAllReps", "(1,2,3) → InfiniteAllReps");
    out.require(verdict("6") == "InfiniteAllReps", "(6) → InfiniteAllReps");
    out.require(construction("2^3") != tag::involution_triple, "(2³) must not use the involution triple");
    out.require(verdict("2^3") == "NoCriterion", "(2³) falls through to NoCriterion");
    out.require(verdict("1^4,2") == "NoCriterion", "(2,1⁴) → NoCriterion");
    out.require(verdict("1^3,3") == "InfiniteAllReps" && construction("1^3,3") == tag::odd_order,
                "(3,1³) → InfiniteAllReps by the odd-order lemma");
    int all_reps = 0;
    for (const auto& [t, c] : by_type)
        all_reps += c.verdict.kind == VerdictKind::InfiniteAllReps ? 1 : 0;
    out.detail = "11 types, " + std::to_string(all_reps) + " InfiniteAllReps, all certificates re-verified from JSON";
}

// ---- 9 ------------------------------------------------------------------

void matrix_families(Outcome& out)
{
    const auto gl2 = gl2_d3_family(7, 2, -1);
    out.require(verify_dp(gl2.members, 3).value.has_value(), "GL(2, 7) D_3");
    for (const auto& m : gl2.members)
        out.require(m.det() == 1, "member outside SL(2, 7)");
    const auto comp = power_companion(gl2, 3);
    if (comp.value)
        registry.dp2_mat.emplace_back("GL(2, 7) companion", *comp.value);

    const auto gln = gln_d3sq_family(7, 2, {1, 6, 2, 3});
    const auto& f = gln.family;
    out.require(verify_dp2(f.mu.members, f.nu.members, f.g_inf, 3).value.has_value(), "GL(4, 7) D_3^(2)");
    out.require((gln.g * gln.g).is_identity(), "transporter g is not an involution");
    out.require(conjugate(gln.g, f.mu[0]) == f.nu[0], "g ▷ σ_1 ≠ τ_1");
    registry.dp2_mat.emplace_back("GL(4, 7), λ = (1, 6, 2, 3)", f);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(0, 6);
    const auto random_gl = [&](std::size_t n) {
        for (;;) {
            std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
            for (auto& r : rows)
                for (auto& x : r)
                    x = entry(rng);
            try {
                return PrimeFieldMatrix::from_rows(7, rows);
            } catch (const InputError&) {
            }
        }
    };
    int pairs = 0;
    for (std::int64_t h : {1, 3}) {
        const auto chi = DetCharacter::make(7, h);
        for (int n = 0; n < 50; ++n) {
            const std::size_t dim = n % 2 == 0 ? 2 : 4;
            const auto a = random_gl(dim);
            const auto b = random_gl(dim);
            ++pairs;
            out.require((det_char_value(chi, a) + det_char_value(chi, b)) % 6 == det_char_value(chi, a * b),
                        "χ(ab) ≠ χ(a)χ(b)");
        }
    }
    out.detail = "D_3 in SL(2, 7); D_3^(2) in GL(4, 7) with g² = 1; " + std::to_string(pairs) +
                 " random pairs multiplicative";
}

// ---- 10 -----------------------------------------------------------------

std::string suite_report()
{
    json rep{{"schema", kSchemaVersion}, {"examples", json::array()}, {"sweep", json::array()}};
    for (const auto& r : replay_all()) {
        json steps = json::array();
        for (const auto& s : r.steps)
            steps.push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
        json certs = json::array();
        for (const auto& c : r.certificates)
            certs.push_back(to_json(c));
        rep["examples"].push_back({{"tag", r.tag}, {"ok", r.ok}, {"steps", steps}, {"certificates", certs}});
    }
    for (std::size_t m = 2; m <= 8; ++m)
        for (const auto& t : partitions(m)) {
            const auto c = classify_sym_class(m, t);
            json j = to_json(c);
            j["verified"] = check_certificate(c).ok;
            rep["sweep"].push_back(j);
        }
    rep["defects"] = defect_count();
    return rep.dump(1);
}

std::string self_path;

std::string run_child()
{
    const std::string cmd = "'" + self_path + "' --suite-report";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    return pclose(pipe) == 0 ? out : std::string{};
}

void determinism(Outcome& out)
{
    const auto a = run_child();
    const auto b = run_child();
    out.require(!a.empty() && !b.empty(), "child run failed");
    out.require(a == b, "the two reports differ");
    if (!a.empty()) {
        const auto j = json::parse(a);
        out.require(j["defects"] == 0, "child run raised defects");
        bool all_ok = true;
        for (const auto& e : j["examples"])
            all_ok = all_ok && e["ok"].get<bool>();
        for (const auto& c : j["sweep"])
            all_ok = all_ok && c["verified"].get<bool>();
        out.require(all_ok, "child report contains failures");
    }
    out.require(defect_count() == 0, "defect counter of this process is " + std::to_string(defect_count()));
    out.detail = "2 child runs, " + std::to_string(a.size()) + " identical bytes, defect counter 0 here and there";
}

} // namespace

int main(int argc, char** argv)
{
    self_path = argv[0];
    if (argc > 1 && std::string(argv[1]) == "--suite-report") {
        std::cout << suite_report() << "\n";
        return 0;
    }

    // Criterion 5 runs after every family-producing criterion; output stays in id order.
    const std::vector<Criterion> criteria{
        {1, "octahedral fidelity", 100, octahedral_fidelity},
        {2, "dihedral squares", 100, dihedral_squares},
        {3, "D_p split construction", 300, dp_split},
        {4, "example replays", 5000, example_replays},
        {6, "characterization equivalences", 10000, characterizations},
        {7, "Yetter-Drinfeld cocycle", 500, yd_cocycle_check},
        {8, "classification sweep S_6", 5000, sweep_s6},
        {9, "matrix families", 1000, matrix_families},
        {5, "lemma suites on every family", 0, lemma_suites},
        {10, "determinism and defect-freedom", 0, determinism},
    };
    struct Line {
        int id;
        std::string text;
        bool ok;
    };
    std::vector<Line> lines;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const DefectError& e) {
            out.require(false, std::string("defect: ") + e.what());
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0)
            out.require(ms < c.limit_ms, "runtime bound exceeded");
        std::ostringstream line;
        line << (out.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << std::fixed
             << std::setprecision(1) << ms << " ms";
        if (c.limit_ms > 0)
            line << " < " << c.limit_ms << " ms";
        line << ")  " << out.detail;
        for (std::size_t i = 0; i < out.failures.size() && i < 5; ++i)
            line << "\n        " << out.failures[i];
        if (out.failures.size() > 5)
            line << "\n        … " << out.failures.size() - 5 << " more";
        lines.push_back({c.id, line.str(), out.ok});
    }
    std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
    int failed = 0;
    for (const auto& l : lines) {
        std::cout << l.text << "\n";
        failed += l.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " line(s) failed") << "\n";
    return failed == 0 ? 0 : 1;
}
