#include "rackcert/symfam.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

namespace rackcert {

namespace {

Permutation transpositions(std::size_t m, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<std::vector<int>> cycles;
    for (auto [a, b] : pairs)
        cycles.push_back({a, b});
    return Permutation::from_cycles(m, cycles);
}

std::vector<std::vector<int>> cycles_of_length(const Permutation& sigma, int j)
{
    std::vector<std::vector<int>> out;
    for (auto& c : sigma.cycles(true))
        if (static_cast<int>(c.size()) == j)
            out.push_back(std::move(c));
    return out;
}

bool has_long_cycle(const Permutation& sigma)
{
    for (const auto& c : sigma.cycles())
        if (c.size() >= 3)
            return true;
    return false;
}

void require_same_class(const Permutation& sigma, const std::vector<Permutation>& members, const char* what)
{
    const auto t = sigma.cycle_type();
    for (const auto& m : members)
        require_identity(m.cycle_type() == t, std::string(what) + " left the conjugacy class");
}

DpFamily<Permutation> verified_d3(std::vector<Permutation> members, const char* what)
{
    auto fam = verify_dp(std::move(members), 3);
    require_identity(fam.value.has_value(), std::string(what) + " is not of type D_3: " + fam.diagnosis.message);
    return *fam.value;
}

} // namespace

std::optional<std::vector<int>> first_cycle_of_length(const Permutation& sigma, int j)
{
    auto cs = cycles_of_length(sigma, j);
    if (cs.empty())
        return std::nullopt;
    return cs.front();
}

Dp2Family<Permutation> sym_dp2_split(const Permutation& sigma, int j, int p)
{
    if (p < 2)
        throw InputError("p must be at least 2");
    if (j == 4)
        throw InputError("j = 4 is excluded");
    if (j <= 0 || j % (2 * p) != 0)
        throw InputError("2p must divide j (p = " + std::to_string(p) + ", j = " + std::to_string(j) + ")");
    const auto cyc = first_cycle_of_length(sigma, j);
    if (!cyc)
        throw InputError("σ has no cycle of length " + std::to_string(j));
    const std::size_t m = sigma.degree();
    const int kappa = j / (2 * p);
    std::vector<int> even;
    for (int t = 1; t < j; t += 2)
        even.push_back((*cyc)[static_cast<std::size_t>(t)]);
    const Permutation P = Permutation::from_cycles(m, {even});
    std::vector<Permutation> mu;
    std::vector<Permutation> nu;
    for (int i = 0; i < p; ++i) {
        const Permutation Pi = power(P, static_cast<std::int64_t>(i) * kappa);
        mu.push_back(conjugate(Pi, sigma));
        nu.push_back(mu.back().inverse());
    }
    for (const auto& a : mu)
        for (const auto& b : mu)
            require_identity(a != b.inverse(), "split family meets its own inverses");
    require_same_class(sigma, mu, "split family");
    auto g_inf = find_conjugator(sigma, sigma.inverse());
    require_identity(g_inf.has_value(), "σ is not conjugate to σ⁻¹");
    auto fam = verify_dp2(std::move(mu), std::move(nu), std::move(g_inf), p);
    require_identity(fam.value.has_value(), "split family is not of type D_p^(2): " + fam.diagnosis.message);
    return *fam.value;
}

DpFamily<Permutation> sym_d3_three_even_cycles(const Permutation& sigma, int j)
{
    if (j < 4 || j % 2 != 0)
        throw InputError("need j = 2k with k ≥ 2, got " + std::to_string(j));
    const auto cs = cycles_of_length(sigma, j);
    if (cs.size() < 3)
        throw InputError("need three cycles of length " + std::to_string(j) + ", found " + std::to_string(cs.size()));
    const std::size_t m = sigma.degree();
    const int k = j / 2;
    std::vector<int> pts; // i_1 .. i_{3j}
    for (int c = 0; c < 3; ++c)
        pts.insert(pts.end(), cs[static_cast<std::size_t>(c)].begin(), cs[static_cast<std::size_t>(c)].end());
    auto pt = [&](int t) { return pts[static_cast<std::size_t>(t - 1)]; };
    std::vector<int> odd;
    std::vector<int> even;
    for (int t = 1; t <= 3 * j; ++t)
        (t % 2 ? odd : even).push_back(pt(t));
    const Permutation I = Permutation::from_cycles(m, {odd});
    const Permutation P = Permutation::from_cycles(m, {even});
    std::vector<std::pair<int, int>> b1;
    std::vector<std::pair<int, int>> b2;
    for (int t = 1; t <= j; ++t) {
        b1.emplace_back(pt(t), pt(j + t));
        b2.emplace_back(pt(j + t), pt(2 * j + t));
    }
    const Permutation B1 = transpositions(m, b1);
    const Permutation B2 = transpositions(m, b2);
    const Permutation Pk = power(P, k);
    const Permutation Pmk = power(P, -k);
    require_identity(I.order() == 3 * k && P.order() == 3 * k, "(a) I and P are not 3k-cycles");
    require_identity(power(I, k) * Pk == B1 * B2, "(b) I^k P^k ≠ B_1 B_2");
    require_identity(conjugate(sigma, I) == P, "(c) σ ▷ I ≠ P");
    require_identity(Pk * sigma * Pk == sigma * B1 * B2, "(d) P^k σ P^k ≠ σ B_1 B_2");
    require_identity(Pmk * sigma * Pmk == sigma * B2 * B1, "(e) P^{-k} σ P^{-k} ≠ σ B_2 B_1");
    std::vector<Permutation> members{sigma, conjugate(Pk, sigma), conjugate(Pmk, sigma)};
    require_same_class(sigma, members, "three-cycle family");
    return verified_d3(std::move(members), "three-cycle family");
}

DpFamily<Permutation> sym_d3_involution_plus(const Permutation& sigma)
{
    const auto ts = cycles_of_length(sigma, 2);
    if (ts.size() < 3)
        throw InputError("need three transpositions in σ");
    if (!has_long_cycle(sigma))
        throw InputError("need a cycle of length at least 3");
    const std::size_t m = sigma.degree();
    const int i1 = ts[0][0], i2 = ts[0][1], i3 = ts[1][0], i4 = ts[1][1], i5 = ts[2][0], i6 = ts[2][1];
    const Permutation x = transpositions(m, {{i1, i2}, {i3, i4}, {i5, i6}});
    const Permutation y = transpositions(m, {{i1, i4}, {i3, i6}, {i2, i5}});
    const Permutation z = transpositions(m, {{i1, i6}, {i2, i3}, {i4, i5}});
    const Permutation alpha = x * sigma;
    std::vector<Permutation> members{sigma, y * alpha, z * alpha};
    require_same_class(sigma, members, "involution family");
    return verified_d3(std::move(members), "involution family");
}

DpFamily<Permutation> sym_d3_transposition_triple(const Permutation& sigma)
{
    const auto ts = cycles_of_length(sigma, 2);
    const auto fixed = cycles_of_length(sigma, 1);
    if (ts.empty() || fixed.empty())
        throw InputError("need a transposition and a fixed point in σ");
    if (!has_long_cycle(sigma))
        throw InputError("need a cycle of length at least 3");
    const std::size_t m = sigma.degree();
    const int a = ts[0][0], b = ts[0][1], c = fixed[0][0];
    const Permutation x = transpositions(m, {{a, b}});
    const Permutation y = transpositions(m, {{a, c}});
    const Permutation z = transpositions(m, {{b, c}});
    const Permutation beta = x * sigma;
    std::vector<Permutation> members{x * beta, y * beta, z * beta};
    require_identity(members[0] == sigma, "xβ ≠ σ");
    require_same_class(sigma, members, "transposition family");
    return verified_d3(std::move(members), "transposition family");
}

std::string to_string(SextupleVariant v)
{
    return v == SextupleVariant::Plain ? "plain" : "bar";
}

SextupleFamily sym_d3sq_six_transpositions(const Permutation& sigma, SextupleVariant variant)
{
    const auto ts = cycles_of_length(sigma, 2);
    if (ts.size() < 6)
        throw InputError("need six transpositions in σ, found " + std::to_string(ts.size()));
    const std::size_t m = sigma.degree();
    std::vector<int> pts{0};
    for (int t = 0; t < 6; ++t) {
        pts.push_back(ts[static_cast<std::size_t>(t)][0]);
        pts.push_back(ts[static_cast<std::size_t>(t)][1]);
    }
    using Pairs = std::vector<std::pair<int, int>>;
    auto on_points = [&](const Pairs& idx) {
        Pairs out;
        for (auto [a, b] : idx)
            out.emplace_back(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]);
        return transpositions(m, out);
    };
    SextupleFamily out;
    out.variant = variant;
    out.x = on_points({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}});
    out.alpha = out.x * sigma;
    out.B = on_points({{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 11}, {10, 12}});
    const Permutation& alpha = out.alpha;
    auto word = [&](const Pairs& idx) { return on_points(idx) * alpha; };

    std::vector<Permutation> s;
    std::vector<Permutation> t;
    if (variant == SextupleVariant::Plain) {
        s = {sigma, word({{1, 6}, {3, 8}, {5, 10}, {7, 12}, {9, 2}, {11, 4}}),
             word({{1, 10}, {3, 12}, {5, 2}, {7, 4}, {9, 6}, {11, 8}})};
        t = {word({{1, 4}, {3, 2}, {5, 8}, {7, 6}, {9, 12}, {11, 10}}),
             word({{1, 8}, {3, 6}, {5, 12}, {7, 10}, {9, 4}, {11, 2}}),
             word({{1, 12}, {3, 10}, {5, 4}, {7, 2}, {9, 8}, {11, 6}})};
        out.g = on_points({{2, 4}, {6, 8}, {10, 12}});
    } else {
        s = {sigma, word({{1, 6}, {4, 7}, {5, 10}, {8, 11}, {2, 9}, {3, 12}}),
             word({{1, 10}, {4, 11}, {2, 5}, {3, 8}, {6, 9}, {7, 12}})};
        t = {word({{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 11}, {10, 12}}),
             word({{1, 7}, {2, 12}, {3, 9}, {4, 6}, {5, 11}, {8, 10}}),
             word({{1, 11}, {2, 8}, {3, 5}, {4, 10}, {6, 12}, {7, 9}})};
        out.g = on_points({{2, 3}, {6, 7}, {10, 11}});
    }
    const Permutation& g = out.g;
    require_identity((g * g).is_identity(), "transporter is not an involution");
    require_identity(conjugate(g, sigma) == t[0], "g ▷ σ ≠ τ_1");
    require_identity(g * sigma * g == t[0], "τ_1 ≠ gσg");
    const Permutation st2 = s[1] * t[1];
    const Permutation a2 = alpha * alpha;
    if (variant == SextupleVariant::Plain) {
        require_identity(t[0] == sigma * out.B, "τ_1 ≠ σB");
        require_identity(st2 == out.B * a2, "σ_2τ_2 ≠ Bα²");
    } else {
        require_identity(t[0] == out.B * alpha, "τ_1 ≠ Bα");
        require_identity(st2 == out.x * out.B * a2, "σ_2τ_2 ≠ xBα²");
    }
    require_identity(g * st2 * g == st2, "g does not commute with σ_2τ_2");

    std::vector<Permutation> all = s;
    all.insert(all.end(), t.begin(), t.end());
    require_same_class(sigma, all, "sextuple");
    auto nine = nine_identity_d3sq<Permutation>({s[0], s[1], s[2]}, {t[0], t[1], t[2]});
    require_identity(nine.value.has_value(), "sextuple is not of type D_3^(2): " + nine.diagnosis.message);
    auto fam = verify_dp2(s, t, std::optional<Permutation>(g), 3);
    require_identity(fam.value.has_value(), "sextuple with transporter fails: " + fam.diagnosis.message);
    out.family = *fam.value;
    return out;
}

D3SearchResult sym_d3_search(const Permutation& s1, std::size_t budget)
{
    const std::size_t m = s1.degree();
    std::vector<Permutation> swaps;
    for (int a = 1; a <= static_cast<int>(m); ++a)
        for (int b = a + 1; b <= static_cast<int>(m); ++b)
            swaps.push_back(Permutation::from_cycles(m, {{a, b}}));
    D3SearchResult res;
    std::set<Permutation> seen{s1};
    std::deque<Permutation> queue{s1};
    while (!queue.empty()) {
        const Permutation cur = queue.front();
        queue.pop_front();
        for (const auto& tr : swaps) {
            Permutation s2 = conjugate(tr, cur);
            if (!seen.insert(s2).second)
                continue;
            if (res.tried >= budget) {
                res.budget_exhausted = true;
                return res;
            }
            ++res.tried;
            auto fam = d3_characterize(s1, s2);
            if (fam) {
                res.family = *fam.value;
                return res;
            }
            queue.push_back(std::move(s2));
        }
    }
    return res;
}

} // namespace rackcert

namespace rackcert {

namespace {

// Relabelings of one 8-cycle (i_1 … i_8), 1-based positions, for
// σ_2, σ_3, σ_4, σ_5, τ_2, τ_3, τ_4, τ_5.
constexpr std::array<std::array<int, 8>, 8> eight_cycle_words{{
    {1, 3, 8, 6, 5, 7, 4, 2},
    {1, 8, 2, 7, 5, 4, 6, 3},
    {1, 6, 4, 3, 5, 2, 8, 7},
    {1, 7, 6, 8, 5, 3, 2, 4},
    {1, 7, 8, 2, 5, 3, 4, 6},
    {1, 4, 2, 3, 5, 8, 6, 7},
    {1, 2, 4, 7, 5, 6, 8, 3},
    {1, 3, 6, 4, 5, 7, 2, 8},
}};

} // namespace

EightCycleFamily sym_o2_8cycle(const Permutation& sigma)
{
    for (int part : sigma.cycle_type().parts())
        if (part != 1 && part != 2 && part != 8)
            throw InputError("cycle type " + sigma.cycle_type().to_string() + " has a part other than 1, 2, 8");
    const auto eights = cycles_of_length(sigma, 8);
    if (eights.empty())
        throw InputError("no 8-cycle in " + sigma.to_string());
    if (eights.size() >= 3)
        throw InputError("three or more 8-cycles: use sym_d3_three_even_cycles(sigma, 8)");

    std::vector<std::vector<int>> alpha_cycles;
    for (auto& c : sigma.cycles())
        if (c.size() != 8)
            alpha_cycles.push_back(std::move(c));
    const auto word = [&](std::size_t w) {
        auto cycles = alpha_cycles;
        for (const auto& a8 : eights) {
            std::vector<int> relabeled;
            for (int pos : eight_cycle_words[w])
                relabeled.push_back(a8[static_cast<std::size_t>(pos - 1)]);
            cycles.push_back(std::move(relabeled));
        }
        return Permutation::from_cycles(sigma.degree(), cycles);
    };

    const std::vector<Permutation> s{sigma, word(0), word(1), word(2), word(3), power(sigma, 3)};
    const std::vector<Permutation> t{power(sigma, 5), word(4), word(5), word(6), word(7), sigma.inverse()};
    const auto g = find_conjugator(sigma, power(sigma, 5));
    require_identity(g.has_value(), "σ and σ⁵ are not conjugate");
    auto fam = verify_octa2(s, t, g);
    require_identity(fam.value.has_value(), "8-cycle family fails: " + fam.diagnosis.message);
    require_same_class(sigma, s, "8-cycle family σ");
    require_same_class(sigma, t, "8-cycle family τ");
    return {*fam.value, 3, 5};
}

OctaCycleSearch octa_search_full_cycle(int n)
{
    if (n != 8 && n != 16 && n != 32)
        throw InputError("full-cycle search supports N = 8, 16, 32, got " + std::to_string(n));
    const int len = n / 4;
    const auto m = static_cast<std::size_t>(n);
    std::vector<int> cycle(m);
    std::iota(cycle.begin(), cycle.end(), 1);
    const Permutation sigma = Permutation::from_cycles(m, {cycle});
    const Permutation fourth = power(sigma, 4);

    OctaCycleSearch res;
    std::array<int, 4> blocks{0, 1, 2, 3};
    do {
        const auto shift_count = static_cast<std::int64_t>(len) * len * len * len;
        for (std::int64_t code = 0; code < shift_count; ++code) {
            // point r + 4k (0-based r, k) goes to block blocks[r] at position k + shift_r
            std::vector<int> images(m);
            std::int64_t rest = code;
            for (int r = 0; r < 4; ++r) {
                const int shift = static_cast<int>(rest % len);
                rest /= len;
                for (int k = 0; k < len; ++k)
                    images[static_cast<std::size_t>(r + 4 * k)] = blocks[static_cast<std::size_t>(r)] +
                                                                  4 * ((k + shift) % len) + 1;
            }
            const Permutation s2 = Permutation::from_images(images);
            ++res.examined;
            if (s2 == sigma || s2 * s2 * s2 * s2 != fourth || s2.cycle_type() != sigma.cycle_type())
                continue;
            const Permutation s5 = conjugate(sigma, s2);
            const Permutation s4 = conjugate(sigma, s5);
            const Permutation s3 = conjugate(s2, sigma);
            const Permutation s6 = conjugate(s2, s3);
            auto fam = octa_from_reduced(std::vector<Permutation>{sigma, s2, s3, s4, s5, s6});
            if (fam) {
                res.family = *fam.value;
                return res;
            }
        }
    } while (std::next_permutation(blocks.begin(), blocks.end()));
    return res;
}

} // namespace rackcert
