#pragma once

// Families of type 𝔒 (six elements multiplying like the octahedral rack) and
// 𝔒^(2) (two such families with the cross relations of its square), plus the
// transporters and twists used to realize them as braided subspaces.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "rackcert/errors.hpp"
#include "rackcert/group.hpp"

namespace rackcert {

/// i ▷ j in the octahedral rack, 1-based, read from `octahedral_rack()`.
int octa_op(int i, int j);

/// i ▷ j in the square of the octahedral rack on 1..12, where 7..12 is the
/// second copy.
int octa2_op(int i, int j);

template <GroupElement G>
struct OctaFamily {
    std::array<G, 6> members; // members[i - 1] = σ_i

    const G& operator()(int i) const { return members[static_cast<std::size_t>(i - 1)]; }
    friend bool operator==(const OctaFamily&, const OctaFamily&) = default;
};

template <GroupElement G>
struct Octa2Family {
    OctaFamily<G> sigma;
    OctaFamily<G> tau;
    std::optional<G> g; // g ▷ σ_1 = τ_1 when present

    /// Member k of the twelve, σ_k for k ≤ 6 and τ_{k−6} otherwise.
    const G& member(int k) const { return k <= 6 ? sigma(k) : tau(k - 6); }
    friend bool operator==(const Octa2Family&, const Octa2Family&) = default;
};

template <GroupElement G>
struct OctaConsequences {
    G fourth_power; // σ_i⁴
    G product;      // σ_1σ_6 = σ_2σ_4 = σ_3σ_5
};

/// g_1..g_12 with g_k ▷ σ_1 equal to member k.
template <GroupElement G>
struct OctaTransporters {
    std::array<G, 12> g;

    const G& operator()(int k) const { return g[static_cast<std::size_t>(k - 1)]; }
};

enum class TwistClass { A, B, C, D };

/// g_{i▷j}⁻¹ x_i g_j = b_1^{e_1} b_2^{e_2} b_3^{e_3} over the basis of its class:
///   A: σ_1, σ_6            B: σ_1, g⁻¹τ_6g
///   C: σ_1, g⁻¹σ_1g, g⁻¹σ_6g   D: σ_1, τ_1, σ_6
struct TwistFactor {
    int i = 0;
    int j = 0;
    TwistClass cls = TwistClass::A;
    std::array<int, 3> exponents{};

    int length() const { return std::abs(exponents[0]) + std::abs(exponents[1]) + std::abs(exponents[2]); }
    bool odd() const { return (exponents[0] + exponents[1] + exponents[2]) % 2 != 0; }
};

struct OctaTwistReport {
    std::vector<TwistFactor> twists; // row-major over (i, j), 144 entries
    std::array<int, 4> per_class{};
    int max_length = 0;
};

std::string to_string(TwistClass c);

namespace detail {

template <GroupElement G>
std::optional<std::string> first_octa_duplicate(const std::vector<G>& xs)
{
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            if (xs[a] == xs[b])
                return "member " + std::to_string(a + 1) + " = member " + std::to_string(b + 1);
    return std::nullopt;
}

inline std::string octa_name(int k)
{
    return k <= 6 ? "σ_" + std::to_string(k) : "τ_" + std::to_string(k - 6);
}

} // namespace detail

/// The four identities every family of type 𝔒 satisfies; a failure is a
/// DefectError.
///   σ_i⁴ all equal;  σ_1σ_6 = σ_2σ_4 = σ_3σ_5;
///   σ_2²σ_5² = σ_1³σ_6 = σ_3²σ_2²;  σ_5²σ_2² = σ_1σ_6³ = σ_2²σ_3².
template <GroupElement G>
OctaConsequences<G> octa_consequences(const OctaFamily<G>& f)
{
    const G fourth = group_power(f(1), 4);
    for (int i = 2; i <= 6; ++i)
        require_identity(group_power(f(i), 4) == fourth, "σ_" + std::to_string(i) + "⁴ ≠ σ_1⁴");
    const G prod = f(1) * f(6);
    require_identity(f(2) * f(4) == prod, "σ_2σ_4 ≠ σ_1σ_6");
    require_identity(f(3) * f(5) == prod, "σ_3σ_5 ≠ σ_1σ_6");
    const auto sq = [&](int i) { return f(i) * f(i); };
    const G iii = group_power(f(1), 3) * f(6);
    require_identity(sq(2) * sq(5) == iii, "σ_2²σ_5² ≠ σ_1³σ_6");
    require_identity(sq(3) * sq(2) == iii, "σ_3²σ_2² ≠ σ_1³σ_6");
    const G iv = f(1) * group_power(f(6), 3);
    require_identity(sq(5) * sq(2) == iv, "σ_5²σ_2² ≠ σ_1σ_6³");
    require_identity(sq(2) * sq(3) == iv, "σ_2²σ_3² ≠ σ_1σ_6³");
    return {fourth, prod};
}

/// Distinctness and all 36 relations σ_i ▷ σ_j = σ_{i▷j}; the first failing
/// pair is cited. Accepted families also pass `octa_consequences`.
template <GroupElement G>
Checked<OctaFamily<G>> verify_octa(const std::vector<G>& members)
{
    using R = Checked<OctaFamily<G>>;
    if (members.size() != 6)
        return R::reject("expected 6 members, got " + std::to_string(members.size()));
    if (auto dup = detail::first_octa_duplicate(members))
        return R::reject("members not distinct: " + *dup);
    OctaFamily<G> f;
    std::copy(members.begin(), members.end(), f.members.begin());
    std::size_t checked = 0;
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            ++checked;
            const int k = octa_op(i, j);
            if (conjugate(f(i), f(j)) != f(k))
                return R::reject("σ_" + std::to_string(i) + " ▷ σ_" + std::to_string(j) + " ≠ σ_" + std::to_string(k),
                                 checked);
        }
    }
    octa_consequences(f);
    return R::accept(std::move(f), checked);
}

/// Checks only σ_1 ▷ σ_j for j = 2..6 and σ_2 ▷ σ_j for j ∈ {1,3,4,5,6}. These
/// generate the whole table, so an accepted family that then fails the full
/// 36 relations is a DefectError.
template <GroupElement G>
Checked<OctaFamily<G>> octa_from_reduced(const std::vector<G>& members)
{
    using R = Checked<OctaFamily<G>>;
    if (members.size() != 6)
        return R::reject("expected 6 members, got " + std::to_string(members.size()));
    if (auto dup = detail::first_octa_duplicate(members))
        return R::reject("members not distinct: " + *dup);
    static constexpr std::array<std::array<int, 3>, 10> reduced{{
        {1, 2, 5}, {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 6, 6},
        {2, 1, 3}, {2, 3, 6}, {2, 4, 4}, {2, 5, 1}, {2, 6, 5},
    }};
    const auto at = [&](int i) -> const G& { return members[static_cast<std::size_t>(i - 1)]; };
    std::size_t checked = 0;
    for (const auto& [i, j, k] : reduced) {
        ++checked;
        if (conjugate(at(i), at(j)) != at(k))
            return R::reject("σ_" + std::to_string(i) + " ▷ σ_" + std::to_string(j) + " ≠ σ_" + std::to_string(k),
                             checked);
    }
    auto full = verify_octa(members);
    require_identity(full.value.has_value(), "reduced identities hold but " + full.diagnosis.message);
    return R::accept(std::move(*full.value), checked);
}

/// Both families of type 𝔒, twelve distinct members, the 72 cross relations
/// σ_i ▷ τ_j = τ_{i▷j}, τ_i ▷ σ_j = σ_{i▷j} and, when g is given, g ▷ σ_1 = τ_1.
/// Accepted pairs are checked against the six σ/τ product identities
/// (DefectError on failure).
template <GroupElement G>
Checked<Octa2Family<G>> verify_octa2(const std::vector<G>& sigma, const std::vector<G>& tau, std::optional<G> g)
{
    using R = Checked<Octa2Family<G>>;
    auto fs = verify_octa(sigma);
    if (!fs)
        return R::reject("σ: " + fs.diagnosis.message);
    auto ft = verify_octa(tau);
    if (!ft)
        return R::reject("τ: " + ft.diagnosis.message);
    Octa2Family<G> f{*fs.value, *ft.value, std::move(g)};
    std::size_t checked = fs.diagnosis.checked + ft.diagnosis.checked;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (f.sigma(i) == f.tau(j))
                return R::reject("σ_" + std::to_string(i) + " = τ_" + std::to_string(j), checked);
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            checked += 2;
            const int k = octa_op(i, j);
            if (conjugate(f.sigma(i), f.tau(j)) != f.tau(k))
                return R::reject("σ_" + std::to_string(i) + " ▷ τ_" + std::to_string(j) + " ≠ τ_" + std::to_string(k),
                                 checked);
            if (conjugate(f.tau(i), f.sigma(j)) != f.sigma(k))
                return R::reject("τ_" + std::to_string(i) + " ▷ σ_" + std::to_string(j) + " ≠ σ_" + std::to_string(k),
                                 checked);
        }
    }
    if (f.g && conjugate(*f.g, f.sigma(1)) != f.tau(1))
        return R::reject("g ▷ σ_1 ≠ τ_1", checked);

    const auto& s = f.sigma;
    const auto& t = f.tau;
    const G common = s(1) * t(6);
    require_identity(s(6) * t(1) == common, "σ_6τ_1 ≠ σ_1τ_6");
    require_identity(s(2) * t(4) == common, "σ_2τ_4 ≠ σ_1τ_6");
    require_identity(s(4) * t(2) == common, "σ_4τ_2 ≠ σ_1τ_6");
    require_identity(s(3) * t(5) == common, "σ_3τ_5 ≠ σ_1τ_6");
    require_identity(s(5) * t(3) == common, "σ_5τ_3 ≠ σ_1τ_6");
    const G quotient = s(1).inverse() * t(1);
    for (int j = 2; j <= 6; ++j)
        require_identity(s(j).inverse() * t(j) == quotient, "σ_" + std::to_string(j) + "⁻¹τ_" + std::to_string(j) +
                                                                 " ≠ σ_1⁻¹τ_1");
    const G t2m2 = group_power(t(2), -2);
    const G s2m2 = group_power(s(2), -2);
    require_identity(t2m2 * s(5) * t(5) == t(1).inverse() * s(6), "τ_2⁻²σ_5τ_5 ≠ τ_1⁻¹σ_6");
    require_identity(t2m2 * s(3) * t(3) == s(1) * t(6).inverse(), "τ_2⁻²σ_3τ_3 ≠ σ_1τ_6⁻¹");
    require_identity(s2m2 * s(5) * t(5) == group_power(s(1), -2) * t(1) * s(6), "σ_2⁻²σ_5τ_5 ≠ σ_1⁻²τ_1σ_6");
    require_identity(s2m2 * s(3) * t(3) == t(1) * s(6).inverse(), "σ_2⁻²σ_3τ_3 ≠ τ_1σ_6⁻¹");
    return R::accept(std::move(f), checked);
}

/// g_1 = σ_1, g_2 = σ_5, g_3 = σ_2, g_4 = σ_3, g_5 = σ_4, g_6 = σ_2²σ_1,
/// g_7 = gσ_1, g_8 = τ_5g, g_9 = τ_2g, g_10 = τ_3g, g_11 = τ_4g, g_12 = τ_2²gσ_1.
/// Throws InputError without a transporter g.
template <GroupElement G>
OctaTransporters<G> octa_transporters(const Octa2Family<G>& f)
{
    if (!f.g)
        throw InputError("octa transporters need g with g ▷ σ_1 = τ_1");
    const auto& s = f.sigma;
    const auto& t = f.tau;
    const G& g = *f.g;
    OctaTransporters<G> tr{{s(1), s(5), s(2), s(3), s(4), s(2) * s(2) * s(1), g * s(1), t(5) * g, t(2) * g, t(3) * g,
                            t(4) * g, t(2) * t(2) * g * s(1)}};
    for (int k = 1; k <= 12; ++k)
        require_identity(conjugate(tr(k), s(1)) == f.member(k), "g_" + std::to_string(k) + " ▷ σ_1 ≠ " +
                                                                    detail::octa_name(k));
    return tr;
}

/// For every (i, j) ∈ {1..12}², writes g_{i▷j}⁻¹ x_i g_j (x_i the i-th member)
/// over the basis of its class with total length at most `max_length`,
/// preferring shorter words. Rejected when some twist has no such word.
/// A twist that only admits even exponent sums is a DefectError.
template <GroupElement G>
Checked<OctaTwistReport> octa_twist_suite(const Octa2Family<G>& f, int max_length = 8)
{
    using R = Checked<OctaTwistReport>;
    const auto tr = octa_transporters(f);
    const G& g = *f.g;
    const G gi = g.inverse();
    const G e = g.identity();
    const std::array<std::array<G, 3>, 4> bases{{
        {f.sigma(1), f.sigma(6), e},
        {f.sigma(1), gi * f.tau(6) * g, e},
        {f.sigma(1), gi * f.sigma(1) * g, gi * f.sigma(6) * g},
        {f.sigma(1), f.tau(1), f.sigma(6)},
    }};
    const int n = max_length;
    // powers[c][b][e + n] = basis element b of class c to the power e
    std::array<std::array<std::vector<G>, 3>, 4> powers;
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t b = 0; b < 3; ++b)
            for (int e = -n; e <= n; ++e)
                powers[c][b].push_back(group_power(bases[c][b], e));

    OctaTwistReport report;
    std::size_t checked = 0;
    for (int i = 1; i <= 12; ++i) {
        for (int j = 1; j <= 12; ++j) {
            ++checked;
            const int k = octa2_op(i, j);
            const G twist = tr(k).inverse() * f.member(i) * tr(j);
            const bool left_sigma = i <= 6;
            const bool right_sigma = j <= 6;
            const TwistClass cls = left_sigma == right_sigma ? (left_sigma ? TwistClass::A : TwistClass::B)
                                                             : (left_sigma ? TwistClass::C : TwistClass::D);
            const auto c = static_cast<std::size_t>(cls);
            const int third = cls == TwistClass::A || cls == TwistClass::B ? 0 : n;
            std::optional<TwistFactor> odd_hit;
            bool even_hit = false;
            for (int len = 0; len <= n && !odd_hit; ++len) {
                for (int e0 = -len; e0 <= len && !odd_hit; ++e0) {
                    const int rest = len - std::abs(e0);
                    for (int e1 = -rest; e1 <= rest && !odd_hit; ++e1) {
                        const int left = rest - std::abs(e1);
                        if (left > third)
                            continue;
                        for (int e2 : {-left, left}) {
                            const G w = powers[c][0][static_cast<std::size_t>(e0 + n)] *
                                        powers[c][1][static_cast<std::size_t>(e1 + n)] *
                                        powers[c][2][static_cast<std::size_t>(e2 + n)];
                            if (w == twist) {
                                TwistFactor tf{i, j, cls, {e0, e1, e2}};
                                if (tf.odd()) {
                                    odd_hit = tf;
                                    break;
                                }
                                even_hit = true;
                            }
                            if (left == 0)
                                break;
                        }
                    }
                }
            }
            if (!odd_hit) {
                require_identity(!even_hit, "twist (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") has only even exponent sums");
                return R::reject("twist (" + std::to_string(i) + ", " + std::to_string(j) + ") of class " +
                                     to_string(cls) + " has no word of length ≤ " + std::to_string(n),
                                 checked);
            }
            ++report.per_class[c];
            report.max_length = std::max(report.max_length, odd_hit->length());
            report.twists.push_back(*odd_hit);
        }
    }
    return R::accept(std::move(report), checked);
}

} // namespace rackcert
