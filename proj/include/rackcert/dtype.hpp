#pragma once

// Families of type D_p (dihedral-shaped subracks μ_i ▷ μ_j = μ_{2i-j}) and
// D_p^(2) (two such families with the cross relations of the rack X_p),
// verified inside an arbitrary concrete group.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rackcert/errors.hpp"
#include "rackcert/group.hpp"

namespace rackcert {

/// Residue of i modulo n in [0, n).
inline int mod_index(std::int64_t i, int n)
{
    std::int64_t r = i % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

/// i / 2 in ℤ/p for odd p.
inline int half_index(std::int64_t i, int p)
{
    return mod_index(i * ((p + 1) / 2), p);
}

inline bool is_odd_prime(int p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

template <GroupElement G>
struct DpFamily {
    int p = 0;
    std::vector<G> members; // members[i] = μ_i, i ∈ ℤ/p

    const G& operator[](std::int64_t i) const { return members[static_cast<std::size_t>(mod_index(i, p))]; }
    friend bool operator==(const DpFamily&, const DpFamily&) = default;
};

template <GroupElement G>
struct Dp2Family {
    DpFamily<G> mu;
    DpFamily<G> nu;
    std::optional<G> g_inf; // g_inf ▷ μ_0 = ν_0 when present

    int p() const { return mu.p; }
    friend bool operator==(const Dp2Family&, const Dp2Family&) = default;
};

/// g_i = μ_{i/2} and f_i = ν_{i/2} g_inf, so g_i ▷ μ_0 = μ_i and f_i ▷ μ_0 = ν_i.
template <GroupElement G>
struct DpTransporters {
    std::vector<G> g;
    std::vector<G> f;
};

/// Common values of the twists α_ij, β_ij, γ_ij, δ_ij over all (i, j).
template <GroupElement G>
struct TransporterCocycleReport {
    G alpha;
    G beta;
    G gamma;
    G delta;
};

namespace detail {

template <GroupElement G>
std::optional<std::string> first_duplicate(const std::vector<G>& xs, const char* name)
{
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            if (xs[a] == xs[b])
                return std::string(name) + "_" + std::to_string(a) + " = " + name + "_" + std::to_string(b);
    return std::nullopt;
}

/// Identities implied by the dihedral law: inverses and odd powers (k = 3)
/// behave like the members themselves.
template <GroupElement G>
void assert_dp_consequences(const DpFamily<G>& fam)
{
    const int p = fam.p;
    for (int i = 0; i < p; ++i) {
        const G inv_i = fam[i].inverse();
        const G cube_i = group_power(fam[i], 3);
        for (int j = 0; j < p; ++j) {
            const int k = mod_index(2 * i - j, p);
            const G inv_j = fam[j].inverse();
            const G inv_k = fam[k].inverse();
            require_identity(conjugate(inv_i, fam[j]) == fam[k], "μ_i⁻¹ ▷ μ_j ≠ μ_{2i-j}");
            require_identity(conjugate(fam[i], inv_j) == inv_k, "μ_i ▷ μ_j⁻¹ ≠ μ_{2i-j}⁻¹");
            require_identity(conjugate(inv_i, inv_j) == inv_k, "μ_i⁻¹ ▷ μ_j⁻¹ ≠ μ_{2i-j}⁻¹");
            const G cube_j = group_power(fam[j], 3);
            const G cube_k = group_power(fam[k], 3);
            require_identity(conjugate(cube_i, fam[j]) == fam[k], "μ_i³ ▷ μ_j ≠ μ_{2i-j}");
            require_identity(conjugate(fam[i], cube_j) == cube_k, "μ_i ▷ μ_j³ ≠ μ_{2i-j}³");
            require_identity(conjugate(cube_i, cube_j) == cube_k, "μ_i³ ▷ μ_j³ ≠ μ_{2i-j}³");
        }
    }
}

/// Product rules of a D_p^(2) family written for (a, b); called with (μ, ν)
/// and (ν, μ).
template <GroupElement G>
void assert_product_rules(const DpFamily<G>& a, const DpFamily<G>& b, const char* tag)
{
    const int p = a.p;
    const std::string where = std::string(" [") + tag + "]";
    const G a_sq = a[0] * a[0];
    const G ab0 = a[0] * b[0];
    for (int i = 0; i < p; ++i) {
        require_identity(a[i] * a[i] == a_sq, "squares not constant" + where);
        require_identity(a[i] * b[i] == ab0, "a_i b_i ≠ a_0 b_0" + where);
        for (int j = 0; j < p; ++j)
            require_identity(commute(a[i] * a[i], b[j]), "a_i² does not commute with b_j" + where);
    }
    for (int t = 0; t <= 2 && t < p; ++t) {
        for (int k = 0; k < p; ++k) {
            for (int l = 0; l < p; ++l) {
                const std::int64_t d = l - k;
                require_identity(a[k] * a[l] == a[t * d + k] * a[t * d + l], "product rule (i)" + where);
                require_identity(a[k] * b[l] == a[2 * t * d + k] * b[2 * t * d + l], "product rule (ii)" + where);
                require_identity(a[k] * b[l] == b[(2 * t + 1) * d + k] * a[(2 * t + 1) * d + l],
                                 "product rule (iii)" + where);
            }
        }
    }
}

} // namespace detail

/// Checks distinctness and all p² relations μ_i ▷ μ_j = μ_{2i-j}. On success
/// also asserts the inverse and odd-power laws (defects if they fail).
template <GroupElement G>
Checked<DpFamily<G>> verify_dp(std::vector<G> members, int p)
{
    using R = Checked<DpFamily<G>>;
    if (p < 2)
        return R::reject("p must be at least 2");
    if (members.size() != static_cast<std::size_t>(p))
        return R::reject("expected " + std::to_string(p) + " members, got " + std::to_string(members.size()));
    if (auto dup = detail::first_duplicate(members, "μ"))
        return R::reject("members not distinct: " + *dup);
    DpFamily<G> fam{p, std::move(members)};
    std::size_t checked = 0;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            ++checked;
            if (conjugate(fam[i], fam[j]) != fam[2 * i - j])
                return R::reject("μ_" + std::to_string(i) + " ▷ μ_" + std::to_string(j) + " ≠ μ_" +
                                     std::to_string(mod_index(2 * i - j, p)),
                                 checked);
        }
    }
    detail::assert_dp_consequences(fam);
    return R::accept(std::move(fam), checked);
}

/// Checks both D_p laws, the 2p² cross relations μ_i ▷ ν_j = ν_{2i-j},
/// ν_i ▷ μ_j = μ_{2i-j}, disjointness and, when given, g_inf ▷ μ_0 = ν_0.
/// For odd p the square and product identities of D_p^(2) families are
/// asserted on success.
template <GroupElement G>
Checked<Dp2Family<G>> verify_dp2(std::vector<G> mu, std::vector<G> nu, std::optional<G> g_inf, int p)
{
    using R = Checked<Dp2Family<G>>;
    auto fm = verify_dp(std::move(mu), p);
    if (!fm)
        return R::reject("μ: " + fm.diagnosis.message);
    auto fn = verify_dp(std::move(nu), p);
    if (!fn)
        return R::reject("ν: " + fn.diagnosis.message);
    Dp2Family<G> fam{*fm.value, *fn.value, std::move(g_inf)};
    std::size_t checked = fm.diagnosis.checked + fn.diagnosis.checked;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (fam.mu[i] == fam.nu[j])
                return R::reject("μ_" + std::to_string(i) + " = ν_" + std::to_string(j), checked);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            checked += 2;
            const int k = mod_index(2 * i - j, p);
            if (conjugate(fam.mu[i], fam.nu[j]) != fam.nu[k])
                return R::reject("μ_" + std::to_string(i) + " ▷ ν_" + std::to_string(j) + " ≠ ν_" + std::to_string(k),
                                 checked);
            if (conjugate(fam.nu[i], fam.mu[j]) != fam.mu[k])
                return R::reject("ν_" + std::to_string(i) + " ▷ μ_" + std::to_string(j) + " ≠ μ_" + std::to_string(k),
                                 checked);
        }
    }
    if (fam.g_inf && conjugate(*fam.g_inf, fam.mu[0]) != fam.nu[0])
        return R::reject("g_inf ▷ μ_0 ≠ ν_0", checked);
    if (p % 2 == 1) {
        detail::assert_product_rules(fam.mu, fam.nu, "μ,ν");
        detail::assert_product_rules(fam.nu, fam.mu, "ν,μ");
        const G nu_mu = fam.nu[0] * fam.mu[0];
        for (int i = 0; i < p; ++i)
            require_identity(fam.nu[i] * fam.mu[i] == nu_mu, "ν_i μ_i ≠ ν_0 μ_0");
    }
    return R::accept(std::move(fam), checked);
}

/// Three-condition test for σ_3 := σ_1 ▷ σ_2 to complete a D_3 family:
/// σ_1 does not commute with σ_2, σ_1² does, and σ_1 = σ_2 ▷ (σ_1 ▷ σ_2).
template <GroupElement G>
Checked<DpFamily<G>> d3_characterize(const G& s1, const G& s2)
{
    using R = Checked<DpFamily<G>>;
    if (s1 == s2)
        return R::reject("seeds coincide");
    if (commute(s1, s2))
        return R::reject("σ_1 commutes with σ_2", 1);
    if (!commute(s1 * s1, s2))
        return R::reject("σ_1² does not commute with σ_2", 2);
    const G s3 = conjugate(s1, s2);
    if (conjugate(s2, s3) != s1)
        return R::reject("σ_2 ▷ (σ_1 ▷ σ_2) ≠ σ_1", 3);
    // Equivalent to verify_dp by the characterization; the full check runs
    // anyway and any disagreement is a defect.
    auto full = verify_dp<G>({s1, s2, s3}, 3);
    require_identity(full.value.has_value(), "three-condition test accepted a non-D_3 triple");
    return R::accept(*full.value, 3);
}

/// Grows μ_0, μ_1 by μ_{i+1} := μ_i ▷ μ_{i-1} and verifies the result.
template <GroupElement G>
Checked<DpFamily<G>> extend_dp_seed(const G& mu0, const G& mu1, int p)
{
    using R = Checked<DpFamily<G>>;
    if (mu0 == mu1)
        return R::reject("seeds coincide");
    if (p < 2)
        return R::reject("p must be at least 2");
    std::vector<G> members{mu0, mu1};
    while (members.size() < static_cast<std::size_t>(p)) {
        G next = conjugate(members.back(), members[members.size() - 2]);
        for (const auto& m : members)
            if (m == next)
                return R::reject("recursion collided after " + std::to_string(members.size()) + " members");
        members.push_back(std::move(next));
    }
    members.resize(static_cast<std::size_t>(p));
    return verify_dp(std::move(members), p);
}

/// The D_p^(2) family (μ, μ^k) for odd k with μ_0^k ≠ μ_0 conjugate to μ_0;
/// g_inf comes from `find_conjugator(μ_0, μ_0^k)`.
template <GroupElement G>
    requires requires(const G& a) {
        { find_conjugator(a, a) } -> std::same_as<std::optional<G>>;
    }
Checked<Dp2Family<G>> power_companion(const DpFamily<G>& fam, std::int64_t k)
{
    using R = Checked<Dp2Family<G>>;
    if (k % 2 == 0)
        return R::reject("k must be odd");
    const auto order = element_order(fam[0]);
    if (!order)
        return R::reject("order of μ_0 not found");
    if (k <= 1 || k >= *order)
        return R::reject("k must satisfy 1 < k < |μ_0| = " + std::to_string(*order));
    const G mu0k = group_power(fam[0], k);
    if (mu0k == fam[0])
        return R::reject("μ_0^k = μ_0");
    auto g_inf = find_conjugator(fam[0], mu0k);
    if (!g_inf)
        return R::reject("μ_0^k is not conjugate to μ_0");
    std::vector<G> nu;
    for (const auto& m : fam.members)
        nu.push_back(group_power(m, k));
    return verify_dp2(fam.members, std::move(nu), std::move(g_inf), fam.p);
}

/// Reduced D_3^(2) test: the three D_3 identities for σ and for τ,
/// σ_1 ▷ τ_1 = τ_1, σ_2 ▷ τ_1 = τ_3 and τ_1 ▷ σ_2 = σ_3. Acceptance is
/// followed by the full verifier; disagreement is a defect.
template <GroupElement G>
Checked<Dp2Family<G>> nine_identity_d3sq(const std::array<G, 3>& sigma, const std::array<G, 3>& tau)
{
    using R = Checked<Dp2Family<G>>;
    std::vector<G> all{sigma[0], sigma[1], sigma[2], tau[0], tau[1], tau[2]};
    if (detail::first_duplicate(all, "x"))
        return R::reject("the six elements are not distinct");
    struct Identity {
        const char* name;
        const G& lhs_a;
        const G& lhs_b;
        const G& rhs;
    };
    const std::array<Identity, 9> identities{{
        {"σ_1 ▷ σ_2 = σ_3", sigma[0], sigma[1], sigma[2]},
        {"σ_1 ▷ σ_3 = σ_2", sigma[0], sigma[2], sigma[1]},
        {"σ_2 ▷ σ_3 = σ_1", sigma[1], sigma[2], sigma[0]},
        {"τ_1 ▷ τ_2 = τ_3", tau[0], tau[1], tau[2]},
        {"τ_1 ▷ τ_3 = τ_2", tau[0], tau[2], tau[1]},
        {"τ_2 ▷ τ_3 = τ_1", tau[1], tau[2], tau[0]},
        {"σ_1 ▷ τ_1 = τ_1", sigma[0], tau[0], tau[0]},
        {"σ_2 ▷ τ_1 = τ_3", sigma[1], tau[0], tau[2]},
        {"τ_1 ▷ σ_2 = σ_3", tau[0], sigma[1], sigma[2]},
    }};
    std::size_t checked = 0;
    for (const auto& id : identities) {
        ++checked;
        if (conjugate(id.lhs_a, id.lhs_b) != id.rhs)
            return R::reject(std::string("identity fails: ") + id.name, checked);
    }
    auto full = verify_dp2<G>({sigma[0], sigma[1], sigma[2]}, {tau[0], tau[1], tau[2]}, std::nullopt, 3);
    require_identity(full.value.has_value(), "nine identities hold but the full D_3^(2) check fails: " +
                                                 full.diagnosis.message);
    return R::accept(*full.value, checked);
}

template <GroupElement G>
DpTransporters<G> dp_transporters(const Dp2Family<G>& fam)
{
    const int p = fam.p();
    if (p % 2 == 0)
        throw InputError("transporters need odd p");
    if (!fam.g_inf)
        throw InputError("transporters need g_inf");
    DpTransporters<G> t;
    for (int i = 0; i < p; ++i) {
        t.g.push_back(fam.mu[half_index(i, p)]);
        t.f.push_back(fam.nu[half_index(i, p)] * *fam.g_inf);
    }
    for (int i = 0; i < p; ++i) {
        require_identity(conjugate(t.g[static_cast<std::size_t>(i)], fam.mu[0]) == fam.mu[i], "g_i ▷ μ_0 ≠ μ_i");
        require_identity(conjugate(t.f[static_cast<std::size_t>(i)], fam.mu[0]) == fam.nu[i], "f_i ▷ μ_0 ≠ ν_i");
    }
    return t;
}

/// Computes α_ij = g_{i▷j}⁻¹ μ_i g_j, β_ij = f_{i▷j}⁻¹ μ_i f_j,
/// γ_ij = g_{i▷j}⁻¹ ν_i g_j, δ_ij = f_{i▷j}⁻¹ ν_i f_j for every (i, j) and
/// asserts α = δ = μ_0, β = g_inf⁻¹ μ_0 g_inf, γ = ν_0 throughout.
/// Requires odd prime p and g_inf.
template <GroupElement G>
TransporterCocycleReport<G> transporter_cocycle_report(const Dp2Family<G>& fam)
{
    const int p = fam.p();
    if (!is_odd_prime(p))
        throw InputError("transporter report needs an odd prime p");
    const auto t = dp_transporters(fam);
    const G& ginf = *fam.g_inf;
    TransporterCocycleReport<G> r{fam.mu[0], ginf.inverse() * fam.mu[0] * ginf, fam.nu[0], fam.mu[0]};
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const auto ij = static_cast<std::size_t>(mod_index(2 * i - j, p));
            const auto jj = static_cast<std::size_t>(j);
            require_identity(t.g[ij].inverse() * fam.mu[i] * t.g[jj] == r.alpha, "α_ij ≠ μ_0");
            require_identity(t.f[ij].inverse() * fam.mu[i] * t.f[jj] == r.beta, "β_ij ≠ g_inf⁻¹ μ_0 g_inf");
            require_identity(t.g[ij].inverse() * fam.nu[i] * t.g[jj] == r.gamma, "γ_ij ≠ ν_0");
            require_identity(t.f[ij].inverse() * fam.nu[i] * t.f[jj] == r.delta, "δ_ij ≠ μ_0");
        }
    }
    return r;
}

} // namespace rackcert
