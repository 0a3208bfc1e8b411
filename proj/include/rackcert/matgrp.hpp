#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rackcert/dtype.hpp"
#include "rackcert/group.hpp"

namespace rackcert {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t n);
/// Smallest generator of GF(p)^×.
std::uint32_t primitive_root(std::uint32_t p);
/// Smallest ω in GF(p) with ω³ = 1, ω ≠ 1; empty when 3 ∤ p − 1.
std::optional<std::uint32_t> primitive_cube_root(std::uint32_t p);

/// Invertible n×n matrix over GF(p), p < 2^31.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix() = default; // 1×1 identity over GF(2)

    /// Entries are reduced mod p; throws InputError on a bad modulus, ragged
    /// rows or a singular matrix.
    static PrimeFieldMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
    static PrimeFieldMatrix identity_matrix(std::uint32_t p, std::size_t n);
    static PrimeFieldMatrix diagonal(std::uint32_t p, const std::vector<std::int64_t>& values);
    /// Block diagonal a ⊕ b.
    static PrimeFieldMatrix direct_sum(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

    std::uint32_t modulus() const { return p_; }
    std::size_t dim() const { return n_; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    std::vector<std::vector<std::int64_t>> rows() const;

    PrimeFieldMatrix operator*(const PrimeFieldMatrix& other) const;
    PrimeFieldMatrix inverse() const;
    PrimeFieldMatrix identity() const { return identity_matrix(p_, n_); }
    bool is_identity() const;
    std::uint32_t det() const;
    std::uint32_t trace() const;
    /// Coefficients of det(xI − A), lowest degree first; monic of length n + 1.
    std::vector<std::uint32_t> characteristic_polynomial() const;

    std::string to_string() const;

    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;
    friend auto operator<=>(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    PrimeFieldMatrix(std::uint32_t p, std::size_t n, std::vector<std::uint32_t> entries)
        : p_(p), n_(n), entries_(std::move(entries))
    {
    }
    static void check_modulus(std::uint32_t p);
    void check_compatible(const PrimeFieldMatrix& other) const;

    std::uint32_t p_ = 2;
    std::size_t n_ = 1;
    std::vector<std::uint32_t> entries_{1};
};

static_assert(GroupElement<PrimeFieldMatrix>);

/// Character A ↦ φ(det A)^h with φ(γ) = e^{2πi/(p−1)} for the fixed generator γ.
class DetCharacter {
public:
    /// Throws InputError for p = 2, p > 10^4, composite p or a non-generator γ.
    /// Without γ the smallest primitive root is used.
    static DetCharacter make(std::uint32_t p, std::int64_t h, std::optional<std::uint32_t> generator = std::nullopt);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t generator() const { return gamma_; }
    std::int64_t twist() const { return h_; }
    /// Order of the value group, p − 1.
    std::uint32_t value_order() const { return p_ - 1; }
    /// dlog_γ(x) for x ∈ GF(p)^×.
    std::uint32_t dlog(std::uint32_t x) const;
    /// Exponent of χ(x) for a scalar x, in ℤ/(p−1).
    std::uint32_t scalar_exponent(std::uint32_t x) const;

private:
    std::uint32_t p_ = 3;
    std::uint32_t gamma_ = 2;
    std::int64_t h_ = 0;
    std::shared_ptr<const std::vector<std::uint32_t>> dlog_;
};

/// Exponent of χ(a) in ℤ/(p−1); the value is −1 iff it equals (p−1)/2.
std::uint32_t det_char_value(const DetCharacter& chi, const PrimeFieldMatrix& a);

/// μ_i = [[0, ω^i], [ω^{2i} c, 0]], verified as a D_3 family.
DpFamily<PrimeFieldMatrix> gl2_d3_family(std::uint32_t p, std::uint32_t omega, std::int64_t c);

struct GlnFamily {
    Dp2Family<PrimeFieldMatrix> family; // g_inf holds the swap g
    PrimeFieldMatrix g;
    std::uint32_t c = 0;
    std::uint32_t omega = 0;
    std::vector<std::uint32_t> lambda;
};

/// σ_i = μ_i ⊕ diag(λ_3, λ_4, …), τ_i = μ_i ⊕ diag(λ_4, λ_3, …) with
/// c = λ_1², verified as a D_3^(2) family in the class of diag(λ).
GlnFamily gln_d3sq_family(std::uint32_t p, std::uint32_t omega, const std::vector<std::int64_t>& lambda);

/// Which twists h make χ = φ(det^h) send λ to −1 (the hypothesis under which
/// the class of λ carries an infinite-dimensional Nichols algebra).
struct GlnCriterionReport {
    std::uint32_t p = 0;
    std::uint32_t generator = 0;
    std::uint32_t det_lambda = 0;
    std::uint32_t dlog_det = 0;
    std::vector<std::uint32_t> minus_one_twists; // h ∈ [0, p−1) with χ(λ) = −1
};

GlnCriterionReport gln_criterion_report(std::uint32_t p, const std::vector<std::int64_t>& lambda,
                                        std::optional<std::uint32_t> generator = std::nullopt);

/// Some g with g a g⁻¹ = b, from the solution space of g a = b g. Throws
/// InputError when that space has more than `limit` points.
std::optional<PrimeFieldMatrix> find_gl_conjugator(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b,
                                                   std::uint64_t limit = 1'000'000);

inline std::optional<PrimeFieldMatrix> find_conjugator(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b)
{
    return find_gl_conjugator(a, b);
}

/// Whether x is diagonalizable with exactly these eigenvalues (with
/// multiplicity), i.e. conjugate to diag(eigenvalues).
bool is_diagonalizable_with(const PrimeFieldMatrix& x, const std::vector<std::uint32_t>& eigenvalues);

} // namespace rackcert
