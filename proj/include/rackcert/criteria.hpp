#pragma once

// Decision engine: turns verified families into certificates that a class
// carries only infinite-dimensional Nichols algebras (for all ρ, or for the
// ρ with q_ss = −1), and re-verifies such certificates from scratch.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rackcert/braided.hpp"
#include "rackcert/dtype.hpp"
#include "rackcert/matgrp.hpp"
#include "rackcert/otype.hpp"
#include "rackcert/perm.hpp"

namespace rackcert {

inline constexpr const char* kToolVersion = "0.1.0";

enum class VerdictKind { InfiniteAllReps, InfiniteWhenQMinusOne, NoCriterion };

std::string to_string(VerdictKind k);
/// Throws InputError for an unknown name.
VerdictKind parse_verdict(const std::string& name);

struct Verdict {
    VerdictKind kind = VerdictKind::NoCriterion;
    std::vector<std::string> basis;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

using Element = std::variant<Permutation, PrimeFieldMatrix>;

/// A conjugacy class of S_m ("sym:<m>", label = cycle type) or of GL(n, p)
/// ("gl:<n>:<p>", label "diag:λ_1,…,λ_n" or "antidiag:c" for the class of
/// [[0, 1], [c, 0]]).
struct ClassRef {
    std::string group;
    std::string label;
    Element representative;
    std::int64_t element_order = 1;
    bool is_real = true;
    std::optional<std::uint64_t> size;

    friend bool operator==(const ClassRef&, const ClassRef&) = default;
};

using Witness = std::variant<DpFamily<Permutation>, Dp2Family<Permutation>, Octa2Family<Permutation>,
                             DpFamily<PrimeFieldMatrix>, Dp2Family<PrimeFieldMatrix>>;

struct Certificate {
    ClassRef cls;
    Verdict verdict;
    std::string construction; // which construction produced the witnesses
    std::vector<Witness> witnesses;
    std::optional<std::int64_t> k;  // μ_0^k ∈ O, μ_0^k ≠ μ_0
    std::optional<Element> transporter; // conjugates μ_0 onto μ_0^k
    std::optional<int> d;           // σ_6 = σ_1^d
    std::optional<int> e;           // τ_1 = σ_1^e
    std::vector<std::uint32_t> minus_one_twists; // GL: h with det^h(λ) = −1
    std::size_t search_tried = 0;
    std::string note;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Construction and basis names recorded in certificates.
namespace tag {
inline constexpr const char* identity = "identity";
inline constexpr const char* odd_order = "odd-order-lemma";
inline constexpr const char* dp_split = "dp-split";
inline constexpr const char* transposition_triple = "transposition-triple";
inline constexpr const char* three_even_cycles = "three-even-cycles";
inline constexpr const char* involution_triple = "involution-triple";
inline constexpr const char* six_transpositions = "six-transpositions";
inline constexpr const char* eight_cycle = "eight-cycle";
inline constexpr const char* generic_search = "generic-d3-search";
inline constexpr const char* gl2_antidiagonal = "gl2-antidiagonal";
inline constexpr const char* gln_diagonal = "gln-diagonal";
inline constexpr const char* none = "none";
inline constexpr const char* dp_power = "dp-power-criterion";
inline constexpr const char* octa2_power = "octa2-power-criterion";
inline constexpr const char* dp2_transporter = "dp2-transporter-criterion";
inline constexpr const char* det_character = "det-character-criterion";
} // namespace tag

/// Verdict from the real/odd-order lemma alone: InfiniteAllReps for a real
/// class of odd order > 1, otherwise NoCriterion (the identity class is
/// reported as degenerate in the basis).
Verdict lemma_odd_verdict(std::int64_t element_order, bool is_real);
Verdict lemma_odd_verdict(const ClassData& c);

ClassRef sym_class_ref(std::size_t m, const CycleType& t);
/// Parses "diag:…" or "antidiag:c"; throws InputError on malformed labels.
ClassRef gl_class_ref(std::size_t n, std::uint32_t p, const std::string& label);

/// Whether `x` lies in the class.
bool in_class(const ClassRef& c, const Element& x);

/// D_p family plus an exponent k with μ_0^k ∈ O and μ_0^k ≠ μ_0. The verdict
/// is InfiniteWhenQMinusOne, upgraded to InfiniteAllReps for real classes.
/// Throws InputError when p is not an odd prime, μ_0 is outside the class
/// or k fails.
Certificate corollary_dp(const ClassRef& c, const DpFamily<Permutation>& fam, std::int64_t k,
                         const std::string& construction);
Certificate corollary_dp(const ClassRef& c, const DpFamily<PrimeFieldMatrix>& fam, std::int64_t k,
                         const std::string& construction);

/// 𝔒^(2) family with σ_6 = σ_1^d and τ_1 = σ_1^e; same verdict rule.
Certificate corollary_octa2(const ClassRef& c, const Octa2Family<Permutation>& fam, int d, int e,
                            const std::string& construction);

struct ClassifyOptions {
    std::size_t search_budget = 50000;
};

/// Tries, in order: identity, real odd order, dp-split, transposition
/// triple, three even cycles, involution triple, six transpositions,
/// eight-cycle, then the bounded D_3 search; NoCriterion if none applies.
Certificate classify_sym_class(std::size_t m, const CycleType& t, const ClassifyOptions& opts = {});

/// Odd order, then the antidiagonal D_3 family (n = 2) or the diagonal
/// D_3^(2) family (n ≥ 4); NoCriterion otherwise.
Certificate classify_gl_class(std::size_t n, std::uint32_t p, const std::string& label,
                              const ClassifyOptions& opts = {});

/// Re-derives the verdict from the certificate alone: class data, witness
/// verification, membership of every member, exponents, transporter and the
/// upgrade rule.
Diagnosis check_certificate(const Certificate& cert);
bool verify_certificate(const Certificate& cert);

struct Hypothesis {
    std::string name;      // "H3", …
    std::string statement; // e.g. "ρ(ν_0) = −1"
    std::optional<RootOfUnity> value;
    std::optional<bool> holds;
};

struct ConditionalReport {
    std::string family_kind; // "dp2" or "octa2"
    std::vector<Hypothesis> hypotheses;
    VerdictKind verdict = VerdictKind::NoCriterion;
};

template <GroupElement G>
using CharacterFn = std::function<std::optional<RootOfUnity>(const G&)>;

namespace detail {

template <GroupElement G>
ConditionalReport evaluate_hypotheses(std::string kind, std::vector<std::pair<std::string, std::string>> names,
                                      const std::vector<G>& elements, const CharacterFn<G>* chi)
{
    ConditionalReport rep{std::move(kind), {}, VerdictKind::NoCriterion};
    bool all = chi != nullptr;
    for (std::size_t i = 0; i < names.size(); ++i) {
        Hypothesis h{names[i].first, names[i].second, std::nullopt, std::nullopt};
        if (chi) {
            h.value = (*chi)(elements[i]);
            if (!h.value)
                throw InputError("character not evaluable for " + h.name + ": " + h.statement);
            h.holds = h.value->is_minus_one();
            all = all && *h.holds;
        }
        rep.hypotheses.push_back(std::move(h));
    }
    if (all)
        rep.verdict = VerdictKind::InfiniteWhenQMinusOne;
    return rep;
}

template <GroupElement G>
ConditionalReport dp2_report(const Dp2Family<G>& f, const CharacterFn<G>* chi)
{
    if (!f.g_inf)
        throw InputError("conditional report needs g_inf");
    const G& g = *f.g_inf;
    return evaluate_hypotheses<G>("dp2",
                                  {{"H3", "ρ(μ_0) = −1"},
                                   {"H4w", "ρ(g_inf⁻¹ μ_0 g_inf) = −1"},
                                   {"H4v", "ρ(ν_0) = −1"}},
                                  {f.mu[0], g.inverse() * f.mu[0] * g, f.nu[0]}, chi);
}

template <GroupElement G>
ConditionalReport octa2_report(const Octa2Family<G>& f, const CharacterFn<G>* chi)
{
    if (!f.g)
        throw InputError("conditional report needs g");
    const G& g = *f.g;
    return evaluate_hypotheses<G>("octa2",
                                  {{"H3", "ρ(σ_1) = −1"},
                                   {"H4", "ρ(σ_6) = −1"},
                                   {"H5", "ρ(τ_1) = −1"},
                                   {"H6", "ρ(g⁻¹σ_1g) = −1"},
                                   {"H7", "ρ(g⁻¹σ_6g) = −1"}},
                                  {f.sigma(1), f.sigma(6), f.tau(1), g.inverse() * f.sigma(1) * g,
                                   g.inverse() * f.sigma(6) * g},
                                  chi);
}

} // namespace detail

/// Scalar hypotheses for a degree-one ρ given by `chi` on the centralizer of
/// μ_0 (resp. σ_1). The verdict is InfiniteWhenQMinusOne only if all hold.
/// Throws InputError when `chi` cannot evaluate a required element.
template <GroupElement G>
ConditionalReport conditional_theorem_report(const Dp2Family<G>& f, const CharacterFn<G>& chi)
{
    return detail::dp2_report(f, &chi);
}

template <GroupElement G>
ConditionalReport conditional_theorem_report(const Octa2Family<G>& f, const CharacterFn<G>& chi)
{
    return detail::octa2_report(f, &chi);
}

/// The hypothesis list without values, for an unspecified ρ.
template <GroupElement G>
ConditionalReport conditional_theorem_report(const Dp2Family<G>& f)
{
    return detail::dp2_report<G>(f, nullptr);
}

template <GroupElement G>
ConditionalReport conditional_theorem_report(const Octa2Family<G>& f)
{
    return detail::octa2_report<G>(f, nullptr);
}

template <GroupElement G>
CharacterFn<G> character_fn(const Character<G>& chi)
{
    return [&chi](const G& x) { return chi.evaluate(x); };
}

} // namespace rackcert
