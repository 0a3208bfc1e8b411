#pragma once

// Explicit D_3, D_p and D_3^(2) families inside conjugacy classes of S_m.
// Every builder throws InputError when the cycle type does not meet its
// hypotheses and DefectError when a family it builds fails verification.

#include <cstdint>
#include <optional>
#include <string>

#include "rackcert/dtype.hpp"
#include "rackcert/otype.hpp"
#include "rackcert/perm.hpp"

namespace rackcert {

/// First cycle of length j (smallest minimal point), written from its minimum.
std::optional<std::vector<int>> first_cycle_of_length(const Permutation& sigma, int j);

/// σ_i = P^{iκ} σ P^{−iκ} on the first j-cycle, with ν_i = σ_i⁻¹ and
/// g_inf conjugating σ onto σ⁻¹. Needs 2p | j, j ≠ 4 and a j-cycle in σ.
Dp2Family<Permutation> sym_dp2_split(const Permutation& sigma, int j, int p);

/// σ, P^k σ P^{−k}, P^{−k} σ P^k built on the first three j-cycles, j = 2k ≥ 4.
DpFamily<Permutation> sym_d3_three_even_cycles(const Permutation& sigma, int j);

/// σ, yα, zα from three transpositions of σ, α = xσ. Needs n_2 ≥ 3 and a
/// cycle of length at least 3.
DpFamily<Permutation> sym_d3_involution_plus(const Permutation& sigma);

/// xβ, yβ, zβ with x = (a b) a transposition of σ, c a fixed point,
/// y = (a c), z = (b c) and β = xσ. Needs n_1, n_2 ≥ 1 and a cycle of
/// length at least 3.
DpFamily<Permutation> sym_d3_transposition_triple(const Permutation& sigma);

enum class SextupleVariant { Plain, Bar };

struct SextupleFamily {
    SextupleVariant variant = SextupleVariant::Plain;
    Dp2Family<Permutation> family; // g_inf = the transporter g (or ḡ)
    Permutation g;
    Permutation x;     // product of the six transpositions
    Permutation alpha; // xσ
    Permutation B;     // (i_1 i_3)(i_2 i_4)(i_5 i_7)(i_6 i_8)(i_9 i_11)(i_10 i_12)
};

/// The two D_3^(2) sextuples on the first six transpositions of σ, with
/// g ▷ σ = τ_1 and the product identities
///   plain: τ_1 = σB = gσg,  σ_2τ_2 = Bα²,  g commutes with σ_2τ_2,
///   bar:   τ_1 = Bα = gσg,  σ_2τ_2 = xBα², g commutes with σ_2τ_2.
/// Needs n_2 ≥ 6.
SextupleFamily sym_d3sq_six_transpositions(const Permutation& sigma, SextupleVariant variant);

std::string to_string(SextupleVariant v);

struct D3SearchResult {
    std::optional<DpFamily<Permutation>> family;
    std::size_t tried = 0;
    bool budget_exhausted = false;
};

/// Breadth-first walk through the class of `s1` by transposition conjugation,
/// testing each new s2 with the three-condition D_3 test. At most `budget`
/// candidates are examined, in a fixed order.
D3SearchResult sym_d3_search(const Permutation& s1, std::size_t budget = 50000);

struct EightCycleFamily {
    Octa2Family<Permutation> family; // g ▷ σ = σ⁵
    int d = 3;                       // σ_6 = σ_1^d
    int e = 5;                       // τ_1 = σ_1^e
};

/// The 𝔒^(2) family on the 8-cycles of σ, for σ of type (1^a, 2^b, 8) or
/// (1^a, 2^b, 8²): σ_1 = σ, σ_6 = σ³, τ_1 = σ⁵, τ_6 = σ⁻¹ and the remaining
/// members are fixed relabelings of each 8-cycle times α = σA_8⁻¹. With
/// three or more 8-cycles use `sym_d3_three_even_cycles(sigma, 8)`.
EightCycleFamily sym_o2_8cycle(const Permutation& sigma);

struct OctaCycleSearch {
    std::optional<OctaFamily<Permutation>> family;
    std::size_t examined = 0;
};

/// Looks for a family of type 𝔒 with σ_1 = (1 2 … N) in S_N, N ∈ {8, 16, 32}.
/// Every σ_2 in the centralizer of σ⁴ with σ_2⁴ = σ⁴ is tried; the other
/// members are then forced (σ_5 = σ_1 ▷ σ_2, σ_4 = σ_1 ▷ σ_5, σ_3 = σ_2 ▷ σ_1,
/// σ_6 = σ_2 ▷ σ_3).
OctaCycleSearch octa_search_full_cycle(int n);

} // namespace rackcert
