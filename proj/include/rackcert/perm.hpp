#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackcert/group.hpp"

namespace rackcert {

class Permutation;

/// Cycle type (1^{n_1}, 2^{n_2}, ..., m^{n_m}) of a permutation of degree m.
/// Text form is caret-multiplicity, comma separated, exponent 1 omitted:
/// "1^2,2,3" for one fixed pair of points, a transposition and a 3-cycle.
class CycleType {
public:
    CycleType() = default;
    /// `parts` are cycle lengths (fixed points included as 1); any order.
    explicit CycleType(const std::vector<int>& parts);

    /// Accepts "1^2,2^1,3", "(1^{2}, 2, 3)", "8" and repeated parts ("2,2").
    static CycleType parse(std::string_view text);

    std::size_t degree() const noexcept { return degree_; }
    /// n_j; zero for j outside 1..degree.
    int count(int length) const noexcept;
    /// Cycle lengths, ascending, fixed points included.
    std::vector<int> parts() const;
    std::int64_t element_order() const;
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::size_t degree_ = 0;
    std::vector<int> counts_; // counts_[j-1] = n_j
};

/// Element of S_m acting on the points 1..m.
class Permutation {
public:
    /// Identity of degree 1.
    Permutation() : images_{0} {}
    /// Identity of the given degree.
    explicit Permutation(std::size_t degree);

    /// From a 1-based image array; throws InputError unless it is a bijection.
    static Permutation from_images(const std::vector<int>& images);
    /// From disjoint cycles over 1..degree.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);
    /// Cycle notation "(1 2 3)(4 5)", "(1,2)", "()" or "id". Cycles need not be
    /// disjoint; they are composed right to left.
    static Permutation parse(std::size_t degree, std::string_view text);

    std::size_t degree() const noexcept { return images_.size(); }
    /// Image of a 1-based point.
    int operator()(int point) const;
    /// 1-based image array.
    std::vector<int> images() const;

    /// Composition, right factor first: (a * b)(x) = a(b(x)).
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation identity() const { return Permutation(degree()); }
    bool is_identity() const noexcept;
    std::int64_t order() const;
    /// a^k for any integer k; k is reduced modulo the order.
    Permutation pow(std::int64_t k) const;

    /// Cycles written from their least point, ordered by least point.
    std::vector<std::vector<int>> cycles(bool include_fixed_points = false) const;
    CycleType cycle_type() const;
    /// Cycle notation, "()" for the identity.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint16_t> images_; // zero based
};

static_assert(GroupElement<Permutation>);

Permutation compose(const Permutation& a, const Permutation& b);
Permutation power(const Permutation& a, std::int64_t k);

/// Some h with h a h⁻¹ = b, obtained by matching the cycles of a onto those
/// of b (both sorted by length, then least point). Empty when the cycle
/// types differ.
std::optional<Permutation> find_conjugator(const Permutation& a, const Permutation& b);

/// Conjugacy class of S_m with the given cycle type.
struct ClassData {
    Permutation representative;
    CycleType cycle_type;
    std::optional<std::uint64_t> size; // empty when it does not fit in 64 bits
    std::int64_t element_order = 1;
    bool is_real = true;
};

/// Canonical representative fills cycles with 1, 2, 3, ... in weakly
/// increasing length. Throws InputError if `type` is not a type of degree
/// `degree`.
ClassData class_data(std::size_t degree, const CycleType& type);

/// Order of the centralizer of an element of the given type: ∏ j^{n_j} n_j!.
std::uint64_t centralizer_order(const CycleType& type);

/// All cycle types of degree m, largest part first: (m), (m-1,1), ..., (1^m).
std::vector<CycleType> partitions(std::size_t degree);

} // namespace rackcert
