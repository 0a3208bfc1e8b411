#pragma once

#include <concepts>
#include <cstdint>
#include <optional>

namespace rackcert {

/// Elements of a concrete finite group with value semantics. `a * b` is the
/// group product with `b` applied first when elements act on points.
template <class G>
concept GroupElement = std::regular<G> && std::totally_ordered<G> && requires(const G& a, const G& b) {
    { a * b } -> std::same_as<G>;
    { a.inverse() } -> std::same_as<G>;
    { a.identity() } -> std::same_as<G>;
    { a.is_identity() } -> std::same_as<bool>;
};

/// Rack product of the conjugation rack: a ▷ b = a b a⁻¹.
template <GroupElement G>
G conjugate(const G& a, const G& b)
{
    return a * b * a.inverse();
}

template <GroupElement G>
bool commute(const G& a, const G& b)
{
    return a * b == b * a;
}

/// Order of `a`; gives up (nullopt) after `limit` multiplications.
template <GroupElement G>
std::optional<std::int64_t> element_order(const G& a, std::int64_t limit = 1'000'000)
{
    G x = a;
    for (std::int64_t k = 1; k <= limit; ++k) {
        if (x.is_identity())
            return k;
        x = x * a;
    }
    return std::nullopt;
}

/// a^k for any integer k, by repeated squaring.
template <GroupElement G>
G group_power(const G& a, std::int64_t k)
{
    G base = k < 0 ? a.inverse() : a;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    G result = a.identity();
    while (e != 0) {
        if (e & 1U)
            result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

} // namespace rackcert
