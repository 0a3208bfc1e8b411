#include "rackcert/braided.hpp"

#include <array>

namespace rackcert {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t exponent) : order_(order)
{
    if (order < 1)
        throw InputError("root of unity order must be positive");
    exponent_ = floor_mod(exponent, order);
}

RootOfUnity RootOfUnity::lifted(std::int64_t L) const
{
    if (L % order_ != 0)
        throw InputError("cannot lift order " + std::to_string(order_) + " to " + std::to_string(L));
    return {L, exponent_ * (L / order_)};
}

RootOfUnity RootOfUnity::reduced() const
{
    const std::int64_t g = std::gcd(order_, exponent_);
    if (exponent_ == 0)
        return {};
    return {order_ / g, exponent_ / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const
{
    const std::int64_t L = std::lcm(order_, o.order_);
    return {L, lifted(L).exponent_ + o.lifted(L).exponent_};
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const
{
    return {order_, static_cast<std::int64_t>((static_cast<__int128>(exponent_) * k) % order_)};
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b)
{
    const auto ra = a.reduced();
    const auto rb = b.reduced();
    return ra.order_ == rb.order_ && ra.exponent_ == rb.exponent_;
}

std::string RootOfUnity::to_string() const
{
    if (is_one())
        return "1";
    if (is_minus_one())
        return "-1";
    const auto r = reduced();
    return "e(" + std::to_string(r.exponent_) + "/" + std::to_string(r.order_) + ")";
}

Cocycle::Cocycle(RackTable rack, std::int64_t order, std::vector<std::vector<std::int64_t>> exponents)
    : rack_(std::move(rack)), order_(order), exponents_(std::move(exponents))
{
    if (order_ < 1)
        throw InputError("cocycle order must be positive");
    const std::size_t n = rack_.size();
    if (exponents_.size() != n)
        throw InputError("cocycle needs one exponent row per rack element");
    for (auto& row : exponents_) {
        if (row.size() != n)
            throw InputError("cocycle exponent row has the wrong length");
        for (auto& e : row)
            e = floor_mod(e, order_);
    }
}

Cocycle Cocycle::constant(RackTable rack, RootOfUnity value)
{
    const std::size_t n = rack.size();
    return Cocycle(std::move(rack), value.order(),
                   std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, value.exponent())));
}

RootOfUnity Cocycle::value(int i, int j) const
{
    return {order_, exponents_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j))};
}

Diagnosis check_cocycle(const Cocycle& q)
{
    const auto& t = q.rack();
    const int n = static_cast<int>(t.size());
    const std::int64_t L = q.order();
    const auto& e = q.exponents();
    auto E = [&](int a, int b) { return e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    std::size_t checked = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++checked;
                const std::int64_t lhs = E(i, t.op(j, k)) + E(j, k);
                const std::int64_t rhs = E(t.op(i, j), t.op(i, k)) + E(i, k);
                if ((lhs - rhs) % L != 0)
                    return Diagnosis::fail("cocycle identity fails at (" + t.label(i) + ", " + t.label(j) + ", " +
                                               t.label(k) + ")",
                                           checked);
            }
    return Diagnosis::pass(checked);
}

BraidingImage braiding_apply(const Cocycle& q, int k, int l)
{
    const int n = static_cast<int>(q.rack().size());
    if (k < 0 || l < 0 || k >= n || l >= n)
        throw InputError("basis index out of range");
    return {q.rack().op(k, l), k, q.value(k, l)};
}

namespace {

struct Tensor3 {
    std::array<int, 3> basis;
    RootOfUnity scalar;
};

/// Applies c to positions (pos, pos + 1).
Tensor3 apply_at(const Cocycle& q, Tensor3 v, int pos)
{
    const auto img = braiding_apply(q, v.basis[static_cast<std::size_t>(pos)], v.basis[static_cast<std::size_t>(pos + 1)]);
    v.basis[static_cast<std::size_t>(pos)] = img.first;
    v.basis[static_cast<std::size_t>(pos + 1)] = img.second;
    v.scalar = v.scalar * img.scalar;
    return v;
}

} // namespace

Diagnosis check_braid_equation(const Cocycle& q)
{
    const auto& t = q.rack();
    const int n = static_cast<int>(t.size());
    std::size_t checked = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                ++checked;
                const Tensor3 start{{a, b, c}, RootOfUnity::one()};
                const Tensor3 lhs = apply_at(q, apply_at(q, apply_at(q, start, 0), 1), 0);
                const Tensor3 rhs = apply_at(q, apply_at(q, apply_at(q, start, 1), 0), 1);
                if (lhs.basis != rhs.basis || !(lhs.scalar == rhs.scalar))
                    return Diagnosis::fail("braid equation fails on e_" + t.label(a) + " ⊗ e_" + t.label(b) +
                                               " ⊗ e_" + t.label(c),
                                           checked);
            }
    return Diagnosis::pass(checked);
}

bool check_bvs_isomorphism(const Cocycle& q1, const Cocycle& q2, const RackMorphism& map)
{
    const auto& m = map.map;
    if (q1.rack().size() != q2.rack().size() || !is_morphism(q1.rack(), q2.rack(), m))
        throw InputError("map is not a rack isomorphism");
    std::vector<bool> hit(m.size(), false);
    for (int v : m) {
        if (hit[static_cast<std::size_t>(v)])
            throw InputError("map is not bijective");
        hit[static_cast<std::size_t>(v)] = true;
    }
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(q1.value(i, j) == q2.value(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)])))
                return false;
    return true;
}

Cocycle restrict_cocycle(const Cocycle& q, const std::vector<int>& subset)
{
    RackTable sub = subrack(q.rack(), subset);
    std::vector<std::vector<std::int64_t>> exps;
    for (int a : subset) {
        exps.emplace_back();
        for (int b : subset)
            exps.back().push_back(q.value(a, b).exponent());
    }
    return Cocycle(std::move(sub), q.order(), std::move(exps));
}

bool is_diagonal_on(const Cocycle& q, const std::vector<int>& subset)
{
    for (int k : subset)
        for (int l : subset) {
            const auto img = braiding_apply(q, k, l);
            if (img.first != l || img.second != k)
                return false;
        }
    return true;
}

} // namespace rackcert
