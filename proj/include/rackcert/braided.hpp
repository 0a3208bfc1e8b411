#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rackcert/errors.hpp"
#include "rackcert/group.hpp"
#include "rackcert/rack.hpp"

namespace rackcert {

/// e^{2πi·exponent/order}, exponent kept in [0, order).
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::int64_t order, std::int64_t exponent);

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {2, 1}; }

    std::int64_t order() const noexcept { return order_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    /// Same value written over order L (a multiple of the current order).
    RootOfUnity lifted(std::int64_t L) const;
    /// Smallest order representing this value.
    RootOfUnity reduced() const;

    bool is_one() const noexcept { return exponent_ == 0; }
    bool is_minus_one() const noexcept { return order_ % 2 == 0 && exponent_ == order_ / 2; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const { return {order_, order_ - exponent_}; }
    RootOfUnity pow(std::int64_t k) const;

    /// Equality of values, independent of the order used to write them.
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);

    std::string to_string() const;

private:
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 0;
};

/// Root-of-unity valued function on pairs of a rack, stored as exponents over
/// one shared order L.
class Cocycle {
public:
    Cocycle() = default;
    Cocycle(RackTable rack, std::int64_t order, std::vector<std::vector<std::int64_t>> exponents);
    static Cocycle constant(RackTable rack, RootOfUnity value);

    const RackTable& rack() const noexcept { return rack_; }
    std::int64_t order() const noexcept { return order_; }
    const std::vector<std::vector<std::int64_t>>& exponents() const noexcept { return exponents_; }
    RootOfUnity value(int i, int j) const;

    friend bool operator==(const Cocycle&, const Cocycle&) = default;

private:
    RackTable rack_;
    std::int64_t order_ = 1;
    std::vector<std::vector<std::int64_t>> exponents_;
};

/// Checks q_{i,j▷k} q_{j,k} = q_{i▷j,i▷k} q_{i,k} on all n³ triples.
Diagnosis check_cocycle(const Cocycle& q);

struct BraidingImage {
    int first;
    int second;
    RootOfUnity scalar;
};

/// c(e_k ⊗ e_l) = q_{k,l} e_{k▷l} ⊗ e_k.
BraidingImage braiding_apply(const Cocycle& q, int k, int l);

/// Evaluates (c⊗id)(id⊗c)(c⊗id) and (id⊗c)(c⊗id)(id⊗c) on every basis triple.
Diagnosis check_braid_equation(const Cocycle& q);

/// True iff q1_{i,j} = q2_{map(i),map(j)}; throws InputError unless `map` is a
/// rack isomorphism between the underlying racks.
bool check_bvs_isomorphism(const Cocycle& q1, const Cocycle& q2, const RackMorphism& map);

/// The cocycle restricted to a ▷-closed subset (a braided subspace).
Cocycle restrict_cocycle(const Cocycle& q, const std::vector<int>& subset);

/// True iff c(e_k ⊗ e_l) is a multiple of e_l ⊗ e_k for all k, l in `subset`.
bool is_diagonal_on(const Cocycle& q, const std::vector<int>& subset);

/// Base point s, class elements t_1..t_M and transporters with g_i ▷ s = t_i.
template <GroupElement G>
class CosetSection {
public:
    /// Throws InputError unless t_1 = s, the t_i are distinct and g_i ▷ s = t_i.
    CosetSection(G base, std::vector<G> elements, std::vector<G> transporters)
        : base_(std::move(base)), elements_(std::move(elements)), transporters_(std::move(transporters))
    {
        if (elements_.empty() || elements_.size() != transporters_.size())
            throw InputError("section needs one transporter per class element");
        if (elements_.front() != base_)
            throw InputError("the first class element must be the base point");
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (!index_.emplace(elements_[i], static_cast<int>(i)).second)
                throw InputError("class element " + std::to_string(i + 1) + " repeated");
            if (conjugate(transporters_[i], base_) != elements_[i])
                throw InputError("g_" + std::to_string(i + 1) + " ▷ s ≠ t_" + std::to_string(i + 1));
        }
    }

    const G& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const G& element(std::size_t i) const { return elements_[i]; }
    const G& transporter(std::size_t i) const { return transporters_[i]; }
    const std::vector<G>& elements() const noexcept { return elements_; }
    const std::vector<G>& transporters() const noexcept { return transporters_; }
    std::optional<int> index_of(const G& x) const
    {
        auto it = index_.find(x);
        return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
    }

private:
    G base_;
    std::vector<G> elements_;
    std::vector<G> transporters_;
    std::map<G, int> index_;
};

/// Degree-one character of the centralizer of s, given on generators and
/// extended to every word of length ≤ depth. Inconsistent assignments (two
/// words for one element with different values) are rejected.
template <GroupElement G>
class Character {
public:
    static constexpr std::size_t kNodeLimit = 200000;

    Character(G base, std::vector<G> generators, std::vector<RootOfUnity> values, int depth = 12)
        : base_(std::move(base)), depth_(depth)
    {
        if (generators.size() != values.size())
            throw InputError("one value per character generator required");
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (!commute(generators[i], base_))
                throw InputError("character generator " + std::to_string(i + 1) + " does not centralize s");
        order_ = 1;
        for (const auto& v : values)
            order_ = std::lcm(order_, v.order());
        std::deque<std::pair<G, int>> queue;
        table_.emplace(base_.identity(), 0);
        queue.emplace_back(base_.identity(), 0);
        std::vector<std::pair<G, std::int64_t>> steps;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const std::int64_t e = values[i].lifted(order_).exponent();
            steps.emplace_back(generators[i], e);
            steps.emplace_back(generators[i].inverse(), (order_ - e) % order_);
        }
        while (!queue.empty()) {
            auto [x, d] = queue.front();
            queue.pop_front();
            if (d >= depth_)
                continue;
            const std::int64_t ex = table_.at(x);
            for (const auto& [g, e] : steps) {
                G y = x * g;
                const std::int64_t ey = (ex + e) % order_;
                auto [it, fresh] = table_.emplace(y, ey);
                if (!fresh) {
                    if (it->second != ey)
                        throw InputError("character values are inconsistent on " + describe(y));
                    continue;
                }
                if (table_.size() > kNodeLimit)
                    throw InputError("character word search exceeded its node limit");
                queue.emplace_back(std::move(y), d + 1);
            }
        }
    }

    const G& base() const noexcept { return base_; }
    int depth() const noexcept { return depth_; }
    std::size_t known_elements() const noexcept { return table_.size(); }

    /// χ(x), or empty when x has no word of length ≤ depth.
    std::optional<RootOfUnity> evaluate(const G& x) const
    {
        auto it = table_.find(x);
        if (it == table_.end())
            return std::nullopt;
        return RootOfUnity(order_, it->second);
    }

    /// The scalar by which s acts.
    std::optional<RootOfUnity> q_ss() const { return evaluate(base_); }

private:
    static std::string describe(const G& x)
    {
        if constexpr (requires { x.to_string(); })
            return x.to_string();
        else
            return "an element";
    }

    G base_;
    int depth_;
    std::int64_t order_ = 1;
    std::map<G, std::int64_t> table_;
};

template <GroupElement G>
struct YdBlock {
    CosetSection<G> section;
    Character<G> character;
    std::string prefix; // label prefix; labels are prefix_1..prefix_M
};

/// Braiding of the direct sum of the Yetter–Drinfeld modules M(O_b, χ_b) on
/// the basis g_i ⊗ 1: element (a, i) ▷ (b, j) = (b, h) where t_{a,i} ▷ t_{b,j}
/// = t_{b,h}, with q = χ_b(g_{b,h}⁻¹ t_{a,i} g_{b,j}).
template <GroupElement G>
Cocycle yd_cocycle(const std::vector<YdBlock<G>>& blocks)
{
    if (blocks.empty())
        throw InputError("no blocks");
    std::vector<std::pair<std::size_t, std::size_t>> elems;
    std::vector<std::size_t> offset;
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        offset.push_back(elems.size());
        for (std::size_t i = 0; i < blocks[b].section.size(); ++i) {
            elems.emplace_back(b, i);
            const auto& pre = blocks[b].prefix;
            labels.push_back(pre.empty() ? std::to_string(i + 1) : pre + "_" + std::to_string(i + 1));
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::vector<RootOfUnity>> values(n, std::vector<RootOfUnity>(n));
    std::int64_t order = 1;
    for (std::size_t u = 0; u < n; ++u) {
        const auto [a, i] = elems[u];
        const G& ti = blocks[a].section.element(i);
        for (std::size_t v = 0; v < n; ++v) {
            const auto [b, j] = elems[v];
            const auto& sec = blocks[b].section;
            const auto h = sec.index_of(conjugate(ti, sec.element(j)));
            if (!h)
                throw InputError("class of block " + std::to_string(b + 1) + " is not closed under conjugation");
            table[u][v] = static_cast<int>(offset[b]) + *h;
            const G gamma = sec.transporter(static_cast<std::size_t>(*h)).inverse() * ti * sec.transporter(j);
            require_identity(commute(gamma, sec.base()), "g_h⁻¹ t_i g_j does not centralize s");
            const auto val = blocks[b].character.evaluate(gamma);
            if (!val)
                throw InputError("character not evaluable on g_h⁻¹ t_i g_j for (" + labels[u] + ", " + labels[v] +
                                 ")");
            values[u][v] = *val;
            order = std::lcm(order, val->order());
        }
    }
    std::vector<std::vector<std::int64_t>> exps(n, std::vector<std::int64_t>(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            exps[u][v] = values[u][v].lifted(order).exponent();
    Cocycle q(RackTable(std::move(labels), std::move(table)), order, std::move(exps));
    const auto rack_ok = check_rack(q.rack());
    require_identity(rack_ok.ok, "Yetter–Drinfeld rack fails the axioms: " + rack_ok.message);
    const auto coc_ok = check_cocycle(q);
    require_identity(coc_ok.ok, "Yetter–Drinfeld cocycle fails the identity: " + coc_ok.message);
    return q;
}

} // namespace rackcert
