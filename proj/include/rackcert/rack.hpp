#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rackcert/errors.hpp"
#include "rackcert/group.hpp"

namespace rackcert {

/// Finite rack stored as a dense table, table[i][j] = i ▷ j on 0-based indices.
/// Construction only checks the shape; `check_rack` checks the axioms.
class RackTable {
public:
    RackTable() = default;
    RackTable(std::vector<std::string> labels, std::vector<std::vector<int>> table);

    std::size_t size() const noexcept { return labels_.size(); }
    int op(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::vector<int>>& table() const noexcept { return table_; }
    std::optional<int> index_of(std::string_view label) const;

    friend bool operator==(const RackTable&, const RackTable&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
};

struct RackMorphism {
    std::vector<int> map; // map[i] = image of element i
    bool is_isomorphism = false;
};

/// Passes iff every row φ_i is a bijection and i▷(j▷k) = (i▷j)▷(i▷k) for all
/// triples; otherwise cites the first failing row or triple.
Diagnosis check_rack(const RackTable& t);

/// True iff map(i▷j) = map(i)▷map(j) for all pairs.
bool is_morphism(const RackTable& x, const RackTable& y, const std::vector<int>& map);

/// Trivial rack i ▷ j = j.
RackTable trivial_rack(std::size_t n);
/// Dihedral rack D_n: i ▷ j = 2i − j mod n, labels "0".."n−1".
RackTable dihedral_rack(int n);
/// X_n on s_0..s_{n−1}, t_0..t_{n−1}: every product is 2i − j with the
/// letter of the right factor. Requires odd n > 1.
RackTable dihedral_square_rack(int n);
/// The six vertices of the octahedron under the right-hand rule, labels "1".."6".
RackTable octahedral_rack();
/// Disjoint union of two copies with φ_i(x) ▷ φ_j(y) = φ_j(x ▷ y); labels
/// are prefixed by `x_label` + "_" and `y_label` + "_".
RackTable square_rack(const RackTable& x, const std::string& x_label = "x", const std::string& y_label = "y");
/// The rack induced on `subset` (closed under ▷), in the given order.
RackTable subrack(const RackTable& t, const std::vector<int>& subset);

/// Bijective morphism x → y if one exists. Throws InputError above 24 elements.
std::optional<RackMorphism> find_isomorphism(const RackTable& x, const RackTable& y);

/// True iff k ▷ l = l for all k, l in `subset`; throws InputError if the
/// subset is not closed or has an out-of-range index.
bool is_abelian_subrack(const RackTable& t, const std::vector<int>& subset);

/// Least subset of the group closed under a ▷ b containing the seeds, sorted.
/// Rejected when it would exceed `bound` elements.
template <GroupElement G>
Checked<std::vector<G>> conjugation_closure(const std::vector<G>& seeds, std::size_t bound)
{
    using R = Checked<std::vector<G>>;
    if (seeds.empty())
        return R::reject("no seeds");
    std::set<G> members(seeds.begin(), seeds.end());
    if (members.size() > bound)
        return R::reject("seeds exceed bound " + std::to_string(bound));
    std::vector<G> order(members.begin(), members.end());
    std::size_t processed = 0;
    std::size_t products = 0;
    // every pair (a, b) with max(index) >= processed still needs a product
    while (processed < order.size()) {
        const std::size_t n = order.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = (i < processed ? processed : 0); j < n; ++j) {
                for (int dir = 0; dir < 2; ++dir) {
                    const G& a = dir == 0 ? order[i] : order[j];
                    const G& b = dir == 0 ? order[j] : order[i];
                    ++products;
                    G c = conjugate(a, b);
                    if (members.insert(c).second) {
                        if (members.size() > bound)
                            return R::reject("closure exceeds bound " + std::to_string(bound), products);
                        order.push_back(std::move(c));
                    }
                }
            }
        }
        processed = n;
    }
    return R::accept(std::vector<G>(members.begin(), members.end()), products);
}

/// Table of the conjugation rack on `elements` (which must be closed).
template <GroupElement G>
RackTable conjugation_rack(const std::vector<G>& elements)
{
    std::map<G, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!index.emplace(elements[i], static_cast<int>(i)).second)
            throw InputError("repeated element in conjugation rack");
    std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if constexpr (requires { elements[i].to_string(); })
            labels.push_back(elements[i].to_string());
        else
            labels.push_back(std::to_string(i));
        for (std::size_t j = 0; j < elements.size(); ++j) {
            auto it = index.find(conjugate(elements[i], elements[j]));
            if (it == index.end())
                throw InputError("elements are not closed under conjugation");
            table[i][j] = it->second;
        }
    }
    return RackTable(std::move(labels), std::move(table));
}

} // namespace rackcert
