#include "rackcert/rack.hpp"

#include <array>
#include <numeric>

namespace rackcert {

RackTable::RackTable(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table))
{
    const std::size_t n = labels_.size();
    if (table_.size() != n)
        throw InputError("rack table has " + std::to_string(table_.size()) + " rows for " + std::to_string(n) +
                         " labels");
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[i].size() != n)
            throw InputError("rack table row " + std::to_string(i) + " has the wrong length");
        for (int v : table_[i])
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InputError("rack table entry " + std::to_string(v) + " out of range");
    }
}

std::optional<int> RackTable::index_of(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<int>(i);
    return std::nullopt;
}

Diagnosis check_rack(const RackTable& t)
{
    const int n = static_cast<int>(t.size());
    std::size_t checked = 0;
    for (int i = 0; i < n; ++i) {
        std::vector<bool> hit(static_cast<std::size_t>(n), false);
        for (int j = 0; j < n; ++j) {
            ++checked;
            const int v = t.op(i, j);
            if (hit[static_cast<std::size_t>(v)])
                return Diagnosis::fail("row " + t.label(i) + " is not a bijection: " + t.label(v) + " appears twice",
                                       checked);
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ++checked;
                if (t.op(i, t.op(j, k)) != t.op(t.op(i, j), t.op(i, k)))
                    return Diagnosis::fail("self-distributivity fails at (" + t.label(i) + ", " + t.label(j) + ", " +
                                               t.label(k) + ")",
                                           checked);
            }
    return Diagnosis::pass(checked);
}

bool is_morphism(const RackTable& x, const RackTable& y, const std::vector<int>& map)
{
    if (map.size() != x.size())
        return false;
    for (int v : map)
        if (v < 0 || static_cast<std::size_t>(v) >= y.size())
            return false;
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (map[static_cast<std::size_t>(x.op(i, j))] !=
                y.op(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

RackTable trivial_rack(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        table[i].resize(n);
        std::iota(table[i].begin(), table[i].end(), 0);
    }
    return RackTable(std::move(labels), std::move(table));
}

RackTable dihedral_rack(int n)
{
    if (n < 1)
        throw InputError("dihedral rack needs n ≥ 1");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i)].push_back(((2 * i - j) % n + n) % n);
    }
    return RackTable(std::move(labels), std::move(table));
}

RackTable dihedral_square_rack(int n)
{
    if (n <= 1 || n % 2 == 0)
        throw InputError("X_n needs odd n > 1, got " + std::to_string(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("s_" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        labels.push_back("t_" + std::to_string(i));
    std::vector<std::vector<int>> table(static_cast<std::size_t>(2 * n));
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = 0; b < 2 * n; ++b) {
            const int i = a % n;
            const int j = b % n;
            const int k = ((2 * i - j) % n + n) % n;
            table[static_cast<std::size_t>(a)].push_back(b < n ? k : n + k);
        }
    }
    return RackTable(std::move(labels), std::move(table));
}

RackTable octahedral_rack()
{
    // by_right[j][i] = (i+1) ▷ (j+1), listed column by column
    static constexpr std::array<std::array<int, 6>, 6> by_right{{
        {1, 3, 4, 5, 2, 1},
        {5, 2, 1, 2, 6, 3},
        {2, 6, 3, 1, 3, 4},
        {3, 4, 6, 4, 1, 5},
        {4, 1, 5, 6, 5, 2},
        {6, 5, 2, 3, 4, 6},
    }};
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = 0; j < 6; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                by_right[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - 1;
    }
    return RackTable(std::move(labels), std::move(table));
}

RackTable square_rack(const RackTable& x, const std::string& x_label, const std::string& y_label)
{
    const int n = static_cast<int>(x.size());
    std::vector<std::string> labels;
    for (const auto& l : x.labels())
        labels.push_back(x_label + "_" + l);
    for (const auto& l : x.labels())
        labels.push_back(y_label + "_" + l);
    std::vector<std::vector<int>> table(static_cast<std::size_t>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b)
            table[static_cast<std::size_t>(a)].push_back(x.op(a % n, b % n) + (b < n ? 0 : n));
    return RackTable(std::move(labels), std::move(table));
}

RackTable subrack(const RackTable& t, const std::vector<int>& subset)
{
    std::vector<int> pos(t.size(), -1);
    for (std::size_t k = 0; k < subset.size(); ++k) {
        const int e = subset[k];
        if (e < 0 || static_cast<std::size_t>(e) >= t.size())
            throw InputError("subset index " + std::to_string(e) + " out of range");
        if (pos[static_cast<std::size_t>(e)] >= 0)
            throw InputError("subset repeats " + t.label(e));
        pos[static_cast<std::size_t>(e)] = static_cast<int>(k);
    }
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
        labels.push_back(t.label(subset[a]));
        for (std::size_t b = 0; b < subset.size(); ++b) {
            const int v = pos[static_cast<std::size_t>(t.op(subset[a], subset[b]))];
            if (v < 0)
                throw InputError("subset not closed: " + t.label(subset[a]) + " ▷ " + t.label(subset[b]) +
                                 " leaves it");
            table[a].push_back(v);
        }
    }
    return RackTable(std::move(labels), std::move(table));
}

namespace {

/// Invariants preserved by isomorphisms: cycle lengths of φ_i, whether i is
/// idempotent, and how many k fix i.
struct Profile {
    std::vector<int> row_cycles;
    bool idempotent;
    int fixers;
    auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const RackTable& t)
{
    const int n = static_cast<int>(t.size());
    std::vector<Profile> out;
    for (int i = 0; i < n; ++i) {
        Profile p{{}, t.op(i, i) == i, 0};
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int s = 0; s < n; ++s) {
            int len = 0;
            for (int x = s; !seen[static_cast<std::size_t>(x)]; x = t.op(i, x)) {
                seen[static_cast<std::size_t>(x)] = true;
                ++len;
            }
            if (len)
                p.row_cycles.push_back(len);
        }
        std::sort(p.row_cycles.begin(), p.row_cycles.end());
        for (int k = 0; k < n; ++k)
            if (t.op(k, i) == i)
                ++p.fixers;
        out.push_back(std::move(p));
    }
    return out;
}

class IsoSearch {
public:
    IsoSearch(const RackTable& x, const RackTable& y) : x_(x), y_(y), px_(profiles(x)), py_(profiles(y))
    {
        const std::size_t n = x.size();
        map_.assign(n, -1);
        used_.assign(n, false);
    }

    bool run() { return extend(0); }
    const std::vector<int>& map() const { return map_; }

private:
    bool consistent(int a) const
    {
        const int n = static_cast<int>(x_.size());
        for (int b = 0; b < n; ++b) {
            const int mb = map_[static_cast<std::size_t>(b)];
            if (mb < 0)
                continue;
            const int ma = map_[static_cast<std::size_t>(a)];
            for (auto [l, r, lm, rm] : {std::array<int, 4>{a, b, ma, mb}, std::array<int, 4>{b, a, mb, ma}}) {
                const int img = map_[static_cast<std::size_t>(x_.op(l, r))];
                if (img >= 0 && img != y_.op(lm, rm))
                    return false;
            }
        }
        return true;
    }

    bool extend(std::size_t a)
    {
        if (a == x_.size())
            return true;
        for (std::size_t c = 0; c < y_.size(); ++c) {
            if (used_[c] || px_[a] != py_[c])
                continue;
            map_[a] = static_cast<int>(c);
            used_[c] = true;
            if (consistent(static_cast<int>(a)) && extend(a + 1))
                return true;
            used_[c] = false;
            map_[a] = -1;
        }
        return false;
    }

    const RackTable& x_;
    const RackTable& y_;
    std::vector<Profile> px_;
    std::vector<Profile> py_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<RackMorphism> find_isomorphism(const RackTable& x, const RackTable& y)
{
    if (x.size() > 24 || y.size() > 24)
        throw InputError("isomorphism search is limited to 24 elements");
    if (x.size() != y.size())
        return std::nullopt;
    auto px = profiles(x);
    auto py = profiles(y);
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());
    if (px != py)
        return std::nullopt;
    IsoSearch search(x, y);
    if (!search.run())
        return std::nullopt;
    RackMorphism m{search.map(), true};
    require_identity(is_morphism(x, y, m.map), "isomorphism search returned a non-morphism");
    return m;
}

bool is_abelian_subrack(const RackTable& t, const std::vector<int>& subset)
{
    const RackTable sub = subrack(t, subset);
    for (std::size_t k = 0; k < sub.size(); ++k)
        for (std::size_t l = 0; l < sub.size(); ++l)
            if (sub.op(static_cast<int>(k), static_cast<int>(l)) != static_cast<int>(l))
                return false;
    return true;
}

} // namespace rackcert
