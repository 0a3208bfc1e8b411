#include "rackcert/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "rackcert/errors.hpp"

namespace rackcert {

namespace {

constexpr std::size_t kMaxDegree = 65535;

int parse_int(std::string_view text, std::string_view context)
{
    int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw InputError("malformed integer '" + std::string(text) + "' in " + std::string(context));
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string strip_braces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

} // namespace

// CycleType

CycleType::CycleType(const std::vector<int>& parts)
{
    std::size_t total = 0;
    for (int p : parts) {
        if (p <= 0)
            throw InputError("cycle lengths must be positive");
        total += static_cast<std::size_t>(p);
    }
    if (total == 0)
        throw InputError("empty cycle type");
    degree_ = total;
    counts_.assign(total, 0);
    for (int p : parts)
        ++counts_[static_cast<std::size_t>(p) - 1];
}

CycleType CycleType::parse(std::string_view text)
{
    std::string_view body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = trim(body.substr(1, body.size() - 2));
    if (body.empty())
        throw InputError("empty cycle type");

    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos)
            comma = body.size();
        std::string token = strip_braces(body.substr(start, comma - start));
        if (token.empty())
            throw InputError("empty entry in cycle type '" + std::string(text) + "'");
        int length = 0;
        int mult = 1;
        if (auto caret = token.find('^'); caret != std::string::npos) {
            length = parse_int(std::string_view(token).substr(0, caret), "cycle type");
            mult = parse_int(std::string_view(token).substr(caret + 1), "cycle type");
        } else {
            length = parse_int(token, "cycle type");
        }
        if (length <= 0 || mult < 0)
            throw InputError("invalid entry '" + token + "' in cycle type");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), length);
        start = comma + 1;
    }
    return CycleType(parts);
}

int CycleType::count(int length) const noexcept
{
    if (length <= 0 || static_cast<std::size_t>(length) > counts_.size())
        return 0;
    return counts_[static_cast<std::size_t>(length) - 1];
}

std::vector<int> CycleType::parts() const
{
    std::vector<int> out;
    for (std::size_t j = 0; j < counts_.size(); ++j)
        out.insert(out.end(), static_cast<std::size_t>(counts_[j]), static_cast<int>(j + 1));
    return out;
}

std::int64_t CycleType::element_order() const
{
    std::int64_t order = 1;
    for (std::size_t j = 0; j < counts_.size(); ++j)
        if (counts_[j] > 0)
            order = std::lcm(order, static_cast<std::int64_t>(j + 1));
    return order;
}

std::string CycleType::to_string() const
{
    std::string out;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
        if (counts_[j] == 0)
            continue;
        if (!out.empty())
            out += ',';
        out += std::to_string(j + 1);
        if (counts_[j] != 1)
            out += '^' + std::to_string(counts_[j]);
    }
    return out;
}

// Permutation

Permutation::Permutation(std::size_t degree)
{
    if (degree == 0 || degree > kMaxDegree)
        throw InputError("permutation degree out of range");
    images_.resize(degree);
    std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(const std::vector<int>& images)
{
    if (images.empty() || images.size() > kMaxDegree)
        throw InputError("permutation degree out of range");
    Permutation p(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i];
        if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v - 1)])
            throw InputError("image array is not a bijection of 1.." + std::to_string(images.size()));
        seen[static_cast<std::size_t>(v - 1)] = true;
        p.images_[i] = static_cast<std::uint16_t>(v - 1);
    }
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles)
{
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
        for (int x : cycle) {
            if (x < 1 || static_cast<std::size_t>(x) > degree)
                throw InputError("cycle point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(x - 1)])
                throw InputError("cycles are not disjoint at point " + std::to_string(x));
            used[static_cast<std::size_t>(x - 1)] = true;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            p.images_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint16_t>(to - 1);
        }
    }
    return p;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text)
{
    std::string_view body = trim(text);
    Permutation result(degree);
    if (body.empty() || body == "id" || body == "()")
        return result;
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[pos]))) {
            ++pos;
            continue;
        }
        if (body[pos] != '(')
            throw InputError("expected '(' in permutation '" + std::string(text) + "'");
        std::size_t close = body.find(')', pos);
        if (close == std::string_view::npos)
            throw InputError("unbalanced parentheses in permutation '" + std::string(text) + "'");
        std::vector<int> cycle;
        std::string inner(body.substr(pos + 1, close - pos - 1));
        std::replace(inner.begin(), inner.end(), ',', ' ');
        std::istringstream in(inner);
        std::string token;
        while (in >> token)
            cycle.push_back(parse_int(token, "permutation"));
        // Cycles are composed right to left, so earlier cycles act last.
        result = result * from_cycles(degree, {cycle});
        pos = close + 1;
    }
    return result;
}

int Permutation::operator()(int point) const
{
    if (point < 1 || static_cast<std::size_t>(point) > images_.size())
        throw InputError("point " + std::to_string(point) + " outside 1.." + std::to_string(images_.size()));
    return images_[static_cast<std::size_t>(point - 1)] + 1;
}

std::vector<int> Permutation::images() const
{
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = images_[i] + 1;
    return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
    if (degree() != rhs.degree())
        throw InputError("degree mismatch: " + std::to_string(degree()) + " vs " + std::to_string(rhs.degree()));
    Permutation out(*this);
    for (std::size_t x = 0; x < images_.size(); ++x)
        out.images_[x] = images_[rhs.images_[x]];
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation out(*this);
    for (std::size_t x = 0; x < images_.size(); ++x)
        out.images_[images_[x]] = static_cast<std::uint16_t>(x);
    return out;
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x)
            return false;
    return true;
}

std::int64_t Permutation::order() const
{
    return cycle_type().element_order();
}

Permutation Permutation::pow(std::int64_t k) const
{
    std::int64_t n = order();
    std::int64_t e = ((k % n) + n) % n;
    return group_power(*this, e);
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed_points) const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<int> cycle;
        std::size_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            cycle.push_back(static_cast<int>(x) + 1);
            x = images_[x];
        }
        if (cycle.size() > 1 || include_fixed_points)
            out.push_back(std::move(cycle));
    }
    return out;
}

CycleType Permutation::cycle_type() const
{
    std::vector<int> parts;
    for (const auto& c : cycles(true))
        parts.push_back(static_cast<int>(c.size()));
    return CycleType(parts);
}

std::string Permutation::to_string() const
{
    std::string out;
    for (const auto& c : cycles()) {
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k != 0)
                out += ' ';
            out += std::to_string(c[k]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    return a * b;
}

Permutation power(const Permutation& a, std::int64_t k)
{
    return a.pow(k);
}

std::optional<Permutation> find_conjugator(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree())
        throw InputError("degree mismatch in conjugator search");
    auto by_length = [](const std::vector<int>& x, const std::vector<int>& y) {
        return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
    };
    auto ca = a.cycles(true);
    auto cb = b.cycles(true);
    if (ca.size() != cb.size())
        return std::nullopt;
    std::sort(ca.begin(), ca.end(), by_length);
    std::sort(cb.begin(), cb.end(), by_length);
    std::vector<int> images(a.degree());
    for (std::size_t c = 0; c < ca.size(); ++c) {
        if (ca[c].size() != cb[c].size())
            return std::nullopt;
        for (std::size_t k = 0; k < ca[c].size(); ++k)
            images[static_cast<std::size_t>(ca[c][k] - 1)] = cb[c][k];
    }
    return Permutation::from_images(images);
}

std::uint64_t centralizer_order(const CycleType& type)
{
    std::uint64_t order = 1;
    for (int j = 1; j <= static_cast<int>(type.degree()); ++j) {
        int n = type.count(j);
        for (int k = 0; k < n; ++k)
            order *= static_cast<std::uint64_t>(j);
        for (int k = 2; k <= n; ++k)
            order *= static_cast<std::uint64_t>(k);
    }
    return order;
}

ClassData class_data(std::size_t degree, const CycleType& type)
{
    if (type.degree() != degree)
        throw InputError("cycle type " + type.to_string() + " has degree " + std::to_string(type.degree()) +
                         ", expected " + std::to_string(degree));
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int length : type.parts()) {
        std::vector<int> cycle(static_cast<std::size_t>(length));
        std::iota(cycle.begin(), cycle.end(), next);
        next += length;
        cycles.push_back(std::move(cycle));
    }
    ClassData data;
    if (degree <= 33) {
        unsigned __int128 factorial = 1;
        unsigned __int128 centralizer = 1;
        for (std::uint64_t k = 2; k <= degree; ++k)
            factorial *= k;
        for (int j = 1; j <= static_cast<int>(degree); ++j) {
            const int n = type.count(j);
            for (int k = 0; k < n; ++k)
                centralizer *= static_cast<unsigned>(j);
            for (int k = 2; k <= n; ++k)
                centralizer *= static_cast<unsigned>(k);
        }
        const unsigned __int128 size = factorial / centralizer;
        if (size <= std::numeric_limits<std::uint64_t>::max())
            data.size = static_cast<std::uint64_t>(size);
    }
    data.representative = Permutation::from_cycles(degree, cycles);
    data.cycle_type = type;
    data.element_order = type.element_order();
    data.is_real = true; // σ⁻¹ has the cycle type of σ
    return data;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& current, std::vector<CycleType>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<CycleType> partitions(std::size_t degree)
{
    if (degree == 0 || degree > 64)
        throw InputError("partition degree out of range");
    std::vector<CycleType> out;
    std::vector<int> current;
    partitions_into(static_cast<int>(degree), static_cast<int>(degree), current, out);
    return out;
}

} // namespace rackcert
