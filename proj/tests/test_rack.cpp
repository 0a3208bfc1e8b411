#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "rackcert/perm.hpp"
#include "rackcert/rack.hpp"

using namespace rackcert;

namespace {

bool oracle_axioms(const RackTable& t)
{
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        std::set<int> row;
        for (int j = 0; j < n; ++j)
            row.insert(t.op(i, j));
        if (static_cast<int>(row.size()) != n)
            return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t.op(i, t.op(j, k)) != t.op(t.op(i, j), t.op(i, k)))
                    return false;
    return true;
}

/// Tries every bijection; only for tiny racks.
bool oracle_isomorphic(const RackTable& x, const RackTable& y)
{
    if (x.size() != y.size())
        return false;
    std::vector<int> map(x.size());
    std::iota(map.begin(), map.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < x.size(); ++i)
            for (std::size_t j = 0; ok && j < x.size(); ++j)
                ok = map[static_cast<std::size_t>(x.op(static_cast<int>(i), static_cast<int>(j)))] ==
                     y.op(map[i], map[j]);
        if (ok)
            return true;
    } while (std::next_permutation(map.begin(), map.end()));
    return false;
}

int at(const RackTable& t, const char* a, const char* b)
{
    return t.op(*t.index_of(a), *t.index_of(b));
}

} // namespace

TEST_CASE("octahedral table entries")
{
    const auto o = octahedral_rack();
    CHECK(o.label(at(o, "2", "1")) == "3");
    CHECK(o.label(at(o, "6", "6")) == "6");
    CHECK(o.label(at(o, "5", "4")) == "1");
    CHECK(o.label(at(o, "1", "1")) == "1");
    CHECK(o.label(at(o, "1", "2")) == "5");
    CHECK(o.label(at(o, "2", "2")) == "2");
    CHECK(o.label(at(o, "3", "2")) == "1");
    CHECK(check_rack(o));
    CHECK(oracle_axioms(o));
}

TEST_CASE("check_rack diagnoses failures")
{
    auto table = dihedral_rack(3).table();
    table[1][0] = table[1][1];
    const auto bad = check_rack(RackTable({"a", "b", "c"}, table));
    CHECK_FALSE(bad);
    CHECK(bad.message.find("row b") != std::string::npos);

    auto x3 = dihedral_square_rack(3).table();
    std::swap(x3[0][3], x3[0][4]);
    const auto corrupt = check_rack(RackTable(dihedral_square_rack(3).labels(), x3));
    CHECK_FALSE(corrupt);
    CHECK(corrupt.message.find("self-distributivity fails at") != std::string::npos);
    CHECK_THROWS_AS(RackTable({"a"}, {{1}}), InputError);
    CHECK_THROWS_AS(RackTable({"a", "b"}, {{0, 1}}), InputError);
}

TEST_CASE("named racks satisfy the axioms")
{
    for (int n = 1; n <= 9; ++n) {
        CHECK(check_rack(dihedral_rack(n)));
        CHECK(oracle_axioms(dihedral_rack(n)));
    }
    for (int n : {3, 5, 7, 9, 15}) {
        const auto x = dihedral_square_rack(n);
        CHECK(x.size() == static_cast<std::size_t>(2 * n));
        CHECK(check_rack(x));
    }
    CHECK(check_rack(square_rack(octahedral_rack())));
    CHECK(square_rack(octahedral_rack()).size() == 12);
    CHECK(check_rack(trivial_rack(4)));
    CHECK_THROWS_AS(dihedral_square_rack(4), InputError);
    CHECK_THROWS_AS(dihedral_square_rack(1), InputError);
}

TEST_CASE("dihedral square rack products")
{
    const auto x3 = dihedral_square_rack(3);
    CHECK(x3.label(at(x3, "s_1", "t_0")) == "t_2");
    for (int i = 0; i < 3; ++i) {
        const std::string s = "s_" + std::to_string(i);
        CHECK(x3.label(at(x3, s.c_str(), s.c_str())) == s);
    }
    const auto x5 = dihedral_square_rack(5);
    CHECK(x5.label(at(x5, "t_3", "s_1")) == "s_0");
    CHECK(x5.label(at(x5, "t_3", "t_1")) == "t_0");
}

TEST_CASE("square rack")
{
    const auto sq1 = square_rack(trivial_rack(1));
    CHECK(sq1.size() == 2);
    CHECK(sq1.table() == trivial_rack(2).table());
    const auto sq3 = square_rack(dihedral_rack(3), "s", "t");
    CHECK(sq3 == dihedral_square_rack(3));
    CHECK(oracle_isomorphic(sq3, dihedral_square_rack(3)));
    const auto oct = octahedral_rack();
    const auto sqo = square_rack(oct);
    for (auto sub : {std::vector<int>{0, 1, 2, 3, 4, 5}, std::vector<int>{6, 7, 8, 9, 10, 11}}) {
        const auto copy = subrack(sqo, sub);
        const auto iso = find_isomorphism(copy, oct);
        REQUIRE(iso.has_value());
        CHECK(oracle_isomorphic(copy, oct));
    }
    CHECK(sqo.label(0) == "x_1");
    CHECK(sqo.label(11) == "y_6");
}

TEST_CASE("conjugation closure")
{
    const auto t12 = Permutation::parse(3, "(1 2)");
    const auto t13 = Permutation::parse(3, "(1 3)");
    const auto single = conjugation_closure<Permutation>({t12}, 10);
    REQUIRE(single);
    CHECK(single.value->size() == 1);

    const auto pair = conjugation_closure<Permutation>({t12, t13}, 10);
    REQUIRE(pair);
    CHECK(std::set<Permutation>(pair.value->begin(), pair.value->end()) ==
          std::set<Permutation>{t12, t13, Permutation::parse(3, "(2 3)")});
    // fixpoint oracle on images
    std::set<oracle::Images> closed{t12.images(), t13.images()};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& a : std::vector<oracle::Images>(closed.begin(), closed.end()))
            for (const auto& b : std::vector<oracle::Images>(closed.begin(), closed.end()))
                grew |= closed.insert(oracle::relabel_conjugate(a, b)).second;
    }
    CHECK(closed.size() == pair.value->size());

    const auto c4 = conjugation_closure<Permutation>({Permutation::parse(4, "(1 2 3 4)")}, 1);
    CHECK(c4);
    CHECK_FALSE(conjugation_closure<Permutation>({t12, t13}, 2));
    CHECK_FALSE(conjugation_closure<Permutation>({}, 5));

    const auto all = conjugation_closure<Permutation>({Permutation::parse(5, "(1 2 3)"), Permutation::parse(5, "(3 4 5)")}, 100);
    REQUIRE(all);
    CHECK(check_rack(conjugation_rack(*all.value)));
}

TEST_CASE("isomorphism search")
{
    const auto oct = octahedral_rack();
    const auto self = find_isomorphism(oct, oct);
    REQUIRE(self.has_value());
    CHECK(is_morphism(oct, oct, self->map));
    CHECK(self->map == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(find_isomorphism(oct, trivial_rack(6)).has_value());

    const auto transp = conjugation_closure<Permutation>({Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 3)")}, 10);
    const auto sq = square_rack(conjugation_rack(*transp.value));
    const auto iso = find_isomorphism(dihedral_square_rack(3), sq);
    REQUIRE(iso.has_value());
    CHECK(oracle_isomorphic(dihedral_square_rack(3), sq));
    CHECK_FALSE(find_isomorphism(dihedral_rack(4), trivial_rack(4)).has_value());
    CHECK(oracle_isomorphic(dihedral_rack(4), trivial_rack(4)) == false);
    CHECK_THROWS_AS(find_isomorphism(trivial_rack(25), trivial_rack(25)), InputError);
}

TEST_CASE("abelian subracks")
{
    const auto x3 = dihedral_square_rack(3);
    CHECK(is_abelian_subrack(x3, {0}));
    CHECK(is_abelian_subrack(x3, {*x3.index_of("s_0"), *x3.index_of("t_0")}));
    CHECK_THROWS_AS(is_abelian_subrack(x3, {*x3.index_of("s_0"), *x3.index_of("s_1")}), InputError);
    CHECK_FALSE(is_abelian_subrack(x3, {0, 1, 2}));
}

TEST_CASE("X_d embeds in X_n")
{
    for (auto [d, n] : {std::pair{3, 9}, std::pair{5, 15}}) {
        const auto xd = dihedral_square_rack(d);
        const auto xn = dihedral_square_rack(n);
        std::vector<int> map;
        for (int a = 0; a < 2 * d; ++a)
            map.push_back((a < d ? 0 : n) + (a % d) * (n / d));
        CHECK(is_morphism(xd, xn, map));
        CHECK(std::set<int>(map.begin(), map.end()).size() == map.size());
    }
}
