#include "doctest.h"

#include "rackcert/braided.hpp"
#include "rackcert/perm.hpp"

using namespace rackcert;

namespace {

/// Closed form of both sides of the braid equation on e_a ⊗ e_b ⊗ e_c.
bool oracle_braid(const Cocycle& q)
{
    const auto& t = q.rack();
    const int n = static_cast<int>(t.size());
    const std::int64_t L = q.order();
    auto e = [&](int x, int y) { return q.exponents()[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int ab = t.op(a, b);
                const int ac = t.op(a, c);
                const int bc = t.op(b, c);
                const bool same_basis = t.op(ab, ac) == t.op(a, bc);
                const std::int64_t lhs = e(a, b) + e(a, c) + e(ab, ac);
                const std::int64_t rhs = e(b, c) + e(a, bc) + e(a, b);
                if (!same_basis || (lhs - rhs) % L != 0)
                    return false;
            }
    return true;
}

Permutation P(const char* s)
{
    return Permutation::parse(4, s);
}

std::vector<Permutation> tilde_sigma()
{
    return {P("(1 2 3 4)"), P("(1 2 4 3)"), P("(1 3 2 4)"), P("(1 3 4 2)"), P("(1 4 2 3)"), P("(1 4 3 2)")};
}

std::vector<Permutation> tilde_g()
{
    const auto s = tilde_sigma();
    return {s[0], s[4], s[1], s[2], s[3], s[1] * s[1] * s[0]};
}

} // namespace

TEST_CASE("roots of unity")
{
    const RootOfUnity i4(4, 1);
    CHECK((i4 * i4).is_minus_one());
    CHECK((i4 * i4) == RootOfUnity::minus_one());
    const auto w = RootOfUnity(3, 1) * RootOfUnity(2, 1);
    CHECK(w.order() == 6);
    CHECK(w.exponent() == 5);
    CHECK(w.pow(6).is_one());
    CHECK(RootOfUnity(6, 3).is_minus_one());
    CHECK_FALSE(RootOfUnity(6, 2).is_minus_one());
    CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));
    CHECK(RootOfUnity(5, -1) == RootOfUnity(5, 4));
    CHECK(i4.inverse() * i4 == RootOfUnity::one());
    CHECK(RootOfUnity::minus_one().to_string() == "-1");
    CHECK(RootOfUnity(6, 2).to_string() == "e(1/3)");
    CHECK_THROWS_AS(RootOfUnity(0, 0), InputError);
}

TEST_CASE("cocycle identity")
{
    const auto x3 = dihedral_square_rack(3);
    CHECK(check_cocycle(Cocycle::constant(x3, RootOfUnity::minus_one())));
    CHECK(check_cocycle(Cocycle::constant(octahedral_rack(), RootOfUnity::one())));
    auto exps = Cocycle::constant(x3, RootOfUnity::minus_one()).exponents();
    exps[0][1] = 0;
    const auto bad = check_cocycle(Cocycle(x3, 2, exps));
    CHECK_FALSE(bad);
    CHECK(bad.message.find("cocycle identity fails at (") != std::string::npos);
    CHECK_THROWS_AS(Cocycle(x3, 2, {{0}}), InputError);
}

TEST_CASE("braiding on basis pairs")
{
    const auto xy = square_rack(dihedral_rack(3));
    const auto q = Cocycle::constant(xy, RootOfUnity::minus_one());
    // x_i, y_j with the labels 0..2 of the dihedral rack; x_1 ▷ y_2 = y_3 in 1-based naming
    const auto img = braiding_apply(q, *xy.index_of("x_0"), *xy.index_of("y_1"));
    CHECK(xy.label(img.first) == "y_2");
    CHECK(xy.label(img.second) == "x_0");
    CHECK(img.scalar.is_minus_one());
    const auto x3 = dihedral_square_rack(3);
    const auto q3 = Cocycle::constant(x3, RootOfUnity(4, 1));
    for (int i = 0; i < 6; ++i) {
        const auto d = braiding_apply(q3, i, i);
        CHECK(d.first == i);
        CHECK(d.second == i);
        CHECK(d.scalar == RootOfUnity(4, 1));
    }
    const auto oq = Cocycle::constant(octahedral_rack(), RootOfUnity::minus_one());
    const auto o = braiding_apply(oq, 1, 0);
    CHECK(o.first == 2);
    CHECK(o.second == 1);
    CHECK(o.scalar.is_minus_one());
    CHECK_THROWS_AS(braiding_apply(oq, 6, 0), InputError);
}

TEST_CASE("braid equation")
{
    for (const auto& r : {dihedral_square_rack(3), octahedral_rack(), square_rack(octahedral_rack())}) {
        const auto q = Cocycle::constant(r, RootOfUnity::minus_one());
        const auto d = check_braid_equation(q);
        CHECK(d);
        CHECK(oracle_braid(q));
        if (r.size() == 6)
            CHECK(d.checked == 216);
    }
    auto table = dihedral_rack(3).table();
    std::swap(table[0][1], table[0][2]);
    const RackTable broken({"a", "b", "c"}, table);
    REQUIRE_FALSE(check_rack(broken));
    const auto q = Cocycle::constant(broken, RootOfUnity::minus_one());
    CHECK_FALSE(check_braid_equation(q));
    CHECK_FALSE(oracle_braid(q));
}

TEST_CASE("Yetter-Drinfeld cocycle of 4-cycles with the sign character")
{
    const auto s = tilde_sigma();
    const auto g = tilde_g();
    const CosetSection<Permutation> sec(s[0], s, g);
    const Character<Permutation> chi(s[0], {s[0]}, {RootOfUnity::minus_one()});
    CHECK(chi.q_ss()->is_minus_one());
    const auto q = yd_cocycle<Permutation>({{sec, chi, ""}});
    CHECK(q.rack().table() == octahedral_rack().table());
    CHECK(q == Cocycle::constant(octahedral_rack(), RootOfUnity::minus_one()));
    CHECK(check_braid_equation(q));

    // oracle: γ = g_h⁻¹ t_i g_j is a power (1 2 3 4)^k and χ(γ) = (−1)^k
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const auto th = conjugate(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
            int h = 0;
            while (s[static_cast<std::size_t>(h)] != th)
                ++h;
            const auto gamma = g[static_cast<std::size_t>(h)].inverse() * s[static_cast<std::size_t>(i)] *
                               g[static_cast<std::size_t>(j)];
            int k = 0;
            while (power(s[0], k) != gamma && k < 4)
                ++k;
            REQUIRE(k < 4);
            CHECK((k % 2 == 1) == q.value(i, j).is_minus_one());
        }

    const Character<Permutation> triv(s[0], {s[0]}, {RootOfUnity::one()});
    CHECK(yd_cocycle<Permutation>({{sec, triv, ""}}) == Cocycle::constant(octahedral_rack(), RootOfUnity::one()));

    const auto q2 = yd_cocycle<Permutation>({{sec, chi, "x"}, {sec, chi, "y"}});
    CHECK(q2.rack().table() == square_rack(octahedral_rack()).table());
    CHECK(q2.rack().labels() == square_rack(octahedral_rack()).labels());
    CHECK(q2 == Cocycle::constant(square_rack(octahedral_rack()), RootOfUnity::minus_one()));
    CHECK(check_braid_equation(q2));
}

TEST_CASE("section and character validation")
{
    const auto s = tilde_sigma();
    auto g = tilde_g();
    std::swap(g[1], g[2]);
    CHECK_THROWS_AS(CosetSection<Permutation>(s[0], s, g), InputError);
    CHECK_THROWS_AS(CosetSection<Permutation>(s[1], s, tilde_g()), InputError);
    CHECK_THROWS_AS(Character<Permutation>(s[0], {P("(1 2)")}, {RootOfUnity::minus_one()}), InputError);
    // (1 2 3 4) ↦ i and (1 3)(2 4) ↦ 1 contradict each other
    CHECK_THROWS_AS(Character<Permutation>(s[0], {s[0], P("(1 3)(2 4)")}, {RootOfUnity(4, 1), RootOfUnity::one()}),
                    InputError);
    const Character<Permutation> shallow(s[0], {s[0]}, {RootOfUnity::minus_one()}, 1);
    CHECK(shallow.evaluate(s[0] * s[0]) == std::nullopt);
    const CosetSection<Permutation> sec(s[0], s, tilde_g());
    const Character<Permutation> blind(s[0], {s[0]}, {RootOfUnity::minus_one()}, 0);
    CHECK_THROWS_AS(yd_cocycle<Permutation>({{sec, blind, ""}}), InputError);
}

TEST_CASE("isomorphic braided vector spaces")
{
    const auto x3 = dihedral_square_rack(3);
    const auto qa = Cocycle::constant(x3, RootOfUnity::minus_one());
    RackMorphism id{{0, 1, 2, 3, 4, 5}, true};
    CHECK(check_bvs_isomorphism(qa, qa, id));

    const auto transp = conjugation_closure<Permutation>(
        {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 3)")}, 10);
    const auto sq = square_rack(conjugation_rack(*transp.value));
    const auto iso = find_isomorphism(x3, sq);
    REQUIRE(iso);
    const auto qb = Cocycle::constant(sq, RootOfUnity::minus_one());
    CHECK(check_bvs_isomorphism(qa, qb, *iso));
    CHECK_FALSE(check_bvs_isomorphism(qa, Cocycle::constant(sq, RootOfUnity::one()), *iso));
    CHECK_THROWS_AS(check_bvs_isomorphism(qa, qa, RackMorphism{{1, 0, 2, 3, 4, 5}, true}), InputError);
}

TEST_CASE("abelian subracks give diagonal braidings")
{
    const auto x3 = dihedral_square_rack(3);
    const auto q = Cocycle::constant(x3, RootOfUnity::minus_one());
    const std::vector<int> sub{*x3.index_of("s_0"), *x3.index_of("t_0")};
    REQUIRE(is_abelian_subrack(x3, sub));
    CHECK(is_diagonal_on(q, sub));
    const auto r = restrict_cocycle(q, sub);
    CHECK(r.rack().size() == 2);
    CHECK(check_cocycle(r));
    CHECK(check_braid_equation(r));
    CHECK_FALSE(is_diagonal_on(q, {0, 1, 2}));
    const auto whole_s = restrict_cocycle(q, {0, 1, 2});
    CHECK(check_cocycle(whole_s));
}
