#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rackcert/errors.hpp"
#include "rackcert/perm.hpp"

using namespace rackcert;

namespace {

Permutation P(std::size_t m, const char* text)
{
    return Permutation::parse(m, text);
}

Permutation from_oracle(const oracle::Images& a)
{
    return Permutation::from_images(a);
}

} // namespace

TEST_CASE("compose applies the right factor first")
{
    CHECK((P(2, "(1 2)") * P(2, "(1 2)")).is_identity());
    CHECK((P(4, "(1 2 3 4)") * P(4, "(1 4 3 2)")).is_identity());
    CHECK(compose(P(4, "(1 2 4 3)"), P(4, "(1 3 4 2)")).is_identity());
    const auto a = P(3, "(1 2)");
    const auto b = P(3, "(2 3)");
    CHECK((a * b)(2) == a(b(2)));
    CHECK((a * b) == from_oracle(oracle::compose(a.images(), b.images())));
    CHECK_THROWS_AS(P(3, "(1 2)") * P(4, "(1 2)"), InputError);
}

TEST_CASE("conjugate relabels cycles")
{
    CHECK(conjugate(P(3, "(1 2 3)"), P(3, "(1 2)")) == P(3, "(2 3)"));
    const auto s = P(6, "(1 2 3 4 5 6)");
    CHECK(conjugate(s.identity(), s) == s);
    const auto a = P(6, "(2 4 6)");
    const auto expect = from_oracle(oracle::relabel_conjugate(a.images(), s.images()));
    CHECK(conjugate(a, s) == expect);
    CHECK(conjugate(a, s) == P(6, "(1 4 3 6 5 2)"));
    CHECK_THROWS_AS(conjugate(P(3, "(1 2)"), P(4, "(1 2)")), InputError);
}

TEST_CASE("cycle type")
{
    CHECK(Permutation(5).cycle_type().to_string() == "1^5");
    CHECK(P(6, "(1 2)(3 4 5)").cycle_type() == CycleType::parse("1,2,3"));
    CHECK(P(8, "(1 2 3 4 5 6 7 8)").cycle_type() == CycleType({8}));
    CHECK(CycleType::parse("1^2,2^1,3").to_string() == "1^2,2,3");
    CHECK(CycleType::parse("(1^{2},2,3)") == CycleType({1, 1, 2, 3}));
    CHECK(CycleType::parse("2,2,4").count(2) == 2);
    CHECK(CycleType::parse("2^2,4").degree() == 8);
    CHECK(CycleType::parse("4^3,2").element_order() == 4);
    CHECK_THROWS_AS(CycleType::parse("2^x"), InputError);
    CHECK_THROWS_AS(CycleType::parse("0"), InputError);
}

TEST_CASE("parse and print")
{
    CHECK(P(5, "()").is_identity());
    CHECK(P(5, "id").is_identity());
    CHECK(P(5, "(3 1 2)").to_string() == "(1 2 3)");
    CHECK(P(5, "(1 2)(1 3)") == P(5, "(1 2)") * P(5, "(1 3)"));
    CHECK(Permutation(4).to_string() == "()");
    CHECK_THROWS_AS(P(3, "(1 4)"), InputError);
    CHECK_THROWS_AS(P(3, "(1 1)"), InputError);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), InputError);
}

TEST_CASE("power")
{
    CHECK(power(P(4, "(1 2 3 4)"), 2) == P(4, "(1 3)(2 4)"));
    const auto c8 = P(8, "(1 2 3 4 5 6 7 8)");
    CHECK(power(c8, 3) == from_oracle(oracle::repeated_power(c8.images(), 3)));
    CHECK(power(c8, 3) == P(8, "(1 4 7 2 5 8 3 6)"));
    CHECK(power(c8, -1) == c8.inverse());
    CHECK(power(c8, -5) == power(c8, 3));
    const auto s = P(7, "(1 2)(3 4 5)");
    CHECK(power(s, s.order()).is_identity());
    CHECK(s.order() == 6);
    CHECK(power(s, 1'000'000'007) == from_oracle(oracle::repeated_power(s.images(), 1'000'000'007 % 6)));
}

TEST_CASE("class data matches brute-force enumeration")
{
    for (int m = 1; m <= 7; ++m) {
        const auto sizes = oracle::class_sizes(m);
        const auto parts = partitions(static_cast<std::size_t>(m));
        CHECK(parts.size() == sizes.size());
        for (const auto& t : parts) {
            const auto cd = class_data(static_cast<std::size_t>(m), t);
            CHECK(*cd.size == sizes.at(t.parts()));
            CHECK(cd.representative.cycle_type() == t);
            CHECK(cd.is_real);
        }
    }
    const auto cd6 = class_data(6, CycleType::parse("1,2,3"));
    CHECK(*cd6.size == 120);
    CHECK(cd6.element_order == 6);
    CHECK(class_data(3, CycleType({3})).size.value() == 2);
    const auto cd4 = class_data(4, CycleType({4}));
    CHECK(cd4.representative == P(4, "(1 2 3 4)"));
    CHECK(*cd4.size == 6);
    CHECK(class_data(6, CycleType::parse("1^2,4")).representative == P(6, "(3 4 5 6)"));
    CHECK_THROWS_AS(class_data(5, CycleType({2, 2})), InputError);
    CHECK(class_data(20, CycleType({20})).size.value() == 121645100408832000ULL);
    CHECK_FALSE(class_data(24, CycleType({8, 8, 8})).size.has_value());
}

TEST_CASE("class sizes sum to m!")
{
    std::uint64_t fact = 1;
    for (std::size_t m = 1; m <= 8; ++m) {
        fact *= m;
        std::uint64_t total = 0;
        for (const auto& t : partitions(m))
            total += class_data(m, t).size.value();
        CHECK(total == fact);
    }
}

TEST_CASE("random group laws in S_7")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = from_oracle(oracle::random_perm(7, rng));
        const auto b = from_oracle(oracle::random_perm(7, rng));
        const auto c = from_oracle(oracle::random_perm(7, rng));
        CHECK((a * b) * c == a * (b * c));
        CHECK(conjugate(a, conjugate(b, c)) == conjugate(a * b, c));
        CHECK(conjugate(a, b).cycle_type() == b.cycle_type());
        CHECK((a * a.inverse()).is_identity());
        const auto g = find_conjugator(b, conjugate(a, b));
        REQUIRE(g.has_value());
        CHECK(conjugate(*g, b) == conjugate(a, b));
    }
    CHECK_FALSE(find_conjugator(P(4, "(1 2)"), P(4, "(1 2 3)")).has_value());
}
