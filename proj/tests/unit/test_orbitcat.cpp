#include <doctest.h>

#include <random>

#include "bredon/error.hpp"
#include "bredon/orbitcat.hpp"
#include "oracle.hpp"

using namespace bredon;

TEST_CASE("group specs")
{
    CHECK(GroupSpec(2, 3).order() == 8);
    CHECK(GroupSpec(3, 2).name() == "C_9");
    CHECK(GroupSpec(5, 0).name() == "C_1");
    CHECK(GroupSpec(2, 2).orbit_size(1) == 2);
    CHECK_THROWS_AS(GroupSpec(4, 1), DomainError);
    CHECK_THROWS_AS(GroupSpec(1, 1), DomainError);
    CHECK_THROWS_AS(GroupSpec(2, 40), DomainError);
}

TEST_CASE("hom sets")
{
    const OrbitCategory c4(GroupSpec(2, 2));
    const auto h = c4.hom_set(0, 1);
    REQUIRE(h.size() == 2);
    CHECK(h[0].rep == 0);
    CHECK(h[1].rep == 1);
    CHECK(c4.hom_set(1, 0).empty());
    CHECK(OrbitCategory(GroupSpec(3, 1)).hom_set(1, 1).size() == 1);

    for (const auto& [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}}) {
        const GroupSpec g(p, n);
        const OrbitCategory c(g);
        for (int a = 0; a <= static_cast<int>(n); ++a)
            for (int b = 0; b <= static_cast<int>(n); ++b)
                CHECK(c.hom_count(a, b) == (a <= b ? g.orbit_size(b) : 0));
    }
}

TEST_CASE("composition examples")
{
    const OrbitCategory c4(GroupSpec(2, 2));
    const OrbitMorphism f{0, 1, 1};
    CHECK(c4.compose(c4.identity(0), f) == f);
    CHECK(c4.compose(f, c4.identity(1)) == f);
    CHECK(c4.compose({1, 1, 1}, {1, 1, 1}) == OrbitMorphism{1, 1, 0});

    const OrbitCategory c8(GroupSpec(2, 3));
    CHECK(c8.compose({0, 1, 3}, {1, 2, 1}) == OrbitMorphism{0, 2, 0});
    CHECK_THROWS_AS(c8.compose({0, 1, 0}, {2, 2, 0}), std::invalid_argument);
}

TEST_CASE("composition agrees with G-maps of coset sets and is associative")
{
    for (const auto& [p, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
        const GroupSpec g(p, n);
        const OrbitCategory c(g);
        const int top = static_cast<int>(n);
        for (int a = 0; a <= top; ++a)
            for (int b = a; b <= top; ++b)
                for (int d = b; d <= top; ++d)
                    for (const auto& f : c.hom_set(a, b))
                        for (const auto& h : c.hom_set(b, d)) {
                            CHECK(c.compose(f, h) == oracle::compose_by_tables(g, f, h));
                            for (int e = d; e <= top; ++e)
                                for (const auto& k : c.hom_set(d, e))
                                    CHECK(c.compose(c.compose(f, h), k) == c.compose(f, c.compose(h, k)));
                        }
    }
}

TEST_CASE("apply examples")
{
    const GroupSpec c2(2, 1);
    const CoefficientSystem q = constant_system(c2);
    CHECK(apply(q, {0, 1, 0}).is_identity());
    CHECK(apply(q, {0, 0, 1}).is_identity());

    const RatMatrix swap = RatMatrix::from_rows({{0, 1}, {1, 0}});
    const CoefficientSystem m(c2, {2, 1}, {swap, RatMatrix::identity(1)}, {RatMatrix::from_rows({{1}, {1}})});
    CHECK_FALSE(validate_system(m));
    CHECK(apply(m, {0, 0, 1}) == swap);
    CHECK(apply(m, {0, 0, 0}).is_identity());
    CHECK(apply(m, {0, 1, 0}) == RatMatrix::from_rows({{1}, {1}}));
    CHECK_THROWS_AS(apply(m, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("validate_system reports the violated axiom")
{
    const GroupSpec c2(2, 1);
    const RatMatrix order3 = RatMatrix::from_rows({{0, -1}, {1, -1}});
    const CoefficientSystem bad_order(c2, {2, 0}, {order3, RatMatrix(0, 0)}, {RatMatrix(2, 0)});
    const auto v = validate_system(bad_order);
    REQUIRE(v);
    CHECK(v->kind == SystemViolation::Kind::WeylOrder);
    CHECK(v->message.find("A_0^2") != std::string::npos);

    const RatMatrix swap = RatMatrix::from_rows({{0, 1}, {1, 0}});
    const CoefficientSystem bad_compat(c2, {2, 1}, {swap, RatMatrix::identity(1)}, {RatMatrix::from_rows({{1}, {0}})});
    const auto w = validate_system(bad_compat);
    REQUIRE(w);
    CHECK(w->kind == SystemViolation::Kind::Compatibility);
    CHECK(w->level == 1);
    CHECK(w->message.find("k=1") != std::string::npos);

    CHECK_THROWS_AS(CoefficientSystem(c2, {2, 1}, {swap, swap}, {RatMatrix(2, 1)}), std::invalid_argument);
}

TEST_CASE("constant and zero systems")
{
    CHECK(constant_system(GroupSpec(2, 1)).dims() == std::vector<std::size_t>{1, 1});
    CHECK(constant_system(GroupSpec(3, 2)).dims() == std::vector<std::size_t>{1, 1, 1});
    for (const auto& [p, n] : {std::pair{2u, 0u}, {2u, 3u}, {3u, 2u}, {7u, 1u}}) {
        CHECK_FALSE(validate_system(constant_system(GroupSpec(p, n))));
        CHECK_FALSE(validate_system(zero_system(GroupSpec(p, n))));
    }
}

TEST_CASE("random systems are valid and functorial")
{
    std::mt19937 rng(7);
    for (const auto& [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {3u, 2u}}) {
        const GroupSpec g(p, n);
        const OrbitCategory c(g);
        for (int trial = 0; trial < 3; ++trial) {
            const CoefficientSystem m = oracle::random_system(g, rng);
            REQUIRE_FALSE(validate_system(m));
            for (int a = 0; a <= static_cast<int>(n); ++a) {
                CHECK(apply(m, c.identity(a)).is_identity());
                for (int b = a; b <= static_cast<int>(n); ++b)
                    for (int d = b; d <= static_cast<int>(n); ++d)
                        for (const auto& f : c.hom_set(a, b))
                            for (const auto& h : c.hom_set(b, d))
                                CHECK(apply(m, oracle::compose_by_tables(g, f, h)) ==
                                      multiply(apply(m, f), apply(m, h)));
            }
        }
    }
}

TEST_CASE("restricted systems stay valid and agree with apply")
{
    std::mt19937 rng(11);
    const GroupSpec g(2, 3);
    const CoefficientSystem m = oracle::random_system(g, rng);
    for (int level = 0; level <= 3; ++level) {
        const CoefficientSystem r = restrict_system(m, level);
        CHECK(r.group() == g.subgroup(level));
        CHECK_FALSE(validate_system(r));
        for (int k = 0; k <= level; ++k)
            CHECK(r.weyl(k) == apply(m, {k, k, g.pow_p(3 - level) % g.orbit_size(k)}));
    }
    CHECK(restrict_system(m, 3) == m);
}
