#include <doctest.h>

#include "bredon/builtin.hpp"
#include "bredon/homotopy.hpp"
#include "oracle.hpp"

using namespace bredon;

namespace {

std::size_t at(const std::vector<std::size_t>& v, int d)
{
    return d >= 0 && static_cast<std::size_t>(d) < v.size() ? v[d] : 0;
}

int oracle_top_degree(const GCWComplex& a)
{
    int r = 0;
    for (int level = 0; level <= static_cast<int>(a.group().n()); ++level) {
        const auto h = oracle::quotient_cohomology(a, level, true);
        for (std::size_t d = 0; d < h.size(); ++d)
            if (h[d] != 0)
                r = std::max(r, static_cast<int>(d));
    }
    return r;
}

bool connected(const GCWComplex& a)
{
    for (int level = 0; level <= static_cast<int>(a.group().n()); ++level)
        if (oracle::quotient_cohomology(a, level, true)[0] != 0)
            return false;
    return true;
}

} // namespace

TEST_CASE("mapping decomposition examples")
{
    const auto s = mapping_decomposition(parse_builtin("C2:sigma"), 5);
    CHECK(s.top_degree == 1);
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0].degree == 4);
    CHECK(s.factors[0].values == std::vector<std::size_t>{1, 0});

    const auto e = mapping_decomposition(parse_builtin("C2:eps"), 4);
    CHECK(e.top_degree == 1);
    REQUIRE(e.factors.size() == 1);
    CHECK(e.factors[0].degree == 3);
    CHECK(e.factors[0].values == std::vector<std::size_t>{1, 1});

    for (int m = 1; m < 4; ++m) {
        const auto p = mapping_decomposition(parse_builtin("C4:point"), m);
        CHECK(p.top_degree == 0);
        CHECK(p.factors.empty());
    }
}

TEST_CASE("hypothesis guard")
{
    try {
        mapping_decomposition(parse_builtin("C4:lambda(1)"), 2);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.top_degree() == 2);
        CHECK(std::string(e.what()).find("target dimension m must exceed top cohomological degree r") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(mapping_decomposition(parse_builtin("C2:S0"), 3), DomainError);
    for (const auto& name : builtin_corpus()) {
        const GCWComplex a = parse_builtin(name);
        if (!connected(a))
            continue;
        CAPTURE(name);
        const int r = oracle_top_degree(a);
        CHECK_THROWS_AS(mapping_decomposition(a, r), HypothesisError);
        const auto d = mapping_decomposition(a, r + 1);
        CHECK(d.top_degree == r);
    }
}

TEST_CASE("factor values match the orbit-space route")
{
    for (const auto& name : builtin_corpus()) {
        const GCWComplex a = parse_builtin(name);
        if (!connected(a))
            continue;
        CAPTURE(name);
        const int r = oracle_top_degree(a);
        const int m = r + 3;
        const auto d = mapping_decomposition(a, m);
        std::size_t next = 0;
        for (int i = m - r; i <= m; ++i) {
            std::vector<std::size_t> want;
            for (int level = 0; level <= static_cast<int>(a.group().n()); ++level)
                want.push_back(at(oracle::quotient_cohomology(a, level, true), m - i));
            const bool trivial = std::all_of(want.begin(), want.end(), [](std::size_t v) { return v == 0; });
            if (trivial)
                continue;
            REQUIRE(next < d.factors.size());
            CHECK(d.factors[next].degree == i);
            CHECK(d.factors[next].values == want);
            ++next;
        }
        CHECK(next == d.factors.size());
    }
}

TEST_CASE("loop shift")
{
    const EMDecomposition k4{5, 1, {{4, {1, 0}, std::nullopt}}};
    const auto k3 = loop_shift(k4);
    CHECK(k3.target_dim == 4);
    REQUIRE(k3.factors.size() == 1);
    CHECK(k3.factors[0].degree == 3);
    CHECK(loop_shift(EMDecomposition{3, 0, {}}).factors.empty());
    CHECK(loop_shift(EMDecomposition{1, 0, {{1, {1}, std::nullopt}}}).factors.empty());

    const GCWComplex a = parse_builtin("C2:wedge(eps, eps^2)");
    const auto d = mapping_decomposition(a, 6);
    const auto twice = loop_shift(loop_shift(d));
    REQUIRE(twice.factors.size() == d.factors.size());
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        CHECK(twice.factors[i].degree == d.factors[i].degree - 2);
        CHECK(twice.factors[i].values == d.factors[i].values);
    }
    // Looping lowers m: the same factors as the decomposition for m - 1.
    const auto looped = loop_shift(d);
    const auto lower = mapping_decomposition(a, 5);
    REQUIRE(looped.factors.size() == lower.factors.size());
    for (std::size_t i = 0; i < looped.factors.size(); ++i) {
        CHECK(looped.factors[i].degree == lower.factors[i].degree);
        CHECK(looped.factors[i].values == lower.factors[i].values);
    }
}

TEST_CASE("nullification truncation")
{
    const GCWComplex a = parse_builtin("C4:sigma+lambda(1)");
    const auto d = mapping_decomposition(a, 7);
    const int r = d.top_degree;
    const auto t = nullification_truncate(d, 7 - r);
    REQUIRE(t.factors.size() == 1);
    CHECK(t.factors[0].degree == 7 - r);
    CHECK(nullification_truncate(d, 7) == d);
    CHECK(nullification_truncate(d, 70) == d);
    CHECK(nullification_truncate(EMDecomposition{4, 0, {}}, 2).factors.empty());
    CHECK_THROWS_AS(nullification_truncate(d, 0), DomainError);

    const auto rho = nullification_representation(GroupSpec(2, 2), 10, 2);
    CHECK(rho.dimension() == 8);
    CHECK(to_string(rho) == "eps+sigma+lambda(1)+eps+eps+eps+eps");
    CHECK_THROWS_AS(nullification_representation(GroupSpec(2, 2), 6, 2), DomainError);
}

TEST_CASE("lgood verdicts")
{
    const auto t2 = lgood_check(parse_builtin("C2:smash(eps, eps)"));
    CHECK(t2.outcome == LGoodVerdict::Outcome::NecessaryConditionHolds);
    CHECK(t2.concentration_degree == 2);

    const auto w = lgood_check(parse_builtin("C2:wedge(eps, smash(eps, eps))"));
    CHECK(w.outcome == LGoodVerdict::Outcome::NotLGood);
    CHECK(w.witness == std::pair{2, 1});
    CHECK(w.dims == std::vector<std::size_t>{1, 1, 1});

    const auto p = lgood_check(parse_builtin("C2:point"));
    CHECK(p.outcome == LGoodVerdict::Outcome::NecessaryConditionHolds);
    CHECK_FALSE(p.concentration_degree);

    CHECK_THROWS_AS(lgood_check(parse_builtin("C2:S0")), DomainError);
}

TEST_CASE("induced systems are valid coefficient systems with the factor values")
{
    for (const char* name : {"C2:sigma", "C4:lambda(1)", "C4:sigma+lambda(1)", "C8:sigma+lambda(2)", "C9:lambda(3)"}) {
        CAPTURE(name);
        const GCWComplex a = parse_builtin(name);
        const auto d = mapping_decomposition(a, 6, {true, Execution::Sequential});
        for (const auto& f : d.factors) {
            REQUIRE(f.system);
            CHECK(f.system->dims() == f.values);
            CHECK_FALSE(validate_system(*f.system));
        }
    }
    // S^sigma at level 0 is a circle flipped by the generator.
    const auto s = mapping_decomposition(parse_builtin("C2:sigma"), 3, {true, Execution::Sequential});
    CHECK(s.factors[0].system->weyl(0) == RatMatrix::from_rows({{-1}}));
}
