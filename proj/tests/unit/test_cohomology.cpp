#include <doctest.h>

#include <random>

#include "bredon/builtin.hpp"
#include "bredon/cohomology.hpp"
#include "bredon/error.hpp"
#include "oracle.hpp"

using namespace bredon;

namespace {

const GroupSpec C2(2, 1);

std::vector<std::size_t> dims(const GCWComplex& x, SubgroupIndex level, bool reduced)
{
    return cohomology(x, constant_system(x.group()), level, reduced).dims;
}

bool zero_product(const RatMatrix& a, const RatMatrix& b)
{
    return multiply(a, b).is_zero();
}

} // namespace

TEST_CASE("cochain complex examples")
{
    const CochainComplex c = cochain_complex(point(C2), constant_system(C2), false);
    CHECK(c.dims == std::vector<std::size_t>{1});
    CHECK(c.coboundary.empty());

    const GCWComplex s = parse_builtin("C2:sigma");
    const CochainComplex cs = cochain_complex(s, constant_system(C2), false);
    CHECK(cs.dims == std::vector<std::size_t>{2, 1});
    REQUIRE(cs.coboundary.size() == 1);
    const RatMatrix& d0 = cs.coboundary[0];
    CHECK(d0.rows() == 1);
    CHECK(d0(0, 0) == -d0(0, 1));
    CHECK(d0(0, 0) * d0(0, 0) == 1);
    CHECK(cohomology_dims(cs) == std::vector<std::size_t>{1, 0});

    const CochainComplex z = cochain_complex(parse_builtin("C2:eps+sigma"), zero_system(C2), false);
    for (const auto d : z.dims)
        CHECK(d == 0);

    GCWBuilder unbased(C2);
    unbased.add_cell(0, 1);
    CHECK_THROWS_AS(cochain_complex(unbased.build(), constant_system(C2), true), DomainError);
    CHECK_THROWS_AS(cochain_complex(s, constant_system(GroupSpec(2, 2)), false), DomainError);
}

TEST_CASE("cohomology examples")
{
    for (int level = 0; level <= 1; ++level)
        CHECK(dims(point(C2), level, false) == std::vector<std::size_t>{1});
    CHECK(dims(parse_builtin("C2:eps"), 1, false) == std::vector<std::size_t>{1, 1});
    CHECK(dims(parse_builtin("C2:sigma"), 1, false) == std::vector<std::size_t>{1, 0});
    CHECK(dims(parse_builtin("C2:sigma"), 0, false) == std::vector<std::size_t>{1, 1});
    CHECK(dims(parse_builtin("C4:lambda(1)"), 2, false) == std::vector<std::size_t>{1, 0, 1});
    CHECK_THROWS_AS(dims(point(C2), 2, false), DomainError);
}

TEST_CASE("euler characteristic examples")
{
    CHECK(euler_characteristic(point(C2), 1) == 1);
    CHECK(euler_characteristic(parse_builtin("C2:sigma"), 1) == 1);
    CHECK(euler_characteristic(parse_builtin("C4:lambda(1)"), 2) == 2);
}

TEST_CASE("quotient oracle examples")
{
    CHECK(quotient_oracle(parse_builtin("C2:wedge(eps, eps)"), 1, true).dims[1] == 2);
    const GCWComplex t = parse_builtin("C1:trivial-sphere(2)");
    CHECK(quotient_oracle(t, 0, false).dims == dims(t, 0, false));
}

TEST_CASE("corpus: coboundaries square to zero, oracle agreement, reduced vs unreduced")
{
    for (const auto& name : builtin_corpus()) {
        CAPTURE(name);
        const GCWComplex x = parse_builtin(name);
        const GroupSpec& g = x.group();
        for (int level = 0; level <= static_cast<int>(g.n()); ++level) {
            CAPTURE(level);
            const CochainComplex c =
                cochain_complex(restrict(x, level), restrict_system(constant_system(g), level), false);
            for (std::size_t d = 1; d < c.coboundary.size(); ++d)
                CHECK(zero_product(c.coboundary[d], c.coboundary[d - 1]));

            const auto unreduced = dims(x, level, false);
            const auto reduced = dims(x, level, true);
            CHECK(unreduced == oracle::quotient_cohomology(x, level, false));
            CHECK(reduced == oracle::quotient_cohomology(x, level, true));
            CHECK(quotient_oracle(x, level, false).dims == unreduced);
            CHECK(unreduced[0] == reduced[0] + 1);
            for (std::size_t d = 1; d < unreduced.size(); ++d)
                CHECK(unreduced[d] == reduced[d]);

            std::int64_t chi = 0;
            for (std::size_t d = 0; d < unreduced.size(); ++d)
                chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(unreduced[d]);
            CHECK(chi == euler_characteristic(x, level));
        }
    }
}

TEST_CASE("general coefficients: level 0 and fixed-point systems")
{
    std::mt19937 rng(3);
    for (const char* name : {"C4:lambda(1)", "C4:sigma+lambda(1)", "C3:wedge(lambda(1), eps)", "C8:sigma+lambda(2)"}) {
        CAPTURE(name);
        const GCWComplex x = parse_builtin(name);
        const GroupSpec& g = x.group();
        const CoefficientSystem m = oracle::random_system(g, rng);
        REQUIRE_FALSE(validate_system(m));

        const CochainComplex c = cochain_complex(x, m, false);
        for (std::size_t d = 1; d < c.coboundary.size(); ++d)
            CHECK(zero_product(c.coboundary[d], c.coboundary[d - 1]));

        // M restricted to the trivial subgroup is dim M(G/e) copies of Q.
        const auto level0 = cohomology(x, m, 0, false).dims;
        const auto underlying = oracle::quotient_cohomology(x, 0, false);
        for (std::size_t d = 0; d < level0.size(); ++d)
            CHECK(level0[d] == m.dim(0) * underlying[d]);

        // Q concentrated at levels >= j computes the fixed-point orbit space.
        for (int j = 0; j <= static_cast<int>(g.n()); ++j) {
            std::vector<std::size_t> ds(g.n() + 1, 0);
            std::vector<RatMatrix> weyl, res;
            for (int k = 0; k <= static_cast<int>(g.n()); ++k) {
                ds[k] = k >= j ? 1 : 0;
                weyl.push_back(RatMatrix::identity(ds[k]));
            }
            for (int k = 1; k <= static_cast<int>(g.n()); ++k)
                res.push_back(k - 1 >= j ? RatMatrix::identity(1) : RatMatrix(0, ds[k]));
            const CoefficientSystem fixed(g, ds, weyl, res);
            REQUIRE_FALSE(validate_system(fixed));
            auto got = cohomology(x, fixed, static_cast<int>(g.n()), false).dims;
            auto want = oracle::quotient_cohomology(fixed_points(x, j), static_cast<int>(g.n()), false);
            want.resize(got.size(), 0);
            CHECK(got == want);
        }
    }
}

TEST_CASE("cohomology bases span the right quotient")
{
    const GCWComplex x = parse_builtin("C4:sigma+lambda(1)");
    const CochainComplex c = cochain_complex(restrict(x, 0), constant_system(GroupSpec(2, 0)), true);
    const auto h = cohomology_dims(c);
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        const CohomologyBasis basis(c, d);
        CHECK(basis.dimension() == h[d]);
        for (std::size_t j = 0; j < basis.dimension(); ++j) {
            const RatVector coords = basis.coordinates(basis.representatives()[j]);
            for (std::size_t i = 0; i < coords.size(); ++i)
                CHECK(coords[i] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("parallel and sequential tables agree")
{
    const GCWComplex x = parse_builtin("C8:sigma+lambda(2)");
    const auto levels = all_levels(x.group());
    CHECK(levels == std::vector<SubgroupIndex>{3, 2, 1, 0});
    const CoefficientSystem q = constant_system(x.group());
    const auto seq = cohomology_table(x, q, "constant-Q", levels, true, Execution::Sequential);
    const auto par = cohomology_table(x, q, "constant-Q", levels, true, Execution::Parallel);
    REQUIRE(seq.rows.size() == par.rows.size());
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
        CHECK(seq.rows[i].level == par.rows[i].level);
        CHECK(seq.rows[i].dims == par.rows[i].dims);
    }
}

TEST_CASE("trivial group agrees with simplicial cohomology")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const oracle::Simplicial s = oracle::random_simplicial(rng);
        const GCWComplex x = oracle::as_complex(s);
        REQUIRE(validate_complex(x).empty());
        for (const bool reduced : {false, true}) {
            auto got = dims(x, 0, reduced);
            auto want = oracle::simplicial_cohomology(s, reduced);
            CHECK(got == want);
        }
    }
}
