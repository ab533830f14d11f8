#pragma once

/**
 * Bredon cochains C^*_G(X; M) = Hom_O(C_*(X), M) and their cohomology.
 *
 * The free summand Q[Hom(-, G/H)] of C_d(X) contributes M(G/H) to the
 * cochains by Yoneda, so degree-d cochains are the direct sum of M(G/H_cell)
 * over d-cells. The coboundary block from a (d-1)-cell tau to a d-cell sigma
 * is the sum over boundary terms of coeff * M(term).
 *
 * Cohomology at a subgroup level P is computed on restrict(X, P) with the
 * restricted coefficient system. Reduced cohomology drops the basepoint cell.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bredon/gcw.hpp"
#include "bredon/orbitcat.hpp"
#include "bredon/ratlinalg.hpp"

namespace bredon {

enum class Execution { Sequential, Parallel };

struct CochainComplex
{
    /// dims[d] = dimension of degree-d cochains, for 0 <= d <= top cell dimension.
    std::vector<std::size_t> dims;
    /// coboundary[d] : C^d -> C^{d+1}, shape dims[d+1] x dims[d]; one fewer than dims.
    std::vector<RatMatrix> coboundary;

    std::size_t degrees() const { return dims.size(); }
};

/// Throws DomainError if `reduced` is set and x has no basepoint, or if the
/// groups of x and m differ.
CochainComplex cochain_complex(const GCWComplex& x, const CoefficientSystem& m, bool reduced);

/// dim ker(delta^d) - rank(delta^{d-1}) for every degree.
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);

/// Cocycle representatives for a basis of H^d, plus a way to express any
/// cocycle in that basis.
class CohomologyBasis
{
public:
    CohomologyBasis(const CochainComplex& c, std::size_t degree);

    std::size_t dimension() const { return representatives_.size(); }
    std::size_t ambient_dimension() const { return ambient_; }
    const std::vector<RatVector>& representatives() const { return representatives_; }
    /// Coordinates of the class of `cocycle`. Throws std::invalid_argument if
    /// the vector is not a cocycle.
    RatVector coordinates(const RatVector& cocycle) const;

private:
    std::size_t ambient_;
    std::vector<RatVector> representatives_;
    RatMatrix frame_;             // coboundary basis followed by representatives
    std::size_t boundary_rank_ = 0;
};

struct CohomologyRow
{
    SubgroupIndex level;
    std::vector<std::size_t> dims;

    friend bool operator==(const CohomologyRow&, const CohomologyRow&) = default;
};

/// H^*_P(x; m) for P = C_{p^level}; dims has one entry per cell dimension of x.
CohomologyRow cohomology(const GCWComplex& x, const CoefficientSystem& m, SubgroupIndex level, bool reduced);

struct CohomologyTable
{
    GroupSpec group;
    std::string coefficients; ///< "constant-Q" or a file reference
    bool reduced = false;
    std::vector<CohomologyRow> rows; ///< in the order requested

    const CohomologyRow& at_level(SubgroupIndex level) const;
};

/// One row per requested level. With Execution::Parallel the levels are
/// computed concurrently; the result is identical either way.
CohomologyTable cohomology_table(const GCWComplex& x, const CoefficientSystem& m, std::string coefficients,
                                 const std::vector<SubgroupIndex>& levels, bool reduced,
                                 Execution exec = Execution::Sequential);

/// All levels from n down to 0.
std::vector<SubgroupIndex> all_levels(const GroupSpec& g);

/// Ordinary rational cellular cohomology of a complex over the trivial group,
/// computed directly from the integer boundary matrices.
std::vector<std::size_t> cellular_cohomology(const GCWComplex& trivial, bool reduced);

/// Cohomology of the orbit space quotient(restrict(x, level)); agrees with
/// cohomology(x, constant_system, level, reduced).
CohomologyRow quotient_oracle(const GCWComplex& x, SubgroupIndex level, bool reduced);

/// Alternating orbit-cell count of quotient(restrict(x, level)).
std::int64_t euler_characteristic(const GCWComplex& x, SubgroupIndex level);

} // namespace bredon
