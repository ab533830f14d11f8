#pragma once

/**
 * Rational equivariant Eilenberg-MacLane bookkeeping for based mapping
 * spaces Map_*(A, K(Q, m)) out of a finite C_{p^n}-complex A.
 *
 * Factors are data only: a degree i and, for each subgroup level P, the
 * dimension of the reduced Bredon group H^{m-i}_P(A; Q). No spaces are built.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bredon/cohomology.hpp"
#include "bredon/error.hpp"
#include "bredon/gcw.hpp"
#include "bredon/orbitcat.hpp"

namespace bredon {

/// m <= r: the decomposition hypothesis fails.
class HypothesisError : public DomainError
{
public:
    HypothesisError(int target_dim, int top_degree);
    int target_dim() const { return target_dim_; }
    int top_degree() const { return top_degree_; }

private:
    int target_dim_;
    int top_degree_;
};

struct EMFactor
{
    int degree = 0;
    /// values[P] for P = 0..n.
    std::vector<std::size_t> values;
    /// Full coefficient system, including restriction and Weyl maps between
    /// levels, when requested. Not determined by the mapping-space splitting
    /// itself; computed from the orbit-space projections.
    std::optional<CoefficientSystem> system;

    bool trivial() const;
    friend bool operator==(const EMFactor&, const EMFactor&) = default;
};

struct EMDecomposition
{
    int target_dim = 0;
    int top_degree = 0;
    /// Nontrivial factors in increasing degree.
    std::vector<EMFactor> factors;

    friend bool operator==(const EMDecomposition&, const EMDecomposition&) = default;
};

struct DecompositionOptions
{
    bool with_maps = false;
    Execution exec = Execution::Sequential;
};

/// Largest degree with a nonzero entry in any row, or 0 if every entry vanishes.
int top_nonzero_degree(const CohomologyTable& table);

/// Splits Map_*(a, K(Q, m)) into factors K(M^{m-i}, i), m - r <= i <= m, with
/// M^{m-i}(G/P) = reduced H^{m-i}_P(a; Q) and r the top degree in which the
/// reduced groups are nonzero at some level. Throws HypothesisError when
/// m <= r, and DomainError for unbased, disconnected or invalid complexes.
EMDecomposition mapping_decomposition(const GCWComplex& a, int m, const DecompositionOptions& options = {});

/// The system G/P -> reduced H^q(a/P; Q): restrictions are induced by the
/// projections a/P' -> a/P, and the Weyl generator by translation by 1.
CoefficientSystem derived_system(const GCWComplex& a, int q);

/// Looping lowers every degree (and the target) by one; degree-0 factors drop.
EMDecomposition loop_shift(const EMDecomposition& d);

/// Keeps the factors of degree <= rho_dim. Throws DomainError if rho_dim < 1.
EMDecomposition nullification_truncate(const EMDecomposition& d, int rho_dim);

/// rho = (regular representation) + (m - r - p^n) eps, of dimension m - r.
/// Requires m > r + p^n; throws DomainError otherwise.
RepresentationDescriptor nullification_representation(const GroupSpec& g, int m, int r);

struct LGoodVerdict
{
    enum class Outcome { NotLGood, NecessaryConditionHolds };
    Outcome outcome;
    /// Two largest positive degrees with nonzero cohomology (r > s), for NotLGood.
    std::optional<std::pair<int, int>> witness;
    /// The single positive degree with nonzero cohomology, if there is one.
    std::optional<int> concentration_degree;
    /// Unreduced top-level Bredon cohomology with constant coefficients.
    std::vector<std::size_t> dims;
};

/// Necessary-condition test: two distinct positive degrees with nonzero
/// top-level cohomology rule out L-goodness. Never certifies L-goodness.
/// Throws DomainError for disconnected or invalid complexes.
LGoodVerdict lgood_check(const GCWComplex& a);

} // namespace bredon
