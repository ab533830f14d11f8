#pragma once

/**
 * Finite C_{p^n}-CW complexes, stored as their cellular chain complexes of
 * free coefficient systems.
 *
 * A d-cell orbit with stabilizer C_{p^h} contributes the representable system
 * Q[Hom(-, G/C_{p^h})]. By Yoneda, the boundary of such a cell is a formal
 * integer combination of orbit-category morphisms G/C_{p^h} -> G/C_{p^k}
 * into the (d-1)-cell orbits; that combination is what a BoundaryEntry holds.
 * No attaching maps are stored.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bredon/orbitcat.hpp"

namespace bredon {

struct BoundaryTerm
{
    std::uint64_t rep;
    std::int64_t coeff;

    friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

/// Boundary block from one d-cell to one (d-1)-cell. Terms are sorted by rep
/// with nonzero coefficients.
struct BoundaryEntry
{
    std::size_t to;
    std::vector<BoundaryTerm> terms;

    friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

class GCWComplex
{
public:
    const GroupSpec& group() const { return group_; }

    /// Top cell dimension, or -1 for the empty complex.
    int dimension() const { return static_cast<int>(stabs_.size()) - 1; }
    std::size_t cell_count(int d) const;
    std::size_t total_cells() const;
    SubgroupIndex stabilizer(int d, std::size_t i) const { return stabs_.at(d).at(i); }
    const std::vector<SubgroupIndex>& stabilizers(int d) const;

    /// Boundary entries of the d-cell i (d >= 1), sorted by target index.
    const std::vector<BoundaryEntry>& boundary(int d, std::size_t i) const;

    std::optional<std::size_t> basepoint() const { return basepoint_; }
    bool based() const { return basepoint_.has_value(); }

    friend bool operator==(const GCWComplex&, const GCWComplex&) = default;

private:
    friend class GCWBuilder;
    explicit GCWComplex(GroupSpec g) : group_(g) {}

    GroupSpec group_;
    std::vector<std::vector<SubgroupIndex>> stabs_;
    // boundary_[d][i]: entries of the d-cell i; boundary_[0] holds empty lists.
    std::vector<std::vector<std::vector<BoundaryEntry>>> boundary_;
    std::optional<std::size_t> basepoint_;
};

/// Accumulates cells and boundary terms, then freezes them into a canonical
/// GCWComplex: terms with equal rep are merged, zero terms and empty entries
/// are dropped, and everything is sorted.
class GCWBuilder
{
public:
    explicit GCWBuilder(GroupSpec g) : group_(g) {}

    const GroupSpec& group() const { return group_; }
    std::size_t add_cell(int dim, SubgroupIndex stab);
    std::size_t cell_count(int dim) const;
    /// Adds coeff * (rep: G/H_from -> G/K_to) to the boundary of (dim, from).
    void add_boundary(int dim, std::size_t from, std::size_t to, std::uint64_t rep, std::int64_t coeff);
    void set_basepoint(std::size_t index);
    /// Ensures cell lists exist up to `dim` even if empty.
    void reserve_dimension(int dim);

    GCWComplex build() const;

private:
    GroupSpec group_;
    std::vector<std::vector<SubgroupIndex>> stabs_;
    std::map<std::tuple<int, std::size_t, std::size_t>, std::map<std::uint64_t, std::int64_t>> terms_;
    std::optional<std::size_t> basepoint_;
};

struct ComplexViolation
{
    enum class Kind { StabilizerOrder, BoundarySquare, Augmentation, Basepoint };
    Kind kind;
    int dim;
    std::size_t from;
    std::size_t to;
    std::string message;
};

/// Every violated invariant, in a deterministic order. Checks: boundary
/// entries only go from smaller to larger stabilizers; the composite boundary
/// vanishes in the free span of each hom-set; every 1-cell has boundary
/// coefficients summing to zero; the basepoint is a G-fixed 0-cell.
std::vector<ComplexViolation> validate_complex(const GCWComplex& x);

/// Throws DomainError carrying the first violation, if any.
void require_valid(const GCWComplex& x);

// ---------------------------------------------------------------------------
// Representation spheres

struct Irreducible
{
    enum class Kind { Trivial, Sign, Rotation };
    Kind kind;
    std::uint64_t j = 0; // rotation index, reduced mod p^n

    friend bool operator==(const Irreducible&, const Irreducible&) = default;
};

struct RepresentationDescriptor
{
    std::vector<Irreducible> summands;

    std::size_t dimension() const;
    friend bool operator==(const RepresentationDescriptor&, const RepresentationDescriptor&) = default;
};

/// "eps+sigma+lambda(3)"; the empty representation prints as "0".
std::string to_string(const RepresentationDescriptor& v);

/// Throws DomainError if a summand is not a representation of g.
void validate_descriptor(const GroupSpec& g, const RepresentationDescriptor& v);

/// Rotation by 2*pi*j/p^n, with j reduced mod p^n.
Irreducible rotation(const GroupSpec& g, std::uint64_t j);

/// The real regular representation split into irreducibles: eps, sigma when
/// p = 2, and lambda(j) for 1 <= j < p^n/2. Its dimension is p^n.
RepresentationDescriptor regular_representation(const GroupSpec& g);

/// A single fixed 0-cell, which is also the basepoint.
GCWComplex point(const GroupSpec& g);

/// Two fixed points, based at the first: the smash unit.
GCWComplex zero_sphere(const GroupSpec& g);

/// S^k with trivial action: a fixed basepoint and one fixed k-cell (k >= 1);
/// k = 0 gives zero_sphere.
GCWComplex trivial_sphere(const GroupSpec& g, int k);

/// One-point compactification S^V, based at the point at infinity (0-cell 0).
/// Built by smashing the spheres of the irreducible summands in order.
GCWComplex rep_sphere(const GroupSpec& g, const RepresentationDescriptor& v);

/// The sphere of one irreducible summand.
GCWComplex irreducible_sphere(const GroupSpec& g, const Irreducible& summand);

// ---------------------------------------------------------------------------
// Constructions

/// The underlying C_{p^m}-complex. The G-orbit of a cell with stabilizer
/// C_{p^k} splits into p^{n-max(m,k)} orbits with stabilizer C_{p^min(m,k)};
/// orbit a contains the cosets congruent to a mod p^{n-max(m,k)}.
GCWComplex restrict(const GCWComplex& x, SubgroupIndex m);

/// Cell (d, i) of restrict(x, m) that holds the coset a.H of cell (d, i) of x.
std::size_t restricted_cell_index(const GCWComplex& x, SubgroupIndex m, int d, std::size_t i, std::uint64_t a);

/// The C_{p^m}-fixed subcomplex: cells whose stabilizer contains C_{p^m}. The
/// result is still a G-complex (G acts through G/C_{p^m}).
GCWComplex fixed_points(const GCWComplex& x, SubgroupIndex m);

/// The orbit space X/G as a complex over the trivial group: one cell per
/// orbit, boundary coefficients summed over the terms of each block.
GCWComplex quotient(const GCWComplex& x);

/// X smash Y. Throws DomainError if either input is unbased or the groups differ.
GCWComplex smash(const GCWComplex& x, const GCWComplex& y);

/// X wedge Y, based at the basepoint of X.
GCWComplex wedge(const GCWComplex& x, const GCWComplex& y);

/// Alternating sum of orbit-cell counts.
std::int64_t orbit_euler_characteristic(const GCWComplex& x);

} // namespace bredon
