#pragma once

/**
 * The orbit category of the cyclic p-group C_{p^n}.
 *
 * Subgroups form a chain C_{p^0} < C_{p^1} < ... < C_{p^n}, so a subgroup is
 * named by its exponent k. The subgroup C_{p^k} of Z/p^n is generated by
 * p^{n-k}, and the orbit G/C_{p^k} is identified with Z/p^{n-k}. A G-map
 * G/C_{p^h} -> G/C_{p^k} exists only for h <= k, and is determined by the
 * image a.K of the identity coset; `rep` is that residue a mod p^{n-k}.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bredon/ratlinalg.hpp"

namespace bredon {

using SubgroupIndex = int;

class GroupSpec
{
public:
    /// Throws DomainError unless p is prime, n >= 0 and p^n fits comfortably.
    GroupSpec(unsigned p, unsigned n);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t order() const { return pow_p(n_); }
    /// p^e
    std::uint64_t pow_p(unsigned e) const;
    /// |G / C_{p^k}| = p^{n-k}
    std::uint64_t orbit_size(SubgroupIndex k) const { return pow_p(n_ - static_cast<unsigned>(k)); }
    bool contains(SubgroupIndex k) const { return k >= 0 && k <= static_cast<int>(n_); }
    /// Human-readable name: "C_8", "C_1".
    std::string name() const;

    /// The subgroup C_{p^m} as a group in its own right.
    GroupSpec subgroup(SubgroupIndex m) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    unsigned p_;
    unsigned n_;
};

bool is_prime(std::uint64_t x);

/// p-adic valuation of a nonzero integer.
unsigned p_valuation(std::uint64_t value, unsigned p);

struct OrbitMorphism
{
    SubgroupIndex source;
    SubgroupIndex target;
    std::uint64_t rep;

    friend bool operator==(const OrbitMorphism&, const OrbitMorphism&) = default;
    friend auto operator<=>(const OrbitMorphism&, const OrbitMorphism&) = default;
};

class OrbitCategory
{
public:
    explicit OrbitCategory(GroupSpec g) : group_(g) {}

    const GroupSpec& group() const { return group_; }

    /// All morphisms G/C_{p^h} -> G/C_{p^k}, ordered by rep; empty when h > k.
    std::vector<OrbitMorphism> hom_set(SubgroupIndex h, SubgroupIndex k) const;
    std::uint64_t hom_count(SubgroupIndex h, SubgroupIndex k) const;

    OrbitMorphism identity(SubgroupIndex k) const { return {k, k, 0}; }
    /// The projection G/C_{p^h} -> G/C_{p^k} sending eH to eK.
    OrbitMorphism projection(SubgroupIndex h, SubgroupIndex k) const { return {h, k, 0}; }
    /// Translation by 1 on G/C_{p^k}, the generator of its Weyl group.
    OrbitMorphism translation(SubgroupIndex k) const { return {k, k, 1 % group_.orbit_size(k)}; }

    /// f followed by g (diagrammatic order). Throws std::invalid_argument
    /// unless f.target == g.source.
    OrbitMorphism compose(const OrbitMorphism& f, const OrbitMorphism& g) const;

    bool is_valid(const OrbitMorphism& f) const;

private:
    GroupSpec group_;
};

/// A contravariant functor from the orbit category to finite-dimensional
/// rational vector spaces, presented by one Weyl generator per level and the
/// restrictions along adjacent projections.
///
/// weyl[k] is d_k x d_k; restrictions[k-1] is R_k, of shape d_{k-1} x d_k.
class CoefficientSystem
{
public:
    /// Checks shapes only (throws std::invalid_argument); the functor axioms
    /// are checked by validate_system.
    CoefficientSystem(GroupSpec g, std::vector<std::size_t> dims, std::vector<RatMatrix> weyl,
                      std::vector<RatMatrix> restrictions);

    const GroupSpec& group() const { return group_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(SubgroupIndex k) const { return dims_.at(static_cast<std::size_t>(k)); }
    const RatMatrix& weyl(SubgroupIndex k) const { return weyl_.at(static_cast<std::size_t>(k)); }
    /// R_k : M(G/C_{p^k}) -> M(G/C_{p^{k-1}}), for 1 <= k <= n.
    const RatMatrix& restriction(SubgroupIndex k) const { return restrictions_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<RatMatrix>& weyl_generators() const { return weyl_; }
    const std::vector<RatMatrix>& restrictions() const { return restrictions_; }

    friend bool operator==(const CoefficientSystem&, const CoefficientSystem&) = default;

private:
    GroupSpec group_;
    std::vector<std::size_t> dims_;
    std::vector<RatMatrix> weyl_;
    std::vector<RatMatrix> restrictions_;
};

struct SystemViolation
{
    enum class Kind { WeylOrder, Compatibility };
    Kind kind;
    SubgroupIndex level;
    std::string message;
};

/// The first failing identity, or nullopt if both axioms hold: A_k^{p^{n-k}} = I
/// for every k (checked in increasing k), then A_{k-1} R_k = R_k A_k.
std::optional<SystemViolation> validate_system(const CoefficientSystem& m);

/// M(f) : M(G/K) -> M(G/H), equal to R_{h+1} ... R_k A_k^{rep}.
/// Throws std::invalid_argument if f is not a morphism of m's orbit category.
RatMatrix apply(const CoefficientSystem& m, const OrbitMorphism& f);

/// The constant system: Q at every level, identities everywhere.
CoefficientSystem constant_system(const GroupSpec& g);

/// The zero system.
CoefficientSystem zero_system(const GroupSpec& g);

/// Restriction of m to the subgroup C_{p^level}: dimensions and adjacent
/// restrictions are kept below `level`; the Weyl generator of the subgroup is
/// translation by p^{n-level}, i.e. A_k^{p^{n-level}}.
CoefficientSystem restrict_system(const CoefficientSystem& m, SubgroupIndex level);

/// Levelwise direct sum of two systems over the same group.
CoefficientSystem direct_sum(const CoefficientSystem& a, const CoefficientSystem& b);

} // namespace bredon
