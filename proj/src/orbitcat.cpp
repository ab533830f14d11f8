#include "bredon/orbitcat.hpp"

#include <stdexcept>

#include "bredon/error.hpp"

namespace bredon {

namespace {

// Keep every residue and every p^e comfortably inside 64 bits.
constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 30;

} // namespace

bool is_prime(std::uint64_t x)
{
    if (x < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

unsigned p_valuation(std::uint64_t value, unsigned p)
{
    if (value == 0)
        throw std::invalid_argument("p_valuation of zero");
    unsigned v = 0;
    while (value % p == 0) {
        value /= p;
        ++v;
    }
    return v;
}

GroupSpec::GroupSpec(unsigned p, unsigned n) : p_(p), n_(n)
{
    if (!is_prime(p))
        throw DomainError("group order base p = " + std::to_string(p) + " is not prime");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n; ++i) {
        order *= p;
        if (order > kMaxGroupOrder)
            throw DomainError("group order " + std::to_string(p) + "^" + std::to_string(n) + " is too large");
    }
}

std::uint64_t GroupSpec::pow_p(unsigned e) const
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= p_;
    return r;
}

std::string GroupSpec::name() const
{
    return "C_" + std::to_string(order());
}

GroupSpec GroupSpec::subgroup(SubgroupIndex m) const
{
    if (!contains(m))
        throw std::invalid_argument("subgroup index " + std::to_string(m) + " out of range for " + name());
    return {p_, static_cast<unsigned>(m)};
}

std::uint64_t OrbitCategory::hom_count(SubgroupIndex h, SubgroupIndex k) const
{
    if (!group_.contains(h) || !group_.contains(k) || h > k)
        return 0;
    return group_.orbit_size(k);
}

std::vector<OrbitMorphism> OrbitCategory::hom_set(SubgroupIndex h, SubgroupIndex k) const
{
    std::vector<OrbitMorphism> out;
    const std::uint64_t count = hom_count(h, k);
    out.reserve(count);
    for (std::uint64_t a = 0; a < count; ++a)
        out.push_back({h, k, a});
    return out;
}

bool OrbitCategory::is_valid(const OrbitMorphism& f) const
{
    return group_.contains(f.source) && group_.contains(f.target) && f.source <= f.target &&
           f.rep < group_.orbit_size(f.target);
}

OrbitMorphism OrbitCategory::compose(const OrbitMorphism& f, const OrbitMorphism& g) const
{
    if (!is_valid(f) || !is_valid(g))
        throw std::invalid_argument("compose: invalid morphism");
    if (f.target != g.source)
        throw std::invalid_argument("compose: target " + std::to_string(f.target) + " does not match source " +
                                    std::to_string(g.source));
    // eH -> aK -> (a + b)L
    return {f.source, g.target, (f.rep + g.rep) % group_.orbit_size(g.target)};
}

CoefficientSystem::CoefficientSystem(GroupSpec g, std::vector<std::size_t> dims, std::vector<RatMatrix> weyl,
                                     std::vector<RatMatrix> restrictions)
    : group_(g), dims_(std::move(dims)), weyl_(std::move(weyl)), restrictions_(std::move(restrictions))
{
    const std::size_t levels = g.n() + 1;
    if (dims_.size() != levels || weyl_.size() != levels || restrictions_.size() != levels - 1)
        throw std::invalid_argument("CoefficientSystem: expected " + std::to_string(levels) +
                                    " levels of dims/weyl and " + std::to_string(levels - 1) + " restrictions");
    for (std::size_t k = 0; k < levels; ++k)
        if (weyl_[k].rows() != dims_[k] || weyl_[k].cols() != dims_[k])
            throw std::invalid_argument("CoefficientSystem: weyl[" + std::to_string(k) + "] must be " +
                                        std::to_string(dims_[k]) + "x" + std::to_string(dims_[k]));
    for (std::size_t k = 1; k < levels; ++k)
        if (restrictions_[k - 1].rows() != dims_[k - 1] || restrictions_[k - 1].cols() != dims_[k])
            throw std::invalid_argument("CoefficientSystem: restriction R_" + std::to_string(k) + " must be " +
                                        std::to_string(dims_[k - 1]) + "x" + std::to_string(dims_[k]));
}

std::optional<SystemViolation> validate_system(const CoefficientSystem& m)
{
    const GroupSpec& g = m.group();
    for (SubgroupIndex k = 0; k <= static_cast<int>(g.n()); ++k) {
        const std::uint64_t order = g.orbit_size(k);
        if (!power(m.weyl(k), order).is_identity())
            return SystemViolation{SystemViolation::Kind::WeylOrder, k,
                                   "A_" + std::to_string(k) + "^" + std::to_string(order) + " != I"};
    }
    for (SubgroupIndex k = 1; k <= static_cast<int>(g.n()); ++k) {
        const RatMatrix lhs = multiply(m.weyl(k - 1), m.restriction(k));
        const RatMatrix rhs = multiply(m.restriction(k), m.weyl(k));
        if (!(lhs == rhs))
            return SystemViolation{SystemViolation::Kind::Compatibility, k,
                                   "A_" + std::to_string(k - 1) + " R_" + std::to_string(k) + " != R_" +
                                       std::to_string(k) + " A_" + std::to_string(k) + " at k=" +
                                       std::to_string(k)};
    }
    return std::nullopt;
}

RatMatrix apply(const CoefficientSystem& m, const OrbitMorphism& f)
{
    const OrbitCategory cat(m.group());
    if (!cat.is_valid(f))
        throw std::invalid_argument("apply: morphism (" + std::to_string(f.source) + " -> " +
                                    std::to_string(f.target) + ", rep " + std::to_string(f.rep) +
                                    ") is not valid for " + m.group().name());
    RatMatrix out = power(m.weyl(f.target), f.rep);
    for (SubgroupIndex k = f.target; k > f.source; --k)
        out = multiply(m.restriction(k), out);
    return out;
}

CoefficientSystem constant_system(const GroupSpec& g)
{
    const std::size_t levels = g.n() + 1;
    return {g, std::vector<std::size_t>(levels, 1), std::vector<RatMatrix>(levels, RatMatrix::identity(1)),
            std::vector<RatMatrix>(levels - 1, RatMatrix::identity(1))};
}

CoefficientSystem zero_system(const GroupSpec& g)
{
    const std::size_t levels = g.n() + 1;
    return {g, std::vector<std::size_t>(levels, 0), std::vector<RatMatrix>(levels, RatMatrix{}),
            std::vector<RatMatrix>(levels - 1, RatMatrix{})};
}

CoefficientSystem restrict_system(const CoefficientSystem& m, SubgroupIndex level)
{
    const GroupSpec& g = m.group();
    const GroupSpec sub = g.subgroup(level);
    const std::uint64_t step = g.pow_p(g.n() - static_cast<unsigned>(level));
    std::vector<std::size_t> dims(m.dims().begin(), m.dims().begin() + level + 1);
    std::vector<RatMatrix> weyl;
    for (SubgroupIndex k = 0; k <= level; ++k)
        weyl.push_back(power(m.weyl(k), step));
    std::vector<RatMatrix> restrictions(m.restrictions().begin(), m.restrictions().begin() + level);
    return {sub, std::move(dims), std::move(weyl), std::move(restrictions)};
}

CoefficientSystem direct_sum(const CoefficientSystem& a, const CoefficientSystem& b)
{
    if (!(a.group() == b.group()))
        throw std::invalid_argument("direct_sum: systems over different groups");
    const std::size_t levels = a.group().n() + 1;
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> weyl;
    std::vector<RatMatrix> restrictions;
    for (std::size_t k = 0; k < levels; ++k) {
        dims.push_back(a.dims()[k] + b.dims()[k]);
        weyl.push_back(direct_sum(a.weyl_generators()[k], b.weyl_generators()[k]));
        if (k > 0)
            restrictions.push_back(direct_sum(a.restrictions()[k - 1], b.restrictions()[k - 1]));
    }
    return {a.group(), std::move(dims), std::move(weyl), std::move(restrictions)};
}

} // namespace bredon
