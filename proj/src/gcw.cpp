#include "bredon/gcw.hpp"

#include <algorithm>
#include <stdexcept>

#include "bredon/error.hpp"

namespace bredon {

namespace {

const std::vector<BoundaryEntry> kNoEntries;
const std::vector<SubgroupIndex> kNoCells;

std::uint64_t mod(std::int64_t value, std::uint64_t modulus)
{
    const auto m = static_cast<std::int64_t>(modulus);
    const std::int64_t r = value % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

} // namespace

// ---------------------------------------------------------------------------
// GCWComplex / GCWBuilder

std::size_t GCWComplex::cell_count(int d) const
{
    if (d < 0 || d > dimension())
        return 0;
    return stabs_[d].size();
}

std::size_t GCWComplex::total_cells() const
{
    std::size_t total = 0;
    for (const auto& cells : stabs_)
        total += cells.size();
    return total;
}

const std::vector<SubgroupIndex>& GCWComplex::stabilizers(int d) const
{
    if (d < 0 || d > dimension())
        return kNoCells;
    return stabs_[d];
}

const std::vector<BoundaryEntry>& GCWComplex::boundary(int d, std::size_t i) const
{
    if (d < 1 || d > dimension())
        return kNoEntries;
    return boundary_[d].at(i);
}

void GCWBuilder::reserve_dimension(int dim)
{
    if (dim < 0)
        return;
    if (stabs_.size() <= static_cast<std::size_t>(dim))
        stabs_.resize(dim + 1);
}

std::size_t GCWBuilder::add_cell(int dim, SubgroupIndex stab)
{
    if (dim < 0)
        throw std::invalid_argument("add_cell: negative dimension");
    if (!group_.contains(stab))
        throw std::invalid_argument("add_cell: stabilizer index " + std::to_string(stab) + " out of range for " +
                                    group_.name());
    reserve_dimension(dim);
    stabs_[dim].push_back(stab);
    return stabs_[dim].size() - 1;
}

std::size_t GCWBuilder::cell_count(int dim) const
{
    if (dim < 0 || static_cast<std::size_t>(dim) >= stabs_.size())
        return 0;
    return stabs_[dim].size();
}

void GCWBuilder::add_boundary(int dim, std::size_t from, std::size_t to, std::uint64_t rep, std::int64_t coeff)
{
    if (dim < 1 || from >= cell_count(dim) || to >= cell_count(dim - 1))
        throw std::invalid_argument("add_boundary: no such cells (" + std::to_string(dim) + ", " +
                                    std::to_string(from) + " -> " + std::to_string(to) + ")");
    if (rep >= group_.orbit_size(stabs_[dim - 1][to]))
        throw std::invalid_argument("add_boundary: rep " + std::to_string(rep) + " out of range");
    if (coeff == 0)
        return;
    terms_[{dim, from, to}][rep] += coeff;
}

void GCWBuilder::set_basepoint(std::size_t index)
{
    if (index >= cell_count(0))
        throw std::invalid_argument("set_basepoint: no 0-cell " + std::to_string(index));
    basepoint_ = index;
}

GCWComplex GCWBuilder::build() const
{
    GCWComplex x(group_);
    x.stabs_ = stabs_;
    while (!x.stabs_.empty() && x.stabs_.back().empty())
        x.stabs_.pop_back();
    x.basepoint_ = basepoint_;
    x.boundary_.resize(x.stabs_.size());
    for (std::size_t d = 0; d < x.stabs_.size(); ++d)
        x.boundary_[d].resize(x.stabs_[d].size());
    // std::map iteration is ordered by (dim, from, to) and then rep.
    for (const auto& [key, reps] : terms_) {
        const auto& [dim, from, to] = key;
        BoundaryEntry entry{to, {}};
        for (const auto& [rep, coeff] : reps)
            if (coeff != 0)
                entry.terms.push_back({rep, coeff});
        if (!entry.terms.empty())
            x.boundary_[dim][from].push_back(std::move(entry));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<ComplexViolation> validate_complex(const GCWComplex& x)
{
    std::vector<ComplexViolation> out;
    const GroupSpec& g = x.group();
    const OrbitCategory cat(g);

    if (x.basepoint()) {
        const std::size_t b = *x.basepoint();
        if (x.stabilizer(0, b) != static_cast<int>(g.n()))
            out.push_back({ComplexViolation::Kind::Basepoint, 0, b, b,
                           "basepoint 0-cell " + std::to_string(b) + " is not G-fixed (stabilizer index " +
                               std::to_string(x.stabilizer(0, b)) + ")"});
    }

    for (int d = 1; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i)
            for (const auto& e : x.boundary(d, i)) {
                const int h = x.stabilizer(d, i);
                const int k = x.stabilizer(d - 1, e.to);
                if (h > k)
                    out.push_back({ComplexViolation::Kind::StabilizerOrder, d, i, e.to,
                                   "boundary entry from a cell with stabilizer index h=" + std::to_string(h) +
                                       " to a cell with k=" + std::to_string(k) + " (h > k) at block (d=" +
                                       std::to_string(d) + ", cell " + std::to_string(i) + " → cell " +
                                       std::to_string(e.to) + ")"});
            }

    for (std::size_t i = 0; i < x.cell_count(1); ++i) {
        std::int64_t total = 0;
        for (const auto& e : x.boundary(1, i))
            for (const auto& t : e.terms)
                total += t.coeff;
        if (total != 0)
            out.push_back({ComplexViolation::Kind::Augmentation, 1, i, 0,
                           "augmentation nonzero: boundary of 1-cell " + std::to_string(i) + " has coefficient sum " +
                               std::to_string(total)});
    }

    // Composite boundaries are only meaningful once stabilizers are ordered.
    const bool ordered = std::none_of(out.begin(), out.end(), [](const ComplexViolation& v) {
        return v.kind == ComplexViolation::Kind::StabilizerOrder;
    });
    if (!ordered)
        return out;

    for (int d = 2; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            std::map<std::size_t, std::map<std::uint64_t, std::int64_t>> composite;
            const int h = x.stabilizer(d, i);
            for (const auto& e1 : x.boundary(d, i)) {
                const int k = x.stabilizer(d - 1, e1.to);
                for (const auto& e2 : x.boundary(d - 1, e1.to)) {
                    const int l = x.stabilizer(d - 2, e2.to);
                    for (const auto& t1 : e1.terms)
                        for (const auto& t2 : e2.terms) {
                            const OrbitMorphism f = cat.compose({h, k, t1.rep}, {k, l, t2.rep});
                            composite[e2.to][f.rep] += t1.coeff * t2.coeff;
                        }
                }
            }
            for (const auto& [to, reps] : composite)
                if (std::any_of(reps.begin(), reps.end(), [](const auto& kv) { return kv.second != 0; }))
                    out.push_back({ComplexViolation::Kind::BoundarySquare, d, i, to,
                                   "ddboundary nonzero at block (d=" + std::to_string(d) + ", cell " +
                                       std::to_string(i) + " → cell " + std::to_string(to) + ")"});
        }
    return out;
}

void require_valid(const GCWComplex& x)
{
    const auto violations = validate_complex(x);
    if (!violations.empty())
        throw DomainError("invalid complex: " + violations.front().message);
}

// ---------------------------------------------------------------------------
// Representation spheres

std::size_t RepresentationDescriptor::dimension() const
{
    std::size_t dim = 0;
    for (const auto& s : summands)
        dim += s.kind == Irreducible::Kind::Rotation ? 2 : 1;
    return dim;
}

std::string to_string(const RepresentationDescriptor& v)
{
    if (v.summands.empty())
        return "0";
    std::string out;
    for (const auto& s : v.summands) {
        if (!out.empty())
            out += "+";
        switch (s.kind) {
        case Irreducible::Kind::Trivial: out += "eps"; break;
        case Irreducible::Kind::Sign: out += "sigma"; break;
        case Irreducible::Kind::Rotation: out += "lambda(" + std::to_string(s.j) + ")"; break;
        }
    }
    return out;
}

void validate_descriptor(const GroupSpec& g, const RepresentationDescriptor& v)
{
    for (const auto& s : v.summands) {
        switch (s.kind) {
        case Irreducible::Kind::Trivial: break;
        case Irreducible::Kind::Sign:
            if (g.p() != 2 || g.n() == 0)
                throw DomainError("sign representation sigma requires p = 2 and a nontrivial group, got " + g.name());
            break;
        case Irreducible::Kind::Rotation:
            if (s.j % g.order() == 0)
                throw DomainError("rotation lambda(" + std::to_string(s.j) + ") is trivial mod " +
                                  std::to_string(g.order()));
            if (s.j >= g.order())
                throw DomainError("rotation index " + std::to_string(s.j) + " not reduced mod " +
                                  std::to_string(g.order()));
            break;
        }
    }
}

Irreducible rotation(const GroupSpec& g, std::uint64_t j)
{
    return {Irreducible::Kind::Rotation, j % g.order()};
}

RepresentationDescriptor regular_representation(const GroupSpec& g)
{
    RepresentationDescriptor v;
    v.summands.push_back({Irreducible::Kind::Trivial});
    const std::uint64_t order = g.order();
    if (order == 1)
        return v;
    if (g.p() == 2)
        v.summands.push_back({Irreducible::Kind::Sign});
    for (std::uint64_t j = 1; 2 * j < order; ++j)
        v.summands.push_back(rotation(g, j));
    return v;
}

GCWComplex point(const GroupSpec& g)
{
    GCWBuilder b(g);
    b.set_basepoint(b.add_cell(0, static_cast<int>(g.n())));
    return b.build();
}

GCWComplex zero_sphere(const GroupSpec& g)
{
    const int top = static_cast<int>(g.n());
    GCWBuilder b(g);
    b.set_basepoint(b.add_cell(0, top));
    b.add_cell(0, top);
    return b.build();
}

GCWComplex trivial_sphere(const GroupSpec& g, int k)
{
    if (k < 0)
        throw DomainError("trivial sphere dimension must be non-negative");
    if (k == 0)
        return zero_sphere(g);
    const int top = static_cast<int>(g.n());
    GCWBuilder b(g);
    b.set_basepoint(b.add_cell(0, top));
    b.reserve_dimension(k);
    b.add_cell(k, top);
    return b.build();
}

GCWComplex irreducible_sphere(const GroupSpec& g, const Irreducible& summand)
{
    validate_descriptor(g, {{summand}});
    const int top = static_cast<int>(g.n());
    GCWBuilder b(g);
    const std::size_t infinity = b.add_cell(0, top);
    const std::size_t origin = b.add_cell(0, top);
    b.set_basepoint(infinity);

    // Each 1-cell runs from the origin to infinity.
    auto add_ray = [&](SubgroupIndex stab) {
        const std::size_t e = b.add_cell(1, stab);
        b.add_boundary(1, e, infinity, 0, 1);
        b.add_boundary(1, e, origin, 0, -1);
        return e;
    };

    switch (summand.kind) {
    case Irreducible::Kind::Trivial:
        add_ray(top);
        add_ray(top);
        break;
    case Irreducible::Kind::Sign:
        add_ray(top - 1);
        break;
    case Irreducible::Kind::Rotation: {
        // The kernel of the rotation is C_{p^w}; rays sit at angles
        // 2*pi*t/p^{n-w}. The generator moves ray t to ray t + j/p^w, so the
        // ray adjacent to ray 0 (counterclockwise) is the one labeled u with
        // u * (j/p^w) = 1 mod p^{n-w}.
        const auto w = static_cast<SubgroupIndex>(p_valuation(summand.j, g.p()));
        const std::uint64_t modulus = g.orbit_size(w);
        const std::uint64_t unit = (summand.j / g.pow_p(static_cast<unsigned>(w))) % modulus;
        std::uint64_t inverse = 0;
        for (std::uint64_t u = 1; u < modulus; ++u)
            if ((u * unit) % modulus == 1) {
                inverse = u;
                break;
            }
        const std::size_t ray = add_ray(w);
        b.reserve_dimension(2);
        const std::size_t sector = b.add_cell(2, w);
        b.add_boundary(2, sector, ray, 0, 1);
        b.add_boundary(2, sector, ray, inverse, -1);
        break;
    }
    }
    return b.build();
}

GCWComplex rep_sphere(const GroupSpec& g, const RepresentationDescriptor& v)
{
    validate_descriptor(g, v);
    if (v.summands.empty())
        return zero_sphere(g);
    GCWComplex out = irreducible_sphere(g, v.summands.front());
    for (std::size_t i = 1; i < v.summands.size(); ++i)
        out = smash(out, irreducible_sphere(g, v.summands[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Restriction, fixed points, quotient

namespace {

// offsets[d][i]: index of the first restricted cell coming from (d, i).
std::vector<std::vector<std::size_t>> restriction_offsets(const GCWComplex& x, SubgroupIndex m)
{
    const GroupSpec& g = x.group();
    std::vector<std::vector<std::size_t>> offsets(x.dimension() + 1);
    for (int d = 0; d <= x.dimension(); ++d) {
        std::size_t next = 0;
        for (const SubgroupIndex k : x.stabilizers(d)) {
            offsets[d].push_back(next);
            next += g.orbit_size(std::max(m, k));
        }
    }
    return offsets;
}

} // namespace

std::size_t restricted_cell_index(const GCWComplex& x, SubgroupIndex m, int d, std::size_t i, std::uint64_t a)
{
    const GroupSpec& g = x.group();
    std::size_t offset = 0;
    for (std::size_t j = 0; j < i; ++j)
        offset += g.orbit_size(std::max(m, x.stabilizer(d, j)));
    return offset + a % g.orbit_size(std::max(m, x.stabilizer(d, i)));
}

GCWComplex restrict(const GCWComplex& x, SubgroupIndex m)
{
    const GroupSpec& g = x.group();
    if (!g.contains(m))
        throw std::invalid_argument("restrict: subgroup index " + std::to_string(m) + " out of range for " + g.name());
    const std::uint64_t step = g.pow_p(g.n() - static_cast<unsigned>(m)); // generator of C_{p^m} in Z/p^n
    const auto offsets = restriction_offsets(x, m);

    GCWBuilder b(g.subgroup(m));
    b.reserve_dimension(x.dimension());
    for (int d = 0; d <= x.dimension(); ++d)
        for (const SubgroupIndex k : x.stabilizers(d))
            for (std::uint64_t a = 0; a < g.orbit_size(std::max(m, k)); ++a)
                b.add_cell(d, std::min(m, k));

    for (int d = 1; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            const std::uint64_t count = g.orbit_size(std::max(m, x.stabilizer(d, i)));
            for (const auto& e : x.boundary(d, i)) {
                const SubgroupIndex kt = x.stabilizer(d - 1, e.to);
                const std::uint64_t target_modulus = g.orbit_size(kt);
                const std::uint64_t orbit_modulus = g.orbit_size(std::max(m, kt));
                const std::uint64_t rep_modulus = g.subgroup(m).orbit_size(std::min(m, kt));
                for (std::uint64_t a = 0; a < count; ++a)
                    for (const auto& t : e.terms) {
                        // The coset a.H maps to (a + rep).K, which sits in
                        // orbit u mod p^{n-max(m,k)} at P-offset (u - orbit)/step.
                        const std::uint64_t u = (a + t.rep) % target_modulus;
                        const std::uint64_t orbit = u % orbit_modulus;
                        const std::uint64_t xi = ((u - orbit) / step) % rep_modulus;
                        b.add_boundary(d, offsets[d][i] + a, offsets[d - 1][e.to] + orbit, xi, t.coeff);
                    }
            }
        }
    if (x.basepoint())
        b.set_basepoint(offsets[0][*x.basepoint()]);
    return b.build();
}

GCWComplex fixed_points(const GCWComplex& x, SubgroupIndex m)
{
    const GroupSpec& g = x.group();
    if (!g.contains(m))
        throw std::invalid_argument("fixed_points: subgroup index " + std::to_string(m) + " out of range for " +
                                    g.name());
    GCWBuilder b(g);
    std::vector<std::vector<std::optional<std::size_t>>> index(x.dimension() + 1);
    for (int d = 0; d <= x.dimension(); ++d) {
        b.reserve_dimension(d);
        for (const SubgroupIndex k : x.stabilizers(d))
            index[d].push_back(k >= m ? std::optional(b.add_cell(d, k)) : std::nullopt);
    }
    for (int d = 1; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            if (!index[d][i])
                continue;
            for (const auto& e : x.boundary(d, i)) {
                if (!index[d - 1][e.to])
                    continue;
                for (const auto& t : e.terms)
                    b.add_boundary(d, *index[d][i], *index[d - 1][e.to], t.rep, t.coeff);
            }
        }
    if (x.basepoint() && index[0][*x.basepoint()])
        b.set_basepoint(*index[0][*x.basepoint()]);
    return b.build();
}

GCWComplex quotient(const GCWComplex& x)
{
    GCWBuilder b(GroupSpec(x.group().p(), 0));
    b.reserve_dimension(x.dimension());
    for (int d = 0; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i)
            b.add_cell(d, 0);
    for (int d = 1; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i)
            for (const auto& e : x.boundary(d, i))
                for (const auto& t : e.terms)
                    b.add_boundary(d, i, e.to, 0, t.coeff);
    if (x.basepoint())
        b.set_basepoint(*x.basepoint());
    return b.build();
}

// ---------------------------------------------------------------------------
// Smash and wedge

namespace {

struct ProductPoint
{
    std::uint64_t orbit; // c: the orbit of (0.H, c.K)
    std::uint64_t rep;   // z with (z.H, (c + z).K) equal to the point
};

// Locates the point (x.H, y.K) of G/H x G/K, where H = C_{p^h}, K = C_{p^k}.
ProductPoint locate(const GroupSpec& g, std::int64_t x, std::int64_t y, SubgroupIndex h, SubgroupIndex k)
{
    const std::uint64_t orbit = mod(y - x, g.orbit_size(std::max(h, k)));
    if (h <= k)
        return {orbit, mod(x, g.orbit_size(h))};
    return {orbit, mod(y - static_cast<std::int64_t>(orbit), g.orbit_size(k))};
}

} // namespace

GCWComplex smash(const GCWComplex& x, const GCWComplex& y)
{
    if (!x.based() || !y.based())
        throw DomainError("smash requires based complexes");
    if (!(x.group() == y.group()))
        throw DomainError("smash: complexes over different groups (" + x.group().name() + ", " + y.group().name() + ")");
    const GroupSpec& g = x.group();
    const std::size_t xb = *x.basepoint();
    const std::size_t yb = *y.basepoint();
    const int top = x.dimension() + y.dimension();

    GCWBuilder b(g);
    b.reserve_dimension(std::max(top, 0));
    b.set_basepoint(b.add_cell(0, static_cast<int>(g.n())));

    auto is_base = [](int d, std::size_t i, std::size_t base) { return d == 0 && i == base; };

    // first[(d1, i, d2, j)] = index of orbit c = 0 of the product block.
    std::map<std::tuple<int, std::size_t, int, std::size_t>, std::size_t> first;
    for (int dim = 0; dim <= top; ++dim)
        for (int d1 = 0; d1 <= std::min(dim, x.dimension()); ++d1) {
            const int d2 = dim - d1;
            if (d2 > y.dimension())
                continue;
            for (std::size_t i = 0; i < x.cell_count(d1); ++i) {
                if (is_base(d1, i, xb))
                    continue;
                for (std::size_t j = 0; j < y.cell_count(d2); ++j) {
                    if (is_base(d2, j, yb))
                        continue;
                    const SubgroupIndex h = x.stabilizer(d1, i);
                    const SubgroupIndex k = y.stabilizer(d2, j);
                    const std::uint64_t orbits = g.orbit_size(std::max(h, k));
                    for (std::uint64_t c = 0; c < orbits; ++c) {
                        const std::size_t idx = b.add_cell(dim, std::min(h, k));
                        if (c == 0)
                            first[{d1, i, d2, j}] = idx;
                    }
                }
            }
        }

    for (const auto& [key, base_index] : first) {
        const auto& [d1, i, d2, j] = key;
        const int dim = d1 + d2;
        if (dim == 0)
            continue;
        const SubgroupIndex h = x.stabilizer(d1, i);
        const SubgroupIndex k = y.stabilizer(d2, j);
        const std::uint64_t orbits = g.orbit_size(std::max(h, k));
        for (std::uint64_t c = 0; c < orbits; ++c) {
            const std::size_t cell = base_index + c;
            // d(sigma x tau) = d(sigma) x tau + (-1)^{dim sigma} sigma x d(tau)
            for (const auto& e : x.boundary(d1, i))
                for (const auto& t : e.terms) {
                    if (is_base(d1 - 1, e.to, xb)) {
                        if (dim == 1)
                            b.add_boundary(1, cell, 0, 0, t.coeff);
                        continue;
                    }
                    const SubgroupIndex h2 = x.stabilizer(d1 - 1, e.to);
                    const ProductPoint pt =
                        locate(g, static_cast<std::int64_t>(t.rep), static_cast<std::int64_t>(c), h2, k);
                    b.add_boundary(dim, cell, first.at({d1 - 1, e.to, d2, j}) + pt.orbit, pt.rep, t.coeff);
                }
            const std::int64_t sign = d1 % 2 == 0 ? 1 : -1;
            for (const auto& e : y.boundary(d2, j))
                for (const auto& t : e.terms) {
                    if (is_base(d2 - 1, e.to, yb)) {
                        if (dim == 1)
                            b.add_boundary(1, cell, 0, 0, sign * t.coeff);
                        continue;
                    }
                    const SubgroupIndex k2 = y.stabilizer(d2 - 1, e.to);
                    const ProductPoint pt =
                        locate(g, 0, static_cast<std::int64_t>(c + t.rep), h, k2);
                    b.add_boundary(dim, cell, first.at({d1, i, d2 - 1, e.to}) + pt.orbit, pt.rep, sign * t.coeff);
                }
        }
    }
    return b.build();
}

GCWComplex wedge(const GCWComplex& x, const GCWComplex& y)
{
    if (!x.based() || !y.based())
        throw DomainError("wedge requires based complexes");
    if (!(x.group() == y.group()))
        throw DomainError("wedge: complexes over different groups (" + x.group().name() + ", " + y.group().name() + ")");
    const std::size_t xb = *x.basepoint();
    const std::size_t yb = *y.basepoint();
    const int top = std::max(x.dimension(), y.dimension());

    GCWBuilder b(x.group());
    b.reserve_dimension(top);
    for (int d = 0; d <= x.dimension(); ++d)
        for (const SubgroupIndex k : x.stabilizers(d))
            b.add_cell(d, k);
    std::vector<std::vector<std::size_t>> yindex(y.dimension() + 1);
    for (int d = 0; d <= y.dimension(); ++d)
        for (std::size_t j = 0; j < y.cell_count(d); ++j)
            yindex[d].push_back(d == 0 && j == yb ? xb : b.add_cell(d, y.stabilizer(d, j)));

    for (int d = 1; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i)
            for (const auto& e : x.boundary(d, i))
                for (const auto& t : e.terms)
                    b.add_boundary(d, i, e.to, t.rep, t.coeff);
    for (int d = 1; d <= y.dimension(); ++d)
        for (std::size_t j = 0; j < y.cell_count(d); ++j)
            for (const auto& e : y.boundary(d, j))
                for (const auto& t : e.terms)
                    b.add_boundary(d, yindex[d][j], yindex[d - 1][e.to], t.rep, t.coeff);
    b.set_basepoint(xb);
    return b.build();
}

std::int64_t orbit_euler_characteristic(const GCWComplex& x)
{
    std::int64_t chi = 0;
    for (int d = 0; d <= x.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(x.cell_count(d));
    return chi;
}

} // namespace bredon
