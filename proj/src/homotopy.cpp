#include "bredon/homotopy.hpp"

#include <algorithm>

#include "bredon/error.hpp"

namespace bredon {

HypothesisError::HypothesisError(int target_dim, int top_degree)
    : DomainError("target dimension m must exceed top cohomological degree r (m = " + std::to_string(target_dim) +
                  ", r = " + std::to_string(top_degree) + ")"),
      target_dim_(target_dim), top_degree_(top_degree)
{
}

bool EMFactor::trivial() const
{
    return std::all_of(values.begin(), values.end(), [](std::size_t v) { return v == 0; });
}

int top_nonzero_degree(const CohomologyTable& table)
{
    int top = 0;
    for (const auto& row : table.rows)
        for (std::size_t d = 0; d < row.dims.size(); ++d)
            if (row.dims[d] != 0)
                top = std::max(top, static_cast<int>(d));
    return top;
}

namespace {

void require_connected(const CohomologyTable& reduced)
{
    for (const auto& row : reduced.rows)
        if (!row.dims.empty() && row.dims[0] != 0)
            throw DomainError("complex is not connected: reduced H^0 at level " + std::to_string(row.level) +
                              " has dimension " + std::to_string(row.dims[0]));
}

std::size_t value_at(const CohomologyRow& row, int degree)
{
    if (degree < 0 || static_cast<std::size_t>(degree) >= row.dims.size())
        return 0;
    return row.dims[degree];
}

} // namespace

EMDecomposition mapping_decomposition(const GCWComplex& a, int m, const DecompositionOptions& options)
{
    require_valid(a);
    if (!a.based())
        throw DomainError("mapping_decomposition requires a based complex");
    const GroupSpec& g = a.group();
    const CohomologyTable reduced =
        cohomology_table(a, constant_system(g), "constant-Q", all_levels(g), true, options.exec);
    require_connected(reduced);

    const int r = top_nonzero_degree(reduced);
    if (m <= r)
        throw HypothesisError(m, r);

    EMDecomposition out{m, r, {}};
    for (int i = m - r; i <= m; ++i) {
        EMFactor factor;
        factor.degree = i;
        factor.values.resize(g.n() + 1);
        for (SubgroupIndex level = 0; level <= static_cast<int>(g.n()); ++level)
            factor.values[level] = value_at(reduced.at_level(level), m - i);
        if (factor.trivial())
            continue;
        if (options.with_maps)
            factor.system = derived_system(a, m - i);
        out.factors.push_back(std::move(factor));
    }
    return out;
}

CoefficientSystem derived_system(const GCWComplex& a, int q)
{
    if (!a.based())
        throw DomainError("derived_system requires a based complex");
    const GroupSpec& g = a.group();
    const int levels = static_cast<int>(g.n()) + 1;
    const GroupSpec trivial(g.p(), 0);
    const std::size_t basepoint = *a.basepoint();

    // Orbit cells of restrict(a, k) in the cochain degree q, as (cell, coset).
    struct LevelData
    {
        std::vector<std::pair<std::size_t, std::uint64_t>> cells;
        std::optional<CohomologyBasis> basis;
    };
    std::vector<LevelData> data(levels);
    const bool in_range = q >= 0 && q <= a.dimension();

    // Cochain coordinate of a restricted cell at `level`; in degree 0 the
    // basepoint is excluded.
    auto coordinate = [&](int level, std::size_t index) -> std::optional<std::size_t> {
        if (q != 0)
            return index;
        const std::size_t base = restricted_cell_index(a, level, 0, basepoint, 0);
        if (index == base)
            return std::nullopt;
        return index > base ? index - 1 : index;
    };

    for (int k = 0; k < levels && in_range; ++k) {
        for (std::size_t i = 0; i < a.cell_count(q); ++i)
            for (std::uint64_t c = 0; c < g.orbit_size(std::max(k, a.stabilizer(q, i))); ++c)
                data[k].cells.emplace_back(i, c);
        const GCWComplex orbit_space = quotient(restrict(a, k));
        data[k].basis.emplace(cochain_complex(orbit_space, constant_system(trivial), true), q);
    }

    auto pullback = [&](int from_level, int to_level, std::uint64_t shift, const RatVector& h) {
        // (f^* h)(c) = h(f(c)) where f sends coset c of a cell at from_level
        // to coset c + shift of the same cell at to_level.
        const std::size_t ambient = data[from_level].basis->ambient_dimension();
        RatVector out(ambient);
        for (std::size_t idx = 0; idx < data[from_level].cells.size(); ++idx) {
            const auto [cell, coset] = data[from_level].cells[idx];
            const auto src = coordinate(from_level, idx);
            if (!src)
                continue;
            const std::size_t image = restricted_cell_index(a, to_level, q, cell, coset + shift);
            const auto dst = coordinate(to_level, image);
            if (dst)
                out[*src] = h[*dst];
        }
        return out;
    };

    std::vector<std::size_t> dims(levels, 0);
    std::vector<RatMatrix> weyl;
    std::vector<RatMatrix> restrictions;
    for (int k = 0; k < levels; ++k) {
        const std::size_t dk = in_range ? data[k].basis->dimension() : 0;
        dims[k] = dk;
        RatMatrix a_k(dk, dk);
        for (std::size_t j = 0; j < dk; ++j) {
            const RatVector coords =
                data[k].basis->coordinates(pullback(k, k, 1, data[k].basis->representatives()[j]));
            for (std::size_t r = 0; r < dk; ++r)
                a_k(r, j) = coords[r];
        }
        weyl.push_back(std::move(a_k));
    }
    for (int k = 1; k < levels; ++k) {
        RatMatrix r_k(dims[k - 1], dims[k]);
        for (std::size_t j = 0; j < dims[k]; ++j) {
            const RatVector coords =
                data[k - 1].basis->coordinates(pullback(k - 1, k, 0, data[k].basis->representatives()[j]));
            for (std::size_t r = 0; r < dims[k - 1]; ++r)
                r_k(r, j) = coords[r];
        }
        restrictions.push_back(std::move(r_k));
    }
    return {g, std::move(dims), std::move(weyl), std::move(restrictions)};
}

EMDecomposition loop_shift(const EMDecomposition& d)
{
    EMDecomposition out{d.target_dim - 1, d.top_degree, {}};
    for (const auto& f : d.factors) {
        if (f.degree - 1 < 1)
            continue;
        EMFactor shifted = f;
        shifted.degree -= 1;
        out.factors.push_back(std::move(shifted));
    }
    return out;
}

EMDecomposition nullification_truncate(const EMDecomposition& d, int rho_dim)
{
    if (rho_dim < 1)
        throw DomainError("nullification dimension must be at least 1");
    EMDecomposition out{d.target_dim, d.top_degree, {}};
    for (const auto& f : d.factors)
        if (f.degree <= rho_dim)
            out.factors.push_back(f);
    return out;
}

RepresentationDescriptor nullification_representation(const GroupSpec& g, int m, int r)
{
    const auto order = static_cast<std::int64_t>(g.order());
    if (static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(r) + order)
        throw DomainError("nullifying representation needs m > r + p^n (m = " + std::to_string(m) +
                          ", r = " + std::to_string(r) + ", p^n = " + std::to_string(order) + ")");
    RepresentationDescriptor rho = regular_representation(g);
    for (std::int64_t i = 0; i < m - r - order; ++i)
        rho.summands.push_back({Irreducible::Kind::Trivial});
    return rho;
}

LGoodVerdict lgood_check(const GCWComplex& a)
{
    require_valid(a);
    const GroupSpec& g = a.group();
    const CohomologyRow row = cohomology(a, constant_system(g), static_cast<int>(g.n()), false);
    if (row.dims.empty() || row.dims[0] != 1)
        throw DomainError("lgood-check requires a connected complex (top-level H^0 has dimension " +
                          std::to_string(row.dims.empty() ? 0 : row.dims[0]) + ")");

    std::vector<int> degrees;
    for (std::size_t d = row.dims.size(); d-- > 1;)
        if (row.dims[d] != 0)
            degrees.push_back(static_cast<int>(d));

    LGoodVerdict v;
    v.dims = row.dims;
    if (degrees.size() >= 2) {
        v.outcome = LGoodVerdict::Outcome::NotLGood;
        v.witness = std::pair{degrees[0], degrees[1]};
    } else {
        v.outcome = LGoodVerdict::Outcome::NecessaryConditionHolds;
        if (!degrees.empty())
            v.concentration_degree = degrees[0];
    }
    return v;
}

} // namespace bredon
