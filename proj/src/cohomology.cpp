#include "bredon/cohomology.hpp"

#include <future>
#include <map>
#include <stdexcept>
#include <tuple>

#include "bredon/error.hpp"

namespace bredon {

namespace {

struct CellSlot
{
    std::size_t offset;
    std::size_t size;
    bool present;
};

std::vector<std::vector<CellSlot>> cochain_layout(const GCWComplex& x, const CoefficientSystem& m, bool reduced,
                                                  std::vector<std::size_t>& dims)
{
    std::vector<std::vector<CellSlot>> slots(x.dimension() + 1);
    dims.assign(x.dimension() + 1, 0);
    for (int d = 0; d <= x.dimension(); ++d) {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            const bool dropped = reduced && d == 0 && i == *x.basepoint();
            const std::size_t size = dropped ? 0 : m.dim(x.stabilizer(d, i));
            slots[d].push_back({offset, size, !dropped});
            offset += size;
        }
        dims[d] = offset;
    }
    return slots;
}

} // namespace

CochainComplex cochain_complex(const GCWComplex& x, const CoefficientSystem& m, bool reduced)
{
    if (!(x.group() == m.group()))
        throw DomainError("coefficient system is over " + m.group().name() + " but the complex is over " +
                          x.group().name());
    if (reduced && !x.based())
        throw DomainError("reduced cohomology requires a basepoint");

    CochainComplex out;
    const auto slots = cochain_layout(x, m, reduced, out.dims);

    std::map<std::tuple<int, int, std::uint64_t>, RatMatrix> cache;
    auto evaluate = [&](int h, int k, std::uint64_t rep) -> const RatMatrix& {
        auto [it, inserted] = cache.try_emplace({h, k, rep});
        if (inserted)
            it->second = apply(m, {h, k, rep});
        return it->second;
    };

    for (int d = 1; d <= x.dimension(); ++d) {
        RatMatrix delta(out.dims[d], out.dims[d - 1]);
        for (std::size_t i = 0; i < x.cell_count(d); ++i) {
            const CellSlot& row = slots[d][i];
            const int h = x.stabilizer(d, i);
            for (const auto& e : x.boundary(d, i)) {
                const CellSlot& col = slots[d - 1][e.to];
                if (!col.present || row.size == 0 || col.size == 0)
                    continue;
                const int k = x.stabilizer(d - 1, e.to);
                for (const auto& t : e.terms) {
                    const RatMatrix& block = evaluate(h, k, t.rep);
                    for (std::size_t r = 0; r < block.rows(); ++r)
                        for (std::size_t c = 0; c < block.cols(); ++c)
                            if (sgn(block(r, c)) != 0)
                                delta(row.offset + r, col.offset + c) += t.coeff * block(r, c);
                }
            }
        }
        out.coboundary.push_back(std::move(delta));
    }
    return out;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c)
{
    std::vector<std::size_t> ranks;
    for (const auto& delta : c.coboundary)
        ranks.push_back(rank(delta));
    std::vector<std::size_t> out(c.dims.size());
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        const std::size_t outgoing = d < ranks.size() ? ranks[d] : 0;
        const std::size_t incoming = d > 0 ? ranks[d - 1] : 0;
        out[d] = c.dims[d] - outgoing - incoming;
    }
    return out;
}

CohomologyBasis::CohomologyBasis(const CochainComplex& c, std::size_t degree) : ambient_(c.dims.at(degree))
{
    std::vector<RatVector> boundaries;
    if (degree > 0)
        boundaries = image_basis(c.coboundary[degree - 1]);
    std::vector<RatVector> cocycles;
    if (degree < c.coboundary.size())
        cocycles = kernel_basis(c.coboundary[degree]);
    else
        cocycles = kernel_basis(RatMatrix(0, ambient_));

    boundary_rank_ = boundaries.size();
    std::vector<RatVector> columns = boundaries;
    columns.insert(columns.end(), cocycles.begin(), cocycles.end());
    // Pivot columns of [B | Z] are B followed by a greedy complement in Z.
    const std::vector<RatVector> spanning = image_basis(RatMatrix::from_columns(ambient_, columns));
    representatives_.assign(spanning.begin() + static_cast<std::ptrdiff_t>(boundary_rank_), spanning.end());
    frame_ = RatMatrix::from_columns(ambient_, spanning);
}

RatVector CohomologyBasis::coordinates(const RatVector& cocycle) const
{
    const auto x = solve(frame_, cocycle);
    if (!x)
        throw std::invalid_argument("CohomologyBasis::coordinates: vector is not a cocycle");
    return {x->begin() + static_cast<std::ptrdiff_t>(boundary_rank_), x->end()};
}

CohomologyRow cohomology(const GCWComplex& x, const CoefficientSystem& m, SubgroupIndex level, bool reduced)
{
    if (!x.group().contains(level))
        throw DomainError("level " + std::to_string(level) + " is not a subgroup index of " + x.group().name());
    if (!(x.group() == m.group()))
        throw DomainError("coefficient system is over " + m.group().name() + " but the complex is over " +
                          x.group().name());
    const GCWComplex restricted = restrict(x, level);
    const CoefficientSystem sub = restrict_system(m, level);
    return {level, cohomology_dims(cochain_complex(restricted, sub, reduced))};
}

const CohomologyRow& CohomologyTable::at_level(SubgroupIndex level) const
{
    for (const auto& row : rows)
        if (row.level == level)
            return row;
    throw std::out_of_range("no cohomology row for level " + std::to_string(level));
}

std::vector<SubgroupIndex> all_levels(const GroupSpec& g)
{
    std::vector<SubgroupIndex> levels;
    for (int k = static_cast<int>(g.n()); k >= 0; --k)
        levels.push_back(k);
    return levels;
}

CohomologyTable cohomology_table(const GCWComplex& x, const CoefficientSystem& m, std::string coefficients,
                                 const std::vector<SubgroupIndex>& levels, bool reduced, Execution exec)
{
    CohomologyTable table{x.group(), std::move(coefficients), reduced, {}};
    if (exec == Execution::Parallel) {
        std::vector<std::future<CohomologyRow>> pending;
        for (const SubgroupIndex level : levels)
            pending.push_back(std::async(std::launch::async, [&x, &m, level, reduced] {
                return cohomology(x, m, level, reduced);
            }));
        for (auto& f : pending)
            table.rows.push_back(f.get());
    } else {
        for (const SubgroupIndex level : levels)
            table.rows.push_back(cohomology(x, m, level, reduced));
    }
    return table;
}

std::vector<std::size_t> cellular_cohomology(const GCWComplex& trivial, bool reduced)
{
    if (trivial.group().n() != 0)
        throw std::invalid_argument("cellular_cohomology expects a complex over the trivial group");
    if (reduced && !trivial.based())
        throw DomainError("reduced cohomology requires a basepoint");

    const int top = trivial.dimension();
    std::vector<std::size_t> counts(top + 1);
    for (int d = 0; d <= top; ++d)
        counts[d] = trivial.cell_count(d);

    // Integer boundary matrix of C_d -> C_{d-1}, with the basepoint row
    // removed in the reduced case.
    auto boundary_rank = [&](int d) -> std::size_t {
        if (d < 1 || d > top)
            return 0;
        const bool drop = reduced && d == 1;
        const std::size_t skip = drop ? *trivial.basepoint() : counts[0];
        RatMatrix m(counts[d - 1] - (drop ? 1 : 0), counts[d]);
        for (std::size_t j = 0; j < counts[d]; ++j)
            for (const auto& e : trivial.boundary(d, j)) {
                if (e.to == skip && drop)
                    continue;
                const std::size_t row = drop && e.to > skip ? e.to - 1 : e.to;
                for (const auto& t : e.terms)
                    m(row, j) += t.coeff;
            }
        return rank(m);
    };

    std::vector<std::size_t> out(top + 1);
    for (int d = 0; d <= top; ++d) {
        const std::size_t cells = counts[d] - (reduced && d == 0 ? 1 : 0);
        out[d] = cells - boundary_rank(d) - boundary_rank(d + 1);
    }
    return out;
}

CohomologyRow quotient_oracle(const GCWComplex& x, SubgroupIndex level, bool reduced)
{
    return {level, cellular_cohomology(quotient(restrict(x, level)), reduced)};
}

std::int64_t euler_characteristic(const GCWComplex& x, SubgroupIndex level)
{
    return orbit_euler_characteristic(quotient(restrict(x, level)));
}

} // namespace bredon
