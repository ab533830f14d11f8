#include "bredon/io.hpp"

#include <fstream>
#include <sstream>

#include "bredon/error.hpp"

namespace bredon {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError(path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(path + "." + key, "missing field");
    return *it;
}

std::int64_t as_integer(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::uint64_t as_index(const Json& j, const std::string& path)
{
    const std::int64_t v = as_integer(j, path);
    if (v < 0)
        fail(path, "expected a non-negative integer, got " + std::to_string(v));
    return static_cast<std::uint64_t>(v);
}

const Json& as_array(const Json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    return j;
}

Rational as_rational(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        fail(path, "expected a rational string \"a/b\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

GroupSpec group_from_json(const Json& j, const std::string& path)
{
    const std::uint64_t p = as_index(field(j, "p", path), path + ".p");
    const std::uint64_t n = as_index(field(j, "n", path), path + ".n");
    try {
        return {static_cast<unsigned>(p), static_cast<unsigned>(n)};
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
}

RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    as_array(j, path);
    if (j.size() != rows)
        fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        as_array(j[r], rpath);
        if (j[r].size() != cols)
            fail(rpath, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = as_rational(j[r][c], rpath + "[" + std::to_string(c) + "]");
    }
    return m;
}

} // namespace

Json to_json(const GroupSpec& g)
{
    return Json{{"p", g.p()}, {"n", g.n()}};
}

Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (const auto& q : m.row(r))
            row.push_back(to_string(q));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const GCWComplex& x)
{
    Json out;
    out["group"] = to_json(x.group());
    out["basepoint"] = x.basepoint() ? Json{{"dim", 0}, {"index", *x.basepoint()}} : Json(nullptr);
    Json cells = Json::array();
    for (int d = 0; d <= x.dimension(); ++d) {
        Json level = Json::array();
        for (const SubgroupIndex k : x.stabilizers(d))
            level.push_back(Json{{"stab", k}});
        cells.push_back(std::move(level));
    }
    out["cells"] = std::move(cells);
    Json boundary = Json::array();
    for (int d = 1; d <= x.dimension(); ++d)
        for (std::size_t i = 0; i < x.cell_count(d); ++i)
            for (const auto& e : x.boundary(d, i)) {
                Json terms = Json::array();
                for (const auto& t : e.terms)
                    terms.push_back(Json{{"rep", t.rep}, {"coeff", t.coeff}});
                boundary.push_back(Json{{"dim", d}, {"from", i}, {"to", e.to}, {"terms", std::move(terms)}});
            }
    out["boundary"] = std::move(boundary);
    return out;
}

GCWComplex complex_from_json(const Json& j)
{
    if (!j.is_object())
        fail("$", "expected an object");
    const GroupSpec g = group_from_json(field(j, "group", "$"), "group");
    GCWBuilder b(g);

    const Json& cells = as_array(field(j, "cells", "$"), "cells");
    for (std::size_t d = 0; d < cells.size(); ++d) {
        const std::string dpath = "cells[" + std::to_string(d) + "]";
        as_array(cells[d], dpath);
        b.reserve_dimension(static_cast<int>(d));
        for (std::size_t i = 0; i < cells[d].size(); ++i) {
            const std::string cpath = dpath + "[" + std::to_string(i) + "]";
            const std::uint64_t stab = as_index(field(cells[d][i], "stab", cpath), cpath + ".stab");
            if (stab > g.n())
                fail(cpath + ".stab", "stabilizer index " + std::to_string(stab) + " exceeds n = " +
                                          std::to_string(g.n()));
            b.add_cell(static_cast<int>(d), static_cast<SubgroupIndex>(stab));
        }
    }
    auto stab_of = [&](std::size_t d, std::size_t i) { return cells[d][i]["stab"].get<SubgroupIndex>(); };

    if (j.contains("boundary")) {
        const Json& boundary = as_array(j["boundary"], "boundary");
        for (std::size_t e = 0; e < boundary.size(); ++e) {
            const std::string epath = "boundary[" + std::to_string(e) + "]";
            const Json& entry = boundary[e];
            const std::uint64_t d = as_index(field(entry, "dim", epath), epath + ".dim");
            if (d < 1 || d >= cells.size())
                fail(epath + ".dim", "no cells in dimension " + std::to_string(d) + " with a boundary");
            const std::uint64_t from = as_index(field(entry, "from", epath), epath + ".from");
            if (from >= cells[d].size())
                fail(epath + ".from", "no " + std::to_string(d) + "-cell " + std::to_string(from));
            const std::uint64_t to = as_index(field(entry, "to", epath), epath + ".to");
            if (to >= cells[d - 1].size())
                fail(epath + ".to", "no " + std::to_string(d - 1) + "-cell " + std::to_string(to));
            const std::uint64_t modulus = g.orbit_size(stab_of(d - 1, to));
            const Json& terms = as_array(field(entry, "terms", epath), epath + ".terms");
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tpath = epath + ".terms[" + std::to_string(t) + "]";
                const std::uint64_t rep = as_index(field(terms[t], "rep", tpath), tpath + ".rep");
                if (rep >= modulus)
                    fail(tpath + ".rep", "rep " + std::to_string(rep) + " must be below p^(n-k) = " +
                                             std::to_string(modulus));
                const std::int64_t coeff = as_integer(field(terms[t], "coeff", tpath), tpath + ".coeff");
                b.add_boundary(static_cast<int>(d), from, to, rep, coeff);
            }
        }
    }

    if (j.contains("basepoint") && !j["basepoint"].is_null()) {
        const Json& bp = j["basepoint"];
        const std::uint64_t d = as_index(field(bp, "dim", "basepoint"), "basepoint.dim");
        if (d != 0)
            fail("basepoint.dim", "basepoint must be a 0-cell");
        const std::uint64_t index = as_index(field(bp, "index", "basepoint"), "basepoint.index");
        if (cells.empty() || index >= cells[0].size())
            fail("basepoint.index", "no 0-cell " + std::to_string(index));
        b.set_basepoint(index);
    }
    return b.build();
}

Json to_json(const CoefficientSystem& m)
{
    Json out;
    out["group"] = to_json(m.group());
    out["dims"] = m.dims();
    Json weyl = Json::array();
    for (const auto& a : m.weyl_generators())
        weyl.push_back(to_json(a));
    out["weyl"] = std::move(weyl);
    Json restrictions = Json::array();
    for (const auto& r : m.restrictions())
        restrictions.push_back(to_json(r));
    out["restrictions"] = std::move(restrictions);
    return out;
}

CoefficientSystem system_from_json(const Json& j)
{
    if (!j.is_object())
        fail("$", "expected an object");
    const GroupSpec g = group_from_json(field(j, "group", "$"), "group");
    const std::size_t levels = g.n() + 1;

    const Json& dims_json = as_array(field(j, "dims", "$"), "dims");
    if (dims_json.size() != levels)
        fail("dims", "expected " + std::to_string(levels) + " entries");
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < levels; ++k)
        dims.push_back(as_index(dims_json[k], "dims[" + std::to_string(k) + "]"));

    const Json& weyl_json = as_array(field(j, "weyl", "$"), "weyl");
    if (weyl_json.size() != levels)
        fail("weyl", "expected " + std::to_string(levels) + " matrices");
    std::vector<RatMatrix> weyl;
    for (std::size_t k = 0; k < levels; ++k)
        weyl.push_back(matrix_from_json(weyl_json[k], dims[k], dims[k], "weyl[" + std::to_string(k) + "]"));

    const Json& res_json = as_array(field(j, "restrictions", "$"), "restrictions");
    if (res_json.size() != levels - 1)
        fail("restrictions", "expected " + std::to_string(levels - 1) + " matrices");
    std::vector<RatMatrix> restrictions;
    for (std::size_t k = 1; k < levels; ++k)
        restrictions.push_back(
            matrix_from_json(res_json[k - 1], dims[k - 1], dims[k], "restrictions[" + std::to_string(k - 1) + "]"));

    return {g, std::move(dims), std::move(weyl), std::move(restrictions)};
}

Json to_json(const CohomologyTable& t)
{
    Json levels = Json::array();
    for (const auto& row : t.rows)
        levels.push_back(Json{{"P", row.level}, {"dims", row.dims}});
    return Json{{"levels", std::move(levels)}, {"reduced", t.reduced}, {"coefficients", t.coefficients}};
}

Json to_json(const EMDecomposition& d)
{
    Json factors = Json::array();
    bool with_maps = false;
    for (const auto& f : d.factors) {
        Json values = Json::object();
        for (std::size_t level = 0; level < f.values.size(); ++level)
            values["P" + std::to_string(level)] = f.values[level];
        Json factor{{"degree", f.degree}, {"values", std::move(values)}};
        if (f.system) {
            factor["induced_system"] = to_json(*f.system);
            with_maps = true;
        }
        factors.push_back(std::move(factor));
    }
    Json out{{"m", d.target_dim}, {"r", d.top_degree}, {"factors", std::move(factors)}, {"reduced", true}};
    if (with_maps)
        out["extensions"] = Json::array({"induced_system: restriction and Weyl maps from orbit-space projections"});
    return out;
}

Json to_json(const LGoodVerdict& v)
{
    Json out;
    out["outcome"] = v.outcome == LGoodVerdict::Outcome::NotLGood ? "not-l-good" : "necessary-condition-holds";
    out["witness"] = v.witness ? Json::array({v.witness->first, v.witness->second}) : Json(nullptr);
    out["k"] = v.concentration_degree ? Json(*v.concentration_degree) : Json(nullptr);
    out["dims"] = v.dims;
    return out;
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string() + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

GCWComplex parse_complex(const std::filesystem::path& path)
{
    try {
        return complex_from_json(read_json_file(path));
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0)
            throw;
        throw ParseError(path.string() + ": " + what);
    }
}

CoefficientSystem parse_system(const std::filesystem::path& path)
{
    try {
        return system_from_json(read_json_file(path));
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0)
            throw;
        throw ParseError(path.string() + ": " + what);
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace bredon
