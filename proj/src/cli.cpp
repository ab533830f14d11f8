#include "bredon/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bredon/builtin.hpp"
#include "bredon/cohomology.hpp"
#include "bredon/error.hpp"
#include "bredon/gcw.hpp"
#include "bredon/homotopy.hpp"
#include "bredon/io.hpp"

namespace bredon::cli {

namespace {

struct Options
{
    std::vector<std::string> files;
    std::vector<std::string> builtins;
    std::optional<int> level;
    bool all_levels = false;
    bool reduced = false;
    std::string coeff = "constant-q";
    std::optional<int> target_dim;
    std::optional<int> truncate;
    bool nullify = false;
    bool with_maps = false;
    bool show_unreduced = false;
    bool show_basis = false;
    bool parallel = false;
    std::optional<std::string> json;
};

struct Input
{
    std::string name;
    GCWComplex complex;
};

class Table
{
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const
    {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c)
                line += c + 1 == row.size() ? row[c] : fmt::format("{:<{}}  ", row[c], width[c]);
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

bool is_constant(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s == "constant-q";
}

std::vector<Input> load_inputs(const Options& o, bool validate)
{
    std::vector<Input> inputs;
    // Parsed first: GCC 11 leaks aggregate members when an initializer throws.
    for (const auto& f : o.files) {
        GCWComplex x = parse_complex(f);
        inputs.push_back({f, std::move(x)});
    }
    for (const auto& b : o.builtins) {
        GCWComplex x = parse_builtin(b);
        inputs.push_back({b, std::move(x)});
    }
    if (validate)
        for (const auto& in : inputs)
            try {
                require_valid(in.complex);
            } catch (const DomainError& e) {
                throw DomainError(in.name + ": " + e.what());
            }
    return inputs;
}

Input single_input(const Options& o, const std::string& verb)
{
    auto inputs = load_inputs(o, true);
    if (inputs.size() != 1)
        throw CLI::ValidationError(verb + " takes exactly one complex (got " + std::to_string(inputs.size()) + ")");
    return std::move(inputs.front());
}

std::string subgroup_name(const GroupSpec& g, SubgroupIndex k)
{
    return g.subgroup(k).name();
}

std::vector<SubgroupIndex> selected_levels(const Options& o, const GroupSpec& g)
{
    if (o.all_levels)
        return all_levels(g);
    const int level = o.level.value_or(static_cast<int>(g.n()));
    if (!g.contains(level))
        throw DomainError("level " + std::to_string(level) + " is not a subgroup index of " + g.name() +
                          " (expected 0.." + std::to_string(g.n()) + ")");
    return {level};
}

SubgroupIndex required_level(const Options& o, const GroupSpec& g, const std::string& verb)
{
    if (!o.level)
        throw CLI::ValidationError(verb + " requires --level");
    if (!g.contains(*o.level))
        throw DomainError("level " + std::to_string(*o.level) + " is not a subgroup index of " + g.name() +
                          " (expected 0.." + std::to_string(g.n()) + ")");
    return *o.level;
}

void emit_json(const Options& o, const Json& j, std::ostream& out)
{
    if (o.json->empty()) {
        out << dump(j);
        return;
    }
    std::ofstream file(*o.json);
    if (!file)
        throw ParseError("cannot write " + *o.json);
    file << dump(j);
}

void print_complex(const std::string& title, const GCWComplex& x, std::ostream& out)
{
    const GroupSpec& g = x.group();
    out << title << ": " << g.name() << "-complex, "
        << (x.based() ? "based at 0-cell " + std::to_string(*x.basepoint()) : std::string("unbased")) << '\n';
    Table t({"dim", "cells", "stabilizers"});
    for (int d = 0; d <= x.dimension(); ++d) {
        std::string stabs;
        for (const SubgroupIndex k : x.stabilizers(d))
            stabs += (stabs.empty() ? "" : " ") + subgroup_name(g, k);
        t.add({std::to_string(d), std::to_string(x.cell_count(d)), stabs.empty() ? "-" : stabs});
    }
    t.print(out);
}

void print_cohomology(const std::string& title, const CohomologyTable& table, std::ostream& out)
{
    out << title << " with " << table.coefficients << " coefficients, "
        << (table.reduced ? "reduced" : "unreduced") << '\n';
    std::size_t degrees = 0;
    for (const auto& row : table.rows)
        degrees = std::max(degrees, row.dims.size());
    std::vector<std::string> header{"level", "P"};
    for (std::size_t d = 0; d < degrees; ++d)
        header.push_back("H^" + std::to_string(d));
    Table t(header);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells{std::to_string(row.level), subgroup_name(table.group, row.level)};
        for (std::size_t d = 0; d < degrees; ++d)
            cells.push_back(std::to_string(d < row.dims.size() ? row.dims[d] : 0));
        t.add(cells);
    }
    t.print(out);
}

std::string vector_string(const RatVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

Json basis_json(const GCWComplex& x, const CoefficientSystem& m, const CohomologyTable& table)
{
    Json levels = Json::array();
    for (const auto& row : table.rows) {
        const CochainComplex c =
            cochain_complex(restrict(x, row.level), restrict_system(m, row.level), table.reduced);
        Json degrees = Json::array();
        for (std::size_t d = 0; d < c.dims.size(); ++d) {
            Json reps = Json::array();
            const CohomologyBasis basis(c, d);
            for (const auto& v : basis.representatives()) {
                Json entries = Json::array();
                for (const auto& q : v)
                    entries.push_back(to_string(q));
                reps.push_back(std::move(entries));
            }
            degrees.push_back(std::move(reps));
        }
        levels.push_back(Json{{"P", row.level}, {"representatives", std::move(degrees)}});
    }
    return levels;
}

CoefficientSystem load_coefficients(const Options& o, const GroupSpec& g, std::string& description)
{
    if (is_constant(o.coeff)) {
        description = "constant-Q";
        return constant_system(g);
    }
    description = o.coeff;
    CoefficientSystem m = parse_system(o.coeff);
    if (const auto violation = validate_system(m))
        throw DomainError(o.coeff + ": invalid coefficient system: " + violation->message);
    return m;
}

Execution execution(const Options& o)
{
    return o.parallel ? Execution::Parallel : Execution::Sequential;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto inputs = load_inputs(o, false);
    if (inputs.empty() && is_constant(o.coeff))
        throw CLI::ValidationError("validate needs at least one complex or --coeff <file>");
    bool ok = true;
    Json reports = Json::array();
    for (const auto& in : inputs) {
        const auto violations = validate_complex(in.complex);
        ok = ok && violations.empty();
        Json items = Json::array();
        for (const auto& v : violations)
            items.push_back(v.message);
        reports.push_back(Json{{"input", in.name}, {"valid", violations.empty()}, {"violations", items}});
        if (!o.json) {
            out << in.name << ": " << (violations.empty() ? "valid" : "INVALID") << '\n';
            for (const auto& v : violations)
                out << "  " << v.message << '\n';
        }
    }
    if (!is_constant(o.coeff)) {
        const CoefficientSystem m = parse_system(o.coeff);
        const auto violation = validate_system(m);
        ok = ok && !violation;
        Json items = Json::array();
        if (violation)
            items.push_back(violation->message);
        reports.push_back(Json{{"input", o.coeff}, {"valid", !violation}, {"violations", items}});
        if (!o.json) {
            out << o.coeff << ": " << (violation ? "INVALID" : "valid") << '\n';
            if (violation)
                out << "  " << violation->message << '\n';
        }
    }
    if (o.json)
        emit_json(o, Json{{"reports", reports}}, out);
    return ok ? Success : DomainFailure;
}

int cmd_cohomology(const Options& o, std::ostream& out)
{
    const Input in = single_input(o, "cohomology");
    const GroupSpec& g = in.complex.group();
    std::string description;
    const CoefficientSystem m = load_coefficients(o, g, description);
    const auto levels = selected_levels(o, g);
    const CohomologyTable table = cohomology_table(in.complex, m, description, levels, o.reduced, execution(o));
    if (o.json) {
        Json j = to_json(table);
        if (o.show_basis)
            j["basis"] = basis_json(in.complex, m, table);
        emit_json(o, j, out);
        return Success;
    }
    print_cohomology("H^*_P(" + in.name + ")", table, out);
    if (o.show_basis) {
        const Json levels_json = basis_json(in.complex, m, table);
        for (const auto& level : levels_json) {
            out << "cocycle representatives at level " << level["P"].get<int>() << ":\n";
            const Json& degrees = level["representatives"];
            for (std::size_t d = 0; d < degrees.size(); ++d)
                for (const auto& rep : degrees[d]) {
                    RatVector v;
                    for (const auto& q : rep)
                        v.push_back(parse_rational(q.get<std::string>()));
                    out << "  H^" << d << ": " << vector_string(v) << '\n';
                }
        }
    }
    return Success;
}

int cmd_quotient(const Options& o, std::ostream& out)
{
    const Input in = single_input(o, "quotient");
    const GroupSpec& g = in.complex.group();
    const auto levels = selected_levels(o, g);
    if (o.json) {
        Json j = Json::array();
        for (const SubgroupIndex level : levels) {
            const CohomologyRow row = quotient_oracle(in.complex, level, o.reduced);
            j.push_back(Json{{"P", level},
                             {"complex", to_json(quotient(restrict(in.complex, level)))},
                             {"dims", row.dims},
                             {"euler", euler_characteristic(in.complex, level)}});
        }
        emit_json(o, Json{{"reduced", o.reduced}, {"quotients", j}}, out);
        return Success;
    }
    CohomologyTable table{g, "Q", o.reduced, {}};
    for (const SubgroupIndex level : levels) {
        print_complex(in.name + " / " + subgroup_name(g, level), quotient(restrict(in.complex, level)), out);
        table.rows.push_back(quotient_oracle(in.complex, level, o.reduced));
    }
    print_cohomology("H^*(" + in.name + " / P)", table, out);
    return Success;
}

int cmd_restrict(const Options& o, std::ostream& out, bool fixed)
{
    const std::string verb = fixed ? "fixed-points" : "restrict";
    const Input in = single_input(o, verb);
    const SubgroupIndex level = required_level(o, in.complex.group(), verb);
    const GCWComplex x = fixed ? fixed_points(in.complex, level) : restrict(in.complex, level);
    if (o.json)
        emit_json(o, to_json(x), out);
    else
        print_complex(verb + "(" + in.name + ", " + subgroup_name(in.complex.group(), level) + ")", x, out);
    return Success;
}

void print_decomposition(const EMDecomposition& d, const GroupSpec& g, std::ostream& out)
{
    out << "Map_*(A, K(Q, " << d.target_dim << ")), r = " << d.top_degree << '\n';
    if (d.factors.empty()) {
        out << "no nontrivial factors\n";
        return;
    }
    std::vector<std::string> header{"factor"};
    for (const SubgroupIndex level : all_levels(g))
        header.push_back("M(G/" + subgroup_name(g, level) + ")");
    Table t(header);
    for (const auto& f : d.factors) {
        std::vector<std::string> row{fmt::format("K(M^{}, {})", d.target_dim - f.degree, f.degree)};
        for (const SubgroupIndex level : all_levels(g))
            row.push_back(std::to_string(f.values[level]));
        t.add(row);
    }
    t.print(out);
    for (const auto& f : d.factors)
        if (f.system) {
            out << "restriction and Weyl maps of M^" << d.target_dim - f.degree << " (computed from orbit-space "
                << "projections):\n";
            for (SubgroupIndex k = static_cast<int>(g.n()); k >= 0; --k) {
                const RatMatrix& a = f.system->weyl(k);
                for (std::size_t r = 0; r < a.rows(); ++r)
                    out << "  A_" << k << " row " << r << ": " << vector_string(RatVector(a.row(r).begin(), a.row(r).end()))
                        << '\n';
            }
            for (SubgroupIndex k = static_cast<int>(g.n()); k >= 1; --k) {
                const RatMatrix& rk = f.system->restriction(k);
                for (std::size_t r = 0; r < rk.rows(); ++r)
                    out << "  R_" << k << " row " << r << ": "
                        << vector_string(RatVector(rk.row(r).begin(), rk.row(r).end())) << '\n';
            }
        }
}

int cmd_map_decompose(const Options& o, std::ostream& out)
{
    const Input in = single_input(o, "map-decompose");
    if (!o.target_dim)
        throw CLI::ValidationError("map-decompose requires --target-dim");
    const GroupSpec& g = in.complex.group();
    const EMDecomposition full = mapping_decomposition(in.complex, *o.target_dim, {o.with_maps, execution(o)});

    EMDecomposition shown = full;
    std::optional<RepresentationDescriptor> rho;
    if (o.nullify) {
        const int rho_dim = full.target_dim - full.top_degree;
        rho = nullification_representation(g, full.target_dim, full.top_degree);
        shown = nullification_truncate(full, rho_dim);
    }
    if (o.truncate)
        shown = nullification_truncate(shown, *o.truncate);

    std::optional<CohomologyTable> unreduced;
    if (o.show_unreduced)
        unreduced = cohomology_table(in.complex, constant_system(g), "constant-Q", all_levels(g), false, execution(o));

    if (o.json) {
        Json j = to_json(shown);
        if (rho)
            j["nullification"] = Json{{"rho", to_string(*rho)}, {"dim", rho->dimension()}};
        if (unreduced)
            j["unreduced"] = to_json(*unreduced);
        emit_json(o, j, out);
        return Success;
    }
    print_decomposition(shown, g, out);
    if (rho)
        out << "nullified at S^rho, rho = " << to_string(*rho) << " (dim " << rho->dimension() << ")\n";
    if (unreduced)
        print_cohomology("H^*_P(" + in.name + ")", *unreduced, out);
    return Success;
}

int cmd_lgood(const Options& o, std::ostream& out)
{
    const Input in = single_input(o, "lgood-check");
    const LGoodVerdict v = lgood_check(in.complex);
    if (o.json) {
        emit_json(o, to_json(v), out);
        return Success;
    }
    if (v.outcome == LGoodVerdict::Outcome::NotLGood) {
        out << in.name << ": not-l-good, witness [" << v.witness->first << "," << v.witness->second << "]\n";
    } else {
        out << in.name << ": necessary-condition-holds, "
            << (v.concentration_degree ? "k = " + std::to_string(*v.concentration_degree)
                                       : std::string("no positive degree"))
            << " (necessary condition only, not a certificate)\n";
    }
    std::string dims;
    for (std::size_t d = 0; d < v.dims.size(); ++d)
        dims += (d ? " " : "") + std::to_string(v.dims[d]);
    out << "top-level H^* dims: " << dims << '\n';
    return Success;
}

int cmd_builtin(const Options& o, std::ostream& out)
{
    std::vector<std::string> names = o.builtins;
    names.insert(names.end(), o.files.begin(), o.files.end());
    if (names.empty()) {
        if (o.json) {
            emit_json(o, Json{{"corpus", builtin_corpus()}}, out);
            return Success;
        }
        Table t({"descriptor", "dim", "orbit cells"});
        for (const auto& name : builtin_corpus()) {
            const GCWComplex x = parse_builtin(name);
            t.add({name, std::to_string(x.dimension()), std::to_string(x.total_cells())});
        }
        t.print(out);
        return Success;
    }
    if (o.json) {
        if (names.size() != 1)
            throw CLI::ValidationError("builtin --json takes exactly one descriptor");
        emit_json(o, to_json(parse_builtin(names.front())), out);
        return Success;
    }
    for (const auto& name : names)
        print_complex(name, parse_builtin(name), out);
    return Success;
}

int cmd_combine(const Options& o, std::ostream& out, bool is_smash)
{
    const auto inputs = load_inputs(o, true);
    const std::string verb = is_smash ? "smash" : "wedge";
    if (inputs.size() < 2)
        throw CLI::ValidationError(verb + " needs at least two complexes");
    GCWComplex x = inputs.front().complex;
    std::string name = inputs.front().name;
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        x = is_smash ? smash(x, inputs[i].complex) : wedge(x, inputs[i].complex);
        name += (is_smash ? " ^ " : " v ") + inputs[i].name;
    }
    if (o.json)
        emit_json(o, to_json(x), out);
    else
        print_complex(name, x, out);
    return Success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rational Bredon cohomology of finite C_{p^n}-CW complexes", "bredon"};
    app.require_subcommand(1, 1);
    Options o;

    auto inputs = [&](CLI::App* sub) {
        sub->add_option("files", o.files, "complex JSON files");
        sub->add_option("--builtin", o.builtins, "builtin descriptor, e.g. C4:sigma+lambda(1)")->take_all();
    };
    std::string json_path;
    std::vector<CLI::Option*> json_options;
    auto json = [&](CLI::App* sub) {
        json_options.push_back(
            sub->add_option("--json", json_path, "write JSON to a file (or stdout without a path)")->expected(0, 1));
    };
    auto levels = [&](CLI::App* sub) {
        sub->add_option("--level", o.level, "subgroup index k of C_{p^k}");
        sub->add_flag("--all-levels", o.all_levels, "every subgroup, largest first");
    };

    CLI::App* validate = app.add_subcommand("validate", "check complex or coefficient-system invariants");
    inputs(validate);
    validate->add_option("--coeff", o.coeff, "coefficient system file to validate");
    json(validate);

    CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "Bredon cohomology dimensions");
    inputs(cohomology_cmd);
    levels(cohomology_cmd);
    cohomology_cmd->add_flag("--reduced", o.reduced, "drop the basepoint");
    cohomology_cmd->add_option("--coeff", o.coeff, "constant-q or a coefficient-system file");
    cohomology_cmd->add_flag("--basis", o.show_basis, "also print cocycle representatives");
    cohomology_cmd->add_flag("--parallel", o.parallel, "compute levels concurrently");
    json(cohomology_cmd);

    CLI::App* quotient_cmd = app.add_subcommand("quotient", "orbit space X/P and its cellular cohomology");
    inputs(quotient_cmd);
    levels(quotient_cmd);
    quotient_cmd->add_flag("--reduced", o.reduced, "drop the basepoint");
    json(quotient_cmd);

    CLI::App* restrict_cmd = app.add_subcommand("restrict", "underlying C_{p^k}-complex");
    inputs(restrict_cmd);
    restrict_cmd->add_option("--level", o.level, "subgroup index k")->required();
    json(restrict_cmd);

    CLI::App* fixed_cmd = app.add_subcommand("fixed-points", "C_{p^k}-fixed subcomplex");
    inputs(fixed_cmd);
    fixed_cmd->add_option("--level", o.level, "subgroup index k")->required();
    json(fixed_cmd);

    CLI::App* decompose = app.add_subcommand("map-decompose", "Eilenberg-MacLane factors of Map_*(A, K(Q, m))");
    inputs(decompose);
    decompose->add_option("--target-dim", o.target_dim, "m")->required();
    decompose->add_option("--truncate", o.truncate, "keep factors of degree <= d");
    decompose->add_flag("--nullify", o.nullify, "truncate at m - r and report the nullifying representation");
    decompose->add_flag("--with-maps", o.with_maps, "also compute restriction and Weyl maps (tool extension)");
    decompose->add_flag("--show-unreduced", o.show_unreduced, "also print the unreduced table");
    decompose->add_flag("--parallel", o.parallel, "compute levels concurrently");
    json(decompose);

    CLI::App* lgood = app.add_subcommand("lgood-check", "necessary condition for L-goodness");
    inputs(lgood);
    json(lgood);

    CLI::App* builtin = app.add_subcommand("builtin", "list the corpus or show builtin complexes");
    builtin->add_option("descriptors", o.files, "builtin descriptors");
    builtin->add_option("--builtin", o.builtins, "builtin descriptor")->take_all();
    json(builtin);

    CLI::App* smash_cmd = app.add_subcommand("smash", "smash product of two or more complexes");
    inputs(smash_cmd);
    json(smash_cmd);

    CLI::App* wedge_cmd = app.add_subcommand("wedge", "wedge of two or more complexes");
    inputs(wedge_cmd);
    json(wedge_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (const CLI::Option* opt : json_options)
            if (opt->count() > 0)
                o.json = json_path;
        if (o.all_levels && o.level)
            throw CLI::ValidationError("--level and --all-levels are mutually exclusive");

        if (validate->parsed())
            return cmd_validate(o, out);
        if (cohomology_cmd->parsed())
            return cmd_cohomology(o, out);
        if (quotient_cmd->parsed())
            return cmd_quotient(o, out);
        if (restrict_cmd->parsed())
            return cmd_restrict(o, out, false);
        if (fixed_cmd->parsed())
            return cmd_restrict(o, out, true);
        if (decompose->parsed())
            return cmd_map_decompose(o, out);
        if (lgood->parsed())
            return cmd_lgood(o, out);
        if (builtin->parsed())
            return cmd_builtin(o, out);
        if (smash_cmd->parsed())
            return cmd_combine(o, out, true);
        return cmd_combine(o, out, false);
    } catch (const CLI::Error& e) {
        return app.exit(e, out, err) == 0 ? Success : UsageFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return UsageFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return DomainFailure;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace bredon::cli
