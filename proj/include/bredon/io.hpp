#pragma once

/**
 * JSON file formats.
 *
 * Complex:
 *   { "group": {"p": 2, "n": 1},
 *     "basepoint": {"dim": 0, "index": 0} | null,
 *     "cells": [[{"stab": k}, ...] per dimension],
 *     "boundary": [{"dim": d, "from": i, "to": j, "terms": [{"rep": a, "coeff": c}, ...]}, ...] }
 *
 * Coefficient system:
 *   { "group": {...}, "dims": [d_0..d_n], "weyl": [A_0..A_n], "restrictions": [R_1..R_n] }
 *   with matrices as arrays of rows of rational strings ("a/b" or "a").
 *
 * Parsers report schema problems as ParseError with a field path such as
 * "cells[1][0].stab". Output uses ordered keys and is byte-stable.
 */

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bredon/cohomology.hpp"
#include "bredon/gcw.hpp"
#include "bredon/homotopy.hpp"
#include "bredon/orbitcat.hpp"

namespace bredon {

using Json = nlohmann::ordered_json;

Json to_json(const GroupSpec& g);
Json to_json(const RatMatrix& m);
Json to_json(const GCWComplex& x);
Json to_json(const CoefficientSystem& m);
Json to_json(const CohomologyTable& t);
Json to_json(const EMDecomposition& d);
Json to_json(const LGoodVerdict& v);

GCWComplex complex_from_json(const Json& j);
CoefficientSystem system_from_json(const Json& j);

/// Reads and parses a file; syntax errors carry the byte offset.
Json read_json_file(const std::filesystem::path& path);
GCWComplex parse_complex(const std::filesystem::path& path);
CoefficientSystem parse_system(const std::filesystem::path& path);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

} // namespace bredon
