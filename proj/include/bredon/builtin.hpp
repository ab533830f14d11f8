#pragma once

/**
 * Builtin complexes, named by descriptors such as "C4:sigma+lambda(1)".
 *
 *   descriptor := "C" order ":" expr
 *   expr       := term ("+" term)*            smash of the terms, left to right
 *   term       := [count ["*"]] factor ["^" power]
 *   factor     := "eps" | "sigma" | "lambda(" j ")" | "trivial-sphere(" k ")"
 *               | "point" | "S0" | "wedge(" expr ("," expr)* ")"
 *               | "smash(" expr ("," expr)* ")" | "(" expr ")"
 *
 * The order must be 1 or a prime power; C1 is read as C_{2^0}. A count or a
 * power k is a k-fold smash (k = 0 gives S^0). Whitespace is ignored.
 */

#include <string>
#include <vector>

#include "bredon/gcw.hpp"

namespace bredon {

/// Throws ParseError for malformed descriptors and DomainError for summands
/// that are not representations of the group (sigma for odd p, lambda(0)).
GCWComplex parse_builtin(const std::string& descriptor);

/// Descriptors of the test corpus: rep spheres for C2, C4, C8, C3 and C9,
/// trivial spheres, wedges and smashes. Every entry parses and validates.
const std::vector<std::string>& builtin_corpus();

} // namespace bredon
