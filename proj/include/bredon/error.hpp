#pragma once

#include <stdexcept>
#include <string>

namespace bredon {

/// A mathematical precondition or hypothesis was violated (bad complex,
/// invalid coefficient system, unsatisfied theorem hypothesis).
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: JSON schema violations, bad descriptors, bad rationals.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace bredon
