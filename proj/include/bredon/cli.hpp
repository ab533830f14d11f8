#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bredon::cli {

enum ExitCode : int { Success = 0, DomainFailure = 1, UsageFailure = 2 };

/// Runs one verb. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bredon::cli
