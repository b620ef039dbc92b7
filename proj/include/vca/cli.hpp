#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vca::cli {

inline constexpr int kExitOk = 0;
/// A computed property is false (check, decompose, verify-duality).
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;
/// A cross-check between two independent computations failed.
inline constexpr int kExitInternalError = 3;

inline constexpr const char* kReportSchema = "vca-report/1";

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vca::cli
