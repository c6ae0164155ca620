#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logbessel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConvergence = 4;

/// Runs one subcommand (eval, region-map, student-demo). `args` excludes the
/// program name. Results go to `out` unless --out names a file; diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits with '.' as decimal separator, independent of the
/// global locale.
std::string format_number(double x);

}  // namespace logbessel::cli
