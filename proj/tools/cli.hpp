#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "vmlattice/numtheory.hpp"

namespace vmlattice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

/// Runs the command line `args` (program name excluded). Normal output goes
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "17,37,100..200": single values and inclusive ranges. Range members are
/// kept only when `keep(value)` holds; single values are always kept.
template <typename Keep>
std::vector<Integer> expand_list(const std::string& spec, Keep&& keep);

std::vector<Integer> parse_integer_list(const std::string& spec);
std::vector<double> parse_real_list(const std::string& spec);

}  // namespace vmlattice::cli

#include "cli_list.ipp"
