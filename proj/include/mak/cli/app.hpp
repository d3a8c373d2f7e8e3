#pragma once

#include "mak/lang/domain.hpp"

#include <iosfwd>
#include <string>

namespace mak::cli {

// Exit statuses. 0/1/2 carry the verdict of `check` (true/false/undefined);
// `plan` uses 0/1 for found/not found.
inline constexpr int exit_true = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_undefined = 2;
inline constexpr int exit_usage = 64;    // bad flags, malformed query or goal
inline constexpr int exit_data = 65;     // unparsable domain or structure file, no initial model
inline constexpr int exit_no_input = 66; // file not found

/// Runs the `mak` command line. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Universe of the sum-and-product puzzle with x + y <= max.
[[nodiscard]] lang::Domain sum_product_domain(long max);

} // namespace mak::cli
