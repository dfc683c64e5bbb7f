#pragma once

#include <iosfwd>

namespace mihx::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kValidation = 2;
}  // namespace exit_code

/// Entry point of the `mihx` tool:
///   mihx figure <fig10..fig17> [--config F] [--out F]
///   mihx simulate [--config F] [--out F] [--seed N]
///   mihx validate [--config F] [--out F]
///   mihx codec encode|decode [input|-] [--out F]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mihx::cli
