#pragma once

#include <iosfwd>

namespace padicfft {

/// Entry point of the padicfft tool with its streams injected.
/// Exit status: 0 ok, 2 usage or parse error, 3 violated precondition,
/// 4 internal error or failed selftest.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicfft
