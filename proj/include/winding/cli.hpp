#pragma once

#include <iosfwd>

namespace winding {

/// Entry point of the `winding` command-line tool. Exit codes: 0 success,
/// 1 invalid drawing, failed check or runtime error, 2 even-sum target for
/// `realize`; argument errors use CLI11's codes.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace winding
