#pragma once

namespace rct {

// Full command-line program: generate | fit | cv | benchmark | check.
// Returns the process exit code: 0 success, 1 usage or configuration
// error, 2 runtime failure.
int run_cli(int argc, const char* const* argv);

}  // namespace rct
