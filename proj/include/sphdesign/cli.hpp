#pragma once

namespace sphd {

/// Command-line front end (catalog, certify, beta, molien, covering, export).
/// Returns the process exit code: 0 on success (and certification), 1 when a
/// requested certification fails, 2 on errors (with a JSON error object on stderr).
int run_cli(int argc, const char* const* argv);

}  // namespace sphd
