#pragma once

#include <ostream>

namespace catlens {

/// Runs the command-line front end. Exit codes: 0 ok or valid, 1 invalid or
/// boundary mismatch, 2 parse or structural error, 3 candidate guard
/// exceeded, 4 internal cross-check failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catlens
