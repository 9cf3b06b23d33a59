// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rrhmux {

// Runs the full CLI (subcommands: sweep, bound, code, phy, decode) against
// the given streams; returns the process exit status. Seed precedence:
// --seed > RRHMUX_SEED > config `seed` > 1.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rrhmux
