// Command layer: every public operation expressed as JSON-in / JSON-out,
// shared verbatim by the shared-library API and the command-line front end.
#pragma once

#include <string>

#include "json_io.hpp"

namespace shc {

Json run_allocate(const Json& config);
Json run_place(const Json& config);
Json run_deliver(const Json& config);
Json run_bound(const Json& config);
Json run_verify(const Json& config);
Json run_mismatch(const Json& config);
Json run_simulate(const Json& config);

// Dispatch by subcommand name; unknown names raise std::invalid_argument.
Json run_command(const std::string& name, const Json& config);

// True when the command's outcome flags (decode_ok / verified / all_pass /
// equal) are all good; commands without such flags always succeed.
bool command_outcome_ok(const Json& output);

}  // namespace shc
