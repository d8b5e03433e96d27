#pragma once

#include "toricirc/configuration.hpp"
#include "toricirc/multigraph.hpp"

#include <string>

namespace toricirc::analysis {

// Deterministic JSON documents for the library commands. Top level carries
// "command", "input", "max_degree" and a "results" array; field order is
// fixed so repeated runs are byte-identical.
std::string run_config_command(const Configuration& c, const std::string& command,
                               const std::string& input_name, const Int& maxdeg);

std::string run_graph_command(const Multigraph& g, const std::string& command,
                              const std::string& input_name, const Int& maxdeg);

bool is_config_command(const std::string& command);
bool is_graph_command(const std::string& command);

} // namespace toricirc::analysis
