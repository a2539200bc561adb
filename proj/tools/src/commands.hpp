#pragma once

#include <ostream>

#include "config.hpp"

namespace popuc::cli {

/// Executes a parsed configuration. Artifacts go to config.out (stdout when
/// empty). Returns the process exit status; library errors propagate.
int run(const RunConfig& config, std::ostream& stdout_stream);

}  // namespace popuc::cli
