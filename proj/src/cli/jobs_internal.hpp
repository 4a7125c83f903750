#pragma once

#include "gwp1/cli/cli.hpp"

namespace gwp1::cli {

// Parameters with command defaults filled in; the form that is hashed and executed.
Json normalized_params(const JobSpec& job);

}  // namespace gwp1::cli
