#pragma once

#include <string>
#include <vector>

#include "klab/hyb/traj.hpp"

namespace klab::hyb {

/// CSV rows sampled at 0, dt, ..., duration (duration always included),
/// >= 12 significant digits. Multiple trajectories get a leading index
/// column; one block per trajectory.
std::string emit_csv(const std::vector<Traj>& trajs,
                     const std::vector<std::string>& vars, double dt);

/// Same sampling as a JSON document with a stable schema.
std::string emit_json(const std::vector<Traj>& trajs,
                      const std::vector<std::string>& vars, double dt);

}  // namespace klab::hyb
