#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klab/hyb/ast.hpp"
#include "klab/hyb/traj.hpp"

namespace klab::hyb {

enum class HybMode { Time, Event, Flagged, Nondet };

/// Smallest sampled time in [0, t_max] at which the flow from x0 enters the
/// predicate region: exact 0 when already inside, otherwise scan at the
/// configured step and bisect the bracketing interval down to eps,
/// returning the satisfying endpoint. No hit within the horizon is a value.
std::optional<double> hit_time(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               const Eigen::VectorXd& x0, const HybPred& pred,
                               const NumericConfig& cfg);

struct RunResult {
  std::vector<Traj> trajs;  // singleton except in Nondet mode
  std::vector<std::string> warnings;
};

/// Interprets the program from the initial state under the selected mode.
/// Time: duration-triggered flows only. Event: event-triggered flows only.
/// Flagged: runs over the state extended with an assignments-enabled flag
/// (visible as an extra trailing coordinate; evolutions clear it except at
/// their final instant). Nondet: returns the set of trajectories, with
/// choice interpreted by union.
RunResult run_hyb(const HybProgram& prog, const Eigen::VectorXd& x0, HybMode mode,
                  const NumericConfig& cfg, bool initial_flag = true);

}  // namespace klab::hyb
