#pragma once

#include <vector>

#include <Eigen/Dense>

namespace klab::hyb {

/// One leg of an evolution: constant value for `length` seconds, or the
/// affine flow x' = a x + b started at x0.
struct Segment {
  enum class Gen { Const, Affine };
  Gen gen = Gen::Const;
  double length = 0.0;
  Eigen::VectorXd value;       // Const
  Eigen::MatrixXd a;           // Affine
  Eigen::VectorXd b, x0;

  Eigen::VectorXd at(double local_t) const;

  static Segment constant(Eigen::VectorXd v, double length = 0.0);
  static Segment affine(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd x0,
                        double length);
};

/// An evolution: ordered segments whose lengths sum to the duration.
/// Evaluation is right-continuous at internal junctions: the value at a
/// junction instant comes from the later segment, so assignment jumps are
/// visible at the instant they happen. Zero-length segments carry such
/// jumps (and flag marks) without advancing time.
struct Traj {
  std::vector<Segment> segments;  // never empty

  double duration() const;
  Eigen::VectorXd eval(double t) const;  // domain error outside [0, duration]
  Eigen::VectorXd start() const { return eval(0.0); }
  Eigen::VectorXd end() const;

  static Traj point(Eigen::VectorXd v);
};

Traj concat(const Traj& a, const Traj& b);

/// Exact equality of segment descriptors, else equal duration within tol and
/// pointwise agreement within tol on the dt grid (duration included).
bool traj_equal(const Traj& a, const Traj& b, double dt = 0.01, double tol = 1e-9);

/// Total order on descriptors, used to keep trajectory sets canonical.
bool traj_less(const Traj& a, const Traj& b);

}  // namespace klab::hyb
