#include "klab/hyb/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace klab::hyb {

namespace {
constexpr double kRelTol = 1e-12;
constexpr int kMaxTerms = 64;
}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: square matrix");
  if (!m.allFinite()) throw std::invalid_argument("expm: non-finite input");
  const auto n = m.rows();

  // scale so the series converges quickly
  double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = std::max(0, (int)std::ceil(std::log2(norm / 0.5)));
    if (squarings > 60) throw std::invalid_argument("expm: norm too large");
  }
  Eigen::MatrixXd a = m / std::ldexp(1.0, squarings);

  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = (term * a) / double(k);
    double tnorm = term.cwiseAbs().maxCoeff();
    if (tnorm == 0.0) break;  // nilpotent: series is exact
    sum += term;
    if (tnorm <= kRelTol * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Eigen::VectorXd solve_flow(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& x0, double t) {
  const auto n = x0.size();
  if (a.rows() != n || a.cols() != n || b.size() != n)
    throw std::invalid_argument("solve_flow: dimension mismatch");
  if (!std::isfinite(t) || !x0.allFinite())
    throw std::invalid_argument("solve_flow: non-finite input");
  if (t == 0.0) return x0;

  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
  aug.topLeftCorner(n, n) = a;
  aug.topRightCorner(n, 1) = b;
  Eigen::VectorXd z(n + 1);
  z.head(n) = x0;
  z(n) = 1.0;
  Eigen::VectorXd out = expm(aug * t) * z;
  return out.head(n);
}

}  // namespace klab::hyb
