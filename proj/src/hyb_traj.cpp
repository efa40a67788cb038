#include "klab/hyb/traj.hpp"

#include <cmath>
#include <stdexcept>

#include "klab/hyb/flow.hpp"

namespace klab::hyb {

Segment Segment::constant(Eigen::VectorXd v, double length) {
  Segment s;
  s.gen = Gen::Const;
  s.length = length;
  s.value = std::move(v);
  return s;
}

Segment Segment::affine(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd x0,
                        double length) {
  Segment s;
  s.gen = Gen::Affine;
  s.length = length;
  s.a = std::move(a);
  s.b = std::move(b);
  s.x0 = std::move(x0);
  return s;
}

Eigen::VectorXd Segment::at(double local_t) const {
  if (gen == Gen::Const) return value;
  return solve_flow(a, b, x0, local_t);
}

double Traj::duration() const {
  double d = 0.0;
  for (const Segment& s : segments) d += s.length;
  return d;
}

Eigen::VectorXd Traj::eval(double t) const {
  if (segments.empty()) throw std::logic_error("Traj: no segments");
  double total = duration();
  if (t < 0.0 || t > total) throw std::domain_error("Traj: time out of range");
  double pos = t;
  // strict comparison sends junction instants to the later segment
  for (const Segment& s : segments) {
    if (pos < s.length) return s.at(pos);
    pos -= s.length;
  }
  return segments.back().at(segments.back().length);
}

Eigen::VectorXd Traj::end() const {
  return segments.back().at(segments.back().length);
}

Traj Traj::point(Eigen::VectorXd v) {
  Traj t;
  t.segments.push_back(Segment::constant(std::move(v)));
  return t;
}

Traj concat(const Traj& a, const Traj& b) {
  Traj out = a;
  out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
  return out;
}

namespace {

int vec_cmp(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i) ? -1 : 1;
  return 0;
}

int seg_cmp(const Segment& x, const Segment& y) {
  if (x.gen != y.gen) return x.gen < y.gen ? -1 : 1;
  if (x.length != y.length) return x.length < y.length ? -1 : 1;
  if (x.gen == Segment::Gen::Const) return vec_cmp(x.value, y.value);
  if (int c = vec_cmp(x.x0, y.x0)) return c;
  if (int c = vec_cmp(x.b, y.b)) return c;
  Eigen::Map<const Eigen::VectorXd> xa(x.a.data(), x.a.size());
  Eigen::Map<const Eigen::VectorXd> ya(y.a.data(), y.a.size());
  if (x.a.size() != y.a.size()) return x.a.size() < y.a.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < xa.size(); ++i)
    if (xa(i) != ya(i)) return xa(i) < ya(i) ? -1 : 1;
  return 0;
}

int traj_cmp(const Traj& a, const Traj& b) {
  std::size_t n = std::min(a.segments.size(), b.segments.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = seg_cmp(a.segments[i], b.segments[i])) return c;
  if (a.segments.size() != b.segments.size())
    return a.segments.size() < b.segments.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool traj_less(const Traj& a, const Traj& b) { return traj_cmp(a, b) < 0; }

bool traj_equal(const Traj& a, const Traj& b, double dt, double tol) {
  if (traj_cmp(a, b) == 0) return true;
  double da = a.duration(), db = b.duration();
  if (std::abs(da - db) > tol) return false;
  double d = std::min(da, db);
  for (double t = 0.0;; t += dt) {
    double tt = std::min(t, d);
    if ((a.eval(tt) - b.eval(tt)).cwiseAbs().maxCoeff() > tol) return false;
    if (t >= d) break;
  }
  return true;
}

}  // namespace klab::hyb
