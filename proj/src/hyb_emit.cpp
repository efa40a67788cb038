#include "klab/hyb/emit.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace klab::hyb {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

template <class Row>
void sample(const Traj& t, double dt, Row&& row) {
  double d = t.duration();
  for (long long k = 0;; ++k) {
    double tt = (double)k * dt;
    if (tt >= d - 1e-12) {
      row(d, t.eval(d));
      break;
    }
    row(tt, t.eval(tt));
  }
}

}  // namespace

std::string emit_csv(const std::vector<Traj>& trajs,
                     const std::vector<std::string>& vars, double dt) {
  if (dt <= 0) throw std::invalid_argument("emit: dt must be positive");
  std::string out;
  bool indexed = trajs.size() > 1;
  if (indexed) out += "traj,";
  out += "t";
  for (const auto& v : vars) out += "," + v;
  out += "\n";
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    sample(trajs[i], dt, [&](double t, const Eigen::VectorXd& x) {
      if (indexed) out += std::to_string(i) + ",";
      out += fmt(t);
      for (Eigen::Index j = 0; j < x.size(); ++j) out += "," + fmt(x(j));
      out += "\n";
    });
  }
  return out;
}

std::string emit_json(const std::vector<Traj>& trajs,
                      const std::vector<std::string>& vars, double dt) {
  if (dt <= 0) throw std::invalid_argument("emit: dt must be positive");
  nlohmann::json doc;
  doc["vars"] = vars;
  doc["trajectories"] = nlohmann::json::array();
  for (const Traj& t : trajs) {
    nlohmann::json jt;
    jt["duration"] = t.duration();
    jt["samples"] = nlohmann::json::array();
    sample(t, dt, [&](double tt, const Eigen::VectorXd& x) {
      nlohmann::json row = nlohmann::json::array();
      row.push_back(tt);
      for (Eigen::Index j = 0; j < x.size(); ++j) row.push_back(x(j));
      jt["samples"].push_back(std::move(row));
    });
    doc["trajectories"].push_back(std::move(jt));
  }
  return doc.dump(2);
}

}  // namespace klab::hyb
