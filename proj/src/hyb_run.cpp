#include "klab/hyb/run.hpp"

#include <algorithm>
#include <stdexcept>

#include "klab/hyb/flow.hpp"

namespace klab::hyb {

std::optional<double> hit_time(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               const Eigen::VectorXd& x0, const HybPred& pred,
                               const NumericConfig& cfg) {
  cfg.validate();
  if (pred.eval(x0)) return 0.0;
  double prev = 0.0;
  for (long long k = 1;; ++k) {
    double t = (double)k * cfg.step;
    if (t > cfg.t_max) return std::nullopt;
    if (pred.eval(solve_flow(a, b, x0, t))) {
      double lo = prev, hi = t;
      while (hi - lo > cfg.eps) {
        double mid = 0.5 * (lo + hi);
        if (pred.eval(solve_flow(a, b, x0, mid)))
          hi = mid;
        else
          lo = mid;
      }
      return hi;
    }
    prev = t;
  }
}

namespace {

struct AtomMatrices {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};

AtomMatrices flow_matrices(const HybAtom& atom, Eigen::Index n) {
  AtomMatrices m;
  m.a = Eigen::MatrixXd::Zero(n, n);
  m.b = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m.a.row(i) = atom.terms[(std::size_t)i].coeff.transpose();
    m.b(i) = atom.terms[(std::size_t)i].constant;
  }
  return m;
}

Eigen::VectorXd apply_assign(const HybAtom& atom, const Eigen::VectorXd& x) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out(i) = atom.terms[(std::size_t)i].eval(x);
  return out;
}

class Interp {
 public:
  Interp(const HybProgram& prog, HybMode mode, const NumericConfig& cfg,
         RunResult& result)
      : prog_(prog), mode_(mode), cfg_(cfg), result_(result) {}

  // single-trajectory modes: returns the atom's evolution from x
  Traj atom_traj(const HybAtom& atom, const Eigen::VectorXd& x) {
    if (mode_ == HybMode::Flagged) return flagged_atom(atom, x);
    if (atom.kind == HybAtom::Kind::Assign) return Traj::point(apply_assign(atom, x));
    if (atom.trigger == HybAtom::Trigger::Duration) {
      if (mode_ == HybMode::Event)
        throw std::invalid_argument("duration trigger in event mode");
      auto m = flow_matrices(atom, x.size());
      Traj t;
      t.segments.push_back(Segment::affine(m.a, m.b, x, atom.duration));
      return t;
    }
    if (mode_ == HybMode::Time)
      throw std::invalid_argument("event trigger in time mode");
    auto m = flow_matrices(atom, x.size());
    auto d = hit_time(m.a, m.b, x, atom.event, cfg_);
    if (!d) {
      result_.warnings.push_back("event never occurs within the horizon; duration 0");
      return Traj::point(x);
    }
    Traj t;
    t.segments.push_back(Segment::affine(m.a, m.b, x, *d));
    return t;
  }

  // flagged variant: state carries a trailing 0/1 coordinate; atoms do
  // nothing on cleared flags and evolutions expose the flag only at the end
  Traj flagged_atom(const HybAtom& atom, const Eigen::VectorXd& xf) {
    Eigen::Index n = xf.size() - 1;
    bool enabled = xf(n) == 1.0;
    Eigen::VectorXd x = xf.head(n);
    if (!enabled) return Traj::point(xf);
    if (atom.kind == HybAtom::Kind::Assign) {
      Eigen::VectorXd out(n + 1);
      out.head(n) = apply_assign_sub(atom, x);
      out(n) = 1.0;
      return Traj::point(out);
    }
    auto m = flow_matrices_sub(atom, n);
    double d;
    if (atom.trigger == HybAtom::Trigger::Duration) {
      d = atom.duration;
    } else {
      auto hit = hit_time(m.a, m.b, x, atom.event, cfg_);
      if (!hit) {
        result_.warnings.push_back("event never occurs within the horizon; duration 0");
        d = 0.0;
      } else {
        d = *hit;
      }
    }
    Eigen::MatrixXd a2 = Eigen::MatrixXd::Zero(n + 1, n + 1);
    a2.topLeftCorner(n, n) = m.a;
    Eigen::VectorXd b2 = Eigen::VectorXd::Zero(n + 1);
    b2.head(n) = m.b;
    Eigen::VectorXd x2 = Eigen::VectorXd::Zero(n + 1);
    x2.head(n) = x;  // flag reads 0 during the evolution
    Traj t;
    if (d > 0) t.segments.push_back(Segment::affine(a2, b2, x2, d));
    Eigen::VectorXd endf(n + 1);
    endf.head(n) = solve_flow(m.a, m.b, x, d);
    endf(n) = 1.0;
    t.segments.push_back(Segment::constant(endf));
    return t;
  }

  // evaluate over the unflagged sub-state
  static Eigen::VectorXd apply_assign_sub(const HybAtom& atom,
                                          const Eigen::VectorXd& x) {
    Eigen::VectorXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      out(i) = atom.terms[(std::size_t)i].eval(x);
    return out;
  }

  static AtomMatrices flow_matrices_sub(const HybAtom& atom, Eigen::Index n) {
    AtomMatrices m;
    m.a = Eigen::MatrixXd::Zero(n, n);
    m.b = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m.a.row(i) = atom.terms[(std::size_t)i].coeff.transpose();
      m.b(i) = atom.terms[(std::size_t)i].constant;
    }
    return m;
  }

  // deterministic interpretation: kleisli-composes by concatenation
  std::pair<Traj, Eigen::VectorXd> run_det(const HybStmt& s, Traj acc,
                                           Eigen::VectorXd x) {
    switch (s.kind) {
      case HybStmt::Kind::Skip:
        return {std::move(acc), std::move(x)};
      case HybStmt::Kind::Atom: {
        Traj t = atom_traj(s.atom, x);
        Eigen::VectorXd end = t.end();
        return {concat(acc, t), end};
      }
      case HybStmt::Kind::Seq: {
        auto [t1, x1] = run_det(s.kids[0], std::move(acc), std::move(x));
        return run_det(s.kids[1], std::move(t1), std::move(x1));
      }
      case HybStmt::Kind::Choice:
        throw std::invalid_argument("choice requires nondeterministic mode");
    }
    throw std::logic_error("bad statement");
  }

  // set-valued interpretation: choice is union, dedup by descriptor
  std::vector<std::pair<Traj, Eigen::VectorXd>> run_set(
      const HybStmt& s, std::vector<std::pair<Traj, Eigen::VectorXd>> in) {
    switch (s.kind) {
      case HybStmt::Kind::Skip:
        return in;
      case HybStmt::Kind::Atom: {
        std::vector<std::pair<Traj, Eigen::VectorXd>> out;
        for (auto& [acc, x] : in) {
          Traj t = atom_traj(s.atom, x);
          Eigen::VectorXd end = t.end();
          out.emplace_back(concat(acc, t), std::move(end));
        }
        return out;
      }
      case HybStmt::Kind::Seq: {
        auto mid = run_set(s.kids[0], std::move(in));
        return run_set(s.kids[1], std::move(mid));
      }
      case HybStmt::Kind::Choice: {
        auto left = run_set(s.kids[0], in);
        auto right = run_set(s.kids[1], std::move(in));
        left.insert(left.end(), std::make_move_iterator(right.begin()),
                    std::make_move_iterator(right.end()));
        std::sort(left.begin(), left.end(), [](const auto& p, const auto& q) {
          return traj_less(p.first, q.first);
        });
        left.erase(std::unique(left.begin(), left.end(),
                               [](const auto& p, const auto& q) {
                                 return !traj_less(p.first, q.first) &&
                                        !traj_less(q.first, p.first);
                               }),
                   left.end());
        return left;
      }
    }
    throw std::logic_error("bad statement");
  }

 private:
  const HybProgram& prog_;
  HybMode mode_;
  const NumericConfig& cfg_;
  RunResult& result_;
};

}  // namespace

RunResult run_hyb(const HybProgram& prog, const Eigen::VectorXd& x0, HybMode mode,
                  const NumericConfig& cfg, bool initial_flag) {
  cfg.validate();
  if ((Eigen::Index)prog.vars.size() != x0.size())
    throw std::invalid_argument("initial state does not cover the variables");
  if (prog.has_choice && mode != HybMode::Nondet)
    throw std::invalid_argument("choice requires nondeterministic mode");
  if (mode == HybMode::Time && prog.has_event)
    throw std::invalid_argument("event trigger in time mode");
  if (mode == HybMode::Event && prog.has_duration)
    throw std::invalid_argument("duration trigger in event mode");

  RunResult result;
  Interp interp(prog, mode, cfg, result);
  if (mode == HybMode::Nondet) {
    std::vector<std::pair<Traj, Eigen::VectorXd>> in;
    in.emplace_back(Traj::point(x0), x0);
    auto out = interp.run_set(prog.root, std::move(in));
    for (auto& [t, x] : out) result.trajs.push_back(std::move(t));
  } else if (mode == HybMode::Flagged) {
    Eigen::VectorXd xf(x0.size() + 1);
    xf.head(x0.size()) = x0;
    xf(x0.size()) = initial_flag ? 1.0 : 0.0;
    auto [t, x] = interp.run_det(prog.root, Traj::point(xf), xf);
    result.trajs.push_back(std::move(t));
  } else {
    auto [t, x] = interp.run_det(prog.root, Traj::point(x0), x0);
    result.trajs.push_back(std::move(t));
  }
  return result;
}

}  // namespace klab::hyb
