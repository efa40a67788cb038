#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "klab/monad/bounds.hpp"

namespace klab {

namespace detail {

/// Bounded value universe of a Set-functor over the carriers 1..N, closed
/// under the pushforward of every function f: m -> n, with precomputed
/// pushforward index tables.
template <class M>
class ValueSpace {
 public:
  using V = typename M::template val<int>;

  ValueSpace(int max_carrier, const Bounds& bounds) : N_(max_carrier) {
    vals_.resize((std::size_t)N_);
    index_.resize((std::size_t)N_);
    for (int m = 1; m <= N_; ++m) {
      std::vector<int> carrier((std::size_t)m);
      for (int i = 0; i < m; ++i) carrier[(std::size_t)i] = i;
      auto vs = M::enumerate(carrier, bounds);
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      vals_[(std::size_t)m - 1] = std::move(vs);
    }
    close_under_pushforwards();
    for (int m = 1; m <= N_; ++m) {
      auto& ix = index_[(std::size_t)m - 1];
      const auto& vs = vals_[(std::size_t)m - 1];
      for (std::size_t i = 0; i < vs.size(); ++i) ix[vs[i]] = (int)i;
    }
    build_push_tables();
  }

  const std::vector<V>& vals(int m) const { return vals_.at((std::size_t)m - 1); }
  int num_vals(int m) const { return (int)vals(m).size(); }

  int val_index(int m, const V& v) const {
    const auto& ix = index_.at((std::size_t)m - 1);
    auto it = ix.find(v);
    return it == ix.end() ? -1 : it->second;
  }

  int push_val(int m, int n, int f, int v) const {
    return push_.at(key(m, n))[(std::size_t)f][(std::size_t)v];
  }

  const std::vector<int>& push_row(int m, int n, int f) const {
    return push_.at(key(m, n))[(std::size_t)f];
  }

 private:
  std::size_t key(int m, int n) const {
    return (std::size_t)(m - 1) * (std::size_t)N_ + (std::size_t)(n - 1);
  }

  int num_funcs(int m, int n) const {
    int c = 1;
    for (int i = 0; i < m; ++i) c *= n;
    return c;
  }

  static V apply_func(const std::vector<int>& fn, const V& v) {
    return M::map(v, [&](int x) { return fn[(std::size_t)x]; });
  }

  std::vector<int> decode_func(int m, int n, int f) const {
    std::vector<int> out((std::size_t)m);
    for (int k = 0; k < m; ++k) {
      out[(std::size_t)k] = f % n;
      f /= n;
    }
    return out;
  }

  void close_under_pushforwards() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int m = 1; m <= N_; ++m)
        for (int n = 1; n <= N_; ++n)
          for (int f = 0; f < num_funcs(m, n); ++f) {
            auto fn = decode_func(m, n, f);
            auto& target = vals_[(std::size_t)n - 1];
            for (std::size_t vi = 0; vi < vals_[(std::size_t)m - 1].size(); ++vi) {
              V w = apply_func(fn, vals_[(std::size_t)m - 1][vi]);
              auto it = std::lower_bound(target.begin(), target.end(), w);
              if (it == target.end() || !(*it == w)) {
                target.insert(it, std::move(w));
                grew = true;
              }
            }
          }
    }
  }

  void build_push_tables() {
    push_.assign((std::size_t)N_ * (std::size_t)N_, {});
    for (int m = 1; m <= N_; ++m)
      for (int n = 1; n <= N_; ++n) {
        auto& table = push_[key(m, n)];
        table.resize((std::size_t)num_funcs(m, n));
        for (int f = 0; f < num_funcs(m, n); ++f) {
          auto fn = decode_func(m, n, f);
          auto& row = table[(std::size_t)f];
          row.reserve(vals(m).size());
          for (const V& v : vals(m)) {
            int w = val_index(n, apply_func(fn, v));
            if (w < 0) throw std::logic_error("ValueSpace: fragment not closed");
            row.push_back(w);
          }
        }
      }
  }

  int N_;
  std::vector<std::vector<V>> vals_;
  std::vector<std::map<V, int>> index_;
  std::vector<std::vector<std::vector<int>>> push_;
};

}  // namespace detail

/// Finite fragment of a Set-functor for naturality work. Inputs (argument
/// tuples) range over the `in` space; transformation outputs range over the
/// `out` space, which may be strictly larger — a convex combination of
/// sixth-grid distributions needs the 36th grid, for instance. Both spaces
/// are closed under pushforwards.
template <class M>
class Universe {
 public:
  using V = typename M::template val<int>;

  Universe(int max_carrier, const Bounds& bounds)
      : Universe(max_carrier, bounds, bounds) {}

  Universe(int max_carrier, const Bounds& in_bounds, const Bounds& out_bounds)
      : N_(max_carrier),
        in_bounds_(in_bounds),
        in_(max_carrier, in_bounds),
        out_(max_carrier, out_bounds) {
    if (N_ < 1) throw std::invalid_argument("Universe: need max carrier >= 1");
  }

  int max_carrier() const { return N_; }
  const Bounds& bounds() const { return in_bounds_; }

  // input side
  const std::vector<V>& vals(int m) const { return in_.vals(m); }
  int num_vals(int m) const { return in_.num_vals(m); }
  int val_index(int m, const V& v) const { return in_.val_index(m, v); }
  int push_val(int m, int n, int f, int v) const { return in_.push_val(m, n, f, v); }

  // output side
  const std::vector<V>& out_vals(int m) const { return out_.vals(m); }
  int num_out_vals(int m) const { return out_.num_vals(m); }
  int out_index(int m, const V& v) const { return out_.val_index(m, v); }
  int push_out(int m, int n, int f, int v) const { return out_.push_val(m, n, f, v); }
  const std::vector<int>& out_push_row(int m, int n, int f) const {
    return out_.push_row(m, n, f);
  }

  /// Functions m -> n are indexed 0..n^m-1; digit k (base n) is f(k).
  int num_funcs(int m, int n) const {
    int c = 1;
    for (int i = 0; i < m; ++i) c *= n;
    return c;
  }

  std::vector<int> func(int m, int n, int f) const {
    std::vector<int> out((std::size_t)m);
    for (int k = 0; k < m; ++k) {
      out[(std::size_t)k] = f % n;
      f /= n;
    }
    return out;
  }

 private:
  int N_;
  Bounds in_bounds_;
  detail::ValueSpace<M> in_;
  detail::ValueSpace<M> out_;
};

/// Input side of a transformation F -> T on a universe fragment: either the
/// a-fold product of T (inputs are value tuples) or the identity functor
/// (inputs are carrier elements). Inputs are dense indices per carrier with
/// a pushforward action.
template <class M>
class TupleInputs {
 public:
  TupleInputs(const Universe<M>& u, int arity) : u_(u), arity_(arity) {}

  int arity() const { return arity_; }

  long long count(int m) const {
    long long c = 1;
    for (int i = 0; i < arity_; ++i) c *= u_.num_vals(m);
    return c;
  }

  std::vector<int> decode(int m, long long t) const {
    std::vector<int> parts((std::size_t)arity_);
    for (int i = 0; i < arity_; ++i) {
      parts[(std::size_t)i] = (int)(t % u_.num_vals(m));
      t /= u_.num_vals(m);
    }
    return parts;
  }

  long long encode(int m, const std::vector<int>& parts) const {
    long long t = 0;
    for (int i = arity_ - 1; i >= 0; --i)
      t = t * u_.num_vals(m) + parts[(std::size_t)i];
    return t;
  }

  long long push(int m, int n, int f, long long t) const {
    long long out = 0;
    long long radix = u_.num_vals(n);
    std::vector<int> parts = decode(m, t);
    for (int i = arity_ - 1; i >= 0; --i)
      out = out * radix + u_.push_val(m, n, f, parts[(std::size_t)i]);
    return out;
  }

 private:
  const Universe<M>& u_;
  int arity_;
};

template <class M>
class IdInputs {
 public:
  explicit IdInputs(const Universe<M>& u) : u_(u) {}
  int arity() const { return 1; }
  long long count(int m) const { return m; }
  long long push(int m, int n, int f, long long x) const {
    return u_.func(m, n, f)[(std::size_t)x];
  }

 private:
  const Universe<M>& u_;
};

}  // namespace klab
