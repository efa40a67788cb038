#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "klab/monad/show.hpp"
#include "klab/nat/table.hpp"
#include "klab/parallel.hpp"

namespace klab {

struct NaturalitySquare {
  int m = 0, n = 0;
  std::vector<int> f;
  long long input = 0;  // input index at carrier m
  std::string text;
};

namespace detail {
template <class M>
std::string square_text(const Universe<M>& u, const TupleInputs<M>& inputs,
                        int m, int n, const std::vector<int>& fn, long long t,
                        const typename M::template val<int>& lhs,
                        const typename M::template val<int>& rhs) {
  auto parts = inputs.decode(m, t);
  std::string s =
      "carrier " + std::to_string(m) + " -> " + std::to_string(n) + ", f=(";
  for (std::size_t i = 0; i < fn.size(); ++i)
    s += (i ? "," : "") + std::to_string(fn[i]);
  s += "), args=(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? ", " : "") + show(u.vals(m)[(std::size_t)parts[i]]);
  s += "): alpha(Ff args) = " + show(lhs) + " but Ff(alpha(args)) = " + show(rhs);
  return s;
}
}  // namespace detail

/// Checks alpha_n(Ff x args) = Ff(alpha_m(args)) for every function
/// f: m -> n between fragment carriers and every input tuple of a table
/// family; returns the first violated square in deterministic order.
template <class M>
std::optional<NaturalitySquare> check_naturality(const Universe<M>& u,
                                                 const TableFamily& fam,
                                                 Exec mode = default_exec()) {
  TupleInputs<M> inputs(u, fam.arity);
  for (int m = 1; m <= u.max_carrier(); ++m)
    for (int n = 1; n <= u.max_carrier(); ++n) {
      long long per_f = inputs.count(m);
      long long total = (long long)u.num_funcs(m, n) * per_f;
      auto ok = [&](std::int64_t idx) {
        int f = (int)(idx / per_f);
        long long t = idx % per_f;
        int lhs = fam.at(n, inputs.push(m, n, f, t));
        int rhs = u.push_out(m, n, f, fam.at(m, t));
        return lhs == rhs;
      };
      std::int64_t bad = sweep_first_fail(total, ok, mode);
      if (bad != kNoFailure) {
        NaturalitySquare sq;
        sq.m = m;
        sq.n = n;
        int f = (int)(bad / per_f);
        sq.f = u.func(m, n, f);
        sq.input = bad % per_f;
        int lhs = fam.at(n, inputs.push(m, n, f, sq.input));
        int rhs = u.push_out(m, n, f, fam.at(m, sq.input));
        sq.text = detail::square_text(u, inputs, m, n, sq.f, sq.input,
                                      u.out_vals(n)[(std::size_t)lhs],
                                      u.out_vals(n)[(std::size_t)rhs]);
        return sq;
      }
    }
  return std::nullopt;
}

/// Rule-mode check: the transformation is applied as a function and the two
/// legs of each square are compared as raw values, so the rule's outputs
/// need not lie in any bounded output space. Used for the typed specs.
template <class M>
std::optional<NaturalitySquare> check_naturality_rule(
    const Universe<M>& u, int arity,
    const std::function<typename M::template val<int>(
        int, std::span<const typename M::template val<int>>)>& alpha,
    Exec mode = default_exec()) {
  using V = typename M::template val<int>;
  TupleInputs<M> inputs(u, arity);
  auto apply_at = [&](int m, long long t) {
    auto parts = inputs.decode(m, t);
    std::vector<V> args((std::size_t)arity);
    for (int i = 0; i < arity; ++i)
      args[(std::size_t)i] = u.vals(m)[(std::size_t)parts[(std::size_t)i]];
    return alpha(m, std::span<const V>(args));
  };
  for (int m = 1; m <= u.max_carrier(); ++m)
    for (int n = 1; n <= u.max_carrier(); ++n) {
      long long per_f = inputs.count(m);
      long long total = (long long)u.num_funcs(m, n) * per_f;
      auto eval = [&](std::int64_t idx) {
        int f = (int)(idx / per_f);
        long long t = idx % per_f;
        auto fn = u.func(m, n, f);
        V lhs = apply_at(n, inputs.push(m, n, f, t));
        V rhs = M::map(apply_at(m, t),
                       [&](int x) { return fn[(std::size_t)x]; });
        return lhs == rhs;
      };
      std::int64_t bad = sweep_first_fail(total, eval, mode);
      if (bad != kNoFailure) {
        NaturalitySquare sq;
        sq.m = m;
        sq.n = n;
        int f = (int)(bad / per_f);
        sq.f = u.func(m, n, f);
        sq.input = bad % per_f;
        V lhs = apply_at(n, inputs.push(m, n, f, sq.input));
        V rhs = M::map(apply_at(m, sq.input),
                       [&](int x) { return sq.f[(std::size_t)x]; });
        sq.text = detail::square_text(u, inputs, m, n, sq.f, sq.input, lhs, rhs);
        return sq;
      }
    }
  return std::nullopt;
}

}  // namespace klab
