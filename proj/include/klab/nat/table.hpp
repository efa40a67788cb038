#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "klab/nat/universe.hpp"

namespace klab {

inline constexpr int kUnset = -1;

/// Explicit transformation family on a universe fragment: for each carrier
/// m the table mapping an input index (a value tuple, densely encoded) to an
/// output value index. This is both the result format of the enumerator and
/// the common currency of the naturality checker.
struct TableFamily {
  int arity = 2;
  std::vector<std::vector<int>> out;  // out[m-1][input] = value index

  friend bool operator==(const TableFamily&, const TableFamily&) = default;
  friend auto operator<=>(const TableFamily&, const TableFamily&) = default;

  int at(int m, long long input) const {
    return out[(std::size_t)m - 1][(std::size_t)input];
  }
  bool complete() const {
    for (const auto& t : out)
      for (int v : t)
        if (v == kUnset) return false;
    return true;
  }
};

/// Materializes a component-wise rule as an explicit table. `alpha` receives
/// the carrier size and the tuple of argument values and returns the output
/// value, which must lie inside the universe's output space.
template <class M>
TableFamily materialize(
    const Universe<M>& u, int arity,
    const std::function<typename M::template val<int>(
        int, std::span<const typename M::template val<int>>)>& alpha) {
  using V = typename M::template val<int>;
  TupleInputs<M> inputs(u, arity);
  TableFamily fam;
  fam.arity = arity;
  fam.out.resize((std::size_t)u.max_carrier());
  for (int m = 1; m <= u.max_carrier(); ++m) {
    auto& table = fam.out[(std::size_t)m - 1];
    table.resize((std::size_t)inputs.count(m), kUnset);
    std::vector<V> args((std::size_t)arity);
    for (long long t = 0; t < inputs.count(m); ++t) {
      auto parts = inputs.decode(m, t);
      for (int i = 0; i < arity; ++i)
        args[(std::size_t)i] = u.vals(m)[(std::size_t)parts[(std::size_t)i]];
      int w = u.out_index(m, alpha(m, std::span<const V>(args)));
      if (w < 0)
        throw std::logic_error("materialize: rule output escapes the fragment");
      table[(std::size_t)t] = w;
    }
  }
  return fam;
}

}  // namespace klab
