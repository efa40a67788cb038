#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "klab/rat.hpp"

namespace klab {

/// Semiring descriptors used by the generalised multiset monad. A descriptor
/// provides carrier type, operations, and (when the semiring has it) the
/// common-integer-divisor decomposition: given x1..xk, an invertible r and
/// integers m1..mk with xi = mi * r exactly.
struct nat_semiring {
  static constexpr const char* name = "Nat";
  using elem = long long;
  static elem zero() { return 0; }
  static elem one() { return 1; }
  static elem add(elem a, elem b) { return a + b; }
  static elem mul(elem a, elem b) { return a * b; }
  static constexpr bool has_cid = true;

  struct Cid {
    elem divisor;
    std::vector<long long> multipliers;
  };
  static Cid cid(const std::vector<elem>& xs) {
    Cid c{1, {}};
    c.multipliers.assign(xs.begin(), xs.end());
    return c;
  }
};

struct rat_semiring {
  static constexpr const char* name = "Rat";
  using elem = Rat;
  static elem zero() { return Rat(0); }
  static elem one() { return Rat(1); }
  static elem add(elem a, elem b) { return a + b; }
  static elem mul(elem a, elem b) { return a * b; }
  static constexpr bool has_cid = true;

  struct Cid {
    elem divisor;
    std::vector<long long> multipliers;
  };
  /// r = 1/lcm(denominators); every xi is an integer multiple of r.
  static Cid cid(const std::vector<elem>& xs) {
    long long l = 1;
    for (const Rat& x : xs) l = std::lcm(l, x.den);
    Cid c{Rat(1, l), {}};
    for (const Rat& x : xs) c.multipliers.push_back(x.num * (l / x.den));
    return c;
  }
};

}  // namespace klab
