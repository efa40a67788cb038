#pragma once

#include <cstdint>
#include <stdexcept>

namespace klab {

/// Bounds describing a finite fragment of a monad's value space.
/// Only the fields relevant to a given monad are read: `denom` restricts
/// distribution weights to multiples of 1/denom, `max_weight` bounds multiset
/// weights, `max_duration` bounds discrete-trajectory durations, and
/// `max_support` (0 = unbounded) caps the support / subset / selection size.
struct Bounds {
  int denom = 4;
  long long max_weight = 3;
  int max_duration = 2;
  int max_support = 0;

  Bounds with_support(int s) const {
    Bounds b = *this;
    b.max_support = s;
    return b;
  }
  Bounds with_duration(int d) const {
    Bounds b = *this;
    b.max_duration = d;
    return b;
  }
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Guard for enumeration loops; throws once the budget is exhausted.
class NodeBudget {
 public:
  explicit NodeBudget(std::int64_t limit = 10'000'000) : left_(limit) {}
  void spend(std::int64_t n = 1) {
    left_ -= n;
    if (left_ < 0) throw resource_error("fragment enumeration budget exceeded");
  }
  std::int64_t remaining() const { return left_; }

 private:
  std::int64_t left_;
};

}  // namespace klab
