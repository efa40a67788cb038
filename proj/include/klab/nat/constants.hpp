#pragma once

#include <algorithm>
#include <vector>

#include "klab/monad/bounds.hpp"

namespace klab {

/// The constants of a functor: its value over the empty carrier, each of
/// which induces a constant family at every carrier by pushing forward along
/// the empty map. `truncated_family` marks monads (such as hybrid-with-
/// failure) whose constant space is an unbounded duration-indexed family, of
/// which only the members within the bounds are materialized.
template <class M>
struct ConstantsResult {
  using V = typename M::template val<int>;
  std::vector<V> constants;
  bool truncated_family = false;
};

template <class M>
ConstantsResult<M> constants_of(const Bounds& bounds) {
  ConstantsResult<M> res;
  std::vector<int> empty;
  res.constants = M::enumerate(empty, bounds);
  std::sort(res.constants.begin(), res.constants.end());
  // If loosening a structural bound produces more constants, the constant
  // space is a proper family and the list is only its bounded prefix.
  Bounds wider = bounds;
  wider.max_duration += 1;
  wider.max_weight += 1;
  auto more = M::enumerate(empty, wider);
  res.truncated_family = more.size() > res.constants.size();
  return res;
}

/// The constant family member at a given carrier: the pushforward of c along
/// the empty map (no element is ever touched).
template <class M>
typename M::template val<int> constant_at(const typename M::template val<int>& c) {
  return M::map(c, [](int x) { return x; });
}

}  // namespace klab
