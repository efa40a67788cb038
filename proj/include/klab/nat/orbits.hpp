#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "klab/monad/show.hpp"
#include "klab/nat/universe.hpp"

namespace klab {

/// One zigzag-connected component of the element-category fragment.
struct Orbit {
  std::string label;                              // representative description
  std::vector<std::pair<int, long long>> members; // (carrier, input index)
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
};

/// Connected components of pairs (carrier, argument tuple) under the action
/// of every function between fragment carriers, in both directions.
template <class M>
OrbitDecomposition orbits(const Universe<M>& u, int arity) {
  TupleInputs<M> in(u, arity);
  std::vector<long long> offset((std::size_t)u.max_carrier() + 1, 0);
  for (int m = 1; m <= u.max_carrier(); ++m)
    offset[(std::size_t)m] = offset[(std::size_t)m - 1] + in.count(m);
  long long total = offset.back();

  std::vector<long long> parent((std::size_t)total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long long x) {
    while (parent[(std::size_t)x] != x) {
      parent[(std::size_t)x] = parent[(std::size_t)parent[(std::size_t)x]];
      x = parent[(std::size_t)x];
    }
    return x;
  };
  auto unite = [&](long long a, long long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[(std::size_t)std::max(a, b)] = std::min(a, b);
  };

  for (int m = 1; m <= u.max_carrier(); ++m)
    for (int n = 1; n <= u.max_carrier(); ++n)
      for (int f = 0; f < u.num_funcs(m, n); ++f)
        for (long long t = 0; t < in.count(m); ++t)
          unite(offset[(std::size_t)m - 1] + t,
                offset[(std::size_t)n - 1] + in.push(m, n, f, t));

  std::vector<long long> roots;
  std::vector<int> root_of((std::size_t)total);
  for (long long e = 0; e < total; ++e) {
    long long r = find(e);
    auto it = std::lower_bound(roots.begin(), roots.end(), r);
    if (it == roots.end() || *it != r) roots.insert(it, r);
  }
  for (long long e = 0; e < total; ++e)
    root_of[(std::size_t)e] =
        (int)(std::lower_bound(roots.begin(), roots.end(), find(e)) - roots.begin());

  OrbitDecomposition dec;
  dec.orbits.resize(roots.size());
  for (int m = 1; m <= u.max_carrier(); ++m)
    for (long long t = 0; t < in.count(m); ++t) {
      long long e = offset[(std::size_t)m - 1] + t;
      dec.orbits[(std::size_t)root_of[(std::size_t)e]].members.emplace_back(m, t);
    }
  for (Orbit& o : dec.orbits) {
    auto [m, t] = o.members.front();
    auto parts = in.decode(m, t);
    o.label = "carrier " + std::to_string(m) + ": (";
    for (std::size_t i = 0; i < parts.size(); ++i)
      o.label += (i ? ", " : "") + show(u.vals(m)[(std::size_t)parts[i]]);
    o.label += ")";
  }
  return dec;
}

}  // namespace klab
