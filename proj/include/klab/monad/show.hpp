#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klab/monad/discrete_traj.hpp"
#include "klab/monad/dist.hpp"
#include "klab/monad/multiset.hpp"
#include "klab/monad/powerset.hpp"
#include "klab/rat.hpp"

namespace klab {

inline std::string show(int x) { return std::to_string(x); }
inline std::string show(long long x) { return std::to_string(x); }
inline std::string show(const Rat& r) { return r.str(); }
inline std::string show(const std::string& s) { return s; }

template <class X>
std::string show(const std::optional<X>& m) {
  return m ? "Just " + show(*m) : std::string("_|_");
}

template <class A, class B>
std::string show(const std::pair<A, B>& p) {
  return "(" + show(p.first) + "," + show(p.second) + ")";
}

template <class X>
std::string show(const Dist<X>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (i) s += ", ";
    s += show(d.entries[i].first) + " -> " + d.entries[i].second.str();
  }
  return s + "}";
}

template <class X, class S>
std::string show(const MultiSet<X, S>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    if (i) s += ", ";
    s += show(m.entries[i].first) + " -> " + show(m.entries[i].second);
  }
  return s + "}";
}

template <class X>
std::string show(const PSet<X>& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    if (i) s += ", ";
    s += show(p.elems[i]);
  }
  return s + "}";
}

template <class X>
std::string show(const DTraj<X>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i) s += ", ";
    s += show(t.values[i]);
  }
  return s + "]";
}

}  // namespace klab
