#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "klab/combine/lift.hpp"
#include "klab/monad/dist.hpp"
#include "klab/monad/kernel.hpp"

namespace klab::prob {

using DM = with_maybe<dist_monad>;

/// Atom interpretations over a finite named carrier. Kernels are stored in
/// the failure-extended form; a table is `pure` when no atom puts weight on
/// bottom, which is what the base fragment requires.
struct AtomTable {
  std::vector<std::string> carrier;
  std::map<std::string, int> index;
  std::map<std::string, Kernel<DM>> atoms;
  std::map<std::string, TestPred> tests;
  bool pure = true;

  int state(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end())
      throw std::invalid_argument("unknown state '" + name + "'");
    return it->second;
  }

  const Kernel<DM>& atom(const std::string& name) const {
    auto it = atoms.find(name);
    if (it == atoms.end())
      throw std::invalid_argument("unknown atom '" + name + "'");
    return it->second;
  }

  const TestPred& test(const std::string& name) const {
    auto it = tests.find(name);
    if (it == tests.end())
      throw std::invalid_argument("unknown test '" + name + "'");
    return it->second;
  }

  /// Pure projection of an atom kernel, defined only for pure tables.
  Kernel<dist_monad> pure_atom(const std::string& name) const;

  static AtomTable from_json(const std::string& text);
  static AtomTable from_file(const std::string& path);

  /// Kernel sending every state to `1` with probability p and `0` otherwise;
  /// the carrier must name states "0" and "1".
  static Kernel<DM> bernoulli(const AtomTable& t, const Rat& p);
};

}  // namespace klab::prob
