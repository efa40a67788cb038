#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "klab/monad/kernel.hpp"
#include "klab/monad/show.hpp"

namespace klab {

struct AbstractionReport {
  bool premise_ok = true;  // atomic squares hold
  bool pass = false;       // composite squares hold
  std::int64_t programs = 0;
  std::string witness;
};

/// Quotient-compatibility check: given a carrier map q, atom interpretations
/// on the fine and coarse carriers, and a set of binary operations applied
/// value-wise, verifies Tq . rho(p) = rho'(p) . q for every composite
/// program built from ; and the operations up to the given depth. A failure
/// of the atomic premise is reported as such, not as a law failure.
template <class M>
AbstractionReport check_abstraction(
    const std::vector<int>& q, const std::vector<Kernel<M>>& atoms_fine,
    const std::vector<Kernel<M>>& atoms_coarse,
    const std::vector<std::function<typename M::template val<int>(
        const typename M::template val<int>&,
        const typename M::template val<int>&)>>& ops,
    int max_depth) {
  using V = typename M::template val<int>;
  AbstractionReport rep;
  if (atoms_fine.size() != atoms_coarse.size())
    throw std::invalid_argument("check_abstraction: atom tables differ");
  int nx = (int)q.size();

  auto square_holds = [&](const Kernel<M>& kx, const Kernel<M>& kq,
                          std::string* witness) {
    for (int x = 0; x < nx; ++x) {
      V lhs = M::map(kx[(std::size_t)x], [&](int y) { return q[(std::size_t)y]; });
      const V& rhs = kq[(std::size_t)q[(std::size_t)x]];
      if (!(lhs == rhs)) {
        if (witness)
          *witness = "state " + std::to_string(x) + ": Tq(rho(p)(x)) = " + show(lhs) +
                     " but rho'(p)(q x) = " + show(rhs);
        return false;
      }
    }
    return true;
  };

  for (std::size_t a = 0; a < atoms_fine.size(); ++a)
    if (!square_holds(atoms_fine[a], atoms_coarse[a], &rep.witness)) {
      rep.premise_ok = false;
      rep.witness = "atomic premise fails (atom " + std::to_string(a) + "): " +
                    rep.witness;
      return rep;
    }

  // composite programs, represented directly by their kernel pair
  std::vector<std::pair<Kernel<M>, Kernel<M>>> layer, all;
  for (std::size_t a = 0; a < atoms_fine.size(); ++a)
    all.emplace_back(atoms_fine[a], atoms_coarse[a]);
  layer = all;
  for (int depth = 2; depth <= max_depth; ++depth) {
    std::vector<std::pair<Kernel<M>, Kernel<M>>> next;
    for (const auto& [px, pq] : all)
      for (const auto& [rx, rq] : all) {
        next.emplace_back(kleisli<M>(px, rx), kleisli<M>(pq, rq));
        for (const auto& op : ops) {
          Kernel<M> ox((std::size_t)nx), oq(pq.size());
          for (int x = 0; x < nx; ++x)
            ox[(std::size_t)x] = op(px[(std::size_t)x], rx[(std::size_t)x]);
          for (std::size_t s = 0; s < pq.size(); ++s) oq[s] = op(pq[s], rq[s]);
          next.emplace_back(std::move(ox), std::move(oq));
        }
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  rep.programs = (std::int64_t)all.size();
  for (const auto& [kx, kq] : all)
    if (!square_holds(kx, kq, &rep.witness)) return rep;
  rep.pass = true;
  return rep;
}

}  // namespace klab
