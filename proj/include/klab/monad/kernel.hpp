#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "klab/monad/bounds.hpp"

namespace klab {

/// Kernel over a finite carrier {0..n-1}: a total table of monad values.
/// Entry k[x] is the value produced at state x.
template <class M>
using Kernel = std::vector<typename M::template val<int>>;

/// Kleisli composition: first f, then g (mu . T g . f pointwise).
template <class M>
Kernel<M> kleisli(const Kernel<M>& f, const Kernel<M>& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("kleisli: carrier mismatch");
  Kernel<M> out;
  out.reserve(f.size());
  for (const auto& v : f)
    out.push_back(M::mult(M::map(v, [&](int y) { return g.at((std::size_t)y); })));
  return out;
}

template <class M>
Kernel<M> unit_kernel(int n) {
  Kernel<M> k;
  k.reserve((std::size_t)n);
  for (int x = 0; x < n; ++x) k.push_back(M::template unit<int>(x));
  return k;
}

template <class M>
Kernel<M> constant_kernel(int n, typename M::template val<int> v) {
  return Kernel<M>((std::size_t)n, std::move(v));
}

/// The space of kernels over an n-state carrier with values drawn from a
/// fixed finite universe; iterated exhaustively when |universe|^n fits the
/// budget, otherwise sampled with a seeded generator.
template <class M>
class KernelSpace {
 public:
  using V = typename M::template val<int>;

  KernelSpace(int n, std::vector<V> universe, std::int64_t exhaustive_limit = 1'000'000,
              std::int64_t samples = 1000, std::uint64_t seed = 42)
      : n_(n), universe_(std::move(universe)), samples_(samples), seed_(seed) {
    if (universe_.empty()) throw std::invalid_argument("KernelSpace: empty universe");
    std::int64_t total = 1;
    exhaustive_ = true;
    for (int i = 0; i < n_; ++i) {
      total *= (std::int64_t)universe_.size();
      if (total > exhaustive_limit) {
        exhaustive_ = false;
        break;
      }
    }
    count_ = exhaustive_ ? total : samples_;
  }

  bool exhaustive() const { return exhaustive_; }
  std::int64_t count() const { return count_; }

  Kernel<M> at(std::int64_t i) const {
    Kernel<M> k;
    k.reserve((std::size_t)n_);
    if (exhaustive_) {
      for (int x = 0; x < n_; ++x) {
        k.push_back(universe_[(std::size_t)(i % (std::int64_t)universe_.size())]);
        i /= (std::int64_t)universe_.size();
      }
    } else {
      // per-index seed stream: at(i) is pure, so parallel sweeps stay
      // deterministic
      std::mt19937_64 g(splitmix(seed_ + 0x9E3779B97F4A7C15ULL * (std::uint64_t)(i + 1)));
      std::uniform_int_distribution<std::size_t> pick(0, universe_.size() - 1);
      for (int x = 0; x < n_; ++x) k.push_back(universe_[pick(g)]);
    }
    return k;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  int n_;
  std::vector<V> universe_;
  std::int64_t samples_;
  std::uint64_t seed_;
  bool exhaustive_ = true;
  std::int64_t count_ = 0;
};

}  // namespace klab
