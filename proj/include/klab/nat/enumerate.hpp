#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "klab/nat/table.hpp"

namespace klab {

struct EnumerateResult {
  std::vector<TableFamily> families;
  bool complete = true;  // false when the node budget cut the search short
  std::int64_t nodes = 0;
};

namespace detail {

/// Dynamic bitset over output-value indices.
class CandSet {
 public:
  void init_full(int n) {
    bits_.assign(((std::size_t)n + 63) / 64, ~0ull);
    if (n % 64) bits_.back() = (1ull << (n % 64)) - 1;
    count_ = n;
  }
  bool test(int i) const { return bits_[(std::size_t)i >> 6] >> (i & 63) & 1; }
  void clear(int i) {
    if (test(i)) {
      bits_[(std::size_t)i >> 6] &= ~(1ull << (i & 63));
      --count_;
    }
  }
  int count() const { return count_; }
  int first() const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w]) return (int)(w * 64 + (std::size_t)__builtin_ctzll(bits_[w]));
    return -1;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t x = bits_[w];
      while (x) {
        f((int)(w * 64 + (std::size_t)__builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }
  /// this &= other; returns true if anything was removed.
  bool intersect(const std::vector<std::uint64_t>& other) {
    bool changed = false;
    int c = 0;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t nw = bits_[w] & other[w];
      if (nw != bits_[w]) changed = true;
      bits_[w] = nw;
      c += __builtin_popcountll(nw);
    }
    count_ = c;
    return changed;
  }
  const std::vector<std::uint64_t>& words() const { return bits_; }
  void restore(std::vector<std::uint64_t> w, int c) {
    bits_ = std::move(w);
    count_ = c;
  }

 private:
  std::vector<std::uint64_t> bits_;
  int count_ = 0;
};

/// Arc-consistency search for all natural families Inputs -> M on the
/// fragment. Every entry (carrier, input tuple) keeps a candidate set of
/// output values; naturality squares become arcs that are propagated to a
/// fixpoint, and the remaining choices are resolved depth-first, most
/// constrained entry first.
template <class M, class Inputs>
class NatSearch {
 public:
  NatSearch(const Universe<M>& u, const Inputs& inputs, std::int64_t budget)
      : u_(u), in_(inputs), budget_(budget) {
    offsets_.resize((std::size_t)u.max_carrier() + 1, 0);
    for (int m = 1; m <= u.max_carrier(); ++m)
      offsets_[(std::size_t)m] = offsets_[(std::size_t)m - 1] + in_.count(m);
    total_ = offsets_.back();
    build_relations();
    cand_.resize((std::size_t)total_);
    for (std::int64_t e = 0; e < total_; ++e)
      cand_[(std::size_t)e].init_full(u_.num_out_vals(carrier_of(e)));
  }

  EnumerateResult run() {
    EnumerateResult res;
    // unary self-loop filters, then one global propagation to a fixpoint
    for (std::int64_t e = 0; e < total_; ++e) {
      for (const Rel& r : rels_[(std::size_t)e])
        if (r.target == e) {
          const auto& row = u_.out_push_row(r.m, r.n, r.f);
          std::vector<int> drop;
          cand_[(std::size_t)e].for_each([&](int v) {
            if (row[(std::size_t)v] != v) drop.push_back(v);
          });
          for (int v : drop) cand_[(std::size_t)e].clear(v);
        }
      if (cand_[(std::size_t)e].count() == 0) return res;  // no families at all
    }
    std::vector<std::pair<std::int64_t, std::pair<std::vector<std::uint64_t>, int>>> trail;
    std::deque<std::int64_t> work;
    for (std::int64_t e = 0; e < total_; ++e) work.push_back(e);
    if (!propagate(work, trail)) return res;  // globally inconsistent
    dfs(res);
    res.nodes = nodes_;
    return res;
  }

 private:
  struct Rel {
    std::int64_t target;
    int m, n, f;
  };
  using Trail =
      std::vector<std::pair<std::int64_t, std::pair<std::vector<std::uint64_t>, int>>>;

  int carrier_of(std::int64_t e) const {
    int m = 1;
    while (offsets_[(std::size_t)m] <= e) ++m;
    return m;
  }

  void build_relations() {
    rels_.resize((std::size_t)total_);
    back_.resize((std::size_t)total_);
    for (int m = 1; m <= u_.max_carrier(); ++m)
      for (long long t = 0; t < in_.count(m); ++t) {
        std::int64_t e = offsets_[(std::size_t)m - 1] + t;
        for (int n = 1; n <= u_.max_carrier(); ++n)
          for (int f = 0; f < u_.num_funcs(m, n); ++f) {
            std::int64_t e2 =
                offsets_[(std::size_t)n - 1] + in_.push(m, n, f, t);
            if (e2 == e && m == n && is_identity(m, f)) continue;
            rels_[(std::size_t)e].push_back(Rel{e2, m, n, f});
            if (e2 != e) back_[(std::size_t)e2].push_back(Rel{e, m, n, f});
          }
      }
  }

  bool is_identity(int m, int f) const {
    auto fn = u_.func(m, m, f);
    for (int k = 0; k < m; ++k)
      if (fn[(std::size_t)k] != k) return false;
    return true;
  }

  void save(Trail& trail, std::int64_t e) {
    trail.emplace_back(e, std::make_pair(cand_[(std::size_t)e].words(),
                                         cand_[(std::size_t)e].count()));
  }

  void undo(Trail& trail, std::size_t mark) {
    while (trail.size() > mark) {
      auto& [e, state] = trail.back();
      cand_[(std::size_t)e].restore(std::move(state.first), state.second);
      trail.pop_back();
    }
  }

  /// Revise target candidates through a forward arc (image restriction) and
  /// source candidates through a backward arc (preimage restriction).
  bool propagate(std::deque<std::int64_t>& work, Trail& trail) {
    std::vector<std::uint64_t> image;
    while (!work.empty()) {
      std::int64_t e = work.front();
      work.pop_front();
      nodes_ += 1;
      if (nodes_ > budget_) return false;
      // forward arcs: target values must be images of source candidates
      for (const Rel& r : rels_[(std::size_t)e]) {
        if (r.target == e) continue;
        CandSet& tgt = cand_[(std::size_t)r.target];
        const auto& row = u_.out_push_row(r.m, r.n, r.f);
        image.assign(tgt.words().size(), 0);
        cand_[(std::size_t)e].for_each([&](int v) {
          int w = row[(std::size_t)v];
          image[(std::size_t)w >> 6] |= 1ull << (w & 63);
        });
        save(trail, r.target);
        if (tgt.intersect(image)) {
          if (tgt.count() == 0) return false;
          work.push_back(r.target);
        } else {
          trail.pop_back();
        }
      }
      // backward arcs: source values must map into target candidates
      for (const Rel& r : back_[(std::size_t)e]) {
        CandSet& src = cand_[(std::size_t)r.target];
        const auto& row = u_.out_push_row(r.m, r.n, r.f);
        const CandSet& tgt = cand_[(std::size_t)e];
        std::vector<int> drop;
        src.for_each([&](int v) {
          if (!tgt.test(row[(std::size_t)v])) drop.push_back(v);
        });
        if (!drop.empty()) {
          save(trail, r.target);
          for (int v : drop) src.clear(v);
          if (src.count() == 0) return false;
          work.push_back(r.target);
        }
      }
    }
    return true;
  }

  void dfs(EnumerateResult& res) {
    if (nodes_ > budget_) {
      res.complete = false;
      return;
    }
    // most constrained undecided entry, lowest index on ties
    std::int64_t pick = -1;
    int best = INT32_MAX;
    for (std::int64_t e = 0; e < total_; ++e) {
      int c = cand_[(std::size_t)e].count();
      if (c > 1 && c < best) {
        best = c;
        pick = e;
      }
    }
    if (pick < 0) {
      res.families.push_back(snapshot());
      return;
    }
    std::vector<int> options;
    cand_[(std::size_t)pick].for_each([&](int v) { options.push_back(v); });
    for (int v : options) {
      Trail trail;
      save(trail, pick);
      std::vector<int> drop;
      cand_[(std::size_t)pick].for_each([&](int w) {
        if (w != v) drop.push_back(w);
      });
      for (int w : drop) cand_[(std::size_t)pick].clear(w);
      std::deque<std::int64_t> work{pick};
      if (propagate(work, trail)) dfs(res);
      if (nodes_ > budget_) res.complete = false;
      undo(trail, 0);
      if (!res.complete) return;
    }
  }

  TableFamily snapshot() const {
    TableFamily fam;
    fam.arity = in_.arity();
    fam.out.resize((std::size_t)u_.max_carrier());
    for (int m = 1; m <= u_.max_carrier(); ++m) {
      auto& t = fam.out[(std::size_t)m - 1];
      t.assign((std::size_t)in_.count(m), kUnset);
      for (long long i = 0; i < in_.count(m); ++i)
        t[(std::size_t)i] =
            cand_[(std::size_t)(offsets_[(std::size_t)m - 1] + i)].first();
    }
    return fam;
  }

  const Universe<M>& u_;
  const Inputs& in_;
  std::int64_t budget_;
  std::vector<std::int64_t> offsets_;
  std::int64_t total_ = 0;
  std::vector<CandSet> cand_;
  std::vector<std::vector<Rel>> rels_;
  std::vector<std::vector<Rel>> back_;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

/// All natural families T^arity -> T on the fragment, by constraint
/// propagation over the naturality squares.
template <class M>
EnumerateResult enumerate_natural(const Universe<M>& u, int arity,
                                  std::int64_t node_budget = 10'000'000) {
  TupleInputs<M> inputs(u, arity);
  detail::NatSearch<M, TupleInputs<M>> search(u, inputs, node_budget);
  return search.run();
}

/// All natural families Id -> T on the fragment (unit candidates).
template <class M>
EnumerateResult enumerate_units(const Universe<M>& u,
                                std::int64_t node_budget = 10'000'000) {
  IdInputs<M> inputs(u);
  detail::NatSearch<M, IdInputs<M>> search(u, inputs, node_budget);
  return search.run();
}

}  // namespace klab
