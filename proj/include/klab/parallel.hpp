#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klab {

/// Execution mode for the sweep kernels. Every parallel kernel has a serial
/// twin with identical observable results; tests compare the two and the
/// bench tool times them.
enum class Exec { Serial, Parallel };

inline Exec default_exec() {
  if (const char* v = std::getenv("KLEISLI_LAB_THREADS")) {
    if (std::string(v) == "1") return Exec::Serial;
  }
#ifdef _OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

inline constexpr std::int64_t kNoFailure = -1;

/// Index of the first element of [0, n) failing `check`, or kNoFailure.
/// Deterministic in both modes: the parallel version reduces to the minimal
/// failing index, independent of thread scheduling.
template <class Check>
std::int64_t sweep_first_fail(std::int64_t n, Check&& check,
                              Exec mode = default_exec()) {
  if (mode == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i)
      if (!check(i)) return i;
    return kNoFailure;
  }
  std::int64_t best = n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(min : best)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    if (i < best && !check(i)) best = i;
  }
  return best == n ? kNoFailure : best;
}

/// Number of elements of [0, n) failing `check`.
template <class Check>
std::int64_t sweep_count_fail(std::int64_t n, Check&& check,
                              Exec mode = default_exec()) {
  std::int64_t fails = 0;
  if (mode == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i)
      if (!check(i)) ++fails;
    return fails;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : fails)
#endif
  for (std::int64_t i = 0; i < n; ++i)
    if (!check(i)) ++fails;
  return fails;
}

/// Streaming variant for value spaces too large to materialize. Values are
/// pushed one by one; full buffers are swept with sweep_first_fail. Records
/// the global index of the first failing value.
template <class V, class Check>
class BufferedSweep {
 public:
  BufferedSweep(Check check, Exec mode, std::size_t buffer_size = 1 << 15)
      : check_(std::move(check)), mode_(mode) {
    buf_.reserve(buffer_size);
    cap_ = buffer_size;
  }

  /// Returns false once a failure has been found (producer may stop early).
  bool push(V v) {
    if (failed()) return false;
    buf_.push_back(std::move(v));
    if (buf_.size() == cap_) flush();
    return !failed();
  }

  void finish() {
    if (!failed()) flush();
  }

  bool failed() const { return fail_index_ != kNoFailure; }
  std::int64_t fail_index() const { return fail_index_; }
  const V* failing_value() const { return failed() ? &fail_value_ : nullptr; }
  std::int64_t total() const { return base_ + (std::int64_t)buf_.size(); }

 private:
  void flush() {
    if (buf_.empty()) return;
    std::int64_t i = sweep_first_fail(
        (std::int64_t)buf_.size(), [&](std::int64_t k) { return check_(buf_[(std::size_t)k]); },
        mode_);
    if (i != kNoFailure) {
      fail_index_ = base_ + i;
      fail_value_ = buf_[(std::size_t)i];
    }
    base_ += (std::int64_t)buf_.size();
    buf_.clear();
  }

  Check check_;
  Exec mode_;
  std::vector<V> buf_;
  std::size_t cap_;
  std::int64_t base_ = 0;
  std::int64_t fail_index_ = kNoFailure;
  V fail_value_{};
};

}  // namespace klab
