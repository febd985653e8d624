#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace svta {

// ---------------------------------------------------------------------------
// Error classes. The CLI maps each to a distinct exit code.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

// Reflective op applied to a thermal band or vice versa.
class KindMismatchError : public Error {
public:
  using Error::Error;
};

class EmptyGranuleError : public Error {
public:
  using Error::Error;
};

class CorruptStoreError : public Error {
public:
  using Error::Error;
};

class MissingArtifactError : public Error {
public:
  using Error::Error;
};

class TrainingError : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Fill marker for cells/pixels without valid data. Stored values are either
// in [0,1] or exactly kFill.
// ---------------------------------------------------------------------------

inline constexpr float kFill = -1.0f;

inline bool is_fill(float v) { return v < -0.5f; }
inline bool is_fill(double v) { return v < -0.5; }

// ---------------------------------------------------------------------------
// Deterministic RNG. mt19937_64 is fully specified by the standard; the
// distributions below are hand-rolled so streams never depend on libstdc++
// internals.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream for (seed, tag, index) triples so parallel
// callers never share state.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(seed ^ splitmix64(tag)) ^ index);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw ParameterError("uniform_int: n must be positive");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Box-Muller; consumes two uniforms per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n); partial Fisher-Yates, result sorted.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// ---------------------------------------------------------------------------
// Worker-pool setting shared by all parallel kernels. 0 means "use the
// OpenMP default". Kernels are written so results do not depend on the
// worker count (per-element reductions run in a fixed serial order).
// ---------------------------------------------------------------------------

int worker_count();
void set_worker_count(int n);

template <typename F>
void parallel_for(std::int64_t n, F&& f) {
#ifdef _OPENMP
  int w = worker_count();
  if (n > 1 && w != 1) {
    if (w > 0) {
#pragma omp parallel for schedule(static) num_threads(w)
      for (std::int64_t i = 0; i < n; ++i) f(i);
    } else {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) f(i);
    }
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

// crc32 (zlib polynomial) over a byte buffer.
std::uint32_t crc32_bytes(const void* data, std::size_t n, std::uint32_t seed = 0);

std::string hex_u32(std::uint32_t v);

}  // namespace svta
