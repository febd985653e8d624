#include "svta/common.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>

#include <zlib.h>

namespace svta {

std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
  if (k > n) throw ParameterError("sample_without_replacement: k > n");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform_int(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {
std::atomic<int> g_workers{0};
}

int worker_count() { return g_workers.load(std::memory_order_relaxed); }

void set_worker_count(int n) {
  if (n < 0) throw ParameterError("worker count must be >= 0");
  g_workers.store(n, std::memory_order_relaxed);
}

std::uint32_t crc32_bytes(const void* data, std::size_t n, std::uint32_t seed) {
  return static_cast<std::uint32_t>(
      ::crc32(seed, static_cast<const Bytef*>(data), static_cast<uInt>(n)));
}

std::string hex_u32(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08x", v);
  return std::string(buf);
}

}  // namespace svta
