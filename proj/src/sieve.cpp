#include "sqf/sieve.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

namespace sqf::sieve {

namespace {

std::mutex g_prime_mutex;
std::vector<u64> g_primes;
u64 g_prime_limit = 0;

std::vector<u64> eratosthenes(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (u64 p = 2; p * p <= limit; ++p)
    if (!comp[p])
      for (u64 q = p * p; q <= limit; q += p) comp[q] = true;
  for (u64 p = 2; p <= limit; ++p)
    if (!comp[p]) out.push_back(p);
  return out;
}

}  // namespace

const std::vector<u64>& primes_upto(u64 limit) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  if (limit > g_prime_limit) {
    u64 new_limit = std::max<u64>(limit, 1u << 10);
    g_primes = eratosthenes(new_limit);
    g_prime_limit = new_limit;
  }
  return g_primes;
}

bool is_squarefree(u128 n) {
  if (n == 0) throw std::domain_error("is_squarefree: n must be >= 1");
  for (u128 d = 2; d * d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return false;
    }
  }
  // Remaining cofactor has at most two prime factors; only p^2 is bad.
  return !is_perfect_square(n);
}

SieveSegment sieve_segment(u128 lo, u128 hi, u64 block_size) {
  if (lo < 1 || lo >= hi) throw std::invalid_argument("sieve_segment: need 1 <= lo < hi");
  if (hi - lo > block_size) throw std::length_error("sieve_segment: segment exceeds block size");
  SieveSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.flags.assign(static_cast<size_t>(hi - lo), true);
  u128 root = isqrt(hi - 1);
  const auto& primes = primes_upto(static_cast<u64>(root));
  for (u64 p : primes) {
    u128 p2 = static_cast<u128>(p) * p;
    if (p2 >= hi) break;
    u128 first = ((lo + p2 - 1) / p2) * p2;
    for (u128 q = first; q < hi; q += p2) seg.flags[static_cast<size_t>(q - lo)] = false;
  }
  return seg;
}

u128 count_squarefree_upto(u128 x, unsigned threads) {
  if (x < 1) throw std::invalid_argument("count_squarefree_upto: x must be >= 1");
  const u64 block = kDefaultBlockSize;
  u128 total_chunks = (x + block - 1) / block;
  primes_upto(static_cast<u64>(isqrt(x)));

  auto count_chunk = [&](u128 idx) -> u128 {
    u128 lo = idx * block + 1;
    u128 hi = std::min<u128>(x + 1, lo + block);
    SieveSegment seg = sieve_segment(lo, hi, block);
    u128 c = 0;
    for (bool f : seg.flags) c += f;
    return c;
  };

  if (threads <= 1 || total_chunks <= 1) {
    u128 total = 0;
    for (u128 i = 0; i < total_chunks; ++i) total += count_chunk(i);
    return total;
  }

  std::atomic<u64> next_chunk{0};
  std::vector<u128> partial(static_cast<size_t>(total_chunks), 0);
  auto worker = [&] {
    for (;;) {
      u64 i = next_chunk.fetch_add(1);
      if (i >= total_chunks) return;
      partial[i] = count_chunk(i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  u128 total = 0;
  for (u128 c : partial) total += c;
  return total;
}

u128 next_squarefree(u128 x) {
  u64 span = 64;
  u128 lo = x + 1;
  for (;;) {
    u128 hi = lo + span;
    SieveSegment seg = sieve_segment(lo, hi);
    for (size_t i = 0; i < seg.flags.size(); ++i)
      if (seg.flags[i]) return lo + i;
    lo = hi;
    if (span < kDefaultBlockSize) span *= 4;
  }
}

namespace {

// Per-chunk scan result: local record candidates plus boundary squarefree
// numbers. Candidates are the chunk-local strictly increasing gap maxima;
// any pair that is not a chunk-local record cannot be a global one.
struct ChunkScan {
  std::optional<u128> first_sf;
  std::optional<u128> last_sf;
  std::vector<GapRecord> candidates;
};

ChunkScan scan_chunk(u128 lo, u128 hi) {
  ChunkScan out;
  u64 local_best = 0;
  std::optional<u128> prev;
  for (u128 seg_lo = lo; seg_lo < hi; seg_lo += kDefaultBlockSize) {
    u128 seg_hi = std::min<u128>(hi, seg_lo + kDefaultBlockSize);
    SieveSegment seg = sieve_segment(seg_lo, seg_hi);
    for (size_t i = 0; i < seg.flags.size(); ++i) {
      if (!seg.flags[i]) continue;
      u128 s = seg_lo + i;
      if (!out.first_sf) out.first_sf = s;
      if (prev) {
        u64 gap = static_cast<u64>(s - *prev);
        if (gap > local_best) {
          local_best = gap;
          out.candidates.push_back({*prev, gap});
        }
      }
      prev = s;
    }
  }
  out.last_sf = prev;
  return out;
}

}  // namespace

std::vector<GapRecord> max_gap_scan(u128 limit, unsigned threads, const ProgressFn& progress) {
  if (limit < 2) throw std::invalid_argument("max_gap_scan: limit must be >= 2");
  // Chunk geometry is fixed so results do not depend on the thread count.
  const u64 chunk = kDefaultBlockSize * 8;
  u128 n_chunks = (limit + chunk - 1) / chunk;
  primes_upto(static_cast<u64>(isqrt(limit)));

  std::vector<ChunkScan> scans(static_cast<size_t>(n_chunks));
  std::atomic<u64> next_idx{0};
  std::atomic<u64> done{0};
  auto worker = [&] {
    for (;;) {
      u64 i = next_idx.fetch_add(1);
      if (i >= n_chunks) return;
      u128 lo = static_cast<u128>(i) * chunk + 1;
      u128 hi = std::min<u128>(limit + 1, lo + chunk);
      scans[i] = scan_chunk(lo, hi);
      u64 d = done.fetch_add(1) + 1;
      if (progress) progress(std::min<u128>(static_cast<u128>(d) * chunk, limit), limit);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Deterministic ordered merge: carry the last squarefree number across
  // chunk boundaries and filter candidates against the global record.
  std::vector<GapRecord> records;
  u64 best = 0;
  std::optional<u128> carry;
  for (const ChunkScan& cs : scans) {
    if (carry && cs.first_sf) {
      u64 gap = static_cast<u64>(*cs.first_sf - *carry);
      if (gap > best) {
        best = gap;
        records.push_back({*carry, gap});
      }
    }
    for (const GapRecord& c : cs.candidates) {
      if (c.gap > best) {
        best = c.gap;
        records.push_back(c);
      }
    }
    if (cs.last_sf) carry = cs.last_sf;
  }
  return records;
}

}  // namespace sqf::sieve
