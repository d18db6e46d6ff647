#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hbsim {

// Philox 4x32, 10 rounds. Counter-based: every 128-bit counter value maps to
// an independent 128-bit block under a 64-bit key, so streams can be addressed
// by (seed, run, tag) without any sequential seeding ceremony.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t mul0 = 0xD2511F53u;
  constexpr std::uint32_t mul1 = 0xCD9E8D57u;
  constexpr std::uint32_t bump0 = 0x9E3779B9u;
  constexpr std::uint32_t bump1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += bump0;
      key[1] += bump1;
    }
    const std::uint64_t p0 = std::uint64_t(mul0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(mul1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
           std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
  }
  return ctr;
}

// One logical stream of uniform variates addressed by (master seed, run index,
// stream tag). Streams with distinct addresses never overlap; the same address
// always replays the same sequence.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t run_index, std::uint32_t stream_tag)
      : key_{std::uint32_t(master_seed), std::uint32_t(master_seed >> 32)},
        base_{0, stream_tag, std::uint32_t(run_index), std::uint32_t(run_index >> 32)} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      auto ctr = base_;
      ctr[0] = block_++;
      buf_ = philox4x32(ctr, key_);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform double in [0, 1) with 53-bit resolution.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Exact at p = 0 and p = 1.
  bool bernoulli(double p) { return next_unit() < p; }

  // Unbiased uniform integer in [0, n). Multiply-shift with rejection.
  std::uint64_t below(std::uint64_t n) {
    unsigned __int128 m = (unsigned __int128)next_u64() * n;
    auto lo = std::uint64_t(m);
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = (unsigned __int128)next_u64() * n;
        lo = std::uint64_t(m);
      }
    }
    return std::uint64_t(m >> 64);
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> base_;
  std::array<std::uint32_t, 4> buf_{};
  std::uint32_t block_ = 0;
  int pos_ = 4;
};

// Fisher-Yates; every permutation equally likely.
template <class T>
void shuffle(std::vector<T>& items, RandomStream& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace hbsim
