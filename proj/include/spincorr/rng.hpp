#pragma once

#include <array>
#include <cstdint>

namespace spincorr {

namespace philox {

// Philox 4x64, 10 rounds (Salmon, Moraes, Dror, Shaw; SC'11).
inline constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
inline constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
inline constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

/// One 256-bit block of the keyed bijection. Fully specified by fixed-width
/// integer arithmetic, so the output is identical on any platform.
inline std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> c,
                                          std::uint64_t k0, std::uint64_t k1) {
  for (int round = 0; round < 10; ++round) {
    const unsigned __int128 p0 = static_cast<unsigned __int128>(kMult0) * c[0];
    const unsigned __int128 p1 = static_cast<unsigned __int128>(kMult1) * c[2];
    c = {static_cast<std::uint64_t>(p1 >> 64) ^ c[1] ^ k0,
         static_cast<std::uint64_t>(p1),
         static_cast<std::uint64_t>(p0 >> 64) ^ c[3] ^ k1,
         static_cast<std::uint64_t>(p0)};
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return c;
}

}  // namespace philox

/// Counter-based seeded generator. The key is (master_seed, stream_index) and
/// the counter enumerates blocks, so distinct stream indices give independent
/// streams from one master seed. A parallel run hands stream s to shard s;
/// generators are single-owner and never shared between workers.
class SeededRng {
 public:
  SeededRng(std::uint64_t master_seed, std::uint64_t stream_index) noexcept
      : master_seed_(master_seed), stream_index_(stream_index) {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      buf_ = philox::block({block_, 0, 0, 0}, master_seed_, stream_index_);
      ++block_;
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_unit_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 4> buf_{};
  int pos_ = 4;
};

}  // namespace spincorr
