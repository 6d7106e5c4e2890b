#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace levylab {

// Philox4x32-10 counter-based generator (Salmon et al. constants). Any
// coefficient is addressable directly from (key, counter), so samples are
// reproducible independent of evaluation order or thread count.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// One pair of independent standard normals per counter, via Box-Muller on
// the four 32-bit Philox words.
struct NormalPair {
  double z0;
  double z1;
};

inline NormalPair counter_normals(std::uint64_t seed, std::uint32_t stream,
                                  std::uint32_t band, std::uint32_t node,
                                  std::uint32_t replica) {
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  const std::array<std::uint32_t, 4> ctr = {stream, band, node, replica};
  const auto w = Philox4x32::block(ctr, key);
  const std::uint64_t a = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
  const std::uint64_t b = (static_cast<std::uint64_t>(w[2]) << 32) | w[3];
  // 53-bit uniforms in (0, 1]; u1 away from 0 for the log.
  const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double two_pi = 2.0 * std::acos(-1.0);
  return {r * std::cos(two_pi * u2), r * std::sin(two_pi * u2)};
}

// Uniform in [0,1) addressed the same way; used by randomized property tests.
inline double counter_uniform(std::uint64_t seed, std::uint32_t stream, std::uint32_t band,
                              std::uint32_t node, std::uint32_t replica) {
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  const auto w = Philox4x32::block({stream, band, node, replica}, key);
  const std::uint64_t a = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
  return static_cast<double>(a >> 11) * 0x1.0p-53;
}

}  // namespace levylab
