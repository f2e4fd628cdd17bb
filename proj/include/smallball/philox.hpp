/*
   Copyright 2026 The smallball Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>

namespace smallball {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
/// pure function of (counter, key), so sample i of a stream can be produced
/// by any worker in any order.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter generate(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

  /// Stream keyed by a 64-bit seed; draw(i) is the i-th 128-bit block.
  explicit constexpr Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr Counter draw(std::uint64_t index, std::uint32_t lane = 0) const {
    return generate({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                     lane, 0},
                    key_);
  }

  /// Two doubles in [0, 1) with 53 random bits each from block (index, lane).
  std::array<double, 2> uniform_pair(std::uint64_t index, std::uint32_t lane = 0) const {
    const Counter c = draw(index, lane);
    return {to_unit(c[0], c[1]), to_unit(c[2], c[3])};
  }

  static constexpr double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (std::uint64_t{hi} << 32 | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

  Key key_;
};

/// Sequential view over a Philox stream for code that just wants the next number.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed, std::uint32_t lane = 0) : gen_(seed), lane_(lane) {}

  double next() {
    if (slot_ == 2) {
      buf_ = gen_.uniform_pair(index_++, lane_);
      slot_ = 0;
    }
    return buf_[slot_++];
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  Philox4x32 gen_;
  std::uint32_t lane_;
  std::uint64_t index_ = 0;
  std::array<double, 2> buf_{};
  int slot_ = 2;
};

}  // namespace smallball
