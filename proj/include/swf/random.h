// Copyright 2026 The SWF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWF_RANDOM_H_
#define SWF_RANDOM_H_

#include <array>
#include <cstdint>
#include <string_view>

namespace swf {

// Name under which the generator is pinned in configuration files.
inline constexpr std::string_view kGeneratorName = "philox4x32-10";

// Philox4x32 with 10 rounds (Salmon et al., SC'11). A pure function of
// (counter, key), so any draw can be reproduced from its position alone.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter Generate(Counter counter, Key key);
};

// A stream of uniform draws addressed by (master_seed, stream_index).
//
// Splitting rule: the Philox key is the master seed (low word first), and
// the 128-bit counter is (block_lo, block_hi, stream_lo, stream_hi). Run r
// of an experiment uses stream_index = r. Each block yields two 64-bit
// words; each word yields one double in [0, 1) from its top 53 bits.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t NextWord();
  double NextUniform();

  std::uint64_t words_drawn() const { return words_drawn_; }

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_index_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  std::uint64_t words_drawn_ = 0;
};

}  // namespace swf

#endif  // SWF_RANDOM_H_
