// Copyright 2026 The Surrograph Authors.
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

#ifndef SURROGRAPH_RNG_H_
#define SURROGRAPH_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace surrograph {

// Named sub-streams. Every stage draws from its own stream derived from the
// run seed, so enabling or disabling one stage never shifts the draws another
// stage sees. Values are part of the reproducibility contract; append only.
enum class Stream : std::uint64_t {
  kVertexAllocation = 1,
  kEdgeSampling = 2,
  kLabelSynthesis = 3,
  kFixture = 4,
};

std::uint64_t mix64(std::uint64_t x);

// Counter-based 64-bit generator: output i is mix64(key + i * golden).
// Bounded draws use Lemire's rejection method so results are identical on
// every platform (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(mix64(key)) {}

  // Stream-splitting rule: key = fold(mix64, seed, stream, path...).
  static Rng for_stream(std::uint64_t seed, Stream stream,
                        std::initializer_list<std::uint64_t> path = {});

  std::uint64_t next();
  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[uniform(i)]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace surrograph

#endif  // SURROGRAPH_RNG_H_
