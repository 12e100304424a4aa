// Copyright 2026 The convlab authors.
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

#ifndef CONVLAB_RNG_HPP
#define CONVLAB_RNG_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace convlab {

// Counter-based stream built on Philox4x32-10 (Salmon et al., SC 2011,
// "Parallel random numbers: as easy as 1, 2, 3").
//
// The 64-bit key is the seed; the 128-bit counter holds a 64-bit stream id
// in its high half and a 64-bit block index in its low half.  Streams with
// the same seed and distinct ids never overlap, so replicate-level
// substreams can be handed to workers in any order without coordination.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  // Child stream addressed by (a, b) relative to this stream's id.
  // Derivation is a fixed avalanche mix, so the result depends only on
  // (seed, stream, a, b) and never on draw position.
  RngStream substream(std::uint64_t a, std::uint64_t b = 0) const;

  std::uint64_t next_u64();

  // Strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53, never 0 or 1.
  double next_uniform();

  // Standard exponential via -log(U).
  double next_exponential();

  void fill_uniform(std::vector<double>& out, std::size_t n);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  void refill();

  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;  // consumed 32-bit lanes in buf_
};

// SplitMix64 finalizer; used for substream derivation and id hashing.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a 64-bit hash of a byte string, for stable scenario-id streams.
std::uint64_t fnv1a64(const char* data, std::size_t len);

}  // namespace convlab

#endif  // CONVLAB_RNG_HPP
