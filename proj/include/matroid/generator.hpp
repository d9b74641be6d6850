// Copyright 2026 The Authors.
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

#pragma once

#include <cstdint>
#include <random>

#include "matroid/family.hpp"

namespace matroid {

struct GeneratorOptions {
  int min_elements = 1;
  int max_elements = 8;
  int min_members = 1;
  int max_members = 4;
  /// Wrap base matroids in duals, extra loops, minors of an extended
  /// ground, or chunked direct sums.
  bool allow_wrappers = true;
};

/// Seeded source of random families and assignments for randomized tests.
/// Equal seeds and options give equal draw sequences within one build.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, GeneratorOptions options = {})
      : seed_(seed), options_(options), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }

  MatroidFamily next_family();
  MatroidPtr next_matroid(GroundSetPtr ground);

  int next_int(int lo, int hi);  // inclusive bounds
  ElementSet random_subset(const ElementSet& within);
  /// Pairwise disjoint sets, independent per member; possibly empty.
  SetList random_disjoint_independent_parts(const MatroidFamily& f);

 private:
  MatroidPtr base_matroid(GroundSetPtr ground);

  std::uint64_t seed_;
  GeneratorOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace matroid
