// Copyright 2026 The Footprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOOTPRINT_CORE_SIMULATOR_HPP_
#define FOOTPRINT_CORE_SIMULATOR_HPP_

#include <cstdint>
#include <vector>

#include "core/profile.hpp"
#include "core/session.hpp"
#include "core/taxonomy.hpp"

namespace footprint {

// Counter-based generator: every (seed, purpose, user, visit) tuple
// opens an independent stream, so users and visits can be generated
// in any order with identical output. The stream itself advances like
// splitmix64.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t purpose, uint64_t user, uint64_t visit);

  uint64_t next();
  // Uniform in [0, 1).
  double next_double();
  // Uniform in [0, n); n > 0.
  uint64_t next_below(uint64_t n);

 private:
  uint64_t state_;
};

struct SimulationConfig {
  uint64_t seed = 42;
  int num_users = 86;
  int pages_per_user = 15;
  const CategoryTaxonomy* taxonomy = &CategoryTaxonomy::bundled_default();
  // Weight of the accumulated user profile in the ad mixture; the
  // rest is uniform. 0 disables the feedback loop entirely.
  double responsiveness = 0.9;
  int tags_per_page = 80;
  int params_per_page = 60;
  int trackers_per_page = 3;
};

struct SimulatedUser {
  size_t index = 0;
  // Ground-truth interest distribution over the taxonomy categories.
  ProfilePMF bias;
};

// Splits `total` across categories proportionally to `weights`
// (largest-remainder rounding; quota ties awarded in random order so
// no category is systematically favored).
std::vector<int64_t> quota_counts(const std::vector<double>& weights,
                                  int64_t total, CounterRng& rng);

// Deterministic bias for one user: normalized exponential draws, a
// flat-Dirichlet sample.
SimulatedUser draw_user(const SimulationConfig& config, size_t user_index);

// One synthetic session. Page tags are lexicon terms drawn from the
// user bias and emitted as meta keywords; each visit issues
// trackers_per_page synthetic requests whose query parameters carry
// terms drawn from the responsiveness mixture over the user's
// accumulated tags (uniform on the first visit). Throws
// Error{kInput} on out-of-range config or a category with an empty
// lexicon.
BrowsingSession simulate_session(const SimulationConfig& config,
                                 const SimulatedUser& user);

// num_users sessions with biases drawn from the seed.
std::vector<BrowsingSession> simulate_population(
    const SimulationConfig& config);

}  // namespace footprint

#endif  // FOOTPRINT_CORE_SIMULATOR_HPP_
