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

// Seeded instance generators and verification campaigns.
//
// Instance k of a campaign draws from its own generator seeded with
// splitmix64(seed + k), so streams are reproducible and campaigns that share
// parameters see the same instances. Results are merged in instance order.

#ifndef RAINBOW_CAMPAIGNS_H_
#define RAINBOW_CAMPAIGNS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rainbow/complex.h"
#include "rainbow/matroid.h"
#include "rainbow/rainbow.h"

namespace rainbow {

std::uint64_t splitmix64(std::uint64_t x);

// mt19937_64 with portable bounded draws (no std:: distributions, whose
// output differs between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin(int numerator, int denominator) {
    return uniform(0, denominator - 1) < numerator;
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform(0, static_cast<int>(i) - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class MatroidKind { kUniform, kPartition, kGraphic, kLinear };

std::string to_string(MatroidKind kind);
std::optional<MatroidKind> parse_matroid_kind(const std::string& name);

// Random matroid on {0..ground_size-1} of rank at least min_rank when the
// kind allows it: graphic on at most 6 vertices, linear over GF(2) or GF(3).
Matroid random_matroid(MatroidKind kind, int ground_size, int min_rank, Rng& rng);

struct RandomInstanceParams {
  int n = 2;
  std::optional<MatroidKind> m_kind;  // drawn at random when empty
  std::optional<MatroidKind> n_kind;
  int ground_size = 6;
  int max_attempts = 200;
};

// Instance with m = 2n-1 sets, |A_i| >= min(i, n), each independent in both
// matroids. Throws Error if no feasible draw is found within max_attempts.
RainbowInstance gen_random_instance(const RandomInstanceParams& params, Rng& rng);

struct CampaignParams {
  std::optional<int> n;
  std::optional<int> ground;
  std::optional<std::size_t> count;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string family;  // tightness: cycle | complete | all
  unsigned jobs = 0;   // 0: hardware concurrency
};

struct VerificationReport {
  std::string campaign;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failures == 0; }
  // Deterministic text (excludes wall time).
  std::string to_string() const;
};

VerificationReport verify_drisko(const CampaignParams& params);
VerificationReport verify_main(const CampaignParams& params);
VerificationReport verify_lemma(const CampaignParams& params);
VerificationReport verify_eta_recursion(const CampaignParams& params);
VerificationReport verify_matchability(const CampaignParams& params);
VerificationReport verify_tightness(const CampaignParams& params);

// Dispatches on the campaign name; throws Error for unknown names or
// out-of-range parameters.
VerificationReport run_campaign(const std::string& name,
                                const CampaignParams& params);

// The instance the main and matchability campaigns draw at position k.
RainbowInstance main_campaign_instance(const CampaignParams& params,
                                       std::size_t k);

}  // namespace rainbow

#endif  // RAINBOW_CAMPAIGNS_H_
