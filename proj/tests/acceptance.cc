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

// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.h"
#include "rainbow/campaigns.h"
#include "rainbow/complex.h"
#include "rainbow/homology.h"
#include "rainbow/instance_io.h"

namespace rainbow {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double time_limit_seconds;  // 0: none
  std::function<Verdict()> run;
};

bool has_note(const VerificationReport& r, const std::string& prefix) {
  for (const std::string& n : r.notes) {
    if (n.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

Verdict campaign_verdict(const VerificationReport& r, std::size_t min_checked) {
  Verdict v;
  v.pass = r.passed() && r.checked >= min_checked;
  v.detail = r.campaign + " " + std::to_string(r.checked) + " checked, " +
             std::to_string(r.failures) + " failures";
  if (r.counterexample) v.detail += "\n" + *r.counterexample;
  return v;
}

Verdict drisko() {
  CampaignParams p;
  p.exhaustive = true;
  p.n = 2;
  const VerificationReport two = run_campaign("drisko", p);
  p.n = 3;
  const VerificationReport three = run_campaign("drisko", p);
  Verdict v;
  v.pass = two.passed() && three.passed() && two.checked == 8 && three.checked == 7776;
  v.detail = "n=2: " + std::to_string(two.checked) + " matrices, n=3: " +
             std::to_string(three.checked) + " matrices, failures " +
             std::to_string(two.failures + three.failures);
  return v;
}

CampaignParams main_params() {
  CampaignParams p;
  p.count = 10000;
  p.seed = 0;
  return p;
}

Verdict main_theorem() {
  const VerificationReport r = run_campaign("main", main_params());
  Verdict v = campaign_verdict(r, 10000);
  v.pass = v.pass && has_note(r, "n=2") && has_note(r, "n=3");
  return v;
}

Verdict tightness() {
  const VerificationReport r = run_campaign("tightness", CampaignParams{});
  // Cycle n = 2..5 with and without the extra matching, complete n = 2, 4.
  return campaign_verdict(r, 10);
}

Verdict lemma() {
  CampaignParams p;
  p.count = 1000;
  p.ground = 7;
  const VerificationReport r = run_campaign("lemma", p);
  Verdict v = campaign_verdict(r, 1000);
  v.pass = v.pass && has_note(r, "exhaustive ell=1 applicable") &&
           has_note(r, "exhaustive ell=2 applicable") &&
           has_note(r, "random ell=2 applicable 1000");
  return v;
}

Verdict eta_recursion() {
  CampaignParams p;
  p.ground = 6;
  p.count = 1000;
  p.seed = 42;
  return campaign_verdict(run_campaign("eta-recursion", p), 1000);
}

Verdict matchability() {
  const VerificationReport r = run_campaign("matchability", main_params());
  Verdict v = campaign_verdict(r, 1);
  v.pass = v.pass && has_note(r, "hypothesis-holds");
  return v;
}

Verdict homology_oracle() {
  Verdict v;
  Rng rng(splitmix64(7));
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const SimplicialComplex c = testing::random_complex(rng.uniform(0, 6), rng);
    const long long oracle = testing::dense_eta(c);
    const EtaValue lib = eta(c);
    const bool eta_ok = oracle < 0 ? lib.is_infinite()
                                   : (!lib.is_infinite() && lib.value() == oracle);
    if (betti_numbers(c) != testing::dense_betti(c) || !eta_ok) ++mismatches;
  }
  std::string known;
  for (int m = 3; m <= 5; ++m) {
    const SimplicialComplex boundary =
        independence_complex(Hypergraph(ElementSet::range(m), {ElementSet::range(m)}));
    const bool ok = testing::dense_eta(boundary) == m - 1 && eta(boundary) == EtaValue(m - 1);
    if (!ok) ++mismatches;
    known += " boundary m=" + std::to_string(m) + (ok ? " ok" : " BAD");
  }
  const Hypergraph c5(ElementSet::range(5), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const std::vector<int> b = testing::dense_betti(independence_complex(c5));
  const bool c5_ok = b.size() > 2 && b[2] == 1 &&
                     testing::dense_eta(independence_complex(c5)) == 2 &&
                     eta(independence_complex(c5)) == EtaValue(2);
  if (!c5_ok) ++mismatches;
  known += std::string(" I(C5) betti_1=1 eta=2") + (c5_ok ? " ok" : " BAD");
  v.pass = mismatches == 0;
  v.detail = "200 random complexes," + known + ", mismatches " + std::to_string(mismatches);
  return v;
}

Verdict matroid_laws() {
  Verdict v;
  Rng rng(splitmix64(8));
  int matroids = 0;
  for (int g = 0; g <= 8; ++g) {
    for (int round = 0; round < 2; ++round) {
      for (const auto& [name, m] : testing::random_realizations(g, rng)) {
        ++matroids;
        for (const std::string& err :
             {testing::check_rank_axioms(m), testing::check_circuit_elimination(m),
              testing::check_contraction_formula(m), testing::check_quotient_equivalence(m),
              testing::check_loops_and_coloops(m)}) {
          if (!err.empty() && v.pass) {
            v.pass = false;
            v.detail = name + " " + describe_matroid(m) + ": " + err + "; ";
          }
        }
      }
    }
  }
  v.detail += std::to_string(matroids) + " matroids on grounds 0..8";
  return v;
}

}  // namespace
}  // namespace rainbow

int main() {
  using rainbow::Criterion;
  const std::vector<Criterion> criteria{
      {1, "Drisko exhaustive", 60, rainbow::drisko},
      {2, "main theorem randomized", 600, rainbow::main_theorem},
      {3, "tightness families", 0, rainbow::tightness},
      {4, "partition lemma", 0, rainbow::lemma},
      {5, "deletion-contraction inequality", 300, rainbow::eta_recursion},
      {6, "matchability on layered instances", 0, rainbow::matchability},
      {7, "homology oracle equivalence", 0, rainbow::homology_oracle},
      {8, "matroid law suite", 120, rainbow::matroid_laws},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    rainbow::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
      v.pass = false;
      v.detail += " (over the time limit)";
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << c.number << " " << (v.pass ? "PASS" : "FAIL") << "  "
              << c.name << ": " << v.detail << " [" << seconds << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
