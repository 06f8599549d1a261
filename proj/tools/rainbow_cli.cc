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

// rainbow: command-line driver.
//
//   rainbow rainbow <file> [--sort-by-size]
//   rainbow eta <file>
//   rainbow homology <file> [--k <int>]
//   rainbow verify <campaign> [--n --ground --count --seed --exhaustive ...]
//   rainbow gen <cycle|complete|drisko|random> [--n --seed] --out <file>
//
// Exit codes: 0 found / verified, 1 none / counterexample, 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/campaigns.h"
#include "rainbow/homology.h"
#include "rainbow/instance_io.h"
#include "rainbow/rainbow.h"
#include "rainbow/reductions.h"

namespace {

using namespace rainbow;

constexpr int kFound = 0;
constexpr int kNone = 1;
constexpr int kInputError = 2;

int cmd_rainbow(const std::string& path, bool sort_by_size) {
  const InstanceFile file = read_instance_file(path);
  const RainbowInstance& inst = file.instance;
  if (!sort_by_size) {
    const auto sel = find_rainbow(inst);
    std::cout << (sel ? sel->to_string() : "NONE") << "\n";
    return sel ? kFound : kNone;
  }
  std::vector<ElementSet> sets = inst.sets();
  const std::vector<int> layer = sort_sets_by_size(sets);
  const RainbowInstance sorted(inst.matroid_m(), inst.matroid_n(), sets,
                               inst.target());
  auto sel = find_rainbow(sorted);
  if (!sel) {
    std::cout << "NONE\n";
    return kNone;
  }
  for (LayeredElement& p : sel->chosen) p.layer = layer[p.layer - 1];
  std::sort(sel->chosen.begin(), sel->chosen.end(),
            [](const LayeredElement& a, const LayeredElement& b) {
              return a.layer < b.layer;
            });
  std::cout << sel->to_string() << "\n";
  return kFound;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(values[i]);
  }
  return out;
}

int cmd_eta(const std::string& path) {
  const ComplexFile file = read_complex_file(path);
  const SimplicialComplex& c = file.complex;
  if (c.is_void()) {
    std::cout << "void complex\neta 0\n";
    return kFound;
  }
  const EtaTrace trace = eta_with_betti(c);
  const int top = static_cast<int>(trace.betti_prefix.size()) - 2;
  std::cout << "betti[-1.." << top << "] = " << join(trace.betti_prefix) << "\n";
  std::cout << "eta " << trace.eta.to_string() << "\n";
  return kFound;
}

int cmd_homology(const std::string& path, std::optional<int> k) {
  const ComplexFile file = read_complex_file(path);
  const SimplicialComplex& c = file.complex;
  if (c.is_void()) {
    std::cout << "void complex\n";
    return kFound;
  }
  if (k) {
    if (*k < -1) throw Error("--k must be at least -1");
    std::cout << "betti[" << *k << "] = " << betti(c, *k) << "\n";
    return kFound;
  }
  const std::vector<int> b = betti_numbers(c);
  std::cout << "betti[-1.." << static_cast<int>(b.size()) - 2 << "] = " << join(b)
            << "\n";
  return kFound;
}

int cmd_verify(const std::string& campaign, const CampaignParams& params) {
  const VerificationReport report = run_campaign(campaign, params);
  std::cout << report.to_string();
  std::cerr << "wall time " << report.seconds << " s\n";
  return report.passed() ? kFound : kNone;
}

std::string drisko_file(const IntMatrix& x) {
  std::string out;
  for (int r = 0; r < x.rows; ++r) {
    out += "# row";
    for (int c = 0; c < x.cols; ++c) out += " " + std::to_string(x.entries[r][c]);
    out += "\n";
  }
  return out + serialize_instance(drisko_instance(x));
}

int cmd_gen(const std::string& family, std::optional<int> n, std::uint64_t seed,
            const std::string& out_path) {
  std::string text;
  if (family == "cycle") {
    const int size = n.value_or(2);
    auto [g, ms] = gen_cycle_tightness(size);
    text = "# cycle family, n = " + std::to_string(size) + "\n" +
           serialize_instance(matchings_to_instance(g, ms, size));
  } else if (family == "complete") {
    const int size = n.value_or(2);
    auto [g, ms] = gen_complete_bipartite_example(size);
    text = "# complete bipartite family, n = " + std::to_string(size) + "\n" +
           serialize_instance(matchings_to_instance(g, ms, size));
  } else if (family == "drisko") {
    const int size = n.value_or(2);
    if (size < 1 || size > 5) throw Error("drisko family supports 1 <= n <= 5");
    Rng rng(splitmix64(seed));
    std::vector<std::vector<int>> columns;
    for (int c = 0; c < 2 * size - 1; ++c) {
      std::vector<int> col(size);
      for (int i = 0; i < size; ++i) col[i] = i + 1;
      rng.shuffle(col);
      columns.push_back(col);
    }
    text = drisko_file(IntMatrix::from_columns(columns));
  } else if (family == "random") {
    CampaignParams params;
    params.n = n;
    params.seed = seed;
    text = serialize_instance(main_campaign_instance(params, 0));
  } else {
    throw Error("unknown family '" + family + "'");
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
  return kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow sets in the intersection of two matroids"};
  app.require_subcommand(1);

  std::string path;
  bool sort_by_size = false;
  auto* rainbow_cmd = app.add_subcommand("rainbow", "Search for a rainbow set");
  rainbow_cmd->add_option("file", path, "Instance file")->required();
  rainbow_cmd->add_flag("--sort-by-size", sort_by_size,
                        "Order sets by size before searching");

  auto* eta_cmd = app.add_subcommand("eta", "Connectivity of a complex");
  eta_cmd->add_option("file", path, "Hypergraph or complex file")->required();

  std::optional<int> k;
  auto* homology_cmd = app.add_subcommand("homology", "Reduced Betti numbers");
  homology_cmd->add_option("file", path, "Hypergraph or complex file")->required();
  homology_cmd->add_option("--k", k, "Single degree");

  std::string campaign;
  CampaignParams params;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  verify_cmd
      ->add_option("campaign", campaign,
                   "drisko | main | lemma | eta-recursion | matchability | tightness")
      ->required();
  verify_cmd->add_option("--n", params.n, "Target size");
  verify_cmd->add_option("--ground", params.ground, "Ground size");
  verify_cmd->add_option("--count", params.count, "Random instances");
  verify_cmd->add_option("--seed", params.seed, "Seed (default 0)");
  verify_cmd->add_flag("--exhaustive", params.exhaustive, "Enumerate all instances");
  verify_cmd->add_option("--family", params.family, "Tightness family");
  verify_cmd->add_option("--jobs", params.jobs, "Worker threads (0: all cores)");

  std::string family;
  std::string out_path;
  std::optional<int> gen_n;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
  gen_cmd->add_option("family", family, "cycle | complete | drisko | random")
      ->required();
  gen_cmd->add_option("--n", gen_n, "Target size");
  gen_cmd->add_option("--seed", gen_seed, "Seed (default 0)");
  gen_cmd->add_option("--out", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*rainbow_cmd) return cmd_rainbow(path, sort_by_size);
    if (*eta_cmd) return cmd_eta(path);
    if (*homology_cmd) return cmd_homology(path, k);
    if (*verify_cmd) return cmd_verify(campaign, params);
    if (*gen_cmd) return cmd_gen(family, gen_n, gen_seed, out_path);
  } catch (const ScaleLimitError& e) {
    std::cerr << "scale limit: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
