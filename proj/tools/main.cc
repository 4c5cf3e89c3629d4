// Copyright 2026 The smx Authors.
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

// smx: command line front end.
//
//   smx solve       --algo A [instance flags]      one algorithm, one instance
//   smx sweep       [--config spec.json] [flags]   grid x seeds x algorithms
//   smx reduce-sat  --cnf phi.cnf                  SAT -> gadget -> max-min
//   smx verify      [--level quick|full]           property suites
//   smx gen         --n1 N --n2 M --out pts.csv    synthetic points
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smx/baselines.h"
#include "smx/error.h"
#include "smx/harness/experiment.h"
#include "smx/harness/io.h"
#include "smx/harness/verify.h"
#include "smx/minimax.h"
#include "smx/objectives.h"
#include "smx/reductions.h"

namespace {

using smx::ErrorCode;
using smx::harness::ExperimentSpec;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kParse:
    case ErrorCode::kValidation:
      return kExitIo;
    case ErrorCode::kNumeric:
      return kExitVerification;
    default:
      return kExitUsage;
  }
}

// Flags shared by solve and sweep. Unset options leave the config file's
// value in place.
struct InstanceFlags {
  std::string config;
  std::string mode;
  std::string objective;
  std::vector<double> lambdas;
  std::vector<std::size_t> ks;
  std::vector<double> epsilons;
  std::vector<double> betas;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds;
  std::string points;
  std::string matrix;
  std::size_t synth_n1 = 0;
  std::size_t synth_n2 = 0;
  std::size_t synth_anchors = 0;
  std::uint64_t synth_seed = 0;
  double alpha_div = 1.0;
  double beta_lin = 0.0;
  std::string maximizer;
  double eps_t = 0.05;
  std::size_t repeats = 1;
  std::size_t max_iters = 50;
  std::size_t threads = 0;
  std::size_t brute_limit = 22;
  bool best_iterate = false;
  bool sampled = false;
  bool timing = false;
  std::string out;

  std::vector<CLI::Option*> options;

  void Register(CLI::App& app) {
    auto add = [this](CLI::Option* o) { options.push_back(o); };
    app.add_option("--config", config, "Flat JSON experiment spec")
        ->check(CLI::ExistingFile);
    add(app.add_option("--mode", mode, "maxmin or minmax"));
    add(app.add_option("--objective", objective,
                       "facility, qa, dst or cube-norm"));
    add(app.add_option("--lambda", lambdas, "Regularization λ (list)"));
    add(app.add_option("--k", ks, "Cardinality bound on N2 (list)"));
    add(app.add_option("--epsilon", epsilons, "ε for random subsets (list)"));
    add(app.add_option("--beta", betas, "β for X growing (list)"));
    add(app.add_option("--algo", algorithms, "Algorithm names (list)"));
    add(app.add_option("--seed,--seeds", seeds, "Seeds (list)"));
    add(app.add_option("--points", points, "Points CSV id,side,x,y"));
    add(app.add_option("--matrix", matrix, "Similarity matrix CSV"));
    add(app.add_option("--synth-n1", synth_n1, "Synthetic N1 size"));
    add(app.add_option("--synth-n2", synth_n2, "Synthetic N2 size"));
    add(app.add_option("--synth-anchors", synth_anchors,
                       "Synthetic anchor count"));
    add(app.add_option("--synth-seed", synth_seed, "Synthetic data seed"));
    add(app.add_option("--alpha-div", alpha_div, "DST diversity weight"));
    add(app.add_option("--beta-lin", beta_lin, "QA linear weight"));
    add(app.add_option("--maximizer", maximizer,
                       "greedy, threshold-greedy, random-greedy, "
                       "double-greedy or brute-force"));
    add(app.add_option("--eps-t", eps_t, "Threshold greedy ε"));
    add(app.add_option("--repeats", repeats, "Min-as-oracle repetitions"));
    add(app.add_option("--max-iters", max_iters, "Best-response rounds"));
    add(app.add_option("--threads", threads, "Worker threads (0 = all)"));
    add(app.add_option("--brute-limit", brute_limit,
                       "log2 budget for exhaustive brute_tau"));
    add(app.add_flag("--best-iterate", best_iterate,
                     "X growing returns its best iterate"));
    add(app.add_flag("--sampled", sampled,
                     "Random subsets never switches to exact mode"));
    add(app.add_flag("--timing", timing, "Fill the millis column"));
    app.add_option("--out", out, "Output CSV (default stdout)");
  }

  bool Given(const std::string& name) const {
    for (const CLI::Option* o : options) {
      if (o->check_lname(name.substr(2)) && o->count() > 0) return true;
    }
    return false;
  }

  ExperimentSpec ToSpec() const {
    ExperimentSpec spec =
        config.empty() ? ExperimentSpec{} : smx::harness::LoadSpec(config);
    if (Given("--mode")) spec.mode = smx::ParseMode(mode);
    if (Given("--objective")) spec.objective = smx::ParseObjective(objective);
    if (Given("--lambda")) spec.lambdas = lambdas;
    if (Given("--k")) spec.ks = ks;
    if (Given("--epsilon")) spec.epsilons = epsilons;
    if (Given("--beta")) spec.betas = betas;
    if (Given("--algo")) spec.algorithms = algorithms;
    if (Given("--seed")) spec.seeds = seeds;
    if (Given("--points") && Given("--matrix")) {
      smx::Fail(ErrorCode::kUsage, "give either --points or --matrix");
    }
    if (Given("--points")) {
      spec.data.kind = smx::harness::DataKind::kPoints;
      spec.data.path = points;
    }
    if (Given("--matrix")) {
      spec.data.kind = smx::harness::DataKind::kMatrix;
      spec.data.path = matrix;
    }
    if (Given("--synth-n1")) spec.data.n1 = synth_n1;
    if (Given("--synth-n2")) spec.data.n2 = synth_n2;
    if (Given("--synth-anchors")) spec.data.anchors = synth_anchors;
    if (Given("--synth-seed")) spec.data.seed = synth_seed;
    if (Given("--alpha-div")) spec.alpha_div = alpha_div;
    if (Given("--beta-lin")) spec.beta_lin = beta_lin;
    if (Given("--maximizer")) spec.maximizer = smx::ParseMaximizer(maximizer);
    if (Given("--eps-t")) spec.eps_t = eps_t;
    if (Given("--repeats")) spec.repeats = repeats;
    if (Given("--max-iters")) spec.max_iters = max_iters;
    if (Given("--threads")) spec.threads = threads;
    if (Given("--brute-limit")) spec.brute_limit = brute_limit;
    if (Given("--best-iterate")) spec.best_iterate = best_iterate;
    if (Given("--sampled")) spec.sampled = sampled;
    if (Given("--timing")) spec.timing = timing;
    return spec;
  }
};

void WriteRows(const std::string& out,
               const std::vector<smx::harness::ResultRow>& rows) {
  if (out.empty() || out == "-") {
    smx::harness::WriteResults(std::cout, rows);
  } else {
    smx::harness::WriteResults(out, rows);
  }
}

// Error rows are reported on stderr; the CSV keeps them with empty results.
void ReportErrors(const std::vector<smx::harness::ResultRow>& rows) {
  for (const auto& r : rows) {
    if (!r.error) continue;
    std::cerr << "error: seed=" << r.seed << " algorithm=" << r.algorithm
              << " lambda=" << smx::harness::FormatNumber(r.lambda)
              << " k=" << r.k << ": " << *r.error << '\n';
  }
}

std::string SetWithIds(const smx::Bitset& set,
                       const std::vector<std::string>& ids) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set.Indices()) {
    out += (first ? "" : ",") + (i < ids.size() ? ids[i] : std::to_string(i));
    first = false;
  }
  return out + "}";
}

int RunSolve(const InstanceFlags& flags) {
  ExperimentSpec spec = flags.ToSpec();
  if (spec.algorithms.size() != 1 || spec.lambdas.size() != 1 ||
      spec.ks.size() > 1 || spec.seeds.size() != 1 ||
      spec.epsilons.size() != 1 || spec.betas.size() > 1) {
    smx::Fail(ErrorCode::kUsage,
              "solve takes exactly one algorithm, λ, seed and at most one k, "
              "ε, β; use sweep for grids");
  }
  const std::vector<smx::harness::ResultRow> rows =
      smx::harness::RunExperiment(spec);
  ReportErrors(rows);
  const auto& row = rows.front();
  if (row.error) return kExitUsage;
  const smx::SimilarityMatrix s = smx::harness::LoadSimilarity(spec.data);
  std::cerr << "algorithm " << row.algorithm << " ("
            << smx::ModeName(spec.mode) << ", "
            << smx::ObjectiveName(spec.objective) << ", n1=" << s.n1()
            << ", n2=" << s.n2() << ")\n"
            << "  chosen X = " << SetWithIds(row.chosen.x, s.n1_ids) << '\n'
            << "  chosen Y = " << SetWithIds(row.chosen.y, s.n2_ids) << '\n';
  WriteRows(flags.out, rows);
  return kExitOk;
}

int RunSweep(const InstanceFlags& flags) {
  const ExperimentSpec spec = flags.ToSpec();
  const std::vector<smx::harness::ResultRow> rows =
      smx::harness::RunExperiment(spec);
  ReportErrors(rows);
  WriteRows(flags.out, rows);
  return kExitOk;
}

int RunReduceSat(const std::string& cnf, const std::string& variant) {
  const smx::CnfFormula phi = smx::ReadDimacsFile(cnf);
  const bool sat = smx::BruteForceSat(phi).has_value();
  std::cout << "formula: " << phi.num_vars << " variables, "
            << phi.clauses.size() << " clauses, "
            << (sat ? "satisfiable" : "unsatisfiable") << '\n';
  bool consistent = true;
  auto report = [&](const std::string& name, const smx::FunctionFamily& fam,
                    const smx::Constraint& c) {
    const auto gadget = smx::BuildGadget(fam);
    const double value = smx::MaxMinValueOfFamily(fam, c);
    const bool ok = value == (sat ? 1.0 : 0.0);
    consistent = consistent && ok;
    std::cout << name << ": m=" << fam.m() << " functions, N1=" << gadget->n1()
              << ", N2=" << gadget->n2()
              << ", M=" << smx::harness::FormatNumber(gadget->big_m())
              << ", constraint " << c.ToString() << ", max-min value "
              << smx::harness::FormatNumber(value)
              << (ok ? "" : " (does not match satisfiability)") << '\n';
    if (fam.m() <= 5 && fam.n2 <= 6) {
      const smx::GadgetReport gr = smx::VerifyGadget(*gadget);
      std::cout << "  gadget check: " << (gr.ok() ? "ok" : "FAILED") << '\n';
      consistent = consistent && gr.ok();
    }
  };
  if (variant == "unconstrained" || variant == "both") {
    report("unconstrained", smx::SatEncodeUnconstrained(phi),
           smx::Constraint::AllSubsets());
  }
  if (variant == "cardinality" || variant == "both") {
    const smx::CardinalityEncoding enc = smx::SatEncodeCardinality(phi);
    report("cardinality", enc.family,
           smx::Constraint::CardinalityAtMost(enc.k));
  }
  return consistent ? kExitOk : kExitVerification;
}

int RunVerify(const std::string& level, std::uint64_t seed) {
  const auto report = smx::harness::RunVerifySuite(
      level == "full" ? smx::harness::VerifyLevel::kFull
                      : smx::harness::VerifyLevel::kQuick,
      seed, &std::cout);
  std::cout << (report.ok() ? "all properties hold" : "property failures")
            << '\n';
  return report.ok() ? kExitOk : kExitVerification;
}

struct GenFlags {
  std::size_t n1 = 8;
  std::size_t n2 = 6;
  std::size_t anchors = 0;
  std::uint64_t seed = 1;
  std::size_t clusters = 4;
  double spread = 0.005;
  bool independent_n2 = false;
  std::string format = "points";
  std::string out;
};

int RunGen(const GenFlags& g) {
  const smx::PointSet points = smx::harness::SynthPoints(
      g.n1, g.n2, g.seed, {g.clusters, g.spread, !g.independent_n2}, g.anchors);
  std::ostringstream text;
  if (g.format == "matrix") {
    smx::harness::WriteMatrix(text, smx::BuildConvenienceMatrix(points));
  } else {
    smx::harness::WritePoints(text, points);
  }
  if (g.out.empty() || g.out == "-") {
    std::cout << text.str();
  } else {
    std::ofstream out(g.out, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text.str()) || !out.flush()) {
      smx::Fail(ErrorCode::kIo, "cannot write '" + g.out + "'");
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular minimax toolkit"};
  app.require_subcommand(1);

  InstanceFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm once");
  solve_flags.Register(*solve);

  InstanceFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "Run an experiment grid");
  sweep_flags.Register(*sweep);

  std::string cnf;
  std::string variant = "both";
  CLI::App* reduce = app.add_subcommand(
      "reduce-sat", "Encode a DIMACS formula and compute its max-min value");
  reduce->add_option("--cnf", cnf, "DIMACS CNF file")->required();
  reduce->add_option("--variant", variant, "unconstrained, cardinality, both")
      ->check(CLI::IsMember({"unconstrained", "cardinality", "both"}));

  std::string level = "quick";
  std::uint64_t verify_seed = 2026;
  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", verify_seed, "Instance seed");

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "Write synthetic clustered points");
  gen->add_option("--n1", gen_flags.n1, "N1 points");
  gen->add_option("--n2", gen_flags.n2, "N2 points");
  gen->add_option("--anchors", gen_flags.anchors, "Anchor points");
  gen->add_option("--seed", gen_flags.seed, "Seed");
  gen->add_option("--clusters", gen_flags.clusters, "Cluster count");
  gen->add_option("--spread", gen_flags.spread, "Cluster standard deviation");
  gen->add_flag("--independent-n2", gen_flags.independent_n2,
                "Draw N2 from the clusters instead of copying N1 points");
  gen->add_option("--format", gen_flags.format, "points or matrix")
      ->check(CLI::IsMember({"points", "matrix"}));
  gen->add_option("--out", gen_flags.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return RunSolve(solve_flags);
    if (sweep->parsed()) return RunSweep(sweep_flags);
    if (reduce->parsed()) return RunReduceSat(cnf, variant);
    if (verify->parsed()) return RunVerify(level, verify_seed);
    if (gen->parsed()) return RunGen(gen_flags);
  } catch (const smx::Error& e) {
    std::cerr << "smx: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "smx: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
