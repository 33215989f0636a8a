/*
Copyright 2026 The xclust Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "xclust/cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xclust/explainable.h"
#include "xclust/explanation.h"
#include "xclust/io.h"
#include "xclust/oracle.h"

namespace xclust {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Common {
  std::string input;
  std::string label_col = "cluster";
  std::string format = "json";
  bool force = false;
};

struct Options {
  Common common;
  std::string method = "greedy";  // explain
  std::string fit_method = "dp";
  int s = -1;
  int k = 0;
  std::string cost = "means";
  double epsilon = 0.0;
  int threads = 1;
  std::uint64_t seed = 0;
  int iters = 100;
  std::optional<double> explainable_cost;
  std::string output;
  std::string mapping;
  // gen
  int per_cluster = 10;
  int dim = 2;
  double separation = 1.0;
  std::string shape = "separated";
  // oracle
  std::string problem;
};

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out)
      : args_(args), out_(out), start_(Clock::now()) {}

  int Check(const Options& o);
  int Explain(const Options& o);
  int Kernel(const Options& o);
  int Fit(const Options& o);
  int Baseline(const Options& o);
  int Gen(const Options& o);
  int Oracle(const Options& o);

 private:
  json Report(const std::string& command, const std::string& solver,
              const Common& c) const {
    std::string echo;
    for (const std::string& a : args_) echo += (echo.empty() ? "" : " ") + a;
    return json{{"command", command},
                {"argv", echo},
                {"solver", solver},
                {"guard_rails",
                 {{"exact_max_points", ExactLimits{}.max_points},
                  {"exact_max_dim", ExactLimits{}.max_dim},
                  {"branch_max_k", SolverLimits{}.max_k},
                  {"force", c.force}}}};
  }

  int Emit(json report, int code) {
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start_)
            .count();
    out_ << report.dump(2) << "\n";
    return code;
  }

  // Prints either the JSON report or the DOT rendering of its tree.
  int EmitWithTree(json report, const ThresholdTree& tree, int k,
                   const LabeledClusters* clusters, const Common& c,
                   int code) {
    if (c.format == "dot") {
      out_ << TreeToDot(tree, clusters);
      return code;
    }
    report["tree"] = TreeToJson(tree, k);
    return Emit(std::move(report), code);
  }

  Clustering LoadClustering(const Common& c) const {
    Table t = ReadCsvFile(c.input, c.label_col, true);
    return Clustering(std::move(t.dataset), std::move(*t.labels));
  }

  const std::vector<std::string>& args_;
  std::ostream& out_;
  Clock::time_point start_;
};

json InputSummary(const std::string& path, const Dataset& ds) {
  return json{{"path", path}, {"n", ds.size()}, {"d", ds.dim()}};
}

json ClustersJson(const LabeledClusters& clusters) {
  json j = json::object();
  for (const auto& [label, ids] : clusters) j[std::to_string(label)] = ids;
  return j;
}

bool ExceedsExact(const Clustering& cl) {
  const ExactLimits limits;
  return cl.size() > limits.max_points || cl.dim() > limits.max_dim;
}

int Runner::Check(const Options& o) {
  const Clustering cl = LoadClustering(o.common);
  const bool ok = CheckExplainable(cl);
  json r = Report("check", "greedy", o.common);
  r["input"] = InputSummary(o.common.input, cl.dataset());
  r["input"]["k"] = cl.k();
  r["explainable"] = ok;
  return Emit(std::move(r), ok ? kExitOk : kExitNegative);
}

int Runner::Explain(const Options& o) {
  const Clustering cl = LoadClustering(o.common);
  json r = Report("explain", o.method, o.common);
  r["input"] = InputSummary(o.common.input, cl.dataset());
  r["input"]["k"] = cl.k();

  std::optional<ExplanationResult> result;
  if (o.method == "greedy") {
    result = GreedyExplain(cl);
  } else {
    if (o.s < 0) throw std::invalid_argument("--method exact requires --s >= 0");
    r["input"]["s"] = o.s;
    if (ExceedsExact(cl)) {
      if (!o.common.force) {
        throw ResourceError(
            "instance exceeds exact guard rails (n <= 40, d <= 4); try "
            "--method greedy or run `kernel` first, or pass --force");
      }
      r["warnings"] = json::array({"exact guard rails exceeded; forced"});
    }
    result = ExactExplain(cl, o.s, ExactLimits{40, 4, o.common.force});
  }
  if (!result) {
    r["result"] = {{"feasible", false}};
    return Emit(std::move(r), kExitNegative);
  }
  std::vector<Label> emptied;
  const LabeledClusters survivors = cl.Survivors(result->removed);
  for (Label l = 1; l <= cl.k(); ++l) {
    if (!survivors.count(l)) emptied.push_back(l);
  }
  r["result"] = {{"feasible", true},
                 {"removed", result->removed},
                 {"removed_count", result->removed_count()},
                 {"emptied_labels", emptied}};
  return EmitWithTree(std::move(r), result->tree, cl.k(), nullptr, o.common,
                      kExitOk);
}

int Runner::Kernel(const Options& o) {
  if (o.s < 0) throw std::invalid_argument("kernel requires --s >= 0");
  if (o.output.empty()) throw std::invalid_argument("kernel requires --output");
  const Table table = ReadCsvFile(o.common.input, o.common.label_col, true);
  const Clustering cl(table.dataset, *table.labels);
  const KernelResult kr = Kernelize(cl, o.s);

  std::ofstream csv(o.output);
  if (!csv) throw std::invalid_argument("cannot write '" + o.output + "'");
  WriteCsv(csv, table.columns, kr.kernel.dataset(), &kr.kernel.labels(),
           o.common.label_col);
  const std::string mapping =
      o.mapping.empty() ? o.output + ".map.json" : o.mapping;
  std::ofstream map(mapping);
  if (!map) throw std::invalid_argument("cannot write '" + mapping + "'");
  map << json{{"original_ids", kr.original_ids}}.dump(2) << "\n";
  csv.close();
  map.close();
  if (!csv || !map) throw std::invalid_argument("write failed");

  json r = Report("kernel", "kernelize", o.common);
  r["input"] = InputSummary(o.common.input, cl.dataset());
  r["input"]["k"] = cl.k();
  r["input"]["s"] = o.s;
  r["result"] = {{"original_size", cl.size()},
                 {"kernel_size", kr.kernel.size()},
                 {"size_bound", 2 * (o.s + 1) * cl.dim() * cl.k()},
                 {"output", o.output},
                 {"mapping", mapping}};
  return Emit(std::move(r), kExitOk);
}

int Runner::Fit(const Options& o) {
  const Table table = ReadCsvFile(o.common.input, o.common.label_col, false);
  const Dataset& ds = table.dataset;
  const CostKind kind = ParseCostKind(o.cost);
  SolverLimits limits;
  limits.force = o.common.force;

  json r = Report("fit", o.fit_method, o.common);
  r["input"] = InputSummary(o.common.input, ds);
  r["input"]["k"] = o.k;
  r["input"]["cost"] = o.cost;

  if (o.fit_method == "approx") {
    r["input"]["epsilon"] = o.epsilon;
    const ApproxResult a =
        SolveApprox(ds, o.k, kind, o.epsilon, ApproxOptions{o.threads, limits});
    if (static_cast<double>(a.removed.size()) > o.epsilon * ds.size()) {
      throw std::logic_error("approximate solver removed too many points");
    }
    r["result"] = {{"cost", a.cost},
                   {"clusters", ClustersJson(a.clusters)},
                   {"kept", a.kept},
                   {"removed", a.removed},
                   {"removed_count", a.removed.size()},
                   {"band", a.band},
                   {"rank_grid", a.rank_grid},
                   {"exact_fallback", a.exact_fallback},
                   {"repaired", a.repaired},
                   {"off_grid", a.off_grid}};
    return EmitWithTree(std::move(r), a.tree, o.k, &a.clusters, o.common,
                        kExitOk);
  }
  const ExplainableResult e = o.fit_method == "branch"
                                  ? SolveBranching(ds, o.k, kind, limits)
                                  : SolveDp(ds, o.k, kind, limits);
  r["result"] = {{"cost", e.cost}, {"clusters", ClustersJson(e.clusters)}};
  return EmitWithTree(std::move(r), e.tree, o.k, &e.clusters, o.common,
                      kExitOk);
}

int Runner::Baseline(const Options& o) {
  const Table table = ReadCsvFile(o.common.input, o.common.label_col, false);
  const CostKind kind = ParseCostKind(o.cost);
  const LloydResult l =
      LloydBaseline(table.dataset, o.k, kind, o.seed, o.iters);
  json r = Report("baseline", "lloyd", o.common);
  r["input"] = InputSummary(o.common.input, table.dataset);
  r["input"]["k"] = o.k;
  r["input"]["cost"] = o.cost;
  json centers = json::array();
  for (const Point& c : l.centers) centers.push_back(c.coords);
  r["result"] = {{"cost", l.cost},
                 {"iterations", l.iterations},
                 {"labels", l.labels},
                 {"centers", centers}};
  if (o.explainable_cost) {
    if (l.cost > 0.0) {
      r["result"]["ratio"] = *o.explainable_cost / l.cost;
    } else if (*o.explainable_cost == 0.0 && o.k == 1) {
      r["result"]["ratio"] = 1.0;
    } else {
      r["result"]["ratio"] = "n/a";
    }
  }
  return Emit(std::move(r), kExitOk);
}

int Runner::Gen(const Options& o) {
  if (o.k < 1 || o.per_cluster < 1 || o.dim < 1) {
    throw std::invalid_argument("--k, --per-cluster and --dim must be >= 1");
  }
  if (o.separation < 0.0) throw std::invalid_argument("--separation < 0");
  if (o.shape == "xor" && (o.k != 2 || o.dim < 2)) {
    throw std::invalid_argument("shape xor needs --k 2 and --dim >= 2");
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto draw = [&](double lo, double width) {
    return std::round((lo + width * unit(rng)) * 1e4) / 1e4;
  };

  std::vector<Point> points;
  std::vector<Label> labels;
  for (int c = 0; c < o.k; ++c) {
    for (int j = 0; j < o.per_cluster; ++j) {
      std::vector<double> x(o.dim);
      for (int a = 0; a < o.dim; ++a) x[a] = draw(0.0, 1.0);
      if (o.shape == "separated") {
        x[0] = draw(c * (1.0 + o.separation), 1.0);
      } else if (o.shape == "xor") {
        // Cluster 1 on the main diagonal corners, cluster 2 on the other
        // two; the first point at each corner sits exactly on it.
        const int corner = j % 2;
        const double jitter = j < 2 ? 0.0 : 0.25;
        const double scale = 1.0 + o.separation;
        x[0] = draw(corner * scale, jitter);
        x[1] = draw((c == 0 ? corner : 1 - corner) * scale, jitter);
      } else if (o.shape == "uniform") {
        for (int a = 0; a < o.dim; ++a) x[a] = draw(0.0, 10.0);
      } else {
        throw std::invalid_argument("unknown shape '" + o.shape + "'");
      }
      points.emplace_back(std::move(x));
      labels.push_back(c + 1);
    }
  }
  std::vector<std::string> columns;
  for (int a = 1; a <= o.dim; ++a) columns.push_back("x" + std::to_string(a));
  const Dataset ds(std::move(points));
  if (o.output.empty()) {
    WriteCsv(out_, columns, ds, &labels, "cluster");
  } else {
    std::ofstream f(o.output);
    if (!f) throw std::invalid_argument("cannot write '" + o.output + "'");
    WriteCsv(f, columns, ds, &labels, "cluster");
    if (!f.flush()) throw std::invalid_argument("write failed");
  }
  return kExitOk;
}

int Runner::Oracle(const Options& o) {
  json r = Report("oracle", o.problem, o.common);
  if (o.problem == "explanation") {
    const Clustering cl = LoadClustering(o.common);
    const auto found = BruteExplanation(cl, o.s);
    r["result"] = {{"feasible", found.has_value()}};
    if (!found) return Emit(std::move(r), kExitNegative);
    r["result"]["removed"] = found->removed;
    r["tree"] = TreeToJson(found->tree, cl.k());
    return Emit(std::move(r), kExitOk);
  }
  const Table table = ReadCsvFile(o.common.input, o.common.label_col, false);
  const CostKind kind = ParseCostKind(o.cost);
  if (o.problem == "unconstrained") {
    r["result"] = {{"cost", BruteUnconstrained(table.dataset, o.k, kind)}};
    return Emit(std::move(r), kExitOk);
  }
  const ExplainableResult e = BruteExplainable(table.dataset, o.k, kind);
  r["result"] = {{"cost", e.cost}, {"clusters", ClustersJson(e.clusters)}};
  r["tree"] = TreeToJson(e.tree, o.k);
  return Emit(std::move(r), kExitOk);
}

void AddCommon(CLI::App* app, Common& c, bool labels, bool formats) {
  app->add_option("input", c.input, "CSV dataset")->required();
  if (labels) {
    app->add_option("--label-col", c.label_col, "label column name")
        ->capture_default_str();
  }
  if (formats) {
    app->add_option("--format", c.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
  }
  app->add_flag("--force", c.force, "override solver guard rails");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Explainable clustering with threshold trees", "xclust"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "test whether labels are explainable");
  AddCommon(check, o.common, true, false);

  auto* explain = app.add_subcommand("explain", "remove points to explain labels");
  AddCommon(explain, o.common, true, true);
  explain->add_option("--method", o.method, "greedy or exact")
      ->check(CLI::IsMember({"greedy", "exact"}));
  explain->add_option("--s", o.s, "removal budget (exact)");

  auto* kernel = app.add_subcommand("kernel", "shrink an explanation instance");
  AddCommon(kernel, o.common, true, false);
  kernel->add_option("--s", o.s, "removal budget")->required();
  kernel->add_option("--output", o.output, "kernel CSV path")->required();
  kernel->add_option("--mapping", o.mapping,
                     "id mapping JSON (default: <output>.map.json)");

  auto* fit = app.add_subcommand("fit", "optimal explainable clustering");
  AddCommon(fit, o.common, true, true);
  fit->add_option("--k", o.k, "number of clusters")->required();
  fit->add_option("--cost", o.cost, "means or medians")
      ->check(CLI::IsMember({"means", "medians"}));
  fit->add_option("--method", o.fit_method, "branch, dp or approx")
      ->check(CLI::IsMember({"branch", "dp", "approx"}));
  fit->add_option("--epsilon", o.epsilon, "outlier fraction (approx)");
  fit->add_option("--threads", o.threads, "worker threads (approx)")
      ->check(CLI::PositiveNumber);

  auto* baseline = app.add_subcommand("baseline", "unconstrained Lloyd baseline");
  AddCommon(baseline, o.common, true, false);
  baseline->add_option("--k", o.k, "number of clusters")->required();
  baseline->add_option("--cost", o.cost, "means or medians")
      ->check(CLI::IsMember({"means", "medians"}));
  baseline->add_option("--seed", o.seed, "random seed");
  baseline->add_option("--iters", o.iters, "iteration cap");
  baseline->add_option("--explainable-cost", o.explainable_cost,
                       "fitted explainable cost, for the ratio");

  auto* gen = app.add_subcommand("gen", "generate a labeled instance");
  gen->add_option("--k", o.k, "clusters")->required();
  gen->add_option("--per-cluster", o.per_cluster, "points per cluster");
  gen->add_option("--dim", o.dim, "dimension");
  gen->add_option("--separation", o.separation, "gap between clusters");
  gen->add_option("--shape", o.shape, "separated, xor or uniform")
      ->check(CLI::IsMember({"separated", "xor", "uniform"}));
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--output", o.output, "CSV path (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
  oracle->group("");
  AddCommon(oracle, o.common, true, false);
  oracle->add_option("--problem", o.problem)
      ->required()
      ->check(CLI::IsMember({"explainable", "explanation", "unconstrained"}));
  oracle->add_option("--k", o.k);
  oracle->add_option("--s", o.s);
  oracle->add_option("--cost", o.cost)
      ->check(CLI::IsMember({"means", "medians"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Runner runner(args, out);
  try {
    if (*check) return runner.Check(o);
    if (*explain) return runner.Explain(o);
    if (*kernel) return runner.Kernel(o);
    if (*fit) {
      if (o.fit_method == "approx" && !(o.epsilon > 0.0 && o.epsilon < 1.0)) {
        throw std::invalid_argument("--method approx requires 0 < --epsilon < 1");
      }
      return runner.Fit(o);
    }
    if (*baseline) return runner.Baseline(o);
    if (*gen) return runner.Gen(o);
    if (*oracle) return runner.Oracle(o);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (...) {
    err << "error: unknown failure\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace xclust
