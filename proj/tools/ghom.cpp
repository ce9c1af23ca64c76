// Copyright 2026 The ghom Authors
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

// ghom: command-line front end.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghom/bridge.hpp"
#include "ghom/cnk.hpp"
#include "ghom/enumerator.hpp"
#include "ghom/experiment.hpp"
#include "ghom/graph.hpp"
#include "ghom/homomorphism.hpp"
#include "ghom/mcmc.hpp"
#include "ghom/report.hpp"

namespace {

using namespace ghom;

GraphPtr load_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open " + arg);
    return std::make_shared<const Graph>(read_edge_list(in, arg));
  }
  return std::make_shared<const Graph>(generate(parse_generator_spec(arg)));
}

int cmd_count(const std::string& graph) {
  const auto g = load_graph(graph);
  const auto e = enumerate(g);
  std::cout << "homomorphisms " << to_string(e.count) << '\n';
  std::cout << "range_size,count\n";
  for (const auto& [sz, cnt] : e.range_histogram) std::cout << sz << ',' << to_string(cnt) << '\n';
  return 0;
}

int cmd_sample(const std::string& graph, std::uint64_t seed, std::uint64_t draws) {
  const auto g = load_graph(graph);
  Rng rng(seed);
  // Layered cycles have an exact sampler; everything else goes through enumeration.
  std::unique_ptr<LayeredSampler> layered;
  std::size_t n = 0, k = 0;
  if (!std::filesystem::is_regular_file(graph)) {
    const auto spec = parse_generator_spec(graph);
    if (spec.kind == GraphKind::kLayeredCycle && spec.n >= 4) {
      n = spec.n;
      k = spec.k;
      layered = std::make_unique<LayeredSampler>(n, k);
    }
  }
  for (std::uint64_t d = 0; d < draws; ++d) {
    if (d > 0) std::cout << '\n';
    if (layered) {
      write_homomorphism(layered->sample_h(rng).to_homomorphism(g), std::cout);
    } else {
      write_homomorphism(uniform_sample_by_enumeration(g, rng), std::cout);
    }
  }
  return 0;
}

int cmd_bridge(std::uint64_t m, std::uint64_t seed) {
  Rng rng(seed);
  const BridgePath p = sample_bridge(m, rng);
  std::cout << "index,position\n";
  const auto pos = p.positions();
  for (std::size_t i = 0; i < pos.size(); ++i) std::cout << i << ',' << pos[i] << '\n';
  return 0;
}

int cmd_mcmc(const std::string& graph, std::uint64_t burnin, std::uint64_t thin,
             std::uint64_t draws, std::uint64_t seed) {
  const auto stats = run_chain(load_graph(graph), burnin, thin, draws, seed);
  std::cout << "draw,range_size,min,max\n";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    std::cout << i << ',' << stats[i].range_size << ',' << stats[i].min << ',' << stats[i].max
              << '\n';
  }
  return 0;
}

int cmd_verify_counts(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ks) {
  bool ok = true;
  std::cout << "n,k,closed_h0,enumerated_h0,closed_h,enumerated_h,match\n";
  for (auto n : ns) {
    for (auto k : ks) {
      const auto c = counts(n, k);
      const Graph g = layered_cycle(n, k);
      std::uint64_t all = 0, flat = 0;
      for_each_homomorphism(g, [&](std::span<const Height> v) {
        ++all;
        bool zero = true;
        for (std::size_t s = 0; s < k; ++s) zero = zero && v[s] == 0;
        if (zero) ++flat;
        return true;
      });
      const bool match = c.total_h0 == flat && c.total_h == all;
      ok = ok && match;
      std::cout << n << ',' << k << ',' << to_string(c.total_h0) << ',' << flat << ','
                << to_string(c.total_h) << ',' << all << ',' << (match ? "yes" : "no") << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_verify_hom(const std::string& graph, const std::string& file) {
  const auto g = load_graph(graph);
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  const auto values = read_values(g->vertex_count(), in);
  const bool ok = is_homomorphism(*g, values, true);
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? 0 : 1;
}

int cmd_cnk_counts(std::size_t n, std::size_t k) {
  const auto c = counts(n, k);
  std::cout << "ell,count\n";
  for (std::size_t ell = 0; ell < c.h0.size(); ++ell) {
    std::cout << ell << ',' << to_string(c.h0[ell]) << '\n';
  }
  return 0;
}

int cmd_cnk_sample(std::size_t n, std::size_t k, std::uint64_t seed, std::uint64_t draws) {
  const LayeredSampler sampler(n, k);
  Rng rng(seed);
  std::cout << "range_size,nc_count\n";
  for (std::uint64_t d = 0; d < draws; ++d) {
    const LayeredHom h = sampler.sample_h(rng);
    std::cout << range(h.values()).range_size << ',' << layer_profile(h).non_constant.size()
              << '\n';
  }
  return 0;
}

int cmd_experiment(const std::string& id, ExperimentSpec spec, const std::string& format,
                   const std::string& out_path) {
  spec.id = parse_experiment_id(id);
  const ExperimentReport report = run_experiment(spec);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "json") {
    write_json(report, out);
  } else {
    write_csv(report, out);
  }
  for (const auto& row : report.rows) std::cerr << summary_line(row) << '\n';
  std::cerr << (report.all_pass() ? "all rows pass" : "some rows FAIL") << " (seed "
            << report.seed << ")\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform random graph homomorphisms to Z: counting, sampling, experiments"};
  app.require_subcommand(1);
  int status = 0;

  std::string graph, file;
  std::uint64_t seed = 0, draws = 1, burnin = 1000, thin = 10, m = 0;
  std::size_t n = 0, k = 0;

  auto* count = app.add_subcommand("count", "count homomorphisms and tabulate ranges");
  count->add_option("graph", graph, "generator spec or edge-list file")->required();
  count->callback([&] { status = cmd_count(graph); });

  auto* sample = app.add_subcommand("sample", "uniform sample(s), \"index value\" lines");
  sample->add_option("graph", graph, "generator spec or edge-list file")->required();
  sample->add_option("--seed", seed);
  sample->add_option("--draws", draws)->check(CLI::PositiveNumber);
  sample->callback([&] { status = cmd_sample(graph, seed, draws); });

  auto* bridge = app.add_subcommand("bridge", "uniform bridge, CSV index,position");
  auto* bridge_n = bridge->add_option("--n", m, "bridge length (even)");
  bridge->add_option("--m", m, "alias of --n")->excludes(bridge_n);
  bridge->add_option("--seed", seed);
  bridge->callback([&] { status = cmd_bridge(m, seed); });

  auto* mcmc = app.add_subcommand("mcmc", "heat-bath chain, CSV draw,range_size,min,max");
  mcmc->add_option("graph", graph, "generator spec or edge-list file")->required();
  mcmc->add_option("--burnin", burnin)->check(CLI::PositiveNumber);
  mcmc->add_option("--thin", thin)->check(CLI::PositiveNumber);
  mcmc->add_option("--draws", draws);
  mcmc->add_option("--seed", seed);
  mcmc->callback([&] { status = cmd_mcmc(graph, burnin, thin, draws, seed); });

  auto* verify = app.add_subcommand("verify", "consistency checks");
  verify->require_subcommand(1);
  std::vector<std::size_t> vn{2, 4, 6}, vk{1, 2, 3};
  auto* vcounts = verify->add_subcommand("counts", "closed-form vs enumerated C_{n,k} counts");
  vcounts->add_option("--n", vn);
  vcounts->add_option("--k", vk);
  vcounts->callback([&] { status = cmd_verify_counts(vn, vk); });
  auto* vhom = verify->add_subcommand("hom", "check a homomorphism file");
  vhom->add_option("graph", graph)->required();
  vhom->add_option("file", file)->required();
  vhom->callback([&] { status = cmd_verify_hom(graph, file); });

  auto* cnk = app.add_subcommand("cnk", "layered cycle counts and sampler");
  cnk->require_subcommand(1);
  auto* ccounts = cnk->add_subcommand("counts", "CSV ell,count of H0 by non-constant layers");
  ccounts->add_option("n", n)->required();
  ccounts->add_option("k", k)->required();
  ccounts->callback([&] { status = cmd_cnk_counts(n, k); });
  auto* csample = cnk->add_subcommand("sample", "CSV range_size,nc_count per draw");
  csample->add_option("n", n)->required();
  csample->add_option("k", k)->required();
  csample->add_option("--seed", seed);
  csample->add_option("--draws", draws);
  csample->callback([&] { status = cmd_cnk_sample(n, k, seed, draws); });

  ExperimentSpec spec;
  std::string id, format = "csv", out;
  double beta = 0.0;
  auto* exp = app.add_subcommand("experiment", "run an experiment grid and emit a report");
  exp->add_option("id", id, "threshold-upper | threshold-lower | theorem1 | bridge-range | torus")
      ->required();
  exp->add_option("--n", spec.n, "n grid (bridge length for bridge-range, side for torus)");
  exp->add_option("--k", spec.k, "explicit k grid (threshold-upper)");
  exp->add_option("--psi", spec.psi);
  auto* beta_opt = exp->add_option("--beta", beta);
  exp->add_option("--eps", spec.eps);
  exp->add_option("--alpha", spec.alpha);
  exp->add_option("--r", spec.r);
  exp->add_option("--c", spec.c);
  exp->add_option("--graph", spec.graphs, "graphs for theorem1");
  exp->add_option("--draws", spec.draws);
  exp->add_option("--seed", spec.seed);
  exp->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  exp->add_option("--out", out);
  exp->callback([&] {
    if (*beta_opt) spec.beta = beta;
    status = cmd_experiment(id, spec, format, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
