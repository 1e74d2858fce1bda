// wcap: command-line frontend for the WCAP solvers, generators and bench harness.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wcap/bench.hpp"
#include "wcap/error.hpp"
#include "wcap/exact.hpp"
#include "wcap/generators.hpp"
#include "wcap/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;

wcap::CactusGraph load_cactus(const std::string& path, const std::string& pi_path) {
  return wcap::parse_cactus(wcap::read_text_file(path), pi_path.empty() ? std::string() : wcap::read_text_file(pi_path));
}

int exit_code(wcap::RunStatus status) {
  switch (status) {
    case wcap::RunStatus::Ok: return kExitOk;
    case wcap::RunStatus::Infeasible: return kExitInfeasible;
    case wcap::RunStatus::Timeout: return kExitTimeout;
    case wcap::RunStatus::MemLimit:
    case wcap::RunStatus::Invalid: return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted connectivity augmentation on cacti"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance");
  wcap::SolveConfig cfg;
  cfg.algo = "mst";
  int ls_depth = 3;
  std::string solution_out;
  solve->add_option("--cactus", cfg.cactus_path, "Cactus file")->required()->check(CLI::ExistingFile);
  solve->add_option("--pi", cfg.pi_path, "Original-to-cactus vertex map")->check(CLI::ExistingFile);
  solve->add_option("--links", cfg.links_path, "Link file")->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", cfg.algo, "gwc, mst, mst+ls, mst+ls3, mst+ls5, smc or exact")->capture_default_str();
  solve->add_option("--ls-depth", ls_depth, "Swap depth for --algo mst+ls")->capture_default_str();
  solve->add_option("--seed", cfg.seed, "Seed recorded with the run");
  solve->add_option("--time-limit", cfg.time_limit_s, "Wall-clock limit in seconds")->capture_default_str();
  solve->add_option("--solution", solution_out, "Write the solution here");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_cactus = gen->add_subcommand("cactus", "Random cactus made of cycles");
  int gen_n = 0;
  int gen_cycles = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen_cactus->add_option("--n", gen_n, "Vertices")->required();
  gen_cactus->add_option("--cycles", gen_cycles, "Cycles")->required();
  gen_cactus->add_option("--seed", gen_seed, "Seed")->required();
  gen_cactus->add_option("-o,--output", gen_out, "Cactus file")->required();

  auto* gen_special = gen->add_subcommand("special", "Cycle or star");
  std::string special_kind;
  gen_special->add_option("--kind", special_kind, "cycle or star")->required()->check(CLI::IsMember({"cycle", "star"}));
  gen_special->add_option("--n", gen_n, "Vertices")->required();
  gen_special->add_option("-o,--output", gen_out, "Cactus file")->required();

  auto* gen_costs = gen->add_subcommand("costs", "Complete link set with random costs");
  std::string dist_name;
  std::string costs_cactus;
  std::string costs_pi;
  bool costs_scale = false;
  gen_costs->add_option("--dist", dist_name, "u2, u9, u99 or u100000")
      ->required()
      ->check(CLI::IsMember({"u2", "u9", "u99", "u100000"}));
  gen_costs->add_option("--seed", gen_seed, "Seed")->required();
  gen_costs->add_option("--cactus", costs_cactus, "Cactus file")->required()->check(CLI::ExistingFile);
  gen_costs->add_option("--pi", costs_pi, "Original-to-cactus vertex map")->check(CLI::ExistingFile);
  gen_costs->add_flag("--scale", costs_scale, "Divide costs by the largest drawn cost");
  gen_costs->add_option("-o,--output", gen_out, "Link file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a solution file");
  std::string v_cactus, v_pi, v_links, v_solution;
  verify->add_option("--cactus", v_cactus, "Cactus file")->required()->check(CLI::ExistingFile);
  verify->add_option("--pi", v_pi, "Original-to-cactus vertex map")->check(CLI::ExistingFile);
  verify->add_option("--links", v_links, "Link file")->required()->check(CLI::ExistingFile);
  verify->add_option("--solution", v_solution, "Solution file")->required()->check(CLI::ExistingFile);

  // export-lp
  auto* export_lp = app.add_subcommand("export-lp", "Write the cut-cover program in LP format");
  std::string lp_cactus, lp_pi, lp_links, lp_out;
  export_lp->add_option("--cactus", lp_cactus, "Cactus file")->required()->check(CLI::ExistingFile);
  export_lp->add_option("--pi", lp_pi, "Original-to-cactus vertex map")->check(CLI::ExistingFile);
  export_lp->add_option("--links", lp_links, "Link file")->required()->check(CLI::ExistingFile);
  export_lp->add_option("-o,--output", lp_out, "LP file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment grid");
  std::string grid_path, bench_out;
  bench->add_option("--grid", grid_path, "Grid JSON")->required()->check(CLI::ExistingFile);
  bench->add_option("-o,--output", bench_out, "Results CSV")->required();

  // profile
  auto* profile = app.add_subcommand("profile", "Performance profile from results");
  std::string prof_in, prof_out, metric = "cost";
  double tau_max = 3.0;
  profile->add_option("-i,--input", prof_in, "Results CSV")->required()->check(CLI::ExistingFile);
  profile->add_option("--metric", metric, "cost, time or mem")->check(CLI::IsMember({"cost", "time", "mem"}))->capture_default_str();
  profile->add_option("--tau-max", tau_max, "Largest tau, grid step 0.01")->capture_default_str()->check(CLI::Range(1.0, 1000.0));
  profile->add_option("-o,--output", prof_out, "Profile CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (solve->parsed()) {
      if (cfg.algo == "mst+ls") cfg.algo += std::to_string(ls_depth);
      if (!wcap::is_known_algorithm(cfg.algo)) {
        std::cerr << "unknown algorithm: " << cfg.algo << '\n';
        return kExitInvalid;
      }
      cfg.instance = std::filesystem::path(cfg.cactus_path).filename().string();
      const auto cactus = load_cactus(cfg.cactus_path, cfg.pi_path);
      const auto links = wcap::build_link_graph(cactus, wcap::parse_links(wcap::read_text_file(cfg.links_path)));
      const auto out = wcap::solve_instance(cfg.instance, cactus, links, cfg.algo, cfg.seed, cfg.time_limit_s);
      const auto& r = out.record;
      std::cout << "status " << wcap::to_string(r.status) << '\n';
      if (r.cost) std::cout << "cost " << r.cost->to_string() << '\n';
      if (out.solution) std::cout << "links " << out.solution->size() << '\n';
      std::cout << "time_ms " << r.time_ms << '\n';
      if (out.solution && !solution_out.empty()) {
        wcap::write_text_file(solution_out, wcap::write_solution(*out.solution, links));
      }
      return exit_code(r.status);
    }
    if (gen_cactus->parsed()) {
      const auto c = wcap::generate_cactus(gen_n, gen_cycles, gen_seed);
      wcap::write_text_file(gen_out, wcap::write_cactus(c, "cactus n=" + std::to_string(gen_n) + " cycles=" +
                                                               std::to_string(gen_cycles) + " seed=" + std::to_string(gen_seed)));
      return kExitOk;
    }
    if (gen_special->parsed()) {
      const auto kind = special_kind == "cycle" ? wcap::SpecialKind::Cycle : wcap::SpecialKind::Star;
      const auto c = wcap::generate_special(kind, gen_n);
      wcap::write_text_file(gen_out, wcap::write_cactus(c, special_kind + " n=" + std::to_string(gen_n)));
      return kExitOk;
    }
    if (gen_costs->parsed()) {
      const auto cactus = load_cactus(costs_cactus, costs_pi);
      const auto raw = wcap::generate_raw_links(cactus, wcap::CostDistribution::parse(dist_name, costs_scale), gen_seed);
      wcap::write_text_file(gen_out, wcap::write_links(raw));
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto cactus = load_cactus(v_cactus, v_pi);
      const auto links = wcap::build_link_graph(cactus, wcap::parse_links(wcap::read_text_file(v_links)));
      const auto file = wcap::parse_solution(wcap::read_text_file(v_solution));
      std::vector<wcap::LinkId> ids;
      for (const auto& [ou, ov] : file.links) {
        if (ou < 0 || ov < 0 || ou >= cactus.original_vertex_count() || ov >= cactus.original_vertex_count()) {
          std::cerr << "solution uses unknown vertex\n";
          return kExitInvalid;
        }
        const auto cu = cactus.pi()[static_cast<std::size_t>(ou)];
        const auto cv = cactus.pi()[static_cast<std::size_t>(ov)];
        const auto id = cu == cv ? std::nullopt : links.find(cu, cv);
        if (!id) {
          std::cerr << "solution link " << ou + 1 << ' ' << ov + 1 << " is not in the link set\n";
          return kExitInvalid;
        }
        ids.push_back(*id);
      }
      const auto s = wcap::make_solution(links, ids);
      if (s.total_cost != file.total_cost) {
        std::cerr << "declared cost " << file.total_cost << " differs from link costs " << s.total_cost << '\n';
        return kExitInvalid;
      }
      if (!wcap::validate_solution(cactus, links, s)) {
        std::cout << "invalid: some minimum cut is not covered\n";
        return kExitInfeasible;
      }
      std::cout << "valid cost " << s.total_cost << '\n';
      return kExitOk;
    }
    if (export_lp->parsed()) {
      const auto cactus = load_cactus(lp_cactus, lp_pi);
      const auto links = wcap::build_link_graph(cactus, wcap::parse_links(wcap::read_text_file(lp_links)));
      wcap::write_text_file(lp_out, wcap::export_lp(wcap::build_cut_cover_program(cactus, links)));
      return kExitOk;
    }
    if (bench->parsed()) {
      const auto base = std::filesystem::path(grid_path).parent_path().string();
      const auto grid = wcap::parse_grid(wcap::read_text_file(grid_path), base);
      const auto records = wcap::run_grid(grid);
      wcap::write_text_file(bench_out, wcap::write_records_csv(records));
      return kExitOk;
    }
    if (profile->parsed()) {
      const auto records = wcap::read_records_csv(wcap::read_text_file(prof_in));
      std::vector<wcap::Cost> taus;
      const auto last = static_cast<std::int64_t>(tau_max * 100.0 + 1e-9);
      for (std::int64_t i = 100; i <= last; ++i) taus.push_back(wcap::Cost::fraction(i, 100));
      const auto points = wcap::performance_profile(records, wcap::parse_profile_metric(metric), taus);
      wcap::write_text_file(prof_out, wcap::write_profile_csv(points));
      return kExitOk;
    }
  } catch (const wcap::Error& e) {
    std::cerr << "error (" << wcap::to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == wcap::Errc::Infeasible || e.code() == wcap::Errc::InfeasibleRow ? kExitInfeasible : kExitInvalid;
  }
  return kExitOk;
}
