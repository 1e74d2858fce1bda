#include "wcap/bench.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <new>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "wcap/dynamic_cactus.hpp"
#include "wcap/error.hpp"
#include "wcap/exact.hpp"
#include "wcap/heuristics.hpp"
#include "wcap/io.hpp"
#include "wcap/local_search.hpp"

namespace wcap {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_integer(std::string_view text, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::MalformedInput, "line " + std::to_string(line) + ": bad integer '" + std::string(text) + "'");
  }
  return value;
}

void check_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") != std::string::npos) {
    throw Error(Errc::InvalidParams, "CSV field may not contain commas, quotes or line breaks: " + value);
  }
}

std::optional<int> ls_depth(std::string_view algo) {
  constexpr std::string_view prefix = "mst+ls";
  if (!algo.starts_with(prefix) || algo.size() == prefix.size()) return std::nullopt;
  int depth = 0;
  const auto digits = algo.substr(prefix.size());
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), depth);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || depth < 1) return std::nullopt;
  return depth;
}

std::string resolve(const std::string& base, const std::string& path) {
  if (path.empty() || base.empty() || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(base) / path).string();
}

}  // namespace

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::Infeasible: return "infeasible";
    case RunStatus::MemLimit: return "memlimit";
    case RunStatus::Invalid: return "invalid";
  }
  return "?";
}

RunStatus parse_run_status(std::string_view text) {
  for (const auto s : {RunStatus::Ok, RunStatus::Timeout, RunStatus::Infeasible, RunStatus::MemLimit, RunStatus::Invalid}) {
    if (to_string(s) == text) return s;
  }
  throw Error(Errc::MalformedInput, "unknown run status '" + std::string(text) + "'");
}

std::string write_records_csv(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  os << kResultsHeader << '\n';
  for (const auto& r : records) {
    check_field(r.instance);
    check_field(r.algo);
    os << r.instance << ',' << r.algo << ',' << r.seed << ',' << to_string(r.status) << ','
       << (r.cost ? r.cost->to_string() : std::string()) << ',' << r.time_ms << ',' << r.peak_kb << '\n';
  }
  return os.str();
}

std::vector<RunRecord> read_records_csv(std::string_view text) {
  std::vector<RunRecord> out;
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kResultsHeader) throw Error(Errc::MalformedInput, "unexpected results header");
      header = false;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 7) throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": expected 7 fields");
    RunRecord r;
    r.instance = std::string(f[0]);
    r.algo = std::string(f[1]);
    r.seed = parse_integer<std::uint64_t>(f[2], line_no);
    r.status = parse_run_status(f[3]);
    if (!f[4].empty()) r.cost = Cost::parse(f[4]);
    r.time_ms = parse_integer<std::int64_t>(f[5], line_no);
    r.peak_kb = parse_integer<std::int64_t>(f[6], line_no);
    out.push_back(std::move(r));
  }
  if (header) throw Error(Errc::MalformedInput, "missing results header");
  return out;
}

std::int64_t peak_rss_kb() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return static_cast<std::int64_t>(usage.ru_maxrss);  // KiB on Linux
}

bool is_known_algorithm(std::string_view algo) {
  return algo == "gwc" || algo == "mst" || algo == "smc" || algo == "exact" || ls_depth(algo).has_value();
}

SolveOutcome solve_instance(std::string instance, const CactusGraph& cactus, const LinkGraph& links,
                            std::string_view algo, std::uint64_t seed, double time_limit_s) {
  SolveOutcome out;
  RunRecord& rec = out.record;
  rec.instance = std::move(instance);
  rec.algo = std::string(algo);
  rec.seed = seed;
  if (!is_known_algorithm(algo)) {
    rec.status = RunStatus::Invalid;
    return out;
  }

  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_limit_s));
  bool timed_out = false;
  try {
    Solution s;
    if (algo == "gwc") {
      s = gwc(cactus, links);
    } else if (algo == "mst") {
      s = mst_connect(cactus, links);
    } else if (algo == "smc") {
      s = smc(cactus, links);
    } else if (algo == "exact") {
      ExactOptions options;
      options.time_limit_s = time_limit_s;
      auto r = solve_exact(cactus, links, options);
      timed_out = r.status == ExactStatus::Timeout;
      s = std::move(r.solution);
    } else {
      LocalSearchStats stats;
      s = local_search(cactus, links, mst_connect(cactus, links), *ls_depth(algo), &stats, deadline);
      timed_out = stats.timed_out;
    }
    const auto elapsed = Clock::now() - start;
    rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    timed_out = timed_out || Clock::now() > deadline;
    s.meta.seed = seed;
    s.meta.wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    s.valid = is_augmentation(cactus, links, s.link_ids);
    rec.cost = s.total_cost;
    rec.status = !s.valid ? RunStatus::Invalid : timed_out ? RunStatus::Timeout : RunStatus::Ok;
    out.solution = std::move(s);
  } catch (const Error& e) {
    rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    rec.status = e.code() == Errc::Infeasible || e.code() == Errc::InfeasibleRow ? RunStatus::Infeasible : RunStatus::Invalid;
  } catch (const std::bad_alloc&) {
    rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    rec.status = RunStatus::MemLimit;
  }
  rec.peak_kb = peak_rss_kb();
  return out;
}

SolveOutcome run_solve(const SolveConfig& config) {
  const std::string id = config.instance.empty() ? config.cactus_path : config.instance;
  try {
    const CactusGraph cactus =
        parse_cactus(read_text_file(config.cactus_path), config.pi_path.empty() ? std::string() : read_text_file(config.pi_path));
    const auto raw = parse_links(read_text_file(config.links_path));
    const LinkGraph links = build_link_graph(cactus, raw);
    return solve_instance(id, cactus, links, config.algo, config.seed, config.time_limit_s);
  } catch (const Error&) {
    SolveOutcome out;
    out.record = {id, config.algo, config.seed, RunStatus::Invalid, std::nullopt, 0, peak_rss_kb()};
    return out;
  }
}

double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) throw Error(Errc::EmptyInput, "geometric mean of no values");
  long double sum = 0.0L;
  for (const double v : values) {
    if (!(v > 0.0)) throw Error(Errc::NonPositive, "geometric mean needs positive values");
    sum += std::log(static_cast<long double>(v));
  }
  return static_cast<double>(std::exp(sum / static_cast<long double>(values.size())));
}

ProfileMetric parse_profile_metric(std::string_view name) {
  if (name == "cost") return ProfileMetric::Cost;
  if (name == "time") return ProfileMetric::Time;
  if (name == "mem") return ProfileMetric::Memory;
  throw Error(Errc::InvalidParams, "unknown profile metric '" + std::string(name) + "'");
}

std::vector<Cost> default_tau_grid() {
  std::vector<Cost> taus;
  for (int i = 100; i <= 300; ++i) taus.push_back(Cost::fraction(i, 100));
  return taus;
}

std::vector<ProfilePoint> performance_profile(const std::vector<RunRecord>& records, ProfileMetric metric,
                                              const std::vector<Cost>& taus) {
  if (records.empty()) throw Error(Errc::EmptyInput, "no run records");
  using Key = std::pair<std::string, std::uint64_t>;
  auto value = [&](const RunRecord& r) -> std::optional<Cost> {
    if (r.status != RunStatus::Ok) return std::nullopt;
    switch (metric) {
      case ProfileMetric::Cost: return r.cost;
      case ProfileMetric::Time: return Cost(std::max<std::int64_t>(r.time_ms, 1));
      case ProfileMetric::Memory: return Cost(std::max<std::int64_t>(r.peak_kb, 1));
    }
    return std::nullopt;
  };

  std::set<Key> instances;
  std::set<std::string> algos;
  std::map<Key, Cost> best;
  std::map<std::pair<std::string, Key>, Cost> own;
  for (const auto& r : records) {
    const Key key{r.instance, r.seed};
    instances.insert(key);
    algos.insert(r.algo);
    const auto v = value(r);
    if (!v) continue;
    auto [it, fresh] = best.emplace(key, *v);
    if (!fresh && *v < it->second) it->second = *v;
    auto [jt, fresh_own] = own.emplace(std::make_pair(r.algo, key), *v);
    if (!fresh_own && *v < jt->second) jt->second = *v;
  }

  const auto total = static_cast<std::int64_t>(instances.size());
  std::vector<ProfilePoint> out;
  for (const auto& algo : algos) {
    for (const auto& tau : taus) {
      std::int64_t hits = 0;
      for (const auto& key : instances) {
        const auto it = own.find({algo, key});
        if (it == own.end()) continue;
        const Cost& b = best.at(key);
        // metric <= tau * best, compared exactly
        if (it->second / tau <= b) ++hits;
      }
      out.push_back({algo, tau, Cost::fraction(hits, total)});
    }
  }
  return out;
}

std::string write_profile_csv(const std::vector<ProfilePoint>& points) {
  std::ostringstream os;
  os << "algo,tau,fraction\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& p : points) os << p.algo << ',' << p.tau.to_double() << ',' << p.fraction.to_double() << '\n';
  return os.str();
}

BenchGrid parse_grid(std::string_view json_text, const std::string& base_dir) {
  BenchGrid grid;
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (j.contains("time_limit")) grid.time_limit_s = j.at("time_limit").get<double>();
    if (j.contains("seeds")) {
      const auto& s = j.at("seeds");
      grid.seeds.clear();
      if (s.is_number_integer()) {
        for (std::uint64_t i = 1; i <= s.get<std::uint64_t>(); ++i) grid.seeds.push_back(i);
      } else {
        grid.seeds = s.get<std::vector<std::uint64_t>>();
      }
    }
    grid.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    for (const auto& algo : grid.algorithms) {
      if (!is_known_algorithm(algo)) throw Error(Errc::InvalidParams, "unknown algorithm '" + algo + "'");
    }
    for (const auto& e : j.at("instances")) {
      GridInstance g;
      g.id = e.at("id").get<std::string>();
      g.cactus_path = resolve(base_dir, e.value("cactus", std::string()));
      g.pi_path = resolve(base_dir, e.value("pi", std::string()));
      g.links_path = resolve(base_dir, e.value("links", std::string()));
      g.generate = e.value("generate", std::string());
      g.n = e.value("n", 0);
      g.cycles = e.value("cycles", 0);
      if (e.contains("costs")) g.costs = CostDistribution::parse(e.at("costs").get<std::string>(), e.value("scale", false));
      if (g.generate.empty() == g.cactus_path.empty()) {
        throw Error(Errc::InvalidParams, "instance '" + g.id + "' needs exactly one of cactus / generate");
      }
      if (!g.generate.empty() && g.generate != "cycle" && g.generate != "star" && g.generate != "cactus") {
        throw Error(Errc::InvalidParams, "instance '" + g.id + "': unknown generator '" + g.generate + "'");
      }
      if (g.links_path.empty() == !g.costs.has_value()) {
        throw Error(Errc::InvalidParams, "instance '" + g.id + "' needs exactly one of links / costs");
      }
      check_field(g.id);
      grid.instances.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidParams, std::string("grid: ") + e.what());
  }
  return grid;
}

std::pair<CactusGraph, LinkGraph> materialize(const GridInstance& instance, std::uint64_t seed) {
  CactusGraph cactus;
  if (instance.generate == "cycle") {
    cactus = generate_special(SpecialKind::Cycle, instance.n);
  } else if (instance.generate == "star") {
    cactus = generate_special(SpecialKind::Star, instance.n);
  } else if (instance.generate == "cactus") {
    cactus = generate_cactus(instance.n, instance.cycles, seed);
  } else {
    cactus = parse_cactus(read_text_file(instance.cactus_path),
                          instance.pi_path.empty() ? std::string() : read_text_file(instance.pi_path));
  }
  LinkGraph links = instance.costs ? generate_link_costs(cactus, *instance.costs, seed)
                                   : build_link_graph(cactus, parse_links(read_text_file(instance.links_path)));
  return {std::move(cactus), std::move(links)};
}

std::vector<RunRecord> run_grid(const BenchGrid& grid) {
  std::vector<RunRecord> out;
  for (const auto& inst : grid.instances) {
    for (const auto seed : grid.seeds) {
      std::optional<std::pair<CactusGraph, LinkGraph>> data;
      try {
        data = materialize(inst, seed);
      } catch (const Error&) {
        for (const auto& algo : grid.algorithms) out.push_back({inst.id, algo, seed, RunStatus::Invalid, std::nullopt, 0, 0});
        continue;
      }
      for (const auto& algo : grid.algorithms) {
        out.push_back(solve_instance(inst.id, data->first, data->second, algo, seed, grid.time_limit_s).record);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.instance, a.algo, a.seed) < std::tie(b.instance, b.algo, b.seed);
  });
  return out;
}

}  // namespace wcap
