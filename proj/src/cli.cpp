#include "segstab/cli.hpp"

#include "segstab/approx.hpp"
#include "segstab/candidates.hpp"
#include "segstab/forge.hpp"
#include "segstab/hardness.hpp"
#include "segstab/io.hpp"
#include "segstab/laminar.hpp"
#include "segstab/scc.hpp"
#include "segstab/solve.hpp"
#include "segstab/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace segstab {

namespace {

namespace fs = std::filesystem;

/// Thrown for outcomes that map to exit code 1.
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  int trials = 32;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  /// Checks --format against what the command can produce; the first entry
  /// is the default.
  std::string format(std::initializer_list<const char*> allowed) const {
    if (g_.format.empty()) return *allowed.begin();
    for (const char* f : allowed) {
      if (g_.format == f) return f;
    }
    throw CLI::ValidationError("--format", "'" + g_.format + "' is not available for this command");
  }

  void emit(const std::string& text) const {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (g_.out_path.empty() || g_.out_path == "-") {
      out_ << body;
      return;
    }
    std::ofstream f(g_.out_path);
    if (!f) throw Error("cannot write " + g_.out_path);
    f << body;
  }

  void emit(const Json& j) const { emit(j.dump(2)); }

 private:
  const Globals& g_;
  std::ostream& out_;
};

StabInstance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

/// Accepts a bare solution or any file carrying one under "solution". A
/// wrapper with "hv": true marks a solution computed in HV mode.
Solution load_solution(const std::string& path, bool* hv = nullptr) {
  auto j = read_json_file(path);
  if (j.is_object() && j.contains("solution")) {
    if (hv) *hv = j.value("hv", false);
    return solution_from_json(j.at("solution"));
  }
  return solution_from_json(j);
}

RoundingParams rounding(const Globals& g) {
  RoundingParams p;
  p.seed = g.seed;
  p.trials = g.trials;
  p.validate();
  return p;
}

std::string status_name(CoverStatus s) {
  switch (s) {
    case CoverStatus::optimal: return "optimal";
    case CoverStatus::unproven: return "unproven";
    case CoverStatus::heuristic: return "heuristic";
  }
  return "?";
}

/// cost / lp, with 0/0 read as 1. Empty when only the LP is zero.
std::optional<Rational> ratio_of(const Rational& cost, const Rational& lp) {
  if (lp > 0) return Rational(cost / lp);
  if (cost == 0) return Rational(1);
  return std::nullopt;
}

Json ratio_json(const Rational& cost, const Rational& lp) {
  auto r = ratio_of(cost, lp);
  return r ? to_json(*r) : Json(nullptr);
}

std::string csv_decimal(const std::optional<Rational>& q) { return q ? to_decimal(*q, 12) : "inf"; }
std::string csv_exact(const std::optional<Rational>& q) { return q ? format_rational(*q) : "inf"; }

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  Graph g;
  int declared = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> declared) || declared < 0) throw Error(path + ":" + std::to_string(lineno) + ": bad vertex count");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw Error(path + ":" + std::to_string(lineno) + ": expected 'u v'");
    }
    if (!(ls >> v)) throw Error(path + ":" + std::to_string(lineno) + ": expected 'u v'");
    g.edges.emplace_back(u, v);
    g.n = std::max({g.n, u + 1, v + 1});
  }
  if (declared >= 0) {
    if (declared < g.n) throw Error(path + ": edge endpoint exceeds declared vertex count");
    g.n = declared;
  }
  g.validate();
  return g;
}

// --- commands -------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int n = 10, extra = 5, coord_max = 20, denominator = 1;
  bool cardinality = false, hv = false, constrained = false;
  int m = 4, levels = 3, l = 4;
  std::string eps = "1/100";
  bool weighted = false;
};

void cmd_gen(const GenArgs& a, const Globals& g, const Emitter& em) {
  em.format({"json"});
  RandomOptions opts;
  opts.coord_max = a.coord_max;
  opts.denominator = a.denominator;
  opts.objective = a.cardinality ? Objective::cardinality : Objective::length;
  opts.hv = a.hv;
  if (a.kind == "random") {
    em.emit(to_json(a.constrained ? gen_random_constrained(a.n, a.extra, g.seed, opts) : gen_random(a.n, g.seed, opts)));
  } else if (a.kind == "scc") {
    em.emit(to_json(gen_scc_counterexample(a.m)));
  } else if (a.kind == "greedy-trap") {
    auto trap = gen_greedy_trap(a.levels, parse_rational(a.eps), a.weighted);
    Json j = to_json(trap.inst);
    j["meta"] = Json{{"levels", trap.levels},
                     {"greedy_cost", to_json(trap.greedy_cost)},
                     {"t", to_json(trap.t)},
                     {"b", to_json(trap.b)},
                     {"b_rects", trap.b_rects},
                     {"t_rects", trap.t_rects}};
    em.emit(j);
  } else if (a.kind == "staircase") {
    auto st = gen_double_staircase(a.l);
    Json j = to_json(st.inst);
    j["meta"] = Json{{"k", st.k}, {"universal", to_json(st.universal)}};
    em.emit(j);
  } else if (a.kind == "piercing") {
    auto inst = gen_random_constrained(a.n, a.extra, g.seed, opts);
    em.emit(to_json(embed_piercing_3d(inst, *inst.fixed_candidates)));
  } else if (a.kind == "spsc") {
    em.emit(to_json(gen_spsc(a.m, g.seed)));
  }
}

void cmd_candidates(const std::string& path, const std::string& family, bool prune, const Emitter& em) {
  em.format({"json"});
  auto inst = load_instance(path);
  std::string fam = prune ? "pruned" : family;
  auto gen = [&](std::span<const Rect> rects) {
    if (fam == "tight") return tight_candidates(rects);
    if (fam == "pruned") return pruned_candidates(rects);
    return candidate_segments(rects);
  };
  auto cands = gen(inst.rects);
  if (inst.hv) {
    auto v = vertical_candidates(inst.rects, gen, static_cast<int>(cands.size()));
    cands.insert(cands.end(), v.begin(), v.end());
  }
  Json j;
  j["family"] = fam;
  j["count"] = cands.size();
  j["candidates"] = Json::array();
  for (const auto& s : cands) j["candidates"].push_back(to_json(s));
  em.emit(j);
}

void cmd_laminarize(const std::string& path, const Emitter& em) {
  em.format({"json"});
  auto inst = load_instance(path);
  auto cands = pruned_candidates(inst.rects);
  auto dec = laminarize(inst, cands);
  Json j = to_json(dec);
  j["candidates"] = cands.size();
  j["laminar_f1"] = is_x_laminar(dec.family(1));
  j["laminar_f2"] = is_x_laminar(dec.family(2));
  em.emit(j);
}

Json stats_json(const SolveReport& r) {
  Json s;
  s["algo"] = std::string(algo_name(r.algo));
  s["cost"] = to_json(r.cost);
  s["lp_bound"] = to_json(r.lp_bound);
  s["ratio"] = ratio_json(r.cost, r.lp_bound);
  s["status"] = status_name(r.status);
  s["nodes"] = r.nodes;
  return s;
}

void cmd_solve(const std::string& path, const std::string& algo, const Globals& g, const Emitter& em) {
  em.format({"json"});
  auto inst = load_instance(path);
  auto r = solve(inst, parse_algo(algo), rounding(g));
  Json j;
  if (r.solution) {
    j["solution"] = to_json(*r.solution);
  } else {
    Json z = Json::array();
    for (const auto& v : r.lp.z) z.push_back(to_json(v));
    j["fractional"] = Json{{"objective", to_json(r.lp.objective)}, {"z", z}};
  }
  j["stats"] = stats_json(r);
  em.emit(j);
}

void cmd_approx(const std::string& path, bool hv, const Globals& g, const Emitter& em) {
  em.format({"json"});
  auto inst = load_instance(path);
  if (hv) inst.hv = true;
  auto params = rounding(g);
  auto r = inst.hv ? approx_hv(inst, params) : approx_stab(inst, params);
  Json j;
  j["hv"] = inst.hv;
  j["solution"] = to_json(r.solution);
  j["stats"] = Json{{"algo", inst.hv ? "approx-hv" : "approx"},
                    {"cost", to_json(r.solution.cost)},
                    {"lp_bound", to_json(r.lp_bound)},
                    {"lp_laminar", to_json(r.lp_laminar)},
                    {"ratio", ratio_json(r.solution.cost, r.lp_bound)},
                    {"candidates", r.candidates},
                    {"laminar_sets", r.laminar_sets},
                    {"seed", g.seed},
                    {"trials", g.trials}};
  em.emit(j);
}

void cmd_scc(const std::string& path, std::optional<int> k, int samples, bool exhaustive, bool laminar,
             const Globals& g, const Emitter& em) {
  auto fmt = em.format({"csv", "json"});
  auto inst = load_instance(path);
  std::vector<Segment> family;
  if (laminar) {
    family = laminarize(inst, pruned_candidates(inst.rects)).segments();
  } else {
    family = solver_family(inst);
  }
  auto rows = exhaustive ? scc_exhaustive(inst.rects, family) : scc_profile(inst.rects, family, samples, g.seed, k);
  if (exhaustive && k) std::erase_if(rows, [&](const SccRow& r) { return r.k != *k; });
  if (fmt == "json") {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(Json{{"m", r.m}, {"k", r.k}, {"cells", r.cells}});
    em.emit(j);
    return;
  }
  std::ostringstream csv;
  csv << "m,k,cells\n";
  for (const auto& r : rows) csv << r.m << ',' << r.k << ',' << r.cells << '\n';
  em.emit(csv.str());
}

void cmd_harden_vc(const std::string& path, bool oracle, const Emitter& em) {
  em.format({"json"});
  auto graph = read_edge_list(path);
  auto vis = build_visibility(graph);
  auto np = compile_np_instance(vis);
  auto violations = check_np_instance(np);
  Json cert = to_json(np);
  cert["graph"] = Json{{"n", graph.n}, {"edges", graph.edges}};
  cert["violations"] = violations;
  bool bad = !violations.empty();
  if (oracle) {
    int vc = min_vertex_cover_size(graph);
    auto r = solve(np.inst, Algo::exact);
    Rational expected = np.k_star(vc);
    cert["vertex_cover"] = vc;
    cert["expected_optimum"] = to_json(expected);
    cert["solved_optimum"] = to_json(r.cost);
    cert["solver_status"] = status_name(r.status);
    bool proven = r.status == CoverStatus::optimal;
    if (r.cost < expected || (proven && r.cost != expected)) bad = true;
  }
  em.emit(Json{{"instance", to_json(np.inst)}, {"certificate", cert}});
  if (bad) throw Rejected("gadget certificate violated");
}

void cmd_harden_spsc(int m, const std::string& mode, bool oracle, const Globals& g, const Emitter& em) {
  em.format({"json"});
  if (mode != "card" && mode != "constr") throw CLI::ValidationError("--mode", "expected card or constr");
  auto spsc = gen_spsc(m, g.seed);
  auto smode = mode == "card" ? SpscMode::cardinality : SpscMode::constrained;
  auto inst = spsc_to_stabbing(spsc, smode);
  Json cert;
  cert["mode"] = mode;
  cert["universe"] = spsc.universe_size();
  bool bad = false;
  if (oracle) {
    auto sc = exact_cover(spsc_set_cover(spsc));
    auto r = solve(inst, Algo::exact);
    cert["spsc_optimum"] = to_json(sc.cost);
    cert["solved_optimum"] = to_json(r.cost);
    if (smode == SpscMode::cardinality) {
      cert["expected_optimum"] = to_json(sc.cost);
      bad = r.cost != sc.cost;
    } else {
      cert["upper_bound"] = to_json(Rational(2 * sc.cost));
      bad = r.cost < sc.cost || r.cost > 2 * sc.cost;
    }
  }
  em.emit(Json{{"instance", to_json(inst)}, {"spsc", to_json(spsc)}, {"certificate", cert}});
  if (bad) throw Rejected("SPSC certificate violated");
}

void cmd_render(const std::string& path, const std::string& solution_path, bool laminar, const Emitter& em) {
  em.format({"svg"});
  auto inst = load_instance(path);
  std::vector<Segment> segs;
  std::vector<int> fams;
  if (!solution_path.empty()) {
    auto sol = load_solution(solution_path);
    segs = sol.segments;
    fams.assign(segs.size(), 0);
  }
  if (laminar) {
    auto dec = laminarize(inst, pruned_candidates(inst.rects));
    for (const auto& s : dec.snapped) {
      segs.push_back(s.snapped);
      fams.push_back(s.family);
    }
  } else {
    fams.clear();
  }
  em.emit(render_svg(inst, segs, fams));
}

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  Algo algo = Algo::exact;
  Rational cost, lp_bound;
  double ms = 0;
};

void cmd_bench(const std::string& dir, const std::vector<std::string>& algo_names, int jobs, const Globals& g,
               const Emitter& em) {
  auto fmt = em.format({"csv", "json"});
  std::vector<Algo> algos;
  if (algo_names.empty()) {
    algos = {Algo::exact, Algo::greedy, Algo::greedy_width, Algo::lp, Algo::approx};
  } else {
    for (const auto& a : algo_names) algos.push_back(parse_algo(a));
  }
  if (!fs::is_directory(dir)) throw Error(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  auto params = rounding(g);

  std::vector<std::vector<BenchRow>> rows(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        auto inst = load_instance(files[i].string());
        for (Algo a : algos) {
          if (a == Algo::approx && inst.constrained()) continue;
          auto r = solve(inst, a, params);
          if (r.solution && !verify_solution(inst, *r.solution).feasible) {
            throw Rejected(std::string(algo_name(a)) + " returned an infeasible solution");
          }
          rows[i].push_back(BenchRow{files[i].stem().string(), inst.rects.size(), a, r.cost, r.lp_bound, r.ms});
        }
      } catch (const std::exception& e) {
        errors[i] = files[i].filename().string() + ": " + e.what();
      }
    }
  };
  int workers = std::clamp(jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency()), 1, 64);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < std::min<int>(workers, std::max<std::size_t>(files.size(), 1)); ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw Rejected(e);
  }

  if (fmt == "json") {
    Json j = Json::array();
    for (const auto& per : rows) {
      for (const auto& r : per) {
        j.push_back(Json{{"instance", r.instance},
                         {"n", r.n},
                         {"algo", std::string(algo_name(r.algo))},
                         {"cost", to_json(r.cost)},
                         {"lp_bound", to_json(r.lp_bound)},
                         {"ratio", ratio_json(r.cost, r.lp_bound)},
                         {"ms", r.ms}});
      }
    }
    em.emit(j);
    return;
  }
  std::ostringstream csv;
  csv << "instance,n,algo,cost,cost_exact,lp_bound,lp_bound_exact,ratio,ratio_exact,ms\n";
  for (const auto& per : rows) {
    for (const auto& r : per) {
      auto ratio = ratio_of(r.cost, r.lp_bound);
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", r.ms);
      csv << r.instance << ',' << r.n << ',' << algo_name(r.algo) << ',' << to_decimal(r.cost, 12) << ','
          << format_rational(r.cost) << ',' << to_decimal(r.lp_bound, 12) << ',' << format_rational(r.lp_bound) << ','
          << csv_decimal(ratio) << ',' << csv_exact(ratio) << ',' << ms << '\n';
    }
  }
  em.emit(csv.str());
}

void cmd_verify(const std::string& inst_path, const std::string& sol_path, const Emitter& em) {
  em.format({"json"});
  auto inst = load_instance(inst_path);
  bool hv = false;
  auto sol = load_solution(sol_path, &hv);
  if (hv) inst.hv = true;
  auto rep = verify_solution(inst, sol);
  bool ok = rep.feasible && rep.cost_matches && rep.bad_assignment.empty();
  em.emit(Json{{"ok", ok},
               {"feasible", rep.feasible},
               {"uncovered", rep.uncovered},
               {"invalid_segments", rep.invalid_segments},
               {"bad_assignment", rep.bad_assignment},
               {"claimed_cost", to_json(sol.cost)},
               {"recomputed_cost", to_json(rep.recomputed_cost)},
               {"cost_matches", rep.cost_matches}});
  if (!ok) throw Rejected("solution rejected");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rectangle stabbing with horizontal segments", "segstab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out_path, "Output file (default stdout)");
  app.add_option("--format", g.format, "json|csv|svg, where the command supports it")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--trials", g.trials, "Rounding trials per inflation factor")->check(CLI::PositiveNumber);
  Emitter em(g, out);

  std::function<void()> action;

  GenArgs gen;
  auto* sc_gen = app.add_subcommand("gen", "Generate an instance");
  sc_gen->add_option("kind", gen.kind, "random|scc|greedy-trap|staircase|piercing|spsc")
      ->required()
      ->check(CLI::IsMember({"random", "scc", "greedy-trap", "staircase", "piercing", "spsc"}));
  sc_gen->add_option("--n", gen.n, "Rect count (random, piercing)")->check(CLI::Range(0, 100000));
  sc_gen->add_option("--extra", gen.extra, "Extra fixed candidates (constrained, piercing)")->check(CLI::NonNegativeNumber);
  sc_gen->add_option("--coord-max", gen.coord_max)->check(CLI::PositiveNumber);
  sc_gen->add_option("--denominator", gen.denominator)->check(CLI::PositiveNumber);
  sc_gen->add_flag("--cardinality", gen.cardinality, "Count segments instead of summing lengths");
  sc_gen->add_flag("--hv", gen.hv, "Allow vertical segments");
  sc_gen->add_flag("--constrained", gen.constrained, "Attach a fixed candidate family");
  sc_gen->add_option("--m", gen.m, "Size parameter (scc, spsc)");
  sc_gen->add_option("--levels", gen.levels, "Greedy-trap levels");
  sc_gen->add_option("--eps", gen.eps, "Greedy-trap epsilon");
  sc_gen->add_flag("--weighted", gen.weighted, "Greedy-trap weighted variant");
  sc_gen->add_option("--l", gen.l, "Staircase half-width");
  sc_gen->callback([&] { action = [&] { cmd_gen(gen, g, em); }; });

  std::string inst_path, family = "full";
  bool prune = false;
  auto* sc_cand = app.add_subcommand("candidates", "Emit the canonical candidate segments");
  sc_cand->add_option("instance", inst_path)->required();
  sc_cand->add_option("--family", family)->check(CLI::IsMember({"full", "tight", "pruned"}));
  sc_cand->add_flag("--prune", prune, "Same as --family pruned");
  sc_cand->callback([&] { action = [&] { cmd_candidates(inst_path, family, prune, em); }; });

  auto* sc_lam = app.add_subcommand("laminarize", "Snap the candidates to two x-laminar families");
  sc_lam->add_option("instance", inst_path)->required();
  sc_lam->callback([&] { action = [&] { cmd_laminarize(inst_path, em); }; });

  std::string algo = "exact";
  auto* sc_solve = app.add_subcommand("solve", "Solve an instance");
  sc_solve->add_option("instance", inst_path)->required();
  sc_solve->add_option("--algo", algo)->check(CLI::IsMember({"exact", "greedy", "greedy-width", "lp", "approx"}));
  sc_solve->callback([&] { action = [&] { cmd_solve(inst_path, algo, g, em); }; });

  bool hv = false;
  auto* sc_approx = app.add_subcommand("approx", "LP rounding via laminar decomposition");
  sc_approx->add_option("instance", inst_path)->required();
  sc_approx->add_flag("--hv", hv, "Use horizontal and vertical segments");
  sc_approx->callback([&] { action = [&] { cmd_approx(inst_path, hv, g, em); }; });

  std::optional<int> k;
  int samples = 64;
  bool exhaustive = false, use_laminar = false;
  auto* sc_scc = app.add_subcommand("scc", "Shallow cell counts of the candidate family");
  sc_scc->add_option("instance", inst_path)->required();
  sc_scc->add_option("--k", k, "Depth")->check(CLI::NonNegativeNumber);
  sc_scc->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  sc_scc->add_flag("--exhaustive", exhaustive, "Enumerate every subfamily (m <= 16)");
  sc_scc->add_flag("--laminar", use_laminar, "Use the laminarized family");
  sc_scc->callback([&] { action = [&] { cmd_scc(inst_path, k, samples, exhaustive, use_laminar, g, em); }; });

  auto* sc_harden = app.add_subcommand("harden", "Hardness gadgets");
  sc_harden->require_subcommand(1);
  std::string graph_path, mode = "card";
  bool oracle = false;
  int spsc_m = 2;
  auto* sc_vc = sc_harden->add_subcommand("vc", "Vertex cover gadget instance from an edge list");
  sc_vc->add_option("graph", graph_path)->required();
  sc_vc->add_flag("--oracle", oracle, "Solve exactly and check the expected optimum");
  sc_vc->callback([&] { action = [&] { cmd_harden_vc(graph_path, oracle, em); }; });
  auto* sc_spsc = sc_harden->add_subcommand("spsc", "SPSC reduction instance");
  sc_spsc->add_option("--m", spsc_m)->required();
  sc_spsc->add_option("--mode", mode)->check(CLI::IsMember({"card", "constr"}));
  sc_spsc->add_flag("--oracle", oracle, "Solve exactly and check against the set cover optimum");
  sc_spsc->callback([&] { action = [&] { cmd_harden_spsc(spsc_m, mode, oracle, g, em); }; });

  std::string solution_path;
  bool render_laminar = false;
  auto* sc_render = app.add_subcommand("render", "Draw an instance as SVG");
  sc_render->add_option("instance", inst_path)->required();
  sc_render->add_option("--solution", solution_path);
  sc_render->add_flag("--laminar", render_laminar, "Overlay the laminar families");
  sc_render->callback([&] { action = [&] { cmd_render(inst_path, solution_path, render_laminar, em); }; });

  std::string bench_dir;
  std::vector<std::string> bench_algos;
  int jobs = 0;
  auto* sc_bench = app.add_subcommand("bench", "Ratio table over a directory of instances");
  sc_bench->add_option("dir", bench_dir)->required();
  sc_bench->add_option("--algo", bench_algos)
      ->check(CLI::IsMember({"exact", "greedy", "greedy-width", "lp", "approx"}));
  sc_bench->add_option("--jobs", jobs, "Worker threads (default: hardware)");
  sc_bench->callback([&] { action = [&] { cmd_bench(bench_dir, bench_algos, jobs, g, em); }; });

  std::string verify_sol;
  auto* sc_verify = app.add_subcommand("verify", "Check a solution against an instance");
  sc_verify->add_option("instance", inst_path)->required();
  sc_verify->add_option("solution", verify_sol)->required();
  sc_verify->callback([&] { action = [&] { cmd_verify(inst_path, verify_sol, em); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (action) action();
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Rejected& e) {
    err << "segstab: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "segstab: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace segstab
