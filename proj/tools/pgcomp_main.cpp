// Command-line front end: solve games, generate instances, run benchmarks.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgcomp/pgcomp.hpp"

namespace {

using nlohmann::json;
using namespace pgcomp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitInternal = 4;

// Raised when the requested method does not apply to the input game.
struct Inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// solve

struct SidecarContext {
  const ParsedGame* game;
  std::unordered_map<std::int64_t, int> to_internal;
};

VertexSet set_from_json(const json& arr, const SidecarContext& ctx) {
  VertexSet s(ctx.game->arena.size());
  for (const auto& item : arr) {
    const std::int64_t ext = item.get<std::int64_t>();
    auto it = ctx.to_internal.find(ext);
    if (it == ctx.to_internal.end())
      throw InputError("decomposition references unknown vertex id " +
                       std::to_string(ext));
    s.insert(it->second);
  }
  return s;
}

Player player_from_json(const json& j) {
  const int p = j.get<int>();
  if (p != 0 && p != 1) throw InputError("player field must be 0 or 1");
  return p == 0 ? Player::Even : Player::Odd;
}

ClassSolver inner_from_json(const json& dec, const char* key) {
  if (dec.contains(key)) return solver_for_class(dec[key].get<std::string>());
  return zielonka_solver();
}

struct SolveOutcome {
  Regions regions;
  std::string method;
};

SolveOutcome solve_with_sidecar(const SubgameMask& mask, const ParsedGame& game,
                                const std::string& method, const json& dec) {
  SidecarContext ctx{&game, {}};
  for (size_t i = 0; i < game.external_ids.size(); ++i)
    ctx.to_internal[game.external_ids[i]] = static_cast<int>(i);
  const std::string kind = dec.value("kind", "");

  if (method == "halfjoin") {
    if (kind != "half-join") throw InputError("sidecar kind is not half-join");
    HalfJoinDecomposition d{set_from_json(dec.at("single_side"), ctx),
                            set_from_json(dec.at("class_side"), ctx),
                            player_from_json(dec.at("single_owner"))};
    d.validate(mask);
    const ClassSolver inner = inner_from_json(dec, "inner");
    return {generic_solve(mask, make_half_join_half_solver(d, inner)),
            "halfjoin(" + inner.name + ")"};
  }
  if (method == "join") {
    if (kind != "join") throw InputError("sidecar kind is not join");
    JoinDecomposition d{set_from_json(dec.at("left"), ctx),
                        set_from_json(dec.at("right"), ctx)};
    d.validate(mask);
    const ClassSolver left = inner_from_json(dec, "left_inner");
    const ClassSolver right = inner_from_json(dec, "right_inner");
    return {generic_solve(mask, make_join_half_solver(d, left, right)),
            "join(" + left.name + "," + right.name + ")"};
  }
  if (method == "gjoin") {
    if (kind != "g-join") throw InputError("sidecar kind is not g-join");
    GJoinDecomposition d{set_from_json(dec.at("single_side"), ctx),
                         set_from_json(dec.at("class_side"), ctx),
                         set_from_json(dec.at("m_set"), ctx),
                         player_from_json(dec.at("single_owner"))};
    d.validate(mask);
    const ClassSolver inner = inner_from_json(dec, "inner");
    return {generic_solve(mask, make_g_join_half_solver(d, inner)),
            "gjoin(" + inner.name + ")"};
  }
  if (method == "addvertex") {
    if (kind != "add-vertex") throw InputError("sidecar kind is not add-vertex");
    const std::int64_t ext = dec.at("apex").get<std::int64_t>();
    auto it = ctx.to_internal.find(ext);
    if (it == ctx.to_internal.end())
      throw InputError("apex references unknown vertex id");
    const ClassSolver inner = inner_from_json(dec, "inner");
    return {
        generic_solve(mask, make_add_vertex_half_solver(it->second, inner)),
        "addvertex(" + inner.name + ")"};
  }
  throw InputError("method " + method + " does not take a decomposition file");
}

SolveOutcome solve_by_method(const SubgameMask& mask, const ParsedGame& game,
                             const std::string& method,
                             const std::string& sidecar_path, int brute_cap) {
  if (method == "auto") {
    AutoResult r = solve_auto(mask);
    return {std::move(r.regions), "auto:" + r.method};
  }
  if (method == "zielonka") return {solve_zielonka(mask).regions, "zielonka"};
  if (method == "brute") {
    try {
      return {solve_brute_force(mask, brute_cap), "brute"};
    } catch (const SizeError& e) {
      throw Inapplicable(e.what());
    }
  }
  if (method == "tournament") {
    if (!is_weak_tournament(mask))
      throw Inapplicable("input is not a weak tournament");
    return {solve_weak_tournament(mask), "tournament"};
  }
  if (method == "recognition") {
    std::cerr << "warning: recognition builds one pinned gadget per vertex; "
                 "expect a quadratic size blow-up\n";
    return {solve_via_global_recognizer(mask, zielonka_global_recognizer()),
            "recognition"};
  }
  if (method == "paste") {
    const ClassSolver per_block{
        "auto", [](const SubgameMask& m) { return solve_auto(m).regions; }};
    return {solve_pasted(mask, per_block), "paste"};
  }

  if (!sidecar_path.empty()) {
    json dec;
    try {
      dec = json::parse(read_file(sidecar_path));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("decomposition file: ") + e.what());
    }
    return solve_with_sidecar(mask, game, method, dec);
  }

  if (method == "halfjoin") {
    for (Player i : {Player::Even, Player::Odd}) {
      const auto dec = detect_half_join(mask, i);
      if (!dec) continue;
      for (const auto& mt : shipped_membership_tests()) {
        if (!mt.test(restrict(mask, dec->class_side))) continue;
        return {generic_solve(mask, make_half_join_half_solver(
                                        *dec, solver_for_class(mt.name))),
                std::string("halfjoin(") + player_name(i) + "," + mt.name + ")"};
      }
    }
    throw Inapplicable("no half-join decomposition found");
  }
  if (method == "addvertex") {
    for (const auto& mt : shipped_membership_tests()) {
      if (const auto cert = find_removable_vertex(mask, mt)) {
        return {generic_solve(mask, make_add_vertex_half_solver(
                                        cert->apex, solver_for_class(mt.name))),
                "addvertex(" + mt.name + ")"};
      }
    }
    throw Inapplicable("no removable vertex found for the shipped classes");
  }
  if (method == "join" || method == "gjoin")
    throw Inapplicable("method " + method +
                       " needs a decomposition file (--decomposition)");
  throw InputError("unknown method: " + method);
}

int run_solve(const std::string& input, const std::string& method,
              const std::string& output, const std::string& sidecar,
              bool verify, bool strict, int brute_cap) {
  ParsedGame game;
  try {
    game = parse_pgsolver(read_file(input), strict);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  }
  const SubgameMask mask(game.arena);

  SolveOutcome outcome;
  try {
    outcome = solve_by_method(mask, game, method, sidecar, brute_cap);
  } catch (const Inapplicable& e) {
    std::cerr << "method inapplicable: " << e.what() << "\n";
    return kExitInapplicable;
  }
  std::cerr << "method: " << outcome.method << "\n";
  synthesize_strategies(mask, outcome.regions);

  if (verify) {
    if (!same_winners(outcome.regions, solve_zielonka(mask).regions)) {
      std::cerr << "verification failed: winners disagree with the reference "
                   "solver\n";
      return kExitInternal;
    }
    const VerificationResult check = verify_solution(mask, outcome.regions);
    if (!check) {
      std::cerr << "verification failed: " << check.reason << " (vertex "
                << check.witness << ")\n";
      return kExitInternal;
    }
    std::cerr << "verified against the reference solver\n";
  }

  const std::string text = write_solution(
      solution_from_regions(outcome.regions, game.arena, &game.external_ids));
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen

GenSpec side_spec(const std::string& cls, int n, int max_priority,
                  double density, std::uint64_t seed, Player owner) {
  GenSpec spec;
  if (cls == "edgeless") {
    spec.cls = GenClass::Random;
    spec.density = 0.0;
  } else if (cls == "random") {
    spec.cls = GenClass::Random;
    spec.density = density;
  } else if (cls == "single-player") {
    spec.cls = GenClass::SinglePlayer;
    spec.density = density;
  } else if (cls == "tournament") {
    spec.cls = GenClass::WeakTournament;
    spec.density = density;
  } else {
    throw InputError("unknown side class: " + cls);
  }
  spec.n = n;
  spec.max_priority = max_priority;
  spec.seed = seed;
  spec.single_owner = owner;
  return spec;
}

json set_to_json(const VertexSet& s) {
  json arr = json::array();
  for (int v : s.to_vector()) arr.push_back(v);
  return arr;
}

struct GenOptions {
  std::string cls = "random";
  int n = 8;
  int max_priority = 5;
  double density = 0.3;
  std::uint64_t seed = 0;
  int owner = 1;
  int single_n = -1;  // defaults to n/2
  std::string inner_class = "edgeless";
  std::string left_class = "edgeless";
  std::string right_class = "edgeless";
  double m_fraction = 0.5;
  int blocks = 3;
  std::string block_kinds = "mixed";
  int block_min = 2;
  int block_max = 5;
  std::string base_class = "tournament";
  std::string output;
};

int run_gen(const GenOptions& opt) {
  const Player owner = opt.owner == 0 ? Player::Even : Player::Odd;
  const int single_n = opt.single_n >= 0 ? opt.single_n : opt.n / 2;
  Arena arena;
  json sidecar;

  if (opt.cls == "random" || opt.cls == "single-player" ||
      opt.cls == "tournament" || opt.cls == "edgeless") {
    arena = gen_arena(side_spec(opt.cls, opt.n, opt.max_priority, opt.density,
                                opt.seed, owner));
  } else if (opt.cls == "half-join") {
    const auto [a, dec] = gen_join(
        side_spec("single-player", single_n, opt.max_priority, opt.density,
                  opt.seed * 2 + 1, owner),
        side_spec(opt.inner_class, opt.n - single_n, opt.max_priority,
                  opt.density, opt.seed * 2 + 2, owner),
        opt.seed);
    arena = a;
    sidecar = {{"kind", "half-join"},
               {"single_owner", opt.owner},
               {"single_side", set_to_json(dec.left)},
               {"class_side", set_to_json(dec.right)},
               {"inner", opt.inner_class}};
  } else if (opt.cls == "join") {
    const auto [a, dec] = gen_join(
        side_spec(opt.left_class, opt.n / 2, opt.max_priority, opt.density,
                  opt.seed * 2 + 1, owner),
        side_spec(opt.right_class, opt.n - opt.n / 2, opt.max_priority,
                  opt.density, opt.seed * 2 + 2, owner),
        opt.seed);
    arena = a;
    sidecar = {{"kind", "join"},
               {"left", set_to_json(dec.left)},
               {"right", set_to_json(dec.right)},
               {"left_inner", opt.left_class},
               {"right_inner", opt.right_class}};
  } else if (opt.cls == "g-join") {
    const auto [a, dec] = gen_g_join(
        side_spec("single-player", single_n, opt.max_priority, opt.density,
                  opt.seed * 2 + 1, owner),
        side_spec(opt.inner_class, opt.n - single_n, opt.max_priority,
                  opt.density, opt.seed * 2 + 2, owner),
        opt.m_fraction, opt.seed);
    arena = a;
    sidecar = {{"kind", "g-join"},
               {"single_owner", opt.owner},
               {"single_side", set_to_json(dec.single_side)},
               {"class_side", set_to_json(dec.class_side)},
               {"m_set", set_to_json(dec.m_set)},
               {"inner", opt.inner_class}};
  } else if (opt.cls == "block-cactus") {
    BlockCactusSpec spec;
    spec.blocks = opt.blocks;
    spec.cliques = opt.block_kinds != "cycle";
    spec.cycles = opt.block_kinds != "clique";
    spec.block_min = opt.block_min;
    spec.block_max = opt.block_max;
    spec.max_priority = opt.max_priority;
    spec.seed = opt.seed;
    arena = gen_block_cactus(spec);
  } else if (opt.cls == "add-vertex") {
    const auto [a, cert] = gen_add_vertex(
        side_spec(opt.base_class, opt.n > 0 ? opt.n - 1 : 0, opt.max_priority,
                  opt.density, opt.seed * 2 + 1, owner),
        opt.seed);
    arena = a;
    sidecar = {{"kind", "add-vertex"},
               {"apex", cert.apex},
               {"inner", opt.base_class}};
  } else {
    throw InputError("unknown class: " + opt.cls);
  }

  const std::string text = write_pgsolver(arena);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_file(opt.output, text);
    if (!sidecar.is_null()) {
      write_file(opt.output + ".dec.json", sidecar.dump(2) + "\n");
      std::cerr << "decomposition: " << opt.output << ".dec.json\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchInstance {
  Arena arena;
  std::string method;
  std::function<Regions(const SubgameMask&)> solve;
};

BenchInstance bench_instance(const std::string& cls, int n, std::uint64_t seed) {
  const int maxp = 6;
  const double density = 0.5;
  if (cls == "tournament") {
    GenSpec spec{GenClass::WeakTournament, n, maxp, density, seed, Player::Odd};
    return {gen_weak_tournament(spec), "tournament",
            [](const SubgameMask& m) { return solve_weak_tournament(m); }};
  }
  if (cls == "random") {
    GenSpec spec{GenClass::Random, n, maxp, density, seed, Player::Odd};
    return {gen_random(spec), "zielonka",
            [](const SubgameMask& m) { return solve_zielonka(m).regions; }};
  }
  if (cls == "half-join") {
    GenSpec left{GenClass::SinglePlayer, n / 2, maxp, density, seed * 2 + 1,
                 Player::Odd};
    GenSpec right{GenClass::WeakTournament, n - n / 2, maxp, density,
                  seed * 2 + 2, Player::Odd};
    auto [arena, dec] = gen_join(left, right, seed);
    HalfJoinDecomposition hdec{dec.left, dec.right, Player::Odd};
    return {std::move(arena), "halfjoin",
            [hdec](const SubgameMask& m) {
              return generic_solve(
                  m, make_half_join_half_solver(hdec, weak_tournament_solver()));
            }};
  }
  if (cls == "join") {
    GenSpec left{GenClass::Random, n / 2, maxp, 0.0, seed * 2 + 1, Player::Odd};
    GenSpec right{GenClass::Random, n - n / 2, maxp, 0.0, seed * 2 + 2,
                  Player::Odd};
    auto [arena, dec] = gen_join(left, right, seed);
    return {std::move(arena), "join", [dec](const SubgameMask& m) {
              return generic_solve(m, make_join_half_solver(
                                          dec, edgeless_solver(), edgeless_solver()));
            }};
  }
  if (cls == "g-join") {
    GenSpec single{GenClass::SinglePlayer, n / 3 + 1, maxp, density,
                   seed * 2 + 1, Player::Odd};
    GenSpec cls_side{GenClass::WeakTournament, n - n / 3 - 1, maxp, density,
                     seed * 2 + 2, Player::Odd};
    auto [arena, dec] = gen_g_join(single, cls_side, 0.5, seed);
    return {std::move(arena), "gjoin", [dec](const SubgameMask& m) {
              return generic_solve(
                  m, make_g_join_half_solver(dec, weak_tournament_solver()));
            }};
  }
  if (cls == "block-cactus") {
    BlockCactusSpec spec;
    spec.blocks = std::max(1, n / 4);
    spec.max_priority = maxp;
    spec.seed = seed;
    const ClassSolver comp{"block", [](const SubgameMask& m) {
                             return is_weak_tournament(m)
                                        ? solve_weak_tournament(m)
                                        : solve_zielonka(m).regions;
                           }};
    return {gen_block_cactus(spec), "paste", [comp](const SubgameMask& m) {
              return solve_pasted(m, comp);
            }};
  }
  if (cls == "add-vertex") {
    GenSpec base{GenClass::WeakTournament, n > 0 ? n - 1 : 0, maxp, density,
                 seed * 2 + 1, Player::Odd};
    auto [arena, cert] = gen_add_vertex(base, seed);
    const int apex = cert.apex;
    return {std::move(arena), "addvertex", [apex](const SubgameMask& m) {
              return generic_solve(
                  m, make_add_vertex_half_solver(apex, weak_tournament_solver()));
            }};
  }
  throw InputError("unknown bench class: " + cls);
}

int run_bench(const std::vector<std::string>& classes,
              const std::vector<int>& sizes, int seeds,
              const std::string& csv_path) {
  int check_cap = 600;
  if (const char* env = std::getenv("PGCOMP_BENCH_CHECK_CAP"))
    check_cap = std::atoi(env);

  std::ostringstream csv;
  csv << "class,n,seed,method,wall_time_ns,vertices,arcs,"
         "agreement_with_zielonka\n";
  for (const auto& cls : classes) {
    for (int n : sizes) {
      for (int seed = 0; seed < seeds; ++seed) {
        const BenchInstance inst =
            bench_instance(cls, n, static_cast<std::uint64_t>(seed));
        const SubgameMask mask(inst.arena);
        const auto start = std::chrono::steady_clock::now();
        const Regions regions = inst.solve(mask);
        const auto stop = std::chrono::steady_clock::now();
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                .count();

        std::string agreement = "skipped";
        if (inst.arena.size() <= check_cap) {
          agreement = same_winners(regions, solve_zielonka(mask).regions)
                          ? "true"
                          : "false";
        }
        csv << cls << ',' << inst.arena.size() << ',' << seed << ','
            << inst.method << ',' << ns << ',' << inst.arena.size() << ','
            << inst.arena.arc_count() << ',' << agreement << '\n';
        std::cerr << cls << " n=" << n << " seed=" << seed << ": "
                  << ns / 1000000.0 << " ms\n";
      }
    }
  }
  if (csv_path.empty())
    std::cout << csv.str();
  else
    write_file(csv_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity game composition toolkit"};
  app.require_subcommand(1);

  // solve
  std::string in_path, method = "auto", out_path, sidecar_path;
  bool verify = false, strict = false;
  int brute_cap = 8;
  auto* solve = app.add_subcommand("solve", "solve a game file");
  solve->add_option("-i,--input", in_path, "game in PGSolver format")
      ->required();
  solve->add_option("-m,--method", method,
                    "auto|zielonka|brute|tournament|halfjoin|join|gjoin|paste|"
                    "addvertex|recognition");
  solve->add_option("-o,--output", out_path, "write the solution here");
  solve->add_option("-d,--decomposition", sidecar_path,
                    "decomposition sidecar (JSON)");
  solve->add_flag("--verify", verify, "cross-check against the reference solver");
  solve->add_flag("--strict", strict, "reject dead ends while parsing");
  solve->add_option("--brute-cap", brute_cap, "vertex cap for --method brute");

  // gen
  GenOptions gen;
  auto* genc = app.add_subcommand("gen", "generate an instance");
  genc->add_option("-c,--class", gen.cls,
                   "random|edgeless|single-player|tournament|half-join|join|"
                   "g-join|block-cactus|add-vertex");
  genc->add_option("-n,--n", gen.n, "vertex count");
  genc->add_option("--max-priority", gen.max_priority, "priority bound");
  genc->add_option("--density", gen.density, "arc density in [0,1]");
  genc->add_option("-s,--seed", gen.seed, "generator seed");
  genc->add_option("--owner", gen.owner, "single-player owner (0 or 1)");
  genc->add_option("--single-n", gen.single_n, "single side size (default n/2)");
  genc->add_option("--inner-class", gen.inner_class,
                   "class side for half-join/g-join");
  genc->add_option("--left-class", gen.left_class, "left side class for join");
  genc->add_option("--right-class", gen.right_class,
                   "right side class for join");
  genc->add_option("--m-fraction", gen.m_fraction, "hub fraction for g-join");
  genc->add_option("--blocks", gen.blocks, "block count for block-cactus");
  genc->add_option("--block-kinds", gen.block_kinds, "clique|cycle|mixed");
  genc->add_option("--block-size-min", gen.block_min, "");
  genc->add_option("--block-size-max", gen.block_max, "");
  genc->add_option("--base-class", gen.base_class, "base class for add-vertex");
  genc->add_option("-o,--output", gen.output, "output file (stdout if absent)");

  // bench
  std::string classes_arg = "tournament", sizes_arg, csv_path;
  int seeds = 3;
  auto* bench = app.add_subcommand("bench", "time solvers over generated games");
  bench->add_option("--classes", classes_arg, "comma-separated class list");
  bench->add_option("--sizes", sizes_arg, "comma-separated vertex counts");
  bench->add_option("--seeds", seeds, "seeds per (class, size)");
  bench->add_option("--csv", csv_path, "CSV output file (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (solve->parsed())
      return run_solve(in_path, method, out_path, sidecar_path, verify, strict,
                       brute_cap);
    if (genc->parsed()) return run_gen(gen);
    if (bench->parsed()) {
      std::vector<std::string> classes;
      std::vector<int> sizes;
      std::stringstream cs(classes_arg);
      for (std::string item; std::getline(cs, item, ',');)
        if (!item.empty()) classes.push_back(item);
      std::stringstream ss(sizes_arg);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) sizes.push_back(std::stoi(item));
      return run_bench(classes, sizes, seeds, csv_path);
    }
  } catch (const ContractViolation& e) {
    std::cerr << "internal contract violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
