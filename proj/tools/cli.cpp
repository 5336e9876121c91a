/*
 * Copyright 2026 The fcg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "fcg/arena.hpp"
#include "fcg/cycle_property.hpp"
#include "fcg/decomposition.hpp"
#include "fcg/fcg_solver.hpp"
#include "fcg/gallery.hpp"
#include "fcg/infinite_games.hpp"
#include "fcg/reductions.hpp"
#include "fcg/strategy.hpp"

namespace fcg::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct LoadedArena {
  Arena arena;
  std::optional<std::string> suggested_property;
};

// A readable file wins over a gallery name.
LoadedArena load_arena(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return {parse_arena(read_file(spec)), std::nullopt};
  if (auto g = find_gallery(spec)) return {g->get().arena, g->get().property};
  throw InputError("'" + spec + "' is neither an arena file nor a unique gallery name");
}

CycleProperty property_for(const LoadedArena& la, const std::string& text) {
  if (!text.empty()) return CycleProperty::parse(text);
  if (la.suggested_property) return CycleProperty::parse(*la.suggested_property);
  throw InputError("--property is required");
}

json names(const Arena& a, std::span<const VertexId> vs) {
  json arr = json::array();
  for (VertexId v : vs) arr.push_back(a.name(v));
  return arr;
}

json regions_json(const Arena& a, const Regions& r) {
  return {{"0", names(a, r[Player::zero])}, {"1", names(a, r[Player::one])}};
}

json strategy_json(const Arena& a, const std::optional<MemorylessStrategy>& s) {
  if (!s) return nullptr;
  json obj = json::object();
  for (VertexId v : a.vertices_of(s->player)) obj[a.name(v)] = a.name((*s)(v));
  return obj;
}

json word_json(const LabelWord& w) {
  json arr = json::array();
  for (const auto& l : w) arr.push_back(l.to_string());
  return arr;
}

json closure_json(const ClosureVerdict& v) {
  json j = {{"status", std::string(to_string(v.status))}, {"trials", v.trials}};
  if (v.witness) j["witness"] = json::array({word_json(v.witness->first), word_json(v.witness->second)});
  return j;
}

json lasso_json(const Arena& a, const Lasso& l) {
  return {{"prefix", names(a, l.prefix)}, {"loop", names(a, l.loop)}};
}

json cycles_json(const Arena& a, const std::vector<CycleRecord>& cycles) {
  json arr = json::array();
  for (const auto& c : cycles)
    arr.push_back({{"edges", format_edges(a, c.edges)}, {"labels", word_json(c.labels)}});
  return arr;
}

std::string_view hypothesis_name(HypothesisAnswer h) {
  switch (h) {
    case HypothesisAnswer::yes: return "yes";
    case HypothesisAnswer::no: return "no";
    case HypothesisAnswer::unknown: return "unknown";
  }
  return "?";
}

VertexId start_of(const Arena& a, const std::string& name) { return a.id(name); }

std::vector<VertexId> ids_of(const Arena& a, const std::vector<std::string>& vs) {
  std::vector<VertexId> out;
  for (const auto& v : vs) out.push_back(a.id(v));
  return out;
}

// Options shared by the subcommands; each subcommand registers the ones it uses.
struct Options {
  std::string arena;
  std::string property;
  std::string game = "fcg";
  std::string start;
  std::string input;
  std::string name;
  std::optional<std::uint64_t> credit;
  bool unsafe_credit = false;
  bool assert_positive = false;
  bool emit = false;
  bool as_json = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::size_t max_len = 8;
  std::size_t kmax = 3;
  int player = -1;
  std::vector<std::string> play;
  std::vector<std::string> prefix;
  std::vector<std::string> loop;
};

struct Outcome {
  json report;
  bool negative = false;
  std::optional<std::string> raw;  // printed verbatim instead of the report
};

WinningCondition condition_for(const Options& o, const Arena& a) {
  if (o.credit && !o.unsafe_credit)
    throw InputError("--credit overrides the registered credit W(|V|-1); pass --unsafe-credit to accept");
  if (o.game == "energy") return WinningCondition::energy(o.credit.value_or(sufficient_energy_credit(a)));
  if (o.game == "energyparity") {
    if (!o.credit) throw InputError("energyparity needs --credit");
    return WinningCondition::energy_parity(*o.credit);
  }
  if (o.credit) throw InputError("--credit applies to energy games only");
  return WinningCondition::parse(o.game);
}

Outcome cmd_solve(const Options& o) {
  auto la = load_arena(o.arena);
  const Arena& a = la.arena;
  json j = {{"schema", 1}, {"game", o.game}};
  std::optional<VertexId> start;
  if (!o.start.empty()) start = start_of(a, o.start);

  Regions regions;
  if (o.game == "fcg") {
    auto p = property_for(la, o.property);
    j["property"] = p.to_string();
    regions = fcg_regions(a, p);
  } else {
    auto w = condition_for(o, a);
    TransferOptions topts;
    topts.allow_unregistered_credit = o.unsafe_credit;
    auto t = solve_infinite_via_transfer(a, w, topts);
    regions = t.regions;
    j["condition"] = w.to_string();
    j["property"] = t.property.to_string();
    j["registered"] = t.registered;
    j["strategies"] = {{"0", strategy_json(a, t.strategies[0])},
                       {"1", strategy_json(a, t.strategies[1])}};
    bool verified = true;
    for (Player pl : {Player::zero, Player::one}) {
      const auto& s = t.strategies[index(pl)];
      for (VertexId v : regions[pl])
        verified = verified && s && verify_memoryless_wins_infinite(a, w, *s, v);
    }
    j["verified"] = verified;
  }
  j["regions"] = regions_json(a, regions);
  bool negative = false;
  if (start) {
    bool zero = std::binary_search(regions[Player::zero].begin(), regions[Player::zero].end(), *start);
    j["start"] = a.name(*start);
    j["winner"] = zero ? 0 : 1;
    negative = !zero;
  }
  return {j, negative, std::nullopt};
}

Outcome cmd_decompose(const Options& o) {
  auto la = load_arena(o.arena);
  const Arena& a = la.arena;
  std::ostringstream text;
  json j = {{"schema", 1}};
  if (!o.loop.empty()) {
    Lasso l{ids_of(a, o.prefix), ids_of(a, o.loop)};
    auto d = decompose_lasso(a, l);
    for (const auto& c : d.transient) text << format_edges(a, c.edges) << "\n";
    for (const auto& c : d.periodic) text << "periodic: " << format_edges(a, c.edges) << "\n";
    text << "residual: " << format_edges(a, d.tail_residual.stack()) << "\n";
    j["lasso"] = lasso_json(a, l);
    j["transient"] = cycles_json(a, d.transient);
    j["periodic"] = cycles_json(a, d.periodic);
    j["residual"] = format_edges(a, d.tail_residual.stack());
  } else {
    if (o.play.empty()) throw InputError("decompose needs --play or --loop");
    auto play = ids_of(a, o.play);
    auto d = decompose_prefix(a, play);
    for (const auto& c : d.cycles) text << format_edges(a, c.edges) << "\n";
    text << "residual: " << format_edges(a, d.residual.stack()) << "\n";
    j["cycles"] = cycles_json(a, d.cycles);
    j["residual"] = format_edges(a, d.residual.stack());
  }
  if (o.as_json) return {j, false, std::nullopt};
  return {j, false, text.str()};
}

json player_json(const Arena& a, const PlayerDeterminacy& d) {
  return {{"winning_region", names(a, d.winning_region)},
          {"pointwise_region", names(a, d.pointwise_region)},
          {"pointwise", d.pointwise},
          {"uniform", d.uniform},
          {"uniform_strategy", strategy_json(a, d.uniform_strategy)}};
}

Outcome cmd_determinacy(const Options& o) {
  auto la = load_arena(o.arena);
  const Arena& a = la.arena;
  auto r = classify_determinacy(a, property_for(la, o.property));
  json j = {{"schema", 1},
            {"property", r.property},
            {"determined", r.determined},
            {"pointwise_memoryless_determined", r.pointwise_memoryless_determined},
            {"uniform_memoryless_determined", r.uniform_memoryless_determined},
            {"players", {{"0", player_json(a, r[Player::zero])}, {"1", player_json(a, r[Player::one])}}}};
  return {j, !r.uniform_memoryless_determined, std::nullopt};
}

Outcome cmd_memory(const Options& o) {
  auto la = load_arena(o.arena);
  const Arena& a = la.arena;
  auto p = property_for(la, o.property);
  if (o.start.empty()) throw InputError("memory needs --start");
  VertexId start = start_of(a, o.start);
  Player pl = o.player < 0 ? fcg_winner(a, p, start) : player_from_index(o.player);
  auto r = min_moore_memory(a, p, pl, start, o.kmax);
  json j = {{"schema", 1},   {"property", p.to_string()}, {"player", index(pl)},
            {"start", o.start}, {"kmax", o.kmax},          {"exceeds_bound", r.exceeds_bound()}};
  j["minimal"] = r.minimal ? json(*r.minimal) : json(nullptr);
  if (r.machine) {
    const auto& m = *r.machine;
    json update = json::object(), move = json::object();
    for (VertexId v = 0; v < a.size(); ++v) {
      json us = json::array(), ms = json::array();
      for (std::size_t k = 0; k < m.memory_size; ++k) {
        us.push_back(m.delta(v, k));
        ms.push_back(m.rho(v, k) == kNoVertex ? json(nullptr) : json(a.name(m.rho(v, k))));
      }
      update[a.name(v)] = us;
      if (a.owner(v) == pl) move[a.name(v)] = ms;
    }
    j["machine"] = {{"memory_size", m.memory_size}, {"initial", m.initial}, {"update", update}, {"move", move}};
  }
  return {j, r.exceeds_bound(), std::nullopt};
}

Outcome cmd_closure(const Options& o) {
  if (o.property.empty()) throw InputError("closure needs --property");
  auto p = CycleProperty::parse(o.property);
  SamplingOptions s;
  s.seed = o.seed;
  s.max_len = o.max_len;
  if (o.budget) s.budget = o.budget;
  auto h = satisfies_char_hypothesis(p, s);
  json j = {{"schema", 1},
            {"property", p.to_string()},
            {"seed", s.seed},
            {"budget", s.budget},
            {"max_len", s.max_len},
            {"cyclic", closure_json(h.cyclic)},
            {"concat", closure_json(h.concat)},
            {"complement_concat", closure_json(h.complement_concat)},
            {"hypothesis", std::string(hypothesis_name(h.answer))}};
  return {j, h.answer != HypothesisAnswer::yes, std::nullopt};
}

LassoSearchOptions lasso_options(const Options& o) {
  LassoSearchOptions l;
  l.seed = o.seed;
  if (o.budget) l.budget = o.budget;
  return l;
}

Outcome cmd_check_greedy(const Options& o) {
  auto la = load_arena(o.arena);
  const Arena& a = la.arena;
  if (o.game == "fcg") throw InputError("check-greedy needs --game with an infinite-duration condition");
  auto w = condition_for(o, a);
  auto p = o.property.empty() ? associated_property(w, a) : CycleProperty::parse(o.property);
  auto opts = lasso_options(o);
  auto r = check_greedy_bounded(a, w, p, opts);
  json j = {{"schema", 1},          {"condition", w.to_string()}, {"property", p.to_string()},
            {"seed", opts.seed},    {"budget", opts.budget},      {"lassos_checked", r.lassos_checked},
            {"verdict", r.witness ? "counterexampleFound" : "noCounterexample"}};
  if (r.witness) j["witness"] = lasso_json(a, *r.witness);
  return {j, r.witness.has_value(), std::nullopt};
}

Outcome cmd_check_unambiguous(const Options& o) {
  auto la = load_arena(o.arena);
  const Arena& a = la.arena;
  auto p = property_for(la, o.property);
  auto opts = lasso_options(o);
  auto r = check_unambiguous_bounded(a, p, opts);
  json j = {{"schema", 1},       {"property", p.to_string()}, {"seed", opts.seed},
            {"budget", opts.budget}, {"lassos_checked", r.lassos_checked},
            {"verdict", r.witness ? "witnessFound" : "noWitness"}};
  if (r.witness) j["witness"] = lasso_json(a, *r.witness);
  return {j, r.witness.has_value(), std::nullopt};
}

Outcome cmd_gg(const Options& o) {
  auto g = parse_geography(read_file(o.input));
  auto direct = solve_gg_direct(g);
  auto red = gg_to_fcg(g);
  auto via_fcg = fcg_winner(red.arena, red.property, red.start);
  auto text = serialize_arena(red.arena);
  json j = {{"schema", 1},
            {"start", g.names[g.start]},
            {"winner", std::string(to_string(direct))},
            {"fcg_start", red.arena.name(red.start)},
            {"fcg_property", red.property.to_string()},
            {"fcg_winner", index(via_fcg)},
            {"arena", text}};
  if (o.emit) return {j, false, text};
  return {j, direct != GeographyWinner::mover, std::nullopt};
}

Outcome cmd_gallery(const Options& o) {
  if (o.name.empty()) {
    json entries = json::array();
    for (const auto& e : gallery())
      entries.push_back({{"name", e.name}, {"property", e.property}, {"note", e.note},
                         {"vertices", e.arena.size()}, {"edges", e.arena.edge_count()}});
    return {{{"schema", 1}, {"entries", entries}}, false, std::nullopt};
  }
  auto e = find_gallery(o.name);
  if (!e) throw InputError("no unique gallery entry '" + o.name + "'");
  const auto& entry = e->get();
  auto text = serialize_arena(entry.arena);
  if (o.emit) return {{}, false, text};
  return {{{"schema", 1}, {"name", entry.name}, {"property", entry.property},
           {"note", entry.note}, {"arena", text}},
          false, std::nullopt};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-cycle games: solving, decomposition, determinacy and transfer"};
  app.require_subcommand(1);
  Options o;

  auto arena_opt = [&](CLI::App* c) {
    c->add_option("--arena", o.arena, "arena file or gallery name (prefix allowed)")->required();
  };
  auto property_opt = [&](CLI::App* c) {
    c->add_option("--property", o.property, "evenlen, parity, energy, goodforenergy, "
                                            "meanpayoff:n/d[:atmost], maxfirst, endszero; not: prefix");
  };
  auto credit_opts = [&](CLI::App* c) {
    c->add_option("--credit", o.credit, "energy initial credit (default W(|V|-1))");
    c->add_flag("--unsafe-credit", o.unsafe_credit, "accept a credit other than W(|V|-1)");
  };
  auto search_opts = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "random trials");
    c->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };
  auto assert_opt = [&](CLI::App* c) {
    c->add_flag("--assert", o.assert_positive, "exit 1 on a negative verdict");
  };

  std::map<CLI::App*, Outcome (*)(const Options&)> handlers;

  auto* solve = app.add_subcommand("solve", "winning regions of a first-cycle or infinite game");
  arena_opt(solve);
  property_opt(solve);
  solve->add_option("--game", o.game, "fcg | parity | meanpayoff:<nu> | energy | energyparity")
      ->capture_default_str();
  solve->add_option("--start", o.start, "start vertex");
  credit_opts(solve);
  assert_opt(solve);
  handlers[solve] = cmd_solve;

  auto* decompose = app.add_subcommand("decompose", "cycles-decomposition of a play or lasso");
  arena_opt(decompose);
  decompose->add_option("--play", o.play, "finite play as vertex names");
  decompose->add_option("--prefix", o.prefix, "lasso prefix");
  decompose->add_option("--loop", o.loop, "lasso loop");
  decompose->add_flag("--json", o.as_json, "JSON instead of text");
  handlers[decompose] = cmd_decompose;

  auto* determinacy = app.add_subcommand("determinacy", "memoryless determinacy report");
  arena_opt(determinacy);
  property_opt(determinacy);
  assert_opt(determinacy);
  handlers[determinacy] = cmd_determinacy;

  auto* memory = app.add_subcommand("memory", "smallest winning Moore machine");
  arena_opt(memory);
  property_opt(memory);
  memory->add_option("--start", o.start, "start vertex")->required();
  memory->add_option("--kmax", o.kmax, "largest memory size tried")->capture_default_str();
  memory->add_option("--player", o.player, "0 or 1 (default: the winner from start)")
      ->check(CLI::IsMember({0, 1}));
  assert_opt(memory);
  handlers[memory] = cmd_memory;

  auto* closure = app.add_subcommand("closure", "closure checks for a cycle property");
  property_opt(closure);
  search_opts(closure);
  closure->add_option("--max-len", o.max_len, "longest sampled word")->capture_default_str();
  assert_opt(closure);
  handlers[closure] = cmd_closure;

  auto* greedy = app.add_subcommand("check-greedy", "search for a lasso refuting greediness");
  arena_opt(greedy);
  property_opt(greedy);
  greedy->add_option("--game", o.game, "parity | meanpayoff:<nu> | energy")->required();
  credit_opts(greedy);
  search_opts(greedy);
  assert_opt(greedy);
  handlers[greedy] = cmd_check_greedy;

  auto* unambiguous = app.add_subcommand("check-unambiguous", "search for a lasso in EAC(p) and EAC(not p)");
  arena_opt(unambiguous);
  property_opt(unambiguous);
  search_opts(unambiguous);
  assert_opt(unambiguous);
  handlers[unambiguous] = cmd_check_unambiguous;

  auto* gg = app.add_subcommand("gg", "solve generalised geography directly and via its first-cycle game");
  gg->add_option("--input", o.input, "geography file")->required();
  gg->add_flag("--emit", o.emit, "print only the reduced arena");
  assert_opt(gg);
  handlers[gg] = cmd_gg;

  auto* gal = app.add_subcommand("gallery", "built-in arenas");
  gal->add_option("--name", o.name, "entry name or unique prefix");
  gal->add_flag("--emit", o.emit, "print the arena file");
  handlers[gal] = cmd_gallery;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      Outcome r = handlers.at(sub)(o);
      if (r.raw)
        out << *r.raw;
      else
        out << r.report.dump() << "\n";
      return o.assert_positive && r.negative ? kExitNegative : kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fcg::cli
