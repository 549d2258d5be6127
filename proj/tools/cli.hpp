#pragma once

// Command-line front end. Every subcommand builds a JSON record; --table renders
// the same record as aligned key/value rows. Exit codes: 0 all checks passed,
// 2 a check failed, 1 usage or configuration error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rsv/config.hpp"
#include "rsv/hive.hpp"
#include "rsv/json_io.hpp"
#include "rsv/lr.hpp"
#include "rsv/schur.hpp"
#include "rsv/sweeps.hpp"
#include "rsv/unramified.hpp"
#include "rsv/weights.hpp"

namespace rsv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct Outcome {
  Json report;
  bool passed = true;
};

struct Options {
  std::string config_path;
  bool table = false;
  bool json = false;
  int workers = 0;
  std::optional<std::uint64_t> seed;
  std::string caps;
  std::string Q, q;
  bool timings = false;

  std::string x, y, z, u, v, lam;
  std::size_t l = 0, m = 0, n = 0;
  int j = 0;
  std::size_t vars = 0;
  std::string eval;
  std::string method = "jt";
  int hive_n = 0;
  bool anti = false;
  std::string order = "diagonal";
  bool list = false;

  bool sweep = false;
  std::string target;
  int max_part = -1, max_gap = -1, max_size = -1, random = -1, draws = -1, points = -1, e = -1;
  long max_rank = -1, max_l = -1, min_l = -1, max_parts = -1, max_vars = -1;
  std::size_t big_m = 0, big_n = 0;
  bool symbolic = false;
  bool show_series = false;
};

namespace detail {

inline std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(Rational::parse(rsv::detail::trim(tok)));
  return out;
}

inline Json partitions_json(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

inline std::string render_scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool is_rational_object(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_rational_object(j)) {
    const std::string den = j["den"].get<std::string>();
    rows.emplace_back(prefix, j["num"].get<std::string>() + (den == "1" ? "" : "/" + den));
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      std::string s;
      for (const auto& e : j) s += (s.empty() ? "" : ", ") + render_scalar(e);
      rows.emplace_back(prefix, "[" + s + "]");
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(prefix, render_scalar(j));
  }
}

inline std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, val] : rows) out += k + std::string(width - k.size() + 2, ' ') + val + "\n";
  return out;
}

inline Json sweep_json(const SweepResult& r) {
  Json failed = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) failed.push_back(r.failures[i]);
  return Json{{"cases", r.cases}, {"failures", r.failures.size()}, {"failed", failed}};
}

inline int pick(int given, int fallback) { return given >= 0 ? given : fallback; }
inline std::size_t pick_size(long given, std::size_t fallback) {
  return given >= 0 ? static_cast<std::size_t>(given) : fallback;
}

}  // namespace detail

/// Resolved runtime settings: config file, then command-line overrides.
struct Settings {
  Config cfg;
  Rational Q;
  int workers = 1;
};

inline Settings resolve_settings(const Options& o) {
  Settings s;
  if (!o.config_path.empty()) {
    if (!std::filesystem::exists(o.config_path))
      throw ConfigurationError("config file not found: " + o.config_path);
    s.cfg = load_config(o.config_path);
  }
  if (!o.caps.empty()) s.cfg.caps = parse_caps(o.caps);
  if (o.seed) s.cfg.seed = *o.seed;
  if (o.workers > 0) s.cfg.workers = o.workers;
  if (!o.Q.empty() && !o.q.empty()) throw ConfigurationError("pass only one of --Q and --q");
  if (!o.Q.empty()) {
    s.cfg.Q = Rational::parse(o.Q);
    if (s.cfg.Q.sign() <= 0) throw ConfigurationError("Q must be positive");
  }
  if (!o.q.empty()) s.cfg.Q = rational_sqrt(Rational::parse(o.q));
  s.Q = s.cfg.Q;
  s.workers = s.cfg.workers;
  return s;
}

inline Outcome cmd_schur(const Options& o, const Settings& s) {
  if (o.lam.empty()) throw std::invalid_argument("schur: --lam is required");
  const bool weight_literal = o.lam.find('@') != std::string::npos || o.lam.find('-') != std::string::npos;
  Json rep;
  rep["lam"] = o.lam;
  LaurentPolynomial poly;
  bool structurally_zero = false;
  std::size_t vars = o.vars;
  if (weight_literal) {
    const GLWeight mu = GLWeight::parse(o.lam);
    if (vars == 0) vars = mu.rank();
    if (o.method != "jt") throw std::invalid_argument("schur: only the jt method accepts weights with negative entries");
    poly = schur_glweight(mu, vars);
  } else {
    const Partition p = Partition::parse(o.lam);
    if (vars == 0) vars = std::max<std::size_t>(p.length(), 1);
    if (o.method == "jt") {
      auto r = schur_jacobi_trudi(p, vars);
      poly = std::move(r.poly);
      structurally_zero = r.structurally_zero;
    } else if (o.method == "ssyt") {
      poly = schur_ssyt(p, vars, s.cfg.oracle_cap);
      structurally_zero = p.length() > vars;
    } else {
      throw std::invalid_argument("schur: --method must be jt or ssyt");
    }
  }
  rep["vars"] = vars;
  rep["method"] = o.method;
  rep["structurally_zero"] = structurally_zero;
  if (!o.eval.empty()) {
    const auto pt = detail::parse_point(o.eval);
    rep["point"] = to_json(pt);
    rep["value"] = to_json(poly.eval(pt));
  } else {
    rep["terms"] = poly.term_count();
    rep["poly"] = to_json(poly);
  }
  return {rep, true};
}

inline Outcome cmd_hive_count(const Options& o, const Settings& s) {
  const Partition x = Partition::parse(o.x), y = Partition::parse(o.y), z = Partition::parse(o.z);
  const int n = o.hive_n > 0 ? o.hive_n : default_hive_size(x, y, z);
  SearchOrder order = SearchOrder::diagonal;
  if (o.order == "row-major") order = SearchOrder::row_major;
  else if (o.order == "column-major") order = SearchOrder::column_major;
  else if (o.order != "diagonal") throw std::invalid_argument("--order must be diagonal, row-major or column-major");
  const HiveMode mode = o.anti ? HiveMode::anti_hive : HiveMode::hive;
  const HiveCount c = o.anti ? count_anti_hives(x, y, z, n, order, s.workers) : count_hives(x, y, z, n, order, s.workers);
  Json rep{{"count", c.count}, {"n", n}, {"mode", to_string(mode)}};
  rep["structurally_zero"] = c.structurally_zero;
  if (o.list && !c.structurally_zero) {
    Json hives = Json::array();
    for_each_hive(HiveBoundary(x, y, z, n), mode, [&](const Hive& h) { hives.push_back(to_json(h)); }, 1000);
    rep["hives"] = hives;
  }
  return {rep, true};
}

inline Outcome cmd_lr_coeff(const Options& o, const Settings& s) {
  const Partition x = Partition::parse(o.x), z = Partition::parse(o.z), u = Partition::parse(o.u);
  const int n = default_hive_size(x, z, u);
  const auto t = lr_coeff_tableaux(x, z, u);
  const auto h = count_hives(x, z, u, n, SearchOrder::diagonal, s.workers).count;
  const auto a = count_anti_hives(x, z, u, n, SearchOrder::diagonal, s.workers).count;
  const bool agree = t == h && h == a;
  Json rep{{"x", x.str()}, {"z", z.str()}, {"u", u.str()}, {"coeff", t}};
  rep["methods"] = Json{{"tableaux", t}, {"hive", h}, {"antihive", a}};
  rep["agree"] = agree;
  return {rep, agree};
}

inline Outcome cmd_tao(const Options& o, const Settings& s) {
  if (o.sweep) {
    const int max_part = detail::pick(o.max_part, 3);
    const std::size_t max_rank = detail::pick_size(o.max_rank, 2), max_l = detail::pick_size(o.max_l, 5);
    const int max_gap = detail::pick(o.max_gap, 3);
    const SweepResult r = tao_sweep(max_part, max_rank, max_l, max_gap, s.workers);
    Json rep = detail::sweep_json(r);
    rep["bounds"] = Json{{"max_part", max_part}, {"max_rank", max_rank}, {"max_l", max_l}, {"max_gap", max_gap}};
    return {rep, r.passed()};
  }
  const Partition x = Partition::parse(o.x), u = Partition::parse(o.u);
  const Partition y = Partition::parse(o.y), v = Partition::parse(o.v);
  const TaoReport r = verify_tao(x, u, y, v, {o.l, o.m, o.n});
  Json rep{{"x", x.str()}, {"u", u.str()}, {"y", y.str()}, {"v", v.str()}, {"l", o.l}, {"m", o.m}, {"n", o.n}};
  rep["v_tilde"] = r.v_tilde.str();
  rep["lambda"] = r.lambda.str();
  rep["lhs"] = r.lhs;
  rep["rhs"] = r.rhs;
  rep["witness_z"] = detail::partitions_json(r.witness_z);
  rep["swapped"] = r.swapped;
  rep["equal"] = r.equal;
  return {rep, r.equal};
}

inline Outcome cmd_reduction2(const Options& o, const Settings& s) {
  const Partition u = Partition::parse(o.u), v = Partition::parse(o.v);
  const Ranks r{o.l, o.m, o.n};
  Json rep{{"u", u.str()}, {"v", v.str()}, {"l", o.l}, {"m", o.m}, {"n", o.n}};
  const auto terms = reduction2_terms(u, v, r);
  Json tj = Json::array();
  for (const auto& t : terms)
    tj.push_back(Json{{"x", t.x.str()}, {"y", t.y.str()}, {"z", t.z.str()}, {"coeff", t.coeff}, {"weight", t.weight.str()}});
  rep["terms"] = tj;
  bool ok = true;
  if (o.symbolic) {
    ok = verify_reduction2_symbolic(u, v, r).equal;
    rep["symbolic"] = true;
  } else {
    std::mt19937_64 rng(s.cfg.seed);
    const int points = detail::pick(o.points, 10);
    for (int p = 0; p < points && ok; ++p) {
      std::vector<Rational> pt;
      for (std::size_t i = 0; i < o.l; ++i) pt.push_back(random_nonzero_rational(rng, s.cfg.satake));
      ok = verify_reduction2(u, v, r, pt).equal;
    }
    rep["points"] = points;
    rep["seed"] = s.cfg.seed;
  }
  rep["equal"] = ok;
  return {rep, ok};
}

inline Outcome cmd_unramified(const Options& o, const Settings& s) {
  const SeriesCaps caps = s.cfg.caps;
  Json cfg{{"l", o.l}, {"m", o.m}, {"n", o.n}, {"j", o.j}};
  if (o.symbolic) {
    const auto rep = verify_unramified_symbolic(o.l, o.m, o.n, caps, s.cfg.symbolic_max_vars);
    cfg["caps"] = Json::array({caps.cap1, caps.cap2});
    cfg["mode"] = "symbolic";
    Json out{{"config", cfg}, {"equal", rep.equal}};
    out["first_mismatch"] = rep.first_mismatch ? Json::array({rep.first_mismatch->first, rep.first_mismatch->second})
                                               : Json(nullptr);
    if (o.show_series) out["lhs"] = to_json(rep.lhs);
    return {out, rep.equal};
  }
  const int draws = detail::pick(o.draws, 1);
  cfg["k"] = static_cast<int>(o.l) - static_cast<int>(o.m) - static_cast<int>(o.n) - 1 - o.j;
  cfg["caps"] = Json::array({caps.cap1, caps.cap2});
  cfg["seed"] = s.cfg.seed;
  cfg["Q"] = to_json(s.Q);
  cfg["draws"] = draws;
  cfg["satake_range"] = Json{{"num_range", s.cfg.satake.num_range}, {"den_max", s.cfg.satake.den_max}};

  std::mt19937_64 rng(s.cfg.seed);
  Json satake = Json::array();
  Json timings = Json::array();
  bool equal = true, whittaker_equal = true;
  Json mismatch = nullptr;
  Json series = Json::array();
  for (int d = 0; d < draws; ++d) {
    const SatakeData data = random_satake(o.l, o.m, o.n, o.j, s.Q, rng, s.cfg.satake);
    satake.push_back(Json{{"alpha", to_json(data.alpha)}, {"beta1", to_json(data.beta1)}, {"beta2", to_json(data.beta2)}});
    const auto rep = verify_unramified(data, caps, s.workers);
    const bool w_ok = zeta_lhs_series_whittaker(data, caps, s.workers) == rep.lhs;
    whittaker_equal = whittaker_equal && w_ok;
    if (!rep.equal && equal) {
      equal = false;
      mismatch = Json{{"draw", d}, {"t1", rep.first_mismatch->first}, {"t2", rep.first_mismatch->second}};
    }
    if (o.show_series) series.push_back(Json{{"lhs", to_json(rep.lhs)}, {"rhs", to_json(rep.rhs)}});
    timings.push_back(Json{{"lhs_seconds", rep.lhs_seconds}, {"rhs_seconds", rep.rhs_seconds}});
  }
  Json out{{"config", cfg}, {"satake", satake}, {"equal", equal}, {"first_mismatch", mismatch}};
  out["whittaker_route_equal"] = whittaker_equal;
  if (o.show_series) out["series"] = series;
  if (o.timings) out["timings"] = timings;
  return {out, equal && whittaker_equal};
}

inline Outcome cmd_cauchy(const Options& o, const Settings& s) {
  if (o.big_m == 0 || o.big_n == 0) throw std::invalid_argument("cauchy: --M and --N must be positive");
  const int e = detail::pick(o.e, 2);
  const int draws = detail::pick(o.draws, 1);
  std::mt19937_64 rng(s.cfg.seed);
  bool ok = true;
  Json values = Json::array();
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < o.big_m; ++i) a.push_back(random_nonzero_rational(rng, s.cfg.satake));
    for (std::size_t i = 0; i < o.big_n; ++i) b.push_back(random_nonzero_rational(rng, s.cfg.satake));
    const Rational c = trace_sym_cauchy(a, b, e), sc = trace_sym_schur(a, b, e);
    ok = ok && c == sc;
    values.push_back(Json{{"alpha", to_json(a)}, {"beta", to_json(b)}, {"cauchy", to_json(c)}, {"schur", to_json(sc)}});
  }
  Json rep{{"M", o.big_m}, {"N", o.big_n}, {"e", e}, {"seed", s.cfg.seed}, {"draws", values}, {"equal", ok}};
  return {rep, ok};
}

inline Outcome cmd_delta(const Options& o, const Settings& s) {
  const Partition x = Partition::parse(o.x.empty() ? "[]" : o.x), y = Partition::parse(o.y.empty() ? "[]" : o.y);
  const DeltaBookkeeping b = delta_bookkeeping(x, y, o.l, o.m, o.n, o.j);
  const bool ok = delta_cancellation_check(x, y, o.l, o.m, o.n, o.j, s.Q);
  Json rep{{"x", x.str()}, {"y", y.str()}, {"l", o.l}, {"m", o.m}, {"n", o.n}, {"j", o.j}};
  rep["q_half_exponents"] = Json{{"whittaker_l", b.whittaker_l}, {"whittaker_m", b.whittaker_m},
                                 {"whittaker_n", b.whittaker_n},  {"measure", b.measure},
                                 {"det_shifts", b.det_shifts},    {"t_normalization", b.t_normalization},
                                 {"residual", b.residual()}};
  rep["t1_degree"] = b.t1_degree;
  rep["t2_degree"] = b.t2_degree;
  rep["cancels"] = ok;
  return {rep, ok};
}

inline Outcome cmd_dual(const Options& o, const Settings& s) {
  const Partition v = Partition::parse(o.v);
  const int points = detail::pick(o.points, 10);
  std::mt19937_64 rng(s.cfg.seed);
  bool ok = true;
  for (int p = 0; p < points && ok; ++p) {
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < o.l; ++i) pt.push_back(random_nonzero_rational(rng, s.cfg.satake));
    ok = schur_dual_check(v, o.l, pt);
  }
  Json rep{{"v", v.str()}, {"l", o.l}, {"points", points}, {"seed", s.cfg.seed}, {"equal", ok}};
  return {rep, ok};
}

inline Outcome cmd_sweep(const Options& o, const Settings& s, std::ostream& err) {
  auto progress = [&](const std::string& msg) { err << msg << "\n"; };
  SweepResult r;
  Json bounds;
  if (o.target == "tao") {
    Options t = o;
    t.sweep = true;
    return cmd_tao(t, s);
  } else if (o.target == "lr") {
    const int max_size = detail::pick(o.max_size, 10);
    const std::size_t max_parts = detail::pick_size(o.max_parts, 4);
    const int random = detail::pick(o.random, 500);
    auto triples = lr_exhaustive_triples(max_size, max_parts);
    progress("lr: " + std::to_string(triples.size()) + " exhaustive triples");
    const auto extra = lr_random_triples(static_cast<std::size_t>(random), s.cfg.seed, max_size);
    triples.insert(triples.end(), extra.begin(), extra.end());
    r = lr_sweep(triples, s.workers);
    bounds = Json{{"max_size", max_size}, {"max_parts", max_parts}, {"random", random}, {"seed", s.cfg.seed}};
  } else if (o.target == "unramified") {
    const std::size_t min_l = detail::pick_size(o.min_l, 2), max_l = detail::pick_size(o.max_l, 5);
    const int draws = detail::pick(o.draws, 5);
    r = unramified_sweep(min_l, max_l, s.cfg.caps, draws, s.cfg.seed, s.Q, s.cfg.satake, s.workers, progress);
    bounds = Json{{"min_l", min_l},
                  {"max_l", max_l},
                  {"caps", Json::array({s.cfg.caps.cap1, s.cfg.caps.cap2})},
                  {"draws", draws},
                  {"seed", s.cfg.seed}};
  } else if (o.target == "cauchy") {
    const std::size_t mm = o.big_m ? o.big_m : 4, nn = o.big_n ? o.big_n : 4;
    const int e = detail::pick(o.e, 8), draws = detail::pick(o.draws, 50);
    r = cauchy_sweep(mm, nn, e, draws, s.cfg.seed, s.cfg.satake);
    bounds = Json{{"max_M", mm}, {"max_N", nn}, {"max_e", e}, {"draws", draws}, {"seed", s.cfg.seed}};
  } else if (o.target == "delta") {
    const std::size_t max_l = detail::pick_size(o.max_l, 5);
    const int max_size = detail::pick(o.max_size, 4);
    r = delta_sweep(max_l, max_size, s.Q);
    bounds = Json{{"max_l", max_l}, {"max_size", max_size}};
  } else if (o.target == "schur") {
    const int max_size = detail::pick(o.max_size, 8);
    const std::size_t max_vars = detail::pick_size(o.max_vars, 4);
    r = schur_sweep(max_size, max_vars, s.cfg.oracle_cap);
    bounds = Json{{"max_size", max_size}, {"max_vars", max_vars}};
  } else if (o.target == "dual") {
    const int max_size = detail::pick(o.max_size, 6);
    const std::size_t max_l = detail::pick_size(o.max_l, 5);
    const int points = detail::pick(o.points, 20);
    r = dual_sweep(max_size, max_l, points, s.cfg.seed, s.cfg.satake);
    bounds = Json{{"max_size", max_size}, {"max_l", max_l}, {"points", points}, {"seed", s.cfg.seed}};
  } else {
    throw std::invalid_argument("sweep: unknown target '" + o.target +
                                "' (tao, lr, unramified, cauchy, delta, schur, dual)");
  }
  Json rep{{"target", o.target}};
  rep.update(detail::sweep_json(r));
  rep["bounds"] = bounds;
  return {rep, r.passed()};
}

/// Writes the report and maps the outcome to an exit code.
inline int emit(const Outcome& res, bool table, std::ostream& out) {
  if (table) out << detail::render_table(res.report);
  else out << res.report.dump(2) << "\n";
  return res.passed ? kExitPass : kExitCheckFailed;
}

/// Parses args (without the program name) and runs the selected subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for LR coefficients, hives, Schur identities and the unramified zeta series", "rsv"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;

  app.add_option("--config", o.config_path, "flat key = value configuration file");
  auto* json_flag = app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--table", o.table, "aligned table output")->excludes(json_flag);
  app.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--caps", o.caps, "series caps A,B");
  app.add_option("--Q", o.Q, "base Q = q^(1/2), a positive rational");
  app.add_option("--q", o.q, "residue field size q; must be a rational square");
  app.add_flag("--timings", o.timings, "include wall-clock timings (breaks byte-identical reports)");

  auto partition_opts = [&](CLI::App* c, std::initializer_list<std::pair<const char*, std::string*>> names) {
    for (const auto& [name, target] : names) c->add_option(name, *target, "partition literal, e.g. [2,1]");
  };
  auto rank_opts = [&](CLI::App* c, bool with_j) {
    c->add_option("--l", o.l, "rank of GL_l")->required();
    c->add_option("--m", o.m, "rank of GL_m")->required();
    c->add_option("--n", o.n, "rank of GL_n")->required();
    if (with_j) c->add_option("--j", o.j, "0 <= j <= l-m-n-1");
  };

  auto* schur = app.add_subcommand("schur", "Schur polynomial of a partition or dominant weight");
  schur->add_option("--lam", o.lam, "partition [2,1] or weight [1,0,-1]@3")->required();
  schur->add_option("--vars", o.vars, "number of variables");
  schur->add_option("--eval", o.eval, "comma-separated rational point");
  schur->add_option("--method", o.method, "jt | ssyt");

  auto* hive = app.add_subcommand("hive", "hive model");
  hive->require_subcommand(1);
  auto* hive_count = hive->add_subcommand("count", "count hives with boundary (x, y, z)");
  partition_opts(hive_count, {{"--x", &o.x}, {"--y", &o.y}, {"--z", &o.z}});
  hive_count->add_option("--size", o.hive_n, "hive size n (default: smallest that fits)");
  hive_count->add_flag("--anti", o.anti, "count anti-hives");
  hive_count->add_option("--order", o.order, "diagonal | row-major | column-major");
  hive_count->add_flag("--list", o.list, "also list the hives (up to 1000)");

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->require_subcommand(1);
  auto* lr_coeff = lr->add_subcommand("coeff", "c^u_{x,z} by tableaux, hives and anti-hives");
  partition_opts(lr_coeff, {{"--x", &o.x}, {"--z", &o.z}, {"--u", &o.u}});

  auto add_tao = [&](CLI::App* parent) {
    auto* tao = parent->add_subcommand("tao", "verify c^lambda_{v~,u} = sum_z c^u_{x,z} c^v_{y,z}");
    partition_opts(tao, {{"--x", &o.x}, {"--u", &o.u}, {"--y", &o.y}, {"--v", &o.v}});
    tao->add_option("--l", o.l);
    tao->add_option("--m", o.m);
    tao->add_option("--n", o.n);
    tao->add_flag("--sweep", o.sweep, "exhaustive sweep instead of a single case");
    tao->add_option("--max-part", o.max_part);
    tao->add_option("--max-rank", o.max_rank);
    tao->add_option("--max-l", o.max_l);
    tao->add_option("--max-gap", o.max_gap);
    return tao;
  };
  auto* lr_tao = add_tao(lr);
  auto* lr_red = lr->add_subcommand("reduction2", "S_(u,0) S_(0,v*) = sum c c S_(x,0,y*)");
  partition_opts(lr_red, {{"--u", &o.u}, {"--v", &o.v}});
  rank_opts(lr_red, false);
  lr_red->add_option("--points", o.points, "random evaluation points");
  lr_red->add_flag("--symbolic", o.symbolic, "compare as Laurent polynomials");

  auto* verify = app.add_subcommand("verify", "identity verifiers");
  verify->require_subcommand(1);
  auto* v_unr = verify->add_subcommand("unramified", "zeta series against the L-factor ratio");
  rank_opts(v_unr, true);
  v_unr->add_option("--draws", o.draws, "random Satake draws");
  v_unr->add_flag("--symbolic", o.symbolic, "keep Satake parameters as variables");
  v_unr->add_flag("--show-series", o.show_series, "include the series coefficients");
  auto* v_cauchy = verify->add_subcommand("cauchy", "Tr Sym^e(a (x) b) two ways");
  v_cauchy->add_option("--M", o.big_m)->required();
  v_cauchy->add_option("--N", o.big_n)->required();
  v_cauchy->add_option("--e", o.e);
  v_cauchy->add_option("--draws", o.draws);
  auto* v_delta = verify->add_subcommand("delta", "modulus-character cancellation");
  partition_opts(v_delta, {{"--x", &o.x}, {"--y", &o.y}});
  rank_opts(v_delta, true);
  auto* v_dual = verify->add_subcommand("dual", "S_(v,0)(a^-1) = S_(0,v*)(a)");
  partition_opts(v_dual, {{"--v", &o.v}});
  v_dual->add_option("--l", o.l)->required();
  v_dual->add_option("--points", o.points);
  auto* v_tao = add_tao(verify);

  auto* sweep = app.add_subcommand("sweep", "acceptance-scale sweeps");
  sweep->add_option("target", o.target, "tao | lr | unramified | cauchy | delta | schur | dual")->required();
  sweep->add_option("--max-part", o.max_part);
  sweep->add_option("--max-rank", o.max_rank);
  sweep->add_option("--max-l", o.max_l);
  sweep->add_option("--min-l", o.min_l);
  sweep->add_option("--max-gap", o.max_gap);
  sweep->add_option("--max-size", o.max_size);
  sweep->add_option("--max-parts", o.max_parts);
  sweep->add_option("--max-vars", o.max_vars);
  sweep->add_option("--random", o.random);
  sweep->add_option("--draws", o.draws);
  sweep->add_option("--points", o.points);
  sweep->add_option("--M", o.big_m);
  sweep->add_option("--N", o.big_n);
  sweep->add_option("--e", o.e);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Settings s = resolve_settings(o);
    Outcome res;
    if (schur->parsed()) res = cmd_schur(o, s);
    else if (hive_count->parsed()) res = cmd_hive_count(o, s);
    else if (lr_coeff->parsed()) res = cmd_lr_coeff(o, s);
    else if (lr_tao->parsed() || v_tao->parsed()) res = cmd_tao(o, s);
    else if (lr_red->parsed()) res = cmd_reduction2(o, s);
    else if (v_unr->parsed()) res = cmd_unramified(o, s);
    else if (v_cauchy->parsed()) res = cmd_cauchy(o, s);
    else if (v_delta->parsed()) res = cmd_delta(o, s);
    else if (v_dual->parsed()) res = cmd_dual(o, s);
    else if (sweep->parsed()) res = cmd_sweep(o, s, err);
    else throw std::invalid_argument("no subcommand");

    return emit(res, o.table, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rsv::cli
