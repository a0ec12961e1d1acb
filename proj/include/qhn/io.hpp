#pragma once

// Problem files (JSON) and machine-readable reports for the command-line
// frontend. Reports are built as JSON first; the text format is rendered from
// the same document, so both outputs carry identical content.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qhn/curves.hpp"
#include "qhn/error.hpp"
#include "qhn/kempf.hpp"
#include "qhn/linalg.hpp"
#include "qhn/quiver.hpp"
#include "qhn/rational.hpp"

namespace qhn::io {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kContradiction = 3,
  kBudget = 4,
};

struct Problem {
  Representation rep;
  StabilityParams params;
  json canonical;  // normalized input: entries reduced mod p, matrices keyed by arrow index
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw InvalidArgument("schema error at " + path + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "/" + key, "missing field");
  return *it;
}

inline long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<long long>();
}

inline std::vector<long long> per_vertex(const json& j, const std::vector<std::string>& vertices,
                                         const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object keyed by vertex");
  if (j.size() != vertices.size()) {
    schema_error(path, "expected exactly the " + std::to_string(vertices.size()) + " quiver vertices as keys");
  }
  std::vector<long long> out;
  for (const auto& v : vertices) {
    auto it = j.find(v);
    if (it == j.end()) schema_error(path + "/" + v, "missing vertex");
    out.push_back(integer(*it, path + "/" + v));
  }
  return out;
}

}  // namespace detail

inline Problem parse_problem(const json& input) {
  using detail::field;
  using detail::schema_error;
  if (!input.is_object()) schema_error("/", "expected a JSON object");

  const long long p = detail::integer(field(field(input, "field", ""), "p", "/field"), "/field/p");
  std::optional<PrimeField> pf;
  try {
    pf.emplace(static_cast<int>(p));
  } catch (const InvalidArgument& e) {
    schema_error("/field/p", e.what());
  }

  const json& jq = field(input, "quiver", "");
  const json& jv = field(jq, "vertices", "/quiver");
  if (!jv.is_array()) schema_error("/quiver/vertices", "expected an array of strings");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_string()) schema_error("/quiver/vertices/" + std::to_string(i), "expected a string");
    vertices.push_back(jv[i].get<std::string>());
  }
  const json& ja = field(jq, "arrows", "/quiver");
  if (!ja.is_array()) schema_error("/quiver/arrows", "expected an array of [source, target] pairs");
  std::vector<std::pair<std::string, std::string>> arrows;
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string path = "/quiver/arrows/" + std::to_string(i);
    if (!ja[i].is_array() || ja[i].size() != 2 || !ja[i][0].is_string() || !ja[i][1].is_string()) {
      schema_error(path, "expected [source, target] vertex names");
    }
    arrows.emplace_back(ja[i][0].get<std::string>(), ja[i][1].get<std::string>());
  }
  std::optional<Quiver> quiver;
  try {
    quiver.emplace(vertices, arrows);
  } catch (const InvalidArgument& e) {
    schema_error("/quiver", e.what());
  }

  const json& jr = field(input, "representation", "");
  const auto dims = detail::per_vertex(field(jr, "dims", "/representation"), vertices,
                                       "/representation/dims");
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (dims[v] < 0) schema_error("/representation/dims/" + vertices[v], "negative dimension");
  }
  const json& jm = field(jr, "matrices", "/representation");
  auto matrix_entry = [&](std::size_t a) -> const json& {
    const std::string key = std::to_string(a);
    if (jm.is_array()) {
      if (a >= jm.size()) schema_error("/representation/matrices/" + key, "missing matrix");
      return jm[a];
    }
    return field(jm, key, "/representation/matrices");
  };
  if (!jm.is_array() && !jm.is_object()) {
    schema_error("/representation/matrices", "expected an object keyed by arrow index");
  }
  if (jm.size() != arrows.size()) {
    schema_error("/representation/matrices",
                 "expected " + std::to_string(arrows.size()) + " matrices, got " + std::to_string(jm.size()));
  }
  std::vector<Matrix> maps;
  json canonical_matrices = json::object();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const std::string path = "/representation/matrices/" + std::to_string(a);
    const json& m = matrix_entry(a);
    const Arrow& arrow = quiver->arrows()[a];
    const auto rows = static_cast<std::size_t>(dims[arrow.target]);
    const auto cols = static_cast<std::size_t>(dims[arrow.source]);
    if (!m.is_array() || m.size() != rows) {
      schema_error(path, "expected " + std::to_string(rows) + " rows (dim of target)");
    }
    std::vector<std::vector<long long>> entries;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string rpath = path + "/" + std::to_string(r);
      if (!m[r].is_array() || m[r].size() != cols) {
        schema_error(rpath, "expected " + std::to_string(cols) + " entries (dim of source)");
      }
      std::vector<long long> row;
      for (std::size_t c = 0; c < cols; ++c) row.push_back(detail::integer(m[r][c], rpath + "/" + std::to_string(c)));
      entries.push_back(std::move(row));
    }
    Matrix mat = Matrix::from_rows(*pf, entries, cols);
    canonical_matrices[std::to_string(a)] = mat.to_rows();
    maps.push_back(std::move(mat));
  }

  const json& js = field(input, "stability", "");
  auto theta = detail::per_vertex(field(js, "theta", "/stability"), vertices, "/stability/theta");
  auto sigma = detail::per_vertex(field(js, "sigma", "/stability"), vertices, "/stability/sigma");
  for (std::size_t v = 0; v < sigma.size(); ++v) {
    if (sigma[v] < 1) schema_error("/stability/sigma/" + vertices[v], "sigma must be >= 1");
  }

  json canonical = {
      {"field", {{"p", p}}},
      {"quiver", {{"vertices", vertices}, {"arrows", json::array()}}},
      {"representation", {{"dims", json::object()}, {"matrices", canonical_matrices}}},
      {"stability", {{"theta", json::object()}, {"sigma", json::object()}}},
  };
  for (const auto& [s, t] : arrows) canonical["quiver"]["arrows"].push_back({s, t});
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    canonical["representation"]["dims"][vertices[v]] = dims[v];
    canonical["stability"]["theta"][vertices[v]] = theta[v];
    canonical["stability"]["sigma"][vertices[v]] = sigma[v];
  }
  Representation rep(*quiver, *pf, DimensionVector(dims), std::move(maps));
  return Problem{std::move(rep), StabilityParams(std::move(theta), std::move(sigma)), std::move(canonical)};
}

inline Problem parse_problem_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(j);
}

/// FNV-1a over the canonical serialization.
inline std::string digest(const json& canonical) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline json score_json(const ExactScore& s) { return {{"sign", s.sign}, {"square", to_string(s.square)}}; }

inline json dims_json(const Representation& m, const DimensionVector& d) {
  json out = json::object();
  for (std::size_t v = 0; v < d.size(); ++v) out[m.quiver().vertices()[v]] = d[v];
  return out;
}

inline json subrep_json(const Representation& m, const Subrepresentation& s) {
  json spaces = json::object();
  for (std::size_t v = 0; v < s.spaces.size(); ++v) {
    spaces[m.quiver().vertices()[v]] = s.spaces[v].basis().to_rows();
  }
  return {{"dims", dims_json(m, s.dims())}, {"spaces", spaces}};
}

inline json filtration_json(const Representation& m, const Filtration& f) {
  json out = json::array();
  for (const auto& step : f.steps) out.push_back(subrep_json(m, step));
  return out;
}

struct RunOptions {
  std::uint64_t budget = EnumerationOptions{}.budget;
  bool heuristic_prune = false;
};

struct Outcome {
  json report;
  int exit_code = kOk;
};

inline json envelope(const std::string& command, const json& input) {
  return {{"command", command}, {"input_digest", digest(input)}, {"input", input}};
}

inline Outcome cmd_hn(const Problem& pr, const RunOptions& opt) {
  const EnumerationOptions eo{opt.budget};
  const Filtration f = hn_filtration(pr.rep, pr.params, eo);
  const HnReport check = check_hn_properties(pr.rep, f, pr.params, eo);
  json r = envelope("hn", pr.canonical);
  r["result"] = {
      {"semistable", f.steps.size() == 1},
      {"filtration", filtration_json(pr.rep, f)},
      {"quotient_slopes", rationals_json(check.quotient_slopes)},
      {"strictly_descending", check.strictly_descending},
      {"quotient_semistable", check.quotient_semistable},
      {"hn_properties_hold", check.ok()},
  };
  return {r, check.ok() ? kOk : kContradiction};
}

inline json kempf_json(const Representation& m, const KempfResult& k) {
  return {
      {"filtration", filtration_json(m, k.filtration)},
      {"gamma", rationals_json(k.weights.values())},
      {"score", score_json(k.score)},
      {"graph", {{"b", rationals_json(k.graph.weights())}, {"v", rationals_json(k.graph.values())}}},
      {"chains_scored", k.chains_scored},
  };
}

inline Outcome cmd_kempf(const Problem& pr, const RunOptions& opt) {
  const KempfOptions ko{{opt.budget}, opt.heuristic_prune};
  json r = envelope("kempf", pr.canonical);
  if (is_semistable(pr.rep, pr.params, ko.enumeration)) {
    r["result"] = {{"semistable", true}, {"kempf", nullptr}};
    return {r, kOk};
  }
  r["result"] = {{"semistable", false}, {"kempf", kempf_json(pr.rep, kempf_filtration(pr.rep, pr.params, ko))}};
  return {r, kOk};
}

inline Outcome cmd_verify(const Problem& pr, const RunOptions& opt) {
  const KempfOptions ko{{opt.budget}, opt.heuristic_prune};
  const Filtration hn = hn_filtration(pr.rep, pr.params, ko.enumeration);
  json r = envelope("verify", pr.canonical);
  if (hn.steps.size() == 1) {
    r["result"] = {{"semistable", true}, {"hn", filtration_json(pr.rep, hn)}, {"kempf", nullptr},
                   {"match", true}};
    return {r, kOk};
  }
  const KempfResult k = kempf_filtration(pr.rep, pr.params, ko);
  const bool match = k.filtration == hn;
  r["result"] = {{"semistable", false},
                 {"hn", filtration_json(pr.rep, hn)},
                 {"kempf", kempf_json(pr.rep, k)},
                 {"match", match}};
  return {r, match ? kOk : kContradiction};
}

inline Outcome cmd_semistable(const Problem& pr, const RunOptions& opt) {
  const KempfOptions ko{{opt.budget}, opt.heuristic_prune};
  const bool slope_route = is_semistable(pr.rep, pr.params, ko.enumeration);
  const bool git_route = kempf_semistability(pr.rep, pr.params, ko);
  json r = envelope("semistable", pr.canonical);
  r["result"] = {{"slope", to_string(slope(pr.rep.dims(), pr.params))},
                 {"semistable", slope_route},
                 {"stable", is_stable(pr.rep, pr.params, ko.enumeration)},
                 {"kempf_semistable", git_route},
                 {"agree", slope_route == git_route}};
  return {r, slope_route == git_route ? kOk : kContradiction};
}

inline Outcome cmd_enumerate(const Problem& pr, const RunOptions& opt) {
  const auto subs = enumerate_subreps(pr.rep, EnumerationOptions{opt.budget});
  json list = json::array();
  std::vector<std::pair<DimensionVector, std::size_t>> counts;
  for (const auto& s : subs) {
    const DimensionVector d = s.dims();
    list.push_back(dims_json(pr.rep, d));
    if (counts.empty() || !(counts.back().first == d)) counts.emplace_back(d, 0);
    ++counts.back().second;
  }
  json by_dims = json::array();
  for (const auto& [d, c] : counts) by_dims.push_back({{"dims", dims_json(pr.rep, d)}, {"count", c}});
  json r = envelope("enumerate", pr.canonical);
  r["result"] = {{"count", subs.size()}, {"subrepresentations", list}, {"by_dimension_vector", by_dims}};
  return {r, kOk};
}

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline long long parse_ll(const std::string& s, const std::string& what) {
  const Rational r = parse_rational(s);
  if (denominator_of(r) != 1 || s.find('/') != std::string::npos) {
    throw InvalidArgument(what + ": expected an integer, got '" + s + "'");
  }
  return numerator_of(r).convert_to<long long>();
}

// "a:b,c:d" into integer pairs.
inline std::vector<std::pair<long long, long long>> parse_pairs(std::string_view text, const std::string& what) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw InvalidArgument(what + ": expected 'a:b' items, got '" + item + "'");
    out.emplace_back(parse_ll(parts[0], what), parse_ll(parts[1], what));
  }
  return out;
}

inline std::string blocks_string(const SplitBundle& e) {
  std::string out;
  for (const auto& b : e.blocks()) {
    if (!out.empty()) out += ",";
    out += std::to_string(b.degree) + ":" + std::to_string(b.multiplicity);
  }
  return out;
}

}  // namespace detail

inline Outcome cmd_p1(const std::string& blocks) {
  std::vector<SplitBundle::Block> parsed;
  for (const auto& [a, b] : detail::parse_pairs(blocks, "--blocks")) parsed.push_back({a, b});
  const SplitBundle e(std::move(parsed));
  const json input = {{"blocks", detail::blocks_string(e)}};
  json steps = json::array();
  for (const auto& step : p1_hn(e)) {
    steps.push_back({{"blocks", detail::blocks_string(step)}, {"slope", to_string(p1_slope(step))}});
  }
  json r = envelope("p1", input);
  r["result"] = {{"slope", to_string(p1_slope(e))},
                 {"semistable", e.blocks().size() == 1},
                 {"filtration", steps},
                 {"quotient_slopes", rationals_json(p1_quotient_slopes(e))}};
  return {r, kOk};
}

inline Outcome cmd_rank2(const std::string& candidates, long long deg_e, long long s, const std::string& tau_text) {
  std::vector<Rank2Candidate> list;
  for (const auto& [d, eps] : detail::parse_pairs(candidates, "--candidates")) list.push_back({d, eps});
  const Rational tau = parse_rational(tau_text);
  const Rank2Verdict v = rank2_best(list, deg_e, s, tau);
  json values = json::array();
  for (const auto& c : list) {
    values.push_back({{"deg", c.deg}, {"eps", c.eps}, {"value", to_string(rank2_value(c.deg, deg_e, s, c.eps, tau))}});
  }
  const json input = {{"candidates", candidates}, {"deg_e", deg_e}, {"s", s}, {"tau", to_string(tau)}};
  json r = envelope("rank2", input);
  r["result"] = {{"candidates", values},
                 {"best", {{"deg", v.best.deg}, {"eps", v.best.eps}}},
                 {"value", to_string(v.value)},
                 {"verdict", v.ambiguous ? "ambiguous" : (v.unstable ? "unstable" : "semistable")},
                 {"unstable", v.unstable}};
  return {r, kOk};
}

inline Outcome cmd_rank3(const std::string& v_text, const std::string& tau_text) {
  const auto parts = detail::split(v_text, ',');
  if (parts.size() != 3) throw InvalidArgument("--v: expected three comma-separated integers");
  Rank3Slopes s{{detail::parse_ll(parts[0], "--v"), detail::parse_ll(parts[1], "--v"),
                 detail::parse_ll(parts[2], "--v")},
                parse_rational(tau_text)};
  const Rank3Weights w = rank3_weights(s);
  const json input = {{"v", json::array({s.v[0], s.v[1], s.v[2]})}, {"tau", to_string(s.tau)}};
  json r = envelope("rank3", input);
  r["result"] = {{"case", to_string(w.label)},
                 {"x", rationals_json({w.x.begin(), w.x.end()})},
                 {"y", rationals_json({w.y.begin(), w.y.end()})},
                 {"gamma", w.gamma ? rationals_json({w.gamma->begin(), w.gamma->end()}) : json(nullptr)}};
  return {r, kOk};
}

/// Runs a problem-file command by name.
inline Outcome run_problem_command(const std::string& command, const Problem& pr, const RunOptions& opt) {
  if (command == "hn") return cmd_hn(pr, opt);
  if (command == "kempf") return cmd_kempf(pr, opt);
  if (command == "verify") return cmd_verify(pr, opt);
  if (command == "semistable") return cmd_semistable(pr, opt);
  if (command == "enumerate") return cmd_enumerate(pr, opt);
  throw InvalidArgument("unknown command '" + command + "'");
}

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kBudget;
  if (dynamic_cast<const TheoremContradiction*>(&e)) return kContradiction;
  if (dynamic_cast<const InvalidArgument*>(&e)) return kUsage;
  return kInternal;
}

namespace detail {

inline std::string join(const json& arr, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

inline void render_filtration(std::ostringstream& os, const json& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    os << "  M_" << i + 1 << "  dims " << steps[i]["dims"].dump() << "\n";
    for (const auto& [vertex, basis] : steps[i]["spaces"].items()) {
      os << "      " << vertex << ": " << basis.dump() << "\n";
    }
  }
}

}  // namespace detail

inline std::string render_text(const json& report) {
  std::ostringstream os;
  const std::string cmd = report["command"];
  const json& res = report["result"];
  os << "command: " << cmd << "\n";
  os << "input: " << report["input_digest"].get<std::string>() << "\n";
  if (cmd == "hn") {
    os << (res["semistable"].get<bool>() ? "semistable: HN filtration is 0 < M\n" : "unstable\n");
    os << "HN filtration (" << res["filtration"].size() << " steps):\n";
    detail::render_filtration(os, res["filtration"]);
    os << "quotient slopes: " << detail::join(res["quotient_slopes"], " > ") << "\n";
    os << "HN properties: " << (res["hn_properties_hold"].get<bool>() ? "hold" : "VIOLATED") << "\n";
  } else if (cmd == "kempf" || cmd == "verify") {
    const json& k = res["kempf"];
    if (cmd == "verify") {
      os << "HN filtration (" << res["hn"].size() << " steps):\n";
      detail::render_filtration(os, res["hn"]);
    }
    if (k.is_null()) {
      os << "semistable: no Kempf filtration\n";
    } else {
      os << "Kempf filtration (" << k["filtration"].size() << " steps):\n";
      detail::render_filtration(os, k["filtration"]);
      os << "gamma: " << detail::join(k["gamma"]) << "\n";
      os << "graph v: " << detail::join(k["graph"]["v"]) << "  b: " << detail::join(k["graph"]["b"]) << "\n";
      os << "score: sign " << k["score"]["sign"].get<int>() << ", square "
         << k["score"]["square"].get<std::string>() << "\n";
      os << "chains scored: " << k["chains_scored"].get<std::uint64_t>() << "\n";
    }
    if (cmd == "verify") {
      os << "Kempf filtration == HN filtration: " << (res["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
  } else if (cmd == "semistable") {
    os << "slope: " << res["slope"].get<std::string>() << "\n";
    os << "semistable (slope route): " << res["semistable"] << "\n";
    os << "semistable (Kempf route): " << res["kempf_semistable"] << "\n";
    os << "stable: " << res["stable"] << "\n";
    os << "routes agree: " << (res["agree"].get<bool>() ? "yes" : "NO") << "\n";
  } else if (cmd == "enumerate") {
    os << "subrepresentations: " << res["count"] << "\n";
    for (const auto& e : res["by_dimension_vector"]) {
      os << "  " << e["dims"].dump() << "  x" << e["count"] << "\n";
    }
  } else if (cmd == "p1") {
    os << "slope: " << res["slope"].get<std::string>() << "\n";
    os << "HN filtration:\n";
    for (std::size_t i = 0; i < res["filtration"].size(); ++i) {
      os << "  E_" << i + 1 << " = " << res["filtration"][i]["blocks"].get<std::string>() << "\n";
    }
    os << "quotient slopes: " << detail::join(res["quotient_slopes"], " > ") << "\n";
  } else if (cmd == "rank2") {
    for (const auto& c : res["candidates"]) {
      os << "  deg " << c["deg"] << ", eps " << c["eps"] << ": " << c["value"].get<std::string>() << "\n";
    }
    os << "best: deg " << res["best"]["deg"] << ", eps " << res["best"]["eps"] << " with value "
       << res["value"].get<std::string>() << "\n";
    os << "verdict: " << res["verdict"].get<std::string>() << "\n";
  } else if (cmd == "rank3") {
    os << "case: " << res["case"].get<std::string>() << "\n";
    os << "x: " << detail::join(res["x"]) << "\n";
    os << "y: " << detail::join(res["y"]) << "\n";
    if (res["gamma"].is_null()) {
      os << "gamma: undetermined (neither discriminant holds)\n";
    } else {
      os << "gamma: " << detail::join(res["gamma"]) << "\n";
    }
  }
  return os.str();
}

}  // namespace qhn::io
