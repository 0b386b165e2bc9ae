#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cache.hpp"
#include "polyzeta/error.hpp"
#include "polyzeta/etareduce.hpp"
#include "polyzeta/mzv_numeric.hpp"
#include "polyzeta/polybernoulli.hpp"
#include "polyzeta/relations.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace polyzeta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitDivergence = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_csv(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidSpec, flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) fail(ErrorKind::InvalidSpec, flag + " must not be empty");
  return out;
}

std::vector<int> csv_or_default(const std::string& text, const std::string& flag, std::size_t r,
                                std::vector<int> fallback) {
  auto v = text.empty() ? std::move(fallback) : parse_csv(text, flag);
  if (v.size() != r)
    fail(ErrorKind::Dimension, flag + " has " + std::to_string(v.size()) + " entries, expected " +
                                   std::to_string(r));
  return v;
}

Permutation parse_sigma(const std::string& text, std::size_t r) {
  return Permutation::parse(text.empty() ? "id" : text, r);
}

json sigma_json(const Permutation& p) { return p.images(); }

json mzv_json(const MzvExpr& e) {
  json terms = json::array();
  for (const auto& [idx, c] : e.terms()) terms.push_back({{"index", idx}, {"coeff", to_string(c)}});
  return {{"terms", terms}, {"text", e.to_string()}, {"weight", e.weight()}};
}

json numeric_json(const NumericValue& v) { return {{"value", v.value}, {"error", v.error}}; }

struct GlobalOptions {
  bool no_cache = false;
  std::string cache_dir;
  bool compact = false;
};

cli::ResultCache make_cache(const GlobalOptions& g) {
  const fs::path dir = g.cache_dir.empty() ? cli::ResultCache::default_directory() : fs::path(g.cache_dir);
  return cli::ResultCache(dir, !g.no_cache);
}

json cached(const std::string& command, const json& spec, const GlobalOptions& g,
            const std::function<json()>& compute) {
  const auto cache = make_cache(g);
  const auto key = cli::ResultCache::key(command, spec);
  if (auto hit = cache.load(key)) return *hit;
  json payload = compute();
  cache.store(key, command, spec, payload);
  return payload;
}

void print(const json& payload, const GlobalOptions& g) {
  std::cout << (g.compact ? payload.dump() : payload.dump(2)) << '\n';
}

// ---- bern ----------------------------------------------------------------

struct BernOptions {
  std::string type = "b";
  std::string k, m, sigma, a, b;
  int d = 1;
};

json bern_spec(const BernOptions& o) {
  const auto k = parse_csv(o.k, "--k");
  const std::size_t r = k.size();
  json spec = {{"type", o.type}, {"k", k}, {"m", csv_or_default(o.m, "--m", r, {})}};
  if (o.type == "b") {
    const auto sigma = parse_sigma(o.sigma, r);
    const auto a = csv_or_default(o.a, "--a", r, std::vector<int>(r, 1));
    const auto b = csv_or_default(o.b, "--b", r, std::vector<int>(r, 1));
    BernoulliSpec{k, sigma, a, b}.validate();
    spec["sigma"] = sigma_json(sigma);
    spec["a"] = a;
    spec["b"] = b;
  } else if (o.type == "c") {
    if (o.d < 0 || static_cast<std::size_t>(o.d) > r)
      fail(ErrorKind::InvalidSpec, "--d must lie in 0..r");
    spec["d"] = o.d;
  }
  return spec;
}

json bern_payload(const json& spec) {
  const auto k = spec["k"].get<std::vector<int>>();
  const auto m = spec["m"].get<Exponent>();
  const std::string type = spec["type"];
  Rational value;
  if (type == "b") {
    value = bnum(BernoulliSpec{k, Permutation(spec["sigma"].get<std::vector<int>>()),
                               spec["a"].get<std::vector<int>>(), spec["b"].get<std::vector<int>>()},
                 m);
  } else if (type == "c") {
    value = cnum(k, spec["d"].get<int>(), m);
  } else {
    value = star_num(k, m);
  }
  return {{"spec", spec}, {"value", to_string(value)}};
}

// ---- duality-scan --------------------------------------------------------

json scan_payload(int r, int max) {
  if (r < 1 || r > 3) fail(ErrorKind::InvalidSpec, "--r must be 1, 2 or 3");
  if (max < 0 || max > 4) fail(ErrorKind::InvalidSpec, "--max must be in 0..4");
  const auto report = duality_scan(static_cast<std::size_t>(r), max);
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"k", f.k},
                        {"n", f.n},
                        {"sigma", sigma_json(f.sigma)},
                        {"a", f.a},
                        {"b", f.b},
                        {"lhs", to_string(f.check.lhs)},
                        {"rhs", to_string(f.check.rhs)}});
  }
  return {{"r", r}, {"max", max}, {"checked", report.checked}, {"failures", failures}};
}

// ---- reduce --------------------------------------------------------------

struct ReduceOptions {
  std::string branch = "star";
  std::string u, s, sigma, a, b;
};

json reduce_spec(const ReduceOptions& o, double tol) {
  const Branch branch = parse_branch(o.branch);
  const auto u = parse_csv(o.u, "--u");
  const std::size_t r = u.size();
  const auto s = csv_or_default(o.s, "--s", r, {});
  const auto sigma = parse_sigma(o.sigma, r);
  if (!o.a.empty() && !o.b.empty()) fail(ErrorKind::InvalidSpec, "give --a or --b, not both");
  const auto v = csv_or_default(o.a.empty() ? o.b : o.a, "--a/--b", r, std::vector<int>(r, 1));
  EtaSpec::make(branch, u, s, sigma, v).validate();
  return {{"branch", to_string(branch)}, {"u", u}, {"s", s}, {"sigma", sigma_json(sigma)},
          {"v", v}, {"tol", tol}};
}

json reduce_payload(const json& spec) {
  const Branch branch = parse_branch(spec["branch"]);
  const auto u = spec["u"].get<std::vector<int>>();
  const auto s = spec["s"].get<std::vector<int>>();
  const Permutation sigma(spec["sigma"].get<std::vector<int>>());
  const auto v = spec["v"].get<std::vector<int>>();
  NumericConfig cfg;
  cfg.tolerance = spec["tol"].get<double>();

  const MzvExpr value = reduce_eta(branch, u, s, sigma, v);
  const auto num = mzv_expr_eval(value, cfg);
  json out = {{"spec", spec}, {"result", mzv_json(value)}, {"numeric", numeric_json(num)}};

  // The dual of η★(u;s;σ;v) is η★★(s;u;σ⁻¹;v) and vice versa. Its offsets
  // need not be admissible when r = 3, in which case it is reported as null.
  const Branch other = branch == Branch::Star ? Branch::StarStar : Branch::Star;
  const auto dual_spec = EtaSpec::make(other, s, u, sigma.inverse(), v);
  if (!dual_spec.is_valid()) {
    out["dual"] = nullptr;
    out["dual_residual"] = nullptr;
    return out;
  }
  const MzvExpr dual = reduce_eta(dual_spec);
  const auto dual_num = mzv_expr_eval(dual, cfg);
  out["dual"] = {{"spec",
                  {{"branch", to_string(other)},
                   {"u", s},
                   {"s", u},
                   {"sigma", sigma_json(sigma.inverse())},
                   {"v", v}}},
                 {"result", mzv_json(dual)},
                 {"numeric", numeric_json(dual_num)}};
  out["dual_residual"] = num.value - dual_num.value;
  return out;
}

// ---- relations -----------------------------------------------------------

json relations_payload(int weight) {
  if (weight < 4 || weight > 6) fail(ErrorKind::InvalidSpec, "--weight must be 4, 5 or 6");
  const auto m = assemble_relation_matrix(weight, standard_dualities(weight));
  json basis = json::array(), labels = json::array(), rows = json::array();
  for (const auto& idx : m.basis) {
    basis.push_back(idx);
    labels.push_back(mzv_to_string(idx));
  }
  for (const auto& row : m.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(r);
  }
  json solution = json::array();
  for (const auto& s : solve_in_free_basis(m))
    solution.push_back({{"index", s.index}, {"value", mzv_json(s.value)}});
  return {{"weight", weight},       {"basis", basis},          {"labels", labels},
          {"rows", rows},           {"provenance", m.provenance}, {"rank", rank(m.rows)},
          {"solution", solution}};
}

std::string relations_csv(const json& p) {
  std::ostringstream out;
  out << "provenance";
  for (const auto& l : p["labels"]) out << ",\"" << l.get<std::string>() << '"';
  out << '\n';
  for (std::size_t i = 0; i < p["rows"].size(); ++i) {
    out << '"' << p["provenance"][i].get<std::string>() << '"';
    for (const auto& c : p["rows"][i]) out << ',' << c.get<std::string>();
    out << '\n';
  }
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << content;
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

// ---- mzv -----------------------------------------------------------------

json mzv_payload(const MzvIndex& index, const NumericConfig& cfg) {
  const auto v = mzv_eval(index, cfg);
  return {{"index", index}, {"text", mzv_to_string(index)}, {"tol", cfg.tolerance},
          {"value", v.value}, {"error", v.error}};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unsupported:
      return kExitUnsupported;
    case ErrorKind::Divergence:
    case ErrorKind::NotReady:
      return kExitDivergence;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poly-Bernoulli numbers, η-function reductions and MZV relations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", POLYZETA_VERSION);
  GlobalOptions g;
  app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $POLYZETA_CACHE_DIR)");
  app.add_flag("--compact", g.compact, "Print JSON on one line");

  BernOptions bo;
  auto* bern = app.add_subcommand("bern", "Exact poly-Bernoulli number");
  bern->add_option("--type", bo.type, "b, c or star")->check(CLI::IsMember({"b", "c", "star"}));
  bern->add_option("--k", bo.k, "Upper index k (csv)")->required();
  bern->add_option("--m", bo.m, "Lower index m (csv)")->required();
  bern->add_option("--sigma", bo.sigma, "Permutation as one-line images or 'id'");
  bern->add_option("--a", bo.a, "Offsets a (csv, default all 1)");
  bern->add_option("--b", bo.b, "Offsets b (csv, default all 1)");
  bern->add_option("--d", bo.d, "C-type depth d");

  int scan_r = 1, scan_max = 3;
  auto* scan = app.add_subcommand("duality-scan", "Exhaustive duality check");
  scan->add_option("--r", scan_r, "Depth 1..3")->required();
  scan->add_option("--max", scan_max, "Largest component 0..4")->required();

  ReduceOptions ro;
  double reduce_tol = 1e-10;
  auto* reduce = app.add_subcommand("reduce", "η★/η★★ at positive integers as MZVs");
  reduce->add_option("--branch", ro.branch, "star or starstar")
      ->check(CLI::IsMember({"star", "starstar"}));
  reduce->add_option("--u", ro.u, "u (csv)")->required();
  reduce->add_option("--s", ro.s, "s (csv)")->required();
  reduce->add_option("--sigma", ro.sigma, "Permutation as one-line images or 'id'");
  reduce->add_option("--a", ro.a, "Offset vector (csv)");
  reduce->add_option("--b", ro.b, "Offset vector (csv), alias of --a");
  reduce->add_option("--tol", reduce_tol, "Numeric tolerance");

  int rel_weight = 5;
  std::string rel_out, rel_format = "json";
  auto* rel = app.add_subcommand("relations", "Duality relation matrix at weight 4, 5 or 6");
  rel->add_option("--weight", rel_weight, "Weight")->required();
  rel->add_option("--out", rel_out, "Write <out>.json and <out>.csv");
  rel->add_option("--format", rel_format, "stdout format")->check(CLI::IsMember({"json", "csv"}));

  std::string mzv_index;
  double mzv_tol = 1e-10;
  auto* mzv = app.add_subcommand("mzv", "Numeric multiple zeta value");
  mzv->add_option("--index", mzv_index, "Admissible index (csv, last entry >= 2)")->required();
  mzv->add_option("--tol", mzv_tol, "Target tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    json payload;
    if (bern->parsed()) {
      const json spec = bern_spec(bo);
      payload = cached("bern", spec, g, [&] { return bern_payload(spec); });
    } else if (scan->parsed()) {
      payload = cached("duality-scan", {{"r", scan_r}, {"max", scan_max}}, g,
                       [&] { return scan_payload(scan_r, scan_max); });
    } else if (reduce->parsed()) {
      const json spec = reduce_spec(ro, reduce_tol);
      payload = cached("reduce", spec, g, [&] { return reduce_payload(spec); });
    } else if (rel->parsed()) {
      payload = cached("relations", {{"weight", rel_weight}}, g,
                       [&] { return relations_payload(rel_weight); });
      if (!rel_out.empty()) {
        write_file(rel_out + ".json", payload.dump(2) + "\n");
        write_file(rel_out + ".csv", relations_csv(payload));
      }
      if (rel_format == "csv") {
        std::cout << relations_csv(payload);
        return kExitOk;
      }
    } else if (mzv->parsed()) {
      NumericConfig cfg;
      cfg.tolerance = mzv_tol;
      const auto index = parse_csv(mzv_index, "--index");
      if (!is_admissible(index))
        fail(ErrorKind::InvalidSpec, mzv_to_string(index) + " is not admissible (last entry < 2)");
      payload = cached("mzv", {{"index", index}, {"tol", mzv_tol}}, g,
                       [&] { return mzv_payload(index, cfg); });
    }
    print(payload, g);
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
