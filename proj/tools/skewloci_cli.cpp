/*
 * Copyright 2026 The skewloci authors
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

// Command line front end.  Every report is a JSON object carrying the
// artifact version, the resolved command, the seed, and the echoed inputs;
// text output is a plain rendering of the same object.  Identical
// invocations produce byte-identical JSON.
//
// Exit codes: 0 success, 2 input error, 3 mathematical-precondition
// failure, 4 falsification event (a result contradicting a theorem, which
// always means a bug).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewloci/grass.hpp"
#include "skewloci/json_io.hpp"
#include "skewloci/lie.hpp"
#include "skewloci/strata.hpp"
#include "skewloci/version.hpp"
#include "skewloci/weyl.hpp"

namespace {

using nlohmann::json;
using namespace skewloci;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;
constexpr int kExitFalsification = 4;

/// Bad command-line values (exit 2), as opposed to mathematical failures
/// inside otherwise valid inputs (exit 3).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "json";

  void emit(const json& report) const {
    if (format == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      render(report, 0);
    }
  }

  void render(const json& node, int indent) const {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) {
        if (value.is_object() || (value.is_array() && !value.empty() &&
                                  value.front().is_structured())) {
          std::cout << pad << key << ":\n";
          render(value, indent + 1);
        } else {
          std::cout << pad << key << ": " << flat(value) << "\n";
        }
      }
    } else if (node.is_array()) {
      for (const auto& item : node) {
        if (item.is_object()) {
          render(item, indent);
        } else {
          std::cout << pad << flat(item) << "\n";
        }
      }
    } else {
      std::cout << pad << flat(node) << "\n";
    }
  }

  static std::string flat(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_array()) {
      std::string out = "[";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ", ";
        out += flat(value[i]);
      }
      return out + "]";
    }
    return value.dump();
  }
};

json report_base(const std::string& command, std::uint64_t seed) {
  return json{{"version", std::string(kVersion)},
              {"command", command},
              {"seed", seed}};
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty list: '" + text + "'");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      out.push_back(rational_from_string(token));
    } catch (const ParseError&) {
      throw InputError("not a rational list: '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty list: '" + text + "'");
  return out;
}

/// "A3", "C2", "A1xC1", or "" (trivial).  Cartan-rank labels.
std::vector<ExponentList> parse_factors(const std::string& text) {
  std::vector<ExponentList> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, 'x')) {
    if (token.size() < 2 || (token[0] != 'A' && token[0] != 'C')) {
      throw InputError("bad factor '" + token + "' (expect A<rank> or C<rank>)");
    }
    unsigned rank = 0;
    try {
      std::size_t pos = 0;
      rank = static_cast<unsigned>(std::stoul(token.substr(1), &pos));
      if (pos + 1 != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("bad factor rank in '" + token + "'");
    }
    out.push_back(
        exponents(token[0] == 'A' ? GroupType::kA : GroupType::kC, rank));
  }
  return out;
}

json factors_to_json(const std::vector<ExponentList>& factors) {
  json out = json::array();
  for (const ExponentList& f : factors) {
    out.push_back(json{{"type", f.type == GroupType::kA ? "A" : "C"},
                       {"rank", f.cartan_rank},
                       {"degrees", f.degrees}});
  }
  return out;
}

json polynomial_report(const QPolynomial& poly) {
  return json{{"coefficients", to_json(poly)},
              {"degree", poly.degree()},
              {"palindromic", poly.is_palindromic()},
              {"euler_characteristic", to_string(poly.value_at_one())},
              {"pretty", poly.to_pretty_string()}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return j;
}

void require_even(std::size_t r, const char* what) {
  if (r % 2 != 0) {
    throw InputError(std::string(what) + " must be even, got " +
                     std::to_string(r));
  }
}

// ---------------------------------------------------------------------------
// poincare

struct PoincareArgs {
  std::size_t r = 4;
  std::string group;
  std::string levi;
  std::string base;
  std::string fiber;
  std::size_t fiber_grass2 = 0;
  std::size_t fiber_isotropic = 0;
};

int run_poincare(const std::string& kind, const PoincareArgs& args,
                 std::uint64_t seed, const Output& out) {
  json report = report_base("poincare " + kind, seed);
  QPolynomial poly;
  json inputs;
  if (kind == "grass2" || kind == "isotropic") {
    require_even(args.r, "--r");
    if (kind == "grass2" && args.r < 2) throw InputError("--r must be >= 2");
    if (kind == "isotropic" && args.r < 4) throw InputError("--r must be >= 4");
    inputs["r"] = args.r;
    poly = kind == "grass2" ? poincare_grass2(args.r)
                            : poincare_isotropic_grass2(args.r);
  } else if (kind == "flag") {
    const auto factors = parse_factors(args.group);
    inputs["group"] = factors_to_json(factors);
    poly = poincare_full_flag(combined_degrees(factors));
  } else if (kind == "quotient") {
    const auto group = parse_factors(args.group);
    const auto levi = parse_factors(args.levi);
    inputs["group"] = factors_to_json(group);
    inputs["levi"] = factors_to_json(levi);
    poly = poincare_parabolic_quotient(group, levi);
  } else {  // bundle
    const auto base_coeffs = parse_long_list(args.base);
    const QPolynomial base = QPolynomial::from_ints(base_coeffs);
    QPolynomial fiber;
    if (args.fiber_grass2 != 0) {
      require_even(args.fiber_grass2, "--fiber-grass2");
      fiber = poincare_grass2(args.fiber_grass2);
      inputs["fiber_grass2_r"] = args.fiber_grass2;
    } else if (args.fiber_isotropic != 0) {
      require_even(args.fiber_isotropic, "--fiber-isotropic");
      fiber = poincare_isotropic_grass2(args.fiber_isotropic);
      inputs["fiber_isotropic_r"] = args.fiber_isotropic;
    } else if (!args.fiber.empty()) {
      fiber = QPolynomial::from_ints(parse_long_list(args.fiber));
      inputs["fiber"] = to_json(fiber);
    } else {
      throw InputError("bundle needs --fiber, --fiber-grass2 or --fiber-isotropic");
    }
    inputs["base"] = to_json(base);
    poly = poincare_bundle(base, fiber);
  }
  report["inputs"] = inputs;
  report["result"] = polynomial_report(poly);
  out.emit(report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// betti

int run_betti(const std::string& betti_text, long d_override, std::size_t r,
              std::uint64_t seed, const Output& out) {
  require_even(r, "--r");
  if (r < 4) throw InputError("--r must be >= 4");
  const std::vector<long> raw = parse_long_list(betti_text);
  BettiVector betti;
  betti.b.assign(raw.begin(), raw.end());
  betti.d = d_override >= 0 ? static_cast<std::size_t>(d_override)
                            : (raw.size() - 1) / 2;

  json report = report_base("betti", seed);
  report["inputs"] = json{{"betti", raw}, {"d", betti.d}, {"r", r}};

  const Integer grass = top_betti_grass2_bundle(betti, r);
  const Integer iso = top_betti_isotropic_bundle(betti, r);
  const Integer diff = grass - iso;
  const Integer b2d = betti.b.size() > 2 * betti.d ? betti.b[2 * betti.d]
                                                   : Integer(0);
  report["result"] = json{{"grass2_top_betti", to_string(grass)},
                          {"isotropic_top_betti", to_string(iso)},
                          {"difference", to_string(diff)},
                          {"difference_equals_b_2d", diff == b2d}};
  out.emit(report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// constrank

json verdict_to_json(const RankVerdict& verdict, std::size_t bound,
                     long slack) {
  json witnesses = json::array();
  if (!verdict.witness.empty()) {
    witnesses.push_back(json{{"coefficients", rationals_to_json(verdict.witness)},
                             {"rank", verdict.witness_rank}});
  }
  return json{{"verdict", to_string(verdict.kind)},
              {"witnesses", witnesses},
              {"confidence", verdict.confidence},
              {"upper_bound_certified", verdict.upper_bound_certified},
              {"samples", verdict.samples_checked},
              {"bound", bound},
              {"slack", slack}};
}

int run_constrank_verify(const std::string& path, std::size_t r,
                         std::uint64_t seed, std::size_t trials,
                         const Output& out) {
  require_even(r, "--r");
  const SkewLinearSpace space = skew_space_from_json(load_json_file(path));
  json report = report_base("constrank verify", seed);
  report["inputs"] = json{{"file", path},
                          {"N", space.matrix_size()},
                          {"m", space.dim()},
                          {"r", r},
                          {"trials", trials}};

  const bool exact = space.dim() <= 3 && space.matrix_size() <= 8;
  const RankVerdict verdict = is_constant_rank(
      space, r,
      exact ? CheckMode::exact_small(seed, trials)
            : CheckMode::probabilistic(seed, trials));

  const SubspaceBoundReport cor = verify_constant_rank_bound(space, r);
  const SubspaceBoundReport proj = projectivized_family_check(space, r);
  json result = verdict_to_json(verdict, cor.bound, cor.slack);
  result["mode"] = exact ? "exact-small" : "probabilistic";
  result["projective_bound"] = proj.bound;
  result["projective_slack"] = proj.slack;
  report["result"] = result;
  out.emit(report);

  if (verdict.kind == RankVerdictKind::kConstantRank &&
      (!cor.holds || !proj.holds)) {
    return kExitFalsification;  // contradicts the dimension bound theorems
  }
  return kExitOk;
}

int run_constrank_profile(const std::string& path, std::uint64_t seed,
                          std::size_t samples, const Output& out) {
  const SkewLinearSpace space = skew_space_from_json(load_json_file(path));
  json report = report_base("constrank profile", seed);
  report["inputs"] = json{{"file", path},
                          {"N", space.matrix_size()},
                          {"m", space.dim()},
                          {"samples", samples}};
  const RankProfile profile = rank_profile(space, seed, samples);
  json ranks = json::object();
  for (const auto& [r, entry] : profile.by_rank) {
    ranks[std::to_string(r)] =
        json{{"count", entry.count},
             {"representative", rationals_to_json(entry.representative)}};
  }
  report["result"] = json{{"ranks", ranks},
                          {"max_rank", profile.max_rank},
                          {"min_nonzero_rank", profile.min_nonzero_rank},
                          {"samples", profile.samples}};
  out.emit(report);
  return kExitOk;
}

int run_constrank_search(std::size_t n, std::size_t r, std::size_t target_m,
                         std::uint64_t seed, std::size_t budget,
                         const std::string& out_path, const Output& out) {
  require_even(r, "--r");
  if (r == 0 || r > n) throw InputError("need 0 < r <= N");
  if (target_m == 0) throw InputError("--m must be >= 1");

  json report = report_base("constrank search", seed);
  report["inputs"] = json{
      {"N", n}, {"r", r}, {"m", target_m}, {"budget", budget}};

  const SearchOutcome outcome = search_constant_rank(n, r, target_m, seed,
                                                     budget);
  json result;
  result["found"] = outcome.space.has_value();
  result["restarts_used"] = outcome.restarts_used;
  result["bound"] = outcome.bound;
  if (outcome.space.has_value()) {
    const SubspaceBoundReport cor = verify_constant_rank_bound(*outcome.space, r);
    result["space"] = to_json(*outcome.space);
    result["verdict"] = verdict_to_json(outcome.verdict, cor.bound, cor.slack);
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) throw InputError("cannot write '" + out_path + "'");
      file << to_json(*outcome.space).dump(2) << "\n";
      result["written_to"] = out_path;
    }
  } else {
    std::ostringstream note;
    note << "no verified space within " << budget << " restarts; note that "
         << "any constant-rank-" << r << " space in N=" << n
         << " has dimension at most " << outcome.bound
         << ", and dimensions above 3 are never certified (NotFound is not "
            "a nonexistence proof)";
    result["note"] = note.str();
  }
  report["result"] = result;
  out.emit(report);

  if (outcome.space.has_value()) {
    const SubspaceBoundReport cor = verify_constant_rank_bound(*outcome.space, r);
    const SubspaceBoundReport proj =
        projectivized_family_check(*outcome.space, r);
    if (!cor.holds || !proj.holds) return kExitFalsification;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lie

LieAlgebraPresentation load_algebra(const std::string& name_or_path,
                                    std::string* resolved_name) {
  if (const CatalogEntry* entry = catalog_find(name_or_path)) {
    *resolved_name = entry->name;
    return entry->algebra;
  }
  const LieAlgebraPresentation algebra =
      lie_from_json(load_json_file(name_or_path));
  *resolved_name = name_or_path;
  return algebra;
}

json jacobi_failure_to_json(const JacobiFailure& failure) {
  return json{{"i", failure.i},
              {"j", failure.j},
              {"k", failure.k},
              {"l", failure.l},
              {"residual", to_string(failure.residual)}};
}

int run_lie(const std::string& action, const std::string& algebra_arg,
            const std::string& lambda_text, std::uint64_t seed,
            std::size_t samples, const Output& out) {
  std::string name;
  const LieAlgebraPresentation algebra = load_algebra(algebra_arg, &name);
  json report = report_base("lie " + action, seed);
  json inputs{{"algebra", name}, {"dim", algebra.dim()}};

  const auto failure = validate(algebra);
  if (action == "validate") {
    report["inputs"] = inputs;
    report["result"] =
        failure.has_value()
            ? json{{"valid", false},
                   {"violated", jacobi_failure_to_json(*failure)}}
            : json{{"valid", true},
                   {"instances_checked",
                    algebra.dim() * (algebra.dim() - 1) * (algebra.dim() - 2) /
                        6 * algebra.dim()}};
    out.emit(report);
    return failure.has_value() ? kExitMath : kExitOk;
  }
  if (failure.has_value()) {
    report["inputs"] = inputs;
    report["error"] = json{{"type", "JacobiFailure"},
                           {"detail", jacobi_failure_to_json(*failure)}};
    out.emit(report);
    return kExitMath;
  }

  if (action == "orbit") {
    const Covector lambda = parse_rational_list(lambda_text);
    if (lambda.size() != algebra.dim()) {
      throw InputError("--lambda length must equal the algebra dimension");
    }
    inputs["lambda"] = covector_to_json(lambda);
    report["inputs"] = inputs;
    report["result"] =
        json{{"orbit_dimension", orbit_dimension(algebra, lambda)}};
    out.emit(report);
    return kExitOk;
  }

  if (action == "minorbit") {
    inputs["samples"] = samples;
    report["inputs"] = inputs;
    const MinOrbitResult result = min_nonzero_orbit_dim(algebra, seed, samples);
    report["result"] = json{{"r", result.r},
                            {"witness", covector_to_json(result.witness)},
                            {"confidence", result.confidence}};
    out.emit(report);
    return kExitOk;
  }

  if (action == "histogram") {
    inputs["samples"] = samples;
    report["inputs"] = inputs;
    const auto histogram = rank_stratification_histogram(algebra, seed, samples);
    json ranks = json::object();
    bool all_even = true;
    for (const auto& [rank, entry] : histogram) {
      all_even = all_even && rank % 2 == 0;
      ranks[std::to_string(rank)] =
          json{{"count", entry.count},
               {"example", covector_to_json(entry.example)}};
    }
    report["result"] = json{{"ranks", ranks}, {"all_even", all_even}};
    out.emit(report);
    return all_even ? kExitOk : kExitFalsification;
  }

  // bound
  inputs["samples"] = samples;
  report["inputs"] = inputs;
  const MinOrbitResult min_orbit = min_nonzero_orbit_dim(algebra, seed, samples);
  const OrbitBoundReport bound = check_min_orbit_bound(algebra, min_orbit.r);
  json result{{"N", bound.n},
              {"r", bound.r},
              {"bound", bound.bound},
              {"slack", bound.slack},
              {"holds", bound.holds},
              {"tight", bound.tight},
              {"witness", covector_to_json(min_orbit.witness)}};
  bool falsified = !bound.holds;
  if (const CatalogEntry* entry = catalog_find(name)) {
    result["expected_r"] = entry->expected_min_orbit;
    if (entry->expected_min_orbit != min_orbit.r) falsified = true;
  }
  report["result"] = result;
  out.emit(report);
  return falsified ? kExitFalsification : kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

int run_bounds(const std::string& kind, std::size_t n, std::size_t r,
               std::size_t e, std::uint64_t seed, const Output& out) {
  BoundQuery query;
  if (kind == "skew") {
    query.kind = BoundQuery::Kind::kSkew;
    require_even(r, "--r");
  } else if (kind == "symmetric") {
    query.kind = BoundQuery::Kind::kSymmetric;
  } else {
    throw InputError("kind must be 'skew' or 'symmetric'");
  }
  if (r > n) throw InputError("need r <= N");
  query.n = n;
  query.r = r;
  query.e = e;

  const std::size_t bound = degeneracy_bound(query);
  json report = report_base("bounds " + kind, seed);
  report["inputs"] = json{{"kind", kind}, {"N", n}, {"r", r}, {"e", e}};
  std::ostringstream statement;
  statement << "a constant-rank-" << r << " base has dimension at most "
            << bound << "; any base of dimension > " << bound
            << " meets the rank-" << (r >= 2 ? r - 2 : 0) << " locus";
  report["result"] = json{{"max_dimension", bound},
                          {"statement", statement.str()}};
  out.emit(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for skew-symmetric rank loci"};
  app.require_subcommand(1);

  Output output;
  std::uint64_t seed = 0;
  app.add_option("--format", output.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "master seed for all randomness")
      ->capture_default_str();

  // poincare
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials");
  poincare->require_subcommand(1);
  PoincareArgs pargs;
  auto* grass2 = poincare->add_subcommand("grass2", "2-plane Grassmannian");
  grass2->add_option("--r", pargs.r, "ambient dimension (even)")->required();
  auto* isotropic =
      poincare->add_subcommand("isotropic", "isotropic 2-plane Grassmannian");
  isotropic->add_option("--r", pargs.r, "ambient dimension (even)")->required();
  auto* flag = poincare->add_subcommand("flag", "full flag variety");
  flag->add_option("--group", pargs.group, "factors, e.g. A2 or A1xC2")
      ->required();
  auto* quotient = poincare->add_subcommand("quotient", "G/P via Levi data");
  quotient->add_option("--group", pargs.group, "group factors")->required();
  quotient->add_option("--levi", pargs.levi,
                       "Levi factors (empty for a Borel)");
  auto* bundle = poincare->add_subcommand("bundle", "fiber bundle product");
  bundle->add_option("--base", pargs.base, "base coefficients, e.g. 1,1")
      ->required();
  bundle->add_option("--fiber", pargs.fiber, "fiber coefficients");
  bundle->add_option("--fiber-grass2", pargs.fiber_grass2,
                     "use the 2-plane Grassmannian of this even r");
  bundle->add_option("--fiber-isotropic", pargs.fiber_isotropic,
                     "use the isotropic Grassmannian of this even r");

  // betti
  auto* betti = app.add_subcommand("betti", "top Betti numbers of bundles");
  std::string betti_text;
  long betti_d = -1;
  std::size_t betti_r = 4;
  betti->add_option("--betti", betti_text,
                    "Betti numbers b_0,b_1,... of the base")
      ->required();
  betti->add_option("--d", betti_d, "complex dimension of the base");
  betti->add_option("--r", betti_r, "rank of the symplectic bundle (even)")
      ->required();

  // constrank
  auto* constrank =
      app.add_subcommand("constrank", "constant-rank skew matrix spaces");
  constrank->require_subcommand(1);
  std::string cr_file;
  std::string cr_out;
  std::size_t cr_n = 0, cr_r = 0, cr_m = 0;
  std::size_t cr_budget = 100;
  std::size_t cr_samples = 1000;
  std::size_t cr_trials = 128;
  auto* verify = constrank->add_subcommand("verify", "check a space from file");
  verify->add_option("--in", cr_file, "space file (JSON)")->required();
  verify->add_option("--r", cr_r, "claimed rank (even)")->required();
  verify->add_option("--trials", cr_trials, "random samples")
      ->capture_default_str();
  auto* profile = constrank->add_subcommand("profile", "rank profile of a space");
  profile->add_option("--in", cr_file, "space file (JSON)")->required();
  profile->add_option("--samples", cr_samples, "random samples")
      ->capture_default_str();
  auto* search = constrank->add_subcommand("search", "seeded random search");
  search->add_option("--N", cr_n, "matrix size")->required();
  search->add_option("--r", cr_r, "target rank (even)")->required();
  search->add_option("--m", cr_m, "target dimension")->required();
  search->add_option("--budget", cr_budget, "restart budget")
      ->capture_default_str();
  search->add_option("--out", cr_out, "write the found space to this file");

  // lie
  auto* lie = app.add_subcommand("lie", "Lie algebra coadjoint geometry");
  lie->require_subcommand(1);
  std::string lie_algebra;
  std::string lie_lambda;
  std::size_t lie_samples = 1000;
  for (const char* action : {"validate", "orbit", "minorbit", "histogram",
                             "bound"}) {
    auto* sub = lie->add_subcommand(action);
    sub->add_option("algebra", lie_algebra, "catalog name or JSON file")
        ->required();
    if (std::string(action) == "orbit") {
      sub->add_option("--lambda", lie_lambda, "covector, e.g. 0,1,0")
          ->required();
    }
    if (std::string(action) == "minorbit" ||
        std::string(action) == "histogram" || std::string(action) == "bound") {
      sub->add_option("--samples", lie_samples, "random covector samples")
          ->capture_default_str();
    }
  }

  // bounds
  auto* bounds = app.add_subcommand("bounds", "degeneracy dimension bounds");
  std::string bounds_kind;
  std::size_t bounds_n = 0, bounds_r = 0, bounds_e = 0;
  bounds->add_option("kind", bounds_kind, "skew or symmetric")->required();
  bounds->add_option("--N", bounds_n, "bundle rank")->required();
  bounds->add_option("--r", bounds_r, "form rank")->required();
  bounds->add_option("--e", bounds_e, "defect")->capture_default_str();

  // let --format/--seed appear after subcommand names
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitInput;
  }

  std::string command;
  for (int i = 1; i < argc && i <= 2; ++i) {
    if (argv[i][0] == '-') break;
    if (!command.empty()) command += ' ';
    command += argv[i];
  }
  try {
    if (poincare->parsed()) {
      for (const char* kind : {"grass2", "isotropic", "flag", "quotient",
                               "bundle"}) {
        if (poincare->get_subcommand(kind)->parsed()) {
          return run_poincare(kind, pargs, seed, output);
        }
      }
    }
    if (betti->parsed()) {
      return run_betti(betti_text, betti_d, betti_r, seed, output);
    }
    if (constrank->parsed()) {
      if (verify->parsed()) {
        return run_constrank_verify(cr_file, cr_r, seed, cr_trials, output);
      }
      if (profile->parsed()) {
        return run_constrank_profile(cr_file, seed, cr_samples, output);
      }
      return run_constrank_search(cr_n, cr_r, cr_m, seed, cr_budget, cr_out,
                                  output);
    }
    if (lie->parsed()) {
      for (const char* action : {"validate", "orbit", "minorbit", "histogram",
                                 "bound"}) {
        if (lie->get_subcommand(action)->parsed()) {
          return run_lie(action, lie_algebra, lie_lambda, seed, lie_samples,
                         output);
        }
      }
    }
    if (bounds->parsed()) {
      return run_bounds(bounds_kind, bounds_n, bounds_r, bounds_e, seed,
                        output);
    }
    std::cerr << "no subcommand\n";
    return kExitInput;
  } catch (const InputError& e) {
    json report = report_base(command, seed);
    report["error"] = json{{"type", "InputError"}, {"message", e.what()}};
    output.emit(report);
    return kExitInput;
  } catch (const ParseError& e) {
    json report = report_base(command, seed);
    report["error"] = json{{"type", "ParseError"}, {"message", e.what()}};
    output.emit(report);
    return kExitInput;
  } catch (const Error& e) {
    json report = report_base(command, seed);
    report["error"] = json{{"type", "MathError"}, {"message", e.what()}};
    output.emit(report);
    return kExitMath;
  }
}
