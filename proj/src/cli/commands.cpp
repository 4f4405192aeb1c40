#include "partcat/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "partcat/catalysis.hpp"
#include "partcat/errors.hpp"
#include "partcat/sampling.hpp"
#include "partcat/search.hpp"
#include "partcat/structure.hpp"
#include "partcat/transform.hpp"

namespace partcat::cli {
namespace {

json input_json(const VectorInput& in, int digits) {
  json j = {{"source", in.source}, {"sorted", vector_json(sort_desc(in.vec), digits)}, {"digest", digest(in.vec)}};
  if (in.label) j["label"] = *in.label;
  return j;
}

json indices_json(const std::vector<std::size_t>& v) { return json(v); }

json tuple_json(const std::optional<TupleR>& t) { return t ? json(*t) : json(nullptr); }

json constraint_json(const RatioConstraint& rc, int digits) {
  return {{"i", rc.i},
          {"j", rc.j},
          {"relation", rc.kind == RatioConstraint::Kind::strict_less ? "<" : ">"},
          {"bound", rational_json(rc.bound, digits)}};
}

// Re-validates a catalyst through max_prob before it is printed.
json verified_witness(const ProbVec& x, const ProbVec& y, const ProbVec& c, int digits) {
  CatalystVerdict v = is_partial_catalyst(x, y, c);
  if (!v.is_partial) throw std::logic_error("refusing to print unverified witness " + to_string(c));
  return {{"catalyst", vector_json(c, digits)},
          {"p_without", rational_json(v.p_without, digits)},
          {"p_with", rational_json(*v.p_with, digits)}};
}

ProbVec require_positive(const VectorInput& c) {
  if (!c.vec.strictly_positive()) throw ParseError("catalyst must have strictly positive components");
  return c.vec;
}

}  // namespace

CommandOutput cmd_prob(const VectorInput& x, const VectorInput& y, const GlobalOptions& opt) {
  const int d = opt.digits;
  TransformReport t = analyze_transform(x.vec, y.vec);
  json result = {{"p", rational_json(t.p, d)},
                 {"critical_set", indices_json(t.critical.indices)},
                 {"last_ratio", ratio_json(t.last_ratio, d)},
                 {"deterministic", t.deterministic},
                 {"partial_catalyst_exists", t.critical.hypothesis_holds}};
  return {json{{"inputs", {{"x", input_json(x, d)}, {"y", input_json(y, d)}}}, {"result", result}}, {}, kAffirmative};
}

CommandOutput cmd_check(const VectorInput& x, const VectorInput& y, const VectorInput& c, const GlobalOptions& opt) {
  const int d = opt.digits;
  ProbVec cat = require_positive(c);
  CatalystVerdict direct = is_partial_catalyst(x.vec, y.vec, cat);
  json result = {{"p_without", rational_json(direct.p_without, d)},
                 {"p_with", rational_json(*direct.p_with, d)},
                 {"is_partial", direct.is_partial}};
  const std::size_t n = std::max(x.vec.size(), y.vec.size());
  if (catalysis_hypothesis(x.vec, y.vec) && pad_to(y.vec, n).strictly_positive()) {
    CatalystVerdict comb = pcon_predicate(x.vec, y.vec, cat);
    result["combinatorial"] = {{"applicable", true},
                               {"is_partial", comb.is_partial},
                               {"blocking_tuple", tuple_json(comb.blocking_tuple)},
                               {"agrees", comb.is_partial == direct.is_partial}};
  } else {
    result["combinatorial"] = {{"applicable", false}};
  }
  json inputs = {{"x", input_json(x, d)}, {"y", input_json(y, d)}, {"c", input_json(c, d)}};
  return {json{{"inputs", inputs}, {"result", result}}, {}, direct.is_partial ? kAffirmative : kNegative};
}

CommandOutput cmd_find(const VectorInput& x, const VectorInput& y, const FindArgs& args, const GlobalOptions& opt) {
  const int d = opt.digits;
  json inputs = {{"x", input_json(x, d)}, {"y", input_json(y, d)}};
  json result;
  if (!partial_catalyst_exists(x.vec, y.vec)) {
    result = {{"mode", "precondition"},
              {"exists", false},
              {"reason", "P(x->y) >= min{x_n/y_n, 1}: no partial catalyst of any dimension"}};
    return {json{{"inputs", inputs}, {"result", result}}, {}, kNegative};
  }
  if (args.grid) {
    const std::size_t k = args.k.value_or(2);
    json hits = json::array();
    for (const ProbVec& c : grid_oracle(x.vec, y.vec, k, *args.grid)) {
      hits.push_back(verified_witness(x.vec, y.vec, c, d));
    }
    bool any = !hits.empty();
    result = {{"mode", "grid"}, {"dimension", k}, {"grid", *args.grid}, {"exists", any}, {"catalysts", hits}};
    return {json{{"inputs", inputs}, {"result", result}}, {}, any ? kAffirmative : kNegative};
  }
  SearchResult r = (args.min_dim || !args.k) ? min_catalyst_dimension(x.vec, y.vec) : decide_k_dim(x.vec, y.vec, *args.k);
  result = {{"mode", (args.min_dim || !args.k) ? "min-dim" : "k"}, {"exists", r.exists}, {"dimension", r.dimension}};
  if (r.exists) {
    result["witness"] = verified_witness(x.vec, y.vec, *r.witness, d);
    json sel = json::array();
    for (const RatioConstraint& rc : *r.selections) sel.push_back(constraint_json(rc, d));
    result["selections"] = sel;
  }
  return {json{{"inputs", inputs}, {"result", result}}, {}, r.exists ? kAffirmative : kNegative};
}

CommandOutput cmd_set(const VectorInput& y, const SetArgs& args, const GlobalOptions& opt) {
  const int d = opt.digits;
  json inputs = {{"y", input_json(y, d)}, {"lambda", rational_json(args.lambda, d)}};
  if (args.x) inputs["x"] = input_json(*args.x, d);
  if (args.c) inputs["c"] = input_json(*args.c, d);
  json result = {{"op", args.op}};
  int code = kAffirmative;

  if (args.op == "extremes") {
    json pts = json::array();
    for (const ProbVec& p : s_extreme_points(y.vec, args.lambda)) pts.push_back(vector_json(p, d));
    result["y_lambda"] = vector_json(y_lambda(y.vec, args.lambda), d);
    result["count"] = pts.size();
    result["extreme_points"] = pts;
  } else if (args.op == "equals-s") {
    bool eq = t_equals_s(y.vec, args.lambda);
    result["equals"] = eq;
    if (!eq) result["separating_witness"] = vector_json(t_separating_witness(y.vec, args.lambda), d);
    code = eq ? kAffirmative : kNegative;
  } else if (args.op == "boundary") {
    if (!args.x || !args.c) throw CLI::ValidationError("--op boundary needs --x and a certificate --c");
    BoundaryClass b = t_boundary_classify(args.x->vec, y.vec, args.lambda, require_positive(*args.c));
    result["classification"] = to_string(b);
  } else if (args.op == "membership") {
    if (!args.x) throw CLI::ValidationError("--op membership needs --x");
    MembershipVerdict v = t_k_membership(args.x->vec, y.vec, args.lambda, args.k, args.grid);
    result["s_member"] = s_membership(args.x->vec, y.vec, args.lambda);
    result["status"] = to_string(v.status);
    result["k"] = args.k;
    result["grid"] = args.grid;
    if (v.certificate) {
      ProbVec xs = sort_desc(args.x->vec);
      ProbVec ys = sort_desc(y.vec);
      result["certificate"] = vector_json(*v.certificate, d);
      result["p_with"] = rational_json(max_prob(tensor(xs, *v.certificate), tensor(ys, *v.certificate)), d);
    }
    code = v.status == MembershipStatus::member_with_certificate ? kAffirmative : kNegative;
  } else {
    throw CLI::ValidationError("unknown --op " + args.op);
  }
  return {json{{"inputs", inputs}, {"result", result}}, {}, code};
}

CommandOutput cmd_simplex(const VectorInput& y, const SimplexArgs& args, const GlobalOptions& opt) {
  if (y.vec.size() != 3) throw DimensionError("simplex output needs a 3-dimensional target");
  if (args.resolution < 10) throw CLI::ValidationError("--resolution must be at least 10");
  const bool with_t = args.set == "Tk";
  if (!with_t && args.set != "S") throw CLI::ValidationError("--set must be S or Tk");
  std::vector<ProbVec> candidates;
  if (with_t && args.k > 1) candidates = catalyst_grid(args.k, args.grid);

  std::ostringstream os;
  os << "x1,x2,x3,s_member" << (with_t ? ",tk_member" : "") << "\n";
  const long r = static_cast<long>(args.resolution);
  for (long i = 0; i <= r; ++i) {
    for (long j = 0; i + j <= r; ++j) {
      ProbVec x{rat(i, r), rat(j, r), rat(r - i - j, r)};
      bool s = args.lambda == 0 || s_membership(x, y.vec, args.lambda);
      os << to_decimal_string(x[0], opt.digits) << ',' << to_decimal_string(x[1], opt.digits) << ','
         << to_decimal_string(x[2], opt.digits) << ',' << (s ? 1 : 0);
      if (with_t) {
        bool t = s;
        if (!t && args.lambda > 0) {
          t = t_k_membership(x, y.vec, args.lambda, candidates).status == MembershipStatus::member_with_certificate;
        }
        os << ',' << (t ? 1 : 0);
      }
      os << "\n";
    }
  }
  return {json{}, os.str(), kAffirmative};
}

CommandOutput cmd_props(std::size_t trials, const GlobalOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  std::size_t nielsen = 0, s_routes = 0, concave = 0, dsum = 0, tens = 0, comb = 0, comb_checked = 0;
  const Rat quarter(1, 4), half(1, 2), three_q(3, 4);
  const Rat ts[] = {quarter, half, three_q};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = dim(rng);
    ProbVec x = random_prob_vec(rng, n, 20);
    ProbVec x2 = random_prob_vec(rng, n, 20);
    ProbVec y = random_prob_vec(rng, n, 20);
    ProbVec y2 = random_prob_vec(rng, n, 20);
    Rat p = max_prob(x, y);
    if ((p == 1) != is_majorized(x, y)) ++nielsen;
    const Rat& lam = ts[t % 3];
    bool a = is_majorized(x, y_lambda(y, lam));
    bool b = is_super_majorized(x, y.scaled(lam));
    if (a != b || a != (p >= lam)) ++s_routes;
    std::vector<Rat> mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = lam * x[i] + (1 - lam) * x2[i];
    if (max_prob(ProbVec(mix), y) < lam * p + (1 - lam) * max_prob(x2, y)) ++concave;
    Rat q = max_prob(x2, y2);
    if (max_prob(direct_sum(x.scaled(lam), x2.scaled(Rat(1 - lam))), direct_sum(y.scaled(lam), y2.scaled(Rat(1 - lam)))) <
        std::min(p, q)) {
      ++dsum;
    }
    if (max_prob(tensor(x, x2), tensor(y, y2)) < p * q) ++tens;
    if (catalysis_hypothesis(x, y)) {
      ProbVec c = random_prob_vec(rng, 2 + t % 2, 20);
      ++comb_checked;
      if (pcon_predicate(x, y, c).is_partial != is_partial_catalyst(x, y, c).is_partial) ++comb;
    }
  }
  json violations = {{"nielsen", nielsen},          {"s_lambda_routes", s_routes},
                     {"concavity", concave},        {"direct_sum_bound", dsum},
                     {"tensor_bound", tens},        {"combinatorial_vs_direct", comb}};
  bool clean = nielsen + s_routes + concave + dsum + tens + comb == 0;
  json result = {{"trials", trials}, {"seed", opt.seed}, {"combinatorial_checked", comb_checked},
                 {"violations", violations}, {"all_hold", clean}};
  return {json{{"result", result}}, {}, clean ? kAffirmative : kNegative};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partial-catalyst analysis for probabilistic entanglement transformations", "partcat"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_option("--digits", opt.digits, "Decimal places in approximate renderings")->check(CLI::Range(0, 60));
  app.add_flag("--unnormalized", opt.unnormalized, "Rescale input vectors that do not sum to 1");
  app.add_option("--seed", opt.seed, "Seed for randomized commands");
  app.add_flag("--quiet", opt.quiet, "Print nothing; report via exit code only");

  std::string xs, ys, cs;
  auto* prob = app.add_subcommand("prob", "Optimal conversion probability, critical set, catalyst existence");
  prob->add_option("x", xs, "Source vector (file or comma list)")->required();
  prob->add_option("y", ys, "Target vector")->required();

  auto* check = app.add_subcommand("check", "Decide whether c is a partial catalyst for x -> y");
  check->add_option("x", xs)->required();
  check->add_option("y", ys)->required();
  check->add_option("c", cs)->required();

  FindArgs find_args;
  std::size_t find_k = 0, find_grid = 0;
  auto* find = app.add_subcommand("find", "Search for partial catalysts");
  find->add_option("x", xs)->required();
  find->add_option("y", ys)->required();
  auto* k_opt = find->add_option("--k", find_k, "Catalyst dimension")->check(CLI::Range(2, 12));
  find->add_flag("--min-dim", find_args.min_dim, "Smallest catalyst dimension with a witness");
  auto* grid_opt = find->add_option("--grid", find_grid, "List grid catalysts with components in 1..D")->check(CLI::Range(2, 400));

  SetArgs set_args;
  std::string lambda_text = "1/2", set_x, set_c;
  auto* set = app.add_subcommand("set", "Structure of S^lambda(y) and T^lambda(y)");
  set->add_option("y", ys)->required();
  set->add_option("--lambda", lambda_text, "Probability threshold")->required();
  set->add_option("--op", set_args.op, "extremes | equals-s | boundary | membership")
      ->required()
      ->check(CLI::IsMember({"extremes", "equals-s", "boundary", "membership"}));
  set->add_option("--x", set_x, "State to classify");
  set->add_option("--c", set_c, "Certificate catalyst (boundary)");
  set->add_option("--k", set_args.k, "Catalyst dimension (membership)")->check(CLI::Range(1, 8));
  set->add_option("--grid", set_args.grid, "Grid density (membership)")->check(CLI::Range(1, 400));

  SimplexArgs simplex_args;
  std::string simplex_lambda = "1/2";
  auto* simplex = app.add_subcommand("simplex", "Membership table over a barycentric grid of the 3-simplex");
  simplex->add_option("y", ys)->required();
  simplex->add_option("--lambda", simplex_lambda)->required();
  simplex->add_option("--resolution", simplex_args.resolution, "Grid steps per edge (>= 10)");
  simplex->add_option("--set", simplex_args.set, "S or Tk")->check(CLI::IsMember({"S", "Tk"}));
  simplex->add_option("--k", simplex_args.k)->check(CLI::Range(1, 6));
  simplex->add_option("--grid", simplex_args.grid)->check(CLI::Range(1, 200));

  std::size_t trials = 200;
  auto* props = app.add_subcommand("props", "Seeded randomized invariant sweep");
  props->add_option("--trials", trials)->check(CLI::Range(1, 1000000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "partcat: " << e.what() << "\n";
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  CommandOutput result;
  std::string name;
  try {
    auto load = [&](const std::string& s) { return load_vector(s, opt.unnormalized); };
    if (*prob) {
      name = "prob";
      result = cmd_prob(load(xs), load(ys), opt);
    } else if (*check) {
      name = "check";
      result = cmd_check(load(xs), load(ys), load(cs), opt);
    } else if (*find) {
      name = "find";
      if (*k_opt) find_args.k = find_k;
      if (*grid_opt) find_args.grid = find_grid;
      result = cmd_find(load(xs), load(ys), find_args, opt);
    } else if (*set) {
      name = "set";
      set_args.lambda = parse_rat(lambda_text);
      if (!set_x.empty()) set_args.x = load(set_x);
      if (!set_c.empty()) set_args.c = load(set_c);
      result = cmd_set(load(ys), set_args, opt);
    } else if (*simplex) {
      name = "simplex";
      simplex_args.lambda = parse_rat(simplex_lambda);
      if (simplex_args.lambda < 0 || simplex_args.lambda > 1) throw CLI::ValidationError("--lambda must lie in [0, 1]");
      result = cmd_simplex(load(ys), simplex_args, opt);
    } else if (*props) {
      name = "props";
      result = cmd_props(trials, opt);
    }
  } catch (const ParseError& e) {
    err << "partcat: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "partcat: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "partcat: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "partcat: " << e.what() << "\n";
    return kUsage;
  }

  if (opt.quiet) return result.exit_code;
  if (!result.table.empty()) {
    out << result.table;
    return result.exit_code;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  json doc = {{"format", "partcat-report/1"}, {"command", name}, {"argv", args}};
  doc.update(result.report);
  doc["timing_ms"] = ms;
  out << doc.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace partcat::cli
