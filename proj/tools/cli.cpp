#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "rspin/expression.hpp"
#include "rspin/graph_document.hpp"
#include "rspin/oracle.hpp"
#include "rspin/products.hpp"
#include "rspin/strata.hpp"
#include "rspin/suites.hpp"
#include "rspin/window.hpp"

namespace rspin::cli {

namespace {

constexpr int kInvalid = 1;
constexpr int kSuiteFailure = 2;

const std::array<std::string, 2> kSourceNames{"xi1", "xi2"};
const std::array<std::string, 2> kLeftNames{"zeta1", "zeta2"};
const std::array<std::string, 2> kTargetNames{"nu1", "nu2"};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string int_list(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return "[" + join(parts, ", ") + "]";
}

std::string show(const ModuleElement& m, const std::array<std::string, 2>& names) {
  return m.to_string("sigma", names);
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

void header(std::ostream& out, const std::vector<std::string>& args) {
  out << kReportTag << "\n# command: " << join(args, " ") << "\n";
}

// ---- chi -------------------------------------------------------------------

struct ChiArgs {
  int g = 0;
  int n = 0;
  int r = 1;
  std::vector<int> m;
};

int cmd_chi(const ChiArgs& a, std::ostream& out) {
  if (static_cast<int>(a.m.size()) != a.n) {
    throw Error("chi: expected " + std::to_string(a.n) + " type entries, got " +
                std::to_string(a.m.size()));
  }
  const ChiResult c = chi(a.g, a.n, a.r, a.m);
  out << "g = " << a.g << ", n = " << a.n << ", r = " << a.r << ", m = " << int_list(a.m) << "\n";
  if (c.integral) {
    out << "chi = " << c.value << "\n";
  } else {
    out << "chi = non-integral (" << a.r << " does not divide " << c.numerator
        << "; no spin structures of this type)\n";
  }
  return 0;
}

// ---- strata ----------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_strata(const std::string& path, unsigned workers, std::ostream& out) {
  const GraphDocument doc = parse_graph_document(read_file(path));
  const DualGraph graph = doc.graph();
  if (!stability_check(graph)) throw Error("strata: graph is not stable");
  const FieldConfig field =
      doc.field_prime ? FieldConfig(*doc.field_prime, doc.r) : FieldConfig::from_environment(doc.r);
  const int g = graph_genus(graph);
  const int n = graph.marking_count();
  // Type entries sorted by marking.
  std::vector<int> residues(static_cast<std::size_t>(n));
  std::vector<int> shifted(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    residues[k] = positive_mod(doc.m[k], doc.r);
    shifted[k] = residues[k] - 1;
  }
  const ChiResult c = chi(g, n, doc.r, doc.m);
  const auto assignments = enumerate_assignments(graph, doc.r, doc.m, {workers});

  out << "r = " << doc.r << ", field = F_" << field.prime() << "\n";
  out << "genus = " << g << ", markings = " << n << ", vertices = " << graph.vertices().size()
      << ", nodes = " << graph.edges().size() << "\n";
  out << "type m (residues mod r) = " << int_list(residues) << "\n";
  out << "type m - 1 (in [-1, r-1)) = " << int_list(shifted) << "\n";
  if (c.integral) {
    out << "chi = " << c.value << "\n";
  } else {
    out << "chi = non-integral\n";
  }
  out << "dimension = " << deformation_dimension(g, n, 0) << "\n";
  out << "assignments = " << assignments.size() << "\n";

  // Legs in marking order.
  std::vector<const Leg*> legs;
  for (const Leg& leg : graph.legs()) legs.push_back(&leg);
  std::sort(legs.begin(), legs.end(),
            [](const Leg* a, const Leg* b) { return a->marking < b->marking; });

  for (std::size_t s = 0; s < assignments.size(); ++s) {
    const TwistAssignment& a = assignments[s];
    out << "assignment " << (s + 1) << ":\n";
    for (const Leg* leg : legs) {
      const int k = a.leg_twists[static_cast<std::size_t>(leg->marking - 1)];
      out << "  marking " << leg->marking << " at " << graph.vertices()[leg->vertex].id << ": "
          << index_from_twist(k, doc.r).to_string() << "\n";
    }
    for (std::size_t e = 0; e < graph.edges().size(); ++e) {
      const Edge& edge = graph.edges()[e];
      const auto [k1, k2] = a.edge_twists[e];
      out << "  node " << (e + 1) << " " << graph.vertices()[edge.from].id << "-"
          << graph.vertices()[edge.to].id << ": " << index_from_twist(k1, doc.r).to_string()
          << " | " << index_from_twist(k2, doc.r).to_string() << "\n";
    }
  }
  return 0;
}

// ---- local-model -----------------------------------------------------------

struct LocalArgs {
  int r = 1;
  int l = 1;
  int i = 0;
  bool tiers = false;
  bool products = false;
  int window = 0;  // 0 = not requested
};

void print_map(std::ostream& out, const GeneratorMap& map,
               const std::array<std::string, 2>& first_names,
               const std::array<std::string, 2>& second_names) {
  for (std::size_t k = 0; k < map.images().size(); ++k) {
    out << "  " << map.source().generator_label(k, first_names, second_names) << " -> "
        << show(map.image(k), kTargetNames) << "\n";
  }
}

int cmd_local_model(const LocalArgs& a, std::ostream& out) {
  if (a.r < 1 || a.l < 1 || a.r % a.l != 0) throw Error("local-model: need l | r");
  if (a.i < 0 || a.i >= a.l) throw Error("local-model: need 0 <= i < l");
  const int j = a.i == 0 ? 0 : a.l - a.i;
  if (std::gcd(j, a.l) != 1) {
    throw Error("local-model: gcd(j, l) must be 1 for the top tier (j = " + std::to_string(j) +
                ")");
  }
  const FieldConfig config = FieldConfig::from_environment(a.r);
  const Field& field = config.field();
  const ModulePresentation top = module_make(a.i, j, a.l);

  out << "node: l = " << a.l << ", r = " << a.r << ", field = F_" << config.prime() << "\n";
  out << "top tier: " << top.name() << "\n";
  out << "relations:\n";
  for (const Relation& rel : defining_relations(top, field)) out << "  " << rel.label << "\n";
  const int k1 = marking_twist(1, a.l, j, a.r);
  out << "half-edge twists: " << index_from_twist(k1, a.r).to_string() << " | "
      << index_from_twist(balanced_partner(k1, a.r), a.r).to_string() << "\n";

  if (a.tiers) {
    for (int d : divisors(a.r)) {
      const TierIndex t = tier_twists(a.i, j, a.l, a.r, d);
      out << "tier " << d << ": " << module_make(t.i, t.j, a.l).name() << "\n";
    }
    for (int d : divisors(a.r)) {
      for (int e : divisors(d)) {
        if (e == d) continue;
        const GeneratorMap map = power_map(d, e, a.i, j, a.l, a.r, field);
        out << "c_{" << d << "->" << e << "}: Sym^" << d / e << " " << map.source().first.name()
            << " -> " << map.target().name()
            << ", cokernel length at t=0: " << cokernel_length(map, TMode::specialized(0)) << "\n";
        print_map(out, map, kSourceNames, kSourceNames);
      }
    }
  }
  if (a.products) {
    const std::vector<int> divs = divisors(a.r);
    for (std::size_t p = 0; p < divs.size(); ++p) {
      for (std::size_t q = p; q < divs.size(); ++q) {
        const TierIndex s = tier_twists(a.i, j, a.l, a.r, divs[p]);
        const TierIndex t = tier_twists(a.i, j, a.l, a.r, divs[q]);
        const GeneratorMap map = product_map(s.i, s.j, t.i, t.j, a.l, field);
        out << "tier " << divs[p] << " (x) tier " << divs[q] << ": " << map.source().first.name()
            << " (x) " << map.source().second.name() << " -> " << map.target().name() << "\n";
        print_map(out, map, kLeftNames, kSourceNames);
      }
    }
  }
  if (a.window > 0) {
    const AlgebraWindow w = algebra_window(a.i, j, a.l, a.r, a.window, field);
    out << "window D = " << a.window << ":\n";
    for (const auto& [d, pres] : w.tiers()) out << "  G_" << d << " = " << pres.name() << "\n";
    out << "  products = " << w.products().size() << "\n";
    const bool units = w.unit_laws_hold();
    const auto failure = w.associativity_failure();
    out << "  unit laws: " << (units ? "hold" : "FAIL") << "\n";
    out << "  associativity: " << (failure ? "FAIL " + *failure : std::string("holds")) << "\n";
    if (!units || failure) return kSuiteFailure;
  }
  return 0;
}

// ---- verify-algebra --------------------------------------------------------

int cmd_verify(int max_r, unsigned workers, std::ostream& out) {
  const SuiteBounds bounds = bounds_for_max_r(max_r);
  SuiteOptions options{workers, std::nullopt};
  if (const char* env = std::getenv(kFieldPrimeEnv); env != nullptr && *env != '\0') {
    // Every level up to max_r must embed its roots of unity in the override field.
    const FieldConfig probe = FieldConfig::from_environment(1);
    for (int r = 1; r <= bounds.max_r; ++r) FieldConfig(probe.prime(), r);
    options.field_prime = probe.prime();
  }
  out << "bounds: l <= " << bounds.max_l << " (laws l <= " << bounds.max_law_l
      << "), r <= " << bounds.max_r << ", window r <= " << bounds.max_window_r
      << ", degree <= " << bounds.max_degree << "\n";
  bool ok = true;
  for (const SuiteResult& s : run_all_suites(bounds, options)) {
    out << (s.pass() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases)\n";
    for (const std::string& f : s.failures) out << "  - " << f << "\n";
    ok = ok && s.pass();
  }
  out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kSuiteFailure;
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle(const std::string& expr, int l, int b, std::ostream& out) {
  const FieldConfig config = FieldConfig::from_environment(l);
  const MonomialModel model(config.field(), l, b);
  const SparsePolynomial poly = parse_polynomial(expr, config.field(), {"t", "z", "w", "S"}, {"S"});
  UpstairsElement e(config.field());
  for (const auto& [exps, c] : poly) e.add_term(c, exps[0], exps[1], exps[2], exps[3]);
  const UpstairsElement inv = model.invariant_part(e);

  out << "model: l = " << l << ", b = " << model.spin_character() << ", field = F_"
      << config.prime() << "\n";
  out << "normal form: " << e.to_string() << "\n";
  out << "invariant part: " << inv.to_string() << "\n";
  if (!(inv == e)) {
    out << "downstairs: not invariant\n";
  } else if (const auto n = e.spin_degree()) {
    const ModuleElement m = model.descend(e, *n);
    out << "downstairs: " << show(m, kTargetNames) << " in " << m.presentation().name()
        << " = pi_* L^" << *n << "\n";
  } else {
    out << "downstairs: mixed S-degree\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local algebra of twisted r-spin curves", "rspin"};
  app.require_subcommand(1);

  ChiArgs chi_args;
  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic chi_{r,m}");
  chi_cmd->add_option("g", chi_args.g, "genus")->required();
  chi_cmd->add_option("n", chi_args.n, "number of markings")->required();
  chi_cmd->add_option("r", chi_args.r, "level")->required();
  chi_cmd->add_option("m", chi_args.m, "type entries m_1 .. m_n");

  std::string graph_path;
  unsigned strata_workers = 1;
  auto* strata_cmd = app.add_subcommand("strata", "Admissible twist assignments on a dual graph");
  strata_cmd->add_option("graph", graph_path, "graph file (JSON)")->required();
  strata_cmd->add_option("--workers", strata_workers, "enumeration threads")
      ->check(CLI::Range(1u, 64u));

  LocalArgs local;
  auto* local_cmd = app.add_subcommand("local-model", "Presentations and maps at one node");
  local_cmd->add_option("--r", local.r, "level")->required();
  local_cmd->add_option("--l", local.l, "node index")->required();
  local_cmd->add_option("--i", local.i, "top-tier exponent i_r")->required();
  auto* tiers_flag = local_cmd->add_flag("--tiers", local.tiers, "tiers and power maps");
  auto* products_flag = local_cmd->add_flag("--products", local.products, "products of tiers");
  auto* window_opt = local_cmd->add_option("--window", local.window, "algebra window radius D");
  tiers_flag->excludes(products_flag)->excludes(window_opt);
  products_flag->excludes(window_opt);

  int max_r = 12;
  unsigned verify_workers = 1;
  auto* verify_cmd = app.add_subcommand("verify-algebra", "Run the algebraic property suites");
  verify_cmd->add_option("--max-r", max_r, "largest level")->required();
  verify_cmd->add_option("--workers", verify_workers, "suite threads")->check(CLI::Range(1u, 64u));

  std::string expr;
  int oracle_l = 1;
  int oracle_b = 1;
  auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate in the upstairs monomial model");
  oracle_cmd->add_option("--expr", expr, "polynomial in t, z, w, S (S may be inverted)")
      ->required();
  oracle_cmd->add_option("--l", oracle_l, "node index")->required();
  oracle_cmd->add_option("--b", oracle_b, "character of S")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    std::ostringstream report;
    int code = 0;
    if (*chi_cmd) {
      code = cmd_chi(chi_args, report);
    } else if (*strata_cmd) {
      code = cmd_strata(graph_path, strata_workers, report);
    } else if (*local_cmd) {
      if (window_opt->count() > 0 && local.window < 1) {
        throw Error("local-model: --window must be positive");
      }
      code = cmd_local_model(local, report);
    } else if (*verify_cmd) {
      code = cmd_verify(max_r, verify_workers, report);
    } else if (*oracle_cmd) {
      code = cmd_oracle(expr, oracle_l, oracle_b, report);
    }
    header(out, args);
    out << report.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace rspin::cli
