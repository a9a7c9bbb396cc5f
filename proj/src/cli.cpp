#include "goeritz/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "goeritz/braid2.hpp"
#include "goeritz/goeritz.hpp"
#include "goeritz/random.hpp"
#include "goeritz/straighten.hpp"
#include "goeritz/width.hpp"
#include "goeritz/word_parser.hpp"

namespace goeritz::cli {

using nlohmann::ordered_json;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

ordered_json arc_json(const ArcClass& a) {
  return ordered_json{{"w", a.w.to_string()}, {"parity", a.parity}};
}

ordered_json config_json(const RunConfig& c) {
  return ordered_json{{"genus", c.genus}, {"holes", c.holes}, {"seed", c.seed},   {"grid", c.grid},
                      {"eps", c.eps},     {"b0", c.b0},       {"kappa", c.kappa}, {"r", c.r},
                      {"tol", c.tol},     {"cases", c.cases}, {"word", c.word},   {"target", c.target}};
}

std::vector<std::string> inputs(const RunConfig& c, const std::string& primary, const char* flag) {
  std::vector<std::string> out;
  if (!primary.empty()) out.push_back(primary);
  for (const auto& line : c.batch)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  if (out.empty()) throw UsageError(std::string("missing ") + flag + " (or a word list on stdin)");
  return out;
}

void add(Report& rep, std::string name, bool pass, std::string detail = {}) {
  rep.checks.push_back({std::move(name), pass, std::move(detail)});
}

// ---------------------------------------------------------------- commands

void cmd_eval(const RunConfig& c, Report& rep) {
  rep.result = ordered_json::array();
  for (const auto& text : inputs(c, c.word, "--word")) {
    const GoeritzWord w = parse_goeritz_word(text, c.genus);
    const ArcClass t = g_tau(w);
    rep.result.push_back({{"word", w.to_string()},
                          {"terminal_arc", arc_json(t)},
                          {"freewheeling", t.w.is_identity()},
                          {"rotor_exponent", rotor_exponent(w)}});
    add(rep, "terminal arc bounds a disk in the handlebody: " + w.to_string(), is_realizable(t.w),
        t.w.to_string());
  }
}

void cmd_factor(const RunConfig& c, Report& rep) {
  rep.result = ordered_json::array();
  for (const auto& text : inputs(c, c.target, "--target")) {
    const ArcClass t = parse_target(text, c.genus);
    ordered_json item{{"target", arc_json(t)}};
    if (!is_realizable(t.w)) {
      item["factor"] = nullptr;
      rep.result.push_back(item);
      add(rep, "target is realizable as a terminal arc: " + t.to_string(), false,
          "projection to the longitudes is nontrivial");
      continue;
    }
    const GoeritzWord f = g_factor(t);
    const ArcClass back = g_tau(f);
    item["factor"] = f.to_string();
    item["terminal_arc_of_factor"] = arc_json(back);
    rep.result.push_back(item);
    add(rep, "factor realizes the target arc: " + t.to_string(), arc_equal(back, t), back.to_string());
  }
}

void cmd_decompose(const RunConfig& c, Report& rep) {
  rep.result = ordered_json::array();
  for (const auto& text : inputs(c, c.word, "--word")) {
    const GoeritzWord w = parse_goeritz_word(text, c.genus);
    const Decomposition d = g_decompose(w);
    const ArcClass tw = g_tau(w);
    const ArcClass ta = g_tau(d.anchored_part);
    rep.result.push_back({{"word", w.to_string()},
                          {"anchored_part", d.anchored_part.to_string()},
                          {"residual", d.residual.to_string()},
                          {"rotor_exponent", rotor_exponent(w)}});
    add(rep, "residual fixes the reference arc: " + w.to_string(), g_is_freewheeling(d.residual),
        g_tau(d.residual).to_string());
    add(rep, "anchored part has the same terminal arc: " + w.to_string(), surface_equal(tw.w, ta.w),
        tw.to_string() + " vs " + ta.to_string());
  }
}

void cmd_width(const RunConfig& c, Report& rep) {
  rep.result = ordered_json::array();
  for (const auto& text : inputs(c, c.word, "--word")) {
    const GoeritzWord w = parse_goeritz_word(text, c.genus);
    const Schedule s = w_canonical(w);
    const int width = w_width(s);
    rep.result.push_back({{"word", w.to_string()}, {"schedule", s.to_string()}, {"width", width}});
    add(rep, "canonical schedule has width at most 1: " + w.to_string(), width <= 1,
        "width " + std::to_string(width));
  }
}

void cmd_thin(const RunConfig& c, Report& rep) {
  rep.result = ordered_json::array();
  for (const auto& text : inputs(c, c.word, "--word")) {
    const GoeritzWord w = parse_goeritz_word(text, c.genus);
    const ThinResult t = w_thin(w);
    rep.result.push_back({{"word", w.to_string()},
                          {"residual", t.residual.to_string()},
                          {"anchored_part", t.anchored_part.to_string()},
                          {"thin_word", t.word.to_string()},
                          {"schedule", t.schedule.to_string()},
                          {"width", t.width}});
    add(rep, "thin representative has width at most 1: " + w.to_string(), t.width <= 1,
        "width " + std::to_string(t.width));
    add(rep, "thin representative has the same terminal arc: " + w.to_string(),
        arc_equal(g_tau(t.word), g_tau(w)), g_tau(t.word).to_string());
  }
}

void relation_checks(int p, Report& rep, ordered_json& result) {
  const PlanarModel m(p);
  const Braid2Elt rho = Braid2Elt::generator(m, Braid2Kind::Rotor);
  Braid2Elt prod = Braid2Elt::identity(m);
  for (int i = 1; i <= p; ++i) prod = prod * Braid2Elt::generator(m, Braid2Kind::Anchored, i);
  const std::string tag = " (p=" + std::to_string(p) + ")";
  add(rep, "rotor squared equals the product of the anchored generators" + tag,
      b2_equal(prod, rho.pow(2)));
  int bad = 0;
  std::string first;
  std::vector<Braid2Elt> gens{rho};
  for (int i = 1; i <= p; ++i) {
    gens.push_back(Braid2Elt::generator(m, Braid2Kind::Anchored, i));
    gens.push_back(Braid2Elt::generator(m, Braid2Kind::Freewheel, i));
  }
  for (const auto& g : gens) {
    const auto v = invariant_violations(g);
    bad += static_cast<int>(v.size());
    if (!v.empty() && first.empty()) first = v.front();
  }
  add(rep, "generators fix boundary classes and permute the marked points" + tag, bad == 0, first);
  bool parity_ok = b2_parity(rho) == 1 && b2_parity(rho.pow(2)) == 0;
  for (std::size_t k = 1; k < gens.size(); ++k) parity_ok = parity_ok && b2_parity(gens[k]) == 0;
  add(rep, "parity to the sphere braid group: rotor odd, anchored and freewheeling even" + tag, parity_ok);
  ordered_json gen_tables = ordered_json::object();
  gen_tables["rotor"] = rho.to_string();
  for (int i = 1; i <= p; ++i) {
    gen_tables["anchored_" + std::to_string(i)] = gens[2 * i - 1].to_string();
    gen_tables["freewheel_" + std::to_string(i)] = gens[2 * i].to_string();
  }
  result["p=" + std::to_string(p)] = {{"boundary_word", m.boundary_word().to_string()},
                                      {"generators", gen_tables}};
}

void cmd_relations(const RunConfig& c, Report& rep) {
  rep.result = ordered_json::object();
  relation_checks(c.holes, rep, rep.result);
  if (c.holes == 1) {
    const PlanarModel m(1);
    const Braid2Elt rho = Braid2Elt::generator(m, Braid2Kind::Rotor);
    bool nontrivial = true;
    for (int k = 1; k <= 20; ++k) nontrivial = nontrivial && !b2_equal(rho.pow(k), Braid2Elt::identity(m));
    add(rep, "rotor has infinite order in the disk braid group (k=1..20)", nontrivial);
  }
}

void cmd_appendix(const RunConfig& c, Report& rep) {
  using namespace numerics;
  if (c.eps <= 0 || c.tol <= 0 || c.grid < 2) throw UsageError("--eps, --tol must be positive and --grid >= 2");
  const BumpProfile<double> bump{c.eps, c.b0};
  const double sup = BumpProfile<double>::sup_s_dphi();
  double grid_sup = 0;
  for (const auto& rs : bump.radial_samples(16 * c.grid)) grid_sup = std::max(grid_sup, rs.s_dphi);
  add(rep, "profile satisfies sup s phi'(s) <= b0", sup <= c.b0 + c.tol,
      "sup " + fmt(sup) + ", grid max " + fmt(grid_sup) + ", b0 " + fmt(c.b0));

  double max_norm = 0;
  for (int n : {2, 3}) {
    for (int it = 0; it <= 16; ++it) {
      const double t = it / 16.0;
      for (const auto& d : unit_directions<double>(n, c.grid)) {
        for (int ir = 0; ir <= c.grid; ++ir) {
          const Vector<double> y = d * (2 * c.eps * ir / c.grid);
          max_norm = std::max(max_norm, lambda_jacobian_norm<double>(bump, t, y));
        }
      }
    }
  }
  add(rep, "Jacobian of the radial homotopy is bounded by 1 + b0", max_norm <= 1 + c.b0 + c.tol,
      "max norm " + fmt(max_norm));

  const auto wr = worrisome_scan<double>(c.r, bump, c.grid, c.grid);
  const bool predicted = std::abs(c.r) * sup / 2 >= 1;
  add(rep, "shear T=[[1,r],[0,1]] with the bump profile: singular iff |r| sup s phi' / 2 >= 1",
      wr.singular_witness == predicted, "min coefficient " + fmt(wr.min_coefficient));
  add(rep, "shear coefficient stays above 1 - |r| b0 / 2", wr.min_coefficient >= 1 - std::abs(c.r) * c.b0 / 2 - c.tol,
      fmt(wr.min_coefficient));

  Matrix<double> T(2, 2);
  T << 1, c.r, 0, 1;
  const auto path = [T](double) { return T; };
  const double k12 = kappa1<double>(T) * kappa2<double>(T);
  const double kappa = c.kappa > 0 ? c.kappa : 0.5 * k12;
  Stage5Grid grid{8, 16, c.grid, c.grid};
  const auto s5 = stage5_scan<double>(path, KappaProfile<double>{kappa, 0.1}, grid);
  add(rep, "orthogonalizing homotopy with kappa < kappa1 kappa2 stays nonsingular",
      !s5.precondition_ok || s5.min_det > 0,
      "kappa " + fmt(kappa) + ", kappa1 kappa2 " + fmt(s5.kappa1_kappa2) + ", min det " + fmt(s5.min_det) +
          (s5.precondition_ok ? "" : " (precondition refused)"));
  const auto s5b = stage5_scan<double>(path, bump, grid);
  add(rep, "orthogonalizing homotopy with the bump profile is singular iff the shear scan is",
      (s5b.min_det <= 0) == wr.singular_witness, "min det " + fmt(s5b.min_det));

  rep.result = {{"sup_s_dphi", sup},
                {"max_jacobian_norm", max_norm},
                {"worrisome",
                 {{"r", c.r},
                  {"min_coefficient", wr.min_coefficient},
                  {"argmin_theta", wr.argmin_theta},
                  {"singular_witness", wr.singular_witness},
                  {"samples", wr.samples}}},
                {"stage5_kappa_profile",
                 {{"kappa", kappa},
                  {"kappa1_kappa2", s5.kappa1_kappa2},
                  {"precondition_ok", s5.precondition_ok},
                  {"min_det", s5.min_det},
                  {"samples", s5.samples}}},
                {"stage5_bump_profile",
                 {{"kappa", s5b.kappa},
                  {"kappa1_kappa2", s5b.kappa1_kappa2},
                  {"precondition_ok", s5b.precondition_ok},
                  {"min_det", s5b.min_det},
                  {"samples", s5b.samples}}}};
}

void cmd_selftest(const RunConfig& c, Report& rep) {
  Rng rng(c.seed);
  rep.result = ordered_json::object();
  for (int p = 1; p <= 6; ++p) relation_checks(p, rep, rep.result);

  long decomposition_failures = 0, width_failures = 0, factor_failures = 0, parity_failures = 0;
  for (int k = 0; k < c.cases; ++k) {
    const GoeritzWord w = random_goeritz_word(rng, c.genus, 30);
    const Decomposition d = g_decompose(w);
    const ArcClass tw = g_tau(w);
    if (!g_is_freewheeling(d.residual) || !surface_equal(g_tau(d.anchored_part).w, tw.w)) ++decomposition_failures;
    if (w_width(w_canonical(w)) > 1) ++width_failures;
    const ArcClass target{tw.w, static_cast<int>(uniform_below(rng, 2))};
    if (!arc_equal(g_tau(g_factor(target)), target)) ++factor_failures;
  }
  const PlanarModel m(c.holes);
  std::vector<Braid2Elt> gens{Braid2Elt::generator(m, Braid2Kind::Rotor)};
  for (int i = 1; i <= c.holes; ++i) {
    gens.push_back(Braid2Elt::generator(m, Braid2Kind::Anchored, i));
    gens.push_back(Braid2Elt::generator(m, Braid2Kind::Freewheel, i));
  }
  auto random_braid = [&]() {
    Braid2Elt x = Braid2Elt::identity(m);
    // Certified composition is quadratic in image length, so keep braids short.
    const int len = uniform_below(rng, 5);
    for (int k = 0; k < len; ++k) {
      const Braid2Elt& g = gens[uniform_below(rng, static_cast<int>(gens.size()))];
      x = x * (uniform_below(rng, 2) ? g : g.inverse());
    }
    return x;
  };
  for (int k = 0; k < std::min(c.cases, 200); ++k) {
    const Braid2Elt x = random_braid();
    const Braid2Elt y = random_braid();
    if (b2_parity(x * y) != (b2_parity(x) ^ b2_parity(y))) ++parity_failures;
  }
  const std::string n = std::to_string(c.cases);
  add(rep, "residual of every decomposition fixes the reference arc (" + n + " words)",
      decomposition_failures == 0, std::to_string(decomposition_failures) + " failures");
  add(rep, "every word has a canonical schedule of width at most 1 (" + n + " words)", width_failures == 0,
      std::to_string(width_failures) + " failures");
  add(rep, "factor round trip on realizable targets (" + n + " targets)", factor_failures == 0,
      std::to_string(factor_failures) + " failures");
  add(rep, "parity is a homomorphism on random braid pairs", parity_failures == 0,
      std::to_string(parity_failures) + " failures");
}

}  // namespace

Report run(const RunConfig& config, const std::string& command) {
  if (config.genus < 1) throw UsageError("--genus must be >= 1");
  if (config.holes < 1) throw UsageError("--holes must be >= 1");
  if (config.tol <= 0) throw UsageError("--tol must be positive");
  if (config.cases < 0) throw UsageError("--cases must be nonnegative");
  static const std::vector<std::pair<std::string, std::function<void(const RunConfig&, Report&)>>> table{
      {"eval", cmd_eval},   {"factor", cmd_factor},       {"decompose", cmd_decompose},
      {"width", cmd_width}, {"thin", cmd_thin},           {"relations", cmd_relations},
      {"appendix-check", cmd_appendix}, {"selftest", cmd_selftest}};
  for (const auto& [name, fn] : table) {
    if (name != command) continue;
    Report rep;
    rep.command = command;
    rep.config = config_json(config);
    fn(config, rep);
    rep.exit_code = 0;
    for (const auto& ch : rep.checks)
      if (!ch.pass) rep.exit_code = 1;
    return rep;
  }
  throw UsageError("unknown command '" + command + "'");
}

std::string render_json(const Report& report) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = report.command;
  j["config"] = report.config;
  j["result"] = report.result;
  j["checks"] = ordered_json::array();
  for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  os << "result: " << report.result.dump(2) << "\n";
  int failed = 0;
  for (const auto& c : report.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
    failed += !c.pass;
  }
  os << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

int main_entry(int argc, const char* const* argv, std::istream& in, bool stdin_is_tty, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("GOERITZ_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: GOERITZ_SEED is not an unsigned integer\n";
      return 2;
    }
  }
  CLI::App app{"Arc isotopies in handlebodies: word calculus, width and numerics"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> commands{"eval",      "factor",    "decompose",      "width",
                                          "thin",      "relations", "appendix-check", "selftest"};
  for (const auto& name : commands) app.add_subcommand(name)->fallthrough();
  app.add_option("--genus", cfg.genus, "handlebody genus g >= 1");
  app.add_option("--holes", cfg.holes, "boundary components p >= 1 of the planar surface");
  app.add_option("--word", cfg.word, "generator word, e.g. \"a1 f2^-1 r a1'\"");
  app.add_option("--target", cfg.target, "target arc, e.g. \"b1 a1 b1^-1 r\"");
  app.add_option("--seed", cfg.seed, "seed for random suites (env GOERITZ_SEED)");
  app.add_option("--grid", cfg.grid, "radial and angular grid size");
  app.add_option("--eps", cfg.eps, "bump profile scale");
  app.add_option("--b0", cfg.b0, "claimed bound on s phi'(s)");
  app.add_option("--kappa", cfg.kappa, "kappa for the orthogonalizing profile (<= 0: automatic)");
  app.add_option("--r", cfg.r, "shear entry of T = [[1,r],[0,1]]");
  app.add_option("--tol", cfg.tol, "absolute tolerance");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cases", cfg.cases, "number of random cases for selftest");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  const bool wants_words = command == "eval" || command == "decompose" || command == "width" || command == "thin";
  const bool wants_targets = command == "factor";
  if (!stdin_is_tty && ((wants_words && cfg.word.empty()) || (wants_targets && cfg.target.empty()))) {
    std::string line;
    while (std::getline(in, line)) cfg.batch.push_back(line);
  }
  try {
    const Report rep = run(cfg, command);
    out << (cfg.format == "json" ? render_json(rep) : render_text(rep));
    return rep.exit_code;
  } catch (const MalformedWord& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace goeritz::cli
