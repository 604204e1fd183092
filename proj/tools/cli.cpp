#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lenard/equivariant.hpp"
#include "lenard/errors.hpp"
#include "lenard/gelfand_dikii.hpp"
#include "lenard/parallel.hpp"
#include "lenard/sampling.hpp"
#include "lenard/wdvv.hpp"

namespace lenard::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json to_json(const Matrix& m) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) arr.push_back(to_json(Vector(m.row(i).transpose())));
  return arr;
}

// Avoids printing "-0.0" for exact zeros.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

json points_json(std::span<const Point> pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

/// Assembled command output: report plus command-specific data.
struct Outcome {
  json params = json::object();
  VerificationReport report;
  json extras = json::object();
  json points;
};

std::string render(const RunConfig& cfg, const Outcome& o) {
  if (cfg.format == Format::json) {
    json doc;
    doc["version"] = kReportVersion;
    doc["command"] = cfg.target.empty() ? cfg.command : cfg.command + " " + cfg.target;
    doc["params"] = o.params;
    doc["seed"] = cfg.seed;
    doc["conditions"] = to_json(o.report);
    if (!o.extras.empty()) doc["extras"] = o.extras;
    if (!o.points.is_null()) doc["points"] = o.points;
    doc["pass"] = o.report.pass();
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "command: " << cfg.command << (cfg.target.empty() ? "" : " " + cfg.target) << "\n";
  s << "params: " << o.params.dump() << "\n";
  if (!o.extras.empty()) s << "extras: " << o.extras.dump() << "\n";
  s << render_text(o.report);
  s << "overall: " << (o.report.pass() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

// --- verify-wdvv --------------------------------------------------------------

Outcome verify_wdvv(const RunConfig& cfg) {
  const bool reference = cfg.potential == "example3-reference";
  const wdvv::VeselovPotential pot = reference ? equivariant::example3_fixture().reference
                                               : wdvv::VeselovPotential(cfg.n, cfg.m);
  const wdvv::Prepotential f = pot.prepotential();

  wdvv::WdvvSuiteOptions opts;
  opts.tol = cfg.tol;
  if (cfg.euler != "none") {
    opts.generalized = true;
    if (cfg.euler == "quarter-x")
      opts.weights = wdvv::EulerWeights::scaled_position(0.25);
    else if (cfg.euler == "x")
      opts.weights = wdvv::EulerWeights::scaled_position(1.0);
    else
      opts.weights = wdvv::EulerWeights::constant(Vector::Unit(static_cast<Eigen::Index>(pot.n), 0));
  }
  const auto pts = wdvv::sample_points(f, cfg.points, cfg.seed);

  Outcome o;
  o.params = {{"potential", cfg.potential}, {"n", pot.n}, {"m", pot.m}, {"scale", pot.scale}, {"euler", cfg.euler}};
  o.report = wdvv::verify_prepotential(f, pts, opts);
  if (opts.generalized) o.extras["g_matrix"] = to_json(wdvv::g_matrix(f, opts.weights, pts.front()));
  if (pot.n >= 4) o.extras["experimental"] = true;
  return o;
}

// --- build-complex -------------------------------------------------------------

Outcome build_complex(const RunConfig& cfg) {
  const double alpha = *cfg.alpha, beta = *cfg.beta;
  equivariant::QuadraticInvariant quad(alpha, beta);  // validates before anything else
  double sigma2 = 0.0;
  if (cfg.root) {
    const auto roots = equivariant::solve_phi_roots(alpha, beta);
    sigma2 = *cfg.root == 1 ? roots.root1 : roots.root2;
  } else {
    sigma2 = *cfg.sigma2;
  }
  const auto params = equivariant::FamilyParams::solved(alpha, beta, sigma2);
  const auto complex = equivariant::assemble_complex(params);
  const auto pts = equivariant::sample_points(complex, cfg.points, cfg.seed);
  const double phi = equivariant::phi(alpha, beta, sigma2);

  Outcome o;
  o.params = {{"alpha", alpha},           {"beta", beta},
              {"root", cfg.root ? json(*cfg.root) : json()},
              {"sigma0", params.sigma0},  {"sigma1", params.sigma[0]},
              {"sigma2", params.sigma[1]}, {"eta", {1.0, -1.0}},
              {"phi", clean(phi)}};
  o.report.add("phi_vanishes", 1, std::abs(phi), cfg.tol.analytic);
  o.report.append(equivariant::verify_complex(complex, pts, cfg.tol));

  // The x-chart is identified with the A-chart only once condition II holds.
  if (o.report.find(equivariant::cond::kChainFields)->pass) {
    const auto worst = max_reduce(std::span<const Point>(pts), 1, [&](const Point& p) {
      return std::vector<double>{equivariant::wdvv_residual_of_complex(complex, p, cfg.tol.analytic)};
    });
    o.report.add("wdvv_of_complex", pts.size(), worst[0], cfg.tol.analytic);
  }
  o.points = points_json(pts);
  return o;
}

// --- reproduce -----------------------------------------------------------------

Outcome reproduce_example3(const RunConfig& cfg) {
  namespace eq = equivariant;
  const eq::Example3 ex = eq::example3_fixture();
  const eq::LenardComplex c = eq::assemble_complex(ex.params);
  const wdvv::Prepotential ref = ex.reference.prepotential();
  const auto pts = eq::sample_points(c, cfg.points, cfg.seed);
  const auto quad = c.quad();

  Outcome o;
  o.params = {{"alpha", 2.0},          {"beta", 1.0},          {"sigma0", ex.params.sigma0},
              {"sigma1", ex.params.sigma[0]}, {"sigma2", ex.params.sigma[1]}, {"eta", {1.0, -1.0}},
              {"reference", "(1/16)[sum (xi-xj)^2 log (xi-xj)^2 + sum xi^2 log xi^2]"}};

  // Closed forms, the chain fields and the reference potential.
  auto kernel = [&](const Point& p) {
    const Point x = quad.a_to_A(p);
    auto gap = [](const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); };
    const double closed = std::max({gap(c.square.dA.coeff(p), eq::closed_forms::dA(p)), gap(c.square.dQ.coeff(p), eq::closed_forms::dQ(p)),
                        gap(c.square.dR.coeff(p), eq::closed_forms::dR(p)), gap(c.square.dT.coeff(p), eq::closed_forms::dT(p)),
                        gap(c.square.dP.coeff(p), eq::closed_forms::dP(p)), gap(c.square.dS.coeff(p), eq::closed_forms::dS(p))});
    double fields = 0.0;
    for (std::size_t j = 0; j < 3; ++j)
      fields = std::max(fields, gap(c.k[j].mat(p) * c.x.comp(p), eq::closed_forms::chain_field(j)));
    const Tensor3 from_complex = eq::structure_constants(c, p);
    const Tensor3 from_ref = ref.third(x);
    double third = 0.0;
    for (std::size_t j = 0; j < 3; ++j) third = std::max(third, max_abs(from_complex[j] - from_ref[j]));
    const double dv = gap(c.square.dV.coeff(p), eq::closed_forms::dV_literal(p));
    return std::vector<double>{closed, fields, eq::wdvv_residual_of_complex(c, p), third,
                               std::abs(eq::wdvv_residual_of_complex(c, p) - wdvv::wdvv_residual(ref, x)), dv};
  };
  const auto worst = max_reduce(std::span<const Point>(pts), 6, kernel);
  o.report.add("closed_forms", pts.size(), worst[0], 1e-10);
  o.report.add("constant_chain_fields", pts.size(), worst[1], 1e-12);
  o.report.append(eq::verify_complex(c, pts, cfg.tol));
  o.report.add("wdvv_of_complex", pts.size(), worst[2], cfg.tol.analytic);
  o.report.add("third_vs_reference", pts.size(), worst[3], 1e-8);
  o.report.add("wdvv_vs_reference", pts.size(), worst[4], 1e-8);
  o.extras["dV_literal_max_discrepancy"] = worst[5];

  // Potential reconstruction along 10 random segments in the x (= A) chart.
  Sampler sampler(cfg.seed + 1);
  SamplingDomain domain;
  domain.locus = c.locus();
  std::size_t segments = 0;
  double recon = 0.0;
  while (segments < 10) {
    const auto ends = sample_regular(sampler, domain, 2);
    const Point from = quad.a_to_A(ends[0]), to = quad.a_to_A(ends[1]);
    try {
      double worst_entry = 0.0;
      const Matrix h_from = ref.hessian(from), h_to = ref.hessian(to);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = j; l < 3; ++l) {
          const double integral = eq::reconstruct_potential_entry(c.square, j, l, from, to);
          const auto jj = static_cast<Eigen::Index>(j), ll = static_cast<Eigen::Index>(l);
          worst_entry = std::max(worst_entry, std::abs(integral - (h_to(jj, ll) - h_from(jj, ll))));
        }
      recon = std::max(recon, worst_entry);
      ++segments;
    } catch (const PathCrossesSingularity&) {
      // resample
    }
  }
  o.report.add("potential_reconstruction", segments, recon, cfg.tol.fd);
  o.points = points_json(pts);
  return o;
}

Outcome reproduce_gd(const RunConfig& cfg) {
  const auto pts = gd::sample_points(cfg.points, cfg.seed);
  const double tol = std::max(cfg.tol.analytic, 1e-8);
  const std::vector<std::pair<std::string, ScalarField>> fs{
      {"w0", gd::coordinate_function(0)},
      {"w1", gd::coordinate_function(1)},
      {"w2", gd::coordinate_function(2)},
      {"w0*w1", gd::product(gd::coordinate_function(0), gd::coordinate_function(1))}};

  Outcome o;
  o.params = {{"operator", "K*dw2 = 2dw1, K*dw1 = 2dw0 - w2 dw2, K*dw0 = -(1/2) w1 dw2"},
              {"complex", "K1 = Id, K2 = K, K3 = K^2 + w2 Id, dA = dw2, X = d/dw0"},
              {"torsion_convention_factor", gd::kTorsionConventionFactor}};
  for (const auto& [name, f] : fs) {
    const auto worst = max_reduce(std::span<const Point>(pts), 1, [&](const Point& w) {
      return std::vector<double>{gd::gd_torsion_identity_residual(f, w)};
    });
    o.report.add("torsion_identity[f=" + name + "]", pts.size(), worst[0], tol);
  }
  o.report.append(gd::verify_gd_complex(pts, tol, cfg.tol.fd));

  const Point w123 = (Point(3) << 1.0, 2.0, 3.0).finished();
  o.extras["nijenhuis_contraction_norm_w1_at_123"] =
      max_abs(nijenhuis_contracted(gd::gd_operator_field(), gd::coordinate_function(1), w123));
  double independence = INFINITY;
  for (const auto& w : pts) independence = std::min(independence, gd::chain_independence(w));
  o.extras["min_chain_independence"] = independence;
  return o;
}

Outcome solve_constraints(const RunConfig& cfg) {
  const double alpha = *cfg.alpha, beta = *cfg.beta;
  equivariant::QuadraticInvariant quad(alpha, beta);
  Outcome o;
  o.params = {{"alpha", alpha}, {"beta", beta}};
  auto entry = [&](double s2) {
    const auto s = equivariant::solve_sigma_constraints(alpha, beta, s2);
    return json{{"sigma2", s2}, {"sigma1", s.sigma1}, {"sigma0", s.sigma0}, {"phi", clean(equivariant::phi(alpha, beta, s2))}};
  };
  if (cfg.sigma2) {
    o.extras["solution"] = entry(*cfg.sigma2);
    o.report.add("phi_vanishes", 1, std::abs(equivariant::phi(alpha, beta, *cfg.sigma2)), cfg.tol.analytic);
  } else {
    const auto roots = equivariant::solve_phi_roots(alpha, beta);
    o.extras["root1"] = entry(roots.root1);
    o.extras["root2"] = entry(roots.root2);
    o.report.add("phi_vanishes", 2,
                 std::max(std::abs(equivariant::phi(alpha, beta, roots.root1)),
                          std::abs(equivariant::phi(alpha, beta, roots.root2))),
                 cfg.tol.analytic);
  }
  return o;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::size_t default_points) {
  cfg.points = default_points;
  sub->add_option("--points", cfg.points, "number of sampled points")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed of the mt19937_64 sampler");
  sub->add_option("--tol-analytic", cfg.tol.analytic, "tolerance for analytic residuals")
      ->envname("LENARD_TOL_ANALYTIC")
      ->check(CLI::PositiveNumber);
  sub->add_option("--tol-fd", cfg.tol.fd, "tolerance for finite-difference and quadrature residuals")
      ->envname("LENARD_TOL_FD")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "json or text")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}}));
  sub->add_option("--out", cfg.out_path, "write the report to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify Lenard complexes and WDVV potentials"};
  app.name(args.empty() ? "lenard" : args.front());
  app.require_subcommand(1);
  // One config per subcommand so defaults do not leak between them.
  RunConfig wdvv_cfg, build_cfg, repro_cfg, solve_cfg;

  auto* wdvv_cmd = app.add_subcommand("verify-wdvv", "WDVV and generalized WDVV residuals of a prepotential");
  add_common(wdvv_cmd, wdvv_cfg, 100);
  wdvv_cmd->add_option("--potential", wdvv_cfg.potential, "veselov | example3-reference")
      ->check(CLI::IsMember({"veselov", "example3-reference"}));
  wdvv_cmd->add_option("--n", wdvv_cfg.n, "dimension")->check(CLI::Range(2, 64));
  wdvv_cmd->add_option("--m", wdvv_cfg.m, "deformation parameter (nonzero)");
  wdvv_cmd->add_option("--euler", wdvv_cfg.euler, "none | quarter-x | x | e1")
      ->check(CLI::IsMember({"none", "quarter-x", "x", "e1"}));

  auto* build_cmd = app.add_subcommand("build-complex", "solve constraints, build and verify an equivariant complex");
  add_common(build_cmd, build_cfg, 50);
  build_cmd->add_option("--alpha", build_cfg.alpha)->required();
  build_cmd->add_option("--beta", build_cfg.beta)->required();
  auto* root_opt = build_cmd->add_option("--root", build_cfg.root, "1 or 2")->check(CLI::IsMember({1, 2}));
  auto* sigma_opt = build_cmd->add_option("--sigma2", build_cfg.sigma2, "explicit sigma_2");
  root_opt->excludes(sigma_opt);
  sigma_opt->excludes(root_opt);

  auto* repro_cmd = app.add_subcommand("reproduce", "reproduce a worked example end to end");
  add_common(repro_cmd, repro_cfg, 50);
  repro_cmd->add_option("target", repro_cfg.target, "example3 | gd")->required()->check(CLI::IsMember({"example3", "gd"}));

  auto* solve_cmd = app.add_subcommand("solve-constraints", "sum rules and Phi roots for (alpha, beta)");
  add_common(solve_cmd, solve_cfg, 1);
  solve_cmd->add_option("--alpha", solve_cfg.alpha)->required();
  solve_cmd->add_option("--beta", solve_cfg.beta)->required();
  solve_cmd->add_option("--sigma2", solve_cfg.sigma2, "evaluate a given sigma_2 instead of the roots");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig* cfg = nullptr;
  Outcome (*handler)(const RunConfig&) = nullptr;
  if (wdvv_cmd->parsed()) {
    cfg = &wdvv_cfg;
    handler = verify_wdvv;
  } else if (build_cmd->parsed()) {
    cfg = &build_cfg;
    if (!build_cfg.root && !build_cfg.sigma2) {
      err << "build-complex: choose a root explicitly with --root 1|2 or pass --sigma2\n";
      return 2;
    }
    handler = build_complex;
  } else if (repro_cmd->parsed()) {
    cfg = &repro_cfg;
    handler = repro_cfg.target == "gd" ? reproduce_gd : reproduce_example3;
  } else {
    cfg = &solve_cfg;
    handler = solve_constraints;
  }
  cfg->command = app.get_subcommands().front()->get_name();

  try {
    const Outcome o = handler(*cfg);
    const std::string text = render(*cfg, o);
    if (cfg->out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg->out_path);
      if (!file) {
        err << "cannot open " << cfg->out_path << " for writing\n";
        return 2;
      }
      file << text;
    }
    return o.report.pass() ? 0 : 1;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SamplingExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lenard::cli
