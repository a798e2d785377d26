#include "core/run.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "core/acceptance.hpp"
#include "core/energy.hpp"
#include "core/explicit_solutions.hpp"
#include "core/moving_planes.hpp"
#include "core/output.hpp"
#include "core/principles.hpp"
#include "core/solver.hpp"

namespace fraclab {

using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

std::string fmt6f(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Domain1D parse_domain(const std::string& text) {
  std::vector<Domain1D::Interval> comps;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ';')) {
    const auto comma = part.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("domain component needs the form a,b");
    }
    try {
      comps.push_back({std::stod(part.substr(0, comma)),
                       std::stod(part.substr(comma + 1))});
    } catch (const std::exception&) {
      throw ConfigError("unparsable domain component: " + part);
    }
  }
  if (comps.empty()) throw ConfigError("empty domain spec");
  return Domain1D(comps);
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"eval", {"s", "x", "profile", "tol", "out", "seed"}},
      {"energy", {"s", "h", "L", "profile", "out", "seed"}},
      {"solve", {"s", "h", "L", "domain", "f", "tol", "out", "seed"}},
      {"eigen", {"s", "h", "L", "domain", "tol", "out", "seed"}},
      {"poisson", {"s", "R", "tol", "out", "seed"}},
      {"poly", {"eps", "extremize", "out", "seed"}},
      {"figures", {"out", "seed"}},
      {"harnack", {"s", "h", "target", "tol", "out", "seed"}},
      {"strong-mp", {"s", "h", "tol", "out", "seed"}},
      {"hopf", {"s", "h", "setup", "tol", "out", "seed"}},
      {"barrier", {"s", "rho", "c_bound", "tol", "out", "seed"}},
      {"moving-plane", {"s", "h", "L", "domain", "R", "f", "tol", "out",
                        "seed"}},
      {"verify-all", {"out", "seed"}},
  };
  return keys;
}

double num(const json& cfg, const std::string& key, double fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg[key].is_number()) throw ConfigError(key + " must be a number");
  return cfg[key].get<double>();
}

std::string str(const json& cfg, const std::string& key,
                const std::string& fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg[key].is_string()) throw ConfigError(key + " must be a string");
  return cfg[key].get<std::string>();
}

json grid_to_json_csv(const GridFunction& u) {
  json j;
  j["n"] = u.size();
  j["h"] = u.spacing();
  j["min"] = *std::min_element(u.values().begin(), u.values().end());
  j["max"] = *std::max_element(u.values().begin(), u.values().end());
  return j;
}

std::function<double(double, double)> nonlinearity(const std::string& name) {
  if (name == "const1") return [](double, double) { return 1.0; };
  if (name == "sign") return [](double x, double) { return sgn(x); };
  if (name == "affine")
    return [](double, double u) { return 1.0 + 0.5 * u; };
  if (name == "odd-affine")
    return [](double x, double u) { return sgn(x) + 0.5 * u; };
  throw ConfigError("unknown nonlinearity preset: " + name);
}

struct Emitter {
  std::string dir;
  void text(const std::string& name, const std::string& content) const {
    if (dir.empty()) return;
    write_text_file(dir + "/" + name, content);
  }
};

json run_eval(const json& cfg, std::string* summary, const Emitter&) {
  const FracOrder order(num(cfg, "s", 0.5));
  const double x = num(cfg, "x", 0.0);
  const QuadSettings q{num(cfg, "tol", 1e-6), num(cfg, "tol", 1e-6) * 1e-2};
  const std::string name = str(cfg, "profile", "lorentzian");
  Profile p;
  if (name == "lorentzian") {
    p = {[](double y) { return 1.0 / (1.0 + y * y); },
         std::numeric_limits<double>::infinity()};
  } else if (name == "sqrt") {
    p = {[](double y) {
           const double w = 1.0 - y * y;
           return w > 0.0 ? std::sqrt(w) : 0.0;
         },
         1.0};
  } else if (name == "gauss") {
    p = {[](double y) { return std::exp(-y * y); },
         std::numeric_limits<double>::infinity()};
  } else {
    throw ConfigError("unknown profile: " + name);
  }
  const double value = frac_laplacian_pointwise(p, order, x, q);
  json r;
  r["value"] = value;
  *summary = fmt6f(value);
  return r;
}

json run_energy(const json& cfg, std::string* summary, const Emitter&) {
  const FracOrder order(num(cfg, "s", 0.5));
  const double h = num(cfg, "h", 0.01);
  const double L = num(cfg, "L", 2.0);
  const std::string name = str(cfg, "profile", "hat");
  RealFn f;
  if (name == "hat") {
    f = [](double x) { return std::max(0.0, 1.0 - std::abs(x)); };
  } else if (name == "bump") {
    f = [](double x) { return bump(x, 1.0); };
  } else {
    throw ConfigError("unknown profile: " + name);
  }
  const GridFunction u = GridFunction::sample(L, h, f);
  const double e = gagliardo_energy(u, u, order);
  json r;
  r["energy"] = e;
  *summary = fmt6f(e);
  return r;
}

json run_solve(const json& cfg, std::string* summary, const Emitter& emit) {
  const FracOrder order(num(cfg, "s", 0.5));
  const Domain1D domain = parse_domain(str(cfg, "domain", "-1,1"));
  SolveConfig sc;
  sc.h = num(cfg, "h", 0.01);
  const double radius =
      std::max(std::abs(domain.inf()), std::abs(domain.sup()));
  sc.L = num(cfg, "L", radius + 1.0);
  const auto f = nonlinearity(str(cfg, "f", "const1"));
  const SemilinearSolution sol = solve_semilinear(domain, order, f, sc);
  emit.text("u.csv", sol.u.to_csv());
  json r = grid_to_json_csv(sol.u);
  r["residual"] = sol.residual;
  r["iterations"] = sol.iterations;
  *summary = "max " + fmt6f(r["max"].get<double>()) + ", residual " +
             fmt6f(sol.residual);
  return r;
}

json run_eigen(const json& cfg, std::string* summary, const Emitter& emit) {
  const FracOrder order(num(cfg, "s", 0.5));
  const Domain1D domain = parse_domain(str(cfg, "domain", "-1,1"));
  SolveConfig sc;
  sc.h = num(cfg, "h", 1.0 / 128);
  const double radius =
      std::max(std::abs(domain.inf()), std::abs(domain.sup()));
  sc.L = num(cfg, "L", radius + 1.0);
  const DiscreteOperator op = assemble(domain, order, {}, sc);
  const EigenResult er = smallest_eigenvalue(op);
  const double bound = eigen_bound(order, domain.measure());
  emit.text("eigenvector.csv", er.eigenvector.to_csv());
  json r;
  r["lambda1"] = er.lambda;
  r["lower_bound"] = bound;
  r["gap"] = er.lambda - bound;
  *summary = "lambda1 " + fmt6f(er.lambda) + " >= bound " + fmt6f(bound);
  return r;
}

json run_poisson(const json& cfg, std::string* summary, const Emitter& emit) {
  const FracOrder order(num(cfg, "s", 0.5));
  const double radius = num(cfg, "R", 10.0);
  const double c0v = c0(order);
  std::vector<double> xs, zs;
  double dev = 0.0;
  for (int k = -200; k <= 200; ++k) {
    const double x = k / 100.0;
    xs.push_back(x);
    const double z = zeta_R(x, radius, order);
    zs.push_back(z);
    if (x != 0.0) dev = std::max(dev, std::abs(z / x - c0v));
  }
  emit.text("zeta.csv", csv_table({"x", "zeta"}, {xs, zs}));
  json r;
  r["c0"] = c0v;
  r["slope_deviation"] = dev;
  *summary = "c0 " + fmt6f(c0v) + ", slope deviation " + fmt6f(dev);
  return r;
}

json run_poly(const json& cfg, std::string* summary, const Emitter&) {
  const double eps = num(cfg, "eps", 0.2);
  const HarnackPoly p(eps);
  json r;
  r["eps"] = eps;
  r["coefficients"] = {p.a(), p.b(), p.c(), p.d()};
  const TouchingPoly tp;
  r["degree9_at_2"] = tp.eval(2.0);
  r["degree9_at_3"] = tp.eval(3.0);
  bool extremize = false;
  if (cfg.contains("extremize")) {
    if (!cfg["extremize"].is_boolean()) {
      throw ConfigError("extremize must be a boolean");
    }
    extremize = cfg["extremize"].get<bool>();
  }
  if (extremize) {
    const auto inner = p.extremize(1.0, 2.0);
    const auto outer = p.extremize(0.5, 2.5);
    r["max_inner"] = inner.max;
    r["min_outer"] = outer.min;
    *summary = "max " + fmt6f(inner.max);
  } else {
    *summary = "eps " + fmt6f(eps);
  }
  return r;
}

json run_figures(const json&, std::string* summary, const Emitter& emit) {
  json r;
  for (int which : {1, 2}) {
    const FigureData fig = figure_data(which);
    const std::string base = "fig" + std::to_string(which);
    emit.text(base + ".csv", fig.to_csv());
    std::vector<SvgSeries> series;
    for (size_t j = 1; j < fig.columns.size(); ++j) {
      series.push_back({fig.headers[j], fig.columns[0], fig.columns[j]});
    }
    emit.text(base + ".svg",
              render_svg(series, "figure " + std::to_string(which)));
    r[base + "_rows"] = fig.columns[0].size();
  }
  *summary = "figures written";
  return r;
}

json run_harnack(const json& cfg, std::string* summary, const Emitter& emit,
                 int* exit_code) {
  const FracOrder order(num(cfg, "s", 0.5));
  HarnackConfig hc;
  hc.h = num(cfg, "h", hc.h);
  const HarnackReport rep =
      harnack_violation_search(num(cfg, "target", 100.0), order, hc);
  json r;
  r["found"] = rep.found;
  r["quotient"] = rep.quotient;
  r["params"] = rep.params;
  r["t"] = rep.t;
  r["R"] = rep.R;
  r["min_on_region"] = rep.min_on_omega;
  r["skipped"] = rep.skipped;
  if (rep.found) {
    emit.text("u.csv", rep.u.to_csv());
    *summary = "quotient " + fmt6f(rep.quotient);
  } else {
    *summary = "target not reached (best " + fmt6f(rep.quotient) + ")";
    *exit_code = 1;
  }
  return r;
}

json run_strong_mp(const json& cfg, std::string* summary, const Emitter& emit,
                   int* exit_code) {
  const FracOrder order(num(cfg, "s", 0.5));
  CounterexampleConfig cc;
  cc.h = num(cfg, "h", cc.h);
  const CounterexampleRun run = strong_mp_counterexample_search(order, cc);
  json r;
  r["found"] = run.found;
  r["verdict"] = verdict_name(run.verdict);
  r["params"] = run.params;
  r["t_star"] = run.t_star;
  r["x_star"] = run.x_star;
  r["min_over_inner"] = run.min_u_13;
  r["min_over_scan"] = run.min_u_03;
  r["detail"] = run.detail;
  if (run.found) {
    emit.text("u.csv", run.u.to_csv());
    emit.text("m.csv", csv_table({"t", "m"}, {run.t_grid, run.m_samples}));
  }
  if (run.verdict != Verdict::Holds) *exit_code = 1;
  *summary = std::string("verdict ") + verdict_name(run.verdict);
  return r;
}

json run_hopf(const json& cfg, std::string* summary, const Emitter&,
              int* exit_code) {
  const FracOrder order(num(cfg, "s", 0.5));
  const std::string setup = str(cfg, "setup", "torsion");
  HopfConfig hc;
  hc.base_h = num(cfg, "h", 0.02);
  if (setup == "sample") {
    hc.solution = [order](double h) {
      auto z = [order](double x) { return zeta_R(x, 8.0, order); };
      return GridFunction::sample(2.0, h, z, Tail::closed_form(z));
    };
  } else if (setup == "torsion") {
    hc.solution = [order](double h) {
      SolveConfig sc;
      sc.h = h;
      sc.L = 2.5;
      const DiscreteOperator op = assemble(Domain1D(-2.0, 2.0), order, {}, sc);
      std::vector<double> f;
      for (int idx : op.interior()) f.push_back(sgn(op.geometry().node(idx)));
      return solve_linear(op, f, GridFunction(sc.L, h)).u;
    };
  } else if (setup == "semilinear") {
    hc.solution = [order](double h) {
      SolveConfig sc;
      sc.h = h;
      sc.L = 2.0;
      auto f = [](double x, double u) { return sgn(x) + 0.5 * u; };
      return solve_semilinear(Domain1D(-1.5, 1.5), order, f, sc).u;
    };
  } else {
    throw ConfigError("unknown setup: " + setup);
  }
  const HopfReport rep = hopf_growth(hc);
  json r;
  r["limit"] = rep.limit;
  r["stable"] = rep.stable;
  r["verdict"] = verdict_name(rep.verdict);
  json samples = json::array();
  for (const auto& s : rep.samples) samples.push_back({s.h, s.quotient});
  r["samples"] = samples;
  if (rep.verdict != Verdict::Holds) *exit_code = 1;
  *summary = "limit " + fmt6f(rep.limit);
  return r;
}

json run_barrier(const json& cfg, std::string* summary, const Emitter&,
                 int* exit_code) {
  const FracOrder order(num(cfg, "s", 0.5));
  const BarrierSpec spec =
      barrier_build(num(cfg, "rho", 1.0), num(cfg, "c_bound", 0.0), order);
  json r;
  r["alpha"] = spec.alpha;
  r["margin"] = spec.margin;
  r["slope_at_0"] = spec.dphi0;
  r["success"] = spec.success;
  r["check_nodes"] = spec.check_xs.size();
  if (!spec.success) *exit_code = 1;
  *summary = "alpha " + fmt6f(spec.alpha) + ", margin " + fmt6f(spec.margin);
  return r;
}

json run_moving_plane(const json& cfg, std::string* summary,
                      const Emitter& emit) {
  const FracOrder order(num(cfg, "s", 0.5));
  const Domain1D g = parse_domain(str(cfg, "domain", "-1,1"));
  const double radius = num(cfg, "R", 1.0);
  MovingPlaneConfig mc;
  mc.solve.h = num(cfg, "h", 0.01);
  const double omega_radius =
      std::max(std::abs(g.inf()), std::abs(g.sup())) + radius;
  mc.solve.L = num(cfg, "L", omega_radius + 0.5);
  mc.tol = num(cfg, "tol", mc.tol);
  const auto f = nonlinearity(str(cfg, "f", "const1"));
  const MovingPlaneReport rep =
      parallel_surface_experiment(g, radius, f, order, mc);
  emit.text("u.csv", rep.u.to_csv());
  {
    std::vector<double> ls, ms;
    for (const auto& [l, m] : rep.lambda_minima_right) {
      ls.push_back(l);
      ms.push_back(m);
    }
    emit.text("lambda_min.csv", csv_table({"lambda", "min_v"}, {ls, ms}));
  }
  json r;
  r["critical_plane_right"] = rep.m_right;
  r["critical_plane_left"] = rep.m_left;
  r["center"] = rep.center;
  r["center_residual"] = rep.center_residual;
  r["overdetermined_gap"] = rep.overdetermined_gap;
  r["positivity_min"] = rep.positivity_min;
  r["even"] = verdict_name(rep.even_verdict);
  r["positive"] = verdict_name(rep.positive_verdict);
  r["monotone"] = verdict_name(rep.monotone_verdict);
  r["single_component_conclusion"] = rep.single_component_conclusion;
  r["detail"] = rep.detail;
  *summary = "center " + fmt6f(rep.center) + ", gap " +
             fmt6f(rep.overdetermined_gap);
  return r;
}

json run_verify_all(std::string* summary, const Emitter& emit,
                    int* exit_code) {
  const std::string fig_dir = emit.dir.empty() ? "." : emit.dir;
  const auto results = acceptance_suite({}, fig_dir);
  json r = json::array();
  int passed = 0;
  for (const auto& cr : results) {
    json item;
    item["id"] = cr.id;
    item["name"] = cr.name;
    item["passed"] = cr.passed;
    item["detail"] = cr.detail;
    r.push_back(item);
    if (cr.passed) ++passed;
  }
  if (passed != static_cast<int>(results.size())) *exit_code = 1;
  *summary = std::to_string(passed) + "/" + std::to_string(results.size()) +
             " criteria passed";
  return r;
}

} // namespace

const char* version_string() { return "fraclab 0.1.0"; }

RunResult run_command(const std::string& config_json) {
  RunResult out;
  json report;
  report["version"] = version_string();
  json cfg;
  try {
    cfg = json::parse(config_json);
    if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
    if (!cfg.contains("command") || !cfg["command"].is_string()) {
      throw ConfigError("missing command");
    }
    const std::string command = cfg["command"].get<std::string>();
    const auto it = allowed_keys().find(command);
    if (it == allowed_keys().end()) {
      throw ConfigError("unknown command: " + command);
    }
    for (const auto& [key, value] : cfg.items()) {
      if (key != "command" && !it->second.count(key)) {
        throw ConfigError("unknown key for " + command + ": " + key);
      }
    }
    Emitter emit{str(cfg, "out", "")};
    if (!emit.dir.empty()) std::filesystem::create_directories(emit.dir);
    report["config"] = cfg;
    report["command"] = command;

    std::string summary;
    int exit_code = 0;
    json result;
    if (command == "eval") {
      result = run_eval(cfg, &summary, emit);
    } else if (command == "energy") {
      result = run_energy(cfg, &summary, emit);
    } else if (command == "solve") {
      result = run_solve(cfg, &summary, emit);
    } else if (command == "eigen") {
      result = run_eigen(cfg, &summary, emit);
    } else if (command == "poisson") {
      result = run_poisson(cfg, &summary, emit);
    } else if (command == "poly") {
      result = run_poly(cfg, &summary, emit);
    } else if (command == "figures") {
      result = run_figures(cfg, &summary, emit);
    } else if (command == "harnack") {
      result = run_harnack(cfg, &summary, emit, &exit_code);
    } else if (command == "strong-mp") {
      result = run_strong_mp(cfg, &summary, emit, &exit_code);
    } else if (command == "hopf") {
      result = run_hopf(cfg, &summary, emit, &exit_code);
    } else if (command == "barrier") {
      result = run_barrier(cfg, &summary, emit, &exit_code);
    } else if (command == "moving-plane") {
      result = run_moving_plane(cfg, &summary, emit);
    } else {  // verify-all
      result = run_verify_all(&summary, emit, &exit_code);
    }
    report["result"] = result;
    report["summary"] = summary;
    out.exit_code = exit_code;
    if (!emit.dir.empty()) {
      write_text_file(emit.dir + "/report.json", report.dump(2) + "\n");
    }
  } catch (const ConfigError& e) {
    report["error"] = e.what();
    out.exit_code = 2;
  } catch (const json::exception& e) {
    report["error"] = e.what();
    out.exit_code = 2;
  } catch (const std::invalid_argument& e) {
    report["error"] = e.what();
    out.exit_code = 2;
  } catch (const QuadratureError& e) {
    report["error"] = e.what();
    out.exit_code = 3;
  } catch (const SolverError& e) {
    report["error"] = e.what();
    out.exit_code = 3;
  } catch (const std::exception& e) {
    report["error"] = e.what();
    out.exit_code = 3;
  }
  out.report_json = report.dump(2) + "\n";
  return out;
}

} // namespace fraclab
