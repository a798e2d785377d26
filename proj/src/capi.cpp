#include "fraclab/fraclab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>

#include "core/explicit_solutions.hpp"
#include "core/kernel.hpp"
#include "core/pointwise.hpp"
#include "core/principles.hpp"
#include "core/run.hpp"
#include "core/solver.hpp"

namespace {

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FRACLAB_OK;
  } catch (const std::invalid_argument& e) {
    return set_error(FRACLAB_ECONFIG, e.what());
  } catch (const fraclab::QuadratureError& e) {
    return set_error(FRACLAB_ENUMERIC, e.what());
  } catch (const fraclab::SolverError& e) {
    return set_error(FRACLAB_ENUMERIC, e.what());
  } catch (const std::exception& e) {
    return set_error(FRACLAB_ENUMERIC, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

fraclab::Domain1D parse_domain_c(const char* text) {
  if (!text) throw std::invalid_argument("null domain");
  std::vector<fraclab::Domain1D::Interval> comps;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ';')) {
    const auto comma = part.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("domain component needs the form a,b");
    }
    comps.push_back({std::stod(part.substr(0, comma)),
                     std::stod(part.substr(comma + 1))});
  }
  return fraclab::Domain1D(comps);
}

} // namespace

struct fraclab_solution {
  fraclab::GridFunction u;
};

extern "C" {

const char* fraclab_version(void) { return fraclab::version_string(); }

const char* fraclab_last_error(void) { return g_last_error.c_str(); }

int fraclab_run(const char* config_json, char** report) {
  if (!config_json) return set_error(FRACLAB_ECONFIG, "null config");
  fraclab::RunResult result;
  const int rc = guarded([&] { result = fraclab::run_command(config_json); });
  if (rc != FRACLAB_OK) return rc;
  if (report) *report = dup_string(result.report_json);
  if (result.exit_code != 0) {
    set_error(result.exit_code, "command reported failure");
  }
  return result.exit_code;
}

void fraclab_free(char* p) { std::free(p); }

int fraclab_kernel_constant(double s, int n, double* out) {
  if (!out) return set_error(FRACLAB_ECONFIG, "null output");
  return guarded([&] { *out = fraclab::kernel_constant(fraclab::FracOrder(s, n)); });
}

int fraclab_c0(double s, double* out) {
  if (!out) return set_error(FRACLAB_ECONFIG, "null output");
  return guarded([&] { *out = fraclab::c0(fraclab::FracOrder(s)); });
}

int fraclab_zeta(double x, double radius, double s, double* out) {
  if (!out) return set_error(FRACLAB_ECONFIG, "null output");
  return guarded([&] { *out = fraclab::zeta_R(x, radius, fraclab::FracOrder(s)); });
}

int fraclab_eigen_bound(double s, int n, double measure, double* out) {
  if (!out) return set_error(FRACLAB_ECONFIG, "null output");
  return guarded(
      [&] { *out = fraclab::eigen_bound(fraclab::FracOrder(s, n), measure); });
}

int fraclab_pointwise(const char* profile, double s, double x, double tol,
                      double* out) {
  if (!out || !profile) return set_error(FRACLAB_ECONFIG, "null argument");
  return guarded([&] {
    fraclab::Profile p;
    const std::string name = profile;
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
      throw std::invalid_argument("unknown profile: " + name);
    }
    fraclab::QuadSettings q;
    if (tol > 0.0) {
      q.abs_tol = tol;
      q.tail_tol = tol * 1e-2;
    }
    *out = fraclab::frac_laplacian_pointwise(p, fraclab::FracOrder(s), x, q);
  });
}

int fraclab_solve(const char* domain, const char* f_preset, double s,
                  double h, double big_l, fraclab_solution** out) {
  if (!out || !domain || !f_preset) {
    return set_error(FRACLAB_ECONFIG, "null argument");
  }
  return guarded([&] {
    const fraclab::Domain1D dom = parse_domain_c(domain);
    fraclab::SolveConfig sc;
    sc.h = h;
    sc.L = big_l;
    const std::string name = f_preset;
    std::function<double(double, double)> f;
    if (name == "const1") {
      f = [](double, double) { return 1.0; };
    } else if (name == "sign") {
      f = [](double x, double) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); };
    } else if (name == "affine") {
      f = [](double, double u) { return 1.0 + 0.5 * u; };
    } else if (name == "odd-affine") {
      f = [](double x, double u) {
        return (x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0)) + 0.5 * u;
      };
    } else {
      throw std::invalid_argument("unknown nonlinearity: " + name);
    }
    auto sol = fraclab::solve_semilinear(dom, fraclab::FracOrder(s), f, sc);
    *out = new fraclab_solution{std::move(sol.u)};
  });
}

int fraclab_solution_size(const fraclab_solution* u) {
  return u ? u->u.size() : 0;
}

double fraclab_solution_x(const fraclab_solution* u, int i) {
  if (!u || i < 0 || i >= u->u.size()) return std::nan("");
  return u->u.node(i);
}

double fraclab_solution_value(const fraclab_solution* u, int i) {
  if (!u || i < 0 || i >= u->u.size()) return std::nan("");
  return u->u[i];
}

double fraclab_solution_eval(const fraclab_solution* u, double x) {
  if (!u) return std::nan("");
  return u->u.eval(x);
}

void fraclab_solution_free(fraclab_solution* u) { delete u; }

} // extern "C"
