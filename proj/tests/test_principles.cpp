#include <cmath>

#include "doctest.h"

#include "core/explicit_solutions.hpp"
#include "core/principles.hpp"

using namespace fraclab;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Odd discrete solution of (-Delta)^s u = sign(x) on (-1,1) with datum
// flip * sign(x) e^{-|x|} outside; a supersolution on (0,1) when flip = +1.
GridFunction odd_solution(double s, double flip) {
  const Domain1D domain(-1.0, 1.0);
  const FracOrder order(s);
  SolveConfig sc;
  sc.h = 1.0 / 64;
  sc.L = 2.0;
  const DiscreteOperator op = assemble(domain, order, {}, sc);
  std::vector<double> f;
  for (int i : op.interior()) {
    const double x = op.geometry().node(i);
    f.push_back(flip * (x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0)));
  }
  auto g = [flip](double x) {
    const double sgn = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
    return flip * sgn * std::exp(-std::abs(x));
  };
  const GridFunction gd =
      GridFunction::sample(sc.L, sc.h, g, Tail::closed_form(g));
  return solve_linear(op, f, gd).u;
}

}  // namespace

TEST_SUITE("principles") {

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(Verdict::Holds)) == "holds");
  CHECK(std::string(verdict_name(Verdict::Fails)) == "fails");
  CHECK(std::string(verdict_name(Verdict::PreconditionViolated)) ==
        "precondition-violated");
}

TEST_CASE("weak comparison holds for an odd supersolution") {
  const GridFunction u = odd_solution(0.5, 1.0);
  const Domain1D half(0.0, 1.0);
  const MpReport rep = weak_mp_check(u, FracOrder(0.5), half,
                                     [](double) { return 0.0; },
                                     MpSide::Supersolution);
  CHECK(rep.verdict == Verdict::Holds);
}

TEST_CASE("weak comparison holds for an odd subsolution") {
  const GridFunction u = odd_solution(0.5, -1.0);
  const Domain1D half(0.0, 1.0);
  const MpReport rep = weak_mp_check(u, FracOrder(0.5), half,
                                     [](double) { return 0.0; },
                                     MpSide::Subsolution);
  CHECK(rep.verdict == Verdict::Holds);
}

TEST_CASE("weak check rejects a mislabeled side") {
  // the supersolution is not a subsolution: the residual gate must fire
  const GridFunction u = odd_solution(0.5, 1.0);
  const Domain1D half(0.0, 1.0);
  const MpReport rep = weak_mp_check(u, FracOrder(0.5), half,
                                     [](double) { return 0.0; },
                                     MpSide::Subsolution);
  CHECK(rep.verdict == Verdict::PreconditionViolated);
}

TEST_CASE("weak check rejects non-odd input") {
  GridFunction even = GridFunction::sample(2.0, 1.0 / 64,
                                           [](double x) { return x * x; });
  const MpReport rep = weak_mp_check(even, FracOrder(0.5), Domain1D(0.0, 1.0),
                                     [](double) { return 0.0; },
                                     MpSide::Supersolution);
  CHECK(rep.verdict == Verdict::PreconditionViolated);
}

TEST_CASE("weak check rejects a sign-changing potential") {
  const GridFunction u = odd_solution(0.5, 1.0);
  const MpReport rep = weak_mp_check(u, FracOrder(0.5), Domain1D(0.0, 1.0),
                                     [](double) { return -1.0; },
                                     MpSide::Supersolution);
  CHECK(rep.verdict == Verdict::PreconditionViolated);
}

TEST_CASE("strong dichotomy: positive case and zero case") {
  const GridFunction u = odd_solution(0.5, 1.0);
  const Domain1D half(0.0, 1.0);
  MpReport rep = strong_mp_check(u, FracOrder(0.5), half,
                                 [](double) { return 0.0; });
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.interior_min > 0.0);

  GridFunction zero(2.0, 1.0 / 64);
  rep = strong_mp_check(zero, FracOrder(0.5), half,
                        [](double) { return 0.0; });
  CHECK(rep.verdict == Verdict::Holds);
}

TEST_CASE("strong check rejects sign-changing input") {
  GridFunction bad = GridFunction::sample(
      2.0, 1.0 / 64, [](double x) { return std::sin(2.0 * kPi * x); });
  const MpReport rep = strong_mp_check(bad, FracOrder(0.5),
                                       Domain1D(0.0, 1.0),
                                       [](double) { return 0.0; });
  CHECK(rep.verdict == Verdict::PreconditionViolated);
}

TEST_CASE("linear growth probe on exactly linear data") {
  HopfConfig cfg;
  cfg.solution = [](double h) {
    return GridFunction::sample(1.0, h, [](double x) { return std::sin(x); });
  };
  const HopfReport rep = hopf_growth(cfg);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.limit == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rep.stable);
}

TEST_CASE("linear growth probe rejects superlinear vanishing") {
  HopfConfig cfg;
  cfg.solution = [](double h) {
    return GridFunction::sample(1.0, h, [](double x) {
      return (x >= 0 ? 1.0 : -1.0) * std::pow(std::abs(x), 1.5);
    });
  };
  const HopfReport rep = hopf_growth(cfg);
  CHECK(rep.verdict == Verdict::Fails);
  CHECK(rep.limit < cfg.floor);
}

TEST_CASE("barrier construction at zero potential bound") {
  BarrierConfig cfg;
  cfg.check_nodes = 16;
  const BarrierSpec spec = barrier_build(1.0, 0.0, FracOrder(0.5), cfg);
  CHECK(spec.success);
  CHECK(spec.alpha >= 0.0);
  CHECK(spec.margin <= 0.0);
  CHECK(spec.dphi0 > 0.0);
  // phi is odd and vanishes beyond 2 rho
  CHECK(spec.phi(0.7) == doctest::Approx(-spec.phi(-0.7)).epsilon(1e-12));
  CHECK(spec.phi(2.5) == 0.0);
  // alpha/2 must not satisfy the margin (minimality)
  if (spec.alpha > 0.0) CHECK(spec.margin_at_half > 0.0);
}

TEST_CASE("eigenvalue lower bound formula") {
  CHECK(eigen_bound(FracOrder(0.5, 1), 2.0) ==
        doctest::Approx(2.0 / kPi).epsilon(1e-14));
  // shrinks with the measure, grows as the measure shrinks
  CHECK(eigen_bound(FracOrder(0.5, 1), 4.0) <
        eigen_bound(FracOrder(0.5, 1), 2.0));
  CHECK(eigen_bound(FracOrder(0.5, 1), 1.0) ==
        doctest::Approx(4.0 / kPi).epsilon(1e-14));
  // dimension two with |Omega| = pi: 2 pi^{3/2} (2 pi)^{-1} pi^{-1/2} = 1
  CHECK(eigen_bound(FracOrder(0.5, 2), kPi) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("comparison scale is a power of two with two-sided bounds") {
  const FracOrder order(0.5);
  const double radius = comparison_scale(order, 4.0);
  CHECK(radius >= 4.0);
  const double lg = std::log2(radius);
  CHECK(lg == doctest::Approx(std::round(lg)).epsilon(1e-12));
  const double slope = c0(order);
  for (int k = 1; k <= 40; ++k) {
    const double x = 4.0 * k / 40.0;
    const double v = zeta_R(x, radius, order) / slope;
    CHECK(v >= 0.75 * x - 1e-9);
    CHECK(v <= 1.25 * x + 1e-9);
  }
}

}  // TEST_SUITE
