#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"

#include "fraclab/fraclab.h"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("capi") {

TEST_CASE("version string") {
  const std::string v = fraclab_version();
  CHECK(v.rfind("fraclab ", 0) == 0);
}

TEST_CASE("scalar entry points") {
  double out = 0.0;
  REQUIRE(fraclab_kernel_constant(0.5, 1, &out) == FRACLAB_OK);
  CHECK(out == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  REQUIRE(fraclab_c0(0.5, &out) == FRACLAB_OK);
  CHECK(out == doctest::Approx(2.0 / kPi).epsilon(1e-10));
  REQUIRE(fraclab_eigen_bound(0.5, 1, 2.0, &out) == FRACLAB_OK);
  CHECK(out == doctest::Approx(2.0 / kPi).epsilon(1e-13));
  REQUIRE(fraclab_zeta(2.0, 4.0, 0.5, &out) == FRACLAB_OK);
  CHECK(out > 0.0);
  CHECK(out < 4.0);
  REQUIRE(fraclab_pointwise("lorentzian", 0.5, 0.0, 1e-6, &out) == FRACLAB_OK);
  CHECK(out == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("invalid arguments produce config errors with messages") {
  double out = 0.0;
  CHECK(fraclab_kernel_constant(1.5, 1, &out) == FRACLAB_ECONFIG);
  CHECK(std::strlen(fraclab_last_error()) > 0);
  CHECK(fraclab_pointwise("no-such-profile", 0.5, 0.0, 1e-6, &out) ==
        FRACLAB_ECONFIG);
  CHECK(fraclab_kernel_constant(0.5, 1, nullptr) == FRACLAB_ECONFIG);
}

TEST_CASE("solution handle round-trip") {
  fraclab_solution* u = nullptr;
  REQUIRE(fraclab_solve("-1,1", "const1", 0.5, 0.02, 2.0, &u) == FRACLAB_OK);
  REQUIRE(u != nullptr);
  const int n = fraclab_solution_size(u);
  CHECK(n > 100);
  CHECK(fraclab_solution_x(u, 0) == doctest::Approx(-2.0));
  CHECK(fraclab_solution_x(u, n - 1) == doctest::Approx(2.0));
  // torsion solution: positive inside, zero outside, even
  CHECK(fraclab_solution_eval(u, 0.0) > 0.0);
  CHECK(fraclab_solution_eval(u, 1.5) == 0.0);
  CHECK(fraclab_solution_eval(u, 0.5) ==
        doctest::Approx(fraclab_solution_eval(u, -0.5)).epsilon(1e-10));
  fraclab_solution_free(u);
}

TEST_CASE("solve rejects malformed domains") {
  fraclab_solution* u = nullptr;
  CHECK(fraclab_solve("1,-1", "const1", 0.5, 0.02, 2.0, &u) ==
        FRACLAB_ECONFIG);
  CHECK(u == nullptr);
  CHECK(fraclab_solve("-1,1", "const1", 0.5, 0.02, 0.5, &u) !=
        FRACLAB_OK);  // box smaller than the domain
}

TEST_CASE("run reports are deterministic") {
  const char* cfg = R"({"command":"eval","profile":"sqrt","s":0.5,"x":0.25})";
  char* rep1 = nullptr;
  char* rep2 = nullptr;
  REQUIRE(fraclab_run(cfg, &rep1) == FRACLAB_OK);
  REQUIRE(fraclab_run(cfg, &rep2) == FRACLAB_OK);
  REQUIRE(rep1 != nullptr);
  REQUIRE(rep2 != nullptr);
  CHECK(std::string(rep1) == std::string(rep2));
  CHECK(std::string(rep1).find("\"result\"") != std::string::npos);
  fraclab_free(rep1);
  fraclab_free(rep2);
}

TEST_CASE("run rejects unknown keys and commands") {
  char* rep = nullptr;
  CHECK(fraclab_run(R"({"command":"eval","bogus":1})", &rep) ==
        FRACLAB_ECONFIG);
  fraclab_free(rep);
  rep = nullptr;
  CHECK(fraclab_run(R"({"command":"no-such"})", &rep) == FRACLAB_ECONFIG);
  fraclab_free(rep);
  rep = nullptr;
  CHECK(fraclab_run("not json", &rep) == FRACLAB_ECONFIG);
  fraclab_free(rep);
}

}  // TEST_SUITE
