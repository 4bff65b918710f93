#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "phaselab/errors.hpp"
#include "phaselab/radial.hpp"

using namespace phaselab;

namespace {

const CentralPotential& acceptance_bump() {
  static const CentralPotential v = CentralPotential::bump(37.0, 1.0, 3.0);
  return v;
}

}  // namespace

TEST_CASE("multiplicity") {
  CHECK(multiplicity(2, 0) == 1);
  CHECK(multiplicity(2, 5) == 2);
  for (int l = 0; l < 10; ++l) CHECK(multiplicity(3, l) == 2 * l + 1);
  for (int l = 0; l < 10; ++l) CHECK(multiplicity(4, l) == (l + 1) * (l + 1));
  CHECK(multiplicity(5, 2) == 14);
  CHECK(multiplicity(6, 3) == 50);
  CHECK_THROWS_AS(multiplicity(1, 0), ConfigError);
  CHECK_THROWS_AS(multiplicity(3, -1), ConfigError);
}

TEST_CASE("zero potential gives the identity") {
  const CentralPotential z = CentralPotential::zero();
  for (int d : {2, 3, 5})
    for (int l : {0, 1, 7, 30}) {
      CAPTURE(d);
      CAPTURE(l);
      CHECK(std::abs(exact_eigenvalue(z, d, l, 0.05) - 1.0) < 1e-9);
    }
}

TEST_CASE("exact eigenvalues match an independent solver") {
  // scipy DOP853 at rtol 1e-13 with scipy Bessel functions, r_match = 2.
  struct Ref {
    int d, l;
    double h, re, im;
  };
  const Ref refs[] = {
      {2, 0, 0.1, -0.8105093983764603, -0.5857256312843312},
      {2, 3, 0.1, -0.9276728408360498, -0.37339402830679136},
      {3, 5, 0.05, -0.0936051450014114, 0.9956093997292637},
      {2, 12, 0.1, 0.9999999993058262, 3.7260538618375865e-05},
  };
  for (const auto& r : refs) {
    CAPTURE(r.d);
    CAPTURE(r.l);
    const std::complex<double> c = exact_eigenvalue(acceptance_bump(), r.d, r.l, r.h);
    CHECK(std::abs(c - std::complex<double>(r.re, r.im)) < 1e-8);
  }
}

TEST_CASE("matching radius does not matter") {
  for (int l : {0, 4, 9}) {
    const auto a = exact_eigenvalue(acceptance_bump(), 2, l, 0.1, 2.0);
    const auto b = exact_eigenvalue(acceptance_bump(), 2, l, 0.1, 3.5);
    CHECK(std::abs(a - b) < 1e-9);
  }
}

TEST_CASE("dimension shift") {
  for (int l : {0, 3, 10, 19}) {
    const auto a = exact_eigenvalue(acceptance_bump(), 4, l, 0.05);
    const auto b = exact_eigenvalue(acceptance_bump(), 2, l + 1, 0.05);
    CHECK(std::abs(std::arg(a / b)) < 1e-10);
  }
}

TEST_CASE("table flags and WKB error") {
  const ScatteringProfile p = phase_generator(acceptance_bump());
  TableOptions topt;
  topt.epsilon = 0.06;  // alpha_0 = 0.05
  const PhaseShiftTable t3 = build_table(acceptance_bump(), p, 3, 0.1, 20, topt);
  CHECK(t3.entries.size() == 21);
  CHECK((t3.entries[0].flags & kFlagSmallAlpha) != 0);
  CHECK((t3.entries[15].flags & kFlagBadSet) != 0);  // alpha >= R
  CHECK((t3.entries[14].flags & kFlagLargeL) != 0);  // 1.4 >= 1 + 0.1^0.5
  CHECK((t3.entries[13].flags & kFlagLargeL) == 0);
  for (const auto& e : t3.entries) {
    CHECK(std::abs(std::abs(e.eigenvalue) - 1.0) < 1e-12);
    CHECK(e.beta >= 0.0);
    CHECK(e.beta < 2.0 * std::numbers::pi);
  }
  const PhaseShiftTable t2 = build_table(acceptance_bump(), p, 2, 0.05, 30);
  for (const auto& e : t2.entries) CHECK((e.flags & (kFlagBadSet | kFlagSmallAlpha)) == 0);
  const double err = max_interior_error(t2, 0.1);
  CHECK(err > 0.0);
  CHECK(err < 0.2);
  CHECK_THROWS_AS(build_table(acceptance_bump(), p, 2, 0.1, 5), ConfigError);
}

TEST_CASE("helpers") {
  CHECK(wrap_angle(-0.5) == doctest::Approx(2.0 * std::numbers::pi - 0.5));
  CHECK(wrap_angle(2.0 * std::numbers::pi) == 0.0);
  CHECK(flags_to_string(kFlagBadSet | kFlagLargeL) == "bad_set|large_l");
  CHECK(flags_to_string(0) == "");
}
