#include <doctest.h>

#include <cmath>

#include "polembed/embedding.hpp"
#include "polembed/errors.hpp"
#include "polembed/qo_models.hpp"

using namespace polembed;
using constants::c;
using constants::eps0;
using constants::pi;

namespace {

struct Resonant {
  double omega_c;
  double x;
  double f1;
  QerraCavity cavity;
};

// Lossless cavity and lossless resonant two-level ensemble with Omega_R = x omega_c.
Resonant resonant(double x, double gamma_c = 0.0, double gamma_a = 0.0) {
  const double omega_c = ev(5.44);
  const double d = debye(2.25);
  const double n = 6e6;
  const double f1 = mode_amplitude_for_rabi(omega_c, x * omega_c, n, d);
  TwoLevelModel model{{d, omega_c, gamma_a}, TwoLevelForm::rwa};
  return {omega_c, x, f1, QerraCavity({omega_c, gamma_c, f1}, model, n)};
}

}  // namespace

TEST_CASE("zero susceptibility leaves the bare Green function unchanged") {
  const LorentzianMode m{ev(5.44), ev(5.44) / 25.8, 0.02};
  for (int i = 0; i < 200; ++i) {
    const double w = ev(4.0 + 0.015 * i);
    const Complex bare = single_mode_green(m, w);
    CHECK(qerra_dress(bare, 0.0, 1.0, w) == bare);
    CHECK(qerra_dress(bare, 0.0, 37.5, w) == bare);
  }
  CHECK(QerraCavity(m, TwoLevelModel{{1.0, 0.2, 1e-3}, TwoLevelForm::rwa}, 0.0).dressed(ev(5.0)) ==
        single_mode_green(m, ev(5.0)));
  CHECK_THROWS_AS(qerra_dress(0.0, 1.0, 1.0, 0.2), SingularError);
  CHECK_THROWS_AS(qerra_dress(1.0, 1.0, 0.0, 0.2), InvalidArgument);
}

TEST_CASE("only the product V_mic chi enters") {
  const Complex bare(0.3, 0.8), chi(0.01, 0.002);
  const double w = 0.2;
  CHECK(std::abs(qerra_dress(bare, chi, 2.0, w) - qerra_dress(bare, 2.0 * chi, 1.0, w)) <
        1e-15 * std::abs(qerra_dress(bare, chi, 2.0, w)));
}

TEST_CASE("dressed poles of the resonant lossless ensemble") {
  for (double x : {0.01, 0.0647, 0.13, 0.5}) {
    auto r = resonant(x);
    const Complex plus = dressed_pole(r.cavity, r.omega_c * (1.0 - x));
    const Complex minus = dressed_pole(r.cavity, r.omega_c * (1.0 + x));
    INFO("x = " << x);
    CHECK(std::abs(plus - r.omega_c / (1.0 + x)) <= 1e-12 * r.omega_c);
    CHECK(std::abs(minus - r.omega_c / (1.0 - x)) <= 1e-12 * r.omega_c);
    // reciprocal-sum rule
    CHECK(std::abs(1.0 / plus.real() + 1.0 / minus.real() - 2.0 / r.omega_c) <= 1e-10 / r.omega_c);
  }
}

TEST_CASE("residues of the dressed poles") {
  for (double x : {0.001, 0.01, 0.13}) {
    auto r = resonant(x);
    for (int s : {+1, -1}) {
      const double pole = r.omega_c / (1.0 + s * x);
      const Complex res = dressed_residue(r.cavity, pole);
      // partial fractions: G = -f1^2/(2(1+x)) / (omega - omega_+) - f1^2/(2(1-x)) / (omega - omega_-)
      const double expect = -r.f1 * r.f1 / (2.0 * (1.0 + s * x));
      CHECK(std::abs(res - expect) <= 1e-8 * std::abs(expect));
    }
  }
}

TEST_CASE("Born series converges to the closed form") {
  auto r = resonant(0.05, ev(5.44) / 25.8, ev(5.44) / 200.0);
  int checked = 0;
  for (int i = 0; i <= 100; ++i) {
    const double w = r.omega_c * (0.5 + 0.01 * i);
    const Complex bare = r.cavity.bare(w);
    const Complex v_chi = r.cavity.susceptibility_volume(w) * w * w / (c * c);
    const Complex q = bare * v_chi;
    if (std::abs(q) >= 0.9) continue;
    Complex g = bare;
    for (int n = 0; n < 2000; ++n) {
      const Complex next = bare + q * g;
      if (std::abs(next - g) <= 1e-15 * std::abs(next)) break;
      g = next;
    }
    const Complex closed = r.cavity.dressed(w);
    CHECK(std::abs(g - closed) <= 1e-10 * std::abs(closed));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("dressed Green function is passive") {
  for (double ratio : {800.0, 200.0, 100.0}) {
    auto r = resonant(0.0647, ev(5.44) / 25.8, ev(5.44) / ratio);
    for (int i = 0; i <= 1000; ++i) {
      const double w = r.omega_c * (0.5 + 1e-3 * i);
      CHECK(r.cavity.dressed(w).imag() > 0.0);
    }
  }
}

TEST_CASE("local-field correction") {
  const double w = ev(5.44);
  const double rc = nm(1.0);

  SUBCASE("unit permittivity is transparent") {
    const Complex g1(3e-6, 2e-6);
    const auto p = local_field_correct(g1, 1.0, rc, w);
    CHECK(p.c_term == Complex(0.0));
    CHECK(p.screened_g1 == g1);
    CHECK(p.total == p.vac_term + g1);
    CHECK(p.vac_term == Complex(0.0, w / (6 * pi * c)));
  }
  SUBCASE("cubic divergence as R_C -> 0") {
    const Complex eps = 2.5;
    double last = 1e300;
    for (double r : {1e-1, 1e-2, 1e-3}) {
      const double ratio = local_field_c_term(eps, r / 2, w).real() / local_field_c_term(eps, r, w).real();
      const double dev = std::abs(ratio - 8.0);
      CHECK(dev < last);
      last = dev;
    }
    CHECK(last < 1e-6);
  }
  SUBCASE("empty real cavity in a transparent medium") {
    // Im(G_vac + C) = n (3 eps / (2 eps + 1))^2 omega / (6 pi c) for real eps
    for (double eps : {1.2, 1.68, 2.5, 4.0}) {
      const auto p = local_field_correct(0.0, eps, rc, w);
      const double f = 3 * eps / (2 * eps + 1);
      CHECK(p.total.imag() == doctest::Approx(std::sqrt(eps) * f * f * w / (6 * pi * c)).epsilon(1e-13));
    }
  }
  SUBCASE("errors and warnings") {
    CHECK_THROWS_AS(local_field_correct(0.0, -0.5, rc, w), SingularError);
    CHECK_THROWS_AS(local_field_correct(0.0, 2.0, 0.0, w), InvalidArgument);
    CHECK_FALSE(local_field_correct(0.0, 1.7, rc, w).size_warning);
    CHECK(local_field_correct(0.0, 1.7, nm(20.0), w).size_warning);
  }
}

TEST_CASE("spectral density") {
  CHECK(spectral_density(0.0, 0.3) == 0.0);
  CHECK(spectral_density(1e-3, 0.4) == doctest::Approx(4.0 * spectral_density(1e-3, 0.2)).epsilon(1e-15));
  const LorentzianMode m = mode_from_quality(ev(5.44), 25.8, 0.02);
  const double j = spectral_density(single_mode_green(m, m.omega_c).imag(), m.omega_c);
  CHECK(j == doctest::Approx(m.omega_c * m.omega_c * m.f1 * m.f1 / (pi * eps0 * c * c * m.gamma_c))
                 .epsilon(1e-14));
}

TEST_CASE("bulk/scattering split") {
  const double w = ev(5.44);
  const auto none = split_bulk_scattering(local_field_correct(0.0, Complex(1.7, 0.05), nm(1), w), w);
  CHECK(none.j_sc == 0.0);
  CHECK(none.j_0 == none.j_total);

  const Complex g1(2e-6, 5e-6);
  const auto unit = split_bulk_scattering(local_field_correct(g1, 1.0, nm(1), w), w);
  CHECK(unit.j_sc == doctest::Approx(spectral_density(g1.imag(), w)).epsilon(1e-15));
  CHECK(unit.j_sc + unit.j_0 == doctest::Approx(unit.j_total).epsilon(1e-15));
}
