#include <cmath>
#include <vector>

#include "doctest.h"
#include "ggfnsp/ggfn.hpp"
#include "ggfnsp/ranking.hpp"
#include "ggfnsp/rng.hpp"

using namespace ggfnsp;

TEST_CASE("reference scores") {
  CHECK(r_benefit(Ggfn(15, 3, 0.6)) == doctest::Approx(14.3345).epsilon(1e-4));
  CHECK(r_cost(Ggfn(15, 3, 0.6)) == doctest::Approx(15.6655).epsilon(1e-4));
  CHECK(r_cost(Ggfn(5, 1, 0.7)) == doctest::Approx(5.1549).epsilon(1e-4));
  CHECK(r_cost(Ggfn(5, 1, 0.9)) == doctest::Approx(5.0458).epsilon(1e-4));
  CHECK(r_cost(Ggfn(5, 1, 0.7), RiskParams{2.0}) ==
        doctest::Approx(5.3098040).epsilon(1e-6));
}

TEST_CASE("kappa validation and degenerate cases") {
  CHECK_THROWS_AS(r_cost(Ggfn(5, 1, 0.7), RiskParams{-0.1}), DomainError);
  // h = 1: penalty vanishes for every kappa.
  CHECK(r_cost(Ggfn(7, 3, 1.0), RiskParams{5.0}) == 7.0);
  CHECK(r_benefit(Ggfn(7, 3, 1.0)) == 7.0);
  // kappa = 0: risk neutral.
  CHECK(r_cost(Ggfn(7, 3, 0.2), RiskParams{0.0}) == 7.0);
  // sigma = 0: crisp, no penalty.
  CHECK(r_cost(Ggfn(7, 0, 0.2), RiskParams{2.0}) == 7.0);
}

TEST_CASE("cost index penalizes, benefit index discounts") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Ggfn g(100.0 * (1.0 - rng.u01()), 20.0 * rng.u01(),
                 1.0 - rng.u01());
    CHECK(r_cost(g) >= g.c);
    CHECK(r_benefit(g) <= g.c);
  }
}

TEST_CASE("additivity and positive homogeneity over random GGFNs") {
  Rng rng(42);
  const std::vector<double> kappas{0.0, 0.5, 1.0, 2.0};
  for (int i = 0; i < 1000; ++i) {
    const Ggfn a(100.0 * (1.0 - rng.u01()), 20.0 * (1.0 - rng.u01()),
                 1.0 - rng.u01());
    const Ggfn b(100.0 * (1.0 - rng.u01()), 20.0 * (1.0 - rng.u01()),
                 1.0 - rng.u01());
    const double k = 0.1 + 5.0 * rng.u01();
    for (double kappa : kappas) {
      const RiskParams rp{kappa};
      const double lhs = r_cost(add(a, b), rp);
      const double rhs = r_cost(a, rp) + r_cost(b, rp);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      const double hom = r_cost(scale(k, a), rp);
      CHECK(std::abs(hom - k * r_cost(a, rp)) <=
            1e-12 * std::max(1.0, std::abs(k * r_cost(a, rp))));
    }
  }
}

TEST_CASE("monotonicity sign checks via finite perturbations") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double c = 1.0 + 99.0 * rng.u01();
    const double sigma = 0.1 + 19.0 * rng.u01();
    const double h = 0.05 + 0.9 * rng.u01();  // strictly inside (0, 1)
    const RiskParams rp{1.0};
    const double base = r_cost(Ggfn(c, sigma, h), rp);
    //

    // Larger core worsens a cost.
    CHECK(r_cost(Ggfn(c + 1.0, sigma, h), rp) > base);
    // Larger height improves (decreases) a cost.
    CHECK(r_cost(Ggfn(c, sigma, std::min(1.0, h + 0.05)), rp) < base);
    // Larger dispersion worsens a cost while h < 1.
    CHECK(r_cost(Ggfn(c, sigma + 1.0, h), rp) > base);
    // Larger kappa worsens a cost while h < 1 and sigma > 0.
    CHECK(r_cost(Ggfn(c, sigma, h), RiskParams{2.0}) > base);
  }
}
