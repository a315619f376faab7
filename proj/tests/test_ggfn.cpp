#include <cmath>
#include <vector>

#include "doctest.h"
#include "ggfnsp/ggfn.hpp"
#include "ggfnsp/rng.hpp"

using namespace ggfnsp;

TEST_CASE("construction validates fields") {
  CHECK_NOTHROW(Ggfn(10.0, 2.0, 0.8));
  CHECK_NOTHROW(Ggfn(-3.0, 0.0, 1.0));  // crisp negative value is a valid GGFN
  CHECK_THROWS_AS(Ggfn(10.0, 2.0, 0.0), ValidationError);
  CHECK_THROWS_AS(Ggfn(10.0, 2.0, -0.1), ValidationError);
  CHECK_THROWS_AS(Ggfn(10.0, 2.0, 1.2), ValidationError);
  CHECK_THROWS_AS(Ggfn(10.0, -1.0, 0.8), ValidationError);
  CHECK_THROWS_AS(Ggfn(std::nan(""), 2.0, 0.8), ValidationError);
  CHECK_THROWS_AS(Ggfn(10.0, 2.0, std::nan("")), ValidationError);
  CHECK_THROWS_AS(Ggfn(1.0 / 0.0, 2.0, 0.8), ValidationError);
}

TEST_CASE("membership is a Gaussian bump of height h") {
  const Ggfn g(10.0, 2.0, 0.8);
  CHECK(membership(g, 10.0) == 0.8);
  // Half of the height is reached at c + sigma*sqrt(2 ln 2).
  const double x = 10.0 + 2.0 * std::sqrt(2.0 * std::log(2.0));
  CHECK(membership(g, x) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(membership(g, 1e6) == doctest::Approx(0.0));

  const Ggfn crisp(5.0, 0.0, 0.7);
  CHECK(membership(crisp, 5.0) == 0.7);
  CHECK(membership(crisp, 5.0000001) == 0.0);
}

TEST_CASE("alpha_cut endpoints and domain") {
  const Ggfn g(15.0, 3.0, 0.6);
  // At alpha = h*exp(-1/2) the half-width is exactly sigma.
  const Interval cut = alpha_cut(g, 0.6 * std::exp(-0.5));
  CHECK(cut.lo == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(cut.hi == doctest::Approx(18.0).epsilon(1e-12));

  const Interval top = alpha_cut(g, 0.6);
  CHECK(top.lo == 15.0);
  CHECK(top.hi == 15.0);

  CHECK_THROWS_AS(alpha_cut(g, 0.0), DomainError);
  CHECK_THROWS_AS(alpha_cut(g, -0.2), DomainError);
  CHECK_THROWS_AS(alpha_cut(g, 0.600001), DomainError);

  const Ggfn crisp(15.0, 0.0, 0.6);
  const Interval point = alpha_cut(crisp, 0.3);
  CHECK(point.lo == 15.0);
  CHECK(point.hi == 15.0);
}

TEST_CASE("alpha_cut width shrinks as alpha rises") {
  const Ggfn g(0.0, 1.0, 0.9);
  double prev = 1e300;
  for (double a = 0.1; a < 0.9; a += 0.1) {
    const Interval cut = alpha_cut(g, a);
    const double width = cut.hi - cut.lo;
    CHECK(width < prev);
    CHECK(cut.lo <= cut.hi);
    prev = width;
  }
}

TEST_CASE("add: cores and dispersions add, height is the sigma-weighted "
          "geometric mean") {
  const Ggfn a(15.0, 3.0, 0.6);
  const Ggfn b(5.0, 1.0, 0.7);
  const Ggfn sum = add(a, b);
  CHECK(sum.c == 20.0);
  CHECK(sum.sigma == 4.0);
  CHECK(sum.h ==
        doctest::Approx(std::exp((3.0 * std::log(0.6) + std::log(0.7)) / 4.0))
            .epsilon(1e-15));

  const Ggfn ba = add(b, a);
  CHECK(sum.c == ba.c);
  CHECK(sum.sigma == ba.sigma);
  CHECK(sum.h == doctest::Approx(ba.h).epsilon(1e-15));

  // Height stays within the member heights.
  CHECK(sum.h >= 0.6);
  CHECK(sum.h <= 0.7);
}

TEST_CASE("add of two crisp values uses the unweighted geometric mean") {
  const Ggfn a(2.0, 0.0, 0.5);
  const Ggfn b(3.0, 0.0, 0.8);
  const Ggfn sum = add(a, b);
  CHECK(sum.c == 5.0);
  CHECK(sum.sigma == 0.0);
  CHECK(sum.h == doctest::Approx(std::sqrt(0.4)).epsilon(1e-15));
}

TEST_CASE("fold_sum equals the closed formula and iterated adds") {
  const std::vector<Ggfn> items{Ggfn(15.0, 3.0, 0.6), Ggfn(5.0, 1.0, 0.7),
                                Ggfn(5.0, 1.0, 0.9)};
  const Ggfn n_ary = fold_sum(items);
  CHECK(n_ary.c == 25.0);
  CHECK(n_ary.sigma == 5.0);

  const Ggfn left = add(add(items[0], items[1]), items[2]);
  const Ggfn right = add(items[0], add(items[1], items[2]));
  CHECK(n_ary.h == doctest::Approx(left.h).epsilon(1e-13));
  CHECK(n_ary.h == doctest::Approx(right.h).epsilon(1e-13));

  CHECK(fold_sum(std::vector<Ggfn>{items[0]}).h == items[0].h);
  CHECK_THROWS_AS(fold_sum(std::vector<Ggfn>{}), EmptyInput);
}

TEST_CASE("fold_sum on random items matches iterated binary adds") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Ggfn> items;
    const int n = 2 + static_cast<int>(rng.u01() * 6);
    for (int i = 0; i < n; ++i) {
      items.emplace_back(100.0 * (1.0 - rng.u01()), 20.0 * rng.u01(),
                         1.0 - rng.u01());
    }
    Ggfn iterated = items[0];
    for (int i = 1; i < n; ++i) {
      iterated = add(iterated, items[i]);
    }
    const Ggfn direct = fold_sum(items);
    CHECK(direct.c == doctest::Approx(iterated.c).epsilon(1e-12));
    CHECK(direct.sigma == doctest::Approx(iterated.sigma).epsilon(1e-12));
    CHECK(direct.h == doctest::Approx(iterated.h).epsilon(1e-12));
    CHECK(direct.h >= 0.0);
    CHECK(direct.h <= 1.0);
  }
}

TEST_CASE("fold_sum of all-crisp items is the unweighted geometric mean") {
  const std::vector<Ggfn> items{Ggfn(1.0, 0.0, 0.4), Ggfn(2.0, 0.0, 0.6),
                                Ggfn(3.0, 0.0, 0.9)};
  const Ggfn sum = fold_sum(items);
  CHECK(sum.c == 6.0);
  CHECK(sum.sigma == 0.0);
  CHECK(sum.h ==
        doctest::Approx(std::cbrt(0.4 * 0.6 * 0.9)).epsilon(1e-14));
}

TEST_CASE("scale multiplies core and dispersion, keeps height") {
  const Ggfn b(5.0, 1.0, 0.7);
  const Ggfn twice = scale(2.0, b);
  CHECK(twice.c == 10.0);
  CHECK(twice.sigma == 2.0);
  CHECK(twice.h == 0.7);

  const Ggfn neg = scale(-1.5, b);
  CHECK(neg.c == -7.5);
  CHECK(neg.sigma == 1.5);
  CHECK(neg.h == 0.7);

  const Ggfn zero = scale(0.0, b);
  CHECK(zero.c == 0.0);
  CHECK(zero.sigma == 0.0);
  CHECK(zero.h == 0.7);
}

TEST_CASE("nonneg_feasible checks the lower endpoint at the base level") {
  // At alpha* = 0.05, h = 0.8: lower endpoint >= 0 iff
  // sigma <= c / sqrt(-2 ln 0.0625) = c / 2.35482.
  CHECK(nonneg_feasible(Ggfn(10.0, 4.0, 0.8), 0.05));
  CHECK_FALSE(nonneg_feasible(Ggfn(10.0, 4.5, 0.8), 0.05));
  CHECK(nonneg_feasible(Ggfn(10.0, 0.0, 0.8), 0.05));
  CHECK_THROWS_AS(nonneg_feasible(Ggfn(10.0, 4.0, 0.8), 0.0), DomainError);
  CHECK_THROWS_AS(nonneg_feasible(Ggfn(10.0, 4.0, 0.8), 0.9), DomainError);
}

TEST_CASE("reference example rows reproduce to 4 decimal places") {
  // <(c, sigma); h> and the printed reference heights for the sums.
  const Ggfn a(15.0, 3.0, 0.6);
  const Ggfn b(5.0, 1.0, 0.7);
  const Ggfn c(5.0, 1.0, 0.9);
  CHECK(add(a, b).h == doctest::Approx(0.6236).epsilon(1e-4));
  CHECK(add(a, c).h == doctest::Approx(0.6640).epsilon(1e-4));
  CHECK(add(b, c).h == doctest::Approx(0.7937).epsilon(1e-4));

  // All parenthesizations and the n-ary sum agree on <(25,5); 0.6710561>.
  const double expected = 0.6710561;
  CHECK(std::abs(add(add(a, b), c).h - expected) < 5.05e-8);
  CHECK(std::abs(add(a, add(b, c)).h - expected) < 5.05e-8);
  CHECK(std::abs(add(add(a, c), b).h - expected) < 5.05e-8);
  CHECK(std::abs(fold_sum(std::vector<Ggfn>{a, b, c}).h - expected) < 5.05e-8);
}
