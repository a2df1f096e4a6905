#include <doctest.h>

#include "gfrac/hyp.hpp"
#include "test_util.hpp"

using namespace gfrac;

namespace {

const Hyp2F1Params kAbc{0.2, 0.6, 1.5};

const std::vector<Cplx> kRatioPoints = {Cplx(0.3), Cplx(-0.3), Cplx(0, 0.5), Cplx(0, -0.5),
                                        Cplx(0.2, 0.2)};

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(1.0, 4) == 24.0);
  CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(std::abs(pochhammer(Cplx(0, 1), 2) - Cplx(-1, 1)) <= 1e-15);
}

TEST_CASE("2F1 series evaluation") {
  CHECK(hyp2f1(kAbc, Cplx(0)) == Cplx(1));

  SUBCASE("binomial identity F(a,b;b;w) = (1-w)^(-a)") {
    const Cplx v = hyp2f1({0.5, 1.3, 1.3}, Cplx(0.36));
    CHECK(std::abs(v - Cplx(1.25)) <= 1e-14);
  }

  SUBCASE("logarithm identity F(1,1;2;w) = -log(1-w)/w") {
    const Cplx v = hyp2f1({1, 1, 2}, Cplx(0.5));
    CHECK(std::abs(v - Cplx(2.0 * std::log(2.0))) <= 1e-14);
  }

  CHECK_THROWS_AS(hyp2f1(kAbc, Cplx(0.95)), DomainError);
  CHECK_THROWS_AS(Hyp2F1Params(0.2, 0.6, -1.0), DomainError);
  CHECK_THROWS_AS(Hyp2F1Params(0.2, 0.6, 0.0), DomainError);
}

TEST_CASE("contiguous relations") {
  SUBCASE("a_raise vanishes identically at b = 0") {
    for (const Cplx& w : kRatioPoints)
      CHECK(contiguous_residual(Contiguous::a_raise, {0.7, 0.0, 1.2}, w) <= 1e-15);
  }

  SUBCASE("spot residuals") {
    CHECK(contiguous_residual(Contiguous::bc_lower, kAbc, Cplx(0.3)) <= 1e-13);
    CHECK(contiguous_residual(Contiguous::euler, kAbc, Cplx(-0.4)) <= 1e-13);
    CHECK(contiguous_residual(Contiguous::a_raise, kAbc, Cplx(0.3)) <= 1e-13);
  }

  SUBCASE("residuals over a parameter lattice") {
    const double as[] = {-0.4, 0.2, 0.5, 1.0, 1.5};
    const double bs[] = {0.2, 0.6, 1.0, 1.4, 1.8};
    const double cs[] = {1.2, 1.5, 2.0, 2.5, 3.0};
    const Cplx ws[] = {Cplx(0.3), Cplx(-0.4), Cplx(0, 0.25)};
    for (double a : as)
      for (double b : bs)
        for (double c : cs)
          for (const Cplx& w : ws)
            for (Contiguous rel : {Contiguous::bc_lower, Contiguous::euler, Contiguous::a_raise})
              CHECK(contiguous_residual(rel, {a, b, c}, w) <= 1e-12);
  }
}

TEST_CASE("ratio catalog") {
  SUBCASE("all ratios are 1 at the origin") {
    for (const RatioId id : {RatioId{RatioFamily::gauss, 0}, RatioId{RatioFamily::kustner, 0},
                             RatioId{RatioFamily::g_n, 1}, RatioId{RatioFamily::g_n, 2},
                             RatioId{RatioFamily::f_n, 1}, RatioId{RatioFamily::f_n, 4},
                             RatioId{RatioFamily::f_gap2, 0}})
      CHECK(std::abs(ratio_value(id, kAbc, Cplx(0)) - Cplx(1)) <= 1e-15);
  }

  SUBCASE("continued fractions converge to their ratios") {
    for (const RatioId id : {RatioId{RatioFamily::gauss, 0}, RatioId{RatioFamily::kustner, 0},
                             RatioId{RatioFamily::g_n, 1}, RatioId{RatioFamily::g_n, 2},
                             RatioId{RatioFamily::g_n, 3}, RatioId{RatioFamily::g_n, 4},
                             RatioId{RatioFamily::f_n, 1}, RatioId{RatioFamily::f_n, 2},
                             RatioId{RatioFamily::f_n, 3}, RatioId{RatioFamily::f_n, 4}}) {
      const RatioCf rc = ratio_cf(id, kAbc);
      for (const Cplx& w : kRatioPoints) {
        const Cplx lim = cf_limit(rc.spec, w, 1e-13, 4000);
        const Cplx target = ratio_value(id, kAbc, w);
        CHECK(std::abs(lim - target) <= 1e-9 * std::max(1.0, std::abs(target)));
      }
    }
  }

  SUBCASE("catalog equivalence holds for further parameter triples") {
    for (const auto& [a, b, c] : std::vector<std::tuple<double, double, double>>{
             {0.0, 0.1, 0.4}, {0.5, 0.5, 1.0}}) {
      const Hyp2F1Params p{a, b, c};
      for (const RatioId id :
           {RatioId{RatioFamily::kustner, 0}, RatioId{RatioFamily::g_n, 2},
            RatioId{RatioFamily::f_n, 2}, RatioId{RatioFamily::f_n, 3}}) {
        const RatioCf rc = ratio_cf(id, p);
        for (const Cplx& w : kRatioPoints) {
          const Cplx lim = cf_limit(rc.spec, w, 1e-13, 4000);
          const Cplx target = ratio_value(id, p, w);
          CHECK(std::abs(lim - target) <= 1e-9 * std::max(1.0, std::abs(target)));
        }
      }
    }
  }

  SUBCASE("gap assembly equals the gapped fraction and the structural value") {
    const Hyp2F1Params p{0.0, 0.1, 0.4};
    const GSequence ks = GSequence::kustner(p.a, p.b, p.c);
    for (const Cplx& w : kRatioPoints) {
      const Cplx assembled = ratio_value({RatioFamily::f_gap2, 0}, p, w);
      const Cplx structural = gap_value_structural_single(ks, 2, w);
      const Cplx direct = gap_value_direct(ks, GapSpec::single(2), w);
      CHECK(std::abs(assembled - structural) <= 1e-9);
      CHECK(std::abs(assembled - direct) <= 1e-9);
    }
  }

  SUBCASE("kustner equals the n = 1 standalone-term fraction") {
    for (const Cplx& w : kRatioPoints)
      CHECK(std::abs(ratio_value({RatioFamily::kustner, 0}, kAbc, w) -
                     ratio_value({RatioFamily::f_n, 1}, kAbc, w)) <= 1e-14);
  }
}

TEST_CASE("difference equation for the P and Q sequences") {
  SUBCASE("w = 0 is exact") {
    const PqResidual r = pq_difference_residual(kAbc, 2, Cplx(0));
    CHECK(r.p == 0.0);
    CHECK(r.q == 0.0);
  }

  SUBCASE("residuals stay at roundoff") {
    for (int j = 0; j <= 4; ++j) {
      for (const Cplx w : {Cplx(0.3), Cplx(-0.5)}) {
        const PqResidual r = pq_difference_residual(kAbc, j, w);
        CHECK(r.p <= 1e-13);
        CHECK(r.q <= 1e-13);
      }
    }
  }
}

TEST_CASE("standalone-term fractions arise from the shifted ones") {
  // F_{n+1}(w) = E_{n+1}(w) / (1 - w) with
  // E_{n+1}(w) = 1 - (1 - 1/G_n(w)) / k_n, checked at n = 2, 3.
  for (int n : {2, 3}) {
    const double kn = 1.0 - testutil::gauss_g(kAbc.a, kAbc.b, kAbc.c, n);
    for (const Cplx& w : kRatioPoints) {
      const Cplx gn = ratio_value({RatioFamily::g_n, n}, kAbc, w);
      const Cplx en1 = Cplx(1) - (Cplx(1) - Cplx(1) / gn) / kn;
      const Cplx fn1 = ratio_value({RatioFamily::f_n, n + 1}, kAbc, w);
      CHECK(std::abs(fn1 - en1 / (Cplx(1) - w)) <= 1e-12);
    }
  }
}

TEST_CASE("Schur parameters of the fraction family") {
  SUBCASE("special case a = b - 1/2, c = b") {
    for (double b : {1.0, 2.0, 3.5})
      for (int j = 0; j <= 20; ++j) {
        const auto r = schur_class_alpha(b - 0.5, b, b, j);
        CHECK(r.alpha == Cplx(-b / (b + j)));
        CHECK(r.valid);
      }
  }

  CHECK(schur_class_alpha(1.5, 2.0, 2.0, 3).alpha == Cplx(-2.0 / 5.0));

  SUBCASE("even-index values vanish at c = 2b") {
    for (int j : {0, 2, 4, 8}) CHECK(schur_class_alpha(0.3, 0.7, 1.4, j).alpha == Cplx(0));
  }

  SUBCASE("bridge: alpha_{j-1} = 1 - 2 k_j against the fraction parameters") {
    const double a = 0.2, b = 0.6, c = 1.5;
    for (int j = 1; j <= 20; ++j) {
      const double kj = 1.0 - testutil::gauss_g(a, b, c, j);
      const auto r = schur_class_alpha(a, b, c, j - 1);
      CHECK(std::abs(r.alpha - Cplx(1.0 - 2.0 * kj)) <= 1e-15);
    }
  }
}
