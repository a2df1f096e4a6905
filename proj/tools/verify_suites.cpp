#include "verify_suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gfrac/pick.hpp"
#include "gfrac/schur.hpp"

namespace gfrac::cli {

namespace {

using gfrac::Cplx;

std::vector<Cplx> seeded_disk(int n, double radius, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Cplx> out;
  for (int i = 0; i < n; ++i)
    out.push_back(std::polar(radius * std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng)));
  return out;
}

const std::vector<Cplx> kGapPoints = {Cplx(0.1), Cplx(0, 0.3), Cplx(-0.5), Cplx(0.2, 0.2),
                                      Cplx(0, -0.7)};

VerifyCheck make(const std::string& name, const std::string& params, double worst, double tol) {
  return {name, params, worst, tol, worst <= tol};
}

void suite_cf(std::vector<VerifyCheck>& out, unsigned seed) {
  const GSequence g = GSequence::gauss(0.2, 0.6, 1.5);
  const CfSpec spec = gfrac_spec(g);

  {
    // residual scaled by the magnitude of the cross products entering the
    // determinant, which cancel almost completely at larger |z| and k
    double worst = 0;
    for (const Cplx& z : seeded_disk(5, 0.9, seed)) {
      for (int k = 1; k <= 50; ++k) {
        const ApproximantPair pair = approximant(spec, k, z);
        const double mag = (std::abs(pair.x_cur * pair.y_prev) +
                            std::abs(pair.x_prev * pair.y_cur)) /
                           (pair.scale * pair.scale);
        worst = std::max(worst,
                         std::abs(determinant_residual(pair, spec, z)) / std::max(1.0, mag));
      }
    }
    out.push_back(make("determinant-identity", "gauss(0.2,0.6,1.5) k<=50", worst, 1e-12));
  }
  {
    double worst = 0;
    const Cplx z(0.3);
    const Cplx limit = cf_limit(spec, z);
    for (int k : {2, 4, 7}) {
      const Cplx h = -tail_value(spec, k, z).value;
      worst = std::max(worst, std::abs(modified_approximant(approximant(spec, k, z), h) - limit));
    }
    out.push_back(make("tail-reattachment", "gauss(0.2,0.6,1.5) z=0.3", worst, 5e-13));
  }
  {
    const GSequence half = GSequence::from_generator([](int) { return 0.5; });
    const CfSpec hs = gfrac_spec(half);
    const Cplx z(-1);
    const double worst =
        std::abs(approximant(hs, 400, z).value() - approximant(hs, 800, z).value());
    out.push_back(make("depth-doubling", "g=1/2 z=-1", worst, 1e-12));
  }
  {
    const Cplx z(0.3);
    const double worst = std::abs(approximant(spec, 60, z).value() -
                                  ratio_value({RatioFamily::gauss, 0}, {0.2, 0.6, 1.5}, z));
    out.push_back(make("series-ratio-match", "gauss(0.2,0.6,1.5) z=0.3", worst, 1e-10));
  }
}

void suite_gap(std::vector<VerifyCheck>& out, unsigned) {
  const GSequence g = GSequence::gauss(0.2, 0.6, 1.5);
  auto compare = [&](const std::string& name, const GapSpec& gap, auto structural) {
    double worst = 0;
    for (const Cplx& z : kGapPoints) {
      const Cplx d = gap_value_direct(g, gap, z);
      worst = std::max(worst, std::abs(structural(z) - d) / std::max(1.0, std::abs(d)));
    }
    out.push_back(make(name, "gauss(0.2,0.6,1.5)", worst, 1e-9));
  };
  compare("gap-single-k2", GapSpec::single(2),
          [&](Cplx z) { return gap_value_structural_single(g, 2, z); });
  compare("gap-single-k3", GapSpec::single(3),
          [&](Cplx z) { return gap_value_structural_single(g, 3, z); });
  compare("gap-block-2-2", GapSpec::block(2, 2),
          [&](Cplx z) { return gap_value_structural_block(g, 2, 2, z); });
  compare("gap-block-1-3", GapSpec::block(1, 3),
          [&](Cplx z) { return gap_value_structural_block(g, 1, 3, z); });
  compare("gap-pair-2-5", GapSpec::pair(2, 5),
          [&](Cplx z) { return gap_value_structural_pair(g, 2, 5, z); });
  compare("gap-pair-1-3", GapSpec::pair(1, 3),
          [&](Cplx z) { return gap_value_structural_pair(g, 1, 3, z); });
  {
    const Cplx z(0.5);
    const Cplx gapped = gap_value_direct(g, GapSpec::single(2), z);
    const GSequence zeroed =
        GSequence::from_generator([g](int j) { return j == 2 ? 0.0 : g(j); });
    const double diff = std::abs(gapped - cf_limit(gfrac_spec(zeroed), z));
    out.push_back(
        make("gap-differs-from-zeroing", "gauss(0.2,0.6,1.5) k=2 z=0.5",
             std::max(0.0, 1e-3 - diff), 0.0));
  }
}

void suite_schur(std::vector<VerifyCheck>& out, unsigned seed) {
  const SchurParams p31 = SchurParams::example31();
  const TransferMatrix t = perturb_transfer_matrix(p31, 1, Cplx(0.5));

  {
    // entries pinned by the recurrences
    double worst = 0;
    auto coeff_diff = [&](const ComplexPoly& poly, std::initializer_list<double> want) {
      int j = 0;
      for (double w : want) worst = std::max(worst, std::abs(poly.coeff(j++) - Cplx(w)));
    };
    coeff_diff(t.t11, {-1.0 / 12, 0.5, 1.0 / 12});
    coeff_diff(t.t12, {1.0 / 24, 0.0, -1.0 / 6});
    coeff_diff(t.t21, {-1.0 / 6, 0.0, 1.0 / 24});
    coeff_diff(t.t22, {1.0 / 12, 0.5, -1.0 / 12});
    out.push_back(make("transfer-matrix-entries", "alpha=(1/2,2/3,...) k=1 beta=1/2", worst, 1e-14));
  }
  {
    const RationalFn f({Cplx(0.5), Cplx(0.5)}, {Cplx(1)});
    const RationalFn fp = perturbed_schur(t, f);
    const SchurParams ps = p31.with_replacement(1, Cplx(0.5));
    double worst = 0;
    for (const Cplx& z : seeded_disk(10, 0.8, seed + 1))
      worst = std::max(worst, std::abs(fp.eval(z) - schur_approximant(ps, 220, z)));
    out.push_back(make("perturbed-schur-vs-substitution", "k=1 beta=1/2", worst, 1e-9));
  }
  {
    const SchurParams pc = SchurParams::from_values(
        {Cplx(0.3, 0.2), Cplx(-0.1, 0.4), Cplx(0.25, -0.3), Cplx(0.1, 0.1), Cplx(-0.2, -0.15),
         Cplx(0.05, 0.3), Cplx(0.4), Cplx(0, -0.35), Cplx(0.2, 0.2), Cplx(-0.3, 0.1),
         Cplx(0.15, -0.05), Cplx(0.1, 0.25)});
    const auto pairs = schur_pairs(pc, 21);
    double worst = 0;
    for (const Cplx& z : seeded_disk(20, 0.95, seed + 2)) {
      for (int n = 0; n <= 10; ++n) {
        const auto& ae = pairs[static_cast<std::size_t>(2 * n)];
        const auto& ao = pairs[static_cast<std::size_t>(2 * n + 1)];
        worst = std::max(worst,
                         std::abs(ao.a.eval(z) - poly_reciprocal(ae.b, n).shifted(1).eval(z)));
        worst = std::max(worst,
                         std::abs(ao.b.eval(z) - poly_reciprocal(ae.a, n).shifted(1).eval(z)));
        worst = std::max(worst, std::abs(ae.a.eval(z) - poly_reciprocal(ao.b, n + 1).eval(z)));
        worst = std::max(worst, std::abs(ae.b.eval(z) - poly_reciprocal(ao.a, n + 1).eval(z)));
      }
    }
    out.push_back(make("reciprocal-relations", "complex alphas n<=10", worst, 1e-12));

    // master identity at k = 2
    const int k = 2;
    const Cplx beta(0.15, -0.2);
    const TransferMatrix tk = perturb_transfer_matrix(pc, k, beta);
    const auto pert = schur_pairs(pc.with_replacement(k, beta), 2 * (2 * k + 4) + 1);
    const auto orig = schur_pairs(pc, 2 * (2 * k + 4) + 1);
    double worst_m = 0;
    for (int pp = 2 * k; pp <= 2 * k + 4; ++pp) {
      for (const Cplx& z : seeded_disk(5, 0.9, seed + 3)) {
        const Cplx sc = tk.scalar_coeff * std::pow(z, tk.z_power);
        const Cplx r1 = sc * pert[static_cast<std::size_t>(2 * pp + 1)].a.eval(z) -
                        (tk.t11.eval(z) * orig[static_cast<std::size_t>(2 * pp + 1)].a.eval(z) +
                         tk.t12.eval(z) * orig[static_cast<std::size_t>(2 * pp + 1)].b.eval(z));
        const Cplx r2 = sc * pert[static_cast<std::size_t>(2 * pp)].b.eval(z) -
                        (tk.t21.eval(z) * orig[static_cast<std::size_t>(2 * pp)].a.eval(z) +
                         tk.t22.eval(z) * orig[static_cast<std::size_t>(2 * pp)].b.eval(z));
        worst_m = std::max({worst_m, std::abs(r1), std::abs(r2)});
      }
    }
    out.push_back(make("transfer-master-identity", "complex alphas k=2", worst_m, 1e-11));

    // gamma bilinear
    double worst_g = 0, worst_inv = 0;
    const Cplx gb(0, 0.25);
    const double expected = (1.0 - std::norm(pc.alpha(1))) / (1.0 - std::norm(gb));
    for (int j = 1; j <= 5; ++j) {
      const auto r = gamma_bilinear(pc, 1, gb, j);
      worst_g = std::max(worst_g, r.residual);
      worst_inv = std::max(worst_inv, std::abs(std::norm(r.a) - std::norm(r.b) - expected));
    }
    out.push_back(make("gamma-bilinear-residual", "complex alphas k=1 j<=5", worst_g, 1e-12));
    out.push_back(make("gamma-bilinear-invariant", "complex alphas k=1 j<=5", worst_inv, 1e-12));
  }
  {
    double worst = 0;
    for (const Cplx& v : gamma_sequence(p31, 20)) worst = std::max(worst, std::abs(v - Cplx(1)));
    out.push_back(make("gamma-real-case", "alpha=(1/2,2/3,...) p<=20", worst, 1e-14));
  }
}

void suite_hyp(std::vector<VerifyCheck>& out, unsigned) {
  {
    const double as[] = {-0.4, 0.2, 0.5, 1.0, 1.5};
    const double bs[] = {0.2, 0.6, 1.0, 1.4, 1.8};
    const double cs[] = {1.2, 1.5, 2.0, 2.5, 3.0};
    const Cplx ws[] = {Cplx(0.3), Cplx(-0.4), Cplx(0, 0.25)};
    double worst = 0;
    for (double a : as)
      for (double b : bs)
        for (double c : cs)
          for (const Cplx& w : ws)
            for (Contiguous rel : {Contiguous::bc_lower, Contiguous::euler, Contiguous::a_raise})
              worst = std::max(worst, contiguous_residual(rel, {a, b, c}, w));
    out.push_back(make("contiguous-lattice", "5x5x5 lattice", worst, 1e-12));
  }
  {
    double worst = 0;
    for (int j = 0; j <= 4; ++j)
      for (const Cplx w : {Cplx(0.3), Cplx(-0.5)}) {
        const PqResidual r = pq_difference_residual({0.2, 0.6, 1.5}, j, w);
        worst = std::max({worst, r.p, r.q});
      }
    out.push_back(make("difference-equation", "(0.2,0.6,1.5) j<=4", worst, 1e-13));
  }
  {
    double worst = 0;
    const Hyp2F1Params p{0.2, 0.6, 1.5};
    for (const RatioId id : {RatioId{RatioFamily::gauss, 0}, RatioId{RatioFamily::kustner, 0},
                             RatioId{RatioFamily::g_n, 1}, RatioId{RatioFamily::g_n, 2},
                             RatioId{RatioFamily::f_n, 1}, RatioId{RatioFamily::f_n, 2},
                             RatioId{RatioFamily::f_n, 3}, RatioId{RatioFamily::f_n, 4}}) {
      const RatioCf rc = ratio_cf(id, p);
      for (const Cplx& w : kGapPoints) {
        const Cplx target = ratio_value(id, p, w);
        worst = std::max(worst, std::abs(cf_limit(rc.spec, w, 1e-13, 4000) - target) /
                                    std::max(1.0, std::abs(target)));
      }
    }
    out.push_back(make("cf-ratio-equivalence", "(0.2,0.6,1.5)", worst, 1e-9));
  }
  {
    const Hyp2F1Params p{0.0, 0.1, 0.4};
    const GSequence ks = GSequence::kustner(p.a, p.b, p.c);
    double worst = 0;
    for (const Cplx& w : kGapPoints)
      worst = std::max(worst, std::abs(ratio_value({RatioFamily::f_gap2, 0}, p, w) -
                                       gap_value_structural_single(ks, 2, w)));
    out.push_back(make("gap-assembly", "(0,0.1,0.4) k=2", worst, 1e-9));
  }
  {
    double worst = 0;
    for (double b : {1.0, 2.0, 3.5})
      for (int j = 0; j <= 20; ++j)
        worst = std::max(worst,
                         std::abs(schur_class_alpha(b - 0.5, b, b, j).alpha - Cplx(-b / (b + j))));
    out.push_back(make("schur-class-special-case", "a=b-1/2 c=b", worst, 1e-15));

    double worst_b = 0;
    for (int j = 1; j <= 20; ++j) {
      const GSequence g = GSequence::gauss(0.2, 0.6, 1.5);
      const double kj = 1.0 - g(j);
      worst_b = std::max(worst_b, std::abs(schur_class_alpha(0.2, 0.6, 1.5, j - 1).alpha -
                                           Cplx(1.0 - 2.0 * kj)));
    }
    out.push_back(make("schur-class-bridge", "(0.2,0.6,1.5)", worst_b, 1e-15));
  }
}

void suite_pick(std::vector<VerifyCheck>& out, unsigned) {
  const std::vector<Hyp2F1Params> triples = {{0.0, 0.1, 0.4}, {0.2, 0.6, 1.5}, {-0.5, 0.5, 1.0}};
  const auto grid = standard_halfplane_grid();
  for (const auto& p : triples) {
    std::ostringstream ps;
    ps << "(" << p.a << "," << p.b << "," << p.c << ")";
    double worst_tm = 0, worst_hp = 0;
    for (int i = 1; i <= 6; ++i) {
      const CheckReport tm = totally_monotone_check(pick_ratio_moments(i, p, 8), 8, 1e-10);
      worst_tm = std::max(worst_tm, tm.worst);
      const CheckReport hp =
          halfplane_positivity([&](Cplx w) { return pick_ratio_value(i, p, w); }, grid);
      worst_hp = std::max(worst_hp, hp.worst + (hp.eval_failures > 0 ? 1.0 : 0.0));
    }
    out.push_back(make("totally-monotone", ps.str() + " maps 1..6 K=8", worst_tm, 1e-10));
    out.push_back(make("halfplane-positivity", ps.str() + " maps 1..6", worst_hp, 1e-12));
    out.push_back(make("omega-coefficient", ps.str(), pick_omega_coeff_residual(p), 1e-12));
  }
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite(const std::string& suite, unsigned seed) {
  std::vector<VerifyCheck> out;
  const bool all = suite == "all";
  if (all || suite == "cf") suite_cf(out, seed);
  if (all || suite == "gap") suite_gap(out, seed);
  if (all || suite == "schur") suite_schur(out, seed);
  if (all || suite == "hyp") suite_hyp(out, seed);
  if (all || suite == "pick") suite_pick(out, seed);
  if (out.empty()) throw ValidityError("unknown verify suite: " + suite);
  return out;
}

}  // namespace gfrac::cli
