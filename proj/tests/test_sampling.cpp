#include "coxwave/sampling.hpp"

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace coxwave;

namespace {

Eigen::VectorXd vec2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

SamplingPlan unit_plan(int dim, int radius, int level = 0) {
  Frame id = Frame::identity(dim);
  RatVec ones(dim, Rat(1));
  Region p = Region::box(id, RatVec(dim, Rat(0)), ones);
  Lattice gamma = spectrum_lattice_for_box(id, ones);
  DilationScheme scheme(id, RatVec(dim, Rat(2)));
  return SamplingPlan(p, gamma, radius, level, scheme);
}

double reconstruction_rel_l2(const SamplingPlan& plan, const BandlimitedSignal& f,
                             const std::vector<Eigen::VectorXd>& grid) {
  SampleMap samples = take_samples(plan, f);
  double num = 0, den = 0;
  for (const auto& x : grid) {
    Complex exact = signal_eval(f, x);
    Complex approx = wsk_reconstruct(plan, samples, x);
    num += std::norm(exact - approx);
    den += std::norm(exact);
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("signal evaluation closed forms") {
  Frame id1 = Frame::identity(1);
  BandlimitedSignal f(id1, {{Complex(1, 0), Box({Rat(0)}, {Rat(1)})}});
  Eigen::VectorXd zero(1);
  zero << 0.0;
  CHECK(std::abs(signal_eval(f, zero) - Complex(1, 0)) < 1e-14);

  Rng rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 1 + trial % 2;
    Frame id = Frame::identity(dim);
    BandlimitedSignal g =
        oracles::random_signal(rng, id, RatVec(dim, Rat(2)), 4, 3);
    Eigen::VectorXd x(dim);
    for (int j = 0; j < dim; ++j) x[j] = rng.uniform(-3, 3);
    Complex fast = signal_eval(g, x);
    Complex slow =
        oracles::quadrature_oscillatory_integral(g.support(), x.cast<Complex>());
    // quadrature of the support indicator with unit weights does not know the
    // coefficients; evaluate term by term instead
    slow = Complex(0, 0);
    for (const auto& term : g.terms()) {
      Region one = Region::from_disjoint_cells(id, {term.spectrum});
      slow += term.coefficient *
              oracles::quadrature_oscillatory_integral(one, x.cast<Complex>());
    }
    CHECK(std::abs(fast - slow) < 1e-8 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("signal evaluation is linear") {
  Frame id = Frame::identity(2);
  Rng rng(4);
  BandlimitedSignal f = oracles::random_signal(rng, id, {Rat(1), Rat(1)}, 4, 3);
  BandlimitedSignal g = oracles::random_signal(rng, id, {Rat(1), Rat(1)}, 4, 3);
  // f + g termwise over the shared grid
  std::vector<BandlimitedSignal::Term> sum_terms;
  for (const auto& t : f.terms()) sum_terms.push_back(t);
  for (const auto& t : g.terms()) {
    bool merged = false;
    for (auto& s : sum_terms)
      if (s.spectrum == t.spectrum) {
        s.coefficient += t.coefficient;
        merged = true;
      }
    if (!merged) sum_terms.push_back(t);
  }
  BandlimitedSignal fg(id, sum_terms);
  Eigen::VectorXd x = vec2(0.31, -1.7);
  CHECK(std::abs(signal_eval(fg, x) - signal_eval(f, x) - signal_eval(g, x)) <
        1e-12);
}

TEST_CASE("phi closed form and orthogonality") {
  for (int dim : {1, 2, 3}) {
    Frame id = Frame::identity(dim);
    Region p = Region::box(id, RatVec(dim, Rat(0)), RatVec(dim, Rat(1)));
    CHECK(std::abs(phi_eval(p, Eigen::VectorXd::Zero(dim)) - Complex(1, 0)) <
          1e-14);
  }

  // phi(gamma - gamma') = 0 on the matched spectrum lattice, dihedral frame
  SimpleSystem pi = simple_system(build_root_system(FamilySpec::parse("I2:4")));
  DualBasis dual = dual_basis(pi);
  RatVec sides{Rat(1), Rat(2, 3)};
  Region p = standard_scaling_box(dual, sides);
  Lattice gamma = spectrum_lattice_for_box(p.frame(), sides);
  for (std::int64_t i = -2; i <= 2; ++i)
    for (std::int64_t j = -2; j <= 2; ++j) {
      if (i == 0 && j == 0) continue;
      CHECK(std::abs(phi_eval(p, gamma.point_ambient({i, j}))) < 1e-12);
    }

  // quadrature agreement
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd x = vec2(rng.uniform(-4, 4), rng.uniform(-4, 4));
    Complex slow = oracles::quadrature_oscillatory_integral(p, x.cast<Complex>());
    CHECK(std::abs(phi_eval(p, x) - slow) < 1e-8 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("reconstruction interpolates exactly at sample points") {
  Rng rng(2718);
  SamplingPlan plan = unit_plan(2, 6);
  for (int trial = 0; trial < 3; ++trial) {
    BandlimitedSignal f =
        oracles::random_signal(rng, plan.p.frame(), {Rat(1), Rat(1)}, 4, 4);
    SampleMap samples = take_samples(plan, f);
    for (std::int64_t i = -2; i <= 2; ++i)
      for (std::int64_t j = -2; j <= 2; ++j) {
        Eigen::VectorXd x = -plan.gamma.point_ambient({i, j});
        Complex recon = wsk_reconstruct(plan, samples, x);
        CHECK(std::abs(recon - samples.at({i, j})) < 1e-10);
      }
  }
}

TEST_CASE("zero samples reconstruct to zero") {
  SamplingPlan plan = unit_plan(1, 8);
  SampleMap samples;
  for (const auto& k : plan.indices()) samples[k] = Complex(0, 0);
  CHECK(std::abs(wsk_reconstruct(plan, samples, Eigen::VectorXd::Constant(1, 0.37))) ==
        0.0);
}

TEST_CASE("missing samples are rejected") {
  SamplingPlan plan = unit_plan(1, 4);
  SampleMap samples;  // empty
  CHECK_THROWS_AS(wsk_reconstruct(plan, samples, Eigen::VectorXd::Zero(1)),
                  IncompletePlanError);
}

TEST_CASE("reconstruction error decreases as the radius doubles") {
  Rng rng(1234);
  Frame id = Frame::identity(2);
  std::vector<Eigen::VectorXd> grid;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) grid.push_back(vec2(0.13 + 0.4 * i, -0.71 + 0.37 * j));

  std::vector<double> mean_err;
  for (int radius : {4, 8, 16}) {
    SamplingPlan plan = unit_plan(2, radius);
    Rng signal_rng(555);
    double total = 0;
    for (int s = 0; s < 2; ++s) {
      BandlimitedSignal f =
          oracles::random_signal(signal_rng, id, {Rat(1), Rat(1)}, 4, 4);
      total += reconstruction_rel_l2(plan, f, grid);
    }
    mean_err.push_back(total / 2);
  }
  CHECK(mean_err[1] < mean_err[0]);
  CHECK(mean_err[2] < mean_err[1]);
}

TEST_CASE("dilated reconstruction") {
  Rng rng(99);
  Frame id = Frame::identity(2);

  // level 0 goes through the identical code path
  SamplingPlan p0 = unit_plan(2, 5, 0);
  BandlimitedSignal f0 = oracles::random_signal(rng, id, {Rat(1), Rat(1)}, 4, 3);
  SampleMap s0 = take_samples(p0, f0);
  Eigen::VectorXd x = vec2(0.21, 0.43);
  CHECK(wsk_reconstruct_dilated(p0, s0, x) == wsk_reconstruct(p0, s0, x));

  // level 1: signal band-limited to BP = [0,2)^2
  SamplingPlan p1 = unit_plan(2, 6, 1);
  BandlimitedSignal f1 = oracles::random_signal(rng, id, {Rat(2), Rat(2)}, 4, 4);
  SampleMap s1 = take_samples(p1, f1);

  // change-of-variables oracle: g = f o L has spectrum B^{-1} S_k and
  // coefficients |det B| c_k, and reconstructs under the level-0 plan
  std::vector<BandlimitedSignal::Term> g_terms;
  for (const auto& t : f1.terms()) {
    RatVec lo(2), hi(2);
    for (int j = 0; j < 2; ++j) {
      lo[j] = t.spectrum.lo[j] / 2;
      hi[j] = t.spectrum.hi[j] / 2;
    }
    g_terms.push_back({4.0 * t.coefficient, Box(lo, hi)});
  }
  BandlimitedSignal g(id, g_terms);
  SamplingPlan p1_base = unit_plan(2, 6, 0);
  SampleMap sg = take_samples(p1_base, g);

  Eigen::MatrixXd bt = p1.scheme.b_matrix().transpose();
  for (int trial = 0; trial < 12; ++trial) {
    Eigen::VectorXd xt = vec2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    Complex direct = wsk_reconstruct_dilated(p1, s1, xt);
    Complex via_g = wsk_reconstruct(p1_base, sg, bt * xt);
    CHECK(std::abs(direct - via_g) < 1e-10);
    // both reconstruct the true signal equally well
    CHECK(std::abs(direct - signal_eval(f1, xt)) ==
          Catch::Approx(std::abs(via_g - signal_eval(g, bt * xt))).margin(1e-10));
  }

  // interpolation exactness at the dilated sample points
  Eigen::MatrixXd lj = p1.scheme.l_matrix();
  for (std::int64_t i = -2; i <= 2; ++i)
    for (std::int64_t j = -2; j <= 2; ++j) {
      Eigen::VectorXd xs = -(lj * p1.gamma.point_ambient({i, j}));
      CHECK(std::abs(wsk_reconstruct_dilated(p1, s1, xs) - s1.at({i, j})) < 1e-10);
    }
}

TEST_CASE("sampling plan validates its spectral pair") {
  SamplingPlan good = unit_plan(2, 4);
  CHECK(good.spectral_defect() <= 1e-10);

  Frame id = Frame::identity(2);
  Region wide = Region::box(id, {Rat(0), Rat(0)}, {Rat(3, 2), Rat(1)});
  SamplingPlan bad(wide, Lattice::integer(id), 4, 0,
                   DilationScheme(id, {Rat(2), Rat(2)}));
  CHECK(bad.spectral_defect() > 0.1);
}

TEST_CASE("directional decomposition") {
  RootSystem rs = build_root_system(FamilySpec::parse("I2:4"));
  SimpleSystem pi = simple_system(rs);
  ReflectionGroup w = generate_group(rs);
  Frame id = Frame::identity(2);

  // boxes strictly inside the fundamental cone -> identity component only
  DualBasis dual = dual_basis(pi);
  Frame cone_frame(dual.matrix());
  Rng rng(6);
  BandlimitedSignal raw =
      oracles::random_signal(rng, cone_frame, {Rat(1), Rat(1)}, 4, 3);
  std::vector<BandlimitedSignal::Term> interior;
  for (const auto& t : raw.terms()) {
    RatVec lo(2), hi(2);
    for (int j = 0; j < 2; ++j) {
      lo[j] = t.spectrum.lo[j] / 2 + Rat(1, 4);
      hi[j] = t.spectrum.hi[j] / 2 + Rat(1, 4);
    }
    interior.push_back({t.coefficient, Box(lo, hi)});
  }
  BandlimitedSignal inside(cone_frame, interior);
  auto parts = directional_decompose(inside, w, pi);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == 0);

  // random multi-chamber signal: rotate cone boxes by group elements
  std::vector<BandlimitedSignal::Term> terms;
  Rng rng2(7);
  int which = 0;
  for (const auto& elem : w.elements()) {
    if (++which > 4) break;
    // a small box strictly inside the rotated cone, in ambient coordinates
    Eigen::VectorXd center =
        elem * cone_frame.to_ambient(vec2(0.4 + 0.2 * which, 0.3));
    RatVec lo{Rat(std::int64_t(std::floor(center[0] * 64)), 64),
              Rat(std::int64_t(std::floor(center[1] * 64)), 64)};
    RatVec hi{lo[0] + Rat(1, 64), lo[1] + Rat(1, 64)};
    terms.push_back({Complex(rng2.uniform(-1, 1), rng2.uniform(-1, 1)), Box(lo, hi)});
  }
  BandlimitedSignal f(id, terms);
  auto decomp = directional_decompose(f, w, pi);

  double parseval = 0;
  for (const auto& [idx, fw] : decomp) parseval += fw.norm_squared();
  CHECK(parseval == Catch::Approx(f.norm_squared()).epsilon(1e-12));

  for (int trial = 0; trial < 30; ++trial) {
    Eigen::VectorXd x = vec2(rng2.uniform(-2, 2), rng2.uniform(-2, 2));
    Complex total(0, 0);
    for (const auto& [idx, fw] : decomp) total += signal_eval(fw, x);
    CHECK(std::abs(total - signal_eval(f, x)) < 1e-10);
  }

  // straddling box is refused with the box named
  BandlimitedSignal straddler(
      id, {{Complex(1, 0), Box({Rat(1), Rat(-1, 2)}, {Rat(2), Rat(1, 2)})}});
  CHECK_THROWS_AS(directional_decompose(straddler, w, pi), StraddleError);
  // a box with a corner exactly on a wall is flagged too
  BandlimitedSignal on_wall(
      id, {{Complex(1, 0), Box({Rat(1), Rat(0)}, {Rat(2), Rat(1, 2)})}});
  CHECK_THROWS_AS(directional_decompose(on_wall, w, pi), StraddleError);
}

TEST_CASE("dual cones") {
  RootSystem rs = build_root_system(FamilySpec::parse("I2:4"));
  SimpleSystem pi = simple_system(rs);
  ReflectionGroup w = generate_group(rs);
  DualBasis dual = dual_basis(pi);

  DualCone ce = dual_cone(pi, Eigen::MatrixXd::Identity(2, 2));
  REQUIRE(ce.generators.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK((ce.generators[i] - pi.simple_roots[i]).norm() < 1e-14);

  // positivity of (y, lambda) over sampled cone/chamber pairs
  Rng rng(12);
  for (const auto& elem : w.elements()) {
    DualCone cw = dual_cone(pi, elem);
    for (int s = 0; s < 50; ++s) {
      Eigen::VectorXd y = Eigen::VectorXd::Zero(2);
      for (const auto& g : cw.generators) y += rng.uniform(0.05, 2.0) * g;
      Eigen::VectorXd lambda = Eigen::VectorXd::Zero(2);
      for (const auto& d : dual.dual_roots) lambda += rng.uniform(0.05, 2.0) * d;
      lambda = elem * lambda;  // a point of the open chamber w C(Pi)
      CHECK(y.dot(lambda) > 0);
      CHECK(cw.strictly_contains(y));
    }
    // C_w = w C_e as generator sets
    for (std::size_t i = 0; i < cw.generators.size(); ++i)
      CHECK((cw.generators[i] - elem * pi.simple_roots[i]).norm() < 1e-12);
  }
}

TEST_CASE("tube-domain extension") {
  // axis-aligned chambers: dual cone of the identity is the open quadrant
  RootSystem axes;
  axes.dim = 2;
  axes.family = FamilySpec::parse("I2:2");
  Eigen::VectorXd e1 = vec2(1, 0), e2 = vec2(0, 1);
  axes.roots = {e1, -e1, e2, -e2};
  SimpleSystem pi = simple_system(axes, vec2(2, 1));
  DualCone cone = dual_cone(pi, Eigen::MatrixXd::Identity(2, 2));

  // f_w supported in the open quadrant
  BandlimitedSignal fw(Frame::identity(2),
                       {{Complex(0.8, -0.3), Box({Rat(1, 2), Rat(1, 4)},
                                                 {Rat(3, 2), Rat(5, 4)})}});
  Eigen::VectorXd x = vec2(0.4, -0.9);

  CHECK_THROWS_AS(eval_tube_extension(fw, cone, x, vec2(-1, 1)), DomainError);

  // F_w(x + iy) approaches f_w(x) along a ray y -> 0
  Complex boundary = signal_eval(fw, x);
  double prev = std::numeric_limits<double>::infinity();
  for (double s : {1.0, 0.1, 0.01}) {
    Complex val = eval_tube_extension(fw, cone, x, vec2(s, s));
    double gap = std::abs(val - boundary);
    CHECK(gap < prev);
    prev = gap;
  }

  // damping bound
  Eigen::VectorXd y = vec2(0.7, 0.2);
  CHECK(std::abs(eval_tube_extension(fw, cone, x, y)) <=
        tube_damping_bound(fw, y) + 1e-12);

  // closed form matches quadrature with the complex frequency
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd xt = vec2(rng.uniform(-2, 2), rng.uniform(-2, 2));
    Eigen::VectorXd yt = vec2(rng.uniform(0.05, 1), rng.uniform(0.05, 1));
    Eigen::VectorXcd wfreq(2);
    for (int i = 0; i < 2; ++i) wfreq[i] = Complex(xt[i], yt[i]);
    Complex slow(0, 0);
    for (const auto& term : fw.terms()) {
      Region one = Region::from_disjoint_cells(fw.frame(), {term.spectrum});
      slow += term.coefficient * oracles::quadrature_oscillatory_integral(one, wfreq);
    }
    Complex fast = eval_tube_extension(fw, cone, xt, yt);
    CHECK(std::abs(fast - slow) < 1e-8 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("plancherel sanity on a big grid") {
  // 1D: ||f||^2 from coefficients vs a Riemann sum of |f|^2
  Frame id1 = Frame::identity(1);
  BandlimitedSignal f(id1, {{Complex(1.0, 0.5), Box({Rat(0)}, {Rat(1)})},
                            {Complex(-0.3, 0.2), Box({Rat(1)}, {Rat(3, 2)})}});
  double coeff_energy = f.norm_squared();
  double grid_energy = 0;
  const double half_width = 400, step = 1.0 / 16;
  for (double x = -half_width; x < half_width; x += step) {
    Eigen::VectorXd xv(1);
    xv << x + step / 2;
    grid_energy += std::norm(signal_eval(f, xv)) * step;
  }
  CHECK(std::abs(grid_energy - coeff_energy) <= 0.02 * coeff_energy);
}
