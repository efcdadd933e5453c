#include "coxwave/mra.hpp"

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace coxwave;

namespace {

RatVec rv(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

DualBasis dihedral_dual(int m) {
  return dual_basis(simple_system(build_root_system(
      FamilySpec::parse("I2:" + std::to_string(m)))));
}

}  // namespace

TEST_CASE("standard scaling box sits between B^{-1}P and the cone") {
  DualBasis dual = dihedral_dual(4);
  Region p = standard_scaling_box(dual, {Rat(1), Rat(1)});
  CHECK(p.frame_volume() == Rat(1));

  // B^{-1} P inside P
  Region half = scale_axes(p, RatVec{Rat(1, 2), Rat(1, 2)});
  CHECK(region_subset(half, p));

  // P inside the fundamental cone: (sum t_j a_j^*, alpha_m) = t_m >= 0
  SimpleSystem pi = simple_system(build_root_system(FamilySpec::parse("I2:4")));
  Cone cone = fundamental_cone(pi);
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Eigen::VectorXd t(2);
    t << rng.next_double(), rng.next_double();
    CHECK(cone.contains(p.frame().to_ambient(t), 1e-12));
  }
}

TEST_CASE("scaling-set predicate") {
  Frame id = Frame::identity(2);
  DilationScheme b2(id, {Rat(2), Rat(2)});
  Lattice z2 = Lattice::integer(id);
  Region unit = Region::box(id, {Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  CHECK(is_scaling_set(unit, b2, z2).is_scaling_set);

  // dihedral example: P is a scaling set for its frame lattice
  DualBasis dual = dihedral_dual(4);
  Region p = standard_scaling_box(dual, {Rat(1), Rat(1)});
  DilationScheme scheme(p.frame(), {Rat(2), Rat(2)});
  CHECK(is_scaling_set(p, scheme, Lattice::integer(p.frame())).is_scaling_set);

  // not a tile: two separated segments that double-cover mod 1
  Frame id1 = Frame::identity(1);
  Region segs = unite(Region::box(id1, {Rat(0)}, {Rat(1)}),
                      Region::box(id1, {Rat(2)}, {Rat(3)}));
  DilationScheme b1(id1, {Rat(2)});
  ScalingSetReport r1 = is_scaling_set(segs, b1, Lattice::integer(id1));
  CHECK_FALSE(r1.is_scaling_set);
  CHECK(r1.refinement_holds == false);  // B^{-1}segs strays outside segs too

  // refinement failure alone: K = [1,2)
  Region shifted = Region::box(id1, {Rat(1)}, {Rat(2)});
  ScalingSetReport r2 = is_scaling_set(shifted, b1, Lattice::integer(id1));
  CHECK(r2.tile.is_tile);
  CHECK_FALSE(r2.refinement_holds);
  CHECK_FALSE(r2.is_scaling_set);
}

TEST_CASE("splitting the unit square under 2id") {
  Frame id = Frame::identity(2);
  Region k = Region::box(id, {Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  DilationScheme scheme(id, {Rat(2), Rat(2)});
  Lattice t = Lattice::integer(id);
  DigitSet digits = digit_representatives(scheme, t);
  auto parts = split_scaling_set(k, scheme, t, digits);
  REQUIRE(parts.size() == 4);

  // v_0 = 0 gives K_0 = B^{-1} K with no lattice shift
  CHECK(region_equal(parts[0], Region::box(id, {Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)})));

  Rat total = 0;
  for (const auto& p : parts) {
    CHECK(p.frame_volume() == Rat(1, 4));
    total += p.frame_volume();
  }
  CHECK(total == k.frame_volume());

  Region u = Region::empty(id);
  for (const auto& p : parts) u = unite(u, p);
  CHECK(region_equal(u, k));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      CHECK(intersect(parts[i], parts[j]).is_empty());
}

TEST_CASE("splitting needs lattice translates for centered tiles") {
  Frame id = Frame::identity(2);
  Region k = Region::box(id, {Rat(-1, 2), Rat(-1, 2)}, {Rat(1, 2), Rat(1, 2)});
  DilationScheme scheme(id, {Rat(2), Rat(2)});
  Lattice t = Lattice::integer(id);
  REQUIRE(is_scaling_set(k, scheme, t).is_scaling_set);
  DigitSet digits = digit_representatives(scheme, t);
  auto parts = split_scaling_set(k, scheme, t, digits);
  Rat total = 0;
  for (const auto& p : parts) {
    CHECK(p.frame_volume() == Rat(1, 4));
    total += p.frame_volume();
    CHECK(region_subset(p, k));
  }
  CHECK(total == Rat(1));
  // the shifted digits wrap around, so some parts split into several cells
  bool some_multi_cell = false;
  for (const auto& p : parts) some_multi_cell = some_multi_cell || p.cells().size() > 1;
  CHECK(some_multi_cell);
}

TEST_CASE("random scaling boxes split exactly") {
  Rng rng(0xbeef);
  struct SchemeSpec {
    int dim;
    std::vector<int> scales;
  };
  std::vector<SchemeSpec> schemes{{2, {2, 2}}, {2, {2, 3}}, {3, {2, 2, 2}}};
  for (const auto& ss : schemes) {
    for (int trial = 0; trial < 5; ++trial) {
      RatVec sides(ss.dim);
      for (int j = 0; j < ss.dim; ++j)
        sides[j] = Rat(rng.uniform_int(1, 4), rng.uniform_int(1, 4));
      Frame id = Frame::identity(ss.dim);
      Region k = Region::box(id, RatVec(ss.dim, Rat(0)), sides);
      RatVec scales(ss.dim);
      for (int j = 0; j < ss.dim; ++j) scales[j] = Rat(ss.scales[j]);
      DilationScheme scheme(id, scales);
      Lattice t = Lattice::diagonal(id, sides);
      REQUIRE(is_scaling_set(k, scheme, t).is_scaling_set);
      DigitSet digits = digit_representatives(scheme, t);
      auto parts = split_scaling_set(k, scheme, t, digits);
      Rat q = scheme.det_b();
      Rat total = 0;
      for (const auto& p : parts) {
        CHECK(p.frame_volume() * q == k.frame_volume());
        total += p.frame_volume();
      }
      CHECK(total == k.frame_volume());
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          CHECK(intersect(parts[i], parts[j]).is_empty());
    }
  }
}

TEST_CASE("dihedral multiwavelet sets reproduce the translate layout") {
  DualBasis dual = dihedral_dual(4);
  MraBundle bundle = build_mra_multiwavelets(dual, {Rat(1), Rat(1)}, {Rat(2), Rat(2)});
  REQUIRE(bundle.wavelet_sets.size() == 3);

  const Region& p = bundle.k;
  CHECK(region_equal(bundle.wavelet_sets[0], translate(p, rv({1, 0}))));
  CHECK(region_equal(bundle.wavelet_sets[1], translate(p, rv({1, 1}))));
  CHECK(region_equal(bundle.wavelet_sets[2], translate(p, rv({0, 1}))));

  CHECK(bundle.checks.partition);
  CHECK(bundle.checks.congruence);
  CHECK(bundle.checks.refinement);
  CHECK(bundle.checks.gram <= 1e-10);
}

TEST_CASE("tetrahedral frame yields seven wavelet sets") {
  DualBasis dual = dual_basis(simple_system(build_root_system(FamilySpec::parse("A3"))));
  MraBundle bundle = build_mra_multiwavelets(dual, {Rat(1), Rat(1), Rat(1)},
                                             {Rat(2), Rat(2), Rat(2)}, 3.0);
  CHECK(bundle.wavelet_sets.size() == 7);
  for (const auto& omega : bundle.wavelet_sets)
    CHECK(omega.frame_volume() == bundle.k.frame_volume());

  // BK = K + union of the Omega_i, exact
  Region bk = scale_axes(bundle.k, bundle.scheme.scales());
  Region covered = bundle.k;
  for (const auto& omega : bundle.wavelet_sets) covered = unite(covered, omega);
  CHECK(region_equal(bk, covered));
  CHECK(bundle.checks.refinement);
  CHECK(bundle.checks.congruence);
}

TEST_CASE("congruence: every wavelet set folds onto the scaling tile") {
  DualBasis dual = dihedral_dual(6);
  MraBundle bundle = build_mra_multiwavelets(dual, {Rat(1), Rat(1)}, {Rat(2), Rat(2)});
  Lattice t = bundle.lattice;
  Region k_fold = reduce_mod_lattice(bundle.k, t).support;
  for (const auto& omega : bundle.wavelet_sets) {
    ReducedRegion fold = reduce_mod_lattice(omega, t);
    CHECK(fold.overlap.is_empty());
    CHECK(region_equal(fold.support, k_fold));
  }
}
