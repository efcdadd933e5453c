#pragma once

#include <utility>
#include <vector>

#include "coxwave/coxeter.hpp"
#include "coxwave/lattice.hpp"

namespace coxwave {

// ---------------------------------------------------------------------------
// Scaling sets
// ---------------------------------------------------------------------------

/// The parallelepiped P = {sum t_j alpha_j^* : 0 <= t_j < s_j} as the frame
/// box prod [0, s_j) over the dual basis. (The bottom face is included and the
/// top excluded; a measure-zero shift from the (0, s] form.)
inline Region standard_scaling_box(const DualBasis& dual, const RatVec& sides) {
  Frame frame(dual.matrix());
  if (int(sides.size()) != frame.dim())
    throw InvalidInputError("side count must match dimension");
  for (const Rat& s : sides)
    if (!(s > 0)) throw InvalidInputError("box sides must be positive");
  RatVec zero(sides.size(), Rat(0));
  return Region::box(std::move(frame), zero, sides);
}

struct ScalingSetReport {
  bool is_scaling_set = false;
  bool refinement_holds = false;  // B^{-1} K subset of K
  TileReport tile;
};

/// K is a scaling set iff B^{-1} K is contained in K and K tiles under T.
inline ScalingSetReport is_scaling_set(const Region& k, const DilationScheme& scheme,
                                       const Lattice& t) {
  if (!scheme.frame().same_as(k.frame()))
    throw UnsupportedTransformError("dilation is not diagonal in the region frame");
  ScalingSetReport rep;
  Region shrunk = scale_axes(k, scheme.inverse_scales());
  rep.refinement_holds = region_subset(shrunk, k);
  rep.tile = is_translation_tile(k, t);
  rep.is_scaling_set = rep.refinement_holds && rep.tile.is_tile;
  return rep;
}

/// The splitting K_i = (B^{-1}K + B^{-1}v_i + T) intersect K, with the lattice
/// sum realized over the finitely many translates that can meet K.
inline std::vector<Region> split_scaling_set(const Region& k,
                                             const DilationScheme& scheme,
                                             const Lattice& t,
                                             const DigitSet& digits) {
  if (!scheme.frame().same_as(k.frame()))
    throw UnsupportedTransformError("dilation is not diagonal in the region frame");
  require_same_frame(k.frame(), t.frame());
  RatVec periods = t.diagonal_periods();
  RatVec inv = scheme.inverse_scales();
  auto bb_k = k.bounding_box();
  if (!bb_k) throw InvalidInputError("cannot split an empty region");

  std::vector<Region> parts;
  parts.reserve(digits.q());
  for (const RatVec& v : digits.digits) {
    RatVec shift(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) shift[j] = v[j] * inv[j];
    Region base = translate(scale_axes(k, inv), shift);
    auto bb_b = base.bounding_box();

    // integer translate ranges per axis from the bounding boxes
    const int d = k.dim();
    std::vector<std::int64_t> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
      lo[j] = rat_ceil((bb_k->lo[j] - bb_b->hi[j]) / periods[j]).convert_to<std::int64_t>();
      hi[j] = rat_floor((bb_k->hi[j] - bb_b->lo[j]) / periods[j]).convert_to<std::int64_t>();
    }

    Region part = Region::empty(k.frame());
    std::vector<std::int64_t> n(d);
    for (int j = 0; j < d; ++j) n[j] = lo[j];
    for (;;) {
      RatVec tv(d);
      for (int j = 0; j < d; ++j) tv[j] = Rat(n[j]) * periods[j];
      Region piece = intersect(translate(base, tv), k);
      if (!piece.is_empty()) part = unite(part, piece);
      int axis = 0;
      while (axis < d) {
        if (++n[axis] <= hi[axis]) break;
        n[axis] = lo[axis];
        ++axis;
      }
      if (axis == d) break;
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

/// Omega_i = B K_i for i = 1..q-1. Together with K they refine BK exactly and
/// each is T-translation congruent to K.
inline std::vector<Region> multiwavelet_sets(const std::vector<Region>& splits,
                                             const DilationScheme& scheme) {
  if (splits.empty()) throw InvalidInputError("no splits given");
  std::vector<Region> omegas;
  for (std::size_t i = 1; i < splits.size(); ++i)
    omegas.push_back(scale_axes(splits[i], scheme.scales()));
  return omegas;
}

// ---------------------------------------------------------------------------
// Bundled construction + verification
// ---------------------------------------------------------------------------

struct MraChecks {
  bool partition = false;    // sum |K_i| = |K| with empty pairwise intersections
  bool congruence = false;   // each Omega_i folds onto the same tile as K
  bool refinement = false;   // BK = K + union Omega_i, exact
  double gram = 0.0;         // worst spectral off-diagonal over the Omega_i
};

struct MraBundle {
  Region k;
  DilationScheme scheme;
  Lattice lattice;
  DigitSet digits;
  std::vector<Region> splits;
  std::vector<Region> wavelet_sets;
  MraChecks checks;
};

/// Spectrum lattice making {e_gamma} orthogonal on the frame box with the
/// given periods: gamma = sum n_j s_j^{-1} alpha_j over the dual of the frame
/// basis. For unit periods this is the integer span of the simple roots.
inline Lattice spectrum_lattice_for_box(const Frame& frame, const RatVec& periods) {
  RatVec inv(periods.size());
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] == 0) throw InvalidInputError("degenerate spectrum period");
    inv[i] = 1 / periods[i];
  }
  Frame dual(frame.inverse().transpose());
  return Lattice::diagonal(std::move(dual), inv);
}

inline MraChecks verify_mra_bundle(const Region& k, const DilationScheme& scheme,
                                   const Lattice& t,
                                   const std::vector<Region>& splits,
                                   const std::vector<Region>& omegas,
                                   double gram_radius = 5.0) {
  MraChecks checks;

  Rat total = 0;
  bool disjoint = true;
  Rat kv = k.frame_volume();
  Rat q(std::int64_t(splits.size()));
  bool equal_parts = true;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    total += splits[i].frame_volume();
    if (splits[i].frame_volume() * q != kv) equal_parts = false;
    for (std::size_t j = i + 1; j < splits.size(); ++j)
      if (!intersect(splits[i], splits[j]).is_empty()) disjoint = false;
  }
  Region split_union = Region::empty(k.frame());
  for (const Region& s : splits) split_union = unite(split_union, s);
  checks.partition =
      disjoint && equal_parts && total == kv && region_equal(split_union, k);

  ReducedRegion k_fold = reduce_mod_lattice(k, t);
  checks.congruence = k_fold.overlap.is_empty();
  for (const Region& omega : omegas) {
    ReducedRegion o_fold = reduce_mod_lattice(omega, t);
    if (!o_fold.overlap.is_empty() ||
        !region_equal(o_fold.support, k_fold.support))
      checks.congruence = false;
  }

  Region bk = scale_axes(k, scheme.scales());
  Region covered = k;
  for (const Region& omega : omegas) covered = unite(covered, omega);
  checks.refinement = region_equal(bk, covered);

  Lattice spectrum = spectrum_lattice_for_box(k.frame(), t.diagonal_periods());
  for (const Region& omega : omegas)
    checks.gram = std::max(checks.gram, gram_max_offdiag(omega, spectrum, gram_radius));
  return checks;
}

/// Full pipeline for a family: P over the dual basis, digits of T/BT, the
/// splitting lemma, and the multiwavelet sets Omega_i = B K_i.
inline MraBundle build_mra_multiwavelets(const DualBasis& dual,
                                         const RatVec& sides,
                                         const RatVec& scales,
                                         double gram_radius = 5.0) {
  Region p = standard_scaling_box(dual, sides);
  DilationScheme scheme(p.frame(), scales);
  Lattice t = Lattice::diagonal(p.frame(), sides);
  ScalingSetReport sc = is_scaling_set(p, scheme, t);
  if (!sc.is_scaling_set)
    throw InvalidInputError("P is not a scaling set for the given data");
  DigitSet digits = digit_representatives(scheme, t);
  std::vector<Region> splits = split_scaling_set(p, scheme, t, digits);
  std::vector<Region> omegas = multiwavelet_sets(splits, scheme);
  MraChecks checks = verify_mra_bundle(p, scheme, t, splits, omegas, gram_radius);
  return MraBundle{std::move(p), std::move(scheme), std::move(t),
                   std::move(digits), std::move(splits), std::move(omegas),
                   checks};
}

}  // namespace coxwave
