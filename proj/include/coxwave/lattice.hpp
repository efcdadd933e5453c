#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "coxwave/region.hpp"

namespace coxwave {

// ---------------------------------------------------------------------------
// Small exact rational matrices (frame-coordinate lattice generators)
// ---------------------------------------------------------------------------

struct RatMat {
  std::vector<RatVec> cols;

  RatMat() = default;
  explicit RatMat(std::vector<RatVec> c) : cols(std::move(c)) {
    for (const auto& col : cols)
      if (col.size() != cols.size())
        throw InvalidInputError("rational matrix must be square");
  }

  static RatMat identity(int n) {
    std::vector<RatVec> c(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) c[i][i] = 1;
    return RatMat(std::move(c));
  }

  static RatMat diagonal(const RatVec& d) {
    std::vector<RatVec> c(d.size(), RatVec(d.size(), Rat(0)));
    for (std::size_t i = 0; i < d.size(); ++i) c[i][i] = d[i];
    return RatMat(std::move(c));
  }

  int dim() const { return int(cols.size()); }
  const Rat& at(int r, int c) const { return cols[c][r]; }
  Rat& at(int r, int c) { return cols[c][r]; }

  bool is_diagonal() const {
    for (int c = 0; c < dim(); ++c)
      for (int r = 0; r < dim(); ++r)
        if (r != c && at(r, c) != 0) return false;
    return true;
  }

  RatVec apply(const RatVec& v) const {
    RatVec out(cols.size(), Rat(0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < cols.size(); ++r) out[r] += cols[c][r] * v[c];
    return out;
  }

  RatMat times(const RatMat& other) const {
    RatMat out = identity(dim());
    for (int c = 0; c < dim(); ++c) out.cols[c] = apply(other.cols[c]);
    return out;
  }

  Rat det() const {  // cofactor expansion; dims here are <= 3
    const int n = dim();
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    Rat d = 0;
    for (int c = 0; c < n; ++c) {
      std::vector<RatVec> sub;
      for (int cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        RatVec col;
        for (int r = 1; r < n; ++r) col.push_back(at(r, cc));
        sub.push_back(col);
      }
      Rat minor = RatMat(sub).det();
      d += (c % 2 == 0 ? minor : -minor) * at(0, c);
    }
    return d;
  }

  /// Exact Gauss-Jordan inverse; throws RankError when singular.
  RatMat inverse() const {
    const int n = dim();
    RatMat a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (a.at(r, col) != 0) { pivot = r; break; }
      if (pivot < 0) throw RankError("rational matrix is singular");
      if (pivot != col)
        for (int c = 0; c < n; ++c) {
          std::swap(a.cols[c][pivot], a.cols[c][col]);
          std::swap(inv.cols[c][pivot], inv.cols[c][col]);
        }
      Rat p = a.at(col, col);
      for (int c = 0; c < n; ++c) {
        a.cols[c][col] /= p;
        inv.cols[c][col] /= p;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || a.at(r, col) == 0) continue;
        Rat f = a.at(r, col);
        for (int c = 0; c < n; ++c) {
          a.cols[c][r] -= f * a.cols[c][col];
          inv.cols[c][r] -= f * inv.cols[c][col];
        }
      }
    }
    return inv;
  }

  Eigen::MatrixXd to_double() const {
    Eigen::MatrixXd m(dim(), dim());
    for (int c = 0; c < dim(); ++c)
      for (int r = 0; r < dim(); ++r) m(r, c) = coxwave::to_double(at(r, c));
    return m;
  }
};

// ---------------------------------------------------------------------------
// Lattices
// ---------------------------------------------------------------------------

/// Full-rank lattice, rational in its frame: points are
/// frame.basis * generator * k for integer k.
class Lattice {
 public:
  Lattice(Frame frame, RatMat generator)
      : frame_(std::move(frame)), gen_(std::move(generator)) {
    if (gen_.dim() != frame_.dim())
      throw InvalidInputError("lattice generator dimension mismatch");
    if (gen_.det() == 0) throw RankError("lattice generator is singular");
  }

  static Lattice integer(Frame frame) {
    int d = frame.dim();
    return Lattice(std::move(frame), RatMat::identity(d));
  }

  static Lattice diagonal(Frame frame, const RatVec& periods) {
    return Lattice(std::move(frame), RatMat::diagonal(periods));
  }

  const Frame& frame() const { return frame_; }
  const RatMat& generator() const { return gen_; }
  int dim() const { return frame_.dim(); }

  /// Ambient generator matrix (columns span the lattice).
  Eigen::MatrixXd ambient_generator() const {
    return frame_.basis() * gen_.to_double();
  }

  RatVec point_frame(const std::vector<std::int64_t>& k) const {
    RatVec kv(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) kv[i] = Rat(k[i]);
    return gen_.apply(kv);
  }

  Eigen::VectorXd point_ambient(const std::vector<std::int64_t>& k) const {
    RatVec f = point_frame(k);
    Eigen::VectorXd t(dim());
    for (int i = 0; i < dim(); ++i) t[i] = coxwave::to_double(f[i]);
    return frame_.to_ambient(t);
  }

  /// Diagonal periods, or throws for non-diagonal generators.
  RatVec diagonal_periods() const {
    if (!gen_.is_diagonal())
      throw UnsupportedTransformError(
          "operation requires a frame-diagonal lattice");
    RatVec p(dim());
    for (int i = 0; i < dim(); ++i) {
      p[i] = gen_.at(i, i);
      if (p[i] < 0) p[i] = -p[i];
      if (p[i] == 0) throw RankError("degenerate lattice period");
    }
    return p;
  }

 private:
  Frame frame_;
  RatMat gen_;
};

// ---------------------------------------------------------------------------
// Dilation schemes: B acts on the frame as diag(a_1..a_n), a_j > 1
// ---------------------------------------------------------------------------

class DilationScheme {
 public:
  DilationScheme(Frame frame, RatVec scales)
      : frame_(std::move(frame)), scales_(std::move(scales)) {
    if (int(scales_.size()) != frame_.dim())
      throw InvalidInputError("scale count must match frame dimension");
    for (const Rat& a : scales_)
      if (!(a > 1)) throw InvalidInputError("dilation scales must exceed 1");
  }

  const Frame& frame() const { return frame_; }
  const RatVec& scales() const { return scales_; }
  int dim() const { return frame_.dim(); }

  Rat det_b() const {
    Rat q = 1;
    for (const Rat& a : scales_) q *= a;
    return q;
  }

  /// |det B| as an integer; throws when the scheme has no digit structure.
  Int q() const {
    Rat d = det_b();
    if (denominator(d) != 1)
      throw IncompatibleLatticeError("dilation determinant is not an integer");
    return numerator(d);
  }

  RatVec inverse_scales() const {
    RatVec inv(scales_.size());
    for (std::size_t i = 0; i < scales_.size(); ++i) inv[i] = 1 / scales_[i];
    return inv;
  }

  /// Frame-diagonal powers diag(a)^k as rational per-axis factors.
  RatVec power_scales(int k) const {
    RatVec out(scales_.size(), Rat(1));
    for (std::size_t i = 0; i < scales_.size(); ++i) {
      Rat base = k >= 0 ? scales_[i] : 1 / scales_[i];
      for (int p = 0; p < std::abs(k); ++p) out[i] *= base;
    }
    return out;
  }

  /// Ambient B = F diag(a) F^{-1}.
  Eigen::MatrixXd b_matrix() const {
    Eigen::VectorXd a(dim());
    for (int i = 0; i < dim(); ++i) a[i] = coxwave::to_double(scales_[i]);
    return frame_.basis() * a.asDiagonal() * frame_.inverse();
  }

  Eigen::MatrixXd a_matrix() const { return b_matrix().transpose(); }

  /// L = (B^{-1})^T, the sampling-side companion of B.
  Eigen::MatrixXd l_matrix() const { return b_matrix().inverse().transpose(); }

  Eigen::MatrixXd b_power(int k) const {
    Eigen::VectorXd a(dim());
    for (int i = 0; i < dim(); ++i)
      a[i] = coxwave::to_double(power_scales(k)[i]);
    return frame_.basis() * a.asDiagonal() * frame_.inverse();
  }

 private:
  Frame frame_;
  RatVec scales_;
};

// ---------------------------------------------------------------------------
// Digit sets: representatives of T / BT
// ---------------------------------------------------------------------------

struct DigitSet {
  std::vector<RatVec> digits;  // frame coordinates; digits[0] = 0
  std::size_t q() const { return digits.size(); }
};

namespace detail {

/// Digit ordering: zero first, then counterclockwise from the first frame
/// axis in 2D (the layout the dihedral multiwavelet figures use), ties by
/// radius; lexicographic in other dimensions.
inline void sort_digits(std::vector<RatVec>& digits, int dim) {
  auto is_zero = [](const RatVec& v) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  };
  auto lex_cmp = [](const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  };
  std::sort(digits.begin(), digits.end(), [&](const RatVec& a, const RatVec& b) {
    bool za = is_zero(a), zb = is_zero(b);
    if (za != zb) return za;
    if (dim == 2) {
      double ang_a = std::atan2(coxwave::to_double(a[1]), coxwave::to_double(a[0]));
      double ang_b = std::atan2(coxwave::to_double(b[1]), coxwave::to_double(b[0]));
      if (ang_a < 0) ang_a += 2 * 3.14159265358979323846;
      if (ang_b < 0) ang_b += 2 * 3.14159265358979323846;
      if (std::abs(ang_a - ang_b) > 1e-12) return ang_a < ang_b;
      Rat ra = a[0] * a[0] + a[1] * a[1], rb = b[0] * b[0] + b[1] * b[1];
      if (ra != rb) return ra < rb;
    }
    return lex_cmp(a, b);
  });
}

}  // namespace detail

/// Representatives of T / (B T) for a dilation B given as a rational matrix in
/// T's frame coordinates: the lattice points inside the half-open fundamental
/// parallelepiped of BT. Requires the lattice-basis matrix of B to be integer.
inline DigitSet digit_representatives(const RatMat& b_frame, const Lattice& t) {
  if (b_frame.dim() != t.dim())
    throw InvalidInputError("dilation dimension mismatch");
  RatMat m = t.generator().inverse().times(b_frame).times(t.generator());
  const int n = m.dim();
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (denominator(m.at(r, c)) != 1)
        throw IncompatibleLatticeError(
            "B does not map the lattice into itself (non-integer quotient)");
  Rat qr = m.det();
  if (qr < 0) qr = -qr;
  if (qr == 0) throw RankError("dilation is singular on the lattice");
  std::size_t q = std::size_t(numerator(qr).convert_to<std::uint64_t>());

  // k ranges over M [0,1)^n: bound each coordinate by the signed column sums.
  std::vector<std::int64_t> lo(n, 0), hi(n, 0);
  for (int r = 0; r < n; ++r) {
    Rat neg = 0, pos = 0;
    for (int c = 0; c < n; ++c) {
      if (m.at(r, c) < 0) neg += m.at(r, c);
      else pos += m.at(r, c);
    }
    lo[r] = rat_floor(neg).convert_to<std::int64_t>();
    hi[r] = rat_ceil(pos).convert_to<std::int64_t>();
  }

  RatMat minv = m.inverse();
  std::vector<RatVec> reps;
  std::vector<std::int64_t> k(n, 0);
  auto in_unit_cube = [&](const RatVec& u) {
    for (const Rat& x : u)
      if (x < 0 || x >= 1) return false;
    return true;
  };
  // odometer over the integer box [lo, hi]
  for (int i = 0; i < n; ++i) k[i] = lo[i];
  for (;;) {
    RatVec kv(n);
    for (int i = 0; i < n; ++i) kv[i] = Rat(k[i]);
    if (in_unit_cube(minv.apply(kv))) reps.push_back(t.generator().apply(kv));
    int axis = 0;
    while (axis < n && ++k[axis] > hi[axis]) k[axis++] = lo[axis];
    if (axis == n) break;
  }
  if (reps.size() != q)
    throw IncompatibleLatticeError("digit enumeration found " +
                                   std::to_string(reps.size()) + " of " +
                                   std::to_string(q) + " classes");
  detail::sort_digits(reps, n);
  DigitSet out;
  out.digits = std::move(reps);
  return out;
}

inline DigitSet digit_representatives(const DilationScheme& scheme,
                                      const Lattice& t) {
  require_same_frame(scheme.frame(), t.frame());
  return digit_representatives(RatMat::diagonal(scheme.scales()), t);
}

// ---------------------------------------------------------------------------
// Lattice folding and translation-tiling verification
// ---------------------------------------------------------------------------

struct ReducedRegion {
  Region support;     ///< folded set (multiplicity collapsed), inside the fundamental box
  Region overlap;     ///< part of the fundamental box covered more than once
  Rat folded_volume;  ///< exact multiset volume == input volume
};

/// Chops every cell into the half-open fundamental box of a frame-diagonal
/// lattice and translates the pieces there. Total (multiset) volume is
/// conserved exactly; multiplicity shows up as `overlap`.
inline ReducedRegion reduce_mod_lattice(const Region& a, const Lattice& t) {
  require_same_frame(a.frame(), t.frame());
  RatVec periods = t.diagonal_periods();
  const int d = a.dim();

  std::vector<Box> folded;
  std::vector<Box> stack{};
  for (const Box& cell : a.cells()) {
    // split recursively along each axis at period multiples, then shift
    stack.assign(1, cell);
    for (int j = 0; j < d; ++j) {
      std::vector<Box> next;
      for (const Box& b : stack) {
        Int n0 = rat_floor(b.lo[j] / periods[j]);
        Int n1 = rat_ceil(b.hi[j] / periods[j]);
        for (Int n = n0; n < n1; ++n) {
          Rat seg_lo = std::max(b.lo[j], Rat(n) * periods[j]);
          Rat seg_hi = std::min(b.hi[j], Rat(n + 1) * periods[j]);
          if (!(seg_lo < seg_hi)) continue;
          Box piece = b;
          piece.lo[j] = seg_lo - Rat(n) * periods[j];
          piece.hi[j] = seg_hi - Rat(n) * periods[j];
          next.push_back(std::move(piece));
        }
      }
      stack = std::move(next);
    }
    folded.insert(folded.end(), stack.begin(), stack.end());
  }

  Region support = Region::empty(a.frame());
  Region overlap = Region::empty(a.frame());
  Rat total = 0;
  for (const Box& f : folded) {
    total += f.volume();
    Region piece = Region::from_disjoint_cells(a.frame(), {f});
    overlap = unite(overlap, intersect(piece, support));
    support = unite(support, piece);
  }
  return ReducedRegion{std::move(support), std::move(overlap), total};
}

struct TileReport {
  bool is_tile = false;
  double overlap_volume = 0.0;
  double gap_volume = 0.0;
  int defect_cells = 0;
  Rat overlap_volume_exact = 0;
  Rat gap_volume_exact = 0;
};

/// A is a T-tile iff folding A into the fundamental box covers it exactly
/// once: zero overlap and zero gap, both exact.
inline TileReport is_translation_tile(const Region& a, const Lattice& t) {
  ReducedRegion red = reduce_mod_lattice(a, t);
  RatVec periods = t.diagonal_periods();
  RatVec zero(periods.size(), Rat(0));
  Region fundamental = Region::box(a.frame(), zero, periods);
  Region gap = subtract(fundamental, red.support);

  TileReport rep;
  rep.overlap_volume_exact = red.folded_volume - red.support.frame_volume();
  rep.gap_volume_exact = gap.frame_volume();
  rep.overlap_volume = a.frame().det_abs() * to_double(rep.overlap_volume_exact);
  rep.gap_volume = a.frame().det_abs() * to_double(rep.gap_volume_exact);
  rep.defect_cells = int(gap.cells().size() + red.overlap.cells().size());
  rep.is_tile = rep.overlap_volume_exact == 0 && rep.gap_volume_exact == 0;
  return rep;
}

// ---------------------------------------------------------------------------
// Spectral-pair check: normalized Gram off-diagonal maximum
// ---------------------------------------------------------------------------

/// max over distinct spectrum points gamma, gamma' with |gamma| <= cutoff of
/// |int_A exp(2 pi i (gamma - gamma', x)) dx| / |A|.
inline double gram_max_offdiag(const Region& a, const Lattice& spectrum,
                               double cutoff_radius) {
  const int d = spectrum.dim();
  Eigen::MatrixXd g = spectrum.ambient_generator();
  Eigen::MatrixXd ginv = g.inverse();

  // enumerate k with |G k| <= cutoff via per-row bounds of G^{-1}
  std::vector<std::int64_t> bound(d);
  for (int r = 0; r < d; ++r)
    bound[r] = std::int64_t(std::floor(cutoff_radius * ginv.row(r).norm())) + 1;

  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::int64_t> k(d);
  for (int i = 0; i < d; ++i) k[i] = -bound[i];
  for (;;) {
    Eigen::VectorXd kk(d);
    for (int i = 0; i < d; ++i) kk[i] = double(k[i]);
    if ((g * kk).norm() <= cutoff_radius + 1e-12) points.push_back(k);
    int axis = 0;
    while (axis < d && ++k[axis] > bound[axis]) k[axis++] = -bound[axis];
    if (axis == d) break;
  }

  std::set<std::vector<std::int64_t>> diffs;
  for (const auto& p : points)
    for (const auto& q : points) {
      if (p == q) continue;
      std::vector<std::int64_t> delta(d);
      for (int i = 0; i < d; ++i) delta[i] = p[i] - q[i];
      diffs.insert(std::move(delta));
    }

  const double vol = a.volume();
  if (vol <= 0.0) throw InvalidInputError("gram check needs positive volume");
  double worst = 0.0;
  for (const auto& delta : diffs) {
    Eigen::VectorXd dk(d);
    for (int i = 0; i < d; ++i) dk[i] = double(delta[i]);
    Eigen::VectorXd gamma = g * dk;
    worst = std::max(worst, std::abs(oscillatory_integral(a, gamma.cast<Complex>())));
  }
  return worst / vol;
}

// ---------------------------------------------------------------------------
// Monte Carlo multiplicative-tiling multiplicity
// ---------------------------------------------------------------------------

struct FamilyMember {
  Eigen::MatrixXd map;  ///< d: the member set is d(R)
  const Region* region = nullptr;
};

struct MultiplicityReport {
  std::map<int, double> histogram;  ///< multiplicity -> fraction of samples
  double boundary_fraction = 0.0;
  std::uint64_t seed = 0;
  std::size_t n_samples = 0;

  double fraction(int multiplicity) const {
    auto it = histogram.find(multiplicity);
    return it == histogram.end() ? 0.0 : it->second;
  }
};

/// Covering multiplicity of {d(R)} over uniform samples from `window`:
/// x in d(R) iff d^{-1} x in R. Samples within the geometric guard band of
/// any membership decision are excluded and reported. Deterministic per seed
/// (block substreams, so results do not depend on batching).
inline MultiplicityReport multiplicative_multiplicity(
    const std::vector<FamilyMember>& family, const Region& window,
    std::size_t n_samples, std::uint64_t seed) {
  if (window.is_empty()) throw InvalidInputError("empty sampling window");
  const int d = window.dim();

  struct Prepared {
    Eigen::MatrixXd to_frame;  // region_frame^{-1} * d^{-1}
    const Region* region;
    Eigen::VectorXd bb_lo, bb_hi;  // frame-coordinate bounding box
  };
  std::vector<Prepared> prepared;
  prepared.reserve(family.size());
  for (const auto& member : family) {
    if (member.region == nullptr || member.region->is_empty()) continue;
    Prepared p;
    p.to_frame = member.region->frame().inverse() * member.map.inverse();
    p.region = member.region;
    auto bb = member.region->bounding_box();
    p.bb_lo.resize(d);
    p.bb_hi.resize(d);
    for (int j = 0; j < d; ++j) {
      p.bb_lo[j] = to_double(bb->lo[j]);
      p.bb_hi[j] = to_double(bb->hi[j]);
    }
    prepared.push_back(std::move(p));
  }

  // window cell choice by exact volume weights
  std::vector<double> cum;
  double acc = 0;
  for (const Box& c : window.cells()) {
    acc += to_double(c.volume());
    cum.push_back(acc);
  }

  std::map<int, std::size_t> counts;
  std::size_t boundary = 0;
  constexpr std::size_t kBlock = 8192;
  for (std::size_t done = 0; done < n_samples;) {
    Rng rng(Rng::substream(seed, done / kBlock));
    std::size_t n = std::min(kBlock, n_samples - done);
    for (std::size_t s = 0; s < n; ++s) {
      double pick = rng.next_double() * acc;
      std::size_t ci = std::lower_bound(cum.begin(), cum.end(), pick) - cum.begin();
      if (ci >= window.cells().size()) ci = window.cells().size() - 1;
      const Box& cell = window.cells()[ci];
      Eigen::VectorXd t(d);
      for (int j = 0; j < d; ++j)
        t[j] = rng.uniform(to_double(cell.lo[j]), to_double(cell.hi[j]));
      Eigen::VectorXd x = window.frame().to_ambient(t);

      int mult = 0;
      bool near = false;
      for (const auto& p : prepared) {
        Eigen::VectorXd u = p.to_frame * x;
        bool out = false;
        for (int j = 0; j < d && !out; ++j)
          if (u[j] < p.bb_lo[j] - kGeomTol || u[j] >= p.bb_hi[j] + kGeomTol)
            out = true;
        if (out) continue;
        PointLocation loc = p.region->locate_frame(u);
        if (loc.near_face) near = true;
        if (loc.inside) ++mult;
      }
      if (near)
        ++boundary;
      else
        ++counts[mult];
    }
    done += n;
  }

  MultiplicityReport rep;
  rep.seed = seed;
  rep.n_samples = n_samples;
  rep.boundary_fraction = double(boundary) / double(n_samples);
  for (const auto& [mult, cnt] : counts)
    rep.histogram[mult] = double(cnt) / double(n_samples);
  return rep;
}

/// The transposed dilation family {w B^k : w in W, |k| <= k_max} acting on a
/// single region.
inline std::vector<FamilyMember> dilation_family(
    const std::vector<Eigen::MatrixXd>& group_elements,
    const DilationScheme& scheme, int k_max, const Region& omega) {
  std::vector<FamilyMember> family;
  for (int k = -k_max; k <= k_max; ++k) {
    Eigen::MatrixXd bk = scheme.b_power(k);
    for (const auto& w : group_elements)
      family.push_back(FamilyMember{w * bk, &omega});
  }
  return family;
}

}  // namespace coxwave
