#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "coxwave/frame.hpp"

namespace coxwave {

// ---------------------------------------------------------------------------
// Box: half-open rational product cell prod_j [lo_j, hi_j) in frame coords.
// ---------------------------------------------------------------------------

struct Box {
  RatVec lo, hi;

  Box() = default;
  Box(RatVec lo_, RatVec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size() || lo.empty())
      throw InvalidInputError("box bounds must have equal nonzero dimension");
    for (std::size_t j = 0; j < lo.size(); ++j)
      if (!(lo[j] < hi[j]))
        throw InvalidInputError("box requires lo < hi on every axis");
  }

  int dim() const { return int(lo.size()); }

  Rat volume() const {
    Rat v = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) v *= hi[j] - lo[j];
    return v;
  }

  bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

inline bool boxes_overlap(const Box& a, const Box& b) {
  for (std::size_t j = 0; j < a.lo.size(); ++j)
    if (!(a.lo[j] < b.hi[j] && b.lo[j] < a.hi[j])) return false;
  return true;
}

inline std::optional<Box> box_intersection(const Box& a, const Box& b) {
  if (!boxes_overlap(a, b)) return std::nullopt;
  RatVec lo(a.lo.size()), hi(a.lo.size());
  for (std::size_t j = 0; j < a.lo.size(); ++j) {
    lo[j] = std::max(a.lo[j], b.lo[j]);
    hi[j] = std::min(a.hi[j], b.hi[j]);
  }
  return Box(std::move(lo), std::move(hi));
}

/// a \ b as at most 2*dim disjoint slabs (peeled axis by axis).
inline std::vector<Box> box_subtract(const Box& a, const Box& b) {
  auto ov = box_intersection(a, b);
  if (!ov) return {a};
  std::vector<Box> out;
  Box cur = a;
  for (std::size_t j = 0; j < a.lo.size(); ++j) {
    if (cur.lo[j] < ov->lo[j]) {
      Box slab = cur;
      slab.hi[j] = ov->lo[j];
      out.push_back(std::move(slab));
      cur.lo[j] = ov->lo[j];
    }
    if (ov->hi[j] < cur.hi[j]) {
      Box slab = cur;
      slab.lo[j] = ov->hi[j];
      out.push_back(std::move(slab));
      cur.hi[j] = ov->hi[j];
    }
  }
  return out;  // cur == *ov is dropped
}

// ---------------------------------------------------------------------------
// Region: finite disjoint union of boxes in a frame. Every set the library
// constructs (P, E, F, K, K_i, Omega_i, W_{i,n}, ...) is one of these.
// ---------------------------------------------------------------------------

struct PointLocation {
  bool inside = false;
  bool near_face = false;  // within kGeomTol of some cell face (frame coords)
};

class Region {
 public:
  /// Verifying constructor: rejects overlapping cells.
  Region(Frame frame, std::vector<Box> cells)
      : frame_(std::move(frame)), cells_(std::move(cells)) {
    check_dims();
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (std::size_t k = i + 1; k < cells_.size(); ++k)
        if (boxes_overlap(cells_[i], cells_[k]))
          throw InvalidInputError("region cells must be pairwise disjoint");
    cache_doubles();
  }

  static Region empty(Frame frame) { return Region(std::move(frame)); }

  /// Single frame-coordinate box.
  static Region box(Frame frame, RatVec lo, RatVec hi) {
    std::vector<Box> cells;
    cells.emplace_back(std::move(lo), std::move(hi));
    return Region(std::move(frame), std::move(cells));
  }

  /// Trusted constructor for operation results that are disjoint by
  /// construction (union/subtract/intersect below).
  static Region from_disjoint_cells(Frame frame, std::vector<Box> cells) {
    Region r(std::move(frame));
    r.cells_ = std::move(cells);
    r.check_dims();
    r.cache_doubles();
    return r;
  }

  const Frame& frame() const { return frame_; }
  const std::vector<Box>& cells() const { return cells_; }
  int dim() const { return frame_.dim(); }
  bool is_empty() const { return cells_.empty(); }

  /// Exact cell volume in frame coordinates (no determinant factor).
  Rat frame_volume() const {
    Rat v = 0;
    for (const Box& c : cells_) v += c.volume();
    return v;
  }

  /// Ambient (Lebesgue) volume: |det basis| * frame volume.
  double volume() const { return frame_.det_abs() * to_double(frame_volume()); }

  /// Frame-coordinate bounding box; nullopt when empty.
  std::optional<Box> bounding_box() const {
    if (cells_.empty()) return std::nullopt;
    RatVec lo = cells_[0].lo, hi = cells_[0].hi;
    for (const Box& c : cells_)
      for (int j = 0; j < dim(); ++j) {
        lo[j] = std::min(lo[j], c.lo[j]);
        hi[j] = std::max(hi[j], c.hi[j]);
      }
    return Box(std::move(lo), std::move(hi));
  }

  /// Half-open membership for an ambient point, with a reported guard band.
  PointLocation locate(const Eigen::VectorXd& ambient) const {
    Eigen::VectorXd t = frame_.to_frame(ambient);
    return locate_frame(t);
  }

  /// Same test on a point already in frame coordinates. The face guard band
  /// scales with the cell so that microscopic cells (deep dilates) are not
  /// spuriously flagged.
  PointLocation locate_frame(const Eigen::VectorXd& t) const {
    PointLocation loc;
    const int d = dim();
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const double* lo = &lo_d_[i * d];
      const double* hi = &hi_d_[i * d];
      bool in = true;
      for (int j = 0; j < d; ++j) {
        if (!(t[j] >= lo[j] && t[j] < hi[j])) in = false;
        double tol = kGeomTol * (hi[j] - lo[j]);
        if (std::abs(t[j] - lo[j]) <= tol || std::abs(t[j] - hi[j]) <= tol)
          loc.near_face = true;
      }
      if (in) {
        loc.inside = true;
        return loc;
      }
    }
    return loc;
  }

  bool contains(const Eigen::VectorXd& ambient) const { return locate(ambient).inside; }

 private:
  explicit Region(Frame frame) : frame_(std::move(frame)) {}

  void check_dims() const {
    for (const Box& c : cells_)
      if (c.dim() != frame_.dim())
        throw InvalidInputError("cell dimension does not match frame");
  }

  void cache_doubles() {
    const int d = dim();
    lo_d_.resize(cells_.size() * d);
    hi_d_.resize(cells_.size() * d);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (int j = 0; j < d; ++j) {
        lo_d_[i * d + j] = to_double(cells_[i].lo[j]);
        hi_d_[i * d + j] = to_double(cells_[i].hi[j]);
      }
  }

  Frame frame_;
  std::vector<Box> cells_;
  std::vector<double> lo_d_, hi_d_;  // membership fast path
};

// ---------------------------------------------------------------------------
// Exact set operations
// ---------------------------------------------------------------------------

inline Region subtract(const Region& a, const Region& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Box> result;
  for (const Box& cell : a.cells()) {
    std::vector<Box> pieces{cell};
    for (const Box& cutter : b.cells()) {
      std::vector<Box> next;
      for (const Box& p : pieces) {
        auto frags = box_subtract(p, cutter);
        next.insert(next.end(), std::make_move_iterator(frags.begin()),
                    std::make_move_iterator(frags.end()));
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    result.insert(result.end(), std::make_move_iterator(pieces.begin()),
                  std::make_move_iterator(pieces.end()));
  }
  return Region::from_disjoint_cells(a.frame(), std::move(result));
}

inline Region unite(const Region& a, const Region& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Box> result = a.cells();
  Region extra = subtract(b, a);
  result.insert(result.end(), extra.cells().begin(), extra.cells().end());
  return Region::from_disjoint_cells(a.frame(), std::move(result));
}

inline Region intersect(const Region& a, const Region& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<Box> result;
  for (const Box& x : a.cells())
    for (const Box& y : b.cells())
      if (auto cell = box_intersection(x, y)) result.push_back(std::move(*cell));
  return Region::from_disjoint_cells(a.frame(), std::move(result));
}

/// Translation by a frame-coordinate rational vector.
inline Region translate(const Region& a, const RatVec& v) {
  if (int(v.size()) != a.dim()) throw InvalidInputError("translation dimension mismatch");
  std::vector<Box> cells = a.cells();
  for (Box& c : cells)
    for (int j = 0; j < a.dim(); ++j) {
      c.lo[j] += v[j];
      c.hi[j] += v[j];
    }
  return Region::from_disjoint_cells(a.frame(), std::move(cells));
}

/// Per-axis scaling t_j -> d_j * t_j (the action of frame-diagonal dilations).
inline Region scale_axes(const Region& a, const RatVec& d) {
  if (int(d.size()) != a.dim()) throw InvalidInputError("scale dimension mismatch");
  for (const Rat& f : d)
    if (f == 0) throw InvalidInputError("zero scale factor");
  std::vector<Box> cells = a.cells();
  for (Box& c : cells)
    for (int j = 0; j < a.dim(); ++j) {
      Rat x = c.lo[j] * d[j], y = c.hi[j] * d[j];
      c.lo[j] = std::min(x, y);
      c.hi[j] = std::max(x, y);
    }
  return Region::from_disjoint_cells(a.frame(), std::move(cells));
}

inline Region scale_axes(const Region& a, const Rat& factor) {
  return scale_axes(a, RatVec(std::size_t(a.dim()), factor));
}

/// Exact equality as sets (not as cell lists).
inline bool region_equal(const Region& a, const Region& b) {
  return subtract(a, b).is_empty() && subtract(b, a).is_empty();
}

inline bool region_subset(const Region& a, const Region& b) {
  return subtract(a, b).is_empty();
}

// ---------------------------------------------------------------------------
// Closed-form oscillatory box integrals
// ---------------------------------------------------------------------------

namespace detail {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// int_lo^hi exp(2 pi i zeta t) dt, with the zeta -> 0 limit below 1e-12.
inline Complex segment_exp_integral(double lo, double hi, Complex zeta) {
  if (std::abs(zeta) < 1e-12) return Complex(hi - lo, 0.0);
  const Complex two_pi_i(0.0, kTwoPi);
  return (std::exp(two_pi_i * zeta * hi) - std::exp(two_pi_i * zeta * lo)) /
         (two_pi_i * zeta);
}

}  // namespace detail

/// int_A exp(2 pi i (w, x)) dx for a complex ambient frequency w = x + i y.
/// Separable per cell after the frame change of variables.
inline Complex oscillatory_integral(const Region& a, const Eigen::VectorXcd& w) {
  if (w.size() != a.dim()) throw InvalidInputError("frequency dimension mismatch");
  Eigen::VectorXcd zeta = a.frame().basis().transpose() * w;
  Complex total(0.0, 0.0);
  for (const Box& c : a.cells()) {
    Complex prod(1.0, 0.0);
    for (int j = 0; j < a.dim(); ++j)
      prod *= detail::segment_exp_integral(to_double(c.lo[j]), to_double(c.hi[j]),
                                           zeta[j]);
    total += prod;
  }
  return a.frame().det_abs() * total;
}

/// Fourier transform of the indicator: F(chi_A)(xi) = int_A exp(-2 pi i (xi,x)) dx.
inline Complex fourier_indicator(const Region& a, const Eigen::VectorXd& xi) {
  return oscillatory_integral(a, (-xi).cast<Complex>());
}

}  // namespace coxwave
