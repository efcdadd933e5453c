#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coxwave/coxeter.hpp"
#include "coxwave/lattice.hpp"
#include "coxwave/mra.hpp"

namespace coxwave {

// ---------------------------------------------------------------------------
// Band-limited test signals with box spectra
// ---------------------------------------------------------------------------

/// f given through its Fourier transform F(f) = sum_k c_k chi_{S_k} with
/// pairwise-disjoint spectrum boxes S_k (frame coordinates).
class BandlimitedSignal {
 public:
  struct Term {
    Complex coefficient;
    Box spectrum;
  };

  BandlimitedSignal(Frame frame, std::vector<Term> terms)
      : frame_(std::move(frame)), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].spectrum.dim() != frame_.dim())
        throw InvalidInputError("spectrum box dimension mismatch");
      for (std::size_t j = i + 1; j < terms_.size(); ++j)
        if (boxes_overlap(terms_[i].spectrum, terms_[j].spectrum))
          throw InvalidInputError("spectrum boxes must be pairwise disjoint");
    }
  }

  const Frame& frame() const { return frame_; }
  const std::vector<Term>& terms() const { return terms_; }
  int dim() const { return frame_.dim(); }
  bool empty() const { return terms_.empty(); }

  /// ||f||^2 by Plancherel over the disjoint boxes.
  double norm_squared() const {
    double n2 = 0;
    for (const Term& t : terms_)
      n2 += std::norm(t.coefficient) * frame_.det_abs() *
            to_double(t.spectrum.volume());
    return n2;
  }

  /// Spectrum support as a region.
  Region support() const {
    std::vector<Box> cells;
    for (const Term& t : terms_) cells.push_back(t.spectrum);
    return Region::from_disjoint_cells(frame_, std::move(cells));
  }

 private:
  Frame frame_;
  std::vector<Term> terms_;
};

namespace detail {

/// sum over boxes of c * int_S exp(2 pi i (w, lambda)) d lambda for a complex
/// ambient frequency w.
inline Complex signal_integral(const BandlimitedSignal& f,
                               const Eigen::VectorXcd& w) {
  Eigen::VectorXcd zeta = f.frame().basis().transpose() * w;
  Complex total(0, 0);
  for (const auto& term : f.terms()) {
    Complex prod(1, 0);
    for (int j = 0; j < f.dim(); ++j)
      prod *= segment_exp_integral(coxwave::to_double(term.spectrum.lo[j]),
                                   coxwave::to_double(term.spectrum.hi[j]),
                                   zeta[j]);
    total += term.coefficient * prod;
  }
  return f.frame().det_abs() * total;
}

}  // namespace detail

/// f(x) = sum_k c_k int_{S_k} exp(2 pi i (x, lambda)) d lambda, closed form.
inline Complex signal_eval(const BandlimitedSignal& f, const Eigen::VectorXd& x) {
  return detail::signal_integral(f, x.cast<Complex>());
}

/// phi(x) = F^{-1}(chi_P)(x) = int_P exp(2 pi i (x, lambda)) d lambda.
/// (No |P|^{-1/2} prefactor; the reconstruction below carries |P|^{-1}.)
inline Complex phi_eval(const Region& p, const Eigen::VectorXd& x) {
  return oscillatory_integral(p, x.cast<Complex>());
}

// ---------------------------------------------------------------------------
// WSK sampling plans and reconstruction
// ---------------------------------------------------------------------------

/// Truncated sampling grid: gamma = Gamma-generator times k, |k|_inf <= R.
struct SamplingPlan {
  Region p;        // spectral support of V_0
  Lattice gamma;   // spectrum lattice of P (orthogonal exponentials)
  int radius = 32; // inf-norm truncation of the gamma index
  int level = 0;   // reconstruct in V_level = L^2(B^level P)
  DilationScheme scheme;

  SamplingPlan(Region p_, Lattice gamma_, int radius_, int level_,
               DilationScheme scheme_)
      : p(std::move(p_)), gamma(std::move(gamma_)), radius(radius_),
        level(level_), scheme(std::move(scheme_)) {
    if (radius < 0) throw InvalidInputError("negative truncation radius");
  }

  /// Spectral-pair hypothesis: lattice exponentials orthogonal on P.
  double spectral_defect(double check_radius = 3.0) const {
    return gram_max_offdiag(p, gamma, check_radius);
  }

  /// All in-range gamma indices (odometer order, deterministic).
  std::vector<std::vector<std::int64_t>> indices() const {
    const int d = p.dim();
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> k(d, -radius);
    for (;;) {
      out.push_back(k);
      int axis = 0;
      while (axis < d) {
        if (++k[axis] <= radius) break;
        k[axis] = -radius;
        ++axis;
      }
      if (axis == d) break;
    }
    return out;
  }
};

using SampleMap = std::map<std::vector<std::int64_t>, Complex>;

/// Samples f(-gamma) for the plan's grid (level 0) or f(-L^j gamma) at level j.
inline SampleMap take_samples(const SamplingPlan& plan,
                              const BandlimitedSignal& f) {
  SampleMap samples;
  Eigen::MatrixXd lj = Eigen::MatrixXd::Identity(plan.p.dim(), plan.p.dim());
  for (int i = 0; i < plan.level; ++i) lj = plan.scheme.l_matrix() * lj;
  for (const auto& k : plan.indices()) {
    Eigen::VectorXd gamma = plan.gamma.point_ambient(k);
    samples[k] = signal_eval(f, -(lj * gamma));
  }
  return samples;
}

/// f(x) = |P|^{-1} sum_{|k| <= R} f(-gamma_k) phi(x + gamma_k).
/// Exact at in-range sample points since phi(gamma - gamma') = |P| delta.
inline Complex wsk_reconstruct(const SamplingPlan& plan, const SampleMap& samples,
                               const Eigen::VectorXd& x) {
  const double vol = plan.p.volume();
  Complex acc(0, 0);
  for (const auto& k : plan.indices()) {
    auto it = samples.find(k);
    if (it == samples.end())
      throw IncompletePlanError("missing sample inside the truncation radius");
    acc += it->second * phi_eval(plan.p, x + plan.gamma.point_ambient(k));
  }
  return acc / vol;
}

/// Level-j variant: f(x) = |P|^{-1} sum f(-L^j gamma) phi((B^j)^T x + gamma)
/// for f band-limited to B^j P. Reduces to wsk_reconstruct at j = 0.
inline Complex wsk_reconstruct_dilated(const SamplingPlan& plan,
                                       const SampleMap& samples,
                                       const Eigen::VectorXd& x) {
  const int d = plan.p.dim();
  Eigen::MatrixXd bjt = Eigen::MatrixXd::Identity(d, d);
  for (int i = 0; i < plan.level; ++i) bjt = plan.scheme.b_matrix() * bjt;
  bjt.transposeInPlace();
  const double vol = plan.p.volume();
  Complex acc(0, 0);
  for (const auto& k : plan.indices()) {
    auto it = samples.find(k);
    if (it == samples.end())
      throw IncompletePlanError("missing sample inside the truncation radius");
    acc += it->second * phi_eval(plan.p, bjt * x + plan.gamma.point_ambient(k));
  }
  return acc / vol;
}

// ---------------------------------------------------------------------------
// Directional decomposition over the chambers
// ---------------------------------------------------------------------------

/// Splits f = sum_w f_w by grouping spectrum boxes by the open chamber
/// containing them. A box whose corners land in different chambers (or on a
/// wall) raises StraddleError; the caller must subdivide it first.
inline std::map<int, BandlimitedSignal> directional_decompose(
    const BandlimitedSignal& f, const ReflectionGroup& w,
    const SimpleSystem& pi) {
  std::map<int, std::vector<BandlimitedSignal::Term>> grouped;
  const int d = f.dim();
  for (std::size_t ti = 0; ti < f.terms().size(); ++ti) {
    const Box& s = f.terms()[ti].spectrum;
    int chamber = -1;
    for (std::uint32_t corner = 0; corner < (1u << d); ++corner) {
      Eigen::VectorXd t(d);
      for (int j = 0; j < d; ++j)
        t[j] = to_double((corner >> j) & 1u ? s.hi[j] : s.lo[j]);
      ChamberResult res = chamber_of(f.frame().to_ambient(t), pi, w);
      if (res.boundary)
        throw StraddleError("spectrum box " + std::to_string(ti) +
                            " touches a chamber wall");
      if (chamber < 0) chamber = res.element;
      if (chamber != res.element)
        throw StraddleError("spectrum box " + std::to_string(ti) +
                            " straddles a chamber wall");
    }
    grouped[chamber].push_back(f.terms()[ti]);
  }
  std::map<int, BandlimitedSignal> out;
  for (auto& [idx, terms] : grouped)
    out.emplace(idx, BandlimitedSignal(f.frame(), std::move(terms)));
  return out;
}

// ---------------------------------------------------------------------------
// Dual cones and tube-domain evaluation
// ---------------------------------------------------------------------------

/// C_w = w {sum t_j alpha_j : t_j > 0}: the dual cone of the open chamber
/// w C(Pi)^o, spanned by the rotated simple roots.
struct DualCone {
  std::vector<Eigen::VectorXd> generators;

  Eigen::MatrixXd matrix() const {
    Eigen::MatrixXd m(generators[0].size(), generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) m.col(i) = generators[i];
    return m;
  }

  /// Coordinates over the generators; strictly positive means interior.
  Eigen::VectorXd coordinates(const Eigen::VectorXd& y) const {
    return matrix().fullPivLu().solve(y);
  }

  bool strictly_contains(const Eigen::VectorXd& y, double tol = kGeomTol) const {
    Eigen::VectorXd c = coordinates(y);
    for (int i = 0; i < c.size(); ++i)
      if (!(c[i] > tol)) return false;
    return true;
  }
};

inline DualCone dual_cone(const SimpleSystem& pi, const Eigen::MatrixXd& w) {
  DualCone cone;
  for (const auto& alpha : pi.simple_roots) cone.generators.push_back(w * alpha);
  return cone;
}

/// F_w(x + iy) = int F(f)(lambda) e^{-2 pi (y, lambda)} e^{2 pi i (x, lambda)},
/// closed form per spectrum box; y must lie strictly inside the dual cone.
inline Complex eval_tube_extension(const BandlimitedSignal& f_w,
                                   const DualCone& cone,
                                   const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& y) {
  if (!cone.strictly_contains(y))
    throw DomainError("imaginary part lies outside the dual cone");
  Eigen::VectorXcd w(x.size());
  for (int i = 0; i < x.size(); ++i) w[i] = Complex(x[i], y[i]);
  return detail::signal_integral(f_w, w);
}

/// Triangle-inequality damping bound sum |c_k| int_{S_k} e^{-2 pi (y, lambda)}.
inline double tube_damping_bound(const BandlimitedSignal& f_w,
                                 const Eigen::VectorXd& y) {
  Eigen::VectorXcd w(y.size());
  for (int i = 0; i < y.size(); ++i) w[i] = Complex(0.0, y[i]);
  std::vector<BandlimitedSignal::Term> abs_terms;
  for (const auto& t : f_w.terms())
    abs_terms.push_back({Complex(std::abs(t.coefficient), 0.0), t.spectrum});
  BandlimitedSignal abs_f(f_w.frame(), std::move(abs_terms));
  return detail::signal_integral(abs_f, w).real();
}

}  // namespace coxwave
