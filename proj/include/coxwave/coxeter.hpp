#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "coxwave/common.hpp"

namespace coxwave {

// ---------------------------------------------------------------------------
// Reflections and root systems
// ---------------------------------------------------------------------------

/// r_alpha = id - 2 alpha alpha^T / (alpha, alpha): negates alpha, fixes the
/// hyperplane (alpha, .) = 0.
inline Eigen::MatrixXd reflection_matrix(const Eigen::VectorXd& alpha) {
  double n2 = alpha.squaredNorm();
  if (n2 <= 0.0 || !std::isfinite(n2))
    throw InvalidInputError("reflection axis must be a nonzero vector");
  const int d = int(alpha.size());
  return Eigen::MatrixXd::Identity(d, d) - (2.0 / n2) * (alpha * alpha.transpose());
}

struct FamilySpec {
  enum class Kind { Dihedral, A3, B3, DihedralTimesA1 };
  Kind kind = Kind::Dihedral;
  int m = 0;  // dihedral order parameter; unused for A3/B3

  /// Accepts "I2:m", "A3", "B3", "I2:mxA1".
  static FamilySpec parse(const std::string& text) {
    FamilySpec spec;
    std::string s = text;
    if (s == "A3") { spec.kind = Kind::A3; return spec; }
    if (s == "B3") { spec.kind = Kind::B3; return spec; }
    bool with_a1 = false;
    if (s.size() > 3 && s.substr(s.size() - 3) == "xA1") {
      with_a1 = true;
      s = s.substr(0, s.size() - 3);
    }
    if (s.rfind("I2:", 0) == 0) {
      int m = 0;
      try {
        m = std::stoi(s.substr(3));
      } catch (const std::exception&) {
        throw UnsupportedFamilyError("bad dihedral parameter in '" + text + "'");
      }
      if (m < 2) throw UnsupportedFamilyError("dihedral family needs m >= 2");
      spec.kind = with_a1 ? Kind::DihedralTimesA1 : Kind::Dihedral;
      spec.m = m;
      return spec;
    }
    throw UnsupportedFamilyError("unsupported family '" + text +
                                 "' (expected I2:m, A3, B3, or I2:mxA1)");
  }

  std::string name() const {
    switch (kind) {
      case Kind::A3: return "A3";
      case Kind::B3: return "B3";
      case Kind::Dihedral: return "I2:" + std::to_string(m);
      case Kind::DihedralTimesA1: return "I2:" + std::to_string(m) + "xA1";
    }
    return "?";
  }

  int dim() const { return kind == Kind::Dihedral ? 2 : 3; }
};

struct RootSystem {
  int dim = 0;
  FamilySpec family;
  std::vector<Eigen::VectorXd> roots;
};

namespace detail {

inline bool vec_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                      double tol = kGeomTol) {
  return (a - b).norm() <= tol;
}

inline bool contains_vec(const std::vector<Eigen::VectorXd>& set,
                         const Eigen::VectorXd& v, double tol = kGeomTol) {
  for (const auto& u : set)
    if (vec_close(u, v, tol)) return true;
  return false;
}

/// Closes a seed set under all of its own reflections (axiom 3).
inline std::vector<Eigen::VectorXd> reflection_closure(
    std::vector<Eigen::VectorXd> seeds, std::size_t cap = 256) {
  std::vector<Eigen::VectorXd> roots;
  std::deque<Eigen::VectorXd> work;
  for (auto& s : seeds) {
    if (!contains_vec(roots, s)) {
      roots.push_back(s);
      work.push_back(s);
      if (!contains_vec(roots, -s)) {
        roots.push_back(-s);
        work.push_back(-s);
      }
    }
  }
  while (!work.empty()) {
    Eigen::VectorXd beta = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Eigen::VectorXd image = reflection_matrix(roots[i]) * beta;
      if (!contains_vec(roots, image)) {
        if (roots.size() >= cap)
          throw NonFiniteGroupError("root closure exceeded cap");
        roots.push_back(image);
        work.push_back(image);
      }
    }
  }
  return roots;
}

inline bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - kGeomTol) return true;
    if (a[i] > b[i] + kGeomTol) return false;
  }
  return false;
}

}  // namespace detail

/// Verifies the three root-system axioms with geometric tolerance.
inline void check_root_axioms(const RootSystem& rs) {
  const auto& roots = rs.roots;
  if (roots.empty()) throw InvalidInputError("empty root set");
  Eigen::MatrixXd span(rs.dim, roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) span.col(i) = roots[i];
  if (Eigen::FullPivLU<Eigen::MatrixXd>(span).rank() != rs.dim)
    throw InvalidInputError("roots do not span the ambient space");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!detail::contains_vec(roots, -roots[i]))
      throw InvalidInputError("root set not symmetric under negation");
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (i == k) continue;
      // only +-alpha may be parallel
      double cross = std::abs(roots[i].normalized().dot(roots[k].normalized()));
      if (cross > 1.0 - 1e-12 && !detail::vec_close(roots[i], roots[k]) &&
          !detail::vec_close(roots[i], -roots[k]))
        throw InvalidInputError("parallel roots beyond +-alpha");
    }
  }
  for (const auto& alpha : roots) {
    Eigen::MatrixXd r = reflection_matrix(alpha);
    for (const auto& beta : roots)
      if (!detail::contains_vec(roots, r * beta))
        throw InvalidInputError("root set not closed under its reflections");
  }
}

inline RootSystem build_root_system(const FamilySpec& spec) {
  RootSystem rs;
  rs.family = spec;
  rs.dim = spec.dim();
  using Kind = FamilySpec::Kind;
  const double pi = 3.14159265358979323846;

  auto dihedral_roots = [&](int m) {
    // 2m unit roots at angle multiples of pi/m, anchored at (1, 0)
    std::vector<Eigen::VectorXd> out;
    for (int k = 0; k < 2 * m; ++k) {
      Eigen::VectorXd r(2);
      r << std::cos(k * pi / m), std::sin(k * pi / m);
      out.push_back(r);
    }
    return out;
  };

  switch (spec.kind) {
    case Kind::Dihedral:
      rs.roots = dihedral_roots(spec.m);
      break;
    case Kind::DihedralTimesA1: {
      for (const auto& r2 : dihedral_roots(spec.m)) {
        Eigen::VectorXd r(3);
        r << r2[0], r2[1], 0.0;
        rs.roots.push_back(r);
      }
      Eigen::VectorXd e3(3);
      e3 << 0, 0, 1;
      rs.roots.push_back(e3);
      rs.roots.push_back(-e3);
      break;
    }
    case Kind::A3:
      // tetrahedral symmetry group Sym(4): {+-e_i +- e_j, i < j} in R^3
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int si : {-1, 1})
            for (int sj : {-1, 1}) {
              Eigen::VectorXd r = Eigen::VectorXd::Zero(3);
              r[i] = si;
              r[j] = sj;
              rs.roots.push_back(r);
            }
      break;
    case Kind::B3:
      // cube symmetry group: A3 roots plus +-e_i
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int si : {-1, 1})
            for (int sj : {-1, 1}) {
              Eigen::VectorXd r = Eigen::VectorXd::Zero(3);
              r[i] = si;
              r[j] = sj;
              rs.roots.push_back(r);
            }
      for (int i = 0; i < 3; ++i) {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(3);
        r[i] = 1;
        rs.roots.push_back(r);
        rs.roots.push_back(-r);
      }
      break;
  }
  rs.roots = detail::reflection_closure(rs.roots);
  check_root_axioms(rs);
  return rs;
}

// ---------------------------------------------------------------------------
// Finite reflection groups
// ---------------------------------------------------------------------------

class ReflectionGroup {
 public:
  ReflectionGroup(std::vector<Eigen::MatrixXd> elements,
                  std::vector<Eigen::MatrixXd> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)) {}

  const std::vector<Eigen::MatrixXd>& elements() const { return elements_; }
  const std::vector<Eigen::MatrixXd>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  int dim() const { return elements_.empty() ? 0 : int(elements_[0].rows()); }

  /// Index of a matrix among the elements, -1 if absent (Frobenius tolerance).
  int find(const Eigen::MatrixXd& w, double tol = kGeomTol) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if ((elements_[i] - w).norm() <= tol) return int(i);
    return -1;
  }

  /// Element indices ordered lexicographically by row-major entries; used for
  /// deterministic tie-breaking on chamber boundaries.
  std::vector<int> lex_order() const {
    std::vector<int> idx(elements_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const auto& A = elements_[a];
      const auto& B = elements_[b];
      for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c) {
          if (A(r, c) < B(r, c) - kGeomTol) return true;
          if (A(r, c) > B(r, c) + kGeomTol) return false;
        }
      return false;
    });
    return idx;
  }

 private:
  std::vector<Eigen::MatrixXd> elements_;
  std::vector<Eigen::MatrixXd> generators_;
};

/// Breadth-first closure of the generated matrix group. elements()[0] is the
/// identity; order is deterministic for a fixed generator list.
inline ReflectionGroup generate_group(std::vector<Eigen::MatrixXd> generators,
                                      std::size_t max_order = 1024) {
  if (generators.empty()) throw InvalidInputError("no generators");
  const int d = int(generators[0].rows());
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw InvalidInputError("generator dimensions disagree");
    if ((g * g - Eigen::MatrixXd::Identity(d, d)).norm() > kGeomTol)
      throw InvalidInputError("generator is not an involution");
    if ((g * g.transpose() - Eigen::MatrixXd::Identity(d, d)).norm() > kGeomTol)
      throw InvalidInputError("generator is not orthogonal");
  }
  std::vector<Eigen::MatrixXd> elements{Eigen::MatrixXd::Identity(d, d)};
  auto find = [&](const Eigen::MatrixXd& w) {
    for (const auto& e : elements)
      if ((e - w).norm() <= kGeomTol) return true;
    return false;
  };
  std::deque<Eigen::MatrixXd> work{elements[0]};
  while (!work.empty()) {
    Eigen::MatrixXd w = work.front();
    work.pop_front();
    for (const auto& g : generators) {
      Eigen::MatrixXd p = w * g;
      if (!find(p)) {
        if (elements.size() >= max_order)
          throw NonFiniteGroupError("group closure exceeded max order " +
                                    std::to_string(max_order));
        elements.push_back(p);
        work.push_back(p);
      }
    }
  }
  return ReflectionGroup(std::move(elements), std::move(generators));
}

inline ReflectionGroup generate_group(const RootSystem& rs,
                                      std::size_t max_order = 1024) {
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& alpha : rs.roots) gens.push_back(reflection_matrix(alpha));
  return generate_group(std::move(gens), max_order);
}

// ---------------------------------------------------------------------------
// Simple systems, dual bases, fundamental cones
// ---------------------------------------------------------------------------

struct SimpleSystem {
  std::vector<Eigen::VectorXd> simple_roots;  // Pi, ordered
  Eigen::VectorXd order_vector;

  int dim() const { return simple_roots.empty() ? 0 : int(simple_roots[0].size()); }

  Eigen::MatrixXd matrix() const {  // columns alpha_i
    Eigen::MatrixXd m(dim(), simple_roots.size());
    for (std::size_t i = 0; i < simple_roots.size(); ++i) m.col(i) = simple_roots[i];
    return m;
  }
};

/// Default generic ordering vector (1, 1/pi, 1/pi^2, ...).
inline Eigen::VectorXd default_order_vector(int dim) {
  Eigen::VectorXd v(dim);
  double x = 1.0;
  for (int i = 0; i < dim; ++i, x /= 3.14159265358979323846) v[i] = x;
  return v;
}

/// Simple system of the positive system induced by `order_vector`: the
/// positive roots that are not positive combinations of two other positive
/// roots (for these finite families every decomposable positive root splits
/// over a pair). The result is verified against the defining property that
/// all roots have single-signed coordinates over Pi.
inline SimpleSystem simple_system(const RootSystem& rs,
                                  Eigen::VectorXd order_vector) {
  const double genericity = 1e-12;
  Eigen::VectorXd v = order_vector;
  for (int attempt = 0;; ++attempt) {
    bool generic = true;
    for (const auto& alpha : rs.roots)
      if (std::abs(alpha.dot(v)) <= genericity * alpha.norm() * v.norm())
        generic = false;
    if (generic) break;
    if (attempt >= 8)
      throw GenericityError("order vector orthogonal to a root after retries");
    v = order_vector + (attempt + 1) * 1e-3 * default_order_vector(rs.dim);
  }

  std::vector<Eigen::VectorXd> positive;
  for (const auto& alpha : rs.roots)
    if (alpha.dot(v) > 0) positive.push_back(alpha);

  SimpleSystem out;
  out.order_vector = v;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    bool decomposable = false;
    for (std::size_t a = 0; a < positive.size() && !decomposable; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < positive.size() && !decomposable; ++b) {
        if (b == i) continue;
        // positive[i] = c1 * positive[a] + c2 * positive[b], c1, c2 > 0?
        Eigen::MatrixXd m(rs.dim, 2);
        m.col(0) = positive[a];
        m.col(1) = positive[b];
        Eigen::Vector2d c = m.colPivHouseholderQr().solve(positive[i]);
        if ((m * c - positive[i]).norm() <= kGeomTol && c[0] > kGeomTol &&
            c[1] > kGeomTol)
          decomposable = true;
      }
    }
    if (!decomposable) out.simple_roots.push_back(positive[i]);
  }

  // descending lex puts the most x-aligned root (hence dual direction) first
  std::sort(out.simple_roots.begin(), out.simple_roots.end(),
            [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
              return detail::lex_less(b, a);
            });

  if (int(out.simple_roots.size()) != rs.dim)
    throw GenericityError("simple system has wrong cardinality");
  Eigen::MatrixXd pi = out.matrix();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(pi);
  if (!lu.isInvertible()) throw RankError("simple roots are dependent");
  for (const auto& alpha : rs.roots) {
    Eigen::VectorXd coeff = lu.solve(alpha);
    bool nonneg = true, nonpos = true;
    for (int j = 0; j < rs.dim; ++j) {
      if (coeff[j] < -kGeomTol) nonneg = false;
      if (coeff[j] > kGeomTol) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw GenericityError("extracted set is not a simple system");
  }
  return out;
}

inline SimpleSystem simple_system(const RootSystem& rs) {
  return simple_system(rs, default_order_vector(rs.dim));
}

struct DualBasis {
  std::vector<Eigen::VectorXd> dual_roots;  // alpha_j^* with (a_i, a_j^*) = delta_ij

  Eigen::MatrixXd matrix() const {  // columns alpha_j^*
    Eigen::MatrixXd m(dual_roots[0].size(), dual_roots.size());
    for (std::size_t i = 0; i < dual_roots.size(); ++i) m.col(i) = dual_roots[i];
    return m;
  }
};

inline DualBasis dual_basis(const SimpleSystem& pi) {
  Eigen::MatrixXd p = pi.matrix();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(p.transpose());
  if (!lu.isInvertible()) throw RankError("simple system is singular");
  Eigen::MatrixXd d = lu.inverse();  // (Pi^T)^{-1}: columns are the duals
  DualBasis out;
  for (int j = 0; j < d.cols(); ++j) out.dual_roots.push_back(d.col(j));
  double worst = 0;
  for (int i = 0; i < d.cols(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      worst = std::max(worst,
                       std::abs(pi.simple_roots[i].dot(out.dual_roots[j]) -
                                (i == j ? 1.0 : 0.0)));
  if (worst > kGeomTol) throw RankError("dual basis failed the Gram check");
  return out;
}

/// Closed cone with apex 0 given by inward wall normals.
struct Cone {
  std::vector<Eigen::VectorXd> normals;

  /// Smallest inner product against the normals; >= 0 means inside.
  double margin(const Eigen::VectorXd& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& n : normals) m = std::min(m, n.dot(x));
    return m;
  }
  bool contains(const Eigen::VectorXd& x, double tol = 0.0) const {
    return margin(x) >= -tol;
  }
};

/// C(Pi) = {x : (x, alpha) >= 0 for all alpha in Pi}.
inline Cone fundamental_cone(const SimpleSystem& pi) {
  if (pi.simple_roots.empty()) throw InvalidInputError("empty simple system");
  return Cone{pi.simple_roots};
}

// ---------------------------------------------------------------------------
// Chamber lookup
// ---------------------------------------------------------------------------

struct ChamberResult {
  int element = -1;              // index into W.elements(): w with w^{-1} x in C(Pi)
  Eigen::VectorXd canonical;     // w^{-1} x
  bool boundary = false;         // within kGeomTol of a wall
};

/// Folds x into the fundamental cone by repeated simple reflections and
/// identifies the group element taking the cone copy back to x. Boundary
/// points get the lexicographically least admissible element.
inline ChamberResult chamber_of(const Eigen::VectorXd& x, const SimpleSystem& pi,
                                const ReflectionGroup& w) {
  const int d = pi.dim();
  std::vector<Eigen::MatrixXd> simple_refl;
  for (const auto& alpha : pi.simple_roots)
    simple_refl.push_back(reflection_matrix(alpha));

  Eigen::VectorXd y = x;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(d, d);  // w with y = w^{-1} x
  std::size_t guard = 4 * w.order() + 16;
  for (std::size_t step = 0; step < guard; ++step) {
    int worst = -1;
    double worst_val = -kGeomTol;
    for (std::size_t i = 0; i < pi.simple_roots.size(); ++i) {
      double dp = pi.simple_roots[i].dot(y);
      if (dp < worst_val) {
        worst_val = dp;
        worst = int(i);
      }
    }
    if (worst < 0) break;
    y = simple_refl[worst] * y;
    acc = acc * simple_refl[worst];
  }

  ChamberResult res;
  res.canonical = y;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& alpha : pi.simple_roots)
    margin = std::min(margin, alpha.dot(y));
  res.boundary = std::abs(margin) <= kGeomTol * std::max(1.0, y.norm());

  if (!res.boundary) {
    res.element = w.find(acc);
    if (res.element < 0)
      throw Error("chamber fold produced a matrix outside the group");
    return res;
  }
  // Deterministic tie-break: least element (lex over entries) mapping x into C.
  for (int idx : w.lex_order()) {
    Eigen::VectorXd cand = w.elements()[idx].transpose() * x;
    bool ok = true;
    for (const auto& alpha : pi.simple_roots)
      if (alpha.dot(cand) < -kGeomTol * std::max(1.0, x.norm())) ok = false;
    if (ok) {
      res.element = idx;
      res.canonical = cand;
      return res;
    }
  }
  throw Error("no chamber found for boundary point");
}

// ---------------------------------------------------------------------------
// Monte Carlo chamber-tiling statistics
// ---------------------------------------------------------------------------

struct ChamberCoverStats {
  std::size_t n_samples = 0;
  std::size_t multiplicity_one = 0;
  std::size_t boundary = 0;       // not strictly inside any chamber
  std::size_t anomalies = 0;      // multiplicity != 1 while clear of all walls
  double multiplicity_one_fraction() const {
    return n_samples ? double(multiplicity_one) / double(n_samples) : 0.0;
  }
};

/// Samples an ambient annulus r_lo <= |x| < r_hi uniformly (rejection from the
/// bounding cube; deterministic for a fixed seed).
inline Eigen::VectorXd sample_annulus(Rng& rng, int dim, double r_lo, double r_hi) {
  for (;;) {
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.uniform(-r_hi, r_hi);
    double r = x.norm();
    if (r >= r_lo && r < r_hi) return x;
  }
}

/// Multiplicity of {w C(Pi)} coverage over random annulus samples: counts the
/// elements whose chamber strictly contains each sample.
inline ChamberCoverStats chamber_cover_stats(const ReflectionGroup& w,
                                             const SimpleSystem& pi,
                                             std::size_t n_samples,
                                             std::uint64_t seed, double r_lo = 1.0,
                                             double r_hi = 2.0) {
  ChamberCoverStats stats;
  stats.n_samples = n_samples;
  Rng rng(seed);
  const double tol = kGeomTol;
  for (std::size_t s = 0; s < n_samples; ++s) {
    Eigen::VectorXd x = sample_annulus(rng, pi.dim(), r_lo, r_hi);
    int strict = 0;
    double best_margin = -std::numeric_limits<double>::infinity();
    for (const auto& elem : w.elements()) {
      Eigen::VectorXd y = elem.transpose() * x;
      double margin = std::numeric_limits<double>::infinity();
      for (const auto& alpha : pi.simple_roots)
        margin = std::min(margin, alpha.dot(y));
      best_margin = std::max(best_margin, margin);
      if (margin > tol) ++strict;
    }
    if (strict == 1)
      ++stats.multiplicity_one;
    else if (std::abs(best_margin) <= tol)
      ++stats.boundary;
    else
      ++stats.anomalies;
  }
  return stats;
}

}  // namespace coxwave
