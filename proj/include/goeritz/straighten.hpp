#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "goeritz/errors.hpp"

namespace goeritz::numerics {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
struct PhiValue {
  Scalar value;
  Scalar derivative;
};

/// Radial sample of a profile: phi(s) and s * phi'(s).
template <class Scalar>
struct RadialSample {
  Scalar phi;
  Scalar s_dphi;
};

/// Quintic smoothstep 6u^5 - 15u^4 + 10u^3 on [0,1], clamped outside.
template <class Scalar>
PhiValue<Scalar> smoothstep(Scalar u) {
  if (u <= 0) return {Scalar(0), Scalar(0)};
  if (u >= 1) return {Scalar(1), Scalar(0)};
  const Scalar u2 = u * u;
  const Scalar w = u * (1 - u);
  return {u2 * u * (10 + u * (6 * u - 15)), 30 * w * w};
}

/// Bump profile phi_eps(s) = phi(s / eps) where phi vanishes on [0, 1/2],
/// equals 1 on [1, inf) and is the smoothstep of u = 2s - 1 in between.
/// `b0` is the nominal bound claimed for s * phi'(s).
template <class Scalar>
struct BumpProfile {
  Scalar eps = 1;
  Scalar b0 = 4;

  PhiValue<Scalar> operator()(Scalar s) const {
    if (s < 0) throw PreconditionError("profile evaluated at a negative radius");
    const PhiValue<Scalar> q = smoothstep<Scalar>(2 * (s / eps) - 1);
    return {q.value, q.derivative * 2 / eps};
  }

  /// sup over s of s * phi'(s). It is 30 u^2 (1-u)^2 (1+u) maximized at the
  /// root u = (sqrt(41) - 1) / 10 of 5u^2 + u - 2, independent of eps.
  static Scalar sup_s_dphi() {
    using std::sqrt;
    const Scalar u = (sqrt(Scalar(41)) - 1) / 10;
    const Scalar w = u * (1 - u);
    return 30 * w * w * (1 + u);
  }

  Scalar kappa_bound() const { return b0; }

  /// n radii evenly spaced on (0, 2 eps].
  std::vector<RadialSample<Scalar>> radial_samples(int n) const {
    std::vector<RadialSample<Scalar>> out;
    for (int i = 1; i <= n; ++i) {
      const Scalar s = 2 * eps * Scalar(i) / Scalar(n);
      const auto p = (*this)(s);
      out.push_back({p.value, s * p.derivative});
    }
    return out;
  }
};

/// Monotone profile with phi = 0 on [0,1], phi = 1 for s >= exp(2/kappa) and
/// s * phi'(s) <= kappa / (2 (1 - delta)) < kappa.
///
/// In the variable v = ln s the derivative d phi / dv is a smoothed copy of
/// the indicator of [0, 2/kappa] scaled by kappa / 2: a plateau whose edges
/// are smoothstep ramps of relative width delta, renormalized to total mass 1.
template <class Scalar>
struct KappaProfile {
  Scalar kappa = Scalar(0.5);
  Scalar delta = Scalar(0.1);

  Scalar log_extent() const { return 2 / kappa; }

  /// phi and d phi / dv at v = ln s.
  PhiValue<Scalar> at_log(Scalar v) const {
    const Scalar V = log_extent();
    const Scalar u = v / V;
    if (u <= 0) return {Scalar(0), Scalar(0)};
    if (u >= 1) return {Scalar(1), Scalar(0)};
    const Scalar mass = 1 - delta;
    const Scalar plateau = smoothstep<Scalar>(u / delta).value * smoothstep<Scalar>((1 - u) / delta).value;
    Scalar area;
    if (u < delta) {
      area = delta * ramp_area(u / delta);
    } else if (u <= 1 - delta) {
      area = delta / 2 + (u - delta);
    } else {
      area = mass - delta * ramp_area((1 - u) / delta);
    }
    return {area / mass, plateau / (mass * V)};
  }

  PhiValue<Scalar> operator()(Scalar s) const {
    if (s < 0) throw PreconditionError("profile evaluated at a negative radius");
    if (s <= 1) return {Scalar(0), Scalar(0)};
    using std::log;
    const auto p = at_log(log(s));
    return {p.value, p.derivative / s};
  }

  Scalar sup_s_dphi() const { return kappa / (2 * (1 - delta)); }
  Scalar kappa_bound() const { return kappa; }

  /// n samples evenly spaced in ln s over a margin around the support.
  std::vector<RadialSample<Scalar>> radial_samples(int n) const {
    const Scalar V = log_extent();
    const Scalar lo = -V / 16;
    const Scalar hi = V + V / 16;
    std::vector<RadialSample<Scalar>> out;
    for (int i = 0; i < n; ++i) {
      const Scalar v = lo + (hi - lo) * Scalar(i) / Scalar(std::max(n - 1, 1));
      const auto p = at_log(v);
      out.push_back({p.value, p.derivative});
    }
    return out;
  }

 private:
  // Integral of the smoothstep from 0 to x, x in [0,1].
  static Scalar ramp_area(Scalar x) { return x * x * x * x * (x * (x - 3) + Scalar(2.5)); }
};

/// lambda_t(y) = g_t(y) y with g_t(y) = (1 - t) + t phi(|y|).
template <class Scalar, class Profile>
Vector<Scalar> lambda_map(const Profile& profile, Scalar t, const Vector<Scalar>& y) {
  const Scalar g = (1 - t) + t * profile(y.norm()).value;
  return g * y;
}

/// Analytic Jacobian g_t(y) I + t phi'(|y|)/|y| y y^T, equal to (1-t) I at y = 0.
template <class Scalar, class Profile>
Matrix<Scalar> lambda_jacobian(const Profile& profile, Scalar t, const Vector<Scalar>& y) {
  const Eigen::Index n = y.size();
  const Scalar s = y.norm();
  if (s == 0) return (1 - t) * Matrix<Scalar>::Identity(n, n);
  const auto p = profile(s);
  const Scalar g = (1 - t) + t * p.value;
  return g * Matrix<Scalar>::Identity(n, n) + (t * p.derivative / s) * (y * y.transpose());
}

/// Operator norm of the Jacobian from its structure: the eigenvalues are g
/// (multiplicity n-1) and g + t s phi'(s).
template <class Scalar, class Profile>
Scalar lambda_jacobian_norm(const Profile& profile, Scalar t, const Vector<Scalar>& y) {
  using std::abs;
  const Scalar s = y.norm();
  const auto p = profile(s);
  const Scalar g = (1 - t) + t * p.value;
  return std::max(abs(g), abs(g + t * s * p.derivative));
}

/// Spectral norm by power iteration on M^T M from a fixed start vector.
template <class Scalar>
Scalar power_iteration_norm(const Matrix<Scalar>& M, int steps = 50) {
  using std::sqrt;
  const Eigen::Index n = M.cols();
  if (n == 0) return Scalar(0);
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Scalar(1) + Scalar(i) / Scalar(n + 1);
  v.normalize();
  Scalar est = 0;
  for (int k = 0; k < steps; ++k) {
    Vector<Scalar> w = M.transpose() * (M * v);
    const Scalar nw = w.norm();
    if (nw == 0) return Scalar(0);
    est = nw;
    v = w / nw;
  }
  // Rayleigh quotient at the final iterate.
  return sqrt(std::max(est, (M * v).squaredNorm()));
}

template <class Scalar>
struct WorrisomeReport {
  Scalar r = 0;
  Scalar min_coefficient = 0;
  long argmin_radial_index = 0;
  Scalar argmin_theta = 0;
  bool singular_witness = false;
  long samples = 0;
};

/// Scans 1 + r * s phi'(s) * sin(theta) cos(theta) over a polar grid; this is
/// the first diagonal entry of the Jacobian at t = 1 of
/// y -> (I + g(y)(T - I)) y with T = [[1, r], [0, 1]].
template <class Scalar, class Profile>
WorrisomeReport<Scalar> worrisome_scan(Scalar r, const Profile& profile, int radial = 64,
                                       int angular = 64) {
  using std::cos;
  using std::sin;
  WorrisomeReport<Scalar> rep;
  rep.r = r;
  rep.min_coefficient = std::numeric_limits<Scalar>::infinity();
  const auto radii = profile.radial_samples(radial);
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (int k = 0; k < angular; ++k) {
      const Scalar th = two_pi * Scalar(k) / Scalar(angular);
      const Scalar c = 1 + r * radii[i].s_dphi * sin(th) * cos(th);
      ++rep.samples;
      if (c < rep.min_coefficient) {
        rep.min_coefficient = c;
        rep.argmin_radial_index = static_cast<long>(i);
        rep.argmin_theta = th;
      }
    }
  }
  rep.singular_witness = rep.min_coefficient <= 0;
  return rep;
}

template <class Scalar>
struct QT {
  Matrix<Scalar> Q;
  Matrix<Scalar> T;
};

/// A = Q T with Q orthogonal and T upper triangular with positive diagonal,
/// by modified Gram-Schmidt with one reorthogonalization pass. Throws
/// NearSingular when the Frobenius condition estimate |A| |T^-1| exceeds
/// `max_condition`.
template <class Scalar>
QT<Scalar> qt(const Matrix<Scalar>& A, Scalar max_condition = Scalar(1e12)) {
  const Eigen::Index n = A.rows();
  if (n == 0 || A.cols() != n) throw PreconditionError("QT factorization needs a nonempty square matrix");
  Matrix<Scalar> Q = A;
  Matrix<Scalar> T = Matrix<Scalar>::Zero(n, n);
  const Scalar scale = A.norm();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const Scalar c = Q.col(i).dot(Q.col(j));
        T(i, j) += c;
        Q.col(j) -= c * Q.col(i);
      }
    }
    const Scalar d = Q.col(j).norm();
    if (!(d > scale / max_condition)) throw NearSingular("matrix is numerically singular");
    T(j, j) = d;
    Q.col(j) /= d;
  }
  const Matrix<Scalar> Tinv =
      T.template triangularView<Eigen::Upper>().solve(Matrix<Scalar>::Identity(n, n));
  if (!(scale * Tinv.norm() <= max_condition)) throw NearSingular("condition estimate above threshold");
  return {Q, T};
}

/// f_t(y) = (I + g_t(y)(T - I)) y.
template <class Scalar, class Profile>
Vector<Scalar> stage5_map(const Profile& profile, const Matrix<Scalar>& T, Scalar t,
                          const Vector<Scalar>& y) {
  const Scalar g = (1 - t) + t * profile(y.norm()).value;
  const Eigen::Index n = y.size();
  return (Matrix<Scalar>::Identity(n, n) + g * (T - Matrix<Scalar>::Identity(n, n))) * y;
}

/// Jacobian of stage5_map from g, s phi'(s) and the unit direction of y:
/// I + g (T - I) + t s phi'(s) (T - I) yhat yhat^T.
template <class Scalar>
Matrix<Scalar> stage5_jacobian(const Matrix<Scalar>& T, Scalar t, const RadialSample<Scalar>& rs,
                               const Vector<Scalar>& yhat) {
  const Eigen::Index n = T.rows();
  const Matrix<Scalar> I = Matrix<Scalar>::Identity(n, n);
  const Scalar g = (1 - t) + t * rs.phi;
  return I + g * (T - I) + (t * rs.s_dphi) * (T - I) * (yhat * yhat.transpose());
}

template <class Scalar, class Profile>
Matrix<Scalar> stage5_jacobian(const Profile& profile, const Matrix<Scalar>& T, Scalar t,
                               const Vector<Scalar>& y) {
  const Scalar s = y.norm();
  if (s == 0) {
    const Eigen::Index n = T.rows();
    const Scalar g = (1 - t) + t * profile(Scalar(0)).value;
    return Matrix<Scalar>::Identity(n, n) + g * (T - Matrix<Scalar>::Identity(n, n));
  }
  const auto p = profile(s);
  return stage5_jacobian<Scalar>(T, t, {p.value, s * p.derivative}, Vector<Scalar>(y / s));
}

/// kappa_1 = 1 / sup over tau of |((1 - tau) I + tau A)^-1|, sampled at
/// `tau_samples` evenly spaced tau in [0,1].
template <class Scalar>
Scalar kappa1(const Matrix<Scalar>& A, int tau_samples = 257) {
  const Eigen::Index n = A.rows();
  const Matrix<Scalar> I = Matrix<Scalar>::Identity(n, n);
  Scalar sup = 0;
  for (int k = 0; k < tau_samples; ++k) {
    const Scalar tau = Scalar(k) / Scalar(std::max(tau_samples - 1, 1));
    const Matrix<Scalar> At = (1 - tau) * I + tau * A;
    const Matrix<Scalar> inv = At.template triangularView<Eigen::Upper>().solve(I);
    sup = std::max(sup, power_iteration_norm<Scalar>(inv));
  }
  return 1 / sup;
}

/// kappa_2 = 1 / |A - I|; infinite when A = I.
template <class Scalar>
Scalar kappa2(const Matrix<Scalar>& A) {
  const Eigen::Index n = A.rows();
  const Scalar nrm = power_iteration_norm<Scalar>(A - Matrix<Scalar>::Identity(n, n));
  return nrm == 0 ? std::numeric_limits<Scalar>::infinity() : 1 / nrm;
}

struct Stage5Grid {
  int x = 8;
  int t = 16;
  int radial = 64;
  int angular = 64;
};

template <class Scalar>
struct Stage5Report {
  Scalar kappa = 0;
  Scalar kappa1_kappa2 = 0;  // infimum over the sampled x
  bool precondition_ok = false;
  Scalar min_det = 0;
  Scalar argmin_x = 0;
  Scalar argmin_t = 0;
  long samples = 0;
};

/// Unit directions in R^n for n = 2 (circle) or n = 3 (latitude-longitude).
template <class Scalar>
std::vector<Vector<Scalar>> unit_directions(int n, int angular) {
  using std::cos;
  using std::sin;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  std::vector<Vector<Scalar>> dirs;
  if (n == 2) {
    for (int k = 0; k < angular; ++k) {
      const Scalar th = 2 * pi * Scalar(k) / Scalar(angular);
      Vector<Scalar> d(2);
      d << cos(th), sin(th);
      dirs.push_back(d);
    }
  } else if (n == 3) {
    const int lat = std::max(angular / 2, 2);
    for (int a = 0; a <= lat; ++a) {
      const Scalar ph = pi * Scalar(a) / Scalar(lat);
      for (int k = 0; k < angular; ++k) {
        const Scalar th = 2 * pi * Scalar(k) / Scalar(angular);
        Vector<Scalar> d(3);
        d << sin(ph) * cos(th), sin(ph) * sin(th), cos(ph);
        dirs.push_back(d);
      }
    }
  } else {
    throw PreconditionError("direction grids are available for n = 2 and n = 3");
  }
  return dirs;
}

/// Minimum of det D(f_t) over a grid in (x, t, |y|, direction). The
/// precondition kappa < inf_x kappa_1 kappa_2 is evaluated and reported; the
/// scan runs either way so a refused configuration still shows its minimum.
template <class Scalar, class Profile>
Stage5Report<Scalar> stage5_scan(const std::function<Matrix<Scalar>(Scalar)>& T_path,
                                 const Profile& profile, const Stage5Grid& grid = {}) {
  Stage5Report<Scalar> rep;
  rep.kappa = profile.kappa_bound();
  rep.kappa1_kappa2 = std::numeric_limits<Scalar>::infinity();
  rep.min_det = std::numeric_limits<Scalar>::infinity();
  const auto radii = profile.radial_samples(grid.radial);
  for (int ix = 0; ix < grid.x; ++ix) {
    const Scalar x = Scalar(ix) / Scalar(std::max(grid.x - 1, 1));
    const Matrix<Scalar> T = T_path(x);
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      if (!(T(i, i) > 0)) throw PreconditionError("T_x needs a positive diagonal");
      for (Eigen::Index j = 0; j < i; ++j)
        if (T(i, j) != 0) throw PreconditionError("T_x must be upper triangular");
    }
    rep.kappa1_kappa2 = std::min(rep.kappa1_kappa2, kappa1<Scalar>(T) * kappa2<Scalar>(T));
    const auto dirs = unit_directions<Scalar>(static_cast<int>(T.rows()), grid.angular);
    for (int it = 0; it < grid.t; ++it) {
      const Scalar t = Scalar(it + 1) / Scalar(grid.t);
      for (const auto& rs : radii) {
        for (const auto& d : dirs) {
          const Scalar det = stage5_jacobian<Scalar>(T, t, rs, d).determinant();
          ++rep.samples;
          if (det < rep.min_det) {
            rep.min_det = det;
            rep.argmin_x = x;
            rep.argmin_t = t;
          }
        }
      }
    }
  }
  rep.precondition_ok = rep.kappa < rep.kappa1_kappa2;
  return rep;
}

extern template struct BumpProfile<double>;
extern template struct KappaProfile<double>;

}  // namespace goeritz::numerics
