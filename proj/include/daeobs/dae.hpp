#pragma once

#include "daeobs/matrix_tools.hpp"
#include "daeobs/trajectory.hpp"

namespace daeobs {

/// The plant d(Fx)/dt = Ax + f, y = Hx + eta with F, A in R^{m x n} and
/// H in R^{p x n}.
struct DaeTriple {
  Mat F;
  Mat A;
  Mat H;

  Index m() const { return F.rows(); }
  Index n() const { return F.cols(); }
  Index p() const { return H.rows(); }

  void validate() const;
};

/// Symmetric positive definite weights (Q0, Q, R) of the noise ellipsoid
/// rho(x0, f, eta) = x0'Q0 x0 + int f'Qf + eta'R eta.
struct WeightSpec {
  Mat Q0;
  Mat Q;
  Mat R;

  void validate() const;
};

/// The estimated functional ell' F x for ell in R^m.
struct Functional {
  Vec ell;
};

/// A sampled solution tuple (x, f, y, eta) of the DAE on a shared grid.
struct SolutionTuple {
  TrajectoryGrid x;
  TrajectoryGrid f;
  TrajectoryGrid y;
  TrajectoryGrid eta;
};

/// rho norm of (x0, f, eta) on [0, t1] under the grid's trapezoid quadrature.
double rho(const Vec& x0, const TrajectoryGrid& f, const TrajectoryGrid& eta,
           double t1, const WeightSpec& W);

/// The terminal weight Qbar0 of the dual cost,
///   Qbar0 = F ((F')^+ - M_opt)' Q0^{-1} ((F')^+ - M_opt) F'
/// with M_opt = P (P Q0^{-1} P)^+ P Q0^{-1} (F')^+ and P = I - (F')^+ F'.
Mat qbar0(const Mat& F, const Mat& Q0, const Tol& tol = {});

/// (F', A', H') of the dual DAE d(F'q)/dt = A'q - H'u. The sign convention
/// on H'u is owned by the reduction step.
DaeTriple dual_triple(const DaeTriple& d);

/// Worst grid-quadrature residual of the integral identity
/// Fx(t) = Fx(0) + int (Ax + f), relative to the solution scale. Used to
/// validate solution tuples; not enforced at construction.
double solution_residual(const DaeTriple& d, const SolutionTuple& s);

}  // namespace daeobs
