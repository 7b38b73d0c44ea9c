#include "daeobs/dae.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace daeobs {

void DaeTriple::validate() const {
  if (F.rows() < 1 || F.cols() < 1 || H.rows() < 1)
    throw InputError("DaeTriple: m, n, p must all be at least 1");
  if (A.rows() != F.rows() || A.cols() != F.cols())
    throw InputError("DaeTriple: A must have the same shape as F");
  if (H.cols() != F.cols())
    throw InputError("DaeTriple: H must have n columns");
  if (!F.allFinite() || !A.allFinite() || !H.allFinite())
    throw InputError("DaeTriple: non-finite entries");
}

namespace {

void check_spd(const Mat& M, const char* name) {
  if (M.rows() != M.cols()) throw InputError(std::string(name) + " must be square");
  if ((M - M.transpose()).norm() > 1e-12 * std::max(1.0, M.norm()))
    throw InputError(std::string(name) + " must be symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 1e-12 * std::abs(M.trace()))
    throw InputError(std::string(name) + " must be positive definite");
}

}  // namespace

void WeightSpec::validate() const {
  check_spd(Q0, "Q0");
  check_spd(Q, "Q");
  check_spd(R, "R");
}

double rho(const Vec& x0, const TrajectoryGrid& f, const TrajectoryGrid& eta,
           double t1, const WeightSpec& W) {
  W.validate();
  if (x0.size() != W.Q0.rows()) throw InputError("rho: x0 dimension mismatch");
  if (f.dim() != W.Q.rows()) throw InputError("rho: f dimension mismatch");
  if (eta.dim() != W.R.rows()) throw InputError("rho: eta dimension mismatch");
  if (std::abs(f.dt - eta.dt) > 1e-12 || std::abs(f.t0 - eta.t0) > 1e-12)
    throw InputError("rho: f and eta must share the grid");
  const Index k1 = grid_index(f, t1);
  if (k1 > eta.count() - 1) throw InputError("rho: eta grid shorter than t1");
  return x0.dot(W.Q0 * x0) + trapz_quadform(f, W.Q, k1) +
         trapz_quadform(eta, W.R, k1);
}

Mat qbar0(const Mat& F, const Mat& Q0, const Tol& tol) {
  check_spd(Q0, "Q0");
  if (Q0.rows() != F.rows()) throw InputError("qbar0: Q0 must be m x m");
  const Mat Ft = F.transpose();
  const Mat Ft_pinv = pinv(Ft, tol);                       // m x n
  const Mat P = Mat::Identity(F.rows(), F.rows()) - Ft_pinv * Ft;
  const Mat Q0inv = Q0.llt().solve(Mat::Identity(Q0.rows(), Q0.cols()));
  const Mat M_opt = P * pinv(P * Q0inv * P, tol) * P * Q0inv * Ft_pinv;
  const Mat D = Ft_pinv - M_opt;                           // m x n
  Mat out = F * D.transpose() * Q0inv * D * Ft;
  out = 0.5 * (out + out.transpose());
  return out;
}

DaeTriple dual_triple(const DaeTriple& d) {
  d.validate();
  return DaeTriple{d.F.transpose(), d.A.transpose(), d.H.transpose()};
}

double solution_residual(const DaeTriple& d, const SolutionTuple& s) {
  d.validate();
  // right-hand side Ax + f, integrated cumulatively
  TrajectoryGrid rhs = s.f;
  rhs.samples += d.A * s.x.samples;
  const Mat integral = cumtrapz(rhs);
  const Mat Fx = d.F * s.x.samples;
  double scale = std::max(1.0, Fx.norm());
  double worst = 0.0;
  for (Index k = 0; k < s.x.count(); ++k) {
    const double r = (Fx.col(k) - Fx.col(0) - integral.col(k)).norm();
    worst = std::max(worst, r);
  }
  return worst / scale;
}

}  // namespace daeobs
