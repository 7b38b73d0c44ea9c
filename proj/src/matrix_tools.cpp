#include "daeobs/matrix_tools.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace daeobs {

Subspace full_space(Index ambient_dim) {
  return Subspace{ambient_dim, Mat::Identity(ambient_dim, ambient_dim)};
}

Subspace zero_space(Index ambient_dim) {
  return Subspace{ambient_dim, Mat(ambient_dim, 0)};
}

SvdRank svd_rank(const Mat& M, const Tol& tol) {
  if (!M.allFinite()) throw InputError("svd_rank: matrix has non-finite entries");
  SvdRank out;
  if (M.rows() == 0 || M.cols() == 0) {
    out.rank = 0;
    out.U = Mat::Identity(M.rows(), M.rows());
    out.sigma = Vec(0);
    out.V = Mat::Identity(M.cols(), M.cols());
    return out;
  }
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw NumericalError("svd_rank: decomposition did not converge");
  out.U = svd.matrixU();
  out.V = svd.matrixV();
  out.sigma = svd.singularValues();
  const double smax = out.sigma.size() > 0 ? out.sigma(0) : 0.0;
  Index r = 0;
  for (Index i = 0; i < out.sigma.size(); ++i) {
    if (out.sigma(i) > tol.rank_rtol * smax && out.sigma(i) > tol.abs_floor) ++r;
  }
  out.rank = r;
  return out;
}

Mat pinv(const Mat& M, const Tol& tol) {
  const SvdRank s = svd_rank(M, tol);
  Mat out = Mat::Zero(M.cols(), M.rows());
  for (Index i = 0; i < s.rank; ++i)
    out += s.V.col(i) * (s.U.col(i).transpose() / s.sigma(i));
  return out;
}

Subspace kernel_basis(const Mat& M, const Tol& tol) {
  if (M.cols() == 0) return zero_space(0);
  if (M.rows() == 0) return full_space(M.cols());
  const SvdRank s = svd_rank(M, tol);
  return Subspace{M.cols(), s.V.rightCols(M.cols() - s.rank)};
}

Subspace image_basis(const Mat& M, const Tol& tol) {
  if (M.rows() == 0) return zero_space(0);
  if (M.cols() == 0) return zero_space(M.rows());
  const SvdRank s = svd_rank(M, tol);
  return Subspace{M.rows(), s.U.leftCols(s.rank)};
}

Subspace intersect(const Subspace& s1, const Subspace& s2, const Tol& tol) {
  if (s1.ambient_dim != s2.ambient_dim)
    throw InputError("intersect: ambient dimensions differ");
  if (s1.dim() == 0 || s2.dim() == 0) return zero_space(s1.ambient_dim);
  // x = B1 a = B2 b  <=>  [B1, -B2] [a; b] = 0
  Mat stacked(s1.ambient_dim, s1.dim() + s2.dim());
  stacked << s1.basis, -s2.basis;
  const Subspace ker = kernel_basis(stacked, tol);
  if (ker.dim() == 0) return zero_space(s1.ambient_dim);
  return image_basis(s1.basis * ker.basis.topRows(s1.dim()), tol);
}

Subspace preimage(const Mat& M, const Subspace& s, const Tol& tol) {
  if (s.ambient_dim != M.rows())
    throw InputError("preimage: map and subspace dimensions differ");
  // {x : Mx in S} = ker((I - P_S) M)
  const Mat residual_map = M - s.basis * (s.basis.transpose() * M);
  return kernel_basis(residual_map, tol);
}

bool contains(const Subspace& s, const Vec& v, const Tol& tol) {
  if (v.size() != s.ambient_dim)
    throw InputError("contains: vector length differs from ambient dimension");
  const Vec residual = v - s.basis * (s.basis.transpose() * v);
  return residual.norm() <= tol.rank_rtol * std::max(1.0, v.norm());
}

bool same_span(const Subspace& s1, const Subspace& s2, double tol) {
  if (s1.ambient_dim != s2.ambient_dim) return false;
  return (s1.projector() - s2.projector()).norm() <= tol;
}

}  // namespace daeobs
