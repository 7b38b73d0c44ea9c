#pragma once

#include <Eigen/Core>

#include "daeobs/errors.hpp"

namespace daeobs {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical tolerances for rank decisions. A singular value counts towards
/// the rank if it exceeds both rank_rtol * sigma_max and abs_floor.
struct Tol {
  double rank_rtol = 1e-10;
  double abs_floor = 1e-12;
};

/// A linear subspace of R^ambient_dim, stored as an orthonormal column basis.
/// The zero subspace has a basis with zero columns.
struct Subspace {
  Index ambient_dim = 0;
  Mat basis;  // ambient_dim x dim, orthonormal columns

  Index dim() const { return basis.cols(); }
  Mat projector() const { return basis * basis.transpose(); }
};

Subspace full_space(Index ambient_dim);
Subspace zero_space(Index ambient_dim);

struct SvdRank {
  Index rank = 0;
  Mat U;      // full, rows x rows
  Vec sigma;  // min(rows, cols) singular values, descending
  Mat V;      // full, cols x cols
};

/// Full SVD with an explicit numerical rank decision.
SvdRank svd_rank(const Mat& M, const Tol& tol = {});

/// Moore-Penrose pseudoinverse through the rank-truncated SVD.
Mat pinv(const Mat& M, const Tol& tol = {});

/// Orthonormal basis of {x : Mx = 0}.
Subspace kernel_basis(const Mat& M, const Tol& tol = {});

/// Orthonormal basis of the column space of M.
Subspace image_basis(const Mat& M, const Tol& tol = {});

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& s1, const Subspace& s2, const Tol& tol = {});

/// Preimage {x : Mx in S}; S lives in the row space side (S.ambient_dim ==
/// M.rows()).
Subspace preimage(const Mat& M, const Subspace& s, const Tol& tol = {});

/// Membership test: ||(I - P_S) v|| <= rank_rtol * max(1, ||v||).
bool contains(const Subspace& s, const Vec& v, const Tol& tol = {});

/// Span equality up to tolerance, measured as projector difference norm.
bool same_span(const Subspace& s1, const Subspace& s2, double tol = 1e-10);

}  // namespace daeobs
