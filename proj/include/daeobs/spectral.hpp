#pragma once

#include <Eigen/Core>

#include "daeobs/matrix_tools.hpp"

namespace daeobs {

using MatC = Eigen::MatrixXcd;

/// Complex Schur form A = U T U^H with the eigenvalues satisfying
/// Re(lambda) < -margin moved to the leading diagonal positions.
struct OrderedSchur {
  MatC U;
  MatC T;
  Index n_stable = 0;
};

OrderedSchur ordered_schur_stable_first(const Mat& A, double margin);

/// Real orthonormal basis of the largest A-invariant subspace on which A is
/// stable (eigenvalues with real part < -margin).
Subspace stable_invariant_subspace(const Mat& A, double margin,
                                   const Tol& tol = {});

/// Largest real part over the spectrum of A.
double spectral_abscissa(const Mat& A);

/// Solves A' X + X A + C = 0 for symmetric X; requires A Hurwitz.
Mat lyap_continuous(const Mat& A, const Mat& C);

}  // namespace daeobs
