// Reduced atomic density matrix and l1-norm coherence.
#pragma once

#include <array>

#include "vcoh/types.hpp"

namespace vcoh {

/// 3x3 atomic density matrix in the basis order {|C>, |B>, |A>}.
struct DensityMatrix3 {
  static constexpr int kC = 0;
  static constexpr int kB = 1;
  static constexpr int kA = 2;

  std::array<std::array<cplx, 3>, 3> m{};

  cplx& operator()(int i, int j) { return m[i][j]; }
  const cplx& operator()(int i, int j) const { return m[i][j]; }

  cplx trace() const { return m[0][0] + m[1][1] + m[2][2]; }
  /// Largest |m(i,j) - conj(m(j,i))|.
  double hermiticityError() const;
  /// Eigenvalues of the Hermitian part, ascending.
  std::array<double, 3> eigenvalues() const;
  double minEigenvalue() const { return eigenvalues()[0]; }
};

struct ValidityReport {
  double traceError = 0.0;
  double hermiticityError = 0.0;
  double minEigenvalue = 0.0;

  bool ok(double traceTol = 1e-10, double hermTol = 1e-12, double eigTol = 1e-10) const {
    return traceError <= traceTol && hermiticityError <= hermTol && minEigenvalue >= -eigTol;
  }
};

ValidityReport checkValidity(const DensityMatrix3& rho);

/// Eigenvalues (ascending) of a Hermitian 3x3 matrix by cyclic Jacobi rotations.
/// Only the upper triangle and the real diagonal are read.
std::array<double, 3> hermitianEigenvalues3(const std::array<std::array<cplx, 3>, 3>& a);

/// Partial trace over the reservoir of the pure atom+field state: the
/// reservoir weight lands in rho(C,C). Throws Error(UnphysicalState) when the
/// atomic norm exceeds 1 by more than 1e-10.
DensityMatrix3 densityFromAmplitudes(const AmplitudeVector& amp);

/// Sum of the moduli of all six off-diagonal entries.
double l1Coherence(const DensityMatrix3& rho);

}  // namespace vcoh
