#include "vcoh/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vcoh {

double DensityMatrix3::hermiticityError() const {
  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) err = std::max(err, std::abs(m[i][j] - std::conj(m[j][i])));
  return err;
}

std::array<double, 3> DensityMatrix3::eigenvalues() const { return hermitianEigenvalues3(m); }

std::array<double, 3> hermitianEigenvalues3(const std::array<std::array<cplx, 3>, 3>& in) {
  using Mat = std::array<std::array<cplx, 3>, 3>;
  Mat a{};
  for (int i = 0; i < 3; ++i) {
    a[i][i] = in[i][i].real();
    for (int j = i + 1; j < 3; ++j) {
      a[i][j] = in[i][j];
      a[j][i] = std::conj(in[i][j]);
    }
  }

  double scale = 0.0;
  for (const auto& row : a)
    for (const auto& z : row) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return {0.0, 0.0, 0.0};

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off <= 1e-17 * scale) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double g = std::abs(a[p][q]);
        if (g <= 1e-300) continue;
        // Phase e^{-i phi} on column q makes a(p,q) real, then a real rotation
        // zeroes it.
        const cplx phase = std::conj(a[p][q]) / g;
        const double app = a[p][p].real();
        const double aqq = a[q][q].real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Mat u{};
        for (int k = 0; k < 3; ++k) u[k][k] = 1.0;
        u[p][p] = c;
        u[p][q] = s;
        u[q][p] = -s * phase;
        u[q][q] = c * phase;

        Mat au{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) au[i][j] += a[i][k] * u[k][j];
        Mat next{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) next[i][j] += std::conj(u[k][i]) * au[k][j];
        a = next;
      }
    }
  }

  std::array<double, 3> ev{a[0][0].real(), a[1][1].real(), a[2][2].real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

ValidityReport checkValidity(const DensityMatrix3& rho) {
  return {std::abs(rho.trace() - 1.0), rho.hermiticityError(), rho.minEigenvalue()};
}

DensityMatrix3 densityFromAmplitudes(const AmplitudeVector& amp) {
  if (!amp.finite()) throw Error(ErrorCode::NonFinite, "non-finite amplitude");
  const double n2 = amp.norm2();
  if (n2 > 1.0 + 1e-10) {
    std::ostringstream os;
    os << "atomic amplitudes have squared norm " << n2 << " > 1";
    throw Error(ErrorCode::UnphysicalState, os.str());
  }
  using D = DensityMatrix3;
  DensityMatrix3 rho;
  rho(D::kC, D::kC) = amp.reservoirWeight() + std::norm(amp.dC);
  rho(D::kB, D::kB) = std::norm(amp.dB);
  rho(D::kA, D::kA) = std::norm(amp.dA);
  rho(D::kC, D::kB) = amp.dC * std::conj(amp.dB);
  rho(D::kC, D::kA) = amp.dC * std::conj(amp.dA);
  rho(D::kB, D::kA) = amp.dB * std::conj(amp.dA);
  rho(D::kB, D::kC) = std::conj(rho(D::kC, D::kB));
  rho(D::kA, D::kC) = std::conj(rho(D::kC, D::kA));
  rho(D::kA, D::kB) = std::conj(rho(D::kB, D::kA));
  return rho;
}

double l1Coherence(const DensityMatrix3& rho) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

}  // namespace vcoh
