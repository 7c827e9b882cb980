#include "vcoh/types.hpp"

#include <cmath>
#include <sstream>

namespace vcoh {

void SystemParams::validate() const {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
    throw Error(ErrorCode::InvalidArgument, "gamma0 must be a finite positive rate");
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw Error(ErrorCode::InvalidArgument, "kappa must be a finite positive rate");
  if (!std::isfinite(delta))
    throw Error(ErrorCode::InvalidArgument, "delta must be finite");
  if (!(std::abs(theta) <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "theta must satisfy |theta| <= 1");
}

bool AmplitudeVector::finite() const {
  auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(dA) && ok(dB) && ok(dC);
}

void MeasurementStrengths::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v >= 0.0 && v < 1.0)) {
      std::ostringstream os;
      os << "measurement strength " << name << " = " << v << " outside [0, 1)";
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  };
  check(p, "p");
  check(q, "q");
  check(pr, "pr");
  check(qr, "qr");
}

}  // namespace vcoh
