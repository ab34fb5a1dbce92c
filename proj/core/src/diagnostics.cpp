#include "twistqa/diagnostics.hpp"

#include <cmath>
#include <string>

#include "twistqa/error.hpp"

namespace tqa {

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ab rho(a,b) rho(b,a)
  return rho.matrix().cwiseProduct(rho.matrix().transpose()).sum().real();
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw DimensionError("overlap: vectors differ in length");
  for (const StateVector* v : {&a, &b}) {
    if (std::abs(v->norm() - 1.0) > 1e-9) {
      throw DomainError("overlap: state not normalized (norm " + std::to_string(v->norm()) + ")");
    }
  }
  // Fixed argument order so swapping the inputs gives a bit-identical result.
  const auto less = [](const StateVector& x, const StateVector& y) {
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      if (x(k).real() != y(k).real()) return x(k).real() < y(k).real();
      if (x(k).imag() != y(k).imag()) return x(k).imag() < y(k).imag();
    }
    return false;
  };
  return less(b, a) ? std::abs(b.dot(a)) : std::abs(a.dot(b));
}

double estimation_error(double e_ann, double e_exact) { return std::abs(e_ann - e_exact); }

}  // namespace tqa
