#pragma once

#include "twistqa/dense.hpp"
#include "twistqa/density_matrix.hpp"

namespace tqa {

struct MeritReport {
  double purity = 1.0;
  double overlap = 0.0;
  double energy = 0.0;
  double estimation_error = 0.0;
};

// Re Tr(rho^2).
double purity(const DensityMatrix& rho);

// |<a|b>|. Throws DomainError unless both vectors are normalized to 1e-9.
double overlap(const StateVector& a, const StateVector& b);

// |e_ann - e_exact|.
double estimation_error(double e_ann, double e_exact);

}  // namespace tqa
