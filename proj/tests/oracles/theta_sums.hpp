#pragma once

// Reference theta data from the Jacobi triple-product sums. Shares no code
// with the product-formula engine: plain mpq_class arrays indexed [z^d][q^{k/8}].

#include <gmpxx.h>

#include <vector>

namespace oracle {

struct Biv {
  int z_bound = 0;
  int q_bound = 0;
  std::vector<std::vector<mpq_class>> c;

  Biv(int z, int q) : z_bound(z), q_bound(q), c(z + 1, std::vector<mpq_class>(q + 1)) {}

  Biv operator*(const Biv& o) const;
  Biv inverse() const;
};

enum class Null { Theta1, Theta2, Theta3, ThetaPrime };
enum class Factor { A, T1, T2, T3, D };

/// Null values with the engine's normalization stripped (θ₁/2 and θ'/(2π)).
std::vector<mpq_class> theta_null(Null which, int order);
Biv theta_factor(Factor which, int order, int z_bound);

}  // namespace oracle
