#pragma once

#include <vector>

namespace persuade {

struct SymmetricEigenResult {
  std::vector<double> eigenvalues;               // descending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs eigenvalues[i]
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Deterministic:
/// fixed sweep order, eigenpairs sorted by value descending (index ascending
/// on ties). Matrix must be square and symmetric.
SymmetricEigenResult symmetric_eigendecomposition(const std::vector<std::vector<double>>& m);

}  // namespace persuade
