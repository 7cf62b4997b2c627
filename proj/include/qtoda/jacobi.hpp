#pragma once

#include <cstddef>
#include <vector>

namespace qtoda {

/// Eigenvalues of a dense symmetric matrix (row-major, dim x dim) by the
/// cyclic Jacobi rotation method, sorted ascending.  Terminates when the
/// off-diagonal Frobenius norm drops below 1e-13 of the matrix Frobenius
/// norm; throws on failure to converge within the sweep cap.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim);

}  // namespace qtoda
