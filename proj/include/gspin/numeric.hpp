#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace gspin {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CMatrix = std::vector<std::vector<std::complex<double>>>;

bool is_hermitian(const CMatrix& h, double tol);

// True iff h is Hermitian (within tol) with all eigenvalues >= -tol.
// Throws NumericError("not-hermitian") otherwise.
bool psd_check(const CMatrix& h, double tol);

// Numerical rank at tolerance via SVD.
long numeric_rank(const CMatrix& m, double tol);

}  // namespace gspin
