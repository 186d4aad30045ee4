#ifndef KMWEYL_NUMERIC_HPP
#define KMWEYL_NUMERIC_HPP

#include <complex>
#include <vector>

#include "kmweyl/exact.hpp"

namespace kmweyl {

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

/// Full eigendecomposition of a dense symmetric matrix by cyclic Jacobi
/// rotations. Pairs come back sorted by ascending eigenvalue; eigenvector
/// signs are fixed so the largest-magnitude component is positive.
/// Sweeps until off-diagonal mass is below `tol` (relative).
std::vector<EigenPair> jacobi_eigen(const std::vector<std::vector<double>>& a,
                                    double tol = 1e-14);

/// All complex roots of the integer polynomial
///   c[0] x^n + c[1] x^{n-1} + ... + c[n]
/// by Durand-Kerner iteration carried out at 50 significant digits, rounded
/// to double on return. Roots come back sorted by (real, imag).
std::vector<std::complex<double>> polynomial_roots(const std::vector<Int>& coeffs);

/// |p(z)| for an integer polynomial, coefficients descending.
double polynomial_residual(const std::vector<Int>& coeffs, std::complex<double> z);

} // namespace kmweyl

#endif
