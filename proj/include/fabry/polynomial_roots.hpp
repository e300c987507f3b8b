#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fabry {

using Complex = std::complex<double>;

/// p(z) for coefficients in ascending order (Horner).
template <class Scalar>
Complex evaluate_polynomial(std::span<const Scalar> coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + Complex(*it);
    return acc;
}

/// p'(z) for coefficients in ascending order.
template <class Scalar>
Complex evaluate_derivative(std::span<const Scalar> coeffs, Complex z) {
    Complex acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        acc = acc * z + Complex(coeffs[k]) * static_cast<double>(k);
    }
    return acc;
}

/// Roots of sum_k c_k z^k as eigenvalues of the companion matrix, each
/// polished by a few Newton steps that are kept only if they reduce |p|.
/// Highest-order coefficients with |c_k| <= trim * max|c| are dropped first,
/// so the result has degree-many entries of the trimmed polynomial.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double trim = 1e-14);
std::vector<Complex> polynomial_roots(std::span<const double> coeffs, double trim = 1e-14);

}  // namespace fabry
