#include "fabry/polynomial_roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace fabry {

namespace {

void polish(std::span<const Complex> coeffs, Complex& root) {
    double residual = std::abs(evaluate_polynomial(coeffs, root));
    for (int iter = 0; iter < 5 && residual > 0.0; ++iter) {
        const Complex slope = evaluate_derivative(coeffs, root);
        if (slope == Complex(0.0)) return;
        const Complex next = root - evaluate_polynomial(coeffs, root) / slope;
        const double next_residual = std::abs(evaluate_polynomial(coeffs, next));
        if (!(next_residual < residual)) return;
        root = next;
        residual = next_residual;
    }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double trim) {
    double scale = 0.0;
    for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {};

    std::size_t degree = coeffs.size();
    while (degree > 0 && std::abs(coeffs[degree - 1]) <= trim * scale) --degree;
    if (degree <= 1) return {};
    --degree;
    const std::span<const Complex> p = coeffs.first(degree + 1);

    std::vector<Complex> roots;
    // Exact zero roots are split off; they are common for even/odd series.
    std::size_t low = 0;
    while (low < degree && p[low] == Complex(0.0)) {
        roots.emplace_back(0.0);
        ++low;
    }
    const std::size_t n = degree - low;
    if (n == 0) return roots;

    const Complex lead = p[degree];
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                        static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -p[low + i] / lead;
    }
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto& values = solver.eigenvalues();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        Complex root = values(i);
        polish(p, root);
        roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::vector<Complex> polynomial_roots(std::span<const double> coeffs, double trim) {
    const std::vector<Complex> promoted(coeffs.begin(), coeffs.end());
    return polynomial_roots(std::span<const Complex>(promoted), trim);
}

}  // namespace fabry
