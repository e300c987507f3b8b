#include "fabry/pade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace fabry {

namespace {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
Scalar coeff(std::span<const Scalar> a, int k) {
    return k < 0 ? Scalar(0) : a[static_cast<std::size_t>(k)];
}

}  // namespace

template <class Scalar>
PadeApproximant<Scalar> pade(std::span<const Scalar> a, int L, int M, const PadeOptions& options) {
    if (L < 0 || M < 0) throw std::invalid_argument("pade: negative degree");
    if (static_cast<std::size_t>(L) + static_cast<std::size_t>(M) + 1 > a.size()) {
        throw std::invalid_argument("pade: L + M = " + std::to_string(L + M) +
                                    " exceeds the last coefficient index " +
                                    std::to_string(static_cast<long>(a.size()) - 1));
    }

    PadeApproximant<Scalar> out;
    out.L = L;
    out.M = M;

    int m = M;
    Vector<Scalar> q;
    while (m > 0) {
        // sum_{j=1..m} q_j a_{L+i-j} = -a_{L+i},  i = 1..m
        Matrix<Scalar> system(m, m);
        Vector<Scalar> rhs(m);
        for (int i = 1; i <= m; ++i) {
            rhs(i - 1) = -coeff(a, L + i);
            for (int j = 1; j <= m; ++j) system(i - 1, j - 1) = coeff(a, L + i - j);
        }
        const Eigen::JacobiSVD<Matrix<Scalar>> svd(system);
        const auto& sigma = svd.singularValues();
        const double largest = sigma(0);
        const double smallest = sigma(m - 1);
        const double condition =
            smallest > 0.0 ? largest / smallest : std::numeric_limits<double>::infinity();
        if (largest > 0.0 && condition <= options.condition_limit) {
            q = system.fullPivLu().solve(rhs);
            out.condition = condition;
            break;
        }
        int rank = 0;
        for (Eigen::Index i = 0; i < sigma.size(); ++i) {
            if (sigma(i) > largest / options.condition_limit) ++rank;
        }
        m = std::min(m - 1, rank);
    }

    out.effective_M = m;
    out.degenerate = M > 0 && m == 0;
    out.denominator.assign(static_cast<std::size_t>(m) + 1, Scalar(0));
    out.denominator[0] = Scalar(1);
    for (int j = 1; j <= m; ++j) out.denominator[static_cast<std::size_t>(j)] = q(j - 1);

    out.numerator.assign(static_cast<std::size_t>(L) + 1, Scalar(0));
    for (int k = 0; k <= L; ++k) {
        Scalar sum(0);
        for (int j = 0; j <= std::min(k, m); ++j) sum += out.denominator[static_cast<std::size_t>(j)] * coeff(a, k - j);
        out.numerator[static_cast<std::size_t>(k)] = sum;
    }
    return out;
}

PadeApproximant<double> pade(const RealSequence& seq, int L, int M, const PadeOptions& options) {
    return pade(std::span<const double>(seq.values()), L, M, options);
}

int default_pade_degree(Index last_index) {
    return std::max<int>(0, static_cast<int>(last_index / 2) - 1);
}

template <class Scalar>
std::vector<Pole> poles(const PadeApproximant<Scalar>& approx, const FroissartPolicy& policy) {
    if (approx.effective_M < 1) return {};
    const std::span<const Scalar> den(approx.denominator);
    const std::span<const Scalar> num(approx.numerator);
    const std::vector<Complex> den_roots = polynomial_roots(den);
    std::vector<Complex> num_roots = polynomial_roots(num);

    std::vector<Pole> out;
    for (const Complex& p : den_roots) {
        const double tol = policy.doublet_tolerance * (1.0 + std::abs(p));
        auto nearest = num_roots.end();
        double best = std::numeric_limits<double>::infinity();
        for (auto it = num_roots.begin(); it != num_roots.end(); ++it) {
            const double d = std::abs(*it - p);
            if (d < best) {
                best = d;
                nearest = it;
            }
        }
        if (nearest != num_roots.end() && best < tol) {
            num_roots.erase(nearest);
            continue;
        }
        const Complex slope = evaluate_derivative(den, p);
        const double weight = slope == Complex(0.0)
                                  ? std::numeric_limits<double>::infinity()
                                  : std::abs(evaluate_polynomial(num, p) / slope);
        out.push_back(Pole{p, weight});
    }
    return out;
}

template PadeApproximant<double> pade(std::span<const double>, int, int, const PadeOptions&);
template PadeApproximant<Complex> pade(std::span<const Complex>, int, int, const PadeOptions&);
template std::vector<Pole> poles(const PadeApproximant<double>&, const FroissartPolicy&);
template std::vector<Pole> poles(const PadeApproximant<Complex>&, const FroissartPolicy&);

}  // namespace fabry
