#include "fabry/entire_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "fabry/compensated_sum.hpp"
#include "fabry/errors.hpp"

namespace fabry {

namespace {

constexpr std::size_t kBlockSize = 1024;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Sums term(i) for i in [0, n) in fixed blocks: compensated within a block,
// then the block totals compensated in block order.
template <class Term>
double blocked_sum(std::size_t n, Term term) {
    CompensatedSum total;
    for (std::size_t begin = 0; begin < n; begin += kBlockSize) {
        const std::size_t end = std::min(n, begin + kBlockSize);
        CompensatedSum block;
        for (std::size_t i = begin; i < end; ++i) block.add(term(i));
        total.add(block.value());
    }
    return total.value();
}

}  // namespace

ProductSpec make_product_spec(IndexSet zeros, double tail_density, Index truncation) {
    if (!zeros.empty() && zeros.elements().front() < 1) {
        throw std::invalid_argument("ProductSpec: zeros must be positive integers (F(0) = 1)");
    }
    if (!(tail_density >= 0.0 && tail_density <= 1.0)) {
        throw std::invalid_argument("ProductSpec: tail_density must lie in [0, 1]");
    }
    if (truncation < 1 || truncation > zeros.horizon()) {
        throw std::invalid_argument("ProductSpec: truncation must lie in [1, horizon]; got " +
                                    std::to_string(truncation) + " with horizon " +
                                    std::to_string(zeros.horizon()));
    }
    return ProductSpec{std::move(zeros), tail_density, truncation};
}

ProductEvaluator::ProductEvaluator(ProductSpec spec) : spec_(std::move(spec)) {
    spec_ = make_product_spec(std::move(spec_.zeros), spec_.tail_density, spec_.truncation);
    const auto truncation = static_cast<double>(spec_.truncation);
    for (const Index t : spec_.zeros.elements()) {
        if (t > spec_.truncation) break;
        zeros_.push_back(static_cast<double>(t));
    }

    const auto table_size =
        static_cast<std::size_t>(spec_.truncation + spec_.truncation / 20 + 2);
    log_table_.resize(table_size);
    log_table_[0] = kNegInf;
    for (std::size_t k = 1; k < table_size; ++k) log_table_[k] = std::log(static_cast<double>(k));

    anchor_ = truncation;
    if (spec_.tail_density > 0.0 && !zeros_.empty()) {
        anchor_ = std::max(truncation, zeros_.back() + 0.5 / spec_.tail_density);
    }
}

void ProductEvaluator::check_truncation(double modulus) const {
    if (static_cast<double>(spec_.truncation) < kTruncationRatio * modulus) {
        throw TruncationInsufficient("truncation T=" + std::to_string(spec_.truncation) +
                                     " is below 20|z| for |z|=" + std::to_string(modulus));
    }
}

double ProductEvaluator::tail(std::complex<double> z) const {
    const double rho = spec_.tail_density;
    if (rho == 0.0) return 0.0;
    const double x = std::abs(z.real());
    const double y = std::abs(z.imag());
    // sum_{t > A} (z/t)^{2k} ~ rho * A * u^k / (2k - 1),  u = z^2 / A^2,
    // expanded in log(1 - w) = -sum w^k / k.
    const double a2 = anchor_ * anchor_;
    const std::complex<double> u((x * x - y * y) / a2, 2.0 * x * y / a2);
    std::complex<double> power = u;
    double series = 0.0;
    for (int k = 1; k <= 4; ++k) {
        series += power.real() / static_cast<double>(k * (2 * k - 1));
        power *= u;
    }
    return -rho * anchor_ * series;
}

double ProductEvaluator::log_abs(std::complex<double> z) const {
    const double x = std::abs(z.real());
    const double y = std::abs(z.imag());
    check_truncation(std::hypot(x, y));

    if (y == 0.0 && std::binary_search(zeros_.begin(), zeros_.end(), x)) return kNegInf;

    const double re2 = x * x - y * y;
    const double im2 = 2.0 * x * y;
    const double sum = blocked_sum(zeros_.size(), [&](std::size_t i) {
        const double t = zeros_[i];
        const double t2 = t * t;
        const double wr = re2 / t2;
        const double wi = im2 / t2;
        if (wr * wr + wi * wi < 0.0625) {
            // |1 - w|^2 = 1 - 2 Re w + |w|^2
            return 0.5 * std::log1p(wr * wr + wi * wi - 2.0 * wr);
        }
        const double dm = t - x;
        const double dp = t + x;
        return 0.5 * (std::log(dm * dm + y * y) + std::log(dp * dp + y * y)) - 2.0 * std::log(t);
    });
    return sum + tail(std::complex<double>(x, y));
}

double ProductEvaluator::at_integer(Index m) const {
    m = m < 0 ? -m : m;
    if (m == 0) return 1.0;
    const auto md = static_cast<double>(m);
    check_truncation(md);

    const auto below = std::lower_bound(zeros_.begin(), zeros_.end(), md);
    if (below != zeros_.end() && *below == md) return 0.0;
    const auto negative_factors = below - zeros_.begin();

    const auto mi = static_cast<std::size_t>(m);
    const double sum = blocked_sum(zeros_.size(), [&](std::size_t i) {
        const auto t = static_cast<std::size_t>(zeros_[i]);
        const std::size_t diff = t > mi ? t - mi : mi - t;
        return log_table_[diff] + log_table_[t + mi] - 2.0 * log_table_[t];
    });
    const double magnitude = std::exp(sum + tail(std::complex<double>(md, 0.0)));
    return negative_factors % 2 == 0 ? magnitude : -magnitude;
}

double eval_log_abs(const ProductSpec& spec, std::complex<double> z) {
    return ProductEvaluator(spec).log_abs(z);
}

double eval_at_integer(const ProductSpec& spec, Index m) {
    return ProductEvaluator(spec).at_integer(m);
}

double normalize_angle(double theta) {
    double r = std::remainder(theta, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

IndicatorSample indicator_estimate(const ProductEvaluator& product, double theta, double t_max,
                                   const IndicatorOptions& options) {
    if (!(t_max > options.t_min) || options.grid_points < 4) {
        throw std::invalid_argument("indicator_estimate: need t_max > t_min and >= 4 grid points");
    }
    product.check_truncation(t_max);

    IndicatorSample sample;
    sample.theta = normalize_angle(theta);
    sample.reference = std::numbers::pi * product.spec().tail_density * std::abs(std::sin(sample.theta));

    const std::complex<double> direction = std::polar(1.0, sample.theta);
    const double log_span = std::log(t_max / options.t_min);
    const auto zeros = product.spec().zeros.elements();
    for (int k = 0; k < options.grid_points; ++k) {
        const double t = k + 1 == options.grid_points
                             ? t_max
                             : options.t_min * std::exp(log_span * k / (options.grid_points - 1));
        const std::complex<double> z = t * direction;
        if (std::abs(z.imag()) < options.exclusion_radius) {
            const double x = std::abs(z.real());
            const std::complex<double> folded(x, z.imag());
            const auto it = std::lower_bound(zeros.begin(), zeros.end(), static_cast<Index>(std::ceil(x)));
            double nearest = std::numeric_limits<double>::infinity();
            if (it != zeros.end()) nearest = std::abs(folded - std::complex<double>(static_cast<double>(*it), 0.0));
            if (it != zeros.begin()) {
                nearest = std::min(nearest, std::abs(folded - std::complex<double>(static_cast<double>(*(it - 1)), 0.0)));
            }
            if (nearest < options.exclusion_radius) continue;
        }
        sample.t.push_back(t);
        sample.values.push_back(product.log_abs(z) / t);
    }

    const std::size_t n = sample.t.size();
    const std::size_t first = n / 2;
    if (n == 0) throw std::invalid_argument("indicator_estimate: every grid point was excluded");
    sample.raw_max = *std::max_element(sample.values.begin() + static_cast<std::ptrdiff_t>(first),
                                       sample.values.end());
    const std::size_t rows = n - first;
    if (rows < 3) {
        sample.estimate = sample.raw_max;
        return sample;
    }
    Eigen::MatrixXd design(rows, 3);
    Eigen::VectorXd rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const double t = sample.t[first + i];
        design(i, 0) = t;
        design(i, 1) = std::log(t);
        design(i, 2) = 1.0;
        rhs(i) = sample.values[first + i] * t;
    }
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
    sample.estimate = coef(0);
    return sample;
}

IndicatorSample indicator_estimate(const ProductSpec& spec, double theta, double t_max,
                                   const IndicatorOptions& options) {
    return indicator_estimate(ProductEvaluator(spec), theta, t_max, options);
}

double scaled_log_modulus(const ProductEvaluator& product, Index m, std::complex<double> z) {
    if (m < 1) throw std::invalid_argument("scaled_log_modulus: m must be positive");
    const auto md = static_cast<double>(m);
    return product.log_abs(md * z) / md;
}

double scaled_log_modulus(const ProductSpec& spec, Index m, std::complex<double> z) {
    return scaled_log_modulus(ProductEvaluator(spec), m, z);
}

Index zero_count_interval(const ProductSpec& spec, double c, double d) {
    if (!(c >= 0.0 && c <= d)) throw std::invalid_argument("zero_count_interval: need 0 <= c <= d");
    return spec.zeros.counting(d) - spec.zeros.count_below(c);
}

double scaled_zero_measure(const ProductSpec& spec, Index m, double r) {
    if (m < 1 || !(r > 0.0)) throw std::invalid_argument("scaled_zero_measure: need m >= 1, r > 0");
    const auto md = static_cast<double>(m);
    return static_cast<double>(zero_count_interval(spec, md, (1.0 + r) * md)) / md;
}

}  // namespace fabry
