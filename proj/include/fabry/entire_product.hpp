#pragma once

#include <complex>
#include <vector>

#include "fabry/index_set.hpp"

namespace fabry {

/// F(z) = prod_{t in S} (1 - z^2 / t^2) for a set S of positive integers
/// known up to its horizon. Zeros past `truncation` are replaced by a
/// continuous zero density `tail_density`.
struct ProductSpec {
    IndexSet zeros;
    double tail_density = 0.0;
    Index truncation = 0;
};

/// Validates the spec (zeros >= 1, density in [0,1], truncation within the
/// horizon) and returns it unchanged; throws std::invalid_argument otherwise.
ProductSpec make_product_spec(IndexSet zeros, double tail_density, Index truncation);

/// Every evaluation point must satisfy truncation >= kTruncationRatio * |z|.
inline constexpr double kTruncationRatio = 20.0;

/// Immutable evaluator for one ProductSpec. All methods are const and safe to
/// call concurrently. Sums run over ascending t in fixed-size blocks, each
/// block compensated, blocks combined in order, so the result does not depend
/// on the caller.
class ProductEvaluator {
public:
    explicit ProductEvaluator(ProductSpec spec);

    const ProductSpec& spec() const noexcept { return spec_; }

    /// log|F(z)|; -inf exactly on a zero. Bit-identical under z -> -z and
    /// z -> conj(z).
    double log_abs(std::complex<double> z) const;

    /// Signed F(m); exact 0 for m in S.
    double at_integer(Index m) const;

    /// Re of the continuous-density model of sum_{t > T} log(1 - z^2/t^2).
    double tail(std::complex<double> z) const;

    /// Start of the modelled tail: the next zero is expected half a mean
    /// spacing after the last enumerated one, and never before T.
    double tail_anchor() const noexcept { return anchor_; }

    /// Throws TruncationInsufficient unless truncation >= 20 * modulus.
    void check_truncation(double modulus) const;

private:

    ProductSpec spec_;
    std::vector<double> zeros_;      // S ∩ [1, T] as doubles
    std::vector<double> log_table_;  // log k, k = 0 .. T + T/20 + 1
    double anchor_ = 0.0;
};

double eval_log_abs(const ProductSpec& spec, std::complex<double> z);
double eval_at_integer(const ProductSpec& spec, Index m);

/// log|F(t e^{i theta})| / t along a ray, and the exponential growth rate
/// extracted from the upper half of the radius grid.
struct IndicatorSample {
    double theta = 0.0;
    std::vector<double> t;
    std::vector<double> values;
    /// Slope h of the least-squares fit log|F| = h t + a log t + b over the
    /// upper half of the grid.
    double estimate = 0.0;
    /// Plain maximum of the values over the upper half of the grid.
    double raw_max = 0.0;
    /// pi * tail_density * |sin theta|, the growth rate of a density-rho
    /// product along this ray.
    double reference = 0.0;
};

struct IndicatorOptions {
    int grid_points = 96;
    double t_min = 1.0;
    // Grid points closer than this to a zero (on the real axis) are skipped.
    double exclusion_radius = 0.25;
};

IndicatorSample indicator_estimate(const ProductEvaluator& product, double theta, double t_max,
                                   const IndicatorOptions& options = {});
IndicatorSample indicator_estimate(const ProductSpec& spec, double theta, double t_max,
                                   const IndicatorOptions& options = {});

/// u_m(z) = log|F(m z)| / m.
double scaled_log_modulus(const ProductEvaluator& product, Index m, std::complex<double> z);
double scaled_log_modulus(const ProductSpec& spec, Index m, std::complex<double> z);

/// #(S ∩ [c, d]); these are exactly the real zeros of F in [c, d], all simple.
Index zero_count_interval(const ProductSpec& spec, double c, double d);

/// #(S ∩ [m, (1+r)m]) / m.
double scaled_zero_measure(const ProductSpec& spec, Index m, double r);

/// Map an angle into (-pi, pi].
double normalize_angle(double theta);

}  // namespace fabry
