#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "fabry/polynomial_roots.hpp"
#include "fabry/sign_analysis.hpp"

namespace fabry {

/// [L/M] Padé approximant P/Q with Q(0) = 1. When the M x M Toeplitz system is
/// numerically singular the denominator degree is lowered; effective_M
/// records the degree that was actually solved.
template <class Scalar>
struct PadeApproximant {
    int L = 0;
    int M = 0;
    int effective_M = 0;
    std::vector<Scalar> numerator;    // L + 1 coefficients, ascending
    std::vector<Scalar> denominator;  // effective_M + 1 coefficients, denominator[0] == 1
    double condition = 1.0;           // condition number of the accepted system
    bool degenerate = false;          // M > 0 requested but nothing above M = 0 was solvable
};

struct PadeOptions {
    double condition_limit = 1e10;
};

/// Requires L + M <= N. Coefficients past the end of `a` are never read.
template <class Scalar>
PadeApproximant<Scalar> pade(std::span<const Scalar> a, int L, int M, const PadeOptions& options = {});

PadeApproximant<double> pade(const RealSequence& seq, int L, int M, const PadeOptions& options = {});

/// Diagonal degrees floor(N/2) - 1 used by the default probe.
int default_pade_degree(Index last_index);

struct Pole {
    Complex z;
    double weight = 0.0;  // |residue| = |P(z) / Q'(z)|
};

struct FroissartPolicy {
    /// A pole and a numerator zero closer than tol * (1 + |pole|) cancel.
    double doublet_tolerance = 1e-6;
};

template <class Scalar>
std::vector<Pole> poles(const PadeApproximant<Scalar>& approx, const FroissartPolicy& policy = {});

extern template PadeApproximant<double> pade(std::span<const double>, int, int, const PadeOptions&);
extern template PadeApproximant<Complex> pade(std::span<const Complex>, int, int, const PadeOptions&);
extern template std::vector<Pole> poles(const PadeApproximant<double>&, const FroissartPolicy&);
extern template std::vector<Pole> poles(const PadeApproximant<Complex>&, const FroissartPolicy&);

}  // namespace fabry
