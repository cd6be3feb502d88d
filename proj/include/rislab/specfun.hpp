#pragma once

#include <stdexcept>
#include <string>

namespace rislab {

// Controls for the expected-log evaluator: points per panel of the adaptive
// Gauss-Legendre scheme and the requested relative tolerance.
struct QuadratureSpec {
    int node_count = 64;
    double relative_tolerance = 1e-9;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_estimate,
                    double achieved_relative_error)
        : std::runtime_error(what), estimate_(achieved_estimate),
          relative_error_(achieved_relative_error)
    {
    }

    double achieved_estimate() const { return estimate_; }
    double achieved_relative_error() const { return relative_error_; }

private:
    double estimate_;
    double relative_error_;
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized upper incomplete Gamma function Q(k, x) = Gamma(k, x) / Gamma(k),
// k > 0, x >= 0. Series for x < k+1, continued fraction otherwise.
double reg_upper_gamma_q(double shape, double x);

// ln P(k, x) with P = 1 - Q, usable deep in the lower tail where P underflows.
double log_reg_lower_gamma(double shape, double x);

// Confluent hypergeometric value 1F1(-1/2; 1; -x) for x >= 0: the Rician
// amplitude-mean factor. Power series below x = 20, the Bessel identity
// e^{-x/2} [(1+x) I0(x/2) + x I1(x/2)] above.
double kummer_half(double x);

// E{ln(1 + t)} for t ~ Gamma(shape, scale), in nats. Division by ln 2 turns
// this into the ergodic rate of a Gamma-distributed SNR.
double expected_log1p_gamma(double shape, double scale, const QuadratureSpec& quad = {});

} // namespace rislab
