#include "rislab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace rislab {

namespace {

constexpr double kTiny = 1e-300;

// Sum of the lower-tail series x^n / ((k+1)(k+2)...(k+n)), n >= 0. Multiplied
// by x^k e^{-x} / Gamma(k+1) this gives P(k, x); converges for x < k+1.
double lower_series_sum(double k, double x)
{
    double denom = k;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 100000; ++n) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (term < sum * 1e-17)
            return sum;
    }
    throw std::runtime_error("incomplete gamma series did not converge");
}

// Modified Lentz continued fraction for Q(k, x), valid for x >= k+1.
double upper_cf(double k, double x)
{
    const double log_prefactor = k * std::log(x) - x - std::lgamma(k);
    if (log_prefactor < -745.0)
        return 0.0;

    double b = x + 1.0 - k;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 100000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - k);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return std::exp(log_prefactor) * h;
    }
    throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

// e^{-y} I_n(y) for n in {0, 1}. Direct product below the overflow margin,
// the large-argument expansion otherwise.
double scaled_bessel_i(int order, double y)
{
    if (y < 340.0)
        return std::cyl_bessel_i(order, y) * std::exp(-y);

    const double mu = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= 8; ++j) {
        const double odd = 2.0 * j - 1.0;
        term *= -(mu - odd * odd) / (8.0 * y * j);
        sum += term;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * y);
}

double kummer_half_series(double x)
{
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 400; ++n) {
        term *= (n - 0.5) * (-x) / ((n + 1.0) * (n + 1.0));
        sum += term;
        if (n > 4 && std::fabs(term) <= 1e-17 * std::fabs(sum))
            break;
    }
    return sum;
}

} // namespace

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double reg_upper_gamma_q(double shape, double x)
{
    if (!(shape > 0.0))
        throw std::domain_error("reg_upper_gamma_q: shape must be positive");
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("reg_upper_gamma_q: x must be nonnegative");
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;

    if (x < shape + 1.0) {
        const double log_p = shape * std::log(x) - x - std::lgamma(shape + 1.0) +
                             std::log(lower_series_sum(shape, x));
        return 1.0 - std::exp(log_p);
    }
    return upper_cf(shape, x);
}

double log_reg_lower_gamma(double shape, double x)
{
    if (!(shape > 0.0))
        throw std::domain_error("log_reg_lower_gamma: shape must be positive");
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("log_reg_lower_gamma: x must be nonnegative");
    if (x == 0.0)
        return -std::numeric_limits<double>::infinity();
    if (std::isinf(x))
        return 0.0;

    if (x < shape + 1.0)
        return shape * std::log(x) - x - std::lgamma(shape + 1.0) +
               std::log(lower_series_sum(shape, x));
    return std::log1p(-upper_cf(shape, x));
}

double kummer_half(double x)
{
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("kummer_half: argument must be nonnegative");
    if (x < 20.0)
        return kummer_half_series(x);
    const double y = 0.5 * x;
    return (1.0 + x) * scaled_bessel_i(0, y) + x * scaled_bessel_i(1, y);
}

namespace {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights; // sum to 2
};

GaussLegendreRule gauss_legendre(int n)
{
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p_deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            p_deriv = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / p_deriv;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * p_deriv * p_deriv);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

template <typename F>
double integrate_panel(const GaussLegendreRule& rule, const F& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

struct Panel {
    double a, b;
    double estimate;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

} // namespace

double expected_log1p_gamma(double shape, double scale, const QuadratureSpec& quad)
{
    if (!(shape > 0.0))
        throw std::domain_error("expected_log1p_gamma: shape must be positive");
    if (!(scale > 0.0))
        throw std::domain_error("expected_log1p_gamma: scale must be positive");
    if (quad.node_count < 16)
        throw std::domain_error("expected_log1p_gamma: node_count must be at least 16");
    if (!(quad.relative_tolerance > 0.0) || quad.relative_tolerance > 1e-4)
        throw std::domain_error("expected_log1p_gamma: tolerance must lie in (0, 1e-4]");

    const double log_norm = std::lgamma(shape);
    const auto integrand = [&](double s) {
        if (s <= 0.0)
            return 0.0;
        const double log_pdf = (shape - 1.0) * std::log(s) - s - log_norm;
        if (log_pdf < -745.0)
            return 0.0;
        const double ws = scale * s;
        const double value =
            ws > 1e15 ? std::log(scale) + std::log(s) : std::log1p(ws);
        return value * std::exp(log_pdf);
    };

    // Truncation point far into the Gamma tail. The neglected mass is bounded
    // by (log1p(scale * upper) + 1) * Q(shape, upper).
    double upper = shape + 40.0 * std::sqrt(shape) + 60.0;

    const auto coarse = gauss_legendre(quad.node_count / 2);
    const auto fine = gauss_legendre(quad.node_count);
    const auto make_panel = [&](double a, double b) {
        const double est = integrate_panel(fine, integrand, a, b);
        const double ref = integrate_panel(coarse, integrand, a, b);
        return Panel{a, b, est, std::fabs(est - ref)};
    };

    // Seed with dyadically refined panels toward zero so that small-shape
    // integrands (unbounded derivative at the origin) start well resolved.
    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_error = 0.0;
    double edge = upper;
    for (int level = 0; level < 40 && edge > 1e-12 * upper; ++level) {
        const double lo = edge * 0.5;
        const auto p = make_panel(lo, edge);
        total += p.estimate;
        total_error += p.error;
        panels.push(p);
        edge = lo;
    }
    {
        const auto p = make_panel(0.0, edge);
        total += p.estimate;
        total_error += p.error;
        panels.push(p);
    }

    const int max_splits = 20000;
    int splits = 0;
    const auto tolerance_met = [&] {
        return total_error <=
               quad.relative_tolerance * std::max(std::fabs(total), kTiny);
    };
    while (!tolerance_met() && splits < max_splits) {
        const Panel worst = panels.top();
        panels.pop();
        total -= worst.estimate;
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const auto& half : {make_panel(worst.a, mid), make_panel(mid, worst.b)}) {
            total += half.estimate;
            total_error += half.error;
            panels.push(half);
        }
        ++splits;
    }

    if (!std::isfinite(total))
        throw QuadratureError("expected_log1p_gamma: integrand evaluation overflowed",
                              total, std::numeric_limits<double>::infinity());
    if (!tolerance_met())
        throw QuadratureError("expected_log1p_gamma: requested tolerance not reached",
                              total, total_error / std::max(std::fabs(total), kTiny));

    const double tail_bound =
        (std::log1p(std::min(scale, 1e300) * upper) + 1.0) * reg_upper_gamma_q(shape, upper);
    if (tail_bound > quad.relative_tolerance * std::max(std::fabs(total), kTiny) &&
        tail_bound > 1e-300)
        throw QuadratureError("expected_log1p_gamma: tail truncation exceeds tolerance",
                              total, tail_bound / std::max(std::fabs(total), kTiny));

    return total;
}

} // namespace rislab
