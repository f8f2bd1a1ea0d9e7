#include "runnerbench/benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace runnerbench::bench {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSchwefelOffset = 418.98288727243369;
constexpr double kSchwefelArgmin = 420.9687462275036;

constexpr std::array<FunctionInfo, 18> kCatalogue{{
    {1, "Sphere", -100.0, 100.0, Classification::US, 0.0, false, 0},
    {2, "Elliptic", -100.0, 100.0, Classification::US, 0.0, false, 0},
    {3, "Axis Parallel Hyperellipsoid", -10.0, 10.0, Classification::US, 0.0, false, 0},
    {4, "Step", -100.0, 100.0, Classification::US, 0.0, false, 0},
    {5, "De Jong 4 (no noise)", -1.28, 1.28, Classification::US, 0.0, false, 0},
    {6, "Quartic (noise)", -1.28, 1.28, Classification::US, 0.0, true, 0},
    {7, "Sum of Different Powers", -10.0, 10.0, Classification::UN, 0.0, false, 0},
    {8, "Schwefel 2.22", -10.0, 10.0, Classification::UN, 0.0, false, 0},
    {9, "Schwefel 2.21", -100.0, 100.0, Classification::UN, 0.0, false, 0},
    {10, "Rosenbrock", -10.0, 10.0, Classification::UN, 0.0, false, 0},
    {11, "Rastrigin", -5.12, 5.12, Classification::MS, 0.0, false, 0},
    {12, "Non-Continuous Rastrigin", -5.12, 5.12, Classification::M, 0.0, false, 0},
    {13, "Griewank", -600.0, 600.0, Classification::MN, 0.0, false, 0},
    {14, "Schwefel", -500.0, 500.0, Classification::MS, 0.0, false, 0},
    {15, "Ackley", -32.0, 32.0, Classification::MN, 0.0, false, 0},
    {16, "Alpine", -10.0, 10.0, Classification::M, 0.0, false, 0},
    {17, "Weierstrass", -0.5, 0.5, Classification::M, 0.0, false, 0},
    {18, "Schaffer", -100.0, 100.0, Classification::MN, 0.0, false, 0},
}};

constexpr std::array<FunctionInfo, 8> kDim2Catalogue{{
    {101, "Six-Hump Camel Back", -3.0, 2.0, Classification::MN, -1.0316, false, 2},
    {102, "Branin", -5.0, 15.0, Classification::MN, 0.397887, false, 2},
    {103, "Easom", -100.0, 100.0, Classification::UN, -1.0, false, 2},
    {104, "Goldstein-Price", -2.0, 2.0, Classification::MN, 3.0, false, 2},
    {105, "Martin-Gaddy", -20.0, 20.0, Classification::UN, 0.0, false, 2},
    {106, "Rastrigin 2-D", -10.0, 10.0, Classification::MS, 0.0, false, 2},
    {107, "Rosenbrock 2-D", -5.0, 10.0, Classification::UN, 0.0, false, 2},
    {108, "Schwefel 2-D", -500.0, 500.0, Classification::MS, -837.9658, false, 2},
}};

double f_sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double f_elliptic(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 1) return x[0] * x[0];
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double exponent = static_cast<double>(i) / static_cast<double>(n - 1);
        s += std::pow(1e6, exponent) * x[i] * x[i];
    }
    return s;
}

double f_axis_hyperellipsoid(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::pow(std::abs(x[i]), static_cast<double>(i + 2)); // |x_i|^(i+1), 1-based i
    }
    return s;
}

double f_step(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        const double t = std::floor(v + 0.5);
        s += t * t;
    }
    return s;
}

double f_dejong4(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        s += static_cast<double>(i + 1) * sq * sq;
    }
    return s;
}

double f_sum_powers(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += static_cast<double>(i + 1) * x[i] * x[i];
    }
    return s;
}

double f_schwefel_222(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        const double a = std::abs(v);
        sum += a;
        prod *= a;
    }
    return sum + prod;
}

double f_schwefel_221(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double f_rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double f_rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    }
    return s;
}

double f_noncontinuous_rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        // round(2x)/2 with ties away from zero once |x| reaches 1/2
        const double y = std::abs(v) < 0.5 ? v : std::round(2.0 * v) / 2.0;
        s += y * y - 10.0 * std::cos(2.0 * kPi * y) + 10.0;
    }
    return s;
}

double f_griewank(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

double f_schwefel(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
    return kSchwefelOffset * static_cast<double>(x.size()) - s;
}

double f_ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double f_alpine(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v * std::sin(v) + 0.1 * v);
    return s;
}

// Inner Weierstrass series; the subtracted constant reuses this exact code
// path so f(0) cancels to zero.
double weierstrass_term(double t) {
    constexpr double a = 0.5;
    constexpr double b = 3.0;
    constexpr int k_max = 20;
    double s = 0.0;
    double ak = 1.0;
    double bk = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        s += ak * std::cos(2.0 * kPi * bk * (t + 0.5));
        ak *= a;
        bk *= b;
    }
    return s;
}

double f_weierstrass(std::span<const double> x) {
    static const double term_at_zero = weierstrass_term(0.0);
    double s = 0.0;
    for (double v : x) s += weierstrass_term(v);
    return s - static_cast<double>(x.size()) * term_at_zero;
}

double f_schaffer(std::span<const double> x) {
    const double sq = f_sphere(x);
    const double num = std::sin(std::sqrt(sq));
    const double den = 1.0 + 0.001 * sq;
    return 0.5 + (num * num - 0.5) / (den * den);
}

double f_camel(std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double a2 = a * a;
    const double b2 = b * b;
    return (4.0 - 2.1 * a2 + a2 * a2 / 3.0) * a2 + a * b + (-4.0 + 4.0 * b2) * b2;
}

double f_branin(std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double t1 = b - 5.1 / (4.0 * kPi * kPi) * a * a + 5.0 / kPi * a - 6.0;
    return t1 * t1 + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(a) + 10.0;
}

double f_easom(std::span<const double> x) {
    const double a = x[0] - kPi;
    const double b = x[1] - kPi;
    return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-(a * a + b * b));
}

double f_goldstein_price(std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double u = a + b + 1.0;
    const double v = 2.0 * a - 3.0 * b;
    const double t1 = 1.0 + u * u * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    const double t2 = 30.0 + v * v * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    return t1 * t2;
}

double f_martin_gaddy(std::span<const double> x) {
    const double d = x[0] - x[1];
    const double s = (x[0] + x[1] - 10.0) / 3.0;
    return d * d + s * s;
}

double f_schwefel_2d(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
    return -s;
}

double dispatch(int id, std::span<const double> x, Rng& rng) {
    switch (id) {
        case 1: return f_sphere(x);
        case 2: return f_elliptic(x);
        case 3: return f_axis_hyperellipsoid(x);
        case 4: return f_step(x);
        case 5: return f_dejong4(x);
        case 6: return f_dejong4(x) + rng.uniform01();
        case 7: return f_sum_powers(x);
        case 8: return f_schwefel_222(x);
        case 9: return f_schwefel_221(x);
        case 10: return f_rosenbrock(x);
        case 11: return f_rastrigin(x);
        case 12: return f_noncontinuous_rastrigin(x);
        case 13: return f_griewank(x);
        case 14: return f_schwefel(x);
        case 15: return f_ackley(x);
        case 16: return f_alpine(x);
        case 17: return f_weierstrass(x);
        case 18: return f_schaffer(x);
        case 101: return f_camel(x);
        case 102: return f_branin(x);
        case 103: return f_easom(x);
        case 104: return f_goldstein_price(x);
        case 105: return f_martin_gaddy(x);
        case 106: return f_rastrigin(x);
        case 107: return f_rosenbrock(x);
        case 108: return f_schwefel_2d(x);
        default: throw std::invalid_argument("unhandled function id");
    }
}

} // namespace

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::US: return "US";
        case Classification::UN: return "UN";
        case Classification::MS: return "MS";
        case Classification::MN: return "MN";
        case Classification::M: return "M";
    }
    return "?";
}

std::span<const FunctionInfo> catalogue() noexcept { return kCatalogue; }

std::span<const FunctionInfo> dim2_catalogue() noexcept { return kDim2Catalogue; }

const FunctionInfo& lookup(int id) {
    if (id >= 1 && id <= 18) return kCatalogue[static_cast<std::size_t>(id - 1)];
    if (id >= 101 && id <= 108) return kDim2Catalogue[static_cast<std::size_t>(id - 101)];
    std::ostringstream msg;
    msg << "unknown function id " << id << "; valid ids are 1..18 and 101..108";
    throw std::invalid_argument(msg.str());
}

Problem make_problem(int id, int dim) {
    const FunctionInfo& info = lookup(id);
    if (dim < 1) throw std::invalid_argument("function dimension must be >= 1");
    if (info.fixed_dim != 0 && dim != info.fixed_dim) {
        std::ostringstream msg;
        msg << "function " << info.id << " (" << info.name << ") is fixed at dimension "
            << info.fixed_dim;
        throw std::invalid_argument(msg.str());
    }
    const int fid = info.id;
    return Problem(fid, std::string(info.name), SearchSpace::symmetric(info.lower, info.upper, dim),
                   [fid](std::span<const double> x, Rng& rng) { return dispatch(fid, x, rng); },
                   info.min_value, info.stochastic);
}

std::vector<double> known_minimizer(int id, int dim) {
    const FunctionInfo& info = lookup(id);
    if (info.fixed_dim != 0 && dim != info.fixed_dim) {
        throw std::invalid_argument("known_minimizer: dimension mismatch for fixed-dim function");
    }
    const std::size_t n = static_cast<std::size_t>(dim);
    switch (info.id) {
        case 10:
        case 107: return std::vector<double>(n, 1.0);
        case 14:
        case 108: return std::vector<double>(n, kSchwefelArgmin);
        case 101: return {0.08984201368301331, -0.7126564032704135};
        case 102: return {kPi, 2.275};
        case 103: return {kPi, kPi};
        case 104: return {0.0, -1.0};
        case 105: return {5.0, 5.0};
        default: return std::vector<double>(n, 0.0);
    }
}

} // namespace runnerbench::bench
