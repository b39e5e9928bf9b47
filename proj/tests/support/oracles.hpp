#pragma once

// Seeded generators and independent reference computations for tests.
//
// Nothing here calls the library's quadrature, Fourier or geometry code:
// support functions are summed term by term and integrals go through
// Boost's adaptive Gauss-Kronrod rule.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle
{
inline constexpr double pi = std::numbers::pi;

//! SplitMix64; small, fast and fully specified so sequences never change.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    //! Uniform in [0, 1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int index(int n) { return static_cast<int>(uniform() * n); }

  private:
    std::uint64_t state_;
};

//! h(t) = a0 + sum_k a_k cos(k t) + b_k sin(k t), k starting at 1.
struct Fourier
{
    double a0 = 1;
    std::vector<double> a;
    std::vector<double> b;

    double h(double t) const
    {
        double s = a0;
        for (std::size_t k = 0; k < a.size(); ++k)
            s += a[k] * std::cos((k + 1) * t) + b[k] * std::sin((k + 1) * t);
        return s;
    }
    double dh(double t) const
    {
        double s = 0;
        for (std::size_t k = 0; k < a.size(); ++k)
        {
            double const m = k + 1.0;
            s += m * (-a[k] * std::sin(m * t) + b[k] * std::cos(m * t));
        }
        return s;
    }
    //! Radius of curvature h + h''
    double f(double t) const
    {
        double s = a0;
        for (std::size_t k = 0; k < a.size(); ++k)
        {
            double const m = k + 1.0;
            s += (1 - m * m) * (a[k] * std::cos(m * t) + b[k] * std::sin(m * t));
        }
        return s;
    }
    double min_f(int samples = 20000) const
    {
        double m = INFINITY;
        for (int i = 0; i < samples; ++i)
            m = std::min(m, f(2 * pi * i / samples));
        return m;
    }
};

//! Random perturbation of the unit disc with harmonics 2..max_k bounded by
//! scale / k^3; h + h'' >= 1 - sqrt(2) scale sum 1/k stays well above 0 for
//! the defaults.
inline Fourier random_fourier(Rng& rng, int max_k = 6, double scale = 0.12)
{
    Fourier out;
    out.a.assign(max_k, 0.0);
    out.b.assign(max_k, 0.0);
    for (int k = 2; k <= max_k; ++k)
    {
        double const bound = scale / (k * k * k);
        out.a[k - 1] = rng.uniform(-bound, bound);
        out.b[k - 1] = rng.uniform(-bound, bound);
    }
    return out;
}

//! Adaptive 1D integral over one period.
template<class F>
double integrate_period(F&& g, double lo = 0, double hi = 2 * pi)
{
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 61>::integrate(g, lo, hi, 12, 1e-14);
}

//! as_p of a planar Fourier body via its sphere form.
inline double asp_fourier(Fourier const& body, double p)
{
    double const n = 2;
    if (std::isinf(p))
        return integrate_period([&](double t) { return std::pow(body.h(t), -n); });
    double const a = n / (n + p);
    double const c = -n * (p - 1) / (n + p);
    return integrate_period([&](double t) {
        return std::pow(body.f(t), a) * std::pow(body.h(t), c);
    });
}

//! Area enclosed by the Fourier body, (1/2) \int h f dt.
inline double area_fourier(Fourier const& body)
{
    return 0.5 * integrate_period([&](double t) { return body.h(t) * body.f(t); });
}

//! as_p of the ellipse with semi-axes a, b: 2 pi (ab)^{(2-p)/(2+p)}.
inline double asp_ellipse(double a, double b, double p)
{
    if (std::isinf(p))
        return 2 * pi / (a * b);
    return 2 * pi * std::pow(a * b, (2 - p) / (2 + p));
}

//! Support function and radius of curvature of an axis-aligned ellipse.
inline double h_ellipse(double a, double b, double t)
{
    return std::sqrt(a * a * std::cos(t) * std::cos(t) + b * b * std::sin(t) * std::sin(t));
}
inline double f_ellipse(double a, double b, double t)
{
    double const h = h_ellipse(a, b, t);
    return a * a * b * b / (h * h * h);
}

//! Area of the circular segment of the unit disc at distance d from the
//! center (half-angle acos d).
inline double disc_segment_area(double d)
{
    return std::acos(d) - d * std::sqrt(1 - d * d);
}

//! Same segment in terms of the depth 1 - d, without cancellation:
//! (x - sin x) / 2 with x = 4 asin(sqrt(depth / 2)), summed as a series.
inline double disc_segment_area_depth(double depth)
{
    double const x = 4 * std::asin(std::sqrt(depth / 2));
    if (x > 0.5)
        return 0.5 * (x - std::sin(x));
    double term = x * x * x / 6;
    double sum = 0;
    for (int k = 3; std::abs(term) > 1e-18 * sum; k += 2)
    {
        sum += term;
        term *= -x * x / ((k + 1) * (k + 2));
    }
    return 0.5 * sum;
}

//! Solve g(x) = target for increasing g on [lo, hi] by plain bisection.
template<class G>
double bisect(G&& g, double target, double lo, double hi)
{
    for (int i = 0; i < 200; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        (g(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline double rel(double x, double ref)
{
    return std::abs(x - ref) / std::abs(ref);
}

}  // namespace oracle
