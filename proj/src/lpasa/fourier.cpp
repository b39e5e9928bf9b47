#include "fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace lpasa
{
FourierSeries::FourierSeries(double a0, std::vector<double> cos_coeffs,
                             std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs))
{
    if (cos_.size() < sin_.size())
        cos_.resize(sin_.size(), 0.0);
    if (sin_.size() < cos_.size())
        sin_.resize(cos_.size(), 0.0);
}

FourierSeries FourierSeries::fit(std::span<double const> samples,
                                 int harmonics)
{
    auto const m = samples.size();
    if (harmonics < 0 || 2 * static_cast<std::size_t>(harmonics) >= m)
    {
        fail(ErrorCode::config,
             "Fourier fit needs more than 2*harmonics samples");
    }
    double const dt = 2 * std::numbers::pi / static_cast<double>(m);

    double a0 = 0;
    for (double s : samples)
        a0 += s;
    a0 /= static_cast<double>(m);

    std::vector<double> a(harmonics, 0.0);
    std::vector<double> b(harmonics, 0.0);
    for (std::size_t j = 0; j < m; ++j)
    {
        double const t = dt * static_cast<double>(j);
        double const c1 = std::cos(t);
        double const s1 = std::sin(t);
        double ck = c1;
        double sk = s1;
        for (int k = 0; k < harmonics; ++k)
        {
            a[k] += samples[j] * ck;
            b[k] += samples[j] * sk;
            double const next_c = ck * c1 - sk * s1;
            sk = sk * c1 + ck * s1;
            ck = next_c;
        }
    }
    double const scale = 2.0 / static_cast<double>(m);
    for (int k = 0; k < harmonics; ++k)
    {
        a[k] *= scale;
        b[k] *= scale;
    }
    return FourierSeries(a0, std::move(a), std::move(b));
}

double FourierSeries::operator()(double t) const
{
    double const c1 = std::cos(t);
    double const s1 = std::sin(t);
    double ck = c1;
    double sk = s1;
    double sum = a0_;
    for (std::size_t k = 0; k < cos_.size(); ++k)
    {
        sum += cos_[k] * ck + sin_[k] * sk;
        double const next_c = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = next_c;
    }
    return sum;
}

PlanarJet FourierSeries::jet(double t) const
{
    double const c1 = std::cos(t);
    double const s1 = std::sin(t);
    double ck = c1;
    double sk = s1;
    PlanarJet j;
    j.h = a0_;
    for (std::size_t i = 0; i < cos_.size(); ++i)
    {
        double const k = static_cast<double>(i + 1);
        double const c = cos_[i] * ck + sin_[i] * sk;
        double const d = -cos_[i] * sk + sin_[i] * ck;
        j.h += c;
        j.dh += k * d;
        j.d2h -= k * k * c;
        j.d3h -= k * k * k * d;
        double const next_c = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = next_c;
    }
    return j;
}

double FourierSeries::max_residual(std::span<double const> samples) const
{
    double const dt = 2 * std::numbers::pi / static_cast<double>(samples.size());
    double worst = 0;
    for (std::size_t j = 0; j < samples.size(); ++j)
    {
        worst = std::max(
            worst,
            std::abs((*this)(dt * static_cast<double>(j)) - samples[j]));
    }
    return worst;
}

FourierSeries FourierSeries::trimmed() const
{
    auto keep = cos_.size();
    while (keep > 0 && cos_[keep - 1] == 0.0 && sin_[keep - 1] == 0.0)
        --keep;
    return FourierSeries(a0_,
                         std::vector<double>(cos_.begin(), cos_.begin() + keep),
                         std::vector<double>(sin_.begin(), sin_.begin() + keep));
}

FourierSeries FourierSeries::translated(double dx, double dy) const
{
    auto a = cos_;
    auto b = sin_;
    if (a.empty())
    {
        a.assign(1, 0.0);
        b.assign(1, 0.0);
    }
    a[0] -= dx;
    b[0] -= dy;
    return FourierSeries(a0_, std::move(a), std::move(b));
}

}  // namespace lpasa
