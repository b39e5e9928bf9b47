#include "direction.hpp"

#include <numbers>

#include "error.hpp"

namespace lpasa
{
Direction::Direction(Vec v) : v_(std::move(v))
{
    double const norm = v_.norm();
    if (!(norm > 0) || !std::isfinite(norm))
        fail(ErrorCode::precondition, "direction must be a nonzero finite vector");
    v_ /= norm;
}

Direction Direction::from_angle(double theta)
{
    Vec v(2);
    v << std::cos(theta), std::sin(theta);
    return Direction(std::move(v), theta);
}

double unit_ball_volume(int n)
{
    double const half = 0.5 * n;
    return std::pow(std::numbers::pi, half) / std::tgamma(half + 1);
}

char const* to_string(ErrorCode code) noexcept
{
    switch (code)
    {
        case ErrorCode::config: return "configuration error";
        case ErrorCode::exponent: return "exponent error";
        case ErrorCode::unsupported_kind: return "unsupported body kind";
        case ErrorCode::precondition: return "precondition violation";
        case ErrorCode::degenerate_body: return "degenerate body";
        case ErrorCode::geometry: return "geometry error";
        case ErrorCode::parse: return "parse error";
        case ErrorCode::io: return "I/O error";
        case ErrorCode::internal: return "internal error";
    }
    return "unknown error";
}

}  // namespace lpasa
