#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Core>

namespace lpasa
{
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

//! Unit vector in R^n. Planar directions cache their polar angle.
class Direction
{
  public:
    //! Normalizes \p v; throws a precondition error for the zero vector.
    explicit Direction(Vec v);

    static Direction from_angle(double theta);

    Vec const& coords() const { return v_; }
    int dim() const { return static_cast<int>(v_.size()); }
    double operator[](int i) const { return v_[i]; }

    //! Polar angle in (-pi, pi] for n = 2 (the cached value when built from
    //! an angle, which may lie outside that range).
    double angle() const
    {
        return std::isnan(angle_) ? std::atan2(v_[1], v_[0]) : angle_;
    }

  private:
    Direction(Vec v, double angle) : v_(std::move(v)), angle_(angle) {}

    Vec v_;
    double angle_ = std::numeric_limits<double>::quiet_NaN();
};

inline Vec2 unit(double theta)
{
    return {std::cos(theta), std::sin(theta)};
}

//! Counterclockwise perpendicular of unit(theta).
inline Vec2 unit_perp(double theta)
{
    return {-std::sin(theta), std::cos(theta)};
}

inline double cross(Vec2 const& a, Vec2 const& b)
{
    return a.x() * b.y() - a.y() * b.x();
}

//! Volume of the unit ball in R^n.
double unit_ball_volume(int n);

//! Surface area n |B^n| of the unit sphere S^{n-1}.
inline double unit_sphere_area(int n)
{
    return n * unit_ball_volume(n);
}

}  // namespace lpasa
