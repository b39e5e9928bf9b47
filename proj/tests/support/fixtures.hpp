#pragma once

#include "lpasa/bodies.hpp"
#include "oracles.hpp"

namespace fixtures
{
inline lpasa::ConvexBody to_body(oracle::Fourier const& f)
{
    return lpasa::make_planar_support(lpasa::FourierSeries(f.a0, f.a, f.b));
}

inline lpasa::ConvexBody ellipse(double a, double b)
{
    return lpasa::make_ellipsoid({a, b});
}

inline lpasa::Direction dir(double theta)
{
    return lpasa::Direction::from_angle(theta);
}

}  // namespace fixtures

#include <gtest/gtest.h>

#include "lpasa/error.hpp"

namespace fixtures
{
//! Run \p fn and check it throws lpasa::Error with \p code.
template<class F>
::testing::AssertionResult throws_code(F&& fn, lpasa::ErrorCode code)
{
    try
    {
        fn();
    }
    catch (lpasa::Error const& e)
    {
        if (e.code() == code)
            return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure()
               << "threw " << lpasa::to_string(e.code()) << ": " << e.what();
    }
    return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace fixtures
