#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asa.hpp"
#include "bodies.hpp"

namespace lpasa
{
enum class Verdict
{
    holds,
    violated,
    equality_case,
    divergent_skip,
};

char const* to_string(Verdict verdict);

/*!
 * One evaluated inequality.
 *
 * The margin is relative: (rhs - lhs) / |rhs| for upper bounds,
 * (lhs - rhs) / |rhs| for lower bounds and -|lhs - rhs| / |lhs| for
 * identities. Verdicts: equality-case when |margin| <= tolerance, holds when
 * margin > tolerance, violated otherwise.
 */
struct InequalityReport
{
    std::string name;
    std::string body;
    std::string params;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    double tolerance = 0;
    Verdict verdict = Verdict::holds;
    std::string grid;
    std::string detail;
};

//! Value with a relative error bound, propagated through products/powers.
struct Quantity
{
    double value = 0;
    double rel_err = 0;
    bool divergent = false;
};

Quantity operator*(Quantity const& a, Quantity const& b);
Quantity operator/(Quantity const& a, Quantity const& b);
Quantity pow(Quantity const& a, double e);
Quantity exact(double value);

/*!
 * Lazily evaluated functionals of one body and its polar on a fixed grid.
 *
 * Values are cached per exponent, so a full check matrix samples the body
 * and its polar once.
 */
class BodyContext
{
  public:
    explicit BodyContext(ConvexBody body, std::string descriptor = {});
    BodyContext(ConvexBody body, SphereGrid grid, std::string descriptor = {});

    int dim() const { return samples_.body().dim(); }
    ConvexBody const& body() const { return samples_.body(); }
    ConvexBody const& polar();
    std::string const& descriptor() const { return descriptor_; }
    std::string grid() const { return samples_.grid().describe(); }

    //! as_p(K); p = -n gives the sup form, +-inf the polar volume form.
    Quantity as(double p);
    Quantity polar_as(double p);
    Quantity volume();
    Quantity polar_volume();

    //! Relative error attributed to the numeric polar representation.
    double polar_error() const;

  private:
    Quantity lookup(BodySamples const& samples, std::map<double, Quantity>& cache,
                    double p, double extra_error);
    BodySamples& polar_samples();

    BodySamples samples_;
    std::unique_ptr<BodySamples> polar_;
    std::string descriptor_;
    std::map<double, Quantity> cache_;
    std::map<double, Quantity> polar_cache_;
};

//! Default random body ensemble parameters.
struct EnsembleConfig
{
    std::uint64_t seed = 20240601;
    int count = 100;
    int harmonic_budget = 8;
    double perturbation_scale = 0.2;
};

/*!
 * h(theta) = 1 + sum_{k=2..budget} a_k cos k theta + b_k sin k theta with
 * |a_k|, |b_k| <= scale / k^3 drawn from the seed, recentered to its
 * centroid. A body failing the convexity check is redrawn with half the
 * scale (three retries).
 */
ConvexBody random_smooth_body(std::uint64_t seed, int harmonic_budget,
                              double perturbation_scale);

//! as_r <= as_t^a as_s^b; requires (n+r)(t-s)/((n+t)(r-s)) > 1.
InequalityReport
holder_triple_check(BodyContext& ctx, double r, double s, double t);

//! (as_r / n|K|) <= (as_t / n|K|)^{r(n+t)/(t(n+r))}; requires
//! (n+r) t / ((n+t) r) > 1, swapping r and t when only the swapped pair
//! satisfies it.
InequalityReport monotonicity_check(BodyContext& ctx, double r, double t);

//! Ratio form against the ball: upper bound for p >= 0, lower bound for
//! -n < p < 0, lower bound with c^{np/(n+p)} for p < -n.
InequalityReport
isoperimetric_check(BodyContext& ctx, double p, double santalo_c);

//! as_p(K) as_p(K°) against n^2 |K||K°|; at p = -n the product of the
//! sup forms against 1.
InequalityReport santalo_product_check(BodyContext& ctx, double p);

//! as_p(K) = as_{n^2/p}(K°); p = 0 pairs as_0(K) with as_inf(K°).
InequalityReport duality_check(BodyContext& ctx, double p);

//! |K||K°| <= |B|^2 (classical fact used as a sanity check).
InequalityReport volume_product_check(BodyContext& ctx);

//! Bound on the rounded body K(R, eps) at exponent p (n = 2).
InequalityReport rounded_body_bounds(double big_radius, double eps, double p);

//! Two-exponent bound through as_{-n}, plus the as_{-n} lower bounds
//! |K|/|B| and sqrt(|K|/|K°|).
std::vector<InequalityReport>
minus_n_checks(BodyContext& ctx, double s, double p);

//! Admissibility of a three-exponent triple.
bool holder_admissible(int dim, double r, double s, double t);

struct SuiteConfig
{
    EnsembleConfig ensemble;
    double santalo_c = 0.25;
    bool include_duality = true;
};

//! Every check over the ball, two ellipses and the seeded ensemble, in
//! (body index, check) order.
std::vector<InequalityReport> run_suite(SuiteConfig const& config);

std::size_t count_violations(std::vector<InequalityReport> const& reports);

}  // namespace lpasa
