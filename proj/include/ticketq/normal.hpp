#pragma once

namespace ticketq {

/// Standard normal density.
double normal_pdf(double x);

/// erf/erfc evaluated with a self-contained series + continued-fraction pair
/// (no libm erf), so table digits cannot move across platforms. Absolute error
/// below 1e-14 on the real line.
double erf_own(double x);
double erfc_own(double x);
/// scaled complement exp(z^2) * erfc(z); stable for large positive z.
double erfcx_own(double z);

/// Phi(x) via the complementary branch; absolute error <= 1e-12.
double normal_cdf(double x);

/// Hazard h(x) = pdf(x) / (1 - Phi(x)), computed through erfcx for x > 0 so the
/// tail never cancels. h(x) ~ x as x -> +inf; for x below -37 the numerator
/// underflows and the function clamps to 0.
double hazard(double x);

/// Mean of Normal(mean, var) truncated to [0, inf):
/// mean + sd * h(-mean/sd). Used as the internal cross-check route for the
/// expected queue length.
double truncated_normal_mean(double mean, double var);

/// CDF of the same truncated normal at x >= 0.
double truncated_normal_cdf(double x, double mean, double var);

}  // namespace ticketq
