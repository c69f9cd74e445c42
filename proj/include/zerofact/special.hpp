#pragma once

namespace zerofact {

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
/// by the modified-Lentz continued fraction (evaluated on whichever side of
/// the symmetry point converges faster). Absolute accuracy is about 1e-14.
double regularized_incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with `df` > 0 degrees of freedom.
double student_t_cdf(double t, double df);

}  // namespace zerofact
