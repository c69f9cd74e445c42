#pragma once

#include <functional>
#include <span>

namespace zerofact {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // sum of per-panel |K15 - G7| plus a roundoff floor
    bool converged = false;
    int panels = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature over the partition
/// given by `breakpoints` (strictly increasing, at least two entries).
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops to `abs_tol`. A panel that has been bisected `max_depth`
/// times is frozen. Refinement stops with converged == false as soon as the
/// frozen panels, or the summed roundoff floor, exceed `abs_tol` on their own. Integrable endpoint singularities of
/// power type are handled by refinement; the integrand is never evaluated
/// at a breakpoint.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    double abs_tol,
                                    int max_depth);

}  // namespace zerofact
