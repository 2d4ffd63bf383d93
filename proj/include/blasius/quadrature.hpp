#pragma once

#include <functional>
#include <vector>

#include "blasius/model.hpp"

namespace blasius {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// noise_rel is the relative evaluation noise of f; panels whose refinement
/// difference sits at that floor are accepted as converged (refining them
/// only chases roundoff).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, double noise_rel = 4e-16);

/// Cumulative integral of x(t)^p over a trajectory's sample grid, one value
/// per sample. Each interval is integrated with the quadratic through the
/// surrounding sample triple (Simpson-type rule on the uneven grid).
std::vector<double> cumulative_power_integral(const Trajectory& traj, double p);

} // namespace blasius
