#pragma once

#include <optional>
#include <utility>

#include "kreg/estimators.hpp"

namespace kreg {

//! Result of scanning a sampled curve for decreases between consecutive
//! defined grid points.
struct MonotonicityReport {
    bool is_nondecreasing = true;
    double worst_violation = 0.0; // largest drop found, clamped at 0
    std::optional<std::pair<double, double>> witness; // abscissae of the worst drop
};

MonotonicityReport check_monotone(const CurveSample& c, double tol);

//! Witness of a midpoint log-concavity failure:
//! K((u+v)/2)^2 < K(u) K(v) up to multiplicative slack.
struct LogConcavityWitness {
    double u = 0.0, v = 0.0, mid = 0.0;
    double mid_sq = 0.0;  // K(mid)^2
    double prod = 0.0;    // K(u) K(v)
};

struct LogConcavityReport {
    bool passed = true;
    std::optional<LogConcavityWitness> witness; // the largest violation found
};

// Deterministic low-discrepancy sweep of ordered pairs (u, v) over the
// effective support (infinite supports truncated at 1e-6 cdf tail mass),
// testing the midpoint inequality with multiplicative slack 1e-12. A pass
// is sampling evidence, not proof.
LogConcavityReport check_log_concave(const Kernel& k, std::size_t probes = 10000);

//! A two-point dataset on which the NW estimate strictly decreases between
//! the two recorded evaluation abscissae.
struct NwViolation {
    Dataset data;
    double bandwidth;
    double x_lo, x_hi;       // evaluation points, x_lo < x_hi
    double value_lo, value_hi; // NW values there; value_hi < value_lo
};

// For a kernel that fails the log-concavity probe, instantiates the
// two-point configuration derived from the probe witness and returns it
// when the NW estimate verifiably decreases. Kernels that pass the probe
// are rejected. Returns nullopt when the witness does not produce a
// decrease (a denser probe sweep is then warranted).
std::optional<NwViolation> find_nw_violation(const Kernel& k);

struct PcViolationWitness {
    double x_lo, x_hi;
    double value_lo, value_hi; // PC values; value_hi < value_lo - 1e-12
};

// Searches an expanding grid (half-width doubling from 8 bandwidths around
// the data, 4096 points per pass, 6 passes) for a strict decrease of the PC
// curve. Requires co-monotone, nontrivial data. nullopt means "not found
// within the search budget", never "monotone".
std::optional<PcViolationWitness> find_pc_violation(const Dataset& d, const ScaledKernel& k,
                                                    double x0);

// Max over defined grid points of |fhat(ys + c) - (fhat(ys) + c)|.
double check_shift_preservation(const Dataset& d, const EstimatorSpec& spec, double c,
                                std::span<const double> grid, double tol = kDefaultQuadTol);

} // namespace kreg
