#pragma once

#include <utility>
#include <vector>

#include "bgls/dilation.hpp"
#include "bgls/grand.hpp"

namespace bgls {

enum class BoydDirection { upper, lower };

// Raw data behind one Boyd-index estimate: the dilation-norm values h(s)
// along s_j = 10^{+-2m} with the other coordinates fixed at 1, the running
// two-point slopes, and the extrapolated limit.
struct BoydTrace {
    std::vector<double> log_s;
    std::vector<double> log_h;
    std::vector<double> slopes;  // two-point, between consecutive levels
    double extrapolated = kNaN;
    double fit_residual = kNaN;  // least-squares residual over the last 4 points
};

// log-log growth rate of h(s) = ||sigma_s|| (G(psi) -> G(psi nu)) in the
// j-th block coordinate; equals (d_j + theta_j)/a (upper) or /b (lower)
// when psi has a representation. j is zero-based.
BoydTrace boyd_trace(const PsiFunction& psi, const PsiFunction& nu,
                     const WeightedDomain& domain, std::size_t j, BoydDirection dir,
                     int levels = 10);
double boyd_index(const PsiFunction& psi, const PsiFunction& nu,
                  const WeightedDomain& domain, std::size_t j, BoydDirection dir,
                  int levels = 10);

struct IndexReport {
    std::vector<double> closed_form;  // per block: upper then lower
    std::vector<double> numerical;    // same order
    std::vector<std::pair<double, double>> per_block;  // numerical (B+_j, B-_j)
    double fit_residual = 0.0;                         // worst across entries
};
IndexReport boyd_report(const PsiFunction& psi, const PsiFunction& nu,
                        const WeightedDomain& domain, int levels = 10);

// Dilation function M(t) = sup_{s>0} phi(st)/phi(s). The supremum is taken
// over a central log grid plus geometric boundary probes: for the psi
// classes here log phi is convex in log delta, so the ratio saturates
// monotonically toward its limit at the far ends.
struct ShimogakiGrid {
    double lo_log10 = -8.0;
    double hi_log10 = 8.0;
    int points = 65;
    double probe_max_log10 = 4096.0;
};
double log_shimogaki_M(const GrandSpace& space, double log_t,
                       const ShimogakiGrid& grid = {});
double shimogaki_M(const GrandSpace& space, double t, const ShimogakiGrid& grid = {});

struct ShimogakiReport {
    double beta_minus = kNaN;  // extrapolated limit of log M(t)/log t, t -> 0+
    double beta_plus = kNaN;   // same, t -> inf
    double beta_minus_sampled = kNaN;  // definitional sup over sampled t < 1
    double beta_plus_sampled = kNaN;   // definitional inf over sampled t > 1
    bool flagged = false;  // extrapolated vs sampled disagree by > 2%
    std::vector<std::pair<double, double>> M_profile;  // (t, M(t))
};
ShimogakiReport shimogaki_indices(const GrandSpace& space, int levels = 8);

// Boyd indices of the associate (Koethe dual) space: (1 - 1/b, 1 - 1/a) as
// (upper, lower). Pure formula.
std::pair<double, double> associate_boyd(const Interval& iv);

// The chain 0 <= B- <= beta- <= beta+ <= B+ for V1 = V2 = G(psi) over the
// unit one-dimensional Lebesgue domain, checked with 2% slack.
struct SandwichReport {
    double B_minus = kNaN;
    double beta_minus = kNaN;
    double beta_plus = kNaN;
    double B_plus = kNaN;
    bool holds = false;
};
SandwichReport sandwich_check(const GrandSpace& space);

}  // namespace bgls
