#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onioneco/domain_graph.hpp"
#include "onioneco/rng.hpp"

namespace onioneco {

// Hurwitz zeta sum_{k>=0} (a+k)^-s for s > 1, a > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);

enum class DegreeDirection { In, Out, Undirected };

struct DegreeSequence {
    std::vector<int> values;
    DegreeDirection direction = DegreeDirection::Undirected;
    std::string community = "All";
};

struct PowerLawFit {
    double alpha = 0.0;  // > 1
    int xmin = 0;
    double ks = 0.0;     // max CDF deviation over the tail
    int n_tail = 0;      // samples >= xmin
};

// Discrete maximum-likelihood fit with KS-minimizing xmin chosen over the
// distinct positive values (tails below 8 samples or with a single distinct
// value are not candidates). Zeros never enter the fit. Deterministic.
// Throws DataError with fewer than 10 positive samples and NumericError when
// every candidate tail is degenerate.
PowerLawFit fit_power_law(const std::vector<int>& values);

// Exact inverse-CDF sampler for the fitted tail (x >= xmin).
class DiscretePowerLawSampler {
public:
    DiscretePowerLawSampler(double alpha, int xmin);
    int sample(Rng& rng) const;

private:
    double alpha_;
    int xmin_;
    std::vector<double> cdf_;  // cdf_[k] = P(X <= xmin + k)
};

struct GofResult {
    double p_value = 0.0;
    int n_boot = 0;
    std::uint64_t seed = 0;
};

// Semi-parametric bootstrap: each replicate draws below-xmin values from the
// empirical body and tail values from the fitted law, refits from scratch,
// and records its KS distance; p is the fraction of replicate KS distances
// >= the observed one. Replicates use independent RNG streams derived from
// (seed, index), so threaded and serial runs agree bit-exactly.
GofResult goodness_of_fit(const std::vector<int>& values, const PowerLawFit& fit, int n_boot,
                          std::uint64_t seed, int threads = 0);

struct TailReportRow {
    std::string community;
    std::string direction;  // "in", "out", or "undirected"
    int sample_count = 0;
    int positive_count = 0;
    bool skipped = false;
    std::string skip_reason;
    PowerLawFit fit{};
    GofResult gof{};
};

// Fit + GoF for the in- and out-degree of each community's members (degrees
// counted over the full graph) plus the global in/out/undirected sequences.
// Communities with too few positive samples are marked skipped.
std::vector<TailReportRow> community_tail_report(const DomainGraph& g, int n_boot,
                                                 std::uint64_t seed, int threads = 0);

}  // namespace onioneco
