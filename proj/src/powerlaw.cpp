#include "onioneco/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "onioneco/errors.hpp"

namespace onioneco {

double hurwitz_zeta(double s, double a) {
    // Direct terms until the expansion point is comfortably past s, then the
    // Euler-Maclaurin tail with Bernoulli corrections through B8.
    const double base_target = std::max(16.0, s + 8.0);
    double sum = 0.0;
    double b = a;
    while (b < base_target) {
        sum += std::pow(b, -s);
        b += 1.0;
    }
    const double binv = 1.0 / b;
    const double bs = std::pow(b, -s);
    sum += b * bs / (s - 1.0);  // b^(1-s)/(s-1)
    sum += 0.5 * bs;
    double term = bs * binv * s;  // s * b^-(s+1)
    sum += term / 12.0;
    term *= (s + 1.0) * (s + 2.0) * binv * binv;
    sum -= term / 720.0;
    term *= (s + 3.0) * (s + 4.0) * binv * binv;
    sum += term / 30240.0;
    term *= (s + 5.0) * (s + 6.0) * binv * binv;
    sum -= term / 1209600.0;
    return sum;
}

namespace {

constexpr int kMinTail = 8;          // smallest tail considered for xmin
constexpr double kAlphaLo = 1.0001;
constexpr double kAlphaHi = 30.0;

// Maximizes the discrete log-likelihood
//   l(alpha) = -n log zeta(alpha, xmin) - alpha * sum log x
// by golden-section search; the likelihood is concave in alpha.
double mle_alpha(double sum_log, long long n_tail, int xmin) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto neg_ll = [&](double alpha) {
        return static_cast<double>(n_tail) * std::log(hurwitz_zeta(alpha, xmin)) + alpha * sum_log;
    };
    double lo = kAlphaLo, hi = kAlphaHi;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = neg_ll(c), fd = neg_ll(d);
    while (hi - lo > 1e-7) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = neg_ll(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = neg_ll(d);
        }
    }
    return (lo + hi) / 2.0;
}

// Max deviation between the empirical and model CDF over every integer in
// [xmin, xmax], per the discrete formulation.
double ks_distance(const std::vector<int>& sorted_tail, double alpha, int xmin) {
    const double z = hurwitz_zeta(alpha, xmin);
    const long long n = static_cast<long long>(sorted_tail.size());
    const int xmax = sorted_tail.back();
    double model_cdf = 0.0;
    double d = 0.0;
    std::size_t idx = 0;
    if (xmax - xmin <= 200000) {
        for (int x = xmin; x <= xmax; ++x) {
            model_cdf += std::pow(static_cast<double>(x), -alpha) / z;
            while (idx < sorted_tail.size() && sorted_tail[idx] == x) ++idx;
            const double empirical = static_cast<double>(idx) / static_cast<double>(n);
            d = std::max(d, std::abs(empirical - model_cdf));
        }
    } else {
        // Very wide tails: evaluate at observed values and their predecessors.
        int prev = xmin - 1;
        for (std::size_t i = 0; i < sorted_tail.size();) {
            const int x = sorted_tail[i];
            if (x != prev) {
                const double below = 1.0 - hurwitz_zeta(alpha, x) / z;
                d = std::max(d, std::abs(static_cast<double>(i) / n - below));
            }
            while (i < sorted_tail.size() && sorted_tail[i] == x) ++i;
            const double at = 1.0 - hurwitz_zeta(alpha, x + 1) / z;
            d = std::max(d, std::abs(static_cast<double>(i) / n - at));
            prev = x;
        }
    }
    return d;
}

PowerLawFit fit_positive_sorted(const std::vector<int>& sorted) {
    // Suffix log-sums for O(1) sum log x over each candidate tail.
    const std::size_t n = sorted.size();
    std::vector<double> suffix_log(n + 1, 0.0);
    for (std::size_t i = n; i > 0; --i) {
        suffix_log[i - 1] = suffix_log[i] + std::log(static_cast<double>(sorted[i - 1]));
    }

    PowerLawFit best;
    bool found = false;
    for (std::size_t i = 0; i < n;) {
        const int xmin = sorted[i];
        const std::size_t start = i;
        while (i < n && sorted[i] == xmin) ++i;
        const long long n_tail = static_cast<long long>(n - start);
        if (n_tail < kMinTail) break;                  // tails only shrink from here
        if (sorted.back() == xmin) break;              // single distinct tail value
        const double alpha = mle_alpha(suffix_log[start], n_tail, xmin);
        const std::vector<int> tail(sorted.begin() + start, sorted.end());
        const double ks = ks_distance(tail, alpha, xmin);
        if (!found || ks < best.ks) {
            best.alpha = alpha;
            best.xmin = xmin;
            best.ks = ks;
            best.n_tail = static_cast<int>(n_tail);
            found = true;
        }
    }
    if (!found) throw NumericError("fit_power_law: degenerate sequence (no usable tail)");
    return best;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<int>& values) {
    std::vector<int> positive;
    positive.reserve(values.size());
    for (const int v : values) {
        if (v > 0) positive.push_back(v);
    }
    if (positive.size() < 10) {
        throw DataError("fit_power_law: need at least 10 positive samples, have " +
                        std::to_string(positive.size()));
    }
    std::sort(positive.begin(), positive.end());
    if (positive.front() == positive.back()) {
        throw NumericError("fit_power_law: degenerate sequence (all values equal)");
    }
    return fit_positive_sorted(positive);
}

DiscretePowerLawSampler::DiscretePowerLawSampler(double alpha, int xmin)
    : alpha_(alpha), xmin_(xmin) {
    const double z = hurwitz_zeta(alpha, xmin);
    double cum = 0.0;
    cdf_.reserve(1024);
    for (int k = 0; k < (1 << 21); ++k) {
        cum += std::pow(static_cast<double>(xmin + k), -alpha) / z;
        cdf_.push_back(std::min(cum, 1.0));
        if (1.0 - cum < 1e-12) break;
    }
}

int DiscretePowerLawSampler::sample(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it != cdf_.end()) return xmin_ + static_cast<int>(it - cdf_.begin());
    // Beyond the tabulated mass (< 1e-12): continuous-approximation fallback.
    const double x = (xmin_ - 0.5) * std::pow(1.0 - u, -1.0 / (alpha_ - 1.0)) + 0.5;
    const double capped = std::min(x, 2.0e9);
    return std::max(static_cast<int>(capped), xmin_ + static_cast<int>(cdf_.size()));
}

GofResult goodness_of_fit(const std::vector<int>& values, const PowerLawFit& fit, int n_boot,
                          std::uint64_t seed, int threads) {
    std::vector<int> positive;
    for (const int v : values) {
        if (v > 0) positive.push_back(v);
    }
    std::vector<int> body;
    for (const int v : positive) {
        if (v < fit.xmin) body.push_back(v);
    }
    const std::size_t n_total = positive.size();
    const double p_body = static_cast<double>(body.size()) / static_cast<double>(n_total);
    const DiscretePowerLawSampler sampler(fit.alpha, fit.xmin);

    auto replicate_ks = [&](int index) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
        std::vector<int> sample;
        sample.reserve(n_total);
        for (std::size_t i = 0; i < n_total; ++i) {
            if (!body.empty() && rng.uniform01() < p_body) {
                sample.push_back(body[rng.uniform(body.size())]);
            } else {
                sample.push_back(sampler.sample(rng));
            }
        }
        std::sort(sample.begin(), sample.end());
        if (sample.front() == sample.back()) return std::numeric_limits<double>::infinity();
        try {
            return fit_positive_sorted(sample).ks;
        } catch (const NumericError&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    const int worker_count =
        threads > 0 ? threads
                    : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<long long> exceed(worker_count, 0);
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w) {
        pool.emplace_back([&, w] {
            long long local = 0;
            for (int i = w; i < n_boot; i += worker_count) {
                if (replicate_ks(i) >= fit.ks) ++local;
            }
            exceed[w] = local;
        });
    }
    for (std::thread& t : pool) t.join();

    GofResult result;
    result.n_boot = n_boot;
    result.seed = seed;
    long long total = 0;
    for (const long long e : exceed) total += e;
    result.p_value = static_cast<double>(total) / static_cast<double>(n_boot);
    return result;
}

namespace {

std::uint64_t row_tag(const std::string& community, const std::string& direction) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : community + "/" + direction) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::vector<TailReportRow> community_tail_report(const DomainGraph& g, int n_boot,
                                                 std::uint64_t seed, int threads) {
    std::vector<std::pair<std::string, std::vector<int>>> groups;  // community -> members
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    groups.emplace_back("All", all);
    for (const std::string& label : g.label_set()) {
        std::vector<int> members;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.label(v) == label) members.push_back(v);
        }
        groups.emplace_back(label, std::move(members));
    }

    std::vector<TailReportRow> rows;
    for (const auto& [community, members] : groups) {
        std::vector<std::pair<std::string, std::vector<int>>> sequences;
        std::vector<int> in_deg, out_deg;
        for (const int v : members) {
            in_deg.push_back(static_cast<int>(g.in(v).size()));
            out_deg.push_back(static_cast<int>(g.out(v).size()));
        }
        sequences.emplace_back("in", std::move(in_deg));
        sequences.emplace_back("out", std::move(out_deg));
        if (community == "All") {
            std::vector<int> und;
            for (const int v : members) und.push_back(g.degree(v));
            sequences.emplace_back("undirected", std::move(und));
        }

        for (auto& [direction, degrees] : sequences) {
            TailReportRow row;
            row.community = community;
            row.direction = direction;
            row.sample_count = static_cast<int>(degrees.size());
            for (const int d : degrees) row.positive_count += d > 0 ? 1 : 0;
            try {
                row.fit = fit_power_law(degrees);
                row.gof = goodness_of_fit(degrees, row.fit,
                                          n_boot, derive_seed(seed, row_tag(community, direction)),
                                          threads);
            } catch (const std::runtime_error& e) {
                row.skipped = true;
                row.skip_reason = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace onioneco
