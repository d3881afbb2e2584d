#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sortscope::stats {

/// Two-sided standard normal tail probability of z: P(|Z| >= |z|).
double normal_two_sided_p(double z);

/// Regularized incomplete beta I_x(a, b), relative error ~1e-14 via the
/// Lentz continued fraction.
double reg_incomplete_beta(double a, double b, double x);

/// Two-sided Student-t tail probability: P(|T_df| >= |t|).
double student_t_two_sided_p(double t, double df);

/// Mergeable running mean/variance (Welford / Chan et al.). Merging shards
/// in shard order gives a result independent of thread count.
struct RunningStat {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    void merge(const RunningStat& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        double total = static_cast<double>(n + o.n);
        double d = o.mean - mean;
        double new_mean = mean + d * static_cast<double>(o.n) / total;
        m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
        mean = new_mean;
        n += o.n;
    }

    /// Sample variance (n-1); nullopt when n < 2.
    std::optional<double> sample_variance() const {
        if (n < 2) return std::nullopt;
        return m2 / static_cast<double>(n - 1);
    }

    /// Population variance (n); nullopt when n == 0.
    std::optional<double> population_variance() const {
        if (n == 0) return std::nullopt;
        return m2 / static_cast<double>(n);
    }
};

double mean(const std::vector<double>& v);

/// Sample standard deviation (n-1); nullopt when v.size() < 2.
std::optional<double> sample_std(const std::vector<double>& v);

/// Population standard deviation; nullopt when empty.
std::optional<double> population_std(const std::vector<double>& v);

/// Lower-middle median: element at index (n-1)/2 of the sorted values.
/// nullopt when empty. Sorts a copy.
std::optional<double> median_lower(std::vector<double> v);

}  // namespace sortscope::stats
