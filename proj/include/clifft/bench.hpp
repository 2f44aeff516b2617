#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "clifft/automorphisms.hpp"
#include "clifft/fastmul.hpp"
#include "clifft/multivector.hpp"
#include "clifft/transform.hpp"

namespace clifft {

struct BenchPoint {
    int n;
    std::size_t N;  // 4^n coefficients
    double ns;      // median wall time per operation
};

struct BenchSeries {
    std::string name;
    std::vector<BenchPoint> points;
    double slope = 0.0;  // d log(time) / d log(N), least squares
    bool slope_valid = false;
};

struct BenchOptions {
    int n_min = 5;
    int n_max = 10;
    int reps = 5;               // median of this many timed repetitions
    double budget_ms = 20000;   // per-point ceiling; larger sizes are skipped
    bool parallel = false;      // also time the parallel quarter recursion
    std::uint64_t seed = 0x5eedc11ff7ull;
};

struct BenchReport {
    BenchOptions options;
    std::vector<BenchSeries> series;

    const BenchSeries* find(const std::string& name) const {
        for (const auto& s : series)
            if (s.name == name) return &s;
        return nullptr;
    }
};

// Least-squares slope of log(t) against log(N).
inline double fit_loglog_slope(const std::vector<BenchPoint>& points) {
    double sx = 0, sy = 0;
    for (const auto& p : points) {
        sx += std::log(double(p.N));
        sy += std::log(p.ns);
    }
    const double mx = sx / points.size(), my = sy / points.size();
    double num = 0, den = 0;
    for (const auto& p : points) {
        const double dx = std::log(double(p.N)) - mx;
        num += dx * (std::log(p.ns) - my);
        den += dx * dx;
    }
    return num / den;
}

namespace detail {

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

template <typename F>
double time_once_ns(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

// Median of `reps` timings, batching fast operations so a measurement spans
// at least ~5 ms.  The calibration call doubles as the warm-up.  Returns a
// negative value when the operation does not fit the budget.
template <typename F>
double measure_ns(F&& fn, int reps, double budget_ms) {
    const double budget_ns = budget_ms * 1e6;
    const double first = time_once_ns(fn);
    if (first > budget_ns) return -1.0;
    const double target_ns = 5e6;
    const int batch = first >= target_ns ? 1 : int(std::min(1e6, std::ceil(target_ns / std::max(first, 1e2))));
    int usable_reps = reps;
    if (first * batch * reps > budget_ns)
        usable_reps = std::max(1, int(budget_ns / std::max(first * batch, 1.0)));
    std::vector<double> times;
    times.reserve(usable_reps);
    for (int r = 0; r < usable_reps; ++r) {
        const double t = time_once_ns([&] {
            for (int k = 0; k < batch; ++k) fn();
        });
        times.push_back(t / batch);
    }
    return median(times);
}

template <Scalar S>
Multivector<S> random_multivector(int n, std::mt19937_64& rng) {
    Multivector<S> mv(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] = S(dist(rng));
    return mv;
}

}  // namespace detail

// Times the dense product, the fast product, the forward transform and the
// two representation automorphisms across n_min..n_max.  Sizes whose
// predicted cost exceeds the per-point budget are skipped, so the dense
// series typically stops before the fast series does.
inline BenchReport run_benchmarks(const BenchOptions& options) {
    if (options.reps < 3) throw std::invalid_argument("benchmark needs at least 3 repetitions");
    if (options.n_min < 1 || options.n_max < options.n_min || options.n_max > 12)
        throw std::invalid_argument("benchmark size range is invalid");

    BenchReport report;
    report.options = options;
    std::vector<BenchSeries> series;
    series.push_back({"transform", {}, 0.0, false});
    series.push_back({"naive_mul", {}, 0.0, false});
    series.push_back({"fast_mul", {}, 0.0, false});
    series.push_back({"parity_flip", {}, 0.0, false});
    series.push_back({"imaginary_flip", {}, 0.0, false});
    if (options.parallel) series.push_back({"transform_parallel", {}, 0.0, false});

    std::mt19937_64 rng(options.seed);
    // A dead-store sink keeps the optimiser from deleting timed work.
    volatile double sink = 0.0;

    for (int n = options.n_min; n <= options.n_max; ++n) {
        const std::size_t N = std::size_t{1} << (2 * n);
        const auto a = detail::random_multivector<double>(n, rng);
        const auto b = detail::random_multivector<double>(n, rng);
        auto mat = fft_right(a);

        auto record = [&](const std::string& name, double ns) {
            for (auto& s : series)
                if (s.name == name && ns > 0) s.points.push_back({n, N, ns});
        };

        auto predicted_over_budget = [&](const std::string& name, double exponent) {
            for (const auto& s : series) {
                if (s.name != name || s.points.empty()) continue;
                const auto& last = s.points.back();
                if (last.n != n - 1) return true;  // already skipped once; stay stopped
                const double pred = last.ns * std::pow(double(N) / double(last.N), exponent);
                return pred > options.budget_ms * 1e6;
            }
            return false;
        };

        record("transform", detail::measure_ns([&] { sink = sink + fft_right(a)(0, 0); },
                                               options.reps, options.budget_ms));
        if (options.parallel)
            record("transform_parallel", detail::measure_ns([&] { sink = sink + fft_right(a, true)(0, 0); },
                                                            options.reps, options.budget_ms));
        if (!predicted_over_budget("naive_mul", 2.1))
            record("naive_mul", detail::measure_ns([&] { sink = sink + geometric_product_naive(a, b)[0]; },
                                                   options.reps, options.budget_ms));
        if (!predicted_over_budget("fast_mul", 1.6))
            record("fast_mul", detail::measure_ns([&] { sink = sink + fast_mul(a, b)[0]; },
                                                  options.reps, options.budget_ms));
        record("parity_flip", detail::measure_ns([&] {
                   parity_flip_inplace(mat);
                   sink = sink + mat(0, 0);
               },
               options.reps, options.budget_ms));
        record("imaginary_flip", detail::measure_ns([&] {
                   imaginary_flip_inplace(mat);
                   sink = sink + mat(0, 0);
               },
               options.reps, options.budget_ms));
    }

    for (auto& s : series) {
        if (s.points.size() >= 3) {
            s.slope = fit_loglog_slope(s.points);
            s.slope_valid = true;
        }
    }
    report.series = std::move(series);
    return report;
}

// Time the named series would take at pair count n according to its fitted
// power law; negative when no valid fit exists.
inline double extrapolate_ns(const BenchSeries& s, int n) {
    if (!s.slope_valid || s.points.empty()) return -1.0;
    const auto& last = s.points.back();
    const double N = double(std::size_t{1} << (2 * n));
    return last.ns * std::pow(N / double(last.N), s.slope);
}

inline const BenchPoint* point_at(const BenchSeries& s, int n) {
    for (const auto& p : s.points)
        if (p.n == n) return &p;
    return nullptr;
}

// True when the fast product is cheaper than the dense product at pair
// count n, using measured times where available and the fitted power law
// for the dense series otherwise.  `extrapolated` reports which case ran.
inline bool fast_beats_naive_at(const BenchReport& report, int n, bool* extrapolated = nullptr) {
    const BenchSeries* fast = report.find("fast_mul");
    const BenchSeries* naive = report.find("naive_mul");
    if (!fast || !naive) return false;
    const BenchPoint* fp = point_at(*fast, n);
    if (!fp) return false;
    if (const BenchPoint* np = point_at(*naive, n)) {
        if (extrapolated) *extrapolated = false;
        return fp->ns < np->ns;
    }
    const double pred = extrapolate_ns(*naive, n);
    if (extrapolated) *extrapolated = true;
    return pred > 0 && fp->ns < pred;
}

inline void print_report(std::ostream& os, const BenchReport& report) {
    os << "benchmark n=" << report.options.n_min << ".." << report.options.n_max
       << " reps=" << report.options.reps << " budget_ms=" << report.options.budget_ms << "\n";
    for (int n = report.options.n_min; n <= report.options.n_max; ++n) {
        os << "data n=" << n << " N=" << (std::size_t{1} << (2 * n));
        for (const auto& s : report.series) {
            os << " " << s.name << "=";
            if (const BenchPoint* p = point_at(s, n))
                os << std::llround(p->ns);
            else
                os << "-";
        }
        os << "\n";
    }
    for (const auto& s : report.series) {
        os << "slope " << s.name << "=";
        if (s.slope_valid)
            os << std::fixed << std::setprecision(3) << s.slope << std::defaultfloat;
        else
            os << "-";
        os << " points=" << s.points.size() << "\n";
    }
    bool extrapolated = false;
    const bool beats = fast_beats_naive_at(report, report.options.n_max, &extrapolated);
    os << "fast_mul " << (beats ? "beats" : "does not beat") << " naive_mul at n=" << report.options.n_max
       << (extrapolated ? " (dense series extrapolated)" : " (both measured)") << "\n";
}

}  // namespace clifft
