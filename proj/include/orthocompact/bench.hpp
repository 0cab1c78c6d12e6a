#pragma once

// Minimal benchmark harness for runtime-growth checks.
//
// Wall-clock noise is tamed two ways: each measurement repeats its workload
// until at least ~10ms have elapsed and reports the per-call mean, and growth
// claims are made on the least-squares slope of log(time) against log(size)
// rather than on any single ratio.

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthocompact {

struct BenchPoint {
  long long size;
  double millis;
};

struct BenchTable {
  std::vector<BenchPoint> points;

  // Least-squares slope of log(millis) versus log(size).  1.0 means linear
  // growth, 2.0 quadratic.
  double loglog_slope() const {
    if (points.size() < 2) throw std::invalid_argument("slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const BenchPoint& p : points) {
      double x = std::log(double(p.size));
      double y = std::log(std::max(p.millis, 1e-9));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double n = double(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "size\twall_ms\n";
    for (const BenchPoint& p : points) {
      out << p.size << '\t';
      out.setf(std::ios::fixed);
      out.precision(3);
      out << p.millis << '\n';
      out.unsetf(std::ios::fixed);
    }
    return out.str();
  }
};

// Mean per-call wall time in ms, repeating the call until the timed block
// spans at least `min_total_ms`.
template <class Fn>
double measured_ms(Fn&& fn, double min_total_ms = 10.0) {
  using clock = std::chrono::steady_clock;
  long long reps = 1;
  for (;;) {
    auto t0 = clock::now();
    for (long long i = 0; i < reps; ++i) fn();
    double total =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(clock::now() - t0)
            .count();
    if (total >= min_total_ms) return total / double(reps);
    reps *= 4;
  }
}

// Times one runner per size.  `make_runner(size)` performs setup outside the
// timed region and returns the closure to measure.
inline BenchTable bench_family(const std::vector<long long>& sizes,
                               const std::function<std::function<void()>(long long)>& make_runner,
                               double min_total_ms = 10.0) {
  BenchTable table;
  for (long long s : sizes) {
    std::function<void()> run = make_runner(s);
    table.points.push_back({s, measured_ms(run, min_total_ms)});
  }
  return table;
}

}  // namespace orthocompact
