#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "vfunc/error.hpp"
#include "vfunc/geom.hpp"

namespace vfunc {

// ---------------------------------------------------------------------------
// Exact degree-2 quadrature. Both rules return the integral multiplied by the
// orientation sign of the simplex, so a reversed simplex gives the negated
// value and a degenerate one gives zero.
// ---------------------------------------------------------------------------

template <class F>
double quad_triangle(const Triangle2& t, F&& f) {
  const double area = signed_area(t);
  const Point2 mab = 0.5 * (t.a + t.b);
  const Point2 mbc = 0.5 * (t.b + t.c);
  const Point2 mca = 0.5 * (t.c + t.a);
  return area / 3.0 * (f(mab) + f(mbc) + f(mca));
}

template <class F>
double quad_tetra(const Tetrahedron3& t, F&& f) {
  constexpr double kA = 0.5854101966249685;  // (5 + 3 sqrt 5) / 20
  constexpr double kB = 0.1381966011250105;  // (5 - sqrt 5) / 20
  const double vol = signed_volume(t);
  const auto v = t.vertices();
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    Point3 x{};
    for (int j = 0; j < 4; ++j) x = x + (i == j ? kA : kB) * v[j];
    sum += f(x);
  }
  return vol / 4.0 * sum;
}

// ---------------------------------------------------------------------------
// Monte Carlo oracle.
// ---------------------------------------------------------------------------

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct Box2 {
  Point2 lo, hi;
};

struct Box3 {
  Point3 lo, hi;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDF00DCAFE2024ULL;

/// Number of independent streams the sample budget is split into. Fixed, so
/// estimates do not depend on how many threads evaluate them.
inline constexpr unsigned kMcStreams = 16;

std::uint64_t splitmix64(std::uint64_t x);

namespace detail {

double region_measure(const Box2& b);
double region_measure(const Box3& b);
double region_measure(const Triangle2& t);
double region_measure(const Tetrahedron3& t);

Point2 sample(const Box2& b, std::mt19937_64& rng);
Point3 sample(const Box3& b, std::mt19937_64& rng);
Point2 sample(const Triangle2& t, std::mt19937_64& rng);
Point3 sample(const Tetrahedron3& t, std::mt19937_64& rng);

struct StreamStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const StreamStats& o) {
    if (o.n == 0) return;
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
    const double delta = o.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += o.m2 + delta * delta * na * nb / total;
    n += o.n;
  }
};

unsigned resolve_threads(unsigned requested);
void validate_samples(std::uint64_t samples);

}  // namespace detail

/// Seeded Monte Carlo estimate of the integral of `f` over `region`
/// (Box2, Box3, Triangle2 or Tetrahedron3). Stream i draws its share of the
/// budget from a generator seeded by splitmix64(seed ^ i); streams are merged
/// in index order, so the result is bit-identical for any `threads`.
/// `f` must be safe to call concurrently when threads > 1.
template <class Region, class F>
McEstimate mc_integrate(const Region& region, F&& f, std::uint64_t samples, std::uint64_t seed,
                        unsigned threads = 1) {
  detail::validate_samples(samples);
  const double measure = detail::region_measure(region);
  if (!(measure > 0.0) || !std::isfinite(measure))
    throw Error(ErrorCode::InvalidRegion, "mc_integrate: empty or degenerate region");

  std::vector<detail::StreamStats> stats(kMcStreams);
  auto run_stream = [&](unsigned s) {
    const std::uint64_t share =
        samples / kMcStreams + (s < samples % kMcStreams ? 1 : 0);
    std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (s + 1))));
    detail::StreamStats st;
    for (std::uint64_t i = 0; i < share; ++i) st.add(f(detail::sample(region, rng)));
    stats[s] = st;
  };

  const unsigned nthreads = std::min(detail::resolve_threads(threads), kMcStreams);
  if (nthreads <= 1) {
    for (unsigned s = 0; s < kMcStreams; ++s) run_stream(s);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w)
      pool.emplace_back([&, w] {
        for (unsigned s = w; s < kMcStreams; s += nthreads) run_stream(s);
      });
  }

  detail::StreamStats total;
  for (const auto& st : stats) total.merge(st);
  const double n = static_cast<double>(total.n);
  const double variance = total.n > 1 ? total.m2 / (n - 1.0) : 0.0;
  return {measure * total.mean, measure * std::sqrt(variance / n), samples, seed};
}

}  // namespace vfunc
