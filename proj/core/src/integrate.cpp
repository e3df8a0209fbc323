#include "vfunc/integrate.hpp"

#include <string>

namespace vfunc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace detail {

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53 random bits -> [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double region_measure(const Box2& b) {
  return (b.hi.x - b.lo.x) * (b.hi.y - b.lo.y);
}

double region_measure(const Box3& b) {
  return (b.hi.x - b.lo.x) * (b.hi.y - b.lo.y) * (b.hi.z - b.lo.z);
}

double region_measure(const Triangle2& t) { return std::abs(signed_area(t)); }
double region_measure(const Tetrahedron3& t) { return std::abs(signed_volume(t)); }

Point2 sample(const Box2& b, std::mt19937_64& rng) {
  const double u = uniform01(rng), v = uniform01(rng);
  return {b.lo.x + u * (b.hi.x - b.lo.x), b.lo.y + v * (b.hi.y - b.lo.y)};
}

Point3 sample(const Box3& b, std::mt19937_64& rng) {
  const double u = uniform01(rng), v = uniform01(rng), w = uniform01(rng);
  return {b.lo.x + u * (b.hi.x - b.lo.x), b.lo.y + v * (b.hi.y - b.lo.y),
          b.lo.z + w * (b.hi.z - b.lo.z)};
}

Point2 sample(const Triangle2& t, std::mt19937_64& rng) {
  double s1 = uniform01(rng), s2 = uniform01(rng);
  if (s1 > s2) std::swap(s1, s2);
  return s1 * t.a + (s2 - s1) * t.b + (1.0 - s2) * t.c;
}

Point3 sample(const Tetrahedron3& t, std::mt19937_64& rng) {
  std::array<double, 3> s{uniform01(rng), uniform01(rng), uniform01(rng)};
  std::sort(s.begin(), s.end());
  return s[0] * t.a + (s[1] - s[0]) * t.b + (s[2] - s[1]) * t.c + (1.0 - s[2]) * t.d;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void validate_samples(std::uint64_t samples) {
  if (samples < 1000)
    throw Error(ErrorCode::InvalidArgument,
                "mc_integrate: need at least 1000 samples, got " + std::to_string(samples));
}

}  // namespace detail
}  // namespace vfunc
