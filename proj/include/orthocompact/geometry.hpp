#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace orthocompact {

using Coord = std::int64_t;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

struct Point {
  Coord x = 0;
  Coord y = 0;
  Coord z = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  Coord operator[](Axis a) const {
    switch (a) {
      case Axis::X: return x;
      case Axis::Y: return y;
      case Axis::Z: return z;
    }
    throw std::invalid_argument("bad axis");
  }

  Coord& operator[](Axis a) {
    switch (a) {
      case Axis::X: return x;
      case Axis::Y: return y;
      case Axis::Z: return z;
    }
    throw std::invalid_argument("bad axis");
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = std::hash<Coord>()(p.x);
    h ^= std::hash<Coord>()(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Coord>()(p.z) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Number of coordinates in which a and b differ.
inline int diff_count(const Point& a, const Point& b) {
  return int(a.x != b.x) + int(a.y != b.y) + int(a.z != b.z);
}

// The axis along which a and b differ; requires that they differ in exactly
// one coordinate.
inline Axis single_axis_between(const Point& a, const Point& b) {
  if (diff_count(a, b) != 1)
    throw std::invalid_argument("points do not differ in exactly one coordinate");
  if (a.x != b.x) return Axis::X;
  if (a.y != b.y) return Axis::Y;
  return Axis::Z;
}

inline Coord abs_coord(Coord v) { return v < 0 ? -v : v; }

// Multiplies two non-negative quantities, throwing on int64 overflow.
inline Coord checked_mul(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coordinate product overflows");
  return r;
}

}  // namespace orthocompact
