#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace perfdir {

// Odd prime modulus of the plane F_p^2. Validated on construction by trial
// division; the default cap keeps the O(p^2)..O(p^3) analysis algorithms
// within sane memory bounds.
class PrimeModulus {
 public:
  static constexpr int kDefaultCap = 10007;

  explicit PrimeModulus(long long p, long long cap = kDefaultCap);

  int value() const { return p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int p_;
};

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// One of the p+1 pencils of parallel lines, parametrized by slope; the
// vertical pencil is the extra "infinite slope" value. Ordering puts finite
// slopes first (ascending), the vertical direction last.
class Direction {
 public:
  static Direction slope(int s);
  static Direction vertical();

  bool is_vertical() const { return vertical_; }
  int slope_value() const;  // only valid for finite directions

  // "0".."p-1" for finite slopes, "inf" for the vertical pencil.
  std::string label() const;
  static Direction from_label(const std::string& label, PrimeModulus p);

  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  Direction(bool vertical, int s) : vertical_(vertical), slope_(s) {}

  bool vertical_ = false;
  int slope_ = 0;
};

// A single line: for slope s the point set {(x, s*x + offset)}, for the
// vertical pencil {(offset, y)}.
struct Line {
  PrimeModulus p;
  Direction dir;
  int offset = 0;

  friend bool operator==(const Line&, const Line&) = default;
};

int mod_reduce(long long v, int p);
int mod_pow(long long base, long long exp, int p);
int mod_inv(int a, int p);  // a nonzero mod p

// The p+1 directions in canonical order: slopes 0..p-1, then vertical.
std::vector<Direction> enumerate_directions(PrimeModulus p);

// The p pairwise-disjoint lines of a pencil, offsets 0..p-1. Their union is
// the whole plane.
std::vector<Line> lines_in_direction(PrimeModulus p, Direction d);

std::vector<Point> line_points(const Line& l);
bool line_contains(const Line& l, Point z);

// Offset of the unique line of pencil d through z.
int line_offset_of_point(PrimeModulus p, Direction d, Point z);

// The unique direction whose pencil has a line through both points.
// Throws std::invalid_argument when z1 == z2.
Direction direction_of_pair(PrimeModulus p, Point z1, Point z2);

// Point index in [0, p^2), row-major: x*p + y. Matches the (x, y) ordering
// of Point so index order and Point order agree.
inline int point_index(PrimeModulus p, Point z) { return z.x * p.value() + z.y; }
inline Point point_from_index(PrimeModulus p, int idx) {
  return Point{idx / p.value(), idx % p.value()};
}

}  // namespace perfdir
