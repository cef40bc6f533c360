#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "perfdir/plane.hpp"

namespace perfdir {

// Invertible affine transformation z -> M*z + t of F_p^2. The matrix is
// stored row-major: (x, y) -> (m00*x + m01*y, m10*x + m11*y) + (tx, ty).
class AffineMap {
 public:
  AffineMap(PrimeModulus p, std::array<int, 4> matrix, Point translation);

  static AffineMap identity(PrimeModulus p);
  static AffineMap translation(PrimeModulus p, Point t);

  PrimeModulus modulus() const { return p_; }
  const std::array<int, 4>& matrix() const { return m_; }
  Point translation_part() const { return t_; }

  Point apply(Point z) const;
  AffineMap inverse() const;
  // Composition: (this * other)(z) = this(other(z)).
  AffineMap operator*(const AffineMap& other) const;

  // The induced permutation of the p+1 directions (translation-independent).
  Direction map_direction(Direction d) const;

 private:
  PrimeModulus p_;
  std::array<int, 4> m_;
  Point t_;
};

// Streams every invertible matrix (m00, m01, m10, m11) over F_p, in
// lexicographic order. |GL(2,p)| = (p^2-1)(p^2-p) calls.
void for_each_invertible_matrix(PrimeModulus p,
                                const std::function<void(std::array<int, 4>)>& fn);

// Streams the full affine group in a fixed order (matrices lexicographic,
// translations row-major within each matrix). |AGL(2,p)| = p^2(p^2-1)(p^2-p).
void for_each_affine_map(PrimeModulus p, const std::function<void(const AffineMap&)>& fn);

// The affine group as permutations of point indices, for fast orbit scans.
// Only sensible for small p (p = 5 already gives 12000 permutations).
std::vector<std::vector<std::uint8_t>> affine_point_permutations(PrimeModulus p);

// A small generating set of AGL(2,p): translations, a shear, the swap and a
// scaling by a primitive root, plus inverses. Used for greedy canonical
// descent at moduli where the full orbit scan is too large.
std::vector<AffineMap> affine_generators(PrimeModulus p);

}  // namespace perfdir
