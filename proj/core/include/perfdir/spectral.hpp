#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perfdir/plane.hpp"
#include "perfdir/weight.hpp"

namespace perfdir {

// Character (a,b) of F_p^2, acting as (x,y) -> exp(2*pi*i*(a*x + b*y)/p).
// (0,0) is the principal character.
struct Character {
  int a = 0;
  int b = 0;

  bool is_principal() const { return a == 0 && b == 0; }
  friend auto operator<=>(const Character&, const Character&) = default;
};

// The p characters trivial on a direction's line through the origin:
// slope s -> {t*(s,-1)}, vertical -> {t*(1,0)}. characters[0] is principal
// (t = 0), the rest follow in t order.
struct AnnihilatorSubgroup {
  Direction dir;
  std::vector<Character> characters;
};

AnnihilatorSubgroup annihilator(PrimeModulus p, Direction d);

// The p sums c_j = sum of w over {(x,y): a*x + b*y = j (mod p)}, j = 0..p-1.
// The Fourier coefficient at (a,b) is (a fixed scalar times) sum_j c_j z^-j
// for z a primitive p-th root of unity, so everything spectral reduces to
// these exact class sums.
std::vector<Rat> residue_class_sums(const WeightFunction& w, Character chi);

// Exact zero test: since 1, z, ..., z^(p-2) are linearly independent over Q
// and 1 + z + ... + z^(p-1) = 0, the coefficient vanishes iff all p class
// sums are equal. No irrational arithmetic anywhere.
bool fourier_is_zero(const WeightFunction& w, Character chi);

// Exact support of the Fourier transform, decomposed across the p+1
// annihilator subgroups (each nonprincipal character lies in exactly one).
struct SpectrumReport {
  PrimeModulus p;
  long long support_size = 0;
  bool principal_nonzero = false;
  // Count of nonvanishing nonprincipal characters per direction, canonical
  // direction order.
  std::vector<std::pair<Direction, int>> by_direction;
};

SpectrumReport fourier_support(const WeightFunction& w);

// {"supportSize": n, "principalNonzero": b,
//  "byDirection": [{"slope": "0".."p-1"|"inf", "count": k}, ...]}
std::string spectrum_to_json(const SpectrumReport& report);

// Uncertainty dichotomy for rational weights: either
//   |supp w|/2 + |supp w^|/(p-1) >= p+1,
// or w is constant on every line of some pencil. When the inequality fails
// a qualifying direction is always reported; when it holds one is reported
// only if it happens to exist.
struct UncertaintyReport {
  Rat lhs;
  int rhs = 0;  // p+1
  bool holds = false;
  std::optional<Direction> constant_direction;
};

UncertaintyReport check_uncertainty(const WeightFunction& w);

// Spectral support bound |supp w^| <= (p-1)(p+1-N) + 1, with N the number of
// perfect directions (supplied by the caller; see perfect_directions).
// Throws std::invalid_argument when N is outside [0, p+1].
struct SupportBoundReport {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

SupportBoundReport check_support_bound(const WeightFunction& w, int perfect_count);

}  // namespace perfdir
