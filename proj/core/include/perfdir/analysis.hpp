#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "perfdir/plane.hpp"
#include "perfdir/weight.hpp"

namespace perfdir {

// Per-direction record: exact line sums (offsets 0..p-1), whether every line
// carries its exact share of the total mass, and whether some line contains
// at least two support points.
struct DirectionAnalysis {
  std::vector<Rat> line_sums;
  bool perfect = false;
  bool determined = false;
};

struct DirectionReport {
  PrimeModulus p;
  Rat share;                // total mass / p
  int perfect_count = 0;    // N
  int determined_count = 0; // D
  std::vector<std::pair<Direction, DirectionAnalysis>> directions;  // canonical order

  std::set<Direction> perfect_set() const;
};

// Line-sum route: exact sums over every line of every pencil.
// Throws std::invalid_argument on an empty weight.
DirectionReport perfect_directions(const WeightFunction& w);

// Spectral route: d is perfect iff the Fourier transform vanishes on every
// nonprincipal character of d's annihilator. Independent of the line-sum
// route; the two must agree on every input.
std::set<Direction> perfect_directions_spectral(const WeightFunction& w);

// Directions spanned by pairs of distinct points of S (empty S gives the
// empty set).
std::set<Direction> determined_directions(const std::set<Point>& s, PrimeModulus p);

// The perfect-direction counting bound: N <= |S|/2 unless S is a full line
// and w is constant on it (then N = p).
struct DirectionBoundVerdict {
  int perfect_count = 0;
  Rat bound;      // |S|/2
  bool exempt = false;
  bool pass = false;
};

DirectionBoundVerdict verify_direction_bound(const WeightFunction& w);

// Redei-Megyesi count for |S| = p: S determines at least (p+3)/2 directions
// unless S is a line. Throws std::invalid_argument when |S| != p.
struct RedeiMegyesiReport {
  int determined_count = 0;
  bool is_line = false;
  bool pass = false;
};

RedeiMegyesiReport redei_megyesi_check(const std::set<Point>& s, PrimeModulus p);

// Degenerate shapes of the perfect set (w extended by zero off the support):
// all p+1 directions perfect iff w is constant on the plane; exactly one
// imperfect direction iff w is constant along every line of that pencil.
enum class DegenerateClass { kAllPerfect, kExactlyOneImperfect, kGeneric };

struct DegenerateReport {
  DegenerateClass kind = DegenerateClass::kGeneric;
  std::optional<Direction> imperfect_direction;
};

DegenerateReport classify_degenerate(const WeightFunction& w);

// True when every nonempty line of pencil d is fully inside the support and
// carries a single value, i.e. w is constant on every line of the pencil.
bool constant_on_pencil(const WeightFunction& w, Direction d);

// {"p": p, "share": {"num": ..., "den": ...}, "N": n, "D": d,
//  "directions": [{"slope": "...", "perfect": b, "determined": b,
//                  "lineSums": ["num/den", ...]}, ...]}
std::string report_to_json(const DirectionReport& report);

// One row per (direction, offset): slope,offset,line_sum with the exact sum
// as "num/den".
std::string report_to_csv(const DirectionReport& report);

}  // namespace perfdir
