#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perfdir/plane.hpp"
#include "perfdir/weight.hpp"

namespace perfdir {

// Element of SO(2,p): the matrix with rows (a,-b), (b,a), a^2 + b^2 = 1.
// The group is cyclic of order p - (-1/p).
struct RotationMatrix {
  int a = 1;
  int b = 0;

  friend auto operator<=>(const RotationMatrix&, const RotationMatrix&) = default;
};

// Legendre symbol (-1/p): +1 when p = 1 (mod 4), -1 when p = 3 (mod 4).
int legendre_minus_one(PrimeModulus p);

// All of SO(2,p) in generator order g^0, g^1, ..., starting at the identity.
// The generator is the first maximal-order element in the lexicographic
// (a,b) scan, so the output is deterministic.
std::vector<RotationMatrix> so2_group(PrimeModulus p);

RotationMatrix rotation_multiply(PrimeModulus p, RotationMatrix lhs, RotationMatrix rhs);
Point rotation_apply(PrimeModulus p, RotationMatrix m, Point z);

// A generated extremal weight together with the counts it is expected to
// achieve; the analysis module confirms the prediction instance by instance.
struct ConstructionResult {
  WeightFunction weight;
  int predicted_perfect = 0;
  std::optional<int> predicted_determined;
  std::string notes;
};

// Orbit of a nonzero point z under the order-2n subgroup of SO(2,p), with
// weight +1 on the index-2 suborbit of z and -1 elsewhere. |S| = 2n and
// exactly n directions (those spanned by mixed-sign pairs) are perfect.
// Requires 2n | p - (-1/p) and z != (0,0).
ConstructionResult so2_orbit_example(PrimeModulus p, int n, Point z = Point{1, 0});

// Indicator of the graph of z -> z^((p+1)/2): |S| = p, (p+3)/2 determined
// directions, and the (p-1)/2 undetermined ones are perfect.
ConstructionResult power_graph_example(PrimeModulus p);

// Difference of two line indicators. Nonparallel (y=0 minus x=0): the
// crossing cancels, |S| = 2(p-1), N = p-1. Parallel (+1 on y=0, -1 on y=1):
// |S| = 2p, N = p.
ConstructionResult two_lines_example(PrimeModulus p, bool parallel);

// Support of size p+2 with nonzero total mass and two perfect directions:
// w = 1/2 on the unit square corners, 1 on the diagonal tail (x,x),
// x in [2, p-1]. Requires p >= 5.
ConstructionResult small_support_example(PrimeModulus p);

// {"p": p, "predictedN": n, "predictedD": d | null, "notes": "...",
//  "weight": <weight JSON object>}
std::string construction_to_json(const ConstructionResult& result);

}  // namespace perfdir
