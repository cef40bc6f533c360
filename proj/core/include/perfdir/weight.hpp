#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "perfdir/affine.hpp"
#include "perfdir/plane.hpp"
#include "perfdir/rational.hpp"

namespace perfdir {

// Weight function w: F_p^2 -> Q, stored sparsely. Stored values are never
// zero, so the key set is exactly the support S.
class WeightFunction {
 public:
  explicit WeightFunction(PrimeModulus p) : p_(p) {}

  PrimeModulus modulus() const { return p_; }
  const std::map<Point, Rat>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Value at z, zero off the support.
  Rat value_at(Point z) const;

  // Overwrites w(z); a zero value clears the point from the support.
  // Throws std::out_of_range when z is not a canonical residue pair.
  void set(Point z, const Rat& value);

  // Accumulates w(z) += value, dropping the point if the sum cancels.
  void add(Point z, const Rat& value);

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  PrimeModulus p_;
  std::map<Point, Rat> entries_;
};

Rat total_mass(const WeightFunction& w);

// Exact sum of w over the p points of l. Throws on mismatched moduli.
Rat line_sum(const WeightFunction& w, const Line& l);

// Pushforward along m: result(m(z)) = w(z). Support size is preserved.
WeightFunction transform_weight(const AffineMap& m, const WeightFunction& w);

// Weight JSON schema (bit-exact):
//   {"p": <int>, "entries": [{"x": <int>, "y": <int>,
//                             "num": <int-string>, "den": <int-string>}, ...]}
// num/den may also be plain JSON integers on input.
WeightFunction parse_weight(const std::string& json_text);
std::string weight_to_json(const WeightFunction& w);

// Real-valued input prior to rationalization; values are exact decimal
// literals ("0.333333"), kept as strings so the approximation target is
// platform-independent.
struct RealWeightInput {
  PrimeModulus p;
  std::map<Point, std::string> entries;
};

// Same schema with "value": "<decimal-string>" in place of num/den.
RealWeightInput parse_real_weight(const std::string& json_text);

struct RationalizeResult {
  WeightFunction weight;
  long long achieved_q = 0;
  Rat max_error;
};

// Replaces a real-valued weight by w_Q/Q with integer-valued w_Q and a common
// denominator Q <= max_q, scanning Q upward until the per-entry error bound
//   |w(z) - w_Q(z)/Q| < 1/(2pQ)
// is met with the support and the equality pattern of values preserved.
// Throws std::runtime_error when no admissible Q <= max_q exists and
// std::invalid_argument on malformed input (zero entries, max_q < 1).
RationalizeResult rationalize(const RealWeightInput& input, long long max_q);

}  // namespace perfdir
