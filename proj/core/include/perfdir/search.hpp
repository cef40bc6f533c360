#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perfdir/plane.hpp"
#include "perfdir/weight.hpp"

namespace perfdir {

enum class SearchConstraint { kNone, kNonzeroAverage, kNonnegativeValues };
enum class SearchMode { kExhaustive, kRandomized };

// Search family: weights with support size in [support_min, support_max] and
// values drawn from a finite zero-free value set, optionally constrained.
// Exhaustive mode covers the family up to affine symmetry; randomized mode
// samples it reproducibly from a 64-bit seed.
struct SearchSpec {
  PrimeModulus p;
  int support_min = 1;
  int support_max = 1;
  std::vector<Rat> value_set;
  SearchConstraint constraint = SearchConstraint::kNone;
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  int witness_cap = 16;
};

static constexpr int kMaxExhaustiveModulus = 13;
static constexpr int kMaxRandomizedModulus = 31;

// {"p": .., "supportSizes": {"min": .., "max": ..}, "valueSet": ["1","-1/2"],
//  "constraint": "none"|"nonzeroAverage"|"nonnegativeValues",
//  "mode": "exhaustive"|"randomized", "seed": .., "samples": ..,
//  "maxNodes": .., "witnessCap": ..}
SearchSpec parse_search_spec(const std::string& json_text);
std::string search_spec_to_json(const SearchSpec& spec);

struct SearchResult {
  int best_perfect_count = -1;  // -1 when nothing was evaluated
  bool exhaustive = false;      // true iff the whole family was covered
  std::uint64_t nodes_explored = 0;
  std::uint64_t witness_count = 0;  // distinct affine classes achieving the max
  std::vector<WeightFunction> witnesses;  // canonical representatives, capped
};

// Runs the search. Work is split into deterministic candidate ranges;
// `threads` only controls how many run concurrently, never the outcome, so
// serial and parallel runs agree byte for byte. `resume_path`, when given,
// names a checkpoint file holding a JSON list of completed range ids:
// those ranges are skipped and the file is rewritten as ranges finish.
SearchResult run_search(const SearchSpec& spec, int threads = 1,
                        const std::string& resume_path = std::string());

std::string search_result_to_json(const SearchResult& result);

// Canonical representative of the orbit of w under the full affine group:
// the least weight function in the orbit under the entry-order comparison
// (sorted (x, y, value) triples). Exact orbit minimum for p <= 13, greedy
// generator descent beyond; idempotent either way.
WeightFunction affine_canonical(const WeightFunction& w);

// Exhaustively re-verifies the perfect-direction counting bound over every
// weight with support size <= max_support and values in value_set, deduped
// by affine symmetry. Any violation is an implementation bug.
struct BoundCheckResult {
  std::uint64_t checked = 0;
  std::vector<WeightFunction> violations;
  bool complete = false;  // false when max_nodes cut the run short
};

BoundCheckResult verify_bound_exhaustive(PrimeModulus p, int max_support,
                                         const std::vector<Rat>& value_set,
                                         std::uint64_t max_nodes = 0);

}  // namespace perfdir
