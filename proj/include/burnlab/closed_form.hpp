#pragma once
#include <optional>
#include <string>

#include "burnlab/burn.hpp"
#include "burnlab/family.hpp"

namespace burnlab {

// Exact value when lo == hi, otherwise a proven enclosing interval.
struct ValueRange {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  std::string str() const {
    if (exact()) return std::to_string(lo);
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
};

struct FamilyAnswer {
  ValueRange b2;  // minimum completion rounds, threshold 2
  ValueRange t2;  // minimum source count among round-optimal sequences
  std::optional<BurnSequence> witness;  // proof construction when one exists
  std::string note;                     // which rule produced the numbers
};

// Closed-form values for the instance the spec describes. Families without a
// proven formula get enclosing intervals and say so in the note.
FamilyAnswer closed_form(const FamilySpec& spec);

// The explicit source sequence from the matching proof construction.
// Throws std::invalid_argument naming the missing piece when the spec falls
// outside every construction's hypotheses.
BurnSequence construct_sequence(const FamilySpec& spec);

// Corona witness for a raw base graph: breadth-first order v1..vn from
// vertex 0, sequence (v1, v2', ..., vn', v1') of length n+1.
BurnSequence corona_sequence(const Graph& base);

// Box-product bounds from factor answers. Upper bounds hold for any factors
// (interleaved construction); the lower bound max(5, factor values) needs the
// size hypotheses, so outside them only the trivial floor is claimed.
// Interval arithmetic keeps the bounds valid when a factor is itself only
// known to an interval.
FamilyAnswer product_bounds(const FamilyAnswer& a, int size_a,
                            const FamilyAnswer& b, int size_b);

// Smallest wheel from the gap schema whose b2 exceeds t2 by at least `gap`:
// rim (k-1)^2 - 5 for the least k >= 5 with 2(k-1) > gap^2.
FamilySpec wheel_gap_instance(int gap);

}  // namespace burnlab
