#pragma once
#include <bit>
#include <cstdint>

namespace burnlab {

// Vertex sets are machine words. Everything in this library is desk scale
// (the exact engines refuse instances past ~30 vertices anyway), so 64 bits
// of state per set is plenty and keeps the solver's inner loops branch-free.
using Bits = std::uint64_t;

inline int popcount(Bits b) { return std::popcount(b); }
inline Bits bit(int v) { return Bits{1} << v; }
inline bool test_bit(Bits b, int v) { return (b >> v) & Bits{1}; }
inline int lowest_bit(Bits b) { return std::countr_zero(b); }

// Mask with bits 0..n-1 set. Bits at positions >= n stay zero everywhere.
inline Bits mask_below(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

}  // namespace burnlab
