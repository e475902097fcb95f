#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lasgap {

// A subset of {1,...,n} stored as an n-bit mask: bit i-1 is set iff i is a
// member. The mask is the universal index for all lattice-indexed data.
using SubsetMask = std::uint32_t;

// Full-lattice vectors hold 2^n entries, so n is capped at desk scale.
inline constexpr int kMaxVars = 20;

inline int cardinality(SubsetMask s) { return std::popcount(s); }

// 1-based membership test.
inline bool contains(SubsetMask s, int i) { return (s >> (i - 1)) & 1u; }

inline bool is_subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

inline SubsetMask full_mask(int n) {
  return n == 0 ? 0u : (SubsetMask{1} << n) - 1u;
}

// Sorted 1-based element list.
std::vector<int> subset_elements(SubsetMask s);

// Throws std::invalid_argument on out-of-range or repeated elements.
SubsetMask mask_from_elements(const std::vector<int>& elements, int n);

// "[]" or "[1,3]": sorted 1-based elements, no spaces.
std::string format_subset(SubsetMask s);

// Parses the format above; nullopt on malformed input, unsorted or
// out-of-range elements.
std::optional<SubsetMask> parse_subset(const std::string& text, int n);

// Lexicographic order on sorted element lists ({} < {1,3} < {2}), used for
// deterministic argmin tie-breaks.
bool lex_less(SubsetMask a, SubsetMask b);

}  // namespace lasgap
