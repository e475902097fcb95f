#include "lasgap/subset.hpp"

#include <charconv>
#include <stdexcept>

namespace lasgap {

std::vector<int> subset_elements(SubsetMask s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  for (int i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

SubsetMask mask_from_elements(const std::vector<int>& elements, int n) {
  SubsetMask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("subset element out of range");
    const SubsetMask bit = SubsetMask{1} << (e - 1);
    if (m & bit) throw std::invalid_argument("repeated subset element");
    m |= bit;
  }
  return m;
}

std::string format_subset(SubsetMask s) {
  std::string out = "[";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += ']';
  return out;
}

std::optional<SubsetMask> parse_subset(const std::string& text, int n) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
  SubsetMask m = 0;
  int prev = 0;
  const char* p = text.data() + 1;
  const char* end = text.data() + text.size() - 1;
  while (p != end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || value <= prev || value > n) return std::nullopt;
    m |= SubsetMask{1} << (value - 1);
    prev = value;
    p = next;
    if (p != end) {
      if (*p != ',') return std::nullopt;
      ++p;
      if (p == end) return std::nullopt;
    }
  }
  return m;
}

bool lex_less(SubsetMask a, SubsetMask b) {
  while (a != 0 && b != 0) {
    const int ea = std::countr_zero(a);
    const int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace lasgap
