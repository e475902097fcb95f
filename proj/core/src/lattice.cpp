#include "lasgap/lattice.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace lasgap {

namespace {

std::unique_ptr<CanonicalOrder> build_order(int n) {
  auto order = std::make_unique<CanonicalOrder>();
  order->n = n;
  const std::size_t size = std::size_t{1} << n;

  std::vector<std::vector<SubsetMask>> buckets(static_cast<std::size_t>(n) + 1);
  for (SubsetMask m = 0; m < size; ++m) {
    buckets[static_cast<std::size_t>(cardinality(m))].push_back(m);
  }

  order->pos_to_mask.reserve(size);
  order->level_size.resize(static_cast<std::size_t>(n) + 1);
  for (int card = 0; card <= n; ++card) {
    for (SubsetMask m : buckets[static_cast<std::size_t>(card)]) {
      order->pos_to_mask.push_back(m);
    }
    order->level_size[static_cast<std::size_t>(card)] = order->pos_to_mask.size();
  }

  order->mask_to_pos.resize(size);
  for (std::size_t p = 0; p < size; ++p) {
    order->mask_to_pos[order->pos_to_mask[p]] = static_cast<std::int32_t>(p);
  }
  return order;
}

}  // namespace

const CanonicalOrder& canonical_order(int n) {
  if (n < 0 || n > kMaxVars) {
    throw std::invalid_argument("canonical_order: n must be in [0, 20]");
  }
  static std::array<std::unique_ptr<CanonicalOrder>, kMaxVars + 1> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot = build_order(n);
  return *slot;
}

std::vector<SubsetMask> enumerate_subsets(int n, int t) {
  if (n < 0 || n > kMaxVars || t < 0 || t > n) {
    throw std::invalid_argument("enumerate_subsets: require 0 <= t <= n <= 20");
  }
  const auto& order = canonical_order(n);
  return {order.pos_to_mask.begin(),
          order.pos_to_mask.begin() + static_cast<std::ptrdiff_t>(order.level_size[t])};
}

}  // namespace lasgap
