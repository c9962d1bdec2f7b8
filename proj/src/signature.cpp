#include "wreathlab/signature.hpp"

#include <limits>

namespace wreathlab {

Signature::Signature(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) {
    throw std::invalid_argument("signature needs at least one cyclic order");
  }
  widths_.reserve(orders_.size() + 1);
  widths_.push_back(1);
  for (int order : orders_) {
    if (order < 1) {
      throw std::invalid_argument("signature orders must be >= 1");
    }
    // widths are allocation sizes; refuse signatures whose trees cannot
    // be materialised rather than silently overflowing
    std::size_t prev = widths_.back();
    if (prev > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(order)) {
      throw std::overflow_error("signature level width overflows");
    }
    widths_.push_back(prev * static_cast<std::size_t>(order));
  }
}

BigInt group_order(const Signature& sig) {
  BigInt total = 1;
  for (int level = 0; level < sig.levels(); ++level) {
    if (sig.width(level) > std::numeric_limits<unsigned>::max()) {
      throw std::overflow_error("signature too wide for group_order");
    }
    BigInt factor = boost::multiprecision::pow(
        BigInt(sig.order(level)), static_cast<unsigned>(sig.width(level)));
    total *= factor;
  }
  return total;
}

}  // namespace wreathlab
