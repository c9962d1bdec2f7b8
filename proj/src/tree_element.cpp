#include "wreathlab/tree_element.hpp"

#include <numeric>
#include <stdexcept>

namespace wreathlab {

namespace {

// Per-level byte width of the canonical encoding, chosen from the label
// range so encodings are portable across runs.
int encoded_bytes(int order) {
  if (order <= 0x100) return 1;
  if (order <= 0x10000) return 2;
  return 4;
}

void check_same_signature(const TreeElement& g, const TreeElement& h) {
  if (!(g.signature() == h.signature())) {
    throw std::invalid_argument("tree elements have mismatched signatures");
  }
}

}  // namespace

TreeElement::TreeElement(Signature sig) : sig_(std::move(sig)) {
  labels_.resize(static_cast<std::size_t>(sig_.levels()));
  for (int level = 0; level < sig_.levels(); ++level) {
    labels_[static_cast<std::size_t>(level)].assign(sig_.width(level), 0);
  }
}

TreeElement::TreeElement(Signature sig, std::vector<std::vector<int>> labels)
    : sig_(std::move(sig)), labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(sig_.levels())) {
    throw std::invalid_argument("label level count does not match signature");
  }
  for (int level = 0; level < sig_.levels(); ++level) {
    const auto& row = labels_[static_cast<std::size_t>(level)];
    if (row.size() != sig_.width(level)) {
      throw std::invalid_argument("label vector width does not match signature");
    }
    int modulus = sig_.order(level);
    for (int value : row) {
      if (value < 0 || value >= modulus) {
        throw std::invalid_argument("label out of range for its level");
      }
    }
  }
}

bool TreeElement::is_identity() const {
  for (const auto& row : labels_) {
    for (int value : row) {
      if (value != 0) return false;
    }
  }
  return true;
}

std::string TreeElement::encode() const {
  std::string out;
  for (int level = 0; level < sig_.levels(); ++level) {
    int bytes = encoded_bytes(sig_.order(level));
    for (int value : labels_[static_cast<std::size_t>(level)]) {
      auto u = static_cast<std::uint32_t>(value);
      // big-endian, so byte-lexicographic order equals numeric label order
      for (int b = bytes - 1; b >= 0; --b) {
        out.push_back(static_cast<char>((u >> (8 * b)) & 0xFF));
      }
    }
  }
  return out;
}

std::vector<std::size_t> vertex_images(const TreeElement& g, int level) {
  const Signature& sig = g.signature();
  if (level < 0 || level > sig.levels()) {
    throw std::out_of_range("vertex level out of range");
  }
  std::vector<std::size_t> images{0};  // the root is fixed
  for (int l = 1; l <= level; ++l) {
    int order = sig.order(l - 1);
    std::vector<std::size_t> next(sig.width(l));
    for (std::size_t parent = 0; parent < sig.width(l - 1); ++parent) {
      int shift = g.label(l - 1, parent);
      for (int digit = 0; digit < order; ++digit) {
        std::size_t vertex = parent * static_cast<std::size_t>(order) +
                             static_cast<std::size_t>(digit);
        int image_digit = digit + shift;
        if (image_digit >= order) image_digit -= order;
        next[vertex] = images[parent] * static_cast<std::size_t>(order) +
                       static_cast<std::size_t>(image_digit);
      }
    }
    images = std::move(next);
  }
  return images;
}

TreeElement mul(const TreeElement& g, const TreeElement& h) {
  check_same_signature(g, h);
  const Signature& sig = g.signature();

  // Section recursion unrolled per level: the label of g*h at vertex v is
  // label_g(v) + label_h(g(v)), where g(v) is the image of v under g.
  std::vector<std::vector<int>> out(static_cast<std::size_t>(sig.levels()));
  std::vector<std::size_t> images{0};
  for (int level = 0; level < sig.levels(); ++level) {
    std::size_t width = sig.width(level);
    int modulus = sig.order(level);
    auto& row = out[static_cast<std::size_t>(level)];
    row.resize(width);
    for (std::size_t v = 0; v < width; ++v) {
      int sum = g.label(level, v) + h.label(level, images[v]);
      if (sum >= modulus) sum -= modulus;
      row[v] = sum;
    }
    if (level + 1 < sig.levels()) {
      // extend vertex images one level down along g
      std::vector<std::size_t> next(sig.width(level + 1));
      for (std::size_t parent = 0; parent < width; ++parent) {
        int shift = g.label(level, parent);
        for (int digit = 0; digit < modulus; ++digit) {
          std::size_t vertex = parent * static_cast<std::size_t>(modulus) +
                               static_cast<std::size_t>(digit);
          int image_digit = digit + shift;
          if (image_digit >= modulus) image_digit -= modulus;
          next[vertex] = images[parent] * static_cast<std::size_t>(modulus) +
                         static_cast<std::size_t>(image_digit);
        }
      }
      images = std::move(next);
    }
  }
  return TreeElement(sig, std::move(out));
}

TreeElement inv(const TreeElement& g) {
  const Signature& sig = g.signature();

  // label_{g^-1}(g(v)) = -label_g(v)
  std::vector<std::vector<int>> out(static_cast<std::size_t>(sig.levels()));
  std::vector<std::size_t> images{0};
  for (int level = 0; level < sig.levels(); ++level) {
    std::size_t width = sig.width(level);
    int modulus = sig.order(level);
    auto& row = out[static_cast<std::size_t>(level)];
    row.resize(width);
    for (std::size_t v = 0; v < width; ++v) {
      int value = g.label(level, v);
      row[images[v]] = value == 0 ? 0 : modulus - value;
    }
    if (level + 1 < sig.levels()) {
      std::vector<std::size_t> next(sig.width(level + 1));
      for (std::size_t parent = 0; parent < width; ++parent) {
        int shift = g.label(level, parent);
        for (int digit = 0; digit < modulus; ++digit) {
          std::size_t vertex = parent * static_cast<std::size_t>(modulus) +
                               static_cast<std::size_t>(digit);
          int image_digit = digit + shift;
          if (image_digit >= modulus) image_digit -= modulus;
          next[vertex] = images[parent] * static_cast<std::size_t>(modulus) +
                         static_cast<std::size_t>(image_digit);
        }
      }
      images = std::move(next);
    }
  }
  return TreeElement(sig, std::move(out));
}

TreeElement pow(const TreeElement& g, long long k) {
  if (k < 0) return pow(inv(g), -k);
  TreeElement result(g.signature());
  TreeElement base = g;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

LeafWord act_on_leaf(const TreeElement& g, const LeafWord& leaf) {
  const Signature& sig = g.signature();
  if (leaf.size() != static_cast<std::size_t>(sig.levels())) {
    throw std::out_of_range("leaf word length does not match signature");
  }
  LeafWord image(leaf.size());
  std::size_t prefix = 0;  // index of the original path prefix
  for (int l = 0; l < sig.levels(); ++l) {
    int order = sig.order(l);
    int digit = leaf[static_cast<std::size_t>(l)];
    if (digit < 0 || digit >= order) {
      throw std::out_of_range("leaf digit out of range");
    }
    int moved = digit + g.label(l, prefix);
    if (moved >= order) moved -= order;
    image[static_cast<std::size_t>(l)] = moved;
    prefix = prefix * static_cast<std::size_t>(order) + static_cast<std::size_t>(digit);
  }
  return image;
}

long long element_order(const TreeElement& g) {
  const Signature& sig = g.signature();
  std::vector<std::size_t> perm = vertex_images(g, sig.levels());
  std::vector<bool> seen(perm.size(), false);
  long long order = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    long long length = 0;
    std::size_t at = start;
    while (!seen[at]) {
      seen[at] = true;
      at = perm[at];
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

}  // namespace wreathlab
