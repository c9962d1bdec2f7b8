#include "wreathlab/text.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace wreathlab {

namespace {

// Minimal recursive-descent cursor; every failure reports the byte offset.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t offset() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) throw ParseError(pos_, what);
  }

  void expect_end() {
    if (!at_end()) throw ParseError(pos_, "end of input");
  }

  long long integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < text_.size() && (text_[i] == '-' || text_[i] == '+')) ++i;
    std::size_t digits_begin = i;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    if (i == digits_begin) throw ParseError(pos_, what);
    long long value = 0;
    try {
      value = std::stoll(std::string(text_.substr(start, i - start)));
    } catch (const std::out_of_range&) {
      throw ParseError(start, "integer within 64-bit range");
    }
    pos_ = i;
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<long long> integer_list(Cursor& cursor, const char* what) {
  std::vector<long long> values;
  values.push_back(cursor.integer(what));
  while (cursor.try_consume(',')) values.push_back(cursor.integer(what));
  return values;
}

int narrow(long long value, std::size_t offset, const char* what) {
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw ParseError(offset, what);
  }
  return static_cast<int>(value);
}

}  // namespace

Signature parse_signature(std::string_view text) {
  Cursor cursor(text);
  std::vector<int> orders;
  orders.push_back(narrow(cursor.integer("cyclic order"), cursor.offset(), "cyclic order"));
  while (cursor.try_consume('x')) {
    orders.push_back(narrow(cursor.integer("cyclic order"), cursor.offset(), "cyclic order"));
  }
  cursor.expect_end();
  for (int order : orders) {
    if (order < 1) throw ParseError(0, "cyclic order >= 1");
  }
  return Signature(std::move(orders));
}

std::string format_signature(const Signature& sig) {
  std::ostringstream out;
  for (int l = 0; l < sig.levels(); ++l) {
    if (l > 0) out << 'x';
    out << sig.order(l);
  }
  return out.str();
}

TreeElement parse_element(const Signature& sig, std::string_view text) {
  Cursor cursor(text);
  cursor.expect('[', "'['");
  std::vector<std::vector<int>> labels;
  do {
    std::size_t at = cursor.offset();
    std::vector<int> row;
    for (long long value : integer_list(cursor, "label")) {
      row.push_back(narrow(value, at, "label in level range"));
    }
    labels.push_back(std::move(row));
  } while (cursor.try_consume(';'));
  cursor.expect(']', "']'");
  cursor.expect_end();
  try {
    return TreeElement(sig, std::move(labels));
  } catch (const std::invalid_argument& error) {
    throw ParseError(0, std::string("element matching signature (") + error.what() + ")");
  }
}

std::string format_element(const TreeElement& g) {
  std::ostringstream out;
  out << '[';
  for (int level = 0; level < g.signature().levels(); ++level) {
    if (level > 0) out << "; ";
    const auto& row = g.labels()[static_cast<std::size_t>(level)];
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (v > 0) out << ',';
      out << row[v];
    }
  }
  out << ']';
  return out.str();
}

LeafWord parse_leaf(const Signature& sig, std::string_view text) {
  Cursor cursor(text);
  LeafWord leaf;
  std::size_t at = cursor.offset();
  for (long long value : integer_list(cursor, "leaf digit")) {
    leaf.push_back(narrow(value, at, "leaf digit"));
  }
  cursor.expect_end();
  if (leaf.size() != static_cast<std::size_t>(sig.levels())) {
    throw ParseError(0, "one digit per signature level");
  }
  for (int l = 0; l < sig.levels(); ++l) {
    if (leaf[static_cast<std::size_t>(l)] < 0 ||
        leaf[static_cast<std::size_t>(l)] >= sig.order(l)) {
      throw ParseError(0, "leaf digit in level range");
    }
  }
  return leaf;
}

std::string format_leaf(const LeafWord& leaf) {
  std::ostringstream out;
  for (std::size_t i = 0; i < leaf.size(); ++i) {
    if (i > 0) out << ',';
    out << leaf[i];
  }
  return out.str();
}

namespace {

// shared shape of "(head; v1,...,vn)" literals
std::pair<long long, std::vector<long long>> parse_pair_shape(std::string_view text) {
  Cursor cursor(text);
  cursor.expect('(', "'('");
  long long head = cursor.integer("integer");
  cursor.expect(';', "';'");
  std::vector<long long> values = integer_list(cursor, "integer");
  cursor.expect(')', "')'");
  cursor.expect_end();
  return {head, std::move(values)};
}

}  // namespace

WreathPair parse_pair(const TwoLevelWreath& w, std::string_view text) {
  auto [head, values] = parse_pair_shape(text);
  WreathPair x;
  x.top = narrow(head, 0, "top in active range");
  for (long long value : values) {
    x.base.push_back(narrow(value, 0, "base entry in passive range"));
  }
  try {
    w.validate(x);
  } catch (const std::invalid_argument& error) {
    throw ParseError(0, std::string("pair matching the wreath product (") + error.what() + ")");
  }
  return x;
}

std::string format_pair(const WreathPair& x) {
  std::ostringstream out;
  out << '(' << x.top << "; ";
  for (std::size_t i = 0; i < x.base.size(); ++i) {
    if (i > 0) out << ',';
    out << x.base[i];
  }
  out << ')';
  return out.str();
}

HElement parse_h_element(int n, PhiVariant variant, std::string_view text) {
  auto [head, values] = parse_pair_shape(text);
  if (values.size() != static_cast<std::size_t>(n)) {
    throw ParseError(0, "one exponent per tau generator");
  }
  return HElement{head, std::move(values), variant};
}

std::string format_h_element(const HElement& x) {
  std::ostringstream out;
  out << '(' << x.k << "; ";
  for (std::size_t i = 0; i < x.s.size(); ++i) {
    if (i > 0) out << ',';
    out << x.s[i];
  }
  out << ')';
  return out.str();
}

HWord parse_word(int n, std::string_view text) {
  HWord word;
  Cursor cursor(text);
  while (!cursor.at_end()) {
    WordLetter letter;
    std::size_t at = cursor.offset();
    if (cursor.try_consume('r')) {
      letter.symbol = 0;
    } else if (cursor.try_consume('t')) {
      long long index = cursor.integer("tau index");
      if (index < 1 || index > n) throw ParseError(at, "tau index in 1..n");
      letter.symbol = static_cast<int>(index);
    } else {
      throw ParseError(cursor.offset(), "letter 'r' or 't<index>'");
    }
    if (cursor.try_consume('^')) {
      letter.exponent = cursor.integer("exponent");
      if (letter.exponent == 0) throw ParseError(at, "nonzero exponent");
    } else {
      letter.exponent = 1;
    }
    word.letters.push_back(letter);
  }
  return word;
}

std::string format_word(const HWord& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i > 0) out << ' ';
    const WordLetter& letter = word.letters[i];
    if (letter.symbol == 0) {
      out << 'r';
    } else {
      out << 't' << letter.symbol;
    }
    if (letter.exponent != 1) out << '^' << letter.exponent;
  }
  return out.str();
}

nlohmann::json signature_to_json(const Signature& sig) {
  return nlohmann::json(sig.orders());
}

nlohmann::json element_to_json(const TreeElement& g) {
  return nlohmann::json(g.labels());
}

nlohmann::json leaf_to_json(const LeafWord& leaf) {
  return nlohmann::json(leaf);
}

nlohmann::json pair_to_json(const WreathPair& x) {
  return nlohmann::json{{"top", x.top}, {"base", x.base}};
}

nlohmann::json h_element_to_json(const HElement& x) {
  return nlohmann::json{{"k", x.k}, {"s", x.s}};
}

}  // namespace wreathlab
