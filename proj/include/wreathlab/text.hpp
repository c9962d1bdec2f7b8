#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "wreathlab/morse_orbit.hpp"
#include "wreathlab/signature.hpp"
#include "wreathlab/tree_element.hpp"
#include "wreathlab/two_level.hpp"

namespace wreathlab {

// Literal syntax error carrying the byte offset and the expected token.
struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::string expected_token)
      : std::runtime_error("parse error at byte " + std::to_string(offset) +
                           ": expected " + expected_token),
        offset(offset),
        expected(std::move(expected_token)) {}

  std::size_t offset;
  std::string expected;
};

// Signature literal: orders joined by 'x', e.g. "2x3x5".
Signature parse_signature(std::string_view text);
std::string format_signature(const Signature& sig);

// Element literal: per-level label vectors, e.g. "[1; 2,0]" for sig 2x3.
TreeElement parse_element(const Signature& sig, std::string_view text);
std::string format_element(const TreeElement& g);

// Leaf literal: comma-separated digits, e.g. "0,1".
LeafWord parse_leaf(const Signature& sig, std::string_view text);
std::string format_leaf(const LeafWord& leaf);

// Pair literal mirroring the tableau notation: "(a; b1,b2,...,bn)".
WreathPair parse_pair(const TwoLevelWreath& w, std::string_view text);
std::string format_pair(const WreathPair& x);

// H element literal: "(k; s1,...,sn)" with signed entries.
HElement parse_h_element(int n, PhiVariant variant, std::string_view text);
std::string format_h_element(const HElement& x);

// Word literal: whitespace-separated letters "r", "r^-3", "t1", "t2^5".
HWord parse_word(int n, std::string_view text);
std::string format_word(const HWord& word);

nlohmann::json signature_to_json(const Signature& sig);
nlohmann::json element_to_json(const TreeElement& g);
nlohmann::json leaf_to_json(const LeafWord& leaf);
nlohmann::json pair_to_json(const WreathPair& x);
nlohmann::json h_element_to_json(const HElement& x);

}  // namespace wreathlab
