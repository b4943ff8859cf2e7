#pragma once

#include <string>
#include <vector>

#include "quatring/quat.hpp"

namespace quatring {

// Canonical text form. Integer-coordinate points print as a signed term sum
// ("1+2i-3j+k", "-i", "0"); half-odd points print parenthesized over 2
// ("(1+i+j+k)/2"). format_quat and parse_quat round-trip on order elements.
std::string format_quat(const Quat& q);

// Parses a single literal: optional sign, terms <int>, <int>i|j|k or bare
// i|j|k, or a parenthesized integer sum divided by 2. Whitespace is ignored.
// Half coordinates are only valid when all four numerators are odd, and any
// coordinate beyond 2^30 in absolute value is rejected. Errors carry the
// 1-based character position.
Quat parse_quat(const std::string& text);

struct ParsedSet {
    std::vector<Quat> elements;  // canonically sorted, unique
    std::size_t duplicates = 0;  // how many payload tokens were dropped
};

// Splits a payload on top-level commas and/or newlines into trimmed tokens.
std::vector<std::string> split_set_payload(const std::string& payload);

// Parses payload tokens into a set over `ring`. Errors (malformed literal,
// element outside the ring) carry the 1-based token position.
ParsedSet parse_set_tokens(const std::vector<std::string>& tokens, Ring ring);

inline ParsedSet parse_quat_set(const std::string& payload, Ring ring) {
    return parse_set_tokens(split_set_payload(payload), ring);
}

// "a, b, c" in canonical element order.
std::string format_quat_list(const std::vector<Quat>& elems);

}  // namespace quatring
