#pragma once

/**
 * @file format.hpp
 * @brief Text and JSON encodings of pair sets and verification reports.
 *
 * Text form of one pair set:
 *
 *     n=11
 *     1 6
 *     2 4
 *     ...
 *
 * Pairs are written smaller member first, sorted by that member. Lines whose
 * first non-blank character is '#' and blank lines are ignored on input, so
 * annotated command output parses back to the same set. A stream may hold
 * several records, each opened by its own `n=` header.
 *
 * JSON form: {"n": 11, "pairs": [[1, 6], [2, 4], ...]}.
 */

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skolem/starter.hpp"

namespace skolem {

std::string to_text(const PairSet& s);

/// Exactly one record. Throws ParseError.
PairSet parse_text(std::string_view text);

/// Zero or more records. Throws ParseError.
std::vector<PairSet> parse_text_stream(std::string_view text);

nlohmann::json to_json(const PairSet& s);

/// Throws ParseError on a missing field, wrong type or malformed pair set.
PairSet pair_set_from_json(const nlohmann::json& j);

/// Chooses JSON when the first non-blank character is '{', else text.
PairSet parse_auto(std::string_view input);

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const VerificationReport& r);

/// Multi-line human summary, every line starting with "# ".
std::string report_text(const VerificationReport& r);

}  // namespace skolem
