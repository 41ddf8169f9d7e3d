#include "skolem/format.hpp"

#include <charconv>
#include <sstream>

namespace skolem {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return v;
}

struct Record {
  std::uint64_t n = 0;
  std::size_t header_line = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

PairSet build(Record& r) {
  try {
    return PairSet(r.n, std::move(r.pairs));
  } catch (const PreconditionError& e) {
    throw ParseError("record at line " + std::to_string(r.header_line) + ": " + e.what());
  }
}

std::vector<std::uint32_t> pair_json(const Pair& p) { return {p.lo, p.hi}; }

}  // namespace

std::string to_text(const PairSet& s) {
  std::ostringstream os;
  os << "n=" << s.n() << '\n';
  for (const Pair& p : s.pairs()) os << p.lo << ' ' << p.hi << '\n';
  return os.str();
}

std::vector<PairSet> parse_text_stream(std::string_view text) {
  std::vector<PairSet> out;
  std::optional<Record> current;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("n=")) {
      if (current) out.push_back(build(*current));
      current = Record{parse_uint(trim(line.substr(2)), line_no), line_no, {}};
      continue;
    }
    if (!current) throw ParseError("line " + std::to_string(line_no) + ": pair before 'n=' header");

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x y'");
    }
    const std::uint64_t x = parse_uint(trim(line.substr(0, sep)), line_no);
    const std::uint64_t y = parse_uint(trim(line.substr(sep + 1)), line_no);
    if (x > kMaxModulus || y > kMaxModulus) {
      throw ParseError("line " + std::to_string(line_no) + ": pair member out of range");
    }
    current->pairs.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
  }
  if (current) out.push_back(build(*current));
  return out;
}

PairSet parse_text(std::string_view text) {
  auto records = parse_text_stream(text);
  if (records.size() != 1) {
    throw ParseError("expected exactly one pair set, found " + std::to_string(records.size()));
  }
  return std::move(records.front());
}

nlohmann::json to_json(const PairSet& s) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const Pair& p : s.pairs()) pairs.push_back(pair_json(p));
  return {{"n", s.n()}, {"pairs", std::move(pairs)}};
}

PairSet pair_set_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("pairs")) {
      throw ParseError("pair set object needs 'n' and 'pairs'");
    }
    if (!j.at("n").is_number_unsigned()) throw ParseError("'n' must be a non-negative integer");
    const auto& arr = j.at("pairs");
    if (!arr.is_array()) throw ParseError("'pairs' must be an array");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
          !p[1].is_number_unsigned()) {
        throw ParseError("each pair must be a two-element array of non-negative integers");
      }
      const auto x = p[0].get<std::uint64_t>();
      const auto y = p[1].get<std::uint64_t>();
      if (x > kMaxModulus || y > kMaxModulus) throw ParseError("pair member out of range");
      pairs.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
    }
    return PairSet(j.at("n").get<std::uint64_t>(), std::move(pairs));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

PairSet parse_auto(std::string_view input) {
  const std::string_view body = trim(input);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && body[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return pair_set_from_json(j);
  }
  return parse_text(input);
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const Pair& p : w.pairs) pairs.push_back(pair_json(p));
  return {{"kind", to_string(w.kind)}, {"value", w.value}, {"pairs", std::move(pairs)}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(to_json(w));
  nlohmann::json ordering = nullptr;
  if (r.skolem_ordering) {
    ordering = nlohmann::json::array();
    for (const Pair& p : *r.skolem_ordering) ordering.push_back(pair_json(p));
  }
  return {{"is_starter", r.is_starter},   {"is_strong", r.is_strong},
          {"is_skolem", r.is_skolem},     {"has_zero_sum", r.has_zero_sum},
          {"skolem_ordering", ordering},  {"witnesses", std::move(witnesses)}};
}

std::string report_text(const VerificationReport& r) {
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "# starter: " << yes_no(r.is_starter) << '\n'
     << "# strong: " << yes_no(r.is_strong) << '\n'
     << "# skolem: " << yes_no(r.is_skolem) << '\n'
     << "# zero sum present: " << yes_no(r.has_zero_sum) << '\n';
  if (r.skolem_ordering) {
    os << "# skolem ordering:";
    for (const Pair& p : *r.skolem_ordering) os << " (" << p.lo << ',' << p.hi << ')';
    os << '\n';
  }
  for (const Witness& w : r.witnesses) os << "# witness: " << w.describe() << '\n';
  return os.str();
}

}  // namespace skolem
