#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pcsc/errors.hpp"
#include "pcsc/model.hpp"
#include "pcsc/rational.hpp"

// Profile documents:
//
//   # comment
//   alternatives: a b c
//   3: a > b > c
//   1: b > a > c
//
// Lottery specs: "a:1/2,b:1/2"; omitted alternatives get probability 0.
namespace pcsc {

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto k = s.find(sep);
    out.push_back(trim(s.substr(0, k)));
    if (k == std::string_view::npos) return out;
    s.remove_prefix(k + 1);
  }
}
}  // namespace detail

inline Profile parse_profile(std::string_view text) {
  std::optional<AlternativeSet> alts;
  std::vector<Ranking> ballots;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  while (!text.empty() || line_no == 0) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) {
      if (text.empty()) break;
      continue;
    }
    const auto colon = line.find(':');
    if (!alts) {
      if (colon == std::string_view::npos || detail::trim(line.substr(0, colon)) != "alternatives")
        throw ParseError(ParseErrorKind::BadHeader, line_no, "expected 'alternatives: ...' header");
      auto names = detail::split_words(line.substr(colon + 1));
      if (names.empty()) throw ParseError(ParseErrorKind::BadHeader, line_no, "header lists no alternatives");
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (names[i] == names[j])
            throw ParseError(ParseErrorKind::BadHeader, line_no, "alternative '" + names[i] + "' listed twice");
      alts = AlternativeSet(std::move(names));
      header_line = line_no;
      continue;
    }
    if (colon == std::string_view::npos)
      throw ParseError(ParseErrorKind::BadLine, line_no, "expected 'count: x > y > ...'");
    const std::string_view count_text = detail::trim(line.substr(0, colon));
    std::size_t count = 0;
    if (count_text.empty()) throw ParseError(ParseErrorKind::BadMultiplicity, line_no, "missing multiplicity");
    for (char ch : count_text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || count > 1'000'000)
        throw ParseError(ParseErrorKind::BadMultiplicity, line_no,
                         "bad multiplicity '" + std::string(count_text) + "'");
      count = count * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (count == 0) throw ParseError(ParseErrorKind::BadMultiplicity, line_no, "multiplicity must be at least 1");
    std::vector<Alt> order;
    std::vector<bool> seen(alts->size(), false);
    for (std::string_view label : detail::split(line.substr(colon + 1), '>')) {
      const auto x = alts->find(std::string(label));
      if (!x) throw ParseError(ParseErrorKind::UnknownLabel, line_no, "unknown alternative '" + std::string(label) + "'");
      if (seen[x->index])
        throw ParseError(ParseErrorKind::DuplicateAlternative, line_no,
                         "alternative '" + std::string(label) + "' appears twice");
      seen[x->index] = true;
      order.push_back(*x);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw ParseError(ParseErrorKind::MissingAlternative, line_no,
                         "ranking is missing alternative '" + alts->name(Alt{i}) + "'");
    const Ranking r(*alts, std::move(order));
    for (std::size_t k = 0; k < count; ++k) ballots.push_back(r);
  }
  if (!alts) throw ParseError(ParseErrorKind::BadHeader, line_no, "missing 'alternatives:' header");
  if (ballots.empty()) throw ParseError(ParseErrorKind::EmptyBody, header_line, "profile has no ballots");
  return Profile(*alts, std::move(ballots));
}

// Runs of identical consecutive ballots share one line.
inline std::string format_profile(const Profile& profile) {
  std::string out = "alternatives:";
  for (const auto& name : profile.alternatives().names()) out += " " + name;
  out += "\n";
  const auto& b = profile.ballots();
  for (std::size_t i = 0; i < b.size();) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    out += std::to_string(j - i) + ": " + b[i].to_string(" > ") + "\n";
    i = j;
  }
  return out;
}

inline Lottery parse_lottery(std::string_view text, const AlternativeSet& alts) {
  std::vector<Rational> p(alts.size(), Rational(0));
  std::vector<bool> seen(alts.size(), false);
  if (detail::trim(text).empty()) throw ParseError(ParseErrorKind::BadLine, 0, "empty lottery");
  for (std::string_view entry : detail::split(text, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(ParseErrorKind::BadLine, 0, "expected 'label:probability', got '" + std::string(entry) + "'");
    const std::string label(detail::trim(entry.substr(0, colon)));
    const auto x = alts.find(label);
    if (!x) throw ParseError(ParseErrorKind::UnknownLabel, 0, "unknown alternative '" + label + "'");
    if (seen[x->index]) throw ParseError(ParseErrorKind::DuplicateAlternative, 0, "alternative '" + label + "' given twice");
    seen[x->index] = true;
    Rational v = parse_rational(detail::trim(entry.substr(colon + 1)));
    if (v < 0) throw ParseError(ParseErrorKind::NegativeProbability, 0, "negative probability for '" + label + "'");
    p[x->index] = std::move(v);
  }
  Rational sum = 0;
  for (const auto& v : p) sum += v;
  if (sum != 1) throw ParseError(ParseErrorKind::BadSum, 0, "probabilities sum to " + sum.get_str() + ", not 1");
  return Lottery(alts, std::move(p));
}

inline std::string format_lottery(const Lottery& p) { return p.to_string(); }

}  // namespace pcsc
