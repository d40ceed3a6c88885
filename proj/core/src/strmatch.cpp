#include "strsup/strmatch.hpp"

#include <algorithm>

#include "strsup/errors.hpp"

namespace strsup {

std::vector<std::size_t> failure_function(const Str& p) {
  const std::string& s = p.ids();
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1, k = 0; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

std::vector<std::size_t> occurrence_starts(const Str& pattern, const Str& text) {
  if (pattern.empty()) throw ContractViolation("occurrences: empty pattern");
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  const std::string& p = pattern.ids();
  const std::string& t = text.ids();
  auto border = failure_function(pattern);
  for (std::size_t i = 0, k = 0; i < t.size(); ++i) {
    while (k > 0 && t[i] != p[k]) k = border[k - 1];
    if (t[i] == p[k]) ++k;
    if (k == p.size()) {
      out.push_back(i + 1 - p.size());
      k = border[k - 1];
    }
  }
  return out;
}

std::vector<Occurrence> occurrences(const Str& pattern, const Str& text) {
  std::vector<Occurrence> out;
  for (std::size_t start : occurrence_starts(pattern, text))
    out.push_back(Occurrence{start, text.substr(0, start), text.substr(start + pattern.size())});
  return out;
}

std::vector<Overlap> overlaps(const Str& left, const Str& right) {
  std::vector<Overlap> out;
  if (left.empty() || right.empty()) return out;
  const std::string& r = right.ids();
  const std::string& l = left.ids();
  auto border = failure_function(right);

  // Run the matcher for `right` over `left`; the final state is the longest
  // suffix of left that is a prefix of right. Shorter ones are its borders.
  std::size_t k = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (k == r.size()) k = border[k - 1];
    while (k > 0 && l[i] != r[k]) k = border[k - 1];
    if (l[i] == r[k]) ++k;
  }
  for (; k > 0; k = border[k - 1]) {
    out.push_back(Overlap{left.substr(0, left.size() - k), right.substr(0, k), right.substr(k)});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace strsup
