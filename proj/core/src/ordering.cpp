#include "strsup/ordering.hpp"

#include <array>

namespace strsup {

Cmp cmp_str(const Str& s, const Str& t, const Precedence& prec) {
  if (s.size() != t.size()) return s.size() > t.size() ? Cmp::Greater : Cmp::Less;
  const std::string& a = s.ids();
  const std::string& b = t.ids();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return prec.greater(s[i], t[i]) ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

namespace {

// {{s},{t}} for s = t and {{s,t}} for s != t.
struct Encoding {
  std::array<std::array<const Str*, 2>, 2> parts{};
  std::array<std::size_t, 2> part_size{};
  std::size_t count = 0;

  explicit Encoding(const Literal& l) {
    if (l.positive()) {
      parts[0] = {&l.lhs(), nullptr};
      parts[1] = {&l.rhs(), nullptr};
      part_size = {1, 1};
      count = 2;
    } else {
      parts[0] = {&l.lhs(), &l.rhs()};
      part_size = {2, 0};
      count = 1;
    }
  }

  std::span<const Str* const> part(std::size_t i) const { return {parts[i].data(), part_size[i]}; }
};

}  // namespace

Cmp cmp_literal(const Literal& a, const Literal& b, const Precedence& prec) {
  Encoding ea(a);
  Encoding eb(b);
  auto str_cmp = [&prec](const Str* x, const Str* y) { return cmp_str(*x, *y, prec); };
  auto inner_cmp = [&](std::span<const Str* const> x, std::span<const Str* const> y) {
    return multiset_cmp<const Str*>(x, y, str_cmp);
  };
  std::array<std::span<const Str* const>, 2> pa{ea.part(0), ea.part(1)};
  std::array<std::span<const Str* const>, 2> pb{eb.part(0), eb.part(1)};
  return multiset_cmp<std::span<const Str* const>>(std::span(pa.data(), ea.count), std::span(pb.data(), eb.count),
                                                   inner_cmp);
}

Cmp cmp_clause(std::span<const Literal> a, std::span<const Literal> b, const Precedence& prec) {
  return multiset_cmp<Literal>(a, b, [&prec](const Literal& x, const Literal& y) { return cmp_literal(x, y, prec); });
}

}  // namespace strsup
