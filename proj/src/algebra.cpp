#include "prook/algebra.hpp"

#include <algorithm>

namespace prook {

namespace {

void require_same_shape(const Element& a, const Element& b, const char* op) {
  if (a.n() != b.n() || a.c() != b.c())
    throw MismatchError(std::string(op) + ": operands live in different algebras");
}

}  // namespace

Element::Element(int n, int c) : n_(n), c_(c) {
  if (n < 0 || c < 1) throw ValidationError("algebra needs n >= 0 and c >= 1");
}

Element::Element(const Diagram& d, Rational coefficient) : n_(d.n()), c_(d.c()) {
  accumulate(d, coefficient);
}

Rational Element::coefficient(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Diagram, Rational>> Element::ordered_terms() const {
  std::vector<std::pair<Diagram, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return enumeration_less(a.first, b.first);
  });
  return out;
}

void Element::accumulate(const Diagram& d, const Rational& q) {
  if (d.n() != n_ || d.c() != c_)
    throw MismatchError("diagram " + to_string(d) + " does not belong to this algebra");
  if (!is_planar(d)) throw NotPlanarError("diagram " + to_string(d) + " is not planar");
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  require_same_shape(*this, other, "add");
  for (const auto& [d, q] : other.terms_) accumulate(d, q);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_shape(*this, other, "subtract");
  for (const auto& [d, q] : other.terms_) accumulate(d, -q);
  return *this;
}

Element add(const Element& g1, const Element& g2) {
  Element out = g1;
  out += g2;
  return out;
}

Element scale(const Rational& q, const Element& g) {
  Element out(g.n(), g.c());
  if (q == 0) return out;
  for (const auto& [d, coeff] : g.terms()) out.accumulate(d, q * coeff);
  return out;
}

Element mul(const Element& g1, const Element& g2) {
  require_same_shape(g1, g2, "mul");
  Element out(g1.n(), g1.c());
  for (const auto& [d1, q1] : g1.terms())
    for (const auto& [d2, q2] : g2.terms()) out.accumulate(multiply(d1, d2), q1 * q2);
  return out;
}

Element operator+(const Element& g1, const Element& g2) { return add(g1, g2); }
Element operator-(const Element& g1, const Element& g2) {
  Element out = g1;
  out -= g2;
  return out;
}
Element operator*(const Element& g1, const Element& g2) { return mul(g1, g2); }
Element operator*(const Rational& q, const Element& g) { return scale(q, g); }

Element tensor(const Element& g1, const Element& g2) {
  if (g1.c() != g2.c()) throw MismatchError("tensor: operands have different c");
  Element out(g1.n() + g2.n(), g1.c());
  for (const auto& [d1, q1] : g1.terms())
    for (const auto& [d2, q2] : g2.terms()) out.accumulate(tensor(d1, d2), q1 * q2);
  return out;
}

Diagram unit_strand(int c, int k) {
  if (k == 0) return Diagram::empty(1, c);
  return Diagram(1, c, {{1, 1, k}});
}

Element identity(int n, int c) {
  Element e_c(1, c);
  for (int k = 1; k <= c; ++k) e_c.accumulate(unit_strand(c, k), 1);
  e_c.accumulate(unit_strand(c, 0), -(c - 1));
  Element out(Diagram::empty(0, c));
  for (int i = 0; i < n; ++i) out = tensor(out, e_c);
  return out;
}

Element x_of(const Diagram& d) {
  if (!is_planar(d)) throw NotPlanarError("x_of: " + to_string(d) + " is not planar");
  Element out(d.n(), d.c());
  for (const Diagram& sub : subdiagrams(d)) {
    const bool odd = (d.size() - sub.size()) % 2 == 1;
    out.accumulate(sub, odd ? -1 : 1);
  }
  return out;
}

std::map<Diagram, Rational> to_x_coordinates(const Element& g) {
  std::map<Diagram, Rational> out;
  for (const auto& [b, q] : g.terms()) {
    for (const Diagram& a : subdiagrams(b)) {
      auto [it, inserted] = out.try_emplace(a, q);
      if (!inserted) {
        it->second += q;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Element from_x_coordinates(int n, int c, const std::map<Diagram, Rational>& coords) {
  Element out(n, c);
  for (const auto& [a, mu] : coords) out += scale(mu, x_of(a));
  return out;
}

namespace {

void require_planar_pair(const Diagram& a, const Diagram& b, const char* op) {
  if (a.n() != b.n() || a.c() != b.c())
    throw MismatchError(std::string(op) + ": operands have different (n,c)");
  if (!is_planar(a) || !is_planar(b))
    throw NotPlanarError(std::string(op) + ": operands must be planar");
}

}  // namespace

std::optional<Diagram> left_action_x(const Diagram& d, const Diagram& a) {
  require_planar_pair(d, a, "left_action_x");
  std::vector<int> bottom_color(d.n() + 1, 0);
  for (const Edge& e : d.edges()) bottom_color[e.bottom] = e.color;
  for (const Edge& e : a.edges())
    if (bottom_color[e.top] != e.color) return std::nullopt;
  return multiply(d, a);
}

std::optional<Diagram> right_action_x(const Diagram& a, const Diagram& d) {
  require_planar_pair(a, d, "right_action_x");
  std::vector<int> top_color(d.n() + 1, 0);
  for (const Edge& e : d.edges()) top_color[e.top] = e.color;
  for (const Edge& e : a.edges())
    if (top_color[e.bottom] != e.color) return std::nullopt;
  return multiply(a, d);
}

Diagram st_diagram(const Profile& s, const Profile& t) {
  if (s.sizes() != t.sizes())
    throw ValidationError("x_{S,T} needs |S_i| = |T_i| for every i, got " +
                          to_string(s) + " and " + to_string(t));
  return from_profiles(s, t);
}

std::optional<std::pair<Profile, Profile>> x_st_product(const Profile& s,
                                                        const Profile& t,
                                                        const Profile& u,
                                                        const Profile& v) {
  if (s.sizes() != t.sizes() || u.sizes() != v.sizes())
    throw ValidationError("x_st_product needs |S_i| = |T_i| and |U_i| = |V_i|");
  if (s.n() != u.n() || s.c() != u.c())
    throw MismatchError("x_st_product: profiles have different (n,c)");
  if (t != u) return std::nullopt;
  return std::pair(s, v);
}

Element embed(const Element& g) {
  const int c = g.c();
  Element out(g.n() + 1, c);
  for (const auto& [d, q] : g.terms()) {
    for (int k = 1; k <= c; ++k) out.accumulate(tensor(d, unit_strand(c, k)), q);
    out.accumulate(tensor(d, unit_strand(c, 0)), -(c - 1) * q);
  }
  return out;
}

// ---------------------------------------------------------------- text form

std::string to_string(const Element& g) {
  if (g.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, q] : g.ordered_terms()) {
    if (!first) out += " + ";
    first = false;
    out += q.str() + " * " + to_string(d);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::size_t offset) {
  s = trim(s);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer", offset);
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("unexpected character in integer", offset + j);
  return BigInt(std::string(s));
}

Rational parse_rational(std::string_view s, std::size_t offset) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, offset));
  const BigInt num = parse_integer(s.substr(0, slash), offset);
  const BigInt den = parse_integer(s.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
  return Rational(num, den);
}

}  // namespace

Element parse_element(std::string_view text, std::optional<std::pair<int, int>> shape) {
  if (trim(text) == "0") {
    if (!shape) throw ParseError("the literal 0 needs an explicit (n, c)", 0);
    return Element(shape->first, shape->second);
  }
  std::optional<Element> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view term = text.substr(start, end - start);
    const auto star = term.find('*');
    if (star == std::string_view::npos) throw ParseError("expected '*'", start);
    const Rational q = parse_rational(term.substr(0, star), start);
    Diagram d = [&] {
      try {
        return parse_diagram(term.substr(star + 1));
      } catch (const ParseError& e) {
        throw ParseError("bad diagram literal", start + star + 1 + e.position());
      }
    }();
    if (!out) out.emplace(d.n(), d.c());
    if (shape && (shape->first != d.n() || shape->second != d.c()))
      throw MismatchError("element term " + to_string(d) + " has the wrong (n,c)");
    out->accumulate(d, q);
    start = end + 1;
  }
  return *out;
}

}  // namespace prook
