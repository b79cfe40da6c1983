#pragma once

// Formal linear combinations of planar diagrams with exact rational
// coefficients, the alternating-sum basis x_d, and the unital embedding of
// the (n-1)-vertex algebra into the n-vertex one.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prook/diagram.hpp"

namespace prook {

class Element {
 public:
  using Terms = std::map<Diagram, Rational>;

  /// The zero element of the algebra on n vertices with c colors.
  Element(int n, int c);
  /// The diagram itself with coefficient `coefficient`. Throws
  /// NotPlanarError for a non-planar diagram.
  explicit Element(const Diagram& d, Rational coefficient = 1);

  static Element zero(int n, int c) { return Element(n, c); }

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  /// Coefficient of d, zero when d is absent.
  Rational coefficient(const Diagram& d) const;

  /// Terms sorted by the enumeration order of P_{n,c}.
  std::vector<std::pair<Diagram, Rational>> ordered_terms() const;

  /// Adds q*d, dropping the entry if it cancels.
  void accumulate(const Diagram& d, const Rational& q);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);

  friend bool operator==(const Element&, const Element&) = default;

 private:
  int n_;
  int c_;
  Terms terms_;
};

Element add(const Element& g1, const Element& g2);
Element scale(const Rational& q, const Element& g);
Element mul(const Element& g1, const Element& g2);

Element operator+(const Element& g1, const Element& g2);
Element operator-(const Element& g1, const Element& g2);
Element operator*(const Element& g1, const Element& g2);
Element operator*(const Rational& q, const Element& g);

/// Linear extension of diagram concatenation.
Element tensor(const Element& g1, const Element& g2);

/// I_0 (an isolated pair) for k = 0, else a single vertical edge of color k.
Diagram unit_strand(int c, int k);

/// e_c = (I_1 + ... + I_c) - (c-1) I_0, tensored n times.
Element identity(int n, int c);

/// x_d = sum over d' in d of (-1)^(size(d) - size(d')) d'.
Element x_of(const Diagram& d);

using XExpansion = std::function<Element(const Diagram&)>;

/// The coefficients mu with g = sum mu_a x_a; mu_a is the sum of the
/// coefficients of every term containing a.
std::map<Diagram, Rational> to_x_coordinates(const Element& g);

/// Inverse of to_x_coordinates.
Element from_x_coordinates(int n, int c, const std::map<Diagram, Rational>& coords);

/// d x_a = x_{da} when tau_i(a) is in beta_i(d) for every color i, and zero
/// otherwise. Returns da in the first case.
std::optional<Diagram> left_action_x(const Diagram& d, const Diagram& a);

/// x_a d = x_{ad} when beta_i(a) is in tau_i(d) for every color i.
std::optional<Diagram> right_action_x(const Diagram& a, const Diagram& d);

/// The unique planar diagram d with tau(d) = s and beta(d) = t, whose
/// alternating sum is x_{s,t}.
Diagram st_diagram(const Profile& s, const Profile& t);

/// x_{S,T} x_{U,V} = x_{S,V} when T = U, and zero otherwise.
std::optional<std::pair<Profile, Profile>> x_st_product(const Profile& s,
                                                        const Profile& t,
                                                        const Profile& u,
                                                        const Profile& v);

/// The embedding g -> sum_i g (x) I_i - (c-1) g (x) I_0.
Element embed(const Element& g);

// Text form: `<rational> * <diagram> + ...`, terms in enumeration order.
// The zero element prints as `0`.
std::string to_string(const Element& g);
/// `shape` supplies (n, c) for the literal `0`.
Element parse_element(std::string_view text,
                      std::optional<std::pair<int, int>> shape = std::nullopt);

}  // namespace prook
