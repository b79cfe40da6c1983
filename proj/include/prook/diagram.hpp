#pragma once

// Colored rook diagrams on two rows of n vertices.
//
// Vertices are numbered 1..n from the left, colors 1..c. A diagram stores
// its edges sorted by top vertex; two diagrams are equal iff they have the
// same (n, c) and the same edge list.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prook/combinatorics.hpp"

namespace prook {

/// Rejected edge list: the message names the offending edge.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operands disagree on n or c.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A non-planar diagram reached an operation that requires planarity.
class NotPlanarError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct Edge {
  int top    = 0;
  int bottom = 0;
  int color  = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

class Diagram {
 public:
  /// Validates the rook condition, index ranges and colors.
  Diagram(int n, int c, std::vector<Edge> edges);

  static Diagram empty(int n, int c);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// The edge at top vertex `top`, if any.
  std::optional<Edge> edge_at_top(int top) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  struct Trusted {};
  Diagram(Trusted, int n, int c, std::vector<Edge> edges);

  friend Diagram multiply(const Diagram&, const Diagram&);
  friend Diagram tensor(const Diagram&, const Diagram&);
  friend Diagram vertical_subdiagram(const Diagram&);
  friend std::vector<Diagram> subdiagrams(const Diagram&);

  int n_;
  int c_;
  std::vector<Edge> edges_;
};

/// A tuple (P_0, P_1, ..., P_c) of disjoint sets covering {1..n}.
///
/// P_0 holds the isolated vertices of a row, P_k the endpoints of the
/// color-k edges. Profiles order lexicographically on their sorted parts.
class Profile {
 public:
  Profile(int n, int c, std::vector<std::vector<int>> parts);

  /// Builds a profile from the part index of each vertex 1..n.
  static Profile from_roles(int c, std::span<const int> roles);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  const std::vector<int>& part(int k) const { return parts_.at(k); }
  const std::vector<std::vector<int>>& parts() const noexcept { return parts_; }
  std::vector<int> sizes() const;
  /// The part containing vertex v.
  int role_of(int v) const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  int n_;
  int c_;
  std::vector<std::vector<int>> parts_;
};

std::string to_string(const Profile& p);

bool is_planar(const Diagram& d);

/// Edge (t, b, k) is in the product iff d1 has (t, m, k) and d2 has (m, b, k).
Diagram multiply(const Diagram& d1, const Diagram& d2);

Profile tau(const Diagram& d);
Profile beta(const Diagram& d);

/// The unique planar diagram with top profile `top` and bottom profile
/// `bottom`: within each color the r-th smallest top vertex is joined to
/// the r-th smallest bottom vertex.
Diagram from_profiles(const Profile& top, const Profile& bottom);

/// Concatenates d2 to the right of d1.
Diagram tensor(const Diagram& d1, const Diagram& d2);

Diagram vertical_subdiagram(const Diagram& d);

/// Every d' contained in d (same edges, same colors), including d and the
/// empty diagram. Entry i keeps the edges selected by the bits of i.
std::vector<Diagram> subdiagrams(const Diagram& d);

bool is_subdiagram(const Diagram& sub, const Diagram& d);

/// All profiles of {1..n} with |P_k| = sizes[k], in lexicographic order.
std::vector<Profile> profiles_with_sizes(int n, int c, std::span<const int> sizes);

/// Every profile of {1..n} with c colors: compositions in colex order, then
/// lexicographic within a composition.
std::vector<Profile> all_profiles(int n, int c);

/// P_{n,c}: compositions in colex order, then top profile, then bottom profile.
std::vector<Diagram> enumerate_planar(int n, int c);

/// Sum over compositions of n into c+1 parts of multinomial^2.
BigInt cardinality(int n, int c);

/// Throws CapExceeded when |P_{n,c}| is larger than `cap`.
void require_within_cap(int n, int c, std::size_t cap);

/// Sort key reproducing the enumeration order of planar diagrams.
bool enumeration_less(const Diagram& lhs, const Diagram& rhs);

// Text form: `n=<int> c=<int> [<top>-<bottom>:<color>, ...]`.
std::string to_string(const Diagram& d);
Diagram parse_diagram(std::string_view text);

/// Matrix form: entry (i, j) is k when top i joins bottom j in color k,
/// else 0.
std::vector<std::vector<int>> to_matrix(const Diagram& d);
Diagram from_matrix(int c, const std::vector<std::vector<int>>& matrix);
std::string matrix_to_string(const Diagram& d);

}  // namespace prook

template <>
struct std::hash<prook::Diagram> {
  std::size_t operator()(const prook::Diagram& d) const noexcept;
};
