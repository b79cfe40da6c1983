#pragma once

// Irreducible modules W^n_T of the planar rook algebra, realized inside the
// algebra on the alternating-sum basis, their action matrices, the
// finite checks of irreducibility, classification, matrix-algebra structure
// and restriction, and the irreducible characters.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prook/algebra.hpp"
#include "prook/check.hpp"
#include "prook/matrix.hpp"

namespace prook {

/// A composition (n_0, ..., n_c) naming the class of every W^n_T with
/// |T_i| = n_i.
struct IrrepLabel {
  std::vector<int> parts;

  int n() const;
  int c() const { return static_cast<int>(parts.size()) - 1; }
  BigInt dimension() const { return multinomial(parts); }

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  /// Colex order, the order used for levels and table columns.
  friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
    return colex_less(a.parts, b.parts);
  }
};

/// `n0|n1|...|nc`.
std::string to_string(const IrrepLabel& label);
IrrepLabel label_of(const Profile& p);

/// Every label of level n, colex order.
std::vector<IrrepLabel> irrep_labels(int n, int c);

/// The sorted representative profile: part 0 = {1..n_0}, part 1 the next
/// n_1 vertices, and so on.
Profile representative_profile(const IrrepLabel& label);

/// The labels (n_0, ..., n_j - 1, ..., n_c) for each j with n_j > 0.
std::vector<IrrepLabel> restriction_labels(const IrrepLabel& label);

/// A subspace of the algebra spanned by the x_a for an ordered list of
/// planar diagrams a.
class ModuleSpace {
 public:
  ModuleSpace(int n, int c, std::vector<Diagram> basis,
              std::optional<Profile> bottom = std::nullopt);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Diagram>& basis() const noexcept { return basis_; }
  /// Set when the space is W^n_T, i.e. every basis diagram has bottom T.
  const std::optional<Profile>& bottom() const noexcept { return bottom_; }
  std::optional<std::size_t> index_of(const Diagram& a) const;

 private:
  int n_;
  int c_;
  std::vector<Diagram> basis_;
  std::optional<Profile> bottom_;
  std::unordered_map<Diagram, std::size_t> index_;
};

/// W^n_T: basis x_a for every a with beta(a) = T, ordered by tau(a).
ModuleSpace module_space(const Profile& bottom);
ModuleSpace representative_space(const IrrepLabel& label);
/// W^{n,k}: span of every x_a with size(a) = k.
ModuleSpace graded_space(int n, int c, int k);
/// W^n_T reordered by the part of tau(a) holding vertex n, ascending, and
/// in the usual order within each group.
ModuleSpace restriction_adapted_space(const Profile& bottom);

/// Matrix of d acting on the left of the space. Column a holds a single 1
/// at row da when d x_a = x_{da} and is zero otherwise. Throws Error when
/// the image leaves the space.
Matrix action_matrix(const Diagram& d, const ModuleSpace& space);
Matrix action_matrix(const Element& g, const ModuleSpace& space);

/// True iff for every ordered pair (x_a, x_b) of basis vectors some diagram
/// sends x_a to x_b. The candidate from_profiles(tau(b), tau(a)) is tried
/// first; when it fails all of P_{n,c} is searched, subject to `cap`.
CheckResult verify_irreducible(const ModuleSpace& space,
                               std::size_t cap = kDefaultDiagramCap);

struct IsomorphismResult {
  bool isomorphic = false;
  /// d with tau(d) = T and beta(d) = S; x_a -> x_a d maps W_T onto W_S.
  std::optional<Diagram> intertwiner;
  /// Acts as zero on one module and not on the other.
  std::optional<Diagram> distinguisher;
  /// True when the distinguisher is nonzero on the first module.
  bool distinguisher_acts_on_first = false;
};

/// Both spaces must be of the form W^n_T.
IsomorphismResult are_isomorphic(const ModuleSpace& first, const ModuleSpace& second);

/// Matrix of the intertwiner x_a -> x_a d from `first` to `second`.
Matrix intertwiner_matrix(const Diagram& d, const ModuleSpace& first,
                          const ModuleSpace& second);

/// Confirms a result of are_isomorphic with action matrices for every
/// diagram of P_{n,c}.
CheckResult validate_isomorphism(const ModuleSpace& first, const ModuleSpace& second,
                                 const IsomorphismResult& result,
                                 std::size_t cap = kDefaultDiagramCap);

/// Each label of level n with multiplicity multinomial(n; label).
std::vector<std::pair<IrrepLabel, BigInt>> regular_decomposition(int n, int c);

/// Sum of multiplicity * dimension equals |P_{n,c}|, the x-basis splits
/// exactly into the W^n_T, and each label has multinomial(n; label)
/// profiles T.
CheckResult verify_regular_decomposition(int n, int c,
                                         std::size_t cap = kDefaultDiagramCap);

/// The elements x_{S,T}, indexed by the position of S and T among the
/// profiles with sizes `label`, multiply like elementary matrices, and the
/// span of the x_d with |beta_i(d)| = n_i is a two-sided ideal. The
/// multiplication table is expanded in full. `dimension_cap` bounds the
/// matrix size.
CheckResult verify_matrix_algebra(int n, int c, const IrrepLabel& label,
                                  std::size_t dimension_cap = 12,
                                  std::size_t cap = kDefaultDiagramCap);

/// (l_1, ..., l_c): the number of vertical edges of each color.
std::vector<int> vertical_counts(const Diagram& d);

/// Product of C(l_i, n_i) over the colors; zero if some n_i > l_i.
BigInt character(const Diagram& d, const IrrepLabel& label);
/// Trace of d on the representative module of `label`.
Rational character_by_trace(const Diagram& d, const IrrepLabel& label);
/// Trace of an arbitrary element on the representative module.
Rational trace_on(const Element& g, const IrrepLabel& label);

struct CharacterTable {
  int n = 0;
  int c = 1;
  std::vector<IrrepLabel> columns;
  /// Vertical-count vectors (l_1, ..., l_c), ordered as the compositions
  /// (n - sum l, l_1, ..., l_c) in colex order.
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<BigInt>> values;
};

CharacterTable character_table(int n, int c);
/// The diagram with l_1 vertical color-1 edges on the leftmost vertices,
/// then l_2 color-2 edges, and so on.
Diagram vertical_representative(int n, int c, const std::vector<int>& counts);
/// Recomputes every entry as a trace, for every diagram of P_{n,c} with
/// the row's vertical counts.
CheckResult verify_character_table(const CharacterTable& table,
                                   std::size_t cap = kDefaultDiagramCap);
std::string to_csv(const CharacterTable& table);

struct RestrictionResult {
  /// One label of level n-1 per nonempty block, in block order.
  std::vector<IrrepLabel> labels;
  CheckResult check;
};

/// Splits W^n_T into the blocks spanned by x_a with vertex n in part j of
/// tau(a), and checks that each block is invariant under the embedded
/// (n-1)-vertex algebra, is isomorphic to a module of level n-1 through
/// x_a -> x_{a'} (a' drops vertex n), and that the dimensions add up.
RestrictionResult restriction_decomposition(const ModuleSpace& space,
                                            std::size_t cap = kDefaultDiagramCap);

}  // namespace prook
