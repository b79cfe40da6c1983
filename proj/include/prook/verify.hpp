#pragma once

// Finite checks of every structural property of the diagram monoid, the
// algebra, its modules and the Bratteli diagram, plus a driver that runs
// them over a grid of (n, c).

#include <cstdint>
#include <string>
#include <vector>

#include "prook/algebra.hpp"
#include "prook/check.hpp"

namespace prook {

struct VerifyOptions {
  int n_cap = 3;
  int c_cap = 2;
  std::size_t diagram_cap = kDefaultDiagramCap;
  /// Pair loops run exhaustively up to this many pairs, then sample.
  std::size_t exhaustive_pairs = 250'000;
  /// Triple loops run exhaustively up to this many triples, then sample.
  std::size_t exhaustive_triples = 1'000'000;
  std::size_t samples = 10'000;
  std::uint64_t seed = 20140601;
  /// Alternating-sum expansion under test; replaced by a mutant in tests.
  XExpansion expansion = x_of;
};

/// x_d with the sign of the leading term d flipped (for size(d) >= 1).
Element mutant_x_of(const Diagram& d);

namespace checks {

// Diagram monoid.
CheckResult associativity(int n, int c, const VerifyOptions& opt);
CheckResult product_closure(int n, int c, const VerifyOptions& opt);
CheckResult profile_roundtrip(int n, int c, const VerifyOptions& opt);
CheckResult enumeration_count(int n, int c, const VerifyOptions& opt);
CheckResult matrix_semantics(int n, int c, const VerifyOptions& opt);

// Algebra.
CheckResult unit_laws(int n, int c, const VerifyOptions& opt);
CheckResult distributivity(int n, int c, const VerifyOptions& opt);
CheckResult x_basis_inversion(int n, int c, const VerifyOptions& opt);
CheckResult left_action_oracle(int n, int c, const VerifyOptions& opt);
CheckResult right_action_oracle(int n, int c, const VerifyOptions& opt);
CheckResult block_preservation(int n, int c, const VerifyOptions& opt);
CheckResult embed_homomorphism(int n, int c, const VerifyOptions& opt);
CheckResult embed_unital(int n, int c, const VerifyOptions& opt);

// Modules.
CheckResult module_homomorphism(int n, int c, const VerifyOptions& opt);
CheckResult module_unit(int n, int c, const VerifyOptions& opt);
CheckResult column_structure(int n, int c, const VerifyOptions& opt);
CheckResult irreducibility(int n, int c, const VerifyOptions& opt);
CheckResult graded_reducibility(int n, int c, const VerifyOptions& opt);
CheckResult isomorphism_classes(int n, int c, const VerifyOptions& opt);
CheckResult regular_decomposition(int n, int c, const VerifyOptions& opt);
CheckResult matrix_algebras(int n, int c, const VerifyOptions& opt);
CheckResult characters(int n, int c, const VerifyOptions& opt);
CheckResult trace_reduction(int n, int c, const VerifyOptions& opt);
CheckResult restriction(int n, int c, const VerifyOptions& opt);

// Bratteli diagram (n is the level cap).
CheckResult bratteli_structure(int n, int c, const VerifyOptions& opt);
CheckResult bratteli_recursion(int n, int c, const VerifyOptions& opt);
CheckResult bratteli_restriction_consistency(int n, int c, const VerifyOptions& opt);

}  // namespace checks

struct NamedCheck {
  std::string name;
  CheckResult result;
};

struct VerifyReport {
  int n_cap = 0;
  int c_cap = 0;
  /// Sorted by name.
  std::vector<NamedCheck> checks;

  bool passed() const;
};

/// Runs every check for n in [0, n_cap] and c in [1, c_cap]. Throws
/// CapExceeded when a required enumeration is over the diagram cap.
VerifyReport run_verification(const VerifyOptions& opt);

std::string to_json(const VerifyReport& report);

}  // namespace prook
