#include "prook/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "json.hpp"
#include "prook/bratteli.hpp"
#include "prook/repr.hpp"

namespace prook {

Element mutant_x_of(const Diagram& d) {
  Element out = x_of(d);
  if (d.size() > 0) out.accumulate(d, -2);
  return out;
}

namespace checks {

namespace {

std::vector<Diagram> planar(int n, int c, const VerifyOptions& opt) {
  require_within_cap(n, c, opt.diagram_cap);
  return enumerate_planar(n, c);
}

std::mt19937_64 rng_for(const VerifyOptions& opt, int n, int c, std::uint64_t salt) {
  std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c), salt};
  return std::mt19937_64(seq);
}

std::size_t pick(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

// Calls f on every pair, or on `opt.samples` random pairs when there are
// too many. Stops as soon as f returns false.
void for_pairs(const std::vector<Diagram>& ds, const VerifyOptions& opt, std::mt19937_64& rng,
               const std::function<bool(const Diagram&, const Diagram&)>& f) {
  const std::size_t m = ds.size();
  if (m * m <= opt.exhaustive_pairs) {
    for (const auto& a : ds)
      for (const auto& b : ds)
        if (!f(a, b)) return;
    return;
  }
  for (std::size_t s = 0; s < opt.samples; ++s)
    if (!f(ds[pick(rng, m)], ds[pick(rng, m)])) return;
}

Element random_element(const std::vector<Diagram>& ds, std::mt19937_64& rng, int terms) {
  Element g(ds.front().n(), ds.front().c());
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < terms; ++t) g.accumulate(ds[pick(rng, ds.size())], coeff(rng));
  return g;
}

Diagram random_rook(int n, int c, std::mt19937_64& rng) {
  std::vector<int> bottoms(n);
  for (int i = 0; i < n; ++i) bottoms[i] = i + 1;
  std::shuffle(bottoms.begin(), bottoms.end(), rng);
  std::uniform_int_distribution<int> color(0, c);
  std::vector<Edge> edges;
  for (int t = 1; t <= n; ++t) {
    const int k = color(rng);
    if (k > 0) edges.push_back({t, bottoms[t - 1], k});
  }
  return Diagram(n, c, std::move(edges));
}

// Product of rook matrices with entries in Z_2^c, entries as bit masks.
std::vector<std::vector<unsigned>> mask_product(const std::vector<std::vector<int>>& a,
                                                const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  auto mask = [](int k) { return k == 0 ? 0u : 1u << (k - 1); };
  std::vector<std::vector<unsigned>> out(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) out[i][j] ^= mask(a[i][m]) & mask(b[m][j]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- monoid

CheckResult associativity(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 1);
  auto test = [&](const Diagram& a, const Diagram& b, const Diagram& d) {
    ++check.cases;
    if (multiply(multiply(a, b), d) != multiply(a, multiply(b, d))) {
      check.fail({"multiplication is not associative", {a, b, d}, {}});
      return false;
    }
    return true;
  };
  const std::size_t m = ds.size();
  if (m * m * m <= opt.exhaustive_triples) {
    for (const auto& a : ds)
      for (const auto& b : ds)
        for (const auto& d : ds)
          if (!test(a, b, d)) return check;
  } else {
    for (std::size_t s = 0; s < opt.samples; ++s)
      if (!test(ds[pick(rng, m)], ds[pick(rng, m)], ds[pick(rng, m)])) return check;
  }
  return check;
}

CheckResult product_closure(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 2);
  for_pairs(ds, opt, rng, [&](const Diagram& a, const Diagram& b) {
    ++check.cases;
    const Diagram p = multiply(a, b);
    if (!is_planar(p)) {
      check.fail({"product of planar diagrams is not planar", {a, b}, {}});
      return false;
    }
    if (p.size() > std::min(a.size(), b.size())) {
      check.fail({"product has more edges than a factor", {a, b}, {}});
      return false;
    }
    return true;
  });
  if (!check.passed || n == 0) return check;
  // Arbitrary rook diagrams: the product must pass validation again.
  for (std::size_t s = 0; s < opt.samples / 10; ++s) {
    ++check.cases;
    const Diagram a = random_rook(n, c, rng), b = random_rook(n, c, rng);
    const Diagram p = multiply(a, b);
    try {
      Diagram revalidated(n, c, std::vector<Edge>(p.edges().begin(), p.edges().end()));
      if (revalidated != p) throw ValidationError("not canonical");
    } catch (const ValidationError&) {
      check.fail({"product of rook diagrams violates the rook condition", {a, b}, {}});
      return check;
    }
    if (p.size() > std::min(a.size(), b.size())) {
      check.fail({"product has more edges than a factor", {a, b}, {}});
      return check;
    }
  }
  return check;
}

CheckResult profile_roundtrip(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  for (const Diagram& d : planar(n, c, opt)) {
    ++check.cases;
    const Profile t = tau(d), b = beta(d);
    if (t.sizes() != b.sizes() || from_profiles(t, b) != d) {
      check.fail({"tau and beta do not determine the diagram", {d}, {t, b}});
      return check;
    }
  }
  return check;
}

CheckResult enumeration_count(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  check.cases = ds.size();
  if (BigInt(ds.size()) != cardinality(n, c)) {
    check.fail({"enumeration size " + std::to_string(ds.size()) + " differs from cardinality " +
                    cardinality(n, c).str(),
                {},
                {}});
    return check;
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!is_planar(ds[i])) {
      check.fail({"enumeration yields a non-planar diagram", {ds[i]}, {}});
      return check;
    }
    if (i > 0 && !enumeration_less(ds[i - 1], ds[i])) {
      check.fail({"enumeration is not strictly ordered", {ds[i - 1], ds[i]}, {}});
      return check;
    }
  }
  return check;
}

CheckResult matrix_semantics(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 3);
  for_pairs(ds, opt, rng, [&](const Diagram& a, const Diagram& b) {
    ++check.cases;
    const auto prod = mask_product(to_matrix(a), to_matrix(b));
    std::vector<std::vector<int>> colors(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const unsigned m = prod[i][j];
        if (m == 0) continue;
        if (m & (m - 1)) {
          check.fail({"matrix product entry is not a single color", {a, b}, {}});
          return false;
        }
        int k = 1;
        while (!(m >> (k - 1) & 1u)) ++k;
        colors[i][j] = k;
      }
    if (from_matrix(c, colors) != multiply(a, b)) {
      check.fail({"diagram product differs from the matrix product", {a, b}, {}});
      return false;
    }
    return true;
  });
  return check;
}

// ---------------------------------------------------------------- algebra

CheckResult unit_laws(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const Element one = identity(n, c);
  for (const Diagram& d : planar(n, c, opt)) {
    ++check.cases;
    const Element g(d);
    if (mul(one, g) != g || mul(g, one) != g) {
      check.fail({"identity is not a two-sided unit", {d}, {}});
      return check;
    }
  }
  return check;
}

CheckResult distributivity(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 4);
  for (std::size_t s = 0; s < std::max<std::size_t>(1, opt.samples / 50); ++s) {
    ++check.cases;
    const Element g1 = random_element(ds, rng, 4), g2 = random_element(ds, rng, 4),
                  g3 = random_element(ds, rng, 4);
    if (mul(g1, add(g2, g3)) != add(mul(g1, g2), mul(g1, g3)) ||
        mul(add(g2, g3), g1) != add(mul(g2, g1), mul(g3, g1))) {
      check.fail({"multiplication does not distribute over addition",
                  {g1.terms().empty() ? Diagram::empty(n, c) : g1.terms().begin()->first},
                  {}});
      return check;
    }
  }
  return check;
}

CheckResult x_basis_inversion(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  for (const Diagram& d : planar(n, c, opt)) {
    ++check.cases;
    Element sum(n, c);
    for (const Diagram& sub : subdiagrams(d)) sum += opt.expansion(sub);
    if (sum != Element(d)) {
      check.fail({"d is not the sum of x_{d'} over its subdiagrams", {d}, {}});
      return check;
    }
    const auto coords = to_x_coordinates(opt.expansion(d));
    if (coords != std::map<Diagram, Rational>{{d, 1}}) {
      check.fail({"x-coordinates of x_d are not the unit vector at d", {d}, {}});
      return check;
    }
  }
  return check;
}

CheckResult left_action_oracle(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 5);
  for_pairs(ds, opt, rng, [&](const Diagram& d, const Diagram& a) {
    ++check.cases;
    const Element expanded = mul(Element(d), opt.expansion(a));
    const auto fast = left_action_x(d, a);
    const Element expected = fast ? opt.expansion(*fast) : Element(n, c);
    if (expanded != expected) {
      check.fail({"d x_a differs from the left action rule", {d, a}, {tau(a), beta(d)}});
      return false;
    }
    return true;
  });
  return check;
}

CheckResult right_action_oracle(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 6);
  for_pairs(ds, opt, rng, [&](const Diagram& a, const Diagram& d) {
    ++check.cases;
    const Element expanded = mul(opt.expansion(a), Element(d));
    const auto fast = right_action_x(a, d);
    const Element expected = fast ? opt.expansion(*fast) : Element(n, c);
    if (expanded != expected) {
      check.fail({"x_a d differs from the right action rule", {a, d}, {beta(a), tau(d)}});
      return false;
    }
    return true;
  });
  return check;
}

CheckResult block_preservation(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  auto rng = rng_for(opt, n, c, 7);
  for_pairs(ds, opt, rng, [&](const Diagram& d, const Diagram& a) {
    ++check.cases;
    const auto image = left_action_x(d, a);
    if (image && beta(*image) != beta(a)) {
      check.fail({"left action changes the bottom profile", {d, a}, {}});
      return false;
    }
    return true;
  });
  return check;
}

CheckResult embed_homomorphism(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  if (n < 1) return check;
  const auto ds = planar(n - 1, c, opt);
  auto rng = rng_for(opt, n, c, 8);
  for_pairs(ds, opt, rng, [&](const Diagram& a, const Diagram& b) {
    ++check.cases;
    const Element ga(a), gb(b);
    if (embed(mul(ga, gb)) != mul(embed(ga), embed(gb))) {
      check.fail({"embedding does not preserve a diagram product", {a, b}, {}});
      return false;
    }
    return true;
  });
  if (!check.passed) return check;
  for (std::size_t s = 0; s < std::max<std::size_t>(1, opt.samples / 100); ++s) {
    ++check.cases;
    const Element g1 = random_element(ds, rng, 3), g2 = random_element(ds, rng, 3);
    if (embed(mul(g1, g2)) != mul(embed(g1), embed(g2))) {
      check.fail({"embedding does not preserve a product of elements", {}, {}});
      return check;
    }
  }
  return check;
}

CheckResult embed_unital(int n, int c, const VerifyOptions&) {
  CheckResult check;
  if (n < 1) return check;
  ++check.cases;
  if (embed(identity(n - 1, c)) != identity(n, c))
    check.fail({"embedding does not send the unit to the unit", {}, {}});
  return check;
}

// ---------------------------------------------------------------- modules

namespace {

struct ModuleData {
  ModuleSpace space;
  std::vector<Matrix> rho;  // one per diagram, in enumeration order
};

std::vector<ModuleData> all_modules(int n, int c, const std::vector<Diagram>& ds) {
  std::vector<ModuleData> out;
  for (const Profile& t : all_profiles(n, c)) {
    ModuleData m{module_space(t), {}};
    for (const Diagram& d : ds) m.rho.push_back(action_matrix(d, m.space));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

CheckResult module_homomorphism(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  std::unordered_map<Diagram, std::size_t> index;
  for (std::size_t i = 0; i < ds.size(); ++i) index.emplace(ds[i], i);
  auto rng = rng_for(opt, n, c, 9);
  for (const auto& m : all_modules(n, c, ds)) {
    const std::size_t count = ds.size();
    auto test = [&](std::size_t i, std::size_t j) {
      ++check.cases;
      const std::size_t k = index.at(multiply(ds[i], ds[j]));
      if (m.rho[k] != m.rho[i] * m.rho[j]) {
        check.fail({"rho(d1 d2) differs from rho(d1) rho(d2)", {ds[i], ds[j]}, {*m.space.bottom()}});
        return false;
      }
      return true;
    };
    if (count * count <= opt.exhaustive_pairs) {
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
          if (!test(i, j)) return check;
    } else {
      for (std::size_t s = 0; s < opt.samples / 10; ++s)
        if (!test(pick(rng, count), pick(rng, count))) return check;
    }
    for (int s = 0; s < 5; ++s) {
      ++check.cases;
      const Element g1 = random_element(ds, rng, 3), g2 = random_element(ds, rng, 3);
      if (action_matrix(mul(g1, g2), m.space) !=
          action_matrix(g1, m.space) * action_matrix(g2, m.space)) {
        check.fail({"rho(g1 g2) differs from rho(g1) rho(g2)", {}, {*m.space.bottom()}});
        return check;
      }
    }
  }
  return check;
}

CheckResult module_unit(int n, int c, const VerifyOptions&) {
  CheckResult check;
  const Element one = identity(n, c);
  for (const Profile& t : all_profiles(n, c)) {
    ++check.cases;
    const ModuleSpace space = module_space(t);
    if (action_matrix(one, space) != Matrix::identity(space.dimension())) {
      check.fail({"the unit does not act as the identity matrix", {}, {t}});
      return check;
    }
  }
  return check;
}

CheckResult column_structure(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  for (const Profile& t : all_profiles(n, c)) {
    const ModuleSpace space = module_space(t);
    for (const Diagram& d : ds) {
      ++check.cases;
      const Matrix m = action_matrix(d, space);
      for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t nonzero = 0;
        for (std::size_t row = 0; row < m.rows(); ++row) {
          if (m(row, col) == 0) continue;
          ++nonzero;
          if (m(row, col) != 1) nonzero = 2;
        }
        if (nonzero > 1) {
          check.fail({"action matrix column is not zero or a unit vector", {d}, {t}});
          return check;
        }
      }
    }
  }
  return check;
}

CheckResult irreducibility(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  for (const Profile& t : all_profiles(n, c)) {
    check.merge(verify_irreducible(module_space(t), opt.diagram_cap));
    if (!check.passed) return check;
  }
  return check;
}

CheckResult graded_reducibility(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  for (int k = 0; k <= n; ++k) {
    ++check.cases;
    std::size_t blocks = 0;
    for (const Profile& t : all_profiles(n, c)) {
      const auto sizes = t.sizes();
      if (n - sizes[0] == k) ++blocks;
    }
    const bool irreducible = verify_irreducible(graded_space(n, c, k), opt.diagram_cap).passed;
    if (irreducible != (blocks == 1)) {
      check.fail({"W^{n," + std::to_string(k) + "} has " + std::to_string(blocks) +
                      " blocks but the transitivity test says " +
                      (irreducible ? "irreducible" : "reducible"),
                  {},
                  {}});
      return check;
    }
  }
  return check;
}

CheckResult isomorphism_classes(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  std::vector<ModuleSpace> spaces;
  for (const Profile& t : all_profiles(n, c)) spaces.push_back(module_space(t));
  for (const auto& first : spaces) {
    for (const auto& second : spaces) {
      const auto result = are_isomorphic(first, second);
      const bool same_sizes = first.bottom()->sizes() == second.bottom()->sizes();
      if (result.isomorphic != same_sizes) {
        check.fail({"isomorphism verdict contradicts the size criterion",
                    {},
                    {*first.bottom(), *second.bottom()}});
        return check;
      }
      check.merge(validate_isomorphism(first, second, result, opt.diagram_cap));
      if (!check.passed) return check;
    }
  }
  return check;
}

CheckResult regular_decomposition(int n, int c, const VerifyOptions& opt) {
  return verify_regular_decomposition(n, c, opt.diagram_cap);
}

CheckResult matrix_algebras(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  for (const auto& label : irrep_labels(n, c)) {
    check.merge(verify_matrix_algebra(n, c, label, 12, opt.diagram_cap));
    if (!check.passed) return check;
  }
  return check;
}

CheckResult characters(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  const auto labels = irrep_labels(n, c);
  std::vector<ModuleSpace> spaces;
  for (const auto& label : labels) spaces.push_back(representative_space(label));
  std::map<std::vector<int>, std::vector<Rational>> by_counts;
  for (const Diagram& d : ds) {
    std::vector<Rational> traces;
    for (std::size_t l = 0; l < labels.size(); ++l) {
      ++check.cases;
      const Rational trace = action_matrix(d, spaces[l]).trace();
      if (trace != Rational(character(d, labels[l]))) {
        check.fail({"closed-form character differs from the trace for label " +
                        to_string(labels[l]),
                    {d},
                    {*spaces[l].bottom()}});
        return check;
      }
      traces.push_back(trace);
    }
    auto [it, inserted] = by_counts.try_emplace(vertical_counts(d), traces);
    if (!inserted && it->second != traces) {
      check.fail({"diagrams with equal vertical counts have different characters", {d}, {}});
      return check;
    }
  }
  return check;
}

CheckResult trace_reduction(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto ds = planar(n, c, opt);
  for (const auto& label : irrep_labels(n, c)) {
    const ModuleSpace space = representative_space(label);
    for (const Diagram& d : ds) {
      ++check.cases;
      if (action_matrix(d, space).trace() != action_matrix(vertical_subdiagram(d), space).trace()) {
        check.fail({"trace changes when non-vertical edges are removed", {d}, {*space.bottom()}});
        return check;
      }
    }
  }
  return check;
}

CheckResult restriction(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  if (n < 1) return check;
  for (const Profile& t : all_profiles(n, c)) {
    check.merge(restriction_decomposition(module_space(t), opt.diagram_cap).check);
    if (!check.passed) return check;
  }
  return check;
}

// ---------------------------------------------------------------- Bratteli

CheckResult bratteli_structure(int n, int c, const VerifyOptions&) {
  CheckResult check = verify_structure(build(c, n));
  if (!check.passed || c != 1) return check;
  // One color: level m is row m of Pascal's triangle.
  const auto graph = build(1, n);
  for (int m = 0; m <= n; ++m) {
    ++check.cases;
    for (const auto& label : graph.levels[m]) {
      if (label.dimension() != binomial(m, label.parts[1])) {
        check.fail({"one-color level is not a row of Pascal's triangle", {}, {}});
        return check;
      }
    }
  }
  return check;
}

CheckResult bratteli_recursion(int n, int c, const VerifyOptions&) {
  return verify_multinomial_recursion(build(c, n));
}

CheckResult bratteli_restriction_consistency(int n, int c, const VerifyOptions& opt) {
  CheckResult check;
  const auto graph = build(c, n);
  for (int m = 1; m <= n; ++m) {
    for (std::size_t i = 0; i < graph.levels[m].size(); ++i) {
      ++check.cases;
      const auto& label = graph.levels[m][i];
      std::vector<IrrepLabel> children;
      for (const auto& e : graph.edges)
        if (e.parent == VertexRef{m, i}) children.push_back(graph.label(e.child));
      const auto computed = restriction_decomposition(representative_space(label), opt.diagram_cap);
      check.merge(computed.check);
      if (!check.passed) return check;
      if (computed.labels != children) {
        check.fail({"graph edges at " + to_string(label) + " differ from the computed restriction",
                    {},
                    {representative_profile(label)}});
        return check;
      }
    }
  }
  return check;
}

}  // namespace checks

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const NamedCheck& c) { return c.result.passed; });
}

VerifyReport run_verification(const VerifyOptions& opt) {
  using CheckFn = CheckResult (*)(int, int, const VerifyOptions&);
  static const std::vector<std::pair<std::string, CheckFn>> registry = {
      {"algebra.block_preservation", checks::block_preservation},
      {"algebra.distributivity", checks::distributivity},
      {"algebra.embed_homomorphism", checks::embed_homomorphism},
      {"algebra.embed_unital", checks::embed_unital},
      {"algebra.left_action", checks::left_action_oracle},
      {"algebra.right_action", checks::right_action_oracle},
      {"algebra.unit_laws", checks::unit_laws},
      {"algebra.x_basis_inversion", checks::x_basis_inversion},
      {"bratteli.multinomial_recursion", checks::bratteli_recursion},
      {"bratteli.restriction_consistency", checks::bratteli_restriction_consistency},
      {"bratteli.structure", checks::bratteli_structure},
      {"diagram.associativity", checks::associativity},
      {"diagram.enumeration_count", checks::enumeration_count},
      {"diagram.matrix_semantics", checks::matrix_semantics},
      {"diagram.product_closure", checks::product_closure},
      {"diagram.profile_roundtrip", checks::profile_roundtrip},
      {"repr.characters", checks::characters},
      {"repr.column_structure", checks::column_structure},
      {"repr.graded_reducibility", checks::graded_reducibility},
      {"repr.irreducibility", checks::irreducibility},
      {"repr.isomorphism_classes", checks::isomorphism_classes},
      {"repr.matrix_algebras", checks::matrix_algebras},
      {"repr.module_homomorphism", checks::module_homomorphism},
      {"repr.module_unit", checks::module_unit},
      {"repr.regular_decomposition", checks::regular_decomposition},
      {"repr.restriction", checks::restriction},
      {"repr.trace_reduction", checks::trace_reduction},
  };
  if (opt.n_cap < 0 || opt.c_cap < 1) throw ValidationError("verify needs n_cap >= 0 and c_cap >= 1");
  for (int c = 1; c <= opt.c_cap; ++c) require_within_cap(opt.n_cap, c, opt.diagram_cap);

  VerifyReport report;
  report.n_cap = opt.n_cap;
  report.c_cap = opt.c_cap;
  for (const auto& [name, fn] : registry) {
    NamedCheck named{name, {}};
    for (int c = 1; c <= opt.c_cap && named.result.passed; ++c)
      for (int n = 0; n <= opt.n_cap && named.result.passed; ++n) named.result.merge(fn(n, c, opt));
    report.checks.push_back(std::move(named));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const NamedCheck& a, const NamedCheck& b) { return a.name < b.name; });
  return report;
}

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["passed"] = report.passed();
  doc["n_cap"] = report.n_cap;
  doc["c_cap"] = report.c_cap;
  auto list = nlohmann::ordered_json::array();
  for (const auto& named : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = named.name;
    entry["passed"] = named.result.passed;
    entry["cases"] = named.result.cases;
    if (named.result.witness) {
      const Witness& w = *named.result.witness;
      nlohmann::ordered_json witness;
      witness["reason"] = w.reason;
      auto diagrams = nlohmann::ordered_json::array();
      for (const auto& d : w.diagrams) diagrams.push_back(to_string(d));
      witness["diagrams"] = std::move(diagrams);
      auto profiles = nlohmann::ordered_json::array();
      for (const auto& p : w.profiles) profiles.push_back(to_string(p));
      witness["profiles"] = std::move(profiles);
      entry["witness"] = std::move(witness);
    } else {
      entry["witness"] = nullptr;
    }
    list.push_back(std::move(entry));
  }
  doc["checks"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace prook
