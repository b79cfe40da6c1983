#include "prook/repr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace prook {

std::string to_string(const Witness& w) {
  std::string out = w.reason;
  for (const auto& d : w.diagrams) out += "; diagram " + to_string(d);
  for (const auto& p : w.profiles) out += "; profile " + to_string(p);
  return out;
}

// ---------------------------------------------------------------- labels

int IrrepLabel::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string to_string(const IrrepLabel& label) { return join_bar(label.parts); }

IrrepLabel label_of(const Profile& p) { return {p.sizes()}; }

std::vector<IrrepLabel> irrep_labels(int n, int c) {
  std::vector<IrrepLabel> out;
  for (auto& comp : compositions(n, c + 1)) out.push_back({std::move(comp)});
  return out;
}

Profile representative_profile(const IrrepLabel& label) {
  std::vector<int> roles;
  for (int k = 0; k <= label.c(); ++k)
    for (int i = 0; i < label.parts[k]; ++i) roles.push_back(k);
  return Profile::from_roles(label.c(), roles);
}

std::vector<IrrepLabel> restriction_labels(const IrrepLabel& label) {
  std::vector<IrrepLabel> out;
  for (std::size_t j = 0; j < label.parts.size(); ++j) {
    if (label.parts[j] == 0) continue;
    IrrepLabel child = label;
    --child.parts[j];
    out.push_back(std::move(child));
  }
  return out;
}

// ---------------------------------------------------------------- spaces

ModuleSpace::ModuleSpace(int n, int c, std::vector<Diagram> basis,
                         std::optional<Profile> bottom)
    : n_(n), c_(c), basis_(std::move(basis)), bottom_(std::move(bottom)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Diagram& a = basis_[i];
    if (a.n() != n_ || a.c() != c_) throw MismatchError("basis diagram has the wrong (n,c)");
    if (!is_planar(a)) throw NotPlanarError("basis diagram " + to_string(a) + " is not planar");
    if (bottom_ && beta(a) != *bottom_)
      throw ValidationError("basis diagram " + to_string(a) + " does not have bottom " +
                            to_string(*bottom_));
    if (!index_.emplace(a, i).second)
      throw ValidationError("basis diagram " + to_string(a) + " listed twice");
  }
}

std::optional<std::size_t> ModuleSpace::index_of(const Diagram& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ModuleSpace module_space(const Profile& bottom) {
  std::vector<Diagram> basis;
  for (const Profile& s : profiles_with_sizes(bottom.n(), bottom.c(), bottom.sizes()))
    basis.push_back(from_profiles(s, bottom));
  return ModuleSpace(bottom.n(), bottom.c(), std::move(basis), bottom);
}

ModuleSpace representative_space(const IrrepLabel& label) {
  return module_space(representative_profile(label));
}

ModuleSpace graded_space(int n, int c, int k) {
  std::vector<Diagram> basis;
  for (Diagram& a : enumerate_planar(n, c))
    if (static_cast<int>(a.size()) == k) basis.push_back(std::move(a));
  return ModuleSpace(n, c, std::move(basis));
}

ModuleSpace restriction_adapted_space(const Profile& bottom) {
  if (bottom.n() < 1) throw ValidationError("restriction needs n >= 1");
  const ModuleSpace plain = module_space(bottom);
  std::vector<Diagram> basis = plain.basis();
  std::stable_sort(basis.begin(), basis.end(), [&](const Diagram& a, const Diagram& b) {
    return tau(a).role_of(bottom.n()) < tau(b).role_of(bottom.n());
  });
  return ModuleSpace(bottom.n(), bottom.c(), std::move(basis), bottom);
}

Matrix action_matrix(const Diagram& d, const ModuleSpace& space) {
  if (d.n() != space.n() || d.c() != space.c())
    throw MismatchError("action_matrix: diagram and module have different (n,c)");
  const std::size_t dim = space.dimension();
  Matrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto image = left_action_x(d, space.basis()[col]);
    if (!image) continue;
    const auto row = space.index_of(*image);
    if (!row)
      throw Error("action of " + to_string(d) + " leaves the space at x_" +
                  to_string(space.basis()[col]));
    m(*row, col) = 1;
  }
  return m;
}

Matrix action_matrix(const Element& g, const ModuleSpace& space) {
  if (g.n() != space.n() || g.c() != space.c())
    throw MismatchError("action_matrix: element and module have different (n,c)");
  Matrix m(space.dimension(), space.dimension());
  for (const auto& [d, q] : g.terms()) m += q * action_matrix(d, space);
  return m;
}

// ---------------------------------------------------------------- irreducibility

CheckResult verify_irreducible(const ModuleSpace& space, std::size_t cap) {
  CheckResult result;
  std::optional<std::vector<Diagram>> everything;
  const auto& basis = space.basis();
  for (std::size_t ia = 0; ia < basis.size(); ++ia) {
    for (std::size_t ib = 0; ib < basis.size(); ++ib) {
      ++result.cases;
      const Diagram& a = basis[ia];
      const Diagram& b = basis[ib];
      const Profile from = tau(a), to = tau(b);
      if (from.sizes() == to.sizes() &&
          action_matrix(from_profiles(to, from), space)(ib, ia) == 1)
        continue;
      if (!everything) {
        require_within_cap(space.n(), space.c(), cap);
        everything = enumerate_planar(space.n(), space.c());
      }
      const bool reachable = std::any_of(everything->begin(), everything->end(),
                                         [&](const Diagram& d) {
                                           const auto image = left_action_x(d, a);
                                           return image && *image == b;
                                         });
      if (!reachable) {
        result.fail({"no diagram sends x_a to x_b", {a, b}, {beta(a), beta(b)}});
        return result;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------- isomorphism

namespace {

const Profile& require_bottom(const ModuleSpace& space, const char* op) {
  if (!space.bottom()) throw ValidationError(std::string(op) + " needs a module W^n_T");
  return *space.bottom();
}

}  // namespace

IsomorphismResult are_isomorphic(const ModuleSpace& first, const ModuleSpace& second) {
  const Profile& t = require_bottom(first, "are_isomorphic");
  const Profile& s = require_bottom(second, "are_isomorphic");
  if (t.n() != s.n() || t.c() != s.c())
    throw MismatchError("are_isomorphic: modules have different (n,c)");
  IsomorphismResult result;
  const auto ts = t.sizes(), ss = s.sizes();
  if (ts == ss) {
    result.isomorphic = true;
    result.intertwiner = from_profiles(t, s);
    return result;
  }
  for (int i = 1; i <= t.c(); ++i) {
    if (ts[i] == ss[i]) continue;
    // The identity-shaped diagram on tau(a), for a in the module whose
    // color-i part is smaller, kills the other module.
    result.distinguisher_acts_on_first = ts[i] < ss[i];
    const Diagram& a = result.distinguisher_acts_on_first ? first.basis().front()
                                                          : second.basis().front();
    result.distinguisher = from_profiles(tau(a), tau(a));
    return result;
  }
  throw Error("are_isomorphic: sizes differ only in part 0");
}

Matrix intertwiner_matrix(const Diagram& d, const ModuleSpace& first,
                          const ModuleSpace& second) {
  Matrix m(second.dimension(), first.dimension());
  for (std::size_t col = 0; col < first.dimension(); ++col) {
    const auto image = right_action_x(first.basis()[col], d);
    if (!image) throw Error("intertwiner kills x_" + to_string(first.basis()[col]));
    const auto row = second.index_of(*image);
    if (!row) throw Error("intertwiner leaves the target module");
    m(*row, col) = 1;
  }
  return m;
}

CheckResult validate_isomorphism(const ModuleSpace& first, const ModuleSpace& second,
                                 const IsomorphismResult& result, std::size_t cap) {
  CheckResult check;
  require_within_cap(first.n(), first.c(), cap);
  const auto diagrams = enumerate_planar(first.n(), first.c());
  const std::vector<Profile> profiles{require_bottom(first, "validate_isomorphism"),
                                      require_bottom(second, "validate_isomorphism")};
  if (result.isomorphic) {
    if (!result.intertwiner) {
      check.fail({"isomorphism claimed without an intertwiner", {}, profiles});
      return check;
    }
    Matrix phi;
    try {
      phi = intertwiner_matrix(*result.intertwiner, first, second);
    } catch (const Error& e) {
      check.fail({e.what(), {*result.intertwiner}, profiles});
      return check;
    }
    // Bijective: one 1 in every row and column.
    if (phi.rows() != phi.cols()) {
      check.fail({"intertwiner is not square", {*result.intertwiner}, profiles});
      return check;
    }
    for (std::size_t i = 0; i < phi.rows(); ++i) {
      std::size_t row_ones = 0, col_ones = 0;
      for (std::size_t j = 0; j < phi.cols(); ++j) {
        row_ones += phi(i, j) != 0;
        col_ones += phi(j, i) != 0;
      }
      if (row_ones != 1 || col_ones != 1) {
        check.fail({"intertwiner is not a bijection", {*result.intertwiner}, profiles});
        return check;
      }
    }
    for (const Diagram& d : diagrams) {
      ++check.cases;
      if (phi * action_matrix(d, first) != action_matrix(d, second) * phi) {
        check.fail({"intertwiner does not commute", {*result.intertwiner, d}, profiles});
        return check;
      }
    }
    return check;
  }
  if (!result.distinguisher) {
    check.fail({"non-isomorphism claimed without a distinguishing diagram", {}, profiles});
    return check;
  }
  ++check.cases;
  const Matrix on_first = action_matrix(*result.distinguisher, first);
  const Matrix on_second = action_matrix(*result.distinguisher, second);
  const bool ok = result.distinguisher_acts_on_first
                      ? (!on_first.is_zero() && on_second.is_zero())
                      : (on_first.is_zero() && !on_second.is_zero());
  if (!ok) check.fail({"distinguisher does not separate the modules", {*result.distinguisher}, profiles});
  return check;
}

// ---------------------------------------------------------------- decomposition

std::vector<std::pair<IrrepLabel, BigInt>> regular_decomposition(int n, int c) {
  std::vector<std::pair<IrrepLabel, BigInt>> out;
  for (auto& label : irrep_labels(n, c)) {
    BigInt mult = label.dimension();
    out.emplace_back(std::move(label), std::move(mult));
  }
  return out;
}

CheckResult verify_regular_decomposition(int n, int c, std::size_t cap) {
  CheckResult check;
  BigInt total = 0;
  for (const auto& [label, mult] : regular_decomposition(n, c)) {
    ++check.cases;
    const auto profiles = profiles_with_sizes(n, c, label.parts);
    if (BigInt(profiles.size()) != mult) {
      check.fail({"multiplicity of " + to_string(label) + " is not the number of profiles", {}, {}});
      return check;
    }
    total += mult * label.dimension();
  }
  if (total != cardinality(n, c)) {
    check.fail({"sum of multiplicity * dimension is " + total.str() + ", not |P_{n,c}|", {}, {}});
    return check;
  }
  require_within_cap(n, c, cap);
  std::map<Profile, ModuleSpace> blocks;
  for (const Profile& t : all_profiles(n, c)) blocks.emplace(t, module_space(t));
  std::map<Profile, std::size_t> seen;
  for (const Diagram& a : enumerate_planar(n, c)) {
    ++check.cases;
    const Profile t = beta(a);
    auto it = blocks.find(t);
    if (it == blocks.end() || !it->second.index_of(a)) {
      check.fail({"x_a lies in no block W^n_T", {a}, {t}});
      return check;
    }
    ++seen[t];
  }
  for (const auto& [t, space] : blocks) {
    if (seen[t] != space.dimension()) {
      check.fail({"block is not exactly the x_a with bottom T", {}, {t}});
      return check;
    }
  }
  return check;
}

CheckResult verify_matrix_algebra(int n, int c, const IrrepLabel& label,
                                  std::size_t dimension_cap, std::size_t cap) {
  CheckResult check;
  if (label.n() != n || label.c() != c) throw MismatchError("label does not match (n,c)");
  const auto profiles = profiles_with_sizes(n, c, label.parts);
  const std::size_t m = profiles.size();
  if (m > dimension_cap)
    throw CapExceeded("matrix algebra of size " + std::to_string(m) + " exceeds the cap of " +
                      std::to_string(dimension_cap));
  std::vector<std::vector<Element>> x(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) x[i].push_back(x_of(st_diagram(profiles[i], profiles[j])));

  auto from_matrix_units = [&](const Matrix& e) {
    Element out(n, c);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        if (e(p, q) != 0) out += scale(e(p, q), x[p][q]);
    return out;
  };

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t k = 0; k < m; ++k) {
          ++check.cases;
          const Element product = mul(x[i][j], x[l][k]);
          const Matrix units = Matrix::unit(m, i, j) * Matrix::unit(m, l, k);
          const auto predicted = x_st_product(profiles[i], profiles[j], profiles[l], profiles[k]);
          const bool predicted_zero = !predicted.has_value();
          if (product != from_matrix_units(units) || predicted_zero != units.is_zero()) {
            check.fail({"x_{S,T} x_{U,V} does not match E_{i,j} E_{l,k}",
                        {},
                        {profiles[i], profiles[j], profiles[l], profiles[k]}});
            return check;
          }
        }

  require_within_cap(n, c, cap);
  auto in_ideal = [&](const Element& g) {
    for (const auto& [a, mu] : to_x_coordinates(g))
      if (label_of(beta(a)) != label) return false;
    return true;
  };
  for (const Diagram& d : enumerate_planar(n, c)) {
    const Element gen(d);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        ++check.cases;
        if (!in_ideal(mul(gen, x[i][j])) || !in_ideal(mul(x[i][j], gen))) {
          check.fail({"ideal is not closed under multiplication by a diagram",
                      {d},
                      {profiles[i], profiles[j]}});
          return check;
        }
      }
  }
  return check;
}

// ---------------------------------------------------------------- characters

std::vector<int> vertical_counts(const Diagram& d) {
  std::vector<int> counts(d.c(), 0);
  for (const Edge& e : d.edges())
    if (e.top == e.bottom) ++counts[e.color - 1];
  return counts;
}

BigInt character(const Diagram& d, const IrrepLabel& label) {
  if (label.n() != d.n() || label.c() != d.c())
    throw MismatchError("character: label does not match the diagram");
  if (!is_planar(d)) throw NotPlanarError("character: " + to_string(d) + " is not planar");
  const auto ell = vertical_counts(d);
  BigInt value = 1;
  for (int i = 1; i <= d.c(); ++i) {
    if (label.parts[i] > ell[i - 1]) return 0;
    value *= binomial(ell[i - 1], label.parts[i]);
  }
  return value;
}

Rational character_by_trace(const Diagram& d, const IrrepLabel& label) {
  return action_matrix(d, representative_space(label)).trace();
}

Rational trace_on(const Element& g, const IrrepLabel& label) {
  return action_matrix(g, representative_space(label)).trace();
}

Diagram vertical_representative(int n, int c, const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != c) throw ValidationError("need c vertical counts");
  std::vector<Edge> edges;
  int v = 1;
  for (int k = 1; k <= c; ++k)
    for (int r = 0; r < counts[k - 1]; ++r, ++v) edges.push_back({v, v, k});
  if (v - 1 > n) throw ValidationError("vertical counts exceed n");
  return Diagram(n, c, std::move(edges));
}

CharacterTable character_table(int n, int c) {
  CharacterTable table;
  table.n = n;
  table.c = c;
  table.columns = irrep_labels(n, c);
  for (const auto& comp : compositions(n, c + 1)) {
    std::vector<int> ell(comp.begin() + 1, comp.end());
    const Diagram d = vertical_representative(n, c, ell);
    std::vector<BigInt> row;
    for (const auto& label : table.columns) row.push_back(character(d, label));
    table.rows.push_back(std::move(ell));
    table.values.push_back(std::move(row));
  }
  return table;
}

CheckResult verify_character_table(const CharacterTable& table, std::size_t cap) {
  CheckResult check;
  require_within_cap(table.n, table.c, cap);
  std::vector<ModuleSpace> spaces;
  for (const auto& label : table.columns) spaces.push_back(representative_space(label));
  for (const Diagram& d : enumerate_planar(table.n, table.c)) {
    const auto ell = vertical_counts(d);
    const auto row = std::find(table.rows.begin(), table.rows.end(), ell);
    if (row == table.rows.end()) {
      check.fail({"no table row for the vertical counts of the diagram", {d}, {}});
      return check;
    }
    const auto r = static_cast<std::size_t>(row - table.rows.begin());
    for (std::size_t col = 0; col < spaces.size(); ++col) {
      ++check.cases;
      if (action_matrix(d, spaces[col]).trace() != Rational(table.values[r][col])) {
        check.fail({"trace differs from the table entry for label " + to_string(table.columns[col]),
                    {d},
                    {}});
        return check;
      }
    }
  }
  return check;
}

std::string to_csv(const CharacterTable& table) {
  std::ostringstream os;
  os << "vertical_counts";
  for (const auto& label : table.columns) os << ',' << to_string(label);
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << join_bar(table.rows[r]);
    for (const auto& v : table.values[r]) os << ',' << v.str();
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- restriction

namespace {

Profile drop_last_vertex(const Profile& p) {
  auto parts = p.parts();
  for (auto& part : parts) std::erase(part, p.n());
  return Profile(p.n() - 1, p.c(), std::move(parts));
}

}  // namespace

RestrictionResult restriction_decomposition(const ModuleSpace& space, std::size_t cap) {
  const Profile& t = require_bottom(space, "restriction_decomposition");
  const int n = t.n();
  const int c = t.c();
  if (n < 1) throw ValidationError("restriction needs n >= 1");
  require_within_cap(n - 1, c, cap);

  RestrictionResult result;
  CheckResult& check = result.check;
  const ModuleSpace adapted = restriction_adapted_space(t);

  struct Block {
    std::vector<std::size_t> indices;
    std::optional<ModuleSpace> target;
    Matrix phi;
  };
  std::vector<Block> blocks;
  std::vector<int> block_part;
  for (std::size_t i = 0; i < adapted.dimension(); ++i) {
    const int j = tau(adapted.basis()[i]).role_of(n);
    if (block_part.empty() || block_part.back() != j) {
      block_part.push_back(j);
      blocks.emplace_back();
    }
    blocks.back().indices.push_back(i);
  }

  std::size_t total = 0;
  for (auto& block : blocks) {
    const Diagram& first = adapted.basis()[block.indices.front()];
    const IrrepLabel label = label_of(drop_last_vertex(tau(first)));
    result.labels.push_back(label);
    total += block.indices.size();

    const Profile target_bottom = representative_profile(label);
    block.target.emplace(module_space(target_bottom));
    const ModuleSpace& target = *block.target;
    if (target.dimension() != block.indices.size()) {
      check.fail({"block and level n-1 module differ in dimension", {first}, {t, target_bottom}});
      return result;
    }
    block.phi = Matrix(target.dimension(), block.indices.size());
    for (std::size_t k = 0; k < block.indices.size(); ++k) {
      const Diagram& a = adapted.basis()[block.indices[k]];
      const Diagram image = from_profiles(drop_last_vertex(tau(a)), target_bottom);
      const auto row = target.index_of(image);
      if (!row) {
        check.fail({"dropping vertex n leaves the level n-1 module", {a}, {t, target_bottom}});
        return result;
      }
      block.phi(*row, k) = 1;
    }
  }

  if (result.labels != restriction_labels(label_of(t)) || total != space.dimension()) {
    check.fail({"block labels do not match the componentwise restriction rule", {}, {t}});
    return result;
  }

  for (const Diagram& d : enumerate_planar(n - 1, c)) {
    const Matrix g = action_matrix(embed(Element(d)), adapted);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      ++check.cases;
      for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
        if (bi == bj) continue;
        if (!g.block(blocks[bi].indices, blocks[bj].indices).is_zero()) {
          check.fail({"embedded diagram mixes restriction blocks", {d}, {t}});
          return result;
        }
      }
      const Block& block = blocks[bi];
      const Matrix inner = g.block(block.indices, block.indices);
      if (block.phi * inner != action_matrix(d, *block.target) * block.phi) {
        check.fail({"restriction intertwiner does not commute", {d}, {t, *block.target->bottom()}});
        return result;
      }
    }
  }
  return result;
}

}  // namespace prook
