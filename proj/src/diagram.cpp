#include "prook/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace prook {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)),
      position_(position) {}

std::string to_string(const Edge& e) {
  return std::to_string(e.top) + "-" + std::to_string(e.bottom) + ":" +
         std::to_string(e.color);
}

// ---------------------------------------------------------------- Diagram

Diagram::Diagram(int n, int c, std::vector<Edge> edges)
    : n_(n), c_(c), edges_(std::move(edges)) {
  if (n_ < 0) throw ValidationError("n must be non-negative, got " + std::to_string(n_));
  if (c_ < 1) throw ValidationError("c must be positive, got " + std::to_string(c_));
  std::vector<char> top_used(n_ + 1, 0), bottom_used(n_ + 1, 0);
  for (const Edge& e : edges_) {
    if (e.top < 1 || e.top > n_)
      throw ValidationError("top index out of range in edge " + to_string(e));
    if (e.bottom < 1 || e.bottom > n_)
      throw ValidationError("bottom index out of range in edge " + to_string(e));
    if (e.color < 1 || e.color > c_)
      throw ValidationError("color out of range in edge " + to_string(e));
    if (top_used[e.top])
      throw ValidationError("duplicate top index " + std::to_string(e.top) +
                            " in edge " + to_string(e));
    if (bottom_used[e.bottom])
      throw ValidationError("duplicate bottom index " + std::to_string(e.bottom) +
                            " in edge " + to_string(e));
    top_used[e.top] = bottom_used[e.bottom] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

Diagram::Diagram(Trusted, int n, int c, std::vector<Edge> edges)
    : n_(n), c_(c), edges_(std::move(edges)) {}

Diagram Diagram::empty(int n, int c) { return Diagram(n, c, {}); }

std::optional<Edge> Diagram::edge_at_top(int top) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), top,
                             [](const Edge& e, int t) { return e.top < t; });
  if (it != edges_.end() && it->top == top) return *it;
  return std::nullopt;
}

// ---------------------------------------------------------------- Profile

Profile::Profile(int n, int c, std::vector<std::vector<int>> parts)
    : n_(n), c_(c), parts_(std::move(parts)) {
  if (n_ < 0 || c_ < 1) throw ValidationError("profile needs n >= 0 and c >= 1");
  if (static_cast<int>(parts_.size()) != c_ + 1)
    throw ValidationError("profile needs exactly c+1 parts");
  std::vector<char> seen(n_ + 1, 0);
  std::size_t total = 0;
  for (auto& part : parts_) {
    std::sort(part.begin(), part.end());
    for (int v : part) {
      if (v < 1 || v > n_)
        throw ValidationError("profile vertex " + std::to_string(v) + " out of range");
      if (seen[v])
        throw ValidationError("profile vertex " + std::to_string(v) + " appears twice");
      seen[v] = 1;
    }
    total += part.size();
  }
  if (total != static_cast<std::size_t>(n_))
    throw ValidationError("profile parts do not cover {1..n}");
}

Profile Profile::from_roles(int c, std::span<const int> roles) {
  std::vector<std::vector<int>> parts(c + 1);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] < 0 || roles[i] > c) throw ValidationError("role out of range");
    parts[roles[i]].push_back(static_cast<int>(i) + 1);
  }
  return Profile(static_cast<int>(roles.size()), c, std::move(parts));
}

std::vector<int> Profile::sizes() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(static_cast<int>(p.size()));
  return out;
}

int Profile::role_of(int v) const {
  for (int k = 0; k <= c_; ++k)
    if (std::binary_search(parts_[k].begin(), parts_[k].end(), v)) return k;
  throw ValidationError("vertex " + std::to_string(v) + " not in profile");
}

std::string to_string(const Profile& p) {
  std::string out = "(";
  for (int k = 0; k <= p.c(); ++k) {
    if (k) out += ",";
    out += "{";
    const auto& part = p.part(k);
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(part[i]);
    }
    out += "}";
  }
  return out + ")";
}

// ---------------------------------------------------------------- operations

bool is_planar(const Diagram& d) {
  // Edges are sorted by top, so within a color the bottoms must increase.
  std::vector<int> last_bottom(d.c() + 1, 0);
  for (const Edge& e : d.edges()) {
    if (e.bottom <= last_bottom[e.color]) return false;
    last_bottom[e.color] = e.bottom;
  }
  return true;
}

namespace {

void require_same_shape(const Diagram& a, const Diagram& b, const char* op) {
  if (a.n() != b.n() || a.c() != b.c())
    throw MismatchError(std::string(op) + ": operands have (n,c) = (" +
                        std::to_string(a.n()) + "," + std::to_string(a.c()) +
                        ") and (" + std::to_string(b.n()) + "," +
                        std::to_string(b.c()) + ")");
}

}  // namespace

Diagram multiply(const Diagram& d1, const Diagram& d2) {
  require_same_shape(d1, d2, "multiply");
  std::vector<const Edge*> by_top(d2.n() + 1, nullptr);
  for (const Edge& e : d2.edges_) by_top[e.top] = &e;
  std::vector<Edge> out;
  for (const Edge& e : d1.edges_) {
    const Edge* next = by_top[e.bottom];
    if (next && next->color == e.color) out.push_back({e.top, next->bottom, e.color});
  }
  return Diagram(Diagram::Trusted{}, d1.n(), d1.c(), std::move(out));
}

namespace {

Profile row_profile(const Diagram& d, bool top_row) {
  std::vector<int> roles(d.n(), 0);
  for (const Edge& e : d.edges()) roles[(top_row ? e.top : e.bottom) - 1] = e.color;
  return Profile::from_roles(d.c(), roles);
}

}  // namespace

Profile tau(const Diagram& d) { return row_profile(d, true); }
Profile beta(const Diagram& d) { return row_profile(d, false); }

Diagram from_profiles(const Profile& top, const Profile& bottom) {
  if (top.n() != bottom.n() || top.c() != bottom.c())
    throw MismatchError("from_profiles: profiles have different (n,c)");
  std::vector<Edge> edges;
  for (int k = 1; k <= top.c(); ++k) {
    const auto& t = top.part(k);
    const auto& b = bottom.part(k);
    if (t.size() != b.size())
      throw ValidationError("from_profiles: part " + std::to_string(k) +
                            " has " + std::to_string(t.size()) + " top and " +
                            std::to_string(b.size()) + " bottom vertices");
    for (std::size_t r = 0; r < t.size(); ++r) edges.push_back({t[r], b[r], k});
  }
  return Diagram(top.n(), top.c(), std::move(edges));
}

Diagram tensor(const Diagram& d1, const Diagram& d2) {
  if (d1.c() != d2.c()) throw MismatchError("tensor: operands have different c");
  std::vector<Edge> out(d1.edges_.begin(), d1.edges_.end());
  for (const Edge& e : d2.edges_)
    out.push_back({e.top + d1.n(), e.bottom + d1.n(), e.color});
  return Diagram(Diagram::Trusted{}, d1.n() + d2.n(), d1.c(), std::move(out));
}

Diagram vertical_subdiagram(const Diagram& d) {
  std::vector<Edge> out;
  for (const Edge& e : d.edges_)
    if (e.top == e.bottom) out.push_back(e);
  return Diagram(Diagram::Trusted{}, d.n(), d.c(), std::move(out));
}

std::vector<Diagram> subdiagrams(const Diagram& d) {
  const std::size_t k = d.size();
  if (k >= 8 * sizeof(std::size_t) - 1) throw CapExceeded("too many subdiagrams");
  std::vector<Diagram> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) edges.push_back(d.edges_[i]);
    out.push_back(Diagram(Diagram::Trusted{}, d.n(), d.c(), std::move(edges)));
  }
  return out;
}

bool is_subdiagram(const Diagram& sub, const Diagram& d) {
  if (sub.n() != d.n() || sub.c() != d.c()) return false;
  return std::includes(d.edges().begin(), d.edges().end(), sub.edges().begin(),
                       sub.edges().end());
}

// ---------------------------------------------------------------- enumeration

namespace {

// Fills parts k.. from the vertices still unassigned, in lexicographic order.
void profiles_rec(int n, int c, std::span<const int> sizes, int k,
                  std::vector<int>& roles, std::vector<Profile>& out) {
  if (k == c) {
    // The last part takes whatever is left.
    std::vector<int> r = roles;
    for (int& x : r)
      if (x < 0) x = c;
    out.push_back(Profile::from_roles(c, r));
    return;
  }
  std::vector<int> free;
  for (int v = 0; v < n; ++v)
    if (roles[v] < 0) free.push_back(v);
  const int want = sizes[k];
  if (want > static_cast<int>(free.size())) return;
  // Lexicographic combinations of `want` elements of `free`.
  std::vector<int> pick(want);
  for (int i = 0; i < want; ++i) pick[i] = i;
  while (true) {
    for (int i : pick) roles[free[i]] = k;
    profiles_rec(n, c, sizes, k + 1, roles, out);
    for (int i : pick) roles[free[i]] = -1;
    int i = want - 1;
    while (i >= 0 && pick[i] == static_cast<int>(free.size()) - want + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<Profile> profiles_with_sizes(int n, int c, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != c + 1)
    throw ValidationError("profiles_with_sizes: need c+1 sizes");
  int total = 0;
  for (int s : sizes) {
    if (s < 0) throw ValidationError("profiles_with_sizes: negative size");
    total += s;
  }
  if (total != n) throw ValidationError("profiles_with_sizes: sizes must sum to n");
  std::vector<Profile> out;
  std::vector<int> roles(n, -1);
  profiles_rec(n, c, sizes, 0, roles, out);
  return out;
}

std::vector<Profile> all_profiles(int n, int c) {
  std::vector<Profile> out;
  for (const auto& comp : compositions(n, c + 1)) {
    auto ps = profiles_with_sizes(n, c, comp);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Diagram> enumerate_planar(int n, int c) {
  if (n < 0 || c < 1) throw ValidationError("enumerate_planar needs n >= 0, c >= 1");
  std::vector<Diagram> out;
  for (const auto& comp : compositions(n, c + 1)) {
    const auto profiles = profiles_with_sizes(n, c, comp);
    for (const auto& top : profiles)
      for (const auto& bottom : profiles) out.push_back(from_profiles(top, bottom));
  }
  return out;
}

BigInt cardinality(int n, int c) {
  BigInt total = 0;
  for (const auto& comp : compositions(n, c + 1)) {
    BigInt m = multinomial(comp);
    total += m * m;
  }
  return total;
}

void require_within_cap(int n, int c, std::size_t cap) {
  const BigInt size = cardinality(n, c);
  if (size > cap)
    throw CapExceeded("|P_{" + std::to_string(n) + "," + std::to_string(c) +
                      "}| = " + size.str() + " exceeds the cap of " +
                      std::to_string(cap) + " diagrams");
}

bool enumeration_less(const Diagram& lhs, const Diagram& rhs) {
  if (lhs.n() != rhs.n() || lhs.c() != rhs.c())
    return std::pair(lhs.n(), lhs.c()) < std::pair(rhs.n(), rhs.c());
  const Profile lt = tau(lhs), rt = tau(rhs);
  const auto ls = lt.sizes(), rs = rt.sizes();
  if (ls != rs) return colex_less(ls, rs);
  if (lt != rt) return lt < rt;
  return beta(lhs) < beta(rhs);
}

// ---------------------------------------------------------------- text form

std::string to_string(const Diagram& d) {
  std::string out = "n=" + std::to_string(d.n()) + " c=" + std::to_string(d.c()) + " [";
  bool first = true;
  for (const Edge& e : d.edges()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(e);
  }
  return out + "]";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }
  void expect(char ch) {
    if (!peek(ch)) throw ParseError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }
  void expect_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word)
      throw ParseError("expected '" + std::string(word) + "'", pos_);
    pos_ += word.size();
  }
  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) throw ParseError("expected an integer", pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_diagram(std::string_view text) {
  Cursor cur(text);
  cur.expect('n');
  cur.expect('=');
  const int n = cur.integer();
  cur.expect('c');
  cur.expect('=');
  const int c = cur.integer();
  cur.expect('[');
  std::vector<Edge> edges;
  if (!cur.peek(']')) {
    while (true) {
      Edge e;
      e.top = cur.integer();
      cur.expect('-');
      e.bottom = cur.integer();
      cur.expect(':');
      e.color = cur.integer();
      edges.push_back(e);
      if (cur.peek(',')) {
        cur.expect(',');
        continue;
      }
      break;
    }
  }
  cur.expect(']');
  if (!cur.at_end()) throw ParseError("trailing characters", cur.position());
  return Diagram(n, c, std::move(edges));
}

// ---------------------------------------------------------------- matrix form

std::vector<std::vector<int>> to_matrix(const Diagram& d) {
  std::vector<std::vector<int>> m(d.n(), std::vector<int>(d.n(), 0));
  for (const Edge& e : d.edges()) m[e.top - 1][e.bottom - 1] = e.color;
  return m;
}

Diagram from_matrix(int c, const std::vector<std::vector<int>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n)
      throw ValidationError("matrix is not square");
    for (int j = 0; j < n; ++j)
      if (matrix[i][j] != 0) edges.push_back({i + 1, j + 1, matrix[i][j]});
  }
  return Diagram(n, c, std::move(edges));
}

std::string matrix_to_string(const Diagram& d) {
  std::ostringstream os;
  for (const auto& row : to_matrix(d)) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      if (row[j] == 0)
        os << '0';
      else
        os << 'u' << row[j];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace prook

std::size_t std::hash<prook::Diagram>::operator()(const prook::Diagram& d) const noexcept {
  std::size_t h = static_cast<std::size_t>(d.n()) * 1000003u + static_cast<std::size_t>(d.c());
  for (const auto& e : d.edges()) {
    h = h * 1315423911u + static_cast<std::size_t>(e.top);
    h = h * 1315423911u + static_cast<std::size_t>(e.bottom);
    h = h * 1315423911u + static_cast<std::size_t>(e.color);
  }
  return h;
}
