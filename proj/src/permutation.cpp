#include "rectangulotope/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rectangulotope {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) {
    throw std::invalid_argument("permutation must have at least one entry");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(word_.size() + 1, 0);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    pos[static_cast<std::size_t>(word_[i])] = static_cast<int>(i) + 1;
  }
  return pos;
}

Permutation Permutation::inverse() const {
  auto pos = positions();
  return Permutation(std::vector<int>(pos.begin() + 1, pos.end()));
}

Permutation Permutation::swapped(int j) const {
  if (j < 1 || j >= size()) {
    throw std::out_of_range("swap position out of range");
  }
  Permutation q = *this;
  std::swap(q.word_[static_cast<std::size_t>(j - 1)], q.word_[static_cast<std::size_t>(j)]);
  return q;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> word;
  if (text.empty()) throw std::invalid_argument("empty permutation");
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("unexpected character in permutation: " + std::string(text));
      }
      word.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, end - start);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed permutation entry '" + std::string(token) + "'");
      }
      word.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  out.reserve(factorial(n));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t factorial(int n) {
  if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

Permutation unrank_permutation(int n, std::size_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(pool.size());
  for (int k = n; k >= 1; --k) {
    const std::size_t block = factorial(k - 1);
    const auto idx = rank / block;
    rank %= block;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(w));
}

std::set<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::set<std::pair<int, int>> inv;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) > p(j)) inv.emplace(p(i), p(j));
    }
  }
  return inv;
}

bool weak_leq(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("weak_leq on different sizes");
  const auto qpos = q.positions();
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // (p_i, p_j) inverted in p must stay inverted in q.
      if (p(i) > p(j) && qpos[static_cast<std::size_t>(p(i))] > qpos[static_cast<std::size_t>(p(j))]) {
        return false;
      }
    }
  }
  return true;
}

int descent_count(const Permutation& p) {
  int d = 0;
  for (int j = 1; j < p.size(); ++j) d += p.is_descent(j) ? 1 : 0;
  return d;
}

// ---------------------------------------------------------------------------
// Arcs

Arc Arc::make(int a, int b, std::vector<int> above, std::vector<int> below) {
  if (a < 1 || a >= b) throw std::invalid_argument("arc endpoints must satisfy 1 <= a < b");
  std::sort(above.begin(), above.end());
  std::sort(below.begin(), below.end());
  std::vector<int> all;
  std::merge(above.begin(), above.end(), below.begin(), below.end(), std::back_inserter(all));
  std::vector<int> expected(static_cast<std::size_t>(b - a - 1));
  std::iota(expected.begin(), expected.end(), a + 1);
  if (all != expected) {
    throw std::invalid_argument("arc sides must partition the open interval ]a,b[");
  }
  return Arc{a, b, std::move(above), std::move(below)};
}

bool Arc::is_above(int v) const { return std::binary_search(above.begin(), above.end(), v); }

std::string Arc::to_string() const {
  std::ostringstream os;
  auto set = [&os](const std::vector<int>& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
  };
  os << '(' << a << ',' << b << ',';
  set(above);
  os << ',';
  set(below);
  os << ')';
  return os.str();
}

Arc cover_arc(const Permutation& p, int j) {
  const int n = p.size();
  if (j < 1 || j > n - 1) throw std::out_of_range("cover position out of range");
  const int u = std::min(p(j), p(j + 1));
  const int v = std::max(p(j), p(j + 1));
  Arc arc{u, v, {}, {}};
  const auto pos = p.positions();
  for (int w = u + 1; w < v; ++w) {
    (pos[static_cast<std::size_t>(w)] < j ? arc.above : arc.below).push_back(w);
  }
  return arc;
}

std::vector<Arc> arc_diagram(const Permutation& p) {
  std::vector<Arc> arcs;
  for (int j = 1; j < p.size(); ++j) {
    if (p.is_descent(j)) arcs.push_back(cover_arc(p, j));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

int crossing_number(const Arc& arc) {
  int changes = 0;
  int prev = 0;
  for (int v = arc.a + 1; v < arc.b; ++v) {
    const int side = arc.is_above(v) ? 1 : -1;
    if (prev != 0 && side != prev) ++changes;
    prev = side;
  }
  return changes;
}

bool is_subarc(const Arc& inner, const Arc& outer) {
  return outer.a <= inner.a && inner.b <= outer.b &&
         std::includes(outer.above.begin(), outer.above.end(), inner.above.begin(), inner.above.end()) &&
         std::includes(outer.below.begin(), outer.below.end(), inner.below.begin(), inner.below.end());
}

namespace {

// Height sign of the arc at abscissa x: 0 on endpoints, +1 above, -1 below.
int height_sign(const Arc& arc, int x) {
  if (x == arc.a || x == arc.b) return 0;
  return arc.is_above(x) ? 1 : -1;
}

}  // namespace

bool arcs_cross(const Arc& x, const Arc& y) {
  const int lo = std::max(x.a, y.a);
  const int hi = std::min(x.b, y.b);
  bool x_over = false;
  bool y_over = false;
  for (int t = lo; t <= hi; ++t) {
    const int sx = height_sign(x, t);
    const int sy = height_sign(y, t);
    if (sx > sy) x_over = true;
    if (sy > sx) y_over = true;
  }
  return x_over && y_over;
}

std::vector<Arc> all_arcs(int n) {
  std::vector<Arc> arcs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const int inner = b - a - 1;
      for (unsigned mask = 0; mask < (1u << inner); ++mask) {
        Arc arc{a, b, {}, {}};
        for (int k = 0; k < inner; ++k) {
          ((mask >> k) & 1u ? arc.above : arc.below).push_back(a + 1 + k);
        }
        arcs.push_back(std::move(arc));
      }
    }
  }
  return arcs;
}

// ---------------------------------------------------------------------------
// Vincular patterns

VincularPattern VincularPattern::parse(std::string_view text) {
  VincularPattern pat;
  bool open = false;
  int run_start = 0;
  for (char c : text) {
    if (c == '[') {
      if (open) throw std::invalid_argument("nested bracket in pattern");
      open = true;
      run_start = pat.size() + 1;
    } else if (c == ']') {
      if (!open) throw std::invalid_argument("unbalanced bracket in pattern");
      open = false;
      for (int j = run_start; j < pat.size(); ++j) pat.glued.push_back(j);
    } else if (c >= '1' && c <= '9') {
      pat.values.push_back(c - '0');
    } else {
      throw std::invalid_argument("unexpected character in pattern");
    }
  }
  if (open) throw std::invalid_argument("unbalanced bracket in pattern");
  Permutation check(pat.values);  // validates values
  (void)check;
  return pat;
}

std::string VincularPattern::to_string() const {
  std::string out;
  for (int k = 1; k <= size(); ++k) {
    const bool glued_left = std::find(glued.begin(), glued.end(), k - 1) != glued.end();
    const bool glued_right = std::find(glued.begin(), glued.end(), k) != glued.end();
    if (glued_right && !glued_left) out += '[';
    out += std::to_string(values[static_cast<std::size_t>(k - 1)]);
    if (glued_left && !glued_right) out += ']';
  }
  return out;
}

namespace {

bool match_from(const Permutation& p, const VincularPattern& pat, std::vector<int>& chosen,
                const std::vector<bool>& glued_after) {
  const int k = static_cast<int>(chosen.size());
  if (k == pat.size()) return true;
  const int n = p.size();
  const int remaining = pat.size() - k;
  int first = chosen.empty() ? 1 : chosen.back() + 1;
  int last = n - remaining + 1;
  if (k > 0 && glued_after[static_cast<std::size_t>(k - 1)]) last = first;
  for (int pos = first; pos <= last; ++pos) {
    bool ok = true;
    const int pv = pat.values[static_cast<std::size_t>(k)];
    for (int m = 0; m < k && ok; ++m) {
      const bool pattern_less = pat.values[static_cast<std::size_t>(m)] < pv;
      const bool text_less = p(chosen[static_cast<std::size_t>(m)]) < p(pos);
      ok = pattern_less == text_less;
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (match_from(p, pat, chosen, glued_after)) return true;
    chosen.pop_back();
  }
  return false;
}

std::vector<VincularPattern> parse_all(std::initializer_list<std::string_view> texts) {
  std::vector<VincularPattern> out;
  for (auto t : texts) out.push_back(VincularPattern::parse(t));
  return out;
}

}  // namespace

bool vincular_contains(const Permutation& p, const VincularPattern& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<bool> glued_after(static_cast<std::size_t>(pattern.size()), false);
  for (int j : pattern.glued) glued_after[static_cast<std::size_t>(j - 1)] = true;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return match_from(p, pattern, chosen, glued_after);
}

bool avoids_all(const Permutation& p, std::span<const VincularPattern> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&p](const VincularPattern& pat) { return vincular_contains(p, pat); });
}

const std::vector<VincularPattern>& baxter_patterns() {
  static const auto pats = parse_all({"2[41]3", "3[14]2"});
  return pats;
}

const std::vector<VincularPattern>& twisted_baxter_patterns() {
  static const auto pats = parse_all({"2[41]3", "3[41]2"});
  return pats;
}

const std::vector<VincularPattern>& co_twisted_baxter_patterns() {
  static const auto pats = parse_all({"2[14]3", "3[14]2"});
  return pats;
}

const std::vector<VincularPattern>& two_clumped_patterns() {
  static const auto pats = parse_all({"24[51]3", "42[51]3", "3[51]24", "3[51]42"});
  return pats;
}

// Reversals of the 2-clumped patterns (the complements give the same list).
const std::vector<VincularPattern>& co_two_clumped_patterns() {
  static const auto pats = parse_all({"3[15]42", "3[15]24", "42[15]3", "24[15]3"});
  return pats;
}

bool is_baxter(const Permutation& p) { return avoids_all(p, baxter_patterns()); }
bool is_twisted_baxter(const Permutation& p) { return avoids_all(p, twisted_baxter_patterns()); }
bool is_co_twisted_baxter(const Permutation& p) { return avoids_all(p, co_twisted_baxter_patterns()); }
bool is_2clumped(const Permutation& p) { return avoids_all(p, two_clumped_patterns()); }
bool is_co_2clumped(const Permutation& p) { return avoids_all(p, co_two_clumped_patterns()); }

}  // namespace rectangulotope
