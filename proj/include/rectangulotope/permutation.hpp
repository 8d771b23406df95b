#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rectangulotope {

/// A permutation of [n] in one-line notation, with 1-based values and
/// 1-based positions. The inverse is computed on demand.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `word` is a permutation of [n], n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(word_.size()); }

  /// Value at 1-based position `pos`.
  int operator()(int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }

  std::span<const int> word() const { return word_; }

  /// positions()[v] is the 1-based position of value v; entry 0 is unused.
  std::vector<int> positions() const;

  Permutation inverse() const;

  /// Exchanges the values at positions j and j+1.
  Permutation swapped(int j) const;

  bool is_descent(int j) const { return (*this)(j) > (*this)(j + 1); }

  /// Digit string for n <= 9, comma-separated list otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Accepts "2413" (digits only, n <= 9) and "2,4,1,3". Throws
/// std::invalid_argument on malformed input.
Permutation parse_permutation(std::string_view text);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// n! as a 64-bit count; throws std::overflow_error past 20!.
std::size_t factorial(int n);

/// The `rank`-th permutation of [n] in lexicographic order (rank < n!).
Permutation unrank_permutation(int n, std::size_t rank);

/// {(p_i, p_j) : i < j, p_i > p_j}, as (larger, smaller) value pairs.
std::set<std::pair<int, int>> inversion_set(const Permutation& p);

/// Weak Bruhat order: inversion-set inclusion. Sizes must agree.
bool weak_leq(const Permutation& p, const Permutation& q);

/// Number of descents of p.
int descent_count(const Permutation& p);

/// An arc (a, b, A, B): a curve from a to b passing above the values of A and
/// below the values of B, where A and B partition ]a, b[.
struct Arc {
  int a = 0;
  int b = 0;
  std::vector<int> above;  // A, sorted
  std::vector<int> below;  // B, sorted

  /// Throws std::invalid_argument unless a < b and A, B partition ]a, b[.
  static Arc make(int a, int b, std::vector<int> above, std::vector<int> below);

  /// The basic arc (i, i+1, {}, {}).
  static Arc basic(int i) { return Arc{i, i + 1, {}, {}}; }

  bool is_above(int v) const;

  std::string to_string() const;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// The arc labelling the cover exchanged by swapping positions j and j+1:
/// with u < v the two values, A holds the values of ]u,v[ left of j and B
/// those right of j+1. Throws std::out_of_range unless 1 <= j <= n-1.
Arc cover_arc(const Permutation& p, int j);

/// Noncrossing arc diagram: one cover arc per descent, sorted.
std::vector<Arc> arc_diagram(const Permutation& p);

/// Number of times the arc changes side of the horizontal axis.
int crossing_number(const Arc& arc);

/// True when the subarc relation holds: outer.a <= inner.a < inner.b <= outer.b,
/// inner.A within outer.A and inner.B within outer.B.
bool is_subarc(const Arc& inner, const Arc& outer);

/// Two arcs cross when, in the curve picture, their interiors meet. Arcs
/// sharing an endpoint do not cross.
bool arcs_cross(const Arc& x, const Arc& y);

/// All arcs on [n].
std::vector<Arc> all_arcs(int n);

/// A pattern whose entries at glued positions j, j+1 must be adjacent in the
/// text. Written "2[41]3": bracketed runs are contiguous.
struct VincularPattern {
  std::vector<int> values;
  std::vector<int> glued;  // 1-based j meaning positions j, j+1 are adjacent

  /// Parses bracket notation such as "24[51]3". Throws std::invalid_argument.
  static VincularPattern parse(std::string_view text);

  int size() const { return static_cast<int>(values.size()); }
  std::string to_string() const;
};

bool vincular_contains(const Permutation& p, const VincularPattern& pattern);

/// True when p avoids every pattern in the list.
bool avoids_all(const Permutation& p, std::span<const VincularPattern> patterns);

// Named families.
const std::vector<VincularPattern>& baxter_patterns();
const std::vector<VincularPattern>& twisted_baxter_patterns();
const std::vector<VincularPattern>& co_twisted_baxter_patterns();
const std::vector<VincularPattern>& two_clumped_patterns();
const std::vector<VincularPattern>& co_two_clumped_patterns();

bool is_baxter(const Permutation& p);
bool is_twisted_baxter(const Permutation& p);
bool is_co_twisted_baxter(const Permutation& p);
bool is_2clumped(const Permutation& p);
bool is_co_2clumped(const Permutation& p);

}  // namespace rectangulotope
