#pragma once

// Classical cohomology ring of Gr(2,4) in the Schubert basis.
//
// Basis order (fixed, every matrix downstream inherits it):
//   0: (0,0)  1: (1,0)  2: (2,0)  3: (1,1)  4: (2,1)  5: (2,2)

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "qhgr/rational.hpp"

namespace qhgr {

inline constexpr std::size_t kRank = 6;

/// A Young diagram fitting in the 2x2 grid, rows (first, second) with first >= second.
class YoungDiagram22 {
 public:
  constexpr YoungDiagram22() = default;

  constexpr YoungDiagram22(int first, int second) : first_(first), second_(second) {
    if (!(0 <= second && second <= first && first <= 2)) {
      throw std::invalid_argument("not a Young diagram inside the 2x2 grid");
    }
  }

  static constexpr YoungDiagram22 from_index(std::size_t i) {
    constexpr std::array<std::array<int, 2>, kRank> rows{{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {2, 2}}};
    if (i >= kRank) throw std::out_of_range("Schubert index out of range");
    return {rows[i][0], rows[i][1]};
  }

  constexpr int first() const { return first_; }
  constexpr int second() const { return second_; }
  constexpr int boxes() const { return first_ + second_; }

  constexpr std::size_t index() const {
    switch (first_ * 3 + second_) {
      case 0: return 0;
      case 3: return 1;
      case 6: return 2;
      case 4: return 3;
      case 7: return 4;
      default: return 5;
    }
  }

  /// "a,b" as used on the command line and in JSON.
  std::string label() const { return std::to_string(first_) + "," + std::to_string(second_); }

  /// Parses "a,b"; nullopt if the text is not a valid diagram.
  static std::optional<YoungDiagram22> parse(const std::string& text) {
    if (text.size() != 3 || text[1] != ',') return std::nullopt;
    int a = text[0] - '0';
    int b = text[2] - '0';
    if (!(0 <= b && b <= a && a <= 2)) return std::nullopt;
    return YoungDiagram22(a, b);
  }

  friend constexpr bool operator==(const YoungDiagram22&, const YoungDiagram22&) = default;
  friend constexpr auto operator<=>(const YoungDiagram22& x, const YoungDiagram22& y) {
    return x.index() <=> y.index();
  }

 private:
  int first_ = 0;
  int second_ = 0;
};

inline constexpr std::array<YoungDiagram22, kRank> all_diagrams() {
  std::array<YoungDiagram22, kRank> out{};
  for (std::size_t i = 0; i < kRank; ++i) out[i] = YoungDiagram22::from_index(i);
  return out;
}

/// Twice the number of boxes.
inline constexpr int codegree(YoungDiagram22 d) { return 2 * d.boxes(); }
inline constexpr int codegree(std::size_t index) { return codegree(YoungDiagram22::from_index(index)); }

/// Element of H(Gr(2,4)) in the sigma basis.
class SchubertClassVector {
 public:
  SchubertClassVector() = default;
  explicit SchubertClassVector(std::array<Rational, kRank> coeffs) : coeffs_(std::move(coeffs)) {}

  static SchubertClassVector basis(std::size_t i) {
    SchubertClassVector v;
    v.coeffs_.at(i) = 1;
    return v;
  }

  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::array<Rational, kRank>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!qhgr::is_zero(c)) return false;
    return true;
  }

  SchubertClassVector& operator+=(const SchubertClassVector& o) {
    for (std::size_t i = 0; i < kRank; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  friend SchubertClassVector operator+(SchubertClassVector a, const SchubertClassVector& b) { return a += b; }
  friend SchubertClassVector operator*(const Rational& s, SchubertClassVector v) {
    for (auto& c : v.coeffs_) c *= s;
    return v;
  }
  friend bool operator==(const SchubertClassVector&, const SchubertClassVector&) = default;

 private:
  std::array<Rational, kRank> coeffs_{};
};

/// The Poincare pairing matrix g. It is its own inverse.
class IntersectionMatrix {
 public:
  constexpr int operator()(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
  constexpr const std::array<std::array<int, kRank>, kRank>& entries() const { return entries_; }

  /// The unique f with g(e, f) != 0.
  constexpr std::size_t dual(std::size_t e) const {
    for (std::size_t f = 0; f < kRank; ++f)
      if (entries_[e][f] != 0) return f;
    return kRank;
  }

 private:
  std::array<std::array<int, kRank>, kRank> entries_{{
      {0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0},
  }};
};

inline constexpr IntersectionMatrix kIntersection{};

namespace detail {

// Cup products sigma_i * sigma_j for i <= j, as integer coefficient rows.
// Pairs whose codegrees sum past 8 vanish.
inline constexpr std::array<std::array<std::array<int, kRank>, kRank>, kRank> cup_table() {
  std::array<std::array<std::array<int, kRank>, kRank>, kRank> t{};
  for (std::size_t j = 0; j < kRank; ++j) t[0][j][j] = 1;
  t[1][1][2] = 1;
  t[1][1][3] = 1;
  t[1][2][4] = 1;
  t[1][3][4] = 1;
  t[1][4][5] = 1;
  t[2][2][5] = 1;
  t[3][3][5] = 1;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < i; ++j) t[i][j] = t[j][i];
  return t;
}

inline constexpr auto kCupTable = cup_table();

}  // namespace detail

inline SchubertClassVector cup(YoungDiagram22 a, YoungDiagram22 b) {
  SchubertClassVector out;
  const auto& row = detail::kCupTable[a.index()][b.index()];
  for (std::size_t f = 0; f < kRank; ++f) out[f] = row[f];
  return out;
}

inline SchubertClassVector cup(const SchubertClassVector& u, const SchubertClassVector& v) {
  SchubertClassVector out;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < kRank; ++j) {
      if (is_zero(v[j])) continue;
      out += (u[i] * v[j]) * cup(YoungDiagram22::from_index(i), YoungDiagram22::from_index(j));
    }
  }
  return out;
}

inline int pairing(std::size_t i, std::size_t j) { return kIntersection(i, j); }

/// <sigma_i sigma_j sigma_k, [X]>.
inline Rational triple_intersection(std::size_t i, std::size_t j, std::size_t k) {
  const auto& row = detail::kCupTable.at(i).at(j);
  Rational total = 0;
  for (std::size_t f = 0; f < kRank; ++f) total += row[f] * kIntersection(f, k);
  return total;
}

}  // namespace qhgr
