// Set expressions: finite disjoint unions of finite products of the
// transitive building blocks X^n (Pow), X^[n] (Inj, distinct coordinates)
// and X^(n) (Sub, n-element subsets).  Shared by every group backend.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace olig {

enum class FactorKind { Pow, Inj, Sub };

struct Factor {
  FactorKind kind = FactorKind::Pow;
  int n = 1;
  bool distinct() const { return kind != FactorKind::Pow; }
  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// One transitive-ish component: a product of factors.  Its points are
// flattened to ordered "slots", factor by factor.
struct Product {
  std::vector<Factor> factors;

  int slot_count() const;
  // slot -> index of the factor it belongs to
  std::vector<int> slot_factor() const;
  // first slot of each factor
  std::vector<int> factor_start() const;
  // distinctness group for each slot (factor index) or -1 for Pow slots
  std::vector<int> slot_group() const;
  // order of the permutation group acting within Sub factors
  long sym_order() const;
  bool has_sub() const;
  std::string str() const;

  friend Product operator*(const Product& a, const Product& b);
  friend bool operator==(const Product&, const Product&) = default;
  friend auto operator<=>(const Product&, const Product&) = default;
};

struct SetExpr {
  std::vector<Product> comps;

  static SetExpr point();
  static SetExpr empty() { return {}; }
  static SetExpr single(FactorKind k, int n);
  // Grammar: sum := prod ('+' prod)*,  prod := factor ('*' factor)*,
  // factor := Pow(n) | Inj(n) | Sub(n) | Omega[^k] | R[^k] | Pt | 1 | Empty | 0
  static SetExpr parse(std::string_view s);

  int size() const { return static_cast<int>(comps.size()); }
  bool is_empty() const { return comps.empty(); }
  std::string str() const;

  // Components of a product are ordered lexicographically: (i, j) -> i*|b|+j.
  friend SetExpr operator*(const SetExpr& a, const SetExpr& b);
  friend SetExpr operator+(const SetExpr& a, const SetExpr& b);
  friend bool operator==(const SetExpr&, const SetExpr&) = default;
  friend auto operator<=>(const SetExpr&, const SetExpr&) = default;
};

SetExpr power(const SetExpr& x, int n);

}  // namespace olig
