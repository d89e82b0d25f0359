#include "oligocat/setexpr.hpp"

#include <cctype>

#include "oligocat/scalar.hpp"

namespace olig {

int Product::slot_count() const {
  int s = 0;
  for (const auto& f : factors) s += f.n;
  return s;
}

std::vector<int> Product::slot_factor() const {
  std::vector<int> r;
  for (size_t i = 0; i < factors.size(); ++i)
    for (int k = 0; k < factors[i].n; ++k) r.push_back(static_cast<int>(i));
  return r;
}

std::vector<int> Product::factor_start() const {
  std::vector<int> r;
  int s = 0;
  for (const auto& f : factors) {
    r.push_back(s);
    s += f.n;
  }
  return r;
}

std::vector<int> Product::slot_group() const {
  std::vector<int> r;
  for (size_t i = 0; i < factors.size(); ++i)
    for (int k = 0; k < factors[i].n; ++k) r.push_back(factors[i].distinct() ? static_cast<int>(i) : -1);
  return r;
}

long Product::sym_order() const {
  long o = 1;
  for (const auto& f : factors)
    if (f.kind == FactorKind::Sub)
      for (int k = 2; k <= f.n; ++k) o *= k;
  return o;
}

bool Product::has_sub() const {
  for (const auto& f : factors)
    if (f.kind == FactorKind::Sub && f.n > 1) return true;
  return false;
}

std::string Product::str() const {
  if (factors.empty()) return "Pt";
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    const auto& f = factors[i];
    s += f.kind == FactorKind::Pow ? "Pow(" : f.kind == FactorKind::Inj ? "Inj(" : "Sub(";
    s += std::to_string(f.n) + ")";
  }
  return s;
}

// Inj(1) and Sub(1) are just X; adjacent powers merge, so X*X == X^2.
static void push_factor(Product& r, Factor f) {
  if (f.n == 0) return;
  if (f.n == 1) f.kind = FactorKind::Pow;
  if (f.kind == FactorKind::Pow && !r.factors.empty() && r.factors.back().kind == FactorKind::Pow)
    r.factors.back().n += f.n;
  else
    r.factors.push_back(f);
}

Product operator*(const Product& a, const Product& b) {
  Product r;
  for (const auto& f : a.factors) push_factor(r, f);
  for (const auto& f : b.factors) push_factor(r, f);
  return r;
}

SetExpr SetExpr::point() { return SetExpr{{Product{}}}; }

SetExpr SetExpr::single(FactorKind k, int n) {
  if (n < 0) throw std::invalid_argument("negative factor size");
  if (n == 0) return point();
  Product p;
  push_factor(p, Factor{k, n});
  return SetExpr{{p}};
}

std::string SetExpr::str() const {
  if (comps.empty()) return "Empty";
  std::string s;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) s += " + ";
    s += comps[i].str();
  }
  return s;
}

SetExpr operator*(const SetExpr& a, const SetExpr& b) {
  SetExpr r;
  for (const auto& x : a.comps)
    for (const auto& y : b.comps) r.comps.push_back(x * y);
  return r;
}

SetExpr operator+(const SetExpr& a, const SetExpr& b) {
  SetExpr r = a;
  r.comps.insert(r.comps.end(), b.comps.begin(), b.comps.end());
  return r;
}

SetExpr power(const SetExpr& x, int n) {
  SetExpr r = SetExpr::point();
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

namespace {

class SetParser {
 public:
  explicit SetParser(std::string_view s) : s_(s) {}

  SetExpr parse() {
    SetExpr r = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError("set expression: " + m + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  int integer() {
    skip();
    size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected integer");
    if (pos_ - st > 3) fail("factor size too large");
    return std::stoi(std::string(s_.substr(st, pos_ - st)));
  }
  std::string word() {
    skip();
    size_t st = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    return std::string(s_.substr(st, pos_ - st));
  }

  SetExpr sum() {
    SetExpr r = prod();
    while (peek() == '+') {
      ++pos_;
      r = r + prod();
    }
    return r;
  }
  SetExpr prod() {
    SetExpr r = factor();
    while (peek() == '*') {
      ++pos_;
      r = r * factor();
    }
    return r;
  }
  SetExpr factor() {
    if (peek() == '(') {
      ++pos_;
      SetExpr r = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    std::string w = word();
    if (w.empty()) fail("expected a factor");
    if (w == "Pow" || w == "Inj" || w == "Sub") {
      if (peek() != '(') fail("expected '('");
      ++pos_;
      int n = integer();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      FactorKind k = w == "Pow" ? FactorKind::Pow : w == "Inj" ? FactorKind::Inj : FactorKind::Sub;
      return SetExpr::single(k, n);
    }
    if (w == "Omega" || w == "R") {
      int n = 1;
      if (peek() == '^') {
        ++pos_;
        n = integer();
      }
      return SetExpr::single(FactorKind::Pow, n);
    }
    if (w == "Pt" || w == "1") return SetExpr::point();
    if (w == "Empty" || w == "0") return SetExpr::empty();
    fail("unknown factor '" + w + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

SetExpr SetExpr::parse(std::string_view s) { return SetParser(s).parse(); }

}  // namespace olig
