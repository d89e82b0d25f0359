// Backend for Aut(R,<) with the four measures mu_{e,d}, plus the colored
// order combinatorics (ruffles and symbols).
//
// Pattern encoding at level N: the constants are c_1 < ... < c_N and sit at
// value k*kStride.  A generic value i*kStride + r (1 <= r < kStride) lies in
// the open interval between c_i and c_{i+1} (interval 0 is left of c_1,
// interval N right of c_N) with rank r among the generic values there.  Since
// the encoding is monotone, integer comparison is the order on R.
#pragma once

#include <map>

#include "oligocat/context.hpp"

namespace olig {

struct OrderMeasureSpec {
  int eps = -1;    // measure of a left half-line
  int delta = -1;  // measure of a right half-line
  void validate() const;
  std::string str() const;
  friend bool operator==(const OrderMeasureSpec&, const OrderMeasureSpec&) = default;
};

class OrderContext final : public GroupContext {
 public:
  static constexpr int kStride = 64;

  explicit OrderContext(OrderMeasureSpec spec = {});
  const OrderMeasureSpec& spec() const { return spec_; }

  std::string name() const override { return "order:" + spec_.str(); }
  using GroupContext::enumerate;
  void enumerate(const Product& x, int level, const std::function<void(const Pattern&)>& fn,
                 const PrefixFilter* filter) const override;
  Pattern normalize(Pattern p) const override;
  Poly fiber_measure(const Pattern& p, const std::vector<char>& fixed) const override;
  std::string format(const Product& x, const Pattern& canonical) const override;
  Pattern parse(const Product& x, std::string_view s) const override;
  bool is_pinned(int v, int level) const override {
    return v % kStride == 0 && v / kStride >= 1 && v / kStride <= level;
  }

  // measure of I^(k) for an interval with or without finite endpoints
  long interval_measure(bool bounded_left, bool bounded_right, int k) const;

 private:
  OrderMeasureSpec spec_;
};

std::vector<Orbit> ord_orbits(const SetExpr& x, int level);
ParamScalar ord_measure(const SetExpr& x, const Orbit& o, const OrderMeasureSpec& spec);
ParamScalar ord_measure(const SetExpr& x, const OrderMeasureSpec& spec);

// Number of weak orders (ordered set partitions) of an n-element set.
Integer fubini_number(int n);

// ---------------------------------------------------------------- colored orders

using Word = std::string;  // one char per letter

// word -> multiplicity
using RuffleSum = std::map<Word, long>;

RuffleSum ruffle_product(const Word& w, const Word& v);
std::string format_ruffle_sum(const RuffleSum& s);

// A symbol is given by its length-1 table.  Endpoint types are a letter of
// the alphabet or the sentinels kMinusInf / kPlusInf.
struct Symbol {
  static constexpr char kMinusInf = '<';
  static constexpr char kPlusInf = '>';
  std::string alphabet;
  // (sigma, tau, rho) -> value
  std::map<std::tuple<char, char, char>, int> table;

  int length_one(char sigma, char tau, char rho) const;
  // extension to all words by the first-letter rule
  int value(char sigma, char tau, const Word& w) const;
};

struct SymbolCheck {
  bool ok = true;
  int bound = 4;
  std::string witness;  // first failing instance
};

SymbolCheck verify_symbol(const Symbol& s, int max_length = 4);

// Symbols on a single color a whose length-1 values all pass, in a fixed
// enumeration order of the 81 candidate tables.
std::vector<Symbol> single_color_symbol_census(int max_length = 4);

}  // namespace olig
