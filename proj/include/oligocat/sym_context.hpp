// Backend for the infinite symmetric group acting on Omega = {1,2,...}.
//
// Pattern encoding at level N: a slot pinned to the constant c holds c
// (1 <= c <= N); generic values are N+1, N+2, ... numbered by first occurrence.
#pragma once

#include "oligocat/context.hpp"

namespace olig {

class SymContext final : public GroupContext {
 public:
  std::string name() const override { return "sym"; }
  using GroupContext::enumerate;
  void enumerate(const Product& x, int level, const std::function<void(const Pattern&)>& fn,
                 const PrefixFilter* filter) const override;
  Pattern normalize(Pattern p) const override;
  Poly fiber_measure(const Pattern& p, const std::vector<char>& fixed) const override;
  std::string format(const Product& x, const Pattern& canonical) const override;
  Pattern parse(const Product& x, std::string_view s) const override;
  bool is_pinned(int v, int level) const override { return v >= 1 && v <= level; }
};

// Free-function entry points.
std::vector<Orbit> sym_orbits(const SetExpr& x, int level);
ParamScalar sym_measure(const SetExpr& x, const Orbit& o);
ParamScalar sym_measure(const SetExpr& x);

// Number of points of X fixed by the pointwise stabilizer of {1..n}, i.e. the
// number of points of X all of whose coordinates lie in {1..n}.  Counted by
// brute force over coordinate tuples, independently of the measure code.
Integer sym_fixed_points(const SetExpr& x, int n);

}  // namespace olig
