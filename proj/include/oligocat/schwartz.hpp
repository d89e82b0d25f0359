// Schwartz functions (finite sums of orbit indicators), structural maps and
// the integration calculus: integrate, pushforward, pullback, level change.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "oligocat/context.hpp"

namespace olig {

class SchwartzFunction {
 public:
  SchwartzFunction(ContextPtr ctx, SetExpr domain, int level);

  static SchwartzFunction zero(ContextPtr ctx, SetExpr domain, int level = 0);
  static SchwartzFunction constant(ContextPtr ctx, SetExpr domain, const Poly& c, int level = 0);
  static SchwartzFunction indicator(ContextPtr ctx, SetExpr domain, const Orbit& o);

  const ContextPtr& context() const { return ctx_; }
  const GroupContext& ctx() const { return *ctx_; }
  const SetExpr& domain() const { return dom_; }
  int level() const { return level_; }
  const std::map<Orbit, Poly>& terms() const { return terms_; }

  Poly value(const Orbit& o) const;
  // value at the class of an ordered pattern on component comp
  Poly value_at(int comp, const Pattern& ordered) const;
  void add(const Orbit& o, const Poly& c);
  void set(const Orbit& o, const Poly& c);
  bool is_zero() const { return terms_.empty(); }

  SchwartzFunction& operator+=(const SchwartzFunction& o);
  SchwartzFunction& operator-=(const SchwartzFunction& o);
  SchwartzFunction& operator*=(const Poly& s);
  friend SchwartzFunction operator+(SchwartzFunction a, const SchwartzFunction& b) { return a += b; }
  friend SchwartzFunction operator-(SchwartzFunction a, const SchwartzFunction& b) { return a -= b; }
  friend SchwartzFunction operator*(SchwartzFunction a, const Poly& s) { return a *= s; }
  friend SchwartzFunction operator*(const Poly& s, SchwartzFunction a) { return a *= s; }
  // pointwise product
  friend SchwartzFunction operator*(const SchwartzFunction& a, const SchwartzFunction& b);
  // equality as functions (levels are reconciled first)
  friend bool operator==(const SchwartzFunction& a, const SchwartzFunction& b);
  friend bool operator!=(const SchwartzFunction& a, const SchwartzFunction& b) { return !(a == b); }

  std::string str() const;

 private:
  ContextPtr ctx_;
  SetExpr dom_;
  int level_;
  std::map<Orbit, Poly> terms_;
};

// Structural map between set expressions.  Source component c goes to target
// component comp[c]; target slot j of that component reads source slot pi[c][j].
struct GSetMap {
  SetExpr src, tgt;
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  std::string label;

  // Throws std::invalid_argument when the data is not a well-defined
  // equivariant map (distinctness or Sub symmetry violated).
  void validate() const;
  std::string str() const { return label.empty() ? src.str() + " -> " + tgt.str() : label; }

  static GSetMap make(SetExpr src, SetExpr tgt, std::vector<int> comp, std::vector<std::vector<int>> pi,
                      std::string label = "");
  static GSetMap identity(const SetExpr& x);
  static GSetMap to_point(const SetExpr& x);
  // X*Y -> X (first=true) or X*Y -> Y
  static GSetMap projection(const SetExpr& x, const SetExpr& y, bool first);
  static GSetMap diagonal(const SetExpr& x);
  static GSetMap swap(const SetExpr& x, const SetExpr& y);
  // X -> X+Y (left=true) or Y -> X+Y
  static GSetMap inclusion(const SetExpr& x, const SetExpr& y, bool left);
  // X+X+...+X (k copies) -> X
  static GSetMap fold(const SetExpr& x, int copies);
  // same slots, coarser factor kinds, e.g. Inj(2) -> Sub(2) or Inj(2) -> Pow(2)
  static GSetMap relabel(const SetExpr& src, const SetExpr& tgt);
  // f x g : X*Y -> X'*Y'
  static GSetMap product(const GSetMap& f, const GSetMap& g);
  // single-component map by slot list, e.g. Inj(2) -> Pow(1) with {0}
  static GSetMap slots(const SetExpr& src, const SetExpr& tgt, const std::vector<int>& pi);
  // parse "proj1:<X>|<Y>", "diag:<X>", "sym:<n>", "pt:<X>", ...
  static GSetMap parse(std::string_view s);
};

// g o f
GSetMap compose(const GSetMap& g, const GSetMap& f);

Poly integrate(const SchwartzFunction& phi);
SchwartzFunction pushforward(const GSetMap& f, const SchwartzFunction& phi);
SchwartzFunction pullback(const GSetMap& f, const SchwartzFunction& psi);
SchwartzFunction change_level(const SchwartzFunction& phi, int level);

// phi(x) psi(y) on X*Y
SchwartzFunction external_product(const SchwartzFunction& phi, const SchwartzFunction& psi);

// Build a function by evaluating fn on the canonical representative of every
// orbit of dom at level.
SchwartzFunction tabulate(ContextPtr ctx, const SetExpr& dom, int level,
                          const std::function<Poly(int comp, const Pattern& rep)>& fn);

// Pushforward of the indicator of one orbit (the refine-and-project step).
SchwartzFunction refine_project(ContextPtr ctx, const SetExpr& x, const Orbit& o, const GSetMap& f);

// Same for the symmetric backend on a product of three sets, projecting away
// the middle one:  X*Y*Z -> X*Z.
SchwartzFunction sym_refine_project(const SetExpr& x, const SetExpr& y, const SetExpr& z, const Orbit& o);

}  // namespace olig
