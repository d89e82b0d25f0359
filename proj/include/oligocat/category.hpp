// The tensor category of permutation objects: Hom bases, tensor products,
// duality, categorical traces, graph matrices A_f / B_f, the Frobenius
// structure on every object, and idempotent splitting of End algebras.
#pragma once

#include <vector>

#include "oligocat/matrix.hpp"
#include "oligocat/report.hpp"

namespace olig {

// Vec_X for a set expression X.  Components keep their declared order.
struct PermObject {
  ContextPtr ctx;
  SetExpr x;
  static PermObject unit(ContextPtr ctx) { return {std::move(ctx), SetExpr::point()}; }
  bool is_zero() const { return x.is_empty(); }
  friend PermObject operator*(const PermObject& a, const PermObject& b) { return {a.ctx, a.x * b.x}; }
};

// one indicator matrix per orbit on Y x X, in canonical order
std::vector<InvariantMatrix> hom_basis(const PermObject& x, const PermObject& y);

InvariantMatrix compose(const InvariantMatrix& g, const InvariantMatrix& f);
InvariantMatrix tensor(const InvariantMatrix& m, const InvariantMatrix& n);
InvariantMatrix identity(const PermObject& x);
InvariantMatrix dual(const InvariantMatrix& m);
// swap X*Y -> Y*X as a morphism
InvariantMatrix braiding(const PermObject& x, const PermObject& y);

struct Duality {
  InvariantMatrix ev;  // Vec_{X*X} -> 1
  InvariantMatrix cv;  // 1 -> Vec_{X*X}
};
Duality duality_data(const PermObject& x);

// scalar of an endomorphism of the unit object
Poly unit_scalar(const InvariantMatrix& m);
// ev o (M (x) id) o cv
Poly categorical_trace(const InvariantMatrix& m);

struct GraphPair {
  InvariantMatrix a;  // A_f : Vec_X -> Vec_Y
  InvariantMatrix b;  // B_f : Vec_Y -> Vec_X
};
GraphPair graph_matrices(const ContextPtr& ctx, const GSetMap& f);

// If m = c * identity return c.
std::optional<Poly> scalar_multiple_of_identity(const InvariantMatrix& m);

// Relations for a single map: A_f B_f = c I when the target is transitive,
// with c the fiber measure.
Report graph_map_report(const ContextPtr& ctx, const GSetMap& f);
// A_g A_f = A_gf and B_f B_g = B_gf
Report graph_composition_report(const ContextPtr& ctx, const GSetMap& f, const GSetMap& g);
// base change for the square of projections X*Y -> X <- X*Z
Report base_change_report(const ContextPtr& ctx, const SetExpr& x, const SetExpr& y, const SetExpr& z);
// B_i A_i = I, B_j A_i = 0, A_i B_i + A_j B_j = I for X -> X+Y <- Y
Report additivity_report(const ContextPtr& ctx, const SetExpr& x, const SetExpr& y);

struct FrobeniusData {
  PermObject x;
  InvariantMatrix eta, mu, eps, delta;
};
FrobeniusData frobenius(const PermObject& x);
Report frobenius_report(const FrobeniusData& f);

// zigzag identities, ev o cv = mu(X), dual = transpose, categorical trace
// against matrix trace on the Hom basis
Report duality_report(const PermObject& x);

// A family of structural maps used by the category and balanced-functor
// reports.
struct MapFamily {
  std::vector<GSetMap> maps;
  std::vector<std::pair<GSetMap, GSetMap>> composable;  // (f, g) with g o f defined
};
MapFamily structural_map_family();

// additivity, base change and mu-adaptedness of f -> (A_f, B_f)
Report balanced_axioms_report(const ContextPtr& ctx, const MapFamily& fam);

struct IdempotentSplitting {
  std::vector<InvariantMatrix> idempotents;  // as level-0 matrices with rational entries
  std::vector<Rational> dims;
  bool complete = false;
  bool semisimple = false;
  std::string note;
};
IdempotentSplitting idempotent_split(const PermObject& x, const Rational& t0, unsigned seed = 1);

}  // namespace olig
