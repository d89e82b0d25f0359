// Finite relational structures for a few Fraisse classes, embeddings,
// amalgamations, and verification of candidate measures on the class.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "oligocat/report.hpp"
#include "oligocat/scalar.hpp"

namespace olig {

enum class StructureKind { FiniteSet, TotalOrder, Graph, BoronTree };

// Points are 0..n-1.  rel holds the relation of the given arity as a dense
// 0/1 table over n^arity tuples.  Boron trees also keep the tree: leaves are
// the points, internal vertices are numbered from n on.
struct Structure {
  StructureKind kind = StructureKind::FiniteSet;
  int n = 0;
  std::vector<unsigned char> rel;
  std::vector<std::vector<int>> tree;  // boron only: adjacency, size n + #internal

  // labeled equality: same points, same relation
  friend bool operator==(const Structure& a, const Structure& b) {
    return a.kind == b.kind && a.n == b.n && a.rel == b.rel;
  }
  friend bool operator!=(const Structure& a, const Structure& b) { return !(a == b); }
};

class StructureClass {
 public:
  virtual ~StructureClass() = default;
  virtual StructureKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual int arity() const = 0;
  Structure empty() const;
  // every structure on n+1 points whose restriction to 0..n-1 is s
  virtual std::vector<Structure> extensions(const Structure& s) const = 0;
  // induced substructure on pts (new point i is old point pts[i])
  virtual Structure restrict(const Structure& s, const std::vector<int>& pts) const;
  // isomorphism-class key
  virtual std::string canonical(const Structure& s) const;
  virtual std::string str(const Structure& s) const;
  // key of the embedding (first k points) -> x up to relabeling the other points
  virtual std::string embedding_key(const Structure& x, int k) const;
  // all iso classes with exactly n points
  std::vector<Structure> iso_classes(int n) const;
  // all labeled structures on n points reachable by extension from empty
  std::vector<Structure> labeled(int n) const;
  Structure relabel(const Structure& s, const std::vector<int>& perm) const;  // point i -> perm[i]
  bool is_embedding(const Structure& y, const Structure& x, const std::vector<int>& f) const;
};

std::unique_ptr<StructureClass> make_class(StructureKind k);
std::unique_ptr<StructureClass> make_class(const std::string& name);  // sets|orders|graphs|boron

Structure finite_set(int n);
Structure total_order(int n);  // 0 < 1 < ... < n-1
Structure graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
// "u v" lines, optional "n N" header line
Structure parse_graph(const std::string& text);
// Newick-like: "", "0", "(0,1)", "(0,1,2)", "((0,1),2,3)", "((0,1),(2,3))"
Structure parse_boron(const std::string& text);
Structure boron_from_tree(int leaves, const std::vector<std::vector<int>>& adj);
std::vector<int> boron_paired_leaves(const Structure& s);

// An embedding Y -> X, encoded as X with Y on its first k points.
struct Embedding {
  Structure x;
  int k = 0;
};

struct Amalgam {
  Structure x;              // on |Y| + |X\Y| + (unidentified Y'\Y) points
  std::vector<int> from_x;  // image of each point of X
  std::vector<int> from_y;  // image of each point of Y'
};

// i: Y -> X and j: Y -> Y', both given with Y on the first k points.
std::vector<Amalgam> enumerate_amalgamations(const StructureClass& cls, const Structure& x, const Structure& yp,
                                             int k);

struct CandidateMeasure {
  std::string name;
  // value on the embedding (first k points of x) -> x
  std::function<Poly(const Structure&, int)> value;
  // table entry the value is read from; used for perturbations
  std::function<std::string(const Structure&, int)> entry;
};

// mu(Y -> X) = nu(X) / nu(Y)
CandidateMeasure from_r_measure(std::string name, std::function<Poly(const Structure&)> nu,
                                std::function<std::string(const Structure&)> key);
CandidateMeasure sets_nu_t();         // (t)_{#X}
CandidateMeasure orders_sign();       // (-1)^{#X}
CandidateMeasure boron_mu();          // 3/2, 3(-1/2)^n
CandidateMeasure boron_nu();          // the non-regular one
CandidateMeasure constant_one();      // nu = 1 on every structure
// R-measure given as a table {canonical key: value}
CandidateMeasure table_measure(std::string name, const StructureClass& cls, std::map<std::string, Rational> table);
// adds delta to every value read from table entry `entry`
CandidateMeasure perturb(const CandidateMeasure& m, const std::string& entry, const Rational& delta = 1);
// entries of m met by embeddings with at most max_size points
std::vector<std::string> table_entries(const StructureClass& cls, const CandidateMeasure& m, int max_size);

struct VerifyOptions {
  int max_size = 4;      // bound on #X and #Y'
  int max_amalgam = -1;  // skip amalgamation instances with #X + #Y' - #Y above this (-1: no bound)
  int relabelings = 2;   // random relabelings per embedding for iso-invariance
  unsigned seed = 1;
};

Report verify_measure(const StructureClass& cls, const CandidateMeasure& m, const VerifyOptions& opt);

long count_embeddings(const StructureClass& cls, const Structure& y, const Structure& gamma);
bool check_S_regular(const StructureClass& cls, const Structure& gamma, const std::vector<Structure>& s,
                     std::string* witness = nullptr);
// #h(X) #h(Y') = #h(Y) sum #h(X'_a) for all one-step pairs inside s
Report s_regular_identity_report(const StructureClass& cls, const Structure& gamma, const std::vector<Structure>& s);

Report boron_theta_witness();
// table: graph canonical key -> value
Report rado_invariant_check(const std::map<std::string, Rational>& table, int max_vertices);
std::map<std::string, Rational> constant_graph_table(int max_vertices, const Rational& v);

}  // namespace olig
