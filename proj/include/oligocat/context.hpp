// Group backends and the generic orbit machinery on ordered slots.
//
// A point of a product at level N is described by a Pattern: one integer per
// slot, a concrete canonical representative of the orbit of the level-N
// stabilizer on ordered tuples.  Each backend fixes the encoding and knows how
// to enumerate, normalize, coarsen and measure fibers.  Sub factors are dealt
// with on top of that: an orbit on a product with Sub factors is a class of
// ordered patterns modulo the permutations inside each Sub factor.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oligocat/scalar.hpp"
#include "oligocat/setexpr.hpp"

namespace olig {

struct Pattern {
  int level = 0;
  std::vector<int> v;
  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

struct PatternHash {
  size_t operator()(const Pattern& p) const noexcept;
};

// An orbit on a set expression: component index plus the canonical pattern.
struct Orbit {
  int comp = 0;
  Pattern p;
  friend bool operator==(const Orbit&, const Orbit&) = default;
  friend auto operator<=>(const Orbit&, const Orbit&) = default;
};

struct PrefixFilter {
  int depth = 0;
  std::function<bool(const Pattern&)> accept;
};

class GroupContext {
 public:
  virtual ~GroupContext() = default;

  // "sym" or "order:e,d"
  virtual std::string name() const = 0;

  // Calls fn once per normalized ordered pattern on the product at level N
  // (distinctness inside Inj/Sub factors respected).  With a filter, a
  // branch is cut as soon as the first filter->depth slots are placed and
  // filter->accept rejects the normalized pattern on those slots.
  void enumerate(const Product& x, int level, const std::function<void(const Pattern&)>& fn) const {
    enumerate(x, level, fn, nullptr);
  }
  virtual void enumerate(const Product& x, int level, const std::function<void(const Pattern&)>& fn,
                         const PrefixFilter* filter) const = 0;

  // Canonical relabeling of the values of an arbitrary pattern at its level.
  virtual Pattern normalize(Pattern p) const = 0;

  // Express a level-N pattern at a coarser level M <= N (forget constants > M).
  Pattern coarsen(const Pattern& p, int level) const { return normalize(Pattern{level, p.v}); }

  // Measure of the set of completions of p when the slots with fixed[s]
  // set are held at given values.  fixed may be empty (nothing fixed).
  virtual Poly fiber_measure(const Pattern& p, const std::vector<char>& fixed) const = 0;

  // Text form of an orbit on a single product.
  virtual std::string format(const Product& x, const Pattern& canonical) const = 0;
  virtual Pattern parse(const Product& x, std::string_view s) const = 0;

  // True if value code v is one of the pinned constants at this level.
  virtual bool is_pinned(int v, int level) const = 0;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

// Parse "sym" or "order:<e>,<d>".
ContextPtr make_context(std::string_view selector);

// ---------------------------------------------------------------- orbit layer

// new slot j takes the value of old slot pi[j]
Pattern pull_slots(const GroupContext& ctx, const Pattern& p, const std::vector<int>& pi);

// Minimal representative of the Sub-permutation class of an ordered pattern.
Pattern canonical(const GroupContext& ctx, const Product& x, const Pattern& ordered);

// Number of Sub permutations fixing the class of a canonical pattern.
long stabilizer_size(const GroupContext& ctx, const Product& x, const Pattern& canon);

// All orbits of the level-N stabilizer on X, sorted.
std::vector<Orbit> orbits(const GroupContext& ctx, const SetExpr& x, int level);

// Measure of a single orbit.
Poly orbit_measure(const GroupContext& ctx, const SetExpr& x, const Orbit& o);
Poly set_measure(const GroupContext& ctx, const SetExpr& x);

std::string format_orbit(const GroupContext& ctx, const SetExpr& x, const Orbit& o);
Orbit parse_orbit(const GroupContext& ctx, const SetExpr& x, std::string_view s);

// Permutations of the slots of x generated by Sub factors (each as a slot
// permutation sigma: new slot j takes old slot sigma[j]).
const std::vector<std::vector<int>>& sub_permutations(const Product& x);

// Pushforward core.  For every ordered pattern r on `src` at `level` with
// F(r) != 0, adds F(r) * fiber(r | image of pi) to acc[canonical(pull(r))],
// then scales each entry by |Stab(target class)| / |Sym(src)|.
using OrderedFn = std::function<Poly(const Pattern&)>;
std::map<Pattern, Poly> push_ordered(const GroupContext& ctx, const Product& src, const Product& tgt,
                                     const std::vector<int>& pi, int level, const OrderedFn& f,
                                     const PrefixFilter* filter = nullptr);

// Memoizing classifier: ordered pattern -> canonical pattern.
class Classifier {
 public:
  Classifier(const GroupContext& ctx, const Product& x) : ctx_(ctx), x_(x) {}
  const Pattern& operator()(const Pattern& ordered);

 private:
  const GroupContext& ctx_;
  Product x_;
  std::unordered_map<Pattern, Pattern, PatternHash> memo_;
};

}  // namespace olig
