#include "oligocat/context.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "oligocat/order_context.hpp"
#include "oligocat/sym_context.hpp"

namespace olig {

size_t PatternHash::operator()(const Pattern& p) const noexcept {
  size_t h = static_cast<size_t>(p.level) * 0x9e3779b97f4a7c15ULL;
  for (int x : p.v) h = (h ^ static_cast<size_t>(x + 0x51)) * 0x100000001b3ULL;
  return h;
}

ContextPtr make_context(std::string_view selector) {
  std::string s(selector);
  if (s == "sym") return std::make_shared<SymContext>();
  if (s.rfind("order", 0) == 0) {
    int e = -1, d = -1;
    if (s.size() > 5) {
      if (s[5] != ':') throw ParseError("expected order:<e>,<d>");
      auto comma = s.find(',', 6);
      if (comma == std::string::npos) throw ParseError("expected order:<e>,<d>");
      try {
        e = std::stoi(s.substr(6, comma - 6));
        d = std::stoi(s.substr(comma + 1));
      } catch (const std::exception&) {
        throw ParseError("expected order:<e>,<d>");
      }
    }
    return std::make_shared<OrderContext>(OrderMeasureSpec{e, d});
  }
  throw ParseError("unknown context '" + s + "' (expected sym or order:<e>,<d>)");
}

Pattern pull_slots(const GroupContext& ctx, const Pattern& p, const std::vector<int>& pi) {
  Pattern r;
  r.level = p.level;
  r.v.reserve(pi.size());
  for (int j : pi) r.v.push_back(p.v.at(j));
  return ctx.normalize(std::move(r));
}

namespace {

void permutations_of(const std::vector<int>& base, std::vector<std::vector<int>>& out) {
  std::vector<int> p = base;
  std::sort(p.begin(), p.end());
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

const std::vector<std::vector<int>>& sub_permutations(const Product& x) {
  static std::mutex mu;
  static std::map<Product, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> perms{std::vector<int>(x.slot_count())};
  std::iota(perms[0].begin(), perms[0].end(), 0);
  auto start = x.factor_start();
  for (size_t f = 0; f < x.factors.size(); ++f) {
    if (x.factors[f].kind != FactorKind::Sub || x.factors[f].n < 2) continue;
    std::vector<int> block(x.factors[f].n);
    std::iota(block.begin(), block.end(), start[f]);
    std::vector<std::vector<int>> local;
    permutations_of(block, local);
    std::vector<std::vector<int>> next;
    for (const auto& p : perms)
      for (const auto& l : local) {
        auto q = p;
        for (size_t k = 0; k < l.size(); ++k) q[start[f] + k] = p[l[k]];
        next.push_back(std::move(q));
      }
    perms = std::move(next);
  }
  return cache.emplace(x, std::move(perms)).first->second;
}

Pattern canonical(const GroupContext& ctx, const Product& x, const Pattern& ordered) {
  if (!x.has_sub()) return ctx.normalize(ordered);
  const auto& perms = sub_permutations(x);
  Pattern best;
  bool have = false;
  for (const auto& s : perms) {
    Pattern c = pull_slots(ctx, ordered, s);
    if (!have || c < best) {
      best = std::move(c);
      have = true;
    }
  }
  return best;
}

long stabilizer_size(const GroupContext& ctx, const Product& x, const Pattern& canon) {
  if (!x.has_sub()) return 1;
  long n = 0;
  for (const auto& s : sub_permutations(x))
    if (pull_slots(ctx, canon, s) == canon) ++n;
  return n;
}

namespace {

constexpr int kCacheSlots = 8;

// Ordered enumeration is the hot path; keep results for small products.
const std::vector<Pattern>& ordered_patterns(const GroupContext& ctx, const Product& x, int level) {
  using Key = std::tuple<std::string, Product, int>;
  static std::mutex mu;
  static std::map<Key, std::vector<Pattern>> cache;
  thread_local std::vector<Pattern> scratch;
  if (x.slot_count() > kCacheSlots) {
    scratch.clear();
    ctx.enumerate(x, level, [&](const Pattern& p) { scratch.push_back(p); });
    return scratch;
  }
  Key key{ctx.name(), x, level};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Pattern> out;
  ctx.enumerate(x, level, [&](const Pattern& p) { out.push_back(p); });
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<Orbit> orbits(const GroupContext& ctx, const SetExpr& x, int level) {
  std::vector<Orbit> out;
  for (int c = 0; c < x.size(); ++c) {
    std::set<Pattern> seen;
    for (const auto& p : ordered_patterns(ctx, x.comps[c], level)) seen.insert(canonical(ctx, x.comps[c], p));
    for (const auto& p : seen) out.push_back(Orbit{c, p});
  }
  return out;
}

Poly orbit_measure(const GroupContext& ctx, const SetExpr& x, const Orbit& o) {
  Poly m = ctx.fiber_measure(o.p, {});
  return m / Rational(stabilizer_size(ctx, x.comps.at(o.comp), o.p));
}

Poly set_measure(const GroupContext& ctx, const SetExpr& x) {
  Poly total;
  for (const auto& o : orbits(ctx, x, 0)) total += orbit_measure(ctx, x, o);
  return total;
}

std::string format_orbit(const GroupContext& ctx, const SetExpr& x, const Orbit& o) {
  std::string body = ctx.format(x.comps.at(o.comp), o.p);
  if (x.size() > 1) return std::to_string(o.comp + 1) + ":" + body;
  return body;
}

Orbit parse_orbit(const GroupContext& ctx, const SetExpr& x, std::string_view s) {
  int comp = 0;
  auto colon = s.find(':');
  // a leading "<digits>:" selects the component
  if (colon != std::string_view::npos && colon > 0 &&
      std::all_of(s.begin(), s.begin() + colon, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    comp = std::stoi(std::string(s.substr(0, colon))) - 1;
    s = s.substr(colon + 1);
  } else if (x.size() != 1) {
    throw ParseError("orbit string needs a component prefix 'k:' for a multi-component set");
  }
  if (comp < 0 || comp >= x.size()) throw ParseError("orbit component out of range");
  const Product& prod = x.comps[comp];
  Pattern p = ctx.parse(prod, s);
  if (static_cast<int>(p.v.size()) != prod.slot_count()) throw ParseError("orbit string has wrong slot count");
  auto group = prod.slot_group();
  for (size_t a = 0; a < p.v.size(); ++a)
    for (size_t b = a + 1; b < p.v.size(); ++b)
      if (group[a] >= 0 && group[a] == group[b] && p.v[a] == p.v[b])
        throw ParseError("orbit string violates distinctness of a factor");
  return Orbit{comp, canonical(ctx, prod, p)};
}

const Pattern& Classifier::operator()(const Pattern& ordered) {
  auto it = memo_.find(ordered);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(ordered, canonical(ctx_, x_, ordered)).first->second;
}

std::map<Pattern, Poly> push_ordered(const GroupContext& ctx, const Product& src, const Product& tgt,
                                     const std::vector<int>& pi, int level, const OrderedFn& f,
                                     const PrefixFilter* filter) {
  std::vector<char> fixed(src.slot_count(), 0);
  for (int j : pi) fixed.at(j) = 1;
  std::map<Pattern, Poly> acc;
  Classifier cls(ctx, tgt);
  auto visit = [&](const Pattern& r) {
    Poly val = f(r);
    if (val.is_zero()) return;
    Poly m = ctx.fiber_measure(r, fixed);
    if (m.is_zero()) return;
    acc[cls(pull_slots(ctx, r, pi))] += val * m;
  };
  if (filter || src.slot_count() > kCacheSlots)
    ctx.enumerate(src, level, visit, filter);
  else
    for (const auto& r : ordered_patterns(ctx, src, level)) visit(r);
  const Rational sym_src(src.sym_order());
  std::map<Pattern, Poly> out;
  for (auto& [q, v] : acc) {
    if (v.is_zero()) continue;
    out[q] = v * Rational(stabilizer_size(ctx, tgt, q)) / sym_src;
  }
  return out;
}

}  // namespace olig
