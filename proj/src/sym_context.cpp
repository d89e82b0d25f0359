#include "oligocat/sym_context.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace olig {

void SymContext::enumerate(const Product& x, int level, const std::function<void(const Pattern&)>& fn,
                           const PrefixFilter* filter) const {
  const int n = x.slot_count();
  const auto group = x.slot_group();
  Pattern p;
  p.level = level;
  p.v.assign(n, 0);
  std::function<void(int, int)> rec = [&](int i, int generics) {
    if (filter && i == filter->depth && i < n &&
        !filter->accept(Pattern{level, std::vector<int>(p.v.begin(), p.v.begin() + i)}))
      return;
    if (i == n) {
      fn(p);
      return;
    }
    auto ok = [&](int val) {
      if (group[i] < 0) return true;
      for (int j = 0; j < i; ++j)
        if (group[j] == group[i] && p.v[j] == val) return false;
      return true;
    };
    for (int c = 1; c <= level; ++c)
      if (ok(c)) {
        p.v[i] = c;
        rec(i + 1, generics);
      }
    for (int g = 1; g <= generics; ++g)
      if (ok(level + g)) {
        p.v[i] = level + g;
        rec(i + 1, generics);
      }
    p.v[i] = level + generics + 1;
    rec(i + 1, generics + 1);
  };
  rec(0, 0);
}

Pattern SymContext::normalize(Pattern p) const {
  std::map<int, int> relabel;
  int next = p.level + 1;
  for (int& x : p.v) {
    if (x >= 1 && x <= p.level) continue;
    auto it = relabel.find(x);
    if (it == relabel.end()) it = relabel.emplace(x, next++).first;
    x = it->second;
  }
  return p;
}

Poly SymContext::fiber_measure(const Pattern& p, const std::vector<char>& fixed) const {
  std::set<int> fixed_generic, free_generic;
  for (size_t s = 0; s < p.v.size(); ++s) {
    if (is_pinned(p.v[s], p.level)) continue;
    if (!fixed.empty() && fixed[s]) fixed_generic.insert(p.v[s]);
  }
  for (size_t s = 0; s < p.v.size(); ++s) {
    if (is_pinned(p.v[s], p.level)) continue;
    if (!fixed_generic.count(p.v[s])) free_generic.insert(p.v[s]);
  }
  return falling_factorial(p.level + static_cast<long>(fixed_generic.size()),
                           static_cast<unsigned>(free_generic.size()));
}

std::string SymContext::format(const Product& /*x*/, const Pattern& p) const {
  std::map<int, std::vector<int>> blocks;
  for (size_t s = 0; s < p.v.size(); ++s) blocks[p.v[s]].push_back(static_cast<int>(s) + 1);
  struct B {
    int pin;  // or large for generic
    int first;
    std::vector<int> slots;
  };
  std::vector<B> list;
  for (auto& [val, slots] : blocks)
    list.push_back(B{is_pinned(val, p.level) ? val : 1 << 30, slots.front(), slots});
  std::sort(list.begin(), list.end(), [](const B& a, const B& b) {
    return a.pin != b.pin ? a.pin < b.pin : a.first < b.first;
  });
  std::string s = "[";
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) s += ",";
    s += "{";
    for (size_t k = 0; k < list[i].slots.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(list[i].slots[k]);
    }
    if (list[i].pin != (1 << 30)) s += "|pin=" + std::to_string(list[i].pin);
    s += "}";
  }
  s += "]@N=" + std::to_string(p.level);
  return s;
}

Pattern SymContext::parse(const Product& x, std::string_view s) const {
  auto fail = [&](const std::string& m) -> Pattern { throw ParseError("sym orbit: " + m + " in \"" + std::string(s) + "\""); };
  std::string str;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) str += c;
  auto at = str.rfind("]@N=");
  if (str.empty() || str[0] != '[' || at == std::string::npos) return fail("expected [blocks]@N=<level>");
  int level = 0;
  try {
    level = std::stoi(str.substr(at + 4));
  } catch (const std::exception&) {
    return fail("bad level");
  }
  if (level < 0) return fail("negative level");
  const int n = x.slot_count();
  Pattern p;
  p.level = level;
  p.v.assign(n, 0);
  std::string body = str.substr(1, at - 1);
  size_t pos = 0;
  int generic = 0;
  std::set<int> pins_used;
  while (pos < body.size()) {
    if (body[pos] == ',') {
      ++pos;
      continue;
    }
    if (body[pos] != '{') return fail("expected '{'");
    auto close = body.find('}', pos);
    if (close == std::string::npos) return fail("unterminated block");
    std::string blk = body.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    int value;
    auto bar = blk.find('|');
    std::string slots = blk.substr(0, bar);
    if (bar != std::string::npos) {
      std::string pin = blk.substr(bar + 1);
      if (pin.rfind("pin=", 0) != 0) return fail("expected pin=");
      value = std::stoi(pin.substr(4));
      if (value < 1 || value > level) return fail("pin out of range");
      if (!pins_used.insert(value).second) return fail("constant pinned twice");
    } else {
      value = level + (++generic);
    }
    size_t q = 0;
    int count = 0;
    while (q < slots.size()) {
      auto comma = slots.find(',', q);
      std::string tok = slots.substr(q, comma == std::string::npos ? std::string::npos : comma - q);
      q = comma == std::string::npos ? slots.size() : comma + 1;
      int slot = std::stoi(tok);
      if (slot < 1 || slot > n) return fail("slot out of range");
      if (p.v[slot - 1] != 0) return fail("slot listed twice");
      p.v[slot - 1] = value;
      ++count;
    }
    if (count == 0) return fail("empty block");
  }
  for (int v : p.v)
    if (v == 0) return fail("slot missing");
  return normalize(std::move(p));
}

// ---------------------------------------------------------------- free functions

namespace {
const SymContext& sym() {
  static SymContext ctx;
  return ctx;
}
}  // namespace

std::vector<Orbit> sym_orbits(const SetExpr& x, int level) { return orbits(sym(), x, level); }
ParamScalar sym_measure(const SetExpr& x, const Orbit& o) { return orbit_measure(sym(), x, o); }
ParamScalar sym_measure(const SetExpr& x) { return set_measure(sym(), x); }

namespace {

// tuples in {1..n}^k counted directly
Integer count_factor(const Factor& f, int n) {
  Integer count = 0;
  std::vector<int> t(f.n, 1);
  if (f.n == 0) return 1;
  if (n <= 0) return 0;
  for (;;) {
    bool ok = true;
    for (int a = 0; a < f.n && ok; ++a)
      for (int b = a + 1; b < f.n && ok; ++b) {
        if (f.kind == FactorKind::Inj && t[a] == t[b]) ok = false;
        if (f.kind == FactorKind::Sub && t[a] >= t[b]) ok = false;  // one increasing rep per subset
      }
    if (ok) ++count;
    int i = f.n - 1;
    while (i >= 0 && t[i] == n) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  return count;
}

}  // namespace

Integer sym_fixed_points(const SetExpr& x, int n) {
  if (n < 0) throw std::invalid_argument("sym_fixed_points: n must be >= 0");
  Integer total = 0;
  for (const auto& comp : x.comps) {
    Integer c = 1;
    for (const auto& f : comp.factors) c *= count_factor(f, n);
    total += c;
  }
  return total;
}

}  // namespace olig
