#include "oligocat/order_context.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace olig {

void OrderMeasureSpec::validate() const {
  if ((eps != -1 && eps != 0) || (delta != -1 && delta != 0))
    throw std::invalid_argument("order measure needs e,d in {-1,0}, got " + str());
}

std::string OrderMeasureSpec::str() const { return std::to_string(eps) + "," + std::to_string(delta); }

OrderContext::OrderContext(OrderMeasureSpec spec) : spec_(spec) { spec_.validate(); }

void OrderContext::enumerate(const Product& x, int level, const std::function<void(const Pattern&)>& fn,
                             const PrefixFilter* filter) const {
  const int n = x.slot_count();
  if (n >= kStride - 1) throw std::invalid_argument("too many slots for the order backend");
  const auto group = x.slot_group();
  // class list: constants are 1..level, generic classes are negative ids
  std::vector<int> cls;
  for (int k = 1; k <= level; ++k) cls.push_back(k);
  std::vector<int> slot_class(n, 0);
  Pattern p;
  p.level = level;
  p.v.assign(n, 0);
  int next_id = 0;

  auto emit = [&](int upto) {
    std::map<int, int> value;
    int interval = 0, rank = 0;
    for (int c : cls) {
      if (c > 0) {
        interval = c;
        rank = 0;
        value[c] = c * kStride;
      } else {
        value[c] = interval * kStride + (++rank);
      }
    }
    for (int s = 0; s < upto; ++s) p.v[s] = value[slot_class[s]];
  };

  std::function<void(int)> rec = [&](int i) {
    if (filter && i == filter->depth && i < n) {
      emit(i);
      if (!filter->accept(normalize(Pattern{level, std::vector<int>(p.v.begin(), p.v.begin() + i)}))) return;
    }
    if (i == n) {
      emit(n);
      fn(p);
      return;
    }
    for (size_t k = 0; k < cls.size(); ++k) {
      int c = cls[k];
      bool ok = true;
      if (group[i] >= 0)
        for (int j = 0; j < i; ++j)
          if (group[j] == group[i] && slot_class[j] == c) ok = false;
      if (!ok) continue;
      slot_class[i] = c;
      rec(i + 1);
    }
    int id = -(++next_id);
    for (size_t g = 0; g <= cls.size(); ++g) {
      cls.insert(cls.begin() + static_cast<long>(g), id);
      slot_class[i] = id;
      rec(i + 1);
      cls.erase(cls.begin() + static_cast<long>(g));
    }
    --next_id;
  };
  rec(0);
}

Pattern OrderContext::normalize(Pattern p) const {
  const int N = p.level;
  std::map<int, std::set<int>> by_interval;
  auto interval_of = [&](int v) { return std::min(std::max(v, 0) / kStride, N); };
  for (int v : p.v)
    if (!is_pinned(v, N)) by_interval[interval_of(v)].insert(v);
  for (int& v : p.v) {
    if (is_pinned(v, N)) continue;
    int i = interval_of(v);
    const auto& s = by_interval[i];
    int rank = static_cast<int>(std::distance(s.begin(), s.find(v))) + 1;
    v = i * kStride + rank;
  }
  return p;
}

long OrderContext::interval_measure(bool bounded_left, bool bounded_right, int k) const {
  auto ipow = [](long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  if (bounded_left && bounded_right) return ipow(-1, k);
  if (!bounded_left && bounded_right) return ipow(spec_.eps, k);
  if (bounded_left && !bounded_right) return ipow(spec_.delta, k);
  // whole line: split at the possible point landing on a chosen cut
  long total = 0;
  for (int j = 0; j <= 1 && j <= k; ++j)
    for (int i = 0; i + j <= k; ++i) total += ipow(spec_.eps, i) * ipow(spec_.delta, k - i - j);
  return total;
}

Poly OrderContext::fiber_measure(const Pattern& p, const std::vector<char>& fixed) const {
  std::set<int> anchors;
  for (int k = 1; k <= p.level; ++k) anchors.insert(k * kStride);
  for (size_t s = 0; s < p.v.size(); ++s)
    if (!fixed.empty() && fixed[s]) anchors.insert(p.v[s]);
  std::set<int> free;
  for (size_t s = 0; s < p.v.size(); ++s)
    if (!anchors.count(p.v[s])) free.insert(p.v[s]);
  // (lower anchor or INT_MIN, upper anchor or INT_MAX) -> count
  std::map<std::pair<int, int>, int> gaps;
  for (int v : free) {
    auto up = anchors.upper_bound(v);
    int hi = up == anchors.end() ? INT32_MAX : *up;
    int lo = up == anchors.begin() ? INT32_MIN : *std::prev(up);
    ++gaps[{lo, hi}];
  }
  long m = 1;
  for (const auto& [g, k] : gaps) m *= interval_measure(g.first != INT32_MIN, g.second != INT32_MAX, k);
  return Poly(m);
}

namespace {

constexpr const char* kLetters = "rbgyopcmkwhjnqsvxz";

std::string slot_token(const Product& x, int factor, int k) {
  std::string t;
  if (factor < static_cast<int>(std::char_traits<char>::length(kLetters)))
    t = std::string(1, kLetters[factor]);
  else
    t = "f" + std::to_string(factor + 1) + "_";
  const auto& f = x.factors[factor];
  if (f.kind == FactorKind::Sub || f.n == 1) return t;
  return t + std::to_string(k + 1);
}

}  // namespace

std::string OrderContext::format(const Product& x, const Pattern& p) const {
  if (p.v.empty() && p.level == 0) return "pt";
  std::map<int, std::vector<std::string>> classes;
  for (int k = 1; k <= p.level; ++k) classes[k * kStride].push_back("#" + std::to_string(k));
  auto start = x.factor_start();
  auto owner = x.slot_factor();
  for (size_t s = 0; s < p.v.size(); ++s)
    classes[p.v[s]].push_back(slot_token(x, owner[s], static_cast<int>(s) - start[owner[s]]));
  std::string out;
  bool first = true;
  for (const auto& [v, toks] : classes) {
    if (!first) out += "<";
    first = false;
    for (size_t i = 0; i < toks.size(); ++i) out += (i ? "=" : "") + toks[i];
  }
  return out;
}

Pattern OrderContext::parse(const Product& x, std::string_view s) const {
  std::string str;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) str += c;
  auto fail = [&](const std::string& m) -> Pattern { throw ParseError("order orbit: " + m + " in \"" + str + "\""); };
  const int n = x.slot_count();
  if (str == "pt") {
    if (n != 0) return fail("'pt' only describes the point");
    return Pattern{};
  }
  // token -> slot
  std::map<std::string, std::vector<int>> slots_for;
  auto start = x.factor_start();
  for (size_t f = 0; f < x.factors.size(); ++f)
    for (int k = 0; k < x.factors[f].n; ++k)
      slots_for[slot_token(x, static_cast<int>(f), k)].push_back(start[f] + k);
  std::map<std::string, size_t> used;
  std::vector<std::vector<std::string>> classes;
  {
    std::vector<std::string> cur;
    std::string tok;
    for (size_t i = 0; i <= str.size(); ++i) {
      char c = i < str.size() ? str[i] : '<';
      if (c == '<' || c == '=') {
        if (tok.empty()) return fail("empty token");
        cur.push_back(tok);
        tok.clear();
        if (c == '<') {
          classes.push_back(cur);
          cur.clear();
        }
      } else {
        tok += c;
      }
    }
  }
  Pattern p;
  p.v.assign(n, -1);
  int constants = 0, interval = 0, rank = 0;
  std::vector<int> class_value;
  for (const auto& cl : classes) {
    int pin = 0;
    for (const auto& t : cl)
      if (t[0] == '#') {
        if (pin) return fail("two constants in one class");
        pin = std::stoi(t.substr(1));
        if (pin != constants + 1) return fail("constants must appear as #1 < #2 < ...");
        ++constants;
      }
    int value;
    if (pin) {
      interval = pin;
      rank = 0;
      value = pin * kStride;
    } else {
      value = interval * kStride + (++rank);
    }
    for (const auto& t : cl) {
      if (t[0] == '#') continue;
      auto it = slots_for.find(t);
      if (it == slots_for.end()) return fail("unknown token " + t);
      size_t& u = used[t];
      if (u >= it->second.size()) return fail("token used too often: " + t);
      p.v[it->second[u++]] = value;
    }
  }
  for (int v : p.v)
    if (v < 0) return fail("slot missing");
  p.level = constants;
  return normalize(std::move(p));
}

// ---------------------------------------------------------------- free functions

std::vector<Orbit> ord_orbits(const SetExpr& x, int level) {
  static OrderContext ctx;
  return orbits(ctx, x, level);
}

ParamScalar ord_measure(const SetExpr& x, const Orbit& o, const OrderMeasureSpec& spec) {
  OrderContext ctx(spec);
  return orbit_measure(ctx, x, o);
}

ParamScalar ord_measure(const SetExpr& x, const OrderMeasureSpec& spec) {
  OrderContext ctx(spec);
  return set_measure(ctx, x);
}

Integer fubini_number(int n) {
  // a(n) = sum_k binom(n,k) a(n-k)
  std::vector<Integer> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
  return a[n];
}

// ---------------------------------------------------------------- ruffles

RuffleSum ruffle_product(const Word& w, const Word& v) {
  RuffleSum out;
  std::string cur;
  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == w.size() && j == v.size()) {
      ++out[cur];
      return;
    }
    if (i < w.size()) {
      cur.push_back(w[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
    if (i < w.size() && j < v.size() && w[i] == v[j]) {
      cur.push_back(w[i]);
      rec(i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::string format_ruffle_sum(const RuffleSum& s) {
  // shorter words first, then lexicographic
  std::vector<std::pair<Word, long>> items(s.begin(), s.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += " + ";
    if (items[i].second != 1) out += std::to_string(items[i].second);
    out += items[i].first.empty() ? "1" : items[i].first;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- symbols

int Symbol::length_one(char sigma, char tau, char rho) const {
  auto it = table.find({sigma, tau, rho});
  if (it == table.end()) throw std::out_of_range(std::string("symbol table lacks entry ") + sigma + tau + rho);
  return it->second;
}

int Symbol::value(char sigma, char tau, const Word& w) const {
  if (w.empty()) return 1;
  return length_one(sigma, tau, w[0]) * value(w[0], tau, w.substr(1));
}

namespace {

void words_up_to(const std::string& alphabet, int max_len, std::vector<Word>& out) {
  out.push_back("");
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
}

}  // namespace

SymbolCheck verify_symbol(const Symbol& s, int max_length) {
  SymbolCheck res;
  res.bound = max_length;
  std::string lefts = std::string(1, Symbol::kMinusInf) + s.alphabet;
  std::string rights = s.alphabet + std::string(1, Symbol::kPlusInf);
  std::vector<Word> words;
  words_up_to(s.alphabet, max_length, words);
  auto fail = [&](const std::string& w) {
    res.ok = false;
    res.witness = w;
    return res;
  };
  for (char sg : lefts)
    for (char ta : rights) {
      for (const auto& w : words) {
        int val = s.value(sg, ta, w);
        if (val < -1 || val > 1)
          return fail("value " + std::to_string(val) + " outside {-1,0,1} at (" + sg + "," + ta + ",\"" + w + "\")");
        // condition (b): split at a cut point of color rho
        for (char rho : s.alphabet) {
          long rhs = 0;
          for (size_t i = 0; i <= w.size(); ++i)
            rhs += static_cast<long>(s.value(sg, rho, w.substr(0, i))) * s.value(rho, ta, w.substr(i));
          for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == rho) rhs += static_cast<long>(s.value(sg, rho, w.substr(0, i))) * s.value(rho, ta, w.substr(i + 1));
          if (rhs != val)
            return fail(std::string("condition (b) fails at (") + sg + "," + ta + ",\"" + w + "\") with rho=" + rho +
                        ": " + std::to_string(val) + " != " + std::to_string(rhs));
        }
        // condition (c): every occurrence of a letter splits the word
        for (size_t i = 0; i < w.size(); ++i) {
          char rho = w[i];
          long rhs = static_cast<long>(s.length_one(sg, ta, rho)) * s.value(sg, rho, w.substr(0, i)) *
                     s.value(rho, ta, w.substr(i + 1));
          if (rhs != val)
            return fail(std::string("condition (c) fails at (") + sg + "," + ta + ",\"" + w + "\") split at " +
                        std::to_string(i) + ": " + std::to_string(val) + " != " + std::to_string(rhs));
        }
      }
    }
  return res;
}

std::vector<Symbol> single_color_symbol_census(int max_length) {
  std::vector<Symbol> pass;
  const char a = 'a';
  const std::pair<char, char> types[4] = {
      {Symbol::kMinusInf, a}, {a, a}, {a, Symbol::kPlusInf}, {Symbol::kMinusInf, Symbol::kPlusInf}};
  for (int code = 0; code < 81; ++code) {
    Symbol s;
    s.alphabet = "a";
    int c = code;
    for (const auto& [sg, ta] : types) {
      s.table[{sg, ta, a}] = c % 3 - 1;
      c /= 3;
    }
    if (verify_symbol(s, max_length).ok) pass.push_back(s);
  }
  return pass;
}

}  // namespace olig
