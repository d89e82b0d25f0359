#include "oligocat/fraisse.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace olig {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// calls fn on every tuple in {0..m-1}^a that contains m-1 (m >= 1)
template <class F>
void tuples_with_last(int m, int a, F&& fn) {
  std::vector<int> t(a, 0);
  long total = ipow(m, a);
  for (long c = 0; c < total; ++c) {
    long r = c;
    bool has = false;
    for (int i = 0; i < a; ++i) {
      t[i] = static_cast<int>(r % m);
      r /= m;
      has |= t[i] == m - 1;
    }
    if (has) fn(t);
  }
}

long tuple_index(const std::vector<int>& t, int n) {
  long idx = 0;
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) idx = idx * n + t[i];
  return idx;
}

std::vector<unsigned char> restrict_rel(const Structure& s, int arity, const std::vector<int>& pts) {
  const int m = static_cast<int>(pts.size());
  if (arity == 0) return {};
  std::vector<unsigned char> out(ipow(m, arity));
  if (m == 0) return out;
  std::vector<long> pw(arity, 1);
  for (int i = 1; i < arity; ++i) pw[i] = pw[i - 1] * s.n;
  // odometer over tuples, source index kept incrementally
  std::vector<int> t(arity, 0);
  long src = 0;
  for (int i = 0; i < arity; ++i) src += pts[0] * pw[i];
  for (size_t c = 0; c < out.size(); ++c) {
    out[c] = s.rel[src];
    for (int i = 0; i < arity; ++i) {
      src -= pts[t[i]] * pw[i];
      if (++t[i] < m) {
        src += pts[t[i]] * pw[i];
        break;
      }
      t[i] = 0;
      src += pts[0] * pw[i];
    }
  }
  return out;
}

// f maps points 0..i of y into x; checks tuples ending at i
bool consistent(const Structure& y, const Structure& x, const std::vector<int>& f, int i, int arity) {
  if (arity == 0) return true;
  bool ok = true;
  std::vector<int> u(arity);
  tuples_with_last(i + 1, arity, [&](const std::vector<int>& t) {
    if (!ok) return;
    for (int j = 0; j < arity; ++j) u[j] = f[t[j]];
    if (y.rel[tuple_index(t, y.n)] != x.rel[tuple_index(u, x.n)]) ok = false;
  });
  return ok;
}

// all embeddings y -> x; fn returns false to stop
template <class F>
void for_each_embedding(const Structure& y, const Structure& x, int arity, F&& fn) {
  std::vector<int> f(y.n, -1);
  std::vector<char> used(x.n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == y.n) {
      if (!fn(f)) stop = true;
      return;
    }
    for (int v = 0; v < x.n && !stop; ++v) {
      if (used[v]) continue;
      f[i] = v;
      if (!consistent(y, x, f, i, arity)) continue;
      used[v] = 1;
      rec(i + 1);
      used[v] = 0;
    }
  };
  rec(0);
}

// ----------------------------------------------------------------- sets

class SetClass : public StructureClass {
 public:
  StructureKind kind() const override { return StructureKind::FiniteSet; }
  std::string name() const override { return "sets"; }
  int arity() const override { return 0; }
  std::vector<Structure> extensions(const Structure& s) const override { return {finite_set(s.n + 1)}; }
  std::string canonical(const Structure& s) const override { return std::to_string(s.n); }
  std::string str(const Structure& s) const override { return "[" + std::to_string(s.n) + "]"; }
};

// ----------------------------------------------------------------- orders

std::vector<int> order_ranks(const Structure& s) {
  std::vector<int> rank(s.n, 0);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (s.rel[a + static_cast<long>(s.n) * b]) ++rank[b];
  return rank;
}

Structure order_from_ranks(const std::vector<int>& rank) {
  Structure s;
  s.kind = StructureKind::TotalOrder;
  s.n = static_cast<int>(rank.size());
  s.rel.assign(static_cast<size_t>(s.n) * s.n, 0);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) s.rel[a + s.n * b] = rank[a] < rank[b];
  return s;
}

class OrderClass : public StructureClass {
 public:
  StructureKind kind() const override { return StructureKind::TotalOrder; }
  std::string name() const override { return "orders"; }
  int arity() const override { return 2; }
  std::vector<Structure> extensions(const Structure& s) const override {
    std::vector<Structure> out;
    auto rank = order_ranks(s);
    for (int r = 0; r <= s.n; ++r) {
      auto nr = rank;
      for (auto& x : nr)
        if (x >= r) ++x;
      nr.push_back(r);
      out.push_back(order_from_ranks(nr));
    }
    return out;
  }
  std::string canonical(const Structure& s) const override { return std::to_string(s.n); }
  std::string str(const Structure& s) const override {
    if (s.n == 0) return "empty";
    auto rank = order_ranks(s);
    std::vector<int> by(s.n);
    for (int i = 0; i < s.n; ++i) by[rank[i]] = i;
    std::string out;
    for (int i = 0; i < s.n; ++i) out += (i ? "<" : "") + std::to_string(by[i]);
    return out;
  }
};

// ----------------------------------------------------------------- graphs

class GraphClass : public StructureClass {
 public:
  StructureKind kind() const override { return StructureKind::Graph; }
  std::string name() const override { return "graphs"; }
  int arity() const override { return 2; }
  std::vector<Structure> extensions(const Structure& s) const override {
    std::vector<Structure> out;
    for (long mask = 0; mask < (1L << s.n); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (int a = 0; a < s.n; ++a)
        for (int b = a + 1; b < s.n; ++b)
          if (s.rel[a + s.n * b]) e.emplace_back(a, b);
      for (int a = 0; a < s.n; ++a)
        if (mask >> a & 1) e.emplace_back(a, s.n);
      out.push_back(graph_from_edges(s.n + 1, e));
    }
    return out;
  }
  std::string canonical(const Structure& s) const override {
    if (s.n > 8) throw std::invalid_argument("graph canonical form limited to 8 vertices");
    std::vector<int> p(s.n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
      std::string bits;
      for (int a = 0; a < s.n; ++a)
        for (int b = a + 1; b < s.n; ++b) bits += s.rel[p[a] + s.n * p[b]] ? '1' : '0';
      if (best.empty() || bits > best) best = bits;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::to_string(s.n) + ":" + best;
  }
  std::string str(const Structure& s) const override {
    std::string out = std::to_string(s.n) + ":";
    bool first = true;
    for (int a = 0; a < s.n; ++a)
      for (int b = a + 1; b < s.n; ++b)
        if (s.rel[a + s.n * b]) {
          out += (first ? "" : ",") + std::to_string(a) + "-" + std::to_string(b);
          first = false;
        }
    return out;
  }
};

// ----------------------------------------------------------------- boron trees

using Adj = std::vector<std::vector<int>>;

// bitmask of vertices on the path a..b
std::vector<std::vector<uint64_t>> leaf_paths(int n, const Adj& adj) {
  const int v = static_cast<int>(adj.size());
  if (v > 64) throw std::invalid_argument("boron tree too large");
  std::vector<std::vector<uint64_t>> p(n, std::vector<uint64_t>(n, 0));
  for (int a = 0; a < n; ++a) {
    // parent pointers from a
    std::vector<int> par(v, -2);
    std::vector<int> st{a};
    par[a] = -1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : adj[u])
        if (par[w] == -2) {
          par[w] = u;
          st.push_back(w);
        }
    }
    for (int b = 0; b < n; ++b) {
      uint64_t m = 0;
      for (int u = b; u != -1; u = par[u]) m |= uint64_t(1) << u;
      p[a][b] = m;
    }
  }
  return p;
}

Structure boron_build(int n, Adj adj) {
  Structure s;
  s.kind = StructureKind::BoronTree;
  s.n = n;
  s.tree = std::move(adj);
  s.rel.assign(ipow(n, 4), 0);
  if (n == 0) return s;
  auto p = leaf_paths(n, s.tree);
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          s.rel[w + n * (x + n * (y + n * z))] = (p[w][x] & p[y][z]) != 0;
  return s;
}

std::string rooted_code(const Adj& adj, int u, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[u])
    if (w != parent) kids.push_back(rooted_code(adj, w, u));
  if (kids.empty()) return "L";
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// rooted code where the first k leaves keep their labels
std::string labeled_code(const Adj& adj, int k, int u, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[u])
    if (w != parent) kids.push_back(labeled_code(adj, k, w, u));
  if (kids.empty()) return u < k ? "L" + std::to_string(u) + "." : "L";
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& c : kids) s += c;
  return s + ")";
}

std::string newick(const Adj& adj, int n, int u, int parent) {
  if (u < n && parent != -1) return std::to_string(u);
  std::vector<std::pair<int, std::string>> kids;
  for (int w : adj[u])
    if (w != parent) {
      // order children by smallest leaf below
      int least = INT32_MAX;
      std::vector<std::pair<int, int>> st{{w, u}};
      while (!st.empty()) {
        auto [a, pa] = st.back();
        st.pop_back();
        if (a < n) least = std::min(least, a);
        for (int b : adj[a])
          if (b != pa) st.push_back({b, a});
      }
      kids.emplace_back(least, newick(adj, n, w, u));
    }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + kids[i].second;
  return s + ")";
}

class BoronClass : public StructureClass {
 public:
  StructureKind kind() const override { return StructureKind::BoronTree; }
  std::string name() const override { return "boron"; }
  int arity() const override { return 4; }

  std::vector<Structure> extensions(const Structure& s) const override {
    const int n = s.n;
    if (n == 0) return {boron_build(1, Adj(1))};
    if (n == 1) return {boron_build(2, Adj{{1}, {0}})};
    std::vector<Structure> out;
    const int v = static_cast<int>(s.tree.size());
    auto shift = [&](int x) { return x < n ? x : x + 1; };
    for (int a = 0; a < v; ++a)
      for (int b : s.tree[a]) {
        if (b < a) continue;
        // leaves 0..n, old internals shifted by one, new internal at the end
        Adj adj(v + 2);
        for (int x = 0; x < v; ++x)
          for (int y : s.tree[x])
            if (!((x == a && y == b) || (x == b && y == a))) adj[shift(x)].push_back(shift(y));
        int w = v + 1, leaf = n;
        for (int x : {shift(a), shift(b), leaf}) {
          adj[w].push_back(x);
          adj[x].push_back(w);
        }
        out.push_back(boron_build(n + 1, std::move(adj)));
      }
    return out;
  }

  Structure restrict(const Structure& s, const std::vector<int>& pts) const override {
    const int k = static_cast<int>(pts.size());
    if (k == 0) return boron_build(0, {});
    if (k == 1) return boron_build(1, Adj(1));
    auto p = leaf_paths(s.n, s.tree);
    uint64_t keep = 0;
    for (int a : pts)
      for (int b : pts) keep |= p[a][b];
    const int v = static_cast<int>(s.tree.size());
    std::vector<std::set<int>> g(v);
    for (int x = 0; x < v; ++x)
      if (keep >> x & 1)
        for (int y : s.tree[x])
          if (keep >> y & 1) g[x].insert(y);
    std::vector<char> chosen(v, 0);
    for (int a : pts) chosen[a] = 1;
    // suppress degree-2 vertices
    for (int x = 0; x < v; ++x)
      if ((keep >> x & 1) && !chosen[x] && g[x].size() == 2) {
        int a = *g[x].begin(), b = *std::next(g[x].begin());
        g[a].erase(x);
        g[b].erase(x);
        g[a].insert(b);
        g[b].insert(a);
        g[x].clear();
        keep &= ~(uint64_t(1) << x);
      }
    std::vector<int> id(v, -1);
    for (int i = 0; i < k; ++i) id[pts[i]] = i;
    int next = k;
    for (int x = 0; x < v; ++x)
      if ((keep >> x & 1) && id[x] < 0) id[x] = next++;
    Adj adj(next);
    for (int x = 0; x < v; ++x)
      if (keep >> x & 1)
        for (int y : g[x]) adj[id[x]].push_back(id[y]);
    return boron_build(k, std::move(adj));
  }

  std::string canonical(const Structure& s) const override {
    if (s.n <= 1) return std::to_string(s.n);
    std::string best;
    for (int r = 0; r < static_cast<int>(s.tree.size()); ++r) {
      auto c = rooted_code(s.tree, r, -1);
      if (best.empty() || c < best) best = c;
    }
    return std::to_string(s.n) + ":" + best;
  }

  std::string embedding_key(const Structure& s, int k) const override {
    if (s.n <= 2) return StructureClass::embedding_key(s, k);
    std::string best;
    for (int r = 0; r < static_cast<int>(s.tree.size()); ++r) {
      auto c = labeled_code(s.tree, k, r, -1);
      if (best.empty() || c < best) best = c;
    }
    return best;
  }

  std::string str(const Structure& s) const override {
    if (s.n == 0) return "()";
    if (s.n == 1) return "0";
    if (s.n == 2) return "(0,1)";
    return newick(s.tree, s.n, s.n, -1);
  }
};

}  // namespace

// ----------------------------------------------------------------- generic

Structure StructureClass::empty() const {
  Structure s;
  s.kind = kind();
  return s;
}

Structure StructureClass::restrict(const Structure& s, const std::vector<int>& pts) const {
  Structure r;
  r.kind = s.kind;
  r.n = static_cast<int>(pts.size());
  r.rel = restrict_rel(s, arity(), pts);
  return r;
}

std::string StructureClass::canonical(const Structure& s) const {
  std::vector<int> p(s.n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<unsigned char> best;
  bool first = true;
  do {
    auto r = restrict_rel(s, arity(), p);
    if (first || r < best) best = r;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  std::string out = std::to_string(s.n) + ":";
  for (auto c : best) out += c ? '1' : '0';
  return out;
}

std::string StructureClass::str(const Structure& s) const { return canonical(s); }

std::string StructureClass::embedding_key(const Structure& x, int k) const {
  std::vector<int> rest(x.n - k);
  std::iota(rest.begin(), rest.end(), k);
  std::vector<unsigned char> best;
  bool first = true;
  do {
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    order.insert(order.end(), rest.begin(), rest.end());
    auto rel = restrict_rel(x, arity(), order);
    if (first || rel < best) best = rel;
    first = false;
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::string out = std::to_string(x.n) + "/" + std::to_string(k) + ":";
  for (auto c : best) out += c ? '1' : '0';
  return out;
}

std::vector<Structure> StructureClass::labeled(int n) const {
  std::vector<Structure> cur{empty()};
  for (int i = 0; i < n; ++i) {
    std::vector<Structure> nxt;
    for (const auto& s : cur)
      for (auto& e : extensions(s)) nxt.push_back(std::move(e));
    cur = std::move(nxt);
  }
  return cur;
}

std::vector<Structure> StructureClass::iso_classes(int n) const {
  std::map<std::string, Structure> seen;
  for (auto& s : labeled(n)) seen.emplace(canonical(s), s);
  std::vector<Structure> out;
  for (auto& [k, s] : seen) out.push_back(s);
  return out;
}

Structure StructureClass::relabel(const Structure& s, const std::vector<int>& perm) const {
  // new point perm[i] is old point i, i.e. restrict along the inverse
  std::vector<int> inv(s.n);
  for (int i = 0; i < s.n; ++i) inv[perm[i]] = i;
  return restrict(s, inv);
}

bool StructureClass::is_embedding(const Structure& y, const Structure& x, const std::vector<int>& f) const {
  std::set<int> img(f.begin(), f.end());
  if (static_cast<int>(img.size()) != y.n) return false;
  for (int v : f)
    if (v < 0 || v >= x.n) return false;
  return restrict_rel(x, arity(), f) == y.rel;
}

std::unique_ptr<StructureClass> make_class(StructureKind k) {
  switch (k) {
    case StructureKind::FiniteSet: return std::make_unique<SetClass>();
    case StructureKind::TotalOrder: return std::make_unique<OrderClass>();
    case StructureKind::Graph: return std::make_unique<GraphClass>();
    case StructureKind::BoronTree: return std::make_unique<BoronClass>();
  }
  throw std::invalid_argument("unknown structure kind");
}

std::unique_ptr<StructureClass> make_class(const std::string& name) {
  if (name == "sets") return make_class(StructureKind::FiniteSet);
  if (name == "orders") return make_class(StructureKind::TotalOrder);
  if (name == "graphs") return make_class(StructureKind::Graph);
  if (name == "boron") return make_class(StructureKind::BoronTree);
  throw std::invalid_argument("unknown class '" + name + "' (sets|orders|graphs|boron)");
}

Structure finite_set(int n) {
  Structure s;
  s.kind = StructureKind::FiniteSet;
  s.n = n;
  return s;
}

Structure total_order(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 0);
  return order_from_ranks(r);
}

Structure graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Structure s;
  s.kind = StructureKind::Graph;
  s.n = n;
  s.rel.assign(static_cast<size_t>(n) * n, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("bad graph edge");
    s.rel[a + n * b] = s.rel[b + n * a] = 1;
  }
  return s;
}

Structure parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, maxv = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a;
    if (!(ls >> a)) continue;
    if (a == "n") {
      if (!(ls >> n) || n < 0) throw std::invalid_argument("graph: bad 'n' line");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(a);
    } catch (...) {
      throw std::invalid_argument("graph: bad line '" + line + "'");
    }
    if (!(ls >> v)) throw std::invalid_argument("graph: edge needs two vertices: '" + line + "'");
    edges.emplace_back(u, v);
    maxv = std::max({maxv, u, v});
  }
  if (n < 0) n = maxv + 1;
  return graph_from_edges(n, edges);
}

Structure boron_from_tree(int leaves, const std::vector<std::vector<int>>& adj) {
  const int v = static_cast<int>(adj.size());
  if (leaves > v) throw std::invalid_argument("boron: fewer vertices than leaves");
  for (int x = 0; x < v; ++x) {
    int d = static_cast<int>(adj[x].size());
    if (x < leaves && d > 1) throw std::invalid_argument("boron: leaf with degree " + std::to_string(d));
    if (x >= leaves && d != 3) throw std::invalid_argument("boron: internal vertex of valence " + std::to_string(d));
  }
  if (leaves >= 2 && v != 2 * leaves - 2) throw std::invalid_argument("boron: not a tree");
  return boron_build(leaves, adj);
}

Structure parse_boron(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "()") return boron_build(0, {});
  size_t pos = 0;
  std::vector<std::vector<int>> internal_kids;  // children of each paren group
  std::vector<int> leaf_labels;
  // node ids: leaves as >= 0 labels, groups as -(index+1)
  std::function<int()> node = [&]() -> int {
    if (pos >= s.size()) throw ParseError("boron: unexpected end");
    if (s[pos] == '(') {
      ++pos;
      int me = static_cast<int>(internal_kids.size());
      internal_kids.emplace_back();
      while (true) {
        int c = node();
        internal_kids[me].push_back(c);
        if (pos >= s.size()) throw ParseError("boron: missing ')'");
        if (s[pos] == ',') {
          ++pos;
          continue;
        }
        if (s[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError(std::string("boron: unexpected '") + s[pos] + "'");
      }
      return -(me + 1);
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("boron: expected leaf label");
    int l = std::stoi(s.substr(start, pos - start));
    leaf_labels.push_back(l);
    return l;
  };
  int root = node();
  if (pos != s.size()) throw ParseError("boron: trailing text");
  const int n = static_cast<int>(leaf_labels.size());
  std::vector<int> sorted = leaf_labels;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw ParseError("boron: leaves must be 0..n-1, each once");
  if (root >= 0) return boron_build(1, Adj(1));
  // groups become internal vertices, except a two-child top group which is an edge
  const int groups = static_cast<int>(internal_kids.size());
  std::vector<int> id(groups, -1);
  int next = n;
  bool top_edge = internal_kids[0].size() == 2;
  for (int g = 0; g < groups; ++g)
    if (!(g == 0 && top_edge)) id[g] = next++;
  auto vid = [&](int node_id) { return node_id >= 0 ? node_id : id[-node_id - 1]; };
  Adj adj(next);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int g = 0; g < groups; ++g) {
    const auto& kids = internal_kids[g];
    if (g == 0 && top_edge) {
      link(vid(kids[0]), vid(kids[1]));
      continue;
    }
    if (g == 0 ? kids.size() != 3 : kids.size() != 2)
      throw ParseError("boron: every boron atom needs valence three");
    for (int c : kids) link(id[g], vid(c));
  }
  return boron_from_tree(n, adj);
}

std::vector<int> boron_paired_leaves(const Structure& s) {
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x) {
    if (s.tree[x].empty()) continue;
    int hub = s.tree[x][0];
    if (hub < s.n) continue;  // T2: no boron atom
    for (int y : s.tree[hub])
      if (y != x && y < s.n) {
        out.push_back(x);
        break;
      }
  }
  return out;
}

// ----------------------------------------------------------------- amalgams

std::vector<Amalgam> enumerate_amalgamations(const StructureClass& cls, const Structure& x, const Structure& yp,
                                             int k) {
  if (k > x.n || k > yp.n) throw std::invalid_argument("amalgam: common part larger than a side");
  if (cls.restrict(x, [&] {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 0);
        return v;
      }()) != cls.restrict(yp, [&] {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 0);
        return v;
      }()))
    throw std::invalid_argument("amalgam: the two sides disagree on the common part");
  const int na = x.n - k, nb = yp.n - k;
  std::vector<Amalgam> out;
  std::set<std::pair<std::vector<unsigned char>, std::vector<int>>> seen;
  std::vector<int> match(nb, -1);  // b -> a or -1
  std::vector<char> a_used(na, 0);

  auto build = [&]() {
    std::vector<int> from_y(yp.n);
    for (int j = 0; j < k; ++j) from_y[j] = j;
    std::vector<int> fresh;
    int next = x.n;
    for (int b = 0; b < nb; ++b) {
      if (match[b] >= 0) {
        from_y[k + b] = k + match[b];
      } else {
        from_y[k + b] = next++;
        fresh.push_back(k + b);
      }
    }
    // extend x one fresh point at a time, pruning on the part of Y' placed
    std::function<void(const Structure&, size_t)> rec = [&](const Structure& cur, size_t t) {
      std::vector<int> src, img;
      for (int j = 0; j < yp.n; ++j)
        if (from_y[j] < cur.n) {
          src.push_back(j);
          img.push_back(from_y[j]);
        }
      if (restrict_rel(cur, cls.arity(), img) != restrict_rel(yp, cls.arity(), src)) return;
      if (t == fresh.size()) {
        if (!seen.insert({cur.rel, from_y}).second) return;
        std::vector<int> from_x(x.n);
        std::iota(from_x.begin(), from_x.end(), 0);
        out.push_back(Amalgam{cur, from_x, from_y});
        return;
      }
      for (const auto& e : cls.extensions(cur)) rec(e, t + 1);
    };
    rec(x, 0);
  };

  std::function<void(int)> choose = [&](int b) {
    if (b == nb) {
      build();
      return;
    }
    match[b] = -1;
    choose(b + 1);
    for (int a = 0; a < na; ++a)
      if (!a_used[a]) {
        a_used[a] = 1;
        match[b] = a;
        choose(b + 1);
        a_used[a] = 0;
        match[b] = -1;
      }
  };
  choose(0);
  return out;
}

// ----------------------------------------------------------------- measures

CandidateMeasure from_r_measure(std::string name, std::function<Poly(const Structure&)> nu,
                                std::function<std::string(const Structure&)> key) {
  CandidateMeasure m;
  m.name = std::move(name);
  m.value = [nu](const Structure& x, int k) {
    std::vector<int> pre(k);
    std::iota(pre.begin(), pre.end(), 0);
    auto cls = make_class(x.kind);
    Poly den = nu(cls->restrict(x, pre));
    if (den.is_zero()) throw std::domain_error("R-measure vanishes on a structure");
    return Poly::exact_div(nu(x), den);
  };
  m.entry = [key](const Structure& x, int k) {
    std::vector<int> pre(k);
    std::iota(pre.begin(), pre.end(), 0);
    auto cls = make_class(x.kind);
    return key(cls->restrict(x, pre)) + " < " + key(x);
  };
  return m;
}

namespace {
std::string size_key(const Structure& s) { return std::to_string(s.n); }
}  // namespace

CandidateMeasure sets_nu_t() {
  return from_r_measure("nu_t = (t)_#X", [](const Structure& s) { return falling_factorial(0, s.n); }, size_key);
}

CandidateMeasure orders_sign() {
  return from_r_measure("(-1)^#X", [](const Structure& s) { return Poly(s.n % 2 ? -1 : 1); }, size_key);
}

CandidateMeasure boron_mu() {
  return from_r_measure(
      "boron mu",
      [](const Structure& s) {
        if (s.n == 0) return Poly(1);
        if (s.n == 1) return Poly(Rational(3, 2));
        Rational v = 3;
        for (int i = 0; i < s.n; ++i) v *= Rational(-1, 2);
        return Poly(v);
      },
      size_key);
}

CandidateMeasure boron_nu() {
  CandidateMeasure m;
  m.name = "boron nu";
  static const std::map<std::pair<int, int>, long> small{{{0, 1}, 3}, {{1, 2}, 2}, {{2, 3}, 1},
                                                         {{1, 3}, 2}, {{0, 2}, 6}, {{0, 3}, 6}};
  m.value = [](const Structure& x, int k) -> Poly {
    if (k == x.n) return Poly(1);
    if (k <= 3) {
      if (x.n >= 4) return Poly(0);
      return Poly(small.at({k, x.n}));
    }
    for (int p : boron_paired_leaves(x))
      if (p >= k) return Poly(0);
    return Poly((x.n - k) % 2 ? -1 : 1);
  };
  m.entry = [](const Structure& x, int k) {
    std::string e = "T" + std::to_string(k) + " < T" + std::to_string(x.n);
    if (k >= 4 && k < x.n) {
      bool bad = false;
      for (int p : boron_paired_leaves(x)) bad |= p >= k;
      e = std::to_string(k) + " < " + std::to_string(x.n) + (bad ? " bad" : " good");
    }
    return e;
  };
  return m;
}

CandidateMeasure constant_one() {
  return from_r_measure("nu = 1", [](const Structure&) { return Poly(1); }, size_key);
}

CandidateMeasure table_measure(std::string name, const StructureClass& cls, std::map<std::string, Rational> table) {
  auto shared = std::make_shared<std::map<std::string, Rational>>(std::move(table));
  auto kind = cls.kind();
  auto key = [kind](const Structure& s) { return make_class(kind)->canonical(s); };
  return from_r_measure(
      std::move(name),
      [shared, key](const Structure& s) {
        auto it = shared->find(key(s));
        if (it == shared->end()) throw std::out_of_range("measure table has no entry for " + key(s));
        return Poly(it->second);
      },
      key);
}

CandidateMeasure perturb(const CandidateMeasure& m, const std::string& entry, const Rational& delta) {
  CandidateMeasure p = m;
  p.name = m.name + " perturbed at [" + entry + "]";
  auto value = m.value;
  auto key = m.entry;
  p.value = [value, key, entry, delta](const Structure& x, int k) {
    Poly v = value(x, k);
    if (key(x, k) == entry) v += Poly(delta);
    return v;
  };
  return p;
}

std::vector<std::string> table_entries(const StructureClass& cls, const CandidateMeasure& m, int max_size) {
  std::set<std::string> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& x : cls.labeled(n))
      for (int k = 0; k <= n; ++k) out.insert(m.entry(x, k));
  return {out.begin(), out.end()};
}

// ----------------------------------------------------------------- verification

namespace {

std::vector<int> prefix(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

struct Axiom {
  std::string name;
  long instances = 0;
  bool ok = true;
  std::string witness;
  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

}  // namespace

Report verify_measure(const StructureClass& cls, const CandidateMeasure& m, const VerifyOptions& opt) {
  Report r;
  r.title = cls.name() + ": " + m.name + " up to " + std::to_string(opt.max_size) + " points";
  std::mt19937 rng(opt.seed);
  std::vector<std::vector<Structure>> lab(opt.max_size + 1);
  for (int n = 0; n <= opt.max_size; ++n) lab[n] = cls.labeled(n);
  auto emb = [&](const Structure& x, int k) { return cls.str(cls.restrict(x, prefix(k))) + " -> " + cls.str(x); };
  auto val = [&](const Structure& x, int k, Axiom& ax) -> std::optional<Poly> {
    try {
      return m.value(x, k);
    } catch (const std::exception& e) {
      ax.fail(emb(x, k) + ": " + e.what());
      return std::nullopt;
    }
  };

  Axiom iso{"(a) isomorphism invariance"}, norm{"(b) normalization mu(id) = 1"},
      mult{"(c) multiplicativity mu(Z<X) = mu(Z<Y) mu(Y<X)"}, amal{"(d) amalgamation mu(i) = sum mu(i'_a)"};

  for (int n = 0; n <= opt.max_size; ++n)
    for (const auto& x : lab[n]) {
      ++norm.instances;
      auto v = val(x, n, norm);
      if (v && *v != Poly(1)) norm.fail(cls.str(x) + ": mu(id) = " + v->str());
      for (int k = 0; k <= n; ++k) {
        auto base = val(x, k, iso);
        if (!base) continue;
        for (int t = 0; t < opt.relabelings; ++t) {
          std::vector<int> a = prefix(k), b(n - k);
          std::iota(b.begin(), b.end(), k);
          std::shuffle(a.begin(), a.end(), rng);
          std::shuffle(b.begin(), b.end(), rng);
          a.insert(a.end(), b.begin(), b.end());
          ++iso.instances;
          auto w = val(cls.relabel(x, a), k, iso);
          if (w && *w != *base) iso.fail(emb(x, k) + ": " + base->str() + " but relabeled " + w->str());
        }
        for (int j = k; j <= n; ++j) {
          Structure mid = cls.restrict(x, prefix(j));
          ++mult.instances;
          auto lhs = val(x, k, mult), a = val(mid, k, mult), b = val(x, j, mult);
          if (lhs && a && b && *lhs != *a * *b)
            mult.fail(emb(x, k) + " via " + cls.str(mid) + ": " + lhs->str() + " vs " + a->str() + " * " + b->str());
        }
      }
    }

  // group labeled structures by their k-prefix
  long skipped = 0;
  for (int k = 0; k <= opt.max_size; ++k) {
    std::map<std::vector<unsigned char>, std::vector<const Structure*>> by_prefix;
    // one representative per embedding class: relabeling points outside Y
    // changes nothing in (d), the iso-invariance check covers that
    for (int n = k; n <= opt.max_size; ++n) {
      std::set<std::string> reps;
      for (const auto& x : lab[n]) {
        std::string best = cls.embedding_key(x, k);
        if (reps.insert(best).second) by_prefix[cls.restrict(x, prefix(k)).rel].push_back(&x);
      }
    }
    for (const auto& [key, group] : by_prefix)
      for (const Structure* x : group)
        for (const Structure* yp : group) {
          if (opt.max_amalgam >= 0 && x->n + yp->n - k > opt.max_amalgam) {
            ++skipped;
            continue;
          }
          ++amal.instances;
          auto lhs = val(*x, k, amal);
          if (!lhs) continue;
          Poly sum;
          bool good = true;
          for (const auto& a : enumerate_amalgamations(cls, *x, *yp, k)) {
            // put the image of Y' first
            std::vector<int> perm(a.x.n, -1);
            for (int j = 0; j < yp->n; ++j) perm[a.from_y[j]] = j;
            int next = yp->n;
            for (auto& p : perm)
              if (p < 0) p = next++;
            auto v = val(cls.relabel(a.x, perm), yp->n, amal);
            if (!v) {
              good = false;
              break;
            }
            sum += *v;
          }
          if (good && sum != *lhs)
            amal.fail("Y = " + cls.str(cls.restrict(*x, prefix(k))) + ", X = " + cls.str(*x) + ", Y' = " +
                      cls.str(*yp) + ": mu(i) = " + lhs->str() + ", sum over amalgams = " + sum.str());
        }
  }
  for (auto* ax : {&iso, &norm, &mult, &amal})
    r.add(ax->name, ax->ok,
          ax->ok ? std::to_string(ax->instances) + " instances" +
                       (ax == &amal && skipped ? ", " + std::to_string(skipped) + " above amalgam bound skipped" : "")
                 : ax->witness);
  return r;
}

// ----------------------------------------------------------------- embeddings

long count_embeddings(const StructureClass& cls, const Structure& y, const Structure& gamma) {
  long c = 0;
  for_each_embedding(y, gamma, cls.arity(), [&](const std::vector<int>&) {
    ++c;
    return true;
  });
  return c;
}

namespace {

std::vector<std::vector<int>> all_embeddings(const StructureClass& cls, const Structure& y, const Structure& x) {
  std::vector<std::vector<int>> out;
  for_each_embedding(y, x, cls.arity(), [&](const std::vector<int>& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace

bool check_S_regular(const StructureClass& cls, const Structure& gamma, const std::vector<Structure>& s,
                     std::string* witness) {
  for (const auto& y : s)
    for (const auto& yp : s)
      for (const auto& i : all_embeddings(cls, y, yp)) {
        std::map<std::vector<int>, long> fiber;
        for (const auto& h : all_embeddings(cls, y, gamma)) fiber[h] = 0;
        for (const auto& h : all_embeddings(cls, yp, gamma)) {
          std::vector<int> c(y.n);
          for (int p = 0; p < y.n; ++p) c[p] = h[i[p]];
          ++fiber[c];
        }
        std::set<long> sizes;
        for (auto& [h, c] : fiber) sizes.insert(c);
        if (sizes.size() > 1) {
          if (witness)
            *witness = cls.str(y) + " -> " + cls.str(yp) + ": fiber sizes " + std::to_string(*sizes.begin()) +
                       " and " + std::to_string(*sizes.rbegin());
          return false;
        }
      }
  return true;
}

Report s_regular_identity_report(const StructureClass& cls, const Structure& gamma, const std::vector<Structure>& s) {
  Report r;
  r.title = "S-regular identity in " + cls.str(gamma);
  std::string w;
  bool reg = check_S_regular(cls, gamma, s, &w);
  r.add("S-regular", reg, w);
  long inst = 0;
  std::string bad;
  for (const auto& y : s)
    for (const auto& x : s)
      for (const auto& yp : s)
        for (const auto& i : all_embeddings(cls, y, x))
          for (const auto& j : all_embeddings(cls, y, yp)) {
            // move the image of Y to the front of X and Y'
            auto front = [&](const Structure& z, const std::vector<int>& f) {
              std::vector<int> order = f;
              for (int p = 0; p < z.n; ++p)
                if (std::find(f.begin(), f.end(), p) == f.end()) order.push_back(p);
              return cls.restrict(z, order);
            };
            Structure xx = front(x, i), yy = front(yp, j);
            long lhs = count_embeddings(cls, x, gamma) * count_embeddings(cls, yp, gamma), sum = 0;
            for (const auto& a : enumerate_amalgamations(cls, xx, yy, y.n)) sum += count_embeddings(cls, a.x, gamma);
            long rhs = count_embeddings(cls, y, gamma) * sum;
            ++inst;
            if (lhs != rhs && bad.empty())
              bad = cls.str(y) + " -> " + cls.str(x) + ", " + cls.str(yp) + ": " + std::to_string(lhs) + " vs " +
                    std::to_string(rhs);
          }
  r.add("#h(X) #h(Y') = #h(Y) sum #h(X'_a)", bad.empty(), bad.empty() ? std::to_string(inst) + " instances" : bad);
  return r;
}

// ----------------------------------------------------------------- boron witness

Report boron_theta_witness() {
  Report r;
  r.title = "boron Theta witness";
  BoronClass cls;
  std::vector<Structure> t{cls.empty()};
  for (int i = 1; i <= 4; ++i) t.push_back(cls.extensions(t.back()).front());
  Structure t5 = parse_boron("((0,1),2,(3,4))");
  // p = 0 is paired, q = 2 sits alone on the middle atom
  auto last = [&](int leaf) {
    std::vector<int> order;
    for (int i = 0; i < 5; ++i)
      if (i != leaf) order.push_back(i);
    order.push_back(leaf);
    return cls.restrict(t5, order);
  };
  Structure t5p = last(0), t5q = last(2);
  r.add("T5^p and T5^q are the two inclusions T4 < T5",
        cls.canonical(cls.restrict(t5p, prefix(4))) == cls.canonical(t[4]) &&
            boron_nu().entry(t5p, 4) != boron_nu().entry(t5q, 4),
        boron_nu().entry(t5p, 4) + " / " + boron_nu().entry(t5q, 4));
  for (const auto& [m, expect_c] : {std::pair{boron_mu(), Rational(-1, 2)}, std::pair{boron_nu(), Rational(0)}}) {
    auto th = [&](const Structure& x, int k) { return m.value(x, k).constant_term(); };
    Rational c = th(t[4], 3);
    Rational a1 = th(t[1], 0), a2 = th(t[2], 1), a3 = th(t[3], 2), a4 = th(t[4], 3);
    Rational a5p = th(t5p, 4), a5q = th(t5q, 4);
    std::string tag = " (" + m.name + ")";
    r.add("c = " + to_string(expect_c) + tag, c == expect_c, "c = " + to_string(c));
    r.add("alpha1 = 3c+3" + tag, a1 == 3 * c + 3, to_string(a1));
    r.add("alpha2 = 3c+2" + tag, a2 == 3 * c + 2, to_string(a2));
    r.add("alpha3 = 3c+1" + tag, a3 == 3 * c + 1, to_string(a3));
    r.add("alpha4 = c" + tag, a4 == c, to_string(a4));
    r.add("alpha5^p = c" + tag, a5p == c, to_string(a5p));
    r.add("alpha5^q = -1-c" + tag, a5q == -1 - c, to_string(a5q));
    r.add("alpha4 alpha5^p = alpha4 alpha5^q" + tag, a4 * a5p == a4 * a5q,
          to_string(a4 * a5p) + " vs " + to_string(a4 * a5q));
    r.add("c(2c+1) = 0" + tag, c * (2 * c + 1) == 0, to_string(c * (2 * c + 1)));
  }
  return r;
}

// ----------------------------------------------------------------- Rado

std::map<std::string, Rational> constant_graph_table(int max_vertices, const Rational& v) {
  GraphClass cls;
  std::map<std::string, Rational> t;
  for (int n = 0; n <= max_vertices; ++n)
    for (const auto& g : cls.iso_classes(n)) t[cls.canonical(g)] = v;
  return t;
}

Report rado_invariant_check(const std::map<std::string, Rational>& table, int max_vertices) {
  Report r;
  r.title = "graph invariant amalgamation identity up to " + std::to_string(max_vertices) + " vertices";
  GraphClass cls;
  auto nu = [&](const Structure& g) -> Rational {
    auto it = table.find(cls.canonical(g));
    if (it == table.end()) throw std::out_of_range("table has no entry for graph " + cls.canonical(g));
    if (it->second == 0) throw std::domain_error("table value 0 for graph " + cls.canonical(g));
    return it->second;
  };
  try {
    Rational e = nu(cls.empty());
    r.add("nu(empty) = 1", e == 1, to_string(e));
  } catch (const std::exception& ex) {
    r.add("nu(empty) = 1", false, ex.what());
    return r;
  }
  long inst = 0;
  std::string bad;
  try {
    for (int n = 2; n <= max_vertices && bad.empty(); ++n)
      for (const auto& g : cls.iso_classes(n)) {
        for (int x = 0; x < n && bad.empty(); ++x)
          for (int y = 0; y < n && bad.empty(); ++y) {
            if (x == y || !g.rel[x + n * y]) continue;
            std::vector<int> wx, wy, wxy;
            for (int v = 0; v < n; ++v) {
              if (v != x) wx.push_back(v);
              if (v != y) wy.push_back(v);
              if (v != x && v != y) wxy.push_back(v);
            }
            std::vector<int> swap(n);
            std::iota(swap.begin(), swap.end(), 0);
            std::swap(swap[x], swap[y]);
            int c = cls.relabel(g, swap) == g ? 1 : 0;
            Structure gp = g;
            gp.rel[x + n * y] = gp.rel[y + n * x] = 0;
            Rational gx = nu(cls.restrict(g, wx)), gy = nu(cls.restrict(g, wy)), gxy = nu(cls.restrict(g, wxy));
            Rational lhs = gx * gy / gxy, rhs = c * gx + nu(g) + nu(gp);
            ++inst;
            if (lhs != rhs)
              bad = "graph " + cls.str(g) + ", edge " + std::to_string(x) + "-" + std::to_string(y) + ": " +
                    to_string(lhs) + " vs " + to_string(rhs);
          }
        if (!bad.empty()) break;
      }
  } catch (const std::exception& ex) {
    bad = ex.what();
  }
  r.add("nu(G_x) nu(G_y) / nu(G_xy) = c nu(G_x) + nu(G) + nu(G')", bad.empty(),
        bad.empty() ? std::to_string(inst) + " instances" : bad);
  return r;
}

}  // namespace olig
