// oligocat: command-line front end.  Exit codes: 0 ok/pass, 1 verification
// failure, 2 usage or input error.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "oligocat/category.hpp"
#include "oligocat/fraisse.hpp"
#include "oligocat/glq.hpp"
#include "oligocat/io.hpp"
#include "oligocat/verify.hpp"

using namespace olig;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ctx = "sym";
  std::string set;
  std::string dom, cod;
  std::vector<std::string> matrices;
  std::string at;
  int order = kDefaultSeriesOrder;
  int level = 0;
  std::string format = "table";
  int max_size = 4;
  int max_amalgam = -1;
  unsigned seed = 1;
  std::vector<std::string> suites;
  std::string cls = "sets";
  std::string measure;
  std::string table_file;
  bool rado = false;
  bool theta = false;
  bool keys = false;
  long max_m = 3, max_d = 3, max_n = 6;
};

bool json_out(const Options& o) { return o.format == "json"; }

ContextPtr group_context(const Options& o) {
  if (o.ctx.rfind("glq", 0) == 0) throw UsageError("context " + o.ctx + " has no permutation objects; use the glq subcommand");
  return make_context(o.ctx);
}

long glq_q(const Options& o) {
  if (o.ctx.rfind("glq:", 0) != 0) throw UsageError("glq needs --ctx glq:<q>");
  return std::stol(o.ctx.substr(4));
}

SetExpr require_set(const std::string& s, const char* flag) {
  if (s.empty()) throw UsageError(std::string("missing ") + flag);
  return SetExpr::parse(s);
}

// "identity:X", "allones:X" or "allones:X->Y", "graph:<map>", "orbit:<string>"
// (on --cod x --dom, both defaulting to --set), "json:<file>".  Terms may be
// joined with ';' and carry a "c*" coefficient: "3*identity:Omega;-2/5*allones:Omega".
InvariantMatrix parse_matrix(const ContextPtr& ctx, const Options& o, const std::string& spec) {
  std::optional<InvariantMatrix> sum;
  std::stringstream ss(spec);
  std::string term;
  while (std::getline(ss, term, ';')) {
    Poly coeff(1);
    auto star = term.find('*');
    if (star != std::string::npos && term.substr(0, star).find(':') == std::string::npos) {
      coeff = Poly::parse(term.substr(0, star));
      term = term.substr(star + 1);
    }
    auto colon = term.find(':');
    if (colon == std::string::npos) throw UsageError("matrix '" + term + "' needs kind:argument");
    std::string kind = term.substr(0, colon), arg = term.substr(colon + 1);
    auto two_sets = [&](std::string a) {
      auto arrow = a.find("->");
      if (arrow == std::string::npos) return std::pair{SetExpr::parse(a), SetExpr::parse(a)};
      return std::pair{SetExpr::parse(a.substr(0, arrow)), SetExpr::parse(a.substr(arrow + 2))};
    };
    std::optional<InvariantMatrix> m;
    if (kind == "identity") {
      m = InvariantMatrix::identity(ctx, SetExpr::parse(arg));
    } else if (kind == "allones") {
      auto [d, c] = two_sets(arg);
      m = InvariantMatrix::all_ones(ctx, d, c);
    } else if (kind == "graph") {
      m = InvariantMatrix::graph(ctx, GSetMap::parse(arg));
    } else if (kind == "orbit") {
      SetExpr d = require_set(o.dom.empty() ? o.set : o.dom, "--dom or --set");
      SetExpr c = require_set(o.cod.empty() ? o.set : o.cod, "--cod or --set");
      m = InvariantMatrix::orbit(ctx, d, c, parse_orbit(*ctx, c * d, arg));
    } else if (kind == "json") {
      m = matrix_from_json(ctx, Json::parse(read_file(arg)));
    } else {
      throw UsageError("unknown matrix kind '" + kind + "'");
    }
    InvariantMatrix scaled = coeff * *m;
    if (!sum) sum = scaled;
    else *sum += scaled;
  }
  if (!sum) throw UsageError("empty matrix expression");
  return *sum;
}

std::string show(const Poly& p, const Options& o) {
  if (o.at.empty()) return p.str();
  return eval(p, EvalPoint::parse(o.at)).str();
}

TruncatedSeries eval_series(const TruncatedSeries& s, const Options& o) {
  if (o.at.empty()) return s;
  auto at = EvalPoint::parse(o.at);
  if (at.mode() == EvalPoint::Mode::Modular) throw UsageError("--at p:... is not supported for series; use a rational");
  std::vector<Poly> c;
  for (const auto& p : s.coeffs()) c.push_back(Poly(eval(p, at).value));
  return TruncatedSeries(s.order(), c);
}

int print_report(const Report& r, const Options& o) {
  if (json_out(o)) std::cout << to_json(r).dump(2) << "\n";
  else std::cout << r.str();
  return r.ok() ? 0 : 1;
}

int cmd_measure(const Options& o) {
  auto ctx = group_context(o);
  SetExpr x = require_set(o.set, "--set");
  Poly m = set_measure(*ctx, x);
  if (json_out(o)) {
    Json j{{"ctx", ctx->name()}, {"set", x.str()}, {"measure", m.str()}};
    if (!o.at.empty()) j["at"] = o.at, j["value"] = show(m, o);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << show(m, o) << "\n";
  }
  return 0;
}

int cmd_orbits(const Options& o) {
  auto ctx = group_context(o);
  SetExpr x = require_set(o.set, "--set");
  auto orbs = orbits(*ctx, x, o.level);
  Json arr = Json::array();
  for (const auto& ob : orbs) {
    std::string s = format_orbit(*ctx, x, ob), m = show(orbit_measure(*ctx, x, ob), o);
    if (json_out(o)) arr.push_back({{"orbit", s}, {"measure", m}});
    else std::cout << s << "\t" << m << "\n";
  }
  if (json_out(o)) std::cout << Json{{"set", x.str()}, {"level", o.level}, {"orbits", arr}}.dump(2) << "\n";
  else std::cout << orbs.size() << " orbits\n";
  return 0;
}

int cmd_hom(const Options& o) {
  auto ctx = group_context(o);
  SetExpr d = require_set(o.dom.empty() ? o.set : o.dom, "--dom or --set");
  SetExpr c = require_set(o.cod.empty() ? o.set : o.cod, "--cod or --set");
  auto basis = hom_basis(PermObject{ctx, d}, PermObject{ctx, c});
  Json arr = Json::array();
  for (const auto& b : basis) {
    const auto& [orb, coeff] = *b.entries().terms().begin();
    std::string s = format_orbit(*ctx, c * d, orb);
    if (json_out(o)) arr.push_back(s);
    else std::cout << s << "\n";
  }
  if (json_out(o)) std::cout << Json{{"domain", d.str()}, {"codomain", c.str()}, {"basis", arr}}.dump(2) << "\n";
  else std::cout << basis.size() << " basis morphisms\n";
  return 0;
}

int cmd_compose(const Options& o) {
  auto ctx = group_context(o);
  if (o.matrices.empty()) throw UsageError("compose needs at least one --matrix");
  // written left to right as a product: M1 M2 ... (M_last applied first)
  InvariantMatrix m = parse_matrix(ctx, o, o.matrices.front());
  for (size_t i = 1; i < o.matrices.size(); ++i) m = m * parse_matrix(ctx, o, o.matrices[i]);
  if (json_out(o)) std::cout << to_json(m).dump(2) << "\n";
  else std::cout << m.str() << "\n";
  return 0;
}

InvariantMatrix single_matrix(const ContextPtr& ctx, const Options& o) {
  if (o.matrices.size() != 1) throw UsageError("expected exactly one --matrix");
  return parse_matrix(ctx, o, o.matrices.front());
}

int cmd_trace(const Options& o) {
  auto ctx = group_context(o);
  Poly tr = trace(single_matrix(ctx, o));
  if (json_out(o)) std::cout << Json{{"trace", tr.str()}, {"value", show(tr, o)}}.dump(2) << "\n";
  else std::cout << show(tr, o) << "\n";
  return 0;
}

int cmd_charseries(const Options& o) {
  auto ctx = group_context(o);
  auto s = eval_series(char_series(single_matrix(ctx, o), o.order), o);
  if (json_out(o)) std::cout << to_json(s).dump(2) << "\n";
  else std::cout << s.str() << "\n";
  return 0;
}

int cmd_decompose(const Options& o) {
  auto ctx = group_context(o);
  SetExpr x = require_set(o.set, "--set");
  if (o.at.empty()) throw UsageError("decompose needs --at <rational>");
  auto at = EvalPoint::parse(o.at);
  if (at.mode() != EvalPoint::Mode::Rational) throw UsageError("decompose needs a rational --at");
  auto split = idempotent_split(PermObject{ctx, x}, at.t0(), o.seed);
  if (json_out(o)) {
    Json arr = Json::array();
    for (size_t i = 0; i < split.idempotents.size(); ++i)
      arr.push_back({{"idempotent", to_json(split.idempotents[i])}, {"dim", to_string(split.dims[i])}});
    std::cout << Json{{"set", x.str()}, {"at", o.at}, {"semisimple", split.semisimple}, {"complete", split.complete},
                      {"note", split.note}, {"pieces", arr}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (split.semisimple ? "semisimple" : "not semisimple") << (split.complete ? ", complete" : ", incomplete");
    if (!split.note.empty()) std::cout << " (" << split.note << ")";
    std::cout << "\n";
    for (size_t i = 0; i < split.idempotents.size(); ++i)
      std::cout << "dim " << to_string(split.dims[i]) << ": " << split.idempotents[i].str() << "\n";
  }
  return split.semisimple ? 0 : 1;
}

int cmd_frobenius(const Options& o) {
  auto ctx = group_context(o);
  return print_report(frobenius_report(frobenius(PermObject{ctx, require_set(o.set, "--set")})), o);
}

int thread_count() {
  if (const char* e = std::getenv("OLIGOCAT_THREADS")) {
    int n = std::atoi(e);
    if (n >= 1) return n;
  }
  return 1;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.suites.empty() ? std::vector<std::string>{"all"} : o.suites;
  ContextPtr ctx;
  // glq selects the q used by glq-identities; permutation contexts go to the law suites
  if (o.ctx.rfind("glq:", 0) == 0) {
    long q = glq_q(o);
    Report r = glq_report({q});
    r.title = "glq-identities";
    return print_report(r, o);
  }
  ctx = make_context(o.ctx);
  return print_report(run_suites(suites, ctx, thread_count()), o);
}

CandidateMeasure builtin_measure(const std::string& name) {
  if (name == "nu_t") return sets_nu_t();
  if (name == "sign") return orders_sign();
  if (name == "boron-mu") return boron_mu();
  if (name == "boron-nu") return boron_nu();
  if (name == "one") return constant_one();
  throw UsageError("unknown measure '" + name + "' (nu_t, sign, boron-mu, boron-nu, one)");
}

int cmd_fraisse(const Options& o) {
  if (o.theta) return print_report(boron_theta_witness(), o);
  if (o.rado) {
    if (o.table_file.empty()) throw UsageError("--rado needs --table <file.json>");
    return print_report(rado_invariant_check(rational_table_from_json(Json::parse(read_file(o.table_file))), o.max_size), o);
  }
  auto cls = make_class(o.cls);
  if (o.keys) {
    // canonical forms, the keys accepted by --table
    for (int n = 0; n <= o.max_size; ++n)
      for (const auto& s : cls->iso_classes(n)) std::cout << cls->canonical(s) << "\t" << cls->str(s) << "\n";
    return 0;
  }
  CandidateMeasure m;
  if (!o.table_file.empty()) m = table_measure("table", *cls, rational_table_from_json(Json::parse(read_file(o.table_file))));
  else if (!o.measure.empty()) m = builtin_measure(o.measure);
  else throw UsageError("fraisse needs --measure, --table, --rado or --theta");
  VerifyOptions opt{o.max_size, o.max_amalgam, 2, o.seed};
  Report r = verify_measure(*cls, m, opt);
  r.title = cls->name() + ": " + m.name;
  return print_report(r, o);
}

int cmd_glq(const Options& o) {
  QContext c(glq_q(o));
  auto t = omega_table(c, o.max_m, o.max_d, o.max_n);
  if (json_out(o)) {
    std::cout << to_json(t).dump(2) << "\n";
    return 0;
  }
  std::cout << "(m,d)";
  for (long n : t.ns) std::cout << "\tn=" << n;
  std::cout << "\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    std::cout << "(" << t.rows[i].first << "," << t.rows[i].second << ")";
    for (const auto& v : t.values[i]) std::cout << "\t" << to_string(v);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oligocat: measures, invariant matrices and tensor categories for oligomorphic groups"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sc) {
    sc->add_option("--ctx", o.ctx, "sym | order:<eps>,<delta> | glq:<q>");
    sc->add_option("--at", o.at, "evaluation point: rational or p:<prime>:<residue>");
    sc->add_option("--format", o.format, "table | json")->check(CLI::IsMember({"table", "json"}));
    sc->add_option("--seed", o.seed, "random seed");
  };
  auto with_set = [&](CLI::App* sc) {
    sc->add_option("--set", o.set, "set expression, e.g. Omega^2, Sub(3), Inj(2)+Pt");
    sc->add_option("--dom", o.dom, "domain set (defaults to --set)");
    sc->add_option("--cod", o.cod, "codomain set (defaults to --set)");
  };
  auto with_matrix = [&](CLI::App* sc) {
    sc->add_option("--matrix", o.matrices, "identity:X | allones:X[->Y] | graph:<map> | orbit:<string> | json:<file>");
  };
  std::map<std::string, std::function<int(const Options&)>> handlers;
  auto add = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
    auto* sc = app.add_subcommand(name, help);
    common(sc);
    handlers[name] = std::move(fn);
    return sc;
  };
  with_set(add("measure", "measure of a set expression", cmd_measure));
  auto* orb = add("orbits", "orbits of a set expression at a level, with measures", cmd_orbits);
  with_set(orb);
  orb->add_option("--level", o.level, "number of pinned constants");
  with_set(add("hom", "orbit basis of Hom(Vec_dom, Vec_cod)", cmd_hom));
  auto* comp = add("compose", "product of matrices, written left to right", cmd_compose);
  with_set(comp);
  with_matrix(comp);
  auto* tr = add("trace", "trace of an endomorphism", cmd_trace);
  with_set(tr);
  with_matrix(tr);
  auto* cs = add("charseries", "characteristic series", cmd_charseries);
  with_set(cs);
  with_matrix(cs);
  cs->add_option("--order", o.order, "truncation order N (prints up to O(u^N))");
  with_set(add("decompose", "primitive idempotents of End(Vec_X) at a rational t", cmd_decompose));
  with_set(add("frobenius", "Frobenius algebra axioms on Vec_X", cmd_frobenius));
  auto* ver = add("verify", "run verification suites", cmd_verify);
  ver->add_option("--suite", o.suites, "suite name or all; repeatable");
  auto* fr = add("fraisse", "verify a candidate measure on a Fraisse class", cmd_fraisse);
  fr->add_option("--class", o.cls, "sets | orders | graphs | boron");
  fr->add_option("--measure", o.measure, "nu_t | sign | boron-mu | boron-nu | one");
  fr->add_option("--table", o.table_file, "JSON {canonical-form: value}");
  fr->add_option("--max-size", o.max_size, "bound on structure sizes");
  fr->add_option("--max-amalgam", o.max_amalgam, "skip amalgamations above this size (-1: none)");
  fr->add_flag("--rado", o.rado, "check a graph table against the Rado identity");
  fr->add_flag("--theta", o.theta, "boron c(2c+1) = 0 witness");
  fr->add_flag("--keys", o.keys, "list canonical keys of iso classes up to --max-size");
  auto* gl = add("glq", "table of omega_{m,d}([n]_q)", cmd_glq);
  gl->add_option("--max-m", o.max_m);
  gl->add_option("--max-d", o.max_d);
  gl->add_option("--max-n", o.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto* sc : app.get_subcommands()) return handlers.at(sc->get_name())(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // bad set expressions, orbit strings, maps and files land here
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
