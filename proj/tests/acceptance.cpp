// Acceptance criteria 1-10. One PASS/FAIL line per criterion; exit status
// is nonzero when any criterion fails.

#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "seqcore/check_dep.hpp"
#include "seqcore/check_prop.hpp"
#include "seqcore/depify.hpp"
#include "seqcore/eval.hpp"
#include "seqcore/read.hpp"
#include "seqcore/surface/program.hpp"
#include "support/corpus.hpp"
#include "support/enumerate.hpp"
#include "support/first_match.hpp"
#include "support/fixtures.hpp"
#include "support/generate.hpp"
#include "support/rule_search.hpp"

using namespace seqcore;
using namespace seqcore::surface;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (count_++ < 3) out_ << (out_.tellp() > 0 ? "; " : "") << what;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    return ok() ? "" : std::to_string(count_) + " failure(s): " + out_.str();
  }

 private:
  std::size_t count_ = 0;
  std::ostringstream out_;
};

const char* worked_example =
    "atom ℕ\n"
    "postulate add : ℕ -> ℕ -> ℕ\n"
    "f : (ℕ * ℕ) + ℕ -> ℕ\n"
    "f (inl (x, y)) = add x y\n"
    "f (inr z) = z\n";

// Sequent-calculus notation with thunks erased: thunk(t) is shown as (t)
// and the empty spine as ε.
std::string erased(const Pattern& p) {
  if (auto v = p.as<PVar>()) return v->name.text;
  if (auto pr = p.as<PPair>()) return "(" + erased(pr->left) + "," + erased(pr->right) + ")";
  if (auto o = p.as<POr>()) return "[" + erased(o->left) + "|" + erased(o->right) + "]_" + o->label.text;
  throw std::invalid_argument("pattern outside the displayed fragment");
}

std::string erased(const Term& t);

std::string erased(const DataVal& d) {
  if (auto th = d.as<Thunk>()) return "(" + erased(th->body) + ")";
  throw std::invalid_argument("datum outside the displayed fragment");
}

std::string erased(const Term& t) {
  if (auto l = t.as<Lam>()) return "λ" + erased(l->pat) + ". " + erased(l->body);
  if (auto s = t.as<Split>()) return "⟨" + s->label.text + "⟩[" + erased(s->left) + " | " + erased(s->right) + "]";
  if (auto a = t.as<App>()) {
    if (a->spine.is<Nil>()) return a->head.text + " ε";
    std::string items;
    for (Spine k = a->spine; !k.is<Nil>();) {
      auto c = k.as<Cons>();
      if (!c) throw std::invalid_argument("spine outside the displayed fragment");
      items += erased(c->arg) + "::";
      k = c->rest;
    }
    return a->head.text + " (" + items + "ε)";
  }
  throw std::invalid_argument("term outside the displayed fragment");
}

Program load(const std::string& file, Mode mode) {
  ProgramOptions opts;
  opts.mode = mode;
  return compile_program(fixtures::slurp(file), file, opts);
}

struct CorpusFile {
  std::string path;
  Mode mode;
};

std::vector<CorpusFile> corpus(bool include_dependent_reruns) {
  std::vector<CorpusFile> out;
  std::set<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(SEQCORE_PROGRAMS_DIR))
    if (e.path().extension() == ".seq") files.insert(e.path().string());
  for (const auto& f : files) {
    bool dependent_only = fixtures::slurp(f).find("--dependent") != std::string::npos;
    out.push_back({f, dependent_only ? Mode::dependent : Mode::propositional});
    if (!dependent_only && include_dependent_reruns) out.push_back({f, Mode::dependent});
  }
  return out;
}

std::string name_of(const std::string& path) { return std::filesystem::path(path).filename().string(); }

Term applied(const Name& f, const std::vector<DataVal>& args) {
  Spine k = nil();
  for (auto it = args.rbegin(); it != args.rend(); ++it) k = cons(*it, k);
  return app(f, k);
}

NegType result_type(const NegType& ty, const std::vector<DataVal>& args) {
  NegType cur = ty;
  for (const auto& d : args) {
    if (auto i = cur.as<Imp>()) {
      cur = i->res;
    } else {
      auto p = cur.as<Pi>();
      cur = subst_data_in_neg(p->res, p->binder, p->arg, d);
    }
  }
  return cur;
}

std::vector<std::string> rules_of(const Normalized& n) {
  std::vector<std::string> out;
  for (const auto& s : n.trace) out.push_back(s.rule);
  return out;
}

Outcome worked_example_typing() {
  Failures fail;
  Program p = compile_program(worked_example, "worked-example");
  fail.require(p.ok(), p.ok() ? "" : p.errors[0].render());
  fail.require(p.decls.size() == 3, "expected 3 declarations");
  if (!fail.ok()) return {false, fail.summary()};
  const CompiledDecl& f = p.decls[2];
  fail.require(check_term(p.sig, {}, *f.term, *f.type).ok(), "compiled f does not typecheck");
  fail.require(alpha_eq(*f.type, fixtures::f_type()), "type " + print(*f.type));
  fail.require(alpha_eq(*f.term, fixtures::f_term()), "term " + print(*f.term));
  std::string shown = erased(*f.term);
  fail.require(shown == "λ[(x,y)|z]_w. ⟨w⟩[add ((x ε)::(y ε)::ε) | z ε]", "erased form " + shown);
  return {fail.ok(), fail.ok() ? shown : fail.summary()};
}

Outcome worked_example_dynamics() {
  Failures fail;
  Program p = load(fixtures::program_path("f_run.seq"), Mode::propositional);
  if (!p.ok()) return {false, p.errors[0].render()};
  struct Case {
    const char* arg;
    const char* expected;
  };
  std::string detail;
  for (const Case& c : {Case{"inr q", "q []"}, Case{"inl (q, r)", "add (thunk(q []) :: thunk(r []) :: [])"}}) {
    Invocation inv = invoke(p, "f", parse_expr(c.arg));
    if (!inv.term) {
      fail.require(false, std::string(c.arg) + ": " + inv.error->render());
      continue;
    }
    Normalized n = normalize(p.sig, *inv.term, 20);
    fail.require(n.status == Normalized::Status::normal_form, std::string(c.arg) + " did not finish in 20 steps");
    fail.require(alpha_eq(n.term, read_term(c.expected)), std::string(c.arg) + " gave " + print(n.term));
    // The first clause stops at the postulate: no step applies.
    fail.require(step(p.sig, n.term).normal(), std::string(c.arg) + " result still steps");
    detail += std::string(detail.empty() ? "" : ", ") + "f (" + c.arg + ") -> " + print(n.term) + " in " +
              std::to_string(n.steps) + " steps";
  }
  return {fail.ok(), fail.ok() ? detail : fail.summary()};
}

Outcome beta_and_kappa() {
  Failures fail;
  Sig sig = fixtures::one_atom_sig();
  sig.add({global("c"), read_neg("a"), std::nullopt, {}});
  // (λp.t) (d :: k)  ->  (p = d in t) k
  Normalized beta = trace(sig, read_term("(\\x. x [] : ↓(↓a ⊃ a) ⊃ ↓a ⊃ a) (thunk(\\y. y []) :: [])"), 100);
  fail.require(rules_of(beta) == std::vector<std::string>{"R1", "R6", "R4"}, "beta trace rules differ");
  fail.require(!beta.trace.empty() && alpha_eq(beta.trace[0].term, read_term("(let x : ↓(↓a ⊃ a) = thunk(\\y. y []) in x [] : ↓a ⊃ a) []")),
               "R1 result differs");
  fail.require(alpha_eq(beta.term, read_term("\\y. y []")), "beta normal form " + print(beta.term));
  // done d  against  κp.t  ->  p = d in t
  Normalized kappa = trace(sig, read_term("(done thunk(c []) : ↑↓a) kappa x. x []"), 100);
  fail.require(rules_of(kappa) == std::vector<std::string>{"R2", "R6"}, "kappa trace rules differ");
  fail.require(!kappa.trace.empty() && alpha_eq(kappa.trace[0].term, read_term("let x : ↓a = thunk(c []) in x []")),
               "R2 result differs");
  // Golden traces through the worked example.
  Program p = load(fixtures::program_path("f_run.seq"), Mode::propositional);
  Invocation inv = invoke(p, "f", parse_expr("inl (q, r)"));
  Normalized golden = trace(p.sig, *inv.term, 20);
  auto rules = rules_of(golden);
  fail.require(rules.size() >= 2 && rules[1] == "R1", "worked example second step is not R1");
  return {fail.ok(), fail.ok() ? "beta: R1 R6 R4; kappa: R2 R6; f (inl (q, r)): " + std::to_string(rules.size()) + " steps"
                               : fail.summary()};
}

Outcome subject_reduction() {
  Failures fail;
  Sig sig = oracle::corpus_sig();
  auto pool = oracle::one_atom_pool();
  std::set<std::string> seen;
  std::size_t terms = 0, steps = 0;
  for (unsigned seed = 1; terms < 600 && seed < 200000; ++seed) {
    oracle::TermGen gen(sig, pool, seed);
    const NegType& goal = pool.neg[(seed + 1) % pool.neg.size()];
    Term t = gen.term(goal, 12);
    if (oracle::node_count(t) > 12) continue;
    if (!seen.insert(print(t) + " : " + print(goal)).second) continue;
    if (!check_term(sig, {}, t, goal).ok()) {
      fail.require(false, "generator produced ill-typed " + print(t));
      continue;
    }
    ++terms;
    Normalized n = trace(sig, t);
    fail.require(n.status == Normalized::Status::normal_form, print(t) + " did not normalize");
    for (const auto& s : n.trace) {
      ++steps;
      fail.require(check_term(sig, {}, s.term, goal).ok(), s.rule + " broke " + print(t));
    }
  }
  fail.require(terms >= 500, "only " + std::to_string(terms) + " generated terms");
  std::size_t runs = 0;
  for (const auto& [file, mode] : corpus(true)) {
    ProgramOptions opts;
    opts.mode = mode;
    Program p = load(file, mode);
    if (!p.ok()) {
      fail.require(false, name_of(file) + " does not compile");
      continue;
    }
    for (const auto& d : p.decls) {
      if (!d.term) continue;
      auto [arg_types, rest] = peel(*d.type, d.source.clauses.front().lhs.size(), {});
      auto tuples = oracle::tuples(p.sig, arg_types, 3);
      tuples.push_back({});
      for (const auto& args : tuples) {
        if (args.empty() && !arg_types.empty() && tuples.size() > 1) continue;
        Term t = applied(global(d.source.name), args);
        NegType goal = result_type(*d.type, args);
        if (!check_at(p.sig, t, goal, opts, {}).ok()) {
          fail.require(false, "ill-typed application of " + d.source.name);
          continue;
        }
        ++runs;
        Normalized n = trace(p.sig, t);
        fail.require(n.status == Normalized::Status::normal_form, d.source.name + " did not normalize");
        for (const auto& s : n.trace) {
          ++steps;
          fail.require(check_at(p.sig, s.term, goal, opts, {}).ok(),
                       name_of(file) + " " + d.source.name + ": " + s.rule + " broke typing");
        }
      }
    }
  }
  return {fail.ok(), fail.ok() ? std::to_string(terms) + " generated terms, " + std::to_string(runs) +
                                     " example runs, " + std::to_string(steps) + " steps re-checked"
                               : fail.summary()};
}

Outcome checker_oracle() {
  Failures fail;
  Sig sig = oracle::corpus_sig();
  auto pool = oracle::one_atom_pool();
  std::size_t judgments = 0;
  for (bool structural : {false, true}) {
    oracle::Enumerator en(pool, structural);
    oracle::RuleSearch search(sig, structural);
    CheckOptions opts;
    opts.structural_patterns = structural;
    int max_term = structural ? 7 : 8;
    for (int size = 1; size <= max_term; ++size)
      for (const auto& t : en.terms(size, oracle::corpus_scope()))
        for (const auto& g : pool.neg) {
          ++judgments;
          fail.require(check_term(sig, {}, t, g, opts).ok() == search.inv({}, {}, t, g), "term " + print(t) + " : " + print(g));
        }
    if (structural) continue;
    for (int size = 1; size <= 8; ++size) {
      for (const auto& d : en.data(size, oracle::corpus_scope()))
        for (const auto& p : pool.pos) {
          ++judgments;
          fail.require(check_data(sig, d, p).ok() == search.rfocus({}, d, p), "data " + print(d));
        }
      for (const auto& k : en.spines(size, oracle::corpus_scope()))
        for (const auto& focus : pool.neg)
          for (const auto& goal : pool.neg) {
            ++judgments;
            fail.require(check_spine(sig, focus, k, goal).ok() == search.lfocus({}, focus, k, goal), "spine " + print(k));
          }
    }
  }
  return {fail.ok(), fail.ok() ? std::to_string(judgments) + " judgments, 0 disagreements" : fail.summary()};
}

Outcome compiler_oracle() {
  Failures fail;
  std::size_t cases = 0;
  for (const auto& [file, mode] : corpus(true)) {
    Program p = load(file, mode);
    if (!p.ok()) {
      fail.require(false, name_of(file) + " does not compile");
      continue;
    }
    for (const auto& d : p.decls) {
      if (!d.term) continue;
      auto [arg_types, rest] = peel(*d.type, d.source.clauses.front().lhs.size(), {});
      oracle::FirstMatch reference(p.sig, d.source, *d.type);
      for (const auto& args : oracle::tuples(p.sig, arg_types, 3)) {
        ++cases;
        auto expected_rhs = reference.apply(args);
        if (!expected_rhs) {
          fail.require(false, d.source.name + ": no clause matches");
          continue;
        }
        Normalized got = normalize(p.sig, applied(global(d.source.name), args));
        Normalized want = normalize(p.sig, *expected_rhs);
        fail.require(got.status == Normalized::Status::normal_form && want.status == Normalized::Status::normal_form &&
                         alpha_eq(got.term, want.term),
                     name_of(file) + " " + d.source.name + ": " + print(got.term) + " vs " + print(want.term));
      }
    }
  }
  fail.require(cases >= 50, "only " + std::to_string(cases) + " argument tuples");
  return {fail.ok(), fail.ok() ? std::to_string(cases) + " argument tuples, 0 disagreements" : fail.summary()};
}

Outcome cut_free_normal_forms() {
  Failures fail;
  std::size_t programs = 0, normal_forms = 0, with_cuts = 0;
  for (const auto& [file, mode] : corpus(true)) {
    Program p = load(file, mode);
    bool postulate_free = true;
    for (const auto& d : p.decls) postulate_free = postulate_free && d.source.kind != Decl::postulate;
    if (!postulate_free) continue;
    if (!p.ok()) {
      fail.require(false, name_of(file) + " does not compile");
      continue;
    }
    ++programs;
    for (const auto& d : p.decls) {
      if (!d.term) continue;
      for (const Term& t : {*d.term, app(global(d.source.name), nil())}) {
        Normalized n = trace(p.sig, t, 10000);
        bool cut_seen = false;
        for (const auto& st : n.trace) cut_seen = cut_seen || !oracle::cut_free(st.term);
        with_cuts += cut_seen;
        ++normal_forms;
        fail.require(n.status == Normalized::Status::normal_form, d.source.name + " ran out of fuel or got stuck");
        fail.require(oracle::cut_free(n.term), d.source.name + " normal form has a cut: " + print(n.term));
      }
    }
  }
  fail.require(programs >= 2, "fewer than two postulate-free programs");
  fail.require(with_cuts > 0, "no reduction passed through a cut");
  return {fail.ok(), fail.ok() ? std::to_string(programs) + " program runs, " + std::to_string(normal_forms) +
                                     " normal forms, " + std::to_string(with_cuts) + " of them reached through cuts"
                               : fail.summary()};
}

Outcome dependent_fragment() {
  Failures fail;
  Sig sig;
  sig.declare_atom("a");
  sig.declare_atom("B", 1);
  sig.declare_atom("T", 1);
  sig.add({global("c"), read_neg("a"), std::nullopt, {}});
  sig.add({global("c2"), read_neg("a"), std::nullopt, {}});
  sig.add({global("h"), read_neg("Π(x : ↓a). B{x}"), std::nullopt, {}});
  sig.add({global("tl"), read_neg("Π(y : ↓a). T{inl y}"), std::nullopt, {}});
  sig.add({global("tr"), read_neg("Π(z : ↓a). T{inr z}"), std::nullopt, {}});

  Name w = fresh("w");
  Term swap = read_term("let (y, z) = w in done (thunk(z []), thunk(y []))", {w});
  fail.require(dep_check_term(sig, {{w, read_pos("Σ(y : ↓a). ↓a")}}, swap, read_neg("↑(Σ(u : ↓a). ↓a)")).ok(),
               "degenerate Σ swap rejected");

  Term pi_app = read_term("h (thunk(c []) :: [])");
  fail.require(dep_check_term(sig, {}, pi_app, read_neg("B{thunk(c [])}")).ok(), "Π application rejected");
  fail.require(!dep_check_term(sig, {}, pi_app, read_neg("B{thunk(c2 [])}")).ok(), "Π application at wrong index");

  Name x = fresh("x"), y = fresh("y"), z = fresh("z");
  DepCtx ctx = {{x, read_pos("↓a ∨ ↓a")}};
  NegType motive = atom("T", {dvar(x)});
  Term by_cases = case_of(x, y, app(global("tl"), cons(thunk(use(y)), nil())), z, app(global("tr"), cons(thunk(use(z)), nil())));
  Term swapped = case_of(x, y, app(global("tr"), cons(thunk(use(y)), nil())), z, app(global("tl"), cons(thunk(use(z)), nil())));
  fail.require(dep_check_term(sig, ctx, by_cases, motive).ok(), "∨-left motive substitution rejected");
  fail.require(!dep_check_term(sig, ctx, swapped, motive).ok(), "∨-left with swapped branches accepted");

  Program sigma = load(fixtures::program_path("sigma.seq"), Mode::dependent);
  fail.require(sigma.ok(), "sigma.seq rejected");

  Sig psig = oracle::corpus_sig();
  Sig dsig = depify(psig);
  auto pool = oracle::one_atom_pool();
  oracle::Enumerator en(pool, false);
  std::size_t judgments = 0;
  for (int size = 1; size <= 8; ++size)
    for (const auto& t : en.terms(size, oracle::corpus_scope())) {
      std::optional<Term> dt;
      try {
        dt = depify(t);
      } catch (const std::invalid_argument&) {
      }
      for (const auto& g : pool.neg) {
        ++judgments;
        bool a = check_term(psig, {}, t, g).ok();
        bool b = dt && dep_check_term(dsig, {}, *dt, depify(g)).ok();
        fail.require(a == b, "conservativity: " + print(t) + " : " + print(g));
      }
    }
  return {fail.ok(), fail.ok() ? "swap, Π, ∨-motive, sigma.seq; " + std::to_string(judgments) + " conservativity judgments"
                               : fail.summary()};
}

Outcome structural_patterns() {
  Failures fail;
  Sig sig = fixtures::one_atom_sig();
  sig.add({global("c"), read_neg("a"), std::nullopt, {}});
  sig.add({global("g"), read_neg("↓a ⊃ ↓a ⊃ ↓a ⊃ a"), std::nullopt, {}});
  sig.add({global("h"), read_neg("↓a ⊃ ↓a ⊃ a"), std::nullopt, {}});
  CheckOptions on;
  on.structural_patterns = true;
  struct Sample {
    const char* term;
    const char* type;
  };
  std::size_t n = 0;
  for (const Sample& s : {Sample{"\\x@y. g (thunk(x []) :: thunk(y []) :: thunk(x []) :: [])", "↓a ⊃ a"},
                          Sample{"\\(y, z)@(v, _). h (thunk(v []) :: thunk(z []) :: [])", "(↓a × ↓a) ⊃ a"},
                          Sample{"\\_. \\x. x []", "↓a ⊃ ↓a ⊃ a"},
                          Sample{"let x@(y, z) : ↓a × ↓a = (thunk(c []), thunk(c [])) in z []", "a"},
                          Sample{"(\\_. c [] : ↓a ⊃ a) (thunk(c []) :: [])", "a"}}) {
    ++n;
    Term t = read_term(s.term);
    NegType ty = read_neg(s.type);
    fail.require(check_term(sig, {}, t, ty, on).ok(), std::string("flag on rejects ") + s.term);
    auto off = check_term(sig, {}, t, ty);
    fail.require(!off.ok() && off.diagnostic().rule == "structural-disabled", std::string("flag off accepts ") + s.term);
    Normalized r = trace(sig, t);
    for (const auto& st : r.trace) fail.require(check_term(sig, {}, st.term, ty, on).ok(), st.rule + " broke " + s.term);
  }
  return {fail.ok(), fail.ok() ? std::to_string(n) + " samples accepted with the flag, rejected without" : fail.summary()};
}

Outcome round_trips() {
  Failures fail;
  std::size_t surface = 0, core = 0;
  auto core_round_trip = [&](const Term& t) {
    ++core;
    std::string printed = print(t);
    Term back = read_term(printed);
    fail.require(alpha_eq(back, t) && print(back) == printed, "core text " + printed);
  };
  for (const auto& [file, mode] : corpus(true)) {
    ProgramOptions opts;
    opts.mode = mode;
    Program p = load(file, mode);
    if (!p.ok()) {
      fail.require(false, name_of(file) + " does not compile");
      continue;
    }
    auto render = [](const Program& prog) {
      std::string out;
      for (const auto& d : prog.decls) {
        if (d.source.kind == Decl::atom) out += "atom " + d.source.name + "\n";
        else if (d.source.kind == Decl::postulate) out += "postulate " + d.source.name + " : " + unpolarize(*d.type) + "\n";
        else out += pretty_definition(d.source.name, *d.term, *d.type);
      }
      return out;
    };
    std::string once = render(p);
    Program again = compile_program(once, file, opts);
    if (!again.ok()) {
      fail.require(false, name_of(file) + " printed form does not compile");
      continue;
    }
    ++surface;
    fail.require(render(again) == once, name_of(file) + " printed form is not a fixpoint");
    for (std::size_t i = 0; i < p.decls.size(); ++i)
      if (p.decls[i].term) {
        fail.require(alpha_eq(*p.decls[i].term, *again.decls[i].term), p.decls[i].source.name + " changed meaning");
        core_round_trip(*p.decls[i].term);
      }
    std::string text = print_program(p.sig);
    fail.require(print_program(read_program(text)) == text, name_of(file) + " core program text");
  }
  Sig sig = oracle::corpus_sig();
  auto pool = oracle::one_atom_pool();
  for (unsigned seed = 1; seed <= 300; ++seed) {
    oracle::TermGen gen(sig, pool, seed);
    core_round_trip(gen.term(pool.neg[seed % pool.neg.size()], 12));
  }
  return {fail.ok(), fail.ok() ? std::to_string(surface) + " surface fixpoints, " + std::to_string(core) + " core round trips"
                               : fail.summary()};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example typechecks and compiles to the displayed term", 1.0, worked_example_typing},
      {2, "worked example evaluates clause by clause", 0, worked_example_dynamics},
      {3, "beta and kappa reductions fire as written", 0, beta_and_kappa},
      {4, "subject reduction on generated and example terms", 60.0, subject_reduction},
      {5, "checker agrees with exhaustive rule search", 0, checker_oracle},
      {6, "compiled clauses agree with first-match interpretation", 0, compiler_oracle},
      {7, "postulate-free programs normalize to cut-free terms", 0, cut_free_normal_forms},
      {8, "dependent fragment", 0, dependent_fragment},
      {9, "structural patterns gated by the flag", 0, structural_patterns},
      {10, "surface and core round trips", 0, round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (exceeded " + std::to_string(c.limit_seconds) + " s)";
    }
    failed += !o.pass;
    std::printf("criterion %2d: %s  %s [%.2f s] %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
