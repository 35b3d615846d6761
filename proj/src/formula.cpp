// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ms0/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ms0 {

namespace {

std::set<std::string> set_union(const std::set<std::string>& a,
                                const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

bool Formula::is_quantifier_free() const {
  switch (kind_) {
    case Conn::Subseteq:
    case Conn::Sing:
    case Conn::Ind:
      return true;
    case Conn::Not:
      return lhs_->is_quantifier_free();
    case Conn::And:
      return lhs_->is_quantifier_free() && rhs_->is_quantifier_free();
    default:
      return false;
  }
}

FormulaPtr Formula::subseteq(const std::string& a, const std::string& b) {
  auto f = FormulaPtr(new Formula(Conn::Subseteq, a, b, nullptr, nullptr));
  auto* mut = const_cast<Formula*>(f.get());
  mut->vars_ = {a, b};
  mut->free_ = {a, b};
  return f;
}

FormulaPtr Formula::sing(const std::string& a) {
  auto f = FormulaPtr(new Formula(Conn::Sing, a, "", nullptr, nullptr));
  auto* mut = const_cast<Formula*>(f.get());
  mut->vars_ = {a};
  mut->free_ = {a};
  return f;
}

FormulaPtr Formula::ind(const std::string& a) {
  auto f = FormulaPtr(new Formula(Conn::Ind, a, "", nullptr, nullptr));
  auto* mut = const_cast<Formula*>(f.get());
  mut->vars_ = {a};
  mut->free_ = {a};
  return f;
}

FormulaPtr Formula::negate(FormulaPtr f) {
  auto g = FormulaPtr(new Formula(Conn::Not, "", "", std::move(f), nullptr));
  auto* mut = const_cast<Formula*>(g.get());
  mut->vars_ = g->lhs()->vars();
  mut->free_ = g->lhs()->free_vars();
  return g;
}

namespace {

// Rename bound occurrences of `from` to `to` along binders only.
FormulaPtr rename_bound(const FormulaPtr& f, const std::string& from,
                        const std::string& to);

FormulaPtr rebuild(const Formula& f,
                   const std::map<std::string, std::string>& sub) {
  auto name = [&](const std::string& v) {
    auto it = sub.find(v);
    return it == sub.end() ? v : it->second;
  };
  switch (f.kind()) {
    case Conn::Subseteq:
      return Formula::subseteq(name(f.var1()), name(f.var2()));
    case Conn::Sing:
      return Formula::sing(name(f.var1()));
    case Conn::Ind:
      return Formula::ind(name(f.var1()));
    case Conn::Not:
      return Formula::negate(rebuild(*f.lhs(), sub));
    case Conn::And:
      return Formula::conj(rebuild(*f.lhs(), sub), rebuild(*f.rhs(), sub),
                           /*auto_relabel=*/false);
    case Conn::Exists:
      return Formula::exists(name(f.var1()), rebuild(*f.lhs(), sub));
    case Conn::Forall:
      return Formula::forall(name(f.var1()), rebuild(*f.lhs(), sub));
  }
  throw InputError("unreachable");
}

// Renames the first binder occurrence of `from` (in traversal order) to
// `to`, together with its whole scope. Under a binder of `from` no second
// binder of the same name can occur in a well-formed formula.
FormulaPtr rename_bound_first(const FormulaPtr& f, const std::string& from,
                              const std::string& to, bool& done) {
  if (done) return f;
  switch (f->kind()) {
    case Conn::Subseteq:
    case Conn::Sing:
    case Conn::Ind:
      return f;
    case Conn::Not:
      return Formula::negate(rename_bound_first(f->lhs(), from, to, done));
    case Conn::And: {
      FormulaPtr l = rename_bound_first(f->lhs(), from, to, done);
      FormulaPtr r = rename_bound_first(f->rhs(), from, to, done);
      return Formula::conj(l, r, /*auto_relabel=*/false);
    }
    case Conn::Exists:
    case Conn::Forall: {
      FormulaPtr body = f->lhs();
      std::string v = f->var1();
      if (v == from) {
        std::map<std::string, std::string> sub{{from, to}};
        body = rebuild(*body, sub);
        v = to;
        done = true;
      } else {
        body = rename_bound_first(body, from, to, done);
      }
      return f->kind() == Conn::Exists ? Formula::exists(v, body)
                                       : Formula::forall(v, body);
    }
  }
  throw InputError("unreachable");
}

FormulaPtr rename_bound(const FormulaPtr& f, const std::string& from,
                        const std::string& to) {
  bool done = false;
  return rename_bound_first(f, from, to, done);
}

thread_local int g_repair_counter = 0;

}  // namespace

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b, bool auto_relabel) {
  // Rule (3): no variable free on one side and bound on the other.
  for (int round = 0; round < 2; ++round) {
    const Formula& x = round == 0 ? *a : *b;
    const Formula& y = round == 0 ? *b : *a;
    for (const auto& v : x.free_vars()) {
      if (y.vars().count(v) && !y.free_vars().count(v)) {
        if (!auto_relabel) {
          throw FormationError(
              "conjunction mixes free and bound occurrences of " + v, v);
        }
        std::string fresh = "_R" + std::to_string(++g_repair_counter);
        FormulaPtr fixed = rename_bound(round == 0 ? b : a, v, fresh);
        if (round == 0) {
          return conj(std::move(a), std::move(fixed), auto_relabel);
        }
        return conj(std::move(fixed), std::move(b), auto_relabel);
      }
    }
  }
  auto f = FormulaPtr(
      new Formula(Conn::And, "", "", std::move(a), std::move(b)));
  auto* mut = const_cast<Formula*>(f.get());
  mut->vars_ = set_union(f->lhs()->vars(), f->rhs()->vars());
  mut->free_ = set_union(f->lhs()->free_vars(), f->rhs()->free_vars());
  return f;
}

FormulaPtr Formula::exists(const std::string& v, FormulaPtr body) {
  if (!body->free_vars().count(v)) {
    throw FormationError(
        "quantified variable " + v + " is not free in its scope", v);
  }
  auto f = FormulaPtr(new Formula(Conn::Exists, v, "", std::move(body),
                                  nullptr));
  auto* mut = const_cast<Formula*>(f.get());
  mut->vars_ = f->lhs()->vars();
  mut->free_ = f->lhs()->free_vars();
  mut->free_.erase(v);
  return f;
}

FormulaPtr Formula::forall(const std::string& v, FormulaPtr body) {
  if (!body->free_vars().count(v)) {
    throw FormationError(
        "quantified variable " + v + " is not free in its scope", v);
  }
  auto f = FormulaPtr(new Formula(Conn::Forall, v, "", std::move(body),
                                  nullptr));
  auto* mut = const_cast<Formula*>(f.get());
  mut->vars_ = f->lhs()->vars();
  mut->free_ = f->lhs()->free_vars();
  mut->free_.erase(v);
  return f;
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b, bool auto_relabel) {
  return negate(conj(negate(std::move(a)), negate(std::move(b)),
                     auto_relabel));
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b, bool auto_relabel) {
  return disj(negate(std::move(a)), std::move(b), auto_relabel);
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b, bool auto_relabel) {
  return conj(implies(a, b, auto_relabel), implies(b, a, auto_relabel),
              auto_relabel);
}

FormulaPtr Formula::union_of(const std::vector<std::string>& sources,
                             const std::string& target, FreshNames& fresh) {
  if (sources.empty()) throw InputError("Union needs at least one source");
  std::string u = fresh.next();
  for (const auto& s : sources) {
    if (s == u || target == u) throw InputError("fresh name collision");
  }
  FormulaPtr any = subseteq(u, sources[0]);
  for (std::size_t i = 1; i < sources.size(); ++i) {
    any = disj(any, subseteq(u, sources[i]));
  }
  FormulaPtr body = implies(sing(u), iff(subseteq(u, target), any));
  return forall(u, body);
}

FormulaPtr Formula::max_of(const std::string& v, FreshNames& fresh) {
  std::string x = fresh.next();
  while (x == v) x = fresh.next();
  std::string y = fresh.next();
  while (y == v) y = fresh.next();
  FormulaPtr inner =
      implies(union_of({v, x}, y, fresh), negate(ind(y)));
  FormulaPtr guarded = implies(conj(sing(x), negate(subseteq(x, v))),
                               forall(y, inner));
  return conj(ind(v), forall(x, guarded));
}

bool Formula::equals(const Formula& other) const {
  if (kind_ != other.kind_ || v_ != other.v_ || w_ != other.w_) return false;
  if ((lhs_ == nullptr) != (other.lhs_ == nullptr)) return false;
  if ((rhs_ == nullptr) != (other.rhs_ == nullptr)) return false;
  if (lhs_ && !lhs_->equals(*other.lhs_)) return false;
  if (rhs_ && !rhs_->equals(*other.rhs_)) return false;
  return true;
}

std::string Formula::to_string() const {
  switch (kind_) {
    case Conn::Subseteq:
      return v_ + " <= " + w_;
    case Conn::Sing:
      return "Sing(" + v_ + ")";
    case Conn::Ind:
      return "Ind(" + v_ + ")";
    case Conn::Not:
      return "!(" + lhs_->to_string() + ")";
    case Conn::And:
      return "(" + lhs_->to_string() + " & " + rhs_->to_string() + ")";
    case Conn::Exists:
      return "exists " + v_ + ". " + lhs_->to_string();
    case Conn::Forall:
      return "forall " + v_ + ". " + lhs_->to_string();
  }
  return "";
}

// --- Parser -----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  ParseOptions opts;
  Formula::FreshNames fresh;

  explicit Parser(const std::string& t, ParseOptions o) : text(t), opts(o) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(
                                    text[pos]))) {
      ++pos;
    }
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      // keywords must not run into identifier characters
      if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
        std::size_t end = pos + tok.size();
        if (end < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[end])) ||
             text[end] == '_')) {
          return false;
        }
      }
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) throw ParseError("expected '" + tok + "'", pos);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        std::isalpha(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_')) {
        ++pos;
      }
    }
    if (start == pos) {
      // leading underscores are reserved for expansion-generated names
      throw ParseError("expected identifier", pos);
    }
    return text.substr(start, pos - start);
  }

  FormulaPtr formula() {
    skip_ws();
    if (eat("exists")) {
      std::string v = ident();
      expect(".");
      return Formula::exists(v, formula());
    }
    if (eat("forall")) {
      std::string v = ident();
      expect(".");
      return Formula::forall(v, formula());
    }
    return iff_expr();
  }

  FormulaPtr iff_expr() {
    FormulaPtr f = imp_expr();
    while (true) {
      skip_ws();
      if (text.compare(pos, 3, "<->") == 0) {
        pos += 3;
        f = Formula::iff(f, imp_expr(), !opts.strict_rule3);
      } else {
        return f;
      }
    }
  }

  FormulaPtr imp_expr() {
    FormulaPtr f = or_expr();
    skip_ws();
    if (text.compare(pos, 2, "->") == 0) {
      pos += 2;
      return Formula::implies(f, imp_expr(), !opts.strict_rule3);
    }
    return f;
  }

  FormulaPtr or_expr() {
    FormulaPtr f = and_expr();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        f = Formula::disj(f, and_expr(), !opts.strict_rule3);
      } else {
        return f;
      }
    }
  }

  FormulaPtr and_expr() {
    FormulaPtr f = unary();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '&') {
        ++pos;
        f = Formula::conj(f, unary(), !opts.strict_rule3);
      } else {
        return f;
      }
    }
  }

  FormulaPtr unary() {
    skip_ws();
    if (eat("!")) return Formula::negate(unary());
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      FormulaPtr f = formula();
      expect(")");
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    skip_ws();
    if (eat("Ind")) {
      expect("(");
      std::string v = ident();
      expect(")");
      return Formula::ind(v);
    }
    if (eat("Sing")) {
      expect("(");
      std::string v = ident();
      expect(")");
      return Formula::sing(v);
    }
    if (eat("Union")) {
      expect("(");
      std::vector<std::string> names;
      names.push_back(ident());
      while (eat(",")) names.push_back(ident());
      expect(";");
      std::string target = ident();
      expect(")");
      return Formula::union_of(names, target, fresh);
    }
    if (eat("Max")) {
      expect("(");
      std::string v = ident();
      expect(")");
      return Formula::max_of(v, fresh);
    }
    std::string v = ident();
    skip_ws();
    expect("<=");
    std::string w = ident();
    return Formula::subseteq(v, w);
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, ParseOptions opts) {
  Parser p(text, opts);
  FormulaPtr f = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw ParseError("trailing input", p.pos);
  }
  return f;
}

FormulaPtr relabel(
    FormulaPtr f,
    const std::vector<std::pair<std::string, std::string>>& mapping) {
  std::map<std::string, std::string> sub;
  std::set<std::string> targets;
  for (const auto& [from, to] : mapping) {
    if (!sub.emplace(from, to).second) {
      throw InputError("relabel mapping repeats " + from);
    }
  }
  for (const auto& v : f->vars()) {
    auto it = sub.find(v);
    std::string target = it == sub.end() ? v : it->second;
    if (!targets.insert(target).second) {
      throw InputError("relabel mapping is not injective on var(f)");
    }
  }
  return rebuild(*f, sub);
}

// --- Prenex -----------------------------------------------------------------

bool is_prenex(const Formula& f) {
  const Formula* g = &f;
  while (g->kind() == Conn::Exists || g->kind() == Conn::Forall) {
    g = g->lhs().get();
  }
  return g->is_quantifier_free();
}

namespace {

void collect_bound(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Conn::Subseteq:
    case Conn::Sing:
    case Conn::Ind:
      return;
    case Conn::Not:
      collect_bound(*f.lhs(), out);
      return;
    case Conn::And:
      collect_bound(*f.lhs(), out);
      collect_bound(*f.rhs(), out);
      return;
    case Conn::Exists:
    case Conn::Forall:
      out.push_back(f.var1());
      collect_bound(*f.lhs(), out);
      return;
  }
}

struct PrenexBuild {
  std::vector<std::pair<Conn, std::string>> prefix;
  FormulaPtr matrix;
};

PrenexBuild pull(const FormulaPtr& f, bool negated) {
  switch (f->kind()) {
    case Conn::Subseteq:
    case Conn::Sing:
    case Conn::Ind:
      return {{}, negated ? Formula::negate(f) : f};
    case Conn::Not:
      return pull(f->lhs(), !negated);
    case Conn::And: {
      if (negated) {
        // !(a & b): wrap sides in fresh negations but still pull
        PrenexBuild a = pull(f->lhs(), true);
        PrenexBuild b = pull(f->rhs(), true);
        // de Morgan: exists/forall flip through the negation of each side,
        // which `pull` already performed; combine as a disjunction
        PrenexBuild out;
        out.prefix = a.prefix;
        out.prefix.insert(out.prefix.end(), b.prefix.begin(),
                          b.prefix.end());
        out.matrix = Formula::negate(Formula::conj(
            Formula::negate(a.matrix), Formula::negate(b.matrix),
            /*auto_relabel=*/false));
        return out;
      }
      PrenexBuild a = pull(f->lhs(), false);
      PrenexBuild b = pull(f->rhs(), false);
      PrenexBuild out;
      out.prefix = a.prefix;
      out.prefix.insert(out.prefix.end(), b.prefix.begin(), b.prefix.end());
      out.matrix =
          Formula::conj(a.matrix, b.matrix, /*auto_relabel=*/false);
      return out;
    }
    case Conn::Exists:
    case Conn::Forall: {
      PrenexBuild inner = pull(f->lhs(), negated);
      Conn q = f->kind();
      if (negated) q = q == Conn::Exists ? Conn::Forall : Conn::Exists;
      inner.prefix.insert(inner.prefix.begin(), {q, f->var1()});
      return inner;
    }
  }
  throw InputError("unreachable");
}

}  // namespace

FormulaPtr to_prenex(FormulaPtr f) {
  if (is_prenex(*f)) return f;
  // Make bound names pairwise distinct. Free/bound clashes are impossible in
  // a well-formed formula, but parallel branches may reuse a name; rename one
  // duplicate binder at a time until stable. rename_bound renames the first
  // binder occurrence it reaches.
  int counter = 0;
  while (true) {
    std::vector<std::string> names;
    collect_bound(*f, names);
    std::set<std::string> s;
    std::string dup;
    for (const auto& v : names) {
      if (!s.insert(v).second) {
        dup = v;
        break;
      }
    }
    if (dup.empty()) break;
    std::string fresh;
    do {
      fresh = "_P" + std::to_string(++counter);
    } while (f->vars().count(fresh));
    f = rename_bound(f, dup, fresh);
  }
  PrenexBuild b = pull(f, false);
  FormulaPtr out = b.matrix;
  for (auto it = b.prefix.rbegin(); it != b.prefix.rend(); ++it) {
    out = it->first == Conn::Exists ? Formula::exists(it->second, out)
                                    : Formula::forall(it->second, out);
  }
  return out;
}

// --- Axioms and the minor sentence ------------------------------------------

AxiomSentences axiom_sentences() {
  Formula::FreshNames fresh;
  AxiomSentences out;
  out.i1 = Formula::exists("X1", Formula::ind("X1"));
  out.i2 = Formula::forall(
      "X1",
      Formula::forall(
          "X2", Formula::implies(
                    Formula::conj(Formula::ind("X1"),
                                  Formula::subseteq("X2", "X1")),
                    Formula::ind("X2"))));
  FormulaPtr exch = Formula::conj(
      Formula::conj(Formula::sing("X3"), Formula::subseteq("X3", "X1")),
      Formula::negate(Formula::subseteq("X3", "X2")));
  FormulaPtr aug = Formula::forall(
      "X4", Formula::implies(Formula::union_of({"X2", "X3"}, "X4", fresh),
                             Formula::ind("X4")));
  FormulaPtr head = Formula::conj(
      Formula::conj(Formula::max_of("X1", fresh), Formula::ind("X2")),
      Formula::negate(Formula::max_of("X2", fresh)));
  out.i3 = Formula::forall(
      "X1", Formula::forall(
                "X2", Formula::implies(
                          head, Formula::exists(
                                    "X3", Formula::conj(exch, aug)))));
  return out;
}

FormulaPtr minor_sentence(const Matroid& n) {
  int nn = n.size();
  if (nn > 5) {
    throw InputError("minor sentence limited to |E(N)| <= 5");
  }
  Formula::FreshNames fresh;
  auto xvar = [](int i) { return "X" + std::to_string(i); };
  std::string xc = xvar(nn + 1);  // the contraction variable

  FormulaPtr body = Formula::ind(xc);
  for (int i = 1; i <= nn; ++i) {
    body = Formula::conj(
        body, Formula::conj(Formula::sing(xvar(i)),
                            Formula::negate(Formula::subseteq(xvar(i), xc))));
  }
  for (int i = 1; i <= nn; ++i) {
    for (int j = i + 1; j <= nn; ++j) {
      body = Formula::conj(
          body, Formula::negate(Formula::subseteq(xvar(i), xvar(j))));
    }
  }
  for (Mask s = 0; s < (Mask{1} << nn); ++s) {
    std::vector<std::string> sources;
    for (int i = 0; i < nn; ++i) {
      if (has_bit(s, i)) sources.push_back(xvar(i + 1));
    }
    sources.push_back(xc);
    std::string u = "_X" + std::to_string(s);
    FormulaPtr un = Formula::union_of(sources, u, fresh);
    FormulaPtr pattern = n.is_independent(s)
                             ? Formula::ind(u)
                             : Formula::negate(Formula::ind(u));
    body = Formula::conj(body,
                         Formula::forall(u, Formula::implies(un, pattern)));
  }
  FormulaPtr out = body;
  for (int i = nn + 1; i >= 1; --i) {
    out = Formula::exists(xvar(i), out);
  }
  return out;
}

// --- Compilation ------------------------------------------------------------

bool Qf::eval_masks(const std::vector<Mask>& assignment,
                    const std::function<bool(Mask)>& ind) const {
  std::vector<bool> stack;
  stack.reserve(code.size());
  for (const Instr& in : code) {
    switch (in.op) {
      case Op::Sub:
        stack.push_back(is_subset(assignment[in.i], assignment[in.j]));
        break;
      case Op::Sing:
        stack.push_back(popcount(assignment[in.i]) == 1);
        break;
      case Op::Ind:
        stack.push_back(ind(assignment[in.i]));
        break;
      case Op::Not:
        stack.back() = !stack.back();
        break;
      case Op::And: {
        bool b = stack.back();
        stack.pop_back();
        stack.back() = stack.back() && b;
        break;
      }
    }
  }
  if (stack.size() != 1) throw InputError("malformed compiled formula");
  return stack.back();
}

namespace {

void compile_qf(const Formula& f, const std::map<std::string, int>& columns,
                std::vector<Qf::Instr>& code) {
  auto col = [&](const std::string& v) {
    auto it = columns.find(v);
    if (it == columns.end()) throw InputError("unmapped variable " + v);
    return static_cast<std::uint8_t>(it->second);
  };
  switch (f.kind()) {
    case Conn::Subseteq:
      code.push_back({Qf::Op::Sub, col(f.var1()), col(f.var2())});
      return;
    case Conn::Sing:
      code.push_back({Qf::Op::Sing, col(f.var1()), 0});
      return;
    case Conn::Ind:
      code.push_back({Qf::Op::Ind, col(f.var1()), 0});
      return;
    case Conn::Not:
      compile_qf(*f.lhs(), columns, code);
      code.push_back({Qf::Op::Not, 0, 0});
      return;
    case Conn::And:
      compile_qf(*f.lhs(), columns, code);
      compile_qf(*f.rhs(), columns, code);
      code.push_back({Qf::Op::And, 0, 0});
      return;
    default:
      throw InputError("quantifier inside a quantifier-free matrix");
  }
}

}  // namespace

PrenexFormula normalize_prenex(FormulaPtr f) {
  FormulaPtr p = to_prenex(f);
  PrenexFormula out;
  out.prenex_source = p;
  std::map<std::string, int> columns;
  // free variables first, sorted by name
  for (const auto& v : p->free_vars()) {
    int id = static_cast<int>(columns.size());
    columns[v] = id;
  }
  out.free_count = static_cast<int>(columns.size());
  const Formula* g = p.get();
  while (g->kind() == Conn::Exists || g->kind() == Conn::Forall) {
    out.exists_q.push_back(g->kind() == Conn::Exists);
    if (columns.count(g->var1())) {
      throw InputError("quantified variable shadows a column");
    }
    columns[g->var1()] = static_cast<int>(columns.size());
    g = g->lhs().get();
  }
  out.k = static_cast<int>(columns.size());
  if (out.k > 32) throw InputError("too many variables");
  out.matrix.k = out.k;
  compile_qf(*g, columns, out.matrix.code);
  return out;
}

}  // namespace ms0
