// Copyright 2026 The lqpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "lqp/error.hpp"
#include "lqp/parse.hpp"
#include "lqp/syntax.hpp"

using namespace lqp;

namespace {

std::mt19937 rng(777);

int pick(int n) {
  std::uniform_int_distribution<int> d(0, n - 1);
  return d(rng);
}

PPtr random_program(int depth);

FPtr random_formula(int depth) {
  if (depth <= 0) {
    switch (pick(5)) {
      case 0: return fconst("01+-"[pick(4)], 1 + pick(3));
      case 1: return fvar("p", {1, 2});
      case 2: return fvar("q", {});
      case 3: return fverum();
      default: return fent(pgate("X", {1}), 1 + pick(2), 3);
    }
  }
  switch (pick(12)) {
    case 0: return fnot(random_formula(depth - 1));
    case 1: return fand(random_formula(depth - 1), random_formula(depth - 1));
    case 2: return fbox(random_program(depth - 1), random_formula(depth - 1));
    case 3: return for_(random_formula(depth - 1), random_formula(depth - 1));
    case 4:
      return fimplies(random_formula(depth - 1), random_formula(depth - 1));
    case 5:
      return fqjoin(random_formula(depth - 1), random_formula(depth - 1));
    case 6: return fdia(random_program(depth - 1), random_formula(depth - 1));
    case 7:
      return fpostdia(random_program(depth - 1), random_formula(depth - 1));
    case 8: return fmdia(random_formula(depth - 1));
    case 9: return fmbox(random_formula(depth - 1));
    case 10: return fortho(random_formula(depth - 1));
    default: return ffalsum();
  }
}

PPtr random_program(int depth) {
  if (depth <= 0) {
    switch (pick(4)) {
      case 0: return pgate("X", {1 + pick(3)});
      case 1: return pgate("CNOT", {1, 2});
      case 2: return ptrivial();
      default: return pset0({1, 2});
    }
  }
  switch (pick(6)) {
    case 0: return ptest(random_formula(depth - 1));
    case 1: return padj(random_program(depth - 1));
    case 2:
      return pchoice(random_program(depth - 1), random_program(depth - 1));
    case 3: return pseq(random_program(depth - 1), random_program(depth - 1));
    case 4: return pstar(random_program(depth - 1));
    default: return pfirst(random_program(depth - 1));
  }
}

bool core_only(const FPtr& f);

bool core_only_p(const PPtr& p) {
  if (!p) return true;
  switch (p->k) {
    case PK::Set0:
    case PK::First:
      return false;
    case PK::Test:
      return core_only(p->f);
    default:
      return core_only_p(p->a) && core_only_p(p->b);
  }
}

bool core_only(const FPtr& f) {
  if (!f) return true;
  switch (f->k) {
    case FK::Const:
    case FK::Var:
    case FK::Entangle:
    case FK::Not:
    case FK::And:
    case FK::Box:
      return core_only(f->a) && core_only(f->b) && core_only_p(f->p);
    default:
      return false;
  }
}

bool adjoints_on_gates_only(const PPtr& p) {
  if (!p) return true;
  if (p->k == PK::Adjoint) return p->a->k == PK::Gate;
  return adjoints_on_gates_only(p->a) && adjoints_on_gates_only(p->b);
}

FPtr random_testable(int depth, int n);

PPtr random_deterministic(int depth, int n) {
  if (depth <= 0) return pgate("X", {1 + pick(n)});
  switch (pick(4)) {
    case 0: return ptest(random_testable(depth - 1, n));
    case 1: return padj(random_deterministic(depth - 1, n));
    case 2:
      return pseq(random_deterministic(depth - 1, n),
                  random_deterministic(depth - 1, n));
    default: return pgate("H", {1 + pick(n)});
  }
}

/// Generates along the testable grammar: false | c_i | E[pi](i,j) |
/// phi_t & phi_t | [pi]phi_t with deterministic pi.
FPtr random_testable(int depth, int n) {
  if (depth <= 0) {
    switch (pick(3)) {
      case 0: return ffalsum();
      case 1: return fconst("01+-"[pick(4)], 1 + pick(n));
      default:
        return n >= 2 ? fent(pgate("Z", {1}), 1, 2)
                      : fconst('1', 1);
    }
  }
  switch (pick(2)) {
    case 0:
      return fand(random_testable(depth - 1, n), random_testable(depth - 1, n));
    default:
      return fbox(random_deterministic(depth - 1, n),
                  random_testable(depth - 1, n));
  }
}

}  // namespace

TEST_CASE("parsing the concrete syntax") {
  FPtr f = parse_formula("[CNOT_{1,2}; H_1] +_1");
  FPtr want = fbox(pseq(pgate("CNOT", {1, 2}), pgate("H", {1})),
                   fconst('+', 1));
  CHECK(equal(f, want));

  FPtr e = parse_formula("E[Z_1; X_1](1,2)");
  CHECK(equal(e, fent(pseq(pgate("Z", {1}), pgate("X", {1})), 1, 2)));

  FPtr c = parse_formula("p_{1,3} & !q");
  CHECK(equal(c, fand(fvar("p", {1, 3}), fnot(fvar("q", {})))));

  // precedence: ! > & > (+) > \/ > ->, with -> right-associative
  FPtr prec = parse_formula("!p & q \\/ r -> s -> t");
  FPtr lhs = for_(fand(fnot(fvar("p", {})), fvar("q", {})), fvar("r", {}));
  CHECK(equal(prec, fimplies(lhs, fimplies(fvar("s", {}), fvar("t", {})))));

  PPtr prog = parse_program("X_1; Z_2 + (0_1 & 1_2)?; H_1*");
  PPtr want_p = pchoice(pseq(pgate("X", {1}), pgate("Z", {2})),
                        pseq(ptest(fand(fconst('0', 1), fconst('1', 2))),
                             pstar(pgate("H", {1}))));
  CHECK(equal(prog, want_p));

  CHECK(equal(parse_program("set0(2,3)"), pset0({2, 3})));
  CHECK(equal(parse_program("first(adj(X_1))"), pfirst(padj(pgate("X", {1})))));
  CHECK(equal(parse_formula("post<X_1> p"),
              fpostdia(pgate("X", {1}), fvar("p", {}))));

  CHECK_THROWS_AS(parse_formula("p &"), LqpError);
  CHECK_THROWS_AS(parse_formula("E[X_1](1,1)"), LqpError);
  CHECK_THROWS_AS(parse_formula("p_{1,1}"), LqpError);
  CHECK_THROWS_AS(parse_program("X_1 @"), LqpError);
}

TEST_CASE("printing round-trips the reference formulas") {
  for (const char* text : {"[CNOT_{1,2}; H_1] +_1", "E[Z_1; X_1](1,2)",
                           "p_{1,3} & !q"}) {
    FPtr f = parse_formula(text);
    CHECK(equal(parse_formula(print(f)), f));
  }
}

TEST_CASE("print/parse round trip on generated ASTs") {
  for (int trial = 0; trial < 400; ++trial) {
    FPtr f = random_formula(4);
    CAPTURE(print(f));
    FPtr back = parse_formula(print(f));
    CHECK(equal(f, back));
  }
  for (int trial = 0; trial < 200; ++trial) {
    PPtr p = random_program(4);
    CAPTURE(print(p));
    PPtr back = parse_program(print(p));
    CHECK(equal(p, back));
  }
}

TEST_CASE("desugaring") {
  int n = 2;
  // dia phi becomes the negation of a box over a test
  FPtr dia = desugar(parse_formula("dia p"), n);
  CHECK(dia->k == FK::Not);
  CHECK(dia->a->k == FK::Box);
  CHECK(dia->a->p->k == PK::Test);
  // bare variables resolve to the full index sequence
  CHECK(equal(desugar(parse_formula("p"), 3), fvar("p", {1, 2, 3})));
  // constants are atoms of the core language
  CHECK(equal(desugar(parse_formula("0_2"), n), fconst('0', 2)));
  // ~phi is the box-to-falsum form
  FPtr ortho = desugar(parse_formula("~ 1_1"), n);
  CHECK(ortho->k == FK::Box);
  CHECK(ortho->p->k == PK::Test);
  CHECK(equal(ortho->p->f, fconst('1', 1)));
  // set0 expands to reset choices
  PPtr reset = desugar(pset0({2}), n);
  PPtr want = pchoice(ptest(fconst('0', 2)),
                      pseq(ptest(fconst('1', 2)), pgate("X", {2})));
  CHECK(equal(reset, want));
  // first(pi) brackets pi with resets and tests of the other qubits
  PPtr fst = desugar(pfirst(pgate("X", {1})), 2);
  CHECK(equal(fst, pseq(pseq(desugar(pset0({2}), 2), pgate("X", {1})),
                        ptest(fconst('0', 2)))));
  // with a single qubit there is nothing to reset
  CHECK(equal(desugar(pfirst(pgate("X", {1})), 1), pgate("X", {1})));

  for (int trial = 0; trial < 200; ++trial) {
    FPtr f = random_formula(4);
    FPtr d = desugar(f, 3);
    CHECK(core_only(d));
    CHECK(equal(desugar(d, 3), d));  // idempotent
  }
}

TEST_CASE("classification") {
  int n = 2;
  auto cls = [&](const char* s) { return classify(desugar(parse_formula(s), n)); };
  CHECK(cls("[X_1] 1_1").testable);
  CHECK_FALSE(cls("!1_1").testable);
  CHECK_FALSE(cls("p_{1}").testable);
  CHECK(cls("false").testable);
  CHECK(cls("~ p").testable);          // desugars to a box-to-falsum
  CHECK(cls("box p").testable);        // likewise
  CHECK(cls("E[X_1](1,2)").testable);
  CHECK_FALSE(cls("[X_1* ] 1_1").testable);  // star is not deterministic

  ProgramClass pc = classify(desugar(parse_program("X_1; 0_2?"), n));
  CHECK(pc.deterministic);
  REQUIRE(pc.locality);
  CHECK(*pc.locality == std::set<int>{1, 2});

  CHECK_FALSE(classify(desugar(parse_program("X_1 + Z_1"), n)).deterministic);
  CHECK(classify(desugar(parse_program("top"), n)).deterministic);
  CHECK_FALSE(classify(desugar(parse_program("set0(1)"), n)).deterministic);

  // locality through grammar patterns
  auto loc = [&](const char* s) { return cls(s).locality; };
  CHECK(*loc("+_1") == std::set<int>{1});
  CHECK(*loc("p_{1,2} & 0_1") == std::set<int>{1, 2});
  CHECK(*loc("0_1 & !1_2") == std::set<int>{1, 2});       // difference
  CHECK(*loc("0_1 \\/ 1_1") == std::set<int>{1});         // disjunction
  CHECK(*loc("0_1 & [X_2] 0_2") == std::set<int>{1, 2});  // guarded box
  CHECK_FALSE(loc("!p_{1}").has_value());
  CHECK_FALSE(loc("[X_1] 0_1").has_value());  // a bare box is not local
  CHECK(*loc("E[Z_1; X_1](2,3)") == std::set<int>{2, 3});

  for (int trial = 0; trial < 300; ++trial) {
    FPtr f = random_testable(4, 2);
    CAPTURE(print(f));
    CHECK(classify(desugar(f, 2)).testable);
  }
}

TEST_CASE("relabeling") {
  CHECK(equal(relabel(parse_formula("+_1"), {1}, {3}), parse_formula("+_3")));
  FPtr e = parse_formula("E[Z_1; X_1](1,2)");
  CHECK(equal(relabel(e, {1, 2}, {2, 3}), parse_formula("E[Z_1; X_1](2,3)")));
  CHECK(equal(relabel(parse_formula("p_{1,2}"), {1, 2}, {2, 1}),
              parse_formula("p_{2,1}")));
  CHECK_THROWS_AS(relabel(parse_formula("+_1"), {1, 2}, {3}), LqpError);
  CHECK_THROWS_AS(relabel(parse_formula("+_3"), {1, 2}, {2, 1}), LqpError);
  CHECK_THROWS_AS(relabel(parse_formula("!p_{1}"), {1}, {2}), LqpError);
  // programs relabel through tests and gates
  PPtr p = parse_program("X_1; (0_1 & 1_2)?");
  CHECK(equal(relabel(p, {1, 2}, {3, 1}),
              parse_program("X_3; (0_3 & 1_1)?")));
}

TEST_CASE("adjoint normalization") {
  PPtr p = parse_program("adj(X_1; p?)");
  CHECK(equal(normalize_adjoint(p), parse_program("p?; adj(X_1)")));
  CHECK(equal(normalize_adjoint(parse_program("adj(p?)")),
              parse_program("p?")));
  CHECK(equal(normalize_adjoint(parse_program("adj(adj(X_1; Z_2))")),
              parse_program("X_1; Z_2")));
  CHECK(equal(normalize_adjoint(parse_program("adj(top)")),
              parse_program("top")));
  CHECK(equal(normalize_adjoint(parse_program("adj(X_1*)")),
              pstar(padj(pgate("X", {1})))));
  CHECK(equal(normalize_adjoint(parse_program("adj(X_1 + Z_1)")),
              pchoice(padj(pgate("X", {1})), padj(pgate("Z", {1})))));

  for (int trial = 0; trial < 200; ++trial) {
    PPtr q = desugar(random_program(4), 3);
    CHECK(adjoints_on_gates_only(normalize_adjoint_deep(q)));
  }
}

TEST_CASE("scalar and vector syntax") {
  CHECK(parse_scalar("1/2+1/2i") ==
        GaussianRational(Rational(1, 2), Rational(1, 2)));
  CHECK(parse_scalar("-1") == GaussianRational(-1));
  CHECK(parse_scalar("2i") == GaussianRational(Rational(0), Rational(2)));
  CHECK(parse_scalar("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(parse_scalar("1/2 + 1/2 i") ==
        GaussianRational(Rational(1, 2), Rational(1, 2)));
  CHECK(parse_scalar("1-2i") == GaussianRational(Rational(1), Rational(-2)));
  CHECK(parse_scalar("3/6") == GaussianRational(Rational(1, 2)));
  CHECK_THROWS_AS(parse_scalar("1/0"), LqpError);
  CHECK_THROWS_AS(parse_scalar("1+1"), LqpError);
  CHECK_THROWS_AS(parse_scalar(""), LqpError);

  Vec v = parse_vec("(1, 0, 1/2+1/2i, 0)");
  CHECK(v.dim() == 4);
  CHECK(v[2] == GaussianRational(Rational(1, 2), Rational(1, 2)));

  // printing round-trips through the parser
  for (long re = -3; re <= 3; ++re)
    for (long im = -3; im <= 3; ++im) {
      GaussianRational z(Rational(re, 2), Rational(im, 3));
      CHECK(parse_scalar(to_string(z)) == z);
    }
}

TEST_CASE("model files") {
  const char* text = R"(
# a two-qubit model
qubits 2
var A arity 1 = span { (1,0) }
var B arity 2 = span { (1,0,0,1), (0,1,1,0) }
gate R arity 1 = [[3,4],[-4,3]]
state plus0 = (1, 0, 1, 0)
)";
  ModelDecl decl = parse_model(text);
  Model m = elaborate(decl);
  CHECK(m.n == 2);
  CHECK(m.valuation.at("A").dim() == 1);
  CHECK(m.valuation.at("B").dim() == 2);
  CHECK(m.gate("R").scale == 25);
  CHECK(m.gate("CNOT").arity == 2);
  CHECK(m.states.at("plus0") == Ray::of(Vec{1, 0, 1, 0}));

  // an empty span declares the zero subspace
  Model mz = elaborate(parse_model("qubits 1\nvar Z arity 1 = span { }"));
  CHECK(mz.valuation.at("Z").is_zero());

  CHECK_THROWS_AS(parse_model("var A arity 1 = span { (1,0) }"), LqpError);
  CHECK_THROWS_AS(elaborate(parse_model("qubits 1\ngate X arity 1 = [[0,1],[1,0]]")),
                  LqpError);
  CHECK_THROWS_AS(elaborate(parse_model("qubits 1\ngate S arity 1 = [[1,1],[0,1]]")),
                  LqpError);
  CHECK_THROWS_AS(elaborate(parse_model("qubits 1\nvar A arity 1 = span { (1,0,0) }")),
                  LqpError);

  // validation of ASTs against the model
  Model m1 = elaborate(decl);
  validate_ast(parse_formula("A_{1} & B"), m1);
  CHECK_THROWS_AS(validate_ast(parse_formula("C_{1}"), m1), LqpError);
  CHECK_THROWS_AS(validate_ast(parse_formula("A_{1,2}"), m1), LqpError);
  CHECK_THROWS_AS(validate_ast(parse_formula("A"), m1), LqpError);
  CHECK_THROWS_AS(validate_ast(parse_formula("0_3"), m1), LqpError);
  CHECK_THROWS_AS(validate_ast(parse_program("R_{1,2}"), m1), LqpError);
  CHECK_THROWS_AS(validate_ast(parse_program("Q_1"), m1), LqpError);
}
