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

#include "lqp/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lqp/error.hpp"
#include "lqp/parse.hpp"
#include "lqp/syntax.hpp"

namespace lqp {

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

int SuiteReport::passed() const {
  int k = 0;
  for (const SuiteCase& c : cases) k += c.pass;
  return k;
}

int SuiteReport::failed() const {
  return static_cast<int>(cases.size()) - passed();
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite << " (seed " << seed << ", count " << count
     << ")\n";
  for (const SuiteCase& c : cases) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << "  "
       << c.description << "\n";
    if (c.counterexample)
      os << "         counterexample: " << *c.counterexample << "\n";
  }
  os << "summary: " << passed() << "/" << cases.size() << " passed\n";
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["count"] = count;
  j["cases"] = nlohmann::json::array();
  for (const SuiteCase& c : cases) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["verdict"] = c.pass ? "pass" : "fail";
    if (c.counterexample) jc["counterexample"] = *c.counterexample;
    j["cases"].push_back(jc);
  }
  j["summary"] = {{"total", cases.size()},
                  {"passed", passed()},
                  {"failed", failed()}};
  return j.dump(2) + "\n";
}

namespace {

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, const SampleConfig& cfg) : cfg_(cfg) {
    rep_.suite = std::move(name);
    rep_.seed = cfg.seed;
    rep_.count = cfg.count;
  }

  using CaseFn = std::function<std::optional<std::string>(Sampler&)>;

  void run(const std::string& id, const std::string& desc, const CaseFn& fn) {
    SuiteCase c;
    c.id = id;
    c.description = desc;
    Sampler s(cfg_.seed * 0x9E3779B97F4A7C15ULL + ++case_index_);
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (auto fail = fn(s)) {
        c.pass = false;
        c.counterexample = *fail;
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.counterexample = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    rep_.cases.push_back(std::move(c));
  }

  SuiteReport take() { return std::move(rep_); }

 private:
  SampleConfig cfg_;
  SuiteReport rep_;
  std::uint64_t case_index_ = 0;
};

std::string str(int n) { return std::to_string(n); }

FPtr iff(const FPtr& a, const FPtr& b) {
  return fand(fimplies(a, b), fimplies(b, a));
}

std::optional<std::string> expect_valid(const FPtr& goal, const Model& m,
                                        const std::string& what) {
  Verdict v = decide_valid(goal, m);
  if (v.value) return std::nullopt;
  std::string msg = what + ": '" + print(goal) + "' is not valid";
  if (v.witness) msg += "; falsified at " + to_string(*v.witness);
  return msg;
}

// ---------------------------------------------------------------------------
// Sampled syntax
// ---------------------------------------------------------------------------

const char kConsts[] = "01+-";

/// Symbolic test arguments over the builtin constants and the full-arity
/// variables declared by the caller.
FPtr rand_test_arg(Sampler& s, int n, const std::vector<std::string>& vars) {
  size_t kinds = vars.empty() ? 2 : 3;
  switch (s.pick(kinds)) {
    case 0:
      return fconst(kConsts[s.pick(4)], s.index(n));
    case 1: {
      FPtr a = fconst(kConsts[s.pick(4)], s.index(n));
      FPtr b = fconst(kConsts[s.pick(4)], s.index(n));
      return fand(a, b);
    }
    default:
      return fvar(vars[s.pick(vars.size())], {});
  }
}

PPtr rand_program(Sampler& s, int n, int depth,
                  const std::vector<std::string>& vars, bool allow_nondet) {
  if (depth <= 0) return sample_gate(s, n);
  switch (s.pick(allow_nondet ? 7 : 5)) {
    case 0: return sample_gate(s, n);
    case 1: return ptest(rand_test_arg(s, n, vars));
    case 2:
      return pseq(rand_program(s, n, depth - 1, vars, allow_nondet),
                  rand_program(s, n, depth - 1, vars, allow_nondet));
    case 3: return padj(rand_program(s, n, depth - 1, vars, allow_nondet));
    case 4: return sample_gate(s, n);
    case 5:
      return pchoice(rand_program(s, n, depth - 1, vars, allow_nondet),
                     rand_program(s, n, depth - 1, vars, allow_nondet));
    default:
      return pstar(sample_gate(s, n));  // single gates have finite ray order
  }
}

PPtr rand_det_program(Sampler& s, int n, int depth,
                      const std::vector<std::string>& vars) {
  return rand_program(s, n, depth, vars, false);
}

/// One-local deterministic programs at qubit 1: words over the builtin
/// gates and constant tests. All induced single-qubit maps are real-valued;
/// complex maps are sampled directly as matrices where needed.
PPtr rand_onelocal(Sampler& s, int depth) {
  if (depth <= 0) {
    switch (s.pick(4)) {
      case 0: return pgate("X", {1});
      case 1: return pgate("Z", {1});
      case 2: return pgate("H", {1});
      default: return ptest(fconst(kConsts[s.pick(4)], 1));
    }
  }
  switch (s.pick(3)) {
    case 0:
      return pseq(rand_onelocal(s, depth - 1), rand_onelocal(s, depth - 1));
    case 1: return padj(rand_onelocal(s, depth - 1));
    default: return rand_onelocal(s, 0);
  }
}

/// Symbolic and pointwise-evaluable formulas for the soundness check:
/// every atom is symbolic, no trivial program occurs, stars only enclose
/// single gates.
FPtr rand_symbolic(Sampler& s, int n, int depth,
                   const std::vector<std::string>& full_vars,
                   const std::vector<std::string>& ray_vars) {
  if (depth <= 0) {
    switch (s.pick(4)) {
      case 0: return fconst(kConsts[s.pick(4)], s.index(n));
      case 1: return fvar(full_vars[s.pick(full_vars.size())], {});
      case 2: return fvar(ray_vars[s.pick(ray_vars.size())], {s.index(n)});
      default: {
        auto ij = s.distinct_indices(2, n);
        return fent(rand_onelocal(s, 1), ij[0], ij[1]);
      }
    }
  }
  auto sub = [&](int d) {
    return rand_symbolic(s, n, d, full_vars, ray_vars);
  };
  switch (s.pick(10)) {
    case 0: return fnot(sub(depth - 1));
    case 1: return fand(sub(depth - 1), sub(depth - 1));
    case 2: return for_(sub(depth - 1), sub(depth - 1));
    case 3: return fimplies(sub(depth - 1), sub(depth - 1));
    case 4: return fqjoin(sub(depth - 1), sub(depth - 1));
    case 5: return fmbox(sub(depth - 1));
    case 6: return fmdia(sub(depth - 1));
    case 7: return fortho(sub(depth - 1));
    case 8:
      return fbox(rand_program(s, n, depth - 1, full_vars, true),
                  sub(depth - 1));
    default:
      return fdia(rand_program(s, n, depth - 1, full_vars, true),
                  sub(depth - 1));
  }
}

// ---------------------------------------------------------------------------
// Shared numeric helpers
// ---------------------------------------------------------------------------

Vec const_vec2(char c) {
  switch (c) {
    case '0': return Vec{1, 0};
    case '1': return Vec{0, 1};
    case '+': return Vec{1, 1};
    default: return Vec{1, -1};
  }
}

Vec bell_vec(int x, int y) {
  if (x == 0 && y == 0) return Vec{1, 0, 0, 1};
  if (x == 0 && y == 1) return Vec{0, 1, 1, 0};
  if (x == 1 && y == 0) return Vec{1, 0, 0, -1};
  return Vec{0, 1, -1, 0};
}

/// A sampled subspace of w (span of random coefficient combinations of its
/// basis); may be the zero subspace.
Subspace sub_subspace(Sampler& s, const Subspace& w, long height) {
  if (w.is_zero()) return w;
  std::vector<Vec> rows;
  long count = s.range(0, static_cast<long>(w.dim()));
  for (long k = 0; k < count; ++k) {
    Vec v(w.ambient());
    for (const Vec& b : w.basis())
      v = v + s.scalar(height) * b;
    if (!v.is_zero()) rows.push_back(v);
  }
  return Subspace::span(rows, w.ambient());
}

/// Product state over all n qubits with per-qubit factors drawn from
/// {|0>, |1>, |+>} according to `digits` (base-3).
Vec grid_state(const std::vector<int>& digits, int n) {
  static const Vec choices[3] = {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}};
  size_t dim = size_t{1} << n;
  Vec v(dim);
  for (size_t g = 0; g < dim; ++g) {
    GaussianRational prod(1);
    for (int q = 1; q <= n; ++q) {
      int bit = static_cast<int>((g >> (n - q)) & 1);
      prod = prod * choices[digits[q - 1]][bit];
    }
    v[g] = prod;
  }
  return v;
}

/// swaps the two qubits of a 4-entry coefficient vector
Vec swap2(const Vec& v) { return Vec{v[0], v[2], v[1], v[3]}; }

/// Places two 2-qubit factors at the ordered pairs (i,j) and (k,l), which
/// together cover all four qubits.
Vec two_pair_state(const Vec& psi_ij, int i, int j, const Vec& psi_kl, int k,
                   int l) {
  Vec rest = k < l ? psi_kl : swap2(psi_kl);
  return mu_tensor(psi_ij, rest, {i, j}, 4);
}

}  // namespace

// ---------------------------------------------------------------------------
// Protocol formulas
// ---------------------------------------------------------------------------

PPtr teleportation_program() {
  PPtr out;
  for (int x : {0, 1}) {
    for (int y : {0, 1}) {
      PPtr branch = pseq(pgate("CNOT", {1, 2}), pgate("H", {1}));
      branch = pseq(branch, ptest(fand(fconst(x ? '1' : '0', 1),
                                       fconst(y ? '1' : '0', 2))));
      if (y) branch = pseq(branch, pgate("X", {3}));
      if (x) branch = pseq(branch, pgate("Z", {3}));
      out = out ? pchoice(out, branch) : branch;
    }
  }
  return out;
}

FPtr bell_formula(int x, int y, int i, int j) {
  PPtr prog;
  if (x) prog = pgate("Z", {1});
  if (y) prog = prog ? pseq(prog, pgate("X", {1})) : pgate("X", {1});
  if (!prog) prog = pseq(pgate("X", {1}), pgate("X", {1}));  // identity map
  return fent(prog, i, j);
}

FPtr bell_characteristic_formula(int x, int y, int i, int j) {
  char yc = y ? '1' : '0';
  char yt = y ? '0' : '1';
  char sign = x ? '-' : '+';
  FPtr a = fdia(ptest(fconst('0', i)), fconst(yc, j));
  FPtr b = fdia(ptest(fconst('1', i)), fconst(yt, j));
  FPtr c = fdia(ptest(fconst('+', i)), fconst(sign, j));
  return fand(fand(a, b), c);
}

FPtr gamma_characteristic_formula(int i, int j) {
  FPtr a = fdia(ptest(fconst('0', i)), fconst('+', j));
  FPtr b = fdia(ptest(fconst('1', i)), fconst('+', j));
  FPtr c = fdia(ptest(fconst('+', i)), fconst('+', j));
  return fand(fand(a, b), c);
}

Verdict verify_teleportation(const FPtr& phi1, const Model& m) {
  if (m.n != 3)
    throw LqpError(Err::Arity, "teleportation verification needs n = 3");
  validate_ast(phi1, m);
  FPtr des = desugar(phi1, m.n);
  FormulaClass cls = classify(des);
  if (!cls.locality ||
      !std::all_of(cls.locality->begin(), cls.locality->end(),
                   [](int i) { return i == 1; }))
    throw LqpError(Err::NotTestableLocal,
                   "precondition must be local at qubit 1");
  NodalSet d = denote(normalize_adjoint_deep(des), m);
  if (!nodal_equal(d, NodalSet::of_subspace(d.closure())))
    throw LqpError(Err::NotTestableLocal,
                   "precondition must denote a testable property");
  FPtr phi3 = relabel(des, {1}, {3});
  FPtr goal = fimplies(fand(des, bell_formula(0, 0, 2, 3)),
                       fbox(teleportation_program(), phi3));
  return decide_valid(goal, m);
}

// ---------------------------------------------------------------------------
// Frame suite
// ---------------------------------------------------------------------------

SuiteReport run_frame_suite(const SampleConfig& cfg) {
  SuiteBuilder b("frame", cfg);
  const long h = cfg.height;
  const int count = cfg.count;

  for (int n : {1, 2, 3}) {
    const size_t dim = size_t{1} << n;

    b.run("test-partial-functionality/n=" + str(n),
          str(count) + " sampled (subspace, state, scalar) instantiations",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace w = s.subspace(dim, h);
              Vec v = s.vec(dim, h);
              GaussianRational c;
              do { c = s.scalar(h); } while (c.is_zero());
              auto p1 = project_ray(w, Ray::of(v));
              auto p2 = project_ray(w, Ray::of(c * v));
              if (p1.has_value() != p2.has_value() || (p1 && *p1 != *p2))
                return "test output depends on the representative of " +
                       to_string(Ray::of(v));
            }
            return std::nullopt;
          });

    b.run("trivial-tests/n=" + str(n),
          str(count) + " sampled states against the empty and full tests",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Ray r = s.ray(dim, h);
              if (project_ray(Subspace::zero(dim), r))
                return "empty test defined at " + to_string(r);
              auto p = project_ray(Subspace::full(dim), r);
              if (!p || *p != r) return "full test moved " + to_string(r);
            }
            return std::nullopt;
          });

    b.run("test-adequacy/n=" + str(n),
          str(count) + " sampled members project to themselves",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace w = s.subspace(dim, h);
              Vec v(dim);
              for (const Vec& bs : w.basis()) v = v + s.scalar(h) * bs;
              if (v.is_zero()) v = w.basis()[0];
              Ray r = Ray::of(v);
              auto p = project_ray(w, r);
              if (!p || *p != r)
                return "member " + to_string(r) + " not fixed by its test";
            }
            return std::nullopt;
          });

    b.run("test-repeatability/n=" + str(n),
          str(count) + " sampled test outputs lie in the tested subspace",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace w = s.subspace(dim, h);
              auto p = project_ray(w, s.ray(dim, h));
              if (p && !w.contains(*p))
                return "output " + to_string(*p) + " escapes " + to_string(w);
            }
            return std::nullopt;
          });

    b.run("test-compatibility/n=" + str(n),
          str(count) + " constructed commuting projector pairs compose to "
                       "the projector onto the meet",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace w = s.subspace(dim, h);
              std::vector<Vec> pieces = orthogonal_basis(w);
              for (const Vec& o : orthogonal_basis(orthocomplement(w)))
                pieces.push_back(o);
              std::vector<Vec> chosen;
              for (const Vec& o : pieces)
                if (s.coin()) chosen.push_back(o);
              Subspace v = Subspace::span(chosen, dim);
              Mat pw = projector_matrix(w), pv = projector_matrix(v);
              if (pw * pv != pv * pw)
                return "constructed pair does not commute";
              if (pw * pv != projector_matrix(meet(w, v)))
                return "composite of commuting tests is not the meet test (" +
                       to_string(w) + ", " + to_string(v) + ")";
            }
            return std::nullopt;
          });

    b.run("test-self-adjointness/n=" + str(n),
          str(count) + " sampled s ->(W?) w -> t chains reversed",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace w = s.subspace(dim, h);
              Ray sr = s.ray(dim, h);
              auto mid = project_ray(w, sr);
              if (!mid) continue;
              Ray tr = s.ray(dim, h);
              if (!measurement_related(*mid, tr)) continue;
              auto back = project_ray(w, tr);
              if (!back || !measurement_related(*back, sr))
                return "chain from " + to_string(sr) + " via " + to_string(w) +
                       " to " + to_string(tr) + " does not reverse";
            }
            return std::nullopt;
          });

    b.run("universal-accessibility/n=" + str(n),
          str(count) + " sampled state pairs joined by a superposition",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Ray x = s.ray(dim, h), y = s.ray(dim, h);
              Ray w = measurement_related(x, y)
                          ? x
                          : Ray::of(x.vec() + y.vec());
              if (!measurement_related(x, w) || !measurement_related(w, y))
                return "no two-step path from " + to_string(x) + " to " +
                       to_string(y);
            }
            return std::nullopt;
          });

    b.run("unitary-bijectivity/n=" + str(n),
          str(count) + " sampled gates are total with adjoint inverses",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            for (int t = 0; t < count; ++t) {
              PPtr g = sample_gate(s, n);
              Mat u = denote_deterministic(g, m);
              Mat udag = u.adjoint();
              Ray r = s.ray(dim, h);
              auto fwd = apply_to_ray(u, r);
              if (!fwd) return "gate undefined at " + to_string(r);
              auto back = apply_to_ray(udag, *fwd);
              if (!back || *back != r)
                return "adjoint does not invert " + print(g) + " at " +
                       to_string(r);
              auto fwd2 = apply_to_ray(udag, r);
              auto back2 = apply_to_ray(u, *fwd2);
              if (!back2 || *back2 != r)
                return "gate does not invert its adjoint at " + to_string(r);
            }
            return std::nullopt;
          });

    b.run("map-adjointness/n=" + str(n),
          str(count) + " sampled maps: s ->F w -> t iff t ->F+ v -> s",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            for (int t = 0; t < count; ++t) {
              PPtr prog = prepare(rand_det_program(s, n, 2, {}), m);
              Mat f = denote_deterministic(prog, m);
              Mat fdag = f.adjoint();
              Ray sr = s.ray(dim, h), tr = s.ray(dim, h);
              auto w = apply_to_ray(f, sr);
              bool lhs = w && measurement_related(*w, tr);
              auto v = apply_to_ray(fdag, tr);
              bool rhs = v && measurement_related(*v, sr);
              if (lhs != rhs)
                return "adjointness fails for " + print(prog) + " at " +
                       to_string(sr) + ", " + to_string(tr);
            }
            return std::nullopt;
          });

    b.run("adjointness-validity/n=" + str(n),
          str(count) + " sampled P and deterministic F: P <= [F]box<F+>dia P",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = make_model(n).with_var("p", s.subspace(dim, h));
              PPtr prog = rand_det_program(s, n, 2, {});
              FPtr goal = fimplies(
                  fvar("p", {}),
                  fbox(prog, fmbox(fdia(padj(prog), fmdia(fvar("p", {}))))));
              if (auto fail = expect_valid(goal, m, "corollary instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("closure-identities/n=" + str(n),
          str(count) + " sampled S: S-orth = [S?]false and closure = box dia S",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = make_model(n)
                            .with_var("p", s.subspace(dim, h))
                            .with_var("q", s.subspace(dim, h));
              const char* shapes[] = {"p", "p & q", "p \\/ q", "p & !q"};
              FPtr phi = parse_formula(shapes[s.pick(4)]);
              NodalSet d = denote(prepare(phi, m), m);
              Subspace closure = d.closure();
              NodalSet ortho = denote(prepare(fortho(phi), m), m);
              if (!nodal_equal(ortho, NodalSet::of_subspace(
                                          orthocomplement(closure))))
                return "orthocomplement identity fails for " + print(phi);
              NodalSet boxdia = denote(prepare(fmbox(fmdia(phi)), m), m);
              if (!nodal_equal(boxdia, NodalSet::of_subspace(closure)))
                return "closure identity fails for " + print(phi);
              NodalSet diacomp =
                  ncomplement(denote(prepare(fmdia(phi), m), m));
              if (!nodal_equal(diacomp, NodalSet::of_subspace(
                                            orthocomplement(closure))))
                return "diamond complement identity fails for " + print(phi);
            }
            return std::nullopt;
          });

    b.run("lattice-laws/n=" + str(n),
          str(count) + " sampled subspace triples satisfy the lattice laws",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace a = s.subspace(dim, h), b2 = s.subspace(dim, h),
                       c = s.subspace(dim, h);
              Subspace ac = orthocomplement(a);
              bool ok = meet(a, b2) == meet(b2, a) &&
                        join(a, b2) == join(b2, a) &&
                        meet(a, meet(b2, c)) == meet(meet(a, b2), c) &&
                        join(a, join(b2, c)) == join(join(a, b2), c) &&
                        join(a, meet(a, b2)) == a &&
                        meet(a, join(a, b2)) == a &&
                        orthocomplement(ac) == a &&
                        a.dim() + ac.dim() == dim && meet(a, ac).is_zero() &&
                        (!subspace_leq(a, b2) ||
                         subspace_leq(orthocomplement(b2), ac));
              if (!ok) return "lattice law fails at " + to_string(a);
            }
            return std::nullopt;
          });

    if (n >= 2) {
      b.run("entanglement-collapse/n=" + str(n),
            str(count) + " sampled maps f and basis states x: testing x at i "
                         "collapses j to f(x)",
            [=](Sampler& s) -> std::optional<std::string> {
              for (int t = 0; t < count; ++t) {
                Mat f = s.map2(h);
                auto ij = s.distinct_indices(2, n);
                int i = ij[0], j = ij[1];
                Vec x = const_vec2(kConsts[s.pick(3)]);  // 0, 1 or +
                Vec psi = map_state_psi(f);
                Vec rest = basis_vec(size_t{1} << (n - 2), s.pick(size_t{1} << (n - 2)));
                Ray state = Ray::of(mu_tensor(psi, rest, {i, j}, n));
                Subspace wx = local_state_property(x, {i}, n);
                auto proj = project_ray(wx, state);
                Vec fx = f.apply(x);
                if (fx.is_zero()) {
                  if (proj)
                    return "collapse defined although f(x) = 0 for " +
                           to_string(f);
                  continue;
                }
                if (!proj) return "collapse undefined for " + to_string(f);
                auto factor = factor_at(*proj, {j}, n);
                if (!factor || *factor != Ray::of(fx))
                  return "qubit " + str(j) + " not collapsed to f(x) for f = " +
                         to_string(f);
              }
              return std::nullopt;
            });

      b.run("disjoint-locality/n=" + str(n),
            str(count) + " sampled lifted maps on disjoint qubits commute",
            [=](Sampler& s) -> std::optional<std::string> {
              for (int t = 0; t < count; ++t) {
                auto ij = s.distinct_indices(2, n);
                Mat a = lift_local(s.map2(h), {ij[0]}, n);
                Mat bm = lift_local(s.map2(h), {ij[1]}, n);
                if (a * bm != bm * a)
                  return "disjoint lifts do not commute at n=" + str(n);
              }
              return std::nullopt;
            });

      b.run("local-agreement/n=" + str(n),
            str(count) + " sampled same-domain local map pairs agree outside "
                         "their qubits",
            [=](Sampler& s) -> std::optional<std::string> {
              for (int t = 0; t < count; ++t) {
                int isz = n >= 3 && s.coin() ? 2 : 1;
                std::vector<int> I = s.distinct_indices(isz, n);
                size_t ldim = size_t{1} << isz;
                Mat proj = projector_matrix(s.subspace(ldim, h));
                Mat a = s.unitary2(h);
                Mat b2 = s.unitary2(h);
                if (isz == 2) {
                  a = lift_local(a, {1}, 2) * lift_local(s.unitary2(h), {2}, 2);
                  b2 = lift_local(b2, {1}, 2) * lift_local(s.unitary2(h), {2}, 2);
                }
                Mat m1 = lift_local(a * proj, I, n);
                Mat m2 = lift_local(b2 * proj, I, n);
                Ray st = s.ray(dim, h);
                auto r1 = apply_to_ray(m1, st);
                auto r2 = apply_to_ray(m2, st);
                if (r1.has_value() != r2.has_value())
                  return "domains differ although kernels are shared";
                if (!r1) continue;
                for (int q = 1; q <= n; ++q) {
                  if (std::find(I.begin(), I.end(), q) != I.end()) continue;
                  auto f1 = factor_at(*r1, {q}, n);
                  auto f2 = factor_at(*r2, {q}, n);
                  if (f1.has_value() != f2.has_value() ||
                      (f1 && !(*f1 == *f2)))
                    return "outputs disagree at qubit " + str(q);
                }
              }
              return std::nullopt;
            });
    }
  }

  b.run("phase-counterexample",
        "identity and Z agree on 0 and 1 but differ on +",
        [](Sampler&) -> std::optional<std::string> {
          Mat id = Mat::identity(2);
          Mat z = builtin_gate("Z").m;
          for (char c : {'0', '1'}) {
            Ray r = Ray::of(const_vec2(c));
            if (*apply_to_ray(id, r) != *apply_to_ray(z, r))
              return "maps should agree on the basis state";
          }
          Ray plus = Ray::of(const_vec2('+'));
          if (*apply_to_ray(id, plus) == *apply_to_ray(z, plus))
            return "maps not distinguished by the superposition";
          if (proportional(id, z)) return "identity proportional to Z";
          return std::nullopt;
        });

  b.run("qubit-map-determinacy",
        str(cfg.count) + " sampled invertible map pairs: images on {0,1,+} "
                         "determine the ray map",
        [=](Sampler& s) -> std::optional<std::string> {
          for (int t = 0; t < count; ++t) {
            Mat a = s.unitary2(h);
            Mat bm = s.coin() ? s.unitary2(h) : s.scalar(h, false) * a;
            if (bm.is_zero()) bm = a;
            bool agree = true;
            for (char c : {'0', '1', '+'}) {
              Ray r = Ray::of(const_vec2(c));
              if (*apply_to_ray(a, r) != *apply_to_ray(bm, r)) agree = false;
            }
            if (agree != proportional(a, bm))
              return "grid agreement differs from proportionality for " +
                     to_string(a) + " vs " + to_string(bm);
          }
          return std::nullopt;
        });

  // Entanglement composition oracle at n = 4 (the dagger placement).
  for (bool real : {true, false}) {
    std::string id = std::string("composition-oracle-") + (real ? "real" : "complex");
    b.run(id,
          str(count) + (real ? " real" : " complex") +
              " sampled map tuples executed by brute-force tensor calculus",
          [=](Sampler&) -> std::optional<std::string> {
            CompositionReport r = run_composition_oracle(cfg, real);
            if (r.matched_corrected != r.executed)
              return "corrected form matched only " +
                     str(r.matched_corrected) + "/" + str(r.executed);
            if (real && r.matched_axiom != r.executed)
              return "axiom-side dagger placement failed on real samples: " +
                     str(r.matched_axiom) + "/" + str(r.executed);
            if (r.matched_lemma == r.executed && r.executed > 0)
              return "expected the lemma-side dagger placement to fail on "
                     "some sample (discrepancy not demonstrated)";
            return std::nullopt;
          });
  }

  return b.take();
}

std::string CompositionReport::summary() const {
  std::ostringstream os;
  os << executed << " executed tuples: corrected composite matched "
     << matched_corrected << ", k-side dagger matched " << matched_axiom
     << ", j-side dagger matched " << matched_lemma;
  return os.str();
}

CompositionReport run_composition_oracle(const SampleConfig& cfg, bool real) {
  Sampler s(cfg.seed * 0xD1B54A32D192ED03ULL + (real ? 1 : 2));
  const long h = cfg.height;
  CompositionReport rep;
  rep.samples = cfg.count;
  for (int t = 0; t < cfg.count; ++t) {
    Mat f = s.map2(h, real), g = s.map2(h, real), hm = s.map2(h, real),
        u = s.map2(h, real), v = s.map2(h, real);
    std::vector<int> perm = s.distinct_indices(4, 4);
    int i = perm[0], j = perm[1], k = perm[2], l = perm[3];
    // state with psi(F) at (i,j) and psi(H) at (k,l), i.e. a member of
    // the intersection of the two entanglement properties
    Vec state = two_pair_state(map_state_psi(f), i, j, map_state_psi(hm), k, l);
    Vec moved = lift_local(v, {k}, 4).apply(lift_local(u, {j}, 4).apply(state));
    Mat projector =
        projector_matrix(local_state_property(map_state_psi(g), {j, k}, 4));
    Vec projected = projector.apply(moved);
    Mat corrected = hm * v.transpose() * g.conjugate() * u * f;
    Mat axiom_form = hm * v.adjoint() * g * u * f;
    Mat lemma_form = hm * u.adjoint() * g * v * f;
    if (projected.is_zero()) {
      if (!corrected.is_zero())
        throw std::logic_error(
            "projection vanished although the corrected composite is nonzero");
      continue;
    }
    ++rep.executed;
    auto factor = factor_at(Ray::of(projected), {i, l}, 4);
    if (!factor)
      throw std::logic_error("executed output pair did not separate");
    Ray out = *factor;
    if (!corrected.is_zero() && out == Ray::of(map_state_psi(corrected)))
      ++rep.matched_corrected;
    if (!axiom_form.is_zero() && out == Ray::of(map_state_psi(axiom_form)))
      ++rep.matched_axiom;
    if (!lemma_form.is_zero() && out == Ray::of(map_state_psi(lemma_form)))
      ++rep.matched_lemma;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Axiom suite
// ---------------------------------------------------------------------------

namespace {

/// Replaces every occurrence of the named variable by the given formula.
FPtr substitute(const FPtr& f, const std::string& name, const FPtr& repl) {
  if (!f) return f;
  if (f->k == FK::Var && f->var == name) return repl;
  auto g = std::make_shared<Formula>(*f);
  g->a = substitute(f->a, name, repl);
  g->b = substitute(f->b, name, repl);
  if (f->p) {
    auto subp = [&](const PPtr& p, auto&& self) -> PPtr {
      if (!p) return p;
      auto q = std::make_shared<Program>(*p);
      q->a = self(p->a, self);
      q->b = self(p->b, self);
      if (p->f) q->f = substitute(p->f, name, repl);
      return q;
    };
    g->p = subp(f->p, subp);
  }
  return g;
}

}  // namespace

SuiteReport run_axiom_suite(const SampleConfig& cfg) {
  SuiteBuilder b("axioms", cfg);
  const long h = cfg.height;
  const int count = cfg.count;
  const std::vector<std::string> pq = {"p", "q"};

  for (int n : {2, 3}) {
    const size_t dim = size_t{1} << n;

    auto sampled_model = [=](Sampler& s) {
      return make_model(n)
          .with_var("p", s.subspace(dim, h))
          .with_var("q", s.subspace(dim, h));
    };

    b.run("kripke/n=" + str(n),
          str(count) + " sampled (p, q, program) instantiations",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = sampled_model(s);
              PPtr prog = rand_program(s, n, 2, pq, true);
              FPtr goal = fimplies(
                  fbox(prog, fimplies(fvar("p", {}), fvar("q", {}))),
                  fimplies(fbox(prog, fvar("p", {})),
                           fbox(prog, fvar("q", {}))));
              if (auto fail = expect_valid(goal, m, "kripke instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("necessitation/n=" + str(n),
          str(count) + " programs applied to the full-space valuation",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n).with_var("p", Subspace::full(dim));
            for (int t = 0; t < count; ++t) {
              PPtr prog = rand_program(s, n, 2, {"p"}, true);
              if (auto fail = expect_valid(fbox(prog, fvar("p", {})), m,
                                           "necessitation instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("test-generalization/n=" + str(n),
          str(count) + " premise-satisfying (p <= box r) instantiations, "
                       "each premise spot-checked on 3 sampled tests",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = make_model(n).with_var("r", s.subspace(dim, h));
              Subspace boxr =
                  denote(prepare(fmbox(fvar("r", {})), m), m).closure();
              m = m.with_var("p", sub_subspace(s, boxr, h));
              for (int qi = 0; qi < 3; ++qi) {
                Model mq = m.with_var("q", s.subspace(dim, h));
                FPtr premise = fimplies(
                    fvar("p", {}), fbox(ptest(fvar("q", {})), fvar("r", {})));
                if (auto fail = expect_valid(premise, mq,
                                             "generalization premise"))
                  return fail;
              }
              FPtr concl = fimplies(fvar("p", {}), fmbox(fvar("r", {})));
              if (auto fail = expect_valid(concl, m,
                                           "generalization conclusion"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("testability/n=" + str(n),
          str(count) + " sampled (p, q) instantiations of box p -> [q?]p",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = sampled_model(s);
              FPtr goal = fimplies(fmbox(fvar("p", {})),
                                   fbox(ptest(fvar("q", {})), fvar("p", {})));
              if (auto fail = expect_valid(goal, m, "testability instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("partial-functionality/n=" + str(n),
          str(count) + " sampled (p, q) instantiations",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = sampled_model(s);
              FPtr box = fbox(ptest(fvar("p", {})), fvar("q", {}));
              FPtr boxneg = fbox(ptest(fvar("p", {})), fnot(fvar("q", {})));
              if (auto fail = expect_valid(fimplies(fnot(box), boxneg), m,
                                           "partial functionality"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("adequacy/n=" + str(n),
          str(count) + " sampled (p, q) instantiations of p & q -> <p?>q",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = sampled_model(s);
              FPtr goal = fimplies(fand(fvar("p", {}), fvar("q", {})),
                                   fdia(ptest(fvar("p", {})), fvar("q", {})));
              if (auto fail = expect_valid(goal, m, "adequacy instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("repeatability/n=" + str(n),
          str(count) + " generated testable formulas satisfy [phi?]phi "
                       "(semantic form)",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            for (int t = 0; t < count; ++t) {
              FPtr phi = sample_testable_formula(s, n, 2);
              if (auto fail = expect_valid(fbox(ptest(phi), phi), m,
                                           "repeatability instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("universal-accessibility/n=" + str(n),
          str(count) + " sampled (p, programs) instantiations",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = make_model(n).with_var(
                  "p", s.coin() ? Subspace::full(dim) : s.subspace(dim, h));
              PPtr pi = rand_program(s, n, 1, {}, true);
              PPtr pi2 = rand_program(s, n, 1, {}, true);
              FPtr goal =
                  fimplies(fdia(pi, fmbox(fmbox(fvar("p", {})))),
                           fbox(pi2, fvar("p", {})));
              if (auto fail = expect_valid(goal, m, "accessibility instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("unitary-functionality/n=" + str(n),
          str(count) + " sampled gates: ![U]q <-> [U]!q",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = make_model(n).with_var("q", s.subspace(dim, h));
              PPtr u = sample_gate(s, n);
              FPtr goal = iff(fnot(fbox(u, fvar("q", {}))),
                              fbox(u, fnot(fvar("q", {}))));
              if (auto fail = expect_valid(goal, m, "functionality instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("unitary-bijectivity/n=" + str(n),
          str(count) + " sampled gates: p <-> [U;U+]p and p <-> [U+;U]p",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = make_model(n).with_var("p", s.subspace(dim, h));
              PPtr u = sample_gate(s, n);
              FPtr p = fvar("p", {});
              FPtr g1 = iff(p, fbox(pseq(u, padj(u)), p));
              FPtr g2 = iff(p, fbox(pseq(padj(u), u), p));
              if (auto fail = expect_valid(fand(g1, g2), m,
                                           "bijectivity instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("adjointness/n=" + str(n),
          str(count) + " sampled (p, program): p -> [pi]box<pi+>dia p",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Model m = sampled_model(s);
              PPtr prog = rand_program(s, n, 2, pq, true);
              FPtr goal = fimplies(
                  fvar("p", {}),
                  fbox(prog, fmbox(fdia(padj(prog), fmdia(fvar("p", {}))))));
              if (auto fail = expect_valid(goal, m, "adjointness instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("substitution/n=" + str(n),
          str(count) + " valid schemes stay valid under local substitution",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              int i = s.index(n);
              Model m = make_model(n)
                            .with_var("p", Subspace::line(s.ray(2, h)))
                            .with_var("q", s.subspace(dim, h))
                            .with_var("r", Subspace::line(s.ray(2, h)));
              FPtr theta = fimplies(
                  fmbox(fvar("p", {i})),
                  fbox(ptest(fvar("q", {})), fvar("p", {i})));
              if (auto fail = expect_valid(theta, m, "substitution scheme"))
                return fail;
              FPtr phi = s.coin() ? fconst(kConsts[s.pick(4)], i)
                                  : fvar("r", {i});
              if (auto fail = expect_valid(substitute(theta, "p", phi), m,
                                           "substituted scheme"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("compatibility-rule/n=" + str(n),
          str(count) + " commuting test pairs: <w?;v?>p -> <(w&v)?>p "
                       "(semantic form)",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              Subspace w = s.subspace(dim, h);
              std::vector<Vec> pieces = orthogonal_basis(w);
              for (const Vec& o : orthogonal_basis(orthocomplement(w)))
                pieces.push_back(o);
              std::vector<Vec> chosen;
              for (const Vec& o : pieces)
                if (s.coin()) chosen.push_back(o);
              Subspace v = Subspace::span(chosen, dim);
              if (projector_matrix(w) * projector_matrix(v) !=
                  projector_matrix(v) * projector_matrix(w))
                return "constructed tests do not commute";
              Model m = make_model(n)
                            .with_var("w", w)
                            .with_var("v", v)
                            .with_var("p", s.subspace(dim, h));
              FPtr lhs = fdia(pseq(ptest(fvar("w", {})), ptest(fvar("v", {}))),
                              fvar("p", {}));
              FPtr rhs = fdia(ptest(fand(fvar("w", {}), fvar("v", {}))),
                              fvar("p", {}));
              if (auto fail = expect_valid(fimplies(lhs, rhs), m,
                                           "compatibility instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("atomicity-weak/n=" + str(n),
          str(count) + " sampled constants and ray-valued p at one qubit",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              int i = s.index(n);
              char c = kConsts[s.pick(4)];
              Model m = make_model(n).with_var("p", Subspace::line(s.ray(2, h)));
              FPtr ci = fconst(c, i);
              FPtr pi = fvar("p", {i});
              FPtr goal = fimplies(fand(ci, pi),
                                   fmbox(fmbox(fimplies(ci, pi))));
              if (auto fail = expect_valid(goal, m, "weak atomicity"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("atomicity-strong/n=" + str(n),
          str(count) + " sampled constant tuples and p_I (symbolic for "
                       "dim 1 or full index set; pointwise semantic form "
                       "for separation-style valuations)",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              const int k = 2;
              std::vector<int> I = s.distinct_indices(k, n);
              char c1 = kConsts[s.pick(4)], c2 = kConsts[s.pick(4)];
              FPtr conj = fand(fconst(c1, I[0]), fconst(c2, I[1]));
              Vec cvec = mu_tensor(const_vec2(c1), const_vec2(c2), {1}, 2);
              bool symbolic = (k == n) || s.coin();
              Subspace val = symbolic && k < n
                                 ? Subspace::line(s.ray(size_t{1} << k, h))
                                 : s.subspace(size_t{1} << k, h);
              Model m = make_model(n).with_var("p", val);
              FPtr pI = fvar("p", I);
              if (k == n || val.dim() == 1) {
                FPtr goal = fimplies(fand(conj, pI),
                                     fmbox(fmbox(fimplies(conj, pI))));
                if (auto fail = expect_valid(goal, m, "strong atomicity"))
                  return fail;
              } else {
                // pointwise semantic form, justified by two-step universal
                // accessibility: the consequent box-box holds iff the inner
                // implication is valid.
                bool lhs_holds = val.contains(Vec(cvec));
                FPtr inner = fimplies(conj, pI);
                FPtr des = prepare(inner, m);
                for (int u = 0; u < 10; ++u) {
                  Ray st = u % 2 == 0
                               ? Ray::of(mu_tensor(cvec,
                                                   s.vec(size_t{1} << (n - k), h),
                                                   I, n))
                               : s.ray(dim, h);
                  if (lhs_holds && !holds_at(st, des, m))
                    return "pointwise strong atomicity fails at " +
                           to_string(st);
                }
              }
            }
            return std::nullopt;
          });

    b.run("proper-superposition/n=" + str(n),
          "all qubits, both superposition constants, plus " + str(count) +
              " sampled pointwise states (semantic form: the printed box "
              "is read as a diamond)",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            for (int i = 1; i <= n; ++i) {
              for (char c : {'+', '-'}) {
                FPtr goal = fimplies(fconst(c, i),
                                     fand(fmdia(fconst('0', i)),
                                          fmdia(fconst('1', i))));
                if (auto fail = expect_valid(goal, m, "superposition axiom"))
                  return fail;
                FPtr des = prepare(goal, m);
                for (int t = 0; t < count / (2 * n) + 1; ++t) {
                  Ray st = s.ray(dim, h);
                  if (!holds_at(st, des, m))
                    return "pointwise check fails at " + to_string(st);
                }
              }
            }
            return std::nullopt;
          });

    b.run("constants-testable/n=" + str(n),
          "box dia c -> c for c in {1, +} on all qubits, plus " + str(count) +
              " sampled pointwise states",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            for (int i = 1; i <= n; ++i) {
              for (char c : {'1', '+'}) {
                FPtr goal = fimplies(fmbox(fmdia(fconst(c, i))), fconst(c, i));
                if (auto fail = expect_valid(goal, m, "constant testability"))
                  return fail;
                FPtr des = prepare(goal, m);
                for (int t = 0; t < count / (2 * n) + 1; ++t) {
                  Ray st = s.ray(dim, h);
                  if (!holds_at(st, des, m))
                    return "pointwise check fails at " + to_string(st);
                }
              }
            }
            return std::nullopt;
          });

    b.run("determinacy/n=" + str(n),
          str(count) + " sampled unitary program pairs: agreement on the "
                       "3^n product-state grid iff equal ray maps "
                       "(semantic form of the printed axiom)",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            // gate-only words, so the maps are invertible
            auto gate_word = [&](Sampler& sp) {
              PPtr w = sample_gate(sp, n);
              long extra = sp.range(0, 2);
              for (long e = 0; e < extra; ++e) w = pseq(w, sample_gate(sp, n));
              return w;
            };
            for (int t = 0; t < count; ++t) {
              PPtr a = gate_word(s);
              PPtr bprog;
              if (s.coin()) {
                // equal ray maps by construction: pad with a squared gate
                int i = s.index(n);
                bprog = pseq(a, pseq(pgate("H", {i}), pgate("H", {i})));
              } else {
                bprog = gate_word(s);
              }
              Mat ma = denote_deterministic(prepare(a, m), m);
              Mat mb = denote_deterministic(prepare(bprog, m), m);
              bool agree = true;
              std::vector<int> digits(n, 0);
              while (true) {
                Ray st = Ray::of(grid_state(digits, n));
                auto ra = apply_to_ray(ma, st);
                auto rb = apply_to_ray(mb, st);
                if (ra.has_value() != rb.has_value() || (ra && !(*ra == *rb)))
                  agree = false;
                int d = 0;
                while (d < n && ++digits[d] == 3) digits[d++] = 0;
                if (d == n) break;
              }
              if (agree != proportional(ma, mb))
                return "grid agreement differs from ray-map equality for " +
                       print(a) + " vs " + print(bprog);
            }
            return std::nullopt;
          });

    b.run("agreement/n=" + str(n),
          str(count) + " same-domain local program pairs agree on outside "
                       "qubits (via ray-valued p_J)",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              int i = s.index(n);
              int jq = s.index(n);
              while (jq == i) jq = s.index(n);
              // pi acts at qubit i; pi2 = pi followed by an invertible
              // local map, so domains coincide
              PPtr pi = relabel(rand_onelocal(s, 2), {1}, {i});
              PPtr extra = relabel(rand_onelocal(s, 0), {1}, {i});
              while (extra->k == PK::Test)
                extra = relabel(rand_onelocal(s, 0), {1}, {i});
              PPtr pi2 = pseq(pi, extra);
              Model m = make_model(n).with_var("p", Subspace::line(s.ray(2, h)));
              FPtr goal = iff(fdia(pi, fvar("p", {jq})),
                              fdia(pi2, fvar("p", {jq})));
              if (auto fail = expect_valid(goal, m, "agreement instance"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("disjoint-compatibility/n=" + str(n),
          str(count) + " disjoint local programs commute under the box",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              auto ij = s.distinct_indices(2, n);
              PPtr pi = relabel(rand_onelocal(s, 1), {1}, {ij[0]});
              PPtr pj = relabel(rand_onelocal(s, 1), {1}, {ij[1]});
              Model m = make_model(n).with_var("p", s.subspace(dim, h));
              FPtr goal = iff(fbox(pseq(pi, pj), fvar("p", {})),
                              fbox(pseq(pj, pi), fvar("p", {})));
              if (auto fail = expect_valid(goal, m, "disjoint compatibility"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("entanglement-rule/n=" + str(n),
          str(count) + " premise-valid instantiations (real test states): "
                       "from p1 -> [pi_(1)]q1 infer E[pi](i,j) -> [p_i?]q_j",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              PPtr pi = rand_onelocal(s, 2);
              Ray x = s.ray(2, h, /*real=*/true);
              Model m0 = make_model(n);
              Mat f = restrict_first(
                  denote_deterministic(prepare(pi, m0), m0), n);
              Vec fx = f.apply(x.vec());
              Subspace qval = fx.is_zero() ? Subspace::zero(2)
                                           : Subspace::line(Ray::of(fx));
              Model m = m0.with_var("p", Subspace::line(x)).with_var("q", qval);
              FPtr premise = fimplies(fvar("p", {1}),
                                      fbox(pfirst(pi), fvar("q", {1})));
              if (auto fail = expect_valid(premise, m, "rule premise"))
                return fail;
              auto ij = s.distinct_indices(2, n);
              FPtr concl = fimplies(
                  fent(pi, ij[0], ij[1]),
                  fbox(ptest(fvar("p", {ij[0]})), fvar("q", {ij[1]})));
              if (auto fail = expect_valid(concl, m, "rule conclusion"))
                return fail;
            }
            return std::nullopt;
          });

    b.run("trivial-entanglement/n=" + str(n),
          str(count) + " pointwise states: p_{i,j} implies the separation "
                       "property (strict reading, checked pointwise)",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              auto ij = s.distinct_indices(2, n);
              Model m = make_model(n).with_var("p", s.subspace(4, h));
              FPtr pij = fvar("p", ij);
              FPtr sep = fent(ptrivial(), ij[0], ij[1]);
              Ray st = s.coin()
                           ? Ray::of(mu_tensor(s.vec(4, h),
                                               s.vec(size_t{1} << (n - 2), h),
                                               ij, n))
                           : s.ray(dim, h);
              FPtr desp = prepare(pij, m);
              FPtr dese = prepare(sep, m);
              if (holds_at(st, desp, m) && !holds_at(st, dese, m))
                return "separation missing at " + to_string(st);
            }
            return std::nullopt;
          });

    b.run("gates-xzh/n=" + str(n),
          "the nine X/Z/H axioms on every qubit, plus " + str(count) +
              " sampled pointwise states",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            struct Row { const char* g; char from, to; };
            const Row rows[] = {{"X", '0', '1'}, {"X", '1', '0'},
                                {"X", '+', '+'}, {"Z", '0', '0'},
                                {"Z", '1', '1'}, {"Z", '+', '-'},
                                {"H", '0', '+'}, {"H", '1', '-'},
                                {"H", '+', '0'}};
            for (int i = 1; i <= n; ++i) {
              for (const Row& r : rows) {
                FPtr goal = fimplies(fconst(r.from, i),
                                     fbox(pgate(r.g, {i}), fconst(r.to, i)));
                if (auto fail = expect_valid(goal, m, "gate axiom"))
                  return fail;
                FPtr des = prepare(goal, m);
                for (int t = 0; t < count / (9 * n) + 1; ++t) {
                  Ray st = s.ray(dim, h);
                  if (!holds_at(st, des, m))
                    return "gate axiom fails pointwise at " + to_string(st);
                }
              }
            }
            return std::nullopt;
          });

    b.run("gates-cnot/n=" + str(n),
          "the seven CNOT axiom schemas on every ordered pair, plus " +
              str(count) + " sampled pointwise states",
          [=](Sampler& s) -> std::optional<std::string> {
            Model m = make_model(n);
            for (int i = 1; i <= n; ++i) {
              for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                PPtr cnot = pgate("CNOT", {i, j});
                std::vector<FPtr> goals;
                for (char c : {'0', '1', '+', '-'})
                  goals.push_back(fimplies(fand(fconst('0', i), fconst(c, j)),
                                           fbox(cnot, fconst(c, j))));
                goals.push_back(
                    fimplies(fand(fconst('1', i), fconst('0', j)),
                             fbox(cnot, fconst('1', j))));
                goals.push_back(
                    fimplies(fand(fconst('1', i), fconst('1', j)),
                             fbox(cnot, fconst('0', j))));
                goals.push_back(
                    fimplies(fand(fconst('1', i), fconst('+', j)),
                             fbox(cnot, fconst('+', j))));
                goals.push_back(
                    fimplies(fand(fconst('+', i), fconst('0', j)),
                             fbox(cnot, bell_formula(0, 0, i, j))));
                goals.push_back(
                    fimplies(fand(fconst('+', i), fconst('1', j)),
                             fbox(cnot, bell_formula(0, 1, i, j))));
                goals.push_back(
                    fimplies(fand(fconst('+', i), fconst('+', j)),
                             fbox(cnot, gamma_characteristic_formula(i, j))));
                for (const FPtr& goal : goals) {
                  if (auto fail = expect_valid(goal, m, "CNOT axiom"))
                    return fail;
                }
                FPtr des = prepare(goals[s.pick(goals.size())], m);
                for (int t = 0; t < count / (2 * n * n) + 1; ++t) {
                  Ray st = s.ray(dim, h);
                  if (!holds_at(st, des, m))
                    return "CNOT axiom fails pointwise at " + to_string(st);
                }
              }
            }
            return std::nullopt;
          });

    b.run("gates-frame-invariance/n=" + str(n),
          str(count) + " sampled ray-valued p_K with gates on disjoint "
                       "qubits: p_K -> [U_I]p_K",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int t = 0; t < count; ++t) {
              int k = s.index(n);
              Model m = make_model(n).with_var("p", Subspace::line(s.ray(2, h)));
              PPtr u;
              do {
                u = sample_gate(s, n);
              } while (std::find(u->idx.begin(), u->idx.end(), k) !=
                       u->idx.end());
              FPtr goal = fimplies(fvar("p", {k}), fbox(u, fvar("p", {k})));
              if (auto fail = expect_valid(goal, m, "frame invariance"))
                return fail;
            }
            return std::nullopt;
          });
  }

  // Entanglement composition at n = 4, real samples; the dagger placement
  // follows the brute-force oracle (see the frame suite).
  b.run("entanglement-composition/n=4",
        str(cfg.count) + " real sampled 1-local program tuples over "
                         "sampled index permutations",
        [=](Sampler& s) -> std::optional<std::string> {
          Model m = make_model(4);
          for (int t = 0; t < cfg.count; ++t) {
            PPtr pi = rand_onelocal(s, 1);
            PPtr pi2 = rand_onelocal(s, 1);
            PPtr pi3 = rand_onelocal(s, 1);
            PPtr sigma = rand_onelocal(s, 1);
            PPtr rho = rand_onelocal(s, 1);
            std::vector<int> p4 = s.distinct_indices(4, 4);
            int i = p4[0], j = p4[1], k = p4[2], l = p4[3];
            FPtr premise = fand(fent(pi, i, j), fent(pi2, k, l));
            PPtr prog = pseq(pseq(relabel(sigma, {1}, {j}),
                                  relabel(rho, {1}, {k})),
                             ptest(fent(pi3, j, k)));
            PPtr composite =
                pseq(pseq(pseq(pseq(pi, sigma), pi3), padj(rho)), pi2);
            FPtr goal = fimplies(premise, fbox(prog, fent(composite, i, l)));
            if (auto fail = expect_valid(goal, m, "composition instance"))
              return fail;
          }
          return std::nullopt;
        });

  return b.take();
}

// ---------------------------------------------------------------------------
// Bell suite
// ---------------------------------------------------------------------------

SuiteReport run_bell_suite(const SampleConfig& cfg) {
  SuiteBuilder b("bell", cfg);
  const long h = cfg.height;

  for (int n : {2, 3}) {
    Model m = make_model(n);
    b.run("denotation/n=" + str(n),
          "all four Bell formulas at every ordered index pair denote the "
          "literal Bell subspaces",
          [=](Sampler&) -> std::optional<std::string> {
            for (int x : {0, 1})
              for (int y : {0, 1})
                for (int i = 1; i <= n; ++i)
                  for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    NodalSet d =
                        denote(prepare(bell_formula(x, y, i, j), m), m);
                    Subspace lit =
                        local_state_property(bell_vec(x, y), {i, j}, n);
                    if (!nodal_equal(d, NodalSet::of_subspace(lit)))
                      return "beta_" + str(x) + str(y) + " at (" + str(i) +
                             "," + str(j) + ") denotes the wrong subspace";
                  }
            return std::nullopt;
          });

    b.run("characteristic/n=" + str(n),
          "each characteristic formula is implied by its Bell formula and "
          "holds exactly on the Bell subspace",
          [=](Sampler&) -> std::optional<std::string> {
            for (int x : {0, 1})
              for (int y : {0, 1})
                for (int i = 1; i <= n; ++i)
                  for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    FPtr bf = bell_formula(x, y, i, j);
                    FPtr cf = bell_characteristic_formula(x, y, i, j);
                    if (auto fail = expect_valid(fimplies(bf, cf), m,
                                                 "characteristic implication"))
                      return fail;
                    NodalSet dc = denote(prepare(cf, m), m);
                    Subspace lit =
                        local_state_property(bell_vec(x, y), {i, j}, n);
                    if (!nodal_equal(dc, NodalSet::of_subspace(lit)))
                      return "characteristic formula of beta_" + str(x) +
                             str(y) + " is not exact at (" + str(i) + "," +
                             str(j) + ")";
                  }
            return std::nullopt;
          });

    b.run("bell-preparation/n=" + str(n),
          "H_i; CNOT_ij maps each x_i & y_j subspace onto the Bell subspace",
          [=](Sampler&) -> std::optional<std::string> {
            for (int x : {0, 1})
              for (int y : {0, 1})
                for (int i = 1; i <= n; ++i)
                  for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    Mat prep = lift_local(builtin_gate("CNOT").m, {i, j}, n) *
                               lift_local(builtin_gate("H").m, {i}, n);
                    Vec xy = mu_tensor(const_vec2(x ? '1' : '0'),
                                       const_vec2(y ? '1' : '0'), {1}, 2);
                    Subspace src = local_state_property(xy, {i, j}, n);
                    Subspace lit =
                        local_state_property(bell_vec(x, y), {i, j}, n);
                    if (image(prep, src) != lit)
                      return "preparation image mismatch at (" + str(i) + "," +
                             str(j) + ") for x=" + str(x) + " y=" + str(y);
                    FPtr goal = fimplies(
                        fand(fconst(x ? '1' : '0', i), fconst(y ? '1' : '0', j)),
                        fbox(pseq(pgate("H", {i}), pgate("CNOT", {i, j})),
                             bell_formula(x, y, i, j)));
                    if (auto fail = expect_valid(goal, m, "preparation validity"))
                      return fail;
                  }
            return std::nullopt;
          });

    b.run("gamma-row/n=" + str(n),
          "CNOT of |++> satisfies the gamma characteristic formula",
          [=](Sampler& s) -> std::optional<std::string> {
            for (int i = 1; i <= n; ++i)
              for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                FPtr goal = fimplies(
                    fand(fconst('+', i), fconst('+', j)),
                    fbox(pgate("CNOT", {i, j}),
                         gamma_characteristic_formula(i, j)));
                if (auto fail = expect_valid(goal, m, "gamma validity"))
                  return fail;
                // pointwise: execute CNOT on |++> tensor a sampled rest
                Vec pp = mu_tensor(const_vec2('+'), const_vec2('+'), {1}, 2);
                Vec rest = n == 2 ? Vec{1} : s.vec(size_t{1} << (n - 2), h);
                Ray st = Ray::of(mu_tensor(pp, rest, {i, j}, n));
                Mat cnot = lift_local(builtin_gate("CNOT").m, {i, j}, n);
                Ray out = *apply_to_ray(cnot, st);
                FPtr des = prepare(gamma_characteristic_formula(i, j), m);
                if (!holds_at(out, des, m))
                  return "gamma characteristic fails pointwise at (" + str(i) +
                         "," + str(j) + ")";
              }
            return std::nullopt;
          });
  }

  // the corollary needs a third qubit
  b.run("bell-measurement-agreement/n=3",
        str(cfg.count) + " sampled ray-valued q_k: the Bell measurement "
                         "program and the Bell test agree on qubit k",
        [=](Sampler& s) -> std::optional<std::string> {
          for (int t = 0; t < cfg.count; ++t) {
            std::vector<int> p3 = s.distinct_indices(3, 3);
            int i = p3[0], j = p3[1], k = p3[2];
            int x = s.coin(), y = s.coin();
            Model m = make_model(3).with_var("q", Subspace::line(s.ray(2, h)));
            PPtr meas = pseq(pseq(pgate("CNOT", {i, j}), pgate("H", {i})),
                             ptest(fand(fconst(x ? '1' : '0', i),
                                        fconst(y ? '1' : '0', j))));
            PPtr bell_test = ptest(bell_formula(x, y, i, j));
            FPtr goal = iff(fbox(meas, fvar("q", {k})),
                            fbox(bell_test, fvar("q", {k})));
            if (auto fail = expect_valid(goal, m, "corollary instance"))
              return fail;
            FPtr dom = iff(fdia(meas, fverum()), fdia(bell_test, fverum()));
            if (auto fail = expect_valid(dom, m, "corollary domain"))
              return fail;
          }
          return std::nullopt;
        });

  return b.take();
}

// ---------------------------------------------------------------------------
// Teleport suite
// ---------------------------------------------------------------------------

namespace {

/// Brute-force teleportation oracle: runs all four measurement branches on
/// psi1 (x) beta00 and factors qubit 3.
std::optional<std::string> teleport_oracle(const Ray& psi1) {
  Model m = make_model(3);
  Vec input = mu_tensor(psi1.vec(), Vec{1, 0, 0, 1}, {1}, 3);
  Mat entangle = lift_local(builtin_gate("H").m, {1}, 3) *
                 lift_local(builtin_gate("CNOT").m, {1, 2}, 3);
  for (int x : {0, 1}) {
    for (int y : {0, 1}) {
      Vec branch_in = mu_tensor(const_vec2(x ? '1' : '0'),
                                const_vec2(y ? '1' : '0'), {1}, 2);
      Mat measure = projector_matrix(local_state_property(branch_in, {1, 2}, 3));
      Vec out = measure.apply(entangle.apply(input));
      if (y) out = lift_local(builtin_gate("X").m, {3}, 3).apply(out);
      if (x) out = lift_local(builtin_gate("Z").m, {3}, 3).apply(out);
      if (out.is_zero())
        return "branch (" + str(x) + "," + str(y) + ") vanished for " +
               to_string(psi1);
      auto factor = factor_at(Ray::of(out), {3}, 3);
      if (!factor || *factor != psi1)
        return "branch (" + str(x) + "," + str(y) +
               ") did not deliver the input state " + to_string(psi1);
    }
  }
  return std::nullopt;
}

}  // namespace

SuiteReport run_teleport_suite(const SampleConfig& cfg) {
  SuiteBuilder b("teleport", cfg);
  const long h = cfg.height;
  Model m3 = make_model(3);

  b.run("program-shape", "the four-branch protocol program",
        [](Sampler&) -> std::optional<std::string> {
          PPtr p = teleportation_program();
          if (classify(desugar(p, 3)).deterministic)
            return "the protocol should be non-deterministic";
          std::string text = print(p);
          PPtr back = parse_program(text);
          if (!equal(p, back)) return "program does not round-trip: " + text;
          return std::nullopt;
        });

  b.run("constants", "phi1 in {0_1, 1_1, +_1, -_1} teleports",
        [=](Sampler&) -> std::optional<std::string> {
          for (char c : {'0', '1', '+', '-'}) {
            Verdict v = verify_teleportation(fconst(c, 1), m3);
            if (!v.value) {
              std::string msg = std::string("constant ") + c + " not teleported";
              if (v.witness) msg += "; witness " + to_string(*v.witness);
              return msg;
            }
            if (auto fail = teleport_oracle(Ray::of(const_vec2(c))))
              return fail;
          }
          return std::nullopt;
        });

  b.run("sampled-rays",
        str(std::max(cfg.count, 20)) + " sampled 1-local ray-state "
                                       "properties teleport, each "
                                       "cross-checked by branch execution",
        [=](Sampler& s) -> std::optional<std::string> {
          int rounds = std::max(cfg.count, 20);
          for (int t = 0; t < rounds; ++t) {
            Ray psi = s.ray(2, h);
            Model m = m3.with_var("phi", Subspace::line(psi));
            Verdict v = verify_teleportation(fvar("phi", {1}), m);
            if (!v.value)
              return "ray " + to_string(psi) + " not teleported" +
                     (v.witness ? "; witness " + to_string(*v.witness) : "");
            if (auto fail = teleport_oracle(psi)) return fail;
          }
          return std::nullopt;
        });

  b.run("degenerate",
        "the empty property teleports vacuously; the trivial full property "
        "is checked as an explicit validity",
        [=](Sampler&) -> std::optional<std::string> {
          Model m = m3.with_var("phi", Subspace::zero(2));
          Verdict v = verify_teleportation(fvar("phi", {1}), m);
          if (!v.value) return "empty precondition did not verify";
          FPtr triv = fimplies(bell_formula(0, 0, 2, 3),
                               fbox(teleportation_program(), fverum()));
          if (auto fail = expect_valid(triv, m3, "trivial postcondition"))
            return fail;
          return std::nullopt;
        });

  b.run("rejects-non-local-or-non-testable",
        "preconditions outside the testable 1-local fragment are refused",
        [=](Sampler&) -> std::optional<std::string> {
          try {
            verify_teleportation(fconst('0', 2), m3);
            return "a qubit-2 precondition was accepted";
          } catch (const LqpError& e) {
            if (e.code() != Err::NotTestableLocal)
              return "wrong error for non-local precondition";
          }
          try {
            verify_teleportation(fnot(fconst('1', 1)), m3);
            return "a non-testable precondition was accepted";
          } catch (const LqpError& e) {
            if (e.code() != Err::NotTestableLocal)
              return "wrong error for non-testable precondition";
          }
          return std::nullopt;
        });

  return b.take();
}

// ---------------------------------------------------------------------------
// Decision-procedure soundness
// ---------------------------------------------------------------------------

SuiteReport run_soundness_suite(const SampleConfig& cfg,
                                int rays_per_formula) {
  SuiteBuilder b("soundness", cfg);
  const long h = cfg.height;
  const int n = 2;
  const size_t dim = size_t{1} << n;

  b.run("decide-vs-pointwise",
        str(cfg.count) + " sampled symbolic formulas, each checked against "
                         "pointwise evaluation at " + str(rays_per_formula) +
                         " sampled states plus the emitted witness",
        [=](Sampler& s) -> std::optional<std::string> {
          for (int t = 0; t < cfg.count; ++t) {
            Model m = make_model(n)
                          .with_var("p", s.subspace(dim, h))
                          .with_var("q", s.subspace(dim, h))
                          .with_var("a", Subspace::line(s.ray(2, h)))
                          .with_var("b", Subspace::line(s.ray(2, h)));
            FPtr phi = rand_symbolic(s, n, 3, {"p", "q"}, {"a", "b"});
            FPtr des = prepare(phi, m);
            NodalSet d = denote(des, m);
            Verdict v;
            v.value = ncomplement(d).is_empty();
            if (!v.value) v.witness = witness(ncomplement(d));
            for (int r = 0; r < rays_per_formula; ++r) {
              Ray st = s.ray(dim, h);
              bool pointwise = holds_at(st, des, m);
              if (d.member(st) != pointwise)
                return "denotation and pointwise evaluation disagree on '" +
                       print(phi) + "' at " + to_string(st);
              if (v.value && !pointwise)
                return "'" + print(phi) + "' declared valid but fails at " +
                       to_string(st);
            }
            if (!v.value && holds_at(*v.witness, des, m))
              return "counterexample for '" + print(phi) +
                     "' does not falsify it";
          }
          return std::nullopt;
        });

  return b.take();
}

SuiteReport run_suite(const std::string& name, const SampleConfig& cfg) {
  if (name == "frame") return run_frame_suite(cfg);
  if (name == "axioms") return run_axiom_suite(cfg);
  if (name == "bell") return run_bell_suite(cfg);
  if (name == "teleport") return run_teleport_suite(cfg);
  if (name == "soundness") return run_soundness_suite(cfg);
  throw LqpError(Err::Parse, "unknown suite '" + name +
                                 "' (expected frame, axioms, bell, teleport)");
}

}  // namespace lqp
