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

#include "lqp/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lqp/error.hpp"
#include "lqp/parse.hpp"
#include "lqp/suites.hpp"
#include "lqp/syntax.hpp"

namespace lqp {

namespace {

struct Invocation {
  std::string command;
  std::string model_path;
  std::string formula, formula_file;
  std::string program;
  std::string state;
  std::string suite;
  std::uint64_t seed = 1;
  int count = 100;
  int star_bound = 64;
  std::string format = "text";
};

Model load_model(const Invocation& inv) {
  if (inv.model_path.empty())
    throw LqpError(Err::Parse, "this command needs --model PATH");
  Model m = elaborate(load_model_file(inv.model_path));
  m.star_bound = inv.star_bound;
  return m;
}

FPtr formula_arg(const Invocation& inv) {
  if (!inv.formula.empty()) return parse_formula(inv.formula);
  if (!inv.formula_file.empty()) {
    std::ifstream in(inv.formula_file);
    if (!in)
      throw LqpError(Err::Parse,
                     "cannot open formula file '" + inv.formula_file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_formula(ss.str());
  }
  throw LqpError(Err::Parse, "this command needs --formula or --formula-file");
}

Ray state_arg(const Invocation& inv, const Model& m) {
  if (inv.state.empty())
    throw LqpError(Err::Parse, "this command needs --state NAME");
  auto it = m.states.find(inv.state);
  if (it == m.states.end())
    throw LqpError(Err::Parse, "model declares no state '" + inv.state + "'");
  return it->second;
}

bool structured(const Invocation& inv) { return inv.format == "structured"; }

void emit(const Invocation& inv, std::ostream& out, const nlohmann::json& j,
          const std::string& text) {
  if (structured(inv))
    out << j.dump(2) << "\n";
  else
    out << text;
}

int cmd_check(const Invocation& inv, std::ostream& out) {
  Model m = load_model(inv);
  Verdict v = decide_valid(formula_arg(inv), m);
  nlohmann::json j{{"command", "check"}, {"verdict", v.value ? "VALID" : "INVALID"}};
  std::string text = v.value ? "VALID\n" : "INVALID\n";
  if (v.witness) {
    j["counterexample"] = to_string(*v.witness);
    text += "counterexample: " + to_string(*v.witness) + "\n";
  }
  emit(inv, out, j, text);
  return v.value ? 0 : 1;
}

int cmd_sat(const Invocation& inv, std::ostream& out) {
  Model m = load_model(inv);
  Verdict v = decide_sat(formula_arg(inv), m);
  nlohmann::json j{{"command", "sat"},
                   {"verdict", v.value ? "SATISFIABLE" : "UNSATISFIABLE"}};
  std::string text = v.value ? "SATISFIABLE\n" : "UNSATISFIABLE\n";
  if (v.witness) {
    j["witness"] = to_string(*v.witness);
    text += "witness: " + to_string(*v.witness) + "\n";
  }
  emit(inv, out, j, text);
  return v.value ? 0 : 1;
}

int cmd_eval(const Invocation& inv, std::ostream& out) {
  Model m = load_model(inv);
  Ray s = state_arg(inv, m);
  bool holds = holds_at(s, prepare(formula_arg(inv), m), m);
  emit(inv, out,
       nlohmann::json{{"command", "eval"}, {"verdict", holds ? "TRUE" : "FALSE"}},
       holds ? "TRUE\n" : "FALSE\n");
  return holds ? 0 : 1;
}

int cmd_run(const Invocation& inv, std::ostream& out) {
  Model m = load_model(inv);
  if (inv.program.empty())
    throw LqpError(Err::Parse, "this command needs --program TEXT");
  Ray s = state_arg(inv, m);
  PPtr p = prepare(parse_program(inv.program), m);
  std::vector<Ray> succ = successors(s, p, m);
  nlohmann::json j{{"command", "run"}, {"successors", nlohmann::json::array()}};
  std::string text;
  for (const Ray& t : succ) {
    j["successors"].push_back(to_string(t));
    text += to_string(t) + "\n";
  }
  if (succ.empty()) text = "no successors (the program is undefined here)\n";
  emit(inv, out, j, text);
  return 0;
}

void warn_degenerate_atoms(const FPtr& f, const Model& m, std::ostream& err);

void warn_degenerate_atoms(const PPtr& p, const Model& m, std::ostream& err) {
  if (!p) return;
  warn_degenerate_atoms(p->a, m, err);
  warn_degenerate_atoms(p->b, m, err);
  if (p->f) warn_degenerate_atoms(p->f, m, err);
}

/// Flags entanglement atoms whose induced single-qubit map is zero: by
/// design they denote the empty property, which is worth a note when a
/// user inspects a denotation.
void warn_degenerate_atoms(const FPtr& f, const Model& m, std::ostream& err) {
  if (!f) return;
  if (f->k == FK::Entangle) {
    std::vector<PPtr> work{f->p};
    while (!work.empty()) {
      PPtr leaf = work.back();
      work.pop_back();
      if (leaf->k == PK::Choice) {
        work.push_back(leaf->a);
        work.push_back(leaf->b);
        continue;
      }
      if (leaf->k == PK::Trivial) continue;
      try {
        if (restrict_first(denote_deterministic(leaf, m), m.n).is_zero())
          err << "note: E[" << print(leaf) << "](" << f->i << "," << f->j
              << ") induces the zero map and denotes the empty property\n";
      } catch (const LqpError&) {
        // non-deterministic leaf: denote itself will report it
      }
    }
    return;
  }
  warn_degenerate_atoms(f->a, m, err);
  warn_degenerate_atoms(f->b, m, err);
  warn_degenerate_atoms(f->p, m, err);
}

int cmd_denote(const Invocation& inv, std::ostream& out, std::ostream& err) {
  Model m = load_model(inv);
  FPtr prepared = prepare(formula_arg(inv), m);
  warn_degenerate_atoms(prepared, m, err);
  NodalSet d = denote(prepared, m);
  nlohmann::json j{{"command", "denote"}, {"cells", nlohmann::json::array()}};
  std::ostringstream text;
  if (d.is_empty()) text << "empty denotation\n";
  for (size_t k = 0; k < d.cells().size(); ++k) {
    const Cell& c = d.cells()[k];
    nlohmann::json jc{{"dim", c.pos.dim()},
                      {"subspace", to_string(c.pos)},
                      {"minus", nlohmann::json::array()}};
    text << "cell " << k << ": dim " << c.pos.dim() << " " << to_string(c.pos)
         << "\n";
    for (const Subspace& nsub : c.negs) {
      jc["minus"].push_back(to_string(nsub));
      text << "  minus dim " << nsub.dim() << " " << to_string(nsub) << "\n";
    }
    j["cells"].push_back(jc);
  }
  emit(inv, out, j, text.str());
  return 0;
}

int cmd_suite(const Invocation& inv, std::ostream& out) {
  if (inv.suite.empty())
    throw LqpError(Err::Parse, "this command needs --suite NAME");
  SampleConfig cfg;
  cfg.seed = inv.seed;
  cfg.count = inv.count;
  cfg.star_bound = inv.star_bound;
  SuiteReport rep = run_suite(inv.suite, cfg);
  if (structured(inv))
    out << rep.to_json();
  else
    out << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"lqpcheck: an exact model checker for the quantum dynamic "
               "logic of compound systems"};
  app.require_subcommand(1);

  Invocation inv;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", inv.model_path, "model file (.lqp)");
    cmd->add_option("--formula", inv.formula, "formula text");
    cmd->add_option("--formula-file", inv.formula_file, "formula from a file");
    cmd->add_option("--program", inv.program, "program text");
    cmd->add_option("--state", inv.state, "named state from the model");
    cmd->add_option("--seed", inv.seed, "sampling seed");
    cmd->add_option("--count", inv.count, "sampled instantiations per case");
    cmd->add_option("--star-bound", inv.star_bound,
                    "iteration bound for star fixpoints");
    cmd->add_option("--suite", inv.suite,
                    "suite name (frame, axioms, bell, teleport)");
    cmd->add_option("--format", inv.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* check = app.add_subcommand("check", "decide validity");
  CLI::App* sat = app.add_subcommand("sat", "decide satisfiability");
  CLI::App* eval = app.add_subcommand("eval", "evaluate at a named state");
  CLI::App* run = app.add_subcommand("run", "apply a program to a state");
  CLI::App* denote = app.add_subcommand("denote", "print a denotation");
  CLI::App* suite = app.add_subcommand("suite", "run a verification suite");
  for (CLI::App* c : {check, sat, eval, run, denote, suite}) add_common(c);
  suite->add_option("name", inv.suite,
                    "one of: frame, axioms, bell, teleport");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with a zero exit
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(inv, out);
    if (sat->parsed()) return cmd_sat(inv, out);
    if (eval->parsed()) return cmd_eval(inv, out);
    if (run->parsed()) return cmd_run(inv, out);
    if (denote->parsed()) return cmd_denote(inv, out, err);
    if (suite->parsed()) return cmd_suite(inv, out);
  } catch (const LqpError& e) {
    err << "error: " << e.what() << "\n";
    return err_exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace lqp
