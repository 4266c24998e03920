#include "atomlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atomlab/analysis.hpp"
#include "atomlab/atoms.hpp"
#include "atomlab/census.hpp"
#include "atomlab/errors.hpp"
#include "atomlab/ingest.hpp"
#include "atomlab/report.hpp"

namespace atomlab {

namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw std::invalid_argument(std::string(what) + " '" + text + "' is not an unsigned integer");
  return v;
}

std::uint64_t startup_cap() {
  if (const char* env = std::getenv("ATOMLAB_CAP")) return parse_u64(env, "ATOMLAB_CAP");
  return kDefaultClosureCap;
}

struct Options {
  std::string format = "table";
  std::uint64_t cap = kDefaultClosureCap;
  bool quiet = false;
  std::string input_file;
  std::string regex;
  std::string subset;
  int n = 0;
  int sigma = 2;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;

  bool json() const { return format == "json"; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads the language input and normalizes it to its minimal DFA, noting the
// normalization on the diagnostic stream.
Dfa load_language(const Options& opt, std::ostream& err) {
  if (opt.input_file.empty() == opt.regex.empty())
    throw std::invalid_argument("provide exactly one input: a DFA file or --regex");
  if (!opt.regex.empty()) return regex_to_dfa(opt.regex);
  std::string text = slurp(opt.input_file);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  Dfa d = first != std::string::npos && text[first] == '{'
              ? parse_dfa_json(nlohmann::json::parse(text))
              : parse_dfa(text);
  if (is_minimal(d)) return d;
  Dfa m = minimize(d);
  if (m.finals.is_empty())
    throw std::invalid_argument("the input DFA accepts no words; empty languages are not supported");
  if (!opt.quiet)
    err << "notice: input DFA is not minimal; using its minimization (" << m.n << " states)\n";
  return m;
}

StateSet parse_subset(const std::string& text, int n) {
  std::string s = text;
  if (s == "empty" || s == "∅" || s == "{}") return StateSet::empty(n);
  if (!s.empty() && s.front() == '{') s.erase(s.begin());
  if (!s.empty() && s.back() == '}') s.pop_back();
  StateSet out = StateSet::empty(n);
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    std::istringstream inner(tok);
    std::string piece;
    while (inner >> piece) {
      int v = 0;
      auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc() || p != piece.data() + piece.size())
        throw std::invalid_argument("subset entry '" + piece + "' is not an integer");
      if (v < 1 || v > n)
        throw std::invalid_argument("subset entry " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n));
      out = out.with(v);
    }
  }
  return out;
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int cmd_atoms(const Options& opt, std::ostream& out, std::ostream& err) {
  Dfa d = load_language(opt, err);
  AtomicPoset poset = atoms_of(d);
  if (opt.json())
    emit_json(out, atoms_json(poset));
  else
    out << render_atoms_line(poset);
  return 0;
}

int cmd_atomaton(const Options& opt, std::ostream& out, std::ostream& err) {
  Dfa d = load_language(opt, err);
  Nfa a = atomaton(d);
  if (opt.json())
    emit_json(out, atomaton_json(a));
  else
    out << render_atomaton_table(a);
  return 0;
}

int cmd_atom_complexity(const Options& opt, std::ostream& out, std::ostream& err) {
  Dfa d = load_language(opt, err);
  AtomicPoset poset = atoms_of(d);
  std::vector<AtomReport> rows;
  if (opt.subset.empty()) {
    std::vector<int> achieved = atom_complexities(d, poset, Execution::parallel);
    for (std::size_t i = 0; i < poset.atoms.size(); ++i)
      rows.push_back({poset.atoms[i], achieved[i], psi(d.n, poset.atoms[i].count())});
  } else {
    StateSet s = parse_subset(opt.subset, d.n);
    rows.push_back({s, atom_complexity(d, poset, s), psi(d.n, s.count())});
  }
  if (opt.json())
    emit_json(out, complexity_json(rows));
  else
    out << render_complexity_table(rows);
  return 0;
}

int cmd_semigroup(const Options& opt, std::ostream& out, std::ostream& err) {
  Dfa d = load_language(opt, err);
  SemigroupStats stats = semigroup_stats(transition_semigroup(d, opt.cap));
  if (opt.json())
    emit_json(out, semigroup_json(stats));
  else
    out << render_semigroup_table(stats);
  return 0;
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err) {
  Dfa d = load_language(opt, err);
  if (d.n < 2) throw std::invalid_argument("classify requires n >= 2");
  AnalyzeOptions a{opt.cap, Execution::parallel, true};
  AnalysisReport r = analyze(d, a);
  if (opt.json())
    emit_json(out, nlohmann::json{{"flags", flags_json(*r.flags)},
                                  {"deciders_agree", *r.deciders_agree}});
  else
    out << render_classify_table(*r.flags, *r.deciders_agree);
  return 0;
}

int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
  Dfa d = load_language(opt, err);
  AnalyzeOptions a{opt.cap, Execution::parallel, true};
  AnalysisReport r = analyze(d, a);
  if (!opt.quiet)
    for (const auto& note : r.notices) err << "notice: " << note << "\n";
  if (opt.json()) {
    emit_json(out, analysis_json(r));
    return 0;
  }
  out << "n: " << r.n << "\n";
  out << "alphabet:";
  for (const auto& sym : r.alphabet) out << " " << sym;
  out << "\natoms: ";
  AtomicPoset poset = atoms_of(d);
  out << render_atoms_line(poset);
  out << "\natom complexities\n" << render_complexity_table(r.atoms);
  out << "\natomaton\n" << render_atomaton_table(atomaton(d, poset));
  if (r.semigroup) out << "\nsemigroup\n" << render_semigroup_table(*r.semigroup);
  if (r.flags)
    out << "\nclassification\n" << render_classify_table(*r.flags, *r.deciders_agree);
  else
    out << "\nsemantic maximal: " << (r.semantic_maximal ? "yes" : "no")
        << (r.deciders_agree ? std::string("\ndeciders agree: ") + (*r.deciders_agree ? "yes" : "no")
                             : std::string())
        << "\n";
  return 0;
}

int cmd_witness(const Options& opt, std::ostream& out, std::ostream&) {
  Dfa d = witness(opt.n);
  if (opt.json())
    emit_json(out, render_dfa_json(d));
  else
    out << render_dfa(d);
  return 0;
}

int cmd_psi(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.json()) {
    std::vector<std::uint64_t> row;
    for (int k = 0; k <= opt.n; ++k) row.push_back(psi(opt.n, k));
    emit_json(out, nlohmann::json{{"n", opt.n}, {"psi", row}});
    return 0;
  }
  for (int k = 0; k <= opt.n; ++k) out << (k ? " " : "") << psi(opt.n, k);
  out << "\n";
  return 0;
}

int cmd_census(const Options& opt, std::ostream& out, std::ostream& err) {
  CensusOptions c;
  c.n = opt.n;
  c.sigma = opt.sigma;
  c.samples = opt.samples;
  c.seed = opt.seed;
  c.cap = opt.cap;
  c.exec = Execution::parallel;
  CensusReport r = run_census(c);
  if (opt.json())
    emit_json(out, census_json(r));
  else
    out << render_census_table(r);
  if (r.disagreements > 0 || !r.violations.empty()) {
    err << "internal inconsistency: the census found decider disagreements or chain violations\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"atoms, atomata and maximal atomicity of regular languages"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  try {
    opt.cap = startup_cap();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cap", opt.cap, "closure element cap");
  app.add_flag("--quiet", opt.quiet, "suppress notices");

  auto add_language_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input_file, "DFA file (text or JSON)");
    sub->add_option("--regex", opt.regex, "pattern instead of a DFA file");
  };

  CLI::App* atoms_cmd = app.add_subcommand("atoms", "print the atomic poset");
  add_language_input(atoms_cmd);
  CLI::App* atomaton_cmd = app.add_subcommand("atomaton", "print the atomaton table");
  add_language_input(atomaton_cmd);
  CLI::App* complexity_cmd =
      app.add_subcommand("atom-complexity", "per-atom quotient complexity against its bound");
  add_language_input(complexity_cmd);
  complexity_cmd->add_option("--subset", opt.subset, "one atom, e.g. 1,2 or {} for the empty set");
  CLI::App* semigroup_cmd =
      app.add_subcommand("semigroup", "transition semigroup statistics");
  add_language_input(semigroup_cmd);
  CLI::App* classify_cmd = app.add_subcommand("classify", "class flags and decider agreement");
  add_language_input(classify_cmd);
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "everything about one language");
  add_language_input(analyze_cmd);
  CLI::App* witness_cmd = app.add_subcommand("witness", "emit the n-state witness DFA");
  witness_cmd->add_option("n", opt.n, "number of states")->required();
  CLI::App* psi_cmd = app.add_subcommand("psi", "print the row psi(n, 0..n)");
  psi_cmd->add_option("n", opt.n, "number of states")->required();
  CLI::App* census_cmd =
      app.add_subcommand("census", "sweep minimal DFAs, check the deciders, count classes");
  census_cmd->add_option("--n", opt.n, "number of states")->required();
  census_cmd->add_option("--sigma", opt.sigma, "alphabet size");
  std::uint64_t samples_value = 0;
  CLI::Option* samples_opt =
      census_cmd->add_option("--samples", samples_value, "random sample count (default exhaustive)");
  census_cmd->add_option("--seed", opt.seed, "sample seed");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (samples_opt->count() > 0) opt.samples = samples_value;

  try {
    if (atoms_cmd->parsed()) return cmd_atoms(opt, out, err);
    if (atomaton_cmd->parsed()) return cmd_atomaton(opt, out, err);
    if (complexity_cmd->parsed()) return cmd_atom_complexity(opt, out, err);
    if (semigroup_cmd->parsed()) return cmd_semigroup(opt, out, err);
    if (classify_cmd->parsed()) return cmd_classify(opt, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(opt, out, err);
    if (witness_cmd->parsed()) return cmd_witness(opt, out, err);
    if (psi_cmd->parsed()) return cmd_psi(opt, out, err);
    if (census_cmd->parsed()) return cmd_census(opt, out, err);
    err << "error: no command\n";
    return 1;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const capacity_error& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace atomlab
