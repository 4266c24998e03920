#include "atomlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace atomlab {

namespace {

// Byte length minus the multibyte overhead of the empty-set symbol, so columns
// line up visually.
std::size_t display_width(const std::string& s) {
  std::size_t w = s.size();
  for (std::size_t pos = 0; (pos = s.find("∅", pos)) != std::string::npos;
       pos += 3)
    w -= 2;
  return w;
}

std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], display_width(row[c]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(width[c] - display_width(row[c]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string atom_set_cell(const Nfa& a, const std::vector<int>& ids) {
  if (ids.empty()) return "";
  std::string cell = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) cell += ",";
    cell += a.labels[static_cast<std::size_t>(ids[i])].pretty();
  }
  cell += "}";
  return cell;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_atoms_line(const AtomicPoset& p) {
  std::string out;
  for (std::size_t i = 0; i < p.atoms.size(); ++i) {
    if (i) out += " ";
    out += p.atoms[i].pretty();
  }
  return out + "\n";
}

std::string render_atomaton_table(const Nfa& a) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"", "atom"};
  head.insert(head.end(), a.alphabet.begin(), a.alphabet.end());
  rows.push_back(head);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool ini = std::binary_search(a.initials.begin(), a.initials.end(), static_cast<int>(i));
    bool fin = std::binary_search(a.finals.begin(), a.finals.end(), static_cast<int>(i));
    std::string marker = std::string(ini ? "->" : "") + (fin ? "<-" : "");
    std::vector<std::string> row{marker, a.labels[i].pretty()};
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym)
      row.push_back(atom_set_cell(a, a.eta[i][sym]));
    rows.push_back(std::move(row));
  }
  return render_aligned(rows);
}

std::string render_complexity_table(const std::vector<AtomReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"atom", "achieved", "target"}};
  for (const auto& r : reports)
    rows.push_back({r.atom.pretty(), std::to_string(r.achieved), std::to_string(r.target)});
  return render_aligned(rows);
}

std::string render_semigroup_table(const SemigroupStats& s) {
  std::ostringstream out;
  out << "size: " << s.size << "\n";
  out << "rank histogram:";
  for (const auto& [rank, count] : s.rank_histogram) out << " " << rank << ":" << count;
  out << "\n";
  out << "subgroup order: " << s.subgroup_order << "\n";
  out << "k-set-transitive:";
  for (std::size_t k = 0; k < s.k_set_transitive.size(); ++k)
    out << " " << k << ":" << yesno(s.k_set_transitive[k]);
  out << "\n";
  out << "set-transitive: " << yesno(s.set_transitive) << "\n";
  if (s.recognized) out << "recognized: " << to_string(*s.recognized) << "\n";
  return out.str();
}

std::string render_classify_table(const ClassFlags& f, bool deciders_agree) {
  std::ostringstream out;
  out << "FTS: " << yesno(f.fts) << "\n"
      << "STS: " << yesno(f.sts) << "\n"
      << "MAL: " << yesno(f.mal) << "\n"
      << "MNA: " << yesno(f.mna) << "\n"
      << "MCR: " << yesno(f.mcr) << "\n"
      << "deciders agree: " << yesno(deciders_agree) << "\n";
  return out.str();
}

std::string render_census_table(const CensusReport& r) {
  std::ostringstream out;
  out << "instances: " << r.instances << "\n";
  out << "canonical: " << r.canonical << "\n";
  std::vector<std::vector<std::string>> rows{{"class", "raw", "canonical"}};
  auto add = [&](const char* name, std::uint64_t raw, std::uint64_t canon) {
    rows.push_back({name, std::to_string(raw), std::to_string(canon)});
  };
  add("FTS", r.raw.fts, r.canonical_counts.fts);
  add("STS", r.raw.sts, r.canonical_counts.sts);
  add("MAL", r.raw.mal, r.canonical_counts.mal);
  add("MNA", r.raw.mna, r.canonical_counts.mna);
  add("MCR", r.raw.mcr, r.canonical_counts.mcr);
  out << render_aligned(rows);
  out << "disagreements: " << r.disagreements << "\n";
  for (const auto& v : r.violations) out << "violation: " << v << "\n";
  return out.str();
}

nlohmann::json atoms_json(const AtomicPoset& p) {
  nlohmann::json j;
  j["n"] = p.n;
  std::vector<std::string> names;
  for (const auto& a : p.atoms) names.push_back(a.to_string());
  j["atoms"] = names;
  return j;
}

nlohmann::json atomaton_json(const Nfa& a) {
  nlohmann::json j;
  j["n"] = a.degree;
  j["alphabet"] = a.alphabet;
  std::vector<std::string> names;
  for (const auto& s : a.labels) names.push_back(s.to_string());
  j["atoms"] = names;
  std::vector<std::string> initials;
  for (int i : a.initials) initials.push_back(a.labels[static_cast<std::size_t>(i)].to_string());
  j["initials"] = initials;
  std::vector<std::string> finals;
  for (int i : a.finals) finals.push_back(a.labels[static_cast<std::size_t>(i)].to_string());
  j["finals"] = finals;
  nlohmann::json eta = nlohmann::json::object();
  for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
    nlohmann::json per = nlohmann::json::object();
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<std::string> succ;
      for (int t : a.eta[i][sym]) succ.push_back(a.labels[static_cast<std::size_t>(t)].to_string());
      per[a.labels[i].to_string()] = succ;
    }
    eta[a.alphabet[sym]] = per;
  }
  j["eta"] = eta;
  return j;
}

nlohmann::json complexity_json(const std::vector<AtomReport>& rows) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& r : rows)
    j[r.atom.to_string()] = {{"achieved", r.achieved}, {"target", r.target}};
  return j;
}

nlohmann::json semigroup_json(const SemigroupStats& s) {
  nlohmann::json j;
  j["size"] = s.size;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [rank, count] : s.rank_histogram) hist[std::to_string(rank)] = count;
  j["rank_histogram"] = hist;
  j["subgroup_order"] = s.subgroup_order;
  j["k_set_transitive"] = s.k_set_transitive;
  j["set_transitive"] = s.set_transitive;
  j["recognized"] = s.recognized ? nlohmann::json(to_string(*s.recognized)) : nlohmann::json();
  return j;
}

nlohmann::json flags_json(const ClassFlags& f) {
  return {{"FTS", f.fts}, {"STS", f.sts}, {"MAL", f.mal}, {"MNA", f.mna}, {"MCR", f.mcr}};
}

nlohmann::json analysis_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["alphabet"] = r.alphabet;
  std::vector<std::string> names;
  for (const auto& a : r.atoms) names.push_back(a.atom.to_string());
  j["atoms"] = names;
  j["atom_count"] = r.atom_count;
  j["atom_target"] = r.atom_target;
  j["atom_complexities"] = complexity_json(r.atoms);
  j["semantic_maximal"] = r.semantic_maximal;
  if (r.semigroup) j["semigroup"] = semigroup_json(*r.semigroup);
  if (r.flags) j["flags"] = flags_json(*r.flags);
  if (r.algebraic_maximal) j["algebraic_maximal"] = *r.algebraic_maximal;
  if (r.deciders_agree) j["deciders_agree"] = *r.deciders_agree;
  if (!r.notices.empty()) j["notices"] = r.notices;
  return j;
}

nlohmann::json census_json(const CensusReport& r) {
  nlohmann::json j;
  j["n"] = r.options.n;
  j["sigma"] = r.options.sigma;
  j["mode"] = r.options.samples ? "samples" : "exhaustive";
  if (r.options.samples) {
    j["samples"] = *r.options.samples;
    j["seed"] = r.options.seed;
  }
  j["instances"] = r.instances;
  j["canonical"] = r.canonical;
  auto counts = [](const ClassCounts& c) {
    return nlohmann::json{
        {"FTS", c.fts}, {"STS", c.sts}, {"MAL", c.mal}, {"MNA", c.mna}, {"MCR", c.mcr}};
  };
  j["raw"] = counts(r.raw);
  j["canonical_counts"] = counts(r.canonical_counts);
  j["disagreements"] = r.disagreements;
  j["violations"] = r.violations;
  return j;
}

}  // namespace atomlab
