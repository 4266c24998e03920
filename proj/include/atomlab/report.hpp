#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "atomlab/analysis.hpp"
#include "atomlab/atoms.hpp"
#include "atomlab/census.hpp"

namespace atomlab {

// Table renderers. All output is deterministic: atoms ascend by bit word,
// numeric listings ascend, and the empty set prints as its own symbol.
std::string render_atoms_line(const AtomicPoset& p);
std::string render_atomaton_table(const Nfa& a);
std::string render_complexity_table(const std::vector<AtomReport>& rows);
std::string render_semigroup_table(const SemigroupStats& s);
std::string render_classify_table(const ClassFlags& f, bool deciders_agree);
std::string render_census_table(const CensusReport& r);

// JSON renderers; the analysis object follows the documented report schema
// {atoms, atom_complexities, semigroup, flags, deciders_agree}.
nlohmann::json atoms_json(const AtomicPoset& p);
nlohmann::json atomaton_json(const Nfa& a);
nlohmann::json complexity_json(const std::vector<AtomReport>& rows);
nlohmann::json semigroup_json(const SemigroupStats& s);
nlohmann::json flags_json(const ClassFlags& f);
nlohmann::json analysis_json(const AnalysisReport& r);
nlohmann::json census_json(const CensusReport& r);

}  // namespace atomlab
