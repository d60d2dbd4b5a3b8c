#pragma once

#include <string>
#include <vector>

#include "combi/error.hpp"
#include "combi/generator.hpp"
#include "combi/lexicon.hpp"

namespace combi::testing {

inline std::string data_path(const std::string& name) { return std::string(COMBI_DATA_DIR) + "/" + name; }

// Loaded once per process; every test reads it through a const reference.
inline const Lexicon& sample() {
  static const Lexicon lex = load_bundle_file(data_path("sample_bundle.json"));
  return lex;
}

// Every template reachable from single-slot selections and from full
// selections (one allowed class per slot) of every schema in the lexicon.
// Selections the schema refuses are skipped.
inline std::vector<StructureTemplate> all_templates(const Lexicon& lex) {
  std::vector<StructureTemplate> out;
  auto add = [&](const ArgumentSchema& s, const ClassSelection& sel) {
    try {
      for (StructureTemplate& t : enumerate_structures(lex, s.language, s.head_lemma, s.sense_id, sel)) {
        bool seen = false;
        for (const StructureTemplate& o : out) seen = seen || o == t;
        if (!seen) out.push_back(std::move(t));
      }
    } catch (const Error&) {
    }
  };
  for (const ArgumentSchema& s : lex.schemas()) {
    for (const ArgumentSlot& slot : s.slots) {
      for (const std::string& cls : slot.allowed_classes) add(s, {{slot.index, cls}});
    }
    std::vector<std::size_t> pick(s.slots.size(), 0);
    while (true) {
      ClassSelection sel;
      for (std::size_t i = 0; i < s.slots.size(); ++i) {
        sel[s.slots[i].index] = s.slots[i].allowed_classes[pick[i]];
      }
      add(s, sel);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == s.slots[i].allowed_classes.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

}  // namespace combi::testing
