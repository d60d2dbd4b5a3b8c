#pragma once

// JSON and CSV renderings of generated phrases, shared by the service and the
// command line so both emit the same bytes.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "combi/generator.hpp"
#include "combi/validator.hpp"

namespace combi {

nlohmann::ordered_json trace_to_json(const std::vector<TraceItem>& trace);
nlohmann::ordered_json phrase_to_json(const GeneratedPhrase& phrase);

// [{surface, trace[, score]}] with a trailing newline.
std::string export_json(const std::vector<GeneratedPhrase>& phrases);
// Inverse of export_json; ParseError on malformed input. Seeds are not exported.
std::vector<GeneratedPhrase> import_json(std::string_view document);

// Header `surface,slot1_lemma,slot1_class,...` over the highest slot index
// present; LF line endings; paired endpoints as "first/second".
std::string export_csv(const std::vector<GeneratedPhrase>& phrases);

nlohmann::ordered_json verdict_to_json(const Verdict& verdict);

}  // namespace combi
