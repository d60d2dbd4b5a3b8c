#pragma once

// Pre-computed word vectors and the CBOW-style plausibility filter: a filler
// scores by its cosine against the mean vector of the rest of the phrase.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "combi/generator.hpp"

namespace combi {

class VectorSpace {
 public:
  explicit VectorSpace(std::size_t dimension = 0) : dimension_(dimension) {}

  // Text format: optional "<count> <dimension>" header, then "word f1 ... fd"
  // per line. ParseError naming the line on a dimension mismatch.
  static VectorSpace load(std::istream& source, bool normalize = false);
  static VectorSpace load_string(std::string_view text, bool normalize = false);
  static VectorSpace load_file(const std::string& path, bool normalize = false);

  // Replaces an existing row. DomainError on a dimension mismatch.
  void add(std::string word, std::vector<double> vector);

  // Multiword lemmas are looked up with spaces replaced by '_'.
  const std::vector<double>* find(std::string_view lemma) const;

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool normalized() const noexcept { return normalized_; }

 private:
  std::size_t dimension_;
  bool normalized_ = false;
  std::unordered_map<std::string, std::vector<double>> rows_;
};

double cosine(const std::vector<double>& a, const std::vector<double>& b);

// Cosine of the candidate against the mean of the in-vocabulary context
// vectors; nullopt when the candidate or every context word is unknown.
// DomainError for an empty context.
std::optional<double> context_score(const VectorSpace& vs, std::string_view candidate,
                                    const std::vector<std::string>& context);

struct ScoredPhrase {
  GeneratedPhrase phrase;
  double score = 0.0;
};

// Scores the last trace item (the slot that varies most in a batch) against
// the head and the other fillers; drops unscoreable phrases, sorts by score
// descending then surface, keeps `limit`.
std::vector<ScoredPhrase> filter_phrases(const VectorSpace& vs, std::string_view head,
                                         const std::vector<GeneratedPhrase>& phrases,
                                         std::size_t limit);

}  // namespace combi
