#include "combi/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "combi/error.hpp"
#include "combi/text.hpp"

namespace combi {

namespace {

std::string vector_key(std::string_view lemma) {
  std::string key = text::nfc(lemma);
  std::replace(key.begin(), key.end(), ' ', '_');
  return key;
}

bool parse_double(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

void normalize_in_place(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) return;
  for (double& x : v) x /= norm;
}

}  // namespace

VectorSpace VectorSpace::load(std::istream& source, bool normalize) {
  VectorSpace vs;
  vs.normalized_ = normalize;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared_count;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields = text::split_words(line);
    if (fields.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (line_no == 1 && fields.size() == 2 &&
        fields[0].find_first_not_of("0123456789") == std::string::npos &&
        fields[1].find_first_not_of("0123456789") == std::string::npos) {
      declared_count = std::stoull(fields[0]);
      vs.dimension_ = std::stoull(fields[1]);
      continue;
    }

    std::vector<double> row;
    row.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double x = 0.0;
      if (!parse_double(fields[i], x)) throw ParseError(where, "not a number: \"" + fields[i] + "\"");
      row.push_back(x);
    }
    if (vs.dimension_ == 0) vs.dimension_ = row.size();
    if (row.size() != vs.dimension_ || row.empty()) {
      throw ParseError(where, "expected " + std::to_string(vs.dimension_) + " values, found " +
                                  std::to_string(row.size()));
    }
    if (normalize) normalize_in_place(row);
    vs.rows_[vector_key(fields[0])] = std::move(row);
  }
  if (declared_count && *declared_count != vs.rows_.size()) {
    throw ParseError("line 1", "header declares " + std::to_string(*declared_count) + " rows, found " +
                                   std::to_string(vs.rows_.size()));
  }
  return vs;
}

VectorSpace VectorSpace::load_string(std::string_view text, bool normalize) {
  std::istringstream in{std::string(text)};
  return load(in, normalize);
}

VectorSpace VectorSpace::load_file(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open vector file " + path);
  return load(in, normalize);
}

void VectorSpace::add(std::string word, std::vector<double> vector) {
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) {
    throw DomainError("vector for \"" + word + "\" has dimension " + std::to_string(vector.size()) +
                      ", expected " + std::to_string(dimension_));
  }
  if (normalized_) normalize_in_place(vector);
  rows_[vector_key(word)] = std::move(vector);
}

const std::vector<double>* VectorSpace::find(std::string_view lemma) const {
  auto it = rows_.find(vector_key(lemma));
  return it == rows_.end() ? nullptr : &it->second;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::optional<double> context_score(const VectorSpace& vs, std::string_view candidate,
                                    const std::vector<std::string>& context) {
  if (context.empty()) throw DomainError("context_score needs at least one context word");
  const std::vector<double>* c = vs.find(candidate);
  if (!c) return std::nullopt;
  std::vector<double> mean(vs.dimension(), 0.0);
  std::size_t known = 0;
  for (const std::string& word : context) {
    const std::vector<double>* v = vs.find(word);
    if (!v) continue;
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += (*v)[i];
    ++known;
  }
  if (known == 0) return std::nullopt;
  for (double& x : mean) x /= static_cast<double>(known);
  return cosine(*c, mean);
}

std::vector<ScoredPhrase> filter_phrases(const VectorSpace& vs, std::string_view head,
                                         const std::vector<GeneratedPhrase>& phrases,
                                         std::size_t limit) {
  std::vector<ScoredPhrase> scored;
  for (const GeneratedPhrase& p : phrases) {
    if (p.trace.empty()) continue;
    const TraceItem& varying = p.trace.back();
    std::vector<std::string> context{std::string(head)};
    for (std::size_t i = 0; i + 1 < p.trace.size(); ++i) {
      context.push_back(p.trace[i].lemma);
      if (p.trace[i].paired) context.push_back(p.trace[i].paired->lemma);
    }
    if (varying.paired) context.push_back(varying.paired->lemma);
    if (std::optional<double> s = context_score(vs, varying.lemma, context)) {
      scored.push_back({p, *s});
    }
  }
  std::stable_sort(scored.begin(), scored.end(), [](const ScoredPhrase& a, const ScoredPhrase& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.phrase.surface < b.phrase.surface;
  });
  if (scored.size() > limit) scored.resize(limit);
  return scored;
}

}  // namespace combi
