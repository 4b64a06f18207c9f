#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "predalign/link_table.hpp"
#include "predalign/triple_store.hpp"

namespace predalign {

/// Levenshtein distance (unit-cost insert/delete/substitute) over Unicode
/// scalar values, not bytes.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// Label translation lookup. Deterministic for a fixed dictionary; an HTTP
/// translation service can be plugged in by implementing this interface.
class TranslationProvider {
 public:
  virtual ~TranslationProvider() = default;
  virtual std::optional<std::string> translate(const std::string& text) const = 0;
};

/// Offline dictionary loaded from a two-column TSV (sourceLabel \t
/// targetLabel). Both keys and queries are case-folded and
/// whitespace-normalized.
class DictionaryProvider final : public TranslationProvider {
 public:
  struct LoadResult {
    DictionaryProvider provider;
    std::vector<TsvDiagnostic> diagnostics;
  };

  static LoadResult from_tsv(std::string_view tsv);
  static DictionaryProvider from_entries(const std::map<std::string, std::string>& entries);

  std::optional<std::string> translate(const std::string& text) const override;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::string> entries_;  // folded source label -> target label
};

/// Label of every predicate occurring in a store: its rdfs:label literal when
/// present (smallest lexical form when there are several), otherwise the
/// IRI's local-name title, otherwise the raw IRI. Total by construction.
class LabelIndex {
 public:
  static LabelIndex from_store(const TripleStore& store);

  std::optional<std::string> label_of(const std::string& predicate_iri) const;
  /// Ordered by predicate IRI, so scans are deterministic.
  const std::map<std::string, std::string>& labels() const { return labels_; }
  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::map<std::string, std::string> labels_;
};

struct FallbackTrace {
  std::string source_label;
  std::optional<std::string> translation;
  std::size_t candidates_compared = 0;
  std::optional<std::string> chosen;
  std::size_t best_distance = 0;
  std::string note;  // diagnostic, e.g. missing translation
};

/// Translates the source predicate's label and returns the target predicate
/// whose label is closest by edit distance; ties broken by the larger
/// target-frequency prior, remaining ties by ascending IRI. Absent when the
/// provider has no translation for the label.
std::optional<std::string> map_predicate_fallback(const std::string& source_predicate,
                                                  const TripleStore& source,
                                                  const TranslationProvider& provider,
                                                  const LabelIndex& labels,
                                                  const TripleStore& target,
                                                  FallbackTrace* trace = nullptr);

/// Comparison form shared by the dictionary and the matcher: case-folded,
/// whitespace-collapsed.
std::string fold_label(std::string_view label);

}  // namespace predalign
