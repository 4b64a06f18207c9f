#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "predalign/term.hpp"

namespace predalign {

/// Immutable in-memory RDF graph with three coherent projections of the same
/// triple set: predicate -> distinct (subject, object) pairs,
/// (subject, object) -> predicates, and predicate -> triple count.
/// Duplicate triples are deduplicated at build time (set semantics), which
/// also makes the per-predicate counts well defined.
///
/// All query methods are const and safe for unsynchronized concurrent reads.
class TripleStore {
 public:
  TripleStore() = default;

  /// `label` is a language tag kept as metadata only.
  static TripleStore build(std::vector<Triple> triples, std::string label);

  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  const std::string& label() const { return label_; }

  /// Distinct (subject, object) pairs of triples with the given predicate,
  /// sorted. Empty for an absent predicate.
  const std::vector<TermPair>& pairs_for_predicate(const std::string& predicate_iri) const;

  /// All predicates p with a triple (subject, p, object), sorted.
  /// Empty for an unknown pair. Direction matters.
  const std::vector<std::string>& predicates_linking(const Term& subject,
                                                     const Term& object) const;

  /// Number of triples whose predicate is the given IRI; 0 when absent.
  std::size_t predicate_count(const std::string& predicate_iri) const;

  std::size_t distinct_predicate_count() const { return counts_.size(); }

  /// Top-k predicates by descending triple count, ties broken by ascending
  /// IRI. Shorter than k iff the store has fewer distinct predicates.
  /// k must be >= 1.
  std::vector<std::pair<std::string, std::size_t>> predicates_by_frequency(std::size_t k) const;

  /// All distinct predicates with counts, same ordering rule as
  /// predicates_by_frequency.
  std::vector<std::pair<std::string, std::size_t>> all_predicates_by_frequency() const;

 private:
  std::vector<Triple> triples_;  // sorted, unique
  std::string label_;
  std::unordered_map<std::string, std::vector<TermPair>> pairs_by_predicate_;
  std::unordered_map<TermPair, std::vector<std::string>, TermPairHash> predicates_by_pair_;
  std::unordered_map<std::string, std::size_t> counts_;
};

}  // namespace predalign
