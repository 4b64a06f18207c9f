#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predalign/link_table.hpp"
#include "predalign/triple_store.hpp"

namespace predalign {

/// One candidate target predicate: `coverage` mapped pairs relinked,
/// `frequency` total triples in the target graph, score =
/// coverage * log(frequency). Natural log unless a base is given; the choice
/// of base scales all scores uniformly and cannot change the ranking or the
/// confidence ratio.
struct CandidateScore {
  std::string predicate;
  std::size_t coverage = 0;
  std::size_t frequency = 0;
  double score = 0.0;
};

struct IndirectResult {
  std::optional<std::string> best;
  double confidence = 0.0;
  std::vector<CandidateScore> candidates;  // descending score, then coverage, then IRI
};

struct IndirectStats {
  std::size_t source_pairs = 0;     // |S_pairSet|
  std::size_t mapped_pairs = 0;     // |T_pairSet|
  std::size_t candidate_count = 0;  // |P_T|
  MapStats map_stats;
};

struct IndirectRun {
  IndirectResult result;
  IndirectStats stats;
};

/// Scores every predicate that links at least one mapped pair in the target
/// store. Sorted by descending score, ties by descending coverage, then
/// ascending IRI.
std::vector<CandidateScore> candidate_scores(const PairSet& mapped_pairs,
                                             const TripleStore& target);

/// Same, with an explicit log base (> 1). Used to check base invariance.
std::vector<CandidateScore> candidate_scores(const PairSet& mapped_pairs,
                                             const TripleStore& target, double log_base);

/// Best candidate and its share of the total score. An all-zero-score list
/// still elects the highest-coverage candidate, with confidence 0. Empty
/// list yields (absent, 0). Expects the ordering produced by
/// candidate_scores.
std::pair<std::optional<std::string>, double> confidence_of(
    const std::vector<CandidateScore>& candidates);

/// End-to-end indirect mapping of one source predicate: extract its
/// subject-object pairs, map them through the link table, relink them in the
/// target store and score the relinking predicates.
IndirectRun map_predicate_indirect(const std::string& source_predicate,
                                   const TripleStore& source, const LinkTable& links,
                                   const TripleStore& target);

}  // namespace predalign
