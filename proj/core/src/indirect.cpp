#include "predalign/indirect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace predalign {

namespace {

std::vector<CandidateScore> score_with(const PairSet& mapped_pairs, const TripleStore& target,
                                       double log_divisor) {
  std::unordered_map<std::string, std::size_t> coverage;
  for (const TermPair& pair : mapped_pairs.pairs) {
    for (const std::string& p : target.predicates_linking(pair.first, pair.second)) {
      ++coverage[p];
    }
  }
  std::vector<CandidateScore> out;
  out.reserve(coverage.size());
  for (auto& [predicate, c] : coverage) {
    CandidateScore cs;
    cs.predicate = predicate;
    cs.coverage = c;
    cs.frequency = target.predicate_count(predicate);
    cs.score = static_cast<double>(c) * std::log(static_cast<double>(cs.frequency)) / log_divisor;
    out.push_back(std::move(cs));
  }
  std::sort(out.begin(), out.end(), [](const CandidateScore& a, const CandidateScore& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.coverage != b.coverage) return a.coverage > b.coverage;
    return a.predicate < b.predicate;
  });
  return out;
}

}  // namespace

std::vector<CandidateScore> candidate_scores(const PairSet& mapped_pairs,
                                             const TripleStore& target) {
  return score_with(mapped_pairs, target, 1.0);
}

std::vector<CandidateScore> candidate_scores(const PairSet& mapped_pairs,
                                             const TripleStore& target, double log_base) {
  if (!(log_base > 1.0)) throw std::invalid_argument("log base must be > 1");
  return score_with(mapped_pairs, target, std::log(log_base));
}

std::pair<std::optional<std::string>, double> confidence_of(
    const std::vector<CandidateScore>& candidates) {
  if (candidates.empty()) return {std::nullopt, 0.0};
  double total = 0.0;
  for (const CandidateScore& c : candidates) total += c.score;
  // With an all-zero score list the ordering already puts the highest
  // coverage first, which is the elected fallback winner.
  double confidence = total > 0.0 ? candidates.front().score / total : 0.0;
  return {candidates.front().predicate, confidence};
}

IndirectRun map_predicate_indirect(const std::string& source_predicate,
                                   const TripleStore& source, const LinkTable& links,
                                   const TripleStore& target) {
  IndirectRun run;
  PairSet source_pairs{source_predicate, source.pairs_for_predicate(source_predicate)};
  run.stats.source_pairs = source_pairs.pairs.size();

  MappedPairSet mapped = map_pair_set(source_pairs, links);
  run.stats.mapped_pairs = mapped.pairs.pairs.size();
  run.stats.map_stats = mapped.stats;

  run.result.candidates = candidate_scores(mapped.pairs, target);
  run.stats.candidate_count = run.result.candidates.size();
  auto [best, confidence] = confidence_of(run.result.candidates);
  run.result.best = std::move(best);
  run.result.confidence = confidence;
  return run;
}

}  // namespace predalign
