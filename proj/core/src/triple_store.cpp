#include "predalign/triple_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace predalign {

namespace {
const std::vector<TermPair> kNoPairs;
const std::vector<std::string> kNoPredicates;
}  // namespace

TripleStore TripleStore::build(std::vector<Triple> triples, std::string label) {
  for (const Triple& t : triples) {
    if (!t.subject.is_iri() || !t.predicate.is_iri()) {
      throw std::invalid_argument("triple subject and predicate must be IRIs");
    }
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  TripleStore store;
  store.label_ = std::move(label);
  for (const Triple& t : triples) {
    store.pairs_by_predicate_[t.predicate.value()].emplace_back(t.subject, t.object);
    store.predicates_by_pair_[TermPair(t.subject, t.object)].push_back(t.predicate.value());
    ++store.counts_[t.predicate.value()];
  }
  // The triple vector is sorted (subject, predicate, object), so per-key
  // entries above arrive already sorted and unique within each index bucket.
  for (auto& [pred, pairs] : store.pairs_by_predicate_) {
    pairs.shrink_to_fit();
  }
  for (auto& [pair, preds] : store.predicates_by_pair_) {
    preds.shrink_to_fit();
  }
  store.triples_ = std::move(triples);
  return store;
}

const std::vector<TermPair>& TripleStore::pairs_for_predicate(
    const std::string& predicate_iri) const {
  auto it = pairs_by_predicate_.find(predicate_iri);
  return it == pairs_by_predicate_.end() ? kNoPairs : it->second;
}

const std::vector<std::string>& TripleStore::predicates_linking(const Term& subject,
                                                                const Term& object) const {
  auto it = predicates_by_pair_.find(TermPair(subject, object));
  return it == predicates_by_pair_.end() ? kNoPredicates : it->second;
}

std::size_t TripleStore::predicate_count(const std::string& predicate_iri) const {
  auto it = counts_.find(predicate_iri);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, std::size_t>> TripleStore::all_predicates_by_frequency()
    const {
  std::vector<std::pair<std::string, std::size_t>> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<std::pair<std::string, std::size_t>> TripleStore::predicates_by_frequency(
    std::size_t k) const {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  auto out = all_predicates_by_frequency();
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace predalign
