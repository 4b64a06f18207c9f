#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "predalign/term.hpp"

namespace predalign {

struct TsvDiagnostic {
  std::string file;  // which input the line came from
  std::size_t line = 0;
  std::string reason;
};

/// Two sameAs lines map the same source IRI to different targets.
class ConflictingLinkError : public std::runtime_error {
 public:
  ConflictingLinkError(std::string source_iri, std::string first, std::string second);
  const std::string& source_iri() const { return source_iri_; }
  const std::string& first_target() const { return first_; }
  const std::string& second_target() const { return second_; }

 private:
  std::string source_iri_;
  std::string first_;
  std::string second_;
};

class EmptyLocalNameError : public std::runtime_error {
 public:
  explicit EmptyLocalNameError(const std::string& iri);
};

/// Title-key normalization: percent-decode, underscores to spaces, trim,
/// ASCII case-fold. Titles are stored case-preserving; every lookup goes
/// through this rule.
std::string normalize_title(std::string_view raw);

/// Title of an IRI: the final path (or fragment / URN) segment,
/// percent-decoded, with underscores replaced by spaces and surrounding
/// whitespace trimmed. Throws EmptyLocalNameError when the segment is empty.
std::string title_of(const std::string& iri);

/// Non-throwing variant of title_of.
std::optional<std::string> try_title_of(const std::string& iri);

/// Distinct subject-object pairs of one predicate.
struct PairSet {
  std::string predicate;
  std::vector<TermPair> pairs;  // sorted, unique
};

/// Layered source-to-target resource resolver. sameAs links take precedence
/// over the title-link chain. Immutable after load; reads are thread-safe.
class LinkTable {
 public:
  struct LoadResult {
    LinkTable table;
    std::vector<TsvDiagnostic> diagnostics;
  };

  /// Parses the four two-column TSV documents. Malformed lines are skipped
  /// with a diagnostic; a sameAs key mapped to two different targets throws
  /// ConflictingLinkError. Duplicate title keys keep the first entry and
  /// emit a diagnostic.
  static LoadResult load(std::string_view sameas_tsv, std::string_view source_titles_tsv,
                         std::string_view interlanguage_tsv, std::string_view target_titles_tsv);

  std::optional<std::string> sameas(const std::string& source_iri) const;
  std::optional<std::string> source_iri_for_title(const std::string& normalized_title) const;
  std::optional<std::string> interlanguage(const std::string& normalized_source_title) const;
  std::optional<std::string> target_iri_for_title(const std::string& normalized_title) const;

  const std::unordered_map<std::string, std::string>& sameas_entries() const { return sameas_; }
  const std::unordered_map<std::string, std::string>& source_title_entries() const {
    return title_to_source_;
  }
  const std::unordered_map<std::string, std::string>& interlanguage_entries() const {
    return interlanguage_;
  }
  const std::unordered_map<std::string, std::string>& target_title_entries() const {
    return title_to_target_;
  }

  std::size_t size() const {
    return sameas_.size() + title_to_source_.size() + interlanguage_.size() +
           title_to_target_.size();
  }

 private:
  std::unordered_map<std::string, std::string> sameas_;           // source IRI -> target IRI
  std::unordered_map<std::string, std::string> title_to_source_;  // norm title -> source IRI
  std::unordered_map<std::string, std::string> source_to_title_;  // inverse of the above
  std::unordered_map<std::string, std::string> interlanguage_;    // norm source title -> target title
  std::unordered_map<std::string, std::string> title_to_target_;  // norm title -> target IRI
  std::unordered_map<std::string, std::string> target_to_title_;  // inverse of the above
};

/// True when a plain literal's lexical form is integer, decimal (optionally
/// with exponent) or ISO-8601 date/time/dateTime syntax. Such literals are
/// treated like datatyped ones: universal across languages, mapped by
/// identity.
bool is_datatyped_lexical(std::string_view lexical);

enum class Resolution {
  LiteralIdentity,   // datatyped or numeric/temporal literal, kept as is
  SameAs,            // IRI resolved through a sameAs link
  TitleChainIri,     // IRI resolved through the title link chain
  TitleChainLabel,   // plain string literal resolved through the title chain
  Unresolved,
};

/// Maps one source term to a target term. Case analysis in precedence order:
/// literal identity, sameAs, IRI title chain, label title chain. Unresolvable
/// terms yield absent; never throws.
std::optional<Term> map_term(const Term& u, const LinkTable& links);

/// map_term plus the case that fired, for statistics.
std::pair<std::optional<Term>, Resolution> resolve_term(const Term& u, const LinkTable& links);

struct MapStats {
  std::size_t pairs_in = 0;
  std::size_t pairs_kept = 0;     // both endpoints resolved
  std::size_t pairs_dropped = 0;
  std::size_t distinct_out = 0;   // kept pairs after dedup
  // per-term resolution tallies over both endpoints of every input pair
  std::size_t literal_identity = 0;
  std::size_t sameas = 0;
  std::size_t title_chain_iri = 0;
  std::size_t title_chain_label = 0;
  std::size_t unresolved = 0;
};

struct MappedPairSet {
  PairSet pairs;
  MapStats stats;
};

/// Maps every pair whose two endpoints both resolve; output is deduplicated.
MappedPairSet map_pair_set(const PairSet& source_pairs, const LinkTable& links);

}  // namespace predalign
