#include "predalign/link_table.hpp"

#include <algorithm>
#include <regex>

#include "predalign/text.hpp"
#include "tsv_util.hpp"

namespace predalign {

ConflictingLinkError::ConflictingLinkError(std::string source_iri, std::string first,
                                           std::string second)
    : std::runtime_error("conflicting sameAs links for '" + source_iri + "': '" + first +
                         "' vs '" + second + "'"),
      source_iri_(std::move(source_iri)),
      first_(std::move(first)),
      second_(std::move(second)) {}

EmptyLocalNameError::EmptyLocalNameError(const std::string& iri)
    : std::runtime_error("IRI has an empty local name: '" + iri + "'") {}

std::string normalize_title(std::string_view raw) {
  std::string s = percent_decode(raw);
  std::replace(s.begin(), s.end(), '_', ' ');
  return ascii_fold(trim(s));
}

std::optional<std::string> try_title_of(const std::string& iri) {
  std::string_view v(iri);
  std::size_t cut;
  if (v.substr(0, 4) == "urn:") {
    cut = v.rfind(':');
  } else {
    cut = v.find_last_of("/#");
  }
  std::string_view segment =
      cut == std::string_view::npos ? v : v.substr(cut + 1);
  std::string title = percent_decode(segment);
  std::replace(title.begin(), title.end(), '_', ' ');
  title = trim(title);
  if (title.empty()) return std::nullopt;
  return title;
}

std::string title_of(const std::string& iri) {
  auto t = try_title_of(iri);
  if (!t) throw EmptyLocalNameError(iri);
  return *t;
}

namespace {

struct MapLoader {
  std::unordered_map<std::string, std::string>& map;
  const char* file;
  std::vector<TsvDiagnostic>& diagnostics;

  // normalize_key applies to column `key_col`; returns true if inserted
  void load(std::string_view tsv, bool normalize_key, bool sameas_conflict_check,
            std::unordered_map<std::string, std::string>* inverse = nullptr) {
    detail::for_each_line(tsv, [&](std::size_t line_no, std::string_view line) {
      std::string_view cols[2];
      if (!detail::split_tsv(line, cols)) {
        diagnostics.push_back({file, line_no, "expected exactly 2 tab-separated columns"});
        return;
      }
      std::string key = normalize_key ? normalize_title(cols[0]) : std::string(trim(cols[0]));
      std::string value(trim(cols[1]));
      if (key.empty() || value.empty()) {
        diagnostics.push_back({file, line_no, "empty column"});
        return;
      }
      auto [it, inserted] = map.try_emplace(key, value);
      if (!inserted && it->second != value) {
        if (sameas_conflict_check) {
          throw ConflictingLinkError(key, it->second, value);
        }
        diagnostics.push_back(
            {file, line_no, "duplicate key '" + key + "', first entry kept"});
        return;
      }
      if (inverse && inserted) inverse->emplace(value, key);
    });
  }
};

}  // namespace

LinkTable::LoadResult LinkTable::load(std::string_view sameas_tsv,
                                      std::string_view source_titles_tsv,
                                      std::string_view interlanguage_tsv,
                                      std::string_view target_titles_tsv) {
  LoadResult result;
  LinkTable& t = result.table;
  MapLoader{t.sameas_, "sameas", result.diagnostics}.load(sameas_tsv, false, true);
  MapLoader{t.title_to_source_, "source_titles", result.diagnostics}.load(
      source_titles_tsv, true, false, &t.source_to_title_);
  MapLoader{t.interlanguage_, "interlanguage", result.diagnostics}.load(interlanguage_tsv, true,
                                                                        false);
  MapLoader{t.title_to_target_, "target_titles", result.diagnostics}.load(
      target_titles_tsv, true, false, &t.target_to_title_);
  return result;
}

namespace {

std::optional<std::string> find_in(const std::unordered_map<std::string, std::string>& m,
                                   const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::optional<std::string> LinkTable::sameas(const std::string& source_iri) const {
  return find_in(sameas_, source_iri);
}

std::optional<std::string> LinkTable::source_iri_for_title(
    const std::string& normalized_title) const {
  return find_in(title_to_source_, normalized_title);
}

std::optional<std::string> LinkTable::interlanguage(
    const std::string& normalized_source_title) const {
  return find_in(interlanguage_, normalized_source_title);
}

std::optional<std::string> LinkTable::target_iri_for_title(
    const std::string& normalized_title) const {
  return find_in(title_to_target_, normalized_title);
}

bool is_datatyped_lexical(std::string_view lexical) {
  static const std::regex integer_re(R"(^[+-]?[0-9]+$)", std::regex::optimize);
  static const std::regex decimal_re(R"(^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?$)",
                                     std::regex::optimize);
  static const std::regex date_re(R"(^[0-9]{4}-[0-9]{2}-[0-9]{2}(Z|[+-][0-9]{2}:[0-9]{2})?$)",
                                  std::regex::optimize);
  static const std::regex time_re(
      R"(^[0-9]{2}:[0-9]{2}:[0-9]{2}(\.[0-9]+)?(Z|[+-][0-9]{2}:[0-9]{2})?$)",
      std::regex::optimize);
  static const std::regex datetime_re(
      R"(^[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}(\.[0-9]+)?(Z|[+-][0-9]{2}:[0-9]{2})?$)",
      std::regex::optimize);
  std::string s(lexical);
  return std::regex_match(s, integer_re) || std::regex_match(s, decimal_re) ||
         std::regex_match(s, date_re) || std::regex_match(s, time_re) ||
         std::regex_match(s, datetime_re);
}

namespace {

// Shared tail of the title chain: normalized source-language title ->
// interlanguage link -> target title -> target IRI.
std::optional<Term> follow_title_chain(const std::string& normalized_source_title,
                                       const LinkTable& links) {
  auto target_title = links.interlanguage(normalized_source_title);
  if (!target_title) return std::nullopt;
  auto target_iri = links.target_iri_for_title(normalize_title(*target_title));
  if (!target_iri) return std::nullopt;
  return Term::iri(*target_iri);
}

}  // namespace

std::pair<std::optional<Term>, Resolution> resolve_term(const Term& u, const LinkTable& links) {
  if (u.is_literal()) {
    // Case 1: datatyped (or numeric/temporal) literals are universal.
    if (!u.datatype().empty() || is_datatyped_lexical(u.value())) {
      return {u, Resolution::LiteralIdentity};
    }
    // Case 4: plain string label, one-word title match into the chain.
    std::string key = normalize_title(u.value());
    if (!key.empty() && links.source_iri_for_title(key)) {
      if (auto mapped = follow_title_chain(key, links)) {
        return {std::move(mapped), Resolution::TitleChainLabel};
      }
    }
    return {std::nullopt, Resolution::Unresolved};
  }

  // Case 2: direct sameAs link.
  if (auto target = links.sameas(u.value())) {
    return {Term::iri(*target), Resolution::SameAs};
  }

  // Case 3: derive the IRI's title and follow the chain, provided the title
  // registry anchors that title to this very IRI.
  if (auto title = try_title_of(u.value())) {
    std::string key = normalize_title(*title);
    auto anchor = links.source_iri_for_title(key);
    if (anchor && *anchor == u.value()) {
      if (auto mapped = follow_title_chain(key, links)) {
        return {std::move(mapped), Resolution::TitleChainIri};
      }
    }
  }
  return {std::nullopt, Resolution::Unresolved};
}

std::optional<Term> map_term(const Term& u, const LinkTable& links) {
  return resolve_term(u, links).first;
}

namespace {

void tally(MapStats& stats, Resolution r) {
  switch (r) {
    case Resolution::LiteralIdentity: ++stats.literal_identity; break;
    case Resolution::SameAs: ++stats.sameas; break;
    case Resolution::TitleChainIri: ++stats.title_chain_iri; break;
    case Resolution::TitleChainLabel: ++stats.title_chain_label; break;
    case Resolution::Unresolved: ++stats.unresolved; break;
  }
}

}  // namespace

MappedPairSet map_pair_set(const PairSet& source_pairs, const LinkTable& links) {
  MappedPairSet out;
  out.pairs.predicate = source_pairs.predicate;
  out.stats.pairs_in = source_pairs.pairs.size();
  for (const TermPair& pair : source_pairs.pairs) {
    auto [a, case_a] = resolve_term(pair.first, links);
    auto [b, case_b] = resolve_term(pair.second, links);
    tally(out.stats, case_a);
    tally(out.stats, case_b);
    if (a && b) {
      ++out.stats.pairs_kept;
      out.pairs.pairs.emplace_back(std::move(*a), std::move(*b));
    } else {
      ++out.stats.pairs_dropped;
    }
  }
  std::sort(out.pairs.pairs.begin(), out.pairs.pairs.end());
  out.pairs.pairs.erase(std::unique(out.pairs.pairs.begin(), out.pairs.pairs.end()),
                        out.pairs.pairs.end());
  out.stats.distinct_out = out.pairs.pairs.size();
  return out;
}

}  // namespace predalign
