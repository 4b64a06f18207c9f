#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace predalign {

/// An RDF term: an absolute IRI or a literal. A literal carries at most one
/// of a datatype IRI or a BCP-47 language tag.
class Term {
 public:
  enum class Kind { Iri, Literal };

  static Term iri(std::string value);
  static Term literal(std::string lexical);
  static Term literal_typed(std::string lexical, std::string datatype_iri);
  static Term literal_lang(std::string lexical, std::string language_tag);

  Kind kind() const { return kind_; }
  bool is_iri() const { return kind_ == Kind::Iri; }
  bool is_literal() const { return kind_ == Kind::Literal; }

  /// IRI string for IRIs, lexical form for literals.
  const std::string& value() const { return value_; }
  /// Datatype IRI, empty when absent.
  const std::string& datatype() const { return datatype_; }
  /// Language tag, empty when absent.
  const std::string& language() const { return language_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  Kind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

/// True for a non-empty absolute IRI: either "scheme://..." or a URN of the
/// form "urn:<nid>:<nss>". Angle brackets, quotes, spaces and control
/// characters are rejected anywhere in the string.
bool is_valid_iri(std::string_view iri);

/// One RDF statement. Subject and predicate are always IRI terms; statements
/// with blank nodes are rejected at ingest.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

using TermPair = std::pair<Term, Term>;

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

struct TermPairHash {
  std::size_t operator()(const TermPair& p) const;
};

namespace iris {
inline constexpr const char* owl_equivalent_property =
    "http://www.w3.org/2002/07/owl#equivalentProperty";
inline constexpr const char* owl_same_as = "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr const char* rdfs_label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr const char* xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr const char* xsd_date = "http://www.w3.org/2001/XMLSchema#date";
}  // namespace iris

}  // namespace predalign
