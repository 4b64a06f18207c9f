#include "predalign/term.hpp"

#include <stdexcept>

namespace predalign {

Term Term::iri(std::string value) {
  if (!is_valid_iri(value)) {
    throw std::invalid_argument("not an absolute IRI: '" + value + "'");
  }
  return Term(Kind::Iri, std::move(value), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(Kind::Literal, std::move(lexical), {}, {});
}

Term Term::literal_typed(std::string lexical, std::string datatype_iri) {
  if (!is_valid_iri(datatype_iri)) {
    throw std::invalid_argument("literal datatype is not an absolute IRI: '" + datatype_iri + "'");
  }
  return Term(Kind::Literal, std::move(lexical), std::move(datatype_iri), {});
}

Term Term::literal_lang(std::string lexical, std::string language_tag) {
  if (language_tag.empty()) {
    throw std::invalid_argument("empty language tag");
  }
  return Term(Kind::Literal, std::move(lexical), {}, std::move(language_tag));
}

bool is_valid_iri(std::string_view iri) {
  if (iri.empty()) return false;
  for (unsigned char c : iri) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"') return false;
  }
  auto sep = iri.find("://");
  if (sep != std::string_view::npos && sep > 0) return true;
  if (iri.substr(0, 4) == "urn:") {
    std::string_view rest = iri.substr(4);
    auto colon = rest.find(':');
    return colon != std::string_view::npos && colon > 0 && colon + 1 < rest.size();
  }
  return false;
}

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) {
  // boost::hash_combine recipe
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::size_t TermHash::operator()(const Term& t) const {
  std::hash<std::string> hs;
  std::size_t h = static_cast<std::size_t>(t.kind());
  h = mix(h, hs(t.value()));
  h = mix(h, hs(t.datatype()));
  h = mix(h, hs(t.language()));
  return h;
}

std::size_t TermPairHash::operator()(const TermPair& p) const {
  TermHash th;
  return mix(th(p.first), th(p.second));
}

}  // namespace predalign
