#include "predalign/ntriples.hpp"

#include <cctype>
#include <optional>

#include "predalign/text.hpp"

namespace predalign {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

// Single-line recursive-descent scanner. Errors are reported as reason
// strings; the caller turns them into diagnostics.
class LineScanner {
 public:
  explicit LineScanner(std::string_view line) : s_(line) {}

  std::string_view error() const { return error_; }

  bool failed() const { return !error_.empty(); }

  void skip_ws() {
    while (pos_ < s_.size() && is_ws(s_[pos_])) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool at_comment() const { return peek() == '#'; }

  std::optional<Term> parse_subject() {
    skip_ws();
    if (peek() == '<') return parse_iri_term("subject");
    if (starts_blank()) {
      error_ = "blank-node subject skipped";
      return std::nullopt;
    }
    error_ = "expected IRI subject";
    return std::nullopt;
  }

  std::optional<Term> parse_predicate() {
    skip_ws();
    if (peek() == '<') return parse_iri_term("predicate");
    error_ = "expected IRI predicate";
    return std::nullopt;
  }

  std::optional<Term> parse_object() {
    skip_ws();
    if (peek() == '<') return parse_iri_term("object");
    if (peek() == '"') return parse_literal();
    if (starts_blank()) {
      error_ = "blank-node object skipped";
      return std::nullopt;
    }
    error_ = "expected IRI or literal object";
    return std::nullopt;
  }

  bool parse_terminator() {
    skip_ws();
    if (peek() != '.') {
      error_ = "missing statement terminator '.'";
      return false;
    }
    ++pos_;
    skip_ws();
    if (!at_end() && !at_comment()) {
      error_ = "trailing content after '.'";
      return false;
    }
    return true;
  }

 private:
  bool starts_blank() const {
    return pos_ + 1 < s_.size() && s_[pos_] == '_' && s_[pos_ + 1] == ':';
  }

  std::optional<Term> parse_iri_term(const char* role) {
    ++pos_;  // '<'
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '>') ++pos_;
    if (pos_ >= s_.size()) {
      error_ = std::string("unterminated IRI in ") + role;
      return std::nullopt;
    }
    std::string iri(s_.substr(start, pos_ - start));
    ++pos_;  // '>'
    if (!is_valid_iri(iri)) {
      error_ = std::string("invalid IRI in ") + role + ": '" + iri + "'";
      return std::nullopt;
    }
    return Term::iri(std::move(iri));
  }

  std::optional<Term> parse_literal() {
    ++pos_;  // opening quote
    std::string lexical;
    bool closed = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '"') {
        closed = true;
        ++pos_;
        break;
      }
      if (c == '\\') {
        if (!decode_escape(lexical)) return std::nullopt;
        continue;
      }
      lexical.push_back(c);
      ++pos_;
    }
    if (!closed) {
      error_ = "unterminated literal";
      return std::nullopt;
    }
    // optional ^^<datatype> or @lang
    if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '^') {
      pos_ += 2;
      if (peek() != '<') {
        error_ = "expected datatype IRI after '^^'";
        return std::nullopt;
      }
      auto dt = parse_iri_term("datatype");
      if (!dt) return std::nullopt;
      return Term::literal_typed(std::move(lexical), dt->value());
    }
    if (peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
        ++pos_;
      }
      std::string tag(s_.substr(start, pos_ - start));
      if (!valid_lang_tag(tag)) {
        error_ = "malformed language tag '" + tag + "'";
        return std::nullopt;
      }
      return Term::literal_lang(std::move(lexical), std::move(tag));
    }
    return Term::literal(std::move(lexical));
  }

  // pos_ is on the backslash; advances past the escape on success.
  bool decode_escape(std::string& out) {
    if (pos_ + 1 >= s_.size()) {
      error_ = "dangling escape at end of literal";
      return false;
    }
    char e = s_[pos_ + 1];
    switch (e) {
      case 't': out.push_back('\t'); pos_ += 2; return true;
      case 'b': out.push_back('\b'); pos_ += 2; return true;
      case 'n': out.push_back('\n'); pos_ += 2; return true;
      case 'r': out.push_back('\r'); pos_ += 2; return true;
      case 'f': out.push_back('\f'); pos_ += 2; return true;
      case '"': out.push_back('"'); pos_ += 2; return true;
      case '\'': out.push_back('\''); pos_ += 2; return true;
      case '\\': out.push_back('\\'); pos_ += 2; return true;
      case 'u': return decode_unicode_escape(out, 4);
      case 'U': return decode_unicode_escape(out, 8);
      default:
        error_ = std::string("unknown escape '\\") + e + "'";
        return false;
    }
  }

  bool decode_unicode_escape(std::string& out, int digits) {
    if (pos_ + 2 + digits > s_.size()) {
      error_ = "truncated \\u escape";
      return false;
    }
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char c = s_[pos_ + 2 + i];
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else {
        error_ = "non-hex digit in \\u escape";
        return false;
      }
      cp = cp * 16 + static_cast<char32_t>(v);
    }
    pos_ += 2 + digits;
    if (digits == 4 && cp >= 0xD800 && cp <= 0xDBFF) {
      // high surrogate: must pair with a following \uDC00..\uDFFF escape
      if (pos_ + 6 <= s_.size() && s_[pos_] == '\\' && s_[pos_ + 1] == 'u') {
        char32_t lo = 0;
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
          char c = s_[pos_ + 2 + i];
          int v;
          if (c >= '0' && c <= '9') v = c - '0';
          else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
          else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
          else { ok = false; break; }
          lo = lo * 16 + static_cast<char32_t>(v);
        }
        if (ok && lo >= 0xDC00 && lo <= 0xDFFF) {
          pos_ += 6;
          cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
          append_utf8(out, cp);
          return true;
        }
      }
      error_ = "lone surrogate in \\u escape";
      return false;
    }
    if (cp >= 0xDC00 && cp <= 0xDFFF) {
      error_ = "lone surrogate in \\u escape";
      return false;
    }
    append_utf8(out, cp);
    return true;
  }

  static bool valid_lang_tag(const std::string& tag) {
    if (tag.empty() || tag.front() == '-' || tag.back() == '-') return false;
    bool first_part = true;
    std::size_t part_len = 0;
    for (char c : tag) {
      if (c == '-') {
        if (part_len == 0 || part_len > 8) return false;
        first_part = false;
        part_len = 0;
        continue;
      }
      if (first_part && !std::isalpha(static_cast<unsigned char>(c))) return false;
      ++part_len;
    }
    return part_len >= 1 && part_len <= 8;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::string error_;
};

}  // namespace

ParsedDocument parse_ntriples(std::string_view text) {
  ParsedDocument doc;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    if (begin == text.size() && line_no > 0) break;
    std::size_t end = text.find('\n', begin);
    std::string_view line;
    if (end == std::string_view::npos) {
      line = text.substr(begin);
      begin = text.size() + 1;
    } else {
      line = text.substr(begin, end - begin);
      begin = end + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineScanner scan(line);
    scan.skip_ws();
    if (scan.at_end() || scan.at_comment()) continue;

    auto subject = scan.parse_subject();
    std::optional<Term> predicate;
    std::optional<Term> object;
    if (subject) predicate = scan.parse_predicate();
    if (predicate) object = scan.parse_object();
    if (object && !scan.parse_terminator()) object.reset();

    if (scan.failed()) {
      doc.diagnostics.push_back({line_no, std::string(scan.error())});
      continue;
    }
    doc.triples.push_back({std::move(*subject), std::move(*predicate), std::move(*object)});
  }
  return doc;
}

namespace {

void append_escaped_lexical(std::string& out, const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

std::string term_to_ntriples(const Term& t) {
  std::string out;
  if (t.is_iri()) {
    out.push_back('<');
    out += t.value();
    out.push_back('>');
    return out;
  }
  out.push_back('"');
  append_escaped_lexical(out, t.value());
  out.push_back('"');
  if (!t.datatype().empty()) {
    out += "^^<";
    out += t.datatype();
    out.push_back('>');
  } else if (!t.language().empty()) {
    out.push_back('@');
    out += t.language();
  }
  return out;
}

std::string to_ntriples(const Triple& t) {
  std::string out = term_to_ntriples(t.subject);
  out.push_back(' ');
  out += term_to_ntriples(t.predicate);
  out.push_back(' ');
  out += term_to_ntriples(t.object);
  out += " .";
  return out;
}

std::string to_ntriples(std::span<const Triple> triples) {
  std::string out;
  for (const Triple& t : triples) {
    out += to_ntriples(t);
    out.push_back('\n');
  }
  return out;
}

}  // namespace predalign
