#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

namespace predalign::detail {

// Calls fn(line_no, line) for every line, 1-based, \r\n tolerant.
// Empty lines are skipped.
inline void for_each_line(std::string_view text,
                          const std::function<void(std::size_t, std::string_view)>& fn) {
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    std::string_view line;
    if (end == std::string_view::npos) {
      line = text.substr(begin);
      begin = text.size();
    } else {
      line = text.substr(begin, end - begin);
      begin = end + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    fn(line_no, line);
  }
}

// Splits into exactly `n` tab-separated fields. Returns false on any other
// column count.
template <std::size_t N>
bool split_tsv(std::string_view line, std::string_view (&out)[N]) {
  std::size_t field = 0;
  std::size_t begin = 0;
  while (field < N) {
    std::size_t tab = line.find('\t', begin);
    if (tab == std::string_view::npos) {
      out[field++] = line.substr(begin);
      return field == N;
    }
    out[field++] = line.substr(begin, tab - begin);
    begin = tab + 1;
  }
  return false;  // more separators than expected
}

}  // namespace predalign::detail
