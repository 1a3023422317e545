#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tsw/error.hpp"

namespace tsw::detail {

// Splits text into whitespace-separated records, one per non-blank line,
// dropping everything after '#'.
class TextReader {
 public:
  struct Line {
    std::size_t number = 0;
    std::vector<std::string_view> words;
  };

  explicit TextReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      Line rec{number, split(line)};
      if (!rec.words.empty()) lines_.push_back(std::move(rec));
      start = end + 1;
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

  // Next record, which must start with `keyword` and carry exactly
  // `arity` words after it (arity < 0: any count).
  const Line& expect(std::string_view keyword, int arity) {
    if (done()) fail_eof(keyword);
    const Line& line = lines_[pos_++];
    if (line.words[0] != keyword)
      fail(line, "expected '" + std::string(keyword) + "', found '" +
                     std::string(line.words[0]) + "'");
    if (arity >= 0 && static_cast<int>(line.words.size()) != arity + 1)
      fail(line, "'" + std::string(keyword) + "' takes " + std::to_string(arity) +
                     " fields");
    return line;
  }

  bool next_is(std::string_view keyword) const {
    return !done() && lines_[pos_].words[0] == keyword;
  }

  [[noreturn]] static void fail(const Line& line, const std::string& message) {
    throw InvalidInput("line " + std::to_string(line.number) + ": " + message);
  }

  [[noreturn]] static void fail_eof(std::string_view keyword) {
    throw InvalidInput("unexpected end of input, expected '" + std::string(keyword) + "'");
  }

  static long long integer(const Line& line, std::size_t index) {
    std::string_view w = line.words.at(index);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size())
      fail(line, "not an integer: '" + std::string(w) + "'");
    return value;
  }

  static int index_in(const Line& line, std::size_t index, long long bound,
                      std::string_view what) {
    long long v = integer(line, index);
    if (v < 0 || v >= bound)
      fail(line, std::string(what) + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
  }

 private:
  static std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && is_space(s[i])) ++i;
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j])) ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace tsw::detail
