#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tsw/instance.hpp"
#include "tsw/swaps.hpp"

namespace tsw {

// Instance text format (line oriented, '#' starts a comment):
//
//   tsw v1 <ts|cts|sts>
//   n <vertices> m <edges>
//   e <u> <v>                      (m lines)
//   t <token> <dest>               (ts:  n lines)
//   c <vertex> <vcolor> <tcolor>   (cts: n lines)
//   d <token> <k> <dest>...        (sts: n lines)
//
// Solution format:
//
//   sol <length>
//   s <u> <v>                      (length lines, canonical u < v)
//
// A bundle is an instance optionally followed by `budget <l>` and a
// solution, which is what the generators emit.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

SwapSequence parse_solution(std::string_view text);
std::string serialize_solution(const SwapSequence& s);

struct Bundle {
  Instance instance;
  std::optional<long long> budget;
  std::optional<SwapSequence> solution;
};

Bundle parse_bundle(std::string_view text);
std::string serialize_bundle(const Bundle& b);

// Reads a whole file, or standard input when path is "-". Throws
// IoError on I/O failure.
std::string read_text(const std::string& path, std::istream& stdin_stream);

}  // namespace tsw
