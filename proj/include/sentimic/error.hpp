/*
 * Copyright 2026 The sentimic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sentimic {

/// Error categories shared by every module. The CLI maps them onto its
/// exit-code contract (see pipeline.hpp).
enum class Errc {
  invalid_argument,
  missing_input,
  parse_error,
  invalid_data,
  empty_input,
  duplicate_date,
  degenerate_range,
  too_few_points,
  no_overlap,
  oracle_limit,
  io_error,
  locked,
};

inline std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::missing_input: return "MISSING_INPUT";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::invalid_data: return "INVALID_DATA";
    case Errc::empty_input: return "EMPTY_INPUT";
    case Errc::duplicate_date: return "DUPLICATE_DATE";
    case Errc::degenerate_range: return "DEGENERATE_RANGE";
    case Errc::too_few_points: return "TOO_FEW_POINTS";
    case Errc::no_overlap: return "NO_OVERLAP";
    case Errc::oracle_limit: return "ORACLE_LIMIT";
    case Errc::io_error: return "IO_ERROR";
    case Errc::locked: return "LOCKED";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A malformed row in a delimited input file. `line` is 1-based and counts
/// the header line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sentimic
