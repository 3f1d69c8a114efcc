// Copyright 2026 The msws Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSWS_ERROR_HPP_
#define MSWS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msws {

// Error categories surfaced by the C++ layer. The C API maps each one onto a
// msws_status code, so keep the two lists in step.
enum class Errc {
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kParse = 3,
  kIo = 4,
  kInfeasible = 5,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::kParse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace msws

#endif  // MSWS_ERROR_HPP_
