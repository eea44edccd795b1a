// Copyright 2026 The sop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOP_ERROR_HPP
#define SOP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sop {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text or word.  Carries the 1-based line number
  // when the failure came from a file (0 otherwise).
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line = 0)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // The input does not satisfy the small overlap condition (or other
  // structural requirement) an operation needs.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Argument outside the documented domain (bad index, guard exceeded, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace sop

#endif  // SOP_ERROR_HPP
