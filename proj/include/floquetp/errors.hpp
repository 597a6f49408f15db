/*
   Copyright 2026 The floquetp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLOQUETP_ERRORS_HPP
#define FLOQUETP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floquetp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad argument value: non-prime characteristic, zero inversion, wrong sizes.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Operands live in different fields and no canonical embedding applies.
class ContextMismatch : public Error {
   public:
    using Error::Error;
};

/// A period sublattice whose index is divisible by the characteristic.
class NotSaturated : public Error {
   public:
    using Error::Error;
};

/// A value was required to lie in a subfield but does not.
class NotInSubfield : public Error {
   public:
    using Error::Error;
};

/// Text input that does not follow the file or literal grammar.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                         : what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

}  // namespace floquetp

#endif
