/*
   Copyright 2026 The gorcurves Authors

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

#ifndef GORCURVES_ERRORS_HPP
#define GORCURVES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gorcurves {

// Operands from different fields, rings or modules were combined.
class ContractError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Structural misuse: odd Pfaffian size, non-quadric input, empty forms.
class StructureError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// A curve invariant was requested from something that is not a curve.
class DimensionError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Unreadable files and inconsistent input documents.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

// Random data failed a genericity check on every retry.
class GenericityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gorcurves

#endif  // GORCURVES_ERRORS_HPP
