/*
   Copyright 2026 The cremona Authors

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

#ifndef CREMONA_ERROR_HPP
#define CREMONA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different fields, or in rings with different variable counts.
class FieldMismatch : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// The divisor does not divide the dividend. Never carries a remainder.
class InexactDivision : public Error {
   public:
    using Error::Error;
};

/// A documented precondition was violated (bad degree, all-zero tuple, ...).
class ContractViolation : public Error {
   public:
    using Error::Error;
};

/// Malformed text input. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace cremona

#endif
