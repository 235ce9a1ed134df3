/*
   Copyright 2026 The qlin Authors

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

#ifndef QLIN_ERRORS_HPP
#define QLIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlin {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different fields (or coefficient rings).
class field_mismatch : public error {
   public:
    using error::error;
};

class division_by_zero : public error {
   public:
    using error::error;
};

/// A documented precondition of an operation does not hold.
class precondition_error : public error {
   public:
    using error::error;
};

/// A rational function was evaluated at a zero of its denominator.
class pole_error : public error {
   public:
    using error::error;
};

/// A specialization is not separable, so factor degrees do not give cycle types.
class ramified_error : public error {
   public:
    using error::error;
};

/// A size guard (field degree, t-degree, enumeration bound) would be exceeded.
class guard_exceeded : public error {
   public:
    using error::error;
};

/// Text input does not conform to the polynomial grammar.
class parse_error : public error {
   public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

}  // namespace qlin

#endif
