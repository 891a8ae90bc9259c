/*
   Copyright 2026 The skl Authors

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

#ifndef SKL_ERRORS_HPP
#define SKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skl {

/// Operands live in different fields, algebras or contexts.
struct mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shapes or dimensions do not agree.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inversion of zero, or of a non-invertible map.
struct zero_division_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A structural axiom failed (field modulus, associativity, sigma-derivation rule, ...).
struct axiom_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// The requested ring does not exist for this skew derivation
/// (series need delta nilpotent; Laurent series also need sigma invertible and delta' nilpotent).
struct context_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A truncated operation was asked for more output than its inputs determine.
struct precision_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed textual or JSON input.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace skl

#endif
