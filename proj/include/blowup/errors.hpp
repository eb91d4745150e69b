/*
 * Copyright 2026 The blowup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Operands live in different rings.
struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
  using std::invalid_argument::invalid_argument;
};

/// Exact division left a nonzero remainder.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// A monomial exceeded the packed exponent range.
struct DegreeOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Malformed polynomial text or instance file.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input data violates a structural precondition (shape, alternating, primality...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Groebner computation exceeded its configured budget.
struct Timeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Submaximal Pfaffians requested for an even-size alternating matrix.
struct DegenerateEven : std::domain_error {
  using std::domain_error::domain_error;
};

/// A random presentation does not define a height three Gorenstein ideal
/// (or fails G_d); callers resample.
struct DegenerateInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace blowup
