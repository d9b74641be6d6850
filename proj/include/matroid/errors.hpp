// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDKIT_ERRORS_HPP_
#define MATROIDKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matroid {

/// Malformed or inconsistent caller-supplied data (unknown elements, bad
/// JSON shapes, grounds that do not match).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, never a usage mistake.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration was asked to exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}
inline void require_input(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}
}  // namespace detail

}  // namespace matroid

#endif  // MATROIDKIT_ERRORS_HPP_
