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

#ifndef ADSELECT_ERRORS_H_
#define ADSELECT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace adselect {

// Malformed score matrix: bad shape, negative or non-finite entry, or a
// CSV cell that does not parse.
class MatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A selection references a column outside the matrix or repeats one.
class InvalidSelectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested selection size cannot be met (M > N and friends).
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside its domain (r > M, f == 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration refused because C(N, M) exceeds the budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adselect

#endif  // ADSELECT_ERRORS_H_
