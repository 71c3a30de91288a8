// Copyright 2026 The wmg Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace wmg {

// Thrown when an operation's correctness guarantee does not cover the
// input (e.g. a gated-hull request on a non-weakly-modular graph).
struct NotApplicableError : std::runtime_error {
  explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exhaustive solver would exceed its enumeration budget.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a bounded search reaches its cap with a positive answer,
// so the exact extremum is only known to be >= cap.
struct CapReachedError : std::runtime_error {
  explicit CapReachedError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the universal-cover construction when a layer exceeds the
// configured vertex cap (the cover can be infinite).
struct RadiusTooLargeError : std::runtime_error {
  explicit RadiusTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the iterated diagonal extension does not stabilize within
// the iteration cap.
struct RankDivergesError : std::runtime_error {
  explicit RankDivergesError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAClosedWalkError : std::runtime_error {
  explicit NotAClosedWalkError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wmg
