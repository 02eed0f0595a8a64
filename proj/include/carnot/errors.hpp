// Copyright 2026 The Carnot Reach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARNOT_ERRORS_HPP_
#define CARNOT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace carnot {

/// Raised when an input violates a named domain invariant. The invariant name
/// is machine readable and is echoed by the CLI error JSON.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace carnot

#endif  // CARNOT_ERRORS_HPP_
