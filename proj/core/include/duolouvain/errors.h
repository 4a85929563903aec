// Copyright 2026 The duolouvain Authors.
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

#ifndef DUOLOUVAIN_ERRORS_H_
#define DUOLOUVAIN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace duolouvain {

// Malformed or inconsistent input: bad indices, dimension mismatches,
// invalid operator specs, unreadable files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well formed but the requested computation is undefined or
// infeasible (zero total weight, table too large for exact enumeration).
class NumericError : public std::domain_error {
 public:
  explicit NumericError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace duolouvain

#endif  // DUOLOUVAIN_ERRORS_H_
