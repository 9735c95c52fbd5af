// Copyright 2026 The tsplift Authors
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

#ifndef TSPLIFT_ERRORS_HPP
#define TSPLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsplift {

/// Invalid argument or malformed input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Instance exceeds a configured resource cap (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity that must hold by construction failed; signals a bug,
/// not a property of the input (CLI exit code 1).
class CheckError : public std::runtime_error {
 public:
  explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsplift

#endif  // TSPLIFT_ERRORS_HPP
