// Copyright 2023 The Authors.
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

#ifndef TUTTECERT_ERRORS_H_
#define TUTTECERT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tuttecert {

// Invalid arguments are reported with std::invalid_argument. The two types
// below cover the remaining failure classes.

// An input lies outside the mathematical domain of an operation (for example
// a disconnected graph where a spanning tree is required).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration would exceed the desk-scale size caps.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed input file or descriptor. The message names the offending field.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tuttecert

#endif  // TUTTECERT_ERRORS_H_
