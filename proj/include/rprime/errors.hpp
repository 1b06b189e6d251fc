// Copyright 2026 The rprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rprime {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument is outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A table does not reach far enough to answer the query.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& what, std::uint64_t required)
      : Error(what), required_(required) {}

  // The smallest table bound that would satisfy the request (0 if unknown).
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

// Construction would exceed the configured memory ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A proved identity failed on computed data. Always an implementation defect.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A cache file is missing, truncated, or from another format version.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace rprime
