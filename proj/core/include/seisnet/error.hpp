// Copyright 2026 The seisnet Authors
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
#include <string_view>
#include <utility>

namespace seisnet {

enum class ErrorCode {
  kInvalidFrame,
  kUnsatisfiableSplit,
  kInvalidRate,
  kPrecondition,
  kWrongStreamKind,
  kParameterMismatch,
  kValidation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every recoverable library failure. The code lets
/// callers (and the CLI exit-status mapping) branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Configuration error tied to a dotted field path such as
/// `design.ranges.duty_cycle[2]`.
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message)
      : Error(ErrorCode::kValidation, path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) fail(code, what);
}

}  // namespace detail
}  // namespace seisnet
