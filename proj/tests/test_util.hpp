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

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include <seisnet/error.hpp>

namespace seisnet::testing {

/// Runs fn and returns the code of the seisnet::Error it throws.
inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected seisnet::Error";
  return ErrorCode::kValidation;
}

/// Runs fn and returns the field path of the ValidationError it throws.
inline std::string path_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.path();
  }
  ADD_FAILURE() << "expected seisnet::ValidationError";
  return {};
}

}  // namespace seisnet::testing
