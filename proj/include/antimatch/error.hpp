// Copyright 2026 The antimatch Authors.
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

namespace antimatch {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown vertex ids, inconsistent preferences, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to go beyond its configured size cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A family that was required to be an antimatroid is not one.
class AxiomError : public Error {
 public:
  using Error::Error;
};

}  // namespace antimatch
