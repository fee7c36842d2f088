// Copyright 2026 The qgxor Authors
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

#include <stdexcept>
#include <string>

namespace qgxor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad dimension, label, index...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Post-selection on an outcome that has zero probability.
class ImpossibleOutcome : public Error {
  public:
    using Error::Error;
};

/// The success probability of a post-selected map fell below the floor.
class VanishingProbability : public Error {
  public:
    using Error::Error;
};

/// A dense construction would exceed the configured size guard.
class CapacityExceeded : public Error {
  public:
    using Error::Error;
};

}  // namespace qgxor
