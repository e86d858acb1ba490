// Copyright 2026 The fentropy authors
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

namespace fentropy {

/// Base type for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonHermitianInput : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NegativeEigenvalue : Error {
  using Error::Error;
};
struct TooManyModes : Error {
  using Error::Error;
};
struct OverlappingRegions : Error {
  using Error::Error;
};
struct NotNested : Error {
  using Error::Error;
};
struct BothMarginalsNoneven : Error {
  using Error::Error;
};
struct TripleNotCommutingSquare : Error {
  using Error::Error;
};
struct NotOdd : Error {
  using Error::Error;
};
struct NormTooLarge : Error {
  using Error::Error;
};
struct SingularDensity : Error {
  using Error::Error;
};
struct LambdaOutOfRange : Error {
  using Error::Error;
};
struct UnsupportedSize : Error {
  using Error::Error;
};
struct BadSplit : Error {
  using Error::Error;
};
struct ReconstructionFailed : Error {
  using Error::Error;
};
struct ComponentNotProduct : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace fentropy
