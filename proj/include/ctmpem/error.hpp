// Copyright 2026 The ctmpem Authors
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

#ifndef CTMPEM_ERROR_HPP
#define CTMPEM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ctmpem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable category, e.g. "size" or "fit".
  virtual const char *category() const noexcept { return "error"; }
};

#define CTMPEM_DEFINE_ERROR(Name, tag)                          \
  class Name : public Error {                                   \
   public:                                                      \
    using Error::Error;                                         \
    const char *category() const noexcept override { return tag; } \
  };

CTMPEM_DEFINE_ERROR(SizeError, "size")
CTMPEM_DEFINE_ERROR(ShapeError, "shape")
CTMPEM_DEFINE_ERROR(ArgumentError, "argument")
CTMPEM_DEFINE_ERROR(ValidityError, "validity")
CTMPEM_DEFINE_ERROR(FitError, "fit")
CTMPEM_DEFINE_ERROR(IncompleteCalibrationError, "incomplete_calibration")
CTMPEM_DEFINE_ERROR(ConsistencyError, "consistency")
CTMPEM_DEFINE_ERROR(ConfigError, "config")
CTMPEM_DEFINE_ERROR(IoError, "io")

#undef CTMPEM_DEFINE_ERROR

}  // namespace ctmpem

#endif  // CTMPEM_ERROR_HPP
