// Copyright 2026 The tdcode Authors.
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

namespace tdcode {

enum class ErrorCode {
  kInvalidArgument,    // bad parameters or out-of-range positions
  kMalformedInput,     // unparsable word text, wrong length, symbol >= q
  kMalformedCodeword,  // decode could not parse the block structure
  kNotCorrectable,     // corrupted word is outside the single-duplication model
  kVerificationFailed, // a checked property did not hold
  kGuardExceeded,      // enumeration size above the configured guard
  kInternalDefect,     // an invariant the construction guarantees was violated
};

/// Stable, machine-parsable name of an error code ("malformed_codeword", ...).
std::string_view reason(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdcode
