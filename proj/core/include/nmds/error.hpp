// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NMDS_ERROR_HPP
#define NMDS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nmds {

enum class ErrorCode {
  kNotPrime,
  kReducible,
  kDegreeMismatch,
  kContextMismatch,
  kEvenCharacteristic,
  kOddCharacteristic,
  kDegenerate,
  kTooLarge,
  kUnsupported,
  kVerificationFailed,
  kInvalidArgument,
  kDivisionByZero,
  kParse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` names
/// the failure class so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nmds

#endif  // NMDS_ERROR_HPP
