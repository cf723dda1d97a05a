// Copyright 2026 The cverify Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cverify {

enum class ErrorCode {
  kInvalidArgument,
  kNotInvertible,
  kExhausted,
  kSharedFactor,
  kMalformedSignature,
  kMalformedInput,
  kDimensionMismatch,
  kResampleLimit,
  kBudgetExceeded,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Verdict : std::uint8_t { kReject = 0, kAccept = 1 };

inline Verdict verdict_from(bool accept) {
  return accept ? Verdict::kAccept : Verdict::kReject;
}

/// Word-level operation counters. Verification routines add to these in
/// bulk per inner loop when a non-null tally is passed.
struct OpTally {
  std::uint64_t word_mul = 0;    // word multiplications (or trit MACs for F3)
  std::uint64_t reductions = 0;  // standalone modular reductions

  OpTally& operator+=(const OpTally& o) {
    word_mul += o.word_mul;
    reductions += o.reductions;
    return *this;
  }
};

}  // namespace cverify
