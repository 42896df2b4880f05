// Copyright 2026 The mzqfi Authors
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

#ifndef MZQFI_ERRORS_HPP
#define MZQFI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzqfi {

enum class ErrorCode {
    InvalidArgument = 1,
    Integrity = 2,
    DegenerateFss = 3,
    NonPositiveFisher = 4,
    CutoffTooSmall = 5,
    AllCoeffsZero = 6,
    Config = 7,
    Verification = 8,
    Io = 9,
};

/// Every failure raised by the library carries one of the codes above so the
/// C boundary can translate it without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace mzqfi

#endif
