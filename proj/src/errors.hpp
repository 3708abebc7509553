// Copyright 2026 The hwkc developers
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

namespace hwk {

enum class ErrorCode {
  InvalidArgument,
  WrongWeight,
  WrongLength,
  NotNormalized,
  DuplicateKey,
  InvalidK,
  DegenerateDraw,
  TooManyQubits,
  IndexOutOfRange,
  SizeMismatch,
  ParseError,
  IoError,
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::WrongWeight: return "WrongWeight";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hwk
