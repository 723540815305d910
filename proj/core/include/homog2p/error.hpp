// Copyright 2026 The homog2p Authors
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
#include <utility>

namespace homog2p {

// Error classes map 1:1 onto CLI exit codes. The class is determined by the
// kind of failure, never by data values.
enum class ErrorClass : int {
  usage = 1,       // bad invocation (flags, missing arguments)
  validation = 2,  // input data violates a documented invariant
  io = 3,          // file/stream failures, checksum or version mismatch
  internal = 4,    // broken internal invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string reason, const std::string& message)
      : std::runtime_error(message), class_(cls), reason_(std::move(reason)) {}

  ErrorClass error_class() const { return class_; }

  // Stable machine-readable slug, e.g. "unknown-symbol" or "checksum-mismatch".
  const std::string& reason() const { return reason_; }

 private:
  ErrorClass class_;
  std::string reason_;
};

[[noreturn]] inline void throw_validation(std::string reason, const std::string& message) {
  throw Error(ErrorClass::validation, std::move(reason), message);
}

[[noreturn]] inline void throw_io(std::string reason, const std::string& message) {
  throw Error(ErrorClass::io, std::move(reason), message);
}

[[noreturn]] inline void throw_internal(std::string reason, const std::string& message) {
  throw Error(ErrorClass::internal, std::move(reason), message);
}

}  // namespace homog2p
