// Copyright 2026 The choicetree Authors
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

#ifndef CHOICETREE_ERROR_H_
#define CHOICETREE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace choicetree {

// Every failure the library reports is an Error carrying one of these kinds,
// so callers (the CLI in particular) can map them without parsing messages.
enum class ErrorKind {
  kInvalidArgument,
  kNotAPartition,
  kDomainMismatch,
  kEmptyInputSet,
  kEmptyEvent,
  kSpaceMismatch,
  kEmptySubtreeEvent,
  kUnknownNode,
  kEnumerationLimitExceeded,
  kMissingContext,
  kInconsistentSet,
  kEmptySolution,
  kMalformedInstance,
  kGenerationRetryExhausted,
  kSyntaxError,
  kUnknownReference,
  kDuplicateDefinition,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace choicetree

#endif  // CHOICETREE_ERROR_H_
