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

#include "choicetree/error.h"

#include <string>

namespace choicetree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotAPartition: return "NotAPartition";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kEmptyInputSet: return "EmptyInputSet";
    case ErrorKind::kEmptyEvent: return "EmptyEvent";
    case ErrorKind::kSpaceMismatch: return "SpaceMismatch";
    case ErrorKind::kEmptySubtreeEvent: return "EmptySubtreeEvent";
    case ErrorKind::kUnknownNode: return "UnknownNode";
    case ErrorKind::kEnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorKind::kMissingContext: return "MissingContext";
    case ErrorKind::kInconsistentSet: return "InconsistentSet";
    case ErrorKind::kEmptySolution: return "EmptySolution";
    case ErrorKind::kMalformedInstance: return "MalformedInstance";
    case ErrorKind::kGenerationRetryExhausted: return "GenerationRetryExhausted";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnknownReference: return "UnknownReference";
    case ErrorKind::kDuplicateDefinition: return "DuplicateDefinition";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace choicetree
