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

#ifndef CHOICETREE_TESTS_SUPPORT_EXPECT_ERROR_H_
#define CHOICETREE_TESTS_SUPPORT_EXPECT_ERROR_H_

#include <gtest/gtest.h>

#include "choicetree/error.h"

// Asserts that `stmt` throws a choicetree::Error of the given kind.
#define EXPECT_ERROR_KIND(stmt, expected_kind)                              \
  do {                                                                      \
    bool thrown_ = false;                                                   \
    try {                                                                   \
      (void)(stmt);                                                         \
    } catch (const ::choicetree::Error& e_) {                               \
      thrown_ = true;                                                       \
      EXPECT_EQ(e_.kind(), ::choicetree::ErrorKind::expected_kind)          \
          << e_.what();                                                     \
    }                                                                       \
    EXPECT_TRUE(thrown_) << "expected " #expected_kind " from " #stmt;     \
  } while (false)

#endif  // CHOICETREE_TESTS_SUPPORT_EXPECT_ERROR_H_
