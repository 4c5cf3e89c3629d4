// Copyright 2026 The smx Authors.
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

#ifndef SMX_TESTS_TEST_UTIL_H_
#define SMX_TESTS_TEST_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "smx/error.h"
#include "smx/oracle.h"

// Expects `stmt` to throw smx::Error with the given code.
#define EXPECT_SMX_ERROR(stmt, expected_code)                       \
  do {                                                              \
    try {                                                           \
      stmt;                                                         \
      ADD_FAILURE() << "expected smx::Error from " #stmt;           \
    } catch (const ::smx::Error& e) {                               \
      EXPECT_EQ(e.code(), expected_code) << e.what();               \
    }                                                               \
  } while (0)

namespace smx::testing {

inline Bitset Set(std::size_t n, std::vector<std::size_t> indices) {
  return Bitset::FromIndices(n, indices);
}

inline OraclePtr Constant(std::size_t n1, std::size_t n2, double c) {
  return MakeOracle(n1, n2, [c](const Bitset&, const Bitset&) { return c; });
}

inline GroundFunction ConstantFn(std::size_t n, double c) {
  return {n, [c](const Bitset&) { return c; }};
}

inline GroundFunction Fn(std::size_t n, std::function<double(const Bitset&)> f) {
  return {n, std::move(f)};
}

}  // namespace smx::testing

#endif  // SMX_TESTS_TEST_UTIL_H_
