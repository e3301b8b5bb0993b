#pragma once

#include <doctest.h>

#include "hypmetric/error.hpp"

// Runs `expr` and checks that it throws hypmetric::Error of the given kind.
#define CHECK_ERROR_KIND(expr, expected_kind)                         \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const hypmetric::Error& e_) {                            \
      thrown_ = true;                                                 \
      CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());         \
    }                                                                 \
    CHECK_MESSAGE(thrown_, "expected hypmetric::Error from " #expr); \
  } while (0)

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}
