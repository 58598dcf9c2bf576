#pragma once

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lenscx/error.hpp"
#include "lenscx/exactlin.hpp"

template <>
struct Catch::StringMaker<lenscx::BigInt> {
  static std::string convert(const lenscx::BigInt& x) { return x.str(); }
};

namespace support {

inline std::vector<std::string> plain_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

// Kind of the lenscx::Error thrown by fn; fails the test if none is thrown.
template <typename Fn>
lenscx::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const lenscx::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return lenscx::ErrorKind::InvalidInput;
}

}  // namespace support
