#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace zhelo {

// Exact rational scalar used throughout. All algebra in this project is
// exact; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// mpq_class has no long long constructor; every integer in this project
// fits a machine long.
inline Rat rat_ll(long long v) { return Rat(static_cast<long>(v)); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_to_string(const Rat& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

// Internal-consistency failure (a proven identity did not hold, an exact
// division failed, ...). Callers treat this as fatal.
struct FaultError : std::runtime_error {
  explicit FaultError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fault(const std::string& msg) { throw FaultError(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fault(msg);
}

}  // namespace zhelo
