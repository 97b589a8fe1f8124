#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "foxcalc/word.hpp"

namespace support {

inline std::string corpus_path(const std::string& name) { return std::string(FOXCALC_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::uint64_t seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("FOXCALC_SEED")) return std::strtoull(env, nullptr, 10) ^ fallback;
  return fallback;
}

// Collected normal form in the Heisenberg group F_2 / Gamma^3:
// x1 = (1,0,0), x2 = (0,1,0), (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
using Heisenberg = std::array<long long, 3>;

inline Heisenberg heisenberg(const foxcalc::Word& w) {
  Heisenberg h{0, 0, 0};
  for (int l : w.letters()) {
    const long long e = l > 0 ? 1 : -1;
    if (std::abs(l) == 1) {
      h[0] += e;
    } else {
      h[2] += h[0] * e;
      h[1] += e;
    }
  }
  return h;
}

// Equality in F_2 / Gamma^k for k <= 3, read off the normal form.
inline bool collected_equal(const foxcalc::Word& a, const foxcalc::Word& b, int k) {
  const Heisenberg x = heisenberg(a), y = heisenberg(b);
  if (k <= 1) return true;
  if (k == 2) return x[0] == y[0] && x[1] == y[1];
  return x == y;
}

}  // namespace support
