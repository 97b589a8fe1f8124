#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foxcalc/cylinder.hpp"

namespace foxcalc {

using Rng = std::mt19937_64;

Word random_word(Rng& rng, int rank, int max_length);
FreeRingElement random_ring_element(Rng& rng, int rank, int max_terms, int max_length);
/// Images are independent random words (not necessarily an automorphism).
Endomorphism random_endomorphism(Rng& rng, int rank, int max_length);
/// Product of `count` random catalogue twists.
Endomorphism random_twist_product(Rng& rng, int genus, int count);

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Seeded run of the library's algebraic invariants at reduced sample sizes.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed);

}  // namespace foxcalc
