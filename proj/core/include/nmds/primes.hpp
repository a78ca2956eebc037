// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NMDS_PRIMES_HPP
#define NMDS_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace nmds {

bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint32_t p;
  unsigned e;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// q = p^e with p prime and e >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

/// Prime powers in [lo, hi], ascending.
std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace nmds

#endif  // NMDS_PRIMES_HPP
