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

// A deliberately separate, table-driven model of GF(q^2) used to cross-check
// the library. Two constructions only:
//   q = p odd prime:  GF(p)[t] / (t^2 - n), n the least non-residue
//   q = 2^e:          GF(2)[t] / (f), f found by trial division on bitmasks
// Nothing here shares code with nmds_core.

#ifndef NMDS_TESTS_ORACLE_NAIVE_HPP
#define NMDS_TESTS_ORACLE_NAIVE_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

class QuadraticExtension {
 public:
  /// q an odd prime or a power of two with q^2 <= 1024.
  static bool supported(std::uint64_t q);
  explicit QuadraticExtension(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int pow(int a, std::uint64_t n) const;
  int trace(int x) const { return add(x, pow(x, q_)); }

  const std::vector<int>& subfield() const { return subfield_; }
  /// x^(q+1) = 1 without -1.
  const std::vector<int>& domain() const { return domain_; }
  int size() const { return size_; }

 private:
  std::uint64_t q_;
  int size_;
  std::vector<int> add_, mul_, neg_;
  std::vector<int> subfield_, domain_;
};

using Distribution = std::map<std::size_t, std::uint64_t>;

/// Nonzero entries of the weight distribution of
/// { ((Tr(bx + b) + c)_{x in D}, -Tr(b)) }.
Distribution weight_distribution(const QuadraticExtension& f);

/// How many (b, c) have exactly k solutions x in D, keyed by k.
std::map<std::uint64_t, std::uint64_t> solution_count_histogram(const QuadraticExtension& f);

}  // namespace oracle

#endif  // NMDS_TESTS_ORACLE_NAIVE_HPP
