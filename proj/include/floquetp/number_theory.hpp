/*
   Copyright 2026 The floquetp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLOQUETP_NUMBER_THEORY_HPP
#define FLOQUETP_NUMBER_THEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace floquetp {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All positive divisors of n, sorted.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least d >= 1 with base^d = 1 (mod n). Requires gcd(base, n) = 1.
std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t n);

/// If q = p^k with k >= 1, returns k; otherwise 0.
int prime_power_exponent(std::uint64_t q, std::uint64_t p);

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace floquetp

#endif
