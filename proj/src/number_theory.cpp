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

#include "floquetp/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "floquetp/errors.hpp"

namespace floquetp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Brent's variant of Pollard rho; n is odd composite.
std::uint64_t pollard_brent(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t sp = 2; sp < 1000 && sp * sp <= n; ++sp) {
        while (n % sp == 0) {
            primes.push_back(sp);
            n /= sp;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (auto q : primes) {
        if (!out.empty() && out.back().first == q)
            ++out.back().second;
        else
            out.emplace_back(q, 1);
    }
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (auto [q, e] : factorize(n)) {
        const std::size_t base = ds.size();
        std::uint64_t pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t n) {
    if (n == 0) throw DomainError("multiplicative_order_mod: modulus must be positive");
    if (n == 1) return 1;
    if (std::gcd(base % n, n) != 1) throw DomainError("multiplicative_order_mod: base not invertible");
    // The order divides phi(n); search the divisors of phi(n).
    std::uint64_t phi = n;
    for (auto [q, e] : factorize(n)) phi = phi / q * (q - 1);
    for (auto d : divisors(phi)) {
        if (pow_mod(base, d, n) == 1) return d;
    }
    return phi;
}

int prime_power_exponent(std::uint64_t q, std::uint64_t p) {
    if (p < 2 || q < p) return 0;
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    return q == 1 ? k : 0;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace floquetp
