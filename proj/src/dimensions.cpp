// Copyright 2026 The schurkit Authors
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
#include "schurkit/dimensions.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace schurkit {

namespace {

// Exact product of small integers kept as prime exponents.
class Factored {
  public:
    void mul(long long x, int sign = 1) {
        if (x <= 0) {
            throw std::logic_error("Factored: nonpositive factor");
        }
        for (long long p = 2; p * p <= x; ++p) {
            while (x % p == 0) {
                exp_[p] += sign;
                x /= p;
            }
        }
        if (x > 1) {
            exp_[x] += sign;
        }
    }
    void div(long long x) { mul(x, -1); }
    void mul_factorial(long long n, int sign = 1) {
        for (long long k = 2; k <= n; ++k) {
            mul(k, sign);
        }
    }
    void div_factorial(long long n) { mul_factorial(n, -1); }

    std::uint64_t value() const {
        std::uint64_t out = 1;
        for (const auto &[p, e] : exp_) {
            if (e < 0) {
                throw std::logic_error("Factored: result is not an integer");
            }
            for (int i = 0; i < e; ++i) {
                if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
                    throw std::overflow_error("dimension exceeds 64 bits");
                }
                out *= static_cast<std::uint64_t>(p);
            }
        }
        return out;
    }

    double real() const {
        long double out = 1;
        for (const auto &[p, e] : exp_) {
            out *= std::pow(static_cast<long double>(p), e);
        }
        return static_cast<double>(out);
    }

  private:
    std::map<long long, int> exp_;
};

} // namespace

namespace {

Factored dim_q_factored(const Partition &lambda, int d) {
    if (d < 1) {
        throw std::invalid_argument("dim_q needs d >= 1");
    }
    const auto lam = padded(canonical(lambda), d);
    Factored f;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            f.mul(static_cast<long long>(lam[i] - lam[j] + j - i));
            f.div(j - i);
        }
    }
    return f;
}

Factored dim_p_factored(const Partition &lambda) {
    const auto lam = canonical(lambda);
    if (lam.empty()) {
        return Factored{};
    }
    const int d = rows(lam);
    std::vector<long long> lt(d);
    for (int i = 0; i < d; ++i) {
        lt[i] = lam[i] + d - 1 - i;
    }
    Factored f;
    f.mul_factorial(box_count(lam));
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            f.mul(lt[i] - lt[j]);
        }
        f.div_factorial(lt[i]);
    }
    return f;
}

} // namespace

std::uint64_t dim_q(const Partition &lambda, int d) { return dim_q_factored(lambda, d).value(); }
std::uint64_t dim_p(const Partition &lambda) { return dim_p_factored(lambda).value(); }
double dim_q_real(const Partition &lambda, int d) { return dim_q_factored(lambda, d).real(); }
double dim_p_real(const Partition &lambda) { return dim_p_factored(lambda).real(); }

std::uint64_t multinomial(const Weight &t) {
    Factored f;
    int n = 0;
    for (int x : t) {
        if (x < 0) {
            throw std::invalid_argument("multinomial: negative entry");
        }
        n += x;
        f.div_factorial(x);
    }
    f.mul_factorial(n);
    return f.value();
}

namespace {

std::uint64_t kostka_rec(const Partition &lambda, const Weight &mu, int d,
                         std::map<std::pair<Partition, int>, std::uint64_t> &memo) {
    if (rows(lambda) > d) {
        return 0;
    }
    if (d == 1) {
        return box_count(lambda) == mu[0] ? 1 : 0;
    }
    auto key = std::make_pair(lambda, d);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const auto lam = padded(lambda, d);
    const int target = box_count(lambda) - mu[d - 1];
    std::uint64_t total = 0;
    std::vector<int> cur(d - 1);
    // Depth-first over interlacing mu' with |mu'| = target.
    auto rec = [&](auto &&self, int i, int sum) -> void {
        if (i == d - 1) {
            if (sum == target) {
                total += kostka_rec(canonical(cur), mu, d - 1, memo);
            }
            return;
        }
        for (int x = lam[i]; x >= lam[i + 1]; --x) {
            cur[i] = x;
            self(self, i + 1, sum + x);
        }
    };
    if (target >= 0) {
        rec(rec, 0, 0);
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

std::uint64_t kostka(const Partition &lambda, const Weight &mu) {
    const auto lam = canonical(lambda);
    if (box_count(lam) != box_count(mu)) {
        throw std::invalid_argument("kostka: |lambda| != |mu|");
    }
    for (int x : mu) {
        if (x < 0) {
            throw std::invalid_argument("kostka: negative weight entry");
        }
    }
    if (mu.empty()) {
        return lam.empty() ? 1 : 0;
    }
    std::map<std::pair<Partition, int>, std::uint64_t> memo;
    return kostka_rec(lam, mu, static_cast<int>(mu.size()), memo);
}

double schur_poly_kostka(const Partition &lambda, const std::vector<double> &r) {
    const int d = static_cast<int>(r.size());
    double total = 0.0;
    for (const auto &mu : enumerate_weights(d, box_count(lambda))) {
        const auto k = kostka(lambda, mu);
        if (k == 0) {
            continue;
        }
        double term = static_cast<double>(k);
        for (int i = 0; i < d; ++i) {
            term *= std::pow(r[i], mu[i]);
        }
        total += term;
    }
    return total;
}

} // namespace schurkit
