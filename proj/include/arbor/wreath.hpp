/*
   Copyright 2026 The arbor Authors

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

#ifndef ARBOR_WREATH_HPP
#define ARBOR_WREATH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

using BigInt = boost::multiprecision::cpp_int;

/// Descending cycle lengths of a permutation of the leaves.
using CycleType = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kEnumerationCap = 1000000;

/// The d-ary rooted tree of height n.
struct TreeSpec {
    int d = 2;
    int n = 1;

    TreeSpec() = default;
    TreeSpec(int d_, int n_) : d(d_), n(n_) {
        if (d < 2) throw std::invalid_argument("tree arity must be at least 2");
        if (n < 1) throw std::invalid_argument("tree height must be at least 1");
        if (d > 12) throw std::invalid_argument("tree arity above 12 is not supported");
        std::uint64_t leaves = 1;
        for (int i = 0; i < n; ++i) {
            if (leaves > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(d))
                throw std::invalid_argument("leaf count d^n overflows 64 bits");
            leaves *= static_cast<std::uint64_t>(d);
        }
    }
    std::uint64_t leaves() const {
        std::uint64_t l = 1;
        for (int i = 0; i < n; ++i) l *= static_cast<std::uint64_t>(d);
        return l;
    }
};

/// Exponent e in |[S_d]^n| = (d!)^e, that is (d^n - 1)/(d - 1).
inline BigInt wreath_order_exponent(int d, int n) {
    BigInt exponent = 0, pw = 1;
    for (int k = 0; k < n; ++k) {
        exponent += pw;
        pw *= d;
    }
    return exponent;
}

/// |[S_d]^n| = (d!)^{(d^n - 1)/(d - 1)}.
inline BigInt wreath_order(int d, int n) {
    if (d < 2 || n < 1) throw std::invalid_argument("wreath_order needs d >= 2 and n >= 1");
    BigInt fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    BigInt exponent = wreath_order_exponent(d, n);
    if (static_cast<double>(exponent) * std::log2(static_cast<double>(fact)) > 1e8)
        throw std::invalid_argument("wreath order too large to represent");
    return boost::multiprecision::pow(fact, static_cast<unsigned>(exponent));
}

/// log10 |[S_d]^n|, usable where the order itself is too large to build.
inline double wreath_order_log10(int d, int n) {
    double lf = 0;
    for (int i = 2; i <= d; ++i) lf += std::log10(static_cast<double>(i));
    return static_cast<double>(wreath_order_exponent(d, n)) * lf;
}

/// Element (sigma; g_0, ..., g_{d-1}) of [S_d]^h. It acts on a leaf with
/// root digit i and lower digits w by (i, w) -> (sigma(i), g_i(w)).
/// Height 0 is the trivial group.
class WreathElement {
   public:
    WreathElement() = default;

    static WreathElement identity(int d, int height) {
        WreathElement e;
        e.d_ = d;
        e.height_ = height;
        if (height == 0) return e;
        e.top_.resize(d);
        std::iota(e.top_.begin(), e.top_.end(), 0);
        e.children_.assign(d, identity(d, height - 1));
        return e;
    }

    static WreathElement make(std::vector<int> top, std::vector<WreathElement> children) {
        const int d = static_cast<int>(top.size());
        if (d < 2 || children.size() != top.size()) throw std::invalid_argument("wreath element needs d children");
        std::vector<int> seen(d, 0);
        for (int v : top) {
            if (v < 0 || v >= d || seen[v]++) throw std::invalid_argument("top is not a permutation");
        }
        const int h = children[0].height_;
        for (const auto& c : children)
            if (c.height_ != h || (h > 0 && c.d_ != d)) throw std::invalid_argument("children must share height and arity");
        WreathElement e;
        e.d_ = d;
        e.height_ = h + 1;
        e.top_ = std::move(top);
        e.children_ = std::move(children);
        return e;
    }

    int arity() const noexcept { return d_; }
    int height() const noexcept { return height_; }
    const std::vector<int>& top() const noexcept { return top_; }
    const std::vector<WreathElement>& children() const noexcept { return children_; }

    bool is_identity() const {
        for (int i = 0; i < static_cast<int>(top_.size()); ++i)
            if (top_[i] != i) return false;
        for (const auto& c : children_)
            if (!c.is_identity()) return false;
        return true;
    }

    /// Product with the right factor acting first:
    /// (s; g)(u; h) = (s u; g_{u(i)} h_i).
    friend WreathElement operator*(const WreathElement& a, const WreathElement& b) {
        if (a.height_ != b.height_ || a.d_ != b.d_) throw std::invalid_argument("wreath elements of different shapes");
        if (a.height_ == 0) return a;
        WreathElement r;
        r.d_ = a.d_;
        r.height_ = a.height_;
        r.top_.resize(a.d_);
        r.children_.reserve(a.d_);
        for (int i = 0; i < a.d_; ++i) {
            r.top_[i] = a.top_[b.top_[i]];
            r.children_.push_back(a.children_[b.top_[i]] * b.children_[i]);
        }
        return r;
    }

    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.height_ == b.height_ && a.top_ == b.top_ && a.children_ == b.children_;
    }

   private:
    int d_ = 0;
    int height_ = 0;
    std::vector<int> top_;
    std::vector<WreathElement> children_;
};

namespace detail {

inline std::uint64_t factorial(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Permutation of {0..d-1} with the given Lehmer rank.
inline std::vector<int> perm_from_rank(int d, std::uint64_t rank) {
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(d);
    for (int i = d; i >= 1; --i) {
        std::uint64_t f = factorial(i - 1);
        std::uint64_t j = rank / f;
        rank %= f;
        out.push_back(pool[j]);
        pool.erase(pool.begin() + static_cast<long>(j));
    }
    return out;
}

inline std::vector<int> random_perm(int d, std::mt19937_64& rng) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    for (int i = d - 1; i > 0; --i) {
        std::uniform_int_distribution<int> dist(0, i);
        std::swap(p[i], p[dist(rng)]);
    }
    return p;
}

inline CycleType sorted_desc(CycleType c) {
    std::sort(c.rbegin(), c.rend());
    return c;
}

}  // namespace detail

/// |[S_d]^h| in machine arithmetic, for sizes under the enumeration cap.
inline std::uint64_t small_wreath_order(int d, int height) {
    std::uint64_t ord = 1;
    for (int h = 1; h <= height; ++h) {
        std::uint64_t next = detail::factorial(d);
        for (int i = 0; i < d; ++i) next *= ord;
        ord = next;
    }
    return ord;
}

/// Element with the given index in [0, |[S_d]^h|): the top permutation is
/// the least significant digit, followed by the children in order.
inline WreathElement wreath_element_at(int d, int height, std::uint64_t index) {
    if (height == 0) return WreathElement::identity(d, 0);
    const std::uint64_t f = detail::factorial(d);
    std::vector<int> top = detail::perm_from_rank(d, index % f);
    index /= f;
    const std::uint64_t sub = small_wreath_order(d, height - 1);
    std::vector<WreathElement> children;
    children.reserve(d);
    for (int i = 0; i < d; ++i) {
        children.push_back(wreath_element_at(d, height - 1, index % sub));
        index /= sub;
    }
    return WreathElement::make(std::move(top), std::move(children));
}

/// Calls fn on every element of [S_d]^n exactly once.
inline void wreath_enumerate(const TreeSpec& spec, const std::function<void(const WreathElement&)>& fn) {
    if (wreath_order_log10(spec.d, spec.n) > 7 || wreath_order(spec.d, spec.n) > kEnumerationCap)
        throw std::invalid_argument("enumeration cap exceeded: |[S_d]^n| > 10^6");
    const std::uint64_t total = small_wreath_order(spec.d, spec.n);
    for (std::uint64_t i = 0; i < total; ++i) fn(wreath_element_at(spec.d, spec.n, i));
}

/// Uniform element: independent uniform top permutation and children.
inline WreathElement wreath_sample(const TreeSpec& spec, std::mt19937_64& rng) {
    std::function<WreathElement(int)> rec = [&](int h) -> WreathElement {
        if (h == 0) return WreathElement::identity(spec.d, 0);
        std::vector<int> top = detail::random_perm(spec.d, rng);
        std::vector<WreathElement> ch;
        for (int i = 0; i < spec.d; ++i) ch.push_back(rec(h - 1));
        return WreathElement::make(std::move(top), std::move(ch));
    };
    return rec(spec.n);
}

/// Permutation of the d^h leaves in mixed-radix order (root digit most
/// significant); perm[x] is the image of leaf x.
inline std::vector<std::uint32_t> leaf_action(const WreathElement& e) {
    const int h = e.height();
    if (h == 0) return {0};
    const int d = e.arity();
    std::uint64_t block = 1;
    for (int i = 1; i < h; ++i) block *= static_cast<std::uint64_t>(d);
    if (block * static_cast<std::uint64_t>(d) > kEnumerationCap) throw std::invalid_argument("leaf count exceeds 10^6");
    std::vector<std::uint32_t> out(block * static_cast<std::uint64_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<std::uint32_t> sub = leaf_action(e.children()[i]);
        for (std::uint64_t w = 0; w < block; ++w)
            out[i * block + w] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(e.top()[i]) * block + sub[w]);
    }
    return out;
}

inline CycleType permutation_cycle_type(const std::vector<std::uint32_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    CycleType out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    return detail::sorted_desc(std::move(out));
}

/// Cycle type of the leaf action without expanding it: a top cycle
/// i_1 -> ... -> i_L contributes L*c for every c-cycle of
/// h = g_{i_L} ... g_{i_1}.
inline CycleType wreath_cycle_type(const WreathElement& e) {
    if (e.height() == 0) return {1};
    const int d = e.arity();
    std::vector<bool> seen(d, false);
    CycleType out;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        WreathElement h = WreathElement::identity(d, e.height() - 1);
        std::uint64_t len = 0;
        for (int j = i; !seen[j]; j = e.top()[j]) {
            seen[j] = true;
            h = e.children()[j] * h;
            ++len;
        }
        for (std::uint64_t c : wreath_cycle_type(h)) out.push_back(len * c);
    }
    return detail::sorted_desc(std::move(out));
}

/// Cycle type of a uniform random element, drawn level by level: along a
/// top cycle of length L the product of L independent uniform children is
/// itself uniform, so only one child per top cycle is needed.
inline CycleType sample_cycle_type(int d, int height, std::mt19937_64& rng) {
    if (height == 0) return {1};
    std::vector<int> top = detail::random_perm(d, rng);
    std::vector<bool> seen(d, false);
    CycleType out;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (int j = i; !seen[j]; j = top[j]) {
            seen[j] = true;
            ++len;
        }
        for (std::uint64_t c : sample_cycle_type(d, height - 1, rng)) out.push_back(len * c);
    }
    return detail::sorted_desc(std::move(out));
}

/// Cycle-type counts over the whole group; probabilities are count/total.
struct ExactDistribution {
    std::map<CycleType, std::uint64_t> counts;
    std::uint64_t total = 0;

    /// Reduced fraction (numerator, denominator).
    std::pair<std::uint64_t, std::uint64_t> probability(const CycleType& c) const {
        auto it = counts.find(c);
        std::uint64_t num = it == counts.end() ? 0 : it->second;
        std::uint64_t g = std::gcd(num, total);
        if (g == 0) return {0, 1};
        return {num / g, total / g};
    }
};

struct MonteCarloDistribution {
    std::map<CycleType, std::uint64_t> counts;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double probability(const CycleType& c) const {
        auto it = counts.find(c);
        return it == counts.end() || samples == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
    }
};

inline ExactDistribution wreath_exact_distribution(const TreeSpec& spec) {
    ExactDistribution out;
    wreath_enumerate(spec, [&](const WreathElement& e) {
        ++out.counts[wreath_cycle_type(e)];
        ++out.total;
    });
    return out;
}

inline constexpr std::uint64_t kSampleBlock = 4096;

/// Empirical distribution from `samples` uniform elements. Samples are cut
/// into fixed blocks, block b drawing from a generator seeded with
/// (seed, b), so the result does not depend on the number of workers.
inline MonteCarloDistribution wreath_montecarlo_distribution(const TreeSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                                             unsigned workers = 1) {
    if (samples == 0) throw std::invalid_argument("montecarlo needs at least one sample");
    const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(blocks, 64))));
    std::vector<std::map<CycleType, std::uint64_t>> partial(workers);
    auto run = [&](unsigned w) {
        for (std::uint64_t b = w; b < blocks; b += workers) {
            std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                             static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
            std::mt19937_64 rng(ss);
            const std::uint64_t lo = b * kSampleBlock, hi = std::min(samples, lo + kSampleBlock);
            for (std::uint64_t i = lo; i < hi; ++i) ++partial[w][sample_cycle_type(spec.d, spec.n, rng)];
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
    run(0);
    for (auto& t : threads) t.join();
    MonteCarloDistribution out;
    out.samples = samples;
    out.seed = seed;
    for (const auto& p : partial)
        for (const auto& [c, k] : p) out.counts[c] += k;
    return out;
}

inline std::string to_string(const CycleType& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

}  // namespace arbor

#endif  // ARBOR_WREATH_HPP
