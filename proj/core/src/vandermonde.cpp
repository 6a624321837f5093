// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/vandermonde.hpp>

#include <antisym/permutation.hpp>
#include <antisym/polynomial.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace antisym {

namespace {

constexpr std::size_t kLeafSize = 16;
constexpr std::size_t kMaxTerms = 48;
constexpr double kSeparation = 0.5; // (r_A + r_B) / |c_B - c_A| admitted to the series
constexpr double kTruncation = 1e-17;

using Moments = std::array<double, kMaxTerms + 1>;

struct BinomialTable {
    std::array<std::array<double, kMaxTerms + 1>, kMaxTerms + 1> c{};
    BinomialTable() {
        for (std::size_t m = 0; m <= kMaxTerms; ++m) {
            c[m][0] = c[m][m] = 1.0;
            for (std::size_t k = 1; k < m; ++k) c[m][k] = c[m - 1][k - 1] + c[m - 1][k];
        }
    }
};

const BinomialTable& binomials() {
    static const BinomialTable table;
    return table;
}

struct Node {
    std::size_t lo = 0, hi = 0;
    double centre = 0.0, radius = 0.0;
    int left = -1, right = -1;
    Moments moments{}; // sum over node of ((t - centre) / radius)^m
    [[nodiscard]] bool leaf() const noexcept { return left < 0; }
    [[nodiscard]] double count() const noexcept { return static_cast<double>(hi - lo); }
};

class LogPairTree {
public:
    explicit LogPairTree(std::span<const double> sorted) : t_(sorted) {
        nodes_.reserve(4 * (sorted.size() / kLeafSize + 1));
        build(0, sorted.size());
    }

    /// sum_{i<j} ln(t_j - t_i) == (1/2) sum_i ln|P'(t_i)|
    [[nodiscard]] double log_pair_sum() {
        total_ = 0.0;
        self_interaction(0);
        return total_;
    }

private:
    int build(std::size_t lo, std::size_t hi) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        {
            Node& n = nodes_.back();
            n.lo = lo;
            n.hi = hi;
            n.centre = 0.5 * (t_[lo] + t_[hi - 1]);
            n.radius = 0.5 * (t_[hi - 1] - t_[lo]);
        }
        if (hi - lo <= kLeafSize) {
            Node& n = nodes_[static_cast<std::size_t>(id)];
            leaf_moments(n);
            return id;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        const int l = build(lo, mid);
        const int r = build(mid, hi);
        Node& n = nodes_[static_cast<std::size_t>(id)];
        n.left = l;
        n.right = r;
        n.moments.fill(0.0);
        shift_moments(nodes_[static_cast<std::size_t>(l)], n);
        shift_moments(nodes_[static_cast<std::size_t>(r)], n);
        return id;
    }

    void leaf_moments(Node& n) const {
        n.moments.fill(0.0);
        for (std::size_t i = n.lo; i < n.hi; ++i) {
            const double u = n.radius > 0.0 ? (t_[i] - n.centre) / n.radius : 0.0;
            double pw = 1.0;
            for (std::size_t m = 0; m <= kMaxTerms; ++m) {
                n.moments[m] += pw;
                pw *= u;
            }
        }
    }

    // Re-expands child moments about the parent's centre: u_p = a u_c + b, |a| + |b| <= 1.
    static void shift_moments(const Node& child, Node& parent) {
        const auto& binom = binomials().c;
        const double a = child.radius / parent.radius;
        const double b = (child.centre - parent.centre) / parent.radius;
        std::array<double, kMaxTerms + 1> apow{}, bpow{};
        apow[0] = bpow[0] = 1.0;
        for (std::size_t m = 1; m <= kMaxTerms; ++m) {
            apow[m] = apow[m - 1] * a;
            bpow[m] = bpow[m - 1] * b;
        }
        for (std::size_t m = 0; m <= kMaxTerms; ++m) {
            double acc = 0.0;
            for (std::size_t k = 0; k <= m; ++k) acc += binom[m][k] * apow[k] * bpow[m - k] * child.moments[k];
            parent.moments[m] += acc;
        }
    }

    void self_interaction(int id) {
        const Node& n = nodes_[static_cast<std::size_t>(id)];
        if (n.leaf()) {
            ScaledProduct prod;
            for (std::size_t i = n.lo; i < n.hi; ++i)
                for (std::size_t j = i + 1; j < n.hi; ++j) prod.multiply(t_[j] - t_[i]);
            total_ += prod.log_abs();
            return;
        }
        self_interaction(n.left);
        self_interaction(n.right);
        cross_interaction(n.left, n.right);
    }

    // Node a lies entirely to the left of node b.
    void cross_interaction(int ia, int ib) {
        const Node& a = nodes_[static_cast<std::size_t>(ia)];
        const Node& b = nodes_[static_cast<std::size_t>(ib)];
        const double dist = b.centre - a.centre;
        const double rho = (a.radius + b.radius) / dist;
        if (rho <= kSeparation) {
            total_ += series(a, b, dist, rho);
            return;
        }
        if (a.leaf() && b.leaf()) {
            ScaledProduct prod;
            for (std::size_t i = a.lo; i < a.hi; ++i)
                for (std::size_t j = b.lo; j < b.hi; ++j) prod.multiply(t_[j] - t_[i]);
            total_ += prod.log_abs();
            return;
        }
        const bool split_a = !a.leaf() && (b.leaf() || a.radius >= b.radius);
        if (split_a) {
            const int l = a.left, r = a.right;
            cross_interaction(l, ib);
            cross_interaction(r, ib);
        } else {
            const int l = b.left, r = b.right;
            cross_interaction(ia, l);
            cross_interaction(ia, r);
        }
    }

    // sum_{i in a, j in b} ln(t_j - t_i) with t_j - t_i = dist (1 + z),
    // z = beta w_j + alpha u_i, |z| <= rho.
    static double series(const Node& a, const Node& b, double dist, double rho) {
        const auto& binom = binomials().c;
        std::size_t terms = kMaxTerms;
        if (rho > 0.0) {
            double bound = rho / (1.0 - rho);
            for (std::size_t m = 1; m <= kMaxTerms; ++m) {
                bound *= rho * static_cast<double>(m) / static_cast<double>(m + 1);
                if (bound < kTruncation) {
                    terms = m;
                    break;
                }
            }
        } else {
            terms = 0;
        }

        const double alpha = -a.radius / dist;
        const double beta = b.radius / dist;
        std::array<double, kMaxTerms + 1> apow{}, bpow{};
        apow[0] = bpow[0] = 1.0;
        for (std::size_t m = 1; m <= terms; ++m) {
            apow[m] = apow[m - 1] * alpha;
            bpow[m] = bpow[m - 1] * beta;
        }

        double acc = 0.0;
        for (std::size_t m = 1; m <= terms; ++m) {
            double zm = 0.0; // sum over pairs of z^m
            for (std::size_t k = 0; k <= m; ++k)
                zm += binom[m][k] * bpow[k] * apow[m - k] * b.moments[k] * a.moments[m - k];
            const double coef = (m % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(m);
            acc += coef * zm;
        }
        return a.count() * b.count() * std::log(dist) + acc;
    }

    std::span<const double> t_;
    std::vector<Node> nodes_;
    double total_ = 0.0;
};

struct SortedValues {
    std::vector<double> values;
    int parity = 1;
    bool tie = false;
};

SortedValues sort_with_parity(std::span<const double> s) {
    const SortParity sp = inversion_parity(s);
    SortedValues out;
    out.values.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.values[i] = s[sp.permutation[i]];
    out.parity = sp.sign;
    out.tie = sp.has_ties;
    return out;
}

// Ascending values: every factor t_i - t_j (i<j) is negative, so the product
// of the sorted sequence has sign (-1)^{N(N-1)/2}.
LogSigned assemble(const SortedValues& sv, double log_abs) {
    return LogSigned::make(sv.parity * pair_count_sign(sv.values.size()), log_abs);
}

} // namespace

LogSigned product_of_differences(std::span<const double> s, const KernelOptions& options) {
    if (s.size() > options.crossover) return product_of_differences_fast(s);
    return product_of_differences_sorted(s);
}

namespace {

struct Scaled {
    double mantissa;
    std::int64_t exponent;
};

[[gnu::noinline]] Scaled rescale(double mantissa, double factor, std::int64_t exponent) noexcept {
    int ef = 0, em = 0;
    const double f = std::frexp(factor, &ef);
    const double m = std::frexp(mantissa, &em);
    return {m * f, exponent + ef + em};
}

} // namespace

LogSigned product_of_differences_naive(std::span<const double> s) {
    // Four independent register accumulators hide the multiply latency. A
    // lane is rescaled only when its mantissa leaves [2^-500, 2^500] or a
    // factor is far from unit size, so nothing can overflow or underflow.
    constexpr double hi = 0x1p500, lo = 0x1p-500;
    const std::size_t n = s.size();
    double m[4] = {1.0, 1.0, 1.0, 1.0};
    std::int64_t e[4] = {0, 0, 0, 0};
    auto step = [&](int l, double f) {
        const double p = m[l] * f;
        const double ap = std::abs(p), af = std::abs(f);
        if (ap <= hi && ap >= lo && af <= hi && af >= lo) [[likely]] {
            m[l] = p;
        } else {
            const Scaled r = rescale(m[l], f, e[l]);
            m[l] = r.mantissa;
            e[l] = r.exponent;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double si = s[i];
        std::size_t j = i + 1;
        for (; j + 4 <= n; j += 4) {
            step(0, si - s[j]);
            step(1, si - s[j + 1]);
            step(2, si - s[j + 2]);
            step(3, si - s[j + 3]);
        }
        for (; j < n; ++j) step(0, si - s[j]);
    }
    int sign = 1;
    double logmag = 0.0;
    for (int l = 0; l < 4; ++l) {
        if (m[l] == 0.0) return LogSigned::zero();
        if (m[l] < 0.0) sign = -sign;
        logmag += std::log(std::abs(m[l])) + static_cast<double>(e[l]) * std::numbers::ln2;
    }
    return {sign, logmag};
}

LogSigned product_of_differences_sorted(std::span<const double> s) {
    if (s.size() < 2) return {1, 0.0};
    const SortedValues sv = sort_with_parity(s);
    if (sv.tie) return LogSigned::zero();
    const auto& t = sv.values;
    ScaledProduct prod;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) prod.multiply(t[j] - t[i]);
    return assemble(sv, prod.log_abs());
}

LogSigned product_of_differences_fast(std::span<const double> s) {
    if (s.size() < 2) return {1, 0.0};
    const SortedValues sv = sort_with_parity(s);
    if (sv.tie) return LogSigned::zero();
    LogPairTree tree(sv.values);
    return assemble(sv, tree.log_pair_sum());
}

LogSigned derivative_product_at_roots(std::span<const double> s) {
    const Polynomial dp = derivative(poly_from_roots(s));
    const std::vector<double> values = multipoint_eval(dp, s);
    ScaledProduct prod;
    for (double v : values) prod.multiply(v);
    return prod.value();
}

} // namespace antisym
