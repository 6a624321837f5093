// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/polynomial.hpp>

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace antisym {

namespace {

constexpr std::size_t kSchoolbookLimit = 32; // min operand length for FFT
constexpr std::size_t kNaiveDivisionLimit = 256; // Newton+FFT division is only normwise accurate
// Remainders are held in the monomial basis, whose conditioning degrades
// geometrically with degree; below this many points Horner on the remainder
// is both faster and accurate.
constexpr std::size_t kEvalLeaf = 64;

std::vector<double> convolve_schoolbook(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> convolve_fft(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t len = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < len) n <<= 1;

    std::vector<double> pa(a), pb(b);
    pa.resize(n, 0.0);
    pb.resize(n, 0.0);

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> fa, fb;
    fft.fwd(fa, pa);
    fft.fwd(fb, pb);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    std::vector<double> out;
    fft.inv(out, fa);
    out.resize(len);
    return out;
}

Polynomial truncate(Polynomial p, std::size_t len) {
    if (p.coeffs.size() > len) p.coeffs.resize(len);
    p.trim();
    return p;
}

Polynomial reversed(const Polynomial& p, std::size_t len) {
    std::vector<double> c(len, 0.0);
    for (std::size_t i = 0; i < std::min(len, p.coeffs.size()); ++i) c[len - 1 - i] = p.coeffs[i];
    Polynomial out(std::move(c));
    return out;
}

/// Inverse of f modulo t^len by Newton iteration; requires f(0) != 0.
Polynomial series_inverse(const Polynomial& f, std::size_t len) {
    Polynomial g({1.0 / f.coeffs.at(0)});
    std::size_t have = 1;
    while (have < len) {
        have = std::min(2 * have, len);
        Polynomial fg = truncate(multiply(truncate(f, have), g), have);
        // g <- g (2 - f g)
        std::vector<double> two_minus(fg.coeffs.size(), 0.0);
        for (std::size_t i = 0; i < fg.coeffs.size(); ++i) two_minus[i] = -fg.coeffs[i];
        if (two_minus.empty()) two_minus.push_back(0.0);
        two_minus[0] += 2.0;
        g = truncate(multiply(g, Polynomial(std::move(two_minus))), have);
    }
    return g;
}

DivMod divmod_schoolbook(const Polynomial& a, const Polynomial& b) {
    const long db = b.degree();
    std::vector<double> rem = a.coeffs;
    const long da = a.degree();
    std::vector<double> quo(static_cast<std::size_t>(da - db + 1), 0.0);
    const double lead = b.coeffs.back();
    for (long i = da - db; i >= 0; --i) {
        const double q = rem[static_cast<std::size_t>(i + db)] / lead;
        quo[static_cast<std::size_t>(i)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

struct SubproductTree {
    // Node i covers points [lo_i, hi_i); children at 2i+1, 2i+2.
    std::vector<Polynomial> polys;
    std::vector<std::size_t> lo, hi;

    explicit SubproductTree(std::span<const double> pts) {
        std::size_t cap = 1;
        while (cap < pts.size()) cap <<= 1;
        polys.resize(2 * cap);
        lo.resize(2 * cap);
        hi.resize(2 * cap);
        build(pts, 0, 0, pts.size());
    }

    void build(std::span<const double> pts, std::size_t node, std::size_t a, std::size_t b) {
        lo[node] = a;
        hi[node] = b;
        if (b - a <= kEvalLeaf) {
            polys[node] = poly_from_roots(pts.subspan(a, b - a));
            return;
        }
        const std::size_t mid = a + (b - a + 1) / 2; // matches interleave()
        build(pts, 2 * node + 1, a, mid);
        build(pts, 2 * node + 2, mid, b);
        polys[node] = multiply(polys[2 * node + 1], polys[2 * node + 2]);
    }
};

/// Reorders so that the first half holds the even ranks, recursively.
void interleave(std::vector<std::size_t>& v) {
    if (v.size() <= 2) return;
    std::vector<std::size_t> even, odd;
    for (std::size_t i = 0; i < v.size(); ++i) (i % 2 == 0 ? even : odd).push_back(v[i]);
    interleave(even);
    interleave(odd);
    std::copy(even.begin(), even.end(), v.begin());
    std::copy(odd.begin(), odd.end(), v.begin() + static_cast<std::ptrdiff_t>(even.size()));
}

void evaluate_down(const SubproductTree& tree, std::size_t node, const Polynomial& rem,
                   std::span<const double> pts, std::vector<double>& out) {
    const std::size_t a = tree.lo[node], b = tree.hi[node];
    if (b - a <= kEvalLeaf) {
        for (std::size_t i = a; i < b; ++i) out[i] = rem(pts[i]);
        return;
    }
    for (std::size_t child : {2 * node + 1, 2 * node + 2}) {
        const Polynomial& m = tree.polys[child];
        Polynomial r = rem.degree() >= m.degree() ? divmod(rem, m).remainder : rem;
        evaluate_down(tree, child, r, pts, out);
    }
}

} // namespace

Polynomial::Polynomial(std::vector<double> c) : coeffs(std::move(c)) { trim(); }

long Polynomial::degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }

double Polynomial::operator()(double t) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void Polynomial::trim() noexcept {
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (std::min(a.coeffs.size(), b.coeffs.size()) <= kSchoolbookLimit)
        return Polynomial(convolve_schoolbook(a.coeffs, b.coeffs));
    return Polynomial(convolve_fft(a.coeffs, b.coeffs));
}

Polynomial derivative(const Polynomial& p) {
    if (p.coeffs.size() <= 1) return {};
    std::vector<double> c(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = static_cast<double>(i) * p.coeffs[i];
    return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: zero divisor");
    const long da = a.degree(), db = b.degree();
    if (da < db) return {Polynomial{}, a};
    const auto qlen = static_cast<std::size_t>(da - db + 1);
    if (qlen <= kNaiveDivisionLimit || static_cast<std::size_t>(db) <= kNaiveDivisionLimit)
        return divmod_schoolbook(a, b);

    // rev(a) = rev(b) * rev(q) mod t^qlen
    const Polynomial rev_a = reversed(a, static_cast<std::size_t>(da + 1));
    const Polynomial rev_b = reversed(b, static_cast<std::size_t>(db + 1));
    const Polynomial inv = series_inverse(rev_b, qlen);
    Polynomial rev_q = truncate(multiply(truncate(rev_a, qlen), inv), qlen);
    Polynomial q = reversed(rev_q, qlen);
    q.trim();

    Polynomial bq = multiply(b, q);
    std::vector<double> r(static_cast<std::size_t>(db), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double av = i < a.coeffs.size() ? a.coeffs[i] : 0.0;
        const double bv = i < bq.coeffs.size() ? bq.coeffs[i] : 0.0;
        r[i] = av - bv;
    }
    return {std::move(q), Polynomial(std::move(r))};
}

Polynomial poly_from_roots(std::span<const double> roots) {
    if (roots.empty()) return Polynomial({1.0});
    if (roots.size() == 1) {
        Polynomial p;
        p.coeffs = {-roots[0], 1.0}; // keep the explicit zero constant for root 0
        return p;
    }
    const std::size_t mid = roots.size() / 2;
    Polynomial p = multiply(poly_from_roots(roots.first(mid)), poly_from_roots(roots.subspan(mid)));
    p.coeffs.resize(roots.size() + 1, 0.0);
    p.coeffs.back() = 1.0;
    return p;
}

std::vector<double> multipoint_eval(const Polynomial& p, std::span<const double> points) {
    std::vector<double> out(points.size(), 0.0);
    if (points.empty() || p.is_zero()) return out;
    if (p.degree() == 0) {
        std::fill(out.begin(), out.end(), p.coeffs[0]);
        return out;
    }
    // Every subtree gets points spread over the whole range rather than one
    // contiguous cluster; clustered node roots make the remainders far worse.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    interleave(order);
    std::vector<double> pts(points.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = points[order[i]];

    const SubproductTree tree(pts);
    const Polynomial& root = tree.polys[0];
    Polynomial rem = p.degree() >= root.degree() ? divmod(p, root).remainder : p;
    std::vector<double> vals(pts.size(), 0.0);
    evaluate_down(tree, 0, rem, pts, vals);
    for (std::size_t i = 0; i < pts.size(); ++i) out[order[i]] = vals[i];
    return out;
}

} // namespace antisym
