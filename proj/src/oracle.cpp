#include "effcone/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace effcone {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}

std::uint32_t rand_mod(std::mt19937_64& rng, std::uint32_t p) {
    return std::uint32_t(rng() % p);
}

FpPoint rand_point(std::mt19937_64& rng, std::uint32_t p) {
    for (;;) {
        FpPoint pt{rand_mod(rng, p), rand_mod(rng, p), rand_mod(rng, p), rand_mod(rng, p)};
        if (pt[0] || pt[1] || pt[2] || pt[3]) return pt;
    }
}

// rank of the 2x4 matrix [a; b] over F_p
bool independent(const FpPoint& a, const FpPoint& b, std::uint32_t p) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (fp_sub(fp_mul(a[i], b[j], p), fp_mul(a[j], b[i], p), p) != 0) return true;
    return false;
}

std::uint32_t det4(std::array<FpPoint, 4> m, std::uint32_t p) {
    std::uint32_t det = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c]) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = fp_sub(0, det, p);
        }
        det = fp_mul(det, m[c][c], p);
        std::uint32_t inv = fp_inv(m[c][c], p);
        for (int r = c + 1; r < 4; ++r) {
            std::uint32_t f = fp_mul(m[r][c], inv, p);
            if (!f) continue;
            for (int j = c; j < 4; ++j) m[r][j] = fp_sub(m[r][j], fp_mul(f, m[c][j], p), p);
        }
    }
    return det;
}

bool lines_disjoint(const std::array<FpPoint, 2>& l1, const std::array<FpPoint, 2>& l2,
                    std::uint32_t p) {
    return det4({l1[0], l1[1], l2[0], l2[1]}, p) != 0;
}

std::vector<std::array<int, 4>> monomials(int d) {
    std::vector<std::array<int, 4>> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
    return out;
}

std::uint32_t falling(int a, int b, std::uint32_t p) {
    std::uint32_t r = 1;
    for (int t = 0; t < b; ++t) r = fp_mul(r, std::uint32_t(a - t), p);
    return r;
}

std::uint32_t eval_monomial(const std::array<int, 4>& alpha, const FpPoint& pt,
                            std::uint32_t p) {
    std::uint32_t v = 1;
    for (int t = 0; t < 4; ++t) v = fp_mul(v, fp_pow(pt[t], alpha[t], p), p);
    return v;
}

std::uint32_t eval_form(const std::vector<std::uint32_t>& coeffs,
                        const std::vector<std::array<int, 4>>& mons, const FpPoint& pt,
                        std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < mons.size(); ++i)
        v = fp_add(v, fp_mul(coeffs[i], eval_monomial(mons[i], pt, p), p), p);
    return v;
}

// d+1 projectively distinct points a*P + b*Q on the line, random (a:b)
std::vector<FpPoint> line_points(const std::array<FpPoint, 2>& line, int count,
                                 std::uint32_t p, std::mt19937_64& rng) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::vector<FpPoint> pts;
    while (static_cast<int>(pts.size()) < count) {
        std::uint32_t a = rand_mod(rng, p), b = rand_mod(rng, p);
        if (!a && !b) continue;
        auto key = b ? std::make_pair(fp_mul(a, fp_inv(b, p), p), 1u)
                     : std::make_pair(1u, 0u);
        if (!seen.insert(key).second) continue;
        FpPoint pt;
        for (int t = 0; t < 4; ++t)
            pt[t] = fp_add(fp_mul(a, line[0][t], p), fp_mul(b, line[1][t], p), p);
        pts.push_back(pt);
    }
    return pts;
}

// Tonelli-Shanks; returns false if n is a non-residue.
bool fp_sqrt(std::uint32_t n, std::uint32_t p, std::uint32_t& out) {
    n %= p;
    if (n == 0) { out = 0; return true; }
    if (fp_pow(n, (p - 1) / 2, p) != 1) return false;
    if (p % 4 == 3) { out = fp_pow(n, (p + 1) / 4, p); return true; }
    std::uint32_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::uint32_t z = 2;
    while (fp_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint32_t m = s, c = fp_pow(z, q, p), t = fp_pow(n, q, p),
                  r = fp_pow(n, (q + 1) / 2, p);
    while (t != 1) {
        std::uint32_t i = 0, tt = t;
        while (tt != 1) { tt = fp_mul(tt, tt, p); ++i; }
        std::uint32_t b = fp_pow(c, 1u << (m - i - 1), p);
        m = i;
        c = fp_mul(b, b, p);
        t = fp_mul(t, c, p);
        r = fp_mul(r, b, p);
    }
    out = r;
    return true;
}

}  // namespace

LineConfig sample_lines(int s, std::uint32_t p, std::uint64_t seed) {
    if (!is_prime(p)) throw std::invalid_argument("invalid modulus: not prime");
    if (p <= 1000) throw std::invalid_argument("prime too small for genericity (need p > 1000)");
    if (s < 0) throw std::invalid_argument("negative line count");

    LineConfig cfg;
    cfg.p = p;
    cfg.seed = seed;
    std::mt19937_64 rng(mix(seed, 0x11e5u));
    int budget = 200 * (s + 1);
    while (static_cast<int>(cfg.lines.size()) < s) {
        if (--budget < 0) throw std::runtime_error("degenerate field: retry budget exhausted");
        FpPoint P = rand_point(rng, p), Q = rand_point(rng, p);
        if (!independent(P, Q, p)) continue;
        std::array<FpPoint, 2> line{P, Q};
        bool ok = true;
        for (const auto& other : cfg.lines)
            if (!lines_disjoint(line, other, p)) { ok = false; break; }
        if (ok) cfg.lines.push_back(line);
    }
    return cfg;
}

MatrixFp condition_matrix(const InterpolationProblem& prob) {
    const std::uint32_t p = prob.config.p;
    if (!is_prime(p)) throw std::invalid_argument("invalid modulus: not prime");
    if (prob.d < 0) throw std::invalid_argument("negative degree");
    if (prob.mults.size() != prob.config.lines.size())
        throw std::invalid_argument("mults/lines length mismatch");

    const auto mons = monomials(prob.d);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t li = 0; li < prob.config.lines.size(); ++li) {
        int m = prob.mults[li];
        if (m <= 0) continue;
        std::mt19937_64 rng(mix(prob.config.seed, mix(li + 1, std::uint64_t(prob.d))));
        auto pts = line_points(prob.config.lines[li], prob.d + 1, p, rng);
        // all partials of order <= m-1 of the general degree-d form
        for (const auto& pt : pts) {
            for (int order = 0; order < m; ++order) {
                for (const auto& beta : monomials(order)) {
                    std::vector<std::uint32_t> row(mons.size(), 0);
                    for (std::size_t c = 0; c < mons.size(); ++c) {
                        const auto& alpha = mons[c];
                        bool le = true;
                        std::array<int, 4> rem{};
                        std::uint32_t coef = 1;
                        for (int t = 0; t < 4; ++t) {
                            if (beta[t] > alpha[t]) { le = false; break; }
                            rem[t] = alpha[t] - beta[t];
                            coef = fp_mul(coef, falling(alpha[t], beta[t], p), p);
                        }
                        if (le) row[c] = fp_mul(coef, eval_monomial(rem, pt, p), p);
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    MatrixFp M(p, rows.empty() ? 1 : rows.size(), mons.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j) M.at(i, j) = rows[i][j];
    return M;  // an all-zero single row when there are no conditions
}

int h0(const InterpolationProblem& prob) {
    auto M = condition_matrix(prob);
    auto rn = rank_nullspace(M);
    return static_cast<int>(M.cols - rn.rank);
}

H0Estimate h0_estimate(int d, const std::vector<int>& mults, std::uint32_t p,
                       const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) throw std::invalid_argument("need at least one seed");
    H0Estimate est;
    est.d = d;
    est.mults = mults;
    est.prime = p;
    est.seeds = seeds;
    for (auto seed : seeds) {
        InterpolationProblem prob{d, mults, sample_lines(int(mults.size()), p, seed)};
        est.h0_per_trial.push_back(h0(prob));
    }
    est.h0_generic_estimate = *std::min_element(est.h0_per_trial.begin(), est.h0_per_trial.end());
    return est;
}

bool containment_check(const InterpolationProblem& prob, const std::array<int, 3>& triple,
                       int samples) {
    const std::uint32_t p = prob.config.p;
    const int s = static_cast<int>(prob.mults.size());
    for (int i : triple)
        if (i < 1 || i > s) throw std::invalid_argument("triple index out of range");
    long excess = -prob.d;
    for (int i : triple) excess += prob.mults[i - 1];
    if (excess <= 0) throw std::invalid_argument("containment_check: k_ijk must be positive");

    auto M = condition_matrix(prob);
    auto rn = rank_nullspace(M);
    if (rn.nullspace.empty())
        throw std::invalid_argument("containment_check: h0 must be positive");

    // the unique quadric through the three lines
    std::vector<int> qm(s, 0);
    for (int i : triple) qm[i - 1] = 1;
    InterpolationProblem qprob{2, qm, prob.config};
    auto qrn = rank_nullspace(condition_matrix(qprob));
    if (qrn.nullspace.size() != 1)
        throw std::runtime_error("config degenerate: quadric through triple not unique");
    const auto& quad = qrn.nullspace[0];
    const auto qmons = monomials(2);
    const auto dmons = monomials(prob.d);

    std::mt19937_64 rng(mix(prob.config.seed, 0xc0a7a13ULL));
    int found = 0, attempts = 0;
    while (found < samples) {
        if (++attempts > 200 * samples + 200)
            throw std::runtime_error("containment_check: could not sample quadric points");
        FpPoint A = rand_point(rng, p), B = rand_point(rng, p);
        // q(A + tB) = c0 + c1 t + c2 t^2
        std::uint32_t c0 = eval_form(quad, qmons, A, p);
        std::uint32_t c2 = eval_form(quad, qmons, B, p);
        FpPoint AB;
        for (int t = 0; t < 4; ++t) AB[t] = fp_add(A[t], B[t], p);
        std::uint32_t c1 = fp_sub(fp_sub(eval_form(quad, qmons, AB, p), c0, p), c2, p);

        std::uint32_t t = 0;
        if (c2 == 0) {
            if (c1 == 0) continue;
            t = fp_mul(fp_sub(0, c0, p), fp_inv(c1, p), p);
        } else {
            std::uint32_t disc = fp_sub(fp_mul(c1, c1, p), fp_mul(4 % p, fp_mul(c0, c2, p), p), p);
            std::uint32_t root;
            if (!fp_sqrt(disc, p, root)) continue;
            t = fp_mul(fp_add(fp_sub(0, c1, p), root, p), fp_inv(fp_mul(2, c2, p), p), p);
        }
        FpPoint pt;
        bool zero = true;
        for (int i = 0; i < 4; ++i) {
            pt[i] = fp_add(A[i], fp_mul(t, B[i], p), p);
            zero = zero && pt[i] == 0;
        }
        if (zero || eval_form(quad, qmons, pt, p) != 0) continue;
        ++found;
        for (const auto& basis_form : rn.nullspace)
            if (eval_form(basis_form, dmons, pt, p) != 0) return false;
    }
    return true;
}

}  // namespace effcone
