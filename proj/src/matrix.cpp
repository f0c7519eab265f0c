#include "effcone/matrix.hpp"

#include <stdexcept>

namespace effcone {

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rat>>& rws, std::size_t ncols) {
    MatrixQ m(rws.size(), ncols);
    for (std::size_t i = 0; i < rws.size(); ++i) {
        if (rws[i].size() != ncols) throw std::invalid_argument("ragged row");
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
}

RankNullspaceQ rank_nullspace(const MatrixQ& m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("rank_nullspace: empty matrix");
    MatrixQ a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a.at(p, c) == 0) ++p;
        if (p == a.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat inv = a.at(r, c);
        for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) /= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    RankNullspaceQ res;
    res.rank = r;
    std::vector<bool> is_pivot(a.cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(a.cols, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a.at(i, c);
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::invalid_argument("fp_inv of zero");
    return fp_pow(a % p, p - 2, p);
}

RankNullspaceFp rank_nullspace(const MatrixFp& m) {
    if (!is_prime(m.p)) throw std::invalid_argument("invalid modulus: not prime");
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("rank_nullspace: empty matrix");
    MatrixFp a = m;
    const std::uint32_t p = m.p;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t q = r;
        while (q < a.rows && a.at(q, c) == 0) ++q;
        if (q == a.rows) continue;
        if (q != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(q, j), a.at(r, j));
        std::uint32_t inv = fp_inv(a.at(r, c), p);
        for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) = fp_mul(a.at(r, j), inv, p);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            std::uint32_t f = a.at(i, c);
            for (std::size_t j = 0; j < a.cols; ++j)
                a.at(i, j) = fp_sub(a.at(i, j), fp_mul(f, a.at(r, j), p), p);
        }
        pivot_col.push_back(c);
        ++r;
    }

    RankNullspaceFp res;
    res.rank = r;
    std::vector<bool> is_pivot(a.cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> v(a.cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = a.at(i, c) == 0 ? 0 : p - a.at(i, c);
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

}  // namespace effcone
