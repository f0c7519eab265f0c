#pragma once

#include <cstdint>
#include <vector>

#include "effcone/rational.hpp"

namespace effcone {

// Dense row-major matrix over Q.
struct MatrixQ {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> data;

    MatrixQ() = default;
    MatrixQ(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static MatrixQ from_rows(const std::vector<std::vector<Rat>>& rws, std::size_t ncols);
};

struct RankNullspaceQ {
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> nullspace;  // basis vectors, M*v = 0 exactly
};

// Deterministic Gauss-Jordan: first nonzero pivot per column, no row swapping
// heuristics that depend on entry magnitude.
RankNullspaceQ rank_nullspace(const MatrixQ& m);

// Dense matrix over the prime field F_p, entries stored in [0, p).
struct MatrixFp {
    std::uint32_t p = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> data;

    MatrixFp() = default;
    MatrixFp(std::uint32_t prime, std::size_t r, std::size_t c)
        : p(prime), rows(r), cols(c), data(r * c, 0) {}

    std::uint32_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct RankNullspaceFp {
    std::size_t rank = 0;
    std::vector<std::vector<std::uint32_t>> nullspace;
};

bool is_prime(std::uint32_t n);

// Throws std::invalid_argument if the modulus is composite.
RankNullspaceFp rank_nullspace(const MatrixFp& m);

// F_p helpers shared with the interpolation oracle.
std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace effcone
