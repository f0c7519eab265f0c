#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "effcone/matrix.hpp"

namespace effcone {

// A point of P^3(F_p) as homogeneous coordinates in [0, p)^4.
using FpPoint = std::array<std::uint32_t, 4>;

// s pairwise-disjoint lines in P^3 over F_p, each the span of two points.
struct LineConfig {
    std::uint32_t p = 0;
    std::uint64_t seed = 0;
    std::vector<std::array<FpPoint, 2>> lines;
};

// The interpolation problem for L_d(m_1..m_s): degree-d surfaces with
// multiplicity >= m_i along line i. h^0 is the nullity of the condition
// matrix.
struct InterpolationProblem {
    int d = 0;
    std::vector<int> mults;
    LineConfig config;
};

inline constexpr std::uint32_t kDefaultPrime = 65521;  // largest prime < 2^16

// Deterministic given (s, p, seed); resamples on any degeneracy with a
// bounded retry budget. Requires p prime and p > 1000.
LineConfig sample_lines(int s, std::uint32_t p, std::uint64_t seed);

// Condition matrix: for each line, d+1 distinct points, and at each point all
// partial derivatives of order <= m-1 of the general degree-d form.
MatrixFp condition_matrix(const InterpolationProblem& prob);

int h0(const InterpolationProblem& prob);

struct H0Estimate {
    int d = 0;
    std::vector<int> mults;
    std::uint32_t prime = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<int> h0_per_trial;
    int h0_generic_estimate = 0;  // minimum over trials (semicontinuity)
};

H0Estimate h0_estimate(int d, const std::vector<int>& mults, std::uint32_t p,
                       const std::vector<std::uint64_t>& seeds);

// Empirical check that the quadric through lines {i,j,k} lies in the base
// locus: samples points on the quadric and tests that every element of a
// solution basis vanishes there. Requires k_ijk > 0 and h0 > 0.
bool containment_check(const InterpolationProblem& prob, const std::array<int, 3>& triple,
                       int samples);

}  // namespace effcone
