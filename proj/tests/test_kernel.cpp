#include <doctest.h>

#include <random>

#include "effcone/conic.hpp"
#include "effcone/effective.hpp"
#include "effcone/matrix.hpp"
#include "effcone/oracle.hpp"

using namespace effcone;

namespace {

std::vector<Rat> rvec(std::initializer_list<int> xs) {
    std::vector<Rat> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("rank_nullspace over Q: identity") {
    MatrixQ m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    auto rn = rank_nullspace(m);
    CHECK(rn.rank == 2);
    CHECK(rn.nullspace.empty());
}

TEST_CASE("rank_nullspace over Q: proportional rows") {
    auto m = MatrixQ::from_rows({rvec({1, 2}), rvec({2, 4})}, 2);
    auto rn = rank_nullspace(m);
    CHECK(rn.rank == 1);
    REQUIRE(rn.nullspace.size() == 1);
    // basis vector proportional to (-2, 1); our normalization has free var = 1
    CHECK(rn.nullspace[0] == rvec({-2, 1}));
    // exact kernel: M v = 0
    CHECK(Rat(1) * rn.nullspace[0][0] + Rat(2) * rn.nullspace[0][1] == 0);
}

TEST_CASE("rank + nullity = cols on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        MatrixQ m(r, c);
        for (auto& x : m.data) x = Rat(int(rng() % 7) - 3);
        auto rn = rank_nullspace(m);
        CHECK(rn.rank + rn.nullspace.size() == c);
        for (const auto& v : rn.nullspace)
            for (std::size_t i = 0; i < r; ++i) {
                Rat acc = 0;
                for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("rank_nullspace over F_p rejects composite modulus") {
    MatrixFp m(65520, 1, 1);
    CHECK_THROWS_AS((void)rank_nullspace(m), std::invalid_argument);
}

TEST_CASE("rank over F_p never exceeds rank over Q") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        MatrixQ mq(r, c);
        MatrixFp mp(65521, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                int v = int(rng() % 41) - 20;
                mq.at(i, j) = v;
                mp.at(i, j) = std::uint32_t((v % 65521 + 65521) % 65521);
            }
        CHECK(rank_nullspace(mp).rank <= rank_nullspace(mq).rank);
    }
}

TEST_CASE("condition matrix of L_2(1,1,1) has rank 9, nullity 1") {
    InterpolationProblem prob{2, {1, 1, 1}, sample_lines(3, 65521, 1)};
    auto M = condition_matrix(prob);
    auto rn = rank_nullspace(M);
    CHECK(rn.rank == 9);
    CHECK(M.cols - rn.rank == 1);
}

TEST_CASE("nonneg_combination: zero target") {
    auto res = nonneg_combination(rvec({0, 0, 0}),
                                  {rvec({1, 0, 0}), rvec({0, 1, 1})});
    REQUIRE(res.feasible);
    for (const auto& c : res.coefficients) CHECK(c == 0);
}

TEST_CASE("nonneg_combination: quadric generator hit exactly") {
    std::vector<std::vector<Rat>> gens;
    for (const auto& [g, v] : ray_list(3)) {
        std::vector<Rat> w;
        for (const auto& x : v) w.emplace_back(x);
        gens.push_back(w);
    }
    auto res = nonneg_combination(rvec({2, 1, 1, 1}), gens);
    REQUIRE(res.feasible);
    // re-substitution is exact
    std::vector<Rat> sum(4, Rat(0));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        CHECK(res.coefficients[j] >= 0);
        for (int i = 0; i < 4; ++i) sum[i] += res.coefficients[j] * gens[j][i];
    }
    CHECK(sum == rvec({2, 1, 1, 1}));
}

TEST_CASE("nonneg_combination: infeasible target yields Farkas witness") {
    std::vector<std::vector<Rat>> gens;
    for (const auto& [g, v] : ray_list(2)) {
        std::vector<Rat> w;
        for (const auto& x : v) w.emplace_back(x);
        gens.push_back(w);
    }
    auto target = rvec({1, 2, -1});
    auto res = nonneg_combination(target, gens);
    REQUIRE(!res.feasible);
    REQUIRE(res.separating.size() == 3);
    for (const auto& g : gens) CHECK(dot(res.separating, g) >= 0);
    CHECK(dot(res.separating, target) < 0);
}

TEST_CASE("nonneg_combination: dimension mismatch") {
    CHECK_THROWS_AS((void)nonneg_combination(rvec({1, 2}), {rvec({1, 2, 3})}),
                    std::invalid_argument);
}

TEST_CASE("Farkas dichotomy on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t dim = 2 + rng() % 4;
        std::size_t ngen = 1 + rng() % 6;
        std::vector<std::vector<Rat>> gens(ngen, std::vector<Rat>(dim));
        for (auto& g : gens)
            for (auto& x : g) x = Rat(int(rng() % 9) - 4);
        std::vector<Rat> target(dim);
        for (auto& x : target) x = Rat(int(rng() % 9) - 4);
        auto res = nonneg_combination(target, gens);
        if (res.feasible) {
            CHECK(res.separating.empty());
            std::vector<Rat> sum(dim, Rat(0));
            for (std::size_t j = 0; j < ngen; ++j) {
                CHECK(res.coefficients[j] >= 0);
                for (std::size_t i = 0; i < dim; ++i) sum[i] += res.coefficients[j] * gens[j][i];
            }
            CHECK(sum == target);
        } else {
            CHECK(res.coefficients.empty());
            for (const auto& g : gens) CHECK(dot(res.separating, g) >= 0);
            CHECK(dot(res.separating, target) < 0);
        }
    }
}
