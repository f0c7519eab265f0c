#include <doctest.h>

#include <random>

#include "effcone/divisor.hpp"

using namespace effcone;

namespace {

DivisorClass dc(int s, int d, std::initializer_list<int> ms) {
    std::vector<Rat> v;
    for (int m : ms) v.emplace_back(m);
    return DivisorClass(s, Rat(d), std::move(v));
}

}  // namespace

TEST_CASE("canonical class") {
    CHECK(canonical_class(3) == dc(3, -4, {-1, -1, -1}));
    CHECK(canonical_class(0) == dc(0, -4, {}));
    CHECK(canonical_class(5).negated() == dc(5, 4, {1, 1, 1, 1, 1}));
}

TEST_CASE("triple product base values") {
    auto H = dc(0, 1, {});
    CHECK(triple_product(H, H, H) == 1);
    auto mK6 = canonical_class(6).negated();
    CHECK(triple_product(mK6, mK6, mK6) == 4);
    // H - E1 is a pencil pulled back from P^1, so its cube vanishes
    auto P = dc(1, 1, {1});
    CHECK(triple_product(P, P, P) == 0);
    // E1 alone
    auto E = dc(1, 0, {-1});
    CHECK(triple_product(E, E, E) == -2);
    CHECK(triple_product(dc(1, 1, {0}), E, E) == -1);
}

TEST_CASE("triple product closed form (-K)^3 = 64 - 10s") {
    for (int s = 0; s <= 10; ++s) {
        auto mk = canonical_class(s).negated();
        CHECK(triple_product(mk, mk, mk) == Rat(64 - 10 * s));
    }
}

TEST_CASE("triple product rejects mixed line counts") {
    CHECK_THROWS_AS((void)triple_product(dc(2, 1, {0, 0}), dc(3, 1, {0, 0, 0}),
                                         dc(3, 1, {0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("triple product is symmetric") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int s = int(rng() % 6);
        auto rnd = [&] {
            std::vector<Rat> m;
            for (int i = 0; i < s; ++i) m.emplace_back(int(rng() % 11) - 5);
            return DivisorClass(s, Rat(int(rng() % 11) - 5), std::move(m));
        };
        auto A = rnd(), B = rnd(), C = rnd();
        Rat v = triple_product(A, B, C);
        CHECK(v == triple_product(A, C, B));
        CHECK(v == triple_product(B, A, C));
        CHECK(v == triple_product(B, C, A));
        CHECK(v == triple_product(C, A, B));
        CHECK(v == triple_product(C, B, A));
    }
}

TEST_CASE("weak Fano report") {
    auto r6 = weak_fano_report(6);
    CHECK(r6.anticanonical_cube == 4);
    CHECK(r6.is_weak_fano);
    auto r7 = weak_fano_report(7);
    CHECK(r7.anticanonical_cube == -6);
    CHECK(!r7.is_weak_fano);
    auto r0 = weak_fano_report(0);
    CHECK(r0.anticanonical_cube == 64);
    CHECK(r0.is_weak_fano);
    for (int s = 0; s <= 10; ++s) {
        auto r = weak_fano_report(s);
        CHECK(r.is_weak_fano == (r.is_nef && r.is_big));
        CHECK(r.is_weak_fano == (s <= 6));
        auto mk = canonical_class(s).negated();
        CHECK(r.anticanonical_cube == triple_product(mk, mk, mk));
    }
}

TEST_CASE("anticanonical splittings") {
    CHECK_THROWS_AS((void)anticanonical_splittings(4), std::domain_error);

    auto s5 = anticanonical_splittings(5);
    CHECK(s5.size() == 10);
    bool found5 = false;
    for (const auto& split : s5) {
        DivisorClass sum = split[0];
        for (std::size_t i = 1; i < split.size(); ++i) sum = sum + split[i];
        CHECK(sum == canonical_class(5).negated());
        if (split.size() == 3 && split[0] == dc(5, 2, {1, 1, 1, 0, 0}) &&
            ((split[1] == dc(5, 1, {0, 0, 0, 1, 0}) && split[2] == dc(5, 1, {0, 0, 0, 0, 1})) ||
             (split[2] == dc(5, 1, {0, 0, 0, 1, 0}) && split[1] == dc(5, 1, {0, 0, 0, 0, 1}))))
            found5 = true;
    }
    CHECK(found5);

    auto s6 = anticanonical_splittings(6);
    CHECK(s6.size() == 10);  // C(6,3)/2 unordered partitions into triples
    bool found6 = false;
    for (const auto& split : s6) {
        DivisorClass sum = split[0];
        for (std::size_t i = 1; i < split.size(); ++i) sum = sum + split[i];
        CHECK(sum == canonical_class(6).negated());
        if (split[0] == dc(6, 2, {1, 1, 1, 0, 0, 0}) && split[1] == dc(6, 2, {0, 0, 0, 1, 1, 1}))
            found6 = true;
    }
    CHECK(found6);
}
