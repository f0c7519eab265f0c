#include <doctest.h>

#include <random>

#include "effcone/conic.hpp"
#include "effcone/effective.hpp"
#include "effcone/json_io.hpp"

using namespace effcone;

namespace {

DivisorClass dc(int s, int d, std::initializer_list<int> ms) {
    std::vector<Rat> v;
    for (int m : ms) v.emplace_back(m);
    return DivisorClass(s, Rat(d), std::move(v));
}

DivisorClass random_class(std::mt19937_64& rng, int s, int bound) {
    std::vector<Rat> m;
    for (int i = 0; i < s; ++i) m.emplace_back(int(rng() % (2 * bound + 1)) - bound);
    return DivisorClass(s, Rat(int(rng() % (2 * bound + 1)) - bound), std::move(m));
}

}  // namespace

TEST_CASE("inequality list counts and entries") {
    auto l2 = inequality_list(2);
    REQUIRE(l2.size() == 4);
    CHECK(l2[0].text == "0 <= d");
    CHECK(l2[3].text == "m1+m2 <= d");
    CHECK(inequality_list(0).size() == 1);
    CHECK(inequality_list(1).size() == 2);
    CHECK(inequality_list(3).size() == 7);
    CHECK(inequality_list(4).size() == 16);
    CHECK(inequality_list(5).size() == 42);
    CHECK(halfspace_inequality_list(4).size() == 16);
    CHECK(halfspace_inequality_list(5).size() == 47);
    CHECK_THROWS_AS((void)inequality_list(6), std::domain_error);
}

TEST_CASE("ray list counts and entries") {
    auto r0 = ray_list(0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].first.name() == "H");
    CHECK(ray_list(2).size() == 4);
    CHECK(ray_list(3).size() == 7);
    CHECK(ray_list(4).size() == 12);
    CHECK(ray_list(5).size() == 20);
    CHECK_THROWS_AS((void)ray_list(6), std::domain_error);
}

TEST_CASE("is_effective examples") {
    auto [e1, c1] = is_effective(dc(3, 2, {1, 1, 1}));
    CHECK(e1);
    REQUIRE(c1.terms.size() == 1);
    CHECK(c1.terms[0].first.name() == "Q_123");
    CHECK(c1.terms[0].second == 1);
    CHECK(verify_certificate(c1));

    auto [e2, c2] = is_effective(dc(4, 3, {2, 2, 2, 2}));
    CHECK(!e2);
    REQUIRE(c2.violated.has_value());
    CHECK(c2.violated->label == "(4.4)");
    CHECK(verify_certificate(c2));

    auto [e3, c3] = is_effective(dc(5, 3, {1, 1, 1, 1, 1}));
    CHECK(!e3);
    REQUIRE(c3.violated.has_value());
    CHECK(c3.violated->label == "(6.5)");

    auto [e4, c4] = is_effective(dc(5, 0, {0, 0, 0, 0, -1}));
    CHECK(e4);
    REQUIRE(c4.terms.size() == 1);
    CHECK(c4.terms[0].first.name() == "E_5");

    CHECK_THROWS_AS((void)is_effective(dc(7, 1, {0, 0, 0, 0, 0, 0, 0})), std::domain_error);
}

TEST_CASE("closed-form recipe examples") {
    auto c1 = decompose_paper_recipe(dc(2, 2, {1, 1}));
    REQUIRE(c1.terms.size() == 2);
    CHECK(c1.terms[0].first.name() == "H-E_1");
    CHECK(c1.terms[0].second == 1);
    CHECK(c1.terms[1].first.name() == "H-E_2");
    CHECK(verify_certificate(c1));

    auto c2 = decompose_paper_recipe(dc(4, 3, {1, 1, 1, 1}));
    REQUIRE(c2.terms.size() == 2);
    CHECK(c2.terms[0].first.name() == "H-E_4");
    CHECK(c2.terms[0].second == 1);
    CHECK(c2.terms[1].first.name() == "Q_123");
    CHECK(c2.terms[1].second == 1);

    auto c3 = decompose_paper_recipe(dc(3, 2, {1, 1, 1}));
    REQUIRE(c3.terms.size() == 1);
    CHECK(c3.terms[0].first.name() == "Q_123");

    CHECK_THROWS_AS((void)decompose_paper_recipe(dc(5, 1, {0, 0, 0, 0, 0})), std::domain_error);
    CHECK_THROWS_AS((void)decompose_paper_recipe(dc(2, -1, {0, 0})), std::invalid_argument);
}

TEST_CASE("verify_certificate hand-built cases") {
    Certificate good{dc(3, 1, {1, 0, 0}), {{GeneratorLabel::H_minus_E(1), Rat(1)}}, {}};
    CHECK(verify_certificate(good));
    Certificate bad{dc(3, 1, {1, 1, 0}), {{GeneratorLabel::H_minus_E(1), Rat(1)}}, {}};
    CHECK(!verify_certificate(bad));
    Certificate neg{dc(3, 0, {0, 0, 0}),
                    {{GeneratorLabel::H_minus_E(1), Rat(1)}, {GeneratorLabel::H_minus_E(1), Rat(-1)}},
                    {}};
    CHECK(!verify_certificate(neg));
}

TEST_CASE("incidence report") {
    auto r2 = incidence_report(2);
    for (const auto& e : r2) CHECK(e.extremal);
    // cone(E_1) = {d=0} cap {m2=0}: d>=0 and d-m2>=0 are tight
    const auto& e1 = r2[0];
    REQUIRE(e1.generator.name() == "E_1");
    bool has_d = false, has_dm2 = false;
    for (const auto& t : e1.tight_labels) {
        if (t.find("0 <= d") != std::string::npos) has_d = true;
        if (t.find("m2 <= d") != std::string::npos) has_dm2 = true;
    }
    CHECK(has_d);
    CHECK(has_dm2);

    auto r3 = incidence_report(3);
    for (const auto& e : r3) CHECK(e.extremal);
    for (const auto& e : r3) {
        if (e.generator.name() == "H-E_1") {
            auto has = [&](const std::string& s) {
                for (const auto& t : e.tight_labels)
                    if (t.find(s) != std::string::npos) return true;
                return false;
            };
            CHECK(has("m1 <= d"));
            CHECK(has("m1+m2 <= d"));
            CHECK(has("m1+m3 <= d"));
        }
    }

    auto r5 = incidence_report(5);
    CHECK(r5.size() == 20);
    for (const auto& e : r5) CHECK(e.extremal);

    CHECK_THROWS_AS((void)incidence_report(1), std::domain_error);
}

TEST_CASE("effectivity is scaling invariant and E_i-monotone") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        int s = 2 + int(rng() % 4);
        auto D = random_class(rng, s, 10);
        bool eff = is_effective(D).first;
        Rat lambda(1 + int(rng() % 7), 1 + int(rng() % 7));
        CHECK(is_effective(D.scaled(lambda)).first == eff);
        if (eff) {
            // adding exceptional components preserves effectivity
            int i = int(rng() % s);
            DivisorClass D2 = D;
            D2.mults[i] -= Rat(1 + int(rng() % 5));  // D + e*E_i lowers m_i
            CHECK(is_effective(D2).first);
        }
    }
}

TEST_CASE("quadruple inequalities at s=5 catch classes the classical list misses") {
    // satisfies all 42 classical inequalities but is not a nonnegative
    // combination of the 20 rays: pushing forward (forgetting line 1) gives
    // (10;4,4,4,4), which fails 2*sum(m) <= 3d at s=4
    DivisorClass D(5, Rat(10), {Rat(-1), Rat(4), Rat(4), Rat(4), Rat(4)});
    for (const auto& q : inequality_list(5)) CHECK(q.eval(D) >= 0);
    auto [eff, cert] = is_effective(D);
    CHECK(!eff);
    REQUIRE(cert.violated.has_value());
    CHECK(cert.violated->label == "(7.5)");

    // once the negative multiplicity is clamped, the classical global
    // inequality already fails and keeps its name
    DivisorClass clamped(5, Rat(10), {Rat(0), Rat(4), Rat(4), Rat(4), Rat(4)});
    auto [eff2, cert2] = is_effective(clamped);
    CHECK(!eff2);
    REQUIRE(cert2.violated.has_value());
    CHECK(cert2.violated->label == "(6.5)");
}

TEST_CASE("inequality verdict matches conic feasibility on a random sweep") {
    std::mt19937_64 rng(47);
    for (int s = 2; s <= 5; ++s) {
        std::vector<std::vector<Rat>> gens;
        for (const auto& [g, v] : ray_list(s)) {
            std::vector<Rat> w;
            for (const auto& x : v) w.emplace_back(x);
            gens.push_back(w);
        }
        for (int trial = 0; trial < 250; ++trial) {
            auto D = random_class(rng, s, 20);
            bool eff = true;
            for (const auto& q : halfspace_inequality_list(s))
                if (q.eval(D) < 0) { eff = false; break; }
            auto sol = nonneg_combination(D.coords(), gens);
            CHECK(sol.feasible == eff);
            if (eff) {
                auto [ok, cert] = is_effective(D);
                CHECK(ok);
                CHECK(verify_certificate(cert));
            }
        }
    }
}

TEST_CASE("recipe agrees with is_effective on random effective classes") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 2000; ++trial) {
        int s = int(rng() % 5);
        auto D = random_class(rng, s, 12);
        if (!is_effective(D).first) continue;
        auto cert = decompose_paper_recipe(D);
        CHECK(verify_certificate(cert));
    }
}

TEST_CASE("certificate JSON shape") {
    auto [eff, cert] = is_effective(dc(3, 2, {1, 1, 1}));
    REQUIRE(eff);
    auto j = to_json(cert);
    CHECK(j["target"]["s"] == 3);
    CHECK(j["target"]["d"] == "2");
    CHECK(j["terms"][0]["generator"] == "Q_123");
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["violated"].is_null());
    // byte-stable round trip for identical input
    auto j2 = to_json(is_effective(dc(3, 2, {1, 1, 1})).second);
    CHECK(j.dump() == j2.dump());
    CHECK(divisor_from_json(j["target"]) == dc(3, 2, {1, 1, 1}));
}
