#pragma once

#include <string>
#include <vector>

#include "effcone/rational.hpp"

namespace effcone {

// Divisor class D = d*H - sum_i m_i*E_i on the blow-up of P^3 along s
// disjoint general lines. Coordinates in the Picard lattice are (d, m_1..m_s).
struct DivisorClass {
    int s = 0;
    Rat d;
    std::vector<Rat> mults;

    DivisorClass() = default;
    DivisorClass(int s_, Rat d_, std::vector<Rat> m);

    std::vector<Rat> coords() const;  // (d, m_1..m_s)
    static DivisorClass from_coords(const std::vector<Rat>& v);

    DivisorClass negated() const;
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(const Rat& c) const;
    bool operator==(const DivisorClass& o) const = default;

    std::string str() const;  // e.g. "3H - 2E1 - E2"
};

struct FanoReport {
    int s = 0;
    Rat anticanonical_cube;
    bool is_nef = false;
    bool is_big = false;
    bool is_weak_fano = false;
};

// K = -4H + sum E_i.
DivisorClass canonical_class(int s);

// Trilinear intersection form. Monomial values: H^3 = 1, H^2 E_i = 0,
// H E_i^2 = -1, E_i^3 = -2, all mixed products of distinct E_i vanish.
// The cube of each exceptional divisor is -deg N_{l/P^3} = -2, which is what
// (-K)^3 = 64 - 10s requires.
Rat triple_product(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c);

// Nefness of -K for s <= 6 is recorded as a proved fact, not recomputed.
FanoReport weak_fano_report(int s);

// Explicit decompositions of -K into effective pieces: for s=5 all triples
// {2H-E_a-E_b-E_c, H-E_d, H-E_e}, for s=6 all pairs of complementary
// quadric classes. Only s in {5,6} is supported.
std::vector<std::vector<DivisorClass>> anticanonical_splittings(int s);

}  // namespace effcone
