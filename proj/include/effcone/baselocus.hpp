#pragma once

#include <array>
#include <vector>

#include "effcone/divisor.hpp"

namespace effcone {

// Forced base-locus components of |D| = L_d(m_1..m_s): the quadric Q_ijk
// through each line triple with multiplicity k_ijk = max(m_i+m_j+m_k-d, 0),
// and the two transversal lines of each quadruple with multiplicity
// k_t = max(m_i+m_j+m_k+m_l-d, 0).
struct QuadricComponent {
    std::array<int, 3> triple;  // 1-based, ascending
    Rat multiplicity;
};

struct TransversalComponent {
    std::array<int, 4> quadruple;  // 1-based, ascending
    Rat multiplicity;
    int count = 2;  // every general quadruple has exactly two transversals
};

struct BaseLocusReport {
    std::vector<QuadricComponent> quadrics;
    std::vector<TransversalComponent> transversal_pairs;
    DivisorClass residual;  // D minus every forced quadric at full multiplicity
};

// Requires s <= 5 and d, m_i >= 0 (linear-system semantics).
BaseLocusReport base_locus(const DivisorClass& D);

// All positive-excess quadrics subtracted in one simultaneous round;
// transversal curves are reported but never subtracted.
DivisorClass divisorial_residual(const DivisorClass& D);

}  // namespace effcone
