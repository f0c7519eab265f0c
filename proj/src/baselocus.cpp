#include "effcone/baselocus.hpp"

#include <stdexcept>

namespace effcone {

BaseLocusReport base_locus(const DivisorClass& D) {
    if (D.s > 5) throw std::domain_error("base locus supported only for s <= 5");
    if (D.d < 0) throw std::invalid_argument("base_locus: negative degree has no linear system");
    for (const auto& m : D.mults)
        if (m < 0)
            throw std::invalid_argument("base_locus: negative multiplicity has no linear system");

    BaseLocusReport rep;
    rep.residual = D;
    for (int i = 0; i < D.s; ++i)
        for (int j = i + 1; j < D.s; ++j)
            for (int k = j + 1; k < D.s; ++k) {
                Rat excess = D.mults[i] + D.mults[j] + D.mults[k] - D.d;
                if (excess <= 0) continue;
                rep.quadrics.push_back({{i + 1, j + 1, k + 1}, excess});
                // residual subtracts 2H - Ei - Ej - Ek at the full excess;
                // all rounds are simultaneous against the original class
                rep.residual.d -= 2 * excess;
                rep.residual.mults[i] -= excess;
                rep.residual.mults[j] -= excess;
                rep.residual.mults[k] -= excess;
            }
    for (int i = 0; i < D.s; ++i)
        for (int j = i + 1; j < D.s; ++j)
            for (int k = j + 1; k < D.s; ++k)
                for (int l = k + 1; l < D.s; ++l) {
                    Rat excess =
                        D.mults[i] + D.mults[j] + D.mults[k] + D.mults[l] - D.d;
                    if (excess <= 0) continue;
                    rep.transversal_pairs.push_back({{i + 1, j + 1, k + 1, l + 1}, excess, 2});
                }
    return rep;
}

DivisorClass divisorial_residual(const DivisorClass& D) { return base_locus(D).residual; }

}  // namespace effcone
