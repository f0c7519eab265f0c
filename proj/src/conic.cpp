#include "effcone/conic.hpp"

#include <cassert>
#include <stdexcept>

namespace effcone {

// Phase-1 simplex: minimize the sum of artificial variables for
//   A x + a = b,  x, a >= 0,
// where the columns of A are the generators and rows with negative b are
// sign-flipped first. Bland's lowest-index rule on both the entering and the
// leaving choice guarantees termination with exact arithmetic.
ConicResult nonneg_combination(const std::vector<Rat>& target,
                               const std::vector<std::vector<Rat>>& generators) {
    const std::size_t m = target.size();
    if (m == 0) throw std::invalid_argument("nonneg_combination: empty target");
    for (const auto& g : generators)
        if (g.size() != m) throw std::invalid_argument("nonneg_combination: dimension mismatch");
    const std::size_t n = generators.size();

    // Tableau: m rows over n generator columns + m artificial columns + rhs,
    // plus the reduced-cost row. sign[i] records the row flip.
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(n + m + 1, Rat(0)));
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (target[i] < 0) sign[i] = -1;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = sign[i] * generators[j][i];
        T[i][n + i] = 1;
        T[i][n + m] = sign[i] * target[i];
    }
    // Reduced costs d_j = c_j - y^T A_j with initial y = 1 (artificial basis);
    // obj holds the current objective value.
    std::vector<Rat> cost(n + m, Rat(0));
    Rat obj = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) cost[j] -= T[i][j];
    for (std::size_t i = 0; i < m; ++i) obj += T[i][n + m];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (cost[j] < 0) { enter = j; break; }
        if (enter == n + m) break;  // optimal

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Rat cur = T[i][n + m] / T[i][enter];
            Rat best = T[leave][n + m] / T[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        assert(leave != m && "phase-1 objective is bounded below");

        Rat piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        Rat fc = cost[enter];
        if (fc != 0) {
            for (std::size_t j = 0; j < n + m; ++j) cost[j] -= fc * T[leave][j];
            obj += fc * T[leave][n + m];
        }
        basis[leave] = enter;
    }

    ConicResult res;
    if (obj == 0) {
        res.feasible = true;
        res.coefficients.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.coefficients[basis[i]] = T[i][n + m];
    } else {
        // Dual values from the artificial columns: y_i = 1 - d_{n+i};
        // phi = -sign .* y separates the target from the cone.
        res.feasible = false;
        res.separating.resize(m);
        for (std::size_t i = 0; i < m; ++i) res.separating[i] = -sign[i] * (Rat(1) - cost[n + i]);
    }
    return res;
}

}  // namespace effcone
