#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effcone/cone.hpp"
#include "effcone/divisor.hpp"

namespace effcone {

// Named generator of Eff(Bl_s P^3): H (s=0 only), E_i, H-E_i, or the quadric
// class Q_ijk = 2H-E_i-E_j-E_k.
struct GeneratorLabel {
    enum class Kind { Hyperplane, Exceptional, PencilPlane, Quadric };
    Kind kind = Kind::Hyperplane;
    std::array<int, 3> idx{0, 0, 0};  // 1-based; 0/1/3 entries used by kind

    static GeneratorLabel H();
    static GeneratorLabel E(int i);
    static GeneratorLabel H_minus_E(int i);
    static GeneratorLabel Q(int i, int j, int k);

    std::string name() const;  // "H", "E_1", "H-E_1", "Q_123"
    std::vector<Rat> coords(int s) const;
    DivisorClass divisor(int s) const;
    bool operator==(const GeneratorLabel& o) const = default;
};

// One named inequality on Eff(X_s), e.g. "(3.4) m1+m2 <= d",
// stored as the normal phi of phi.(d,m) >= 0.
struct NamedInequality {
    std::string label;  // e.g. "(3.4)": (index . s)
    std::string text;   // human form, e.g. "m1+m2 <= d"
    std::vector<Int> normal;

    Rat eval(const DivisorClass& D) const;
};

// Effectivity certificate: a nonnegative combination of named generators
// summing exactly to the target, or the violated inequality.
struct Certificate {
    DivisorClass target;
    std::vector<std::pair<GeneratorLabel, Rat>> terms;
    std::optional<NamedInequality> violated;
};

struct IncidenceEntry {
    GeneratorLabel generator;
    std::vector<Rat> ray;
    std::vector<std::string> tight_labels;  // inequalities tight at the ray
    bool extremal = false;
};

// The classical inequality lists for Eff(X_s) (42 entries at s = 5), valid
// as stated on the orthant m_i >= 0; 0 <= s <= 5.
std::vector<NamedInequality> inequality_list(int s);

// Complete halfspace description over unrestricted signs: inequality_list
// plus, at s = 5, the five quadruple inequalities 2(sum - m_j) <= 3d obtained
// by discarding one line (effectivity survives that projection). These are
// facets of the 20-ray cone that the 42-entry list does not imply when some
// m_i < 0.
std::vector<NamedInequality> halfspace_inequality_list(int s);

// Extremal-ray generators: E_i, H-E_i, and Q_ijk for s >= 3 (H alone at s=0).
std::vector<std::pair<GeneratorLabel, std::vector<Int>>> ray_list(int s);

ConeDesc effective_cone_from_inequalities(int s);
ConeDesc effective_cone_from_rays(int s);

// Decides by inequality evaluation; on success the certificate comes from the
// exact conic feasibility solve over the ray list.
std::pair<bool, Certificate> is_effective(const DivisorClass& D);

// Closed-form constructive decomposition, s <= 4: clamp negative
// multiplicities to exceptional terms, split off quadrics at their excess,
// peel pencils of planes.
Certificate decompose_paper_recipe(const DivisorClass& D);

// Exact re-expansion check; false on any failure, never throws.
bool verify_certificate(const Certificate& cert);

// For every ray of Eff(X_s): tight inequalities and an extremality
// confirmation through the cone engine; 2 <= s <= 5.
std::vector<IncidenceEntry> incidence_report(int s);

}  // namespace effcone
