#pragma once

#include <vector>

#include "effcone/rational.hpp"

namespace effcone {

// Rational polyhedral cone held as ray generators (V-rep) and/or inequality
// normals phi with phi.x >= 0 (H-rep). Stored vectors are primitive integer
// vectors. The flags say which representation(s) are authoritative.
struct ConeDesc {
    int dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<Int>> inequalities;
    bool rays_authoritative = false;
    bool inequalities_authoritative = false;

    static ConeDesc from_rays(int dim, std::vector<std::vector<Int>> rays);
    static ConeDesc from_inequalities(int dim, std::vector<std::vector<Int>> ineqs);
};

// Scale a rational vector to a primitive integer vector (same direction).
std::vector<Int> primitive(const std::vector<Rat>& v);

// Extreme rays of {x : n.x >= 0 for all n in normals}, by incremental double
// description with explicit lineality tracking and an algebraic-rank adjacency
// test. Output rays are primitive, deduplicated and lex-sorted. Throws
// std::invalid_argument if the intersection cone is not pointed.
std::vector<std::vector<Int>> halfspace_rays(int dim,
                                             const std::vector<std::vector<Int>>& normals);

// Both representations, each irredundant: rays extremal, inequalities facets.
// Canonical (primitive, sorted) form, so equality of converted cones is a
// field-by-field comparison.
ConeDesc dd_convert(const ConeDesc& c);

bool member(const ConeDesc& c, const std::vector<Rat>& x);

// True iff `ray` is tight on every claimed normal and the claimed tight set
// pins a 1-dimensional solution space. Throws if the ray is outside the cone.
bool extremality_check(const ConeDesc& c, const std::vector<Rat>& ray,
                       const std::vector<std::vector<Rat>>& claimed_facets);

}  // namespace effcone
