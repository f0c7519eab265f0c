#include "effcone/cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "effcone/matrix.hpp"

namespace effcone {

std::vector<Int> primitive(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

static std::vector<Rat> to_rat(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

static Rat dot_ri(const std::vector<Int>& a, const std::vector<Rat>& b) {
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
    return acc;
}

static void sort_unique(std::vector<std::vector<Int>>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

static std::size_t rank_of(const std::vector<std::vector<Int>>& rows, int dim) {
    if (rows.empty()) return 0;
    MatrixQ m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = Rat(rows[i][j]);
    return rank_nullspace(m).rank;
}

ConeDesc ConeDesc::from_rays(int dim, std::vector<std::vector<Int>> rays) {
    ConeDesc c;
    c.dim = dim;
    c.rays = std::move(rays);
    c.rays_authoritative = true;
    return c;
}

ConeDesc ConeDesc::from_inequalities(int dim, std::vector<std::vector<Int>> ineqs) {
    ConeDesc c;
    c.dim = dim;
    c.inequalities = std::move(ineqs);
    c.inequalities_authoritative = true;
    return c;
}

std::vector<std::vector<Int>> halfspace_rays(int dim,
                                             const std::vector<std::vector<Int>>& normals) {
    if (dim <= 0) throw std::invalid_argument("halfspace_rays: zero-dimensional ambient space");
    for (const auto& n : normals)
        if (static_cast<int>(n.size()) != dim)
            throw std::invalid_argument("halfspace_rays: normal of wrong dimension");

    // Invariant: cone(R) + span(L) = {x : n.x >= 0 for processed n}, with L an
    // exact basis of the lineality space and R extreme modulo L.
    std::vector<std::vector<Rat>> L, R;
    for (int i = 0; i < dim; ++i) {
        std::vector<Rat> e(dim, Rat(0));
        e[i] = 1;
        L.push_back(std::move(e));
    }
    std::vector<std::vector<Int>> processed;

    for (const auto& nrm : normals) {
        std::vector<Rat> a = to_rat(nrm);

        std::size_t piv = L.size();
        for (std::size_t i = 0; i < L.size(); ++i)
            if (dot(a, L[i]) != 0) { piv = i; break; }

        if (piv != L.size()) {
            // The normal cuts the lineality space: one basis vector leaves L
            // and becomes the unique ray off the new hyperplane.
            std::vector<Rat> l0 = L[piv];
            Rat al0 = dot(a, l0);
            if (al0 < 0) {
                for (auto& x : l0) x = -x;
                al0 = -al0;
            }
            std::vector<std::vector<Rat>> newL;
            for (std::size_t i = 0; i < L.size(); ++i) {
                if (i == piv) continue;
                Rat f = dot(a, L[i]) / al0;
                std::vector<Rat> l = L[i];
                for (int j = 0; j < dim; ++j) l[j] -= f * l0[j];
                newL.push_back(std::move(l));
            }
            for (auto& r : R) {
                Rat f = dot(a, r) / al0;
                for (int j = 0; j < dim; ++j) r[j] -= f * l0[j];
            }
            R.push_back(std::move(l0));
            L = std::move(newL);
        } else {
            std::vector<std::vector<Rat>> plus, zero, minus;
            for (auto& r : R) {
                Rat v = dot(a, r);
                if (v > 0) plus.push_back(r);
                else if (v == 0) zero.push_back(r);
                else minus.push_back(r);
            }
            if (!minus.empty()) {
                auto tight_at = [&](const std::vector<Rat>& r) {
                    std::vector<std::vector<Int>> t;
                    for (const auto& q : processed)
                        if (dot_ri(q, r) == 0) t.push_back(q);
                    return t;
                };
                std::vector<std::vector<Rat>> newR = zero;
                for (const auto& p : plus) newR.push_back(p);
                const std::size_t need = dim - L.size() - 2;
                for (const auto& p : plus) {
                    auto tp = tight_at(p);
                    for (const auto& nray : minus) {
                        // adjacency: common tight set pins a 2-face modulo L
                        std::vector<std::vector<Int>> common;
                        for (const auto& q : tp)
                            if (dot_ri(q, nray) == 0) common.push_back(q);
                        if (rank_of(common, dim) != need) continue;
                        Rat ap = dot(a, p), an = dot(a, nray);
                        std::vector<Rat> comb(dim);
                        for (int j = 0; j < dim; ++j) comb[j] = ap * nray[j] - an * p[j];
                        newR.push_back(std::move(comb));
                    }
                }
                R = std::move(newR);
            }
        }
        processed.push_back(nrm);
    }

    if (!L.empty())
        throw std::invalid_argument("halfspace_rays: cone is not pointed");

    std::vector<std::vector<Int>> out;
    out.reserve(R.size());
    for (const auto& r : R) out.push_back(primitive(r));
    sort_unique(out);
    return out;
}

ConeDesc dd_convert(const ConeDesc& c) {
    if (c.dim <= 0) throw std::invalid_argument("dd_convert: zero-dimensional cone");
    ConeDesc out;
    out.dim = c.dim;
    if (c.rays_authoritative || (!c.inequalities_authoritative && !c.rays.empty())) {
        out.inequalities = halfspace_rays(c.dim, c.rays);
        out.rays = halfspace_rays(c.dim, out.inequalities);
    } else if (c.inequalities_authoritative || !c.inequalities.empty()) {
        out.rays = halfspace_rays(c.dim, c.inequalities);
        out.inequalities = halfspace_rays(c.dim, out.rays);
    } else {
        throw std::invalid_argument("dd_convert: no representation present");
    }
    out.rays_authoritative = out.inequalities_authoritative = true;
    return out;
}

static std::vector<std::vector<Int>> facet_normals(const ConeDesc& c) {
    if (c.inequalities_authoritative || !c.inequalities.empty()) return c.inequalities;
    return halfspace_rays(c.dim, c.rays);
}

bool member(const ConeDesc& c, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != c.dim)
        throw std::invalid_argument("member: dimension mismatch");
    for (const auto& phi : facet_normals(c))
        if (dot_ri(phi, x) < 0) return false;
    return true;
}

bool extremality_check(const ConeDesc& c, const std::vector<Rat>& ray,
                       const std::vector<std::vector<Rat>>& claimed_facets) {
    if (static_cast<int>(ray.size()) != c.dim)
        throw std::invalid_argument("extremality_check: dimension mismatch");
    auto normals = facet_normals(c);
    for (const auto& phi : normals)
        if (dot_ri(phi, ray) < 0)
            throw std::invalid_argument("extremality_check: ray outside cone");
    std::vector<std::vector<Int>> tight;
    for (const auto& phi : claimed_facets) {
        if (dot(phi, ray) != 0) return false;
        tight.push_back(primitive(phi));
    }
    return rank_of(tight, c.dim) == static_cast<std::size_t>(c.dim) - 1;
}

}  // namespace effcone
