#include "effcone/effective.hpp"

#include <map>
#include <stdexcept>

#include "effcone/conic.hpp"
#include "effcone/matrix.hpp"

namespace effcone {

GeneratorLabel GeneratorLabel::H() { return GeneratorLabel{Kind::Hyperplane, {0, 0, 0}}; }
GeneratorLabel GeneratorLabel::E(int i) { return GeneratorLabel{Kind::Exceptional, {i, 0, 0}}; }
GeneratorLabel GeneratorLabel::H_minus_E(int i) {
    return GeneratorLabel{Kind::PencilPlane, {i, 0, 0}};
}
GeneratorLabel GeneratorLabel::Q(int i, int j, int k) {
    return GeneratorLabel{Kind::Quadric, {i, j, k}};
}

std::string GeneratorLabel::name() const {
    switch (kind) {
        case Kind::Hyperplane: return "H";
        case Kind::Exceptional: return "E_" + std::to_string(idx[0]);
        case Kind::PencilPlane: return "H-E_" + std::to_string(idx[0]);
        case Kind::Quadric:
            return "Q_" + std::to_string(idx[0]) + std::to_string(idx[1]) +
                   std::to_string(idx[2]);
    }
    return "?";
}

std::vector<Rat> GeneratorLabel::coords(int s) const {
    std::vector<Rat> v(s + 1, Rat(0));
    switch (kind) {
        case Kind::Hyperplane:
            v[0] = 1;
            break;
        case Kind::Exceptional:
            v[idx[0]] = -1;
            break;
        case Kind::PencilPlane:
            v[0] = 1;
            v[idx[0]] = 1;
            break;
        case Kind::Quadric:
            v[0] = 2;
            v[idx[0]] = v[idx[1]] = v[idx[2]] = 1;
            break;
    }
    return v;
}

DivisorClass GeneratorLabel::divisor(int s) const {
    for (int i : idx)
        if (i > s) throw std::invalid_argument("generator index exceeds line count");
    return DivisorClass::from_coords(coords(s));
}

Rat NamedInequality::eval(const DivisorClass& D) const {
    auto x = D.coords();
    if (x.size() != normal.size()) throw std::invalid_argument("inequality dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += Rat(normal[i]) * x[i];
    return acc;
}

static std::string mi(int i) { return "m" + std::to_string(i); }

std::vector<NamedInequality> inequality_list(int s) {
    if (s < 0 || s > 5)
        throw std::domain_error("unsupported: effective cone known only for s <= 5");
    const std::string suf = s <= 3 ? ".3" : (s == 4 ? ".4" : ".5");
    auto normal = [&](int cd, const std::vector<int>& cm) {
        std::vector<Int> n(s + 1, Int(0));
        n[0] = cd;
        for (int i = 0; i < s; ++i) n[i + 1] = -cm[i];  // phi.(d,m) >= 0 for sum c_i m_i <= cd * d
        return n;
    };
    std::vector<NamedInequality> out;
    out.push_back({"(1" + suf + ")", "0 <= d", normal(1, std::vector<int>(s, 0))});
    for (int i = 0; i < s; ++i) {
        std::vector<int> c(s, 0);
        c[i] = 1;
        out.push_back({"(2" + suf + ")", mi(i + 1) + " <= d", normal(1, c)});
    }
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            std::vector<int> c(s, 0);
            c[i] = c[j] = 1;
            out.push_back({"(3" + suf + ")", mi(i + 1) + "+" + mi(j + 1) + " <= d", normal(1, c)});
        }
    const std::string sum_text =
        s == 4 ? "(m1+...+m4)" : "(m1+...+m5)";
    if (s == 5) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                if (i == j) continue;
                std::vector<int> c(5, 1);
                c[i] += 1;
                c[j] -= 1;
                out.push_back({"(4.5)", sum_text + "+" + mi(i + 1) + "-" + mi(j + 1) + " <= 2d",
                               normal(2, c)});
            }
    }
    if (s >= 4) {
        const std::string lbl = s == 4 ? "(5.4)" : "(5.5)";
        for (int i = 0; i < s; ++i) {
            std::vector<int> c(s, 1);
            c[i] += 1;
            out.push_back({lbl, sum_text + "+" + mi(i + 1) + " <= 2d", normal(2, c)});
        }
        const std::string lbl2 = s == 4 ? "(4.4)" : "(6.5)";
        out.push_back({lbl2, "2" + sum_text + " <= 3d", normal(3, std::vector<int>(s, 2))});
    }
    return out;
}

std::vector<NamedInequality> halfspace_inequality_list(int s) {
    auto out = inequality_list(s);
    if (s == 5) {
        // Forgetting one blown-up line maps effective classes to effective
        // classes, so the four-line inequality 2*sum(m) <= 3d applies to every
        // quadruple. Over unrestricted signs these five are facets of the
        // 20-ray cone not implied by the 42 entries above (witness:
        // (10; -1,4,4,4,4) satisfies all 42 yet is not effective).
        for (int j = 0; j < 5; ++j) {
            std::vector<int> c(5, 2);
            c[j] = 0;
            std::string text = "2(";
            bool first = true;
            for (int i = 0; i < 5; ++i) {
                if (i == j) continue;
                text += (first ? "" : "+") + mi(i + 1);
                first = false;
            }
            std::vector<Int> n(6, Int(0));
            n[0] = 3;
            for (int i = 0; i < 5; ++i) n[i + 1] = -c[i];
            out.push_back({"(7.5)", text + ") <= 3d", std::move(n)});
        }
    }
    return out;
}

std::vector<std::pair<GeneratorLabel, std::vector<Int>>> ray_list(int s) {
    if (s < 0 || s > 5)
        throw std::domain_error("unsupported: effective cone known only for s <= 5");
    std::vector<std::pair<GeneratorLabel, std::vector<Int>>> out;
    auto add = [&](const GeneratorLabel& g) {
        out.emplace_back(g, primitive(g.coords(s)));
    };
    if (s == 0) {
        add(GeneratorLabel::H());
        return out;
    }
    for (int i = 1; i <= s; ++i) add(GeneratorLabel::E(i));
    for (int i = 1; i <= s; ++i) add(GeneratorLabel::H_minus_E(i));
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            for (int k = j + 1; k <= s; ++k) add(GeneratorLabel::Q(i, j, k));
    return out;
}

ConeDesc effective_cone_from_inequalities(int s) {
    std::vector<std::vector<Int>> ns;
    for (const auto& q : halfspace_inequality_list(s)) ns.push_back(q.normal);
    return ConeDesc::from_inequalities(s + 1, std::move(ns));
}

ConeDesc effective_cone_from_rays(int s) {
    std::vector<std::vector<Int>> rs;
    for (const auto& [g, v] : ray_list(s)) rs.push_back(v);
    return ConeDesc::from_rays(s + 1, std::move(rs));
}

std::pair<bool, Certificate> is_effective(const DivisorClass& D) {
    if (D.s > 5) throw std::domain_error("unsupported: effective cone known only for s <= 5");
    Certificate cert;
    cert.target = D;
    // scan in reverse order so the most global violated inequality
    // (e.g. 2*sum(m) <= 3d) is the one named; prefer a named classical
    // violation over the supplementary (7.5) entries when both occur
    auto ineqs = inequality_list(D.s);
    auto full = halfspace_inequality_list(D.s);
    ineqs.insert(ineqs.begin(), full.begin() + ineqs.size(), full.end());
    for (auto it = ineqs.rbegin(); it != ineqs.rend(); ++it) {
        if (it->eval(D) < 0) {
            cert.violated = *it;
            return {false, cert};
        }
    }
    auto rays = ray_list(D.s);
    std::vector<std::vector<Rat>> gens;
    for (const auto& [g, v] : rays) {
        std::vector<Rat> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
        gens.push_back(std::move(w));
    }
    ConicResult sol = nonneg_combination(D.coords(), gens);
    if (!sol.feasible)
        throw std::logic_error("inequality and feasibility verdicts disagree");
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (sol.coefficients[i] != 0) cert.terms.emplace_back(rays[i].first, sol.coefficients[i]);
    return {true, cert};
}

namespace {

struct TermAccumulator {
    std::map<std::string, std::pair<GeneratorLabel, Rat>> by_name;
    void add(const GeneratorLabel& g, const Rat& c) {
        if (c == 0) return;
        if (c < 0) throw std::logic_error("recipe produced a negative coefficient");
        auto [it, inserted] = by_name.emplace(g.name(), std::make_pair(g, c));
        if (!inserted) it->second.second += c;
    }
};

// Clamp m_i < 0 to zero, recording the split-off exceptional components.
void clamp_negatives(DivisorClass& D, TermAccumulator& acc) {
    for (int i = 0; i < D.s; ++i)
        if (D.mults[i] < 0) {
            acc.add(GeneratorLabel::E(i + 1), -D.mults[i]);
            D.mults[i] = 0;
        }
}

// Subtract every positive-excess quadric at its full excess. Excesses of the
// other triples are unchanged by each subtraction, so sequential equals
// simultaneous.
void split_quadrics(DivisorClass& D, TermAccumulator& acc) {
    for (int i = 0; i < D.s; ++i)
        for (int j = i + 1; j < D.s; ++j)
            for (int k = j + 1; k < D.s; ++k) {
                Rat excess = D.mults[i] + D.mults[j] + D.mults[k] - D.d;
                if (excess <= 0) continue;
                acc.add(GeneratorLabel::Q(i + 1, j + 1, k + 1), excess);
                D.d -= 2 * excess;
                D.mults[i] -= excess;
                D.mults[j] -= excess;
                D.mults[k] -= excess;
            }
}

}  // namespace

Certificate decompose_paper_recipe(const DivisorClass& D) {
    if (D.s > 4) throw std::domain_error("closed-form recipe unsupported for s = 5");
    auto [eff, probe] = is_effective(D);
    if (!eff) throw std::invalid_argument("decompose_paper_recipe: class is not effective");

    TermAccumulator acc;
    DivisorClass W = D;
    clamp_negatives(W, acc);
    split_quadrics(W, acc);
    if (W.s == 4) {
        // peel the pencil through line 4, then the remaining class lives on
        // the first three lines
        acc.add(GeneratorLabel::H_minus_E(4), W.mults[3]);
        W.d -= W.mults[3];
        W = DivisorClass(3, W.d, {W.mults[0], W.mults[1], W.mults[2]});
        split_quadrics(W, acc);  // the {1,2,3} excess can reappear after the peel
    }
    if (W.s == 3) {
        // closed formula from the three-line case with all triples settled:
        // D = (d-m1-m2-m3)E1 + (d-m2-m3)(H-E1) + m2(H-E2) + m3(H-E3)
        acc.add(GeneratorLabel::E(1), W.d - W.mults[0] - W.mults[1] - W.mults[2]);
        acc.add(GeneratorLabel::H_minus_E(1), W.d - W.mults[1] - W.mults[2]);
        acc.add(GeneratorLabel::H_minus_E(2), W.mults[1]);
        acc.add(GeneratorLabel::H_minus_E(3), W.mults[2]);
    } else if (W.s >= 1) {
        Rat surplus = W.d;
        for (int i = 0; i < W.s; ++i) {
            acc.add(GeneratorLabel::H_minus_E(i + 1), W.mults[i]);
            surplus -= W.mults[i];
        }
        // surplus * H written over the generator set as (H-E1) + E1
        acc.add(GeneratorLabel::H_minus_E(1), surplus);
        acc.add(GeneratorLabel::E(1), surplus);
    } else {
        acc.add(GeneratorLabel::H(), W.d);
    }

    Certificate cert;
    cert.target = D;
    for (auto& [name, term] : acc.by_name) cert.terms.push_back(term);
    if (!verify_certificate(cert))
        throw std::logic_error("recipe certificate failed re-expansion");
    return cert;
}

bool verify_certificate(const Certificate& cert) {
    try {
        if (cert.violated) return cert.violated->eval(cert.target) < 0;
        std::vector<Rat> sum(cert.target.s + 1, Rat(0));
        for (const auto& [g, c] : cert.terms) {
            if (c < 0) return false;
            auto v = g.coords(cert.target.s);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c * v[i];
        }
        return sum == cert.target.coords();
    } catch (...) {
        return false;
    }
}

std::vector<IncidenceEntry> incidence_report(int s) {
    if (s < 2 || s > 5) throw std::domain_error("incidence report needs 2 <= s <= 5");
    auto ineqs = halfspace_inequality_list(s);
    ConeDesc cone = effective_cone_from_inequalities(s);
    std::vector<IncidenceEntry> out;
    for (const auto& [g, rv] : ray_list(s)) {
        IncidenceEntry e;
        e.generator = g;
        e.ray.resize(rv.size());
        for (std::size_t i = 0; i < rv.size(); ++i) e.ray[i] = Rat(rv[i]);
        std::vector<std::vector<Rat>> tight;
        for (const auto& q : ineqs) {
            Rat v = q.eval(DivisorClass::from_coords(e.ray));
            if (v == 0) {
                e.tight_labels.push_back(q.label + " " + q.text);
                std::vector<Rat> n(q.normal.size());
                for (std::size_t i = 0; i < n.size(); ++i) n[i] = Rat(q.normal[i]);
                tight.push_back(std::move(n));
            }
        }
        e.extremal = extremality_check(cone, e.ray, tight);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace effcone
