#include "effcone/divisor.hpp"

#include <stdexcept>

namespace effcone {

DivisorClass::DivisorClass(int s_, Rat d_, std::vector<Rat> m)
    : s(s_), d(std::move(d_)), mults(std::move(m)) {
    if (s < 0) throw std::invalid_argument("negative line count");
    if (static_cast<int>(mults.size()) != s)
        throw std::invalid_argument("mults length must equal s");
}

std::vector<Rat> DivisorClass::coords() const {
    std::vector<Rat> v;
    v.reserve(s + 1);
    v.push_back(d);
    for (const auto& m : mults) v.push_back(m);
    return v;
}

DivisorClass DivisorClass::from_coords(const std::vector<Rat>& v) {
    if (v.empty()) throw std::invalid_argument("empty coordinate vector");
    return DivisorClass(static_cast<int>(v.size()) - 1, v[0],
                        std::vector<Rat>(v.begin() + 1, v.end()));
}

DivisorClass DivisorClass::negated() const {
    DivisorClass r = *this;
    r.d = -r.d;
    for (auto& m : r.mults) m = -m;
    return r;
}

static void check_same_s(const DivisorClass& a, const DivisorClass& b) {
    if (a.s != b.s) throw std::invalid_argument("mixed line counts");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_same_s(*this, o);
    DivisorClass r = *this;
    r.d += o.d;
    for (int i = 0; i < s; ++i) r.mults[i] += o.mults[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    return *this + o.negated();
}

DivisorClass DivisorClass::scaled(const Rat& c) const {
    DivisorClass r = *this;
    r.d *= c;
    for (auto& m : r.mults) m *= c;
    return r;
}

std::string DivisorClass::str() const {
    std::string out;
    auto term = [&](const Rat& c, const std::string& sym) {
        if (c == 0) return;
        if (out.empty()) {
            if (c == -1) out += "-";
            else if (c != 1) out += rat_to_string(c) + "*";
        } else {
            out += c > 0 ? " + " : " - ";
            Rat a = abs(c);
            if (a != 1) out += rat_to_string(a) + "*";
        }
        out += sym;
    };
    term(d, "H");
    for (int i = 0; i < s; ++i) term(-mults[i], "E" + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

DivisorClass canonical_class(int s) {
    if (s < 0) throw std::invalid_argument("negative line count");
    return DivisorClass(s, Rat(-4), std::vector<Rat>(s, Rat(-1)));
}

Rat triple_product(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) {
    check_same_s(a, b);
    check_same_s(a, c);
    Rat v = a.d * b.d * c.d;
    for (int i = 0; i < a.s; ++i) {
        const Rat &ma = a.mults[i], &mb = b.mults[i], &mc = c.mults[i];
        v -= a.d * mb * mc + ma * b.d * mc + ma * mb * c.d;  // H E_i^2 = -1
        v += 2 * ma * mb * mc;                               // E_i^3 = -2
    }
    return v;
}

FanoReport weak_fano_report(int s) {
    if (s < 0) throw std::invalid_argument("negative line count");
    FanoReport r;
    r.s = s;
    r.anticanonical_cube = Rat(64 - 10 * s);
    r.is_nef = s <= 6;
    r.is_big = r.is_nef && r.anticanonical_cube > 0;
    r.is_weak_fano = r.is_nef && r.is_big;
    return r;
}

static DivisorClass quadric_class(int s, int a, int b, int c) {
    std::vector<Rat> m(s, Rat(0));
    m[a] = m[b] = m[c] = 1;
    return DivisorClass(s, Rat(2), std::move(m));
}

static DivisorClass pencil_class(int s, int i) {
    std::vector<Rat> m(s, Rat(0));
    m[i] = 1;
    return DivisorClass(s, Rat(1), std::move(m));
}

std::vector<std::vector<DivisorClass>> anticanonical_splittings(int s) {
    if (s != 5 && s != 6) throw std::domain_error("anticanonical splittings only for s in {5,6}");
    std::vector<std::vector<DivisorClass>> out;
    if (s == 5) {
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) {
                    std::vector<int> rest;
                    for (int i = 0; i < 5; ++i)
                        if (i != a && i != b && i != c) rest.push_back(i);
                    out.push_back({quadric_class(5, a, b, c), pencil_class(5, rest[0]),
                                   pencil_class(5, rest[1])});
                }
    } else {
        // unordered partitions of {1..6} into two triples: fix index 0 on one side
        for (int b = 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                std::vector<int> rest;
                for (int i = 1; i < 6; ++i)
                    if (i != b && i != c) rest.push_back(i);
                out.push_back({quadric_class(6, 0, b, c),
                               quadric_class(6, rest[0], rest[1], rest[2])});
            }
    }
    return out;
}

}  // namespace effcone
