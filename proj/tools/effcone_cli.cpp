#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "effcone/baselocus.hpp"
#include "effcone/effective.hpp"
#include "effcone/json_io.hpp"
#include "effcone/oracle.hpp"

using namespace effcone;

namespace {

std::vector<Rat> parse_mults(const std::string& csv) {
    std::vector<Rat> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

DivisorClass make_divisor(int s, const std::string& d, const std::string& mults) {
    auto ms = parse_mults(mults);
    if (static_cast<int>(ms.size()) != s)
        throw std::invalid_argument("--mults must list exactly s values");
    return DivisorClass(s, parse_rational(d), std::move(ms));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("EFFCONE_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

std::vector<std::uint64_t> seed_list(const std::string& seeds_csv, int trials) {
    std::vector<std::uint64_t> seeds;
    if (!seeds_csv.empty()) {
        std::stringstream ss(seeds_csv);
        std::string item;
        while (std::getline(ss, item, ',')) seeds.push_back(std::strtoull(item.c_str(), nullptr, 10));
    } else {
        std::uint64_t base = default_seed();
        for (int i = 0; i < trials; ++i) seeds.push_back(base + i);
    }
    return seeds;
}

void emit(const Json& j, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective cones, base loci and interpolation oracle for blow-ups of P^3 along general lines"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit JSON instead of text");

    int s = 0;
    std::string d_str = "0", mults_str, seeds_str;
    std::uint32_t prime = kDefaultPrime;
    int trials = 3, samples = 20, oracle_d = 0;

    auto add_divisor_opts = [&](CLI::App* cmd) {
        cmd->add_option("--s", s, "number of blown-up lines")->required();
        cmd->add_option("--d", d_str, "degree coefficient (rational, e.g. 3 or 7/2)")->required();
        cmd->add_option("--mults", mults_str, "comma-separated multiplicities")->required();
    };

    auto* membership = app.add_subcommand("membership", "decide effectivity of a divisor class");
    add_divisor_opts(membership);
    auto* decompose = app.add_subcommand("decompose", "constructive decomposition (s <= 4)");
    add_divisor_opts(decompose);
    auto* baselocus_cmd = app.add_subcommand("baselocus", "forced base-locus components");
    add_divisor_opts(baselocus_cmd);

    auto* facets = app.add_subcommand("facets", "inequality list of Eff(X_s)");
    facets->add_option("--s", s)->required();
    auto* rays = app.add_subcommand("rays", "extremal ray list of Eff(X_s)");
    rays->add_option("--s", s)->required();
    auto* duality = app.add_subcommand("verify-duality", "check rays <-> facets via double description");
    duality->add_option("--s", s)->required();
    auto* incidence = app.add_subcommand("incidence", "tight inequalities and extremality per ray");
    incidence->add_option("--s", s)->required();
    auto* weakfano = app.add_subcommand("weakfano", "anticanonical cube and weak-Fano status");
    weakfano->add_option("--s", s)->required();
    auto* splittings = app.add_subcommand("splittings", "anticanonical splittings (s = 5 or 6)");
    splittings->add_option("--s", s)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "h^0 of L_d(m_1..m_s) over a prime field");
    oracle_cmd->add_option("--d", oracle_d, "degree")->required();
    oracle_cmd->add_option("--mults", mults_str, "comma-separated integer multiplicities");
    oracle_cmd->add_option("--prime", prime, "field characteristic");
    oracle_cmd->add_option("--seeds", seeds_str, "explicit comma-separated seeds");
    oracle_cmd->add_option("--trials", trials, "number of seeds when --seeds is absent");
    oracle_cmd->add_option("--samples", samples, "sample count for point checks");

    // let --json appear after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*membership) {
            auto D = make_divisor(s, d_str, mults_str);
            auto [eff, cert] = is_effective(D);
            std::string text;
            if (eff) {
                text = "EFFECTIVE: " + D.str() + " =";
                for (const auto& [g, c] : cert.terms)
                    text += " + " + rat_to_string(c) + "*" + g.name();
                if (cert.terms.empty()) text += " 0";
            } else {
                const auto& v = *cert.violated;
                Rat lhs_gap = -v.eval(D);
                text = "NOT EFFECTIVE: violates " + v.label + " " + v.text +
                       " (by " + rat_to_string(lhs_gap) + ")";
            }
            emit(to_json(cert), json_mode, text);
        } else if (*decompose) {
            auto D = make_divisor(s, d_str, mults_str);
            auto cert = decompose_paper_recipe(D);
            std::string text = D.str() + " =";
            for (const auto& [g, c] : cert.terms)
                text += " + " + rat_to_string(c) + "*" + g.name();
            emit(to_json(cert), json_mode, text);
        } else if (*baselocus_cmd) {
            auto D = make_divisor(s, d_str, mults_str);
            auto rep = base_locus(D);
            std::string text;
            for (const auto& q : rep.quadrics)
                text += "quadric Q_" + std::to_string(q.triple[0]) + std::to_string(q.triple[1]) +
                        std::to_string(q.triple[2]) + " with multiplicity " +
                        rat_to_string(q.multiplicity) + "\n";
            for (const auto& t : rep.transversal_pairs)
                text += "2 transversal lines of {" + std::to_string(t.quadruple[0]) + "," +
                        std::to_string(t.quadruple[1]) + "," + std::to_string(t.quadruple[2]) +
                        "," + std::to_string(t.quadruple[3]) + "} with multiplicity " +
                        rat_to_string(t.multiplicity) + "\n";
            text += "residual: " + rep.residual.str();
            emit(to_json(rep), json_mode, text);
        } else if (*facets) {
            auto list = halfspace_inequality_list(s);
            auto cone = dd_convert(effective_cone_from_inequalities(s));
            Json j = Json::array();
            std::string text;
            for (const auto& q : list) {
                bool facet = false;
                std::vector<Int> n = primitive([&] {
                    std::vector<Rat> v(q.normal.size());
                    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(q.normal[i]);
                    return v;
                }());
                for (const auto& f : cone.inequalities) facet = facet || f == n;
                Json e;
                e["label"] = q.label;
                e["text"] = q.text;
                e["facet"] = facet;
                j.push_back(e);
                text += q.label + " " + q.text + (facet ? "  [facet]" : "  [redundant]") + "\n";
            }
            if (!text.empty()) text.pop_back();
            emit(j, json_mode, text);
        } else if (*rays) {
            auto list = ray_list(s);
            Json j = Json::array();
            std::string text;
            for (const auto& [g, v] : list) {
                Json e;
                e["generator"] = g.name();
                Json coords = Json::array();
                std::string cs;
                for (const auto& x : v) {
                    coords.push_back(x.str());
                    cs += (cs.empty() ? "" : ",") + x.str();
                }
                e["coords"] = coords;
                j.push_back(e);
                text += g.name() + " = (" + cs + ")\n";
            }
            if (!text.empty()) text.pop_back();
            emit(j, json_mode, text);
        } else if (*duality) {
            auto from_h = dd_convert(effective_cone_from_inequalities(s));
            auto from_v = dd_convert(effective_cone_from_rays(s));
            bool equal = from_h.rays == from_v.rays && from_h.inequalities == from_v.inequalities;
            std::vector<std::vector<Int>> listed;
            for (const auto& [g, v] : ray_list(s)) listed.push_back(v);
            std::sort(listed.begin(), listed.end());
            bool rays_match = from_h.rays == listed;
            Json j;
            j["s"] = s;
            j["representations_equal"] = equal;
            j["rays_match_named_list"] = rays_match;
            j["ray_count"] = from_h.rays.size();
            j["facet_count"] = from_h.inequalities.size();
            std::string text = "s=" + std::to_string(s) + ": " +
                               (equal && rays_match ? "duality verified" : "MISMATCH") + " (" +
                               std::to_string(from_h.rays.size()) + " rays, " +
                               std::to_string(from_h.inequalities.size()) + " facets)";
            emit(j, json_mode, text);
            if (!(equal && rays_match)) return 1;
        } else if (*incidence) {
            auto rep = incidence_report(s);
            std::string text;
            for (const auto& e : rep) {
                text += e.generator.name() + ": " + (e.extremal ? "extremal" : "NOT EXTREMAL") +
                        ", tight on";
                for (const auto& t : e.tight_labels) text += " " + t + ";";
                text += "\n";
            }
            if (!text.empty()) text.pop_back();
            emit(to_json(rep), json_mode, text);
        } else if (*weakfano) {
            auto rep = weak_fano_report(s);
            std::string text = "(-K)^3 = " + rat_to_string(rep.anticanonical_cube) +
                               "; nef: " + (rep.is_nef ? "yes" : "no") +
                               "; big: " + (rep.is_big ? "yes" : "no") +
                               "; weak Fano: " + (rep.is_weak_fano ? "yes" : "no");
            emit(to_json(rep), json_mode, text);
        } else if (*splittings) {
            auto list = anticanonical_splittings(s);
            Json j = Json::array();
            std::string text;
            for (const auto& split : list) {
                Json row = Json::array();
                std::string line = "-K = ";
                for (std::size_t i = 0; i < split.size(); ++i) {
                    row.push_back(to_json(split[i]));
                    line += (i ? " + (" : "(") + split[i].str() + ")";
                }
                j.push_back(row);
                text += line + "\n";
            }
            if (!text.empty()) text.pop_back();
            emit(j, json_mode, text);
        } else if (*oracle_cmd) {
            auto mults = parse_int_list(mults_str);
            auto est = h0_estimate(oracle_d, mults, prime, seed_list(seeds_str, trials));
            std::string text = "h^0 estimate: " + std::to_string(est.h0_generic_estimate) +
                               " (per trial:";
            for (int v : est.h0_per_trial) text += " " + std::to_string(v);
            text += ")";
            emit(to_json(est), json_mode, text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
