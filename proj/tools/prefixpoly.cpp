// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 usage or dimension error, 3 domain error, 4 resource guard.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefixpoly/ballot.hpp"
#include "prefixpoly/config.hpp"
#include "prefixpoly/lattice.hpp"
#include "prefixpoly/parking.hpp"
#include "prefixpoly/posets.hpp"
#include "prefixpoly/probability.hpp"
#include "prefixpoly/treefan.hpp"
#include "prefixpoly/verify.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kResource = 4 };

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Rational> rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text)) out.push_back(parse_rational(s));
    if (out.empty()) throw EmptyInputError("empty vector '" + text + "'");
    return out;
}

IntVector naturals(const std::string& text, const char* what) { return to_natural_vector(rationals(text), what); }

std::vector<unsigned> unsigneds(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    for (auto v : naturals(text, what)) out.push_back(static_cast<unsigned>(v));
    return out;
}

nlohmann::json rational_array(std::span<const Rational> v) {
    auto j = nlohmann::json::array();
    for (const auto& c : v) j.push_back(to_string(c));
    return j;
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
    if (path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write '" + path + "'");
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prefixpoly: volumes, lattice points and subdivisions of Pi_n(x)"};
    app.require_subcommand(1);
    std::string config_path, output;
    app.add_option("--config", config_path, "key = value configuration file (else $PREFIXPOLY_CONFIG)");
    app.add_option("-o,--output", output, "write the result to a file");

    std::function<void()> action;

    // volume
    auto* vol = app.add_subcommand("volume", "V_n(x) as a polynomial or at a point");
    unsigned vol_n = 0;
    std::string vol_eval;
    bool vol_steck = false, vol_json = false;
    vol->add_option("--n", vol_n, "dimension")->required();
    vol->add_option("--eval", vol_eval, "evaluate at x1,...,xn");
    vol->add_flag("--steck", vol_steck, "use the determinant route");
    vol->add_flag("--json", vol_json, "polynomial as JSON");
    vol->callback([&] {
        action = [&] {
            if (!vol_eval.empty()) {
                const auto x = rationals(vol_eval);
                if (x.size() != vol_n) throw DimensionError("--eval needs n coordinates");
                emit(std::cout, to_string(vol_steck ? volume_steck_at(x) : volume_at(x)), output);
                return;
            }
            const Polynomial p = vol_steck ? volume_steck(vol_n) : volume_poly(vol_n);
            emit(std::cout, vol_json ? p.to_json().dump(2) : p.to_string(), output);
        };
    });

    // lattice
    auto* lat = app.add_subcommand("lattice", "integer points of Pi_n(x)");
    std::string lat_x;
    bool lat_brute = false, lat_serial = false, lat_poly = false;
    unsigned lat_n = 0;
    lat->add_option("--x", lat_x, "x1,...,xn (natural numbers)");
    lat->add_option("--n", lat_n, "with --poly: dimension");
    lat->add_flag("--brute", lat_brute, "count by scanning");
    lat->add_flag("--serial", lat_serial, "serial scan kernel");
    lat->add_flag("--poly", lat_poly, "print N(Pi_n(x)) as a polynomial");
    lat->callback([&] {
        action = [&] {
            const auto cfg = load_config(config_path);
            if (lat_poly) {
                if (lat_n == 0) throw DimensionError("--poly needs --n");
                emit(std::cout, lattice_poly(lat_n).to_string(), output);
                return;
            }
            const auto x = naturals(lat_x, "lattice");
            const Integer c = lat_brute ? count_points_brute(x, lat_serial ? Exec::serial : Exec::parallel, cfg.scan_limit)
                                        : count_points(x);
            emit(std::cout, to_string(c), output);
        };
    });

    // ehrhart
    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of Pi_n(a, b, ..., b)");
    unsigned ehr_n = 0;
    long ehr_a = 0, ehr_b = 0;
    ehr->add_option("--n", ehr_n)->required();
    ehr->add_option("--a", ehr_a)->required();
    ehr->add_option("--b", ehr_b)->required();
    ehr->callback([&] {
        action = [&] {
            if (ehr_a < 0 || ehr_b < 0) throw DomainError("ehrhart: a and b must be natural numbers");
            const std::vector<std::string> names{"r"};
            emit(std::cout, ehrhart_ab(ehr_n, ehr_a, ehr_b).to_string(names), output);
        };
    });

    // parking
    auto* park = app.add_subcommand("parking", "x-parking functions");
    std::string park_x;
    unsigned park_list = 0;
    bool park_identity = false, park_serial = false;
    park->add_option("--x", park_x, "x1,...,xn");
    park->add_option("--list", park_list, "list the ordinary parking functions of length n");
    park->add_flag("--identity", park_identity, "scan count, n! V_n(x) and the weighted sum as JSON");
    park->add_flag("--serial", park_serial);
    park->callback([&] {
        action = [&] {
            const auto cfg = load_config(config_path);
            if (park_list) {
                std::string text;
                for (const auto& a : enumerate_parking(park_list)) {
                    for (std::size_t i = 0; i < a.size(); ++i) text += (i ? " " : "") + std::to_string(a[i]);
                    text += '\n';
                }
                emit(std::cout, text, output);
                return;
            }
            const auto x = naturals(park_x, "parking");
            const auto scan = count_x_parking(x, park_serial ? Exec::serial : Exec::parallel, cfg.scan_limit);
            if (!park_identity) {
                emit(std::cout, to_string(scan), output);
                return;
            }
            std::vector<Rational> xr(x.begin(), x.end());
            for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rational(static_cast<long>(x[i]));
            const Rational vol = Rational(factorial(static_cast<unsigned>(x.size()))) * volume_at(xr);
            nlohmann::json j{{"scan", to_string(scan)},
                             {"n_factorial_volume", to_string(vol)},
                             {"weighted_parking_sum", to_string(weighted_parking_sum(xr))}};
            emit(std::cout, j.dump(2), output);
        };
    });

    // poset-section
    auto* sec = app.add_subcommand("poset-section", "integer points of an order cone section");
    std::string sec_file, sec_chain, sec_x;
    bool sec_symbolic = false, sec_volume = false, sec_oracle = false;
    sec->add_option("--poset", sec_file, "JSON file {size, covers: [[a,b],...]}")->required();
    sec->add_option("--chain", sec_chain, "t1,...,tn ending at the top")->required();
    sec->add_option("--x", sec_x, "x1,...,xn");
    sec->add_flag("--symbolic", sec_symbolic, "count as a polynomial in x");
    sec->add_flag("--volume", sec_volume, "volume as a polynomial in x");
    sec->add_flag("--oracle", sec_oracle, "count by scanning all maps");
    sec->callback([&] {
        action = [&] {
            std::ifstream f(sec_file);
            if (!f) throw DomainError("cannot read '" + sec_file + "'");
            const auto p = FinitePoset::from_json(nlohmann::json::parse(f));
            const auto chain = unsigneds(sec_chain, "chain");
            if (sec_symbolic || sec_volume) {
                emit(std::cout, (sec_volume ? section_volume(p, chain) : section_count_symbolic(p, chain)).to_string(),
                     output);
                return;
            }
            const auto x = naturals(sec_x, "poset-section");
            emit(std::cout, to_string(sec_oracle ? section_count_oracle(p, chain, x) : section_count(p, chain, x)), output);
        };
    });

    // tree
    auto* tree = app.add_subcommand("tree", "plane binary trees and the fan F_n");
    tree->require_subcommand(1);
    auto* t_enum = tree->add_subcommand("enumerate", "all trees with n internal vertices");
    unsigned t_n = 0;
    t_enum->add_option("--n", t_n)->required();
    t_enum->callback([&] {
        action = [&] {
            auto j = nlohmann::json::array();
            for (const auto& t : enumerate_trees(t_n)) {
                auto e = t.to_json();
                e["k"] = k_of_tree(t);
                j.push_back(e);
            }
            emit(std::cout, j.dump(2), output);
        };
    });
    auto* t_kof = tree->add_subcommand("k-of", "k(T) of a tree given by its Dyck word");
    std::string t_dyck;
    t_kof->add_option("--tree", t_dyck, "Dyck word, \"(\" left \")\" right")->required();
    t_kof->callback([&] {
        action = [&] {
            const auto k = k_of_tree(PlaneBinaryTree::from_dyck(t_dyck));
            std::string s;
            for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
            emit(std::cout, s, output);
        };
    });
    auto* t_ofk = tree->add_subcommand("of-k", "the tree with a given k in K_n");
    std::string t_k;
    t_ofk->add_option("--k", t_k)->required();
    t_ofk->callback([&] { action = [&] { emit(std::cout, tree_of_k(unsigneds(t_k, "k")).to_json().dump(2), output); }; });
    auto* t_loc = tree->add_subcommand("locate", "chamber of F_n containing (y2,...,yn)");
    std::string t_y;
    t_loc->add_option("--y", t_y, "y2,...,yn")->required();
    t_loc->callback([&] {
        action = [&] {
            const auto y = rationals(t_y);
            const auto loc = locate_in_fan(y);
            auto j = loc.tree.to_json();
            j["boundary"] = loc.boundary;
            auto ineq = nlohmann::json::array();
            for (const auto& q : fan_inequalities(loc.tree)) ineq.push_back(q.to_string());
            j["inequalities"] = ineq;
            emit(std::cout, j.dump(2), output);
        };
    });
    auto* t_tri = tree->add_subcommand("triangulate", "triangulation of the (n+2)-gon and chamber rays");
    t_tri->add_option("--tree", t_dyck, "Dyck word")->required();
    t_tri->callback([&] {
        action = [&] {
            const auto t = PlaneBinaryTree::from_dyck(t_dyck);
            nlohmann::json j{{"tree", t.to_json()}, {"diagonals", tree_triangulation(t)}, {"rays", chamber_rays(t)}};
            emit(std::cout, j.dump(2), output);
        };
    });

    // subdivide
    auto* sub = app.add_subcommand("subdivide", "cells Delta_T of Pi_n(x)");
    std::string sub_x;
    bool sub_svg = false, sub_obj = false;
    sub->add_option("--x", sub_x)->required();
    auto* svg_flag = sub->add_flag("--svg", sub_svg, "SVG drawing, n = 2");
    sub->add_flag("--obj", sub_obj, "Wavefront OBJ, n = 3")->excludes(svg_flag);
    sub->add_flag("--json", "JSON description (default)");
    sub->callback([&] {
        action = [&] {
            const auto x = rationals(sub_x);
            if (sub_svg)
                emit(std::cout, subdivision_svg(x), output);
            else if (sub_obj)
                emit(std::cout, subdivision_obj(x), output);
            else
                emit(std::cout, subdivision_json(x).dump(2), output);
        };
    });

    // prob
    auto* prob = app.add_subcommand("prob", "order statistics and boundary crossing");
    prob->require_subcommand(1);
    std::string p_r, p_s;
    auto* p_band = prob->add_subcommand("band", "P(r_j <= U_(j) <= s_j)");
    p_band->add_option("--r", p_r, "lower band");
    p_band->add_option("--s", p_s, "upper band");
    p_band->callback([&] {
        action = [&] {
            Rational v;
            if (!p_r.empty() && !p_s.empty())
                v = band_prob(rationals(p_r), rationals(p_s));
            else if (!p_s.empty())
                v = upper_band_prob(rationals(p_s));
            else if (!p_r.empty())
                v = lower_band_prob(rationals(p_r));
            else
                throw DimensionError("band: give --r, --s or both");
            emit(std::cout, to_string(v), output);
        };
    });
    auto* p_dan = prob->add_subcommand("daniels", "P(U_(j) >= j p / n for all j)");
    unsigned p_n = 0;
    std::string p_p;
    bool p_poly = false;
    p_dan->add_option("--n", p_n)->required();
    p_dan->add_option("--p", p_p);
    p_dan->add_flag("--poly", p_poly, "n! V_n(1-p, p/n, ...) as a polynomial in p");
    p_dan->callback([&] {
        action = [&] {
            if (p_poly || p_p.empty()) {
                const std::vector<std::string> names{"p"};
                emit(std::cout, daniels_poly(p_n).to_string(names), output);
            } else {
                emit(std::cout, to_string(daniels_prob(p_n, parse_rational(p_p))), output);
            }
        };
    });
    auto* p_pyke = prob->add_subcommand("pyke", "P(max_i (b i - U_(i)) <= x)");
    std::string p_b, p_x;
    p_pyke->add_option("--n", p_n)->required();
    p_pyke->add_option("--b", p_b)->required();
    p_pyke->add_option("--x", p_x)->required();
    p_pyke->callback([&] {
        action = [&] {
            const auto b = parse_rational(p_b), x = parse_rational(p_x);
            const auto v = pyke_vector(p_n, b, x);
            nlohmann::json j{{"formula", to_string(pyke_formula(p_n, b, x))},
                             {"volume_vector", rational_array(v)},
                             {"n_factorial_volume", to_string(Rational(Rational(factorial(p_n)) * volume_at(v)))}};
            emit(std::cout, j.dump(2), output);
        };
    });
    auto* p_mc = prob->add_subcommand("mc", "Monte Carlo band probability");
    std::uint64_t p_trials = 0, p_seed = 0;
    bool p_serial = false;
    auto* seed_opt = p_mc->add_option("--seed", p_seed);
    p_mc->add_option("--r", p_r, "lower band");
    p_mc->add_option("--s", p_s, "upper band (default all 1)");
    p_mc->add_option("--n", p_n, "sample size when only --r is given");
    p_mc->add_option("--trials", p_trials);
    p_mc->add_flag("--serial", p_serial);
    p_mc->callback([&] {
        action = [&] {
            const auto cfg = load_config(config_path);
            const std::vector<Rational> r = p_r.empty() ? std::vector<Rational>{} : rationals(p_r);
            std::vector<Rational> s;
            if (!p_s.empty())
                s = rationals(p_s);
            else
                s.assign(r.empty() ? p_n : r.size(), Rational(1));
            if (s.empty()) throw DimensionError("mc: give --s, --r or --n");
            const auto res = mc_band(r, s, p_trials ? p_trials : cfg.mc_trials, seed_opt->count() ? p_seed : cfg.seed,
                                     p_serial ? Exec::serial : Exec::parallel);
            emit(std::cout, res.to_json().dump(2), output);
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run acceptance criteria");
    std::string v_suite = "all";
    std::uint64_t v_seed = 0;
    auto* v_seed_opt = ver->add_option("--seed", v_seed);
    ver->add_option("--suite", v_suite, "all, a module name or a criterion number");
    int verify_status = kOk;
    ver->callback([&] {
        action = [&] {
            auto cfg = load_config(config_path);
            if (v_seed_opt->count()) cfg.seed = v_seed;
            std::string report;
            const auto results = run_suite(v_suite, cfg);
            unsigned passed = 0;
            for (const auto& r : results) {
                report += format_result(r) + "\n";
                passed += r.passed;
            }
            const bool ok = suite_ok(results);
            report += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed" +
                      (ok ? "" : "; suite FAILED") + "\n";
            emit(std::cout, report, output);
            verify_status = ok ? kOk : kVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (action) action();
        return verify_status;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kResource;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }
}
