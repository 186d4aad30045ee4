#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kmweyl/calogero.hpp"
#include "kmweyl/dynkin.hpp"
#include "kmweyl/invariants.hpp"
#include "kmweyl/recurrence.hpp"
#include "kmweyl/roots.hpp"
#include "kmweyl/weyl.hpp"

namespace {

using namespace kmweyl;

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct Algebra {
    DynkinDiagram diagram;
    CartanMatrix cartan;
    LatticeEmbedding embedding;
};

Algebra parse_algebra(const std::string& s) {
    int n = 0, m = 0;
    if (std::sscanf(s.c_str(), "a%dm%d", &n, &m) != 2)
        throw ValidationError("algebra spec must look like a2m2: " + s);
    Algebra a;
    a.diagram = build_extended_A(n, m);
    a.cartan = cartan_matrix(a.diagram);
    a.embedding = build_embedding(a.diagram);
    return a;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ValidationError("empty entry in list: " + s);
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ValidationError("range must look like -10:10: " + s);
    return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
}

std::vector<std::pair<long, long>> parse_bounds(const std::string& s, int rank) {
    std::vector<std::pair<long, long>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_range(tok));
    if (static_cast<int>(out.size()) != rank)
        throw ValidationError("bounds must list one lo:hi per node");
    return out;
}

RootVector to_root(const std::vector<int>& v) {
    RootVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

nlohmann::json root_to_json(const CharRoot& r) {
    nlohmann::json j;
    j["mult"] = r.multiplicity;
    switch (r.kind) {
    case CharRoot::Kind::integer:
        j["kind"] = "integer";
        j["value"] = r.int_value.str();
        break;
    case CharRoot::Kind::quadratic_surd:
        j["kind"] = "quadratic-surd";
        j["value"] = "(" + r.surd_a.str() + (r.surd_b < 0 ? "" : "+") + r.surd_b.str() +
                     "*sqrt(" + r.surd_d.str() + "))/" + r.surd_c.str();
        break;
    case CharRoot::Kind::root_of_unity:
        j["kind"] = "root-of-unity";
        j["value"] = "e^(2*pi*i*" + std::to_string(r.unity_p) + "/" +
                     std::to_string(r.unity_q) + ")";
        break;
    case CharRoot::Kind::numeric_complex:
        j["kind"] = "numeric-complex";
        j["value"] = {r.numeric.real(), r.numeric.imag()};
        break;
    }
    return j;
}

std::string join_coeffs(const RootVector& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += r[i].str();
    }
    return s;
}

std::string join_form(const RatVec& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += numerator(f[i]).str();
        if (denominator(f[i]) != 1) s += "/" + denominator(f[i]).str();
    }
    return s;
}

struct Options {
    std::string algebra = "a2m2";
    std::string word;
    std::string seed;
    std::string range = "-10:10";
    std::string bounds;
    std::string mode = "affine";
    std::string form = "affine-closed";
    std::string qlist;
    std::string output = "tsv";
    int degree = 2;
    int level = 5;
    long kwindow = 8;
    long hmax = 10000;
    int terms = 14;
    double coupling = 1.0;
};

int run_orbit(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    if (opt.word.empty() || opt.seed.empty())
        throw ValidationError("orbit needs --word and --seed");
    const WeylWord w(parse_int_list(opt.word));
    const RootVector seed = to_root(parse_int_list(opt.seed));
    const auto [lo, hi] = parse_range(opt.range);
    const auto orb = orbit(word_matrix(w, a.cartan), seed, lo, hi);
    if (opt.output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [k, r] : orb) {
            nlohmann::json row;
            row["k"] = k;
            row["coeffs"] = nlohmann::json::array();
            for (const auto& c : r) row["coeffs"].push_back(c.str());
            j.push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [k, r] : orb) std::cout << k << "\t" << join_coeffs(r) << "\n";
    }
    return 0;
}

int run_order(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    if (opt.word.empty()) throw ValidationError("order needs --word");
    const auto h = coxeter_order(word_matrix(parse_int_list(opt.word), a.cartan), opt.hmax);
    if (h)
        std::cout << *h << "\n";
    else
        std::cout << "absent\n";
    return 0;
}

int run_recurrence(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    if (opt.word.empty()) throw ValidationError("recurrence needs --word");
    const CoxeterMatrix c = word_matrix(parse_int_list(opt.word), a.cartan);
    const auto rec = fit_min_recurrence(component_sequences(c, opt.terms));
    const auto cp = char_poly(rec);
    nlohmann::json j;
    j["order"] = rec.order;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& x : rec.coeffs) {
        if (denominator(x) == 1)
            j["coeffs"].push_back(numerator(x).str());
        else
            j["coeffs"].push_back(numerator(x).str() + "/" + denominator(x).str());
    }
    j["char_poly"] = nlohmann::json::array();
    for (const auto& x : cp) j["char_poly"].push_back(x.str());
    j["roots"] = nlohmann::json::array();
    for (const auto& r : char_roots(cp)) j["roots"].push_back(root_to_json(r));
    std::cout << j.dump() << "\n";
    return 0;
}

int run_invariants(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : invariant_space(a.cartan, opt.degree)) {
        nlohmann::json item;
        item["degree"] = p.degree;
        item["monomials"] = nlohmann::json::array();
        for (const auto& [e, c] : p.monomials) {
            nlohmann::json mono;
            mono["exponents"] = e;
            mono["coeff"] = numerator(c).str();
            item["monomials"].push_back(mono);
        }
        j.push_back(item);
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int run_kostant(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    const auto bc = bicolour(a.diagram);
    if (!bc) throw ComputationError("kostant: diagram is not bicolourable");
    const bool ok = kostant_check(a.diagram, a.cartan, bicolour_factorization(a.diagram, *bc));
    std::cout << (ok ? "kostant: OK" : "kostant: FAIL") << "\n";
    return ok ? 0 : 3;
}

int run_angles(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    const auto angles = coxeter_angles(a.cartan);
    for (std::size_t j = 0; j < angles.theta.size(); ++j)
        std::cout << j + 1 << "\t" << fmt12(angles.eigenvalues[j]) << "\t"
                  << fmt12(angles.theta[j].real()) << "\t" << fmt12(angles.theta[j].imag())
                  << "\t" << (angles.admissible[j] ? "real" : "complex") << "\n";
    return 0;
}

int run_roots(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    if (opt.bounds.empty()) throw ValidationError("roots needs --bounds");
    const auto bounds = parse_bounds(opt.bounds, a.cartan.rank());
    const auto roots = enumerate_real_roots(a.cartan, bounds);
    if (opt.output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : roots) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& c : r) row.push_back(c.str());
            j.push_back(row);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& r : roots)
            std::cout << join_coeffs(r) << "\t" << inner(r, r, a.cartan).str() << "\n";
    }
    return 0;
}

int run_potential_match(const Options& opt) {
    Algebra a = parse_algebra(opt.algebra);
    if (a.cartan.rank() != 5)
        throw ValidationError("potential match presets are defined on algebra a2m2");
    std::vector<std::pair<long, long>> bounds(5, {0, opt.level});
    std::vector<OrbitGenerator> gens;
    if (opt.mode == "affine") {
        bounds[0] = bounds[1] = {0, 0};
    } else if (opt.mode == "hyperbolic") {
        bounds[0] = {0, 0};
    } else if (opt.mode != "lorentzian") {
        throw ValidationError("mode must be affine, hyperbolic or lorentzian");
    }
    const auto vd = vD_terms(a.cartan, a.embedding, bounds, opt.coupling);
    if (opt.mode == "affine") {
        gens = affine_orbit_family(a.cartan, opt.coupling);
    } else {
        const WeylWord word = opt.mode == "hyperbolic" ? WeylWord{-1, 0, 1, 2}
                                                       : WeylWord{-2, -1, 0, 1, 2};
        gens = find_orbit_representatives(vd, word, a.cartan, opt.kwindow);
    }
    const auto res = match_terms(vd, gens, a.cartan, opt.kwindow);
    for (const auto& row : res.rows)
        std::cout << join_coeffs(row.vd_root) << "\t" << join_form(row.form) << "\t"
                  << row.orbit + 1 << "\t" << row.power << "\t"
                  << (row.sign > 0 ? "+" : "-") << "\n";
    for (const auto& r : res.unmatched)
        std::cout << join_coeffs(r) << "\t-\t-\t-\t-\n";
    std::cout << "#terms=" << vd.size() << " #orbits=" << gens.size()
              << " #unmatched=" << res.unmatched.size() << "\n";
    return 0;
}

int run_potential_eval(const Options& opt) {
    if (opt.qlist.empty()) throw ValidationError("potential eval needs --q");
    std::vector<double> q = parse_double_list(opt.qlist);
    while (q.size() < 7) q.push_back(0.0);
    nlohmann::json j;
    nlohmann::json terms = nlohmann::json::array();
    double value = 0.0;
    if (opt.form == "affine-closed") {
        value = affine_invariant_potential(q, opt.coupling);
        static const char* ids[] = {"V12",   "V13",   "V23",   "V125+", "V125-",
                                    "V135+", "V135-", "V235+", "V235-"};
        const double pre = 2.0 * M_PI * M_PI * opt.coupling / (9.0 * q[4] * q[4]);
        const double diffs[9][2] = {{q[0] - q[1], 0},  {q[0] - q[2], 0},  {q[1] - q[2], 0},
                                    {q[0] - q[1], 1},  {q[0] - q[1], -1}, {q[0] - q[2], 1},
                                    {q[0] - q[2], -1}, {q[1] - q[2], 1},  {q[1] - q[2], -1}};
        for (int t = 0; t < 9; ++t) {
            const double arg = M_PI * (diffs[t][0] + diffs[t][1] * q[4]) / (3.0 * q[4]);
            const double s = std::sin(arg);
            nlohmann::json item;
            item["id"] = ids[t];
            item["value"] = pre / (s * s);
            terms.push_back(item);
        }
    } else {
        value = partial_sum_potential(q, partial_sum_family_from_string(opt.form),
                                      opt.coupling);
        nlohmann::json item;
        item["id"] = opt.form;
        item["value"] = value;
        terms.push_back(item);
    }
    j["value"] = value;
    j["terms"] = terms;
    std::cout << j.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Weyl groups of extended A-series Kac-Moody algebras and their "
                 "Calogero-type potentials"};
    app.set_config("--config")->configurable(false);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    app.add_option("--output", opt.output, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--algebra", opt.algebra, "algebra spec, e.g. a2m2");
    };

    auto* orbit_cmd = app.add_subcommand("orbit", "sweep powers of a reflection word");
    add_common(orbit_cmd);
    orbit_cmd->add_option("--word", opt.word, "comma-separated node labels");
    orbit_cmd->add_option("--seed", opt.seed, "comma-separated coefficients");
    orbit_cmd->add_option("--range", opt.range, "k range lo:hi");

    auto* order_cmd = app.add_subcommand("order", "order of a reflection word");
    add_common(order_cmd);
    order_cmd->add_option("--word", opt.word);
    order_cmd->add_option("--hmax", opt.hmax);

    auto* rec_cmd = app.add_subcommand("recurrence", "minimal recurrence of a word's powers");
    add_common(rec_cmd);
    rec_cmd->add_option("--word", opt.word);
    rec_cmd->add_option("--terms", opt.terms);

    auto* inv_cmd = app.add_subcommand("invariants", "invariant polynomials by degree");
    add_common(inv_cmd);
    inv_cmd->add_option("--degree", opt.degree);

    auto* kostant_cmd = app.add_subcommand("kostant", "bicoloured factorization identity");
    add_common(kostant_cmd);

    auto* angles_cmd = app.add_subcommand("angles", "exponent angles of the Cartan matrix");
    add_common(angles_cmd);

    auto* roots_cmd = app.add_subcommand("roots", "norm-2 lattice vectors in a box");
    add_common(roots_cmd);
    roots_cmd->add_option("--bounds", opt.bounds, "per-node lo:hi, comma-separated");

    auto* pot_cmd = app.add_subcommand("potential", "Calogero-type potentials");
    auto* match_cmd = pot_cmd->add_subcommand("match", "match box terms against orbit sums");
    add_common(match_cmd);
    match_cmd->add_option("--mode", opt.mode, "affine, hyperbolic or lorentzian");
    match_cmd->add_option("--level", opt.level);
    match_cmd->add_option("--kwindow", opt.kwindow);
    match_cmd->add_option("--coupling", opt.coupling);
    auto* eval_cmd = pot_cmd->add_subcommand("eval", "evaluate a closed-form potential");
    eval_cmd->add_option("--form", opt.form,
                         "affine-closed, partial-1, partial-2, partial-v1, partial-v2, "
                         "partial-v1v2");
    eval_cmd->add_option("--q", opt.qlist, "ambient coordinates, comma-separated");
    eval_cmd->add_option("--coupling", opt.coupling);
    pot_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (orbit_cmd->parsed()) return run_orbit(opt);
        if (order_cmd->parsed()) return run_order(opt);
        if (rec_cmd->parsed()) return run_recurrence(opt);
        if (inv_cmd->parsed()) return run_invariants(opt);
        if (kostant_cmd->parsed()) return run_kostant(opt);
        if (angles_cmd->parsed()) return run_angles(opt);
        if (roots_cmd->parsed()) return run_roots(opt);
        if (pot_cmd->parsed()) {
            if (match_cmd->parsed()) return run_potential_match(opt);
            if (eval_cmd->parsed()) return run_potential_eval(opt);
        }
        throw kmweyl::ValidationError("no subcommand given");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const kmweyl::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kmweyl::ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
