// Command-line front end. Exit codes: 0 success, 2 a check did not pass,
// 1 usage or internal error.

#include "fermat/analysis.hpp"
#include "fermat/exact_linalg.hpp"
#include "fermat/harmonic_volume.hpp"
#include "fermat/homology.hpp"
#include "fermat/iterated.hpp"
#include "fermat/json_io.hpp"
#include "fermat/poincare_dual.hpp"
#include "fermat/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

using namespace fermat;

namespace {

constexpr int kOk = 0, kInternal = 1, kCheckFailed = 2;

double default_tolerance() {
    if (const char* env = std::getenv("FERMAT_HV_TOL")) {
        try {
            const double t = std::stod(env);
            if (t > 0.0) return t;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("FERMAT_HV_TOL must be a positive number, got '") + env + "'");
    }
    return 1e-6;
}

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("malformed integer list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

FormIdx parse_form(int n, const std::string& s) {
    const auto v = parse_ints(s, ',');
    if (v.size() != 2) throw std::invalid_argument("form index must be r,s; got '" + s + "'");
    return FormIdx::make(n, v[0], v[1]);
}

std::pair<FormIdx, FormIdx> parse_form_pair(int n, const std::string& s) {
    const auto v = parse_ints(s, ',');
    if (v.size() != 4) throw std::invalid_argument("expected r1,s1,r2,s2; got '" + s + "'");
    return {FormIdx::make(n, v[0], v[1]), FormIdx::make(n, v[2], v[3])};
}

std::array<FormIdx, 3> parse_tensor(int n, const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("tensor must be r1,s1:r2,s2:r3,s3; got '" + s + "'");
    return {parse_form(n, parts[0]), parse_form(n, parts[1]), parse_form(n, parts[2])};
}

struct Config {
    int degree_n = 6;
    double tolerance = 1e-6;
    std::string method = "both";
    std::string output = "json";
    long max_terms = 1L << 20;
    std::uint64_t seed = 20261016;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic volumes of Fermat curves"};
    app.require_subcommand(1);
    Config cfg;
    try {
        cfg.tolerance = default_tolerance();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }

    auto add_n = [&](CLI::App* sc) { sc->add_option("--n", cfg.degree_n, "degree N")->required()->check(CLI::Range(3, 64)); };
    auto add_tol = [&](CLI::App* sc) {
        sc->add_option("--tol", cfg.tolerance, "absolute tolerance (default $FERMAT_HV_TOL or 1e-6)")
            ->check(CLI::PositiveNumber);
    };
    auto add_series = [&](CLI::App* sc) {
        sc->add_option("--method", cfg.method, "series|quadrature|both")
            ->check(CLI::IsMember({"series", "quadrature", "both"}));
        sc->add_option("--max-terms", cfg.max_terms, "series term budget")->check(CLI::PositiveNumber);
    };

    std::string form, forms, tensor, loop = "gamma";
    int li = 0, lj = 0;
    bool matrix = false, l_form = false, skip_sweeps = false;

    auto* periods = app.add_subcommand("periods", "periods of a form over the basis loops");
    add_n(periods);
    periods->add_option("--form", form, "r,s")->required();

    auto* inter = app.add_subcommand("intersection", "intersection matrix of the loop basis");
    add_n(inter);
    inter->add_flag("--matrix", matrix, "print the matrix itself");

    auto* itint = app.add_subcommand("itint", "symbolic iterated integral over a loop");
    add_n(itint);
    itint->add_option("--loop", loop, "kappa|gamma")->check(CLI::IsMember({"kappa", "gamma"}));
    itint->add_option("--i", li, "alpha exponent")->required();
    itint->add_option("--j", lj, "beta exponent")->required();
    itint->add_option("--forms", forms, "r1,s1,r2,s2")->required();

    auto* xcmd = app.add_subcommand("x", "certified value of x_{r,s,l,m}");
    add_n(xcmd);
    xcmd->add_option("--forms", forms, "r,s,l,m")->required();
    add_tol(xcmd);
    add_series(xcmd);

    auto* pdual = app.add_subcommand("pdual", "Poincare dual of a form in the loop basis");
    add_n(pdual);
    pdual->add_option("--form", form, "r,s")->required();
    pdual->add_flag("--l-presentation", l_form, "coefficients over L_{i,s} instead");

    CLI::App* volume_like[2];
    volume_like[0] = app.add_subcommand("volume", "harmonic volume of a tensor with verdict");
    volume_like[1] = app.add_subcommand("check", "as volume; exit 2 unless the verdict is nontrivial");
    for (auto* sc : volume_like) {
        add_n(sc);
        sc->add_option("--tensor", tensor, "r1,s1:r2,s2:r3,s3")->required();
        add_tol(sc);
        add_series(sc);
        sc->add_option("--output", cfg.output, "json|text")->check(CLI::IsMember({"json", "text"}));
    }

    auto* sweep_cmd = app.add_subcommand("sweep", "all tensors for N in {4, 6}, newline-delimited JSON");
    add_n(sweep_cmd);
    add_tol(sweep_cmd);
    add_series(sweep_cmd);

    auto* selftest = app.add_subcommand("selftest", "acceptance criteria and cross-checks");
    selftest->add_option("--seed", cfg.seed, "sampling seed");
    selftest->add_flag("--skip-sweeps", skip_sweeps, "omit the sweep cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInternal;
    }

    try {
        const int n = cfg.degree_n;
        if (*periods) {
            std::cout << periods_json(parse_form(n, form)).dump() << "\n";
        } else if (*inter) {
            const Eigen::MatrixXi m = intersection_matrix(n);
            if (matrix) {
                json rows = json::array();
                for (Eigen::Index a = 0; a < m.rows(); ++a) {
                    json row = json::array();
                    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(a, c));
                    rows.push_back(row);
                }
                std::cout << rows.dump() << "\n";
            } else {
                Mat<BigInt> mb(m.rows(), m.cols());
                for (Eigen::Index a = 0; a < m.rows(); ++a)
                    for (Eigen::Index c = 0; c < m.cols(); ++c) mb(a, c) = m(a, c);
                json divisors = json::array();
                for (const auto& d : smith_divisors(mb)) divisors.push_back(to_json(d));
                std::cout << json{{"n", n},
                                  {"size", m.rows()},
                                  {"antisymmetric", m == -m.transpose()},
                                  {"relation_rank", relation_rank(n)},
                                  {"smith_divisors", divisors}}
                                 .dump()
                          << "\n";
            }
        } else if (*itint) {
            const auto [f1, f2] = parse_form_pair(n, forms);
            const auto word = loop == "kappa" ? PathWord::kappa(n, li, lj) : PathWord::conjugated_loop(n, li, lj);
            std::cout << to_json(iterated_integral(word, f1, f2), n).dump() << "\n";
        } else if (*xcmd) {
            const auto [f1, f2] = parse_form_pair(n, forms);
            const auto x = x_value(n, f1.r, f1.s, f2.r, f2.s, cfg.tolerance, parse_xmethod(cfg.method), cfg.max_terms);
            std::cout << to_json(x).dump() << "\n";
        } else if (*pdual) {
            const auto f = parse_form(n, form);
            if (l_form) {
                json lam = json::array();
                for (const auto& c : l_presentation(f)) lam.push_back(to_json(c, n));
                std::cout << json{{"form", {f.r, f.s}}, {"k", f.s}, {"lambda", lam}}.dump() << "\n";
            } else {
                std::cout << to_json(poincare_dual(f)).dump() << "\n";
            }
        } else if (*volume_like[0] || *volume_like[1]) {
            const auto t = parse_tensor(n, tensor);
            const auto rep = evaluate(t[0], t[1], t[2], cfg.tolerance, parse_xmethod(cfg.method), cfg.max_terms);
            if (cfg.output == "text") std::cout << to_text(rep);
            else std::cout << to_json(rep).dump() << "\n";
            if (*volume_like[1] && rep.verdict != Verdict::nontrivial) return kCheckFailed;
        } else if (*sweep_cmd) {
            std::mutex out_mu;
            const auto reps = sweep(n, cfg.tolerance, parse_xmethod(cfg.method), cfg.max_terms, [&](const VolumeReport& r) {
                std::lock_guard<std::mutex> lock(out_mu);
                std::cout << to_json(r).dump() << "\n" << std::flush;
            });
            const auto s = summarize(reps);
            std::cout << json{{"summary",
                               {{"n", n},
                                {"tensors", reps.size()},
                                {"nontrivial", s.nontrivial},
                                {"inconclusive", s.inconclusive},
                                {"unsupported_N", s.unsupported}}}}
                             .dump()
                      << "\n";
        } else if (*selftest) {
            bool all = true;
            for (const auto& r : run_acceptance(cfg.seed)) {
                std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " -- " << r.detail << "\n";
                all = all && r.passed;
            }
            for (const auto& line : run_diagnostics(!skip_sweeps)) std::cout << "INFO " << line << "\n";
            return all ? kOk : kCheckFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
