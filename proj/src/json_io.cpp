#include "fermat/json_io.hpp"

#include "fermat/homology.hpp"

#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fermat {

json to_json(const BigInt& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json to_json(const CycNum& c, int n) {
    const CycNum v = c.in_field(n);
    json coeffs = json::array();
    for (const auto& q : v.coeffs()) coeffs.push_back({to_json(numer(q)), to_json(denom(q))});
    return {{"n", n}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const auto& cs = j.at("coeffs");
    Vec<Rational> v(static_cast<Eigen::Index>(cs.size()));
    for (std::size_t k = 0; k < cs.size(); ++k)
        v(static_cast<Eigen::Index>(k)) = Rational(bigint_from_json(cs[k].at(0))) / Rational(bigint_from_json(cs[k].at(1)));
    return CycNum(n, std::move(v));
}

json to_json(const ComplexInterval& z) { return {{"re", z.mid.real()}, {"im", z.mid.imag()}, {"rad", z.rad}}; }

json to_json(const RealInterval& x) { return {{"mid", x.mid}, {"rad", x.rad}}; }

json to_json(const XValue& x) {
    json j = {{"mid", x.mid},
              {"err", x.err},
              {"method", to_string(x.method)},
              {"terms_or_nodes", x.terms_or_nodes},
              {"forms", {x.r, x.s, x.l, x.m}},
              {"n", x.n}};
    if (x.series) j["series"] = {{"mid", x.series->mid}, {"rad", x.series->rad}, {"terms", x.series_terms}};
    if (x.quadrature)
        j["quadrature"] = {{"mid", x.quadrature->mid}, {"rad", x.quadrature->rad}, {"nodes", x.quadrature_nodes}};
    return j;
}

json to_json(const ItExpr& e, int n) {
    return {{"A", to_json(e.A, n)}, {"B", to_json(e.B, n)}, {"x_index", e.x_index}};
}

json to_json(const DualVector& d) {
    json out = json::array();
    for (Eigen::Index k = 0; k < d.coeffs.size(); ++k) {
        const auto [i, j] = basis_loop(d.form.n, static_cast<int>(k));
        out.push_back({{"loop", {i, j}}, {"coeff", to_json(d.coeffs(k), d.form.n)}});
    }
    return out;
}

json periods_json(const FormIdx& f) {
    const auto p = period_vector(f);
    json out = json::array();
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        const auto [i, j] = basis_loop(f.n, static_cast<int>(k));
        out.push_back({{"loop", {i, j}}, {"period", to_json(p(k), f.n)}});
    }
    return out;
}

json to_json(const VolumeReport& r) {
    json tensor = json::array();
    for (const auto& f : r.tensor) tensor.push_back({f.r, f.s});
    json j = {{"n", r.n},
              {"tensor", tensor},
              {"exact_expr", to_json(r.exact_expr, r.n)},
              {"x", to_json(r.x)},
              {"value", to_json(r.value)},
              {"verdict", to_string(r.verdict)}};
    j["two_re_mod_1"] = r.two_re_mod_1 ? to_json(*r.two_re_mod_1) : json(nullptr);
    j["lattice_dist"] = r.lattice_dist ? to_json(*r.lattice_dist) : json(nullptr);
    return j;
}

std::string to_text(const VolumeReport& r) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "N = " << r.n << ", tensor";
    for (const auto& f : r.tensor) os << " w" << f.r << f.s;
    os << "\n";
    const auto& ix = r.exact_expr.x_index;
    os << "2 I_R = (" << r.exact_expr.A << ") x_{" << ix[0] << "," << ix[1] << "," << ix[2] << "," << ix[3]
       << "} + (" << r.exact_expr.B << "),  z = exp(2 pi i/" << r.n << ")\n";
    os << "x = " << r.x.mid << " +- " << r.x.err << " (" << to_string(r.x.method) << ")\n";
    os << "value = " << r.value.mid.real() << (r.value.mid.imag() < 0 ? " - " : " + ") << std::abs(r.value.mid.imag())
       << "i +- " << r.value.rad << "\n";
    if (r.two_re_mod_1) os << "2 Re mod 1 = " << r.two_re_mod_1->mid << " +- " << r.two_re_mod_1->rad << "\n";
    if (r.lattice_dist) os << "lattice distance = " << r.lattice_dist->mid << " +- " << r.lattice_dist->rad << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    return os.str();
}

}  // namespace fermat
