#ifndef FERMAT_JSON_IO_HPP
#define FERMAT_JSON_IO_HPP

// JSON shapes shared by the CLI and the tests. Integers that overflow int64
// are written as decimal strings.

#include "fermat/analysis.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/harmonic_volume.hpp"
#include "fermat/iterated.hpp"
#include "fermat/poincare_dual.hpp"

#include <json.hpp>

namespace fermat {

using json = nlohmann::json;

json to_json(const BigInt& z);
BigInt bigint_from_json(const json& j);

/// {"n": N, "coeffs": [[num, den], ...]}; field-unbound constants are written in Q(zeta_n).
json to_json(const CycNum& c, int n);
CycNum cycnum_from_json(const json& j);

/// {"re", "im", "rad"}
json to_json(const ComplexInterval& z);
/// {"mid", "rad"}
json to_json(const RealInterval& x);

/// {"mid", "err", "method", "terms_or_nodes"}, plus "series"/"quadrature" enclosures when computed.
json to_json(const XValue& x);

/// {"A", "B", "x_index": [r, s, l, m]}
json to_json(const ItExpr& e, int n);

/// [{"loop": [i, j], "coeff": CycNum}, ...]
json to_json(const DualVector& d);

/// [{"loop": [i, j], "period": CycNum}, ...]
json periods_json(const FormIdx& f);

json to_json(const VolumeReport& r);

/// Human-readable rendering of a report.
std::string to_text(const VolumeReport& r);

}  // namespace fermat

#endif  // FERMAT_JSON_IO_HPP
