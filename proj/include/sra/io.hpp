#pragma once

#include "sra/ideal_lab.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace sra {

using json = nlohmann::json;

/// {"order": 4n, "coeffs": ["p/q", ...]} with deg Phi_{4n} entries.
json to_json(const Cyclo& c, int order);
/// Accepts the form above; also a bare rational string.
Cyclo cyclo_from_json(const json& j);

json to_json(const GroupAlgebraElement& e);
GroupAlgebraElement group_element_from_json(const FieldContext& ctx, const json& j);

json to_json(const Poly<Cyclo>& f, int order);
Poly<Cyclo> poly_from_json(const json& j);

json to_json(const LaurentPoly& f, int order);

json to_json(const KappaTrace& sp);
json to_json(const GroupValues& gv, int n);
json to_json(const GenFunSet& g);
json to_json(const MomentTable& mt);
json to_json(const AnnihilatorCertificate& c);

/// p,s,value,provenance rows; values as ';'-separated power-basis coefficients.
void write_csv(std::ostream& os, const MomentTable& mt);
void write_csv(std::ostream& os, const H0Gram& g);

/// Compact rendering a0 + a1*z^1 + ... of a number, with an optional
/// labeled decimal approximation.
std::string render(const Cyclo& c, bool approx = false);

}  // namespace sra
