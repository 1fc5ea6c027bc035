#pragma once

#include <string>

#include <json.hpp>

#include "mfq/liealg.hpp"
#include "mfq/loopv.hpp"
#include "mfq/mfshift.hpp"
#include "mfq/poly.hpp"

namespace mfq {

using nlohmann::json;

/// {"terms":[{"coeff":"p/q","monomial":[[label,depth,exp],...]},...]}
/// in canonical monomial order.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const LiePtr& ctx);

/// {"terms":[{"coeff":"p/q","word":[[label,depth],...]},...]} in canonical
/// PBW word order.
json uea_to_json(const UEAElement& a);
UEAElement uea_from_json(const json& j, const LiePtr& ctx, bool flat = false);

/// {"values":["p/q",...]} in basis order.
json functional_to_json(const Functional& chi);
Functional functional_from_json(const json& j, const LiePtr& ctx);

/// Basis index of the labeled generator; throws domain_error if absent.
int label_index(const LiePtr& ctx, const std::string& label);

}  // namespace mfq
