#pragma once

// JSON encodings of library values. Integers that fit in int64 are numbers,
// larger ones decimal strings.

#include <json.hpp>

#include "apt/basis.hpp"
#include "apt/classgroup.hpp"
#include "apt/decompose.hpp"
#include "apt/triples.hpp"

namespace aptcli {

using Json = nlohmann::json;

Json int_json(const apt::Int& x);
/// Accepts both encodings. Throws std::invalid_argument otherwise.
apt::Int int_from_json(const Json& j);

Json form_json(const apt::QuadForm& f);
apt::QuadForm form_from_json(const Json& j);

Json triple_json(const apt::Triple& t);

Json element_json(const apt::BasisElement& e);
Json pillar_json(const apt::Pillar& p);
Json decomposition_json(const apt::Modulus& mod, const apt::Triple& input, const apt::Decomposition& d);

/// Compact form with sorted keys; the byte-level canonical encoding.
std::string canonical(const Json& j);

}  // namespace aptcli
