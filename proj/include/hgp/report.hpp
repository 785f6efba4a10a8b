#pragma once

#include <json.hpp>

#include "hgp/catalog.hpp"
#include "hgp/certify.hpp"

namespace hgp {

// JSON encoding of exact integers: a number when it fits in 64 bits, a
// decimal string otherwise.
nlohmann::json int_to_json(const Int& v);
nlohmann::json vec_to_json(const IntVec& v);
nlohmann::json tuple_to_json_array(const ParamTuple& t);

// The serialized VerificationReport: its fields verbatim plus label, alpha,
// beta, word, and the recorded Zariski-density assumption.
nlohmann::json report_to_json(const VerificationReport& rep, const std::string& label,
                              const ParamTuple& alpha, const ParamTuple& beta,
                              const std::string& word);

nlohmann::json witness_to_json(const WitnessReport& wit);

}  // namespace hgp
