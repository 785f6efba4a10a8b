#include "hgp/report.hpp"

namespace hgp {

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json vec_to_json(const IntVec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

nlohmann::json tuple_to_json_array(const ParamTuple& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& q : t.entries) arr.push_back(rat_str(q));
    return arr;
}

nlohmann::json report_to_json(const VerificationReport& rep, const std::string& label,
                              const ParamTuple& alpha, const ParamTuple& beta,
                              const std::string& word) {
    nlohmann::json j;
    j["label"] = label.empty() ? nlohmann::json() : nlohmann::json(label);
    j["alpha"] = tuple_to_json_array(alpha);
    j["beta"] = tuple_to_json_array(beta);
    j["word"] = word;
    j["transvection_ok"] = rep.transvection_ok;
    j["orthogonality_value"] = int_to_json(rep.orthogonality_value);
    j["independent"] = rep.independent;
    j["form_dimension"] = rep.form_dimension;
    j["lambda"] = rat_str(rep.lambda);
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["reason"] = rep.reason;
    j["assumed_zariski_dense"] = true;
    return j;
}

nlohmann::json witness_to_json(const WitnessReport& wit) {
    nlohmann::json j;
    j["x3"] = vec_to_json(wit.x3);
    j["gamma_prime"] = word_str(wit.gamma_prime);
    j["a"] = int_to_json(wit.a);
    j["b"] = int_to_json(wit.b);
    j["direction"] = vec_to_json(wit.direction);
    j["W_basis"] = nlohmann::json::array({vec_to_json(wit.x1), vec_to_json(wit.x2), vec_to_json(wit.x3)});
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < wit.R.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jx = 0; jx < wit.R.cols; ++jx) row.push_back(int_to_json(wit.R.at(i, jx)));
        rows.push_back(std::move(row));
    }
    j["R"] = std::move(rows);
    j["ok"] = true;  // construction verifies all invariants or throws
    return j;
}

}  // namespace hgp
