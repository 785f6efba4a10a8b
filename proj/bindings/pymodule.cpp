#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgp/report.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const hgp::Int& v) {
    PyObject* p = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

py::list vec_to_py(const hgp::IntVec& v) {
    py::list out;
    for (const hgp::Int& x : v) out.append(to_py_int(x));
    return out;
}

py::list matrix_to_py(const hgp::IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows; ++i) {
        py::list row;
        for (int j = 0; j < m.cols; ++j) row.append(to_py_int(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list poly_to_py(const hgp::IntPoly& p) {
    py::list out;
    for (const hgp::Int& c : p.c) out.append(to_py_int(c));
    return out;
}

py::list tuple_to_py(const hgp::ParamTuple& t) {
    py::list out;
    for (const hgp::Rat& q : t.entries) out.append(hgp::rat_str(q));
    return out;
}

// Reports are built as JSON (the same document the CLI prints) and handed to
// Python as plain dicts.
py::object json_to_py(const nlohmann::json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

hgp::SearchConfig make_config(const std::string& max_entry, int max_depth, int threads) {
    hgp::SearchConfig cfg;
    if (max_entry.empty())
        cfg.max_entry = std::nullopt;
    else
        cfg.max_entry = hgp::Int(max_entry);
    cfg.max_depth = max_depth;
    cfg.threads = threads;
    return cfg;
}

nlohmann::json run_verify(const std::string& label, const hgp::ParamTuple& alpha,
                          const hgp::ParamTuple& beta, const std::string& word) {
    hgp::Certificate cert{label, alpha, beta, hgp::parse_word(word)};
    const hgp::VerificationReport rep = hgp::check_certificate(cert);
    return hgp::report_to_json(rep, label, alpha, beta, word);
}

nlohmann::json run_search(const std::string& label, const hgp::ParamTuple& alpha,
                          const hgp::ParamTuple& beta, const hgp::SearchConfig& cfg) {
    const hgp::GroupPresentation gp = hgp::build_group(alpha, beta);
    const hgp::SearchResult res = hgp::search_certificate(gp, cfg);
    nlohmann::json j;
    if (res.found) {
        const std::string word = hgp::word_str(res.word);
        j = hgp::report_to_json(hgp::verify_pair(gp.generators(), res.word), label, alpha, beta,
                                word);
        j["found_word"] = word;
    } else {
        j["found_word"] = nullptr;
    }
    j["visited"] = static_cast<std::int64_t>(res.visited);
    j["depth_reached"] = res.depth_reached;
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symplectic hypergeometric monodromy groups: exact construction, "
              "arithmeticity certificates, orbit search.";

    m.def("parse_tuple",
          [](const std::string& text) { return tuple_to_py(hgp::parse_rational_tuple(text)); },
          py::arg("text"), "Parse a comma-separated rational tuple; returns reduced entries.");

    m.def("cyclotomic",
          [](unsigned d) { return poly_to_py(hgp::cyclotomic_poly(d)); }, py::arg("d"),
          "Coefficients of the d-th cyclotomic polynomial, lowest degree first.");

    m.def("char_poly",
          [](const std::string& tuple_text) {
              return poly_to_py(hgp::build_char_poly(hgp::parse_rational_tuple(tuple_text)));
          },
          py::arg("tuple"),
          "Integer characteristic polynomial of a Galois-stable tuple, lowest degree first.");

    m.def("parameter_condition",
          [](const std::string& a, const std::string& b) {
              return hgp::check_parameter_condition(hgp::parse_rational_tuple(a),
                                                    hgp::parse_rational_tuple(b));
          },
          py::arg("alpha"), py::arg("beta"),
          "True iff alpha_j - beta_k is never an integer.");

    py::class_<hgp::GroupPresentation>(m, "Group")
        .def(py::init([](const std::string& alpha, const std::string& beta) {
                 return hgp::build_group(hgp::parse_rational_tuple(alpha),
                                         hgp::parse_rational_tuple(beta));
             }),
             py::arg("alpha"), py::arg("beta"))
        .def_readonly("n", &hgp::GroupPresentation::n)
        .def_property_readonly("dim", [](const hgp::GroupPresentation& gp) { return 2 * gp.n; })
        .def_property_readonly("A", [](const hgp::GroupPresentation& gp) { return matrix_to_py(gp.A); })
        .def_property_readonly("B", [](const hgp::GroupPresentation& gp) { return matrix_to_py(gp.B); })
        .def_property_readonly("A_inv",
                               [](const hgp::GroupPresentation& gp) { return matrix_to_py(gp.Ainv); })
        .def_property_readonly("B_inv",
                               [](const hgp::GroupPresentation& gp) { return matrix_to_py(gp.Binv); })
        .def("eval_word",
             [](const hgp::GroupPresentation& gp, const std::string& word) {
                 return matrix_to_py(hgp::eval_word(hgp::parse_word(word), gp));
             },
             py::arg("word"))
        .def("omega",
             [](const hgp::GroupPresentation& gp) {
                 return matrix_to_py(hgp::solve_invariant_form(gp).omega);
             },
             "Primitive integral symplectic form preserved by A and B.")
        .def("transvection", [](const hgp::GroupPresentation& gp) {
            const hgp::GeneratorSet gens = gp.generators();
            const hgp::Transvection t = hgp::group_transvection(gens);
            const hgp::SymplecticForm form = hgp::solve_invariant_form(gp);
            py::dict d;
            d["v_R"] = vec_to_py(t.v_R);
            d["v_L"] = vec_to_py(t.v_L);
            d["lambda"] = hgp::rat_str(hgp::transvection_lambda(t, form));
            return d;
        });

    m.def("verify",
          [](const std::string& alpha, const std::string& beta, const std::string& word) {
              return json_to_py(run_verify("", hgp::parse_rational_tuple(alpha),
                                           hgp::parse_rational_tuple(beta), word));
          },
          py::arg("alpha"), py::arg("beta"), py::arg("word"));

    m.def("verify_label",
          [](const std::string& label, std::optional<std::string> word) {
              const hgp::CatalogEntry& entry = hgp::lookup(label);
              const hgp::ResolvedParams rp = hgp::resolve_entry(entry);
              return json_to_py(
                  run_verify(label, rp.alpha, rp.beta, word ? *word : entry.word));
          },
          py::arg("label"), py::arg("word") = std::nullopt);

    m.def("search",
          [](const std::string& alpha, const std::string& beta, const std::string& max_entry,
             int max_depth, int threads) {
              return json_to_py(run_search("", hgp::parse_rational_tuple(alpha),
                                           hgp::parse_rational_tuple(beta),
                                           make_config(max_entry, max_depth, threads)));
          },
          py::arg("alpha"), py::arg("beta"), py::arg("max_entry") = "1000000",
          py::arg("max_depth") = 40, py::arg("threads") = 1);

    m.def("search_label",
          [](const std::string& label, const std::string& max_entry, int max_depth, int threads) {
              const hgp::CatalogEntry& entry = hgp::lookup(label);
              const hgp::ResolvedParams rp = hgp::resolve_entry(entry);
              return json_to_py(run_search(label, rp.alpha, rp.beta,
                                           make_config(max_entry, max_depth, threads)));
          },
          py::arg("label"), py::arg("max_entry") = "1000000", py::arg("max_depth") = 40,
          py::arg("threads") = 1);

    m.def("witness_label",
          [](const std::string& label, int depth) {
              const hgp::CatalogEntry& entry = hgp::lookup(label);
              const hgp::ResolvedParams rp = hgp::resolve_entry(entry);
              hgp::Certificate cert{label, rp.alpha, rp.beta, hgp::parse_word(entry.word)};
              return json_to_py(hgp::witness_to_json(hgp::build_proof_witness(cert, depth)));
          },
          py::arg("label"), py::arg("depth") = 8);

    m.def("catalog_labels", [] {
        py::list out;
        for (const hgp::CatalogEntry& e : hgp::catalog()) out.append(e.label);
        return out;
    });

    m.def("catalog_entry", [](const std::string& label) {
        const hgp::CatalogEntry& e = hgp::lookup(label);
        py::dict d;
        d["label"] = e.label;
        d["table"] = e.table;
        d["alpha"] = tuple_to_py(e.alpha);
        d["beta"] = tuple_to_py(e.beta);
        d["word"] = e.word;
        d["suspect"] = e.suspect;
        if (e.beta_corrected) d["beta_corrected"] = tuple_to_py(*e.beta_corrected);
        return d;
    });

    m.def("catalog_json", [] { return hgp::catalog_to_json(hgp::catalog()); });

    py::register_exception<hgp::Error>(m, "HgpError");
}
