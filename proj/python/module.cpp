#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatring/classify.hpp"
#include "quatring/errors.hpp"
#include "quatring/json_io.hpp"
#include "quatring/oracle.hpp"
#include "quatring/text.hpp"

namespace py = pybind11;

namespace {

using namespace quatring;

Ring ring_from_tag(const std::string& tag) {
    if (tag == "L") return Ring::L;
    if (tag == "H") return Ring::H;
    throw DomainError("ring must be \"L\" or \"H\", got \"" + tag + "\"");
}

QuatSet read_set(const std::string& payload, const std::string& ring) {
    Ring r = ring_from_tag(ring);
    ParsedSet parsed = parse_quat_set(payload, r);
    if (parsed.elements.empty()) throw ParseError("the set payload is empty", 1);
    return QuatSet(r, parsed.elements);
}

std::string classify_json_str(const std::string& payload, const std::string& ring) {
    return verdict_json(decide_ringset(read_set(payload, ring))).dump();
}

std::string oracle_json_str(const std::string& payload, const std::string& ring, i64 gamma_cap) {
    Ring r = ring_from_tag(ring);
    return oracle_result_json(oracle_decide(read_set(payload, ring), gamma_cap), r).dump();
}

std::string reduce_json_str(const std::string& payload, const std::string& ring) {
    return reduced_form_json(reduce_set(read_set(payload, ring))).dump();
}

std::string gamma_json_str(const std::string& payload, const std::string& ring) {
    return delta_stats_json(delta_and_gamma(read_set(payload, ring))).dump();
}

std::string separator_json_str(const std::string& payload_s, const std::string& payload_t,
                               const std::string& ring) {
    Ring r = ring_from_tag(ring);
    QPoly f = separator(read_set(payload_s, ring), read_set(payload_t, ring));
    Json doc;
    doc["F"] = poly_json(f, r);
    return doc.dump();
}

std::string enumerate_json_str(const std::string& ring, std::optional<i64> root,
                               std::optional<i64> trace, std::optional<i64> norm) {
    Ring r = ring_from_tag(ring);
    MinPoly m = [&] {
        if (root) {
            if (trace || norm) throw DomainError("root excludes trace/norm");
            return MinPoly::linear(Rational(*root));
        }
        if (!trace || !norm) throw DomainError("need either root or both trace and norm");
        return MinPoly::quadratic(*trace, *norm);
    }();
    std::vector<Quat> elems = enumerate_class(m, r);
    Json doc;
    doc["min_poly"] = min_poly_json(m);
    doc["count"] = elems.size();
    Json arr = Json::array();
    for (const Quat& q : elems) arr.push_back(format_quat(q));
    doc["elements"] = arr;
    return doc.dump();
}

std::string tn_example_str(i64 n) { return format_quat_list(tn_example(n)); }

bool check_prop56(const std::string& payload, const std::string& ring, i64 n_max) {
    return check_prop56_hypothesis(read_set(payload, ring), n_max);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ringset decision procedures over the Lipschitz and Hurwitz quaternion orders";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const CapError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const OverflowError& e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        }
    });

    m.def("classify_json", &classify_json_str, py::arg("payload"), py::arg("ring") = "L",
          "Full decision with rules and certificate, as a JSON string");
    m.def("oracle_json", &oracle_json_str, py::arg("payload"), py::arg("ring") = "L",
          py::arg("gamma_cap") = kDefaultGammaCap,
          "Brute-force coset decision, as a JSON string");
    m.def("reduce_json", &reduce_json_str, py::arg("payload"), py::arg("ring") = "L",
          "Reduced form a + n*T, as a JSON string");
    m.def("gamma_json", &gamma_json_str, py::arg("payload"), py::arg("ring") = "L",
          "Difference gcd and certifying combination, as a JSON string");
    m.def("separator_json", &separator_json_str, py::arg("payload_s"), py::arg("payload_t"),
          py::arg("ring") = "L", "Separator polynomial coefficients, as a JSON string");
    m.def("enumerate_json", &enumerate_json_str, py::arg("ring") = "L",
          py::arg("root") = std::nullopt, py::arg("trace") = std::nullopt,
          py::arg("norm") = std::nullopt, "All order elements of one class, as a JSON string");
    m.def("tn_example_str", &tn_example_str, py::arg("n"),
          "The block T_n of the infinite ringset family, formatted");
    m.def("check_prop56", &check_prop56, py::arg("payload"), py::arg("ring") = "L",
          py::arg("n_max") = 4, "Check the matching hypothesis for n = 2..n_max");
}
