#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "seqcalc/catalog.hpp"
#include "seqcalc/combinatorics.hpp"
#include "seqcalc/identities.hpp"
#include "seqcalc/oeis.hpp"

namespace py = pybind11;
using namespace seqcalc;

namespace {

py::object int_from_string(const std::string& digits) {
    PyObject* raw = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!raw) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(raw);
}

py::list terms_str(const std::string& key_text, Index count) {
    CatalogKey key = CatalogKey::parse(key_text);
    py::list out;
    if (key.is_extended()) {
        ExtSequence s = key.build_extended();
        for (Index n = 0; n < count; ++n) out.append(s.term(n).str());
    } else {
        Sequence s = key.build();
        for (Index n = 0; n < count; ++n) out.append(s.term(n).str());
    }
    return out;
}

py::list terms_int(const std::string& key_text, Index count) {
    CatalogKey key = CatalogKey::parse(key_text);
    if (key.is_extended()) throw not_integral(0);
    Sequence s = key.build();
    py::list out;
    for (Index n = 0; n < count; ++n) out.append(int_from_string(s.term(n).integer_value().str()));
    return out;
}

py::dict report_dict(const VerificationReport& report) {
    py::dict d;
    d["key"] = report.key;
    d["status"] = report.status;
    d["mode"] = report.mode;
    d["params"] = report.params;
    if (report.first_mismatch) {
        py::dict m;
        m["index"] = report.first_mismatch->index;
        m["lhs"] = report.first_mismatch->lhs;
        m["rhs"] = report.first_mismatch->rhs;
        d["first_mismatch"] = m;
    } else {
        d["first_mismatch"] = py::none();
    }
    d["elapsed_ms"] = report.elapsed_ms;
    d["note"] = report.note;
    return d;
}

std::string appendix_table() {
    std::ostringstream out;
    for (const CatalogKey& key : CatalogKey::table_keys()) {
        out << key.str() << ": ";
        bool ext = key.is_extended();
        ExtSequence es;
        Sequence s;
        if (ext) es = key.build_extended(); else s = key.build();
        for (Index n = 0; n < 12; ++n)
            out << (ext ? es.term(n).str() : s.term(n).str()) << (n + 1 < 12 ? ", " : "\n");
    }
    return out.str();
}

} // namespace

PYBIND11_MODULE(_seqcalc, m) {
    m.doc() = "exact sequence calculus: catalog families, combinatorial numbers, and the "
              "identity registry";

    m.def("terms", &terms_str, py::arg("key"), py::arg("count") = 16,
          "terms of a catalog sequence as exact strings");
    m.def("terms_int", &terms_int, py::arg("key"), py::arg("count") = 16,
          "terms of an integer-valued catalog sequence as python ints");
    m.def("scalar_roundtrip", [](const std::string& text) { return Scalar::parse(text).str(); },
          py::arg("text"), "parse an exact scalar and print its canonical form");

    m.def("identity_keys", &identity_keys);
    m.def("verify", [](const std::string& key, Index prefix) {
              VerifyOptions options;
              if (prefix > 0) options.prefix = prefix;
              return report_dict(verify(key, options));
          },
          py::arg("key"), py::arg("prefix") = 0);
    m.def("verify_all", [](Index prefix) {
              VerifyOptions options;
              if (prefix > 0) options.prefix = prefix;
              std::vector<VerificationReport> reports;
              {
                  py::gil_scoped_release release;
                  reports = verify_all(options);
              }
              py::list out;
              for (const auto& report : reports) out.append(report_dict(report));
              return out;
          },
          py::arg("prefix") = 0);

    m.def("appendix_table", &appendix_table, "the 12-term reference table, one family per line");

    m.def("binomial", [](std::int64_t n, std::int64_t k) { return int_from_string(binomial(n, k).str()); });
    m.def("eulerian", [](std::int64_t n, std::int64_t k) { return int_from_string(eulerian(n, k).str()); });
    m.def("stirling2", [](std::int64_t n, std::int64_t k) { return int_from_string(stirling2(n, k).str()); });
    m.def("stirling1_unsigned", [](std::int64_t n, std::int64_t k) { return int_from_string(stirling1_unsigned(n, k).str()); });
    m.def("bell", [](std::int64_t n) { return int_from_string(bell(n).str()); });
    m.def("factorial", [](std::int64_t n) { return int_from_string(factorial(n).str()); });
    m.def("fubini", [](std::int64_t n) { return int_from_string(fubini(n).str()); });

    py::register_exception<error>(m, "SeqcalcError");
}
