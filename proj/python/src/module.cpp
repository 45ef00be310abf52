#include "sullivan/cli.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/corpus.hpp"
#include "sullivan/document.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/expression.hpp"
#include "sullivan/gysin.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sullivan;

namespace {

// A path, "corpus:<id>", or JSON text.
AlgebraDocument document(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return parse_document(source);
    return load_document(source);
}

Integer to_integer(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::int_ to_python(const Integer& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

std::vector<std::size_t> betti(const std::string& source, int lo, int hi, std::optional<int> cap) {
    const AlgebraDocument doc = document(source);
    DGAPtr dga = doc.is_ring() ? DGA::create(GradedAlgebra::create(build_ring(doc), {}, std::nullopt), {})
                               : build_dga(doc, cap);
    return Cohomology(dga).betti_numbers(lo, hi, 0);
}

std::vector<py::int_> smith_factors(const std::vector<std::vector<py::object>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (const auto& x : r) row.push_back(to_integer(x));
        if (!m.empty() && row.size() != m[0].size()) throw PreconditionError("ragged matrix");
        m.push_back(std::move(row));
    }
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<py::int_> out;
    for (const auto& f : smith_normal_form(m, m.size(), cols).factors) out.push_back(to_python(f));
    return out;
}

std::vector<std::string> gysin(const std::string& source, int fiber, const std::string& euler) {
    const AlgebraDocument doc = document(source);
    if (!doc.is_ring()) throw PreconditionError("gysin needs a finite_ring or integral_ring document");
    const RingPtr ring = build_ring(doc);
    const AlgebraPtr alg = GradedAlgebra::create(ring, {}, std::nullopt);
    Vector e(ring->size());
    const Element parsed = parse_element(euler, *alg);
    for (const auto& [m, c] : parsed.terms()) e[m.ring] += c;
    std::vector<std::string> out;
    for (const auto& g : gysin_total(*ring, fiber, e).degrees) out.push_back(g.group.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    m.def("run", [](const std::vector<std::string>& args) {
        CommandResult r;
        {
            py::gil_scoped_release release;
            r = run_command(args);
        }
        return py::make_tuple(r.exit_code, r.out, r.err);
    }, py::arg("args"));

    m.def("corpus_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : corpus_entries()) ids.push_back(e.id);
        return ids;
    });
    m.def("corpus_document", &corpus_document_text, py::arg("id"));
    m.def("check_corpus", [](const std::string& id) {
        py::list out;
        for (const auto& c : check_corpus_entry(corpus_entry(id))) {
            py::dict d;
            d["item"] = c.item;
            d["origin"] = c.origin;
            d["passed"] = c.passed;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    }, py::arg("id"));

    m.def("betti", &betti, py::arg("source"), py::arg("lo"), py::arg("hi"), py::arg("cap") = py::none());
    m.def("smith_factors", &smith_factors, py::arg("rows"));
    m.def("gysin", &gysin, py::arg("source"), py::arg("fiber"), py::arg("euler"));
}
