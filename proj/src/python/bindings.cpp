/*
   Copyright 2026 The perpetuants authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <perpetuants/basis.hpp>
#include <perpetuants/binforms.hpp>
#include <perpetuants/errors.hpp>
#include <perpetuants/perpetua.hpp>
#include <perpetuants/serialize.hpp>
#include <perpetuants/symfunc.hpp>
#include <perpetuants/umbral.hpp>

namespace py = pybind11;
using namespace perpetuants;

namespace
{
// Python ints are arbitrary precision; go through text to avoid truncation.
py::object to_py_int(const Integer &z)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

std::vector<py::object> to_py_ints(const std::vector<Integer> &zs)
{
    std::vector<py::object> out;
    out.reserve(zs.size());
    for (const auto &z : zs)
        out.push_back(to_py_int(z));
    return out;
}

Normalization normalization(bool primitive)
{
    return primitive ? Normalization::Primitive : Normalization::Raw;
}
} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "U-invariants and perpetuants of binary forms, exact arithmetic";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InhomogeneousError>(m, "InhomogeneousError", base.ptr());
    py::register_exception<FamilyMismatchError>(m, "FamilyMismatchError", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string &text) { return parse_poly(text); }), py::arg("text") = "0")
        .def_static("variable", [](std::size_t i) { return Poly::variable(Family::A, i); })
        .def("is_zero", &Poly::is_zero)
        .def("bidegree",
             [](const Poly &p) {
                 BiDegree b = bidegree(p);
                 return py::make_tuple(b.degree, b.weight);
             })
        .def("D", [](const Poly &p) { return derivation_D(p); })
        .def("is_translation_invariant", [](const Poly &p) { return translate(p).is_constant(); })
        .def("primitive", &Poly::primitive_part)
        .def("to_json", [](const Poly &p) { return to_json(p).dump(); })
        .def_static("from_json", [](const std::string &s) { return poly_from_json(Json::parse(s)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Poly &p, unsigned e) { return p.pow(e); })
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly &p) { return "Poly('" + p.to_string() + "')"; });

    py::class_<InvariantElement>(m, "InvariantElement")
        .def_readonly("n", &InvariantElement::n)
        .def_readonly("g", &InvariantElement::g)
        .def_readonly("k", &InvariantElement::k)
        .def_readonly("value", &InvariantElement::value)
        .def("to_json", [](const InvariantElement &e) { return to_json(e).dump(); });

    py::class_<ComplementCertificate>(m, "ComplementCertificate")
        .def_readonly("n", &ComplementCertificate::n)
        .def_readonly("g", &ComplementCertificate::g)
        .def_readonly("dim_total", &ComplementCertificate::dim_total)
        .def_readonly("dim_decomposable", &ComplementCertificate::dim_decomposable)
        .def_readonly("dim_perpetuant", &ComplementCertificate::dim_perpetuant)
        .def_readonly("direct_sum_ok", &ComplementCertificate::direct_sum_ok)
        .def_property_readonly("stroh", [](const ComplementCertificate &c) { return to_py_int(c.stroh_coefficient); })
        .def_property_readonly("ok", &ComplementCertificate::ok)
        .def("to_json", [](const ComplementCertificate &c) { return to_json(c).dump(); });

    m.def("u_basis", [](std::size_t n, unsigned g, bool primitive) { return u_basis(n, g, normalization(primitive)); },
          py::arg("n"), py::arg("g"), py::arg("primitive") = false);
    m.def("kernel_oracle", [](std::size_t n, unsigned g) { return kernel_oracle(n, g); });
    m.def("span_equal", [](const std::vector<Poly> &a, const std::vector<Poly> &b) { return span_equal(a, b).equal; });
    m.def("dim_series", [](std::size_t n, unsigned g_max) { return to_py_ints(dim_series(n, g_max).coefficients); });
    m.def("stroh_series",
          [](std::size_t n, unsigned g_max) { return to_py_ints(stroh_series(n, g_max).coefficients); });
    m.def("threshold", [](std::size_t n) { return threshold(n).k; });
    m.def("perpetuant_basis",
          [](std::size_t n, unsigned g) { return perpetuant_basis(n, g); });
    m.def("verify_complement", [](std::size_t n, unsigned g) { return verify_complement(n, g); });
    m.def("degree2_perpetuant", &degree2_perpetuant);
    m.def("potenziante_text", [](std::size_t n, unsigned g) { return potenziante(n, g).rows_text(); });
    m.def("q_n_leading_exponent", [](std::size_t n) { return lambda_exponents(leading_exponent(q_n(n)), n - 1); });
    m.def("c_k", &c_k);
    m.def("relations", [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto &r : relation_checks())
            out.emplace_back(r.name, r.pass);
        return out;
    });
}
