#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ddelta/runner.hpp"
#include "ddelta/verify.hpp"

namespace py = pybind11;
using namespace ddelta;

namespace {

using RingH = std::shared_ptr<RingContext>;
using SeqH = std::shared_ptr<RegularSequence>;

RingH hold(const RingPtr& r) { return std::const_pointer_cast<RingContext>(r); }
SeqH hold(const RegSeqPtr& r) { return std::const_pointer_cast<RegularSequence>(r); }

Subset to_subset(const std::vector<unsigned>& elements)
{
    Subset s;
    for (auto e : elements)
        s = s.with(e);
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact polynomial, ideal and Delta-Delta complex computations over F_p";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<RingContext, RingH>(m, "Ring")
        .def(py::init([](std::uint64_t p, std::vector<std::string> vars, const std::string& order) {
                 return hold(make_ring(p, std::move(vars), term_order_from_string(order)));
             }),
             py::arg("p"), py::arg("vars"), py::arg("order") = "degrevlex")
        .def_property_readonly("p", &RingContext::characteristic)
        .def_property_readonly("vars", &RingContext::variables)
        .def("__call__", [](const RingH& r, const std::string& text) { return parse_polynomial(text, r); });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__pow__", &Polynomial::pow)
        .def("frobenius", &frobenius, py::arg("e") = 1)
        .def("is_zero", &Polynomial::is_zero)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.to_string() + "')"; });

    py::class_<Ideal>(m, "Ideal")
        .def(py::init([](const RingH& r, std::vector<Polynomial> gens) { return Ideal(r, std::move(gens)); }))
        .def("contains", py::overload_cast<const Polynomial&>(&Ideal::contains, py::const_))
        .def("__contains__", py::overload_cast<const Polynomial&>(&Ideal::contains, py::const_))
        .def("normal_form", &Ideal::normal_form)
        .def("groebner_basis", &Ideal::groebner_basis)
        .def("__add__", [](const Ideal& a, const Ideal& b) { return a + b; })
        .def(py::self == py::self)
        .def("__str__", &Ideal::to_string);

    m.def("colon", py::overload_cast<const Ideal&, const Polynomial&>(&colon));
    m.def("intersect", &intersect);

    py::class_<RegularSequence, SeqH>(m, "Sequence")
        .def(py::init([](const RingH& ring, std::vector<Polynomial> f) { return hold(RegularSequence::create(ring, f)); }))
        .def_property_readonly("length", &RegularSequence::length)
        .def_property_readonly("product", &RegularSequence::product)
        .def("bracket_power", py::overload_cast<std::uint64_t>(&RegularSequence::bracket_power, py::const_))
        .def("__str__", &RegularSequence::to_string);

    py::class_<CechClass>(m, "CechClass")
        .def(py::init([](const SeqH& rs, const Polynomial& r, std::uint64_t a) { return CechClass(rs, r, a); }))
        .def_property_readonly("numerator", &CechClass::numerator)
        .def_property_readonly("level", &CechClass::level)
        .def("is_zero", &cech_is_zero)
        .def("__eq__", &cech_equal)
        .def("__add__", &cech_add)
        .def("__rmul__", [](const CechClass& xi, const Polynomial& s) { return scalar_action(s, xi); })
        .def("raise_level", &raise_level)
        .def("annihilated_by", [](const CechClass& xi, const std::vector<unsigned>& t) { return annihilated_by(xi, to_subset(t)); })
        .def("__str__", &CechClass::to_string);

    m.def("f_nat", &f_nat);
    m.def("f_fed", &f_fed);
    m.def("phi_embed", [](const SeqH& rs, const Polynomial& r, std::uint64_t a, const std::vector<unsigned>& g) {
        return phi_embed(rs, r, a, to_subset(g));
    });
    m.def("phi_section", [](const CechClass& xi, const std::vector<unsigned>& g) { return phi_section(xi, to_subset(g)); });

    m.def("level_summary", [](const SeqH& rs, std::uint64_t a) {
        auto level = build_level(rs, a);
        py::list terms;
        for (std::size_t i = 0; i < level.labels.size(); ++i) {
            py::list summands;
            for (std::size_t k = 0; k < level.labels[i].size(); ++k)
                summands.append(py::make_tuple(level.labels[i][k].to_string(), level.ideals[i][k].to_string()));
            terms.append(summands);
        }
        return terms;
    });
    m.def("cohomology_dimension", [](const SeqH& rs, std::uint64_t a, std::size_t i) {
        return cohomology(build_level(rs, a).complex, i).dimension();
    });
    m.def(
        "verify_vanishing",
        [](const SeqH& rs, unsigned i, std::uint64_t a, std::optional<std::uint64_t> bound) {
            auto rep = verify_vanishing(rs, i, a, bound);
            return py::make_tuple(rep.all_died(), rep.max_death_level());
        },
        py::arg("rs"), py::arg("degree"), py::arg("a"), py::arg("bound") = py::none());
    m.def("verify_augmentation", [](const SeqH& rs, std::uint64_t a) { return verify_augmentation(rs, a).pass(); });
    m.def("verify_structure_kernels", [](const SeqH& rs, unsigned e) { return verify_structure_kernels(rs, e).pass(); });
    m.def("verify_codim2_V", [](const SeqH& rs, unsigned e) { return verify_codim2_V(rs, e).pass(); });
    m.def("top_class_persists", [](const SeqH& rs, std::uint64_t a, std::uint64_t b) { return top_class_persists(rs, a, b); });

    m.def("list_checks", [] { return runner::list_checks_text(); });
    m.def(
        "run_config",
        [](const std::string& text, unsigned jobs) {
            runner::Report report;
            try {
                py::gil_scoped_release release;
                report = runner::run(runner::parse_config_text(text), {jobs, std::nullopt});
            } catch (const runner::ConfigError& e) {
                report.error = nlohmann::json{{"kind", "config"}, {"message", e.what()}, {"location", e.location()}};
            }
            return py::make_tuple(report.to_json().dump(), report.exit_code());
        },
        py::arg("text"), py::arg("jobs") = 1);
}
