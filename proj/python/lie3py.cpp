#include "lie3/algebra_io.hpp"
#include "lie3/cli.hpp"
#include "lie3/dual.hpp"
#include "lie3/expr.hpp"
#include "lie3/hopf.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

namespace py = pybind11;
using namespace lie3;

namespace {

class Algebra {
public:
    explicit Algebra(const std::string& ref)
        : ref_(ref), H_(std::make_unique<HopfAlgebra>(resolve_algebra(ref))) {}

    std::string normalize(const std::string& text, bool machine) {
        return show(parse_element(text, H_->U()), machine);
    }
    std::string mul(const std::vector<std::string>& texts, bool machine) {
        if (texts.empty()) throw std::invalid_argument("mul needs at least one factor");
        Element acc = parse_element(texts[0], H_->U());
        for (std::size_t i = 1; i < texts.size(); ++i) acc = H_->U().mul(acc, parse_element(texts[i], H_->U()));
        return show(acc, machine);
    }
    std::string coproduct(const std::string& text, bool machine) {
        TensorElement t = H_->coproduct(parse_element(text, H_->U()));
        return machine ? H_->render_machine(t) : H_->render(t);
    }
    std::string antipode(const std::string& text, bool machine) {
        return show(H_->antipode(parse_element(text, H_->U())), machine);
    }
    std::string counit(const std::string& text) {
        std::ostringstream os;
        os << HopfAlgebra::counit(parse_element(text, H_->U()));
        return os.str();
    }
    bool is_primitive(const std::string& text) { return H_->check_primitive(parse_element(text, H_->U())); }

    std::vector<std::pair<std::string, bool>> validate() const {
        std::vector<std::pair<std::string, bool>> out;
        for (const CheckResult& c : lie3::validate(H_->spec()).checks) out.emplace_back(c.name, c.passed);
        return out;
    }
    std::vector<std::string> pbw_dims(int degree) const {
        std::vector<std::string> out;
        for (const mpz_class& d : H_->U().pbw_graded_dims(degree)) out.push_back(d.get_str());
        return out;
    }

    std::string dual_mul(const std::vector<std::string>& texts, int cutoff, bool machine) {
        DualAlgebra& D = dual(cutoff);
        std::vector<DualElement> fs;
        for (const auto& t : texts) fs.push_back(parse_dual(t, D));
        DualElement f = D.mul(fs, cutoff);
        return machine ? D.render_machine(f) : D.render(f);
    }

    std::string json() const { return algebra_to_json(H_->spec()); }
    std::vector<std::string> g0() const { return H_->spec().g0_names(); }
    std::vector<std::string> g1() const { return H_->spec().g1_names(); }

private:
    std::string show(const Element& e, bool machine) const {
        return machine ? H_->fmt().element_machine(e) : H_->fmt().element(e);
    }
    DualAlgebra& dual(int cutoff) {
        if (!D_ || D_->max_cutoff() < cutoff) D_ = std::make_unique<DualAlgebra>(H_->spec(), cutoff);
        return *D_;
    }

    std::string ref_;
    std::unique_ptr<HopfAlgebra> H_;
    std::unique_ptr<DualAlgebra> D_;
};

}  // namespace

PYBIND11_MODULE(_lie3, m) {
    m.doc() = "Enveloping algebras of Lie algebras of order three";

    py::register_exception<ExprError>(m, "ExprError", PyExc_ValueError);
    py::register_exception<AlgebraFileError>(m, "AlgebraFileError", PyExc_ValueError);

    py::class_<Algebra>(m, "Algebra")
        .def(py::init<const std::string&>(), py::arg("ref") = "builtin:iso3_1_3")
        .def("normalize", &Algebra::normalize, py::arg("expr"), py::arg("machine") = false)
        .def("mul", &Algebra::mul, py::arg("factors"), py::arg("machine") = false)
        .def("coproduct", &Algebra::coproduct, py::arg("expr"), py::arg("machine") = false)
        .def("antipode", &Algebra::antipode, py::arg("expr"), py::arg("machine") = false)
        .def("counit", &Algebra::counit, py::arg("expr"))
        .def("is_primitive", &Algebra::is_primitive, py::arg("expr"))
        .def("validate", &Algebra::validate)
        .def("pbw_dims", &Algebra::pbw_dims, py::arg("degree"))
        .def("dual_mul", &Algebra::dual_mul, py::arg("factors"), py::arg("cutoff") = 3,
             py::arg("machine") = false)
        .def("to_json", &Algebra::json)
        .def_property_readonly("g0", &Algebra::g0)
        .def_property_readonly("g1", &Algebra::g1);

    m.def("roby_dim", [](int d, int n, int k) { return roby_dim(d, n, k).get_str(); },
          py::arg("d"), py::arg("n"), py::arg("k"));
    m.def("roby_basis", &roby_basis, py::arg("d"), py::arg("n"), py::arg("k"));
    m.def("builtin_names", &builtin_names);
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
