#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgauss/acceptance.hpp"
#include "qgauss/errors.hpp"
#include "qgauss/identities.hpp"
#include "qgauss/intpoly.hpp"
#include "qgauss/qkernel.hpp"
#include "qgauss/verify.hpp"

#include <sstream>

namespace py = pybind11;
using namespace qgauss;

namespace {

py::object to_py_int(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

BigInt from_py_int(const py::handle& obj) {
  return BigInt(std::string(py::str(obj)));
}

IntPoly poly_from_sequence(const py::iterable& coeffs) {
  std::vector<BigInt> values;
  for (const py::handle& item : coeffs) values.push_back(from_py_int(item));
  return IntPoly(std::move(values));
}

py::list poly_coeffs(const IntPoly& p) {
  py::list out;
  for (const BigInt& c : p.coeffs()) out.append(to_py_int(c));
  return out;
}

py::object verdict_index(const std::optional<long>& idx) {
  return idx ? py::cast(*idx) : py::none();
}

py::list params_list(const Params& params) {
  py::list out;
  for (const auto& [name, value] : params) out.append(py::make_tuple(name, value));
  return out;
}

} // namespace

PYBIND11_MODULE(_qgauss, m) {
  m.doc() = "Exact Gaussian-binomial arithmetic, identity checks and conjecture scans";

  py::register_exception<NotDivisibleError>(m, "NotDivisibleError", PyExc_ArithmeticError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<BadQuadrupleError>(m, "BadQuadrupleError", PyExc_ValueError);
  py::register_exception<BadParamsError>(m, "BadParamsError", PyExc_ValueError);
  py::register_exception<FormMismatchError>(m, "FormMismatchError", PyExc_ArithmeticError);

  py::class_<IntPoly>(m, "IntPoly")
      .def(py::init<>())
      .def(py::init(&poly_from_sequence), py::arg("coeffs"))
      .def("coeffs", &poly_coeffs)
      .def("degree",
           [](const IntPoly& p) -> py::object {
             auto d = p.degree();
             return d ? py::cast(*d) : py::none();
           })
      .def("coeff", [](const IntPoly& p, long j) { return to_py_int(p.coeff(j)); })
      .def("shifted", &IntPoly::shifted, py::arg("m"))
      .def("eval_at_one", [](const IntPoly& p) { return to_py_int(p.eval_at_one()); })
      .def("is_zero", &IntPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &IntPoly::to_string)
      .def("__repr__", [](const IntPoly& p) { return "IntPoly(" + p.to_string() + ")"; });

  m.def("exact_div", &exact_div, py::arg("p"), py::arg("d"));
  m.def("is_nonneg", [](const IntPoly& p) {
    auto v = is_nonneg(p);
    return py::make_tuple(v.ok, verdict_index(v.first_negative));
  });
  m.def("is_symmetric", py::overload_cast<const IntPoly&>(&is_symmetric), py::arg("p"));
  m.def("is_symmetric", py::overload_cast<const IntPoly&, long>(&is_symmetric), py::arg("p"),
        py::arg("ambient_degree"));
  m.def("is_unimodal", [](const IntPoly& p) {
    auto v = is_unimodal(p);
    return py::make_tuple(v.ok, verdict_index(v.first_violation));
  });

  m.def("q_int", &q_int, py::arg("n"));
  m.def("q_factorial", &q_factorial, py::arg("n"));
  m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"));
  m.def(
      "brute_force_qbinomial",
      [](long n, long k, const std::string& mode) {
        if (mode == "inversion") return brute_force_qbinomial(n, k, BruteForceMode::inversion);
        if (mode == "area") return brute_force_qbinomial(n, k, BruteForceMode::area);
        throw py::value_error("mode must be 'inversion' or 'area'");
      },
      py::arg("n"), py::arg("k"), py::arg("mode") = "inversion");
  m.def("binomial", [](long n, long k) { return to_py_int(binomial(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("ck_coefficient",
        [](long i, long k) { return to_py_int(ck_coefficient(i, k).value); }, py::arg("i"),
        py::arg("k"));
  m.def("ck_table", [](long max_i) {
    py::list rows;
    for (const auto& row : ck_table(max_i)) {
      py::list r;
      for (const BigInt& value : row) r.append(to_py_int(value));
      rows.append(r);
    }
    return rows;
  });

  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("name", &IdentityCheck::name)
      .def_property_readonly("params", [](const IdentityCheck& c) { return params_list(c.params); })
      .def_readonly("lhs", &IdentityCheck::lhs)
      .def_readonly("rhs", &IdentityCheck::rhs)
      .def_readonly("equal", &IdentityCheck::equal);

  py::class_<IntIdentityCheck>(m, "IntIdentityCheck")
      .def_readonly("name", &IntIdentityCheck::name)
      .def_property_readonly("params",
                             [](const IntIdentityCheck& c) { return params_list(c.params); })
      .def_property_readonly("lhs", [](const IntIdentityCheck& c) { return to_py_int(c.lhs); })
      .def_property_readonly("rhs", [](const IntIdentityCheck& c) { return to_py_int(c.rhs); })
      .def_readonly("equal", &IntIdentityCheck::equal);

  py::class_<NonnegCheck>(m, "NonnegCheck")
      .def_readonly("name", &NonnegCheck::name)
      .def_property_readonly("params", [](const NonnegCheck& c) { return params_list(c.params); })
      .def_readonly("diff", &NonnegCheck::diff)
      .def_property_readonly("ok", [](const NonnegCheck& c) { return c.verdict.ok; })
      .def_property_readonly(
          "first_negative", [](const NonnegCheck& c) { return verdict_index(c.verdict.first_negative); });

  py::class_<Lemma9Check>(m, "Lemma9Check")
      .def_readonly("n", &Lemma9Check::n)
      .def_readonly("k", &Lemma9Check::k)
      .def_readonly("diff", &Lemma9Check::diff)
      .def_property_readonly("nonneg", [](const Lemma9Check& c) { return c.nonneg.ok; })
      .def_readonly("decomposition_exact", &Lemma9Check::decomposition_exact)
      .def_readonly("u_symmetric", &Lemma9Check::u_symmetric)
      .def_readonly("u_unimodal", &Lemma9Check::u_unimodal)
      .def("ok", &Lemma9Check::ok);

  m.def("vandermonde_form_j", &vandermonde_form_j, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("vandermonde_form_k", &vandermonde_form_k, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("remark1_expansion", &remark1_expansion, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("d"));
  m.def("i1_special_case", &i1_special_case, py::arg("a"));
  m.def("lemma1_check", &lemma1_check, py::arg("a"), py::arg("i"));
  m.def("lemma2_check", &lemma2_check, py::arg("a"), py::arg("i"));
  m.def("theorem2_check", &theorem2_check, py::arg("a"), py::arg("i"));
  m.def("lemma4_check", &lemma4_check, py::arg("a"), py::arg("i"));
  m.def("lemma5_check", &lemma5_check, py::arg("a"), py::arg("i"));
  m.def("lemma6_check", &lemma6_check, py::arg("i"), py::arg("k"));
  m.def("lemma7_check", &lemma7_check, py::arg("i"), py::arg("k"));
  m.def("theorem3_bracket", &theorem3_bracket, py::arg("a"), py::arg("i"), py::arg("k"));
  m.def("lemma8_check", [](long a, long b, long k) { return lemma8_check(a, b, k).equal; },
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("lemma9_check", &lemma9_check, py::arg("n"), py::arg("k"));

  py::class_<ConjectureInstance>(m, "ConjectureInstance")
      .def_property_readonly("which",
                             [](const ConjectureInstance& c) { return static_cast<int>(c.which); })
      .def_property_readonly("params",
                             [](const ConjectureInstance& c) { return params_list(c.params); })
      .def_readonly("diff", &ConjectureInstance::diff)
      .def_readonly("ambient_degree", &ConjectureInstance::ambient_degree)
      .def_property_readonly("nonneg", [](const ConjectureInstance& c) { return c.nonneg.ok; })
      .def_readonly("symmetric", &ConjectureInstance::symmetric)
      .def_property_readonly("unimodal", [](const ConjectureInstance& c) { return c.unimodal.ok; })
      .def_readonly("degenerate", &ConjectureInstance::degenerate)
      .def_readonly("forms_equivalent", &ConjectureInstance::forms_equivalent)
      .def("passes", &ConjectureInstance::passes);

  py::class_<WZCheck>(m, "WZCheck")
      .def_property_readonly("variant",
                             [](const WZCheck& c) {
                               return c.variant == WZVariant::q1 ? "q1" : "q";
                             })
      .def_readonly("a", &WZCheck::a)
      .def_readonly("i", &WZCheck::i)
      .def_readonly("k_min", &WZCheck::k_min)
      .def_readonly("k_max", &WZCheck::k_max)
      .def_readonly("relation_ok", &WZCheck::relation_ok)
      .def_readonly("certificate_ok", &WZCheck::certificate_ok)
      .def_readonly("telescope_ok", &WZCheck::telescope_ok)
      .def("ok", &WZCheck::ok);

  m.def("bergeron_diff", &bergeron_diff, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
  m.def(
      "check_c1_c2",
      [](long a, long b, long c, long d, int which) {
        return check_c1_c2(a, b, c, d, which == 1 ? Conjecture::C1 : Conjecture::C2);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("which") = 2);
  m.def("enumerate_quadruples", [](long max_n) {
    py::list out;
    for (const Quadruple& t : enumerate_quadruples(max_n))
      out.append(py::make_tuple(t.a, t.b, t.c, t.d));
    return out;
  });
  m.def("check_c3", &check_c3, py::arg("a"), py::arg("b"), py::arg("beta"));
  m.def("check_c4", &check_c4, py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("theorem3_expansion", &theorem3_expansion, py::arg("a"), py::arg("i"));
  m.def("wz_check_q1", py::overload_cast<long, long>(&wz_check_q1), py::arg("a"), py::arg("i"));
  m.def("wz_check_q", py::overload_cast<long, long>(&wz_check_q), py::arg("a"), py::arg("i"));

  m.def("selftest", [](){
    std::ostringstream os;
    int failures = run_acceptance(os);
    return py::make_tuple(failures, os.str());
  }, "Run the acceptance suite; returns (failures, transcript)");
}
