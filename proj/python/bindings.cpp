#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superyangian/dsl.hpp"
#include "superyangian/relations.hpp"

namespace py = pybind11;
using namespace sy;

namespace {

Word word_of(const std::vector<std::tuple<int, int, int>>& letters) {
  Word w;
  for (auto [i, j, r] : letters) w.push_back(make_gen(i, j, r));
  return w;
}

py::object report_dict(const Report& r) { return py::module_::import("json").attr("loads")(report_json(r)); }

}  // namespace

PYBIND11_MODULE(superyangian, m) {
  m.doc() = "Exact computations in the super Yangian Y_{M|N} over GF(p)";
  m.attr("__version__") = SUPERYANGIAN_VERSION;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<AlgebraContext>(m, "Context")
      .def(py::init(&make_context), py::arg("p"), py::arg("M"), py::arg("N"), py::arg("sigma"))
      .def_property_readonly("p", &AlgebraContext::p)
      .def_property_readonly("M", &AlgebraContext::M)
      .def_property_readonly("N", &AlgebraContext::N)
      .def_property_readonly("sigma", &AlgebraContext::sigma)
      .def_property_readonly("dim", &AlgebraContext::dim)
      .def("parity", [](const AlgebraContext& c, int i) {
        c.check_index(i);
        return c.parity(i);
      })
      .def("__eq__", [](const AlgebraContext& a, const AlgebraContext& b) { return a == b; })
      .def("__repr__", [](const AlgebraContext& c) { return "Context(" + c.key() + ")"; });

  py::class_<Element>(m, "Element")
      .def("__str__", [](const Element& e) { return to_text(e); })
      .def("__repr__", [](const Element& e) { return "Element(" + to_text(e) + ")"; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("is_zero", &Element::is_zero)
      .def("__len__", &Element::size)
      .def("terms", [](const Element& e) {
        std::vector<std::pair<std::vector<std::tuple<int, int, int>>, Coeff>> out;
        for (const Word& w : sorted_words(e)) {
          std::vector<std::tuple<int, int, int>> letters;
          for (Gen g : w) letters.emplace_back(gen_i(g), gen_j(g), gen_r(g));
          out.emplace_back(std::move(letters), e.terms.at(w));
        }
        return out;
      });

  py::class_<Yangian>(m, "Yangian")
      .def(py::init<AlgebraContext>(), py::arg("context"))
      .def_property_readonly("context", &Yangian::context, py::return_value_policy::copy)
      .def("generator", &Yangian::generator, py::arg("i"), py::arg("j"), py::arg("r"))
      .def("scalar", [](const Yangian& Y, std::int64_t c) { return Y.scalar(c); })
      .def("straighten", [](Yangian& Y, const std::vector<std::tuple<int, int, int>>& w) { return Y.straighten(word_of(w)); },
           py::arg("word"), "normal form of a product of generators given as (i, j, r) triples")
      .def("mul", &Yangian::mul)
      .def("bracket", &Yangian::supercommutator)
      .def("add", [](const Yangian& Y, const Element& a, const Element& b) { return add(Y.field(), a, b); })
      .def("sub", [](const Yangian& Y, const Element& a, const Element& b) { return sub(Y.field(), a, b); })
      .def("parity", &Yangian::parity)
      .def("rtt_bracket", &Yangian::rtt_bracket)
      .def(
          "eval",
          [](Yangian& Y, const std::string& expr, std::optional<std::vector<int>> mu, int order) {
            std::optional<Composition> c;
            if (mu) c = Composition(*mu);
            Evaluator ev(Y, c, order);
            return ev.eval(expr);
          },
          py::arg("expr"), py::arg("mu") = py::none(), py::arg("order") = 3);

  py::class_<GaussData>(m, "GaussData")
      .def_property_readonly("mu", [](const GaussData& g) { return g.mu.parts(); })
      .def_readonly("order", &GaussData::R)
      .def("d", &GaussData::d, py::arg("a"), py::arg("i"), py::arg("j"), py::arg("r"))
      .def("dp", &GaussData::dp, py::arg("a"), py::arg("i"), py::arg("j"), py::arg("r"))
      .def("e", &GaussData::e, py::arg("a"), py::arg("b"), py::arg("i"), py::arg("j"), py::arg("r"))
      .def("f", &GaussData::f, py::arg("b"), py::arg("a"), py::arg("i"), py::arg("j"), py::arg("r"))
      .def("dump", &gauss_dump);

  m.def(
      "gauss",
      [](Yangian& Y, const std::vector<int>& mu, int order) { return gauss_decompose(Y, Composition(mu), order); },
      py::arg("yangian"), py::arg("mu"), py::arg("order") = 3);

  m.def("families", [] {
    std::vector<std::tuple<std::string, std::string, int>> out;
    for (const auto& f : family_registry()) out.emplace_back(f.id, f.group, f.min_blocks);
    return out;
  });

  m.def(
      "verify",
      [](std::uint32_t p, int M, int N, const std::string& sigma, std::optional<std::vector<int>> mu, int series_order,
         int gen_order, std::vector<std::string> families, int jobs, bool deterministic) {
        RunConfig c;
        c.p = p;
        c.M = M;
        c.N = N;
        c.sigma = sigma;
        if (mu) c.mu = Composition(*mu);
        c.levels.R = series_order;
        c.levels.gen = gen_order;
        c.families = std::move(families);
        c.jobs = jobs;
        c.deterministic = deterministic;
        Report r;
        {
          py::gil_scoped_release nogil;
          r = full_suite(c);
        }
        return report_dict(r);
      },
      py::arg("p"), py::arg("M"), py::arg("N"), py::arg("sigma"), py::arg("mu") = py::none(), py::arg("series_order") = 3,
      py::arg("gen_order") = 3, py::arg("families") = std::vector<std::string>{"all"}, py::arg("jobs") = 1,
      py::arg("deterministic") = false,
      "run the relation families and return the report as a dict");
}
