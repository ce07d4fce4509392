#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxeter/errors.hpp"
#include "coxeter/omega_form.hpp"
#include "coxeter/presets.hpp"
#include "coxeter/reflection.hpp"
#include "coxeter/sink_flip.hpp"
#include "coxeter/suites.hpp"

namespace py = pybind11;
using namespace coxeter;

namespace {

Word resolve_word(const GroupContext& ctx, const std::optional<Word>& c) { return c ? *c : default_coxeter_word(ctx); }

std::size_t option(const py::dict& opts, const char* key, std::size_t fallback) {
  return opts.contains(key) ? opts[key].cast<std::size_t>() : fallback;
}

std::string run_suite(const std::string& suite, const GroupContext& ctx, const std::optional<Word>& c,
                      const py::dict& opts) {
  const bool negative = opts.contains("negative_control") && opts["negative_control"].cast<bool>();
  VerificationReport r;
  if (suite == "classify") {
    r = cmd_classify(ctx);
  } else {
    const Word cw = resolve_word(ctx, c);
    if (suite == "power-reduced") r = cmd_power_reduced(ctx, cw, option(opts, "k_max", 20), negative);
    else if (suite == "admissible-reduced") r = cmd_admissible_reduced(ctx, cw, option(opts, "n_max", 9));
    else if (suite == "prop-mt") r = cmd_prop_mt(ctx, cw, option(opts, "n_max", 8));
    else if (suite == "growth") r = cmd_growth(ctx, cw, option(opts, "k_max", 20), negative);
    else if (suite == "w0") r = cmd_w0_variant(ctx, cw);
    else throw InputError("unknown suite '" + suite + "'");
  }
  return r.to_json();
}

std::string run_verify_all(const std::vector<GroupContext>& groups, const py::dict& opts, bool serial) {
  Budgets b;
  b.k_max = option(opts, "k_max", b.k_max);
  b.n_max = option(opts, "n_max", b.n_max);
  b.depth = option(opts, "depth", b.depth);
  b.order_length = option(opts, "order_length", b.order_length);
  b.poset_length = option(opts, "poset_length", b.poset_length);
  b.mt_length = option(opts, "mt_length", b.mt_length);
  b.census_length = option(opts, "census_length", b.census_length);
  b.random_words = option(opts, "random_words", b.random_words);
  b.random_length = option(opts, "random_length", b.random_length);
  if (opts.contains("seed")) b.seed = opts["seed"].cast<std::uint64_t>();
  py::gil_scoped_release release;
  return cmd_verify_all(groups, b, serial).to_json();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Coxeter group computations (0-based generators)";

  static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      py::set_error(precondition, e.what());
    } catch (const InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<GroupContext>(m, "Group")
      .def_static("preset", [](const std::string& name) { return load_group(name); }, py::arg("name"))
      .def_static("from_json", [](const std::string& text) { return parse_group_json(text); }, py::arg("text"))
      .def_static(
          "from_matrix",
          [](const std::vector<std::vector<Label>>& m, const std::string& name) {
            return build_context(CoxeterMatrix(m), name);
          },
          py::arg("matrix"), py::arg("name") = "", "Coxeter matrix with 0 standing for infinity.")
      .def_property_readonly("name", &GroupContext::name)
      .def_property_readonly("rank", &GroupContext::rank)
      .def_property_readonly("matrix", [](const GroupContext& g) { return g.matrix().entries(); })
      .def_property_readonly("classification", [](const GroupContext& g) { return to_string(g.classification()); })
      .def_property_readonly("irreducible", &GroupContext::irreducible)
      .def_property_readonly("diameter", &GroupContext::diameter)
      .def("to_json", [](const GroupContext& g) { return group_to_json(g); })
      .def("__repr__", [](const GroupContext& g) { return "<Group " + g.name() + ">"; });

  m.def("presets", [] {
    std::vector<std::string> names;
    for (const auto& p : preset_catalog()) names.push_back(p.name);
    return names;
  });

  m.def("is_reduced", &is_reduced, py::arg("group"), py::arg("word"));
  m.def(
      "length", [](const GroupContext& g, const Word& w) { return length(g, word_to_element(g, w)); },
      py::arg("group"), py::arg("word"), "Length of the element spelled by the word.");
  m.def(
      "reduced_word", [](const GroupContext& g, const Word& w) { return reduced_word(g, word_to_element(g, w)); },
      py::arg("group"), py::arg("word"));
  m.def(
      "demazure_product", [](const GroupContext& g, const Word& w) { return reduced_word(g, demazure_product(g, w)); },
      py::arg("group"), py::arg("seq"), "A reduced word for the Demazure product.");
  m.def("power_word", &power_word, py::arg("c_word"), py::arg("k"));
  m.def("all_coxeter_words", &all_coxeter_words, py::arg("group"));
  m.def(
      "is_admissible",
      [](const GroupContext& g, const Word& c, const Word& seq) {
        return is_admissible(g, orientation_of_coxeter_word(g, c), seq);
      },
      py::arg("group"), py::arg("c_word"), py::arg("seq"));
  m.def(
      "enumerate_admissible",
      [](const GroupContext& g, const Word& c, std::size_t n) {
        return enumerate_admissible(g, orientation_of_coxeter_word(g, c), n);
      },
      py::arg("group"), py::arg("c_word"), py::arg("length"));
  m.def(
      "phi", [](const GroupContext& g, const Word& seq) { return phi(g, seq).counts(); }, py::arg("group"),
      py::arg("seq"));
  m.def(
      "omega",
      [](const GroupContext& g, const Word& c, const std::vector<long>& v, const std::vector<long>& w) {
        const AlgReal x = eval_omega(build_omega(g, c), RootVector(g.field(), v), RootVector(g.field(), w));
        return py::make_tuple(x.to_string(), x.to_double());
      },
      py::arg("group"), py::arg("c_word"), py::arg("v"), py::arg("w"),
      "omega_c(v, w) on integer coordinate vectors, as (exact string, float).");
  m.def(
      "growth_lengths", [](const GroupContext& g, const Word& c, std::size_t k) { return growth_trace(g, c, k).lengths; },
      py::arg("group"), py::arg("c_word"), py::arg("k_max"));
  m.def("find_w0_sequence", &find_w0_sequence, py::arg("group"), py::arg("c_word"));

  m.def("_run", &run_suite);
  m.def("_verify_all", &run_verify_all);
}
