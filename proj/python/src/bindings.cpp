#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtorus/json_io.hpp"
#include "qtorus/tqft.hpp"
#include "suites.hpp"

namespace py = pybind11;
using namespace qtorus;

namespace {

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string dump(const json& j) { return j.dump(); }

const CycloContext& level(int r) { return CycloContext::get(r); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quantum-torus computations over cyclotomic fields";

  py::register_exception<GradingError>(m, "GradingError", PyExc_ArithmeticError);
  py::register_exception<DegenerateSlopeError>(m, "DegenerateSlopeError", PyExc_ValueError);

  m.def("qint", [](int r, std::int64_t n) { return dump(to_json(qint(level(r), n))); });
  m.def("x_squared", [](int r) { return dump(to_json(x_squared(level(r)))); });
  m.def("c_matrix", [](int r, std::int64_t p, std::int64_t q) { return dump(to_json(c_matrix(level(r), p, q))); });
  m.def("s_matrix_op",
        [](int r, std::int64_t p, std::int64_t q) { return dump(to_json(s_matrix_op(level(r), p, q))); });
  m.def("pairing_form", [](int r, std::int64_t p, std::int64_t q, std::int64_t k, std::int64_t mm) {
    return dump(to_json(pairing_form(level(r), p, q, k, mm)));
  });
  m.def("c_bracket", [](int r, std::int64_t p, std::int64_t q, std::int64_t k, std::int64_t mm) {
    return dump(to_json(c_bracket(level(r), p, q, k, mm)));
  });
  m.def("product_to_sum", [](int r, std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t q) {
    return dump(to_json(product_to_sum(level(r), a, b, p, q)));
  });
  m.def("neg_cfrac", [](std::int64_t p, std::int64_t q) { return neg_cfrac(p, q).a; });
  m.def("lemma_check",
        [](int r, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) {
          const LemmaCheck lc = lemma_check(level(r), LemmaTuple{a, b, c, d, e});
          return dump(json{{"lhs", to_json(lc.lhs)}, {"rhs", to_json(lc.rhs)}, {"equal", lc.equal}});
        });
  m.def("kernel_compare", [](int r, int bound) { return dump(to_json(kernel_compare(level(r), bound))); });

  m.def("suite_names", &cli::suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::vector<int> levels, int bound, int slope_bound, int d_max, int range,
         int count, std::uint64_t seed, unsigned jobs) {
        cli::SuiteOptions o = cli::default_options(suite);
        if (!levels.empty()) o.levels = std::move(levels);
        if (bound >= 0) o.bound = bound;
        if (slope_bound >= 0) o.slope_bound = slope_bound;
        if (d_max >= 0) o.d_max = d_max;
        if (range >= 0) o.range = range;
        if (count >= 0) o.count = count;
        o.seed = seed;
        if (jobs > 0) o.jobs = jobs;
        cli::SuiteResult res;
        {
          py::gil_scoped_release release;
          res = cli::run_suite(suite, o);
        }
        json failures = json::array();
        for (const auto& f : res.failures) failures.push_back({{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        return dump(json{{"suite", res.name},
                         {"checks", res.checks},
                         {"ok", res.ok()},
                         {"failures", std::move(failures)},
                         {"summary", res.summary}});
      },
      py::arg("suite"), py::arg("levels") = std::vector<int>{}, py::arg("bound") = -1, py::arg("slope_bound") = -1,
      py::arg("d_max") = -1, py::arg("range") = -1, py::arg("count") = -1, py::arg("seed") = 1,
      py::arg("jobs") = 0);
}
