#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathturan/bound.hpp"
#include "pathturan/catalog.hpp"
#include "pathturan/cuts.hpp"
#include "pathturan/search.hpp"
#include "pathturan/sequence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace pathturan;

namespace {

py::int_ to_py(const Int& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

AtomMatrix matrix_from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  int k = int(rows.size());
  int l = int(rows.front().size());
  std::vector<std::int64_t> entries;
  entries.reserve(size_t(k) * size_t(l));
  for (const auto& row : rows) {
    if (int(row.size()) != l)
      throw std::invalid_argument("rows have different lengths");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return AtomMatrix(k, l, std::move(entries));
}

std::vector<std::vector<std::int64_t>> matrix_rows(const AtomMatrix& D) {
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 1; i <= D.symbol_count(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 1; j <= D.atom_count(); ++j) row.push_back(D.entry(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact density bounds for increasing-path-free infinite graphs "
            "built from doubling block sequences.";

  py::class_<Rational>(m, "Rational")
      .def(py::init([](std::int64_t p, std::int64_t q) {
             return Rational(p, q);
           }),
           py::arg("p"), py::arg("q") = 1)
      .def_property_readonly("numerator",
                             [](const Rational& r) { return to_py(r.num()); })
      .def_property_readonly("denominator",
                             [](const Rational& r) { return to_py(r.den()); })
      .def("decimal", &Rational::decimal, py::arg("significant") = 10)
      .def("__str__", &Rational::str)
      .def("__repr__",
           [](const Rational& r) { return "Rational(" + r.str() + ")"; })
      .def("__float__", &Rational::to_double)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def_static("parse",
                  [](const std::string& s) { return Rational::parse(s); });

  py::class_<AtomMatrix>(m, "AtomMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_property_readonly("k", &AtomMatrix::symbol_count)
      .def_property_readonly("l", &AtomMatrix::atom_count)
      .def_property_readonly("total_length", &AtomMatrix::total_length)
      .def("entry", &AtomMatrix::entry, py::arg("symbol"), py::arg("atom"))
      .def("rows", &matrix_rows)
      .def("atom_string", &AtomMatrix::atom_string, py::arg("atom"))
      .def("atom_length", &AtomMatrix::atom_length, py::arg("atom"))
      .def("to_text", &AtomMatrix::to_file_text)
      .def_static("parse",
                  [](const std::string& text) {
                    return AtomMatrix::parse_text(text);
                  })
      .def(py::self == py::self)
      .def("__repr__", [](const AtomMatrix& D) {
        return "AtomMatrix(" + std::to_string(D.symbol_count()) + "x" +
               std::to_string(D.atom_count()) + ")";
      });

  py::class_<EdgeMatrix>(m, "EdgeMatrix")
      .def_property_readonly("l", [](const EdgeMatrix& M) { return M.l; })
      .def("entry",
           [](const EdgeMatrix& M, int i, int j) { return to_py(M.entry(i, j)); },
           py::arg("i"), py::arg("j"))
      .def_property_readonly("w1", [](const EdgeMatrix& M) { return to_py(M.w1); })
      .def_property_readonly("w2", [](const EdgeMatrix& M) { return to_py(M.w2); })
      .def_property_readonly("w3", [](const EdgeMatrix& M) { return to_py(M.w3); })
      .def_readonly("w", &EdgeMatrix::w);

  py::class_<BoundCertificate>(m, "BoundCertificate")
      .def_readonly("value", &BoundCertificate::value)
      .def_readonly("t_star", &BoundCertificate::t_star)
      .def_readonly("epsilon_star", &BoundCertificate::epsilon_star)
      .def_readonly("baseline", &BoundCertificate::baseline)
      .def_readonly("improves_baseline", &BoundCertificate::improves_baseline)
      .def("__repr__", [](const BoundCertificate& c) {
        return "BoundCertificate(value=" + c.value.str() +
               ", t=" + std::to_string(c.t_star) +
               ", eps=" + c.epsilon_star.str() + ")";
      });

  m.def("edge_matrix", &edge_matrix, py::arg("matrix"));
  m.def("edge_count_oracle",
        [](const AtomMatrix& D, int i, int j) {
          return to_py(edge_count_oracle(D, i, j));
        },
        py::arg("matrix"), py::arg("i"), py::arg("j"));
  m.def("objective", &objective, py::arg("matrix"), py::arg("edges"),
        py::arg("t"), py::arg("eps"));
  m.def("minimize_over_epsilon",
        [](const AtomMatrix& D, const EdgeMatrix& M, int t) {
          EpsilonMinimum em = minimize_over_epsilon(D, M, t);
          return py::make_tuple(em.eps, em.value);
        },
        py::arg("matrix"), py::arg("edges"), py::arg("t"));
  m.def("lower_bound", &lower_bound, py::arg("matrix"));
  m.def("grid_oracle", &grid_oracle, py::arg("matrix"), py::arg("steps"));

  py::class_<SequencePrefix>(m, "SequencePrefix")
      .def(py::init<int>(), py::arg("symbol_limit"))
      .def_readonly("symbols", &SequencePrefix::symbols)
      .def_property_readonly(
          "s", [](const SequencePrefix& p) { return to_py(p.s_value); })
      .def("append", &SequencePrefix::append, py::arg("symbol"))
      .def("__len__",
           [](const SequencePrefix& p) { return p.symbols.size(); });

  m.def("block_length",
        [](const AtomMatrix& D, int b) { return to_py(block_length(D, b)); },
        py::arg("matrix"), py::arg("block"));
  m.def("generate_prefix", &generate_prefix, py::arg("matrix"), py::arg("n"));
  m.def("s_count",
        [](const std::vector<std::int32_t>& seq) {
          return to_py(s_count_oracle(seq));
        },
        py::arg("symbols"));
  m.def("longest_increasing_path",
        [](const std::vector<std::int32_t>& seq) {
          return longest_increasing_path(seq);
        },
        py::arg("symbols"));
  m.def("empirical_min", &empirical_min, py::arg("matrix"), py::arg("m"));
  m.def("per_block_minima", &per_block_minima, py::arg("matrix"),
        py::arg("m_max"));

  py::class_<Cut>(m, "Cut")
      .def_readonly("n", &Cut::n)
      .def_readonly("j", &Cut::j)
      .def_readonly("k", &Cut::k)
      .def_readonly("l", &Cut::l)
      .def(py::self == py::self)
      .def("__repr__", [](const Cut& c) {
        return "Cut(" + std::to_string(c.n) + "," + std::to_string(c.j) + "," +
               std::to_string(c.k) + "," + std::to_string(c.l) + ")";
      });

  py::class_<UvwDecomposition>(m, "UvwDecomposition")
      .def_readonly("base", &UvwDecomposition::base)
      .def_readonly("u", &UvwDecomposition::u)
      .def_readonly("v", &UvwDecomposition::v)
      .def_readonly("w", &UvwDecomposition::w);

  m.def("derive_uvw",
        [](const std::vector<std::int32_t>& seq) { return derive_uvw(seq); },
        py::arg("symbols"));
  m.def("find_cut", &find_cut, py::arg("decomposition"), py::arg("n"));

  py::class_<DoubleCountReport>(m, "DoubleCountReport")
      .def_readonly("jk", &DoubleCountReport::jk)
      .def_readonly("v_sum", &DoubleCountReport::v_sum)
      .def_readonly("alpha34_sum", &DoubleCountReport::alpha34_sum)
      .def_readonly("kl", &DoubleCountReport::kl)
      .def_readonly("w_sum", &DoubleCountReport::w_sum)
      .def_readonly("alpha4_sum", &DoubleCountReport::alpha4_sum)
      .def_readonly("both_equal", &DoubleCountReport::both_equal);
  py::class_<FirstUbReport>(m, "FirstUbReport")
      .def_readonly("edges", &FirstUbReport::edges)
      .def_readonly("u_term", &FirstUbReport::u_term)
      .def_readonly("v_term", &FirstUbReport::v_term)
      .def_readonly("w_term", &FirstUbReport::w_term)
      .def_readonly("rhs", &FirstUbReport::rhs)
      .def_readonly("holds", &FirstUbReport::holds);
  py::class_<SecondUbReport>(m, "SecondUbReport")
      .def_readonly("edges", &SecondUbReport::edges)
      .def_readonly("rhs", &SecondUbReport::rhs)
      .def_readonly("holds", &SecondUbReport::holds);
  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("alpha4_sum", &EstimateReport::alpha4_sum)
      .def_readonly("l_pairs", &EstimateReport::l_pairs)
      .def_readonly("alpha34_at_uj", &EstimateReport::alpha34_at_uj)
      .def_readonly("k_minus_1", &EstimateReport::k_minus_1)
      .def_readonly("holds", &EstimateReport::holds);

  m.def("check_double_counts", &check_double_counts, py::arg("decomposition"),
        py::arg("cut"));
  m.def("check_first_ub", &check_first_ub, py::arg("decomposition"),
        py::arg("cut"));
  m.def("check_second_ub", &check_second_ub, py::arg("decomposition"),
        py::arg("cut"));
  m.def("check_estimates", &check_estimates, py::arg("decomposition"),
        py::arg("cut"));

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](int k, int l, std::uint64_t seed,
                       std::uint64_t iterations, double p_plus, double p_minus,
                       std::optional<std::int64_t> entry_cap,
                       const std::string& init) {
             SearchConfig c;
             c.k = k;
             c.l = l;
             c.seed = seed;
             c.iterations = iterations;
             c.p_plus = p_plus;
             c.p_minus = p_minus;
             c.entry_cap = entry_cap;
             c.init = init;
             return c;
           }),
           py::arg("k"), py::arg("l"), py::arg("seed") = 0,
           py::arg("iterations") = 1000, py::arg("p_plus") = 0.15,
           py::arg("p_minus") = 0.15, py::arg("entry_cap") = py::none(),
           py::arg("init") = "cyclic(1)")
      .def_readwrite("k", &SearchConfig::k)
      .def_readwrite("l", &SearchConfig::l)
      .def_readwrite("seed", &SearchConfig::seed)
      .def_readwrite("iterations", &SearchConfig::iterations)
      .def_readwrite("p_plus", &SearchConfig::p_plus)
      .def_readwrite("p_minus", &SearchConfig::p_minus)
      .def_readwrite("entry_cap", &SearchConfig::entry_cap)
      .def_readwrite("init", &SearchConfig::init);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best", &SearchResult::best)
      .def_readonly("best_certificate", &SearchResult::best_certificate)
      .def_readonly("start_certificate", &SearchResult::start_certificate)
      .def_readonly("history", &SearchResult::history);

  m.def("seed_matrix", &seed_matrix, py::arg("k"), py::arg("l"),
        py::arg("weight"));
  m.def("hill_climb", &hill_climb, py::arg("config"));

  m.def("catalog_names", [] { return catalog::names(); });
  m.def("catalog_matrix",
        [](const std::string& name) { return catalog::get(name); },
        py::arg("name"));
  m.def("published_bound",
        [](int k) { return catalog::published_bound(k); }, py::arg("k"));
}
