// Python bindings for the van der Put toolkit. Exposes the padic value
// types, series operations, the measure-preservation checks and the
// generator families under vanderput._core.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "vdp/analysis.hpp"
#include "vdp/construct.hpp"
#include "vdp/io.hpp"

namespace py = pybind11;

namespace {

py::object witness_to_py(const vdp::Witness& w) {
  return std::visit(
      [](const auto& value) -> py::object {
        if constexpr (std::is_same_v<std::decay_t<decltype(value)>, std::monostate>) {
          return py::none();
        } else {
          return py::cast(value);
        }
      },
      w);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "van der Put series toolkit for functions on p-adic integers";

  py::register_exception<vdp::Error>(m, "Error");

  py::class_<vdp::PadicInt>(m, "PadicInt")
      .def(py::init<std::uint32_t, std::vector<std::uint32_t>>(), py::arg("p"), py::arg("digits"))
      .def_static("from_integer", &vdp::PadicInt::from_integer, py::arg("n"), py::arg("p"),
                  py::arg("K"))
      .def_static("zero", &vdp::PadicInt::zero, py::arg("p"), py::arg("K"))
      .def_property_readonly("p", &vdp::PadicInt::prime)
      .def_property_readonly("K", &vdp::PadicInt::precision)
      .def_property_readonly("digits",
                             [](const vdp::PadicInt& x) { return x.digits(); })
      .def("digit", &vdp::PadicInt::digit, py::arg("k"))
      .def("valuation",
           [](const vdp::PadicInt& x) -> std::optional<std::uint32_t> {
             const vdp::Valuation v = x.valuation();
             if (v.is_at_least_precision()) return std::nullopt;
             return v.exponent();
           },
           "Index of the first nonzero digit, or None when all K digits vanish")
      .def("is_unit", &vdp::PadicInt::is_unit)
      .def("is_zero", &vdp::PadicInt::is_zero)
      .def("__int__", &vdp::PadicInt::to_uint64)
      .def("__add__", [](const vdp::PadicInt& a, const vdp::PadicInt& b) { return a + b; })
      .def("__sub__", [](const vdp::PadicInt& a, const vdp::PadicInt& b) { return a - b; })
      .def("__mul__", [](const vdp::PadicInt& a, const vdp::PadicInt& b) { return a * b; })
      .def("__eq__", [](const vdp::PadicInt& a, const vdp::PadicInt& b) { return a == b; })
      .def("__repr__", &vdp::PadicInt::to_string);

  py::class_<vdp::FunctionTable>(m, "FunctionTable")
      .def(py::init<std::uint32_t, std::uint32_t, std::vector<std::uint64_t>, std::uint64_t>(),
           py::arg("p"), py::arg("K"), py::arg("values"),
           py::arg("max_size") = vdp::kDefaultTableLimit)
      .def_static(
          "from_function",
          [](std::uint32_t p, std::uint32_t K, const std::function<std::uint64_t(std::uint64_t)>& fn) {
            return vdp::FunctionTable::from_function(p, K, fn);
          },
          py::arg("p"), py::arg("K"), py::arg("fn"))
      .def_property_readonly("p", &vdp::FunctionTable::prime)
      .def_property_readonly("K", &vdp::FunctionTable::precision)
      .def_property_readonly("values",
                             [](const vdp::FunctionTable& f) { return f.values(); })
      .def("__len__", &vdp::FunctionTable::size)
      .def("value", py::overload_cast<std::uint64_t>(&vdp::FunctionTable::value, py::const_),
           py::arg("x"))
      .def("__eq__",
           [](const vdp::FunctionTable& a, const vdp::FunctionTable& b) { return a == b; });

  py::class_<vdp::VdpSeries>(m, "VdpSeries")
      .def(py::init<std::uint32_t, std::uint32_t, std::vector<std::uint64_t>, std::uint64_t>(),
           py::arg("p"), py::arg("K"), py::arg("coeffs"),
           py::arg("max_size") = vdp::kDefaultTableLimit)
      .def_property_readonly("p", &vdp::VdpSeries::prime)
      .def_property_readonly("K", &vdp::VdpSeries::precision)
      .def_property_readonly("coeffs", [](const vdp::VdpSeries& s) { return s.coeffs(); })
      .def("coeff", &vdp::VdpSeries::coeff, py::arg("m"))
      .def("__len__", &vdp::VdpSeries::size)
      .def("__eq__", [](const vdp::VdpSeries& a, const vdp::VdpSeries& b) { return a == b; });

  m.def("coeff_scale", &vdp::coeff_scale, py::arg("m"), py::arg("p"),
        "floor(log_p m), the forced p-power of the m-th coefficient");
  m.def("ball_level", &vdp::ball_level, py::arg("m"), py::arg("p"));
  m.def("chi",
        py::overload_cast<std::uint64_t, std::uint64_t, std::uint32_t, std::uint32_t>(&vdp::chi),
        py::arg("m"), py::arg("x"), py::arg("p"), py::arg("K"));
  m.def("coefficients", &vdp::coefficients, py::arg("f"));
  m.def("evaluate", py::overload_cast<const vdp::VdpSeries&, std::uint64_t>(&vdp::evaluate),
        py::arg("s"), py::arg("x"));
  m.def("to_table", &vdp::to_table, py::arg("s"));

  py::class_<vdp::NormalizedCoeffs>(m, "NormalizedCoeffs")
      .def_property_readonly("b", [](const vdp::NormalizedCoeffs& n) { return n.b; })
      .def("residue", &vdp::NormalizedCoeffs::residue, py::arg("m"))
      .def("meaningful_digits", &vdp::NormalizedCoeffs::meaningful_digits, py::arg("m"));

  py::class_<vdp::NormalizeResult>(m, "NormalizeResult")
      .def_property_readonly("ok", &vdp::NormalizeResult::ok)
      .def_property_readonly("coeffs",
                             [](const vdp::NormalizeResult& n) { return n.coeffs; })
      .def_property_readonly("witness_m",
                             [](const vdp::NormalizeResult& n) { return n.witness_m; });

  m.def("normalize", &vdp::normalize, py::arg("s"));

  py::class_<vdp::CoeffWitness>(m, "CoeffWitness")
      .def_readonly("m", &vdp::CoeffWitness::m)
      .def("__repr__", [](const vdp::CoeffWitness& w) {
        return "CoeffWitness(m=" + std::to_string(w.m) + ")";
      });
  py::class_<vdp::PairWitness>(m, "PairWitness")
      .def_readonly("i", &vdp::PairWitness::i)
      .def_readonly("j", &vdp::PairWitness::j)
      .def("__repr__", [](const vdp::PairWitness& w) {
        return "PairWitness(i=" + std::to_string(w.i) + ", j=" + std::to_string(w.j) + ")";
      });
  py::class_<vdp::LevelWitness>(m, "LevelWitness")
      .def_readonly("k", &vdp::LevelWitness::k)
      .def_readonly("m", &vdp::LevelWitness::m)
      .def("__repr__", [](const vdp::LevelWitness& w) {
        return "LevelWitness(k=" + std::to_string(w.k) + ", m=" + std::to_string(w.m) + ")";
      });
  py::class_<vdp::CollisionWitness>(m, "CollisionWitness")
      .def_readonly("k", &vdp::CollisionWitness::k)
      .def_readonly("x", &vdp::CollisionWitness::x)
      .def_readonly("y", &vdp::CollisionWitness::y)
      .def("__repr__", [](const vdp::CollisionWitness& w) {
        return "CollisionWitness(k=" + std::to_string(w.k) + ", x=" + std::to_string(w.x) +
               ", y=" + std::to_string(w.y) + ")";
      });

  py::class_<vdp::Verdict>(m, "Verdict")
      .def_property_readonly("ok", [](const vdp::Verdict& v) { return v.ok; })
      .def_property_readonly("condition",
                             [](const vdp::Verdict& v) { return vdp::cond_name(v.cond); })
      .def_property_readonly("witness",
                             [](const vdp::Verdict& v) { return witness_to_py(v.witness); })
      .def_property_readonly("representative_only",
                             [](const vdp::Verdict& v) { return v.representative_only; })
      .def("__bool__", [](const vdp::Verdict& v) { return v.ok; })
      .def("__eq__", [](const vdp::Verdict& a, const vdp::Verdict& b) { return a == b; })
      .def("__repr__", [](const vdp::Verdict& v) {
        std::string s = std::string("Verdict(ok=") + (v.ok ? "True" : "False");
        if (!v.ok) s += std::string(", condition=") + vdp::cond_name(v.cond);
        return s + ")";
      });

  py::class_<vdp::BranchMap>(m, "BranchMap")
      .def_readonly("base", &vdp::BranchMap::base)
      .def_readonly("level", &vdp::BranchMap::level)
      .def_readonly("image", &vdp::BranchMap::image)
      .def("is_permutation", &vdp::BranchMap::is_permutation)
      .def("__call__", &vdp::BranchMap::operator(), py::arg("h"));

  m.def("branch_digit_map", &vdp::branch_digit_map, py::arg("b"), py::arg("base"),
        py::arg("level"));
  m.def("check_compatible", &vdp::check_compatible, py::arg("f"));
  m.def("check_measure_preserving", &vdp::check_measure_preserving, py::arg("f"),
        "Coefficient criterion; a passing verdict certifies bijectivity mod p^k for k <= K");
  m.def("check_measure_preserving_local", &vdp::check_measure_preserving_local, py::arg("f"),
        py::arg("threshold"));
  m.def("check_mp_p2", &vdp::check_mp_p2, py::arg("f"));
  m.def("oracle_bijective_mod", &vdp::oracle_bijective_mod, py::arg("f"), py::arg("level"));
  m.def("oracle_measure_preserving", &vdp::oracle_measure_preserving, py::arg("f"));

  py::class_<vdp::SubstitutionFamily>(m, "SubstitutionFamily")
      .def(py::init<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>,
                    std::vector<std::vector<std::uint32_t>>, std::uint64_t>(),
           py::arg("p"), py::arg("K"), py::arg("G"), py::arg("levels"),
           py::arg("max_size") = vdp::kDefaultTableLimit)
      .def_static("uniform_per_level",
                  [](std::uint32_t p, std::uint32_t K, std::vector<std::uint32_t> G,
                     std::vector<std::vector<std::uint32_t>> h) {
                    return vdp::SubstitutionFamily::uniform_per_level(p, K, std::move(G),
                                                                      std::move(h));
                  },
                  py::arg("p"), py::arg("K"), py::arg("G"), py::arg("h_per_level"))
      .def_static("identity", &vdp::SubstitutionFamily::identity, py::arg("p"), py::arg("K"))
      .def_property_readonly("p", &vdp::SubstitutionFamily::prime)
      .def_property_readonly("K", &vdp::SubstitutionFamily::precision)
      .def_property_readonly("G",
                             [](const vdp::SubstitutionFamily& s) { return s.G(); })
      .def("g", &vdp::SubstitutionFamily::g, py::arg("k"), py::arg("m"), py::arg("i"))
      .def("__eq__", [](const vdp::SubstitutionFamily& a, const vdp::SubstitutionFamily& b) {
        return a == b;
      });

  py::class_<vdp::AdditiveParts>(m, "AdditiveParts")
      .def_readonly("family", &vdp::AdditiveParts::family)
      .def_readonly("free_part", &vdp::AdditiveParts::free_part);

  m.def("build_xi", &vdp::build_xi, py::arg("family"));
  m.def("build_additive_mp", &vdp::build_additive_mp, py::arg("family"), py::arg("free_part"));
  m.def("decompose_additive",
        [](const vdp::FunctionTable& f) -> py::object {
          auto result = vdp::decompose_additive(f);
          if (auto* parts = std::get_if<vdp::AdditiveParts>(&result)) return py::cast(*parts);
          return py::cast(std::get<vdp::Verdict>(result));
        },
        py::arg("f"),
        "AdditiveParts for a measure-preserving input, the failing Verdict otherwise");
  m.def("pseudo_constant_table", &vdp::pseudo_constant_table, py::arg("p"), py::arg("K"),
        py::arg("max_size") = vdp::kDefaultTableLimit);
  m.def("build_power_substitution_mp", &vdp::build_power_substitution_mp, py::arg("p"),
        py::arg("s"), py::arg("K"), py::arg("max_size") = vdp::kDefaultTableLimit);
  m.def("build_affine_mp", &vdp::build_affine_mp, py::arg("offset"), py::arg("slope"),
        py::arg("perturbation"));
  m.def("random_compatible",
        [](std::uint32_t p, std::uint32_t K, std::uint64_t seed) {
          return vdp::random_compatible(p, K, seed);
        },
        py::arg("p"), py::arg("K"), py::arg("seed"));
  m.def("random_substitution_family",
        [](std::uint32_t p, std::uint32_t K, std::uint64_t seed) {
          return vdp::random_substitution_family(p, K, seed);
        },
        py::arg("p"), py::arg("K"), py::arg("seed"));

  m.def("parse_function_file",
        [](const std::string& text, std::uint64_t max_size) -> py::object {
          const vdp::ParsedFile parsed = vdp::parse_function_file(text, max_size);
          if (parsed.is_values()) return py::cast(parsed.table());
          return py::cast(parsed.series());
        },
        py::arg("text"), py::arg("max_size") = vdp::kDefaultTableLimit,
        "FunctionTable for 'repr values' input, VdpSeries for 'repr coeffs'");
  m.def("serialize_values", &vdp::serialize_values, py::arg("f"));
  m.def("serialize_coeffs", &vdp::serialize_coeffs, py::arg("s"));

  m.attr("DEFAULT_TABLE_LIMIT") = vdp::kDefaultTableLimit;
#ifdef VDP_VERSION
  m.attr("__version__") = VDP_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
