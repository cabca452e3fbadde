// Python bindings for the measurement-construction library.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <srmkit/srmkit.hpp>

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Least-squares and square-root measurements for pure-state discrimination";

  py::register_exception<srm::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<srm::PreconditionError>(m, "PreconditionError",
                                                 PyExc_RuntimeError);
  py::register_exception<srm::GroupStructureError>(m, "GroupStructureError",
                                                   PyExc_RuntimeError);

  py::class_<srm::StateSet>(m, "StateSet",
                            "Ensemble of pure states stored as matrix columns")
      .def_readonly("states", &srm::StateSet::states)
      .def_readonly("priors", &srm::StateSet::priors)
      .def_readonly("normalized", &srm::StateSet::normalized)
      .def_property_readonly("dim", &srm::StateSet::dim)
      .def_property_readonly("size", &srm::StateSet::size);

  py::class_<srm::Measurement>(m, "Measurement",
                               "Rank-one measurement; column i is the vector for outcome i")
      .def_readonly("matrix", &srm::Measurement::matrix)
      .def_property_readonly(
          "kind", [](const srm::Measurement& v) { return srm::to_string(v.kind); })
      .def_readonly("rank_used", &srm::Measurement::rank_used)
      .def_readonly("weights", &srm::Measurement::weights)
      .def_readonly("note", &srm::Measurement::note);

  py::class_<srm::SvdFactors>(m, "SvdFactors", "Full singular value decomposition")
      .def_readonly("u", &srm::SvdFactors::u)
      .def_readonly("sigma", &srm::SvdFactors::sigma)
      .def_readonly("v", &srm::SvdFactors::v)
      .def_readonly("rank", &srm::SvdFactors::rank);

  py::class_<srm::GroupSpec>(m, "GroupSpec",
                             "Finite abelian group with column-to-element assignment")
      .def_readonly("factors", &srm::GroupSpec::factors)
      .def_readonly("order", &srm::GroupSpec::order)
      .def_readonly("generators", &srm::GroupSpec::generators)
      .def_property_readonly("size", &srm::GroupSpec::size)
      .def_property_readonly("tuple_length", &srm::GroupSpec::tuple_length)
      .def_property_readonly("has_generators", &srm::GroupSpec::has_generators);

  py::class_<srm::OptimalityReport>(m, "OptimalityReport",
                                    "Minimum-error optimality evidence for a measurement")
      .def_readonly("holevo_eq_residual", &srm::OptimalityReport::holevo_eq_residual)
      .def_readonly("holevo_psd_margin", &srm::OptimalityReport::holevo_psd_margin)
      .def_readonly("gamma_hermiticity", &srm::OptimalityReport::gamma_hermiticity)
      .def_readonly("p_error", &srm::OptimalityReport::p_error)
      .def_readonly("sasaki_spread", &srm::OptimalityReport::sasaki_spread)
      .def_property_readonly("verdict", [](const srm::OptimalityReport& r) {
        return srm::to_string(r.verdict);
      });

  py::class_<srm::SasakiResult>(m, "SasakiResult")
      .def_readonly("constant_diagonal", &srm::SasakiResult::constant_diagonal)
      .def_readonly("spread", &srm::SasakiResult::spread);

  py::class_<srm::SvBoundResult>(m, "SvBoundResult")
      .def_readonly("bound", &srm::SvBoundResult::bound)
      .def_readonly("worst_actual", &srm::SvBoundResult::worst_actual);

  py::class_<srm::MixingBoundsResult>(m, "MixingBoundsResult")
      .def_readonly("lower", &srm::MixingBoundsResult::lower)
      .def_readonly("upper", &srm::MixingBoundsResult::upper)
      .def_readonly("actual", &srm::MixingBoundsResult::actual)
      .def_readonly("lambda_min", &srm::MixingBoundsResult::lambda_min)
      .def_readonly("lambda_max", &srm::MixingBoundsResult::lambda_max);

  m.def(
      "make_state_set",
      [](srm::Matrix states, srm::RealVector priors, bool normalized, double norm_tol) {
        return srm::make_state_set(std::move(states), std::move(priors), normalized,
                                   norm_tol);
      },
      "states"_a, "priors"_a, "normalized"_a = true, "norm_tol"_a = srm::kNormTol,
      "Validate and build a state set with explicit priors");
  m.def(
      "make_state_set",
      [](srm::Matrix states, bool normalized, double norm_tol) {
        return srm::make_state_set(std::move(states), normalized, norm_tol);
      },
      "states"_a, "normalized"_a = true, "norm_tol"_a = srm::kNormTol,
      "Validate and build a state set with uniform priors");

  m.def(
      "gram", [](const srm::StateSet& s) { return srm::gram(s).entries; }, "states"_a,
      "Matrix of pairwise inner products");
  m.def("numerical_rank", &srm::numerical_rank, "states"_a,
        "rel_tol"_a = srm::kRankRelTol);
  m.def("phase_align_binary", &srm::phase_align_binary, "states"_a,
        "Rotate the second state's phase so the overlap is real nonnegative");
  m.def("apply_weights", &srm::apply_weights, "states"_a, "weights"_a,
        "Scale column i by weights[i]; result flagged unnormalized");

  m.def("svd", &srm::svd, "phi"_a, "rank_rel_tol"_a = srm::kRankRelTol);
  m.def("pinv_sqrt", &srm::pinv_sqrt, "h"_a, "rel_tol"_a = srm::kRankRelTol,
        "Square root of the pseudo-inverse of a Hermitian PSD matrix");
  m.def("psd_sqrt", &srm::psd_sqrt, "h"_a, "PSD square root by eigendecomposition");
  m.def("projector", &srm::projector, "factors"_a,
        "Orthogonal projector onto the span of the leading left singular vectors");

  m.def("lsm", &srm::lsm, "states"_a, "rank_rel_tol"_a = srm::kRankRelTol,
        "Least-squares measurement");
  m.def("orthogonal_lsm", &srm::orthogonal_lsm, "states"_a,
        "rank_rel_tol"_a = srm::kRankRelTol,
        "Least-squares measurement with orthonormal vectors (needs m <= n)");
  m.def("wlsm", &srm::wlsm, "states"_a, "weights"_a, "rank_rel_tol"_a = srm::kRankRelTol,
        "Weighted least-squares measurement");
  m.def("srm", &srm::srm, "states"_a, "rank_rel_tol"_a = srm::kRankRelTol,
        "Square-root measurement (identical matrix to lsm)");
  m.def("residual_error", &srm::residual_error, "states"_a, "measurement"_a,
        "Direct residual trace((Phi - M)*(Phi - M))");
  m.def("residual_error_closed_form", &srm::residual_error_closed_form, "factors"_a,
        "m"_a, "Closed form r + m - 2 sum sigma_i (normalized ensembles)");
  m.def("orthogonal_residual", &srm::orthogonal_residual, "states"_a,
        "rank_rel_tol"_a = srm::kRankRelTol);
  m.def("weighted_residual", &srm::weighted_residual, "states"_a, "weights"_a,
        "Closed form 2 sum (w_i - sigma^w_i)");
  m.def("verify_srm_implicit", &srm::verify_srm_implicit, "states"_a, "measurement"_a,
        "Frobenius distance || M* Phi - (Phi* Phi)^(1/2) ||");
  m.def("neumark_check", &srm::neumark_check, "states"_a,
        "rank_rel_tol"_a = srm::kRankRelTol,
        "Largest deviation between projected orthogonal and least-squares operators");

  m.def(
      "make_group_spec",
      [](std::vector<int> factors, std::vector<std::vector<int>> order,
         std::vector<srm::Matrix> generators, double tol) {
        if (order.empty() && generators.empty()) {
          return srm::make_group_spec(std::move(factors));
        }
        return srm::make_group_spec(std::move(factors), std::move(order),
                                    std::move(generators), tol);
      },
      "factors"_a, "order"_a = std::vector<std::vector<int>>{},
      "generators"_a = std::vector<srm::Matrix>{}, "tol"_a = srm::kGuTol,
      "Validate and build a group presentation; empty order means natural enumeration");
  m.def("ft_matrix", &srm::ft_matrix, "group"_a,
        "Character kernel diagonalizing every group-circulant Gram matrix");
  m.def(
      "check_gu",
      [](const srm::StateSet& s, const srm::GroupSpec& g, double tol) {
        return srm::check_gu(s, g, tol).values;
      },
      "states"_a, "group"_a, "tol"_a = srm::kGuTol,
      "Verify geometric uniformity; returns the overlap function s(g)");
  m.def(
      "gu_singular_values",
      [](const srm::Vector& overlaps, const srm::GroupSpec& g) {
        return srm::gu_singular_values(srm::GroupFunction{overlaps}, g).values;
      },
      "overlaps"_a, "group"_a,
      "Singular values from the transform of the overlap function");
  m.def("gu_srm", &srm::gu_srm, "states"_a, "group"_a,
        "rank_rel_tol"_a = srm::kRankRelTol, "tol"_a = srm::kGuTol,
        "Square-root measurement assembled in the character basis");
  m.def("binary_srm", &srm::binary_srm, "states"_a,
        "Closed-form square-root measurement for any two-state ensemble");
  m.def("cyclic_srm", &srm::cyclic_srm, "states"_a, "order"_a,
        "rank_rel_tol"_a = srm::kRankRelTol, "tol"_a = srm::kGuTol,
        "Square-root measurement for a cyclically uniform ensemble");
  m.def("symmetry_check", &srm::symmetry_check, "measurement"_a, "group"_a,
        "Largest deviation from the inherited group symmetry");

  m.def("error_probability", &srm::error_probability, "states"_a, "measurement"_a,
        "1 - sum_i p_i |<mu_i|phi_i>|^2");
  m.def("holevo_conditions", &srm::holevo_conditions, "states"_a, "measurement"_a,
        "tol"_a = srm::kHolevoTol,
        "Necessary-and-sufficient minimum-error optimality conditions");
  m.def("sasaki_criterion", &srm::sasaki_criterion, "states"_a,
        "priors_as_weights"_a = true,
        "Constant-diagonal sufficient criterion for the weighted square root");
  m.def("helstrom_oracle", &srm::helstrom_oracle, "states"_a,
        "Brute-force minimum error probability for two states");
  m.def("brute_force_lsm_oracle", &srm::brute_force_lsm_oracle, "states"_a,
        "trials"_a = 20000, "seed"_a = 1,
        "Randomized descent over the feasible set; reference oracle only");
  m.def("gram_schmidt_baseline", &srm::gram_schmidt_baseline, "states"_a,
        "Deliberately naive ordered Gram-Schmidt comparison baseline");

  m.def("sv_perturbation_bound", &srm::sv_perturbation_bound, "states"_a,
        "Frobenius bound on |sigma_i^2 - 1| from the off-diagonal Gram mass");
  m.def("mixing_bounds", &srm::mixing_bounds, "states"_a, "a"_a,
        "Two-sided bound on the residual change under invertible mixing");
  m.def("weight_sweep", &srm::weight_sweep, "states"_a, "grid"_a,
        "Weighted residual of a two-state ensemble across prior assignments");
  m.def("unitary_mixing_check", &srm::unitary_mixing_check, "states"_a, "q"_a,
        "|E(states Q*) - E(states)|, zero in exact arithmetic");
}
