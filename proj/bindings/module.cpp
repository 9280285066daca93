#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "expgraff/equivalence.hpp"
#include "expgraff/expfam.hpp"
#include "expgraff/function_space.hpp"
#include "expgraff/grassmann.hpp"
#include "expgraff/group.hpp"
#include "expgraff/json_io.hpp"

namespace py = pybind11;
using namespace expgraff;

namespace {

SampleSpacePtr shared(const SampleSpace& space) {
  return std::make_shared<const SampleSpace>(space);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal discrete exponential families, their reparametrization group, and "
            "affine-subspace canonical forms";
  m.attr("__version__") = "0.1.0";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_RuntimeError);
  py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ArithmeticError);

  py::class_<SampleSpace>(m, "SampleSpace")
      .def(py::init<std::vector<std::string>>(), py::arg("labels"))
      .def_static("indexed", [](int size) { return *SampleSpace::indexed(size); },
                  py::arg("size"))
      .def_property_readonly("labels", &SampleSpace::labels)
      .def("label", &SampleSpace::label, py::arg("i"))
      .def("__len__", &SampleSpace::size)
      .def(py::self == py::self);

  py::class_<FuncVec>(m, "FuncVec")
      .def(py::init([](const SampleSpace& space, const Eigen::VectorXd& values) {
             return FuncVec(shared(space), values);
           }),
           py::arg("space"), py::arg("values"))
      .def_property_readonly("values", &FuncVec::values)
      .def_property_readonly("space", [](const FuncVec& f) { return *f.space(); });

  py::class_<QuotientVec>(m, "QuotientVec")
      .def(py::init([](const SampleSpace& space, const Eigen::VectorXd& diffs) {
             return QuotientVec(shared(space), diffs);
           }),
           py::arg("space"), py::arg("diffs"))
      .def_property_readonly("diffs", &QuotientVec::diffs)
      .def_property_readonly("space", [](const QuotientVec& q) { return *q.space(); });

  py::class_<Frame>(m, "Frame")
      .def(py::init([](const SampleSpace& space, const Eigen::MatrixXd& rows, double tol) {
             return Frame(shared(space), rows, tol);
           }),
           py::arg("space"), py::arg("rows"), py::arg("tol") = kDefaultTol)
      .def_property_readonly("rows", &Frame::rows)
      .def("function", &Frame::function, py::arg("k"))
      .def("__len__", &Frame::size);

  py::class_<MinimalFrame, Frame>(m, "MinimalFrame")
      .def(py::init([](const SampleSpace& space, const Eigen::MatrixXd& rows, double tol) {
             return MinimalFrame(shared(space), rows, tol);
           }),
           py::arg("space"), py::arg("rows"), py::arg("tol") = kDefaultTol);

  py::class_<Representation>(m, "Representation")
      .def(py::init<FuncVec, MinimalFrame>(), py::arg("carrier"), py::arg("frame"))
      .def_property_readonly("dim", &Representation::dim)
      .def_property_readonly("carrier", &Representation::carrier)
      .def_property_readonly("frame", &Representation::frame)
      .def_property_readonly("space", [](const Representation& r) { return *r.space(); });

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<Eigen::MatrixXd, Eigen::VectorXd, Eigen::VectorXd, double, double>(),
           py::arg("A"), py::arg("u"), py::arg("v"), py::arg("c"), py::arg("tol") = kDefaultTol)
      .def_static("identity", &GroupElement::identity, py::arg("n"))
      .def_property_readonly("dim", &GroupElement::dim)
      .def_property_readonly("A", &GroupElement::a)
      .def_property_readonly("u", &GroupElement::u)
      .def_property_readonly("v", &GroupElement::v)
      .def_property_readonly("c", &GroupElement::c);

  py::class_<AffDagElement>(m, "AffDagElement")
      .def(py::init<Eigen::MatrixXd, Eigen::VectorXd, double>(), py::arg("A"), py::arg("u"),
           py::arg("tol") = kDefaultTol)
      .def_static("identity", &AffDagElement::identity, py::arg("n"))
      .def_property_readonly("dim", &AffDagElement::dim)
      .def_property_readonly("A", &AffDagElement::a)
      .def_property_readonly("u", &AffDagElement::u);

  py::class_<ShiftPart>(m, "ShiftPart")
      .def(py::init([](const Eigen::VectorXd& v, double c) { return ShiftPart{v, c}; }),
           py::arg("v"), py::arg("c"))
      .def_readonly("v", &ShiftPart::v)
      .def_readonly("c", &ShiftPart::c);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("equivalent", &WitnessReport::equivalent)
      .def_readonly("witness", &WitnessReport::witness)
      .def_readonly("residual", &WitnessReport::residual)
      .def_readonly("pivot_indices", &WitnessReport::pivot_indices)
      .def_readonly("marginal", &WitnessReport::marginal);

  py::class_<AffineSubspace>(m, "AffineSubspace")
      .def(py::init<Eigen::VectorXd, Eigen::MatrixXd>(), py::arg("base"), py::arg("basis"))
      .def_property_readonly("ambient_dim", &AffineSubspace::ambient_dim)
      .def_property_readonly("dim", &AffineSubspace::dim)
      .def_property_readonly("base", &AffineSubspace::base)
      .def_property_readonly("basis", &AffineSubspace::basis)
      .def("projector", &AffineSubspace::projector);

  py::class_<GraffDimension>(m, "GraffDimension")
      .def_readonly("n", &GraffDimension::n)
      .def_readonly("ambient_dim", &GraffDimension::ambient_dim)
      .def_readonly("value", &GraffDimension::value);

  py::class_<ReducedRep>(m, "ReducedRep")
      .def_readonly("carrier", &ReducedRep::carrier)
      .def_readonly("frame", &ReducedRep::frame);

  m.def("quotient_project", &quotient_project, py::arg("f"));
  m.def("rank_with_tolerance",
        py::overload_cast<const Eigen::MatrixXd&, double>(&rank_with_tolerance),
        py::arg("columns"), py::arg("tol") = kDefaultTol);
  m.def("is_minimal_frame", &is_minimal_frame, py::arg("frame"), py::arg("tol") = kDefaultTol);
  m.def("select_pivot_indices", &select_pivot_indices, py::arg("frame"),
        py::arg("tol") = kDefaultTol);
  m.def("difference_matrix", &difference_matrix, py::arg("frame"), py::arg("indices"));
  m.def("difference_column", &difference_column, py::arg("f"), py::arg("indices"));

  m.def("log_partition", &log_partition, py::arg("rep"), py::arg("theta"));
  m.def("density", &density, py::arg("rep"), py::arg("theta"));
  m.def("membership", &membership, py::arg("rep"), py::arg("p"),
        py::arg("tol") = kDefaultMembershipTol);

  m.def("compose", py::overload_cast<const GroupElement&, const GroupElement&>(&compose),
        py::arg("lhs"), py::arg("rhs"));
  m.def("compose", py::overload_cast<const AffDagElement&, const AffDagElement&>(&compose),
        py::arg("lhs"), py::arg("rhs"));
  m.def("inverse", py::overload_cast<const GroupElement&>(&inverse), py::arg("g"));
  m.def("inverse", py::overload_cast<const AffDagElement&>(&inverse), py::arg("aff"));
  m.def("embed_matrix", &embed_matrix, py::arg("g"));
  m.def("act", &act, py::arg("g"), py::arg("rep"));
  m.def("semidirect_split", &semidirect_split, py::arg("g"));
  m.def("semidirect_join", &semidirect_join, py::arg("aff"), py::arg("shift"));
  m.def("epsilon_apply", &epsilon_apply, py::arg("aff"), py::arg("shift"));

  m.def("recover_witness", &recover_witness, py::arg("rep"), py::arg("other"),
        py::arg("tol") = kDefaultDecisionTol);
  m.def("recover_witness_with_pivots", &recover_witness_with_pivots, py::arg("rep"),
        py::arg("other"), py::arg("pivot_indices"), py::arg("tol") = kDefaultDecisionTol);
  m.def("are_equivalent", &are_equivalent, py::arg("rep"), py::arg("other"),
        py::arg("tol") = kDefaultDecisionTol);
  m.def("transfer_theta", &transfer_theta, py::arg("g"), py::arg("theta"));
  m.def("psi_residual", &psi_residual, py::arg("g"), py::arg("rep"), py::arg("other"),
        py::arg("theta"));

  m.def("pi_projection", &pi_projection, py::arg("v0"), py::arg("frame"),
        py::arg("tol") = kDefaultTol);
  m.def("graff_from_rep", &graff_from_rep, py::arg("rep"), py::arg("tol") = kDefaultTol);
  m.def("subspaces_equal", &subspaces_equal, py::arg("s"), py::arg("t"),
        py::arg("tol") = kDefaultSubspaceTol);
  m.def("graff_dimension", &graff_dimension, py::arg("n"), py::arg("ambient_dim"));
  m.def("first_stage_reduce", &first_stage_reduce, py::arg("rep"));
  m.def("aff_dagger_act", &aff_dagger_act, py::arg("aff"), py::arg("reduced"));
  m.def("stabilizer_is_trivial",
        py::overload_cast<const Representation&, double>(&stabilizer_is_trivial), py::arg("rep"),
        py::arg("tol") = kDefaultTol);
  m.def("stabilizer_is_trivial",
        py::overload_cast<const Eigen::MatrixXd&, double>(&stabilizer_is_trivial),
        py::arg("frame_rows"), py::arg("tol") = kDefaultTol);

  m.def("random_representation",
        [](int m_, int n, std::uint64_t seed) {
          return to_representation(random_rep_document(m_, n, seed));
        },
        py::arg("m"), py::arg("n"), py::arg("seed") = 0);
  m.def("canonical_json",
        [](const AffineSubspace& s) { return canonical_subspace_json(s).dump(2); },
        py::arg("subspace"));
}
