#include <doctest.h>

#include <numbers>

#include "helpers.hpp"

using namespace coxir;

namespace {
constexpr double kPi = std::numbers::pi;

// The paper-facing fixed-point system for the affine triangle at x = 1,
// written out by hand as an independent oracle.
Eigen::MatrixXcd affine_a2_fixed_system() {
  Eigen::MatrixXcd m(3, 3);
  m << 1.0, -0.5, -0.5, -0.5, 1.0, -0.5, -0.5, -0.5, 1.0;
  return m;
}
}  // namespace

TEST_CASE("matrix A of the A_2 geometric datum") {
  const IRDatum d{test::a2()};
  const Eigen::MatrixXcd a = matrix_a(d).entries;
  Eigen::MatrixXcd expected(2, 2);
  expected << 1.0, -0.5, -0.5, 1.0;
  CHECK(test::max_diff(a, expected) < 1e-15);
  CHECK(close(det_a(d), Complex(0.75, 0), 1e-12));
  CHECK(corank_a(d) == 0);
}

TEST_CASE("matrix A of the affine cycle has the corner entries -x/2 and -1/(2x)") {
  const Complex x(2, 0);
  const IRDatum d = affine_datum(AffineAnSpec{3, x});
  const Eigen::MatrixXcd a = matrix_a(d).entries;
  REQUIRE(a.rows() == 4);
  for (int i = 0; i < 4; ++i) CHECK(a(i, i) == Complex(1, 0));
  for (int i = 0; i + 1 < 4; ++i) {
    CHECK(close(a(i, i + 1), Complex(-0.5, 0), 1e-15));
    CHECK(close(a(i + 1, i), Complex(-0.5, 0), 1e-15));
  }
  CHECK(close(a(0, 3), -x / 2.0, 1e-15));
  CHECK(close(a(3, 0), -1.0 / (2.0 * x), 1e-15));
  CHECK(a(0, 2) == Complex(0, 0));  // commuting pair: structurally zero
}

TEST_CASE("all bonds at k = m/2 give the identity A") {
  IRDatum d{test::path_system({4, 6})};
  d.set_bond_param(0, 1, BondParameter::finite_k(2));
  d.set_bond_param(1, 2, BondParameter::finite_k(3));
  CHECK(test::max_diff(matrix_a(d).entries, Eigen::MatrixXcd::Identity(3, 3)) < 1e-15);
}

TEST_CASE("fixed subspace of the affine triangle at x = 1 is the diagonal line") {
  const IRDatum d = affine_datum(AffineAnSpec{2, Complex(1, 0)});
  CHECK(corank_a(d) == 1);

  const Eigen::MatrixXcd fixed = fixed_subspace(build(d));
  REQUIRE(fixed.cols() == 1);
  // Oracle: null space of the hand-written system.
  const Eigen::MatrixXcd oracle = linalg::orthonormal_kernel(affine_a2_fixed_system(), 1e-9);
  REQUIRE(oracle.cols() == 1);
  const Complex overlap = (oracle.adjoint() * fixed)(0, 0);
  CHECK(close(std::abs(overlap), 1.0, 1e-9));  // same line
  // And the vector is proportional to (1,1,1).
  CHECK(close(std::abs(fixed(0, 0) / fixed(2, 0)), 1.0, 1e-9));
  CHECK(close(std::abs(fixed(1, 0) / fixed(2, 0)), 1.0, 1e-9));
}

TEST_CASE("irreducible members of the affine family have no fixed vectors") {
  const IRDatum d = affine_datum(AffineAnSpec{3, Complex(5, 0)});
  CHECK(fixed_subspace(build(d)).cols() == 0);
  CHECK(corank_a(d) == 0);
}

TEST_CASE("the trivial one-dimensional representation is entirely fixed") {
  Representation triv;
  triv.labels = {"s"};
  triv.gens = {Eigen::MatrixXcd::Identity(1, 1)};
  triv.alpha = {Eigen::VectorXcd::Ones(1)};
  CHECK(fixed_subspace(triv).cols() == 1);
}

TEST_CASE("corank of A equals the fixed-subspace dimension on random data") {
  std::mt19937 rng(47u);
  for (int trial = 0; trial < 40; ++trial) {
    const IRDatum d = test::random_finite_datum(rng, {.max_rank = 6, .max_m = 8});
    CHECK(corank_a(d) == static_cast<int>(fixed_subspace(build(d)).cols()));
  }
}

TEST_CASE("quotient by nothing is the same representation") {
  const Representation rep = build(IRDatum{test::a2()});
  const auto q = quotient(rep, Eigen::MatrixXcd(2, 0));
  CHECK(q.rep.dim() == 2);
  CHECK(test::max_diff(q.rep.gens[0], rep.gens[0]) < 1e-15);
}

TEST_CASE("quotient rejects unfixed kernels") {
  const Representation rep = build(IRDatum{test::a2()});
  CHECK_THROWS_AS(quotient(rep, Eigen::MatrixXcd(Eigen::VectorXcd::Unit(2, 0))),
                  std::invalid_argument);
}

TEST_CASE("quotient by the full fixed subspace has no fixed vectors left") {
  const IRDatum d = affine_datum(AffineAnSpec{2, Complex(1, 0)});
  const Representation rep = build(d);
  const auto q = quotient(rep, fixed_subspace(rep));
  CHECK(q.rep.dim() == 2);
  CHECK(fixed_subspace(q.rep).cols() == 0);
  CHECK(commutant_dimension(q.rep) == 1);
  const RelationReport report = verify_relations(q.rep, d.system());
  CHECK(report.involution_residual < 1e-9);
  CHECK(report.braid_residual < 1e-9);
}

TEST_CASE("full-fixed quotient of a disconnected datum is semisimple") {
  const IRDatum d{test::double_triangle()};
  const Representation rep = build(d);
  const Eigen::MatrixXcd fixed = fixed_subspace(rep);
  REQUIRE(fixed.cols() == 2);
  CHECK(test::max_diff(fixed.adjoint() * fixed, Eigen::MatrixXcd::Identity(2, 2)) < 1e-12);
  const auto q = quotient(rep, fixed);
  CHECK(q.rep.dim() == 4);
  CHECK(fixed_subspace(q.rep).cols() == 0);
  CHECK(commutant_dimension(q.rep) == 2);  // one scalar per tilde component
}

TEST_CASE("double-triangle quotients: shifted kernels are isomorphic") {
  const IRDatum d{test::double_triangle()};
  const Representation rep = build(d);
  const Eigen::MatrixXcd fixed = fixed_subspace(rep);
  REQUIRE(fixed.cols() == 2);

  // v1 = a1+a2+a3 and v2 = a4+a5+a6 in the standard coordinates.
  Eigen::VectorXcd v1 = Eigen::VectorXcd::Zero(6), v2 = Eigen::VectorXcd::Zero(6);
  v1.head(3).setOnes();
  v2.tail(3).setOnes();

  const auto q_sum = quotient(rep, Eigen::MatrixXcd(v1 + v2));
  const auto q_shift = quotient(rep, Eigen::MatrixXcd(v1 + 2.0 * v2));

  // The diagonal map (1,1,1,2,2,2) sends the first kernel to the second and
  // commutes with everything, so it descends to an isomorphism.
  Eigen::VectorXcd diag(6);
  diag << 1, 1, 1, 2, 2, 2;
  const Eigen::MatrixXcd induced =
      q_shift.projection * diag.asDiagonal() * q_sum.lift;
  double residual = 0.0;
  for (std::size_t s = 0; s < 6; ++s)
    residual = std::max(residual, test::max_diff(induced * q_sum.rep.gens[s],
                                                 q_shift.rep.gens[s] * induced));
  CHECK(residual < 1e-9);
  CHECK(linalg::rank(induced, 1e-9) == 5);
  CHECK(hom_dimension(q_sum.rep, q_shift.rep) >= 1);
  CHECK(invertible_intertwiner(q_sum.rep, q_shift.rep).has_value());
}

TEST_CASE("double-triangle quotients: one-sided kernels are not isomorphic") {
  const IRDatum d{test::double_triangle()};
  const Representation rep = build(d);
  Eigen::VectorXcd v1 = Eigen::VectorXcd::Zero(6), v2 = Eigen::VectorXcd::Zero(6);
  v1.head(3).setOnes();
  v2.tail(3).setOnes();

  const auto q1 = quotient(rep, Eigen::MatrixXcd(v1));
  const auto q2 = quotient(rep, Eigen::MatrixXcd(v2));

  // The projection-to-the-second-block map is a nonzero intertwiner, so the
  // Hom space is one-dimensional; but it is singular, and no invertible
  // intertwiner exists.
  CHECK(hom_dimension(q1.rep, q2.rep) == 1);
  const auto basis = hom_basis(q1.rep, q2.rep);
  REQUIRE(basis.size() == 1);
  CHECK(linalg::rank(basis.front(), 1e-9) < 5);
  CHECK(!invertible_intertwiner(q1.rep, q2.rep).has_value());
}

TEST_CASE("bilinear forms on the affine family") {
  SUBCASE("geometric data carry the standard Gram matrix") {
    const IRDatum d{test::a2()};
    const auto result = bilinear_form(d);
    REQUIRE(result.form.has_value());
    Eigen::MatrixXcd expected(2, 2);
    expected << 1.0, -0.5, -0.5, 1.0;
    CHECK(test::max_diff(result.form->gram, expected) < 1e-12);
    CHECK(form_invariance_residual(build(d), *result.form) < 1e-12);
  }
  SUBCASE("x = -1 admits a bilinear form") {
    const IRDatum d = affine_datum(AffineAnSpec{3, Complex(-1, 0)});
    const auto result = bilinear_form(d);
    REQUIRE(result.form.has_value());
    CHECK(form_invariance_residual(build(d), *result.form) < 1e-9);
    CHECK(invariant_form_space_dimension(build(d), FormKind::Bilinear) == 1);
  }
  SUBCASE("x = 2 admits none") {
    const auto result = bilinear_form(affine_datum(AffineAnSpec{3, Complex(2, 0)}));
    CHECK(!result.form.has_value());
    CHECK(result.obstruction.find("character value") != std::string::npos);
  }
}

TEST_CASE("sesquilinear forms on the affine family") {
  const Complex on_circle = std::polar(1.0, kPi / 3.0);
  SUBCASE("|x| = 1 admits a sesquilinear form but no bilinear one") {
    const IRDatum d = affine_datum(AffineAnSpec{3, on_circle});
    const auto sesqui = sesquilinear_form(d);
    REQUIRE(sesqui.form.has_value());
    CHECK(form_invariance_residual(build(d), *sesqui.form) < 1e-9);
    CHECK(!bilinear_form(d).form.has_value());
  }
  SUBCASE("x = 2 admits none") {
    CHECK(!sesquilinear_form(affine_datum(AffineAnSpec{3, Complex(2, 0)})).form.has_value());
  }
  SUBCASE("trivial character: the two kinds coincide") {
    const IRDatum d = affine_datum(AffineAnSpec{2, Complex(1, 0)});
    const auto bi = bilinear_form(d);
    const auto sq = sesquilinear_form(d);
    REQUIRE(bi.form.has_value());
    REQUIRE(sq.form.has_value());
    CHECK(test::max_diff(bi.form->gram, sq.form->gram) < 1e-12);
  }
}

TEST_CASE("forms with infinite bonds") {
  SUBCASE("a lone directed bond keeps its degenerate catalog block") {
    IRDatum d{test::dihedral_system(BondOrder::infinite())};
    d.set_bond_param(0, 1, BondParameter::directed(0));
    const auto result = bilinear_form(d);
    REQUIRE(result.form.has_value());
    CHECK(result.form->gram(0, 0) == Complex(0, 0));
    CHECK(result.form->gram(1, 1) == Complex(1, 0));
    CHECK(form_invariance_residual(build(d), *result.form) < 1e-12);
  }
  SUBCASE("the three-generator directed pattern admits no bilinear form") {
    // m_st = inf with delta = varrho_s^t, both other bonds of order 3.
    CoxeterSystem sys({"s", "t", "r"}, {{"s", "t", BondOrder::infinite()},
                                        {"r", "t", BondOrder::finite(3)},
                                        {"s", "r", BondOrder::finite(3)}});
    IRDatum d{sys};
    d.set_bond_param(0, 1, BondParameter::directed(0));
    const auto result = bilinear_form(d);
    CHECK(!result.form.has_value());
    CHECK(result.obstruction.find("directed") != std::string::npos);
  }
  SUBCASE("varrho_z with non-real u blocks the Hermitian form only") {
    IRDatum d{test::dihedral_system(BondOrder::infinite())};
    d.set_bond_param(0, 1, BondParameter::free_z(Complex(-1, 0)));  // u = i
    CHECK(bilinear_form(d).form.has_value());
    CHECK(form_invariance_residual(build(d), *bilinear_form(d).form) < 1e-12);
    CHECK(!sesquilinear_form(d).form.has_value());
  }
}

TEST_CASE("forms on a circuit through a varrho_z edge") {
  // Triangle with one infinite bond carrying z = 1 = 4cos^2(pi/3): the tilde
  // graph is the full triangle, so the chord character gates the form.
  CoxeterSystem sys({"a", "b", "c"}, {{"a", "b", BondOrder::infinite()},
                                      {"b", "c", BondOrder::finite(3)},
                                      {"a", "c", BondOrder::finite(3)}});
  IRDatum base{sys};
  base.set_bond_param(0, 1, BondParameter::free_z(Complex(1, 0)));
  Classification cls = character_of(base);
  REQUIRE(cls.chi.size() == 1);

  SUBCASE("chi = -1 gives a bilinear form") {
    cls.chi[0] = Complex(-1, 0);
    const IRDatum d = datum_from_classification(cls);
    const auto result = bilinear_form(d);
    REQUIRE(result.form.has_value());
    CHECK(form_invariance_residual(build(d), *result.form) < 1e-9);
    CHECK(invariant_form_space_dimension(build(d), FormKind::Bilinear) == 1);
  }
  SUBCASE("chi = i gives a sesquilinear form only") {
    cls.chi[0] = Complex(0, 1);
    const IRDatum d = datum_from_classification(cls);
    CHECK(!bilinear_form(d).form.has_value());
    const auto result = sesquilinear_form(d);
    REQUIRE(result.form.has_value());
    CHECK(form_invariance_residual(build(d), *result.form) < 1e-9);
  }
  SUBCASE("chi = 2 gives neither") {
    cls.chi[0] = Complex(2, 0);
    const IRDatum d = datum_from_classification(cls);
    CHECK(!bilinear_form(d).form.has_value());
    CHECK(!sesquilinear_form(d).form.has_value());
  }
}

TEST_CASE("dual: gamma vectors are -1 eigenvectors and the transition is A^T") {
  std::mt19937 rng(53u);
  for (int trial = 0; trial < 10; ++trial) {
    const IRDatum d = test::random_finite_datum(rng, {.min_rank = 2, .max_rank = 5});
    const DualReport report = dual(d);
    const Eigen::MatrixXcd a = matrix_a(d).entries;
    CHECK((report.transition - a.transpose()).cwiseAbs().maxCoeff() == 0.0);  // same formula

    const Representation rep = build(d);
    for (int s = 0; s < d.rank(); ++s) {
      // Column s of A^T holds the dual-basis coordinates of gamma_s; the dual
      // action of the involution s is by the transpose of its matrix.
      const Eigen::VectorXcd gamma = report.transition.col(s);
      const Eigen::VectorXcd image = rep.gens[static_cast<std::size_t>(s)].transpose() * gamma;
      CHECK((image + gamma).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("dual of the A_2 geometric datum is itself") {
  const IRDatum d{test::a2()};
  const DualReport report = dual(d);
  CHECK(report.invertible);
  CHECK(report.quotient_dim == 2);
  CHECK(report.dual_class.chi.empty());  // tree: nothing to compare
  CHECK(isomorphism(d, datum_from_classification(report.dual_class)).isomorphic);
}

TEST_CASE("dual inverts the character on the affine family") {
  const IRDatum d = affine_datum(AffineAnSpec{3, Complex(2, 0)});
  const DualReport report = dual(d);
  REQUIRE(report.invertible);
  REQUIRE(report.dual_class.chi.size() == 1);
  CHECK(close(report.dual_class.chi[0], Complex(0.5, 0), 1e-12));
}

TEST_CASE("dual at the singular point reports the semisimple quotient") {
  const int n = 4;
  const IRDatum d = affine_datum(AffineAnSpec{n, Complex(1, 0)});
  const DualReport report = dual(d);
  CHECK(!report.invertible);
  CHECK(report.quotient_dim == n);  // rank(A) = n for the (n+1)-cycle at x = 1
}

TEST_CASE("singular dual: the gamma span is the semisimple quotient") {
  const int n = 3;
  const IRDatum d = affine_datum(AffineAnSpec{n, Complex(1, 0)});
  const Representation rep = build(d);
  const DualReport report = dual(d);
  REQUIRE(!report.invertible);

  // Dual action: each involution acts on coordinates by its transpose. The
  // gamma span (column space of A^T) must be invariant, and the action on
  // the complement must be trivial: (g^T - I) maps everything into the span.
  std::vector<Eigen::MatrixXcd> dual_gens;
  for (const auto& g : rep.gens) dual_gens.push_back(g.transpose());

  const Eigen::MatrixXcd span = report.transition;  // columns span im(A^T)
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(span);
  const Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(n + 1, report.quotient_dim);
  const Eigen::MatrixXcd onto_span = q * q.adjoint();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  for (const auto& g : dual_gens) {
    CHECK(linalg::max_abs((id - onto_span) * g * onto_span) < 1e-9);  // invariant
    CHECK(linalg::max_abs((id - onto_span) * (g - id)) < 1e-9);      // trivial quotient action
  }

  // The sub-action on the span is the semisimple quotient of the
  // swapped-character representation.
  std::vector<Eigen::MatrixXcd> span_gens;
  for (const auto& g : dual_gens) span_gens.push_back(q.adjoint() * g * q);
  const IRDatum dual_datum = datum_from_classification(report.dual_class);
  const Representation dual_rep = build(dual_datum);
  const auto ss = quotient(dual_rep, fixed_subspace(dual_rep));
  REQUIRE(ss.rep.dim() == report.quotient_dim);
  CHECK(linalg::invertible_intertwiner(span_gens, ss.rep.gens).has_value());
}

TEST_CASE("dual rejects infinite bonds") {
  IRDatum d{test::dihedral_system(BondOrder::infinite())};
  CHECK_THROWS_AS(dual(d), std::domain_error);
}

TEST_CASE("direction preorder without infinite bonds mirrors the tilde components") {
  IRDatum d{test::path_system({3, 4, 3})};
  d.set_bond_param(1, 2, BondParameter::finite_k(2));  // drop the middle edge
  const auto order = direction_preorder(d);
  CHECK(order.classes.size() == 2);
  CHECK(order.class_of[0] == order.class_of[1]);
  CHECK(order.class_of[2] == order.class_of[3]);
  CHECK(order.class_of[0] != order.class_of[2]);
}

TEST_CASE("a directed bond yields a one-way arrow and a stable span") {
  IRDatum d{test::dihedral_system(BondOrder::infinite())};
  d.set_bond_param(0, 1, BondParameter::directed(0));  // varrho_r^t: arrow t -> r
  const auto order = direction_preorder(d);
  REQUIRE(order.arrows.size() == 1);
  CHECK(order.arrows[0] == std::pair<int, int>{1, 0});
  CHECK(order.classes.size() == 2);
  CHECK(order.leq(0, 1));
  CHECK(!order.leq(1, 0));

  // The class of the absorbing generator spans an invariant line.
  const int class_of_r = order.class_of[0];
  const auto span = order.down_closure(class_of_r);
  CHECK(span == std::vector<int>{0});
  const Representation rep = build(d);
  for (const auto& g : rep.gens) {
    const Eigen::VectorXcd image = g * Eigen::VectorXcd::Unit(2, 0);
    CHECK(std::abs(image(1)) < 1e-15);  // stays inside <alpha_r>
  }
}

TEST_CASE("down closures span W-invariant subspaces on mixed systems") {
  CoxeterSystem sys({"a", "b", "c"}, {{"a", "b", BondOrder::infinite()},
                                      {"b", "c", BondOrder::finite(3)},
                                      {"a", "c", BondOrder::finite(2)}});
  IRDatum d{sys};
  d.set_bond_param(0, 1, BondParameter::directed(0));  // arrow b -> a
  const auto order = direction_preorder(d);
  // b and c are mutually reachable; a sits below them.
  CHECK(order.class_of[1] == order.class_of[2]);
  CHECK(order.class_of[0] != order.class_of[1]);

  const Representation rep = build(d);
  for (std::size_t cls = 0; cls < order.classes.size(); ++cls) {
    const auto span = order.down_closure(static_cast<int>(cls));
    if (span.size() == 3) continue;
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(3, static_cast<Eigen::Index>(span.size()));
    for (std::size_t i = 0; i < span.size(); ++i) basis(span[i], static_cast<Eigen::Index>(i)) = 1;
    for (const auto& g : rep.gens) {
      // g . span stays in span: residual of the projection onto the complement
      const Eigen::MatrixXcd image = g * basis;
      for (int row = 0; row < 3; ++row) {
        bool inside = false;
        for (int s : span) inside |= (s == row);
        if (!inside) CHECK(image.row(row).cwiseAbs().maxCoeff() < 1e-15);
      }
    }
  }
}
