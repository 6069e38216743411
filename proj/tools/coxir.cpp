// coxir: build, classify and analyze reflection representations of Coxeter
// groups from the command line. JSON reports go to stdout; exit codes are
// 0 (success / positive verdict), 1 (mathematical negative), 2 (input error).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include <coxir/affine.hpp>
#include <coxir/analysis.hpp>
#include <coxir/cell.hpp>
#include <coxir/io.hpp>
#include <coxir/ir.hpp>
#include <coxir/linalg.hpp>

using namespace coxir;
using nlohmann::json;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

json columns_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(vector_json(m.col(c)));
  return out;
}

Complex parse_complex_flag(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw io::ParseError("cannot parse complex value '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw io::ParseError("cannot parse complex value '" + text + "' (expected re[,im])");
  }
  std::string rest;
  if (in >> rest) throw io::ParseError("trailing characters in complex value '" + text + "'");
  return Complex(re, im);
}

json chi_json(const Classification& c) {
  const TildeSystem tilde = tilde_system(datum_from_classification(c));
  json out = json::object();
  for (std::size_t e = 0; e < c.chi.size(); ++e)
    out[io::chord_id(c.system, tilde.basis().chords[e])] = complex_json(c.chi[e]);
  return out;
}

json tilde_json(const IRDatum& datum) {
  const TildeSystem tilde = tilde_system(datum);
  const CoxeterSystem& sys = datum.system();
  json orders = json::object();
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      const BondOrder m = tilde.tilde_m(i, j);
      const std::string key = sys.label(i) + "-" + sys.label(j);
      if (m.is_infinite())
        orders[key] = "inf";
      else
        orders[key] = m.value();
    }
  json chords = json::array();
  for (const auto& chord : tilde.basis().chords) chords.push_back(io::chord_id(sys, chord));
  return json{{"orders", orders},
              {"components", tilde.component_count()},
              {"chords", chords},
              {"h1_rank", tilde.basis().rank()}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int cmd_build(const std::string& input) {
  const IRDatum datum = io::resolve_datum(io::load_input(input));
  const Representation rep = build(datum);
  json report = json::parse(io::representation_to_json(rep));
  report["datum"] = json::parse(io::datum_to_json(datum))["datum"];
  emit(report);
  return 0;
}

int cmd_analyze(const std::string& input, double tol) {
  const IRDatum datum = io::resolve_datum(io::load_input(input));
  const Representation rep = build(datum);
  const Eigen::MatrixXcd a = matrix_a(datum).entries;
  const int corank = corank_a(datum, tol);
  const Classification cls = character_of(datum);
  const TildeSystem tilde = tilde_system(datum);

  json report{{"rank", datum.rank()},
              {"matrix_a", matrix_json(a)},
              {"det", complex_json(det_a(datum, tol))},
              {"corank", corank},
              {"a_rank", datum.rank() - corank},
              {"fixed_subspace", columns_json(fixed_subspace(rep, tol))},
              {"commutant_dimension", commutant_dimension(rep, tol)},
              {"tilde", tilde_json(datum)},
              {"chi", chi_json(cls)},
              {"semisimple", corank == 0}};
  if (tilde.component_count() == 1) report["irreducible"] = (corank == 0);
  emit(report);
  return 0;
}

int cmd_isom(const std::string& input1, const std::string& input2, double tol) {
  const IRDatum d1 = io::resolve_datum(io::load_input(input1));
  const IRDatum d2 = io::resolve_datum(io::load_input(input2));
  const IsomorphismResult result = isomorphism(d1, d2, tol);
  if (!result.isomorphic) {
    emit(json{{"isomorphic", false}, {"reason", result.reason}});
    return 1;
  }
  emit(json{{"isomorphic", true},
            {"intertwiner", matrix_json(result.intertwiner)},
            {"residual", result.residual}});
  return 0;
}

int cmd_form(const std::string& input, const std::string& kind, double tol) {
  const IRDatum datum = io::resolve_datum(io::load_input(input));
  const FormKind form_kind = kind == "sesquilinear" ? FormKind::Sesquilinear : FormKind::Bilinear;
  const FormResult result = form_kind == FormKind::Bilinear ? bilinear_form(datum, tol)
                                                            : sesquilinear_form(datum, tol);
  if (!result.form) {
    emit(json{{"exists", false}, {"kind", kind}, {"reason", result.obstruction}});
    return 1;
  }
  const double residual = form_invariance_residual(build(datum), *result.form);
  emit(json{{"exists", true},
            {"kind", kind},
            {"gram", matrix_json(result.form->gram)},
            {"residual", residual},
            {"space_dimension",
             invariant_form_space_dimension(build(datum), form_kind, tol)}});
  return 0;
}

int cmd_dual(const std::string& input, double tol) {
  const IRDatum datum = io::resolve_datum(io::load_input(input));
  const DualReport report = dual(datum, tol);
  json out{{"transition", matrix_json(report.transition)},
           {"invertible", report.invertible},
           {"quotient_dim", report.quotient_dim},
           {"dual_chi", chi_json(report.dual_class)}};
  if (!report.invertible)
    out["note"] = "matrix A is singular: the gamma span is the semisimple quotient of the "
                  "dual-character representation, and the group acts trivially on the rest";
  emit(out);
  return 0;
}

int cmd_verify(const std::string& input, double tol) {
  const IRDatum datum = io::resolve_datum(io::load_input(input));
  const Representation rep = build(datum);
  const RelationReport relations = verify_relations(rep, datum.system());
  const auto violation = check_a1(rep, datum.system(), tol);
  const int corank = corank_a(datum, tol);
  const int fixed = static_cast<int>(fixed_subspace(rep, tol).cols());

  const bool pass = relations.max_residual() < tol && !violation && corank == fixed;
  json report{{"involution_residual", relations.involution_residual},
              {"braid_residual", relations.braid_residual},
              {"reflection_residual", relations.reflection_residual},
              {"max_residual", relations.max_residual()},
              {"corank_a", corank},
              {"fixed_dimension", fixed},
              {"tol", tol},
              {"a1", violation ? json{{"violation",
                                       json{{"pair", json::array({datum.system().label(violation->r),
                                                                  datum.system().label(violation->t)}),
                                             },
                                            {"witness", vector_json(violation->witness)}}}}
                               : json("pass")},
              {"verdict", pass ? "pass" : "fail"}};
  emit(report);
  return pass ? 0 : 1;
}

int cmd_cellcheck(int m, int k, double tol) {
  if (m < 2) throw io::ParseError("cellcheck: m must be at least 2");
  if (k < 1 || 2 * k > m) throw io::ParseError("cellcheck: k must lie in [1, m/2]");
  const CellElement elem = cell_element(BondOrder::finite(m), "r", "t");
  const auto pair = matrices(DihedralRepSpec::rho(m, k));
  const double residual = linalg::max_abs(apply_cell(elem, pair.r, pair.t, tol));
  const bool pass = residual < tol;
  emit(json{{"m", m},
            {"k", k},
            {"terms", 2 * m},
            {"residual", residual},
            {"tol", tol},
            {"verdict", pass ? "pass" : "fail"}});
  return pass ? 0 : 1;
}

int cmd_affine_an(int n, const std::string& x_text, double tol) {
  const Complex x = parse_complex_flag(x_text);
  if (n < 2) throw io::ParseError("affine-an: n must be at least 2");
  if (std::abs(x) == 0.0) throw io::ParseError("affine-an: x must be nonzero");
  const AffineAnSpec spec(n, x);
  const IRDatum datum = affine_datum(spec);
  const Representation rep = build(datum);
  emit(json{{"n", spec.n},
            {"x", complex_json(spec.x)},
            {"det", complex_json(det_a(datum, tol))},
            {"det_formula", complex_json(det_formula(spec))},
            {"corank", corank_a(datum, tol)},
            {"fixed_subspace", columns_json(fixed_subspace(rep, tol))},
            {"chi", chi_json(character_of(datum))},
            {"datum", json::parse(io::datum_to_json(datum))["datum"]}});
  return 0;
}

int cmd_sweep(const std::string& input, const std::string& chord, const std::string& values_file,
              double tol) {
  const io::InputDocument doc = io::load_input(input);
  const IRDatum base = io::resolve_datum(doc);
  Classification cls = character_of(base);
  const TildeSystem tilde = tilde_system(base);

  std::size_t chord_index = cls.chi.size();
  for (std::size_t e = 0; e < tilde.basis().chords.size(); ++e)
    if (io::chord_id(base.system(), tilde.basis().chords[e]) == chord) chord_index = e;
  if (chord_index == cls.chi.size())
    throw io::ParseError("'" + chord + "' is not a chord of the tilde graph");

  std::ifstream values(values_file);
  if (!values) throw io::ParseError("cannot open values file '" + values_file + "'");

  std::cout << "chi_re,chi_im,det_re,det_im,corank\n";
  std::string line;
  while (std::getline(values, line)) {
    if (line.empty()) continue;
    const Complex value = parse_complex_flag(line);
    if (std::abs(value) == 0.0) throw io::ParseError("sweep values must be nonzero");
    cls.chi[chord_index] = value;
    const IRDatum datum = datum_from_classification(cls);
    const Complex det = det_a(datum, tol);
    std::cout << value.real() << "," << value.imag() << "," << det.real() << "," << det.imag()
              << "," << corank_a(datum, tol) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflection representations of Coxeter groups from graph-homology data"};
  app.require_subcommand(1);
  double tol = kDefaultTol;
  app.add_option("--tol", tol, "threshold for rank and verdict decisions")
      ->capture_default_str();

  std::string input, input2, kind = "bilinear", x_text = "1", chord, values_file;
  int m = 2, k = 1, n = 2;

  auto* build_cmd = app.add_subcommand("build", "generator matrices of a datum");
  build_cmd->add_option("input", input, "input JSON document")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "matrix A, reducibility and classification");
  analyze_cmd->add_option("input", input, "input JSON document")->required();

  auto* isom_cmd = app.add_subcommand("isom", "decide isomorphism of two data");
  isom_cmd->add_option("input1", input, "first input document")->required();
  isom_cmd->add_option("input2", input2, "second input document")->required();

  auto* form_cmd = app.add_subcommand("form", "invariant bilinear or sesquilinear form");
  form_cmd->add_option("input", input, "input JSON document")->required();
  form_cmd->add_option("--kind", kind, "bilinear or sesquilinear")
      ->check(CLI::IsMember({"bilinear", "sesquilinear"}))
      ->capture_default_str();

  auto* dual_cmd = app.add_subcommand("dual", "dual-side report (finite bonds only)");
  dual_cmd->add_option("input", input, "input JSON document")->required();

  auto* verify_cmd = app.add_subcommand("verify", "relation, reflection and cell-condition checks");
  verify_cmd->add_option("input", input, "input JSON document")->required();

  auto* cell_cmd = app.add_subcommand("cellcheck", "dihedral cell element acting on rho_k");
  cell_cmd->add_option("--m", m, "bond order (finite)")->required();
  cell_cmd->add_option("--k", k, "rho index in [1, m/2]")->required();

  auto* affine_cmd = app.add_subcommand("affine-an", "the affine cycle family");
  affine_cmd->add_option("--n", n, "rank parameter (cycle on n+1 vertices)")->required();
  affine_cmd->add_option("--x", x_text, "chi value, as re or re,im")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "determinant/corank sweep over one chord value");
  sweep_cmd->add_option("input", input, "input JSON document")->required();
  sweep_cmd->add_option("--chord", chord, "chord id, e.g. s1-s2")->required();
  sweep_cmd->add_option("--values-file", values_file, "file with one re[,im] value per line")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(input);
    if (analyze_cmd->parsed()) return cmd_analyze(input, tol);
    if (isom_cmd->parsed()) return cmd_isom(input, input2, tol);
    if (form_cmd->parsed()) return cmd_form(input, kind, tol);
    if (dual_cmd->parsed()) return cmd_dual(input, tol);
    if (verify_cmd->parsed()) return cmd_verify(input, tol);
    if (cell_cmd->parsed()) return cmd_cellcheck(m, k, tol);
    if (affine_cmd->parsed()) return cmd_affine_an(n, x_text, tol);
    if (sweep_cmd->parsed()) return cmd_sweep(input, chord, values_file, tol);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
