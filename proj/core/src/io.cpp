#include "coxir/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace coxir::io {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) throw ParseError("unknown field '" + key + "' in " + where);
  }
}

Complex complex_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair at " + where);
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

std::pair<std::string, std::string> split_pair_key(const std::string& key,
                                                   const std::string& where) {
  const auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
    throw ParseError("pair key '" + key + "' in " + where + " is not of the form a-b");
  return {key.substr(0, dash), key.substr(dash + 1)};
}

int generator_index(const CoxeterSystem& system, const std::string& label,
                    const std::string& where) {
  const auto idx = system.index_of(label);
  if (!idx) throw ParseError("unknown generator '" + label + "' in " + where);
  return *idx;
}

CoxeterSystem parse_system(const json& j) {
  if (!j.is_object()) throw ParseError("'system' must be an object");
  require_keys(j, "system", {"generators", "bonds"});
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("'system.generators' must be an array of labels");

  std::vector<std::string> labels;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("'system.generators' entries must be strings");
    const std::string label = g.get<std::string>();
    if (label.empty()) throw ParseError("empty generator label");
    if (label.find('-') != std::string::npos)
      throw ParseError("generator label '" + label + "' may not contain '-'");
    labels.push_back(label);
  }

  std::vector<BondEntry> bonds;
  if (j.contains("bonds")) {
    if (!j["bonds"].is_object()) throw ParseError("'system.bonds' must be an object");
    for (const auto& [key, value] : j["bonds"].items()) {
      auto [a, b] = split_pair_key(key, "system.bonds");
      BondOrder order = BondOrder::finite(2);
      if (value.is_string() && value.get<std::string>() == "inf") {
        order = BondOrder::infinite();
      } else if (value.is_number_integer()) {
        order = BondOrder::finite(value.get<int>());
      } else {
        throw ParseError("bond order for '" + key + "' must be an integer or \"inf\"");
      }
      bonds.push_back(BondEntry{std::move(a), std::move(b), order});
    }
  }

  CoxeterSystem system(std::move(labels), std::move(bonds));
  const auto errors = system.validate();
  if (!errors.empty()) throw ParseError("invalid Coxeter system: " + errors.front());
  return system;
}

std::vector<BondParameter> parse_bond_params(const json& j, const CoxeterSystem& system,
                                             const std::string& where) {
  const int n = system.rank();
  std::vector<std::optional<BondParameter>> given(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  if (!j.is_object()) throw ParseError("'" + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    auto [la, lb] = split_pair_key(key, where);
    const int a = generator_index(system, la, where);
    const int b = generator_index(system, lb, where);
    if (a == b) throw ParseError("bond parameter on diagonal pair in " + where);
    if (!value.is_object()) throw ParseError("bond parameter '" + key + "' must be an object");
    require_keys(value, where + "." + key, {"k", "z", "absorb"});
    if (value.size() != 1)
      throw ParseError("bond parameter '" + key + "' must have exactly one of k/z/absorb");
    BondParameter p;
    if (value.contains("k")) {
      if (!value["k"].is_number_integer())
        throw ParseError("'k' must be an integer at " + where + "." + key);
      p = BondParameter::finite_k(value["k"].get<int>());
    } else if (value.contains("z")) {
      p = BondParameter::free_z(complex_from(value["z"], where + "." + key + ".z"));
    } else {
      if (!value["absorb"].is_string())
        throw ParseError("'absorb' must be a generator label at " + where + "." + key);
      p = BondParameter::directed(
          generator_index(system, value["absorb"].get<std::string>(), where + "." + key));
    }
    given[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = p;
  }

  // Assemble in upper-triangle order; omitted entries keep the defaults.
  IRDatum defaults{system};
  std::vector<BondParameter> out;
  for (int i = 0; i < n; ++i)
    for (int j2 = i + 1; j2 < n; ++j2) {
      const auto& low = given[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(j2)];
      const auto& high = given[static_cast<std::size_t>(j2) * static_cast<std::size_t>(n) +
                               static_cast<std::size_t>(i)];
      if (low && high)
        throw ParseError("bond parameter given twice for pair {" + system.label(i) + "," +
                         system.label(j2) + "} in " + where);
      out.push_back(low ? *low : (high ? *high : defaults.bond_param(i, j2)));
    }
  return out;
}

IRDatum parse_datum(const json& j, const CoxeterSystem& system) {
  require_keys(j, "datum", {"bonds", "scalars"});
  IRDatum datum{system};
  const int n = system.rank();
  if (j.contains("bonds")) {
    const auto params = parse_bond_params(j["bonds"], system, "datum.bonds");
    int slot = 0;
    for (int i = 0; i < n; ++i)
      for (int j2 = i + 1; j2 < n; ++j2) {
        try {
          datum.set_bond_param(i, j2, params[static_cast<std::size_t>(slot)]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string("datum.bonds: ") + e.what());
        }
        ++slot;
      }
  }
  if (j.contains("scalars")) {
    if (!j["scalars"].is_object()) throw ParseError("'datum.scalars' must be an object");
    for (const auto& [key, value] : j["scalars"].items()) {
      auto [la, lb] = split_pair_key(key, "datum.scalars");
      const int a = generator_index(system, la, "datum.scalars");
      const int b = generator_index(system, lb, "datum.scalars");
      if (a == b) throw ParseError("scalar on diagonal pair in datum.scalars");
      try {
        datum.set_scalar(a, b, complex_from(value, "datum.scalars." + key));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("datum.scalars.") + key + ": " + e.what());
      }
    }
  }
  return datum;
}

Classification parse_classification(const json& j, const CoxeterSystem& system) {
  require_keys(j, "classification", {"bonds", "chi"});
  Classification c{system, {}, {}};
  const int n = system.rank();
  if (j.contains("bonds")) {
    c.bonds = parse_bond_params(j["bonds"], system, "classification.bonds");
  } else {
    IRDatum defaults{system};
    for (int i = 0; i < n; ++i)
      for (int j2 = i + 1; j2 < n; ++j2) c.bonds.push_back(defaults.bond_param(i, j2));
  }
  // Validate parameters against the system through the datum setters.
  IRDatum probe{system};
  int slot = 0;
  for (int i = 0; i < n; ++i)
    for (int j2 = i + 1; j2 < n; ++j2) {
      try {
        probe.set_bond_param(i, j2, c.bonds[static_cast<std::size_t>(slot)]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("classification.bonds: ") + e.what());
      }
      ++slot;
    }

  const TildeSystem tilde = tilde_system(probe);
  const auto& chords = tilde.basis().chords;
  c.chi.assign(chords.size(), Complex(1, 0));
  if (j.contains("chi")) {
    if (!j["chi"].is_object()) throw ParseError("'classification.chi' must be an object");
    for (const auto& [key, value] : j["chi"].items()) {
      bool matched = false;
      for (std::size_t e = 0; e < chords.size(); ++e) {
        if (key == chord_id(system, chords[e])) {
          c.chi[e] = complex_from(value, "classification.chi." + key);
          if (std::abs(c.chi[e]) == 0.0)
            throw ParseError("chi value for chord '" + key + "' must be nonzero");
          matched = true;
          break;
        }
      }
      if (!matched)
        throw ParseError("'" + key + "' is not a chord of the tilde graph (canonical ids: " +
                         [&] {
                           std::string ids;
                           for (const auto& ch : chords)
                             ids += (ids.empty() ? "" : ", ") + chord_id(system, ch);
                           return ids.empty() ? std::string("none") : ids;
                         }() +
                         ")");
    }
  }
  return c;
}

json system_to(const CoxeterSystem& system) {
  json bonds = json::object();
  const int n = system.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const BondOrder m = system.bond(i, j);
      const std::string key = system.label(i) + "-" + system.label(j);
      if (m.is_infinite())
        bonds[key] = "inf";
      else
        bonds[key] = m.value();
    }
  return json{{"generators", system.generators()}, {"bonds", bonds}};
}

json bond_params_to(const CoxeterSystem& system,
                    const std::vector<BondParameter>& params) {
  json out = json::object();
  const int n = system.rank();
  int slot = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const BondParameter& p = params[static_cast<std::size_t>(slot++)];
      const std::string key = system.label(i) + "-" + system.label(j);
      switch (p.kind) {
        case BondParameter::Kind::FiniteK:
          out[key] = json{{"k", p.k}};
          break;
        case BondParameter::Kind::FreeZ:
          out[key] = json{{"z", complex_to(p.z)}};
          break;
        case BondParameter::Kind::Directed:
          out[key] = json{{"absorb", system.label(p.absorbing)}};
          break;
      }
    }
  return out;
}

json matrix_to(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to(v(i)));
  return out;
}

Eigen::VectorXcd vector_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a vector at " + where);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from(j[i], where);
  return v;
}

Eigen::MatrixXcd matrix_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix at " + where);
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() ||
        static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != cols)
      throw ParseError("ragged matrix at " + where);
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = complex_from(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], where);
  }
  return m;
}

}  // namespace

std::string chord_id(const CoxeterSystem& system, const OrientedEdge& chord) {
  return system.label(chord.from) + "-" + system.label(chord.to);
}

InputDocument parse_input(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  require_keys(j, "input document", {"system", "datum", "classification"});
  if (!j.contains("system")) throw ParseError("input document must contain 'system'");
  if (j.contains("datum") && j.contains("classification"))
    throw ParseError("input document may not contain both 'datum' and 'classification'");

  CoxeterSystem system = parse_system(j["system"]);
  InputDocument doc{system, std::nullopt, std::nullopt};
  if (j.contains("datum")) doc.datum = parse_datum(j["datum"], system);
  if (j.contains("classification"))
    doc.classification = parse_classification(j["classification"], system);
  return doc;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_input(buffer.str());
}

IRDatum resolve_datum(const InputDocument& doc) {
  if (doc.datum) return *doc.datum;
  if (doc.classification) return datum_from_classification(*doc.classification);
  return IRDatum{doc.system};  // geometric defaults
}

std::string datum_to_json(const IRDatum& datum, int indent) {
  const CoxeterSystem& system = datum.system();
  const int n = system.rank();
  std::vector<BondParameter> params;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) params.push_back(datum.bond_param(i, j));

  json scalars = json::object();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) scalars[system.label(i) + "-" + system.label(j)] = complex_to(datum.scalar(i, j));

  const json doc{{"system", system_to(system)},
                 {"datum", json{{"bonds", bond_params_to(system, params)}, {"scalars", scalars}}}};
  return doc.dump(indent);
}

IRDatum datum_from_json(const std::string& json_text) {
  InputDocument doc = parse_input(json_text);
  if (!doc.datum) throw ParseError("document does not contain a datum");
  return *doc.datum;
}

std::string representation_to_json(const Representation& rep, int indent) {
  json gens = json::object();
  json alpha = json::object();
  for (std::size_t s = 0; s < rep.labels.size(); ++s) {
    gens[rep.labels[s]] = matrix_to(rep.gens[s]);
    alpha[rep.labels[s]] = vector_to(rep.alpha[s]);
  }
  const json doc{{"labels", rep.labels},
                 {"dim", rep.dim()},
                 {"generators", gens},
                 {"alpha", alpha}};
  return doc.dump(indent);
}

Representation representation_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  require_keys(j, "representation", {"labels", "dim", "generators", "alpha"});
  if (!j.contains("labels") || !j.contains("generators"))
    throw ParseError("representation document needs 'labels' and 'generators'");
  Representation rep;
  for (const auto& l : j["labels"]) rep.labels.push_back(l.get<std::string>());
  const bool has_alpha = j.contains("alpha");
  for (const std::string& label : rep.labels) {
    if (!j["generators"].contains(label))
      throw ParseError("missing generator matrix for '" + label + "'");
    rep.gens.push_back(matrix_from(j["generators"][label], "generators." + label));
    if (has_alpha) {
      if (!j["alpha"].contains(label)) throw ParseError("missing alpha vector for '" + label + "'");
      rep.alpha.push_back(vector_from(j["alpha"][label], "alpha." + label));
    }
  }
  if (j.contains("dim") && j["dim"].get<int>() != static_cast<int>(rep.dim()))
    throw ParseError("representation 'dim' does not match the matrices");
  return rep;
}

std::string classification_to_json(const Classification& c, int indent) {
  const TildeSystem tilde = tilde_system(datum_from_classification(c));
  json chi = json::object();
  for (std::size_t e = 0; e < c.chi.size(); ++e)
    chi[chord_id(c.system, tilde.basis().chords[e])] = complex_to(c.chi[e]);
  const json doc{
      {"system", system_to(c.system)},
      {"classification", json{{"bonds", bond_params_to(c.system, c.bonds)}, {"chi", chi}}}};
  return doc.dump(indent);
}

}  // namespace coxir::io
