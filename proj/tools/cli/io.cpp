#include "io.hpp"

namespace hyperlat::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InputError("malformed-input", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return j;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed-input", std::string("not a JSON document: ") + e.what());
  }
}

Int to_int(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    malformed(std::string(what) + " is out of range");
  return j.get<Int>();
}

LatticeVector vector_from_json(const json& j) {
  std::vector<Int> v;
  for (const auto& x : array(j, "vector")) v.push_back(to_int(x, "vector entry"));
  return LatticeVector(std::move(v));
}

json to_json(const LatticeVector& v) { return json(v.values()); }

IntMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Int>> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(vector_from_json(r).values());
  return IntMatrix::from_rows(rows);
}

json to_json(const IntMatrix& m) { return json(m.to_rows()); }

LatticeDoc lattice_from_json(const json& j) {
  const json& mode = field(j, "mode");
  if (!mode.is_string()) malformed("\"mode\" must be a string");
  LatticeDoc doc;
  if (mode == "diagonal") {
    const Int n = to_int(field(j, "n"), "n");
    if (n < 0) malformed("n must be nonnegative");
    doc.lattice = Lattice::diagonal(static_cast<std::size_t>(n));
  } else if (mode == "gram") {
    doc.lattice = Lattice::from_gram(matrix_from_json(field(j, "gram")));
  } else {
    malformed("mode must be \"diagonal\" or \"gram\"");
  }
  if (auto it = j.find("vectors"); it != j.end()) {
    if (!it->is_object()) malformed("\"vectors\" must map names to vectors");
    for (const auto& [name, value] : it->items()) {
      LatticeVector v = vector_from_json(value);
      if (v.rank() != doc.lattice.rank())
        malformed("vector \"" + name + "\" has rank " + std::to_string(v.rank()) + ", expected " +
                  std::to_string(doc.lattice.rank()));
      doc.vectors.emplace(name, std::move(v));
    }
  }
  return doc;
}

json to_json(const LatticeDoc& doc) {
  json j;
  if (doc.lattice.is_diagonal()) {
    j["mode"] = "diagonal";
    j["n"] = doc.lattice.negative_rank();
  } else {
    j["mode"] = "gram";
    j["gram"] = to_json(doc.lattice.gram_matrix());
  }
  j["vectors"] = json::object();
  for (const auto& [name, v] : doc.vectors) j["vectors"][name] = to_json(v);
  return j;
}

json to_json(const Rational& q) {
  // Values in this toolkit stay far below 2^63; strings guard the rest.
  auto as_json = [](const BigInt& x) -> json {
    if (x >= std::numeric_limits<Int>::min() && x <= std::numeric_limits<Int>::max())
      return static_cast<Int>(x);
    return x.str();
  };
  return json{{"num", as_json(numerator(q))}, {"den", as_json(denominator(q))}};
}

Rational rational_from_json(const json& j) {
  auto part = [](const json& x, const char* what) -> BigInt {
    if (x.is_string()) {
      try {
        return BigInt(x.get<std::string>());
      } catch (const std::exception&) {
        malformed(std::string(what) + " is not an integer string");
      }
    }
    return BigInt(to_int(x, what));
  };
  const BigInt den = part(field(j, "den"), "den");
  if (den <= 0) malformed("den must be positive");
  return Rational(part(field(j, "num"), "num"), den);
}

json to_json(const QDivisor& m) { return json{{"num", to_json(m.numerator())}, {"den", m.denominator()}}; }

QDivisor qdivisor_from_json(const json& j) {
  const Int den = to_int(field(j, "den"), "den");
  if (den <= 0) malformed("den must be positive");
  return QDivisor(vector_from_json(field(j, "num")), den);
}

json to_json(const Isometry& phi) {
  json word = json::array();
  for (const auto& g : phi.word()) word.push_back(g.str());
  return json{{"matrix", to_json(phi.matrix())}, {"word", word}};
}

Isometry isometry_from_json(const json& j, const Lattice& lattice) {
  std::vector<Generator> word;
  for (const auto& t : array(field(j, "word"), "word")) {
    if (!t.is_string()) malformed("word entries must be strings");
    word.push_back(Generator::parse(t.get<std::string>()));
  }
  IntMatrix m = matrix_from_json(field(j, "matrix"));
  Isometry phi(std::move(m), std::move(word));
  if (phi.matrix().rows() != lattice.rank() || phi.matrix().cols() != lattice.rank())
    malformed("isometry matrix has the wrong size");
  if (!verify_isometry(phi, lattice)) malformed("isometry word does not evaluate to the matrix");
  return phi;
}

WallType wall_type_from_json(const json& j) {
  return WallType::make(vector_from_json(field(j, "w")), to_int(field(j, "p"), "p"));
}

json to_json(const WallType& t) { return json{{"w", to_json(t.w)}, {"p", t.p}}; }

json to_json(const Cycle& z) { return json(z.values()); }

Cycle cycle_from_json(const json& j) {
  Cycle z(vector_from_json(j).values());
  for (Int m : z.values())
    if (m < 0) malformed("cycle multiplicities must be nonnegative");
  return z;
}

namespace {

Singularity sing_from_json(const json& j) {
  if (j.is_null()) return Singularity::unspecified;
  if (!j.is_string()) malformed("\"sing\" must be a string or null");
  const auto s = j.get<std::string>();
  if (s == "smooth") return Singularity::smooth;
  if (s == "node") return Singularity::node;
  if (s == "cusp") return Singularity::cusp;
  malformed("\"sing\" must be smooth, node, cusp or null");
}

json to_json(Singularity s) {
  switch (s) {
    case Singularity::smooth: return "smooth";
    case Singularity::node: return "node";
    case Singularity::cusp: return "cusp";
    case Singularity::unspecified: break;
  }
  return nullptr;
}

}  // namespace

DualGraph graph_from_json(const json& j) {
  std::vector<Vertex> vertices;
  for (const auto& v : array(field(j, "vertices"), "vertices")) {
    Vertex vx;
    vx.self_int = to_int(field(v, "d"), "d");
    vx.genus = v.contains("g") ? to_int(v["g"], "g") : 0;
    vx.sing = v.contains("sing") ? sing_from_json(v["sing"]) : Singularity::unspecified;
    vertices.push_back(vx);
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : array(j["edges"], "edges")) {
      if (!e.is_array() || e.size() != 3) malformed("edges are [i, j, m] triples");
      const Int a = to_int(e[0], "edge endpoint"), b = to_int(e[1], "edge endpoint");
      if (a < 0 || b < 0) malformed("edge endpoints must be nonnegative");
      edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), to_int(e[2], "edge multiplicity")});
    }
  }
  bool concurrent = false;
  if (j.contains("concurrent")) {
    if (!j["concurrent"].is_boolean()) malformed("\"concurrent\" must be a boolean");
    concurrent = j["concurrent"].get<bool>();
  }
  return DualGraph::from_edges(std::move(vertices), edges, concurrent);
}

json to_json(const DualGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(json{{"d", v.self_int}, {"g", v.genus}, {"sing", to_json(v.sing)}});
  json edges = json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = i + 1; k < g.size(); ++k)
      if (g.intersection(i, k) != 0) edges.push_back(json::array({i, k, g.intersection(i, k)}));
  json out{{"vertices", vertices}, {"edges", edges}};
  if (g.concurrent()) out["concurrent"] = true;
  return out;
}

SurfaceModel model_from_json(const json& j) {
  std::vector<Curve> curves;
  if (j.contains("curves")) {
    for (const auto& c : array(j["curves"], "curves"))
      curves.push_back({vector_from_json(field(c, "class")), to_int(field(c, "pa"), "pa")});
  }
  return SurfaceModel::create(matrix_from_json(field(j, "gram")), vector_from_json(field(j, "K")),
                              vector_from_json(field(j, "E")), std::move(curves));
}

json to_json(const SurfaceModel& model) {
  json curves = json::array();
  for (const auto& c : model.curves()) curves.push_back(json{{"class", to_json(c.cls)}, {"pa", c.pa}});
  return json{{"gram", to_json(model.lattice().gram_matrix())},
              {"K", to_json(model.canonical())},
              {"E", to_json(model.exceptional())},
              {"curves", curves}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hyperlat::io
