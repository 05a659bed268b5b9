#include "superformat/serialize.hpp"

#include <stdexcept>

namespace superformat {

namespace {

std::vector<std::vector<Rational>> rows_from_json(const json& entries) {
  if (!entries.is_array()) throw std::invalid_argument("matrix entries must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(x.get<Rational>());
    rows.push_back(std::move(r));
  }
  return rows;
}

json rows_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
  }
}

void to_json(json& j, const Matrix& m) { j = json{{"size", m.size()}, {"entries", rows_to_json(m)}}; }

void from_json(const json& j, Matrix& m) {
  m = Matrix::from_rows(rows_from_json(j.at("entries")));
  if (j.contains("size") && j.at("size").get<int>() != m.size()) {
    throw std::invalid_argument("declared matrix size does not match its entries");
  }
}

void to_json(json& j, const Format& f) { j = json{{"signs", f.signs()}}; }

void from_json(const json& j, Format& f) { f = Format(j.at("signs").get<std::vector<int>>()); }

void to_json(json& j, const GradedMatrix& g) { j = json{{"format", g.fmt}, {"matrix", g.mat}}; }

void from_json(const json& j, GradedMatrix& g) {
  g = GradedMatrix(j.at("matrix").get<Matrix>(), j.at("format").get<Format>());
}

void to_json(json& j, const Permutation& p) { j = json{{"perm", p.images()}}; }

Permutation permutation_from_json(const json& j) { return Permutation(j.at("perm").get<std::vector<int>>()); }

void to_json(json& j, const AlgebraId& a) {
  j = json{{"family", to_string(a.family)}, {a.is_osp() ? "m" : "n", a.parameter}, {"format", to_string(a.layout)}};
}

void from_json(const json& j, AlgebraId& a) {
  a.family = parse_family(j.at("family").get<std::string>());
  const char* key = a.is_osp() ? "m" : "n";
  a.parameter = j.at(key).get<int>();
  a.layout = parse_layout(j.value("format", std::string("diagonal")));
  a.validate();
}

void to_json(json& j, const ChevalleyBasis& b) {
  j = json{{"algebra", b.algebra}, {"h", b.h}, {"e", b.e}, {"f", b.f}};
}

void from_json(const json& j, ChevalleyBasis& b) {
  b.algebra = j.at("algebra").get<AlgebraId>();
  b.h = j.at("h").get<std::vector<GradedMatrix>>();
  b.e = j.at("e").get<std::vector<GradedMatrix>>();
  b.f = j.at("f").get<std::vector<GradedMatrix>>();
  if (b.h.empty() || b.h.size() != b.e.size() || b.h.size() != b.f.size()) {
    throw std::invalid_argument("basis needs equally many h, e and f generators");
  }
}

void to_json(json& j, const WeightSymbol& w) {
  j = json{{"kind", w.kind == WeightSymbol::Kind::eps ? "eps" : "delta"}, {"index", w.index}};
}

void from_json(const json& j, WeightSymbol& w) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "eps") {
    w.kind = WeightSymbol::Kind::eps;
  } else if (kind == "delta") {
    w.kind = WeightSymbol::Kind::delta;
  } else {
    throw std::invalid_argument("weight kind must be eps or delta");
  }
  w.index = j.at("index").get<int>();
}

void to_json(json& j, const SimpleRoot& r) {
  j = json{{"positive", r.positive}, {"negative", r.negative}, {"parity", r.parity}};
}

void from_json(const json& j, SimpleRoot& r) {
  r.positive = j.at("positive").get<WeightSymbol>();
  r.negative = j.at("negative").get<WeightSymbol>();
  r.parity = j.at("parity").get<int>();
}

void to_json(json& j, const WindowedMatrix& w) {
  std::vector<int> labels;
  for (int l = -w.window(); l <= w.window(); ++l) labels.push_back(l);
  j = json{{"window", w.window()}, {"labels", labels}, {"entries", rows_to_json(w.matrix())}};
}

WindowedMatrix windowed_from_json(const json& j) {
  return WindowedMatrix(j.at("window").get<int>(), Matrix::from_rows(rows_from_json(j.at("entries"))));
}

void to_json(json& j, const PrincipalTriple& t) {
  j = json{{"J_minus", t.j_minus}, {"J_plus", t.j_plus}, {"H", t.h}};
}

void to_json(json& j, const BosonicPair& x) { j = json{{"X_plus", x.x_plus}, {"X_minus", x.x_minus}}; }

void to_json(json& j, const RelationCheck& c) {
  j = json{{"name", c.name}, {"pass", c.pass}};
  if (c.residual) j["residual"] = *c.residual;
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"checks", r.checks},
           {"total", r.checks.size()},
           {"failed", r.failures()},
           {"ok", r.all_pass()}};
}

}  // namespace superformat
