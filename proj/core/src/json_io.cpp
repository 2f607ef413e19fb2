#include "szlab/json_io.hpp"

#include "szlab/error.hpp"

namespace szlab {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::kParseError, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t decode_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }

Json encode(const Ordinal& a) {
  if (auto n = a.finite_value()) return *n;
  Json terms = Json::array();
  for (const auto& t : a.terms()) terms.push_back(Json::array({encode(t.exponent), t.coefficient}));
  return Json{{"terms", std::move(terms)}};
}

Json encode(const StepFunction& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back(Json{{"end", encode(p.end)}, {"value", encode(p.value)}});
  return Json{{"pieces", std::move(pieces)}};
}

Json encode(const OrdinalSpace& space) { return Json{{"gamma", encode(space.gamma())}, {"k", space.k()}}; }

Json encode(const OrdinalMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back(Json{{"point", encode(a.point)}, {"weight", encode(a.weight)}});
  return Json{{"space", encode(mu.space())}, {"atoms", std::move(atoms)}};
}

Json encode(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : m.row(r)) row.push_back(encode(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json encode(const WValue& w) {
  if (w.infinite) return Json{{"inf", true}};
  return Json{{"c", encode(w.c)}, {"m", w.m}, {"l", w.l}};
}

Json encode(const BDParams& params) {
  return Json{{"a", encode(params.a)}, {"b", encode(params.b)}, {"lambda", encode(params.lambda)}};
}

Json encode(const CompressionTrace& trace) {
  Json gammas = Json::array();
  for (const auto& g : trace.gammas) gammas.push_back(encode(g));
  Json stages = Json::array();
  for (const auto& s : trace.stages) stages.push_back(encode(s));
  return Json{{"epsilon", encode(trace.epsilon)},
              {"area", encode(trace.area)},
              {"area_text", to_string(trace.area)},
              {"gammas", std::move(gammas)},
              {"stages", std::move(stages)}};
}

Json encode_phi_table(const BDSpace& space) {
  Json entries = Json::array();
  const std::size_t top = space.dims().back();
  for (std::size_t k = 3; k <= top; ++k) {
    const PhiTuple& t = space.phi(k);
    entries.push_back(Json{{"k", k},
                           {"level", space.level_of(k)},
                           {"sigma1", t.sigma1},
                           {"i", t.i},
                           {"m", t.m},
                           {"sigma2", t.sigma2},
                           {"j", t.j}});
  }
  return Json{{"ordering", std::string(kPhiOrdering)},
              {"params", encode(space.params())},
              {"dims", space.dims()},
              {"entries", std::move(entries)}};
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Ordinal decode_ordinal(const Json& j) {
  if (j.is_number_integer()) return Ordinal(decode_count(j, "finite ordinal"));
  if (j.is_string()) return parse_ordinal(j.get<std::string>());
  if (j.is_object()) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    std::vector<OrdinalTerm> out;
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 2) bad("ordinal terms are [exponent, coefficient] pairs");
      out.push_back(OrdinalTerm{decode_ordinal(t[0]), decode_count(t[1], "coefficient")});
    }
    return Ordinal::from_terms(std::move(out));
  }
  bad("not an ordinal: " + j.dump());
}

StepFunction decode_step_function(const Json& j) {
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) bad("'pieces' must be an array");
  std::vector<Piece> out;
  for (const auto& p : pieces) out.push_back(Piece{decode_rational(field(p, "end")), decode_ordinal(field(p, "value"))});
  return StepFunction::from_pieces(std::move(out));
}

OrdinalSpace decode_space(const Json& j) {
  return OrdinalSpace(decode_ordinal(field(j, "gamma")), decode_count(field(j, "k"), "k"));
}

OrdinalMeasure decode_measure(const Json& j) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) bad("'atoms' must be an array");
  std::vector<Atom> out;
  for (const auto& a : atoms) out.push_back(Atom{decode_ordinal(field(a, "point")), decode_rational(field(a, "weight"))});
  return OrdinalMeasure(decode_space(field(j, "space")), std::move(out));
}

RationalMatrix decode_matrix(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = decode_rational(j[r][c]);
  }
  return m;
}

WValue decode_wvalue(const Json& j) {
  if (j.is_object() && j.contains("inf")) {
    if (j.at("inf") != true) bad("'inf' must be true");
    return WValue::infinity();
  }
  return WValue{false, decode_rational(field(j, "c")), decode_count(field(j, "m"), "m"), decode_count(field(j, "l"), "l")};
}

}  // namespace szlab
