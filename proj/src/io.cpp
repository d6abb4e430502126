#include "hopfkit/io.hpp"

#include <fstream>
#include <memory>

#include "hopfkit/constructions.hpp"

namespace hk {

namespace {

std::string lit(const Scalar& s) { return s.str(); }

Scalar read_scalar(const Json& j, const Field& f) {
  if (j.is_number_integer()) return Scalar(j.get<long>()).coerce(f);
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "scalar must be a string or integer");
  return parse_scalar(j.get<std::string>(), f).coerce(f);
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key ") + key);
  return j.at(key);
}

size_t read_index(const Json& e, const char* key, size_t bound) {
  const Json& v = need(e, key);
  if (!v.is_number_unsigned() && !v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(key) + " must be an integer");
  const long x = v.get<long>();
  if (x < 0 || static_cast<size_t>(x) >= bound)
    throw Error(ErrorKind::DimensionMismatch, std::string(key) + " out of range: " + std::to_string(x));
  return static_cast<size_t>(x);
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(lit(s));
  return out;
}

Vec read_vec(const Json& j, size_t n, const Field& f) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::DimensionMismatch, "expected a vector of length " + std::to_string(n));
  Vec v;
  for (const auto& x : j) v.push_back(read_scalar(x, f));
  return v;
}

Field file_field(const Json& j, const Field& fallback) { return j.contains("field") ? field_from_json(j.at("field")) : fallback; }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

bool starts_with(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

void check_schema(const Json& j, const char* want) {
  if (j.contains("schema") && j.at("schema") != want)
    throw Error(ErrorKind::ParseError, "expected schema " + std::string(want) + ", got " + j.at("schema").dump());
}

HopfPtr sweedler() {
  static const HopfPtr h = [] {
    auto h0 = std::make_shared<const HopfAlgebra>(build_cyclic(2));
    return smash_product(sweedler_input(regular(h0))).hopf;
  }();
  return h;
}

}  // namespace

Json field_to_json(const Field& f) {
  Json out;
  if (!f) {
    out["cyclotomic"] = 1;
    return out;
  }
  const Field base = f->extended ? f->base : f;
  out["cyclotomic"] = base->order;
  if (f->extended) out["sqrt"] = lit(Scalar::from_coeffs(base, f->disc));
  return out;
}

Field field_from_json(const Json& j) {
  const Json& n = need(j, "cyclotomic");
  if (!n.is_number_integer() || n.get<int>() < 1) throw Error(ErrorKind::ParseError, "cyclotomic must be a positive integer");
  Field f = cyclotomic_field(n.get<int>());
  if (j.contains("sqrt")) f = adjoin_sqrt(f, read_scalar(j.at("sqrt"), f));
  return f;
}

Json algebra_to_json(const Algebra& a) {
  Json out;
  out["schema"] = "algebra.v1";
  out["dim"] = a.dim;
  out["labels"] = a.labels;
  out["unit"] = vec_json(a.unit);
  Json mult = Json::array();
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k)
        if (!a.m(i, j, k).is_zero()) mult.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"c", lit(a.m(i, j, k))}});
  out["mult"] = std::move(mult);
  return out;
}

Algebra algebra_from_json(const Json& j, const Field& f) {
  const Json& d = need(j, "dim");
  if (!d.is_number_integer() || d.get<long>() < 1) throw Error(ErrorKind::ParseError, "dim must be a positive integer");
  const size_t n = d.get<size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.empty())
    for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  if (labels.size() != n) throw Error(ErrorKind::DimensionMismatch, "labels do not match dim");
  Algebra a(n, labels);
  for (auto& s : a.mult) s = Scalar().coerce(f);
  for (const Json& e : need(j, "mult")) {
    const size_t i = read_index(e, "i", n), jj = read_index(e, "j", n), k = read_index(e, "k", n);
    a.m(i, jj, k) = a.m(i, jj, k) + read_scalar(need(e, "c"), f);
  }
  a.unit = read_vec(need(j, "unit"), n, f);
  return a;
}

Json hopf_to_json(const HopfAlgebra& h) {
  Json out = algebra_to_json(h.alg);
  out["schema"] = "hopf.v1";
  out["name"] = h.name;
  const size_t n = h.dim();
  Json comult = Json::array();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (!h.coalg.d(i, j, k).is_zero()) comult.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"c", lit(h.coalg.d(i, j, k))}});
  out["comult"] = std::move(comult);
  out["counit"] = vec_json(h.coalg.counit);
  // antipode[i] = S(e_i)
  Json s = Json::array();
  for (size_t i = 0; i < n; ++i) s.push_back(vec_json(h.antipode.col(i)));
  out["antipode"] = std::move(s);
  return out;
}

HopfAlgebra hopf_from_json(const Json& j, const Field& fallback) {
  check_schema(j, "hopf.v1");
  const Field f = file_field(j, fallback);
  HopfAlgebra h;
  h.name = j.value("name", std::string("input"));
  h.alg = algebra_from_json(j, f);
  const size_t n = h.alg.dim;
  h.coalg = Coalgebra(n);
  for (auto& s : h.coalg.comult) s = Scalar().coerce(f);
  for (const Json& e : need(j, "comult")) {
    const size_t i = read_index(e, "i", n), jj = read_index(e, "j", n), k = read_index(e, "k", n);
    h.coalg.d(i, jj, k) = h.coalg.d(i, jj, k) + read_scalar(need(e, "c"), f);
  }
  h.coalg.counit = read_vec(need(j, "counit"), n, f);
  const Json& s = need(j, "antipode");
  if (!s.is_array() || s.size() != n) throw Error(ErrorKind::DimensionMismatch, "antipode needs one column per basis element");
  std::vector<Vec> cols;
  for (const Json& c : s) cols.push_back(read_vec(c, n, f));
  h.antipode = Matrix::from_cols(cols, n);
  return h;
}

Json comodalg_to_json(const ComoduleAlgebra& a) {
  Json out = algebra_to_json(a.alg);
  out["schema"] = "comodalg.v1";
  out["name"] = a.name;
  out["field"] = field_to_json(field_of(a));
  if (a.hopf && is_kp(*a.hopf))
    out["hopf"] = "builtin:kp";
  else if (a.hopf)
    out["hopf"] = hopf_to_json(*a.hopf);
  const size_t n = a.dim(), hd = a.hopf ? a.hopf->dim() : 0;
  Json co = Json::array();
  for (size_t i = 0; i < n; ++i)
    for (size_t h = 0; h < hd; ++h)
      for (size_t j = 0; j < n; ++j) {
        const Scalar& c = a.coaction(h * n + j, i);
        if (!c.is_zero()) co.push_back(Json{{"i", i}, {"h", h}, {"j", j}, {"c", lit(c)}});
      }
  out["coaction"] = std::move(co);
  return out;
}

ComoduleAlgebra comodalg_from_json(const Json& j, const Field& fallback) {
  check_schema(j, "comodalg.v1");
  const Field f = file_field(j, fallback);
  ComoduleAlgebra a;
  a.name = j.value("name", std::string("input"));
  a.alg = algebra_from_json(j, f);
  const Json& h = need(j, "hopf");
  if (h.is_string())
    a.hopf = std::make_shared<const HopfAlgebra>(load_hopf(h.get<std::string>(), f));
  else
    a.hopf = std::make_shared<const HopfAlgebra>(hopf_from_json(h, f));
  if (is_kp(*a.hopf)) a.hopf = kp();
  const size_t n = a.dim(), hd = a.hopf->dim();
  a.coaction = Matrix(hd * n, n);
  for (size_t r = 0; r < hd * n; ++r)
    for (size_t c = 0; c < n; ++c) a.coaction(r, c) = Scalar().coerce(f);
  for (const Json& e : need(j, "coaction")) {
    const size_t i = read_index(e, "i", n), hh = read_index(e, "h", hd), jj = read_index(e, "j", n);
    a.coaction(hh * n + jj, i) = a.coaction(hh * n + jj, i) + read_scalar(need(e, "c"), f);
  }
  return a;
}

HopfAlgebra load_hopf(const std::string& ref, const Field& f) {
  if (ref == "builtin:kp") return kp()->coerce(f);
  if (ref == "builtin:klein4") return build_klein().coerce(f);
  if (ref == "builtin:sweedler") return sweedler()->coerce(f);
  if (starts_with(ref, "builtin:") || starts_with(ref, "catalog:")) throw Error(ErrorKind::InvalidInput, "unknown Hopf algebra " + ref);
  return hopf_from_json(read_file(ref), f);
}

ComoduleAlgebra load_comodalg(const std::string& ref, const Field& f) {
  if (starts_with(ref, "catalog:")) return catalog_entry(ref.substr(8)).coerce(f);
  if (ref == "builtin:kp") return regular(kp(), "kp").coerce(f);
  if (starts_with(ref, "builtin:")) {
    auto h = std::make_shared<const HopfAlgebra>(load_hopf(ref, f));
    return regular(h, ref.substr(8));
  }
  return comodalg_from_json(read_file(ref), f);
}

Json subspace_to_json(const Subspace& s) {
  Json out;
  out["ambient"] = s.ambient();
  out["dim"] = s.dim();
  Json b = Json::array();
  for (const Vec& v : s.basis()) b.push_back(vec_json(v));
  out["basis"] = std::move(b);
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

Json hopf_report_to_json(const HopfReport& r) {
  Json out;
  out["ok"] = r.ok();
  out["associative"] = r.associative;
  out["unital"] = r.unital;
  out["coassociative"] = r.coassoc;
  out["counit"] = r.counit;
  out["delta_multiplicative"] = r.delta_is_algebra_map;
  out["counit_multiplicative"] = r.eps_is_algebra_map;
  out["antipode"] = r.antipode_axiom;
  out["failures"] = r.failures;
  return out;
}

Json verdict_to_json(const ExactnessVerdict& v) {
  Json out;
  out["am_exact"] = v.am_exact;
  out["right_h_simple"] = v.right_h_simple;
  out["coinvariants_dim"] = v.coinvariants_dim;
  out["method"] = method_name(v.method);
  out["operator_algebra_dim"] = v.operator_algebra_dim;
  out["witness"] = v.witness ? subspace_to_json(*v.witness) : Json();
  return out;
}

Json iso_to_json(const IsoSearch& s) {
  Json out;
  out["found"] = s.iso.has_value();
  out["exhaustive"] = s.exhaustive;
  out["reason"] = s.reason;
  out["iso"] = s.iso ? matrix_to_json(*s.iso) : Json();
  Json roots = Json::array();
  for (const auto& d : s.needs_sqrt) roots.push_back(lit(d));
  out["needs_sqrt"] = std::move(roots);
  return out;
}

Json fingerprint_to_json(const FusionFingerprint& f) {
  Json out;
  out["rows"] = f.rows;
  out["cols"] = f.cols;
  out["row_dims"] = f.row_dims;
  out["col_dims"] = f.col_dims;
  Json table;
  for (size_t r = 0; r < f.rows.size(); ++r) {
    Json row;
    for (size_t c = 0; c < f.cols.size(); ++c) row[f.cols[c]] = f.cells[r][c];
    table[f.rows[r]] = std::move(row);
  }
  out["table"] = std::move(table);
  return out;
}

Json poly_to_json(const MultiPoly& p) { return p.str(); }

Json vanishing_to_json(const VanishingResult& r) {
  Json out;
  out["forced"] = r.forced;
  out["contradiction"] = r.contradiction;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json coeffs = Json::object();
    for (size_t k = 0; k < c.coeffs.size(); ++k)
      if (!c.coeffs[k].is_zero()) coeffs[std::to_string(k)] = lit(c.coeffs[k]);
    certs.push_back(Json{{"target", poly_to_json(c.target)}, {"coefficients", std::move(coeffs)}});
  }
  out["certificates"] = std::move(certs);
  Json un = Json::array();
  for (const auto& p : r.unforced) un.push_back(poly_to_json(p));
  out["unforced"] = std::move(un);
  return out;
}

Json replay_to_json(const ReplayReport& r) {
  Json out;
  out["name"] = r.name;
  out["claim"] = r.claim;
  out["passed"] = r.passed;
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"case", c.description}, {"passed", c.passed}, {"detail", c.detail}, {"result", vanishing_to_json(c.result)}});
  out["cases"] = std::move(cases);
  return out;
}

Json classification_to_json(const Classification& c) {
  Json out;
  out["matches_expected"] = c.matches_expected;
  out["detail"] = c.detail;
  Json fams = Json::array();
  for (const auto& f : c.families) {
    Json members = Json::array();
    for (const auto& m : f.members) {
      Json vals;
      for (const auto& [k, v] : m.values) vals[k] = lit(v);
      Json signs = Json::array();
      for (const auto& [a, b] : m.signs) signs.push_back(Json::array({a, b}));
      members.push_back(Json{{"signs", std::move(signs)}, {"form", m.form}, {"values", std::move(vals)}, {"dim", m.algebra.dim()}});
    }
    fams.push_back(Json{{"kind", ext_kind_name(f.kind)}, {"n2", f.n2}, {"description", f.description}, {"members", std::move(members)}});
  }
  out["families"] = std::move(fams);
  out["empty"] = c.empty_cases;
  return out;
}

}  // namespace hk
