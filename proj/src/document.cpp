#include "homhopf/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace homhopf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw ParseError("field '" + field + "': " + msg);
}

const json& require(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(key, "missing");
  return *it;
}

Scalar parse_scalar(const json& v, Field f, const std::string& field) {
  if (!v.is_string()) fail(field, "scalars must be JSON strings, got " + std::string(v.type_name()));
  try {
    return f.parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

std::size_t parse_index(const json& v, std::size_t bound, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(field, "index must be a non-negative integer");
  const auto i = v.get<std::size_t>();
  if (i >= bound) fail(field, "index " + std::to_string(i) + " out of range (bound " + std::to_string(bound) + ")");
  return i;
}

Vec parse_vec(const json& v, Field f, std::size_t n, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of scalars");
  if (v.size() != n) fail(field, "expected length " + std::to_string(n) + ", got " + std::to_string(v.size()));
  Vec out(f, n);
  for (std::size_t i = 0; i < n; ++i) out[i] = parse_scalar(v[i], f, field + "[" + std::to_string(i) + "]");
  return out;
}

LinMap parse_matrix(const json& v, Field f, std::size_t n, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of rows");
  if (v.size() != n) fail(field, "matrix must be square of size " + std::to_string(n) + ", got " + std::to_string(v.size()) + " rows");
  LinMap m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = v[r];
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n) fail(rf, "matrix must be square of size " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = parse_scalar(row[c], f, rf);
  }
  return m;
}

std::vector<Entry3> parse_entries3(const json& v, Field f, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of [i,j,k,\"c\"] entries");
  std::vector<Entry3> out;
  for (std::size_t n = 0; n < v.size(); ++n) {
    const json& e = v[n];
    const std::string ef = field + "[" + std::to_string(n) + "]";
    if (!e.is_array() || e.size() != 4) fail(ef, "entry must be [i,j,k,\"c\"]");
    const std::size_t big = static_cast<std::size_t>(-1);
    out.push_back({parse_index(e[0], big, ef), parse_index(e[1], big, ef), parse_index(e[2], big, ef),
                   parse_scalar(e[3], f, ef)});
  }
  return out;
}

StructureTensor parse_tensor(const json& v, Field f, std::size_t n, const std::string& field) {
  return materialize(parse_entries3(v, f, field), f, n, n, n, field);
}

Field parse_field(const json& v) {
  if (!v.is_object()) fail("scalars", "expected an object");
  const json& kind = require(v, "kind");
  if (kind == "rational") return Field::rational();
  if (kind != "gfp") fail("scalars.kind", "must be \"rational\" or \"gfp\"");
  const json& p = require(v, "p");
  if (!p.is_number_integer() || p.get<long long>() < 2) fail("scalars.p", "must be a prime integer");
  const auto pv = p.get<std::uint64_t>();
  if (pv == 2) throw FieldCharError("characteristic 2 is not supported (the constructions need 1/2)");
  try {
    return Field::prime(pv);
  } catch (const std::invalid_argument& e) {
    fail("scalars.p", e.what());
  }
}

AlgebraDocument from_json(const json& j);

DocumentProvenance parse_provenance(const json& v) {
  if (!v.is_object()) fail("provenance", "expected an object");
  DocumentProvenance p;
  const json& c = require(v, "construction");
  if (!c.is_string()) fail("provenance.construction", "expected a string");
  p.construction = c.get<std::string>();
  if (auto it = v.find("factors"); it != v.end()) {
    if (!it->is_array()) fail("provenance.factors", "expected an array of strings");
    for (const json& s : *it) {
      if (!s.is_string()) fail("provenance.factors", "expected an array of strings");
      p.factors.push_back(s.get<std::string>());
    }
  }
  if (auto it = v.find("base"); it != v.end()) p.base = std::make_shared<AlgebraDocument>(from_json(*it));
  return p;
}

AlgebraDocument from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  AlgebraDocument d;
  d.field = parse_field(require(j, "scalars"));
  const json& dim = require(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0) fail("dim", "must be a positive integer");
  d.dim = dim.get<std::size_t>();
  const std::size_t n = d.dim;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != n) fail("basis", "expected " + std::to_string(n) + " names");
    for (const json& s : *it) {
      if (!s.is_string()) fail("basis", "names must be strings");
      d.basis.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) d.basis.push_back("e" + std::to_string(i));
  }
  if (!j.contains("mul") && !j.contains("unit") && j.contains("comul")) {
    d.has_algebra = false;
    d.mul = StructureTensor(d.field, n, n, n);
    d.unit = Vec(d.field, n);
  } else {
    d.mul = parse_tensor(require(j, "mul"), d.field, n, "mul");
    d.unit = parse_vec(require(j, "unit"), d.field, n, "unit");
  }
  d.alpha = parse_matrix(require(j, "alpha"), d.field, n, "alpha");
  if (auto it = j.find("comul"); it != j.end()) d.comul = parse_tensor(*it, d.field, n, "comul");
  if (auto it = j.find("counit"); it != j.end()) d.counit = parse_vec(*it, d.field, n, "counit");
  if (auto it = j.find("antipode"); it != j.end()) d.antipode = parse_matrix(*it, d.field, n, "antipode");
  if (auto it = j.find("action"); it != j.end()) d.action = parse_entries3(*it, d.field, "action");
  if (auto it = j.find("coaction"); it != j.end()) d.coaction = parse_entries3(*it, d.field, "coaction");
  if (auto it = j.find("r"); it != j.end()) {
    if (!it->is_array()) fail("r", "expected an array of [i,j,\"c\"] entries");
    std::vector<Entry2> r;
    for (std::size_t m = 0; m < it->size(); ++m) {
      const json& e = (*it)[m];
      const std::string ef = "r[" + std::to_string(m) + "]";
      if (!e.is_array() || e.size() != 3) fail(ef, "entry must be [i,j,\"c\"]");
      r.push_back({parse_index(e[0], n, ef), parse_index(e[1], n, ef), parse_scalar(e[2], d.field, ef)});
    }
    d.r = std::move(r);
  }
  if (auto it = j.find("provenance"); it != j.end()) d.provenance = parse_provenance(*it);
  for (const auto& [key, _] : j.items()) {
    static const char* known[] = {"scalars", "dim", "basis", "mul", "unit", "alpha", "comul", "counit",
                                  "antipode", "action", "coaction", "r", "provenance"};
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) == std::end(known))
      fail(key, "unknown field");
  }
  return d;
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(scalar_json(v[i]));
  return a;
}

json matrix_json(const LinMap& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.cod_dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dom_dim(); ++c) row.push_back(scalar_json(m.at(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

json entries3_json(std::vector<Entry3> e) {
  std::sort(e.begin(), e.end(), [](const Entry3& a, const Entry3& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  // Merge duplicates so the canonical form is unique.
  json a = json::array();
  for (std::size_t n = 0; n < e.size();) {
    Scalar c = e[n].c;
    std::size_t m = n + 1;
    while (m < e.size() && e[m].i == e[n].i && e[m].j == e[n].j && e[m].k == e[n].k) c += e[m++].c;
    if (!c.is_zero()) a.push_back(json::array({e[n].i, e[n].j, e[n].k, scalar_json(c)}));
    n = m;
  }
  return a;
}

json to_json(const AlgebraDocument& d) {
  json j;
  j["scalars"] = d.field.is_rational() ? json{{"kind", "rational"}} : json{{"kind", "gfp"}, {"p", d.field.modulus()}};
  j["dim"] = d.dim;
  j["basis"] = d.basis;
  if (d.has_algebra) {
    j["mul"] = entries3_json(sparse_entries(d.mul));
    j["unit"] = vec_json(d.unit);
  }
  j["alpha"] = matrix_json(d.alpha);
  if (d.comul) j["comul"] = entries3_json(sparse_entries(*d.comul));
  if (d.counit) j["counit"] = vec_json(*d.counit);
  if (d.antipode) j["antipode"] = matrix_json(*d.antipode);
  if (d.action) j["action"] = entries3_json(*d.action);
  if (d.coaction) j["coaction"] = entries3_json(*d.coaction);
  if (d.r) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (const Entry2& e : *d.r) {
      auto [it, fresh] = acc.try_emplace({e.i, e.j}, e.c);
      if (!fresh) it->second += e.c;
    }
    json a = json::array();
    for (const auto& [ij, c] : acc)
      if (!c.is_zero()) a.push_back(json::array({ij.first, ij.second, scalar_json(c)}));
    j["r"] = std::move(a);
  }
  if (d.provenance) {
    json p;
    p["construction"] = d.provenance->construction;
    p["factors"] = d.provenance->factors;
    if (d.provenance->base) p["base"] = to_json(*d.provenance->base);
    j["provenance"] = std::move(p);
  }
  return j;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

StructureTensor materialize(const std::vector<Entry3>& entries, Field f, std::size_t d0, std::size_t d1,
                            std::size_t d2, const std::string& what) {
  StructureTensor t(f, d0, d1, d2);
  for (const Entry3& e : entries) {
    if (e.i >= d0 || e.j >= d1 || e.k >= d2)
      fail(what, "entry [" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) +
                     "] outside " + std::to_string(d0) + "x" + std::to_string(d1) + "x" + std::to_string(d2));
    if (e.c.field() != f) throw FieldMismatch(what + ": coefficient outside the document's field");
    t.at(e.i, e.j, e.k) += e.c;
  }
  return t;
}

std::vector<Entry3> sparse_entries(const StructureTensor& t) {
  std::vector<Entry3> out;
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k)
        if (!t.at(i, j, k).is_zero()) out.push_back({i, j, k, t.at(i, j, k)});
  return out;
}

AlgebraDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  return from_json(j);
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_document(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

void save_document(const AlgebraDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_document(doc);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

HomAlgebra document_algebra(const AlgebraDocument& doc) {
  if (!doc.has_algebra) fail("mul", "missing");
  return {doc.dim, doc.mul, doc.unit, doc.alpha};
}

HomCoalgebra document_coalgebra(const AlgebraDocument& doc) {
  if (!doc.comul) fail("comul", "missing");
  if (!doc.counit) fail("counit", "missing");
  return {doc.dim, *doc.comul, *doc.counit, doc.alpha};
}

HomBialgebra document_bialgebra(const AlgebraDocument& doc) { return {document_algebra(doc), document_coalgebra(doc)}; }

HomHopfAlgebra document_hopf(const AlgebraDocument& doc) {
  HomHopfAlgebra h;
  h.bialgebra = document_bialgebra(doc);
  h.antipode = doc.antipode ? *doc.antipode : solve_antipode(h.bialgebra);
  if (doc.provenance) {
    Provenance p{doc.provenance->construction, doc.provenance->factors, nullptr};
    if (doc.provenance->base) p.base = std::make_shared<const HomHopfAlgebra>(document_hopf(*doc.provenance->base));
    h.provenance = std::move(p);
  }
  return h;
}

AlgebraDocument hopf_document(const HomHopfAlgebra& h, std::vector<std::string> basis) {
  AlgebraDocument d;
  d.field = h.field();
  d.dim = h.dim();
  if (basis.size() != d.dim) {
    basis.clear();
    for (std::size_t i = 0; i < d.dim; ++i) basis.push_back("e" + std::to_string(i));
  }
  d.basis = std::move(basis);
  d.mul = h.algebra().mul;
  d.unit = h.algebra().unit;
  d.alpha = h.twist();
  d.comul = h.coalgebra().comul;
  d.counit = h.coalgebra().counit;
  d.antipode = h.antipode;
  if (h.provenance) {
    DocumentProvenance p{h.provenance->construction, h.provenance->factors, nullptr};
    if (h.provenance->base) {
      const HomHopfAlgebra& b = *h.provenance->base;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < b.dim(); ++i) names.push_back("e" + std::to_string(i));
      p.base = std::make_shared<AlgebraDocument>(hopf_document(b, std::move(names)));
    }
    d.provenance = std::move(p);
  }
  return d;
}

namespace {

struct Builder {
  Field f = Field::rational();
  AlgebraDocument d;

  explicit Builder(std::vector<std::string> basis) {
    d.field = f;
    d.dim = basis.size();
    d.basis = std::move(basis);
    const std::size_t n = d.dim;
    d.mul = StructureTensor(f, n, n, n);
    d.comul = StructureTensor(f, n, n, n);
    d.unit = Vec::basis(f, n, 0);
    d.counit = Vec(f, n);
    d.alpha = LinMap::identity(f, n);
    d.antipode = LinMap::identity(f, n);
  }
  void mul(std::size_t i, std::size_t j, std::size_t k, int c) { d.mul.at(i, j, k) = f.from_int(c); }
  void comul(std::size_t i, std::size_t j, std::size_t k, int c) { d.comul->at(i, j, k) = f.from_int(c); }
  void counit(std::vector<int> c) {
    for (std::size_t i = 0; i < c.size(); ++i) (*d.counit)[i] = f.from_int(c[i]);
  }
  void diag_alpha(std::vector<int> c) {
    for (std::size_t i = 0; i < c.size(); ++i) d.alpha.at(i, i) = f.from_int(c[i]);
  }
  /// S(e_col) = sum_row c e_row
  void antipode(std::size_t col, std::vector<std::pair<std::size_t, int>> image) {
    for (std::size_t r = 0; r < d.dim; ++r) d.antipode->at(r, col) = f.zero();
    for (auto [r, c] : image) d.antipode->at(r, col) = f.from_int(c);
  }
};

AlgebraDocument kz2() {
  Builder b({"1", "g"});
  b.mul(0, 0, 0, 1);
  b.mul(0, 1, 1, 1);
  b.mul(1, 0, 1, 1);
  b.mul(1, 1, 0, 1);
  b.comul(0, 0, 0, 1);
  b.comul(1, 1, 1, 1);
  b.counit({1, 1});
  return b.d;
}

// B = span{1, x}: beta(x) = -x, 1x = x1 = -x, x^2 = 0,
// Delta(x) = (-x) (x) 1 + 1 (x) (-x), S_B(x) = -x.
AlgebraDocument example_b() {
  Builder b({"1", "x"});
  b.diag_alpha({1, -1});
  b.mul(0, 0, 0, 1);
  b.mul(0, 1, 1, -1);
  b.mul(1, 0, 1, -1);
  b.comul(0, 0, 0, 1);
  b.comul(1, 1, 0, -1);
  b.comul(1, 0, 1, -1);
  b.counit({1, 0});
  b.antipode(1, {{1, -1}});
  return b.d;
}

// Basis 1, g, x, gx where gx is the Hom product g*x; alpha = diag(1,1,-1,-1).
AlgebraDocument sweedler_hom() {
  Builder b({"1", "g", "x", "gx"});
  b.diag_alpha({1, 1, -1, -1});
  b.mul(0, 0, 0, 1);
  b.mul(0, 1, 1, 1);
  b.mul(0, 2, 2, -1);
  b.mul(0, 3, 3, -1);
  b.mul(1, 0, 1, 1);
  b.mul(1, 1, 0, 1);
  b.mul(1, 2, 3, 1);
  b.mul(1, 3, 2, 1);
  b.mul(2, 0, 2, -1);
  b.mul(2, 1, 3, -1);
  b.mul(3, 0, 3, -1);
  b.mul(3, 1, 2, -1);
  b.comul(0, 0, 0, 1);
  b.comul(1, 1, 1, 1);
  b.comul(2, 2, 1, -1);
  b.comul(2, 0, 2, -1);
  b.comul(3, 3, 0, -1);
  b.comul(3, 1, 3, -1);
  b.counit({1, 1, 0, 0});
  b.antipode(2, {{3, -1}});
  b.antipode(3, {{2, 1}});
  return b.d;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"bicross-2-5-B", "bicross-2-5-H", "bicross-2-5-data",
                                                 "sweedler-hom",  "sweedler-hom-r", "kz2"};
  return names;
}

AlgebraDocument builtin_example(const std::string& name) {
  const Field q = Field::rational();
  if (name == "kz2" || name == "bicross-2-5-H") return kz2();
  if (name == "bicross-2-5-B") return example_b();
  if (name == "sweedler-hom") return sweedler_hom();
  if (name == "sweedler-hom-r") {
    AlgebraDocument d = sweedler_hom();
    const Scalar half = q.from_ratio(1, 2);
    d.r = std::vector<Entry2>{{0, 0, half}, {0, 1, half}, {1, 0, half}, {1, 1, -half}};
    return d;
  }
  if (name == "bicross-2-5-data") {
    // kz2 acting on B: 1.1 = 1, 1.x = -x, g.1 = 1, g.x = x; coaction rho(h) = h (x) 1_B.
    AlgebraDocument d = kz2();
    d.action = std::vector<Entry3>{{0, 0, 0, q.one()}, {0, 1, 1, -q.one()}, {1, 0, 0, q.one()}, {1, 1, 1, q.one()}};
    d.coaction = std::vector<Entry3>{{0, 0, 0, q.one()}, {1, 1, 0, q.one()}};
    d.provenance = DocumentProvenance{"bicross-data", {"bicross-2-5-B", "bicross-2-5-H"}, nullptr};
    return d;
  }
  throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace homhopf
