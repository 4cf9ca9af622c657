#include "chainsub/json_io.hpp"

#include "chainsub/errors.hpp"

namespace chainsub::io {

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& field, const std::string& key) { return field + "." + key; }

const json& member(const json& j, const std::string& field, const std::string& key) {
  if (!j.is_object()) throw InputError(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(dot(field, key), "missing");
  return *it;
}

std::uint64_t uint_of(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw InputError(field, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

const json& array_of(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field, "expected an array");
  return j;
}

RingVector ring_row(const json& j, const Ring& r, std::size_t cols, const std::string& field) {
  array_of(j, field);
  if (j.size() != cols) throw InputError(field, "expected " + std::to_string(cols) + " entries");
  RingVector v(cols);
  const std::uint64_t size = r.count(r.length());
  for (std::size_t i = 0; i < cols; ++i) {
    const auto c = uint_of(j[i], at(field, i));
    if (c >= size) throw InputError(at(field, i), "ring element code out of range");
    v[i] = RingElement{c};
  }
  return v;
}

}  // namespace

json parse(const std::string& text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(field, std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const RingDescriptor& d) {
  if (d.kind == RingKind::IntegersModPrimePower) return {{"kind", "zmod"}, {"p", d.p}, {"n", d.n}};
  return {{"kind", "truncpoly"}, {"q", d.p}, {"n", d.n}};
}

json to_json(const Ring&, const RingVector& v) {
  json out = json::array();
  for (auto e : v) out.push_back(e.code);
  return out;
}

json to_json(const FieldMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(std::vector<FieldElem>(m.row(i).begin(), m.row(i).end()));
  return out;
}

json to_json(const SubPair& p) {
  json rows = json::array();
  for (const auto& row : p.M1.rows()) rows.push_back(to_json(*p.ring(), row));
  return {{"M0", p.M0.partition()}, {"M1", rows}, {"M0_log_size", p.M0.log_size()}, {"M1_log_size", p.M1.log_size()}};
}

json to_json(const FramedObject& f) {
  json out = to_json(f.realized);
  out["m"] = f.m;
  out["V"] = to_json(f.V);
  out["U"] = to_json(f.U);
  out["frame"] = to_json(f.frame.f0());
  return out;
}

json to_json(const DeltaRep& r) {
  return {{"dims", r.dims}, {"alpha", to_json(r.alpha)}, {"beta", to_json(r.beta)}, {"gamma", to_json(r.gamma)}};
}

json to_json(const DeltaMorphism& g) { return {{"g1", to_json(g.g1)}, {"g2", to_json(g.g2)}, {"g3", to_json(g.g3)}}; }

json to_json(const Triple& t) { return {{"m", t.m}, {"V", to_json(t.V)}, {"U", to_json(t.U)}}; }

json to_json(const ModMorphism& f) {
  json out = json::array();
  for (const auto& row : f.matrix()) out.push_back(to_json(*f.source().ring(), row));
  return out;
}

json to_json(const HomGroup& h) {
  json gens = json::array();
  for (const auto& g : h.generators()) gens.push_back(to_json(g.f0()));
  return {{"log_size", h.log_size()}, {"orders", h.orders()}, {"generators", gens}};
}

json to_json(const KAlgebra& a) {
  return {{"dim", a.dim()}, {"labels", a.labels()}, {"structure_constants", a.constants()}, {"unit", a.unit()}};
}

json to_json(const EndQuotient& e) {
  return {{"end", to_json(e.endomorphisms())}, {"ideal", to_json(e.ideal())}, {"algebra", to_json(e.algebra())}};
}

RingDescriptor ring_from_json(const json& j, const std::string& field) {
  const auto& kind = member(j, field, "kind");
  if (!kind.is_string()) throw InputError(dot(field, "kind"), "expected \"zmod\" or \"truncpoly\"");
  const auto n = static_cast<int>(uint_of(member(j, field, "n"), dot(field, "n")));
  RingDescriptor d;
  if (kind == "zmod") {
    d = RingDescriptor::zmod(uint_of(member(j, field, "p"), dot(field, "p")), n);
  } else if (kind == "truncpoly") {
    d = RingDescriptor::truncpoly(uint_of(member(j, field, "q"), dot(field, "q")), n);
  } else {
    throw InputError(dot(field, "kind"), "expected \"zmod\" or \"truncpoly\"");
  }
  try {
    make_ring(d);
  } catch (const Error& e) {
    throw InputError(field, e.what());
  }
  return d;
}

FieldMatrix matrix_from_json(const json& j, const FiniteField& k, std::size_t cols, const std::string& field) {
  array_of(j, field);
  FieldMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = array_of(j[i], at(field, i));
    if (row.size() != cols) throw InputError(at(field, i), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = uint_of(row[c], at(at(field, i), c));
      if (v >= k.order()) throw InputError(at(at(field, i), c), "field element out of range");
      m(i, c) = static_cast<FieldElem>(v);
    }
  }
  return m;
}

SubPair pair_from_json(const json& j, const RingPtr& ring, const std::string& field) {
  const auto& parts_j = array_of(member(j, field, "M0"), dot(field, "M0"));
  std::vector<int> parts;
  for (std::size_t i = 0; i < parts_j.size(); ++i) {
    const auto p = uint_of(parts_j[i], at(dot(field, "M0"), i));
    if (p < 1 || p > static_cast<std::uint64_t>(ring->length()))
      throw InputError(at(dot(field, "M0"), i), "part must lie in 1..n");
    if (i > 0 && p > static_cast<std::uint64_t>(parts.back()))
      throw InputError(at(dot(field, "M0"), i), "parts must be nonincreasing");
    parts.push_back(static_cast<int>(p));
  }
  const PartitionModule m0(ring, parts);
  std::vector<RingVector> gens;
  if (j.contains("M1")) {
    const auto& rows = array_of(j["M1"], dot(field, "M1"));
    for (std::size_t i = 0; i < rows.size(); ++i)
      gens.push_back(m0.element(ring_row(rows[i], *ring, parts.size(), at(dot(field, "M1"), i))));
  }
  return SubPair(m0, std::move(gens));
}

Triple triple_from_json(const json& j, const FiniteField& k, const std::string& field) {
  const auto m = uint_of(member(j, field, "m"), dot(field, "m"));
  Triple t;
  t.m = m;
  t.V = subspace::span(k, j.contains("V") ? matrix_from_json(j["V"], k, m, dot(field, "V")) : FieldMatrix(0, m));
  t.U = subspace::span(k, j.contains("U") ? matrix_from_json(j["U"], k, 2 * m, dot(field, "U")) : FieldMatrix(0, 2 * m));
  return t;
}

DeltaRep rep_from_json(const json& j, const FiniteField& k, const std::string& field) {
  const auto& dj = array_of(member(j, field, "dims"), dot(field, "dims"));
  if (dj.size() != 3) throw InputError(dot(field, "dims"), "expected three dimensions");
  std::array<std::size_t, 3> d{};
  for (std::size_t i = 0; i < 3; ++i) d[i] = uint_of(dj[i], at(dot(field, "dims"), i));
  const auto read = [&](const char* key, std::size_t cols) {
    auto m = matrix_from_json(member(j, field, key), k, cols, dot(field, key));
    if (m.rows() != d[0]) throw InputError(dot(field, key), "expected " + std::to_string(d[0]) + " rows");
    return m;
  };
  auto a = read("alpha", d[1]);
  auto b = read("beta", d[2]);
  auto g = read("gamma", d[2]);
  return DeltaRep(k, d, std::move(a), std::move(b), std::move(g));
}

TwoMatrixModule two_matrix_from_json(const json& j, const FiniteField& k, const std::string& field) {
  const auto& xj = array_of(member(j, field, "X"), dot(field, "X"));
  const std::size_t d = xj.size();
  auto x = matrix_from_json(xj, k, d, dot(field, "X"));
  auto y = matrix_from_json(member(j, field, "Y"), k, d, dot(field, "Y"));
  if (y.rows() != d) throw InputError(dot(field, "Y"), "expected " + std::to_string(d) + " rows");
  return TwoMatrixModule(k, std::move(x), std::move(y));
}

SubPair object_from_json(const json& j, const RingPtr& ring, const std::string& field) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    const PartitionModule k1(ring, {1});
    if (name == "I") return canonical_I(ring);
    if (name == "J") return canonical_J(ring);
    if (name == "S1") return SubPair(k1, std::vector<RingVector>{});
    if (name == "S2") return SubPair(k1, {k1.generator(0)});
    throw InputError(field, "unknown object name '" + name + "' (expected I, J, S1, S2)");
  }
  return pair_from_json(j, ring, field);
}

}  // namespace chainsub::io
