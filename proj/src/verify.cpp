#include "chainsub/verify.hpp"

#include <algorithm>

#include "chainsub/errors.hpp"
#include "chainsub/oracle.hpp"

namespace chainsub::verify {

namespace {

using oracle::VecSet;

int log_q(const Ring& r, std::size_t size) {
  int e = 0;
  while (size > 1) {
    size /= r.residue_field().order();
    ++e;
  }
  return e;
}

VecSet elements(const Submodule& u) { return oracle::span(u.ring(), u.rows(), u.parent().partition()); }

RingVector random_vector(const Ring& r, const std::vector<int>& exps, std::mt19937_64& rng) {
  RingVector v(exps.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {rng() % r.count(exps[i])};
  return v;
}

RingVector random_element(const Submodule& u, std::mt19937_64& rng) {
  const Ring& r = u.ring();
  RingVector x = u.parent().zero();
  for (const auto& row : u.rows()) vec::axpy(r, x, {rng() % r.count(r.length())}, row, u.parent().partition());
  return x;
}

FieldMatrix random_matrix(const FiniteField& k, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FieldMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<FieldElem>(rng() % k.order());
  return m;
}

FieldMatrix random_invertible(const FiniteField& k, std::size_t d, std::mt19937_64& rng) {
  FieldMatrix m;
  do m = random_matrix(k, d, d, rng);
  while (!is_invertible(k, m));
  return m;
}

DeltaRep random_rep(const FiniteField& k, std::size_t max_dim, std::mt19937_64& rng) {
  const std::array<std::size_t, 3> d{rng() % (max_dim + 1), rng() % (max_dim + 1), rng() % (max_dim + 1)};
  return DeltaRep(k, d, random_matrix(k, d[0], d[1], rng), random_matrix(k, d[0], d[2], rng),
                  random_matrix(k, d[0], d[2], rng));
}

/// Random exponent vector over Z/2^n with Σ e ≤ budget.
std::vector<int> random_exps(const Ring& r, std::size_t cols, int budget, std::mt19937_64& rng) {
  std::vector<int> e;
  int total = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    const int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(r.length()));
    if (total + x > budget) break;
    e.push_back(x);
    total += x;
  }
  if (e.empty()) e.push_back(1);
  return e;
}

RingPtr small_ring(std::size_t i) {
  static const int lengths[] = {2, 3, 7};
  return make_ring(RingDescriptor::zmod(2, lengths[i % 3]));
}

PartitionModule random_module(const RingPtr& ring, int max_log, std::mt19937_64& rng) {
  auto parts = random_exps(*ring, 1 + rng() % 3, max_log, rng);
  std::sort(parts.rbegin(), parts.rend());
  return PartitionModule(ring, parts);
}

Submodule random_submodule(const PartitionModule& m, std::mt19937_64& rng) {
  std::vector<RingVector> gens;
  const std::size_t count = rng() % 3;
  for (std::size_t g = 0; g < count; ++g) gens.push_back(random_vector(*m.ring(), m.partition(), rng));
  return Submodule(m, gens);
}

std::vector<FieldElem> flatten(const DeltaMorphism& g, bool vertex1) {
  std::vector<FieldElem> v;
  std::vector<const FieldMatrix*> parts{&g.g2, &g.g3};
  if (vertex1) parts.insert(parts.begin(), &g.g1);
  for (const auto* m : parts)
    for (std::size_t i = 0; i < m->rows(); ++i) v.insert(v.end(), m->row(i).begin(), m->row(i).end());
  return v;
}

FieldMatrix columns(const std::vector<std::vector<FieldElem>>& cols, std::size_t rows) {
  FieldMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

FieldMatrix block_diagonal(const FiniteField&, const FieldMatrix& f) {
  const std::size_t d = f.rows();
  FieldMatrix g(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = g(d + i, d + j) = f(i, j);
  return g;
}

std::string describe(const Ring& r) { return r.descriptor().to_string(); }

/// Generators of the radical of End(I): g − λ(g)·1 for each generator g,
/// with λ(g) the scalar making it nilpotent, together with t·1.
std::vector<PairMorphism> end_radical(const SubPair& i) {
  const Ring& r = *i.ring();
  const auto& k = r.residue_field();
  const auto id = PairMorphism::identity(i);
  std::vector<PairMorphism> out{scale(r.t(), id)};
  const auto end = hom_pairs(i, i);
  for (const auto& g : end.generators()) {
    bool found = false;
    for (FieldElem l = 0; l < k.order() && !found; ++l) {
      const auto e = add(g, scale(r.neg(r.lift(l)), id));
      auto p = e;
      for (int sq = 0; sq < 6; ++sq) p = compose(p, p);
      if (p.is_zero()) {
        out.push_back(e);
        found = true;
      }
    }
    if (!found) throw InternalInconsistency("End(I) is not local");
  }
  return out;
}

}  // namespace

Triple random_triple(const FiniteField& k, std::size_t m, std::mt19937_64& rng) {
  const std::size_t gv = rng() % (m + 1), gu = rng() % (2 * m + 1);
  return Triple{m, subspace::random(k, m, gv, rng), subspace::random(k, 2 * m, gu, rng)};
}

std::vector<Triple> all_triples(const FiniteField& k, std::size_t max_m, std::size_t budget) {
  std::vector<Triple> out;
  for (std::size_t m = 0; m <= max_m; ++m) {
    const auto vs = subspace::enumerate_all(k, m);
    const auto us = subspace::enumerate_all(k, 2 * m);
    for (const auto& v : vs)
      for (const auto& u : us) {
        if (out.size() == budget) return out;
        out.push_back(Triple{m, v, u});
      }
  }
  return out;
}

SubPair random_pair(const RingPtr& ring, int max_log, std::mt19937_64& rng) {
  const auto m = random_module(ring, max_log, rng);
  return SubPair(m, random_submodule(m, rng));
}

std::vector<FramedObject> framed_corpus(const RingPtr& ring, std::size_t count, std::size_t max_m,
                                        std::mt19937_64& rng) {
  std::vector<FramedObject> out{check_interval(canonical_I(ring), 1), check_interval(canonical_J(ring), 1)};
  const auto& k = ring->residue_field();
  while (out.size() < count) out.push_back(Phi_object(ring, random_triple(k, 1 + rng() % max_m, rng)));
  return out;
}

Result howell_oracle(std::uint64_t seed, std::size_t instances) {
  Result res{"howell_form agrees with span enumeration"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const auto ring = small_ring(t);
    const Ring& r = *ring;
    const auto exps = random_exps(r, 1 + rng() % 3, 12, rng);
    const auto rand_rows = [&] {
      std::vector<RingVector> rows(rng() % 5);
      for (auto& row : rows) row = random_vector(r, exps, rng);
      return rows;
    };
    const auto a = rand_rows();
    const auto h = howell_rows(r, a, exps);
    const auto span_a = oracle::span(r, a, exps);
    ++res.cases;
    if (oracle::span(r, h, exps) != span_a) res.fail("row span changed on " + describe(r));
    if (howell_rows(r, h, exps) != h) res.fail("not idempotent on " + describe(r));

    auto b = a;
    std::shuffle(b.begin(), b.end(), rng);
    for (int extra = 0; extra < 2 && !a.empty(); ++extra) {
      RingVector x(exps.size());
      for (const auto& row : a) vec::axpy(r, x, {rng() % r.count(r.length())}, row, exps);
      b.push_back(x);
    }
    if (howell_rows(r, b, exps) != h) res.fail("two generating sets of one span gave different forms");
    const auto c = rand_rows();
    if ((howell_rows(r, c, exps) == h) != (oracle::span(r, c, exps) == span_a))
      res.fail("form equality disagrees with span equality");

    const auto hf = howell_form(RingMatrix::from_rows(ring, a, exps.size(), exps));
    for (std::size_t i = 0; i < hf.form.rows(); ++i) {
      RingVector x(exps.size());
      for (std::size_t j = 0; j < a.size(); ++j) vec::axpy(r, x, hf.transform.row(i)[j], a[j], exps);
      if (x != hf.form.row(i)) res.fail("transform does not reproduce the form");
    }
  }
  return res;
}

Result solve_oracle(std::uint64_t seed, std::size_t instances) {
  Result res{"solve_linear agrees with solution-set enumeration"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const auto ring = small_ring(t);
    const Ring& r = *ring;
    const auto exps = random_exps(r, 1 + rng() % 3, 10, rng);
    const std::size_t max_rows = r.length() == 7 ? 2 : 3;
    std::vector<RingVector> rows(rng() % (max_rows + 1));
    for (auto& row : rows) row = random_vector(r, exps, rng);
    RingVector b = random_vector(r, exps, rng);
    if (rng() % 2 == 0) {
      b = RingVector(exps.size());
      for (const auto& row : rows) vec::axpy(r, b, {rng() % r.count(r.length())}, row, exps);
    }
    const auto sol = solve_linear(RingMatrix::from_rows(ring, rows, exps.size(), exps), b);
    const std::vector<int> unknown(rows.size(), r.length());
    const auto apply = [&](const RingVector& x) {
      RingVector y(exps.size());
      for (std::size_t i = 0; i < rows.size(); ++i) vec::axpy(r, y, x[i], rows[i], exps);
      return y;
    };
    VecSet solutions;
    oracle::for_each_vector(r, unknown, [&](const RingVector& x) {
      if (apply(x) == b) solutions.insert(x);
    });
    ++res.cases;
    if (solutions.empty() != !sol) {
      res.fail("solvability disagrees on " + describe(r));
      continue;
    }
    if (!sol) continue;
    if (apply(sol->particular) != b) res.fail("particular solution does not satisfy the system");
    for (const auto& g : sol->kernel)
      if (!vec::is_zero(apply(g))) res.fail("kernel generator is not a solution of the homogeneous system");
    VecSet generated;
    for (const auto& k : oracle::span(r, sol->kernel, unknown))
      generated.insert(vec::add(r, sol->particular, k, unknown));
    if (generated != solutions) res.fail("solution set is not particular + kernel span");
  }
  return res;
}

Result lattice_oracle(std::uint64_t seed, std::size_t instances) {
  Result res{"lattice operations agree with enumeration"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const auto ring = small_ring(t);
    const auto m = random_module(ring, 12, rng);
    const auto& parts = m.partition();
    const auto u = random_submodule(m, rng), w = random_submodule(m, rng);
    const auto eu = elements(u), ew = elements(w);
    ++res.cases;
    if (log_q(*ring, eu.size()) != u.log_size()) res.fail("order of a submodule is wrong");
    if (u.log_size() + w.log_size() != sum(u, w).log_size() + intersect(u, w).log_size())
      res.fail("|U||V| ≠ |U+V||U∩V|");
    VecSet cap;
    for (const auto& x : eu)
      if (ew.count(x)) cap.insert(x);
    if (elements(intersect(u, w)) != cap) res.fail("intersection differs from the set intersection");
    std::vector<RingVector> both(u.rows());
    both.insert(both.end(), w.rows().begin(), w.rows().end());
    if (elements(sum(u, w)) != oracle::span(*ring, both, parts)) res.fail("sum differs from the generated set");
    const int s = 1 + static_cast<int>(rng() % 3);
    VecSet img, pre;
    for (const auto& x : eu) img.insert(m.t_scale(x, s));
    oracle::for_each_vector(*ring, parts, [&](const RingVector& x) {
      if (eu.count(m.t_scale(x, s))) pre.insert(x);
    });
    if (elements(t_image(u, s)) != img) res.fail("t_image differs from enumeration");
    if (elements(t_preimage(u, s)) != pre) res.fail("t_preimage differs from enumeration");
    if (!u.is_subset_of(t_preimage(t_image(u, s), s)) || !t_image(t_preimage(u, s), s).is_subset_of(u))
      res.fail("t_image/t_preimage inclusions fail");
  }
  return res;
}

Result quotient_oracle(std::uint64_t seed, std::size_t instances) {
  Result res{"quotient_invariants agrees with coset analysis"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const auto ring = small_ring(t);
    const Ring& r = *ring;
    const auto m = random_module(ring, 12, rng);
    const auto u = random_submodule(m, rng);
    const auto q = quotient_invariants(m, u);
    // Number of parts ≥ j is log|t^{j-1}M + U| − log|t^j M + U|.
    const int base = log_q(r, elements(u).size());
    std::vector<int> sizes;
    for (int j = 0; j <= r.length() + 1; ++j) {
      std::vector<RingVector> gens(u.rows());
      for (std::size_t i = 0; i < m.rank(); ++i) gens.push_back(m.t_scale(m.generator(i), j));
      sizes.push_back(log_q(r, oracle::span(r, gens, m.partition()).size()) - base);
    }
    std::vector<int> parts;
    for (int j = r.length(); j >= 1; --j) {
      const int ge_j = sizes[j - 1] - sizes[j], ge_j1 = sizes[j] - sizes[j + 1];
      for (int c = 0; c < ge_j - ge_j1; ++c) parts.push_back(j);
    }
    ++res.cases;
    if (q.module.partition() != parts) res.fail("quotient partition differs from coset analysis");
    if (m.log_size() != u.log_size() + q.module.log_size()) res.fail("|M| ≠ |U|·|M/U|");
    if (q.projection.kernel() != u) res.fail("projection kernel is not U");
    for (std::size_t i = 0; i < q.lifts.size(); ++i)
      if (q.projection.apply(q.lifts[i]) != q.module.generator(i)) res.fail("lift does not map to its generator");
  }
  return res;
}

Result hom_group_order(std::uint64_t seed, std::size_t instances) {
  Result res{"hom_group order equals q^Σmin(a_j, b_i)"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const auto ring = small_ring(t);
    const auto m = random_module(ring, 14, rng), n = random_module(ring, 14, rng);
    int expected = 0, counted = 0;
    for (int a : m.partition()) {
      for (int b : n.partition()) expected += std::min(a, b);
      // images of a generator of order t^a: elements of N killed by t^a
      counted += s_socle(n, a).log_size();
    }
    ++res.cases;
    const auto h = hom_group(m, n);
    if (h.log_size() != expected || counted != expected) res.fail("order mismatch");
    for (const auto& g : h.generators)
      for (std::size_t j = 0; j < m.rank(); ++j)
        if (!vec::is_zero(n.t_scale(g.image_of_generator(j), m.partition()[j]))) res.fail("generator is not Λ-linear");
  }
  return res;
}

Result hom_pairs_oracle(std::uint64_t seed, std::size_t instances, int max_log) {
  Result res{"hom_pairs agrees with exhaustive matrix enumeration"};
  std::mt19937_64 rng(seed);
  const auto ring = make_ring(RingDescriptor::zmod(2, 7));
  while (res.cases < instances) {
    const auto m = random_pair(ring, 6, rng), n = random_pair(ring, 6, rng);
    const HomCoordinates hc(m.M0, n.M0);
    if (hc.space.log_size() > max_log) continue;
    ++res.cases;
    const auto n1 = elements(n.M1);
    const auto group = hom_pairs(m, n);
    std::uint64_t count = 0;
    oracle::for_each_vector(*ring, hc.exps(), [&](const RingVector& c) {
      const auto f = hc.from_coords(c);
      bool ok = true;
      for (const auto& g : m.M1.rows()) ok = ok && n1.count(f.apply(g));
      count += ok;
      if (group.contains(f) != ok) res.fail("membership disagrees with enumeration");
    });
    if (count != (std::uint64_t{1} << group.log_size())) res.fail("group order disagrees with enumeration");
  }
  return res;
}

Result layers_and_socle(const std::vector<FramedObject>& corpus) {
  Result res{"layer chain and I-socle components"};
  for (const auto& obj : corpus) {
    ++res.cases;
    const auto lay = layers(obj.realized);
    for (int i = 1; i < 6; ++i)
      if (!lay[i].is_subset_of(lay[i + 1])) res.fail("L" + std::to_string(i) + " ⊄ L" + std::to_string(i + 1));
    const auto soc = i_socle(obj.realized);
    if (soc.L6 != lay[6]) res.fail("I-socle ambient part is not L6M");
    if (soc.M1L3 != intersect(obj.realized.M1, lay[3])) res.fail("I-socle submodule part is not M1 ∩ L3M");
    if (soc.rank != obj.m) res.fail("I-socle rank differs from the frame rank");
  }
  return res;
}

Result maps_from_I(const std::vector<FramedObject>& corpus) {
  Result res{"maps from I land in the I-socle"};
  for (const auto& obj : corpus) {
    ++res.cases;
    const auto soc = i_socle(obj.realized);
    const auto i = canonical_I(obj.realized.ring());
    const auto from_i = hom_pairs(i, obj.realized);
    for (const auto& h : from_i.generators()) {
      if (!h.f0().image().is_subset_of(soc.L6)) res.fail("image of I0 leaves L6M");
      if (!h.f0().image(i.M1).is_subset_of(soc.M1L3)) res.fail("image of I1 leaves M1 ∩ L3M");
    }
  }
  return res;
}

Result ideal_compatibility(const std::vector<FramedObject>& corpus) {
  Result res{"Hom(-,-)_I is closed under composition"};
  for (std::size_t s = 0; s + 1 < corpus.size(); ++s) {
    const auto& m = corpus[s].realized;
    const auto& n = corpus[s + 1].realized;
    const auto ideal = hom_through_I(m, n);
    const auto end_m = hom_pairs(m, m), end_n = hom_pairs(n, n);
    const std::size_t cap = 4;
    ++res.cases;
    for (std::size_t a = 0; a < std::min(cap, end_n.generators().size()); ++a)
      for (std::size_t h = 0; h < std::min(cap, ideal.generators().size()); ++h)
        for (std::size_t b = 0; b < std::min(cap, end_m.generators().size()); ++b) {
          const auto f = compose(end_n.generators()[a], compose(ideal.generators()[h], end_m.generators()[b]));
          if (!ideal.contains(f.f0())) res.fail("a composite with an ideal element left the ideal");
        }
  }
  return res;
}

Result socle_pairs(const RingPtr& ring, std::size_t max_dim) {
  Result res{"pairs with t·M0 = 0 and dim M0 ≤ " + std::to_string(max_dim) + ": indecomposables are S1 and S2"};
  const auto& k = ring->residue_field();
  const Ring& r = *ring;
  const PartitionModule simple(ring, {1});
  const SubPair s1(simple, std::vector<RingVector>{}), s2(simple, {simple.generator(0)});
  const auto isomorphic = [](const SubPair& a, const SubPair& b) {
    const auto ab = hom_pairs(a, b), ba = hom_pairs(b, a);
    const auto ida = PairMorphism::identity(a), idb = PairMorphism::identity(b);
    bool found = false;
    ab.for_each([&](const PairMorphism& f) {
      if (found) return;
      ba.for_each([&](const PairMorphism& g) {
        if (!found && compose(g, f) == ida && compose(f, g) == idb) found = true;
      });
    });
    return found;
  };
  std::size_t indecomposable = 0;
  for (std::size_t a = 1; a <= max_dim; ++a) {
    const PartitionModule m0(ring, std::vector<int>(a, 1));
    for (const auto& u : subspace::enumerate_all(k, a)) {
      std::vector<RingVector> gens;
      for (std::size_t i = 0; i < u.rows(); ++i) {
        RingVector x(a);
        for (std::size_t j = 0; j < a; ++j) x[j] = r.lift(u(i, j));
        gens.push_back(x);
      }
      const SubPair p(m0, gens);
      ++res.cases;
      // Indecomposable iff the only idempotents of End(p) are 0 and 1.
      const auto id = PairMorphism::identity(p);
      bool split = false;
      hom_pairs(p, p).for_each([&](const PairMorphism& e) {
        if (!split && compose(e, e) == e && !e.is_zero() && !(e == id)) split = true;
      });
      if (split) continue;
      ++indecomposable;
      if (!isomorphic(p, s1) && !isomorphic(p, s2))
        res.fail("indecomposable pair of dimension " + std::to_string(a) + " is neither S1 nor S2");
    }
  }
  if (hom_pairs(s1, s2).log_size() == 0) res.fail("Hom(S1, S2) = 0");
  if (res.passed) res.detail = std::to_string(indecomposable) + " indecomposable pairs found";
  return res;
}

Result delta_additivity(std::uint64_t seed, std::size_t instances) {
  Result res{"delta_hom is additive over direct sums"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const FiniteField k(t % 2 == 0 ? 2 : 3, 1);
    const auto a = random_rep(k, 2, rng), b = random_rep(k, 2, rng), c = random_rep(k, 2, rng);
    const auto s = direct_sum(a, b);
    ++res.cases;
    if (delta_hom(s, c).size() != delta_hom(a, c).size() + delta_hom(b, c).size()) res.fail("not additive in the source");
    if (delta_hom(c, s).size() != delta_hom(c, a).size() + delta_hom(c, b).size()) res.fail("not additive in the target");
  }
  return res;
}

Result profile_invariance(std::uint64_t seed, std::size_t instances) {
  Result res{"simple summand profile is an isomorphism invariant"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const FiniteField k(t % 2 == 0 ? 2 : 3, 1);
    const auto r = random_rep(k, 2, rng);
    const auto g1 = random_invertible(k, r.dims[0], rng), g2 = random_invertible(k, r.dims[1], rng),
               g3 = random_invertible(k, r.dims[2], rng);
    const DeltaRep s(k, r.dims, multiply(k, multiply(k, g1, r.alpha), *inverse(k, g2)),
                     multiply(k, multiply(k, g1, r.beta), *inverse(k, g3)),
                     multiply(k, multiply(k, g1, r.gamma), *inverse(k, g3)));
    ++res.cases;
    const auto w = iso_witness(r, s, seed + t);
    if (!w.witness) res.fail("no witness for a conjugate representation");
    if (simple_summand_profile(r) != simple_summand_profile(s)) res.fail("profile changed under isomorphism");
  }
  return res;
}

Result triple_round_trip(std::uint64_t seed, std::size_t instances) {
  Result res{"triples and representations round trip"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const FiniteField k(t % 2 == 0 ? 2 : 3, 1);
    const auto tr = random_triple(k, 1 + rng() % 3, rng);
    ++res.cases;
    if (rep_to_triple(triple_to_rep(k, tr)) != tr) res.fail("rep_to_triple ∘ triple_to_rep ≠ id");
    const auto r = random_rep(k, 2, rng);
    const auto prof = simple_summand_profile(r);
    if (prof.s2 != 0 || prof.s3 != 0) continue;
    if (!iso_witness(triple_to_rep(k, rep_to_triple(r)), r, seed + t).witness)
      res.fail("triple_to_rep ∘ rep_to_triple is not isomorphic to the input");
  }
  return res;
}

Result gamma_prime_soundness(const std::vector<FramedObject>& corpus) {
  Result res{"γ′ is choice independent, onto L1M, with kernel L3M + tL5M"};
  std::mt19937_64 rng(corpus.size());
  for (const auto& obj : corpus) {
    ++res.cases;
    const Ring& r = obj.ring();
    const FiniteField& k = obj.field();
    const auto& m0 = obj.realized.M0;
    const GammaPrime gp(obj.realized);
    const auto& lay = gp.layers();
    const auto& rows = lay[4].rows();
    const auto kappa = [&](const RingVector& x) { return frame::kappa1(r, obj.m, obj.frame.f0().apply(x)); };

    std::vector<std::vector<FieldElem>> cols;
    for (const auto& c : rows) cols.push_back(kappa(gp(c)));
    const auto images = columns(cols, obj.m);
    if (rank(k, images) != obj.m) res.fail("γ′ is not onto L1M");
    std::vector<RingVector> ker = t_image(lay[4], 1).rows();
    const auto ns = nullspace(k, images);
    for (std::size_t s = 0; s < ns.rows(); ++s) {
      RingVector x = m0.zero();
      for (std::size_t c = 0; c < rows.size(); ++c) vec::axpy(r, x, r.lift(ns(s, c)), rows[c], m0.partition());
      ker.push_back(x);
    }
    if (Submodule(m0, ker) != sum(lay[3], t_image(lay[5], 1))) res.fail("kernel of γ′ is not L3M + tL5M");

    // Each choice set is a coset of a submodule; enumerate it completely at
    // q = 2 and sample it otherwise.
    const auto k1 = intersect(gp.first_choices(), s_socle(m0, 1));
    const auto k2 = intersect(gp.second_choices(), gp.second_target());
    const bool exhaustive = k.order() == 2;
    std::vector<RingVector> inputs(rows.begin(), rows.end());
    for (int extra = 0; extra < 3; ++extra) inputs.push_back(random_element(lay[4], rng));
    for (const auto& c : inputs) {
      const auto expected = gp(c);
      const auto tc = m0.t_scale(c, 1);
      const auto c1_base = gp.first_step(c);
      const auto visit_second = [&](const RingVector& c1) {
        const auto s0 = m0.sub(gp.second_step(c1), c1);
        const auto check = [&](const RingVector& z) {
          const auto s = m0.add(s0, z);
          const auto c2 = m0.add(c1, s);
          if (!gp.second_choices().contains(s) || !gp.second_target().contains(c2))
            res.fail("enumerated second choice is invalid");
          if (m0.t_scale(c2, 2) != expected) res.fail("γ′ depends on the choices");
        };
        if (exhaustive) k2.for_each_element(check);
        else
          for (int i = 0; i < 4; ++i) check(random_element(k2, rng));
      };
      const auto check_first = [&](const RingVector& z) {
        const auto c1 = m0.add(c1_base, z);
        if (!gp.first_choices().contains(m0.sub(c1, tc)) || !vec::is_zero(m0.t_scale(c1, 1)))
          res.fail("enumerated first choice is invalid");
        visit_second(c1);
      };
      if (exhaustive) k1.for_each_element(check_first);
      else
        for (int i = 0; i < 4; ++i) check_first(random_element(k1, rng));
    }
  }
  return res;
}

Result f_phi_identity(const RingPtr& ring, const std::vector<Triple>& triples, std::uint64_t seed) {
  Result res{"F(Φ(W, V, U)) ≅ (W, V, U) over " + describe(*ring)};
  const auto& k = ring->residue_field();
  for (const auto& t : triples) {
    ++res.cases;
    const auto phi = Phi_object(ring, t);
    const auto expected = triple_to_rep(k, t);
    if (F_object(phi) != expected) res.fail("F of the Φ frame differs from the triple");
    const auto reframed = check_interval(phi.realized, t.m);
    if (!iso_witness(F_object(reframed), expected, seed + res.cases).witness)
      res.fail("no isomorphism after recomputing the frame");
  }
  return res;
}

FullnessReport fullness(const FramedObject& m, const FramedObject& n) {
  FullnessReport rep;
  const auto& k = m.field();
  const auto hom = hom_pairs(m.realized, n.realized);
  const auto ideal = hom_through_I(m.realized, n.realized);
  const auto fm = F_object(m), fn = F_object(n);
  const auto basis = delta_hom(fm, fn);
  const auto& hc = hom.coordinates();

  std::vector<std::vector<FieldElem>> full, upper;
  for (const auto& g : hom.generators()) {
    const auto d = F_morphism(m, n, g);
    if (!is_morphism(fm, fn, d)) return rep;
    full.push_back(flatten(d, true));
    upper.push_back(flatten(d, false));
  }
  const std::size_t full_len = fm.dims[0] * fn.dims[0] + fm.dims[1] * fn.dims[1] + fm.dims[2] * fn.dims[2];
  rep.surjective = rank(k, columns(full, full_len)) == basis.size();

  // Kernel modulo maps through S(1)^r: F(f) vanishes at vertices 2 and 3.
  const Ring& r = m.ring();
  std::vector<RingVector> ker;
  for (const auto& g : hom.generators()) ker.push_back(hc.space.t_scale(hc.to_coords(g.f0()), 1));
  const auto ns = nullspace(k, columns(upper, full_len - fm.dims[0] * fn.dims[0]));
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    RingVector x = hc.space.zero();
    for (std::size_t g = 0; g < hom.generators().size(); ++g)
      vec::axpy(r, x, r.lift(ns(s, g)), hc.to_coords(hom.generators()[g].f0()), hc.exps());
    ker.push_back(x);
  }
  rep.kernel_is_ideal = Submodule(hc.space, ker) == ideal.subgroup();

  // Factor everything through one map h: M → I^r whose components give a
  // basis of the top of Hom(M, I) over the local ring End(I).
  const auto i = canonical_I(m.realized.ring());
  const auto to_i = hom_pairs(m.realized, i);
  const auto& hci = to_i.coordinates();
  std::vector<RingVector> radical_part;
  for (const auto& e : end_radical(i))
    for (const auto& h : to_i.generators()) radical_part.push_back(hci.to_coords(compose(e, h).f0()));
  std::vector<const PairMorphism*> chosen;
  for (const auto& h : to_i.generators()) {
    if (Submodule(hci.space, radical_part).contains(hci.to_coords(h.f0()))) continue;
    chosen.push_back(&h);
    radical_part.push_back(hci.to_coords(h.f0()));
  }
  rep.factor_rank = chosen.size();
  const auto ir = power(i, chosen.size());
  std::vector<RingVector> images;
  for (std::size_t j = 0; j < m.realized.M0.rank(); ++j) {
    RingVector w(ir.pair.M0.rank());
    for (std::size_t s = 0; s < chosen.size(); ++s) {
      const auto y = chosen[s]->f0().image_of_generator(j);
      for (std::size_t g = 0; g < 3; ++g) w[ir.position[s][g]] = y[g];
    }
    images.push_back(w);
  }
  const PairMorphism h(m.realized, ir.pair, ModMorphism::from_images(m.realized.M0, ir.pair.M0, images));
  std::vector<RingVector> factored;
  const auto from_ir = hom_pairs(ir.pair, n.realized);
  for (const auto& g : from_ir.generators())
    factored.push_back(hc.to_coords(compose(g.f0(), h.f0())));
  rep.factorization_agrees = Submodule(hc.space, factored) == ideal.subgroup();
  // Nakayama: the chosen maps generate Hom(M, I) over End(I).
  std::vector<RingVector> reached;
  const auto end_i = hom_pairs(i, i);
  for (const auto* c : chosen)
    for (const auto& e : end_i.generators()) reached.push_back(hci.to_coords(compose(e, *c).f0()));
  for (const auto* c : chosen) reached.push_back(hci.to_coords(c->f0()));
  rep.factorization_agrees = rep.factorization_agrees && Submodule(hci.space, reached) == to_i.subgroup();
  return rep;
}

Result fullness_corpus(const std::vector<std::pair<FramedObject, FramedObject>>& pairs) {
  Result res{"Hom(M, N) → Hom(FM, FN) is onto with kernel Hom(M, N)_I"};
  std::size_t max_rank = 0;
  for (const auto& [m, n] : pairs) {
    ++res.cases;
    const auto rep = fullness(m, n);
    max_rank = std::max(max_rank, rep.factor_rank);
    if (!rep.surjective) res.fail("F is not full on a corpus pair");
    if (!rep.kernel_is_ideal) res.fail("kernel differs from the maps factoring through I");
    if (!rep.factorization_agrees) res.fail("factorization through I^r disagrees with hom_through_I");
  }
  if (res.passed) res.detail = "largest factorization rank r = " + std::to_string(max_rank);
  return res;
}

ControlReport control_quotient(const RingPtr& ring, const TwoMatrixModule& v) {
  ControlReport rep;
  const auto& k = v.field;
  const auto obj = Phi_object(ring, G_embed(v).triple);
  const EndQuotient eq(obj);
  const auto comm = commutant_oracle(v, v);
  const auto& alg = eq.algebra();
  rep.quotient_dim = alg.dim();
  rep.commutant_dim = comm.size();
  const std::size_t d = v.d, n = alg.dim();

  bool ok = true;
  std::vector<FieldMatrix> image;
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = F_morphism(obj, obj, eq.basis_element(i)).g2;
    ok = ok && multiply(k, f, v.X) == multiply(k, v.X, f) && multiply(k, f, v.Y) == multiply(k, v.Y, f);
    image.push_back(f);
  }
  for (const auto& g : eq.ideal().generators()) ok = ok && F_morphism(obj, obj, g).g2.is_zero();
  std::vector<std::vector<FieldElem>> flat;
  for (const auto& f : image) {
    std::vector<FieldElem> x;
    for (std::size_t i = 0; i < d; ++i) x.insert(x.end(), f.row(i).begin(), f.row(i).end());
    flat.push_back(x);
  }
  ok = ok && rank(k, columns(flat, d * d)) == comm.size();
  const auto combine_image = [&](const std::vector<FieldElem>& c) {
    FieldMatrix s(d, d);
    for (std::size_t l = 0; l < n; ++l) s = add(k, s, scale(k, c[l], image[l]));
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ok = ok && multiply(k, image[i], image[j]) == combine_image(alg.constants()[i][j]);
  ok = ok && combine_image(alg.unit()) == FieldMatrix::identity(d);
  rep.induced_map_ok = ok;
  return rep;
}

Result control_quotients(const RingPtr& ring, const std::vector<TwoMatrixModule>& modules) {
  Result res{"dim End(M)/End(M)_I equals the commutant dimension over " + describe(*ring)};
  for (const auto& v : modules) {
    ++res.cases;
    const auto rep = control_quotient(ring, v);
    if (rep.quotient_dim != rep.commutant_dim)
      res.fail("quotient dimension " + std::to_string(rep.quotient_dim) + " vs commutant " +
               std::to_string(rep.commutant_dim));
    if (!rep.induced_map_ok) res.fail("F does not induce an algebra isomorphism onto the commutant");
  }
  return res;
}

Result partition_law(const RingPtr& ring, std::size_t max_d, std::uint64_t seed) {
  Result res{"Φ(G(V; X, Y)) has partitions (7^d, 6^d, 4^2d, 2^2d) and (4^2d, 2^2d) over " + describe(*ring)};
  std::mt19937_64 rng(seed);
  const auto& k = ring->residue_field();
  for (std::size_t d = 1; d <= max_d; ++d)
    for (int sample = 0; sample < 3; ++sample) {
      ++res.cases;
      const TwoMatrixModule v(k, sample == 0 ? FieldMatrix(d, d) : random_matrix(k, d, d, rng),
                              sample == 0 ? FieldMatrix(d, d) : random_matrix(k, d, d, rng));
      const auto obj = Phi_object(ring, G_embed(v).triple);
      std::vector<int> p0, p1;
      for (auto [part, count] : {std::pair{7, d}, {6, d}, {4, 2 * d}, {2, 2 * d}}) p0.insert(p0.end(), count, part);
      for (auto [part, count] : {std::pair{4, 2 * d}, {2, 2 * d}}) p1.insert(p1.end(), count, part);
      if (obj.realized.M0.partition() != p0) res.fail("M0 partition is wrong for d = " + std::to_string(d));
      if (decompose(obj.realized.M1).module.partition() != p1)
        res.fail("M1 partition is wrong for d = " + std::to_string(d));
    }
  return res;
}

Result phi_exactness(const RingPtr& ring, std::uint64_t seed, std::size_t instances) {
  Result res{"Φ carries short exact sequences to componentwise exact sequences over " + describe(*ring)};
  std::mt19937_64 rng(seed);
  const auto& k = ring->residue_field();
  for (std::size_t trial = 0; trial < instances; ++trial) {
    ++res.cases;
    const std::size_t m = 2 + trial % 2, s = 1 + rng() % (m - 1);
    const auto t = random_triple(k, m, rng);
    // Sub-triple on the first s coordinates and the quotient on the rest.
    FieldMatrix inc(m, s), proj(m - s, m), inc2(2 * m, 2 * s), proj2(2 * (m - s), 2 * m);
    FieldMatrix sub_w(s, m), sub_ww(2 * s, 2 * m);
    for (std::size_t i = 0; i < s; ++i) {
      inc(i, i) = sub_w(i, i) = inc2(i, i) = inc2(m + i, s + i) = 1;
      sub_ww(i, i) = sub_ww(s + i, m + i) = 1;
    }
    for (std::size_t i = 0; i < m - s; ++i) proj(i, s + i) = proj2(i, s + i) = proj2(m - s + i, m + s + i) = 1;
    const Triple a{s, subspace::image(k, inc.transpose(), subspace::intersect(k, t.V, sub_w)),
                   subspace::image(k, inc2.transpose(), subspace::intersect(k, t.U, sub_ww))};
    const Triple c{m - s, subspace::image(k, proj, t.V), subspace::image(k, proj2, t.U)};
    const auto pa = Phi_object(ring, a), pb = Phi_object(ring, t), pc = Phi_object(ring, c);
    const auto f = Phi_morphism(inc, pa, pb), g = Phi_morphism(proj, pb, pc);
    if (!f.f0().kernel().is_zero()) res.fail("Φ(inclusion) is not injective");
    if (g.f0().image() != Submodule::whole(pc.realized.M0)) res.fail("Φ(projection) is not onto on M0");
    if (f.f0().image() != g.f0().kernel()) res.fail("not exact in the middle on M0");
    if (g.f0().image(pb.realized.M1) != pc.realized.M1) res.fail("Φ(projection) is not onto on M1");
    if (f.f0().image(pa.realized.M1) != intersect(g.f0().kernel(), pb.realized.M1))
      res.fail("not exact in the middle on M1");
  }
  return res;
}

Result lift_independence(const RingPtr& ring, const std::vector<TwoMatrixModule>& modules, std::size_t lifts,
                         std::uint64_t seed) {
  Result res{"end_quotient structure constants are independent of the lift"};
  std::mt19937_64 rng(seed);
  const Ring& r = *ring;
  for (const auto& v : modules) {
    ++res.cases;
    const auto obj = Phi_object(ring, G_embed(v).triple);
    const EndQuotient eq(obj);
    std::vector<FieldMatrix> maps;
    for (const auto& f : commutant_oracle(v, v)) maps.push_back(block_diagonal(v.field, f));
    std::vector<PairMorphism> canonical;
    for (const auto& g : maps) canonical.push_back(Phi_morphism(g, obj, obj));
    const auto reference = eq.algebra_on(canonical);
    for (std::size_t l = 0; l < lifts; ++l) {
      std::vector<PairMorphism> alt;
      for (const auto& g : maps) {
        auto lift = canonical_lift(r, g);
        for (auto& row : lift)
          for (auto& e : row) e = r.add(e, r.mul_t_pow({rng() % r.count(r.length())}, 1));
        alt.push_back(Phi_morphism(g, obj, obj, lift));
      }
      const auto a = eq.algebra_on(alt);
      if (a.constants() != reference.constants() || a.unit() != reference.unit())
        res.fail("structure constants changed under a different lift");
      for (std::size_t i = 0; i < alt.size(); ++i)
        if (eq.coords(alt[i]) != eq.coords(canonical[i])) res.fail("class of Φ(g) depends on the lift");
    }
  }
  return res;
}

std::vector<Result> run_corpus(std::uint64_t seed) {
  std::vector<Result> out;
  out.push_back(howell_oracle(seed, 200));
  out.push_back(solve_oracle(seed + 1, 200));
  out.push_back(lattice_oracle(seed + 2, 100));
  out.push_back(quotient_oracle(seed + 3, 100));
  out.push_back(hom_group_order(seed + 4, 100));
  out.push_back(hom_pairs_oracle(seed + 5, 20, 14));

  std::mt19937_64 rng(seed + 6);
  const auto z2 = make_ring(RingDescriptor::zmod(2, 7));
  const auto f3 = make_ring(RingDescriptor::truncpoly(3, 7));
  auto corpus = framed_corpus(z2, 10, 2, rng);
  const auto corpus3 = framed_corpus(f3, 6, 2, rng);
  out.push_back(layers_and_socle(corpus));
  out.push_back(maps_from_I(corpus));
  out.push_back(ideal_compatibility(corpus));
  out.push_back(socle_pairs(z2, 3));

  out.push_back(delta_additivity(seed + 7, 50));
  out.push_back(profile_invariance(seed + 8, 50));
  out.push_back(triple_round_trip(seed + 9, 50));

  corpus.insert(corpus.end(), corpus3.begin(), corpus3.end());
  out.push_back(gamma_prime_soundness(corpus));
  for (const auto& ring : {z2, f3}) {
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < 12; ++i) triples.push_back(random_triple(ring->residue_field(), 1 + i % 4, rng));
    out.push_back(f_phi_identity(ring, triples, seed));
  }
  std::vector<std::pair<FramedObject, FramedObject>> pairs;
  for (std::size_t i = 0; i < 6; ++i) pairs.emplace_back(corpus[i], corpus[(i + 3) % 10]);
  out.push_back(fullness_corpus(pairs));

  const FiniteField k2(2, 1);
  std::vector<TwoMatrixModule> modules;
  for (std::size_t d = 1; d <= 3; ++d)
    for (int s = 0; s < 2; ++s) modules.emplace_back(k2, random_matrix(k2, d, d, rng), random_matrix(k2, d, d, rng));
  out.push_back(control_quotients(z2, modules));
  for (const auto& ring : {z2, f3}) out.push_back(partition_law(ring, 3, seed));
  out.push_back(phi_exactness(f3, seed, 4));
  out.push_back(lift_independence(z2, {modules[0], modules[2]}, 3, seed));
  return out;
}

}  // namespace chainsub::verify
