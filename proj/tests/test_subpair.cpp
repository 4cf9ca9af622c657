#include <gtest/gtest.h>

#include <map>
#include <random>

#include "chainsub/errors.hpp"
#include "chainsub/subpair.hpp"
#include "chainsub/oracle.hpp"

using namespace chainsub;

namespace {

RingPtr z2_7() { return make_ring(RingDescriptor::zmod(2, 7)); }

oracle::VecSet elements(const Submodule& u) { return oracle::span(u.ring(), u.rows(), u.parent().partition()); }

SubPair simple_s1(const RingPtr& r) { return SubPair(PartitionModule(r, {1}), std::vector<RingVector>{}); }
SubPair simple_s2(const RingPtr& r) {
  const PartitionModule k(r, {1});
  return SubPair(k, {k.generator(0)});
}

TEST(Canonical, PartitionsAndCokernel) {
  auto r = z2_7();
  const auto i = canonical_I(r), j = canonical_J(r);
  EXPECT_EQ(i.M0.partition(), (std::vector<int>{6, 4, 2}));
  EXPECT_EQ(j.M0.partition(), (std::vector<int>{7, 4, 2}));
  const auto inc = canonical_inclusion(r);
  const auto i0 = inc.f0().image();
  const auto i1 = inc.f0().image(i.M1);
  EXPECT_EQ(i1, t_image(j.M1, 1));
  const auto q0 = quotient_invariants(j.M0, i0);
  EXPECT_EQ(q0.module.partition(), std::vector<int>{1});
  const auto d1 = decompose(j.M1);
  const auto q1 = quotient_invariants(d1.module, d1.embedding.preimage(i1));
  EXPECT_EQ(q1.module.partition(), (std::vector<int>{1, 1}));
  // the induced map J1/I1 → J0/I0 vanishes
  for (const auto& g : j.M1.rows()) EXPECT_TRUE(vec::is_zero(q0.projection.apply(g)));
  EXPECT_THROW(canonical_J(make_ring(RingDescriptor::zmod(2, 6))), InvalidArgument);
}

// |End(I)| over Z/2^7 by explicit set enumeration: f is determined by the
// images of a, b, c, subject to t^6 f(a) = t^4 f(b) = t^2 f(c) = 0 and
// f(I1) ⊆ I1.
TEST(HomPairs, EndOfIMatchesSetEnumeration) {
  auto r = z2_7();
  const auto i = canonical_I(r);
  const auto& m = i.M0;
  const auto i1 = elements(i.M1);
  std::map<RingVector, std::uint64_t> t3a;  // t^3 f(a) ↦ number of choices of f(a)
  std::vector<RingVector> fb, fc;
  oracle::for_each_vector(*r, m.partition(), [&](const RingVector& x) {
    ++t3a[m.t_scale(x, 3)];
    if (vec::is_zero(m.t_scale(x, 4))) fb.push_back(x);
    if (vec::is_zero(m.t_scale(x, 2))) fc.push_back(x);
  });
  std::map<RingVector, std::uint64_t> tc;
  for (const auto& x : fc) ++tc[m.t_scale(x, 1)];
  std::uint64_t count = 0;
  for (const auto& b : fb) {
    const auto t2b = m.t_scale(b, 2);
    std::uint64_t na = 0, nc = 0;
    for (const auto& u : i1) {
      const auto target = m.add(t2b, u);  // t^3 f(a) ∈ t^2 f(b) + I1, likewise t f(c)
      if (auto it = t3a.find(target); it != t3a.end()) na += it->second;
      if (auto it = tc.find(target); it != tc.end()) nc += it->second;
    }
    count += na * nc;
  }
  const auto end = hom_pairs(i, i);
  EXPECT_EQ(count, std::uint64_t{1} << end.log_size());
  EXPECT_EQ(end.log_size(), 26);
}

TEST(HomPairs, SimpleObjects) {
  auto r = z2_7();
  const auto h = hom_pairs(simple_s1(r), simple_s2(r));
  EXPECT_EQ(h.log_size(), 1);
  ASSERT_EQ(h.generators().size(), 1u);
  EXPECT_FALSE(h.generators()[0].is_zero());
  EXPECT_EQ(hom_pairs(simple_s2(r), simple_s1(r)).log_size(), 0);
}

SubPair random_pair(std::mt19937_64& rng, const RingPtr& r, int max_log) {
  std::vector<int> parts;
  int total = 0;
  for (int g = 0; g < 3; ++g) {
    const int p = 1 + static_cast<int>(rng() % 4);
    if (total + p > max_log) break;
    parts.push_back(p);
    total += p;
  }
  std::sort(parts.rbegin(), parts.rend());
  const PartitionModule m(r, parts);
  std::vector<RingVector> gens;
  for (std::size_t g = 0; g < rng() % 3; ++g) {
    RingVector x(parts.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = {rng() % r->count(parts[i])};
    gens.push_back(x);
  }
  return SubPair(m, gens);
}

TEST(HomPairs, AgreesWithExhaustiveMatrixEnumeration) {
  auto r = z2_7();
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 40) {
    const auto m = random_pair(rng, r, 6), n = random_pair(rng, r, 6);
    const HomCoordinates hc(m.M0, n.M0);
    if (hc.space.log_size() > 16) continue;
    ++checked;
    const auto n1 = elements(n.M1);
    const auto group = hom_pairs(m, n);
    std::uint64_t count = 0;
    oracle::for_each_vector(*r, hc.exps(), [&](const RingVector& c) {
      const auto f = hc.from_coords(c);
      bool ok = true;
      for (const auto& g : m.M1.rows()) ok = ok && n1.count(f.apply(g));
      count += ok;
      EXPECT_EQ(group.contains(f), ok);
    });
    EXPECT_EQ(count, std::uint64_t{1} << group.log_size());
  }
}

TEST(HomPairs, AdditivityOverDirectSums) {
  auto r = z2_7();
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_pair(rng, r, 6), b = random_pair(rng, r, 6), p = random_pair(rng, r, 6);
    const auto s = direct_sum(a, b);
    EXPECT_EQ(hom_pairs(s, p).log_size(), hom_pairs(a, p).log_size() + hom_pairs(b, p).log_size());
    EXPECT_EQ(hom_pairs(p, s).log_size(), hom_pairs(p, a).log_size() + hom_pairs(p, b).log_size());
  }
}

TEST(DirectSum, PowerLayoutAndZero) {
  auto r = z2_7();
  const auto i2 = power(canonical_I(r), 2);
  EXPECT_EQ(i2.pair.M0.partition(), (std::vector<int>{6, 6, 4, 4, 2, 2}));
  EXPECT_EQ(i2.position[1], (std::vector<std::size_t>{1, 3, 5}));
  const auto j = canonical_J(r);
  const SubPair zero(PartitionModule(r, {}), std::vector<RingVector>{});
  EXPECT_EQ(direct_sum(j, zero), j);
  const auto sum = direct_sum({j, canonical_I(r)});
  const auto inj = sum.injection(1, canonical_I(r));
  const auto proj = sum.projection(1, canonical_I(r));
  EXPECT_EQ(compose(proj, inj), PairMorphism::identity(canonical_I(r)));
}

TEST(Layers, ValuesOnJ) {
  auto r = z2_7();
  const auto j = canonical_J(r);
  const auto lay = layers(j);
  const auto& m = j.M0;
  EXPECT_EQ(lay[1], Submodule(m, {m.element({{64}, {0}, {0}})}));
  EXPECT_EQ(lay[6], Submodule(m, {m.element({{2}, {0}, {0}}), m.generator(1), m.generator(2)}));
  // L1 by direct evaluation of t^4 J0 ∩ t^{-1}0
  oracle::VecSet l1;
  oracle::for_each_vector(*r, m.partition(), [&](const RingVector& x) {
    const auto y = m.t_scale(x, 4);
    if (vec::is_zero(m.t_scale(y, 1))) l1.insert(y);
  });
  EXPECT_EQ(elements(lay[1]), l1);
  for (int i = 1; i < 6; ++i) EXPECT_TRUE(lay[i].is_subset_of(lay[i + 1]));
}

TEST(ISocle, EndpointsHaveRankOne) {
  auto r = z2_7();
  const auto i = canonical_I(r), j = canonical_J(r);
  const auto si = i_socle(i);
  EXPECT_EQ(si.rank, 1u);
  EXPECT_EQ(si.L6, Submodule::whole(i.M0));
  EXPECT_EQ(si.M1L3, i.M1);
  const auto sj = i_socle(j);
  EXPECT_EQ(sj.rank, 1u);
  const auto inc = canonical_inclusion(r);
  EXPECT_EQ(sj.L6, inc.f0().image());
  EXPECT_EQ(sj.M1L3, inc.f0().image(i.M1));
  EXPECT_THROW(i_socle(simple_s1(r)), DecompositionFailed);
}

TEST(CheckInterval, Endpoints) {
  auto r = z2_7();
  const auto fj = check_interval(canonical_J(r), 1);
  EXPECT_EQ(fj.V, FieldMatrix::identity(1));
  EXPECT_EQ(fj.U, FieldMatrix::identity(2));
  const auto fi = check_interval(canonical_I(r), 1);
  EXPECT_EQ(fi.V.rows(), 0u);
  EXPECT_EQ(fi.U.rows(), 0u);
  EXPECT_THROW(check_interval(simple_s1(r), 1), NotInInterval);
  EXPECT_THROW(check_interval(canonical_J(r), 2), NotInInterval);
}

TEST(HomThroughI, ContainsEverythingFromI) {
  for (auto desc : {RingDescriptor::zmod(2, 7), RingDescriptor::truncpoly(3, 7)}) {
    auto r = make_ring(desc);
    const auto i = canonical_I(r), j = canonical_J(r);
    EXPECT_EQ(hom_through_I(i, j).subgroup(), hom_pairs(i, j).subgroup());
    EXPECT_EQ(hom_through_I(i, i).subgroup(), hom_pairs(i, i).subgroup());
    const auto ideal = hom_through_I(j, j);
    EXPECT_TRUE(ideal.contains(ModMorphism::zero(j.M0, j.M0)));
    EXPECT_FALSE(ideal.contains(ModMorphism::identity(j.M0)));
  }
}

}  // namespace
