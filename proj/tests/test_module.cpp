#include <gtest/gtest.h>

#include <random>

#include "chainsub/errors.hpp"
#include "chainsub/module.hpp"
#include "chainsub/oracle.hpp"

using namespace chainsub;

namespace {

RingVector v(std::initializer_list<std::uint64_t> xs) {
  RingVector out;
  for (auto x : xs) out.push_back({x});
  return out;
}

oracle::VecSet elements(const Submodule& u) {
  return oracle::span(u.ring(), u.rows(), u.parent().partition());
}

int log2_size(std::size_t s) {
  int e = 0;
  while (s > 1) s /= 2, ++e;
  return e;
}

TEST(HomGroup, ClosedFormExamples) {
  auto r = make_ring(RingDescriptor::zmod(2, 7));
  const PartitionModule a2(r, {2}), a3(r, {3}), a11(r, {1, 1});
  auto h = hom_group(a2, a3);
  ASSERT_EQ(h.generators.size(), 1u);
  EXPECT_EQ(h.orders, std::vector<int>{2});
  EXPECT_EQ(h.generators[0].matrix(), std::vector<RingVector>{v({2})});
  h = hom_group(a3, PartitionModule(r, {2}));
  EXPECT_EQ(h.orders, std::vector<int>{2});
  EXPECT_EQ(h.generators[0].matrix(), std::vector<RingVector>{v({1})});
  h = hom_group(a2, a11);
  EXPECT_EQ(h.orders, (std::vector<int>{1, 1}));
  EXPECT_EQ(h.log_size(), 2);
}

TEST(HomGroup, OrderMatchesExhaustiveMatrixCount) {
  auto r = make_ring(RingDescriptor::zmod(2, 3));
  const PartitionModule m(r, {3, 1}), n(r, {2, 2});
  // count matrices with entries mod t^{b_i} that kill the relations
  int count = 0;
  oracle::for_each_vector(*r, {2, 2, 2, 2}, [&](const RingVector& e) {
    try {
      ModMorphism(m, n, {{e[0], e[1]}, {e[2], e[3]}});
      ++count;
    } catch (const InvalidArgument&) {
    }
  });
  EXPECT_EQ(count, 1 << hom_group(m, n).log_size());
}

TEST(Submodule, GeneratorsOfJ1) {
  auto r = make_ring(RingDescriptor::zmod(2, 7));
  const PartitionModule j0(r, {7, 4, 2});
  EXPECT_TRUE(submodule_from_generators(j0, {}).is_zero());
  const auto j1 = submodule_from_generators(j0, {v({8, 126, 0}), v({0, 2, 3})});
  EXPECT_TRUE(j1.contains(v({64, 0, 0})));
  EXPECT_EQ(j1.log_size(), 7);
  EXPECT_EQ(log2_size(elements(j1).size()), 7);
}

TEST(Lattice, SocleAndLayerExamples) {
  auto r = make_ring(RingDescriptor::zmod(2, 7));
  const PartitionModule j0(r, {7, 4, 2});
  const auto soc = s_socle(j0, 1);
  EXPECT_EQ(soc, submodule_from_generators(j0, {v({64, 0, 0}), v({0, 8, 0}), v({0, 0, 2})}));
  const auto inter = intersect(t_image(Submodule::whole(j0), 3), s_socle(j0, 2));
  EXPECT_EQ(inter, submodule_from_generators(j0, {v({32, 0, 0}), v({0, 8, 0})}));
  // exhaustive evaluation of both sides
  oracle::VecSet expected;
  oracle::for_each_vector(*r, {7, 4, 2}, [&](const RingVector& x) {
    const auto t3x = j0.t_scale(x, 3);
    if (vec::is_zero(j0.t_scale(t3x, 2))) expected.insert(t3x);
  });
  EXPECT_EQ(elements(inter), expected);
  EXPECT_EQ(intersect(inter, inter), inter);
  EXPECT_EQ(sum(inter, Submodule::zero(j0)), inter);
}

TEST(Lattice, RejectsForeignParents) {
  auto r = make_ring(RingDescriptor::zmod(2, 7));
  const PartitionModule a(r, {3}), b(r, {4});
  EXPECT_THROW(sum(Submodule::whole(a), Submodule::whole(b)), ParentMismatch);
}

struct RandomCase {
  RingPtr ring;
  PartitionModule module;
};

RandomCase random_module(std::mt19937_64& rng, int n, int max_log) {
  auto r = make_ring(RingDescriptor::zmod(2, n));
  std::vector<int> parts;
  int total = 0;
  const int rank = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < rank; ++i) {
    const int p = 1 + static_cast<int>(rng() % n);
    if (total + p > max_log) break;
    parts.push_back(p);
    total += p;
  }
  if (parts.empty()) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return {r, PartitionModule(r, parts)};
}

Submodule random_submodule(std::mt19937_64& rng, const PartitionModule& m) {
  std::vector<RingVector> gens;
  const std::size_t count = rng() % 3;
  for (std::size_t g = 0; g < count; ++g) {
    RingVector x(m.rank());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = {rng() % m.ring()->count(m.partition()[i])};
    gens.push_back(x);
  }
  return Submodule(m, gens);
}

TEST(Lattice, RandomizedAgainstEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = trial % 2 == 0 ? 4 : 7;
    const auto [ring, m] = random_module(rng, n, 11);
    const auto u = random_submodule(rng, m), w = random_submodule(rng, m);
    const auto eu = elements(u), ew = elements(w);
    const auto& parts = m.partition();

    EXPECT_EQ(log2_size(eu.size()), u.log_size());
    EXPECT_EQ(u.log_size() + w.log_size(), sum(u, w).log_size() + intersect(u, w).log_size());

    oracle::VecSet cap;
    for (const auto& x : eu)
      if (ew.count(x)) cap.insert(x);
    EXPECT_EQ(elements(intersect(u, w)), cap);

    std::vector<RingVector> both(u.rows());
    both.insert(both.end(), w.rows().begin(), w.rows().end());
    EXPECT_EQ(elements(sum(u, w)), oracle::span(*ring, both, parts));

    const int s = 1 + static_cast<int>(rng() % 3);
    oracle::VecSet img, pre;
    for (const auto& x : eu) img.insert(m.t_scale(x, s));
    oracle::for_each_vector(*ring, parts, [&](const RingVector& x) {
      if (eu.count(m.t_scale(x, s))) pre.insert(x);
    });
    EXPECT_EQ(elements(t_image(u, s)), img);
    EXPECT_EQ(elements(t_preimage(u, s)), pre);
    EXPECT_TRUE(u.is_subset_of(t_preimage(t_image(u, s), s)));
    EXPECT_TRUE(t_image(t_preimage(u, s), s).is_subset_of(u));

    u.for_each_element([&](const RingVector& x) { EXPECT_TRUE(eu.count(x)); });
    std::size_t visited = 0;
    u.for_each_element([&](const RingVector&) { ++visited; });
    EXPECT_EQ(visited, eu.size());
  }
}

// The quotient partition is read off from |t^j M + U| / |U|.
std::vector<int> quotient_partition_oracle(const PartitionModule& m, const Submodule& u) {
  const Ring& r = *m.ring();
  const int base = log2_size(elements(u).size());
  std::vector<int> sizes;
  for (int j = 0; j <= r.length() + 1; ++j) {
    std::vector<RingVector> gens(u.rows());
    for (std::size_t i = 0; i < m.rank(); ++i) gens.push_back(m.t_scale(m.generator(i), j));
    sizes.push_back(log2_size(oracle::span(r, gens, m.partition()).size()) - base);
  }
  std::vector<int> parts;
  for (int j = r.length(); j >= 1; --j) {
    const int ge_j = sizes[j - 1] - sizes[j], ge_j1 = sizes[j] - sizes[j + 1];
    for (int c = 0; c < ge_j - ge_j1; ++c) parts.push_back(j);
  }
  return parts;
}

TEST(Quotient, RandomizedAgainstCosetAnalysis) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [ring, m] = random_module(rng, trial % 2 == 0 ? 4 : 7, 12);
    const auto u = random_submodule(rng, m);
    const auto q = quotient_invariants(m, u);
    EXPECT_EQ(q.module.partition(), quotient_partition_oracle(m, u));
    EXPECT_EQ(m.log_size(), u.log_size() + q.module.log_size());
    // the projection is onto with kernel U, and the lifts map to generators
    EXPECT_EQ(q.projection.kernel(), u);
    EXPECT_EQ(q.projection.image(), Submodule::whole(q.module));
    for (std::size_t i = 0; i < q.lifts.size(); ++i) EXPECT_EQ(q.projection.apply(q.lifts[i]), q.module.generator(i));
  }
}

TEST(Quotient, TrivialQuotient) {
  auto r = make_ring(RingDescriptor::zmod(2, 7));
  const PartitionModule m(r, {5, 3, 3});
  EXPECT_EQ(quotient_invariants(m, Submodule::zero(m)).module.partition(), m.partition());
  EXPECT_TRUE(quotient_invariants(m, Submodule::whole(m)).module.partition().empty());
}

TEST(Decompose, RandomizedPartitionsAndImages) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [ring, m] = random_module(rng, trial % 2 == 0 ? 4 : 7, 12);
    const auto u = random_submodule(rng, m);
    const auto d = decompose(u);
    EXPECT_EQ(d.embedding.image(), u);
    EXPECT_TRUE(d.embedding.kernel().is_zero());
    EXPECT_EQ(d.module.partition(), oracle::partition_of(*ring, elements(u), m.partition()));
    u.for_each_element([&](const RingVector& x) {
      const auto y = preimage_of(d.embedding, x);
      ASSERT_TRUE(y.has_value());
      EXPECT_EQ(d.embedding.apply(*y), x);
    });
  }
}

TEST(Subquotient, CoordinatesAndLifts) {
  auto r = make_ring(RingDescriptor::truncpoly(3, 7));
  const PartitionModule j0(r, {7, 4, 2});
  const auto top = s_socle(j0, 1);
  const Subquotient sq(top, Submodule::zero(j0));
  EXPECT_EQ(sq.dim(), 3u);
  for (FieldElem a = 0; a < 3; ++a)
    for (FieldElem b = 0; b < 3; ++b) {
      const std::vector<FieldElem> c{a, b, 2};
      EXPECT_EQ(sq.coords(sq.lift(c)), c);
    }
  EXPECT_THROW(Subquotient(Submodule::whole(j0), Submodule::zero(j0)), PreconditionViolated);
}

TEST(ModMorphism, ConstraintAndComposition) {
  auto r = make_ring(RingDescriptor::zmod(2, 7));
  const PartitionModule a(r, {2}), b(r, {5});
  EXPECT_THROW(ModMorphism(a, b, {v({1})}), InvalidArgument);
  const ModMorphism f(a, b, {v({8})});
  const ModMorphism g(b, a, {v({3})});
  const auto gf = compose(g, f);
  EXPECT_TRUE(gf.is_zero());
  const auto fg = compose(f, g);
  EXPECT_EQ(fg.matrix(), std::vector<RingVector>{v({24})});
  const HomCoordinates hc(a, b);
  EXPECT_EQ(hc.from_coords(hc.to_coords(f)), f);
}

}  // namespace
