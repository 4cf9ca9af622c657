#pragma once

// Brute-force reference implementations used to cross-check the normal-form
// machinery. Everything here enumerates sets explicitly, so keep inputs tiny.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "chainsub/ring.hpp"
#include "chainsub/ring_matrix.hpp"

namespace chainsub::oracle {

using VecSet = std::set<RingVector>;

inline RingVector reduced(const Ring& r, RingVector v, const std::vector<int>& exps) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.reduce(v[i], exps[i]);
  return v;
}

/// Additive closure of all Λ-multiples of the given vectors.
inline VecSet span(const Ring& r, const std::vector<RingVector>& gens, const std::vector<int>& exps) {
  std::vector<RingVector> moves;
  for (const auto& g : gens)
    for (int k = 0; k < r.length(); ++k)
      for (std::uint64_t c = 1; c < r.residue_field().order(); ++c) {
        RingVector m(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
          m[i] = r.reduce(r.mul(r.mul_t_pow(r.lift(static_cast<FieldElem>(c)), k), g[i]), exps[i]);
        if (!vec::is_zero(m)) moves.push_back(std::move(m));
      }
  VecSet seen{RingVector(exps.size())};
  std::vector<RingVector> frontier{RingVector(exps.size())};
  while (!frontier.empty()) {
    std::vector<RingVector> next;
    for (const auto& v : frontier)
      for (const auto& m : moves) {
        RingVector w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = r.reduce(r.add(v[i], m[i]), exps[i]);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Calls f on every vector of ⊕Λ/t^{e_i}.
inline void for_each_vector(const Ring& r, const std::vector<int>& exps, const std::function<void(const RingVector&)>& f) {
  RingVector v(exps.size());
  while (true) {
    f(v);
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
      if (v[i].code + 1 < r.count(exps[i])) {
        ++v[i].code;
        break;
      }
      v[i].code = 0;
    }
    if (i == v.size()) return;
  }
}

inline std::uint64_t total_size(const Ring& r, const std::vector<int>& exps) {
  std::uint64_t s = 1;
  for (int e : exps) s *= r.count(e);
  return s;
}

/// Partition of a finite Λ-module given as a set closed under addition and
/// the Λ-action: the number of parts >= j is log_q |t^{j-1}S| - log_q |t^j S|.
inline std::vector<int> partition_of(const Ring& r, const VecSet& s, const std::vector<int>& exps) {
  auto log_q = [&](std::size_t size) {
    int e = 0;
    while (size > 1) {
      size /= r.residue_field().order();
      ++e;
    }
    return e;
  };
  std::vector<int> sizes;  // log_q |t^j S|
  for (int j = 0; j <= r.length(); ++j) {
    VecSet img;
    for (const auto& v : s) {
      RingVector w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = r.reduce(r.mul_t_pow(v[i], j), exps[i]);
      img.insert(std::move(w));
    }
    sizes.push_back(log_q(img.size()));
  }
  std::vector<int> parts;
  for (int j = r.length(); j >= 1; --j) {
    const int count_ge_j = (sizes[j - 1] - sizes[j]);
    const int count_ge_j1 = j < r.length() ? sizes[j] - sizes[j + 1] : 0;
    for (int c = 0; c < count_ge_j - count_ge_j1; ++c) parts.push_back(j);
  }
  return parts;
}

}  // namespace chainsub::oracle
