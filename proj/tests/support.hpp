#ifndef ATLAS_TESTS_SUPPORT_HPP
#define ATLAS_TESTS_SUPPORT_HPP

#include <array>
#include <memory>
#include <random>
#include <vector>

#include "atlas/siegel.hpp"

namespace atlas::test {

// Siegel contexts are cached per genus; building g = 4 enumerates 633 elements.
inline const SiegelContext& siegel(int g) {
  static std::array<std::unique_ptr<SiegelContext>, 6> cache;
  if (!cache.at(g))
    cache[g] = std::make_unique<SiegelContext>(g);
  return *cache[g];
}

inline IntVector lattice(const AffineWeylGroup& group, const IntVector& ambient) {
  return group.datum().to_lattice(ambient).value();
}

// Element from an ambient translation and a 1-based one-line permutation.
inline ExtAffineElement element(const AffineWeylGroup& group, const IntVector& t,
                                std::vector<int> perm) {
  for (int& p : perm)
    --p;
  return group.from_permutation(t, perm);
}

inline ExtAffineElement word_tau(const SiegelContext& ctx, const std::vector<int>& word) {
  return ctx.group().evaluate(word, ctx.tau());
}

// Random word of the given length in the affine generators, times a power of omega.
inline ExtAffineElement random_element(const AffineWeylGroup& group, std::mt19937_64& rng,
                                       int max_length, const ExtAffineElement& omega) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> node(0, group.node_count() - 1);
  std::uniform_int_distribution<int> power(-2, 2);
  std::vector<int> word(len(rng));
  for (int& s : word)
    s = node(rng);
  ExtAffineElement x = group.evaluate(word);
  int p = power(rng);
  const ExtAffineElement step = p >= 0 ? omega : group.inverse(omega);
  for (int i = 0; i < std::abs(p); ++i)
    x = group.multiply(x, step);
  return x;
}

}  // namespace atlas::test

#endif  // ATLAS_TESTS_SUPPORT_HPP
