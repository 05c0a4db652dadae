#ifndef ATLAS_ORACLES_HPP
#define ATLAS_ORACLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "atlas/admissible.hpp"
#include "atlas/affine_weyl.hpp"

// Brute-force cross-checks that avoid the fast paths they test. Shared by
// the test suite and `atlas check`.
namespace atlas::oracle {

struct Result {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void fail(std::string message);
};

// Word-length BFS in the Cayley graph of W_a up to the given radius,
// compared with length(y * omega) for each omega, plus l(ys) = l(y) ± 1.
Result bfs_length(const AffineWeylGroup& group, int radius,
                  const std::vector<ExtAffineElement>& omegas);

// bruhat_leq on all pairs of Adm against the subword property over a fixed
// reduced word of the larger element.
Result subword_bruhat(const AffineWeylGroup& group, const AdmissibleSet& adm);

// i_set against the largest of all subsets K' ⊆ K with Ad(x)sigma(K') ⊆ K',
// for every sigma-stable K and x in Adm.
Result subset_i_set(const AffineWeylGroup& group, const AdmissibleSet& adm);

// BFS order of W_J, declared infinite once a word longer than the longest
// element of any finite Coxeter group of rank |J| is needed.
// Returns 0 for infinite groups.
std::size_t parabolic_order_bfs(const AffineWeylGroup& group, NodeSet j);
Result parabolic_finiteness(const AffineWeylGroup& group);

// Adm recomputed as {y omega_mu : y in the W_a-ball, y omega_mu <= some t^{w mu}}.
std::vector<ExtAffineElement> adm_by_downward_closure(const AffineWeylGroup& group,
                                                      const AdmissibleSet& adm);

// Classes of sigma-straight elements of Adm under sigma-conjugation by
// elements y omega, l(y) <= max_length, omega in omegas. Returns a class
// index per straight element, in the order of `straight`.
std::vector<int> straight_conjugacy_classes(const AffineWeylGroup& group,
                                            const std::vector<ExtAffineElement>& straight,
                                            int max_length,
                                            const std::vector<ExtAffineElement>& omegas);

// W_a-ball of the given radius with BFS distances.
std::vector<std::pair<ExtAffineElement, int>> ball(const AffineWeylGroup& group, int radius);

}  // namespace atlas::oracle

#endif  // ATLAS_ORACLES_HPP
