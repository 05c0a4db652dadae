#ifndef ATLAS_AFFINE_WEYL_HPP
#define ATLAS_AFFINE_WEYL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "atlas/coxeter.hpp"
#include "atlas/lattice.hpp"
#include "atlas/root_datum.hpp"

namespace atlas {

// t^translation * finite, acting on X by v -> translation + finite(v).
// Both parts are in lattice coordinates.
struct ExtAffineElement {
  IntVector translation;
  IntMatrix finite;
  std::uint64_t context = 0;

  friend bool operator==(const ExtAffineElement&, const ExtAffineElement&) = default;
  friend auto operator<=>(const ExtAffineElement&, const ExtAffineElement&) = default;
};

struct ElementHash {
  std::size_t operator()(const ExtAffineElement& x) const;
};

struct ReducedDecomposition {
  std::vector<int> word;  // node indices; x = s_word[0] ... s_word[k-1] * omega
  ExtAffineElement omega;
};

using Pi1Class = QuotientClass;

// Dominant rational vector of X_Q, in lattice coordinates.
struct NewtonPoint {
  RationalVector coords;

  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
  friend bool operator<(const NewtonPoint& a, const NewtonPoint& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                        b.coords.begin(), b.coords.end());
  }
};

// Extended affine Weyl group X ⋊ W of a root datum, with the base alcove in
// the anti-dominant chamber: s_0 = t^{-theta^vee} s_theta for each component.
//
// Node numbering: node i (1 <= i <= simple count) is the simple reflection of
// simple root i; node 0 is the affine reflection of the first irreducible
// component, further components get nodes simple_count + 1, ... .
//
// The context is immutable after construction apart from the Bruhat memo,
// which is guarded and only ever caches pure results.
class AffineWeylGroup {
public:
  // Throws std::invalid_argument if the datum does not produce an affine
  // Coxeter system.
  explicit AffineWeylGroup(RootDatum datum);

  AffineWeylGroup(const AffineWeylGroup&) = delete;
  AffineWeylGroup& operator=(const AffineWeylGroup&) = delete;

  const RootDatum& datum() const { return datum_; }
  std::uint64_t id() const { return id_; }

  int node_count() const { return static_cast<int>(simple_.size()); }
  NodeSet all_nodes() const { return NodeSet::range(0, node_count() - 1); }
  NodeSet finite_nodes() const { return finite_nodes_; }
  const AffineDiagram& diagram() const { return diagram_; }
  const CoxeterMatrix& coxeter_matrix() const { return diagram_.matrix(); }
  const ExtAffineElement& simple_reflection(int node) const { return simple_.at(node); }
  // Simple-root index of a finite node, nullopt for affine nodes.
  std::optional<std::size_t> simple_root_of(int node) const;

  ExtAffineElement identity() const;
  ExtAffineElement translation(const IntVector& lambda) const;
  ExtAffineElement element(const IntVector& lambda, const IntMatrix& finite) const;
  // From an ambient translation and a one-line permutation (0-based images)
  // of ambient coordinates. Throws if either does not preserve X.
  ExtAffineElement from_permutation(const IntVector& ambient_translation,
                                    const std::vector<int>& permutation) const;

  ExtAffineElement multiply(const ExtAffineElement& x, const ExtAffineElement& y) const;
  ExtAffineElement inverse(const ExtAffineElement& x) const;
  ExtAffineElement evaluate(const std::vector<int>& word, const ExtAffineElement& omega) const;
  ExtAffineElement evaluate(const std::vector<int>& word) const { return evaluate(word, identity()); }
  // sigma(t^l w) = t^{sigma l} sigma w sigma^{-1}
  ExtAffineElement frobenius(const ExtAffineElement& x) const;

  // Number of affine root hyperplanes separating the base alcove from its image.
  int length(const ExtAffineElement& x) const;
  bool is_length_zero(const ExtAffineElement& x) const { return length(x) == 0; }

  // Greedy left descent by smallest node.
  ReducedDecomposition reduced_word(const ExtAffineElement& x) const;
  // Left descent chosen uniformly at random at each step.
  ReducedDecomposition reduced_word(const ExtAffineElement& x, std::mt19937_64& rng) const;
  NodeSet support(const ExtAffineElement& x) const;
  ExtAffineElement omega_part(const ExtAffineElement& x) const { return reduced_word(x).omega; }

  bool bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) const;

  // Class of x in pi_1(G) = X / Q^vee (the Omega-part invariant).
  Pi1Class pi1_class(const ExtAffineElement& x) const { return pi1_.classify(x.translation); }
  Pi1Class pi1_class(const IntVector& lambda) const { return pi1_.classify(lambda); }
  // Kottwitz map to pi_1(G)_Gamma = X / (Q^vee + (sigma - 1) X).
  Pi1Class kottwitz(const ExtAffineElement& x) const { return pi1_gamma_.classify(x.translation); }
  Pi1Class kottwitz(const IntVector& lambda) const { return pi1_gamma_.classify(lambda); }
  const LatticeQuotient& pi1_gamma() const { return pi1_gamma_; }

  // If x is a simple reflection, its node.
  std::optional<int> as_simple_reflection(const ExtAffineElement& x) const;
  // Node permutation s -> omega s omega^{-1} for a length-zero omega.
  DiagramMap conjugation_map(const ExtAffineElement& omega) const;
  // Frobenius on nodes.
  const DiagramMap& frobenius_map() const { return frobenius_nodes_; }
  // Ad(omega) ∘ sigma on nodes.
  DiagramMap twisted_frobenius(const ExtAffineElement& omega) const;

  // (x sigma)^n = t^lambda sigma^n... with trivial finite part and sigma^n = 1.
  struct TwistedPower {
    std::size_t exponent;
    IntVector translation;
  };
  TwistedPower twisted_power(const ExtAffineElement& x) const;
  // x sigma(x) ... sigma^{m-1}(x), i.e. (x sigma)^m with the trailing sigma^m dropped.
  ExtAffineElement twisted_product(const ExtAffineElement& x, std::size_t m) const;
  NewtonPoint newton_vector(const ExtAffineElement& x) const;
  Rational pair_with_two_rho(const NewtonPoint& nu) const;
  bool is_sigma_straight(const ExtAffineElement& x) const;
  // nu_2 - nu_1 is a nonnegative rational combination of simple coroots.
  bool newton_leq(const NewtonPoint& a, const NewtonPoint& b) const;
  // Galois average of a dominant mu (mu itself for split data).
  NewtonPoint mu_bar(const IntVector& mu) const;

  bool is_dominant(const RationalVector& v) const;
  bool is_dominant(const IntVector& v) const { return is_dominant(to_rational(v)); }
  // Dominant W-conjugate of v and the element w with w(v) dominant.
  std::pair<NewtonPoint, IntMatrix> dominantize(const RationalVector& v) const;

  // Unique length-zero element in the class of a dominant mu.
  ExtAffineElement tau_of_mu(const IntVector& mu) const;

  std::vector<IntVector> weyl_orbit(const IntVector& lambda) const;
  // Elements (0, w) for w in the finite Weyl group, by length then word.
  std::vector<ExtAffineElement> finite_weyl_group() const;
  // Elements of W_K; throws std::domain_error when W_K is infinite.
  std::vector<ExtAffineElement> parabolic_subgroup(NodeSet k) const;

  // One-line permutation of the finite part if the datum has a permutation
  // probe and the finite part acts by permuting ambient coordinates.
  std::optional<std::vector<int>> finite_permutation(const ExtAffineElement& x) const {
    return datum_.ambient_permutation(x.finite);
  }

private:
  void check_same(const ExtAffineElement& x) const;
  std::vector<int> left_descents(const ExtAffineElement& x, int len) const;

  RootDatum datum_;
  std::uint64_t id_;
  std::vector<ExtAffineElement> simple_;
  std::vector<std::optional<std::size_t>> node_to_simple_;
  NodeSet finite_nodes_;
  AffineDiagram diagram_;
  DiagramMap frobenius_nodes_;
  LatticeQuotient pi1_;
  LatticeQuotient pi1_gamma_;

  struct PairHash {
    std::size_t operator()(const std::pair<ExtAffineElement, ExtAffineElement>& p) const {
      ElementHash h;
      return h(p.first) * 1000003u ^ h(p.second);
    }
  };
  mutable std::shared_mutex bruhat_mutex_;
  mutable std::unordered_map<std::pair<ExtAffineElement, ExtAffineElement>, bool, PairHash>
      bruhat_memo_;
};

// Canonical order used for all reported lists: by length, then by the
// greedy reduced word, then by the Omega part.
std::vector<ExtAffineElement> canonical_sort(const AffineWeylGroup& group,
                                             std::vector<ExtAffineElement> elements);

}  // namespace atlas

#endif  // ATLAS_AFFINE_WEYL_HPP
