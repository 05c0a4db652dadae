#ifndef ATLAS_ADMISSIBLE_HPP
#define ATLAS_ADMISSIBLE_HPP

#include <unordered_set>
#include <vector>

#include "atlas/affine_weyl.hpp"
#include "atlas/coxeter.hpp"

namespace atlas {

// {x : x <= t^{w mu} for some w in W}.
struct AdmissibleSet {
  IntVector mu;                            // dominant, lattice coordinates
  ExtAffineElement tau;                    // common Omega part
  std::vector<ExtAffineElement> elements;  // canonical order
  std::vector<ExtAffineElement> maximal;   // the translations t^{w mu}

  bool contains(const ExtAffineElement& x) const { return index_.count(x) != 0; }
  std::size_t size() const { return elements.size(); }

  void rebuild_index();

private:
  std::unordered_set<ExtAffineElement, ElementHash> index_;
};

// A standard parahoric level: a sigma-stable K with W_K finite.
class ParahoricLabel {
public:
  // Throws std::invalid_argument if K is not sigma-stable or W_K is infinite.
  ParahoricLabel(const AffineWeylGroup& group, NodeSet nodes);
  static ParahoricLabel iwahori(const AffineWeylGroup& group) { return {group, NodeSet{}}; }

  NodeSet nodes() const { return nodes_; }
  friend bool operator==(const ParahoricLabel&, const ParahoricLabel&) = default;

private:
  NodeSet nodes_;
};

// Every sigma-stable K with W_K finite, in increasing bit order.
std::vector<ParahoricLabel> all_parahoric_labels(const AffineWeylGroup& group);

// Enumerated as the union of subword closures of reduced words of the t^{w mu}.
AdmissibleSet admissible_set(const AffineWeylGroup& group, const IntVector& mu);

bool is_left_minimal(const AffineWeylGroup& group, const ExtAffineElement& x, NodeSet k);
// Minimal element of W_K x W_K, by descending on both sides.
ExtAffineElement double_coset_minimum(const AffineWeylGroup& group, ExtAffineElement x, NodeSet k);

struct AdmVariants {
  std::vector<ExtAffineElement> adm_k;              // W_K Adm W_K
  std::vector<ExtAffineElement> double_coset_reps;  // minimal reps of W_K \ Adm^K / W_K
};

AdmVariants adm_variants(const AffineWeylGroup& group, const AdmissibleSet& adm,
                         const ParahoricLabel& k);

// Adm ∩ ^K W~. When cross_check is set, also computes Adm^K ∩ ^K W~ and
// throws std::logic_error if the two sets differ.
std::vector<ExtAffineElement> kw_elements(const AffineWeylGroup& group, const AdmissibleSet& adm,
                                          const ParahoricLabel& k, bool cross_check = true);

// A straight sigma-conjugacy class meeting Adm, keyed by its invariants.
struct StraightClass {
  NewtonPoint newton;
  Pi1Class kottwitz;
  ExtAffineElement representative;         // shortest straight member, canonical order
  std::vector<ExtAffineElement> members;   // straight elements of Adm with these invariants
  bool basic = false;
};

// Straight classes ordered by <nu, 2 rho>, basic first. Throws
// std::logic_error if the minimum under the Newton order is not unique or
// some class violates kappa = mu^natural, nu <= mu-bar.
std::vector<StraightClass> straight_classes(const AffineWeylGroup& group, const AdmissibleSet& adm);

}  // namespace atlas

#endif  // ATLAS_ADMISSIBLE_HPP
