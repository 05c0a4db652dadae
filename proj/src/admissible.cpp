#include "atlas/admissible.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace atlas {

void AdmissibleSet::rebuild_index() {
  index_.clear();
  index_.insert(elements.begin(), elements.end());
}

ParahoricLabel::ParahoricLabel(const AffineWeylGroup& group, NodeSet nodes) : nodes_(nodes) {
  if (!nodes.subset_of(group.all_nodes()))
    throw std::invalid_argument("ParahoricLabel: node out of range in " + nodes.to_string());
  if (group.frobenius_map()(nodes) != nodes)
    throw std::invalid_argument("ParahoricLabel: " + nodes.to_string() + " is not sigma-stable");
  if (!is_finite_parabolic(group.diagram(), nodes))
    throw std::invalid_argument("ParahoricLabel: " + nodes.to_string() +
                                " contains a whole affine component");
}

std::vector<ParahoricLabel> all_parahoric_labels(const AffineWeylGroup& group) {
  std::vector<ParahoricLabel> out;
  const std::uint64_t limit = std::uint64_t{1} << group.node_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    NodeSet k = NodeSet::from_bits(bits);
    if (group.frobenius_map()(k) == k && is_finite_parabolic(group.diagram(), k))
      out.emplace_back(group, k);
  }
  return out;
}

namespace {

void collect_subwords(const AffineWeylGroup& group, const std::vector<int>& word, std::size_t pos,
                      const ExtAffineElement& prefix, const ExtAffineElement& omega,
                      std::unordered_set<ExtAffineElement, ElementHash>& out) {
  if (pos == word.size()) {
    out.insert(group.multiply(prefix, omega));
    return;
  }
  collect_subwords(group, word, pos + 1, prefix, omega, out);
  collect_subwords(group, word, pos + 1,
                   group.multiply(prefix, group.simple_reflection(word[pos])), omega, out);
}

}  // namespace

AdmissibleSet admissible_set(const AffineWeylGroup& group, const IntVector& mu) {
  AdmissibleSet adm;
  adm.mu = mu;
  adm.tau = group.tau_of_mu(mu);
  std::unordered_set<ExtAffineElement, ElementHash> seen;
  const Rational top = dot(group.datum().two_rho(), to_rational(mu));
  for (const IntVector& lambda : group.weyl_orbit(mu)) {
    ExtAffineElement t = group.translation(lambda);
    ReducedDecomposition rd = group.reduced_word(t);
    if (Rational(static_cast<Int>(rd.word.size())) != top)
      throw std::logic_error("admissible_set: translation length differs from <mu, 2 rho>");
    if (rd.omega != adm.tau)
      throw std::logic_error("admissible_set: translation outside W_a tau");
    adm.maximal.push_back(t);
    collect_subwords(group, rd.word, 0, group.identity(), rd.omega, seen);
  }
  adm.elements = canonical_sort(group, {seen.begin(), seen.end()});
  adm.maximal = canonical_sort(group, std::move(adm.maximal));
  adm.rebuild_index();
  return adm;
}

bool is_left_minimal(const AffineWeylGroup& group, const ExtAffineElement& x, NodeSet k) {
  const int len = group.length(x);
  for (int s : k.to_vector())
    if (group.length(group.multiply(group.simple_reflection(s), x)) < len)
      return false;
  return true;
}

ExtAffineElement double_coset_minimum(const AffineWeylGroup& group, ExtAffineElement x, NodeSet k) {
  int len = group.length(x);
  for (bool moved = true; moved;) {
    moved = false;
    for (int s : k.to_vector()) {
      ExtAffineElement left = group.multiply(group.simple_reflection(s), x);
      if (group.length(left) < len) {
        x = std::move(left);
        --len;
        moved = true;
      }
      ExtAffineElement right = group.multiply(x, group.simple_reflection(s));
      if (group.length(right) < len) {
        x = std::move(right);
        --len;
        moved = true;
      }
    }
  }
  return x;
}

namespace {

std::vector<ExtAffineElement> two_sided_closure(const AffineWeylGroup& group,
                                                const std::vector<ExtAffineElement>& start,
                                                NodeSet k) {
  std::unordered_set<ExtAffineElement, ElementHash> seen(start.begin(), start.end());
  std::deque<ExtAffineElement> queue(start.begin(), start.end());
  while (!queue.empty()) {
    ExtAffineElement z = queue.front();
    queue.pop_front();
    for (int s : k.to_vector()) {
      const ExtAffineElement& r = group.simple_reflection(s);
      for (ExtAffineElement y : {group.multiply(r, z), group.multiply(z, r)})
        if (seen.insert(y).second)
          queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

AdmVariants adm_variants(const AffineWeylGroup& group, const AdmissibleSet& adm,
                         const ParahoricLabel& k) {
  AdmVariants out;
  std::vector<ExtAffineElement> closure = two_sided_closure(group, adm.elements, k.nodes());
  std::unordered_set<ExtAffineElement, ElementHash> reps;
  for (const auto& z : closure)
    reps.insert(double_coset_minimum(group, z, k.nodes()));
  out.adm_k = canonical_sort(group, std::move(closure));
  out.double_coset_reps = canonical_sort(group, {reps.begin(), reps.end()});
  return out;
}

std::vector<ExtAffineElement> kw_elements(const AffineWeylGroup& group, const AdmissibleSet& adm,
                                          const ParahoricLabel& k, bool cross_check) {
  std::vector<ExtAffineElement> out;
  for (const auto& x : adm.elements)
    if (is_left_minimal(group, x, k.nodes()))
      out.push_back(x);
  if (cross_check && !k.nodes().empty()) {
    std::vector<ExtAffineElement> closure = two_sided_closure(group, adm.elements, k.nodes());
    std::size_t minimal_in_closure = 0;
    for (const auto& z : closure)
      if (is_left_minimal(group, z, k.nodes())) {
        ++minimal_in_closure;
        if (!adm.contains(z))
          throw std::logic_error("kw_elements: Adm^K ∩ ^K W~ has an element outside Adm");
      }
    if (minimal_in_closure != out.size())
      throw std::logic_error("kw_elements: Adm ∩ ^K W~ differs from Adm^K ∩ ^K W~");
  }
  return out;  // already in canonical order
}

std::vector<StraightClass> straight_classes(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  const NewtonPoint mu_bar = group.mu_bar(adm.mu);
  const Pi1Class mu_class = group.kottwitz(adm.mu);

  std::map<std::pair<NewtonPoint, Pi1Class>, StraightClass> by_key;
  for (const auto& x : adm.elements) {
    NewtonPoint nu = group.newton_vector(x);
    if (Rational(group.length(x)) != group.pair_with_two_rho(nu))
      continue;
    Pi1Class kappa = group.kottwitz(x);
    auto [it, inserted] = by_key.try_emplace({nu, kappa});
    if (inserted) {
      it->second.newton = nu;
      it->second.kottwitz = kappa;
      it->second.representative = x;
    }
    it->second.members.push_back(x);
  }

  std::vector<StraightClass> classes;
  for (auto& [key, cls] : by_key) {
    if (cls.kottwitz != mu_class)
      throw std::logic_error("straight_classes: class with kappa != mu^natural");
    if (!group.newton_leq(cls.newton, mu_bar))
      throw std::logic_error("straight_classes: class with nu not below mu-bar");
    classes.push_back(std::move(cls));
  }

  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < classes.size() && minimal; ++j)
      if (j != i && group.newton_leq(classes[j].newton, classes[i].newton))
        minimal = false;
    if (minimal)
      minima.push_back(i);
  }
  if (minima.size() != 1)
    throw std::logic_error("straight_classes: the Newton order has no unique minimum");
  StraightClass& basic = classes[minima.front()];
  basic.basic = true;
  if (basic.newton != group.newton_vector(adm.tau) || basic.kottwitz != group.kottwitz(adm.tau))
    throw std::logic_error("straight_classes: basic class does not contain tau");

  std::sort(classes.begin(), classes.end(), [&](const StraightClass& a, const StraightClass& b) {
    Rational pa = group.pair_with_two_rho(a.newton), pb = group.pair_with_two_rho(b.newton);
    if (pa != pb)
      return pa < pb;
    return a.newton < b.newton;
  });
  return classes;
}

}  // namespace atlas
