#include "atlas/ekor.hpp"

#include <stdexcept>

namespace atlas {

SigmaSupport supp_sigma(const AffineWeylGroup& group, const ExtAffineElement& x) {
  ReducedDecomposition rd = group.reduced_word(x);
  SigmaSupport s;
  s.raw = NodeSet::from_vector(rd.word);
  s.closure = orbit_closure(group.twisted_frobenius(rd.omega), s.raw);
  s.is_finite = is_finite_parabolic(group.diagram(), s.closure);
  return s;
}

bool is_basic_stratum(const AffineWeylGroup& group, const ExtAffineElement& x) {
  return supp_sigma(group, x).is_finite;
}

NodeSet i_set(const AffineWeylGroup& group, NodeSet k, const ExtAffineElement& x) {
  const ExtAffineElement x_inv = group.inverse(x);
  // Image node of x sigma(s) x^{-1}, or -1 when it is not a simple reflection.
  std::vector<int> image(group.node_count(), -1);
  for (int s : k.to_vector()) {
    const ExtAffineElement& sigma_s = group.simple_reflection(group.frobenius_map()(s));
    ExtAffineElement conj = group.multiply(group.multiply(x, sigma_s), x_inv);
    if (group.length(conj) == 1)
      image[s] = group.as_simple_reflection(conj).value_or(-1);
  }
  NodeSet cur = k;
  for (;;) {
    NodeSet next;
    for (int s : cur.to_vector())
      if (image[s] >= 0 && cur.contains(image[s]))
        next.insert(s);
    if (next == cur)
      return cur;
    cur = next;
  }
}

DLDatum dl_datum(const AffineWeylGroup& group, NodeSet k, const ExtAffineElement& x) {
  ReducedDecomposition rd = group.reduced_word(x);
  SigmaSupport supp = supp_sigma(group, x);
  if (!supp.is_finite)
    throw std::invalid_argument("dl_datum: stratum is not basic");
  if (!is_left_minimal(group, x, k))
    throw std::invalid_argument("dl_datum: element is not minimal in its W_K coset");

  DLDatum d;
  d.parabolic = i_set(group, k, x);
  d.ambient = supp.closure | d.parabolic;
  if (!is_finite_parabolic(group.diagram(), d.ambient))
    throw std::logic_error("dl_datum: W_{supp ∪ I} is infinite for a basic stratum");
  d.word = rd.word;
  d.frobenius = group.twisted_frobenius(rd.omega);
  d.ambient_type = finite_type_of(group.coxeter_matrix(), d.ambient);
  d.dimension = group.length(x);
  if (d.dimension != static_cast<int>(d.word.size()))
    throw std::logic_error("dl_datum: word length differs from the length");

  std::vector<NodeSet> orbits = d.frobenius.orbits(supp.closure);
  bool one_per_orbit = true;
  for (NodeSet orbit : orbits)
    if ((orbit & supp.raw).size() != 1)
      one_per_orbit = false;
  d.is_sigma_coxeter = one_per_orbit && d.dimension == static_cast<int>(orbits.size());
  d.frobenius_stabilizes_parabolic = d.frobenius(d.parabolic) == d.parabolic;
  return d;
}

StratumRecord stratum_record(const AffineWeylGroup& group, const ParahoricLabel& k,
                             const ExtAffineElement& x) {
  StratumRecord r;
  r.w = x;
  r.word = group.reduced_word(x).word;
  r.length = static_cast<int>(r.word.size());
  r.level = k.nodes();
  r.in_kw = is_left_minimal(group, x, k.nodes());
  r.supp = supp_sigma(group, x);
  r.is_basic = r.supp.is_finite;
  r.i_set = i_set(group, k.nodes(), x);
  if (r.is_basic && r.in_kw)
    r.dl = dl_datum(group, k.nodes(), x);
  NewtonPoint nu = group.newton_vector(x);
  if (Rational(r.length) == group.pair_with_two_rho(nu))
    r.newton = std::make_pair(nu, group.kottwitz(x));
  return r;
}

std::vector<StratumRecord> stratum_report(const AffineWeylGroup& group, const AdmissibleSet& adm,
                                          const ParahoricLabel& k) {
  const Pi1Class kappa_mu = group.kottwitz(adm.mu);
  std::vector<StratumRecord> out;
  for (const auto& x : kw_elements(group, adm, k)) {
    if (group.kottwitz(x) != kappa_mu)
      throw std::logic_error("stratum_report: kappa(w) differs from kappa(tau)");
    out.push_back(stratum_record(group, k, x));
  }
  return out;
}

std::vector<StratumRecord> stratum_report(const AffineWeylGroup& group, const IntVector& mu,
                                          const ParahoricLabel& k) {
  return stratum_report(group, admissible_set(group, mu), k);
}

}  // namespace atlas
