#ifndef ATLAS_EKOR_HPP
#define ATLAS_EKOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "atlas/admissible.hpp"
#include "atlas/affine_weyl.hpp"
#include "atlas/coxeter.hpp"

namespace atlas {

struct SigmaSupport {
  NodeSet raw;      // letters of a reduced word of the W_a-part
  NodeSet closure;  // closure under Ad(omega) ∘ sigma, omega the Omega-part
  bool is_finite = true;
};

SigmaSupport supp_sigma(const AffineWeylGroup& group, const ExtAffineElement& x);

// For x in Adm(mu): the EKOR stratum of x lies in the basic locus iff the
// parabolic subgroup generated by the sigma-support is finite.
bool is_basic_stratum(const AffineWeylGroup& group, const ExtAffineElement& x);

// Largest K' ⊆ K with x sigma(K') x^{-1} ⊆ K', as the greatest fixed point
// of K' -> {s in K' : x sigma(s) x^{-1} is a simple reflection in K'}.
NodeSet i_set(const AffineWeylGroup& group, NodeSet k, const ExtAffineElement& x);

// Combinatorial data of the classical Deligne-Lusztig variety attached to
// a basic stratum: the finite group W_ambient with Frobenius Ad(tau) ∘ sigma,
// the parabolic W_parabolic, and the representative word.
struct DLDatum {
  NodeSet ambient;    // supp_sigma(x) ∪ I(K, x, sigma)
  NodeSet parabolic;  // I(K, x, sigma)
  std::vector<int> word;
  DiagramMap frobenius;
  FiniteTypeLabel ambient_type;
  int dimension = 0;
  bool is_sigma_coxeter = false;
  bool frobenius_stabilizes_parabolic = false;
};

// Requires x basic and minimal in W_K x; throws std::invalid_argument
// otherwise and std::logic_error if W_ambient comes out infinite.
DLDatum dl_datum(const AffineWeylGroup& group, NodeSet k, const ExtAffineElement& x);

struct StratumRecord {
  ExtAffineElement w;
  std::vector<int> word;
  int length = 0;
  NodeSet level;
  bool in_kw = true;
  SigmaSupport supp;
  bool is_basic = false;
  NodeSet i_set;
  std::optional<DLDatum> dl;
  // Invariants of the straight class, present when w is sigma-straight.
  std::optional<std::pair<NewtonPoint, Pi1Class>> newton;
};

StratumRecord stratum_record(const AffineWeylGroup& group, const ParahoricLabel& k,
                             const ExtAffineElement& x);

// One record per element of Adm(mu) ∩ ^K W~, in canonical order.
std::vector<StratumRecord> stratum_report(const AffineWeylGroup& group, const AdmissibleSet& adm,
                                          const ParahoricLabel& k);
std::vector<StratumRecord> stratum_report(const AffineWeylGroup& group, const IntVector& mu,
                                          const ParahoricLabel& k);

}  // namespace atlas

#endif  // ATLAS_EKOR_HPP
