#ifndef ATLAS_SERIALIZE_HPP
#define ATLAS_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "atlas/admissible.hpp"
#include "atlas/ekor.hpp"
#include "atlas/siegel.hpp"

namespace atlas {

using Json = nlohmann::json;

Json node_list(NodeSet nodes);
Json rational_list(const RationalVector& v);
Json quotient_class_json(const QuotientClass& q);

// {"t": ambient translation, "w": 1-based one-line permutation}; the finite
// part falls back to lattice matrix rows when it is not a coordinate permutation.
Json element_json(const AffineWeylGroup& group, const ExtAffineElement& x);
// "s0s2·tau"-style label; the Omega part is written as "tau" when it equals tau.
std::string element_label(const AffineWeylGroup& group, const ExtAffineElement& x,
                          const ExtAffineElement& tau);

Json admissible_json(const AffineWeylGroup& group, const AdmissibleSet& adm);
Json dl_json(const DLDatum& dl);
Json stratum_json(const AffineWeylGroup& group, const StratumRecord& r);
Json strata_json(const AffineWeylGroup& group, const std::vector<StratumRecord>& records);
Json comparison_json(const AffineWeylGroup& group, const ComparisonTable& table);

std::string admissible_csv(const AffineWeylGroup& group, const AdmissibleSet& adm);
std::string strata_csv(const AffineWeylGroup& group, const std::vector<StratumRecord>& records,
                       const ExtAffineElement& tau);
std::string comparison_csv(const AffineWeylGroup& group, const ComparisonTable& table,
                           const ExtAffineElement& tau);

std::string admissible_text(const AffineWeylGroup& group, const AdmissibleSet& adm);
std::string strata_text(const AffineWeylGroup& group, const std::vector<StratumRecord>& records,
                        const ExtAffineElement& tau);
std::string comparison_text(const AffineWeylGroup& group, const ComparisonTable& table,
                            const ExtAffineElement& tau);

// Hasse diagram of Bruhat covers inside Adm, basic elements double-circled.
std::string admissible_dot(const AffineWeylGroup& group, const AdmissibleSet& adm);

}  // namespace atlas

#endif  // ATLAS_SERIALIZE_HPP
