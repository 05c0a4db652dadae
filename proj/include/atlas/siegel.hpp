#ifndef ATLAS_SIEGEL_HPP
#define ATLAS_SIEGEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atlas/admissible.hpp"
#include "atlas/affine_weyl.hpp"
#include "atlas/ekor.hpp"

namespace atlas {

// GSp_2g on X = {x in Z^2g : x_1 + x_2g = ... = x_g + x_{g+1}}, simple roots
// x_i - x_{i+1}, with the permutation probe (2g, ..., 1).
RootDatumInput siegel_datum(int g);

// The Siegel context with mu = (1^g, 0^g). Construction checks the explicit
// formulas for s_0..s_g and tau, the C~_g diagram and the node exchange
// i <-> g - i under Ad(tau) ∘ sigma, throwing std::logic_error on failure.
class SiegelContext {
public:
  explicit SiegelContext(int g);

  SiegelContext(const SiegelContext&) = delete;
  SiegelContext& operator=(const SiegelContext&) = delete;

  int g() const { return g_; }
  const AffineWeylGroup& group() const { return *group_; }
  const IntVector& mu() const { return mu_; }  // lattice coordinates
  const ExtAffineElement& tau() const { return tau_; }
  const AdmissibleSet& adm() const { return adm_; }
  ParahoricLabel iwahori() const { return ParahoricLabel::iwahori(*group_); }
  ParahoricLabel hyperspecial() const { return {*group_, NodeSet::range(1, g_)}; }
  // The generators S~ - {s_c, s_{g-c}} of W_{c, g-c}.
  NodeSet complement_of_pair(int c) const;

  // ^gW: finite Weyl elements without left descents in s_1..s_{g-1}, canonical order.
  const std::vector<ExtAffineElement>& minimal_reps() const { return gw_; }

private:
  int g_;
  std::unique_ptr<AffineWeylGroup> group_;
  IntVector mu_;
  ExtAffineElement tau_;
  AdmissibleSet adm_;
  std::vector<ExtAffineElement> gw_;
};

// Least c <= g/2 with supp(x tau^{-1}) inside S~ - {s_c, s_{g-c}}.
std::optional<int> basic_closed_form(const SiegelContext& ctx, const ExtAffineElement& x);

// ^cW inside W_g: minimal representatives of S_c \ W_c computed in genus c,
// relettered by s_j -> s_{j+g-c}. Checked against the elements of ^gW
// supported on s_{g-c+1}..s_g and, when c <= g/2, against W_{c,g-c} ∩ ^gW.
std::vector<ExtAffineElement> cW_embed(const SiegelContext& ctx, int c);

// w -> tau w, checked to land in Adm ∩ ^K W~ for K hyperspecial.
ExtAffineElement eo_correspondence(const SiegelContext& ctx, const ExtAffineElement& w);

struct EOElement {
  std::optional<int> c;  // least c <= g/2 with w in ^cW
  std::vector<int> word;
  ExtAffineElement w;
  ExtAffineElement image;  // tau w
};

// All of ^gW with their images; throws std::logic_error unless w -> tau w is
// a bijection onto Adm ∩ ^K W~ (K hyperspecial).
std::vector<EOElement> eo_elements(const SiegelContext& ctx);

struct EOClosedForm {
  NodeSet supp;   // {s_0..s_{c-1}} ∪ {s_{g-c+1}..s_g}
  NodeSet i_set;  // {s_{c+1}..s_{g-c-1}}
};
EOClosedForm eo_closed_forms(const SiegelContext& ctx, int c);

enum class CompareMode { gortz_yu, hoeve };
std::string to_string(CompareMode mode);
std::optional<CompareMode> parse_compare_mode(const std::string& name);

struct ComparisonRow {
  ExtAffineElement x;
  std::vector<int> word;         // reduced word of x
  std::vector<int> finite_word;  // hoeve: the element of ^cW
  int c = 0;
  DLDatum generic;
  NodeSet closed_ambient;
  NodeSet closed_parabolic;
  std::string stratum_label;  // gortz-yu: A_{J,tau}; hoeve: A_{{c,g-c},tau}
  bool agrees = true;
};

struct ComparisonTable {
  CompareMode mode;
  int g = 0;
  std::vector<ComparisonRow> rows;
  std::vector<std::string> mismatches;
};

ComparisonTable compare_reports(const SiegelContext& ctx, CompareMode mode);

}  // namespace atlas

#endif  // ATLAS_SIEGEL_HPP
