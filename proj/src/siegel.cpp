#include "atlas/siegel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace atlas {

RootDatumInput siegel_datum(int g) {
  if (g < 1)
    throw std::invalid_argument("siegel_datum: genus must be positive");
  const int n = 2 * g;
  RootDatumInput in;
  in.ambient_dim = static_cast<std::size_t>(n);
  for (int k = 0; k < g; ++k) {
    IntVector b(n, 0);
    b[k] = 1;
    b[n - 1 - k] = -1;
    in.lattice_basis.push_back(std::move(b));
  }
  IntVector similitude(n, 0);
  std::fill(similitude.begin() + g, similitude.end(), 1);
  in.lattice_basis.push_back(std::move(similitude));

  // alpha_i^vee is read off from s_i = (i, i+1)(2g-i, 2g+1-i) and s_g = (g, g+1).
  for (int i = 1; i <= g; ++i) {
    IntVector root(n, 0);
    root[i - 1] = 1;
    root[i] = -1;
    in.simple_roots.push_back(std::move(root));
    IntVector coroot(n, 0);
    coroot[i - 1] = 1;
    coroot[i] = -1;
    if (i < g) {
      coroot[n - i - 1] = 1;
      coroot[n - i] = -1;
    }
    in.simple_coroots.push_back(std::move(coroot));
  }
  IntVector probe(n);
  for (int i = 0; i < n; ++i)
    probe[i] = n - i;
  in.permutation_probe = std::move(probe);
  return in;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok)
    throw std::logic_error("siegel: " + what);
}

// 0-based one-line permutation from 1-based transpositions.
std::vector<int> transpositions(int n, std::initializer_list<std::pair<int, int>> swaps) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i)
    p[i] = i;
  for (auto [a, b] : swaps)
    std::swap(p[a - 1], p[b - 1]);
  return p;
}

void check_explicit_formulas(const AffineWeylGroup& group, int g, const ExtAffineElement& tau) {
  const int n = 2 * g;
  const IntVector zero(n, 0);
  for (int i = 1; i < g; ++i)
    require(group.simple_reflection(i) ==
                group.from_permutation(zero, transpositions(n, {{i, i + 1}, {n - i, n + 1 - i}})),
            "s_" + std::to_string(i) + " differs from (i,i+1)(2g-i,2g+1-i)");
  require(group.simple_reflection(g) == group.from_permutation(zero, transpositions(n, {{g, g + 1}})),
          "s_g differs from (g,g+1)");
  IntVector t0(n, 0);
  t0.front() = -1;
  t0.back() = 1;
  require(group.simple_reflection(0) == group.from_permutation(t0, transpositions(n, {{1, n}})),
          "s_0 differs from ((-1,0,...,0,1),(1,2g))");

  IntVector tau_t(n, 0);
  std::fill(tau_t.begin() + g, tau_t.end(), 1);
  std::vector<int> tau_w(n);
  for (int i = 0; i < n; ++i)
    tau_w[i] = (i + g) % n;
  require(tau == group.from_permutation(tau_t, tau_w), "tau differs from ((0^g,1^g),(1,g+1)...)");

  require(group.coxeter_matrix() == affine_c_matrix(g), "Coxeter matrix is not C~_g");
  std::vector<int> exchange(g + 1);
  for (int i = 0; i <= g; ++i)
    exchange[i] = g - i;
  require(group.twisted_frobenius(tau).images() == exchange,
          "Ad(tau) sigma is not the node exchange i <-> g-i");
}

std::vector<ExtAffineElement> no_left_descent_in(const AffineWeylGroup& group, NodeSet k) {
  std::vector<ExtAffineElement> out;
  for (const auto& w : group.finite_weyl_group())
    if (is_left_minimal(group, w, k))
      out.push_back(w);
  return out;
}

using ElementSet = std::unordered_set<ExtAffineElement, ElementHash>;

}  // namespace

SiegelContext::SiegelContext(int g) : g_(g) {
  if (g < 1)
    throw std::invalid_argument("SiegelContext: genus must be positive");
  group_ = std::make_unique<AffineWeylGroup>(RootDatum(siegel_datum(g)));
  IntVector mu_ambient(2 * g, 0);
  std::fill(mu_ambient.begin(), mu_ambient.begin() + g, 1);
  auto mu = group_->datum().to_lattice(mu_ambient);
  require(mu.has_value(), "mu is not in X");
  mu_ = *mu;
  tau_ = group_->tau_of_mu(mu_);
  check_explicit_formulas(*group_, g, tau_);
  adm_ = admissible_set(*group_, mu_);
  gw_ = no_left_descent_in(*group_, NodeSet::range(1, g - 1));
}

NodeSet SiegelContext::complement_of_pair(int c) const {
  NodeSet j = group_->all_nodes();
  j.erase(c);
  j.erase(g_ - c);
  return j;
}

std::optional<int> basic_closed_form(const SiegelContext& ctx, const ExtAffineElement& x) {
  const AffineWeylGroup& group = ctx.group();
  const ExtAffineElement y = group.multiply(x, group.inverse(ctx.tau()));
  if (group.omega_part(y) != group.identity())
    return std::nullopt;
  const NodeSet supp = group.support(y);
  for (int c = 0; 2 * c <= ctx.g(); ++c)
    if (supp.subset_of(ctx.complement_of_pair(c)))
      return c;
  return std::nullopt;
}

std::vector<ExtAffineElement> cW_embed(const SiegelContext& ctx, int c) {
  const int g = ctx.g();
  if (c < 0 || c > g)
    throw std::invalid_argument("cW_embed: c out of range");
  const AffineWeylGroup& group = ctx.group();
  std::vector<ExtAffineElement> out;
  if (c == 0) {
    out.push_back(group.identity());
  } else {
    AffineWeylGroup small{RootDatum(siegel_datum(c))};
    for (const auto& w : no_left_descent_in(small, NodeSet::range(1, c - 1))) {
      std::vector<int> word = small.reduced_word(w).word;
      for (int& s : word)
        s += g - c;
      out.push_back(group.evaluate(word));
    }
    out = canonical_sort(group, std::move(out));
  }

  const NodeSet tail = NodeSet::range(g - c + 1, g);
  std::vector<ExtAffineElement> supported;
  for (const auto& w : ctx.minimal_reps())
    if (group.support(w).subset_of(tail))
      supported.push_back(w);
  require(out == supported, "^cW differs from the elements of ^gW supported on s_{g-c+1}..s_g");

  if (2 * c > g)
    return out;
  const ElementSet gw(ctx.minimal_reps().begin(), ctx.minimal_reps().end());
  std::vector<ExtAffineElement> in_parabolic;
  for (const auto& w : group.parabolic_subgroup(ctx.complement_of_pair(c)))
    if (gw.count(w))
      in_parabolic.push_back(w);
  require(canonical_sort(group, std::move(in_parabolic)) == out, "^cW differs from W_{c,g-c} ∩ ^gW");
  return out;
}

ExtAffineElement eo_correspondence(const SiegelContext& ctx, const ExtAffineElement& w) {
  const AffineWeylGroup& group = ctx.group();
  ExtAffineElement x = group.multiply(ctx.tau(), w);
  require(ctx.adm().contains(x) && is_left_minimal(group, x, ctx.hyperspecial().nodes()),
          "tau w is not in Adm ∩ ^K W~");
  return x;
}

std::vector<EOElement> eo_elements(const SiegelContext& ctx) {
  const AffineWeylGroup& group = ctx.group();
  std::vector<ElementSet> levels;
  for (int c = 0; 2 * c <= ctx.g(); ++c) {
    auto cw = cW_embed(ctx, c);
    levels.emplace_back(cw.begin(), cw.end());
  }
  std::vector<EOElement> out;
  ElementSet images;
  for (const auto& w : ctx.minimal_reps()) {
    EOElement e;
    for (std::size_t c = 0; c < levels.size() && !e.c; ++c)
      if (levels[c].count(w))
        e.c = static_cast<int>(c);
    e.word = group.reduced_word(w).word;
    e.w = w;
    e.image = eo_correspondence(ctx, w);
    require(images.insert(e.image).second, "w -> tau w is not injective");
    out.push_back(std::move(e));
  }
  auto kw = kw_elements(group, ctx.adm(), ctx.hyperspecial());
  require(kw.size() == images.size(), "w -> tau w misses part of Adm ∩ ^K W~");
  return out;
}

EOClosedForm eo_closed_forms(const SiegelContext& ctx, int c) {
  const int g = ctx.g();
  if (c < 0 || 2 * c > g)
    throw std::invalid_argument("eo_closed_forms: need 0 <= c <= g/2");
  return {NodeSet::range(0, c - 1) | NodeSet::range(g - c + 1, g), NodeSet::range(c + 1, g - c - 1)};
}

std::string to_string(CompareMode mode) { return mode == CompareMode::gortz_yu ? "gortz-yu" : "hoeve"; }

std::optional<CompareMode> parse_compare_mode(const std::string& name) {
  if (name == "gortz-yu")
    return CompareMode::gortz_yu;
  if (name == "hoeve")
    return CompareMode::hoeve;
  return std::nullopt;
}

namespace {

std::string stratum_label(NodeSet j) { return "A_{" + j.to_string() + ",tau}"; }

void gortz_yu_rows(const SiegelContext& ctx, ComparisonTable& table) {
  const AffineWeylGroup& group = ctx.group();
  const DiagramMap exchange = group.twisted_frobenius(ctx.tau());
  for (const auto& x : ctx.adm().elements) {
    const bool generic_basic = is_basic_stratum(group, x);
    const std::optional<int> c = basic_closed_form(ctx, x);
    const std::string name = "x = " + word_string(group.reduced_word(x).word) + " tau";
    if (generic_basic != c.has_value()) {
      table.mismatches.push_back(name + ": generic basicness " + (generic_basic ? "true" : "false") +
                                 " but closed form " + (c ? "present" : "absent"));
      continue;
    }
    if (!generic_basic)
      continue;
    ComparisonRow row;
    row.x = x;
    row.word = group.reduced_word(x).word;
    row.c = *c;
    row.generic = dl_datum(group, NodeSet{}, x);
    row.closed_ambient = ctx.complement_of_pair(*c);
    row.stratum_label = stratum_label(row.closed_ambient);
    if (exchange(row.closed_ambient) != row.closed_ambient)
      row.agrees = false;
    if (!row.generic.ambient.subset_of(row.closed_ambient) || !row.generic.parabolic.empty())
      row.agrees = false;
    if (!group.support(group.multiply(x, group.inverse(ctx.tau()))).subset_of(row.closed_ambient))
      row.agrees = false;
    if (!row.agrees)
      table.mismatches.push_back(name + ": Y(J,w) datum disagrees with J = " +
                                 row.closed_ambient.to_string());
    table.rows.push_back(std::move(row));
  }
}

void hoeve_rows(const SiegelContext& ctx, ComparisonTable& table) {
  const AffineWeylGroup& group = ctx.group();
  const NodeSet k = ctx.hyperspecial().nodes();
  ElementSet previous;
  for (int c = 0; 2 * c <= ctx.g(); ++c) {
    const EOClosedForm closed = eo_closed_forms(ctx, c);
    const auto cw = cW_embed(ctx, c);
    for (const auto& w : cw) {
      if (previous.count(w))
        continue;
      ComparisonRow row;
      row.finite_word = group.reduced_word(w).word;
      row.x = eo_correspondence(ctx, w);
      row.word = group.reduced_word(row.x).word;
      row.c = c;
      row.generic = dl_datum(group, k, row.x);
      row.closed_ambient = closed.supp | closed.i_set;
      row.closed_parabolic = closed.i_set;
      row.stratum_label = stratum_label(ctx.complement_of_pair(c));
      const SigmaSupport supp = supp_sigma(group, row.x);
      row.agrees = supp.closure == closed.supp && i_set(group, k, row.x) == closed.i_set &&
                   row.generic.ambient == row.closed_ambient &&
                   row.generic.parabolic == row.closed_parabolic &&
                   row.generic.dimension == static_cast<int>(row.finite_word.size());
      if (!row.agrees)
        table.mismatches.push_back("w = " + word_string(row.finite_word) + ", c = " +
                                   std::to_string(c) + ": generic datum differs from closed form");
      table.rows.push_back(std::move(row));
    }
    previous.insert(cw.begin(), cw.end());
  }
}

}  // namespace

ComparisonTable compare_reports(const SiegelContext& ctx, CompareMode mode) {
  ComparisonTable table;
  table.mode = mode;
  table.g = ctx.g();
  if (mode == CompareMode::gortz_yu)
    gortz_yu_rows(ctx, table);
  else
    hoeve_rows(ctx, table);
  return table;
}

}  // namespace atlas
