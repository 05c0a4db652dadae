#include "atlas/affine_weyl.hpp"

#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace atlas {

namespace {

std::atomic<std::uint64_t> next_context_id{1};

int coxeter_label_from_cartan(Int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteOrder;
  }
}

}  // namespace

std::size_t ElementHash::operator()(const ExtAffineElement& x) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](Int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (Int v : x.translation)
    mix(v);
  for (Int v : x.finite.data())
    mix(v);
  return h;
}

AffineWeylGroup::AffineWeylGroup(RootDatum datum)
    : datum_(std::move(datum)), id_(next_context_id.fetch_add(1)) {
  const std::size_t n = datum_.simple_count();
  const std::size_t comps = datum_.components().size();
  const std::size_t nodes = n + comps;
  simple_.resize(nodes);
  node_to_simple_.assign(nodes, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    simple_[i + 1] = element(IntVector(datum_.rank(), 0), datum_.simple_reflection(i));
    node_to_simple_[i + 1] = i;
    finite_nodes_.insert(static_cast<int>(i + 1));
  }
  std::vector<int> affine_node(comps);
  for (std::size_t k = 0; k < comps; ++k) {
    affine_node[k] = k == 0 ? 0 : static_cast<int>(n + k);
    const Root& theta = datum_.highest_root(k);
    simple_[affine_node[k]] = element(scale(theta.coroot, -1), datum_.reflection(theta));
  }

  // Coxeter matrix from the orders of pairwise products.
  std::vector<std::vector<int>> m(nodes, std::vector<int>(nodes, 1));
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j) {
      ExtAffineElement p = multiply(simple_[i], simple_[j]);
      ExtAffineElement power = p;
      int order = kInfiniteOrder;
      for (int k = 1; k <= 6; ++k) {
        if (power == identity()) {
          order = k;
          break;
        }
        power = multiply(power, p);
      }
      m[i][j] = m[j][i] = order;
    }
  diagram_ = AffineDiagram(CoxeterMatrix(m));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j &&
          coxeter_label_from_cartan(datum_.cartan(i, j) * datum_.cartan(j, i)) != m[i + 1][j + 1])
        throw std::invalid_argument("AffineWeylGroup: Cartan matrix disagrees with the Coxeter matrix");

  std::vector<int> images(nodes);
  const auto& p = datum_.frobenius_on_simple();
  for (std::size_t i = 0; i < n; ++i)
    images[i + 1] = static_cast<int>(p[i] + 1);
  for (std::size_t k = 0; k < comps; ++k) {
    std::size_t target = p[datum_.components()[k].front()];
    for (std::size_t c = 0; c < comps; ++c)
      for (std::size_t idx : datum_.components()[c])
        if (idx == target)
          images[affine_node[k]] = affine_node[c];
  }
  frobenius_nodes_ = DiagramMap(coxeter_matrix(), images);
  for (std::size_t v = 0; v < nodes; ++v)
    if (frobenius(simple_[v]) != simple_[images[v]])
      throw std::invalid_argument("AffineWeylGroup: Frobenius is incompatible with the diagram");

  std::vector<IntVector> coroots;
  for (std::size_t i = 0; i < n; ++i)
    coroots.push_back(datum_.simple_coroot(i));
  pi1_ = LatticeQuotient(datum_.rank(), coroots);
  IntMatrix sigma_minus_one = datum_.frobenius() - IntMatrix::identity(datum_.rank());
  for (std::size_t j = 0; j < datum_.rank(); ++j)
    coroots.push_back(sigma_minus_one.column(j));
  pi1_gamma_ = LatticeQuotient(datum_.rank(), coroots);
}

std::optional<std::size_t> AffineWeylGroup::simple_root_of(int node) const {
  return node_to_simple_.at(node);
}

void AffineWeylGroup::check_same(const ExtAffineElement& x) const {
  if (x.context != id_)
    throw std::invalid_argument("element belongs to a different group context");
}

ExtAffineElement AffineWeylGroup::identity() const {
  return element(IntVector(datum_.rank(), 0), IntMatrix::identity(datum_.rank()));
}

ExtAffineElement AffineWeylGroup::translation(const IntVector& lambda) const {
  return element(lambda, IntMatrix::identity(datum_.rank()));
}

ExtAffineElement AffineWeylGroup::element(const IntVector& lambda, const IntMatrix& finite) const {
  if (lambda.size() != datum_.rank() || finite.rows() != datum_.rank() ||
      finite.cols() != datum_.rank())
    throw std::invalid_argument("element: dimension mismatch");
  return ExtAffineElement{lambda, finite, id_};
}

ExtAffineElement AffineWeylGroup::from_permutation(const IntVector& ambient_translation,
                                                   const std::vector<int>& permutation) const {
  const std::size_t d = datum_.ambient_dim();
  if (permutation.size() != d)
    throw std::invalid_argument("from_permutation: wrong permutation size");
  IntMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i)
    p(static_cast<std::size_t>(permutation[i]), i) = 1;
  auto w = datum_.restrict_to_lattice(p);
  auto lambda = datum_.to_lattice(ambient_translation);
  if (!w || !lambda)
    throw std::invalid_argument("from_permutation: data does not preserve X");
  return element(*lambda, *w);
}

ExtAffineElement AffineWeylGroup::multiply(const ExtAffineElement& x,
                                           const ExtAffineElement& y) const {
  check_same(x);
  check_same(y);
  return ExtAffineElement{add(x.translation, x.finite.apply(y.translation)),
                          x.finite * y.finite, id_};
}

ExtAffineElement AffineWeylGroup::inverse(const ExtAffineElement& x) const {
  check_same(x);
  // The finite part has finite order, so its inverse is its last nontrivial power.
  IntMatrix prev = IntMatrix::identity(datum_.rank());
  IntMatrix cur = x.finite;
  while (!cur.is_identity()) {
    prev = cur;
    cur = cur * x.finite;
  }
  IntMatrix winv = x.finite.is_identity() ? cur : prev;
  return ExtAffineElement{scale(winv.apply(x.translation), -1), winv, id_};
}

ExtAffineElement AffineWeylGroup::evaluate(const std::vector<int>& word,
                                           const ExtAffineElement& omega) const {
  ExtAffineElement x = identity();
  for (int s : word)
    x = multiply(x, simple_reflection(s));
  return multiply(x, omega);
}

ExtAffineElement AffineWeylGroup::frobenius(const ExtAffineElement& x) const {
  check_same(x);
  const IntMatrix& f = datum_.frobenius();
  return ExtAffineElement{f.apply(x.translation), f * x.finite * datum_.frobenius_inverse(), id_};
}

int AffineWeylGroup::length(const ExtAffineElement& x) const {
  check_same(x);
  // Anti-dominant base alcove: a root alpha > 0 contributes |<lambda, alpha>|
  // when w^{-1} alpha > 0 and |<lambda, alpha> + 1| otherwise.
  const IntVector moved = x.finite.apply(datum_.regular_dominant());
  Int total = 0;
  for (const Root& root : datum_.positive_roots()) {
    Int k = dot(root.functional, x.translation);
    bool stays_positive = dot(root.functional, moved) > 0;
    total += stays_positive ? std::llabs(k) : std::llabs(k + 1);
  }
  return static_cast<int>(total);
}

std::vector<int> AffineWeylGroup::left_descents(const ExtAffineElement& x, int len) const {
  std::vector<int> out;
  for (int s = 0; s < node_count(); ++s)
    if (length(multiply(simple_[s], x)) < len)
      out.push_back(s);
  return out;
}

ReducedDecomposition AffineWeylGroup::reduced_word(const ExtAffineElement& x) const {
  ReducedDecomposition rd;
  ExtAffineElement cur = x;
  int len = length(cur);
  while (len > 0) {
    int chosen = -1;
    for (int s = 0; s < node_count(); ++s) {
      ExtAffineElement next = multiply(simple_[s], cur);
      if (length(next) < len) {
        chosen = s;
        cur = std::move(next);
        break;
      }
    }
    if (chosen < 0)
      throw std::logic_error("reduced_word: no descent for an element of positive length");
    rd.word.push_back(chosen);
    --len;
  }
  rd.omega = std::move(cur);
  return rd;
}

ReducedDecomposition AffineWeylGroup::reduced_word(const ExtAffineElement& x,
                                                   std::mt19937_64& rng) const {
  ReducedDecomposition rd;
  ExtAffineElement cur = x;
  int len = length(cur);
  while (len > 0) {
    std::vector<int> desc = left_descents(cur, len);
    if (desc.empty())
      throw std::logic_error("reduced_word: no descent for an element of positive length");
    std::uniform_int_distribution<std::size_t> pick(0, desc.size() - 1);
    int s = desc[pick(rng)];
    rd.word.push_back(s);
    cur = multiply(simple_[s], cur);
    --len;
  }
  rd.omega = std::move(cur);
  return rd;
}

NodeSet AffineWeylGroup::support(const ExtAffineElement& x) const {
  return NodeSet::from_vector(reduced_word(x).word);
}

bool AffineWeylGroup::bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) const {
  check_same(x);
  check_same(y);
  if (pi1_class(x) != pi1_class(y))
    return false;
  const int lx = length(x);
  const int ly = length(y);
  if (lx > ly)
    return false;
  if (ly == 0 || lx == ly)
    return x == y;
  auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(bruhat_mutex_);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end())
      return it->second;
  }
  bool result = false;
  for (int s = 0; s < node_count(); ++s) {
    ExtAffineElement sy = multiply(simple_[s], y);
    if (length(sy) >= ly)
      continue;
    ExtAffineElement sx = multiply(simple_[s], x);
    result = length(sx) < lx ? bruhat_leq(sx, sy) : bruhat_leq(x, sy);
    break;
  }
  std::unique_lock lock(bruhat_mutex_);
  bruhat_memo_.emplace(std::move(key), result);
  return result;
}

std::optional<int> AffineWeylGroup::as_simple_reflection(const ExtAffineElement& x) const {
  for (int s = 0; s < node_count(); ++s)
    if (simple_[s] == x)
      return s;
  return std::nullopt;
}

DiagramMap AffineWeylGroup::conjugation_map(const ExtAffineElement& omega) const {
  if (length(omega) != 0)
    throw std::invalid_argument("conjugation_map: element has positive length");
  ExtAffineElement inv = inverse(omega);
  std::vector<int> images(node_count());
  for (int s = 0; s < node_count(); ++s) {
    auto t = as_simple_reflection(multiply(multiply(omega, simple_[s]), inv));
    if (!t)
      throw std::logic_error("conjugation_map: length-zero element does not permute S~");
    images[s] = *t;
  }
  return DiagramMap(coxeter_matrix(), images);
}

DiagramMap AffineWeylGroup::twisted_frobenius(const ExtAffineElement& omega) const {
  return frobenius_nodes_.then(conjugation_map(omega));
}

ExtAffineElement AffineWeylGroup::twisted_product(const ExtAffineElement& x, std::size_t m) const {
  ExtAffineElement product = identity();
  ExtAffineElement factor = x;
  for (std::size_t k = 0; k < m; ++k) {
    product = multiply(product, factor);
    factor = frobenius(factor);
  }
  return product;
}

AffineWeylGroup::TwistedPower AffineWeylGroup::twisted_power(const ExtAffineElement& x) const {
  ExtAffineElement product = identity();
  ExtAffineElement factor = x;
  for (std::size_t k = 1; k <= 1000000; ++k) {
    product = multiply(product, factor);
    factor = frobenius(factor);
    if (product.finite.is_identity() && k % datum_.frobenius_order() == 0)
      return TwistedPower{k, product.translation};
  }
  throw std::logic_error("twisted_power: finite part does not reach the identity");
}

NewtonPoint AffineWeylGroup::newton_vector(const ExtAffineElement& x) const {
  TwistedPower tp = twisted_power(x);
  RationalVector v;
  for (Int c : tp.translation)
    v.push_back(Rational(c, static_cast<Int>(tp.exponent)));
  return dominantize(v).first;
}

Rational AffineWeylGroup::pair_with_two_rho(const NewtonPoint& nu) const {
  return dot(datum_.two_rho(), nu.coords);
}

bool AffineWeylGroup::is_sigma_straight(const ExtAffineElement& x) const {
  return Rational(length(x)) == pair_with_two_rho(newton_vector(x));
}

bool AffineWeylGroup::newton_leq(const NewtonPoint& a, const NewtonPoint& b) const {
  if (a.coords.size() != datum_.rank() || b.coords.size() != datum_.rank())
    throw std::invalid_argument("newton_leq: dimension mismatch");
  if (datum_.simple_count() == 0)
    return a == b;
  RationalVector diff(b.coords);
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] -= a.coords[i];
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < datum_.simple_count(); ++i)
    cols.push_back(datum_.simple_coroot(i));
  auto c = solve_rational(IntMatrix::from_columns(cols, datum_.rank()), diff);
  if (!c)
    return false;
  for (const Rational& q : *c)
    if (q < 0)
      return false;
  return true;
}

NewtonPoint AffineWeylGroup::mu_bar(const IntVector& mu) const {
  const std::size_t order = datum_.frobenius_order();
  RationalVector sum(datum_.rank(), Rational(0));
  IntVector cur = mu;
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t i = 0; i < sum.size(); ++i)
      sum[i] += cur[i];
    cur = datum_.frobenius().apply(cur);
  }
  for (auto& q : sum)
    q /= static_cast<Int>(order);
  return dominantize(sum).first;
}

bool AffineWeylGroup::is_dominant(const RationalVector& v) const {
  for (std::size_t i = 0; i < datum_.simple_count(); ++i)
    if (dot(datum_.simple_root(i), v) < 0)
      return false;
  return true;
}

std::pair<NewtonPoint, IntMatrix> AffineWeylGroup::dominantize(const RationalVector& v) const {
  if (v.size() != datum_.rank())
    throw std::invalid_argument("dominantize: dimension mismatch");
  RationalVector cur = v;
  IntMatrix w = IntMatrix::identity(datum_.rank());
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < datum_.simple_count(); ++i) {
      Rational p = dot(datum_.simple_root(i), cur);
      if (p < 0) {
        for (std::size_t t = 0; t < cur.size(); ++t)
          cur[t] -= p * datum_.simple_coroot(i)[t];
        w = datum_.simple_reflection(i) * w;
        moved = true;
        break;
      }
    }
    if (!moved)
      break;
  }
  return {NewtonPoint{cur}, w};
}

ExtAffineElement AffineWeylGroup::tau_of_mu(const IntVector& mu) const {
  if (mu.size() != datum_.rank())
    throw std::invalid_argument("tau_of_mu: dimension mismatch");
  if (!is_dominant(mu))
    throw std::invalid_argument("tau_of_mu: mu is not dominant");
  ExtAffineElement tau = reduced_word(translation(mu)).omega;
  if (length(tau) != 0 || pi1_class(tau) != pi1_class(mu))
    throw std::logic_error("tau_of_mu: no length-zero element in the class of mu");
  return tau;
}

std::vector<IntVector> AffineWeylGroup::weyl_orbit(const IntVector& lambda) const {
  std::set<IntVector> seen{lambda};
  std::vector<IntVector> stack{lambda};
  while (!stack.empty()) {
    IntVector v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < datum_.simple_count(); ++i) {
      IntVector w = subtract(v, scale(datum_.simple_coroot(i), dot(datum_.simple_root(i), v)));
      if (seen.insert(w).second)
        stack.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::vector<ExtAffineElement> generated_group(const AffineWeylGroup& g, NodeSet gens) {
  std::unordered_set<ExtAffineElement, ElementHash> seen{g.identity()};
  std::deque<ExtAffineElement> queue{g.identity()};
  while (!queue.empty()) {
    ExtAffineElement x = queue.front();
    queue.pop_front();
    for (int s : gens.to_vector()) {
      ExtAffineElement y = g.multiply(x, g.simple_reflection(s));
      if (seen.insert(y).second)
        queue.push_back(std::move(y));
    }
  }
  return canonical_sort(g, {seen.begin(), seen.end()});
}

}  // namespace

std::vector<ExtAffineElement> AffineWeylGroup::finite_weyl_group() const {
  return generated_group(*this, finite_nodes_);
}

std::vector<ExtAffineElement> AffineWeylGroup::parabolic_subgroup(NodeSet k) const {
  if (!is_finite_parabolic(diagram_, k))
    throw std::domain_error("parabolic_subgroup: W_K is infinite for K = " + k.to_string());
  return generated_group(*this, k);
}

std::vector<ExtAffineElement> canonical_sort(const AffineWeylGroup& group,
                                             std::vector<ExtAffineElement> elements) {
  struct Keyed {
    std::size_t length;
    std::vector<int> word;
    ExtAffineElement omega;
    ExtAffineElement x;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(elements.size());
  for (auto& x : elements) {
    ReducedDecomposition rd = group.reduced_word(x);
    keyed.push_back(Keyed{rd.word.size(), std::move(rd.word), std::move(rd.omega), std::move(x)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.length != b.length)
      return a.length < b.length;
    if (a.word != b.word)
      return a.word < b.word;
    return a.omega < b.omega;
  });
  std::vector<ExtAffineElement> out;
  out.reserve(keyed.size());
  for (auto& k : keyed)
    out.push_back(std::move(k.x));
  return out;
}

}  // namespace atlas
