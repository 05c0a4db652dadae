#include "atlas/root_datum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace atlas {

namespace {

Int lcm_denominators(const RationalVector& v) {
  boost::multiprecision::cpp_int l = 1;
  for (const Rational& q : v)
    l = boost::multiprecision::lcm(l, denominator(q));
  return static_cast<Int>(l);
}

}  // namespace

RootDatum::RootDatum(const RootDatumInput& input) {
  const std::size_t d = input.ambient_dim;
  if (input.lattice_basis.empty())
    throw std::invalid_argument("RootDatum: empty lattice basis");
  basis_ = IntMatrix::from_columns(input.lattice_basis, d);
  const std::size_t r = basis_.cols();
  {
    // Independence of the basis.
    RationalVector zero(d, Rational(0));
    try {
      solve_rational(basis_, zero);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("RootDatum: lattice basis is not independent");
    }
  }
  if (input.simple_roots.size() != input.simple_coroots.size())
    throw std::invalid_argument("RootDatum: roots and coroots differ in number");
  if (input.permutation_probe) {
    if (input.permutation_probe->size() != d || !to_lattice(*input.permutation_probe))
      throw std::invalid_argument("RootDatum: permutation probe is not in X");
    probe_ = input.permutation_probe;
  }

  const std::size_t n = input.simple_roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (input.simple_roots[i].size() != d || input.simple_coroots[i].size() != d)
      throw std::invalid_argument("RootDatum: root of wrong dimension");
    simple_roots_.push_back(basis_.apply_left(input.simple_roots[i]));
    auto coroot = to_lattice(input.simple_coroots[i]);
    if (!coroot)
      throw std::invalid_argument("RootDatum: simple coroot " + std::to_string(i + 1) +
                                  " does not lie in X");
    simple_coroots_.push_back(*coroot);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan(i, i) != 2)
      throw std::invalid_argument("RootDatum: <alpha_i^vee, alpha_i> != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      Int a = cartan(i, j), b = cartan(j, i);
      if (a > 0 || b > 0 || (a == 0) != (b == 0) || a * b > 3)
        throw std::invalid_argument("RootDatum: pairing matrix is not a Cartan matrix");
    }
  }

  // Regular dominant vector: sum_j c_j alpha_j^vee with Cartan * c = 1.
  regular_dominant_.assign(r, 0);
  if (n > 0) {
    IntMatrix cartan_t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cartan_t(i, j) = cartan(i, j);
    auto c = solve_rational(cartan_t, RationalVector(n, Rational(1)));
    if (!c)
      throw std::invalid_argument("RootDatum: singular Cartan matrix");
    Int scale_by = lcm_denominators(*c);
    for (std::size_t j = 0; j < n; ++j) {
      Rational cj = (*c)[j] * scale_by;
      if (cj <= 0)
        throw std::invalid_argument("RootDatum: Cartan matrix is not of finite type");
      regular_dominant_ = add(regular_dominant_,
                              scale(simple_coroots_[j], static_cast<Int>(numerator(cj))));
    }
  }

  // All roots as the Weyl orbit of the simple roots.
  std::map<IntVector, IntVector> roots;
  std::vector<Root> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    roots.emplace(simple_roots_[i], simple_coroots_[i]);
    frontier.push_back(Root{simple_roots_[i], simple_coroots_[i]});
  }
  while (!frontier.empty()) {
    Root cur = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Root next{subtract(cur.functional, scale(simple_roots_[i], dot(cur.functional, simple_coroots_[i]))),
                subtract(cur.coroot, scale(simple_coroots_[i], dot(simple_roots_[i], cur.coroot)))};
      if (roots.emplace(next.functional, next.coroot).second) {
        frontier.push_back(next);
        if (roots.size() > 100000)
          throw std::invalid_argument("RootDatum: root system is not finite");
      }
    }
  }
  two_rho_.assign(r, 0);
  for (const auto& [f, c] : roots)
    if (is_positive(f)) {
      positive_roots_.push_back(Root{f, c});
      two_rho_ = add(two_rho_, f);
    }

  // Irreducible components of the Dynkin diagram.
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> comp{i}, stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && cartan(v, w) != 0) {
          seen[w] = true;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components_.push_back(comp);
  }

  // Highest root of each component: maximal height among its positive roots.
  for (const auto& comp : components_) {
    const std::size_t k = comp.size();
    IntMatrix sub(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        sub(a, b) = cartan(comp[a], comp[b]);
    RationalVector c = *solve_rational(sub, RationalVector(k, Rational(1)));
    RationalVector height_vector(r, Rational(0));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t t = 0; t < r; ++t)
        height_vector[t] += c[a] * simple_coroots_[comp[a]][t];
    const Root* best = nullptr;
    Rational best_height = 0;
    for (const Root& root : positive_roots_) {
      Rational h = dot(root.functional, height_vector);
      if (h > best_height) {
        best_height = h;
        best = &root;
      }
    }
    highest_roots_.push_back(*best);
  }

  // Frobenius.
  frobenius_ = input.frobenius.value_or(IntMatrix::identity(r));
  if (frobenius_.rows() != r || frobenius_.cols() != r)
    throw std::invalid_argument("RootDatum: Frobenius has wrong size");
  try {
    frobenius_inverse_ = unimodular_inverse(frobenius_);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("RootDatum: Frobenius is not a lattice automorphism");
  }
  {
    IntMatrix power = frobenius_;
    frobenius_order_ = 1;
    while (!power.is_identity()) {
      power = power * frobenius_;
      if (++frobenius_order_ > 64)
        throw std::invalid_argument("RootDatum: Frobenius has infinite order");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector image = frobenius_.apply(simple_coroots_[i]);
    auto it = std::find(simple_coroots_.begin(), simple_coroots_.end(), image);
    if (it == simple_coroots_.end())
      throw std::invalid_argument("RootDatum: Frobenius does not permute the simple coroots");
    std::size_t p = static_cast<std::size_t>(it - simple_coroots_.begin());
    if (frobenius_.apply_left(simple_roots_[p]) != simple_roots_[i])
      throw std::invalid_argument("RootDatum: Frobenius does not permute the simple roots");
    frobenius_on_simple_.push_back(p);
  }
}

IntMatrix RootDatum::reflection(const Root& root) const {
  const std::size_t r = rank();
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m(i, j) -= root.coroot[i] * root.functional[j];
  return m;
}

IntMatrix RootDatum::simple_reflection(std::size_t i) const {
  return reflection(Root{simple_roots_[i], simple_coroots_[i]});
}

std::optional<IntVector> RootDatum::to_lattice(const IntVector& ambient) const {
  if (ambient.size() != ambient_dim())
    throw std::invalid_argument("RootDatum::to_lattice: dimension mismatch");
  auto sol = solve_rational(basis_, to_rational(ambient));
  if (!sol)
    return std::nullopt;
  IntVector out;
  for (const Rational& q : *sol) {
    if (denominator(q) != 1)
      return std::nullopt;
    out.push_back(static_cast<Int>(numerator(q)));
  }
  return out;
}

std::optional<IntMatrix> RootDatum::restrict_to_lattice(const IntMatrix& ambient) const {
  std::vector<IntVector> cols;
  for (std::size_t k = 0; k < rank(); ++k) {
    auto c = to_lattice(ambient.apply(basis_.column(k)));
    if (!c)
      return std::nullopt;
    cols.push_back(*c);
  }
  return IntMatrix::from_columns(cols, rank());
}

std::optional<std::vector<int>> RootDatum::ambient_permutation(const IntMatrix& w) const {
  if (!probe_)
    return std::nullopt;
  const std::size_t d = ambient_dim();
  IntVector image = to_ambient(w.apply(*to_lattice(*probe_)));
  std::vector<int> perm(d, -1);
  for (std::size_t i = 0; i < d; ++i) {
    auto it = std::find(image.begin(), image.end(), (*probe_)[i]);
    if (it == image.end())
      return std::nullopt;
    perm[i] = static_cast<int>(it - image.begin());
  }
  // Confirm the permutation realises w on every basis vector.
  for (std::size_t k = 0; k < rank(); ++k) {
    IntVector b = basis_.column(k);
    IntVector permuted(d);
    for (std::size_t i = 0; i < d; ++i)
      permuted[perm[i]] = b[i];
    IntVector unit(rank(), 0);
    unit[k] = 1;
    if (permuted != to_ambient(w.apply(unit)))
      return std::nullopt;
  }
  return perm;
}

RootDatumInput gl_datum(std::size_t n) {
  RootDatumInput in;
  in.ambient_dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    in.lattice_basis.push_back(e);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    in.simple_roots.push_back(a);
    in.simple_coroots.push_back(a);
  }
  IntVector probe(n);
  for (std::size_t i = 0; i < n; ++i)
    probe[i] = static_cast<Int>(n - i);
  in.permutation_probe = probe;
  return in;
}

}  // namespace atlas
