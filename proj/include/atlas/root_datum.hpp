#ifndef ATLAS_ROOT_DATUM_HPP
#define ATLAS_ROOT_DATUM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "atlas/lattice.hpp"

namespace atlas {

// Raw description of a root datum. The cocharacter lattice X is the span of
// lattice_basis inside the ambient Z^d; roots are functionals on Z^d.
struct RootDatumInput {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> lattice_basis;
  std::vector<IntVector> simple_roots;
  std::vector<IntVector> simple_coroots;
  // Frobenius on X in lattice-basis coordinates; identity when absent.
  std::optional<IntMatrix> frobenius;
  // Vector of X with pairwise distinct ambient coordinates. When the Weyl
  // group acts on X by permuting ambient coordinates, elements are reported
  // in one-line notation through this probe.
  std::optional<IntVector> permutation_probe;
};

struct Root {
  IntVector functional;  // lattice coordinates of the dual basis
  IntVector coroot;      // lattice coordinates

  friend bool operator==(const Root&, const Root&) = default;
};

// Validated root datum in lattice coordinates: vectors of X are integer
// vectors in the basis of X, roots are integer row vectors on that basis.
class RootDatum {
public:
  // Throws std::invalid_argument on any violated invariant.
  explicit RootDatum(const RootDatumInput& input);

  std::size_t rank() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t simple_count() const { return simple_roots_.size(); }

  const IntVector& simple_root(std::size_t i) const { return simple_roots_[i]; }
  const IntVector& simple_coroot(std::size_t i) const { return simple_coroots_[i]; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const IntVector& two_rho() const { return two_rho_; }
  Int cartan(std::size_t i, std::size_t j) const {
    return dot(simple_coroots_[j], simple_roots_[i]);
  }

  // Simple-root indices of each irreducible component, ordered by smallest index.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  const Root& highest_root(std::size_t component) const { return highest_roots_[component]; }

  const IntMatrix& frobenius() const { return frobenius_; }
  const IntMatrix& frobenius_inverse() const { return frobenius_inverse_; }
  std::size_t frobenius_order() const { return frobenius_order_; }
  // sigma(alpha_i^vee) = alpha_{p(i)}^vee
  const std::vector<std::size_t>& frobenius_on_simple() const { return frobenius_on_simple_; }

  // Integer vector with positive pairing against every simple root.
  const IntVector& regular_dominant() const { return regular_dominant_; }
  bool is_positive(const IntVector& functional) const {
    return dot(functional, regular_dominant_) > 0;
  }

  IntMatrix reflection(const Root& root) const;
  IntMatrix simple_reflection(std::size_t i) const;

  IntVector to_ambient(const IntVector& v) const { return basis_.apply(v); }
  RationalVector to_ambient(const RationalVector& v) const { return basis_.apply(v); }
  std::optional<IntVector> to_lattice(const IntVector& ambient) const;
  // Lattice-coordinate matrix of an ambient linear map preserving X.
  std::optional<IntMatrix> restrict_to_lattice(const IntMatrix& ambient) const;
  // One-line permutation (0-based images) realising w on the ambient
  // coordinates, when a permutation probe is present and w acts that way.
  std::optional<std::vector<int>> ambient_permutation(const IntMatrix& w) const;

  const IntMatrix& basis() const { return basis_; }

private:
  IntMatrix basis_;  // ambient_dim x rank
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::vector<Root> positive_roots_;
  IntVector two_rho_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<Root> highest_roots_;
  IntMatrix frobenius_;
  IntMatrix frobenius_inverse_;
  std::size_t frobenius_order_ = 1;
  std::vector<std::size_t> frobenius_on_simple_;
  IntVector regular_dominant_;
  std::optional<IntVector> probe_;
};

// Split GL_n with X = Z^n and simple roots e_i - e_{i+1}.
RootDatumInput gl_datum(std::size_t n);

}  // namespace atlas

#endif  // ATLAS_ROOT_DATUM_HPP
