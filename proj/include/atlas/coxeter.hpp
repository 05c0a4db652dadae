#ifndef ATLAS_COXETER_HPP
#define ATLAS_COXETER_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace atlas {

// Coxeter matrix entry standing for m = infinity.
inline constexpr int kInfiniteOrder = 0;

// A set of Coxeter generators, addressed by node index 0..63.
class NodeSet {
public:
  constexpr NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes);
  static NodeSet from_bits(std::uint64_t bits);
  static NodeSet from_vector(const std::vector<int>& nodes);
  static NodeSet range(int first, int last);  // [first, last], empty if last < first

  bool contains(int node) const { return (bits_ >> node) & 1u; }
  void insert(int node);
  void erase(int node) { bits_ &= ~(std::uint64_t{1} << node); }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool subset_of(const NodeSet& other) const { return (bits_ & ~other.bits_) == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> to_vector() const;
  std::string to_string() const;  // "{s0,s2}"

  NodeSet operator|(const NodeSet& o) const { return from_bits(bits_ | o.bits_); }
  NodeSet operator&(const NodeSet& o) const { return from_bits(bits_ & o.bits_); }
  NodeSet operator-(const NodeSet& o) const { return from_bits(bits_ & ~o.bits_); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

private:
  std::uint64_t bits_ = 0;
};

class CoxeterMatrix {
public:
  CoxeterMatrix() = default;
  // Entries use kInfiniteOrder for m = infinity. Throws std::invalid_argument
  // unless the matrix is symmetric with unit diagonal and off-diagonal
  // entries in {2, 3, 4, 6, infinity}.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  int size() const { return static_cast<int>(m_.size()); }
  int order(int i, int j) const { return m_[i][j]; }
  bool joined(int i, int j) const {
    return i != j && (m_[i][j] == kInfiniteOrder || m_[i][j] >= 3);
  }
  NodeSet all_nodes() const { return NodeSet::range(0, size() - 1); }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
  std::vector<std::vector<int>> m_;
};

// Coxeter matrix of type C~_n on nodes 0..n, numbered along the path.
CoxeterMatrix affine_c_matrix(int n);

// Maximal connected subsets of J, ordered by smallest node.
std::vector<NodeSet> connected_components(const CoxeterMatrix& mat, NodeSet j);

// A node permutation preserving a Coxeter matrix.
class DiagramMap {
public:
  DiagramMap() = default;
  // Throws std::invalid_argument if images is not a permutation preserving mat.
  DiagramMap(const CoxeterMatrix& mat, std::vector<int> images);
  static DiagramMap identity(int n);

  int operator()(int node) const { return images_[node]; }
  NodeSet operator()(NodeSet j) const;
  DiagramMap then(const DiagramMap& after) const;  // after ∘ this
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  // Orbits of the cyclic group generated by the map, restricted to J.
  std::vector<NodeSet> orbits(NodeSet j) const;

  friend bool operator==(const DiagramMap&, const DiagramMap&) = default;

private:
  std::vector<int> images_;
};

// "s0s2s1", or "e" for the empty word.
std::string word_string(const std::vector<int>& word);

// Smallest f-stable superset of J.
NodeSet orbit_closure(const DiagramMap& f, NodeSet j);

struct CartanComponent {
  char family = 'A';
  int rank = 0;

  friend bool operator==(const CartanComponent&, const CartanComponent&) = default;
  friend auto operator<=>(const CartanComponent&, const CartanComponent&) = default;
};

// Finite Coxeter type, one entry per connected component, sorted.
// B_n and C_n have the same Coxeter matrix; both are reported as C_n.
struct FiniteTypeLabel {
  std::vector<CartanComponent> components;

  std::string to_string() const;  // "A1xA1", "C2", "trivial" when empty
  friend bool operator==(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
};

// Throws std::domain_error when some component of J is not of finite type.
FiniteTypeLabel finite_type_of(const CoxeterMatrix& mat, NodeSet j);

// A Coxeter diagram whose connected components are all irreducible affine
// diagrams. A standard parabolic subgroup W_J of such a group is finite
// exactly when J misses at least one node of every component: every proper
// standard parabolic subgroup of an irreducible affine Coxeter group is a
// finite Weyl group, and the full group is infinite.
class AffineDiagram {
public:
  AffineDiagram() = default;
  // Throws std::invalid_argument if some component is not affine.
  explicit AffineDiagram(CoxeterMatrix mat);

  const CoxeterMatrix& matrix() const { return mat_; }
  const std::vector<NodeSet>& components() const { return components_; }
  // Affine type name per component, e.g. "C~2".
  const std::vector<std::string>& affine_types() const { return types_; }

private:
  CoxeterMatrix mat_;
  std::vector<NodeSet> components_;
  std::vector<std::string> types_;
};

bool is_finite_parabolic(const AffineDiagram& diagram, NodeSet j);

}  // namespace atlas

#endif  // ATLAS_COXETER_HPP
