#pragma once

// Finite-dimensional unital associative algebras over F_p, given by structure
// constants, optionally Z-graded with finite support.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctw/field.hpp"

namespace ctw {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  /// `structure` holds c_{ij}^k at index (i*dim + j)*dim + k, meaning
  /// b_i * b_j = sum_k c_{ij}^k b_k. Empty `degrees` means ungraded (all 0).
  /// No axioms are checked here; see validate_algebra.
  static AlgebraPtr make(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> structure, Vec unit,
                         std::vector<int> degrees = {}, std::vector<std::string> labels = {},
                         std::string name = {});

  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  std::uint32_t coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<std::uint32_t>& structure() const { return c_; }
  const Vec& unit() const { return unit_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  bool graded() const;
  std::pair<int, int> window() const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Column j of left_mult(i) is the coordinate vector of b_i * b_j.
  const FpMatrix& left_mult(std::size_t i) const { return left_[i]; }
  /// Column i of right_mult(j) is the coordinate vector of b_i * b_j.
  const FpMatrix& right_mult(std::size_t j) const { return right_[j]; }
  FpMatrix left_mult(const Vec& a) const;
  FpMatrix right_mult(const Vec& a) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis_vector(std::size_t i) const;

  /// Basis indices that generate the algebra together with the unit (greedy, canonical).
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// Structural equality (modulus, constants, unit, degrees).
  bool same_as(const Algebra& o) const;

 private:
  Algebra() = default;

  std::uint32_t p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::uint32_t> c_;
  Vec unit_;
  std::vector<int> degrees_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<FpMatrix> left_;
  std::vector<FpMatrix> right_;
  std::vector<std::size_t> generators_;

  friend AlgebraPtr opposite(const AlgebraPtr& a);
  mutable std::mutex op_mu_;
  mutable std::shared_ptr<const Algebra> op_;
  mutable std::weak_ptr<const Algebra> op_back_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AlgebraViolation {
  enum class Kind { Shape, Unit, Associativity, Grading };
  Kind kind;
  std::size_t i = 0, j = 0, l = 0;
  std::string message;
};

/// nullopt when every axiom holds; otherwise the first failure in scan order
/// (shape, unit laws, associativity over triples (i,j,l), grading).
std::optional<AlgebraViolation> validate_algebra(const Algebra& a);

/// Throws AlgebraError carrying the violation message.
void require_valid(const Algebra& a);

/// c'_{ij}^k = c_{ji}^k. Cached: opposite(opposite(a)) returns `a` itself while it is alive.
AlgebraPtr opposite(const AlgebraPtr& a);

/// a ⊗ b with basis (i, j) -> i * dim(b) + j and added degrees.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// A path as the list of arrows in traversal order: {0, 1} is arrow 0 followed
/// by arrow 1 (written a1 a0 in composition order).
struct PathTerm {
  std::int64_t coeff = 1;
  std::vector<std::size_t> arrows;
};
using PathRelation = std::vector<PathTerm>;

struct QuiverSpec {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
  std::vector<PathRelation> relations;
  std::vector<std::string> arrow_labels;
};

/// kQ/I for an acyclic quiver with admissible relations. Basis: residues of paths,
/// trivial paths first. Left modules are representations with arrows acting
/// from the source vertex space to the target vertex space.
AlgebraPtr path_algebra(const QuiverSpec& quiver, std::uint32_t p, std::string name = {});

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  FpMatrix matrix;  // dim target x dim source

  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

/// nullopt when the morphism preserves unit, products and degrees.
std::optional<std::string> validate_morphism(const AlgebraMorphism& f);

AlgebraMorphism identity_morphism(const AlgebraPtr& a);

}  // namespace ctw
