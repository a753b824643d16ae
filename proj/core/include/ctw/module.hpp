#pragma once

// Finite-dimensional modules with explicit action matrices, morphisms between
// them and short exact sequences.
//
// A right module over A is stored as a left module over A^op; `acting()` is the
// algebra whose left action the matrices represent, `ring()` the algebra the
// user named.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctw/algebra.hpp"

namespace ctw {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };
const char* side_name(Side s);

class Resolution;

class Module {
 public:
  Module() = default;

  /// Validates the representation (unit, products, degrees). Throws ModuleError.
  static Module create(AlgebraPtr ring, std::vector<FpMatrix> action, std::vector<int> degrees = {},
                       Side side = Side::Left, std::string name = {});
  /// Skips validation; used by constructions whose output is correct by design.
  static Module trusted(AlgebraPtr ring, std::vector<FpMatrix> action, std::vector<int> degrees = {},
                        Side side = Side::Left, std::string name = {});

  static Module zero(AlgebraPtr ring, Side side = Side::Left);
  /// A as a left (or right) module over itself.
  static Module regular(AlgebraPtr ring, Side side = Side::Left);
  /// Free module on generators in the given degrees (n = degrees.size()).
  static Module free(AlgebraPtr ring, const std::vector<int>& generator_degrees, Side side = Side::Left);

  bool valid() const { return d_ != nullptr; }
  const AlgebraPtr& ring() const;
  const AlgebraPtr& acting() const;
  Side side() const;
  std::size_t dim() const;
  std::uint32_t modulus() const;
  const std::string& name() const;
  Module renamed(std::string name) const;

  /// Action matrix of the acting algebra's basis element b_i.
  const FpMatrix& action(std::size_t i) const;
  const std::vector<FpMatrix>& actions() const;
  /// Action of an arbitrary element given by coordinates.
  FpMatrix act(const Vec& a) const;

  const std::vector<int>& degrees() const;
  int degree(std::size_t i) const;
  bool graded() const;
  /// Distinct degrees occurring in the module, ascending.
  std::vector<int> support() const;
  /// Basis indices of degree d.
  std::vector<std::size_t> indices_of_degree(int d) const;

  /// Greedy resolution cached on the module (shared by Hom/Ext/Tor).
  std::shared_ptr<Resolution> greedy_resolution() const;

  /// A handle that shares ownership of the data (handles may be non-owning
  /// inside cached resolutions).
  Module owned() const;

  /// Same underlying data (cheap identity test).
  bool same_object(const Module& o) const { return d_ == o.d_; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

std::optional<std::string> validate_module(const Module& m);

/// True when both modules are over the same ring on the same side.
bool same_category(const Module& a, const Module& b);
void require_same_category(const Module& a, const Module& b, const char* op);

struct ModuleMorphism {
  Module source;
  Module target;
  FpMatrix matrix;  // dim target x dim source

  static ModuleMorphism create(Module source, Module target, FpMatrix matrix);
  static ModuleMorphism trusted(Module source, Module target, FpMatrix matrix) {
    return {std::move(source), std::move(target), std::move(matrix)};
  }
  static ModuleMorphism identity(const Module& m);
  static ModuleMorphism zero(const Module& source, const Module& target);

  Vec apply(const Vec& x) const { return matrix.apply(x); }
  std::size_t rank() const;
  bool is_injective() const { return rank() == source.dim(); }
  bool is_surjective() const { return rank() == target.dim(); }
  bool is_iso() const { return source.dim() == target.dim() && is_injective(); }
};

std::optional<std::string> validate_morphism(const ModuleMorphism& f);

/// g ∘ f
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b);
ModuleMorphism scaled(const ModuleMorphism& f, std::uint32_t s);

struct ShortExactSeq {
  ModuleMorphism i;  // K -> L
  ModuleMorphism q;  // L -> M

  const Module& left() const { return i.source; }
  const Module& middle() const { return i.target; }
  const Module& right() const { return q.target; }
};

/// Checks module-map conditions, injectivity of i, surjectivity of q and im i = ker q.
std::optional<std::string> validate_ses(const ShortExactSeq& s);

struct Submodule {
  Module module;
  ModuleMorphism inclusion;
};
struct Quotient {
  Module module;
  ModuleMorphism projection;
  FpMatrix section;  // linear section of the projection (standard basis vectors)
};

/// Homogeneous canonical basis of the span of X (columns), which must be a graded
/// subspace of m: each degree block is reduced separately.
FpMatrix homogeneous_basis(const Module& m, const FpMatrix& x);

/// Submodule spanned by the columns of x. With check = true, closure under the
/// action is verified.
Submodule submodule(const Module& m, const FpMatrix& x, bool check = true);
/// Submodule with exactly the basis of `s` (coordinates read through s.coord_index).
Submodule submodule(const Module& m, const Subspace& s, bool check = true);
/// Smallest submodule containing the columns of x.
Submodule generated_submodule(const Module& m, const FpMatrix& x);
/// m / span(x); span(x) must be a submodule.
Quotient quotient(const Module& m, const FpMatrix& x, bool check = true);

Submodule kernel(const ModuleMorphism& f);
Submodule image(const ModuleMorphism& f);
Quotient cokernel(const ModuleMorphism& f);

struct DirectSum {
  Module module;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);
DirectSum direct_sum(const Module& a, const Module& b);
/// m^n
DirectSum power(const Module& m, std::size_t n);

/// Map ⊕ sources -> target with the given components.
ModuleMorphism from_sum(const DirectSum& sum, const std::vector<ModuleMorphism>& maps);
/// Map source -> ⊕ targets with the given components.
ModuleMorphism to_sum(const DirectSum& sum, const std::vector<ModuleMorphism>& maps);

/// Conjugate the module by an invertible change of basis g (new basis = columns of g).
/// For graded modules g must be homogeneous of degree 0.
ModuleMorphism change_basis(const Module& m, const FpMatrix& g);

/// M[n]: degrees become deg - n and the action carries the sign (-1)^{n|b|}.
Module shift(const Module& m, int n);
/// Identity on carriers, viewed as M[n] -> ... helpers for morphisms.
ModuleMorphism shift(const ModuleMorphism& f, int n);

}  // namespace ctw
