#pragma once

// Hom spaces, free covers, resolutions, Ext/Tor, duality, pullbacks and
// pushouts, extension realization and splitting tests.

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ctw/module.hpp"

namespace ctw {

/// Full: one generator per basis vector (A^{dim M}). Greedy: a canonical
/// irredundant generating set picked from the basis in order.
enum class CoverKind { Full, Greedy };

/// Homogeneous generators of the submodule spanned by x (columns), greedy in
/// column order after splitting into homogeneous components, then pruned so that
/// no generator lies in the submodule generated by the others.
std::vector<Vec> module_generators(const Module& m, const FpMatrix& x);

struct FreeCover {
  std::vector<Vec> generators;  // in coordinates of the covered module
  std::vector<int> degrees;     // degree of each generator
  Module free;                  // P, basis (j, k) = b_k e_j
  ModuleMorphism q;             // P ->> M
  FpMatrix section;             // linear section of q (dim P x dim M)
};

FreeCover make_free_cover(const Module& m, CoverKind kind);
/// 0 -> ΩM -> A^{dim M} -> M -> 0 (or greedy).
ShortExactSeq free_cover(const Module& m, CoverKind kind = CoverKind::Full);

/// Free resolution built step by step on demand. Thread safe.
class Resolution {
 public:
  Resolution(Module m, CoverKind kind) : m_(std::move(m)), kind_(kind) {}

  Module module() const { return m_.owned(); }
  CoverKind kind() const { return kind_; }
  /// Cover P_i ->> Ω^i M.
  const FreeCover& step(std::size_t i) const;
  /// Ω^i M (Ω^0 = M).
  Module syzygy(std::size_t i) const;
  /// Ω^i M -> P_{i-1}, i >= 1.
  const ModuleMorphism& inclusion(std::size_t i) const;
  /// Images of the generators of P_i in P_{i-1} (columns), i >= 1.
  FpMatrix generator_images(std::size_t i) const;
  /// The sequence 0 -> Ω^{i+1} -> P_i -> Ω^i -> 0.
  ShortExactSeq ses(std::size_t i) const;

 private:
  const FreeCover& step_locked(std::size_t i) const;
  const Submodule& kernel_locked(std::size_t i) const;

  Module m_;
  CoverKind kind_;
  mutable std::recursive_mutex mu_;
  mutable std::deque<FreeCover> steps_;
  mutable std::deque<Submodule> kernels_;  // kernels_[i] = Ω^{i+1} ⊂ P_i
};

Module syzygy(const Module& m, std::size_t i, CoverKind kind = CoverKind::Full);

/// Embedding 0 -> M -> I -> Ω^{-1}M -> 0 with I a direct sum of copies of D(A),
/// built as the dual of a free cover of D(M).
ShortExactSeq injective_embedding(const Module& m, CoverKind kind = CoverKind::Full);
Module cosyzygy(const Module& m, std::size_t i, CoverKind kind = CoverKind::Full);

/// Basis of degree-0 module maps M -> N.
std::vector<ModuleMorphism> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

/// Flattened (row-major) matrices of a morphism list, one per column.
FpMatrix flatten(const std::vector<ModuleMorphism>& maps, std::size_t rows, std::size_t cols, std::uint32_t p);

struct ExtClass {
  std::size_t degree = 0;
  std::shared_ptr<Resolution> resolution;
  Module target;
  Vec cocycle;  // value on each generator of P_degree, concatenated N-coordinates

  /// Ω^i M -> N.
  ModuleMorphism representative() const;
};

/// Ext^i(M, N) = H^i(Hom(P_•, N)) for the given resolution of M. Hom(P_i, N) is
/// coordinatised by the values on the generators; `support` lists the admissible
/// coordinates (generator j, basis vector r of N with deg r = deg e_j).
struct ExtGroup {
  std::size_t degree = 0;
  std::shared_ptr<Resolution> resolution;
  Module target;
  std::vector<std::size_t> support;
  Subspace cocycles;    // Z^i in support coordinates
  FpMatrix boundaries;  // B^i in support coordinates
  QuotientMap quotient;  // Z^i -> Ext^i, on cocycle coordinates
  std::vector<ExtClass> basis;

  std::size_t dim() const { return basis.size(); }
  /// Coordinates in `basis` of a cocycle given in full coordinates.
  Vec coordinates(const Vec& cocycle) const;
  bool is_zero(const Vec& cocycle) const;
  /// Cocycle of a morphism Ω^i M -> N (its values on the generators of P_i).
  Vec cocycle_of(const ModuleMorphism& rep) const;
  ExtClass make_class(const Vec& cocycle) const;
};

ExtGroup ext_group(const Module& m, const Module& n, std::size_t i,
                   const std::shared_ptr<Resolution>& res = nullptr);
/// Dimension only; cheaper than ext_group.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i,
                    const std::shared_ptr<Resolution>& res = nullptr);
/// Ext^i with a fresh resolution of the requested kind.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i, CoverKind kind);

/// Tor_i(E, M): E a right module, M a left module over the same ring.
std::size_t tor_dim(const Module& e, const Module& m, std::size_t i,
                    const std::shared_ptr<Resolution>& res = nullptr);
/// E ⊗_A M as a vector space dimension.
std::size_t tensor_dim(const Module& e, const Module& m);

/// k-linear dual with the transposed action on the opposite side, degrees negated.
Module dual(const Module& m);
ModuleMorphism dual(const ModuleMorphism& f);
ShortExactSeq dual(const ShortExactSeq& s);

struct Pullback {
  Module module;
  ModuleMorphism p1;  // -> L
  ModuleMorphism p2;  // -> N
};
struct Pushout {
  Module module;
  ModuleMorphism j1;  // L ->
  ModuleMorphism j2;  // N ->
};
/// P = ker(L ⊕ N -> M, (l, n) -> f l - g n).
Pullback pullback(const ModuleMorphism& f, const ModuleMorphism& g);
/// P = coker(M -> L ⊕ N, m -> (f m, -g m)).
Pushout pushout(const ModuleMorphism& f, const ModuleMorphism& g);

/// The map X -> P with p1 x = a and p2 x = b (throws if a and b do not agree over the base).
ModuleMorphism pullback_lift(const Pullback& pb, const ModuleMorphism& a, const ModuleMorphism& b);
/// The map P -> Y with y j1 = a and y j2 = b.
ModuleMorphism pushout_desc(const Pushout& po, const ModuleMorphism& a, const ModuleMorphism& b);

/// 0 -> N -> E -> M -> 0 from a degree-1 class (pushout of the cover along the representative).
ShortExactSeq realize_ext1(const ExtClass& c);
/// Inverse of realize_ext1: the class of 0 -> N -> E -> M -> 0 with respect to `res`
/// (default: the greedy resolution of M).
ExtClass classify(const ShortExactSeq& s, const std::shared_ptr<Resolution>& res = nullptr);

/// Section σ of s.q with q σ = id, or nullopt.
std::optional<ModuleMorphism> split_section(const ShortExactSeq& s);
/// Retraction r of s.i with r i = id, or nullopt.
std::optional<ModuleMorphism> split_retraction(const ShortExactSeq& s);
bool is_split(const ShortExactSeq& s);
bool is_projective(const Module& m);
bool is_injective(const Module& m);

/// x ∈ add(y): id_x factors as x -> y^n -> x. Linear test: id_x lies in the span of
/// compositions x -> y -> x. The witness carries n and both maps.
struct AddWitness {
  std::size_t copies = 0;
  ModuleMorphism into;  // x -> y^copies
  ModuleMorphism back;  // y^copies -> x, back ∘ into = id
};
std::optional<AddWitness> add_witness(const Module& x, const Module& y);

/// Deterministic randomized search for an isomorphism m -> n among combinations of hom_space.
std::optional<ModuleMorphism> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed = 1,
                                               std::size_t tries = 256);

}  // namespace ctw
