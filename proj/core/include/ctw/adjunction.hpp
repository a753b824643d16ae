#pragma once

// Change of rings along R -> A: restriction, induction A ⊗_R -, coinduction
// Hom_R(A, -) and the adjunction maps ν, φ, π, ε.

#include <optional>
#include <string>
#include <vector>

#include "ctw/homological.hpp"

namespace ctw {

struct RingMap {
  AlgebraMorphism morphism;  // R -> A
  Module a_left;             // A as a left R-module (r·a = φ(r) a)
  Module a_right;            // A as a right R-module

  /// Validates the morphism and caches both restrictions of A.
  static RingMap make(AlgebraMorphism f, std::string name = {});

  const AlgebraPtr& base() const { return morphism.source; }
  const AlgebraPtr& top() const { return morphism.target; }
  Vec image(const Vec& r) const { return morphism.apply(r); }
  /// R^op -> A^op with the same matrix.
  RingMap opposite() const;

  std::string name;
};

Module restrict(const RingMap& rm, const Module& m);
ModuleMorphism restrict(const RingMap& rm, const ModuleMorphism& f);

struct Induced {
  Module module;        // A ⊗_R L
  Module base;          // L
  QuotientMap presentation;  // A ⊗_k L (index a * dim L + l) ->> A ⊗_R L
  ModuleMorphism unit;  // ε_L : L -> restrict(A ⊗_R L), l -> 1 ⊗ l (R-linear only)
};

struct Coinduced {
  Module module;     // Hom_R(A, L)
  Module base;       // L
  Subspace carrier;  // inside Hom_k(A, L); vector index a * dim L + l holds f(b_a)_l
  ModuleMorphism eval;  // φ : restrict(Hom_R(A, L)) -> L, f -> f(1) (R-linear only)

  /// Coordinates of an R-linear map given as a dim L x dim A matrix.
  Vec coordinates(const FpMatrix& f) const;
  /// The map of basis element i as a dim L x dim A matrix.
  FpMatrix value(std::size_t i) const;
};

/// L a left R-module. A ⊗_R L = A ⊗_k L / span{a φ(r) ⊗ l - a ⊗ r l}, r over algebra generators.
Induced induce(const RingMap& rm, const Module& l);
/// L a left R-module. R-linear maps f: A -> L, with (a' f)(a) = f(a a').
Coinduced coinduce(const RingMap& rm, const Module& l);

/// A ⊗_R f : A ⊗_R L -> A ⊗_R L'.
ModuleMorphism induce_map(const RingMap& rm, const Induced& src, const Induced& dst, const ModuleMorphism& f);
ModuleMorphism induce_map(const RingMap& rm, const ModuleMorphism& f);
/// Hom_R(A, f) : Hom_R(A, L) -> Hom_R(A, L').
ModuleMorphism coinduce_map(const RingMap& rm, const Coinduced& src, const Coinduced& dst, const ModuleMorphism& f);
ModuleMorphism coinduce_map(const RingMap& rm, const ModuleMorphism& f);

struct CoinductionUnit {
  Coinduced co;        // Hom_R(A, restrict M)
  ModuleMorphism nu;   // M -> Hom_R(A, M), ν(m)(a) = a m  (A-linear, injective)
  ModuleMorphism phi;  // restrict(Hom_R(A, M)) -> restrict(M), evaluation at 1 (R-linear)
};
CoinductionUnit coinduction_unit(const RingMap& rm, const Module& m);
ModuleMorphism nu(const RingMap& rm, const Module& m);
ModuleMorphism phi(const RingMap& rm, const Module& m);

struct InductionCounit {
  Induced ind;             // A ⊗_R restrict N
  ModuleMorphism pi;       // A ⊗_R N -> N, a ⊗ n -> a n (A-linear, surjective)
  ModuleMorphism epsilon;  // restrict(N) -> restrict(A ⊗_R N), n -> 1 ⊗ n (R-linear)
};
InductionCounit induction_counit(const RingMap& rm, const Module& n);
ModuleMorphism pi(const RingMap& rm, const Module& n);
ModuleMorphism epsilon(const RingMap& rm, const Module& n);

struct HomIsoRow {
  std::size_t i = 0;
  std::size_t ext_a_coinduced = 0;  // Ext_A^i(B, Hom_R(A, M))
  std::size_t ext_r_restricted = 0; // Ext_R^i(restrict B, M)
  std::size_t ext_a_induced = 0;    // Ext_A^i(A ⊗_R M, B)
  std::size_t ext_r_base = 0;       // Ext_R^i(M, restrict B)
};

struct HomIsoReport {
  std::size_t n = 0;
  std::vector<std::size_t> ext_r_a_m;  // Ext_R^i(A, M), 1 <= i <= n
  std::vector<std::size_t> tor_r_a_m;  // Tor^R_i(A, M), 1 <= i <= n
  bool hypothesis_b = false;           // all Ext_R^i(A, M) vanish
  bool hypothesis_a = false;           // all Tor^R_i(A, M) vanish
  std::vector<HomIsoRow> rows;
  bool agree_b = true;  // columns 1 and 2 agree (meaningful when hypothesis_b)
  bool agree_a = true;  // columns 3 and 4 agree (meaningful when hypothesis_a)
  bool pass() const { return (!hypothesis_b || agree_b) && (!hypothesis_a || agree_a); }
};

/// Both isomorphisms Ext_A^i(B, Hom_R(A, M)) ≅ Ext_R^i(B, M) and
/// Ext_A^i(A ⊗_R M, B) ≅ Ext_R^i(M, B), compared by dimension for 0 <= i <= n.
HomIsoReport verify_hom_iso(const RingMap& rm, const Module& b, const Module& m, std::size_t n);

}  // namespace ctw
