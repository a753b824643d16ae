#pragma once

// Curved DG rings and modules. A CDG-ring (R, d, h) is turned into the graded
// ring A = R[δ]; CDG-modules are stored as graded A-modules with δ acting as d_M.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctw/towers.hpp"

namespace ctw {

class CDGError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CDGRing {
  AlgebraPtr r;     // graded
  FpMatrix d;       // dim R x dim R, degree +1
  Vec h;            // curvature, in R^2
  std::string name;
};

/// nullopt when d has degree 1, Leibniz holds on basis pairs, d(d(r)) = hr - rh and d(h) = 0.
std::optional<std::string> validate_cdg_ring(const CDGRing& c);

/// A = R[δ] with basis r_i (index i) followed by δ r_i (index dim R + i).
struct DeltaExtension {
  CDGRing cdg;
  AlgebraPtr a;
  RingMap rm;   // R -> A
  Vec delta;    // δ = δ·1 in A^1
  std::size_t dim_r() const { return cdg.r->dim(); }
};
using DeltaPtr = std::shared_ptr<const DeltaExtension>;

/// Throws CDGError on invalid data.
DeltaPtr delta_extension(const CDGRing& c);

struct CDGModule {
  DeltaPtr ext;
  Module graded;  // over ext->a

  std::size_t dim() const { return graded.dim(); }
  /// The underlying graded R-module.
  Module carrier() const;
  /// d_M, the action of δ.
  FpMatrix d() const;
};

/// Checks degree, Leibniz and (iii) d_M^2 = h on the carrier. Throws CDGError naming the
/// first offending basis vector.
CDGModule cdg_to_graded(const DeltaPtr& ext, const Module& carrier, const FpMatrix& dm);
std::pair<Module, FpMatrix> graded_to_cdg(const CDGModule& m);
/// Wraps a graded A-module.
CDGModule as_cdg(const DeltaPtr& ext, const Module& graded);
std::optional<std::string> validate_cdg_module(const CDGModule& m);

/// Graded pieces Hom^i(L, M) of Koszul R-linear maps, f(r x) = (-1)^{i|r|} r f(x), with
/// d(f) = d_M f - (-1)^i f d_L.
struct HomComplex {
  CDGModule source, target;
  std::vector<int> degrees;                // ascending
  std::vector<FpMatrix> bases;             // columns: f with f(a, b) at index a * dim L + b
  std::vector<FpMatrix> differentials;     // coordinates in Hom^i -> coordinates in Hom^{i+1}

  /// Index of degree i in `degrees`, or nullopt.
  std::optional<std::size_t> index(int i) const;
  std::size_t dim(int i) const;
  /// dim H^i.
  std::size_t cohomology(int i) const;
  /// True when every d_{i+1} d_i vanishes.
  bool squares_to_zero() const;
  FpMatrix as_matrix(int i, const Vec& coords) const;
};

HomComplex hom_complex(const CDGModule& l, const CDGModule& m);
/// dim H^0 Hom(L, M), the morphisms of the homotopy category.
std::size_t homotopy_classes(const CDGModule& l, const CDGModule& m);

/// t in Hom^{-1}(M, M) with d_M t + t d_M = id, or nullopt.
std::optional<FpMatrix> contracting_homotopy(const CDGModule& m);

/// A ⊗_R S and Hom_R(A, S) for a graded R-module S.
CDGModule g_plus(const DeltaPtr& ext, const Module& s);
CDGModule g_minus(const DeltaPtr& ext, const Module& s);
/// An explicit isomorphism G⁻(S) -> G⁺(S)[1], verified.
std::optional<ModuleMorphism> check_shift_identity(const DeltaPtr& ext, const Module& s);

/// 0 -> F[1] -> G⁻(F) -> F -> 0 (graded R-modules) and 0 -> C -> G⁺(C) -> C[-1] -> 0.
struct CarrierSequence {
  ShortExactSeq seq;
  std::optional<ModuleMorphism> end_iso;  // kernel ≅ F[1], or cokernel ≅ C[-1]
};
CarrierSequence coinduced_carrier_sequence(const DeltaPtr& ext, const Module& f);
CarrierSequence induced_carrier_sequence(const DeltaPtr& ext, const Module& c);

/// [n]: degrees lowered by n, action of b scaled by (-1)^{n|b|} (so d becomes (-1)^n d).
CDGModule shift(const CDGModule& m, int n);
/// Y ⊕ X[1] with d = [[d_Y, φ], [0, -d_X]].
CDGModule cone(const ModuleMorphism& phi, const DeltaPtr& ext);
/// Cone(Cone(K -> L) -> M)[-1], carrier M[-1] ⊕ L ⊕ K[1] in this order. Throws on g f != 0.
CDGModule totalize(const ModuleMorphism& f, const ModuleMorphism& g, const DeltaPtr& ext);

/// Projective dimension of R / <R^{≠0}> (the graded top), capped.
RelDim graded_global_dimension(const DeltaPtr& ext, std::size_t cap = default_cap());

struct AcyclicityDecision {
  bool member = false;
  std::string method;                 // "tower", "contractible" or "filtration"
  std::optional<FpMatrix> homotopy;   // when contractible
  std::optional<Membership> membership;
  RelDim gldim;
  std::vector<std::string> notes;
};

/// Membership in the contraacyclic class via the Q-tower over (Proj, All) of graded R,
/// when gldim R <= k; otherwise only the contractible case is decided (LimitError).
AcyclicityDecision is_contraacyclic(const DeltaPtr& ext, const CDGModule& x, std::size_t k);
/// Dual, via the W-tower over (All, Inj).
AcyclicityDecision is_coacyclic(const DeltaPtr& ext, const CDGModule& x, std::size_t k);

struct TotalizationReport {
  CDGModule tot;
  AcyclicityDecision contra, co;
  std::vector<std::string> certificate;
  FpMatrix filtration;                        // columns spanning the sub of the filtration route
  std::optional<FpMatrix> sub_homotopy, quotient_homotopy;
  bool pass() const { return contra.member && co.member; }
};
/// Tot of an exact sequence of CDG-modules. When the towers do not apply, Tot is certified by
/// the two-step filtration {(0, f k', k)} ⊂ Tot with contractible sub and quotient.
TotalizationReport verify_totalization_acyclicity(const DeltaPtr& ext, const ShortExactSeq& s, std::size_t k);

namespace fixtures {
/// R = F_p in degree 0, d = 0, h = 0; A = F_p[δ]/δ^2.
CDGRing graded_dual_numbers_cdg(std::uint32_t p);
/// R = F_p[ε]/ε^2 with |ε| = 2, d = 0, h = ε; A ≅ F_p[δ]/δ^4.
CDGRing delta4_cdg(std::uint32_t p);
}  // namespace fixtures

}  // namespace ctw
