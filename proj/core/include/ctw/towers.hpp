#pragma once

// Finite towers: the Q-pullback and W-pushout constructions along R -> A,
// membership in the lifted classes, Bongartz-Ringel towers and (co)tilting
// checks.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctw/adjunction.hpp"
#include "ctw/cotorsion.hpp"

namespace ctw {

enum class TowerDirection { Filtration, Cofiltration };
enum class LayerKind { Coinduced, Induced, Power };

const char* direction_name(TowerDirection d);
const char* layer_kind_name(LayerKind k);

struct TowerLayer {
  LayerKind kind = LayerKind::Power;
  Module base;             // C for Hom_R(A, C), F for A ⊗_R F, S for S^copies
  std::size_t copies = 1;  // Power only
  Module module;           // the layer itself
  FpMatrix witness;        // dim target x dim module; induces layer ≅ flag[j+1] / flag[j]
};

/// A finite filtration or cofiltration of `target`, stored as a flag of submodules
/// 0 = flag[0] ⊂ ... ⊂ flag[α] = target. For a cofiltration the stages are the
/// quotients G_i = target / flag[α - i], so layers[α - 1 - i] = ker(G_{i+1} -> G_i).
struct Tower {
  TowerDirection direction = TowerDirection::Filtration;
  Module target;
  std::vector<FpMatrix> flag;
  std::vector<TowerLayer> layers;
  std::shared_ptr<const RingMap> ring_map;  // needed for coinduced / induced layers

  std::size_t length() const { return layers.size(); }
  /// F_i (filtration) or G_i (cofiltration).
  Module stage(std::size_t i) const;
};

/// Zero tower of length 0 on the zero module.
Tower zero_tower(const Module& zero, TowerDirection d);

/// Re-runs every flag, layer and witness check. Empty result = pass.
std::vector<std::string> verify_tower(const Tower& t);

enum class ApproxSide { Precover, Preenvelope };

struct ApproximationCertificate {
  ShortExactSeq seq;
  ApproxSide side = ApproxSide::Precover;
  /// Tower on seq.left() (precover kernel) / seq.middle() for the Q side and Bongartz
  /// precovers; on seq.middle() / seq.right() for the W side. `tower_on` names it.
  Tower tower;
  std::string tower_on;  // "left", "middle" or "right"
  std::vector<std::string> notes;
};

/// Exactness plus verify_tower plus the tower target matching the named term.
std::vector<std::string> verify_certificate(const ApproximationCertificate& c);

enum class LiftSide { Coinduced, Induced };

struct LiftedPairConfig {
  std::shared_ptr<const RingMap> rm;
  CotorsionOracle base;  // over R
  std::size_t k = 0;
  LiftSide side = LiftSide::Coinduced;
  std::vector<Module> sample;            // (††) / (†) sample over R
  std::vector<std::string> certificates;  // precondition certificates

  /// Checks restrict(A) in 𝔉 (Coinduced) or D(A) in ℭ (Induced) and the stability
  /// condition on every sample module in the relevant class. Throws CertificationError.
  static LiftedPairConfig make(RingMap rm, CotorsionOracle base, std::size_t k, LiftSide side,
                               std::vector<Module> sample = {});
};

struct QStep {
  Module q;                      // Q(M)
  ModuleMorphism surj;           // Q(M) ->> M
  ShortExactSeq base_precover;   // 0 -> C' -> F -> restrict M -> 0
  Coinduced layer;               // Hom_R(A, C')
  ModuleMorphism layer_map;      // Hom_R(A, C') -> Q(M), image = ker surj
  std::vector<std::string> notes;
};
QStep q_step(const LiftedPairConfig& cfg, const Module& m);
/// 0 -> D' -> Q^n(M) -> M -> 0 with restrict Q^n(M) in 𝔉 and D' cofiltered by
/// coinduced layers, n <= k.
ApproximationCertificate q_tower(const LiftedPairConfig& cfg, const Module& m, std::size_t k);
/// 0 -> N -> H -> Q -> 0 with H cofiltered by at most k + 1 coinduced layers.
ApproximationCertificate q_preenvelope(const LiftedPairConfig& cfg, const Module& n, std::size_t k);

struct WStep {
  Module w;                        // W(N)
  ModuleMorphism inj;              // N -> W(N)
  ShortExactSeq base_preenvelope;  // 0 -> restrict N -> C -> F' -> 0
  Induced layer;                   // A ⊗_R F'
  ModuleMorphism layer_proj;       // W(N) ->> A ⊗_R F', kernel = image inj
  std::vector<std::string> notes;
};
WStep w_step(const LiftedPairConfig& cfg, const Module& n);
/// 0 -> N -> W^n(N) -> D -> 0 with restrict W^n(N) in ℭ and D filtered by induced layers.
ApproximationCertificate w_tower(const LiftedPairConfig& cfg, const Module& n, std::size_t k);
/// 0 -> W -> H -> M -> 0 with H filtered by at most k + 1 induced layers.
ApproximationCertificate w_precover(const LiftedPairConfig& cfg, const Module& m, std::size_t k);

struct Membership {
  bool member = false;
  ApproximationCertificate approximation;
  std::optional<ModuleMorphism> splitting;  // retraction (ℭ_A) or section (𝔉^A)
  std::optional<ExtClass> obstruction;      // class of the non-split approximation
};
/// X in ℭ_A iff its q_preenvelope splits.
Membership membership_in_CA(const LiftedPairConfig& cfg, const Module& x);
/// X in 𝔉^A iff its w_precover splits.
Membership membership_in_FA_dual(const LiftedPairConfig& cfg, const Module& x);

/// S_0 an injective cogenerator, Ext^1(S_j, S_i) = 0 for i <= j. Returns
/// 0 -> D' -> F -> M -> 0 with Ext^1(F, S_i) = 0 and D' cofiltered by Prod(S_i).
ApproximationCertificate dual_bongartz_precover(const std::vector<Module>& s, const Module& m);
/// S_0 a projective generator, Ext^1(S_i, S_j) = 0 for i <= j. Returns
/// 0 -> M -> C -> F' -> 0 with Ext^1(S_i, C) = 0 and F' filtered by Add(S_i).
ApproximationCertificate bongartz_preenvelope(const std::vector<Module>& s, const Module& m);

/// (^{⊥1}S, (^{⊥1}S)^{⊥1}) with dual Bongartz precovers and Salce preenvelopes.
CotorsionOracle cogenerated_oracle(const std::vector<Module>& s, std::string name = {});
/// (^{⊥1}(S^{⊥1}), S^{⊥1}) with Bongartz preenvelopes and Salce precovers.
CotorsionOracle generated_oracle(const std::vector<Module>& s, std::string name = {});

struct ClauseReport {
  bool pass = false;
  std::string detail;
};

struct TiltingReport {
  std::size_t n = 0;
  RelDim dimension;                 // projective (tilting) or injective (cotilting) dimension
  std::vector<std::size_t> self_ext;  // dim Ext^i(T, T), 1 <= i <= n + 2
  ClauseReport c1, c2, c3;
  std::vector<std::string> assumptions;
  bool pass() const { return c1.pass && c2.pass && c3.pass; }
};

/// Witness for (T3): maps X_0 -> X_1 -> ... -> X_{r+1} forming an exact sequence
/// 0 -> X_0 -> ... -> X_{r+1} -> 0 with X_0 a projective generator and the rest in add(T).
TiltingReport tilting_check(const Module& t, std::size_t n, const std::vector<ModuleMorphism>& witness = {});
/// Witness for (C3): 0 -> X_0 -> ... -> X_r -> W -> 0 with X_j in add(U) and W an
/// injective cogenerator.
TiltingReport cotilting_check(const Module& u, std::size_t n, const std::vector<ModuleMorphism>& witness = {});

struct DerivedSequenceReport {
  std::vector<bool> perp1_all;  // Ext^1(X, U_j) = 0 for all j
  std::vector<bool> perp_pos;   // Ext^i(X, U) = 0 for 1 <= i <= n + 1
  std::vector<TiltingReport> levels;
  std::vector<std::string> failures;
  std::vector<std::string> assumptions;
  bool pass() const { return failures.empty(); }
};
DerivedSequenceReport verify_derived_sequence(const Module& u, std::size_t n, const std::vector<Module>& us,
                                              const std::vector<Module>& sample,
                                              const std::vector<std::vector<ModuleMorphism>>& witnesses = {});

}  // namespace ctw
