#pragma once

// Cotorsion pairs presented by membership predicates and approximation
// providers, Salce conversions, orthogonality checks and relative
// (co)resolution dimensions.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctw/homological.hpp"
#include "ctw/limits.hpp"

namespace ctw {

/// A certificate could not be produced; carries the module that failed.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, Module offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  const Module& offending() const { return offending_; }

 private:
  Module offending_;
};

using ModulePredicate = std::function<bool(const Module&)>;
using ApproxProvider = std::function<ShortExactSeq(const Module&)>;

struct CotorsionOracle {
  std::string name;
  AlgebraPtr ring;
  Side side = Side::Left;
  ModulePredicate in_F;
  ModulePredicate in_C;
  /// 0 -> C' -> F -> M -> 0 with F in 𝔉 and C' in ℭ. Providers certify their output.
  ApproxProvider precover;
  /// 0 -> M -> C -> F' -> 0 with C in ℭ and F' in 𝔉.
  ApproxProvider preenvelope;
  std::vector<Module> generators;    // ℭ = generators^{⊥1}
  std::vector<Module> cogenerators;  // 𝔉 = ^{⊥1}cogenerators
  /// Membership predicates are cheap linear tests (true for the builtin pairs).
  bool direct_membership = false;
  std::vector<std::string> assumptions;
};

/// 𝔉 = projectives, ℭ = all modules.
CotorsionOracle proj_all(const AlgebraPtr& a);
/// 𝔉 = all modules, ℭ = injectives.
CotorsionOracle all_inj(const AlgebraPtr& a);

/// Throws CertificationError unless s is exact with middle in 𝔉 and kernel in ℭ.
void certify_precover(const CotorsionOracle& o, const ShortExactSeq& s);
/// Throws CertificationError unless s is exact with middle in ℭ and cokernel in 𝔉.
void certify_preenvelope(const CotorsionOracle& o, const ShortExactSeq& s);

struct OrthogonalityReport {
  std::vector<std::vector<std::size_t>> ext1;  // ext1[f][c] = dim Ext^1(F_f, C_c)
  bool pass = true;
};
OrthogonalityReport check_orthogonal(const std::vector<Module>& f_sample, const std::vector<Module>& c_sample);

struct HereditaryReport {
  std::vector<std::vector<std::size_t>> ext2;
  std::size_t kernels_checked = 0;
  std::size_t cokernels_checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
/// Ext^2 grid on the samples, kernels of sampled surjections inside 𝔉 and cokernels
/// of sampled injections inside ℭ. Sampled maps are the hom basis and its sum.
HereditaryReport check_hereditary(const CotorsionOracle& o, const std::vector<Module>& f_sample,
                                  const std::vector<Module>& c_sample);

struct SalceResult {
  ShortExactSeq seq;            // 0 -> C -> H -> M -> 0, or 0 -> M -> H -> F -> 0
  ShortExactSeq start;          // 0 -> N -> E -> M -> 0 (free cover), or 0 -> M -> I -> Z -> 0
  ShortExactSeq approximation;  // preenvelope of N, or precover of Z
  ShortExactSeq closure;        // 0 -> E -> H -> F' -> 0, or 0 -> C' -> H -> I -> 0
  std::vector<std::string> certificate;
};

/// Special precover of M from the preenvelope provider: cover E ->> M with kernel N,
/// preenvelope 0 -> N -> C -> F' -> 0, H the pushout of E <- N -> C.
SalceResult salce_precover_from_preenvelope(const CotorsionOracle& o, const Module& m);
/// Special preenvelope of M from the precover provider: embedding M -> I with cokernel Z,
/// precover 0 -> C' -> F -> Z -> 0, H the pullback of I -> Z <- F.
SalceResult salce_preenvelope_from_precover(const CotorsionOracle& o, const Module& m);

struct RelDim {
  std::size_t value = 0;
  bool at_least = false;  // value is a lower bound (cap exceeded)
  std::string str() const { return at_least ? "AtLeast(" + std::to_string(value) + ")" : std::to_string(value); }
  bool operator==(const RelDim&) const = default;
};

/// First l with C_l in 𝔉 along iterated special precovers, or AtLeast(cap + 1).
RelDim rel_resolution_dim(const CotorsionOracle& o, const Module& m, std::size_t cap = default_cap());
/// Dual: first l with D^l in ℭ along iterated special preenvelopes.
RelDim rel_coresolution_dim(const CotorsionOracle& o, const Module& n, std::size_t cap = default_cap());

}  // namespace ctw
