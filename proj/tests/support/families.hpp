#pragma once

// Fixture families shared by the unit tests and the acceptance driver.

#include "oracles.hpp"

namespace family {

using namespace ctw;

/// Drop modules isomorphic to an earlier entry.
inline std::vector<Module> distinct(const std::vector<Module>& ms) {
  std::vector<Module> out;
  for (const auto& m : ms) {
    bool seen = false;
    for (const auto& o : out)
      if (o.dim() == m.dim() && o.degrees() == m.degrees() && find_isomorphism(o, m).has_value()) seen = true;
    if (!seen) out.push_back(m);
  }
  return out;
}

struct DualNumbers {
  AlgebraPtr a;
  RingMap rm;  // F_p -> F_p[x]/x^2
  Module k, free;
  explicit DualNumbers(std::uint32_t p)
      : a(fixtures::dual_numbers(p)),
        rm(RingMap::make(fixtures::scalar_inclusion(a))),
        k(fixtures::dual_trivial(a)),
        free(Module::regular(a)) {}
};

struct Triangular {
  AlgebraPtr a, diag;
  RingMap rm;  // diagonal -> upper triangular
  fixtures::TriangularModules m;
  explicit Triangular(std::uint32_t p)
      : a(fixtures::upper_triangular(p)),
        diag(fixtures::diagonal(p)),
        rm(RingMap::make(fixtures::diagonal_inclusion(diag, a))),
        m(fixtures::triangular_modules(a)) {}
};

/// R = A2 path algebra inside A = A2 ⊗ F_p[x]/x^2.
struct A2Dual {
  AlgebraPtr r, d, a;
  RingMap rm;
  fixtures::A2Modules rmods;
  std::vector<Module> indecomposables;  // pairwise non-isomorphic A-modules
  explicit A2Dual(std::uint32_t p)
      : r(fixtures::a2_path(p)),
        d(fixtures::dual_numbers(p)),
        a(tensor_product(r, d)),
        rm(RingMap::make(fixtures::tensor_inclusion(r, d, a))),
        rmods(fixtures::a2_modules(r)) {
    // basis (e1,1) (e1,x) (e2,1) (e2,x) (a,1) (a,x)
    std::vector<Module> ms;
    for (std::size_t e : {0u, 2u}) {
      Module pe = fixtures::projective_at(a, e);
      ms.push_back(pe);
      FpMatrix rad(pe.dim(), 0, p), xs(pe.dim(), 0, p);
      for (std::size_t b : {1u, 3u, 4u, 5u}) rad = hstack(rad, pe.action(b));
      for (std::size_t b : {1u, 3u, 5u}) xs = hstack(xs, pe.action(b));
      ms.push_back(fixtures::quotient_module(pe, rad));
      ms.push_back(fixtures::quotient_module(pe, xs));
    }
    for (const auto& l : {rmods.p1, rmods.s1, rmods.s2}) {
      ms.push_back(induce(rm, l).module);
      ms.push_back(coinduce(rm, l).module);
    }
    indecomposables = distinct(ms);
  }
};

/// A2 with the APR tilting module T = P1 ⊕ S1 and its (T3) witness 0 -> A -> P1^2 -> S1 -> 0.
struct A2Tilting {
  AlgebraPtr a;
  fixtures::A2Modules m;
  Module reg, t, cog;
  explicit A2Tilting(std::uint32_t p)
      : a(fixtures::a2_path(p)),
        m(fixtures::a2_modules(a)),
        reg(Module::regular(a)),
        t(direct_sum(m.p1, m.s1).module),
        cog(dual(Module::regular(a, Side::Right))) {}

  /// X0 = P1 ⊕ S2 -> X1 = P1 ⊕ P1 -> X2 = S1.
  std::vector<ModuleMorphism> witness() const {
    const std::uint32_t p = a->modulus();
    Module x0 = direct_sum(m.p1, m.s2).module, x1 = power(m.p1, 2).module;
    ModuleMorphism soc = hom_space(m.s2, m.p1).at(0), top = hom_space(m.p1, m.s1).at(0);
    FpMatrix f(4, 3, p);
    f.set_block(0, 0, FpMatrix::identity(2, p));
    f.set_block(2, 2, soc.matrix);
    FpMatrix g(1, 4, p);
    g.set_block(0, 2, top.matrix);
    return {ModuleMorphism::create(x0, x1, f), ModuleMorphism::create(x1, m.s1, g)};
  }
};

/// CDG fixtures: modules are graded modules over A = R[δ].
struct CDGFamily {
  DeltaPtr ext;
  explicit CDGFamily(CDGRing c) : ext(delta_extension(c)) {}

  std::uint32_t p() const { return ext->a->modulus(); }
  CDGModule cdg(const Module& m) const { return as_cdg(ext, m); }
  Module regular() const { return Module::regular(ext->a); }

  /// Over the graded dual numbers: the complex with the given degrees and differential.
  Module complex(const std::vector<int>& degrees, const FpMatrix& d) const {
    return Module::create(ext->a, {FpMatrix::identity(degrees.size(), p()), d}, degrees);
  }

  /// Graded dual numbers: the indecomposable complexes with support in [lo, hi]:
  /// k[-i] (one-dimensional, d = 0) and the two-term acyclic complexes k -> k.
  std::vector<Module> complexes(int lo, int hi) const {
    std::vector<Module> out;
    for (int i = lo; i <= hi; ++i) out.push_back(complex({i}, FpMatrix(1, 1, p())));
    for (int i = lo; i < hi; ++i) {
      FpMatrix d(2, 2, p());
      d(1, 0) = 1;
      out.push_back(complex({i, i + 1}, d));
    }
    return out;
  }

  /// A / (A x) for a homogeneous element x of A.
  Module cyclic_quotient(const Vec& x) const {
    return fixtures::quotient_module(regular(), FpMatrix::column_vector(x, p()));
  }

  /// Building blocks for random exact sequences: A, its cyclic quotients by powers of δ,
  /// G±(R) and their shifts by ±1.
  std::vector<Module> blocks() const {
    std::vector<Module> base = {regular()};
    Vec pw = ext->delta;
    for (int j = 1; j < 4; ++j) {
      bool zero = true;
      for (auto c : pw) zero = zero && c == 0;
      if (zero) break;
      base.push_back(cyclic_quotient(pw));
      pw = ext->a->multiply(pw, ext->delta);
    }
    Module r = Module::regular(ext->cdg.r);
    base.push_back(g_plus(ext, r).graded);
    base.push_back(g_minus(ext, r).graded);
    std::vector<Module> out;
    for (const auto& m : base)
      for (int s : {-1, 0, 1}) out.push_back(shift(m, s));
    return out;
  }
};

}  // namespace family
