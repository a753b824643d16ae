#pragma once

// Small algebras, ring maps and modules used as built-in examples.

#include <string>
#include <vector>

#include "ctw/homological.hpp"

namespace ctw::fixtures {

AlgebraPtr field_algebra(std::uint32_t p);
/// F_p[x]/(x^2), basis {1, x}.
AlgebraPtr dual_numbers(std::uint32_t p);
/// Upper-triangular 2x2 matrices, basis {e11, e12, e22}.
AlgebraPtr upper_triangular(std::uint32_t p);
/// Diagonal 2x2 matrices, basis {e11, e22}.
AlgebraPtr diagonal(std::uint32_t p);
/// Path algebra of 1 -> 2, basis {e1, e2, a}.
AlgebraPtr a2_path(std::uint32_t p);
/// Path algebra of 1 -> 2 -> 3 with the composite killed (dim 5).
AlgebraPtr a3_zero_relation(std::uint32_t p);

/// Builtin algebra by name: "field", "dual", "triangular", "diagonal", "a2", "a3rad".
AlgebraPtr builtin_algebra(const std::string& name, std::uint32_t p);

/// F_p -> A (unit).
AlgebraMorphism scalar_inclusion(const AlgebraPtr& a);
/// diagonal -> upper_triangular.
AlgebraMorphism diagonal_inclusion(const AlgebraPtr& diag, const AlgebraPtr& tri);
/// R -> R ⊗ B, r -> r ⊗ 1.
AlgebraMorphism tensor_inclusion(const AlgebraPtr& r, const AlgebraPtr& b, const AlgebraPtr& rb);

/// A e for a basis element e of A (typically an idempotent).
Module projective_at(const AlgebraPtr& a, std::size_t basis_index, Side side = Side::Left);
/// M modulo the submodule generated by the given vectors (columns).
Module quotient_module(const Module& m, const FpMatrix& vectors);

/// Over the dual numbers: the trivial module k (x acts by 0).
Module dual_trivial(const AlgebraPtr& a);

/// Indecomposables of the A2 path algebra: P1 (dim 2), S1, S2.
struct A2Modules {
  Module p1, s1, s2;
};
A2Modules a2_modules(const AlgebraPtr& a2);

/// Indecomposables of the upper-triangular algebra: P1 = column (e11, e21-free) etc.
struct TriangularModules {
  Module p1;  // A e11, simple projective
  Module p2;  // A e22, projective-injective, dim 2
  Module s2;  // top of p2, injective
};
TriangularModules triangular_modules(const AlgebraPtr& tri);

/// All direct sums of the given indecomposables with total dimension <= max_dim
/// (each multiset once, in a canonical order).
std::vector<Module> sums_up_to(const std::vector<Module>& indecomposables, std::size_t max_dim);

}  // namespace ctw::fixtures
