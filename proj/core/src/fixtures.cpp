#include "ctw/fixtures.hpp"

#include <functional>

namespace ctw::fixtures {

namespace {

std::vector<std::uint32_t> table(std::size_t n) { return std::vector<std::uint32_t>(n * n * n, 0); }

void set(std::vector<std::uint32_t>& c, std::size_t n, std::size_t i, std::size_t j, std::size_t k,
         std::uint32_t v = 1) {
  c[(i * n + j) * n + k] = v;
}

}  // namespace

AlgebraPtr field_algebra(std::uint32_t p) {
  auto c = table(1);
  set(c, 1, 0, 0, 0);
  return Algebra::make(p, 1, c, {1}, {}, {"1"}, "field");
}

AlgebraPtr dual_numbers(std::uint32_t p) {
  auto c = table(2);
  set(c, 2, 0, 0, 0);
  set(c, 2, 0, 1, 1);
  set(c, 2, 1, 0, 1);
  return Algebra::make(p, 2, c, {1, 0}, {}, {"1", "x"}, "dual");
}

AlgebraPtr upper_triangular(std::uint32_t p) {
  // e11 = 0, e12 = 1, e22 = 2
  auto c = table(3);
  set(c, 3, 0, 0, 0);
  set(c, 3, 0, 1, 1);
  set(c, 3, 1, 2, 1);
  set(c, 3, 2, 2, 2);
  return Algebra::make(p, 3, c, {1, 0, 1}, {}, {"e11", "e12", "e22"}, "triangular");
}

AlgebraPtr diagonal(std::uint32_t p) {
  auto c = table(2);
  set(c, 2, 0, 0, 0);
  set(c, 2, 1, 1, 1);
  return Algebra::make(p, 2, c, {1, 1}, {}, {"e11", "e22"}, "diagonal");
}

AlgebraPtr a2_path(std::uint32_t p) {
  QuiverSpec q;
  q.vertices = 2;
  q.arrows = {{0, 1}};
  q.arrow_labels = {"a"};
  return path_algebra(q, p, "a2");
}

AlgebraPtr a3_zero_relation(std::uint32_t p) {
  QuiverSpec q;
  q.vertices = 3;
  q.arrows = {{0, 1}, {1, 2}};
  q.arrow_labels = {"a", "b"};
  q.relations = {{PathTerm{1, {0, 1}}}};
  return path_algebra(q, p, "a3rad");
}

AlgebraPtr builtin_algebra(const std::string& name, std::uint32_t p) {
  if (name == "field") return field_algebra(p);
  if (name == "dual") return dual_numbers(p);
  if (name == "triangular") return upper_triangular(p);
  if (name == "diagonal") return diagonal(p);
  if (name == "a2") return a2_path(p);
  if (name == "a3rad") return a3_zero_relation(p);
  throw AlgebraError("unknown builtin algebra '" + name + "'");
}

AlgebraMorphism scalar_inclusion(const AlgebraPtr& a) {
  AlgebraPtr k = field_algebra(a->modulus());
  FpMatrix m(a->dim(), 1, a->modulus());
  for (std::size_t i = 0; i < a->dim(); ++i) m(i, 0) = a->unit()[i];
  return {k, a, m};
}

AlgebraMorphism diagonal_inclusion(const AlgebraPtr& diag, const AlgebraPtr& tri) {
  FpMatrix m(3, 2, tri->modulus());
  m(0, 0) = 1;
  m(2, 1) = 1;
  return {diag, tri, m};
}

AlgebraMorphism tensor_inclusion(const AlgebraPtr& r, const AlgebraPtr& b, const AlgebraPtr& rb) {
  FpMatrix m(rb->dim(), r->dim(), r->modulus());
  for (std::size_t i = 0; i < r->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j) m(i * b->dim() + j, i) = b->unit()[j];
  return {r, rb, m};
}

Module projective_at(const AlgebraPtr& a, std::size_t basis_index, Side side) {
  Module reg = Module::regular(a, side);
  FpMatrix e(a->dim(), 1, a->modulus());
  e(basis_index, 0) = 1;
  return generated_submodule(reg, e).module;
}

Module quotient_module(const Module& m, const FpMatrix& vectors) {
  Submodule sub = generated_submodule(m, vectors);
  return quotient(m, sub.inclusion.matrix).module;
}

Module dual_trivial(const AlgebraPtr& a) {
  const std::uint32_t p = a->modulus();
  return Module::create(a, {FpMatrix::identity(1, p), FpMatrix(1, 1, p)}, {}, Side::Left, "k");
}

A2Modules a2_modules(const AlgebraPtr& a2) {
  const std::uint32_t p = a2->modulus();
  // basis e1 = 0, e2 = 1, a = 2; P1 = A e1 = span{e1, a}, P2 = A e2 = S2.
  Module p1 = projective_at(a2, 0).renamed("P1");
  Module s2 = projective_at(a2, 1).renamed("S2");
  Submodule rad = generated_submodule(p1, p1.act(Vec{0, 0, 1}) * FpMatrix::identity(p1.dim(), p));
  Module s1 = quotient(p1, rad.inclusion.matrix).module.renamed("S1");
  return {p1, s1, s2};
}

TriangularModules triangular_modules(const AlgebraPtr& tri) {
  const std::uint32_t p = tri->modulus();
  Module p1 = projective_at(tri, 0).renamed("P1");
  Module p2 = projective_at(tri, 2).renamed("P2");
  Submodule rad = generated_submodule(p2, p2.act(Vec{0, 1, 0}) * FpMatrix::identity(p2.dim(), p));
  Module s2 = quotient(p2, rad.inclusion.matrix).module.renamed("S2");
  return {p1, p2, s2};
}

std::vector<Module> sums_up_to(const std::vector<Module>& ind, std::size_t max_dim) {
  std::vector<Module> out;
  std::vector<std::size_t> counts(ind.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (pos == ind.size()) {
      std::vector<Module> parts;
      for (std::size_t i = 0; i < ind.size(); ++i)
        for (std::size_t c = 0; c < counts[i]; ++c) parts.push_back(ind[i]);
      if (!parts.empty()) out.push_back(parts.size() == 1 ? parts.front() : direct_sum(parts).module);
      return;
    }
    for (std::size_t c = 0; used + c * ind[pos].dim() <= max_dim; ++c) {
      counts[pos] = c;
      rec(pos + 1, used + c * ind[pos].dim());
      if (ind[pos].dim() == 0) break;
    }
    counts[pos] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace ctw::fixtures
