#include "doctest.h"
#include "oracles.hpp"

using namespace ctw;

namespace {

std::vector<AlgebraPtr> all_fixtures(std::uint32_t p) {
  return {fixtures::field_algebra(p), fixtures::dual_numbers(p), fixtures::upper_triangular(p),
          fixtures::diagonal(p),      fixtures::a2_path(p),      fixtures::a3_zero_relation(p)};
}

// Associativity brute force on all basis triples, written out directly.
bool associative(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::int64_t p = a.modulus();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t t = 0; t < n; ++t) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < n; ++k) {
            lhs += static_cast<std::int64_t>(a.coeff(i, j, k)) * a.coeff(k, l, t);
            rhs += static_cast<std::int64_t>(a.coeff(j, l, k)) * a.coeff(i, k, t);
          }
          if ((lhs - rhs) % p != 0) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("fixture algebras are valid") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (const auto& a : all_fixtures(p)) {
      CAPTURE(a->name());
      CHECK_FALSE(validate_algebra(*a).has_value());
      CHECK(associative(*a));
    }
}

TEST_CASE("validate_algebra examples") {
  SUBCASE("the field") {
    CHECK_FALSE(validate_algebra(*Algebra::make(5, 1, {1}, {1})).has_value());
  }
  SUBCASE("dual numbers over F_2") {
    CHECK_FALSE(validate_algebra(*fixtures::dual_numbers(2)).has_value());
  }
  SUBCASE("x*x = x is k x k, still valid") {
    auto a = Algebra::make(2, 2, {1, 0, 0, 1, 0, 1, 0, 1}, {1, 0});
    CHECK(associative(*a));
    CHECK_FALSE(validate_algebra(*a).has_value());
  }
  SUBCASE("non-associative table") {
    // b1 b1 = b2, b1 b2 = b1, b2 b1 = 0, b2 b2 = b2: (b1 b1) b1 = 0 but b1 (b1 b1) = b1.
    std::vector<std::uint32_t> c(27, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * 3 + j) * 3 + k] = 1; };
    for (std::size_t j = 0; j < 3; ++j) set(0, j, j), set(j, 0, j);
    set(1, 2, 1);
    set(2, 2, 2);
    set(1, 1, 2);
    auto a = Algebra::make(3, 3, c, {1, 0, 0});
    REQUIRE_FALSE(associative(*a));
    auto v = validate_algebra(*a);
    REQUIRE(v.has_value());
    CHECK(v->kind == AlgebraViolation::Kind::Associativity);
    CHECK(!v->message.empty());
  }
  SUBCASE("unit law fails") {
    auto a = Algebra::make(3, 2, {1, 0, 0, 1, 0, 1, 0, 0}, {0, 1});
    auto v = validate_algebra(*a);
    REQUIRE(v.has_value());
    CHECK(v->kind == AlgebraViolation::Kind::Unit);
  }
  SUBCASE("grading violated") {
    auto a = Algebra::make(3, 2, {1, 0, 0, 1, 0, 1, 1, 0}, {1, 0}, {0, 1});
    auto v = validate_algebra(*a);
    REQUIRE(v.has_value());
  }
}

TEST_CASE("opposite") {
  for (const auto& a : all_fixtures(3)) {
    auto op = opposite(a);
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j)
        for (std::size_t k = 0; k < a->dim(); ++k) CHECK(op->coeff(i, j, k) == a->coeff(j, i, k));
    CHECK(opposite(op)->same_as(*a));
    CHECK_FALSE(validate_algebra(*op).has_value());
  }
  auto d = fixtures::dual_numbers(3);
  CHECK(opposite(d)->same_as(*d));
  auto t = fixtures::upper_triangular(3);
  auto to = opposite(t);
  // e12 e22 = e12 in T, so e22 * e12 = e12 in T^op
  CHECK(to->coeff(2, 1, 1) == 1);
  CHECK(to->coeff(1, 2, 1) == 0);
}

TEST_CASE("path algebras") {
  QuiverSpec one;
  one.vertices = 1;
  CHECK(path_algebra(one, 5)->dim() == 1);
  CHECK(fixtures::a2_path(3)->dim() == 3);
  CHECK(fixtures::a3_zero_relation(3)->dim() == 5);
  QuiverSpec a3;
  a3.vertices = 3;
  a3.arrows = {{0, 1}, {1, 2}};
  CHECK(path_algebra(a3, 3)->dim() == 6);
  QuiverSpec kron;
  kron.vertices = 2;
  kron.arrows = {{0, 1}, {0, 1}};
  auto k = path_algebra(kron, 2);
  CHECK(k->dim() == 4);
  CHECK_FALSE(validate_algebra(*k).has_value());
  QuiverSpec cyc;
  cyc.vertices = 2;
  cyc.arrows = {{0, 1}, {1, 0}};
  CHECK_THROWS(path_algebra(cyc, 2));
  QuiverSpec loop;
  loop.vertices = 1;
  loop.arrows = {{0, 0}};
  CHECK_THROWS(path_algebra(loop, 2));
  // a commutative square with the relation ba - dc = 0
  QuiverSpec sq;
  sq.vertices = 4;
  sq.arrows = {{0, 1}, {1, 3}, {0, 2}, {2, 3}};
  sq.relations = {{PathTerm{1, {0, 1}}, PathTerm{-1, {2, 3}}}};
  auto s = path_algebra(sq, 3);
  CHECK(s->dim() == 4 + 4 + 1);
  CHECK_FALSE(validate_algebra(*s).has_value());
}

TEST_CASE("property: random path algebras validate") {
  oracle::Rng g(21);
  for (int t = 0; t < 25; ++t) {
    QuiverSpec q;
    q.vertices = 1 + g() % 4;
    for (std::size_t i = 0; i < q.vertices; ++i)
      for (std::size_t j = i + 1; j < q.vertices; ++j)
        if (g() % 2) q.arrows.emplace_back(i, j);
    auto a = path_algebra(q, 3);
    CHECK_FALSE(validate_algebra(*a).has_value());
    CHECK(associative(*a));
  }
}

TEST_CASE("tensor products and morphisms") {
  const std::uint32_t p = 3;
  auto a2 = fixtures::a2_path(p);
  auto d = fixtures::dual_numbers(p);
  auto t = tensor_product(a2, d);
  CHECK(t->dim() == 6);
  CHECK_FALSE(validate_algebra(*t).has_value());
  for (const auto& f : {fixtures::scalar_inclusion(d), fixtures::tensor_inclusion(a2, d, t),
                        fixtures::diagonal_inclusion(fixtures::diagonal(p), fixtures::upper_triangular(p))}) {
    CHECK_FALSE(validate_morphism(f).has_value());
    // φ(b_i b_j) = φ(b_i) φ(b_j) on all basis pairs
    for (std::size_t i = 0; i < f.source->dim(); ++i)
      for (std::size_t j = 0; j < f.source->dim(); ++j) {
        Vec bi = f.source->basis_vector(i), bj = f.source->basis_vector(j);
        CHECK(f.apply(f.source->multiply(bi, bj)) == f.target->multiply(f.apply(bi), f.apply(bj)));
      }
  }
  AlgebraMorphism bad{d, d, FpMatrix(2, 2, p)};
  CHECK(validate_morphism(bad).has_value());
}
