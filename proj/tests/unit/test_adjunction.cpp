#include "doctest.h"
#include "oracles.hpp"

using namespace ctw;

namespace {

struct Setting {
  RingMap rm;
  std::vector<Module> base;  // R-modules
  std::vector<Module> top;   // A-modules
};

std::vector<Setting> settings(std::uint32_t p) {
  std::vector<Setting> out;
  auto d = fixtures::dual_numbers(p);
  {
    RingMap rm = RingMap::make(fixtures::scalar_inclusion(d));
    out.push_back({rm, {Module::free(rm.base(), {0}), Module::free(rm.base(), {0, 0})},
                   {fixtures::dual_trivial(d), Module::regular(d)}});
  }
  {
    auto dg = fixtures::diagonal(p), t = fixtures::upper_triangular(p);
    RingMap rm = RingMap::make(fixtures::diagonal_inclusion(dg, t));
    auto tm = fixtures::triangular_modules(t);
    out.push_back({rm, {fixtures::projective_at(dg, 0), fixtures::projective_at(dg, 1)}, {tm.p1, tm.p2, tm.s2}});
  }
  {
    auto a2 = fixtures::a2_path(p);
    auto b = tensor_product(a2, d);
    RingMap rm = RingMap::make(fixtures::tensor_inclusion(a2, d, b));
    auto am = fixtures::a2_modules(a2);
    out.push_back({rm, {am.p1, am.s1, am.s2}, {fixtures::projective_at(b, 0), fixtures::projective_at(b, 2)}});
  }
  {
    auto a2 = fixtures::a2_path(p);
    RingMap rm = RingMap::make(identity_morphism(a2));
    auto am = fixtures::a2_modules(a2);
    out.push_back({rm, {am.p1, am.s1, am.s2}, {am.p1, am.s1, am.s2}});
  }
  for (auto c : {fixtures::graded_dual_numbers_cdg(p), fixtures::delta4_cdg(p)}) {
    auto ext = delta_extension(c);
    Module r = Module::regular(ext->cdg.r);
    out.push_back({ext->rm, {r, shift(r, 1)}, {Module::regular(ext->a)}});
  }
  return out;
}

}  // namespace

TEST_CASE("restriction") {
  for (const auto& s : settings(3)) {
    for (const auto& m : s.top) {
      Module r = restrict(s.rm, m);
      CHECK(r.dim() == m.dim());
      CHECK_FALSE(validate_module(r).has_value());
      CHECK(same_algebra(r.ring(), s.rm.base()));
    }
    CHECK(restrict(s.rm, Module::regular(s.rm.top())).dim() == s.rm.top()->dim());
  }
  auto a2 = fixtures::a2_path(3);
  auto am = fixtures::a2_modules(a2);
  RingMap id = RingMap::make(identity_morphism(a2));
  CHECK(restrict(id, am.p1).actions() == am.p1.actions());
}

TEST_CASE("induction and coinduction dimensions") {
  const std::uint32_t p = 3;
  auto d = fixtures::dual_numbers(p);
  RingMap rm = RingMap::make(fixtures::scalar_inclusion(d));
  for (std::size_t n = 0; n <= 3; ++n) {
    Module v = Module::free(rm.base(), std::vector<int>(n, 0));
    CHECK(induce(rm, v).module.dim() == 2 * n);
    CHECK(coinduce(rm, v).module.dim() == 2 * n);
    if (n) CHECK(find_isomorphism(induce(rm, v).module, coinduce(rm, v).module).has_value());
  }
  auto a2 = fixtures::a2_path(p);
  RingMap id = RingMap::make(identity_morphism(a2));
  for (const auto& l : {fixtures::a2_modules(a2).p1, fixtures::a2_modules(a2).s1}) {
    CHECK(find_isomorphism(induce(id, l).module, l).has_value());
    CHECK(find_isomorphism(coinduce(id, l).module, l).has_value());
  }
  for (auto c : {fixtures::graded_dual_numbers_cdg(p), fixtures::delta4_cdg(p)}) {
    auto ext = delta_extension(c);
    Module s = Module::regular(ext->cdg.r);
    CHECK(induce(ext->rm, s).module.dim() == 2 * s.dim());
    CHECK(coinduce(ext->rm, s).module.dim() == 2 * s.dim());
  }
}

TEST_CASE("unit and counit identities on every fixture") {
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& s : settings(p)) {
      for (const auto& m : s.top) {
        auto u = coinduction_unit(s.rm, m);
        CHECK_FALSE(validate_morphism(u.nu).has_value());
        CHECK(u.nu.is_injective());
        CHECK((u.phi.matrix * u.nu.matrix).is_identity());
        auto c = induction_counit(s.rm, m);
        CHECK_FALSE(validate_morphism(c.pi).has_value());
        CHECK(c.pi.is_surjective());
        CHECK((c.pi.matrix * c.epsilon.matrix).is_identity());
      }
      for (const auto& l : s.base) {
        // ν of a coinduced module and π of an induced module split as A-maps
        Module co = coinduce(s.rm, l).module;
        auto u = coinduction_unit(s.rm, co);
        ShortExactSeq a{u.nu, cokernel(u.nu).projection};
        CHECK(split_retraction(a).has_value());
        Module in = induce(s.rm, l).module;
        auto c = induction_counit(s.rm, in);
        ShortExactSeq b{kernel(c.pi).inclusion, c.pi};
        CHECK(split_section(b).has_value());
      }
    }
  }
}

TEST_CASE("property: adjunction hom dimensions") {
  for (const auto& s : settings(3)) {
    for (const auto& l : s.base)
      for (const auto& n : s.top) {
        CHECK(hom_dim(induce(s.rm, l).module, n) == oracle::hom_dim(l, restrict(s.rm, n)));
        CHECK(hom_dim(n, coinduce(s.rm, l).module) == oracle::hom_dim(restrict(s.rm, n), l));
      }
  }
}

TEST_CASE("property: induce and coinduce are additive and functorial") {
  for (const auto& s : settings(3)) {
    if (s.base.size() < 2) continue;
    const Module& a = s.base[0];
    const Module& b = s.base[1];
    auto sum = direct_sum(a, b).module;
    CHECK(induce(s.rm, sum).module.dim() == induce(s.rm, a).module.dim() + induce(s.rm, b).module.dim());
    CHECK(coinduce(s.rm, sum).module.dim() == coinduce(s.rm, a).module.dim() + coinduce(s.rm, b).module.dim());
    for (const auto& f : hom_space(a, b)) {
      auto fi = induce_map(s.rm, f);
      auto fc = coinduce_map(s.rm, f);
      CHECK_FALSE(validate_morphism(fi).has_value());
      CHECK_FALSE(validate_morphism(fc).has_value());
    }
    auto idi = induce_map(s.rm, ModuleMorphism::identity(a));
    CHECK(idi.matrix.is_identity());
    auto idc = coinduce_map(s.rm, ModuleMorphism::identity(a));
    CHECK(idc.matrix.is_identity());
  }
}

TEST_CASE("verify_hom_iso examples") {
  const std::uint32_t p = 3;
  auto d = fixtures::dual_numbers(p);
  RingMap rm = RingMap::make(fixtures::scalar_inclusion(d));
  auto rep = verify_hom_iso(rm, fixtures::dual_trivial(d), Module::free(rm.base(), {0}), 3);
  CHECK(rep.hypothesis_a);
  CHECK(rep.hypothesis_b);
  CHECK(rep.pass());
  REQUIRE(rep.rows.size() == 4);
  for (const auto& r : rep.rows) {
    CHECK(r.ext_a_coinduced == r.ext_r_restricted);
    CHECK(r.ext_a_induced == r.ext_r_base);
  }
  auto a2 = fixtures::a2_path(p);
  auto am = fixtures::a2_modules(a2);
  RingMap id = RingMap::make(identity_morphism(a2));
  CHECK(verify_hom_iso(id, am.s1, am.s2, 2).pass());
  auto ext = delta_extension(fixtures::graded_dual_numbers_cdg(p));
  Module r = Module::regular(ext->cdg.r);
  auto gm = coinduce(ext->rm, r).module;
  for (std::size_t i = 1; i <= 3; ++i) CHECK(ext_dim(Module::regular(ext->a), gm, i) == 0);
  CHECK(is_injective(gm));
}
