// Acceptance driver: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "families.hpp"
#include "workbench.hpp"

using namespace ctw;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool run(int number, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) o.require(false, "over the time budget");
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", number, title, s,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

std::vector<Module> modules_of(const std::vector<oracle::Sum>& sums) {
  std::vector<Module> out;
  for (const auto& s : sums) out.push_back(s.module);
  return out;
}

// 1
void ext_tor(Outcome& o) {
  family::DualNumbers d(2);
  Module kr = Module::create(d.a, {FpMatrix::identity(1, 2), FpMatrix(1, 1, 2)}, {}, Side::Right);
  for (std::size_t i = 0; i <= 5; ++i) {
    const std::size_t e = ext_dim(d.k, d.k, i), t = tor_dim(kr, d.k, i);
    o.require(e == oracle::periodic_ext_dim(d.k, 1, i) && e == 1, "Ext^" + std::to_string(i));
    o.require(t == oracle::periodic_tor_dim(d.k, 1, i) && t == 1, "Tor_" + std::to_string(i));
  }
}

// 2
struct HomIsoSetting {
  RingMap rm;
  std::vector<Module> base, top;
};

void hom_iso(Outcome& o) {
  const std::uint32_t p = 3;
  std::vector<HomIsoSetting> settings;
  {
    auto d = fixtures::dual_numbers(p);
    RingMap rm = RingMap::make(fixtures::scalar_inclusion(d));
    settings.push_back({rm, {Module::free(rm.base(), {0})}, {fixtures::dual_trivial(d), Module::regular(d)}});
  }
  {
    auto dg = fixtures::diagonal(p), t = fixtures::upper_triangular(p);
    RingMap rm = RingMap::make(fixtures::diagonal_inclusion(dg, t));
    auto tm = fixtures::triangular_modules(t);
    settings.push_back({rm, {fixtures::projective_at(dg, 0), fixtures::projective_at(dg, 1)}, {tm.p1, tm.p2, tm.s2}});
  }
  {
    family::A2Dual ad(p);
    settings.push_back({ad.rm, {ad.rmods.p1, ad.rmods.s1, ad.rmods.s2}, ad.indecomposables});
  }
  oracle::Rng g(2024);
  std::size_t fixtures_run = 0;
  for (int round = 0; round < 4; ++round)
    for (const auto& s : settings)
      for (int n = 0; n < 2; ++n) {
        auto bs = oracle::sums(s.top, 3), ms = oracle::sums(s.base, 3);
        Module b = oracle::scramble(bs[g() % bs.size()].module, g);
        Module m = oracle::scramble(ms[g() % ms.size()].module, g);
        auto rep = verify_hom_iso(s.rm, b, m, 3);
        if (!(rep.hypothesis_a && rep.hypothesis_b)) continue;
        ++fixtures_run;
        for (const auto& row : rep.rows)
          o.require(row.ext_a_coinduced == row.ext_r_restricted && row.ext_a_induced == row.ext_r_base,
                    "columns disagree at i = " + std::to_string(row.i));
        o.require(rep.rows.size() == 4, "rows 0..3");
      }
  o.require(fixtures_run >= 20, "fewer than 20 fixtures satisfied the hypotheses");
}

// 3
void salce(Outcome& o) {
  const std::uint32_t p = 3;
  auto a2 = fixtures::a2_path(p);
  auto am = fixtures::a2_modules(a2);
  family::DualNumbers d(p);
  struct Case {
    CotorsionOracle oracle;
    std::vector<Module> modules;
  };
  std::vector<Case> cases = {
      {proj_all(a2), modules_of(oracle::sums({am.p1, am.s1, am.s2}, 4))},
      {all_inj(a2), modules_of(oracle::sums({am.p1, am.s1, am.s2}, 4))},
      {proj_all(d.a), modules_of(oracle::sums({d.k, d.free}, 4))},
      {all_inj(d.a), modules_of(oracle::sums({d.k, d.free}, 4))},
  };
  for (const auto& c : cases)
    for (const auto& m : c.modules) {
      auto pre = salce_precover_from_preenvelope(c.oracle, m);
      o.require(!validate_ses(pre.seq) && !validate_ses(pre.closure), "precover sequence not exact");
      certify_precover(c.oracle, pre.seq);
      o.require(c.oracle.in_F(pre.seq.middle()) && c.oracle.in_C(pre.seq.left()), "precover end classes");
      auto env = salce_preenvelope_from_precover(c.oracle, m);
      o.require(!validate_ses(env.seq) && !validate_ses(env.closure), "preenvelope sequence not exact");
      certify_preenvelope(c.oracle, env.seq);
      o.require(c.oracle.in_C(env.seq.middle()) && c.oracle.in_F(env.seq.right()), "preenvelope end classes");
    }
}

// 4
void q_tower_k0(Outcome& o) {
  for (std::uint32_t p : {2u, 3u}) {
    family::DualNumbers d(p);
    auto cfg = LiftedPairConfig::make(d.rm, proj_all(d.rm.base()), 0, LiftSide::Coinduced);
    oracle::Rng g(p);
    for (const auto& s : oracle::sums({d.k, d.free}, 4)) {
      Module x = oracle::scramble(s.module, g);
      Membership m = membership_in_CA(cfg, x);
      const bool injective = s.counts[0] == 0;  // D is self-injective, k is not injective
      o.require(m.member == injective && m.member == is_injective(x), "membership differs from injectivity");
      o.require(verify_certificate(m.approximation).empty(), "certificate");
    }
  }
}

// 5
void w_tower_k0(Outcome& o) {
  for (std::uint32_t p : {2u, 3u}) {
    family::Triangular t(p);
    auto cfg = LiftedPairConfig::make(t.rm, all_inj(t.diag), 0, LiftSide::Induced);
    oracle::Rng g(p + 10);
    for (const auto& s : oracle::sums({t.m.p1, t.m.p2, t.m.s2}, 4)) {
      Module x = oracle::scramble(s.module, g);
      Membership m = membership_in_FA_dual(cfg, x);
      const bool projective = s.counts[2] == 0;
      o.require(m.member == projective && m.member == is_projective(x), "membership differs from projectivity");
      o.require(verify_certificate(m.approximation).empty(), "certificate");
    }
  }
}

// 6
void descent(Outcome& o) {
  family::A2Dual ad(3);
  auto q = LiftedPairConfig::make(ad.rm, proj_all(ad.r), 1, LiftSide::Coinduced);
  auto w = LiftedPairConfig::make(ad.rm, all_inj(ad.r), 1, LiftSide::Induced);
  std::size_t positive_rd = 0, positive_cd = 0;
  for (const auto& s : oracle::sums(ad.indecomposables, 6)) {
    const Module& m = s.module;
    const auto rd = rel_resolution_dim(q.base, restrict(ad.rm, m));
    const auto cd = rel_coresolution_dim(w.base, restrict(ad.rm, m));
    if (rd.value > 0) {
      ++positive_rd;
      Module qm = q_step(q, m).q;
      const auto after = rel_resolution_dim(q.base, restrict(ad.rm, qm));
      o.require(!after.at_least && after.value < rd.value, "rd did not drop");
      o.require(oracle::a2_projective(restrict(ad.rm, qm)), "oracle: Q(M) not projective over A2");
    }
    if (cd.value > 0) {
      ++positive_cd;
      Module wm = w_step(w, m).w;
      const auto after = rel_coresolution_dim(w.base, restrict(ad.rm, wm));
      o.require(!after.at_least && after.value < cd.value, "cd did not drop");
      o.require(oracle::a2_injective(restrict(ad.rm, wm)), "oracle: W(M) not injective over A2");
    }
  }
  o.require(positive_rd > 0 && positive_cd > 0, "no module with positive relative dimension");
}

// 7
void bongartz(Outcome& o) {
  family::A2Tilting a(3);
  auto targets = modules_of(oracle::sums({a.m.p1, a.m.s1, a.m.s2}, 4));
  for (const auto& m : targets) {
    auto c = bongartz_preenvelope({a.reg, a.t}, m);
    o.require(verify_certificate(c).empty() && verify_tower(c.tower).empty(), "preenvelope witnesses");
    o.require(oracle::a2_ext1(a.reg, c.seq.middle()) == 0 && oracle::a2_ext1(a.t, c.seq.middle()) == 0,
              "Ext^1 into the preenvelope");
    auto dc = dual_bongartz_precover({a.cog, a.reg}, m);
    o.require(verify_certificate(dc).empty() && verify_tower(dc.tower).empty(), "precover witnesses");
    o.require(oracle::a2_ext1(dc.seq.middle(), a.cog) == 0 && oracle::a2_ext1(dc.seq.middle(), a.reg) == 0,
              "Ext^1 out of the precover");
  }
}

// 8
void cdg_field(Outcome& o) {
  for (std::uint32_t p : {2u, 3u}) {
    family::CDGFamily gd(fixtures::graded_dual_numbers_cdg(p));
    oracle::Rng g(p * 7);
    for (const auto& s : oracle::sums(gd.complexes(-1, 1), 6)) {
      Module m = oracle::scramble(s.module, g);
      CDGModule x = gd.cdg(m);
      const bool acyclic = oracle::acyclic(m.action(1));
      const bool contra = is_contraacyclic(gd.ext, x, 0).member;
      const bool co = is_coacyclic(gd.ext, x, 0).member;
      o.require(contra == acyclic && co == acyclic, "decision differs from the homology oracle");
    }
  }
}

// 9
bool stable(const FpMatrix& cols, const Module& m) {
  const std::size_t r = oracle::rank(cols);
  for (std::size_t b = 0; b < m.ring()->dim(); ++b)
    if (oracle::rank(hstack(cols, m.action(b) * cols)) != r) return false;
  return true;
}

bool homotopy_ok(const FpMatrix& d, const FpMatrix& t) {
  auto p = d.modulus();
  auto dt = oracle::mul(oracle::to_mat(d), oracle::to_mat(t), p, d.cols());
  auto td = oracle::mul(oracle::to_mat(t), oracle::to_mat(d), p, t.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.rows(); ++j)
      if (oracle::md(dt[i][j] + td[i][j], p) != (i == j ? 1 : 0)) return false;
  return true;
}

void totalization(Outcome& o) {
  std::size_t count = 0;
  oracle::Rng g(99);
  {
    family::CDGFamily gd(fixtures::graded_dual_numbers_cdg(3));
    auto samples = oracle::sums(gd.complexes(-1, 1), 4);
    for (int n = 0; n < 20; ++n) {
      Module m = oracle::scramble(samples[g() % samples.size()].module, g);
      ShortExactSeq s = oracle::random_ses(m, g, 1 + g() % 2);
      auto rep = verify_totalization_acyclicity(gd.ext, s, 0);
      ++count;
      o.require(rep.pass(), "graded dual numbers: Tot not certified");
      o.require(oracle::acyclic(rep.tot.d()), "oracle: Tot has homology");
    }
  }
  {
    family::CDGFamily d4(fixtures::delta4_cdg(3));
    std::vector<Module> small;
    for (const auto& b : d4.blocks())
      if (b.dim() <= 2) small.push_back(b);
    auto samples = oracle::sums(small, 4);
    for (int n = 0; n < 20; ++n) {
      Module m = oracle::scramble(samples[g() % samples.size()].module, g);
      ShortExactSeq s = oracle::random_ses(m, g, 1);
      auto rep = verify_totalization_acyclicity(d4.ext, s, 0);
      ++count;
      o.require(rep.pass(), "delta^4: Tot not certified");
      if (rep.contra.method == "contractible") {
        o.require(rep.contra.homotopy && homotopy_ok(rep.tot.d(), *rep.contra.homotopy), "oracle: homotopy");
      } else {
        o.require(stable(rep.filtration, rep.tot.graded), "oracle: filtration step not a submodule");
        Submodule sub = submodule(rep.tot.graded, rep.filtration);
        Quotient quo = quotient(rep.tot.graded, rep.filtration);
        o.require(rep.sub_homotopy && homotopy_ok(as_cdg(d4.ext, sub.module).d(), *rep.sub_homotopy),
                  "oracle: sub homotopy");
        o.require(rep.quotient_homotopy && homotopy_ok(as_cdg(d4.ext, quo.module).d(), *rep.quotient_homotopy),
                  "oracle: quotient homotopy");
      }
    }
  }
  o.require(count >= 30, "fewer than 30 sequences");
}

// 10
void structural(Outcome& o) {
  for (std::uint32_t p : {2u, 3u}) {
    std::vector<std::pair<RingMap, std::vector<Module>>> settings;
    auto d = fixtures::dual_numbers(p);
    settings.push_back({RingMap::make(fixtures::scalar_inclusion(d)), {fixtures::dual_trivial(d), Module::regular(d)}});
    auto dg = fixtures::diagonal(p), t = fixtures::upper_triangular(p);
    auto tm = fixtures::triangular_modules(t);
    settings.push_back({RingMap::make(fixtures::diagonal_inclusion(dg, t)), {tm.p1, tm.p2, tm.s2}});
    family::A2Dual ad(p);
    settings.push_back({ad.rm, ad.indecomposables});
    std::vector<family::CDGFamily> cdgs = {family::CDGFamily(fixtures::graded_dual_numbers_cdg(p)),
                                           family::CDGFamily(fixtures::delta4_cdg(p))};
    for (const auto& c : cdgs) settings.push_back({c.ext->rm, c.blocks()});

    for (const auto& [rm, mods] : settings)
      for (const auto& m : mods) {
        auto u = coinduction_unit(rm, m);
        o.require((u.phi.matrix * u.nu.matrix).is_identity(), "phi nu != id");
        auto c = induction_counit(rm, m);
        o.require((c.pi.matrix * c.epsilon.matrix).is_identity(), "pi epsilon != id");
      }
    for (const auto& c : cdgs) {
      o.require(c.ext->a->dim() == 2 * c.ext->dim_r(), "dim A != 2 dim R");
      const AlgebraPtr r = c.ext->cdg.r;
      std::vector<Module> ss = {Module::regular(r), shift(Module::regular(r), 1), Module::free(r, {0, -1})};
      for (const auto& s : ss) {
        o.require(check_shift_identity(c.ext, s).has_value(), "G-(S) not isomorphic to G+(S)[1]");
        o.require(contracting_homotopy(g_plus(c.ext, s)).has_value(), "G+(S) not contractible");
        o.require(contracting_homotopy(g_minus(c.ext, s)).has_value(), "G-(S) not contractible");
      }
    }
  }
}

// 11
void determinism(Outcome& o) {
  auto doc = wb::Document::load(std::string(CTW_SOURCE_DIR) + "/tools/documents/tour.json");
  const std::string first = wb::run_document(doc, "all", 1).dump(2);
  const std::string second = wb::run_document(doc, "all", 1).dump(2);
  const std::string threaded = wb::run_document(doc, "all", 4).dump(2);
  o.require(first == second, "two runs differ");
  o.require(first == threaded, "threaded run differs");
  auto again = wb::Document::load(std::string(CTW_SOURCE_DIR) + "/tools/documents/tour.json");
  o.require(wb::run_document(again, "all", 2).dump(2) == first, "reloaded document differs");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Ext and Tor of (k, k) over F_2[x]/x^2", 1, ext_tor);
  ok &= run(2, "change-of-rings Ext isomorphisms", 5, hom_iso);
  ok &= run(3, "Salce conversions", 5, salce);
  ok &= run(4, "Q-tower membership at k = 0", 5, q_tower_k0);
  ok &= run(5, "W-tower membership at k = 0", 5, w_tower_k0);
  ok &= run(6, "strict descent of rd and cd", 10, descent);
  ok &= run(7, "Bongartz towers", 5, bongartz);
  ok &= run(8, "CDG field case", 10, cdg_field);
  ok &= run(9, "totalizations of exact sequences", 10, totalization);
  ok &= run(10, "structural identities", 2, structural);
  ok &= run(11, "deterministic reports", 10, determinism);
  return ok ? 0 : 1;
}
