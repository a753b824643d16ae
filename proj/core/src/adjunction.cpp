#include "ctw/adjunction.hpp"

namespace ctw {

RingMap RingMap::make(AlgebraMorphism f, std::string name) {
  if (auto v = validate_morphism(f)) throw AlgebraError("invalid ring map" + (name.empty() ? "" : " '" + name + "'") + ": " + *v);
  RingMap rm;
  rm.morphism = std::move(f);
  rm.name = std::move(name);
  rm.a_left = restrict(rm, Module::regular(rm.top(), Side::Left)).renamed("A");
  rm.a_right = restrict(rm, Module::regular(rm.top(), Side::Right)).renamed("A");
  return rm;
}

RingMap RingMap::opposite() const {
  AlgebraMorphism op{ctw::opposite(base()), ctw::opposite(top()), morphism.matrix};
  return make(std::move(op), name.empty() ? std::string() : name + "^op");
}

Module restrict(const RingMap& rm, const Module& m) {
  if (!same_algebra(m.ring(), rm.top())) throw ModuleError("restrict: module is not over the target algebra");
  const auto& r = *rm.base();
  std::vector<FpMatrix> action;
  action.reserve(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) action.push_back(m.act(rm.morphism.matrix.column(i)));
  return Module::trusted(rm.base(), std::move(action), m.degrees(), m.side(), m.name());
}

ModuleMorphism restrict(const RingMap& rm, const ModuleMorphism& f) {
  return ModuleMorphism::trusted(restrict(rm, f.source), restrict(rm, f.target), f.matrix);
}

namespace {

void require_base_left(const RingMap& rm, const Module& l, const char* op) {
  if (!same_algebra(l.ring(), rm.base()) || l.side() != Side::Left)
    throw ModuleError(std::string(op) + ": expects a left module over the source algebra");
}

}  // namespace

Induced induce(const RingMap& rm, const Module& l) {
  require_base_left(rm, l, "induce");
  const auto& a = *rm.top();
  const auto& r = *rm.base();
  const std::uint32_t p = a.modulus();
  const std::size_t da = a.dim(), dl = l.dim(), n = da * dl;
  FpMatrix id_l = FpMatrix::identity(dl, p);

  std::vector<Vec> rels;
  for (std::size_t g : r.generators()) {
    FpMatrix right = a.right_mult(rm.image(r.basis_vector(g)));
    const FpMatrix& rho = l.action(g);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < dl; ++j) {
        Vec v(n, 0);
        for (std::size_t c = 0; c < da; ++c)
          if (right(c, i) != 0) v[c * dl + j] = add_mod(v[c * dl + j], right(c, i), p);
        for (std::size_t t = 0; t < dl; ++t)
          if (rho(t, j) != 0) v[i * dl + t] = sub_mod(v[i * dl + t], rho(t, j), p);
        rels.push_back(std::move(v));
      }
  }
  FpMatrix relm = rels.empty() ? FpMatrix(n, 0, p) : FpMatrix::from_columns(rels, n, p);
  QuotientMap qm = quotient_basis(n, relm);

  std::vector<FpMatrix> action;
  action.reserve(da);
  for (std::size_t b = 0; b < da; ++b) action.push_back(qm.projection * kronecker(a.left_mult(b), id_l) * qm.section);
  std::vector<int> degrees;
  for (std::size_t c : qm.complement) degrees.push_back(a.degree(c / dl) + l.degree(c % dl));
  std::string name = l.name().empty() ? std::string() : "A(x)" + l.name();
  Module ind = Module::trusted(rm.top(), std::move(action), std::move(degrees), Side::Left, std::move(name));

  FpMatrix unit(ind.dim(), dl, p);
  for (std::size_t j = 0; j < dl; ++j) {
    Vec v(n, 0);
    for (std::size_t c = 0; c < da; ++c) v[c * dl + j] = a.unit()[c];
    Vec img = qm.projection.apply(v);
    for (std::size_t t = 0; t < ind.dim(); ++t) unit(t, j) = img[t];
  }
  ModuleMorphism eps = ModuleMorphism::trusted(l, restrict(rm, ind), std::move(unit));
  return {ind, l, std::move(qm), std::move(eps)};
}

Vec Coinduced::coordinates(const FpMatrix& f) const {
  const std::size_t dl = f.rows(), da = f.cols();
  FpMatrix v(da * dl, 1, f.modulus());
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t l = 0; l < dl; ++l) v(a * dl + l, 0) = f(l, a);
  return carrier.coordinates(v).column(0);
}

FpMatrix Coinduced::value(std::size_t i) const {
  const std::size_t dl = base.dim();
  const std::size_t da = dl == 0 ? 0 : carrier.ambient() / dl;
  FpMatrix f(dl, da, base.modulus());
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t l = 0; l < dl; ++l) f(l, a) = carrier.basis(a * dl + l, i);
  return f;
}

Coinduced coinduce(const RingMap& rm, const Module& l) {
  require_base_left(rm, l, "coinduce");
  const auto& a = *rm.top();
  const auto& r = *rm.base();
  const std::uint32_t p = a.modulus();
  const std::size_t da = a.dim(), dl = l.dim(), n = da * dl;
  FpMatrix id_l = FpMatrix::identity(dl, p);
  FpMatrix id_a = FpMatrix::identity(da, p);

  std::vector<FpMatrix> action;
  action.reserve(da);
  for (std::size_t b = 0; b < da; ++b) action.push_back(kronecker(a.right_mult(b).transpose(), id_l));
  std::vector<int> degrees(n);
  for (std::size_t c = 0; c < da; ++c)
    for (std::size_t t = 0; t < dl; ++t) degrees[c * dl + t] = l.degree(t) - a.degree(c);
  Module hom_k = Module::trusted(rm.top(), std::move(action), std::move(degrees), Side::Left);

  // f(φ(r) a) = r f(a) for the algebra generators r of R.
  FpMatrix constraints(0, n, p);
  for (std::size_t g : r.generators()) {
    FpMatrix left = a.left_mult(rm.image(r.basis_vector(g)));
    constraints = vstack(constraints, kronecker(left.transpose(), id_l) - kronecker(id_a, l.action(g)));
  }
  Subspace carrier = kernel_subspace(constraints);
  Submodule sub = submodule(hom_k, carrier, false);
  std::string name = l.name().empty() ? std::string() : "Hom(A," + l.name() + ")";
  Module co = sub.module.renamed(std::move(name));

  FpMatrix ev(dl, co.dim(), p);
  for (std::size_t i = 0; i < co.dim(); ++i)
    for (std::size_t c = 0; c < da; ++c) {
      if (a.unit()[c] == 0) continue;
      for (std::size_t t = 0; t < dl; ++t)
        ev(t, i) = add_mod(ev(t, i), mul_mod(a.unit()[c], carrier.basis(c * dl + t, i), p), p);
    }
  ModuleMorphism eval = ModuleMorphism::trusted(restrict(rm, co), l, std::move(ev));
  return {co, l, std::move(carrier), std::move(eval)};
}

ModuleMorphism induce_map(const RingMap& rm, const Induced& src, const Induced& dst, const ModuleMorphism& f) {
  const std::uint32_t p = f.matrix.modulus();
  FpMatrix lifted = kronecker(FpMatrix::identity(rm.top()->dim(), p), f.matrix);
  return ModuleMorphism::trusted(src.module, dst.module, dst.presentation.projection * lifted * src.presentation.section);
}

ModuleMorphism induce_map(const RingMap& rm, const ModuleMorphism& f) {
  return induce_map(rm, induce(rm, f.source), induce(rm, f.target), f);
}

ModuleMorphism coinduce_map(const RingMap& rm, const Coinduced& src, const Coinduced& dst, const ModuleMorphism& f) {
  const std::uint32_t p = f.matrix.modulus();
  FpMatrix lifted = kronecker(FpMatrix::identity(rm.top()->dim(), p), f.matrix);
  return ModuleMorphism::trusted(src.module, dst.module, dst.carrier.coordinates(lifted * src.carrier.basis));
}

ModuleMorphism coinduce_map(const RingMap& rm, const ModuleMorphism& f) {
  return coinduce_map(rm, coinduce(rm, f.source), coinduce(rm, f.target), f);
}

CoinductionUnit coinduction_unit(const RingMap& rm, const Module& m) {
  Module rest = restrict(rm, m);
  Coinduced co = coinduce(rm, rest);
  const std::size_t da = rm.top()->dim(), dm = m.dim();
  const std::uint32_t p = m.modulus();
  FpMatrix vecs(da * dm, dm, p);
  for (std::size_t a = 0; a < da; ++a) {
    const FpMatrix& rho = m.action(a);
    for (std::size_t l = 0; l < dm; ++l)
      for (std::size_t j = 0; j < dm; ++j) vecs(a * dm + l, j) = rho(l, j);
  }
  ModuleMorphism nu_m = ModuleMorphism::trusted(m, co.module, co.carrier.coordinates(vecs));
  ModuleMorphism phi_m = co.eval;
  phi_m.target = rest;
  return {std::move(co), std::move(nu_m), std::move(phi_m)};
}

ModuleMorphism nu(const RingMap& rm, const Module& m) { return coinduction_unit(rm, m).nu; }
ModuleMorphism phi(const RingMap& rm, const Module& m) { return coinduction_unit(rm, m).phi; }

InductionCounit induction_counit(const RingMap& rm, const Module& n) {
  Module rest = restrict(rm, n);
  Induced ind = induce(rm, rest);
  const std::size_t da = rm.top()->dim(), dn = n.dim();
  const std::uint32_t p = n.modulus();
  FpMatrix act(dn, da * dn, p);
  for (std::size_t a = 0; a < da; ++a) act.set_block(0, a * dn, n.action(a));
  ModuleMorphism pi_n = ModuleMorphism::trusted(ind.module, n, act * ind.presentation.section);
  ModuleMorphism eps = ind.unit;
  return {std::move(ind), std::move(pi_n), std::move(eps)};
}

ModuleMorphism pi(const RingMap& rm, const Module& n) { return induction_counit(rm, n).pi; }
ModuleMorphism epsilon(const RingMap& rm, const Module& n) { return induction_counit(rm, n).epsilon; }

HomIsoReport verify_hom_iso(const RingMap& rm, const Module& b, const Module& m, std::size_t n) {
  HomIsoReport rep;
  rep.n = n;
  rep.hypothesis_b = true;
  rep.hypothesis_a = true;
  for (std::size_t i = 1; i <= n; ++i) {
    rep.ext_r_a_m.push_back(ext_dim(rm.a_left, m, i));
    rep.tor_r_a_m.push_back(tor_dim(rm.a_right, m, i));
    if (rep.ext_r_a_m.back() != 0) rep.hypothesis_b = false;
    if (rep.tor_r_a_m.back() != 0) rep.hypothesis_a = false;
  }
  Module co = coinduce(rm, m).module;
  Module ind = induce(rm, m).module;
  Module rb = restrict(rm, b);
  for (std::size_t i = 0; i <= n; ++i) {
    HomIsoRow row;
    row.i = i;
    row.ext_a_coinduced = ext_dim(b, co, i);
    row.ext_r_restricted = ext_dim(rb, m, i);
    row.ext_a_induced = ext_dim(ind, b, i);
    row.ext_r_base = ext_dim(m, rb, i);
    if (row.ext_a_coinduced != row.ext_r_restricted) rep.agree_b = false;
    if (row.ext_a_induced != row.ext_r_base) rep.agree_a = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace ctw
