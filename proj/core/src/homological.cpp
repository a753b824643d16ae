#include "ctw/homological.hpp"

#include <random>

namespace ctw {

// ---------------------------------------------------------------------------
// generators and covers

std::vector<Vec> module_generators(const Module& m, const FpMatrix& x) {
  FpMatrix h = homogeneous_basis(m, x);
  EchelonSpan span(m.dim(), m.modulus());
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    Vec v = h.column(c);
    if (span.contains(v)) continue;
    gens.push_back(v);
    for (const auto& rho : m.actions()) span.add(rho.apply(v));
  }
  // The basis order can leave most picks redundant; drop any generator the others already generate.
  const std::size_t full = span.rank();
  std::vector<std::vector<Vec>> images(gens.size());
  for (std::size_t u = 0; u < gens.size(); ++u)
    for (const auto& rho : m.actions()) images[u].push_back(rho.apply(gens[u]));
  std::vector<bool> keep(gens.size(), true);
  for (std::size_t t = gens.size(); t-- > 0;) {
    EchelonSpan rest(m.dim(), m.modulus());
    for (std::size_t u = 0; u < gens.size(); ++u)
      if (u != t && keep[u])
        for (const auto& w : images[u]) rest.add(w);
    if (rest.rank() == full) keep[t] = false;
  }
  std::vector<Vec> out;
  for (std::size_t u = 0; u < gens.size(); ++u)
    if (keep[u]) out.push_back(std::move(gens[u]));
  return out;
}

namespace {

int homogeneous_degree(const Module& m, const Vec& v) {
  for (std::size_t r = 0; r < v.size(); ++r)
    if (v[r] != 0) return m.degree(r);
  return 0;
}

}  // namespace

FreeCover make_free_cover(const Module& m, CoverKind kind) {
  const std::uint32_t p = m.modulus();
  const auto& a = *m.acting();
  const std::size_t na = a.dim();
  FreeCover out;
  if (kind == CoverKind::Full) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
      Vec e(m.dim(), 0);
      e[i] = 1;
      out.generators.push_back(std::move(e));
    }
  } else {
    out.generators = module_generators(m, FpMatrix::identity(m.dim(), p));
  }
  for (const auto& g : out.generators) out.degrees.push_back(homogeneous_degree(m, g));
  out.free = Module::free(m.ring(), out.degrees, m.side());
  const std::size_t s = out.generators.size();
  FpMatrix q(m.dim(), s * na, p);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t k = 0; k < na; ++k) {
      Vec img = m.action(k).apply(out.generators[j]);
      for (std::size_t r = 0; r < m.dim(); ++r) q(r, j * na + k) = img[r];
    }
  out.q = ModuleMorphism::trusted(out.free, m, q);
  if (kind == CoverKind::Full) {
    out.section = FpMatrix(s * na, m.dim(), p);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < na; ++k) out.section(j * na + k, j) = a.unit()[k];
  } else {
    auto sec = solve(q, FpMatrix::identity(m.dim(), p));
    if (!sec) throw ModuleError("free cover: generators do not span the module");
    out.section = std::move(*sec);
  }
  return out;
}

ShortExactSeq free_cover(const Module& m, CoverKind kind) {
  FreeCover c = make_free_cover(m, kind);
  Submodule k = kernel(c.q);
  return {k.inclusion, c.q};
}

// ---------------------------------------------------------------------------
// resolutions

const FreeCover& Resolution::step_locked(std::size_t i) const {
  while (steps_.size() <= i) {
    const std::size_t j = steps_.size();
    Module target = j == 0 ? m_ : kernel_locked(j - 1).module;
    steps_.push_back(make_free_cover(target, kind_));
  }
  return steps_[i];
}

const Submodule& Resolution::kernel_locked(std::size_t i) const {
  while (kernels_.size() <= i) {
    const std::size_t j = kernels_.size();
    const FreeCover& c = step_locked(j);
    kernels_.push_back(kernel(c.q));
  }
  return kernels_[i];
}

const FreeCover& Resolution::step(std::size_t i) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return step_locked(i);
}

Module Resolution::syzygy(std::size_t i) const {
  if (i == 0) return m_.owned();
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return kernel_locked(i - 1).module;
}

const ModuleMorphism& Resolution::inclusion(std::size_t i) const {
  if (i == 0) throw ModuleError("Resolution::inclusion needs i >= 1");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return kernel_locked(i - 1).inclusion;
}

FpMatrix Resolution::generator_images(std::size_t i) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const FreeCover& c = step_locked(i);
  const Submodule& k = kernel_locked(i - 1);
  const std::size_t dim = k.module.dim();
  FpMatrix g = c.generators.empty() ? FpMatrix(dim, 0, m_.modulus())
                                    : FpMatrix::from_columns(c.generators, dim, m_.modulus());
  return k.inclusion.matrix * g;
}

ShortExactSeq Resolution::ses(std::size_t i) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const Submodule& k = kernel_locked(i);
  return {k.inclusion, step_locked(i).q};
}

Module syzygy(const Module& m, std::size_t i, CoverKind kind) {
  Resolution r(m, kind);
  return r.syzygy(i);
}

ShortExactSeq injective_embedding(const Module& m, CoverKind kind) {
  ShortExactSeq cover = free_cover(dual(m), kind);
  ShortExactSeq d = dual(cover);  // 0 -> DD(M) -> D(P) -> D(Ω) -> 0
  // DD(M) has the same carrier and action as M.
  ModuleMorphism i = ModuleMorphism::trusted(m, d.i.target, d.i.matrix);
  return {i, d.q};
}

Module cosyzygy(const Module& m, std::size_t i, CoverKind kind) {
  Module cur = m;
  for (std::size_t j = 0; j < i; ++j) cur = injective_embedding(cur, kind).right();
  return cur;
}

// ---------------------------------------------------------------------------
// Hom(P_•, N)

namespace {

std::shared_ptr<Resolution> resolution_for(const Module& m, const std::shared_ptr<Resolution>& res) {
  if (res) {
    if (!res->module().same_object(m) && res->module().dim() != m.dim())
      throw ModuleError("supplied resolution is for a different module");
    return res;
  }
  return m.greedy_resolution();
}

/// Admissible coordinates of Hom(P_i, N) inside N^{s_i}.
std::vector<std::size_t> hom_support(const Resolution& res, std::size_t i, const Module& n) {
  const FreeCover& c = res.step(i);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < c.degrees.size(); ++j)
    for (std::size_t r = 0; r < n.dim(); ++r)
      if (n.degree(r) == c.degrees[j]) out.push_back(j * n.dim() + r);
  return out;
}

/// Matrix of the map induced by d_i on generator values: for the generators e_j of
/// P_i with d e_j = Σ_l x_{jl} e_l, block (j, l) is the action of x_{jl} on X.
/// `transpose_blocks` lays the blocks out as (l, j) instead (used for E ⊗ d_i).
FpMatrix induced_differential(const Resolution& res, std::size_t i, const Module& x, bool transpose_blocks) {
  const std::size_t na = x.acting()->dim();
  const std::size_t s_prev = res.step(i - 1).generators.size();
  const std::size_t s = res.step(i).generators.size();
  const std::size_t d = x.dim();
  FpMatrix g = res.generator_images(i);
  FpMatrix out = transpose_blocks ? FpMatrix(s_prev * d, s * d, x.modulus()) : FpMatrix(s * d, s_prev * d, x.modulus());
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t l = 0; l < s_prev; ++l) {
      Vec coeffs(na);
      bool any = false;
      for (std::size_t k = 0; k < na; ++k) {
        coeffs[k] = g(l * na + k, j);
        any = any || coeffs[k] != 0;
      }
      if (!any) continue;
      FpMatrix blk = x.act(coeffs);
      if (transpose_blocks)
        out.set_block(l * d, j * d, blk);
      else
        out.set_block(j * d, l * d, blk);
    }
  return out;
}

FpMatrix restricted(const FpMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  return m.select_rows(rows).select_columns(cols);
}

/// d_i^* restricted to admissible coordinates.
FpMatrix cochain_map(const Resolution& res, std::size_t i, const Module& n, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  return restricted(induced_differential(res, i, n, false), rows, cols);
}

/// Map P_i -> N sending generator l to u_l.
FpMatrix free_map(const FreeCover& c, const Module& n, const Vec& u) {
  const std::size_t na = n.acting()->dim();
  const std::size_t s = c.generators.size();
  FpMatrix out(n.dim(), s * na, n.modulus());
  for (std::size_t l = 0; l < s; ++l) {
    Vec ul(u.begin() + static_cast<std::ptrdiff_t>(l * n.dim()),
           u.begin() + static_cast<std::ptrdiff_t>((l + 1) * n.dim()));
    for (std::size_t k = 0; k < na; ++k) {
      Vec img = n.action(k).apply(ul);
      for (std::size_t r = 0; r < n.dim(); ++r) out(r, l * na + k) = img[r];
    }
  }
  return out;
}

Vec expand(const Vec& restricted_vec, const std::vector<std::size_t>& support, std::size_t full) {
  Vec out(full, 0);
  for (std::size_t t = 0; t < support.size(); ++t) out[support[t]] = restricted_vec[t];
  return out;
}

}  // namespace

ModuleMorphism ExtClass::representative() const {
  const FreeCover& c = resolution->step(degree);
  FpMatrix f = free_map(c, target, cocycle) * c.section;
  return ModuleMorphism::trusted(resolution->syzygy(degree), target, std::move(f));
}

Vec ExtGroup::coordinates(const Vec& cocycle) const {
  Vec sub(support.size());
  for (std::size_t t = 0; t < support.size(); ++t) sub[t] = cocycle.at(support[t]);
  FpMatrix z = cocycles.coordinates(FpMatrix::column_vector(sub, target.modulus()));
  return (quotient.projection * z).column(0);
}

bool ExtGroup::is_zero(const Vec& cocycle) const {
  Vec c = coordinates(cocycle);
  return std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
}

Vec ExtGroup::cocycle_of(const ModuleMorphism& rep) const {
  const FreeCover& c = resolution->step(degree);
  Vec out;
  out.reserve(c.generators.size() * target.dim());
  for (const auto& g : c.generators) {
    Vec v = rep.apply(g);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

ExtClass ExtGroup::make_class(const Vec& cocycle) const { return {degree, resolution, target, cocycle}; }

ExtGroup ext_group(const Module& m, const Module& n, std::size_t i, const std::shared_ptr<Resolution>& res_in) {
  require_same_category(m, n, "ext");
  auto res = resolution_for(m, res_in);
  ExtGroup g;
  g.degree = i;
  g.resolution = res;
  g.target = n;
  g.support = hom_support(*res, i, n);
  const std::uint32_t p = n.modulus();
  auto next_support = hom_support(*res, i + 1, n);
  FpMatrix d_next = cochain_map(*res, i + 1, n, next_support, g.support);
  g.cocycles = kernel_subspace(d_next);
  if (i >= 1) {
    auto prev_support = hom_support(*res, i - 1, n);
    g.boundaries = image_basis(cochain_map(*res, i, n, g.support, prev_support));
  } else {
    g.boundaries = FpMatrix(g.support.size(), 0, p);
  }
  FpMatrix bz = g.cocycles.coordinates(g.boundaries);
  g.quotient = quotient_basis(g.cocycles.dim(), bz);
  const std::size_t full = res->step(i).generators.size() * n.dim();
  for (std::size_t c : g.quotient.complement)
    g.basis.push_back(g.make_class(expand(g.cocycles.basis.column(c), g.support, full)));
  return g;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i, const std::shared_ptr<Resolution>& res_in) {
  require_same_category(m, n, "ext");
  auto res = resolution_for(m, res_in);
  auto sup = hom_support(*res, i, n);
  if (sup.empty()) return 0;
  auto next_support = hom_support(*res, i + 1, n);
  std::size_t dim = sup.size() - rank(cochain_map(*res, i + 1, n, next_support, sup));
  if (i >= 1) {
    auto prev_support = hom_support(*res, i - 1, n);
    dim -= rank(cochain_map(*res, i, n, sup, prev_support));
  }
  return dim;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i, CoverKind kind) {
  return ext_dim(m, n, i, std::make_shared<Resolution>(m, kind));
}

std::vector<ModuleMorphism> hom_space(const Module& m, const Module& n) {
  ExtGroup g = ext_group(m, n, 0);
  std::vector<ModuleMorphism> out;
  out.reserve(g.basis.size());
  for (const auto& c : g.basis) {
    ModuleMorphism f = c.representative();
    f.source = m;
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return ext_dim(m, n, 0); }

FpMatrix flatten(const std::vector<ModuleMorphism>& maps, std::size_t rows, std::size_t cols, std::uint32_t p) {
  FpMatrix out(rows * cols, maps.size(), p);
  for (std::size_t t = 0; t < maps.size(); ++t) {
    const auto& e = maps[t].matrix.entries();
    for (std::size_t k = 0; k < e.size(); ++k) out(k, t) = e[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tor

std::size_t tor_dim(const Module& e, const Module& m, std::size_t i, const std::shared_ptr<Resolution>& res_in) {
  if (e.side() != Side::Right || m.side() != Side::Left) throw ModuleError("tor: expects a right and a left module");
  if (!same_algebra(e.ring(), m.ring())) throw ModuleError("tor: modules over different algebras");
  auto res = resolution_for(m, res_in);
  const std::size_t s = res->step(i).generators.size();
  std::size_t dim = s * e.dim();
  if (dim == 0) return 0;
  if (i >= 1) dim -= rank(induced_differential(*res, i, e, true));
  dim -= rank(induced_differential(*res, i + 1, e, true));
  return dim;
}

std::size_t tensor_dim(const Module& e, const Module& m) { return tor_dim(e, m, 0); }

// ---------------------------------------------------------------------------
// duality

Module dual(const Module& m) {
  std::vector<FpMatrix> action;
  action.reserve(m.actions().size());
  for (const auto& rho : m.actions()) action.push_back(rho.transpose());
  std::vector<int> degrees = m.degrees();
  for (auto& d : degrees) d = -d;
  const Side side = m.side() == Side::Left ? Side::Right : Side::Left;
  std::string name = m.name().empty() ? std::string() : "D(" + m.name() + ")";
  return Module::trusted(m.ring(), std::move(action), std::move(degrees), side, std::move(name));
}

ModuleMorphism dual(const ModuleMorphism& f) {
  return ModuleMorphism::trusted(dual(f.target), dual(f.source), f.matrix.transpose());
}

ShortExactSeq dual(const ShortExactSeq& s) {
  Module dk = dual(s.left()), dl = dual(s.middle()), dm = dual(s.right());
  return {ModuleMorphism::trusted(dm, dl, s.q.matrix.transpose()),
          ModuleMorphism::trusted(dl, dk, s.i.matrix.transpose())};
}

// ---------------------------------------------------------------------------
// pullback / pushout

Pullback pullback(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.target.dim() != g.target.dim()) throw ModuleError("pullback: maps have different targets");
  DirectSum s = direct_sum(f.source, g.source);
  ModuleMorphism h{s.module, f.target, hstack(f.matrix, -g.matrix)};
  Submodule k = kernel(h);
  return {k.module, compose(s.projections[0], k.inclusion), compose(s.projections[1], k.inclusion)};
}

namespace {

struct PushoutData {
  Pushout po;
  DirectSum sum;
  Quotient quot;
};

PushoutData pushout_data(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.source.dim() != g.source.dim()) throw ModuleError("pushout: maps have different sources");
  DirectSum s = direct_sum(f.target, g.target);
  ModuleMorphism h{f.source, s.module, vstack(f.matrix, -g.matrix)};
  Quotient c = cokernel(h);
  Pushout po{c.module, compose(c.projection, s.injections[0]), compose(c.projection, s.injections[1])};
  return {po, s, c};
}

}  // namespace

Pushout pushout(const ModuleMorphism& f, const ModuleMorphism& g) { return pushout_data(f, g).po; }

ModuleMorphism pullback_lift(const Pullback& pb, const ModuleMorphism& a, const ModuleMorphism& b) {
  auto x = solve(vstack(pb.p1.matrix, pb.p2.matrix), vstack(a.matrix, b.matrix));
  if (!x) throw ModuleError("pullback_lift: maps do not agree over the base");
  return ModuleMorphism::trusted(a.source, pb.module, std::move(*x));
}

ModuleMorphism pushout_desc(const Pushout& po, const ModuleMorphism& a, const ModuleMorphism& b) {
  auto x = solve(hstack(po.j1.matrix, po.j2.matrix).transpose(), hstack(a.matrix, b.matrix).transpose());
  if (!x) throw ModuleError("pushout_desc: maps do not agree on the source");
  return ModuleMorphism::trusted(po.module, a.target, x->transpose());
}

// ---------------------------------------------------------------------------
// extensions

ShortExactSeq realize_ext1(const ExtClass& c) {
  if (c.degree != 1) throw ModuleError("realize_ext1 needs a class of degree 1");
  const auto& res = *c.resolution;
  const FreeCover& p0 = res.step(0);
  ModuleMorphism rep = c.representative();
  PushoutData d = pushout_data(res.inclusion(1), rep);
  // E -> M induced by (q_0, 0) on P ⊕ N.
  FpMatrix on_sum = hstack(p0.q.matrix, FpMatrix(p0.q.target.dim(), c.target.dim(), c.target.modulus()));
  ModuleMorphism q = ModuleMorphism::trusted(d.po.module, res.module(), on_sum * d.quot.section);
  return {d.po.j2, q};
}

ExtClass classify(const ShortExactSeq& s, const std::shared_ptr<Resolution>& res_in) {
  const Module& m = s.right();
  auto res = resolution_for(m, res_in);
  const FreeCover& p0 = res->step(0);
  const Module& e = s.middle();
  const std::size_t na = m.acting()->dim();
  const std::uint32_t p = m.modulus();
  // Lift P_0 -> M through E, generator by generator in the right degree.
  FpMatrix lift(e.dim(), p0.free.dim(), p);
  for (std::size_t j = 0; j < p0.generators.size(); ++j) {
    std::vector<std::size_t> cols = e.indices_of_degree(p0.degrees[j]);
    auto y = solve(s.q.matrix.select_columns(cols), FpMatrix::column_vector(p0.generators[j], p));
    if (!y) throw ModuleError("classify: second map is not surjective");
    Vec yj(e.dim(), 0);
    for (std::size_t t = 0; t < cols.size(); ++t) yj[cols[t]] = (*y)(t, 0);
    for (std::size_t k = 0; k < na; ++k) {
      Vec img = e.action(k).apply(yj);
      for (std::size_t r = 0; r < e.dim(); ++r) lift(r, j * na + k) = img[r];
    }
  }
  FpMatrix restricted_lift = lift * res->inclusion(1).matrix;
  auto c = solve(s.i.matrix, restricted_lift);
  if (!c) throw ModuleError("classify: sequence is not exact");
  ModuleMorphism rep = ModuleMorphism::trusted(res->syzygy(1), s.left(), *c);
  const FreeCover& p1 = res->step(1);
  Vec cocycle;
  for (const auto& g : p1.generators) {
    Vec v = rep.apply(g);
    cocycle.insert(cocycle.end(), v.begin(), v.end());
  }
  return {1, res, s.left(), std::move(cocycle)};
}

// ---------------------------------------------------------------------------
// splitting

namespace {

/// Combination Σ c_t h_t of a Hom basis with (post ∘ h ∘ pre) = target, or nullopt.
std::optional<ModuleMorphism> solve_in_hom(const std::vector<ModuleMorphism>& basis, const FpMatrix& post,
                                           const FpMatrix& pre, const FpMatrix& target, const Module& source,
                                           const Module& codomain) {
  const std::uint32_t p = source.modulus();
  if (target.rows() * target.cols() == 0) return ModuleMorphism::zero(source, codomain);
  std::vector<ModuleMorphism> composed;
  composed.reserve(basis.size());
  for (const auto& h : basis) composed.push_back({h.source, h.target, post * h.matrix * pre});
  FpMatrix a = flatten(composed, target.rows(), target.cols(), p);
  FpMatrix b(target.rows() * target.cols(), 1, p);
  for (std::size_t k = 0; k < target.entries().size(); ++k) b(k, 0) = target.entries()[k];
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  FpMatrix f(codomain.dim(), source.dim(), p);
  for (std::size_t t = 0; t < basis.size(); ++t)
    if ((*x)(t, 0) != 0) f = f + basis[t].matrix.scaled((*x)(t, 0));
  return ModuleMorphism::trusted(source, codomain, std::move(f));
}

}  // namespace

std::optional<ModuleMorphism> split_section(const ShortExactSeq& s) {
  const Module& m = s.right();
  const Module& l = s.middle();
  auto basis = hom_space(m, l);
  return solve_in_hom(basis, s.q.matrix, FpMatrix::identity(m.dim(), m.modulus()),
                      FpMatrix::identity(m.dim(), m.modulus()), m, l);
}

std::optional<ModuleMorphism> split_retraction(const ShortExactSeq& s) {
  const Module& k = s.left();
  const Module& l = s.middle();
  auto basis = hom_space(l, k);
  return solve_in_hom(basis, FpMatrix::identity(k.dim(), k.modulus()), s.i.matrix,
                      FpMatrix::identity(k.dim(), k.modulus()), l, k);
}

bool is_split(const ShortExactSeq& s) { return split_section(s).has_value(); }

// 0 -> ΩM -> F -> M -> 0 splits iff its class in Ext^1(M, ΩM) vanishes, so M is
// projective iff Ext^1(M, ΩM) = 0. Only ranks are needed, no Hom basis.
bool is_projective(const Module& m) {
  if (m.dim() == 0) return true;
  ShortExactSeq cover = free_cover(m, CoverKind::Greedy);
  return cover.left().dim() == 0 || ext_dim(m, cover.left(), 1) == 0;
}

bool is_injective(const Module& m) {
  if (m.dim() == 0) return true;
  return is_projective(dual(m));
}

std::optional<AddWitness> add_witness(const Module& x, const Module& y) {
  require_same_category(x, y, "add_witness");
  const std::uint32_t p = x.modulus();
  if (x.dim() == 0) {
    Module z = Module::zero(x.ring(), x.side());
    return AddWitness{0, ModuleMorphism::zero(x, z), ModuleMorphism::zero(z, x)};
  }
  auto s = hom_space(x, y);
  auto r = hom_space(y, x);
  std::vector<ModuleMorphism> products;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) {
      products.push_back(compose(r[b], s[a]));
      index.emplace_back(a, b);
    }
  if (products.empty()) return std::nullopt;
  FpMatrix a = flatten(products, x.dim(), x.dim(), p);
  FpMatrix id = FpMatrix::identity(x.dim(), p);
  FpMatrix b(x.dim() * x.dim(), 1, p);
  for (std::size_t k = 0; k < id.entries().size(); ++k) b(k, 0) = id.entries()[k];
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  std::vector<ModuleMorphism> into, back;
  for (std::size_t t = 0; t < products.size(); ++t) {
    const std::uint32_t c = (*sol)(t, 0);
    if (c == 0) continue;
    into.push_back(scaled(s[index[t].first], c));
    back.push_back(r[index[t].second]);
  }
  DirectSum sum = power(y, into.size());
  return AddWitness{into.size(), to_sum(sum, into), from_sum(sum, back)};
}

std::optional<ModuleMorphism> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed,
                                               std::size_t tries) {
  if (m.dim() != n.dim() || !same_category(m, n)) return std::nullopt;
  if (m.support() != n.support() && m.dim() != 0) {
    for (int d : m.support())
      if (m.indices_of_degree(d).size() != n.indices_of_degree(d).size()) return std::nullopt;
  }
  const std::uint32_t p = m.modulus();
  if (m.dim() == 0) return ModuleMorphism::zero(m, n);
  auto basis = hom_space(m, n);
  if (basis.empty()) return std::nullopt;
  for (const auto& h : basis)
    if (rank(h.matrix) == m.dim()) return h;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  for (std::size_t t = 0; t < tries; ++t) {
    FpMatrix f(n.dim(), m.dim(), p);
    for (const auto& h : basis) f = f + h.matrix.scaled(coeff(rng));
    if (rank(f) == m.dim()) return ModuleMorphism::trusted(m, n, std::move(f));
  }
  return std::nullopt;
}

}  // namespace ctw
