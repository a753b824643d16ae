#include "ctw/module.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "ctw/homological.hpp"
#include "ctw/limits.hpp"

namespace ctw {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

struct Module::Data : std::enable_shared_from_this<Module::Data> {
  AlgebraPtr ring;
  AlgebraPtr acting;
  Side side = Side::Left;
  std::size_t dim = 0;
  std::vector<FpMatrix> action;
  std::vector<int> degrees;
  std::string name;
  bool graded = false;

  mutable std::once_flag res_once;
  mutable std::shared_ptr<Resolution> res;
};

namespace {

AlgebraPtr acting_algebra(const AlgebraPtr& ring, Side side) { return side == Side::Left ? ring : opposite(ring); }

}  // namespace

Module Module::trusted(AlgebraPtr ring, std::vector<FpMatrix> action, std::vector<int> degrees, Side side,
                       std::string name) {
  if (!ring) throw ModuleError("module without algebra");
  auto d = std::make_shared<Data>();
  d->acting = acting_algebra(ring, side);
  d->ring = std::move(ring);
  d->side = side;
  if (action.size() != d->ring->dim())
    throw ModuleError("module needs one action matrix per algebra basis element");
  d->dim = action.empty() ? 0 : action.front().rows();
  check_module_dim(d->dim, "module");
  if (degrees.empty()) degrees.assign(d->dim, 0);
  if (degrees.size() != d->dim) throw ModuleError("module degree vector has wrong size");
  d->action = std::move(action);
  d->degrees = std::move(degrees);
  d->graded = std::any_of(d->degrees.begin(), d->degrees.end(), [](int x) { return x != 0; });
  d->name = std::move(name);
  Module m;
  m.d_ = std::move(d);
  return m;
}

Module Module::create(AlgebraPtr ring, std::vector<FpMatrix> action, std::vector<int> degrees, Side side,
                      std::string name) {
  if (!ring) throw ModuleError("module without algebra");
  const std::size_t dim = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action) {
    if (a.rows() != dim || a.cols() != dim) throw ModuleError("action matrices must all be square of the same size");
    if (a.modulus() != ring->modulus()) throw ModuleError("action matrix over a different field");
  }
  Module m = trusted(std::move(ring), std::move(action), std::move(degrees), side, std::move(name));
  if (auto v = validate_module(m)) {
    throw ModuleError("invalid module" + (m.name().empty() ? std::string() : " '" + m.name() + "'") + ": " + *v);
  }
  return m;
}

Module Module::zero(AlgebraPtr ring, Side side) {
  const std::uint32_t p = ring->modulus();
  std::vector<FpMatrix> action(ring->dim(), FpMatrix(0, 0, p));
  return trusted(std::move(ring), std::move(action), {}, side, "0");
}

Module Module::regular(AlgebraPtr ring, Side side) {
  Module m = free(std::move(ring), {0}, side);
  return m.renamed("A");
}

Module Module::free(AlgebraPtr ring, const std::vector<int>& generator_degrees, Side side) {
  AlgebraPtr acting = acting_algebra(ring, side);
  const std::size_t n = acting->dim();
  const std::size_t g = generator_degrees.size();
  const std::uint32_t p = ring->modulus();
  std::vector<FpMatrix> action;
  action.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FpMatrix m(g * n, g * n, p);
    for (std::size_t j = 0; j < g; ++j) m.set_block(j * n, j * n, acting->left_mult(i));
    action.push_back(std::move(m));
  }
  std::vector<int> degrees(g * n);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < n; ++k) degrees[j * n + k] = generator_degrees[j] + acting->degree(k);
  return trusted(std::move(ring), std::move(action), std::move(degrees), side,
                 g == 1 ? "A" : "A^" + std::to_string(g));
}

const AlgebraPtr& Module::ring() const { return d_->ring; }
const AlgebraPtr& Module::acting() const { return d_->acting; }
Side Module::side() const { return d_->side; }
std::size_t Module::dim() const { return d_->dim; }
std::uint32_t Module::modulus() const { return d_->ring->modulus(); }
const std::string& Module::name() const { return d_->name; }

Module Module::renamed(std::string name) const {
  Module m = trusted(d_->ring, d_->action, d_->degrees, d_->side, std::move(name));
  return m;
}

const FpMatrix& Module::action(std::size_t i) const { return d_->action.at(i); }
const std::vector<FpMatrix>& Module::actions() const { return d_->action; }

FpMatrix Module::act(const Vec& a) const {
  FpMatrix out(dim(), dim(), modulus());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] % modulus() != 0) out = out + d_->action[i].scaled(a[i]);
  return out;
}

const std::vector<int>& Module::degrees() const { return d_->degrees; }
int Module::degree(std::size_t i) const { return d_->degrees[i]; }
bool Module::graded() const { return d_->graded; }

std::vector<int> Module::support() const {
  std::set<int> s(d_->degrees.begin(), d_->degrees.end());
  return {s.begin(), s.end()};
}

std::vector<std::size_t> Module::indices_of_degree(int deg) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (d_->degrees[i] == deg) out.push_back(i);
  return out;
}

std::shared_ptr<Resolution> Module::greedy_resolution() const {
  std::call_once(d_->res_once, [this] {
    // The cached resolution refers back to this data without owning it; the
    // pointer handed out below owns the data instead, so there is no cycle.
    Module self;
    self.d_ = std::shared_ptr<const Data>(std::shared_ptr<const Data>(), d_.get());
    d_->res = std::make_shared<Resolution>(self, CoverKind::Greedy);
  });
  return std::shared_ptr<Resolution>(d_, d_->res.get());
}

Module Module::owned() const {
  Module m;
  if (d_) m.d_ = d_->shared_from_this();
  return m;
}

std::optional<std::string> validate_module(const Module& m) {
  if (!m.valid()) return "empty module handle";
  const auto& a = *m.acting();
  const std::size_t n = m.dim();
  const std::uint32_t p = m.modulus();
  if (m.actions().size() != a.dim()) return "wrong number of action matrices";
  for (const auto& x : m.actions())
    if (x.rows() != n || x.cols() != n || x.modulus() != p) return "action matrix has wrong shape or field";
  if (!m.act(a.unit()).is_identity()) return "the unit does not act as the identity";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      FpMatrix lhs = m.action(i) * m.action(j);
      FpMatrix rhs(n, n, p);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.coeff(i, j, k) != 0) rhs = rhs + m.action(k).scaled(a.coeff(i, j, k));
      if (lhs != rhs)
        return "action is not multiplicative on (b_" + std::to_string(i) + ", b_" + std::to_string(j) + ")";
    }
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m.action(b)(r, c) != 0 && m.degree(r) != m.degree(c) + a.degree(b))
          return "b_" + std::to_string(b) + " does not act with its degree on basis vector " + std::to_string(c);
  return std::nullopt;
}

bool same_category(const Module& a, const Module& b) {
  return a.side() == b.side() && same_algebra(a.ring(), b.ring());
}

void require_same_category(const Module& a, const Module& b, const char* op) {
  if (!same_category(a, b))
    throw ModuleError(std::string(op) + ": modules live over different algebras or sides");
}

// ---------------------------------------------------------------------------
// morphisms

std::optional<std::string> validate_morphism(const ModuleMorphism& f) {
  if (!same_category(f.source, f.target)) return "source and target are over different algebras or sides";
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim() ||
      f.matrix.modulus() != f.source.modulus())
    return "matrix has wrong shape or field";
  for (std::size_t g : f.source.acting()->generators()) {
    if (f.matrix * f.source.action(g) != f.target.action(g) * f.matrix)
      return "does not commute with the action of b_" + std::to_string(g);
  }
  for (std::size_t r = 0; r < f.target.dim(); ++r)
    for (std::size_t c = 0; c < f.source.dim(); ++c)
      if (f.matrix(r, c) != 0 && f.target.degree(r) != f.source.degree(c)) return "not homogeneous of degree 0";
  return std::nullopt;
}

ModuleMorphism ModuleMorphism::create(Module source, Module target, FpMatrix matrix) {
  ModuleMorphism f{std::move(source), std::move(target), std::move(matrix)};
  if (auto v = validate_morphism(f)) throw ModuleError("invalid morphism: " + *v);
  return f;
}

ModuleMorphism ModuleMorphism::identity(const Module& m) {
  return {m, m, FpMatrix::identity(m.dim(), m.modulus())};
}

ModuleMorphism ModuleMorphism::zero(const Module& source, const Module& target) {
  return {source, target, FpMatrix(target.dim(), source.dim(), source.modulus())};
}

std::size_t ModuleMorphism::rank() const { return ctw::rank(matrix); }

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (g.source.dim() != f.target.dim()) throw ModuleError("compose: dimension mismatch");
  return {f.source, g.target, g.matrix * f.matrix};
}

ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
  return {a.source, a.target, a.matrix + b.matrix};
}

ModuleMorphism scaled(const ModuleMorphism& f, std::uint32_t s) { return {f.source, f.target, f.matrix.scaled(s)}; }

std::optional<std::string> validate_ses(const ShortExactSeq& s) {
  if (auto v = validate_morphism(s.i)) return "first map: " + *v;
  if (auto v = validate_morphism(s.q)) return "second map: " + *v;
  if (s.i.target.dim() != s.q.source.dim()) return "maps are not composable";
  if (!(s.q.matrix * s.i.matrix).is_zero()) return "composition is not zero";
  const std::size_t ri = rank(s.i.matrix);
  if (ri != s.i.source.dim()) return "first map is not injective";
  if (rank(s.q.matrix) != s.q.target.dim()) return "second map is not surjective";
  if (ri + s.q.target.dim() != s.i.target.dim()) return "not exact in the middle";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// sub and quotient modules

namespace {

std::optional<int> vector_degree(const Module& m, const FpMatrix& basis, std::size_t col) {
  std::optional<int> d;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    if (basis(r, col) == 0) continue;
    if (d && *d != m.degree(r)) return std::nullopt;
    d = m.degree(r);
  }
  return d;
}

Submodule submodule_of(const Module& m, const Subspace& s, bool check) {
  const std::size_t k = s.dim();
  std::vector<int> degrees(k, 0);
  if (m.graded()) {
    for (std::size_t c = 0; c < k; ++c) {
      auto d = vector_degree(m, s.basis, c);
      if (!d) throw ModuleError("submodule: subspace is not graded");
      degrees[c] = *d;
    }
  }
  std::vector<FpMatrix> action;
  action.reserve(m.actions().size());
  for (const auto& rho : m.actions()) {
    FpMatrix img = rho * s.basis;
    FpMatrix coords = s.coordinates(img);
    if (check && s.basis * coords != img) throw ModuleError("submodule: subspace is not closed under the action");
    action.push_back(std::move(coords));
  }
  if (action.empty()) action.assign(m.ring()->dim(), FpMatrix(k, k, m.modulus()));
  Module sub = Module::trusted(m.ring(), std::move(action), std::move(degrees), m.side());
  return {sub, ModuleMorphism::trusted(sub, m, s.basis)};
}

}  // namespace

FpMatrix homogeneous_basis(const Module& m, const FpMatrix& x) {
  if (!m.graded()) return image_basis(x);
  std::vector<Vec> cols;
  for (int d : m.support()) {
    FpMatrix xd = x;
    for (std::size_t r = 0; r < x.rows(); ++r)
      if (m.degree(r) != d)
        for (std::size_t c = 0; c < x.cols(); ++c) xd(r, c) = 0;
    FpMatrix b = image_basis(xd);
    for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
  }
  return FpMatrix::from_columns(cols, m.dim(), m.modulus());
}

Submodule submodule(const Module& m, const FpMatrix& x, bool check) {
  if (x.rows() != m.dim()) throw ModuleError("submodule: vectors have wrong length");
  FpMatrix basis = m.graded() ? homogeneous_basis(m, x) : x;
  if (check && m.graded() && rank(basis) != rank(x)) throw ModuleError("submodule: subspace is not graded");
  return submodule_of(m, image_subspace(basis), check);
}

Submodule submodule(const Module& m, const Subspace& s, bool check) { return submodule_of(m, s, check); }

Submodule generated_submodule(const Module& m, const FpMatrix& x) {
  FpMatrix h = homogeneous_basis(m, x);
  std::vector<Vec> cols;
  for (const auto& rho : m.actions()) {
    FpMatrix img = rho * h;
    for (std::size_t c = 0; c < img.cols(); ++c) cols.push_back(img.column(c));
  }
  FpMatrix span = cols.empty() ? FpMatrix(m.dim(), 0, m.modulus()) : FpMatrix::from_columns(cols, m.dim(), m.modulus());
  return submodule_of(m, image_subspace(span), false);
}

Quotient quotient(const Module& m, const FpMatrix& x, bool check) {
  if (x.rows() != m.dim()) throw ModuleError("quotient: vectors have wrong length");
  if (check) {
    for (const auto& rho : m.actions())
      if (!in_span(x, rho * x)) throw ModuleError("quotient: subspace is not a submodule");
    if (m.graded() && rank(homogeneous_basis(m, x)) != rank(x)) throw ModuleError("quotient: subspace is not graded");
  }
  QuotientMap qm = quotient_basis(m.dim(), x);
  std::vector<FpMatrix> action;
  action.reserve(m.actions().size());
  for (const auto& rho : m.actions()) action.push_back(qm.projection * rho * qm.section);
  std::vector<int> degrees;
  for (std::size_t c : qm.complement) degrees.push_back(m.degree(c));
  Module q = Module::trusted(m.ring(), std::move(action), std::move(degrees), m.side());
  return {q, ModuleMorphism::trusted(m, q, qm.projection), qm.section};
}

Submodule kernel(const ModuleMorphism& f) { return submodule_of(f.source, kernel_subspace(f.matrix), false); }

Submodule image(const ModuleMorphism& f) { return submodule_of(f.target, image_subspace(f.matrix), false); }

Quotient cokernel(const ModuleMorphism& f) { return quotient(f.target, f.matrix, false); }

// ---------------------------------------------------------------------------
// direct sums

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw ModuleError("direct_sum of an empty list");
  for (const auto& m : parts) require_same_category(parts.front(), m, "direct_sum");
  const Module& first = parts.front();
  const std::uint32_t p = first.modulus();
  std::size_t total = 0;
  for (const auto& m : parts) total += m.dim();
  std::vector<FpMatrix> action;
  for (std::size_t b = 0; b < first.actions().size(); ++b) {
    FpMatrix big(total, total, p);
    std::size_t off = 0;
    for (const auto& m : parts) {
      big.set_block(off, off, m.action(b));
      off += m.dim();
    }
    action.push_back(std::move(big));
  }
  std::vector<int> degrees;
  for (const auto& m : parts) degrees.insert(degrees.end(), m.degrees().begin(), m.degrees().end());
  std::string name;
  for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? "+" : "") + parts[i].name();
  Module sum = Module::trusted(first.ring(), std::move(action), std::move(degrees), first.side(), name);
  DirectSum out{sum, {}, {}};
  std::size_t off = 0;
  for (const auto& m : parts) {
    FpMatrix inj(total, m.dim(), p), proj(m.dim(), total, p);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      inj(off + i, i) = 1;
      proj(i, off + i) = 1;
    }
    out.injections.push_back(ModuleMorphism::trusted(m, sum, std::move(inj)));
    out.projections.push_back(ModuleMorphism::trusted(sum, m, std::move(proj)));
    off += m.dim();
  }
  return out;
}

DirectSum direct_sum(const Module& a, const Module& b) { return direct_sum(std::vector<Module>{a, b}); }

DirectSum power(const Module& m, std::size_t n) {
  if (n == 0) {
    Module z = Module::zero(m.ring(), m.side());
    return {z, {}, {}};
  }
  return direct_sum(std::vector<Module>(n, m));
}

ModuleMorphism from_sum(const DirectSum& sum, const std::vector<ModuleMorphism>& maps) {
  if (maps.size() != sum.injections.size()) throw ModuleError("from_sum: wrong number of components");
  if (maps.empty()) throw ModuleError("from_sum: no components");
  FpMatrix m = maps.front().matrix;
  for (std::size_t i = 1; i < maps.size(); ++i) m = hstack(m, maps[i].matrix);
  return {sum.module, maps.front().target, std::move(m)};
}

ModuleMorphism to_sum(const DirectSum& sum, const std::vector<ModuleMorphism>& maps) {
  if (maps.size() != sum.projections.size()) throw ModuleError("to_sum: wrong number of components");
  if (maps.empty()) throw ModuleError("to_sum: no components");
  FpMatrix m = maps.front().matrix;
  for (std::size_t i = 1; i < maps.size(); ++i) m = vstack(m, maps[i].matrix);
  return {maps.front().source, sum.module, std::move(m)};
}

ModuleMorphism change_basis(const Module& m, const FpMatrix& g) {
  auto ginv = inverse(g);
  if (!ginv) throw ModuleError("change_basis: matrix is not invertible");
  std::vector<FpMatrix> action;
  for (const auto& rho : m.actions()) action.push_back(*ginv * rho * g);
  std::vector<int> degrees(m.dim(), 0);
  for (std::size_t c = 0; c < m.dim(); ++c) {
    auto d = vector_degree(m, g, c);
    if (!d) throw ModuleError("change_basis: new basis vector is not homogeneous");
    degrees[c] = *d;
  }
  Module n = Module::trusted(m.ring(), std::move(action), std::move(degrees), m.side(), m.name());
  return ModuleMorphism::trusted(n, m, g);
}

Module shift(const Module& m, int n) {
  std::vector<FpMatrix> action;
  const auto& a = *m.acting();
  for (std::size_t b = 0; b < m.actions().size(); ++b) {
    const bool odd = ((static_cast<long>(n) * a.degree(b)) % 2) != 0;
    action.push_back(odd ? -m.action(b) : m.action(b));
  }
  std::vector<int> degrees = m.degrees();
  for (auto& d : degrees) d -= n;
  std::string name = m.name().empty() ? std::string() : m.name() + "[" + std::to_string(n) + "]";
  return Module::trusted(m.ring(), std::move(action), std::move(degrees), m.side(), std::move(name));
}

ModuleMorphism shift(const ModuleMorphism& f, int n) {
  return {shift(f.source, n), shift(f.target, n), f.matrix};
}

}  // namespace ctw
