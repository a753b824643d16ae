#include "ctw/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ctw {

AlgebraPtr Algebra::make(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> structure, Vec unit,
                         std::vector<int> degrees, std::vector<std::string> labels, std::string name) {
  checked_prime(p);
  if (structure.size() != dim * dim * dim) throw AlgebraError("structure tensor has wrong size");
  if (unit.size() != dim) throw AlgebraError("unit vector has wrong size");
  if (degrees.empty()) degrees.assign(dim, 0);
  if (degrees.size() != dim) throw AlgebraError("degree vector has wrong size");
  if (!labels.empty() && labels.size() != dim) throw AlgebraError("label vector has wrong size");

  std::shared_ptr<Algebra> a(new Algebra());
  a->p_ = p;
  a->dim_ = dim;
  a->c_ = std::move(structure);
  for (auto& x : a->c_) x %= p;
  a->unit_ = std::move(unit);
  for (auto& x : a->unit_) x %= p;
  a->degrees_ = std::move(degrees);
  a->labels_ = std::move(labels);
  a->name_ = std::move(name);

  a->left_.reserve(dim);
  a->right_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    FpMatrix l(dim, dim, p), r(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        l(k, j) = a->coeff(i, j, k);
        r(k, j) = a->coeff(j, i, k);
      }
    a->left_.push_back(std::move(l));
    a->right_.push_back(std::move(r));
  }

  // Greedy generators: grow the subalgebra generated by the unit until it is everything.
  if (dim > 0) {
    FpMatrix span = FpMatrix::column_vector(a->unit_, p);
    auto close = [&](FpMatrix s) {
      for (;;) {
        FpMatrix grown = s;
        for (auto g : a->generators_) grown = hstack(grown, a->right_[g] * s);
        FpMatrix next = image_basis(grown);
        if (next.cols() == s.cols()) return next;
        s = next;
      }
    };
    span = image_basis(span);
    for (std::size_t i = 0; i < dim && span.cols() < dim; ++i) {
      if (in_span(span, FpMatrix::column_vector(a->basis_vector(i), p))) continue;
      a->generators_.push_back(i);
      span = close(hstack(span, FpMatrix::column_vector(a->basis_vector(i), p)));
    }
  }
  return a;
}

bool Algebra::graded() const {
  return std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d != 0; });
}

std::pair<int, int> Algebra::window() const {
  if (degrees_.empty()) return {0, 0};
  auto [lo, hi] = std::minmax_element(degrees_.begin(), degrees_.end());
  return {*lo, *hi};
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

FpMatrix Algebra::left_mult(const Vec& a) const {
  FpMatrix m(dim_, dim_, p_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i] != 0) m = m + left_[i].scaled(a[i]);
  return m;
}

FpMatrix Algebra::right_mult(const Vec& a) const {
  FpMatrix m(dim_, dim_, p_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i] != 0) m = m + right_[i].scaled(a[i]);
  return m;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const { return left_mult(a).apply(b); }

bool Algebra::same_as(const Algebra& o) const {
  return p_ == o.p_ && dim_ == o.dim_ && c_ == o.c_ && unit_ == o.unit_ && degrees_ == o.degrees_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

std::optional<AlgebraViolation> validate_algebra(const Algebra& a) {
  using K = AlgebraViolation::Kind;
  const std::size_t n = a.dim();
  const std::uint32_t p = a.modulus();
  FpMatrix unit_left = a.left_mult(a.unit());
  FpMatrix unit_right = a.right_mult(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    if (unit_left.column(i) != a.basis_vector(i)) {
      return AlgebraViolation{K::Unit, i, 0, 0, "unit * b_" + std::to_string(i) + " != b_" + std::to_string(i)};
    }
    if (unit_right.column(i) != a.basis_vector(i)) {
      return AlgebraViolation{K::Unit, i, 0, 0, "b_" + std::to_string(i) + " * unit != b_" + std::to_string(i)};
    }
  }
  // (b_i b_j) b_l = b_i (b_j b_l)  <=>  R_l L_i = L_i R_l on b_j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      FpMatrix lhs = a.right_mult(l) * a.left_mult(i);
      FpMatrix rhs = a.left_mult(i) * a.right_mult(l);
      if (lhs == rhs) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (lhs.column(j) != rhs.column(j)) {
          return AlgebraViolation{K::Associativity, i, j, l,
                                  "associativity fails on (b_" + std::to_string(i) + ", b_" + std::to_string(j) +
                                      ", b_" + std::to_string(l) + ")"};
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.coeff(i, j, k) != 0 && a.degree(k) != a.degree(i) + a.degree(j)) {
          return AlgebraViolation{K::Grading, i, j, k,
                                  "b_" + std::to_string(i) + " * b_" + std::to_string(j) + " has a component b_" +
                                      std::to_string(k) + " of the wrong degree"};
        }
  for (std::size_t i = 0; i < n; ++i)
    if (a.unit()[i] % p != 0 && a.degree(i) != 0)
      return AlgebraViolation{K::Grading, i, 0, 0, "unit is not concentrated in degree 0"};
  return std::nullopt;
}

void require_valid(const Algebra& a) {
  if (auto v = validate_algebra(a)) {
    throw AlgebraError("invalid algebra" + (a.name().empty() ? std::string() : " '" + a.name() + "'") + ": " +
                       v->message);
  }
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  std::lock_guard<std::mutex> lock(a->op_mu_);
  if (auto back = a->op_back_.lock()) return back;
  if (a->op_) return a->op_;
  const std::size_t n = a->dim();
  std::vector<std::uint32_t> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a->coeff(j, i, k);
  std::string name = a->name().empty() ? std::string() : a->name() + "^op";
  if (a->name().size() > 3 && a->name().ends_with("^op")) name = a->name().substr(0, a->name().size() - 3);
  AlgebraPtr op = Algebra::make(a->modulus(), n, std::move(c), a->unit(), a->degrees(), a->labels(), std::move(name));
  {
    std::lock_guard<std::mutex> lock2(op->op_mu_);
    op->op_back_ = a;
  }
  a->op_ = op;
  return op;
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->modulus() != b->modulus()) throw AlgebraError("tensor product of algebras over different fields");
  const std::uint32_t p = a->modulus();
  const std::size_t na = a->dim(), nb = b->dim(), n = na * nb;
  std::vector<std::uint32_t> c(n * n * n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t m = 0; m < na; ++m) {
        std::uint32_t ca = a->coeff(i, k, m);
        if (ca == 0) continue;
        for (std::size_t j = 0; j < nb; ++j)
          for (std::size_t l = 0; l < nb; ++l)
            for (std::size_t q = 0; q < nb; ++q) {
              std::uint32_t cb = b->coeff(j, l, q);
              if (cb == 0) continue;
              c[((i * nb + j) * n + (k * nb + l)) * n + (m * nb + q)] = mul_mod(ca, cb, p);
            }
      }
  Vec unit(n, 0);
  std::vector<int> deg(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      unit[i * nb + j] = mul_mod(a->unit()[i], b->unit()[j], p);
      deg[i * nb + j] = a->degree(i) + b->degree(j);
      if (!a->labels().empty() && !b->labels().empty()) labels.push_back(a->labels()[i] + "*" + b->labels()[j]);
    }
  std::string name = a->name().empty() || b->name().empty() ? std::string() : a->name() + "(x)" + b->name();
  return Algebra::make(p, n, std::move(c), std::move(unit), std::move(deg), std::move(labels), std::move(name));
}

namespace {

struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;  // traversal order
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
  }
};

}  // namespace

AlgebraPtr path_algebra(const QuiverSpec& q, std::uint32_t p, std::string name) {
  checked_prime(p);
  const std::size_t nv = q.vertices;
  for (auto [s, t] : q.arrows)
    if (s >= nv || t >= nv) throw AlgebraError("arrow endpoint out of range");

  // Kahn's algorithm: acyclic iff every vertex gets removed.
  {
    std::vector<std::size_t> indeg(nv, 0);
    for (auto [s, t] : q.arrows) ++indeg[t];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < nv; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    std::size_t removed = 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      ++removed;
      for (auto [s, t] : q.arrows)
        if (s == v && --indeg[t] == 0) stack.push_back(t);
    }
    if (removed != nv) throw AlgebraError("quiver has an oriented cycle; path algebra is infinite-dimensional");
  }

  std::vector<Path> paths;
  for (std::size_t v = 0; v < nv; ++v) paths.push_back({v, v, {}});
  for (std::size_t frontier = 0; frontier < paths.size(); ++frontier) {
    Path cur = paths[frontier];
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].first != cur.target) continue;
      Path next = cur;
      next.arrows.push_back(a);
      next.target = q.arrows[a].second;
      paths.push_back(std::move(next));
    }
  }
  std::sort(paths.begin(), paths.end());
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].arrows}] = i;
  const std::size_t np = paths.size();

  auto find_path = [&](const std::vector<std::size_t>& arrows) -> std::size_t {
    if (arrows.empty()) throw AlgebraError("relation term must be a path of positive length");
    for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
      if (arrows[k] >= q.arrows.size() || arrows[k + 1] >= q.arrows.size() ||
          q.arrows[arrows[k]].second != q.arrows[arrows[k + 1]].first)
        throw AlgebraError("relation term is not a path");
    }
    if (arrows.back() >= q.arrows.size()) throw AlgebraError("relation term uses an unknown arrow");
    return index.at({q.arrows[arrows.front()].first, arrows});
  };
  // Concatenation "first then second", or np when not composable.
  auto concat = [&](std::size_t first, std::size_t second) -> std::size_t {
    const Path& a = paths[first];
    const Path& b = paths[second];
    if (a.target != b.source) return np;
    std::vector<std::size_t> arrows = a.arrows;
    arrows.insert(arrows.end(), b.arrows.begin(), b.arrows.end());
    return index.at({a.source, arrows});
  };

  std::vector<Vec> ideal;
  for (const auto& rel : q.relations) {
    Vec r(np, 0);
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& term : rel) {
      std::size_t idx = find_path(term.arrows);
      if (term.arrows.size() < 2) throw AlgebraError("relations must be combinations of paths of length >= 2");
      std::pair<std::size_t, std::size_t> e{paths[idx].source, paths[idx].target};
      if (ends && *ends != e) throw AlgebraError("relation terms are not parallel paths");
      ends = e;
      r[idx] = add_mod(r[idx], reduce_mod(term.coeff, p), p);
    }
    // u * r * v for all paths u (after) and v (before).
    for (std::size_t before = 0; before < np; ++before)
      for (std::size_t after = 0; after < np; ++after) {
        Vec w(np, 0);
        bool any = false;
        for (std::size_t i = 0; i < np; ++i) {
          if (r[i] == 0) continue;
          std::size_t left = concat(before, i);
          if (left == np) continue;
          std::size_t full = concat(left, after);
          if (full == np) continue;
          w[full] = add_mod(w[full], r[i], p);
          any = true;
        }
        if (any) ideal.push_back(std::move(w));
      }
  }
  FpMatrix ideal_span = ideal.empty() ? FpMatrix(np, 0, p) : FpMatrix::from_columns(ideal, np, p);
  QuotientMap qm = quotient_basis(np, ideal_span);
  const std::size_t n = qm.complement.size();

  std::vector<std::uint32_t> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // b_i * b_j: b_j first, then b_i.
      std::size_t prod = concat(qm.complement[j], qm.complement[i]);
      if (prod == np) continue;
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = qm.projection(k, prod);
    }
  Vec unit(n, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < n; ++k) unit[k] = add_mod(unit[k], qm.projection(k, v), p);
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    const Path& path = paths[qm.complement[k]];
    if (path.arrows.empty()) {
      labels.push_back("e" + std::to_string(path.source + 1));
      continue;
    }
    std::string lab;
    for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it)
      lab += *it < q.arrow_labels.size() ? q.arrow_labels[*it] : "a" + std::to_string(*it);
    labels.push_back(lab);
  }
  return Algebra::make(p, n, std::move(c), std::move(unit), {}, std::move(labels), std::move(name));
}

std::optional<std::string> validate_morphism(const AlgebraMorphism& f) {
  if (!f.source || !f.target) return "morphism without source or target";
  if (f.source->modulus() != f.target->modulus()) return "source and target over different fields";
  if (f.matrix.rows() != f.target->dim() || f.matrix.cols() != f.source->dim()) return "matrix has wrong shape";
  if (f.apply(f.source->unit()) != f.target->unit()) return "unit is not preserved";
  for (std::size_t i = 0; i < f.source->dim(); ++i) {
    Vec fi = f.matrix.column(i);
    for (std::size_t j = 0; j < f.source->dim(); ++j) {
      Vec lhs = f.apply(f.source->multiply(f.source->basis_vector(i), f.source->basis_vector(j)));
      Vec rhs = f.target->multiply(fi, f.matrix.column(j));
      if (lhs != rhs)
        return "product of b_" + std::to_string(i) + " and b_" + std::to_string(j) + " is not preserved";
    }
    for (std::size_t k = 0; k < f.target->dim(); ++k)
      if (fi[k] != 0 && f.target->degree(k) != f.source->degree(i))
        return "degree of b_" + std::to_string(i) + " is not preserved";
  }
  return std::nullopt;
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) {
  return {a, a, FpMatrix::identity(a->dim(), a->modulus())};
}

}  // namespace ctw
