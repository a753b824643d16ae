#pragma once

// Test-side oracles. Arithmetic here is deliberately separate from the core:
// plain int64 matrices and a textbook elimination.

#include <cstdint>
#include <random>
#include <vector>

#include "ctw/cdg.hpp"
#include "ctw/fixtures.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t md(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = md(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Mat to_mat(const ctw::FpMatrix& m) {
  Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline std::size_t cols_of(const Mat& a, std::size_t fallback = 0) { return a.empty() ? fallback : a[0].size(); }

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p, std::size_t inner = 0) {
  const std::size_t n = a.size(), k = a.empty() ? inner : a[0].size(), m = cols_of(b);
  Mat c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
  return c;
}

inline std::size_t rank(Mat a, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = cols_of(a);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && md(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t iv = inv(a[r][c], p);
    for (auto& x : a[r]) x = md(x, p) * iv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || md(a[i][c], p) == 0) continue;
      const std::int64_t f = md(a[i][c], p);
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = md(a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const ctw::FpMatrix& m) { return oracle::rank(to_mat(m), m.modulus()); }

/// dim of the space of linear maps f: M -> N with f a_M(b) = a_N(b) f for every basis
/// element b of the acting algebra and f homogeneous of degree 0.
inline std::size_t hom_dim(const ctw::Module& m, const ctw::Module& n) {
  const std::int64_t p = m.modulus();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<std::size_t> vars;  // positions (i, j) of f allowed by degrees, f(i, j) maps m_j to n_i
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      if (n.degree(i) == m.degree(j)) vars.push_back(i * dm + j);
  if (vars.empty()) return 0;
  Mat eq;
  for (std::size_t b = 0; b < m.acting()->dim(); ++b) {
    Mat am = to_mat(m.action(b)), an = to_mat(n.action(b));
    // (f am - an f)(i, j) = sum_k f(i,k) am(k,j) - an(i,k) f(k,j)
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        std::vector<std::int64_t> row(vars.size(), 0);
        for (std::size_t v = 0; v < vars.size(); ++v) {
          const std::size_t fi = vars[v] / dm, fj = vars[v] % dm;
          std::int64_t c = 0;
          if (fi == i) c += am[fj][j];
          if (fj == j) c -= an[i][fi];
          row[v] = md(c, p);
        }
        eq.push_back(std::move(row));
      }
  }
  return vars.size() - oracle::rank(eq, p);
}

/// Ext^i(k, k) and Tor_i(k, k) over a local algebra with a periodic free resolution
/// ... -> A --(.x)--> A --(.x)--> A -> k: every term of Hom_A(P_•, k) or k ⊗_A P_• is k
/// and the differentials are the action of x on k.
inline std::size_t periodic_ext_dim(const ctw::Module& k, std::size_t x_index, std::size_t i) {
  const std::size_t d = k.dim();
  const std::size_t r = oracle::rank(k.action(x_index));
  const std::size_t in = i == 0 ? 0 : r;  // d^{i-1}
  return d - r - in;
}
inline std::size_t periodic_tor_dim(const ctw::Module& k, std::size_t x_index, std::size_t i) {
  const std::size_t d = k.dim();
  const std::size_t r = oracle::rank(k.action(x_index));
  const std::size_t out = i == 0 ? 0 : r;  // d_i
  return d - out - r;
}

/// Euler form of the A2 path algebra 1 -> 2: <a, b> = a1 b1 + a2 b2 - a1 b2.
/// For a hereditary algebra dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>.
inline std::size_t a2_ext1(const ctw::Module& m, const ctw::Module& n) {
  auto vec = [](const ctw::Module& x) {
    return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(oracle::rank(x.action(0))),
                                                  static_cast<std::int64_t>(oracle::rank(x.action(1)))};
  };
  auto [m1, m2] = vec(m);
  auto [n1, n2] = vec(n);
  const std::int64_t euler = m1 * n1 + m2 * n2 - m1 * n2;
  return static_cast<std::size_t>(static_cast<std::int64_t>(oracle::hom_dim(m, n)) - euler);
}

/// Over the A2 path algebra (basis e1, e2, a), a representation V1 -> V2 is projective
/// iff the arrow is injective on e1 M and injective iff it maps onto e2 M.
inline bool a2_projective(const ctw::Module& m) {
  const std::int64_t p = m.modulus();
  Mat a = to_mat(m.action(2)), e1 = to_mat(m.action(0));
  return oracle::rank(mul(a, e1, p, m.dim()), p) == oracle::rank(e1, p);
}
inline bool a2_injective(const ctw::Module& m) {
  const std::int64_t p = m.modulus();
  return oracle::rank(to_mat(m.action(2)), p) == oracle::rank(to_mat(m.action(1)), p);
}

/// A complex of vector spaces is acyclic iff dim = 2 rank d.
inline bool acyclic(const ctw::FpMatrix& d) { return d.rows() == 2 * oracle::rank(d); }

// ---------------------------------------------------------------------------
// generators

using Rng = std::mt19937_64;

inline std::uint32_t rnd(Rng& g, std::uint32_t p) { return static_cast<std::uint32_t>(g() % p); }

/// Random invertible matrix, block diagonal on the degree blocks of `degrees`.
inline ctw::FpMatrix random_homogeneous_invertible(const std::vector<int>& degrees, std::uint32_t p, Rng& g) {
  const std::size_t n = degrees.size();
  for (;;) {
    ctw::FpMatrix m(n, n, p);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (degrees[r] == degrees[c]) m(r, c) = rnd(g, p);
    if (oracle::rank(m) == n) return m;
  }
}

/// The module conjugated by a random homogeneous change of basis.
inline ctw::Module scramble(const ctw::Module& m, Rng& g) {
  if (m.dim() == 0) return m;
  std::vector<int> deg(m.degrees().begin(), m.degrees().end());
  return ctw::change_basis(m, random_homogeneous_invertible(deg, m.modulus(), g)).source;
}

/// All multisets over `parts` with total dimension <= max_dim (nonempty), each with its
/// multiplicity vector.
struct Sum {
  ctw::Module module;
  std::vector<std::size_t> counts;
};
inline std::vector<Sum> sums(const std::vector<ctw::Module>& parts, std::size_t max_dim) {
  std::vector<Sum> out;
  std::vector<std::size_t> counts(parts.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == parts.size()) {
      std::vector<ctw::Module> ms;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t c = 0; c < counts[i]; ++c) ms.push_back(parts[i]);
      if (!ms.empty()) out.push_back({ctw::direct_sum(ms).module, counts});
      return;
    }
    for (std::size_t c = 0; used + c * parts[pos].dim() <= max_dim; ++c) {
      counts[pos] = c;
      self(self, pos + 1, used + c * parts[pos].dim());
      if (parts[pos].dim() == 0) break;
    }
    counts[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

/// Random homogeneous vector of the given module in a random occurring degree.
inline ctw::Vec random_homogeneous_vector(const ctw::Module& m, Rng& g) {
  auto sup = m.support();
  const int d = sup[g() % sup.size()];
  ctw::Vec v(m.dim(), 0);
  for (std::size_t i : m.indices_of_degree(d)) v[i] = rnd(g, m.modulus());
  return v;
}

/// 0 -> <random homogeneous vectors> -> m -> quotient -> 0.
inline ctw::ShortExactSeq random_ses(const ctw::Module& m, Rng& g, std::size_t gens) {
  ctw::FpMatrix x(m.dim(), 0, m.modulus());
  for (std::size_t i = 0; i < gens; ++i)
    x = ctw::hstack(x, ctw::FpMatrix::column_vector(random_homogeneous_vector(m, g), m.modulus()));
  ctw::Submodule sub = ctw::generated_submodule(m, x);
  ctw::Quotient q = ctw::cokernel(sub.inclusion);
  return {sub.inclusion, q.projection};
}

}  // namespace oracle
