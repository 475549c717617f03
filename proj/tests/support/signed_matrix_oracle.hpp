#pragma once

// Brute force over real signed permutation matrices: G(1,1,n), G(2,1,n) and
// G(2,2,n) as integer matrices, with fixed spaces from integer elimination.
// Shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

namespace testing_oracle {

using Matrix = std::vector<long long>;  // row-major n x n

inline Matrix identity(std::size_t n) {
  Matrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

inline Matrix mul(const Matrix& a, const Matrix& b, std::size_t n) {
  Matrix c(a.size(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

inline Matrix transpose(const Matrix& a, std::size_t n) {
  Matrix t(a.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
  return t;
}

struct SignedGroup {
  std::size_t n = 0;
  std::vector<Matrix> elements;
};

// m in {1, 2}; p in {1, 2} with p | m.
inline SignedGroup enumerate(int m, int p, std::size_t n) {
  SignedGroup g{n, {}};
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned signs = 0; signs < (1U << n); ++signs) {
      if (m == 1 && signs != 0) continue;
      if (p == 2 && __builtin_popcount(signs) % 2 != 0) continue;
      Matrix a(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) a[perm[i] * n + i] = (signs >> i) & 1 ? -1 : 1;
      g.elements.push_back(a);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

// Orthogonal, so a reflection is an involution with trace n - 2.
inline bool is_reflection(const Matrix& a, std::size_t n) {
  long long trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
  return a != identity(n) && mul(a, a, n) == identity(n) &&
         trace == static_cast<long long>(n) - 2;
}

// Integer basis of ker(a - I).
inline std::vector<std::vector<long long>> fixed_basis(const Matrix& a, std::size_t n) {
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a[i * n + j] - (i == j ? 1 : 0);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i)
      if (rows[i][c] != 0) piv = i;
    if (piv == n) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const long long f = rows[i][c];
      const long long g = rows[r][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] * g - rows[r][j] * f;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<long long>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    long long scale = 1;
    for (std::size_t k = 0; k < r; ++k) scale = std::lcm(scale, std::llabs(rows[k][pivots[k]]));
    std::vector<long long> v(n, 0);
    v[free] = scale;
    for (std::size_t k = 0; k < r; ++k) v[pivots[k]] = -rows[k][free] * scale / rows[k][pivots[k]];
    basis.push_back(v);
  }
  return basis;
}

inline bool fixes(const Matrix& h, const std::vector<std::vector<long long>>& basis,
                  std::size_t n) {
  for (const auto& v : basis) {
    for (std::size_t i = 0; i < n; ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += h[i * n + j] * v[j];
      if (s != v[i]) return false;
    }
  }
  return true;
}

using Subgroup = std::set<Matrix>;

inline Subgroup closure(const std::vector<Matrix>& gens, std::size_t n) {
  Subgroup s{identity(n)};
  std::vector<Matrix> queue{identity(n)};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (const auto& g : gens) {
      auto y = mul(queue[h], g, n);
      if (s.insert(y).second) queue.push_back(y);
    }
  }
  return s;
}

inline Subgroup conjugate(const Subgroup& s, const Matrix& x, std::size_t n) {
  Subgroup out;
  const auto x_inv = transpose(x, n);
  for (const auto& h : s) out.insert(mul(mul(x, h, n), x_inv, n));
  return out;
}

struct ClassInfo {
  Subgroup representative;
  std::size_t size;
};

inline std::vector<ClassInfo> classes_of(const std::set<Subgroup>& subgroups,
                                         const SignedGroup& g) {
  std::vector<ClassInfo> out;
  std::set<Subgroup> done;
  for (const auto& s : subgroups) {
    if (done.count(s)) continue;
    std::set<Subgroup> orbit;
    for (const auto& x : g.elements) orbit.insert(conjugate(s, x, g.n));
    done.insert(orbit.begin(), orbit.end());
    out.push_back({s, orbit.size()});
  }
  return out;
}

inline std::vector<Matrix> reflections(const SignedGroup& g) {
  std::vector<Matrix> out;
  for (const auto& a : g.elements)
    if (is_reflection(a, g.n)) out.push_back(a);
  return out;
}

// Closure of every subset of reflections; only for tiny groups.
inline std::set<Subgroup> reflection_subgroups(const SignedGroup& g) {
  const auto refl = reflections(g);
  std::set<Subgroup> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << refl.size()); ++mask) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < refl.size(); ++i)
      if (mask >> i & 1) gens.push_back(refl[i]);
    all.insert(closure(gens, g.n));
  }
  return all;
}

inline std::set<Subgroup> parabolic_subgroups(const SignedGroup& g) {
  std::set<Subgroup> all;
  for (const auto& x : g.elements) {
    const auto basis = fixed_basis(x, g.n);
    Subgroup s;
    for (const auto& h : g.elements)
      if (fixes(h, basis, g.n)) s.insert(h);
    all.insert(s);
  }
  return all;
}

inline unsigned nu(std::uint64_t ell, std::uint64_t x) {
  unsigned v = 0;
  for (; x % ell == 0; x /= ell) ++v;
  return v;
}

// Orders of the classes with full ell-valuation minimal under inclusion up
// to conjugacy, sorted.
inline std::vector<std::size_t> minimal_full_orders(const std::vector<ClassInfo>& classes,
                                                    const SignedGroup& g, std::uint64_t ell) {
  const auto target = nu(ell, g.elements.size());
  std::vector<const Subgroup*> full;
  for (const auto& c : classes)
    if (nu(ell, c.representative.size()) == target) full.push_back(&c.representative);
  std::vector<std::size_t> out;
  for (const auto* c : full) {
    bool minimal = true;
    for (const auto* d : full) {
      if (d == c || d->size() >= c->size()) continue;
      for (const auto& x : g.elements) {
        auto conj = conjugate(*d, x, g.n);
        if (std::includes(c->begin(), c->end(), conj.begin(), conj.end())) minimal = false;
      }
    }
    if (minimal) out.push_back(c->size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing_oracle
