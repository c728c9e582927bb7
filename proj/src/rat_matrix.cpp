#include "liesym/rat_matrix.hpp"

#include <algorithm>

#include "liesym/symbols.hpp"

namespace liesym {

RatMatrix rm_zero(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, RatVector(cols, rat(0)));
}

RatMatrix rm_identity(std::size_t n) {
  RatMatrix m = rm_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = rat(1);
  return m;
}

RatMatrix rm_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out = rm_zero(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      if (a[i][p] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][p] * b[p][j];
    }
  }
  for (auto& row : out) {
    for (auto& v : row) v.canonicalize();
  }
  return out;
}

RatMatrix rm_add(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      out[i][j] += b[i][j];
      out[i][j].canonicalize();
    }
  }
  return out;
}

RatMatrix rm_scale(const Rat& c, const RatMatrix& a) {
  RatMatrix out = a;
  for (auto& row : out) {
    for (auto& v : row) {
      v *= c;
      v.canonicalize();
    }
  }
  return out;
}

RatVector rm_apply(const RatMatrix& a, const RatVector& v) {
  RatVector out(a.size(), rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    out[i].canonicalize();
  }
  return out;
}

bool rm_is_zero(const RatMatrix& a) {
  for (const auto& row : a) {
    for (const auto& v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

Rat rm_trace(const RatMatrix& a) {
  Rat t = rat(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  t.canonicalize();
  return t;
}

std::optional<RatVector> rm_solve(const RatMatrix& a, const RatVector& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  RatMatrix m = a;
  RatVector rhs = b;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    std::swap(rhs[sel], rhs[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      m[r][j] *= inv;
      m[r][j].canonicalize();
    }
    rhs[r] *= inv;
    rhs[r].canonicalize();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] -= f * m[r][j];
        m[i][j].canonicalize();
      }
      rhs[i] -= f * rhs[r];
      rhs[i].canonicalize();
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  RatVector x(cols, rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::size_t rm_rank(RatMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] -= f * m[r][j];
        m[i][j].canonicalize();
      }
    }
    ++r;
  }
  return r;
}

std::vector<Rat> rm_charpoly(const RatMatrix& a) {
  std::size_t n = a.size();
  // p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0 via M_k = A M_{k-1} + c_{n-k+1} I
  std::vector<Rat> c(n + 1, rat(0));
  c[n] = rat(1);
  RatMatrix m = rm_zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      m = rm_identity(n);
    } else {
      RatMatrix am = rm_mul(a, m);
      for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
      m = std::move(am);
    }
    Rat tr = rm_trace(rm_mul(a, m));
    c[n - k] = -tr / static_cast<long>(k);
    c[n - k].canonicalize();
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& v) {
  mpz_class a = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat v = rat(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    v = v * x + p[i];
    v.canonicalize();
  }
  return v;
}

// exact deflation: p / (x - r)
std::vector<Rat> deflate(const std::vector<Rat>& p, const Rat& r) {
  std::vector<Rat> q(p.size() - 1, rat(0));
  Rat carry = rat(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    carry.canonicalize();
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::optional<RationalRoots> rational_roots(const std::vector<Rat>& poly) {
  std::vector<Rat> p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() <= 1) return RationalRoots{};

  RationalRoots out;
  while (p.size() > 1) {
    // strip zero roots first
    if (p[0] == 0) {
      bool found = false;
      for (auto& [root, mult] : out.roots) {
        if (root == 0) {
          ++mult;
          found = true;
        }
      }
      if (!found) out.roots.push_back({rat(0), 1});
      p.erase(p.begin());
      continue;
    }
    // integer-scale and enumerate candidate roots p/q
    mpz_class den(1);
    for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
    mpz_class lead = mpz_class(p.back().get_num() * den / p.back().get_den());
    mpz_class tail = mpz_class(p.front().get_num() * den / p.front().get_den());
    bool found = false;
    for (const auto& pn : divisors(tail)) {
      for (const auto& qd : divisors(lead)) {
        for (int sign : {1, -1}) {
          Rat cand(sign * pn, qd);
          cand.canonicalize();
          if (poly_eval(p, cand) == 0) {
            int mult = 0;
            while (p.size() > 1 && poly_eval(p, cand) == 0) {
              p = deflate(p, cand);
              ++mult;
            }
            out.roots.push_back({cand, mult});
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;  // does not split over Q
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
  return out;
}

}  // namespace liesym
