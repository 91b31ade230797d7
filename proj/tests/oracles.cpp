#include "oracles.hpp"

#include <utility>

namespace oracle {

using bvkit::Scalar;

std::size_t dense_rank(Dense m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> betti(const std::vector<std::size_t>& dims, const std::vector<Dense>& d) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < dims.size() + 1 && k < d.size(); ++k) {
    std::size_t rank_out = dense_rank(d[k]);
    std::size_t rank_in = k == 0 ? 0 : dense_rank(d[k - 1]);
    out.push_back(dims[k] - rank_out - rank_in);
  }
  return out;
}

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::size_t> digits(std::size_t idx, std::size_t d, std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t k = n; k-- > 0;) {
    t[k] = idx % d;
    idx /= d;
  }
  return t;
}

std::size_t undigits(const std::vector<std::size_t>& t, std::size_t d) {
  std::size_t r = 0;
  for (auto x : t) r = r * d + x;
  return r;
}

}  // namespace

Dense hochschild_cochain_differential(const std::vector<std::vector<std::vector<Scalar>>>& mult, std::size_t n) {
  std::size_t d = mult.size();
  const bvkit::Field& f = mult[0][0][0].field();
  std::size_t in_dim = d * power(d, n), out_dim = d * power(d, n + 1);
  Dense m(out_dim, std::vector<Scalar>(in_dim, f.zero()));
  // f = e_{z; b}: f(b) = x_z, zero on other basis tuples
  for (std::size_t col = 0; col < in_dim; ++col) {
    std::size_t z = col / power(d, n);
    auto b = digits(col % power(d, n), d, n);
    for (std::size_t t = 0; t < power(d, n + 1); ++t) {
      auto a = digits(t, d, n + 1);
      std::vector<Scalar> val(d, f.zero());
      // a_1 f(a_2..a_{n+1})
      if (std::vector<std::size_t>(a.begin() + 1, a.end()) == b)
        for (std::size_t y = 0; y < d; ++y) val[y] += mult[a[0]][z][y];
      // sum (-1)^i f(.., a_i a_{i+1}, ..)
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
          if (mult[a[i - 1]][a[i]][c].is_zero()) continue;
          std::vector<std::size_t> merged(a.begin(), a.begin() + (i - 1));
          merged.push_back(c);
          merged.insert(merged.end(), a.begin() + i + 1, a.end());
          if (merged != b) continue;
          Scalar s = mult[a[i - 1]][a[i]][c];
          if (i % 2) s = -s;
          val[z] += s;
        }
      }
      // (-1)^{n+1} f(a_1..a_n) a_{n+1}
      if (std::vector<std::size_t>(a.begin(), a.end() - 1) == b)
        for (std::size_t y = 0; y < d; ++y) {
          Scalar s = mult[z][a[n]][y];
          val[y] += (n + 1) % 2 ? -s : s;
        }
      for (std::size_t y = 0; y < d; ++y)
        if (!val[y].is_zero()) m[y * power(d, n + 1) + undigits(a, d)][col] = val[y];
    }
  }
  return m;
}

Dense dual_bar_differential(const std::vector<std::vector<std::vector<Scalar>>>& mult, const std::vector<Scalar>& eps,
                            std::size_t n) {
  std::size_t d = mult.size();
  const bvkit::Field& f = eps[0].field();
  Dense m(power(d, n + 1), std::vector<Scalar>(power(d, n), f.zero()));
  // (df)(a_1..a_{n+1}) = ε(a_1)f(a_2..) + Σ(-1)^i f(..a_i a_{i+1}..) + (-1)^{n+1} f(a_1..a_n)ε(a_{n+1})
  for (std::size_t t = 0; t < power(d, n + 1); ++t) {
    auto a = digits(t, d, n + 1);
    m[t][undigits(std::vector<std::size_t>(a.begin() + 1, a.end()), d)] += eps[a[0]];
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t c = 0; c < d; ++c) {
        Scalar s = mult[a[i - 1]][a[i]][c];
        if (s.is_zero()) continue;
        std::vector<std::size_t> merged(a.begin(), a.begin() + (i - 1));
        merged.push_back(c);
        merged.insert(merged.end(), a.begin() + i + 1, a.end());
        m[t][undigits(merged, d)] += i % 2 ? -s : s;
      }
    Scalar last = eps[a[n]];
    m[t][undigits(std::vector<std::size_t>(a.begin(), a.end() - 1), d)] += (n + 1) % 2 ? -last : last;
  }
  return m;
}

Dense cobar_differential(const std::vector<std::vector<std::vector<Scalar>>>& comult, const std::vector<Scalar>& unit,
                         std::size_t n) {
  std::size_t d = comult.size();
  const bvkit::Field& f = unit[0].field();
  Dense m(power(d, n + 1), std::vector<Scalar>(power(d, n), f.zero()));
  // d(c) = 1⊗c + Σ(-1)^i c_1..Δ(c_i)..c_n + (-1)^{n+1} c⊗1
  for (std::size_t col = 0; col < power(d, n); ++col) {
    auto c = digits(col, d, n);
    for (std::size_t u = 0; u < d; ++u) {
      std::vector<std::size_t> t{u};
      t.insert(t.end(), c.begin(), c.end());
      m[undigits(t, d)][col] += unit[u];
      std::vector<std::size_t> t2 = c;
      t2.push_back(u);
      m[undigits(t2, d)][col] += (n + 1) % 2 ? -unit[u] : unit[u];
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          Scalar s = comult[c[i - 1]][a][b];
          if (s.is_zero()) continue;
          std::vector<std::size_t> t(c.begin(), c.begin() + (i - 1));
          t.push_back(a);
          t.push_back(b);
          t.insert(t.end(), c.begin() + i, c.end());
          m[undigits(t, d)][col] += i % 2 ? -s : s;
        }
  }
  return m;
}

}  // namespace oracle
