#include "bvkit/hochschild.hpp"

#include "bvkit/error.hpp"
#include "bvkit/tensor.hpp"

namespace bvkit::hochschild {

using hopf::FinAlgebraData;

namespace {

Scalar sign(const Field& f, long e) { return (e % 2 == 0) ? f.one() : -f.one(); }

Mat reshape_substitution(const Field& f, std::size_t d, int n, const Vec& g) {
  std::size_t ln = ipow(d, n);
  Mat u(f, ln, d);
  for (std::size_t z = 0; z < d; ++z) {
    SparseVec col;
    for (std::size_t b = 0; b < ln; ++b)
      if (!g[z * ln + b].is_zero()) col.emplace_back(b, g[z * ln + b]);
    u.set_column(z, densify(f, ln, col));
  }
  return u;
}

Vec identity_element(const Field& f, std::size_t d) {
  Vec id = zero_vec(f, d * d);
  for (std::size_t y = 0; y < d; ++y) id[y * d + y] = f.one();
  return id;
}

}  // namespace

EndOperad::EndOperad(const FinAlgebraData& a, int max_arity)
    : OperadSlice(a.field, a.dim, a.dim, max_arity, "End"), a_(a) {
  std::size_t d = a.dim;
  id_ = identity_element(a.field, d);
  mu_ = zero_vec(a.field, d * d * d);
  for (std::size_t c = 0; c < d * d; ++c)
    for (const auto& [y, x] : a.mult.column(c)) mu_[y * d * d + c] = x;
  e_ = a.unit;
}

EndOperad::EndOperad(const FinAlgebraData& a, const hopf::FrobeniusData& frob, int max_arity)
    : EndOperad(a, max_arity) {
  name_ = "End (cyclic)";
  gram_ = frob.theta.transpose();
  gram_inv_ = inverse(*gram_);
  if (!gram_inv_) throw CheckFailed("Frobenius form is degenerate");
}

Mat EndOperad::substitution(int n, const Vec& g) const { return reshape_substitution(field_, leaf_, n, g); }

Mat EndOperad::ad_theta(int n) const {
  if (!gram_) throw MissingStructure("Ad∘Θ needs Frobenius data");
  return kron(*gram_, Mat::identity(field_, ipow(leaf_, n)));
}

Vec EndOperad::tau(int n, const Vec& f) const {
  if (!gram_) return OperadSlice::tau(n, f);
  if (f.size() != dim(n)) throw DimensionMismatch("tau: operand size");
  const std::size_t d = leaf_, ln = ipow(d, n);
  // F(a_0; a) = Σ_z G[a_0][z] f(a)_z
  Vec F = zero_vec(field_, d * ln);
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t r = 0; r < ln; ++r) {
      if (f[z * ln + r].is_zero()) continue;
      for (const auto& [a0, x] : gram_->column(z)) F[a0 * ln + r] += x * f[z * ln + r];
    }
  // (RF)(a_0,...,a_n) = F(a_n, a_0, ..., a_{n-1})
  Vec RF = zero_vec(field_, d * ln);
  for (std::size_t idx = 0; idx < d * ln; ++idx) {
    std::size_t last = idx % d, head = idx / d;
    RF[idx] = F[last * ln + head];
  }
  Vec out = zero_vec(field_, d * ln);
  for (std::size_t a0 = 0; a0 < d; ++a0)
    for (std::size_t r = 0; r < ln; ++r) {
      if (RF[a0 * ln + r].is_zero()) continue;
      for (const auto& [y, x] : gram_inv_->column(a0)) out[y * ln + r] += x * RF[a0 * ln + r];
    }
  return out;
}

CoEndOperad::CoEndOperad(const FinAlgebraData& c, int max_arity)
    : OperadSlice(c.field, c.dim, c.dim, max_arity, "CoEnd"), c_(c) {
  std::size_t d = c.dim;
  id_ = identity_element(c.field, d);
  mu_ = zero_vec(c.field, d * d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (const auto& [yy, v] : c.delta().column(x)) mu_[x * d * d + yy] = v;
  e_ = c.eps();
}

Mat CoEndOperad::substitution(int n, const Vec& g) const { return reshape_substitution(field_, leaf_, n, g); }

EndOperad end_operad(const FinAlgebraData& a, int max_arity) { return EndOperad(a, max_arity); }
CoEndOperad coend_operad(const FinAlgebraData& c, int max_arity) { return CoEndOperad(c, max_arity); }

EndOperad frobenius_cyclic(const FinAlgebraData& a, const hopf::FrobeniusData& frob, int max_arity) {
  if (!frob.symmetric) throw CheckFailed("cyclic structure on End(A) needs a symmetric Frobenius form");
  return EndOperad(a, frob, max_arity);
}

BimoduleData regular_bimodule(const FinAlgebraData& a) {
  return BimoduleData{a.dim, a.mult, a.mult};
}

BimoduleData dual_bimodule(const FinAlgebraData& a) {
  std::size_t d = a.dim;
  BimoduleData m{d, Mat(a.field, d, d * d), Mat(a.field, d, d * d)};
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t c = 0; c < d; ++c) {
        // (x_x · x^y)(x_c) = x^y(x_c x_x);  (x^y · x_x)(x_c) = x^y(x_x x_c)
        Scalar l = a.mult.at(y, c * d + x), r = a.mult.at(y, x * d + c);
        if (!l.is_zero()) m.left.set(c, x * d + y, l);
        if (!r.is_zero()) m.right.set(c, y * d + x, r);
      }
  return m;
}

BimoduleData augmentation_bimodule(const FinAlgebraData& a) {
  const Vec& eps = a.augmentation_form();
  BimoduleData m{1, Mat(a.field, 1, a.dim), Mat(a.field, 1, a.dim)};
  for (std::size_t x = 0; x < a.dim; ++x) {
    m.left.set(0, x, eps[x]);
    m.right.set(0, x, eps[x]);
  }
  return m;
}

CheckReport check_bimodule(const FinAlgebraData& a, const BimoduleData& m) {
  CheckReport rep;
  std::size_t d = a.dim, k = m.dim;
  auto left = [&](std::size_t x, const Vec& v) {
    Vec out = zero_vec(a.field, k);
    for (std::size_t j = 0; j < k; ++j)
      if (!v[j].is_zero()) axpy(v[j], m.left.column_dense(x * k + j), out);
    return out;
  };
  auto right = [&](const Vec& v, std::size_t x) {
    Vec out = zero_vec(a.field, k);
    for (std::size_t j = 0; j < k; ++j)
      if (!v[j].is_zero()) axpy(v[j], m.right.column_dense(j * d + x), out);
    return out;
  };
  auto left_vec = [&](const Vec& av, const Vec& v) {
    Vec out = zero_vec(a.field, k);
    for (std::size_t x = 0; x < d; ++x)
      if (!av[x].is_zero()) axpy(av[x], left(x, v), out);
    return out;
  };
  auto right_vec = [&](const Vec& v, const Vec& av) {
    Vec out = zero_vec(a.field, k);
    for (std::size_t x = 0; x < d; ++x)
      if (!av[x].is_zero()) axpy(av[x], right(v, x), out);
    return out;
  };
  std::string wl, wr, wm, wu;
  for (std::size_t j = 0; j < k; ++j) {
    Vec v = unit_vec(a.field, k, j);
    if (left_vec(a.unit, v) != v || right_vec(v, a.unit) != v) wu = "m" + std::to_string(j);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        if (wl.empty() && left(x, left(y, v)) != left_vec(a.basis_product(x, y), v))
          wl = a.basis_names[x] + "," + a.basis_names[y];
        if (wr.empty() && right(right(v, x), y) != right_vec(v, a.basis_product(x, y)))
          wr = a.basis_names[x] + "," + a.basis_names[y];
        if (wm.empty() && right(left(x, v), y) != left(x, right(v, y))) wm = a.basis_names[x] + "," + a.basis_names[y];
      }
  }
  rep.add("left action associative", wl.empty(), wl);
  rep.add("right action associative", wr.empty(), wr);
  rep.add("actions commute", wm.empty(), wm);
  rep.add("unit acts trivially", wu.empty(), wu);
  return rep;
}

std::vector<Subquotient> Complex::homology() const {
  std::vector<Subquotient> out;
  const Field& f = d.front().field();
  if (variant == Variant::cochain) {
    for (std::size_t n = 0; n < d.size(); ++n)
      out.emplace_back(n == 0 ? Mat(f, dims[0], 0) : d[n - 1], d[n]);
  } else {
    for (std::size_t n = 0; n < d.size(); ++n)
      out.emplace_back(d[n], n == 0 ? Mat(f, 0, dims[0]) : d[n - 1]);
  }
  return out;
}

Complex hochschild_complex(const FinAlgebraData& a, const BimoduleData& m, int D, Variant v) {
  const Field& f = a.field;
  const std::size_t d = a.dim, k = m.dim;
  if (m.left.rows() != k || m.left.cols() != d * k || m.right.rows() != k || m.right.cols() != k * d)
    throw DimensionMismatch("bimodule action matrices do not match the algebra");
  if (D < 0) throw InvalidInput("max_degree must be non-negative");
  Complex c;
  c.variant = v;
  for (int n = 0; n <= D + 1; ++n) c.dims.push_back(k * ipow(d, n));
  for (int n = 0; n <= D; ++n) {
    const std::size_t ln = ipow(d, n), ln1 = ipow(d, n + 1);
    if (v == Variant::cochain) {
      Mat dm(f, k * ln1, k * ln);
      for (std::size_t col = 0; col < k * ln; ++col) {
        std::size_t mm = col / ln;
        auto b = index_tuple(col % ln, d, n);
        Vec out = zero_vec(f, k * ln1);
        for (std::size_t a1 = 0; a1 < d; ++a1) {
          std::vector<std::size_t> in{a1};
          in.insert(in.end(), b.begin(), b.end());
          std::size_t r = tuple_index(in, d);
          for (const auto& [y, x] : m.left.column(a1 * k + mm)) out[y * ln1 + r] += x;
        }
        for (int i = 1; i <= n; ++i)
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
              Scalar coef = a.mult.at(b[i - 1], p * d + q);
              if (coef.is_zero()) continue;
              std::vector<std::size_t> in(b.begin(), b.begin() + (i - 1));
              in.push_back(p);
              in.push_back(q);
              in.insert(in.end(), b.begin() + i, b.end());
              out[mm * ln1 + tuple_index(in, d)] += sign(f, i) * coef;
            }
        for (std::size_t an = 0; an < d; ++an) {
          std::vector<std::size_t> in = b;
          in.push_back(an);
          std::size_t r = tuple_index(in, d);
          for (const auto& [y, x] : m.right.column(mm * d + an)) out[y * ln1 + r] += sign(f, n + 1) * x;
        }
        dm.set_column(col, out);
      }
      c.d.push_back(std::move(dm));
    } else {
      // b : M⊗A^{⊗(n+1)} -> M⊗A^{⊗n}
      Mat dm(f, k * ln, k * ln1);
      for (std::size_t col = 0; col < k * ln1; ++col) {
        std::size_t mm = col / ln1;
        auto av = index_tuple(col % ln1, d, n + 1);
        Vec out = zero_vec(f, k * ln);
        std::vector<std::size_t> tail(av.begin() + 1, av.end());
        std::size_t rt = tuple_index(tail, d);
        for (const auto& [y, x] : m.right.column(mm * d + av[0])) out[y * ln + rt] += x;
        for (int i = 1; i <= n; ++i)
          for (const auto& [c2, x] : a.mult.column(av[i - 1] * d + av[i])) {
            std::vector<std::size_t> t(av.begin(), av.begin() + (i - 1));
            t.push_back(c2);
            t.insert(t.end(), av.begin() + i + 1, av.end());
            out[mm * ln + tuple_index(t, d)] += sign(f, i) * x;
          }
        std::vector<std::size_t> head(av.begin(), av.end() - 1);
        std::size_t rh = tuple_index(head, d);
        for (const auto& [y, x] : m.left.column(av[n] * k + mm)) out[y * ln + rh] += sign(f, n + 1) * x;
        dm.set_column(col, out);
      }
      c.d.push_back(std::move(dm));
    }
  }
  return c;
}

std::vector<Vec> derivations(const FinAlgebraData& a) {
  const std::size_t d = a.dim;
  const Field& f = a.field;
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t z = 0; z < d; ++z)
      for (std::size_t y = 0; y < d; ++y) {
        Vec row = zero_vec(f, d * d);
        for (std::size_t c = 0; c < d; ++c) row[y * d + c] += a.mult.at(c, x * d + z);
        for (std::size_t w = 0; w < d; ++w) {
          row[w * d + x] -= a.mult.at(y, w * d + z);
          row[w * d + z] -= a.mult.at(y, x * d + w);
        }
        rows.push_back(row);
      }
  return kernel(Mat::from_rows(f, rows, d * d));
}

std::vector<Vec> inner_derivations(const FinAlgebraData& a) {
  const std::size_t d = a.dim;
  std::vector<Vec> all;
  for (std::size_t u = 0; u < d; ++u) {
    Vec v = zero_vec(a.field, d * d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) v[y * d + x] = a.mult.at(y, u * d + x) - a.mult.at(y, x * d + u);
    all.push_back(v);
  }
  std::vector<Vec> out;
  for (auto i : independent_subset(a.field, d * d, all)) out.push_back(all[i]);
  return out;
}

operad::CochainReport hh_bv_table(const FinAlgebraData& a, const hopf::FrobeniusData& frob, int D,
                                  const operad::RingOptions& opt) {
  EndOperad op = frobenius_cyclic(a, frob, D + 1);
  return operad::cohomology_ring(op, D, opt);
}

operad::LambdaReport hc_lambda(const FinAlgebraData& a, const hopf::FrobeniusData& frob, int D, int random_pairs) {
  EndOperad op = frobenius_cyclic(a, frob, D + 1);
  return operad::lambda_cohomology(op, D, random_pairs);
}

Mat signed_rotation(const FinAlgebraData& a, int n) {
  const std::size_t d = a.dim, sz = ipow(d, n + 1);
  Mat t(a.field, sz, sz);
  for (std::size_t idx = 0; idx < sz; ++idx) {
    // a_0..a_n -> a_n a_0 .. a_{n-1}
    std::size_t last = idx % d, head = idx / d;
    t.set(last * ipow(d, n) + head, idx, sign(a.field, n));
  }
  return t;
}

}  // namespace bvkit::hochschild
