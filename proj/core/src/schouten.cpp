#include "bvkit/schouten.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "bvkit/error.hpp"

namespace bvkit::schouten {

namespace {

Scalar sign(const Field& f, long e) { return (e % 2 == 0) ? f.one() : -f.one(); }

std::vector<std::size_t> bits(std::size_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask >> i; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

// x_S ∧ x_T = sign * x_{S∪T}, zero sign when S and T meet
long merge_sign(std::size_t s, std::size_t t) {
  long inv = 0;
  for (auto i : bits(t)) inv += std::popcount(s >> (i + 1));
  return inv;
}

void require_size(const LieData& l, const Vec& u) {
  if (u.size() != total_dim(l)) throw DimensionMismatch("element of the wrong exterior algebra");
}

LieData empty(const Field& f, std::vector<std::string> names) {
  LieData l;
  l.field = f;
  l.dim = names.size();
  l.names = std::move(names);
  l.brackets.assign(l.dim * l.dim, zero_vec(f, l.dim));
  l.delta = zero_vec(f, l.dim);
  return l;
}

void set_bracket(LieData& l, std::size_t i, std::size_t j, const Vec& v) {
  l.brackets[i * l.dim + j] = v;
  l.brackets[j * l.dim + i] = scale(-l.field.one(), v);
}

std::string lie_names(const LieData& l, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + l.names[i];
  return s;
}

}  // namespace

Vec LieData::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (!x[i].is_zero())
      for (std::size_t j = 0; j < dim; ++j)
        if (!y[j].is_zero()) axpy(x[i] * y[j], bracket(i, j), out);
  return out;
}

CheckReport check_lie(const LieData& l) {
  if (l.brackets.size() != l.dim * l.dim || l.delta.size() != l.dim) throw DimensionMismatch("malformed Lie data");
  CheckReport rep;
  const std::size_t d = l.dim;
  std::string w;
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      if (l.bracket(i, j) != scale(-l.field.one(), l.bracket(j, i))) w = lie_names(l, {i, j});
  rep.add("antisymmetric", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      for (std::size_t k = 0; k < d && w.empty(); ++k) {
        Vec x = unit_vec(l.field, d, i), y = unit_vec(l.field, d, j), z = unit_vec(l.field, d, k);
        Vec s = l.bracket(x, l.bracket(y, z));
        s = add(s, l.bracket(y, l.bracket(z, x)));
        s = add(s, l.bracket(z, l.bracket(x, y)));
        if (!is_zero(s)) w = lie_names(l, {i, j, k});
      }
  rep.add("Jacobi", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      if (!dot(l.delta, l.bracket(i, j)).is_zero()) w = lie_names(l, {i, j});
  rep.add("delta vanishes on brackets", w.empty(), w);
  return rep;
}

LieData abelian(const Field& f, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return empty(f, names);
}

LieData affine_line(const Field& f, long delta_x) {
  LieData l = empty(f, {"x", "y"});
  set_bracket(l, 0, 1, unit_vec(f, 2, 1));
  l.delta[0] = f.from_int(delta_x);
  return l;
}

LieData heisenberg(const Field& f) {
  LieData l = empty(f, {"x", "y", "z"});
  set_bracket(l, 0, 1, unit_vec(f, 3, 2));
  return l;
}

LieData sl2(const Field& f) {
  LieData l = empty(f, {"h", "e", "f"});
  set_bracket(l, 0, 1, scale(f.from_int(2), unit_vec(f, 3, 1)));
  set_bracket(l, 0, 2, scale(f.from_int(-2), unit_vec(f, 3, 2)));
  set_bracket(l, 1, 2, unit_vec(f, 3, 0));
  return l;
}

std::vector<std::string> lie_builtin_names() {
  return {"abelian1", "abelian2", "abelian3", "affine", "affine_delta", "heisenberg", "sl2"};
}

LieData lie_builtin(const std::string& name, const Field& f) {
  if (name == "abelian1") return abelian(f, 1);
  if (name == "abelian2") return abelian(f, 2);
  if (name == "abelian3") return abelian(f, 3);
  if (name == "affine") return affine_line(f, 0);
  if (name == "affine_delta") return affine_line(f, 1);
  if (name == "heisenberg") return heisenberg(f);
  if (name == "sl2") return sl2(f);
  throw InvalidInput("unknown Lie fixture '" + name + "'");
}

std::size_t total_dim(const LieData& l) {
  if (l.dim > 16) throw BudgetExceeded("exterior algebras are limited to 16 generators");
  return std::size_t{1} << l.dim;
}

int degree_of_index(std::size_t mask) { return std::popcount(mask); }

std::vector<std::size_t> degree_basis(const LieData& l, int k) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> tuples;
  for (std::size_t m = 0; m < total_dim(l); ++m)
    if (degree_of_index(m) == k) tuples.emplace_back(bits(m), m);
  std::sort(tuples.begin(), tuples.end());
  std::vector<std::size_t> out;
  for (const auto& [t, m] : tuples) out.push_back(m);
  return out;
}

Vec unit_element(const LieData& l) { return unit_vec(l.field, total_dim(l), 0); }

Vec monomial(const LieData& l, const std::vector<std::size_t>& indices) {
  Vec out = unit_element(l);
  for (auto i : indices) {
    if (i >= l.dim) throw InvalidInput("generator index out of range");
    out = wedge(l, out, unit_vec(l.field, total_dim(l), std::size_t{1} << i));
  }
  return out;
}

Vec generator(const LieData& l, const Vec& x) {
  if (x.size() != l.dim) throw DimensionMismatch("not an element of L");
  Vec out = zero_vec(l.field, total_dim(l));
  for (std::size_t i = 0; i < l.dim; ++i) out[std::size_t{1} << i] = x[i];
  return out;
}

int degree(const LieData& l, const Vec& u) {
  require_size(l, u);
  int deg = -1;
  for (std::size_t m = 0; m < u.size(); ++m)
    if (!u[m].is_zero()) {
      if (deg >= 0 && deg != degree_of_index(m)) return -1;
      deg = degree_of_index(m);
    }
  return deg;
}

std::string describe(const LieData& l, const Vec& u) {
  require_size(l, u);
  std::string s;
  for (int k = 0; k <= static_cast<int>(l.dim); ++k)
    for (auto m : degree_basis(l, k)) {
      if (u[m].is_zero()) continue;
      std::string mono;
      for (auto i : bits(m)) mono += (mono.empty() ? "" : "∧") + l.names[i];
      if (mono.empty()) mono = "1";
      s += (s.empty() ? "" : " + ") + (u[m].is_one() ? mono : "(" + u[m].to_string() + ")" + mono);
    }
  return s.empty() ? "0" : s;
}

Vec wedge(const LieData& l, const Vec& u, const Vec& v) {
  require_size(l, u);
  require_size(l, v);
  Vec out = zero_vec(l.field, u.size());
  for (std::size_t s = 0; s < u.size(); ++s) {
    if (u[s].is_zero()) continue;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (!v[t].is_zero() && (s & t) == 0) out[s | t] += sign(l.field, merge_sign(s, t)) * u[s] * v[t];
  }
  return out;
}

Vec schouten_bracket(const LieData& l, const Vec& u, const Vec& v) {
  require_size(l, u);
  require_size(l, v);
  const Field& F = l.field;
  const std::size_t n = u.size();
  Vec out = zero_vec(F, n);
  for (std::size_t s = 1; s < n; ++s) {
    if (u[s].is_zero()) continue;
    auto xs = bits(s);
    const long p = static_cast<long>(xs.size());
    for (std::size_t t = 1; t < n; ++t) {
      if (v[t].is_zero()) continue;
      auto ys = bits(t);
      const long q = static_cast<long>(ys.size());
      for (long i = 1; i <= p; ++i)
        for (long j = 1; j <= q; ++j) {
          Vec br = generator(l, l.bracket(xs[i - 1], ys[j - 1]));
          if (is_zero(br)) continue;
          std::size_t rs = s & ~(std::size_t{1} << xs[i - 1]), rt = t & ~(std::size_t{1} << ys[j - 1]);
          Vec rest = wedge(l, unit_vec(F, n, rs), unit_vec(F, n, rt));
          axpy(sign(F, i + j) * u[s] * v[t], wedge(l, br, rest), out);
        }
    }
  }
  return out;
}

Vec ce_differential(const LieData& l, const Vec& u) {
  require_size(l, u);
  const Field& F = l.field;
  const std::size_t n = u.size();
  Vec out = zero_vec(F, n);
  for (std::size_t s = 1; s < n; ++s) {
    if (u[s].is_zero()) continue;
    auto xs = bits(s);
    const long k = static_cast<long>(xs.size());
    for (long i = 1; i <= k; ++i) {
      const Scalar& di = l.delta[xs[i - 1]];
      if (!di.is_zero()) out[s & ~(std::size_t{1} << xs[i - 1])] += sign(F, i - 1) * di * u[s];
    }
    for (long i = 1; i <= k; ++i)
      for (long j = i + 1; j <= k; ++j) {
        Vec br = generator(l, l.bracket(xs[i - 1], xs[j - 1]));
        if (is_zero(br)) continue;
        std::size_t rest = s & ~(std::size_t{1} << xs[i - 1]) & ~(std::size_t{1} << xs[j - 1]);
        axpy(sign(F, i + j) * u[s], wedge(l, br, unit_vec(F, n, rest)), out);
      }
  }
  return out;
}

Mat ce_matrix(const LieData& l) {
  const std::size_t n = total_dim(l);
  Mat m(l.field, n, n);
  for (std::size_t s = 0; s < n; ++s) m.set_column(s, ce_differential(l, unit_vec(l.field, n, s)));
  return m;
}

CheckReport check_free_bv(const LieData& l, int D) {
  CheckReport rep = check_lie(l);
  const Field& F = l.field;
  const std::size_t n = total_dim(l);
  auto e = [&](std::size_t m) { return unit_vec(F, n, m); };
  auto B = [&](const Vec& u) { return ce_differential(l, u); };
  auto br = [&](const Vec& u, const Vec& v) { return schouten_bracket(l, u, v); };
  auto mul = [&](const Vec& u, const Vec& v) { return wedge(l, u, v); };
  std::vector<std::size_t> masks;
  for (int k = 0; k <= std::min<int>(D, static_cast<int>(l.dim)); ++k)
    for (auto m : degree_basis(l, k)) masks.push_back(m);

  Mat d = ce_matrix(l);
  rep.add("d^2 = 0", (d * d).is_zero());
  std::string w;
  for (std::size_t i = 0; i < l.dim && w.empty(); ++i)
    if (B(e(std::size_t{1} << i)) != scale(l.delta[i], unit_element(l))) w = l.names[i];
  rep.add("d = delta on Λ^1", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < l.dim && w.empty(); ++i)
    for (std::size_t j = 0; j < l.dim && w.empty(); ++j)
      if (!is_zero(B(br(e(std::size_t{1} << i), e(std::size_t{1} << j))))) w = lie_names(l, {i, j});
  rep.add("d∘{,} = 0 on Λ^1", w.empty(), w);

  std::string wbv, was;
  for (auto s : masks)
    for (auto t : masks) {
      const int p = degree_of_index(s), q = degree_of_index(t);
      Vec u = e(s), v = e(t);
      Vec rhs = B(mul(u, v));
      axpy(-F.one(), mul(B(u), v), rhs);
      axpy(-sign(F, p), mul(u, B(v)), rhs);
      rhs = scale(sign(F, p), rhs);
      Vec b = br(u, v);
      if (wbv.empty() && b != rhs) wbv = describe(l, u) + " , " + describe(l, v);
      if (was.empty() && b != scale(-sign(F, (p - 1) * (q - 1)), br(v, u))) was = describe(l, u) + " , " + describe(l, v);
    }
  rep.add("BV relation gives the Schouten bracket", wbv.empty(), wbv);
  rep.add("bracket antisymmetric", was.empty(), was);

  std::string wj, wp;
  for (auto s : masks)
    for (auto t : masks)
      for (auto r : masks) {
        const int p = degree_of_index(s), q = degree_of_index(t);
        Vec a = e(s), b = e(t), c = e(r);
        if (wj.empty()) {
          Vec lhs = br(a, br(b, c));
          Vec rhs = add(br(br(a, b), c), scale(sign(F, (p - 1) * (q - 1)), br(b, br(a, c))));
          if (lhs != rhs) wj = describe(l, a) + " , " + describe(l, b) + " , " + describe(l, c);
        }
        if (wp.empty()) {
          Vec lhs = br(a, mul(b, c));
          Vec rhs = add(mul(br(a, b), c), scale(sign(F, (p - 1) * q), mul(b, br(a, c))));
          if (lhs != rhs) wp = describe(l, a) + " , " + describe(l, b) + " , " + describe(l, c);
        }
      }
  rep.add("graded Jacobi", wj.empty(), wj);
  rep.add("Poisson rule", wp.empty(), wp);

  // B on products of two and three monomials
  std::string wprod;
  auto product_formula = [&](const std::vector<Vec>& xs, const std::vector<int>& deg) {
    const std::size_t k = xs.size();
    Vec out = zero_vec(F, n);
    auto prod_except = [&](std::size_t skip1, std::size_t skip2, std::size_t replace, const Vec* with) {
      Vec acc = unit_element(l);
      for (std::size_t m = 0; m < k; ++m) {
        if (m == skip1 || m == skip2) continue;
        acc = mul(acc, m == replace ? *with : xs[m]);
      }
      return acc;
    };
    long before = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Vec bi = B(xs[i]);
      axpy(sign(F, before), prod_except(k, k, i, &bi), out);
      before += deg[i];
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        // move x_i and x_j to the front, then B(x_i x_j R) contributes (-1)^{|x_i|}{x_i,x_j}R
        long before_i = 0, before_j = 0;
        for (std::size_t m = 0; m < i; ++m) before_i += deg[m];
        for (std::size_t m = 0; m < j; ++m)
          if (m != i) before_j += deg[m];
        Vec term = mul(br(xs[i], xs[j]), prod_except(i, j, k, nullptr));
        axpy(sign(F, deg[i] + deg[i] * before_i + deg[j] * before_j), term, out);
      }
    return out;
  };
  std::string wgen;
  for (std::size_t k = 2; k <= std::min<std::size_t>(l.dim, static_cast<std::size_t>(std::max(D, 0))) && wgen.empty(); ++k) {
    // every ordered k-tuple of generators, repetitions allowed
    std::vector<std::size_t> idx(k, 0);
    do {
      std::vector<Vec> xs;
      for (auto i : idx) xs.push_back(e(std::size_t{1} << i));
      Vec prod = unit_element(l);
      for (const auto& x : xs) prod = mul(prod, x);
      Vec rhs = zero_vec(F, n);
      for (std::size_t i = 0; i < k; ++i) {
        Vec acc = unit_element(l);
        for (std::size_t m = 0; m < k; ++m) acc = mul(acc, m == i ? B(xs[m]) : xs[m]);
        axpy(sign(F, static_cast<long>(i)), acc, rhs);
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
          Vec acc = br(xs[i], xs[j]);
          for (std::size_t m = 0; m < k; ++m)
            if (m != i && m != j) acc = mul(acc, xs[m]);
          axpy(sign(F, static_cast<long>(i + j)), acc, rhs);
        }
      if (B(prod) != rhs) wgen = describe(l, prod);
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == l.dim) idx[pos++] = 0;
      if (pos == k) break;
    } while (wgen.empty());
  }
  rep.add("d on products of generators", wgen.empty(), wgen);
  for (auto s : masks)
    for (auto t : masks) {
      if (!wprod.empty()) break;
      std::vector<Vec> pair{e(s), e(t)};
      std::vector<int> dp{degree_of_index(s), degree_of_index(t)};
      if (B(mul(pair[0], pair[1])) != product_formula(pair, dp)) wprod = describe(l, pair[0]) + " , " + describe(l, pair[1]);
      for (auto r : masks) {
        if (!wprod.empty()) break;
        std::vector<Vec> tri{e(s), e(t), e(r)};
        std::vector<int> dt{dp[0], dp[1], degree_of_index(r)};
        if (B(mul(mul(tri[0], tri[1]), tri[2])) != product_formula(tri, dt))
          wprod = describe(l, tri[0]) + " , " + describe(l, tri[1]) + " , " + describe(l, tri[2]);
      }
    }
  rep.add("d on products of monomials", wprod.empty(), wprod);
  return rep;
}

}  // namespace bvkit::schouten
