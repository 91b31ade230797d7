#include "bvkit/cosimplicial.hpp"

#include <string>

#include "bvkit/error.hpp"
#include "bvkit/operad.hpp"

namespace bvkit {

namespace {

Scalar sign(const Field& f, int e) { return e % 2 == 0 ? f.one() : -f.one(); }

std::string at(int n, int i, int j = -1) {
  std::string s = "n=" + std::to_string(n) + " i=" + std::to_string(i);
  if (j >= 0) s += " j=" + std::to_string(j);
  return s;
}

}  // namespace

Mat CosimplicialModule::differential(int n) const {
  if (n < 0) return Mat(field, dims.at(0), 0);
  Mat d(field, dims.at(n + 1), dims.at(n));
  for (std::size_t i = 0; i < coface.at(n).size(); ++i) d = d + sign(field, static_cast<int>(i)) * coface[n][i];
  return d;
}

Mat CosimplicialModule::lambda(int n) const { return sign(field, n) * tau.at(n); }

CosimplicialModule cosimplicial_from_operad(const operad::OperadSlice& op, int top_degree) {
  if (top_degree > op.max_arity()) throw ArityOverflow(top_degree, op.max_arity());
  CosimplicialModule c;
  c.field = op.field();
  for (int n = 0; n <= top_degree; ++n) c.dims.push_back(op.dim(n));
  for (int n = 0; n < top_degree; ++n) {
    std::vector<Mat> fs;
    for (int i = 0; i <= n + 1; ++i) fs.push_back(operad::coface_matrix(op, n, i));
    c.coface.push_back(std::move(fs));
  }
  for (int n = 0; n <= top_degree; ++n) {
    std::vector<Mat> ss;
    for (int i = 0; i < n; ++i) ss.push_back(operad::codegeneracy_matrix(op, n, i));
    c.codegeneracy.push_back(std::move(ss));
  }
  if (op.has_cyclic())
    for (int n = 0; n <= top_degree; ++n) c.tau.push_back(op.tau_matrix(n));
  return c;
}

CheckReport check_cosimplicial(const CosimplicialModule& c) {
  CheckReport rep;
  const int T = c.top_degree();
  const auto& D = c.coface;
  const auto& S = c.codegeneracy;
  std::string w;
  for (int n = 0; n + 2 <= T && w.empty(); ++n)
    for (int j = 1; j <= n + 2 && w.empty(); ++j)
      for (int i = 0; i < j && w.empty(); ++i)
        if (D[n + 1][j] * D[n][i] != D[n + 1][i] * D[n][j - 1]) w = at(n, i, j);
  rep.add("coface identities", w.empty(), w);
  w.clear();
  for (int n = 2; n <= T && w.empty(); ++n)
    for (int j = 0; j <= n - 2 && w.empty(); ++j)
      for (int i = 0; i <= j && w.empty(); ++i)
        if (S[n - 1][j] * S[n][i] != S[n - 1][i] * S[n][j + 1]) w = at(n, i, j);
  rep.add("codegeneracy identities", w.empty(), w);
  w.clear();
  for (int n = 0; n + 1 <= T && w.empty(); ++n)
    for (int j = 0; j <= n && w.empty(); ++j)
      for (int i = 0; i <= n + 1 && w.empty(); ++i) {
        Mat lhs = S[n + 1][j] * D[n][i];
        Mat rhs;
        if (i == j || i == j + 1)
          rhs = Mat::identity(c.field, c.dims[n]);
        else if (i < j)
          rhs = D[n - 1][i] * S[n][j - 1];
        else
          rhs = D[n - 1][i - 1] * S[n][j];
        if (lhs != rhs) w = at(n, i, j);
      }
  rep.add("mixed identities", w.empty(), w);
  if (!c.has_tau()) return rep;
  const auto& t = c.tau;
  w.clear();
  for (int n = 0; n <= T && w.empty(); ++n)
    if (power(t[n], n + 1) != Mat::identity(c.field, c.dims[n])) w = "n=" + std::to_string(n);
  rep.add("tau_n^(n+1) = id", w.empty(), w);
  w.clear();
  for (int n = 1; n <= T && w.empty(); ++n) {
    if (t[n] * D[n - 1][0] != D[n - 1][n]) w = at(n, 0);
    for (int i = 1; i <= n && w.empty(); ++i)
      if (t[n] * D[n - 1][i] != D[n - 1][i - 1] * t[n - 1]) w = at(n, i);
  }
  rep.add("tau-coface identities", w.empty(), w);
  w.clear();
  for (int n = 0; n + 1 <= T && w.empty(); ++n) {
    if (t[n] * S[n + 1][0] != S[n + 1][n] * t[n + 1] * t[n + 1]) w = at(n, 0);
    for (int i = 1; i <= n && w.empty(); ++i)
      if (t[n] * S[n + 1][i] != S[n + 1][i - 1] * t[n + 1]) w = at(n, i);
  }
  rep.add("tau-codegeneracy identities", w.empty(), w);
  return rep;
}

CheckReport check_cosimplicial_morphism(const CosimplicialModule& a, const CosimplicialModule& b,
                                        const std::vector<Mat>& phi) {
  CheckReport rep;
  int T = std::min({a.top_degree(), b.top_degree(), static_cast<int>(phi.size()) - 1});
  std::string w;
  for (int n = 0; n < T && w.empty(); ++n)
    for (int i = 0; i <= n + 1 && w.empty(); ++i)
      if (phi[n + 1] * a.coface[n][i] != b.coface[n][i] * phi[n]) w = at(n, i);
  rep.add("commutes with cofaces", w.empty(), w);
  w.clear();
  for (int n = 1; n <= T && w.empty(); ++n)
    for (int i = 0; i < n && w.empty(); ++i)
      if (phi[n - 1] * a.codegeneracy[n][i] != b.codegeneracy[n][i] * phi[n]) w = at(n, i);
  rep.add("commutes with codegeneracies", w.empty(), w);
  if (a.has_tau() && b.has_tau()) {
    w.clear();
    for (int n = 0; n <= T && w.empty(); ++n)
      if (phi[n] * a.tau[n] != b.tau[n] * phi[n]) w = "n=" + std::to_string(n);
    rep.add("commutes with tau", w.empty(), w);
  }
  return rep;
}

CosimplicialModule transpose_simplicial(const Field& f, const std::vector<std::size_t>& dims,
                                        const std::vector<std::vector<Mat>>& faces,
                                        const std::vector<std::vector<Mat>>& degeneracies,
                                        const std::vector<Mat>& t) {
  CosimplicialModule c;
  c.field = f;
  c.dims = dims;
  for (const auto& level : faces) {
    std::vector<Mat> m;
    for (const auto& x : level) m.push_back(x.transpose());
    c.coface.push_back(std::move(m));
  }
  for (const auto& level : degeneracies) {
    std::vector<Mat> m;
    for (const auto& x : level) m.push_back(x.transpose());
    c.codegeneracy.push_back(std::move(m));
  }
  for (const auto& x : t) c.tau.push_back(x.transpose());
  return c;
}

std::vector<Subquotient> cohomology(const CosimplicialModule& c, int max_degree) {
  if (max_degree >= c.top_degree()) throw ArityOverflow(max_degree + 1, c.top_degree());
  std::vector<Subquotient> out;
  for (int n = 0; n <= max_degree; ++n) out.emplace_back(c.differential(n - 1), c.differential(n));
  return out;
}

Vec LambdaComplex::lift(int n, const Vec& coords) const { return basis.at(n).apply(cohomology.at(n).lift(coords)); }

LambdaComplex lambda_complex(const CosimplicialModule& c, int max_degree) {
  if (!c.has_tau()) throw MissingStructure("λ-complex needs a cyclic operator");
  if (max_degree >= c.top_degree()) throw ArityOverflow(max_degree + 1, c.top_degree());
  LambdaComplex lc;
  for (int n = 0; n <= max_degree + 1; ++n)
    lc.basis.push_back(Mat::from_columns(c.field, c.dims[n],
                                         kernel(c.lambda(n) - Mat::identity(c.field, c.dims[n]))));
  for (int n = 0; n <= max_degree; ++n) {
    Mat image = c.differential(n) * lc.basis[n];
    auto cols = solve_columns(lc.basis[n + 1], image);
    Mat d(c.field, lc.basis[n + 1].cols(), lc.basis[n].cols());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cols[j]) throw CheckFailed("λ-subcomplex is not closed under the differential in degree " + std::to_string(n));
      d.set_column(j, *cols[j]);
    }
    lc.differential.push_back(std::move(d));
  }
  for (int n = 0; n <= max_degree; ++n) {
    Mat din = n == 0 ? Mat(c.field, lc.basis[0].cols(), 0) : lc.differential[n - 1];
    lc.cohomology.emplace_back(din, lc.differential[n]);
  }
  return lc;
}

}  // namespace bvkit
