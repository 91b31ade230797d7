#include "bvkit/hopf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bvkit/error.hpp"
#include "bvkit/tensor.hpp"

namespace bvkit::hopf {

Level parse_level(const std::string& s) {
  if (s == "algebra") return Level::algebra;
  if (s == "coalgebra") return Level::coalgebra;
  if (s == "bialgebra") return Level::bialgebra;
  if (s == "hopf") return Level::hopf;
  throw InvalidInput("unknown level '" + s + "'");
}

std::string level_name(Level l) {
  switch (l) {
    case Level::algebra: return "algebra";
    case Level::coalgebra: return "coalgebra";
    case Level::bialgebra: return "bialgebra";
    case Level::hopf: return "hopf";
  }
  return "?";
}

Vec FinAlgebraData::product(const Vec& a, const Vec& b) const {
  Vec out = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [r, x] : mult.column(i * dim + j)) out[r] += c * x;
    }
  }
  return out;
}

Mat FinAlgebraData::left_mult(const Vec& a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(product(a, basis(j)));
  return Mat::from_columns(field, dim, cols);
}

Mat FinAlgebraData::right_mult(const Vec& a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(product(basis(j), a));
  return Mat::from_columns(field, dim, cols);
}

const Mat& FinAlgebraData::delta() const {
  if (!comult) throw MissingStructure("comultiplication required");
  return *comult;
}

const Vec& FinAlgebraData::eps() const {
  if (!counit) throw MissingStructure("counit required");
  return *counit;
}

const Mat& FinAlgebraData::S() const {
  if (!antipode) throw MissingStructure("antipode required");
  return *antipode;
}

const Vec& FinAlgebraData::augmentation_form() const {
  if (augmentation) return *augmentation;
  if (counit) return *counit;
  throw MissingStructure("augmentation required");
}

std::string FinAlgebraData::describe(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size() && i < dim; ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!v[i].is_one()) os << v[i] << "*";
    os << basis_names[i];
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::string tuple_name(const FinAlgebraData& a, std::size_t index, std::size_t n) {
  std::string s = "(";
  auto t = index_tuple(index, a.dim, n);
  for (std::size_t k = 0; k < n; ++k) s += (k ? "," : "") + a.basis_names[t[k]];
  return s + ")";
}

Mat row_mat(const Field& f, const Vec& v) { return Mat::from_rows(f, {v}, v.size()); }
Mat col_mat(const Field& f, const Vec& v) { return Mat::from_columns(f, v.size(), {v}); }

void compare(CheckReport& rep, const std::string& name, const Mat& lhs, const Mat& rhs,
             const FinAlgebraData& a, std::size_t arity) {
  auto diff = first_difference(lhs, rhs);
  rep.add(name, !diff, diff ? "at " + tuple_name(a, diff->first, arity) : "");
}

// (p⊗q)(r⊗s) = pr⊗qs
Vec tensor_square_product(const FinAlgebraData& a, const Vec& u, const Vec& v) {
  std::size_t d = a.dim;
  Vec out = zero_vec(a.field, d * d);
  for (std::size_t i = 0; i < d * d; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < d * d; ++j) {
      if (v[j].is_zero()) continue;
      Scalar c = u[i] * v[j];
      const auto& left = a.mult.column((i / d) * d + j / d);
      const auto& right = a.mult.column((i % d) * d + j % d);
      for (const auto& [l, x] : left)
        for (const auto& [r, y] : right) out[l * d + r] += c * x * y;
    }
  }
  return out;
}

void check_algebra(CheckReport& rep, const FinAlgebraData& a) {
  std::size_t d = a.dim;
  const Field& f = a.field;
  Mat id = Mat::identity(f, d);
  compare(rep, "associativity", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult), a, 3);
  Mat u = col_mat(f, a.unit);
  compare(rep, "left unit", a.mult * kron(u, id), id, a, 1);
  compare(rep, "right unit", a.mult * kron(id, u), id, a, 1);
}

void check_coalgebra(CheckReport& rep, const FinAlgebraData& a) {
  std::size_t d = a.dim;
  const Field& f = a.field;
  Mat id = Mat::identity(f, d);
  const Mat& D = a.delta();
  auto diff = first_difference(kron(D, id) * D, kron(id, D) * D);
  rep.add("coassociativity", !diff, diff ? "at " + a.basis_names[diff->first] : "");
  Mat e = row_mat(f, a.eps());
  diff = first_difference(kron(e, id) * D, id);
  rep.add("left counit", !diff, diff ? "at " + a.basis_names[diff->first] : "");
  diff = first_difference(kron(id, e) * D, id);
  rep.add("right counit", !diff, diff ? "at " + a.basis_names[diff->first] : "");
}

void check_bialgebra(CheckReport& rep, const FinAlgebraData& a) {
  std::size_t d = a.dim;
  std::string w;
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j) {
      Vec lhs = a.coproduct(a.basis_product(i, j));
      Vec rhs = tensor_square_product(a, a.delta().column_dense(i), a.delta().column_dense(j));
      if (lhs != rhs) w = "at " + tuple_name(a, i * d + j, 2);
    }
  rep.add("comultiplication is multiplicative", w.empty(), w);
  Vec one_one = zero_vec(a.field, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) one_one[i * d + j] = a.unit[i] * a.unit[j];
  rep.add("comultiplication is unital", a.coproduct(a.unit) == one_one, "Delta(1) != 1⊗1");
  w.clear();
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      if (a.counit_of(a.basis_product(i, j)) != a.eps()[i] * a.eps()[j]) w = "at " + tuple_name(a, i * d + j, 2);
  rep.add("counit is multiplicative", w.empty(), w);
  rep.add("counit is unital", a.counit_of(a.unit).is_one(), "eps(1) != 1");
}

void check_antipode(CheckReport& rep, const FinAlgebraData& a) {
  Mat ee = eta_eps(a);
  Mat id = Mat::identity(a.field, a.dim);
  auto diff = first_difference(convolution(a.S(), id, a), ee);
  rep.add("S * id = eta eps", !diff, diff ? "at " + a.basis_names[diff->first] : "");
  diff = first_difference(convolution(id, a.S(), a), ee);
  rep.add("id * S = eta eps", !diff, diff ? "at " + a.basis_names[diff->first] : "");
}

void check_shapes(const FinAlgebraData& a, Level level) {
  std::size_t d = a.dim;
  if (a.mult.rows() != d || a.mult.cols() != d * d || a.unit.size() != d)
    throw InvalidInput("algebra tensors have wrong shape");
  if (a.basis_names.size() != d) throw InvalidInput("basis name count differs from dimension");
  if (level != Level::algebra) {
    if (!a.comult || !a.counit) throw MissingStructure("coalgebra structure required");
    if (a.comult->rows() != d * d || a.comult->cols() != d || a.counit->size() != d)
      throw InvalidInput("coalgebra tensors have wrong shape");
  }
  if (level == Level::hopf) {
    if (!a.antipode) throw MissingStructure("antipode required");
    if (a.antipode->rows() != d || a.antipode->cols() != d) throw InvalidInput("antipode has wrong shape");
  }
}

}  // namespace

CheckReport check_axioms(const FinAlgebraData& a, Level level) {
  check_shapes(a, level);
  CheckReport rep;
  if (level != Level::coalgebra) check_algebra(rep, a);
  if (level != Level::algebra) check_coalgebra(rep, a);
  if (level == Level::bialgebra || level == Level::hopf) check_bialgebra(rep, a);
  if (level == Level::hopf) check_antipode(rep, a);
  return rep;
}

CheckReport certify(FinAlgebraData& a, Level level) {
  CheckReport rep = check_axioms(a, level);
  if (rep.all_pass()) {
    a.flags.algebra = level != Level::coalgebra || a.flags.algebra;
    a.flags.coalgebra = level != Level::algebra;
    a.flags.bialgebra = level == Level::bialgebra || level == Level::hopf;
    a.flags.hopf = level == Level::hopf;
    if (level == Level::coalgebra) a.flags.algebra = check_axioms(a, Level::algebra).all_pass();
  }
  return rep;
}

FinAlgebraData dualize(const FinAlgebraData& h) {
  if (!h.comult || !h.counit) throw MissingStructure("dualize needs a coalgebra structure");
  FinAlgebraData r;
  r.field = h.field;
  r.dim = h.dim;
  for (const auto& n : h.basis_names) r.basis_names.push_back(n + "*");
  r.mult = h.comult->transpose();
  r.unit = *h.counit;
  r.comult = h.mult.transpose();
  r.counit = h.unit;
  if (h.antipode) r.antipode = h.antipode->transpose();
  r.flags = h.flags;
  return r;
}

Mat eta_eps(const FinAlgebraData& h) { return col_mat(h.field, h.unit) * row_mat(h.field, h.eps()); }

Mat convolution(const Mat& f, const Mat& g, const FinAlgebraData& h) {
  return h.mult * kron(f, g) * h.delta();
}

bool is_group_like(const FinAlgebraData& h, const Vec& v) {
  if (!h.counit_of(v).is_one()) return false;
  std::size_t d = h.dim;
  Vec vv = zero_vec(h.field, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) vv[i * d + j] = v[i] * v[j];
  return h.coproduct(v) == vv;
}

bool is_character(const FinAlgebraData& h, const Vec& f) {
  if (!dot(f, h.unit).is_one()) return false;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      if (dot(f, h.basis_product(i, j)) != f[i] * f[j]) return false;
  return true;
}

namespace {

template <class Pred>
std::vector<Vec> search(const FinAlgebraData& h, const std::vector<Vec>* candidates, std::size_t budget,
                        Pred pred) {
  std::vector<Vec> out;
  if (candidates) {
    for (const auto& c : *candidates)
      if (pred(c)) out.push_back(c);
    return out;
  }
  if (h.field.is_rational()) throw InvalidInput("search over Q needs a candidate list");
  std::size_t p = static_cast<std::size_t>(h.field.characteristic());
  std::size_t total = 1;
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (total > budget / p) throw BudgetExceeded("exhaustive search exceeds budget");
    total *= p;
  }
  std::vector<std::size_t> t(h.dim, 0);
  do {
    Vec v;
    for (auto x : t) v.push_back(h.field.from_int(static_cast<std::int64_t>(x)));
    if (pred(v)) out.push_back(v);
  } while (next_tuple(t, p));
  return out;
}

}  // namespace

std::vector<Vec> find_group_likes(const FinAlgebraData& h, const std::vector<Vec>* candidates,
                                  std::size_t budget) {
  return search(h, candidates, budget, [&](const Vec& v) { return is_group_like(h, v); });
}

std::vector<Vec> find_characters(const FinAlgebraData& h, const std::vector<Vec>* candidates,
                                 std::size_t budget) {
  return search(h, candidates, budget, [&](const Vec& v) { return is_character(h, v); });
}

std::vector<Vec> integrals(const FinAlgebraData& h, Side side) {
  const Vec& eps = h.augmentation_form();
  std::size_t d = h.dim;
  Mat stacked(h.field, 0, d);
  Mat id = Mat::identity(h.field, d);
  for (std::size_t i = 0; i < d; ++i) {
    Mat m = side == Side::left ? h.left_mult(h.basis(i)) : h.right_mult(h.basis(i));
    stacked = vstack(stacked, m - eps[i] * id);
  }
  return kernel(stacked);
}

Vec distinguished_grouplike(const FinAlgebraData& h) {
  auto ints = integrals(h, Side::left);
  if (ints.empty()) throw CheckFailed("no nonzero left integral");
  const Vec& t = ints.front();
  std::size_t k = first_nonzero(t);
  Vec alpha;
  for (std::size_t i = 0; i < h.dim; ++i) {
    Vec th = h.product(t, h.basis(i));
    Scalar a = th[k] / t[k];
    if (th != scale(a, t)) throw CheckFailed("left integral space is not stable under right multiplication");
    alpha.push_back(a);
  }
  return alpha;
}

bool is_unimodular(const FinAlgebraData& h) { return distinguished_grouplike(h) == h.augmentation_form(); }

namespace {

Mat gram(const FinAlgebraData& a, const Vec& phi) {
  Mat g(a.field, a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) g.set(i, j, dot(phi, a.basis_product(i, j)));
  return g;
}

}  // namespace

bool is_nondegenerate_form(const FinAlgebraData& a, const Vec& phi) { return rank(gram(a, phi)) == a.dim; }

FrobeniusData frobenius_from_form(const FinAlgebraData& a, const Vec& phi) {
  FrobeniusData fr;
  Mat g = gram(a, phi);
  if (rank(g) != a.dim) throw CheckFailed("Frobenius form is degenerate");
  fr.phi = phi;
  fr.theta = g.transpose();
  fr.symmetric = g == g.transpose();
  fr.nakayama = nakayama(fr, a);
  return fr;
}

FrobeniusData frobenius_from_integral(const FinAlgebraData& h, const Vec& lambda, Side side) {
  FinAlgebraData dual = dualize(h);
  auto ints = integrals(dual, side);
  Mat span = Mat::from_columns(h.field, h.dim, ints);
  if (bvkit::is_zero(lambda) || ints.empty() || !solve(span, lambda))
    throw CheckFailed("form is not a nonzero integral of the dual");
  try {
    return frobenius_from_form(h, lambda);
  } catch (const CheckFailed&) {
    throw CheckFailed("integral gives a degenerate form, contradicting the Frobenius property of Hopf algebras");
  }
}

Mat nakayama(const FrobeniusData& frob, const FinAlgebraData& a) {
  Mat g = frob.theta.transpose();
  auto gt_inv = inverse(g.transpose());
  if (!gt_inv) throw CheckFailed("Frobenius form is degenerate");
  (void)a;
  return *gt_inv * g;
}

CheckReport check_frobenius(const FrobeniusData& frob, const FinAlgebraData& a) {
  CheckReport rep;
  rep.add("theta invertible", rank(frob.theta) == a.dim);
  std::string w;
  for (std::size_t i = 0; i < a.dim && w.empty(); ++i)
    for (std::size_t j = 0; j < a.dim && w.empty(); ++j)
      if (frob.theta.at(j, i) != dot(frob.phi, a.basis_product(i, j))) w = a.basis_names[i] + "," + a.basis_names[j];
  rep.add("theta(a)(b) = phi(ab)", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < a.dim && w.empty(); ++i)
    for (std::size_t j = 0; j < a.dim && w.empty(); ++j) {
      Vec sb = frob.nakayama.column_dense(j);
      if (dot(frob.phi, a.basis_product(i, j)) != dot(frob.phi, a.product(sb, a.basis(i))))
        w = a.basis_names[i] + "," + a.basis_names[j];
    }
  rep.add("phi(ab) = phi(sigma_N(b) a)", w.empty(), w);
  rep.add("Nakayama is an algebra automorphism",
          is_algebra_morphism(a, a, frob.nakayama) && rank(frob.nakayama) == a.dim);
  rep.add("Nakayama is identity iff symmetric",
          (frob.nakayama == Mat::identity(a.field, a.dim)) == frob.symmetric);
  return rep;
}

Vec right_hit(const FinAlgebraData& h, const Vec& b, const Vec& alpha) {
  std::size_t d = h.dim;
  Vec db = h.coproduct(b);
  Vec out = zero_vec(h.field, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      if (!db[p * d + q].is_zero()) out[q] += db[p * d + q] * alpha[p];
  return out;
}

Mat twisted_antipode(const FinAlgebraData& h, const Vec& delta) {
  Mat eta_delta = col_mat(h.field, h.unit) * row_mat(h.field, delta);
  return convolution(eta_delta, h.S(), h);
}

CheckReport check_modular_pair(const FinAlgebraData& h, const ModularPair& mp) {
  CheckReport rep;
  rep.add("delta is a character", is_character(h, mp.delta), "delta");
  rep.add("sigma is group-like", is_group_like(h, mp.sigma), h.describe(mp.sigma));
  rep.add("delta(sigma) = 1", dot(mp.delta, mp.sigma).is_one(), dot(mp.delta, mp.sigma).to_string());
  return rep;
}

Mat tau_one(const FinAlgebraData& h, const ModularPair& mp) {
  std::size_t d = h.dim;
  if (mp.convention == Convention::connes_moscovici) {
    Mat st = twisted_antipode(h, mp.delta);
    return h.right_mult(mp.sigma) * st;
  }
  // t_1(k) = sigma S(k_(1)) delta(k_(2))
  Mat out(h.field, d, d);
  for (std::size_t c = 0; c < d; ++c) {
    Vec v = zero_vec(h.field, d);
    for (const auto& [idx, coef] : h.delta().column(c)) {
      std::size_t p = idx / d, q = idx % d;
      if (mp.delta[q].is_zero()) continue;
      axpy(coef * mp.delta[q], h.product(mp.sigma, h.S().column_dense(p)), v);
    }
    out.set_column(c, v);
  }
  return out;
}

CheckReport check_modular_pair_involution(const FinAlgebraData& h, const ModularPair& mp) {
  CheckReport rep = check_modular_pair(h, mp);
  Mat t = tau_one(h, mp);
  Mat t2 = t * t;
  auto diff = first_difference(t2, Mat::identity(h.field, h.dim));
  std::string name = mp.convention == Convention::connes_moscovici ? "tau_1^2 = id" : "t_1^2 = id";
  rep.add(name, !diff, diff ? "at " + h.basis_names[diff->first] : "");
  return rep;
}

std::vector<Vec> trace_forms(const FinAlgebraData& a) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j) rows.push_back(sub(a.basis_product(i, j), a.basis_product(j, i)));
  if (rows.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < a.dim; ++i) all.push_back(a.basis(i));
    return all;
  }
  return kernel(Mat::from_rows(a.field, rows, a.dim));
}

bool is_invertible_element(const FinAlgebraData& a, const Vec& u) { return rank(a.left_mult(u)) == a.dim; }

std::optional<Vec> invert_element(const FinAlgebraData& a, const Vec& u) {
  auto x = solve(a.left_mult(u), a.unit);
  if (!x) return std::nullopt;
  if (a.product(*x, u) != a.unit) return std::nullopt;
  return x;
}

bool is_algebra_morphism(const FinAlgebraData& a, const FinAlgebraData& b, const Mat& f) {
  if (f.apply(a.unit) != b.unit) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (f.apply(a.basis_product(i, j)) != b.product(f.column_dense(i), f.column_dense(j))) return false;
  return true;
}

namespace {

// Searches the span of `basis` for an element satisfying pred: basis vectors,
// then exhaustively for small prime fields, then random combinations.
template <class Pred>
std::optional<Vec> span_search(const Field& f, std::size_t n, const std::vector<Vec>& basis, Pred pred,
                               std::mt19937_64& rng, bool& exhaustive) {
  exhaustive = false;
  for (const auto& b : basis)
    if (pred(b)) return b;
  if (basis.empty()) {
    exhaustive = true;
    return std::nullopt;
  }
  if (!f.is_rational()) {
    std::size_t p = static_cast<std::size_t>(f.characteristic());
    std::size_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < basis.size() && small; ++i) {
      if (total > (1u << 16) / p) small = false;
      total *= p;
    }
    if (small) {
      std::vector<std::size_t> t(basis.size(), 0);
      while (next_tuple(t, p)) {
        Vec v = zero_vec(f, n);
        for (std::size_t k = 0; k < t.size(); ++k) axpy(f.from_int(static_cast<std::int64_t>(t[k])), basis[k], v);
        if (pred(v)) return v;
      }
      exhaustive = true;
      return std::nullopt;
    }
  }
  for (int trial = 0; trial < 48; ++trial) {
    Vec v = zero_vec(f, n);
    for (const auto& b : basis) axpy(random_scalar(f, rng, 1000), b, v);
    if (pred(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

SymmetryAnalysis analyze_symmetry(const FinAlgebraData& h, std::uint64_t seed) {
  SymmetryAnalysis res;
  std::mt19937_64 rng(seed);
  const Field& f = h.field;
  std::size_t d = h.dim;

  auto traces = trace_forms(h);
  bool exhaustive = false;
  res.symmetric_form =
      span_search(f, d, traces, [&](const Vec& phi) { return is_nondegenerate_form(h, phi); }, rng, exhaustive);
  res.symmetric = res.symmetric_form.has_value();
  res.exhaustive = res.symmetric || exhaustive;
  if (!res.symmetric && !res.exhaustive) {
    // common radical of all trace forms certifies that none is nondegenerate
    std::vector<Vec> rows;
    for (const auto& phi : traces)
      for (std::size_t j = 0; j < d; ++j) {
        Vec row;
        for (std::size_t z = 0; z < d; ++z) row.push_back(dot(phi, h.basis_product(z, j)));
        rows.push_back(row);
      }
    res.exhaustive = !kernel(Mat::from_rows(f, rows, d)).empty();
  }

  if (h.comult && h.counit && h.antipode) {
    res.unimodular = is_unimodular(h);
    Mat s2 = h.S() * h.S();
    Mat stacked(f, 0, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec s2h = s2.column_dense(i);
      stacked = vstack(stacked, h.left_mult(s2h) - h.right_mult(h.basis(i)));
    }
    // u with S^2(h) u = u h: (L_{S^2 h} - R_h) u = 0
    auto sols = kernel(stacked);
    bool ex = false;
    res.inner_witness = span_search(f, d, sols, [&](const Vec& u) { return is_invertible_element(h, u); }, rng, ex);
    res.s2_inner = res.inner_witness.has_value();
    if (res.unimodular && res.s2_inner) {
      auto lambdas = integrals(dualize(h), Side::right);
      if (!lambdas.empty()) {
        const Vec& lambda = lambdas.front();
        Vec beta;
        for (std::size_t z = 0; z < d; ++z) beta.push_back(dot(lambda, h.product(*res.inner_witness, h.basis(z))));
        res.beta_form = beta;
        Mat g(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) g.set(i, j, dot(beta, h.basis_product(i, j)));
        res.beta_symmetric_nondegenerate = g == g.transpose() && rank(g) == d;
      }
    }
  }
  return res;
}

}  // namespace bvkit::hopf
