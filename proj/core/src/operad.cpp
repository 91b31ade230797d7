#include "bvkit/operad.hpp"

#include <random>
#include <sstream>

#include "bvkit/error.hpp"
#include "bvkit/tensor.hpp"

namespace bvkit::operad {

OperadSlice::OperadSlice(const Field& f, std::size_t top, std::size_t leaf, int max_arity, std::string name)
    : field_(f), top_(top), leaf_(leaf), max_arity_(max_arity), name_(std::move(name)) {
  if (max_arity < 2) throw InvalidInput("operad slices need arity at least 2");
}

std::size_t OperadSlice::dim(int n) const {
  check_arity(n);
  return top_ * ipow(leaf_, static_cast<std::size_t>(n));
}

void OperadSlice::check_arity(int n) const {
  if (n < 0) throw InvalidInput("negative arity");
  if (n > max_arity_) throw ArityOverflow(n, max_arity_);
}

namespace {

void check_slot(int m, int i) {
  if (m < 1 || i < 1 || i > m) throw InvalidInput("composition slot out of range");
}

}  // namespace

Vec OperadSlice::compose(int m, const Vec& f, int i, int n, const Vec& g) const {
  check_slot(m, i);
  check_arity(m + n - 1);
  if (f.size() != dim(m) || g.size() != dim(n)) throw DimensionMismatch("compose: operand size");
  Mat u = substitution(n, g);
  const std::size_t L = leaf_;
  const std::size_t Lm = ipow(L, m), Lsuf = ipow(L, m - i), Lpre = ipow(L, m - i + 1);
  const std::size_t Lout = ipow(L, m + n - 1), Lmid = ipow(L, m - i + n);
  Vec out = zero_vec(field_, dim(m + n - 1));
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (f[idx].is_zero()) continue;
    std::size_t t = idx / Lm, rest = idx % Lm;
    std::size_t pre = rest / Lpre, z = (rest / Lsuf) % L, suf = rest % Lsuf;
    std::size_t base = t * Lout + pre * Lmid + suf;
    for (const auto& [b, x] : u.column(z)) out[base + b * Lsuf] += f[idx] * x;
  }
  return out;
}

Mat OperadSlice::compose_left_matrix(int m, int i, int n, const Vec& g) const {
  check_slot(m, i);
  check_arity(m + n - 1);
  if (g.size() != dim(n)) throw DimensionMismatch("compose: operand size");
  Mat u = substitution(n, g);
  const std::size_t L = leaf_;
  const std::size_t Lm = ipow(L, m), Lsuf = ipow(L, m - i), Lpre = ipow(L, m - i + 1);
  const std::size_t Lout = ipow(L, m + n - 1), Lmid = ipow(L, m - i + n);
  Mat out(field_, dim(m + n - 1), dim(m));
  for (std::size_t idx = 0; idx < dim(m); ++idx) {
    std::size_t t = idx / Lm, rest = idx % Lm;
    std::size_t pre = rest / Lpre, z = (rest / Lsuf) % L, suf = rest % Lsuf;
    std::size_t base = t * Lout + pre * Lmid + suf;
    // rows base + b*Lsuf are increasing in b
    for (const auto& [b, x] : u.column(z)) out.set(base + b * Lsuf, idx, x);
  }
  return out;
}

Mat OperadSlice::compose_right_matrix(int m, const Vec& f, int i, int n) const {
  check_slot(m, i);
  check_arity(m + n - 1);
  std::vector<Vec> cols;
  cols.reserve(dim(n));
  for (std::size_t k = 0; k < dim(n); ++k) cols.push_back(compose(m, f, i, n, basis(n, k)));
  return Mat::from_columns(field_, dim(m + n - 1), cols);
}

Vec OperadSlice::tau(int, const Vec&) const { throw MissingStructure("operad " + name_ + " has no cyclic structure"); }

Mat OperadSlice::tau_matrix(int n) const {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < dim(n); ++k) cols.push_back(tau(n, basis(n, k)));
  return Mat::from_columns(field_, dim(n), cols);
}

namespace {

Scalar sign(const Field& f, long e) { return (e % 2 == 0) ? f.one() : -f.one(); }

}  // namespace

Vec coface(const OperadSlice& op, int n, int i, const Vec& f) {
  if (i < 0 || i > n + 1) throw InvalidInput("coface index out of range");
  if (i == 0) return op.compose(2, op.mult(), 2, n, f);
  if (i == n + 1) return op.compose(2, op.mult(), 1, n, f);
  return op.compose(n, f, i, 2, op.mult());
}

Vec codegeneracy(const OperadSlice& op, int n, int i, const Vec& f) {
  if (i < 0 || i >= n) throw InvalidInput("codegeneracy index out of range");
  return op.compose(n, f, i + 1, 0, op.unit0());
}

Mat coface_matrix(const OperadSlice& op, int n, int i) {
  if (i < 0 || i > n + 1) throw InvalidInput("coface index out of range");
  if (i == 0) return op.compose_right_matrix(2, op.mult(), 2, n);
  if (i == n + 1) return op.compose_right_matrix(2, op.mult(), 1, n);
  return op.compose_left_matrix(n, i, 2, op.mult());
}

Mat codegeneracy_matrix(const OperadSlice& op, int n, int i) {
  if (i < 0 || i >= n) throw InvalidInput("codegeneracy index out of range");
  return op.compose_left_matrix(n, i + 1, 0, op.unit0());
}

Mat differential(const OperadSlice& op, int n) {
  Mat d(op.field(), op.dim(n + 1), op.dim(n));
  for (int i = 0; i <= n + 1; ++i) d = d + sign(op.field(), i) * coface_matrix(op, n, i);
  return d;
}

Vec apply_differential(const OperadSlice& op, int n, const Vec& f) {
  Vec out = zero_vec(op.field(), op.dim(n + 1));
  for (int i = 0; i <= n + 1; ++i) axpy(sign(op.field(), i), coface(op, n, i, f), out);
  return out;
}

Vec cup(const OperadSlice& op, int m, const Vec& f, int n, const Vec& g) {
  Vec muf = op.compose(2, op.mult(), 1, m, f);
  return op.compose(m + 1, muf, m + 1, n, g);
}

Vec circle_bar(const OperadSlice& op, int m, const Vec& f, int n, const Vec& g) {
  op.check_arity(m + n - 1 < 0 ? 0 : m + n - 1);
  Vec out = zero_vec(op.field(), op.dim(m + n - 1));
  for (int i = 1; i <= m; ++i) axpy(sign(op.field(), static_cast<long>(n - 1) * (i - 1)), op.compose(m, f, i, n, g), out);
  return scale(sign(op.field(), std::labs(static_cast<long>(m - 1) * (n - 1))), out);
}

Vec bracket(const OperadSlice& op, int m, const Vec& f, int n, const Vec& g) {
  if (m + n - 1 < 0) throw InvalidInput("bracket of two arity-zero elements");
  Vec a = circle_bar(op, m, f, n, g);
  Vec b = circle_bar(op, n, g, m, f);
  axpy(-sign(op.field(), std::labs(static_cast<long>(m - 1) * (n - 1))), b, a);
  return a;
}

Vec sq(const OperadSlice& op, int n, const Vec& f) {
  if (n % 2 != 0 && op.field().characteristic() != 2)
    throw InvalidInput("Sq is defined only in even arity or characteristic 2");
  return circle_bar(op, n, f, n, f);
}

Mat lambda_matrix(const OperadSlice& op, int n) { return sign(op.field(), n) * op.tau_matrix(n); }

Mat extra_codegeneracy(const OperadSlice& op, int n) {
  if (n < 1) throw InvalidInput("extra codegeneracy needs arity at least 1");
  return codegeneracy_matrix(op, n, n - 1) * op.tau_matrix(n);
}

Mat connes_B(const OperadSlice& op, int n) {
  if (!op.has_cyclic()) throw MissingStructure("Connes B needs a cyclic structure");
  if (n == 0) return Mat(op.field(), 0, op.dim(0));
  Mat lam = lambda_matrix(op, n);
  Mat lam_prev = lambda_matrix(op, n - 1);
  Mat norm(op.field(), op.dim(n - 1), op.dim(n - 1));
  Mat pw = Mat::identity(op.field(), op.dim(n - 1));
  for (int i = 0; i < n; ++i) {
    norm = norm + pw;
    pw = lam_prev * pw;
  }
  return norm * extra_codegeneracy(op, n) * (Mat::identity(op.field(), op.dim(n)) - lam);
}

namespace {

struct Recorder {
  CheckReport& rep;
  std::string name;
  std::string witness;
  bool ok = true;
  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
  ~Recorder() { rep.add(name, ok, witness); }
};

std::string where(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

// Basis vectors of O(n) when small, otherwise random dense vectors.
std::vector<Vec> probes(const OperadSlice& op, int n, std::size_t limit, int samples, std::mt19937_64& rng) {
  std::vector<Vec> out;
  if (op.dim(n) <= limit) {
    for (std::size_t k = 0; k < op.dim(n); ++k) out.push_back(op.basis(n, k));
  } else {
    for (int s = 0; s < samples; ++s) out.push_back(random_vec(op.field(), op.dim(n), rng));
  }
  return out;
}

// Pairs (g, h) of O(n) x O(k): all basis pairs when small, else random dense pairs.
std::vector<std::pair<Vec, Vec>> probe_pairs(const OperadSlice& op, int n, int k, std::size_t limit, int samples,
                                             std::mt19937_64& rng) {
  std::vector<std::pair<Vec, Vec>> out;
  if (op.dim(n) * op.dim(k) <= limit) {
    for (std::size_t a = 0; a < op.dim(n); ++a)
      for (std::size_t b = 0; b < op.dim(k); ++b) out.emplace_back(op.basis(n, a), op.basis(k, b));
  } else {
    for (int s = 0; s < samples; ++s)
      out.emplace_back(random_vec(op.field(), op.dim(n), rng), random_vec(op.field(), op.dim(k), rng));
  }
  return out;
}

std::string diff_col(const Mat& a, const Mat& b) {
  auto d = first_difference(a, b);
  return d ? " f#" + std::to_string(d->first) : "";
}

}  // namespace

CheckReport check_operad_axioms(const OperadSlice& op, const AxiomOptions& opt) {
  CheckReport rep;
  const int N = opt.max_arity < 0 ? op.max_arity() : std::min(opt.max_arity, op.max_arity());
  const Field& F = op.field();
  std::mt19937_64 rng(opt.seed);

  rep.add("mu o1 mu = mu o2 mu", op.compose(2, op.mult(), 1, 2, op.mult()) == op.compose(2, op.mult(), 2, 2, op.mult()));
  rep.add("mu o1 e = id", op.compose(2, op.mult(), 1, 0, op.unit0()) == op.identity());
  rep.add("mu o2 e = id", op.compose(2, op.mult(), 2, 0, op.unit0()) == op.identity());

  {
    Recorder r{rep, "unit laws"};
    for (int n = 0; n <= N && r.ok; ++n) {
      Mat idn = Mat::identity(F, op.dim(n));
      if (op.compose_right_matrix(1, op.identity(), 1, n) != idn) r.fail(where({{"id o1 f, n", n}}));
      for (int i = 1; i <= n; ++i)
        if (op.compose_left_matrix(n, i, 1, op.identity()) != idn) r.fail(where({{"f oi id, n", n}, {"i", i}}));
    }
  }
  {
    Recorder r{rep, "sequential associativity"};
    for (int m = 1; m <= N && r.ok; ++m)
      for (int n = 1; n <= N && r.ok; ++n)
        for (int k = 0; k <= N && r.ok; ++k) {
          if (m + n - 1 > N || n + k - 1 > N || m + n + k - 2 > N) continue;
          for (const auto& [g, h] : probe_pairs(op, n, k, opt.exhaustive_limit, opt.samples, rng)) {
            for (int i = 1; i <= m && r.ok; ++i)
              for (int j = 1; j <= n && r.ok; ++j) {
                Mat lhs = op.compose_left_matrix(m + n - 1, i + j - 1, k, h) * op.compose_left_matrix(m, i, n, g);
                Mat rhs = op.compose_left_matrix(m, i, n + k - 1, op.compose(n, g, j, k, h));
                if (lhs != rhs) r.fail(where({{"m", m}, {"n", n}, {"k", k}, {"i", i}, {"j", j}}) + diff_col(lhs, rhs));
              }
            if (!r.ok) break;
          }
        }
  }
  {
    Recorder r{rep, "parallel associativity"};
    for (int m = 2; m <= N && r.ok; ++m)
      for (int n = 0; n <= N && r.ok; ++n)
        for (int k = 0; k <= N && r.ok; ++k) {
          if (m + n - 1 > N || m + k - 1 > N || m + n + k - 2 > N) continue;
          for (const auto& [g, h] : probe_pairs(op, n, k, opt.exhaustive_limit, opt.samples, rng)) {
            for (int i = 1; i <= m && r.ok; ++i)
              for (int j = i + 1; j <= m && r.ok; ++j) {
                Mat lhs = op.compose_left_matrix(m + k - 1, i, n, g) * op.compose_left_matrix(m, j, k, h);
                Mat rhs = op.compose_left_matrix(m + n - 1, j + n - 1, k, h) * op.compose_left_matrix(m, i, n, g);
                if (lhs != rhs) r.fail(where({{"m", m}, {"n", n}, {"k", k}, {"i", i}, {"j", j}}) + diff_col(lhs, rhs));
              }
            if (!r.ok) break;
          }
        }
  }
  if (op.has_cyclic()) {
    std::vector<Mat> tau;
    for (int n = 0; n <= N; ++n) tau.push_back(op.tau_matrix(n));
    {
      Recorder r{rep, "tau_n^(n+1) = id"};
      for (int n = 0; n <= N && r.ok; ++n)
        if (power(tau[n], n + 1) != Mat::identity(F, op.dim(n))) r.fail(where({{"n", n}}));
    }
    rep.add("tau_2 mu = mu", tau[2].apply(op.mult()) == op.mult());
    {
      Recorder r{rep, "tau(f o1 g) = tau g o_n tau f"};
      for (int m = 1; m <= N && r.ok; ++m)
        for (int n = 1; m + n - 1 <= N && r.ok; ++n)
          for (const auto& g : probes(op, n, opt.exhaustive_limit, opt.samples, rng)) {
            Mat lhs = tau[m + n - 1] * op.compose_left_matrix(m, 1, n, g);
            Mat rhs = op.compose_right_matrix(n, tau[n].apply(g), n, m) * tau[m];
            if (lhs != rhs) {
              r.fail(where({{"m", m}, {"n", n}}) + diff_col(lhs, rhs));
              break;
            }
          }
    }
    {
      Recorder r{rep, "tau(f oi g) = tau f o(i-1) g"};
      for (int m = 2; m <= N && r.ok; ++m)
        for (int n = 0; m + n - 1 <= N && r.ok; ++n)
          for (const auto& g : probes(op, n, opt.exhaustive_limit, opt.samples, rng)) {
            for (int i = 2; i <= m && r.ok; ++i) {
              Mat lhs = tau[m + n - 1] * op.compose_left_matrix(m, i, n, g);
              Mat rhs = op.compose_left_matrix(m, i - 1, n, g) * tau[m];
              if (lhs != rhs) r.fail(where({{"m", m}, {"n", n}, {"i", i}}) + diff_col(lhs, rhs));
            }
            if (!r.ok) break;
          }
    }
  }
  return rep;
}

CheckReport check_operad_morphism(const OperadSlice& p, const OperadSlice& q, const std::vector<Mat>& phi,
                                  const AxiomOptions& opt) {
  CheckReport rep;
  const int N = std::min({opt.max_arity < 0 ? p.max_arity() : opt.max_arity, p.max_arity(), q.max_arity(),
                          static_cast<int>(phi.size()) - 1});
  std::mt19937_64 rng(opt.seed);
  rep.add("preserves identity", phi[1].apply(p.identity()) == q.identity());
  rep.add("preserves multiplication", phi[2].apply(p.mult()) == q.mult());
  rep.add("preserves unit", phi[0].apply(p.unit0()) == q.unit0());
  {
    Recorder r{rep, "commutes with partial compositions"};
    for (int m = 1; m <= N && r.ok; ++m)
      for (int n = 0; m + n - 1 <= N && r.ok; ++n)
        for (const auto& g : probes(p, n, opt.exhaustive_limit, opt.samples, rng)) {
          for (int i = 1; i <= m && r.ok; ++i) {
            Mat lhs = phi[m + n - 1] * p.compose_left_matrix(m, i, n, g);
            Mat rhs = q.compose_left_matrix(m, i, n, phi[n].apply(g)) * phi[m];
            if (lhs != rhs) r.fail(where({{"m", m}, {"n", n}, {"i", i}}) + diff_col(lhs, rhs));
          }
          if (!r.ok) break;
        }
  }
  if (p.has_cyclic() && q.has_cyclic()) {
    Recorder r{rep, "commutes with cyclic operators"};
    for (int n = 0; n <= N && r.ok; ++n) {
      Mat lhs = phi[n] * p.tau_matrix(n), rhs = q.tau_matrix(n) * phi[n];
      if (lhs != rhs) r.fail(where({{"n", n}}) + diff_col(lhs, rhs));
    }
  }
  return rep;
}

}  // namespace bvkit::operad
