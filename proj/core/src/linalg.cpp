#include "bvkit/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bvkit/error.hpp"

namespace bvkit {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(const Scalar& c, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot");
  if (a.empty()) return Scalar();
  Scalar s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

SparseVec sparsify(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec densify(const Field& f, std::size_t n, const SparseVec& v) {
  Vec d = zero_vec(f, n);
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng, int range) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> dist(-range, range);
    return f.from_int(dist(rng));
  }
  std::uniform_int_distribution<std::int64_t> dist(0, f.characteristic() - 1);
  return f.from_int(dist(rng));
}

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng, int range) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng, range));
  return v;
}

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

namespace {

void check_field(const Field& f, const Scalar& s) {
  if (!(s.field() == f)) throw FieldMismatch();
}

// a - c*b on sparse vectors
SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - c * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

const Scalar* sparse_find(const SparseVec& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == idx) return &it->second;
  return nullptr;
}

}  // namespace

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, f.one());
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero()) {
        check_field(f, rows[r][c]);
        m.cols_[c].emplace_back(r, rows[r][c]);
      }
  }
  return m;
}

Mat Mat::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols()) throw DimensionMismatch("Mat::at out of range");
  const Scalar* s = sparse_find(cols_[c], r);
  return s ? *s : field_.zero();
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols()) throw DimensionMismatch("Mat::set out of range");
  check_field(field_, v);
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  bool present = it != col.end() && it->first == r;
  if (v.is_zero()) {
    if (present) col.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    col.insert(it, {r, v});
  }
}

void Mat::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  set(r, c, at(r, c) + v);
}

Vec Mat::column_dense(std::size_t c) const { return densify(field_, rows_, cols_.at(c)); }

void Mat::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column");
  for (const auto& s : v) check_field(field_, s);
  cols_.at(c) = sparsify(v);
}

Vec Mat::row_dense(std::size_t r) const {
  Vec v = zero_vec(field_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    if (const Scalar* s = sparse_find(cols_[c], r)) v[c] = *s;
  return v;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols()) throw DimensionMismatch("Mat::apply");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, x] : cols_[c]) out[r] += x * v[c];
  }
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, x] : cols_[c]) t.cols_[r].emplace_back(c, x);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("Mat product");
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  Mat out(a.field_, a.rows_, b.cols());
  Vec acc = zero_vec(a.field_, a.rows_);
  std::vector<char> touched(a.rows_, 0);
  std::vector<std::size_t> list;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    list.clear();
    for (const auto& [k, y] : b.cols_[j])
      for (const auto& [r, x] : a.cols_[k]) {
        acc[r] += x * y;
        if (!touched[r]) {
          touched[r] = 1;
          list.push_back(r);
        }
      }
    std::sort(list.begin(), list.end());
    for (std::size_t r : list) {
      if (!acc[r].is_zero()) out.cols_[j].emplace_back(r, acc[r]);
      acc[r] = a.field_.zero();
      touched[r] = 0;
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("Mat sum");
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  Mat out(a.field_, a.rows_, a.cols());
  Scalar minus_one = -a.field_.one();
  for (std::size_t c = 0; c < a.cols(); ++c) out.cols_[c] = sparse_axpy(a.cols_[c], minus_one, b.cols_[c]);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("Mat difference");
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  Mat out(a.field_, a.rows_, a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) out.cols_[c] = sparse_axpy(a.cols_[c], a.field_.one(), b.cols_[c]);
  return out;
}

Mat operator*(const Scalar& c, const Mat& a) {
  check_field(a.field_, c);
  Mat out(a.field_, a.rows_, a.cols());
  if (c.is_zero()) return out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    out.cols_[j] = a.cols_[j];
    for (auto& e : out.cols_[j]) e.second *= c;
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) { return !first_difference(a, b).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("Mat comparison");
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.cols_[c];
    const auto& y = b.cols_[c];
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k].first != y[k].first) return std::make_pair(c, std::min(x[k].first, y[k].first));
      if (x[k].second != y[k].second) return std::make_pair(c, x[k].first);
    }
    if (x.size() > n) return std::make_pair(c, x[n].first);
    if (y.size() > n) return std::make_pair(c, y[n].first);
  }
  return std::nullopt;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (const auto& [r, x] : a.column(c)) out.set(r, c, x);
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [r, x] : b.column(c)) out.set(r, a.cols() + c, x);
  return out;
}

Mat vstack(const Mat& a, const Mat& b) { return hstack(a.transpose(), b.transpose()).transpose(); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ca = 0; ca < a.cols(); ++ca)
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      Vec col = zero_vec(a.field(), out.rows());
      for (const auto& [ra, x] : a.column(ca))
        for (const auto& [rb, y] : b.column(cb)) col[ra * b.rows() + rb] = x * y;
      out.set_column(ca * b.cols() + cb, col);
    }
  return out;
}

Mat power(const Mat& a, unsigned k) {
  if (a.rows() != a.cols()) throw DimensionMismatch("power of non-square matrix");
  Mat r = Mat::identity(a.field(), a.rows());
  for (unsigned i = 0; i < k; ++i) r = a * r;
  return r;
}

Rref rref(const Mat& m) {
  Rref out;
  out.cols = m.cols();
  const Field& f = m.field();
  Mat t = m.transpose();
  // rows bucketed by leading column
  std::vector<std::vector<SparseVec>> bucket(m.cols());
  for (std::size_t r = 0; r < t.cols(); ++r) {
    const SparseVec& row = t.column(r);
    if (!row.empty()) bucket[row.front().first].push_back(row);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < cand.size(); ++k) {
      auto hk = cand[k].front().second.height(), hb = cand[best].front().second.height();
      if (hk < hb || (hk == hb && cand[k].size() < cand[best].size())) best = k;
    }
    SparseVec piv = std::move(cand[best]);
    Scalar inv = piv.front().second.inverse();
    for (auto& e : piv) e.second *= inv;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (k == best) continue;
      SparseVec red = sparse_axpy(cand[k], cand[k].front().second, piv);
      if (!red.empty()) bucket[red.front().first].push_back(std::move(red));
    }
    cand.clear();
    out.pivots.push_back(c);
    out.rows.push_back(std::move(piv));
  }
  // back substitution, highest pivot first
  std::vector<long> row_of(m.cols(), -1);
  for (std::size_t k = 0; k < out.pivots.size(); ++k) row_of[out.pivots[k]] = static_cast<long>(k);
  for (std::size_t k = out.rows.size(); k-- > 0;) {
    SparseVec& row = out.rows[k];
    std::size_t pos = 1;
    while (pos < row.size()) {
      std::size_t col = row[pos].first;
      if (row_of[col] < 0) {
        ++pos;
        continue;
      }
      Scalar c = row[pos].second;
      row = sparse_axpy(row, c, out.rows[row_of[col]]);
      // entries before pos are unchanged since the reducing row starts at col
    }
  }
  (void)f;
  return out;
}

RankKernelImage rank_kernel_image(const Mat& m) {
  RankKernelImage res;
  Rref r = rref(m);
  res.rank = r.pivots.size();
  const Field& f = m.field();
  std::vector<long> free_index(m.cols(), -1);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) {
      free_index[c] = static_cast<long>(res.kernel.size());
      res.kernel.push_back(unit_vec(f, m.cols(), c));
    }
  for (std::size_t k = 0; k < r.rows.size(); ++k)
    for (const auto& [c, x] : r.rows[k])
      if (free_index[c] >= 0) res.kernel[free_index[c]][r.pivots[k]] = -x;
  for (auto p : r.pivots) res.image.push_back(m.column_dense(p));
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel(const Mat& m) { return rank_kernel_image(m).kernel; }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  Mat rhs(m.field(), m.rows(), 1);
  rhs.set_column(0, b);
  return solve_columns(m, rhs).front();
}

std::vector<std::optional<Vec>> solve_columns(const Mat& m, const Mat& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("solve: rhs rows");
  const Field& f = m.field();
  std::size_t n = m.cols();
  Rref r = rref(hstack(m, rhs));
  bool clean = r.pivots.empty() || r.pivots.back() < n;
  if (!clean && rhs.cols() > 1) {
    std::vector<std::optional<Vec>> out;
    for (std::size_t j = 0; j < rhs.cols(); ++j) out.push_back(solve(m, rhs.column_dense(j)));
    return out;
  }
  std::vector<std::optional<Vec>> out(rhs.cols());
  if (!clean) return out;
  for (auto& x : out) x = zero_vec(f, n);
  for (std::size_t k = 0; k < r.rows.size(); ++k)
    for (const auto& [c, v] : r.rows[k])
      if (c >= n) (*out[c - n])[r.pivots[k]] = v;
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  auto cols = solve_columns(m, Mat::identity(m.field(), m.rows()));
  Mat inv(m.field(), m.rows(), m.rows());
  for (std::size_t j = 0; j < cols.size(); ++j) inv.set_column(j, *cols[j]);
  return inv;
}

std::vector<std::size_t> independent_subset(const Field& f, std::size_t n, const std::vector<Vec>& vs) {
  Rref r = rref(Mat::from_columns(f, n, vs));
  return r.pivots;
}

Subquotient::Subquotient(const Mat& d_in, const Mat& d_out)
    : field_(d_out.field()), ambient_(d_out.cols()), d_out_(d_out) {
  if (d_in.rows() != d_out.cols()) throw DimensionMismatch("subquotient: incompatible differentials");
  if (!(d_in.field() == d_out.field())) throw FieldMismatch();
  Mat comp = d_out * d_in;
  for (std::size_t c = 0; c < comp.cols(); ++c)
    if (!comp.column(c).empty())
      throw NotAComplex(c, "d_out(d_in(e_" + std::to_string(c) + ")) has a nonzero entry in row " +
                               std::to_string(comp.column(c).front().first));
  auto rki = rank_kernel_image(d_out);
  cycles_ = std::move(rki.kernel);
  boundaries_ = rank_kernel_image(d_in).image;
  std::vector<Vec> both = boundaries_;
  both.insert(both.end(), cycles_.begin(), cycles_.end());
  std::size_t b = boundaries_.size();
  for (std::size_t k : independent_subset(field_, ambient_, both))
    if (k >= b) reps_.push_back(both[k]);
  // projector L with L*[B|R] = [0|I]
  std::vector<Vec> basis = boundaries_;
  basis.insert(basis.end(), reps_.begin(), reps_.end());
  boundary_mat_ = Mat::from_columns(field_, ambient_, boundaries_);
  Mat mt = Mat::from_columns(field_, ambient_, basis).transpose();
  Mat rhs(field_, basis.size(), reps_.size());
  for (std::size_t j = 0; j < reps_.size(); ++j) rhs.set(b + j, j, field_.one());
  projector_ = Mat(field_, reps_.size(), ambient_);
  if (!reps_.empty()) {
    auto sol = solve_columns(mt, rhs);
    std::vector<Vec> rows;
    for (auto& s : sol) rows.push_back(*s);
    projector_ = Mat::from_rows(field_, rows, ambient_);
  }
}

bool Subquotient::is_cycle(const Vec& v) const { return bvkit::is_zero(d_out_.apply(v)); }

bool Subquotient::is_boundary(const Vec& v) const {
  if (bvkit::is_zero(v)) return true;
  if (boundaries_.empty()) return false;
  return solve(boundary_mat_, v).has_value();
}

Vec Subquotient::project(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("project: wrong ambient dimension");
  if (!is_cycle(v)) throw InvalidInput("project: vector is not a cycle");
  return projector_.apply(v);
}

Vec Subquotient::lift(const Vec& coords) const {
  if (coords.size() != reps_.size()) throw DimensionMismatch("lift: wrong coordinate count");
  Vec v = zero_vec(field_, ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(coords[i], reps_[i], v);
  return v;
}

}  // namespace bvkit
