#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bvkit/field.hpp"

namespace bvkit {

using Vec = std::vector<Scalar>;
// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void axpy(const Scalar& c, const Vec& x, Vec& y);  // y += c*x
Scalar dot(const Vec& a, const Vec& b);
SparseVec sparsify(const Vec& v);
Vec densify(const Field& f, std::size_t n, const SparseVec& v);
// Uniform small integers over Q (in [-range, range]) or uniform residues over F_p.
Scalar random_scalar(const Field& f, std::mt19937_64& rng, int range = 9);
Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng, int range = 9);
// Index of the first nonzero entry, or v.size().
std::size_t first_nonzero(const Vec& v);

// Sparse matrix stored by columns.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  const SparseVec& column(std::size_t c) const { return cols_.at(c); }
  Vec column_dense(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  Vec row_dense(std::size_t r) const;

  Vec apply(const Vec& v) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& c, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  // Returns the first (col,row) where the matrices differ.
  friend std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& a,
                                                                             const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::vector<SparseVec> cols_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);  // leftmost factor most significant
Mat power(const Mat& a, unsigned k);

// Reduced row echelon form, pivots strictly increasing.
struct Rref {
  std::size_t cols = 0;
  std::vector<SparseVec> rows;
  std::vector<std::size_t> pivots;
};
Rref rref(const Mat& m);

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<Vec> kernel;
  std::vector<Vec> image;
};
RankKernelImage rank_kernel_image(const Mat& m);
std::size_t rank(const Mat& m);
std::vector<Vec> kernel(const Mat& m);

std::optional<Vec> solve(const Mat& m, const Vec& b);
// Solves m X = rhs column by column; entries are empty for inconsistent columns.
std::vector<std::optional<Vec>> solve_columns(const Mat& m, const Mat& rhs);
std::optional<Mat> inverse(const Mat& m);

// Indices of a maximal linearly independent prefix-greedy subset of vs.
std::vector<std::size_t> independent_subset(const Field& f, std::size_t n,
                                            const std::vector<Vec>& vs);

// ker(d_out) / im(d_in). d_in : C^{k-1} -> C^k, d_out : C^k -> C^{k+1}.
class Subquotient {
 public:
  Subquotient(const Mat& d_in, const Mat& d_out);

  std::size_t dim() const { return reps_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Vec>& cycle_basis() const { return cycles_; }
  const std::vector<Vec>& boundary_basis() const { return boundaries_; }
  const std::vector<Vec>& class_reps() const { return reps_; }
  const Mat& projector() const { return projector_; }

  bool is_cycle(const Vec& v) const;
  bool is_boundary(const Vec& v) const;
  // Coordinates of the class of the cycle v in class_reps. Throws on non-cycles.
  Vec project(const Vec& v) const;
  // Cycle representing the given coordinates.
  Vec lift(const Vec& coords) const;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Mat d_out_;
  std::vector<Vec> cycles_;
  std::vector<Vec> boundaries_;
  std::vector<Vec> reps_;
  Mat projector_;
  Mat boundary_mat_;
};

}  // namespace bvkit
