#include "bvkit/cohomology.hpp"

#include <functional>
#include <random>
#include <string>

#include "bvkit/error.hpp"

namespace bvkit::operad {

namespace {

Scalar sign(const Field& f, long e) { return (e % 2 == 0) ? f.one() : -f.one(); }

std::string at(std::initializer_list<int> degs, std::initializer_list<std::size_t> idx) {
  std::string s = "degrees";
  for (int d : degs) s += " " + std::to_string(d);
  s += " classes";
  for (auto i : idx) s += " " + std::to_string(i);
  return s;
}

struct Ctx {
  const OperadSlice& op;
  const Field& F;
  std::vector<Subquotient>& H;
  int D;

  Vec cls(int n, const Vec& v) const { return H.at(n).project(v); }
  const Vec& rep(int n, std::size_t i) const { return H.at(n).class_reps()[i]; }
  std::size_t b(int n) const { return H.at(n).dim(); }
};

}  // namespace

CochainReport cohomology_ring(const OperadSlice& op, int D, const RingOptions& opt) {
  if (D < 0) throw InvalidInput("negative degree budget");
  op.check_arity(D + 1);
  CochainReport rep;
  rep.operad_name = op.name();
  rep.max_degree = D;
  const Field& F = op.field();
  std::mt19937_64 rng(opt.seed);

  std::vector<Mat> d;
  for (int n = 0; n <= D; ++n) d.push_back(differential(op, n));
  for (int n = 0; n <= D; ++n) rep.H.emplace_back(n == 0 ? Mat(F, op.dim(0), 0) : d[n - 1], d[n]);
  for (const auto& h : rep.H) rep.betti.push_back(h.dim());
  Ctx c{op, F, rep.H, D};
  CheckReport& ck = rep.checks;

  // structure constants
  for (int p = 0; p <= D; ++p)
    for (int q = 0; p + q <= D; ++q) {
      Mat m(F, c.b(p + q), c.b(p) * c.b(q));
      for (std::size_t i = 0; i < c.b(p); ++i)
        for (std::size_t j = 0; j < c.b(q); ++j) m.set_column(i * c.b(q) + j, c.cls(p + q, cup(op, p, c.rep(p, i), q, c.rep(q, j))));
      rep.cup.emplace(std::make_pair(p, q), std::move(m));
    }
  for (int p = 0; p <= D + 1; ++p)
    for (int q = 0; p + q - 1 <= D; ++q) {
      if (p + q == 0 || p > D || q > D) continue;
      Mat m(F, c.b(p + q - 1), c.b(p) * c.b(q));
      for (std::size_t i = 0; i < c.b(p); ++i)
        for (std::size_t j = 0; j < c.b(q); ++j)
          m.set_column(i * c.b(q) + j, c.cls(p + q - 1, bracket(op, p, c.rep(p, i), q, c.rep(q, j))));
      rep.bracket.emplace(std::make_pair(p, q), std::move(m));
    }
  for (int n = 1; 2 * n - 1 <= D; ++n) {
    if (n % 2 != 0 && F.characteristic() != 2) continue;
    std::vector<Vec> v;
    for (std::size_t i = 0; i < c.b(n); ++i) v.push_back(c.cls(2 * n - 1, sq(op, n, c.rep(n, i))));
    rep.sq.emplace(n, std::move(v));
  }
  std::vector<Mat> Bc;
  if (op.has_cyclic()) {
    for (int n = 0; n <= D + 1; ++n) Bc.push_back(connes_B(op, n));
    for (int n = 1; n <= D; ++n) {
      Mat m(F, c.b(n - 1), c.b(n));
      for (std::size_t i = 0; i < c.b(n); ++i) m.set_column(i, c.cls(n - 1, Bc[n].apply(c.rep(n, i))));
      rep.B.emplace(n, std::move(m));
    }
  }

  if (opt.chain_checks) {
    std::string w;
    for (int n = 0; n < D && w.empty(); ++n)
      if (!(d[n + 1] * d[n]).is_zero()) w = "n=" + std::to_string(n);
    ck.add("d^2 = 0", w.empty(), w);
    w.clear();
    for (int n = 0; n <= D && w.empty(); ++n) {
      if (op.dim(n) <= opt.exact_limit) {
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < op.dim(n); ++k) cols.push_back(bracket(op, 2, op.mult(), n, op.basis(n, k)));
        if (Mat::from_columns(F, op.dim(n + 1), cols) != d[n]) w = "n=" + std::to_string(n);
      } else {
        for (int s = 0; s < opt.chain_samples && w.empty(); ++s) {
          Vec f = random_vec(F, op.dim(n), rng);
          if (bracket(op, 2, op.mult(), n, f) != d[n].apply(f)) w = "n=" + std::to_string(n);
        }
      }
    }
    ck.add("d = {mu,-}", w.empty(), w);
    w.clear();
    for (int p = 0; p <= D && w.empty(); ++p)
      for (int q = 0; p + q + 1 <= D + 1 && p + q < D && w.empty(); ++q)
        for (int s = 0; s < opt.chain_samples && w.empty(); ++s) {
          Vec f = random_vec(F, op.dim(p), rng), g = random_vec(F, op.dim(q), rng);
          Vec lhs = d[p + q].apply(cup(op, p, f, q, g));
          Vec rhs = cup(op, p + 1, d[p].apply(f), q, g);
          axpy(sign(F, p), cup(op, p, f, q + 1, d[q].apply(g)), rhs);
          if (lhs != rhs) w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        }
    ck.add("d(f∪g) = df∪g + (-1)^p f∪dg", w.empty(), w);
    w.clear();
    for (int p = 0; p <= D && w.empty(); ++p)
      for (int q = 0; p + q <= D && w.empty(); ++q) {
        if (p + q == 0 || p + q - 1 >= D) continue;
        for (int s = 0; s < opt.chain_samples && w.empty(); ++s) {
          Vec f = random_vec(F, op.dim(p), rng), g = random_vec(F, op.dim(q), rng);
          Vec lhs = d[p + q - 1].apply(bracket(op, p, f, q, g));
          Vec rhs = bracket(op, p + 1, d[p].apply(f), q, g);
          axpy(sign(F, p - 1 + 2), bracket(op, p, f, q + 1, d[q].apply(g)), rhs);
          if (lhs != rhs) w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        }
      }
    ck.add("d{f,g} = {df,g} + (-1)^(p-1){f,dg}", w.empty(), w);
    w.clear();
    for (int s = 0; s < opt.chain_samples && w.empty(); ++s) {
      Vec f = random_vec(F, op.dim(1), rng), g = random_vec(F, op.dim(1), rng);
      Vec comm = sub(op.compose(1, f, 1, 1, g), op.compose(1, g, 1, 1, f));
      if (bracket(op, 1, f, 1, g) != comm) w = "sample " + std::to_string(s);
    }
    ck.add("degree-1 bracket is the o1-commutator", w.empty(), w);
    ck.add("{mu,mu} = 0", is_zero(bracket(op, 2, op.mult(), 2, op.mult())));
    if (op.has_cyclic()) {
      w.clear();
      for (int n = 2; n <= D + 1 && w.empty(); ++n)
        if (!(Bc[n - 1] * Bc[n]).is_zero()) w = "n=" + std::to_string(n);
      ck.add("B^2 = 0", w.empty(), w);
      w.clear();
      // on O(n): d_{n-1} B_n + B_{n+1} d_n
      for (int n = 0; n <= D && w.empty(); ++n) {
        Mat lhs = Bc[n + 1] * d[n];
        if (n >= 1) lhs = lhs + d[n - 1] * Bc[n];
        if (!lhs.is_zero()) w = "n=" + std::to_string(n);
      }
      ck.add("dB + Bd = 0", w.empty(), w);
    }
  }

  if (!opt.laws) return rep;

  auto perturb = [&](int n, const Vec& v) {
    if (n == 0) return v;
    Vec x = random_vec(F, op.dim(n - 1), rng);
    return add(v, d[n - 1].apply(x));
  };

  {
    std::string w;
    for (int p = 0; p <= D && w.empty(); ++p)
      for (std::size_t i = 0; i < c.b(p) && w.empty(); ++i)
        if (c.cls(p, cup(op, 0, op.unit0(), p, c.rep(p, i))) != unit_vec(F, c.b(p), i)) w = at({p}, {i});
    ck.add("e is a unit for cup", w.empty(), w);
  }
  {
    std::string wc, wa, wb, wd;
    for (int p = 0; p <= D; ++p)
      for (int q = 0; p + q <= D; ++q)
        for (std::size_t i = 0; i < c.b(p); ++i)
          for (std::size_t j = 0; j < c.b(q); ++j) {
            const Vec &a = c.rep(p, i), &b = c.rep(q, j);
            Vec ab = c.cls(p + q, cup(op, p, a, q, b));
            if (wc.empty() && ab != scale(sign(F, p * q), c.cls(p + q, cup(op, q, b, p, a)))) wc = at({p, q}, {i, j});
            if (wd.empty() && ab != c.cls(p + q, cup(op, p, perturb(p, a), q, perturb(q, b)))) wd = at({p, q}, {i, j});
            for (int r = 0; p + q + r <= D; ++r)
              for (std::size_t k = 0; k < c.b(r) && wa.empty(); ++k) {
                const Vec& cc = c.rep(r, k);
                Vec lhs = c.cls(p + q + r, cup(op, p + q, cup(op, p, a, q, b), r, cc));
                Vec rhs = c.cls(p + q + r, cup(op, p, a, q + r, cup(op, q, b, r, cc)));
                if (lhs != rhs) wa = at({p, q, r}, {i, j, k});
              }
            if (p + q >= 1 && p + q - 1 <= D) {
              Vec br = c.cls(p + q - 1, bracket(op, p, a, q, b));
              if (wb.empty() && br != c.cls(p + q - 1, bracket(op, p, perturb(p, a), q, perturb(q, b))))
                wb = at({p, q}, {i, j});
              Vec rev = scale(-sign(F, std::labs(static_cast<long>(p - 1) * (q - 1))),
                              c.cls(p + q - 1, bracket(op, q, b, p, a)));
              if (wb.empty() && br != rev) wb = "antisymmetry " + at({p, q}, {i, j});
            }
          }
    ck.add("cup graded commutative on cohomology", wc.empty(), wc);
    ck.add("cup associative on cohomology", wa.empty(), wa);
    ck.add("cup well defined on cohomology", wd.empty(), wd);
    ck.add("bracket well defined and antisymmetric on cohomology", wb.empty(), wb);
  }
  {
    std::string wj, wp;
    for (int p = 0; p <= D; ++p)
      for (int q = 0; q <= D; ++q)
        for (int r = 0; r <= D; ++r)
          for (std::size_t i = 0; i < c.b(p); ++i)
            for (std::size_t j = 0; j < c.b(q); ++j)
              for (std::size_t k = 0; k < c.b(r); ++k) {
                const Vec &a = c.rep(p, i), &b = c.rep(q, j), &cc = c.rep(r, k);
                int deg = p + q + r - 2;
                if (wj.empty() && deg >= 0 && deg <= D && q + r >= 1 && p + q >= 1 && p + r >= 1 &&
                    p + q - 1 <= D && q + r - 1 <= D && p + r - 1 <= D) {
                  Vec lhs = bracket(op, p, a, q + r - 1, bracket(op, q, b, r, cc));
                  Vec rhs = bracket(op, p + q - 1, bracket(op, p, a, q, b), r, cc);
                  axpy(sign(F, std::labs(static_cast<long>(p - 1) * (q - 1))),
                       bracket(op, q, b, p + r - 1, bracket(op, p, a, r, cc)), rhs);
                  if (c.cls(deg, lhs) != c.cls(deg, rhs)) wj = at({p, q, r}, {i, j, k});
                }
                deg = p + q + r - 1;
                if (wp.empty() && deg >= 0 && deg <= D && p + q <= D && p + r >= 1 && q + r >= 1) {
                  Vec lhs = bracket(op, p + q, cup(op, p, a, q, b), r, cc);
                  Vec rhs = cup(op, p + r - 1, bracket(op, p, a, r, cc), q, b);
                  axpy(sign(F, static_cast<long>(p) * (r - 1) + 2L * p), cup(op, p, a, q + r - 1, bracket(op, q, b, r, cc)), rhs);
                  if (c.cls(deg, lhs) != c.cls(deg, rhs)) wp = at({p, q, r}, {i, j, k});
                }
              }
    ck.add("graded Jacobi on cohomology", wj.empty(), wj);
    ck.add("Poisson rule on cohomology", wp.empty(), wp);
  }
  if (op.has_cyclic()) {
    std::string w;
    for (int p = 0; p <= D; ++p)
      for (int q = 0; p + q <= D; ++q) {
        if (p + q == 0) continue;
        for (std::size_t i = 0; i < c.b(p) && w.empty(); ++i)
          for (std::size_t j = 0; j < c.b(q) && w.empty(); ++j) {
            const Vec &a = c.rep(p, i), &b = c.rep(q, j);
            Vec rhs = Bc[p + q].apply(cup(op, p, a, q, b));
            if (p >= 1) axpy(-F.one(), cup(op, p - 1, Bc[p].apply(a), q, b), rhs);
            if (q >= 1) axpy(-sign(F, p), cup(op, p, a, q - 1, Bc[q].apply(b)), rhs);
            rhs = scale(sign(F, p), rhs);
            if (c.cls(p + q - 1, bracket(op, p, a, q, b)) != c.cls(p + q - 1, rhs)) w = at({p, q}, {i, j});
          }
      }
    ck.add("BV relation on cohomology", w.empty(), w);
  }
  return rep;
}

LambdaReport lambda_cohomology(const OperadSlice& op, int D, int random_pairs, std::uint64_t seed) {
  if (!op.has_cyclic()) throw MissingStructure("HC_λ needs a cyclic operad");
  op.check_arity(D + 1);
  LambdaReport rep;
  const Field& F = op.field();
  CosimplicialModule cm = cosimplicial_from_operad(op, D + 1);
  rep.complex = lambda_complex(cm, D);
  for (const auto& h : rep.complex.cohomology) rep.betti.push_back(h.dim());
  rep.checks.add("mu is λ-invariant", cm.lambda(2).apply(op.mult()) == op.mult());
  std::mt19937_64 rng(seed);
  const int N = op.max_arity();
  std::vector<Mat> lam;
  std::vector<Mat> basis;
  for (int n = 0; n <= N; ++n) {
    lam.push_back(lambda_matrix(op, n));
    basis.push_back(Mat::from_columns(F, op.dim(n), kernel(lam[n] - Mat::identity(F, op.dim(n)))));
  }
  std::string w;
  int tested = 0;
  for (int m = 0; m <= N && w.empty(); ++m)
    for (int n = 0; n <= N && m + n - 1 <= N && w.empty(); ++n) {
      if (m + n == 0 || basis[m].cols() == 0 || basis[n].cols() == 0) continue;
      for (int s = 0; s < random_pairs && w.empty(); ++s) {
        Vec f = basis[m].apply(random_vec(F, basis[m].cols(), rng));
        Vec g = basis[n].apply(random_vec(F, basis[n].cols(), rng));
        Vec br = bracket(op, m, f, n, g);
        ++tested;
        if (lam[m + n - 1].apply(br) != br) w = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  rep.checks.add("bracket of λ-invariant cochains is λ-invariant (" + std::to_string(tested) + " pairs)", w.empty(), w);
  // bracket on HC_λ
  auto coords = [&](int n, const Vec& v) {
    auto x = solve(rep.complex.basis[n], v);
    if (!x) throw CheckFailed("bracket leaves the λ-subcomplex");
    return rep.complex.cohomology[n].project(*x);
  };
  for (int p = 0; p <= D; ++p)
    for (int q = 0; q <= D; ++q) {
      if (p + q == 0 || p + q - 1 > D) continue;
      std::size_t bp = rep.betti[p], bq = rep.betti[q];
      Mat m(F, rep.betti[p + q - 1], bp * bq);
      for (std::size_t i = 0; i < bp; ++i)
        for (std::size_t j = 0; j < bq; ++j) {
          Vec a = rep.complex.lift(p, unit_vec(F, bp, i)), b = rep.complex.lift(q, unit_vec(F, bq, j));
          m.set_column(i * bq + j, coords(p + q - 1, bracket(op, p, a, q, b)));
        }
      rep.bracket.emplace(std::make_pair(p, q), std::move(m));
    }
  return rep;
}

namespace {

// Pushes classes through phi with the given lift/coords functions and checks
// the multiplicative tables.
template <class Lift, class Coords, class IsCycle, class IsBoundary>
InducedMap push(const Field& F, const std::vector<std::size_t>& bs, const std::vector<std::size_t>& bd,
                const std::vector<Mat>& phi, int D, Lift lift, Coords coords, IsCycle is_cycle,
                IsBoundary boundaries_ok) {
  InducedMap out;
  for (int n = 0; n <= D; ++n) {
    if (n >= static_cast<int>(phi.size())) throw DimensionMismatch("induced map needs cochain maps up to degree " + std::to_string(D));
    Mat m(F, bd[n], bs[n]);
    std::string w;
    for (std::size_t i = 0; i < bs[n] && w.empty(); ++i) {
      Vec v = phi[n].apply(lift(n, unit_vec(F, bs[n], i)));
      if (!is_cycle(n, v)) {
        w = "class " + std::to_string(i);
        break;
      }
      m.set_column(i, coords(n, v));
    }
    out.checks.add("degree " + std::to_string(n) + ": cocycles map to cocycles", w.empty(), w);
    std::string bw = boundaries_ok(n);
    out.checks.add("degree " + std::to_string(n) + ": coboundaries map to coboundaries", bw.empty(), bw);
    out.ranks.push_back(rank(m));
    out.maps.push_back(std::move(m));
  }
  return out;
}

template <class Table>
void compare_tables(InducedMap& out, const Table& src, const Table& dst, const char* what, int shift) {
  std::string w;
  for (const auto& [pq, ms] : src) {
    auto it = dst.find(pq);
    if (it == dst.end()) continue;
    auto [p, q] = pq;
    int r = p + q + shift;
    if (r < 0 || r >= static_cast<int>(out.maps.size()) || p >= static_cast<int>(out.maps.size()) ||
        q >= static_cast<int>(out.maps.size()))
      continue;
    if (out.maps[r] * ms != it->second * kron(out.maps[p], out.maps[q])) {
      w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
      break;
    }
  }
  out.checks.add(std::string("preserves ") + what, w.empty(), w);
}

std::string boundary_witness(const std::vector<Vec>& boundaries, const Mat& phi,
                             const std::function<bool(const Vec&)>& is_boundary) {
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    if (!is_boundary(phi.apply(boundaries[i]))) return "boundary " + std::to_string(i);
  return {};
}

}  // namespace

bool InducedMap::injective() const {
  for (std::size_t n = 0; n < maps.size(); ++n)
    if (ranks[n] != maps[n].cols()) return false;
  return true;
}

InducedMap induced_map(const CochainReport& src, const CochainReport& dst, const std::vector<Mat>& phi) {
  const int D = std::min(src.max_degree, dst.max_degree);
  const Field& F = src.H.at(0).field();
  auto out = push(
      F, src.betti, dst.betti, phi, D, [&](int n, const Vec& c) { return src.H[n].lift(c); },
      [&](int n, const Vec& v) { return dst.H[n].project(v); }, [&](int n, const Vec& v) { return dst.H[n].is_cycle(v); },
      [&](int n) {
        return boundary_witness(src.H[n].boundary_basis(), phi[n], [&](const Vec& v) { return dst.H[n].is_boundary(v); });
      });
  compare_tables(out, src.cup, dst.cup, "cup product", 0);
  compare_tables(out, src.bracket, dst.bracket, "bracket", -1);
  std::string w;
  for (const auto& [n, ms] : src.B) {
    auto it = dst.B.find(n);
    if (it == dst.B.end() || n > D) continue;
    if (out.maps[n - 1] * ms != it->second * out.maps[n]) {
      w = "n=" + std::to_string(n);
      break;
    }
  }
  if (!src.B.empty() && !dst.B.empty()) out.checks.add("preserves B", w.empty(), w);
  return out;
}

InducedMap induced_map(const LambdaReport& src, const LambdaReport& dst, const std::vector<Mat>& phi) {
  const int D = static_cast<int>(std::min(src.betti.size(), dst.betti.size())) - 1;
  const Field& F = phi.at(0).field();
  auto in_dst = [&](int n, const Vec& v) { return solve(dst.complex.basis[n], v); };
  auto out = push(
      F, src.betti, dst.betti, phi, D, [&](int n, const Vec& c) { return src.complex.lift(n, c); },
      [&](int n, const Vec& v) { return dst.complex.cohomology[n].project(*in_dst(n, v)); },
      [&](int n, const Vec& v) {
        auto x = in_dst(n, v);
        return x.has_value() && dst.complex.cohomology[n].is_cycle(*x);
      },
      [&](int n) {
        std::vector<Vec> bs;
        for (const auto& b : src.complex.cohomology[n].boundary_basis()) bs.push_back(src.complex.basis[n].apply(b));
        return boundary_witness(bs, phi[n], [&](const Vec& v) {
          auto x = in_dst(n, v);
          return x.has_value() && dst.complex.cohomology[n].is_boundary(*x);
        });
      });
  compare_tables(out, src.bracket, dst.bracket, "bracket", -1);
  return out;
}

}  // namespace bvkit::operad
