#include "bvkit/barcobar.hpp"

#include <memory>
#include <utility>

#include "bvkit/error.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/tensor.hpp"

namespace bvkit::barcobar {

using hopf::FinAlgebraData;

namespace {

Mat col(const Field& f, const Vec& v) { return Mat::from_columns(f, v.size(), {v}); }
Mat row(const Field& f, const Vec& v) { return col(f, v).transpose(); }
Mat eye(const Field& f, std::size_t n) { return Mat::identity(f, n); }

Mat reshape(const Field& f, std::size_t d, int n, const Vec& v) {
  std::size_t ln = ipow(d, n);
  Mat u(f, ln, d);
  for (std::size_t z = 0; z < d; ++z) {
    Vec c(v.begin() + z * ln, v.begin() + (z + 1) * ln);
    u.set_column(z, c);
  }
  return u;
}

Mat iterated_coproduct(const FinAlgebraData& h, int n) {
  if (n == 0) return row(h.field, h.eps());
  Mat m = eye(h.field, h.dim);
  for (int k = 2; k <= n; ++k) m = kron(h.delta(), eye(h.field, ipow(h.dim, k - 2))) * m;
  return m;
}

// x·y in H^{⊗n}
Vec tensor_mult(const FinAlgebraData& h, int n, const Vec& x, const Vec& y) {
  const std::size_t d = h.dim, ln = ipow(d, n);
  Vec out = zero_vec(h.field, ln);
  auto sx = sparsify(x), sy = sparsify(y);
  for (const auto& [ui, a] : sx)
    for (const auto& [vi, b] : sy) {
      auto u = index_tuple(ui, d, n), v = index_tuple(vi, d, n);
      std::vector<std::pair<std::size_t, Scalar>> acc{{0, a * b}};
      for (int k = 0; k < n; ++k) {
        std::vector<std::pair<std::size_t, Scalar>> next;
        for (const auto& [i, c] : acc)
          for (const auto& [z, e] : h.mult.column(u[k] * d + v[k])) next.emplace_back(i * d + z, c * e);
        acc = std::move(next);
      }
      for (const auto& [i, c] : acc) out[i] += c;
    }
  return out;
}

Vec pure_tensor(const Field& f, std::size_t d, const std::vector<Vec>& factors) {
  Vec out{f.one()};
  for (const auto& v : factors) {
    Vec next = zero_vec(f, out.size() * d);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!out[i].is_zero())
        for (std::size_t j = 0; j < d; ++j)
          if (!v[j].is_zero()) next[i * d + j] = out[i] * v[j];
    out = std::move(next);
  }
  return out;
}

// τ_n(h_1..h_n) = Δ^{(n)}S~(h_1)·(h_2 ⊗ ... ⊗ h_n ⊗ σ)
Mat cm_tau(const FinAlgebraData& h, const Vec& delta, const Vec& sigma, int n) {
  if (n == 0) return eye(h.field, 1);
  const std::size_t d = h.dim, ln = ipow(d, n);
  Mat st = hopf::twisted_antipode(h, delta);
  Mat dn = iterated_coproduct(h, n);
  Mat t(h.field, ln, ln);
  for (std::size_t c = 0; c < ln; ++c) {
    auto k = index_tuple(c, d, n);
    Vec first = dn.apply(st.column_dense(k[0]));
    std::vector<Vec> rest;
    for (int i = 1; i < n; ++i) rest.push_back(h.basis(k[i]));
    rest.push_back(sigma);
    t.set_column(c, tensor_mult(h, n, first, pure_tensor(h.field, d, rest)));
  }
  return t;
}

// t_n(k) = σS(k_1^{(1)}...k_n^{(1)}) ⊗ k_1^{(2)} ⊗ ... ⊗ k_{n-1}^{(2)} δ(k_n^{(2)})
Mat kr_t(const FinAlgebraData& k, const Vec& delta, const Vec& sigma, int n) {
  if (n == 0) return eye(k.field, 1);
  const std::size_t d = k.dim, ln = ipow(d, n), tail_dim = ipow(d, n - 1);
  Mat sig_s = k.left_mult(sigma) * k.S();
  Mat t(k.field, ln, ln);
  struct State {
    Vec prod;
    std::size_t tail;
    Scalar coef;
  };
  for (std::size_t c = 0; c < ln; ++c) {
    auto kt = index_tuple(c, d, n);
    std::vector<State> states{{k.unit, 0, k.field.one()}};
    for (int i = 0; i < n; ++i) {
      std::vector<State> next;
      for (const auto& s : states)
        for (const auto& [pq, e] : k.delta().column(kt[i])) {
          std::size_t p = pq / d, q = pq % d;
          Vec prod = k.product(s.prod, k.basis(p));
          if (i + 1 < n) {
            next.push_back({std::move(prod), s.tail * d + q, s.coef * e});
          } else {
            Scalar w = s.coef * e * delta[q];
            if (!w.is_zero()) next.push_back({std::move(prod), s.tail, w});
          }
        }
      states = std::move(next);
    }
    Vec out = zero_vec(k.field, ln);
    for (const auto& s : states) {
      Vec head = sig_s.apply(s.prod);
      for (std::size_t a = 0; a < d; ++a)
        if (!head[a].is_zero()) out[a * tail_dim + s.tail] += s.coef * head[a];
    }
    t.set_column(c, out);
  }
  return t;
}

CosimplicialModule cobar_module(const FinAlgebraData& c, const Vec& sigma, int N) {
  const Field& f = c.field;
  const std::size_t d = c.dim;
  CosimplicialModule m;
  m.field = f;
  for (int n = 0; n <= N; ++n) m.dims.push_back(ipow(d, n));
  for (int n = 0; n < N; ++n) {
    std::vector<Mat> fs;
    fs.push_back(kron(col(f, c.unit), eye(f, ipow(d, n))));
    for (int i = 1; i <= n; ++i) fs.push_back(kron(kron(eye(f, ipow(d, i - 1)), c.delta()), eye(f, ipow(d, n - i))));
    fs.push_back(kron(eye(f, ipow(d, n)), col(f, sigma)));
    m.coface.push_back(std::move(fs));
  }
  for (int n = 0; n <= N; ++n) {
    std::vector<Mat> ss;
    for (int i = 0; i < n; ++i) ss.push_back(kron(kron(eye(f, ipow(d, i)), row(f, c.eps())), eye(f, ipow(d, n - i - 1))));
    m.codegeneracy.push_back(std::move(ss));
  }
  return m;
}

SimplicialModule bar_module(const FinAlgebraData& a, const Vec& delta, int N) {
  const Field& f = a.field;
  const std::size_t d = a.dim;
  const Vec& eps = a.augmentation_form();
  SimplicialModule m;
  m.field = f;
  for (int n = 0; n <= N; ++n) m.dims.push_back(ipow(d, n));
  for (int n = 0; n < N; ++n) {
    std::vector<Mat> fs;
    fs.push_back(kron(row(f, eps), eye(f, ipow(d, n))));
    for (int i = 1; i <= n; ++i) fs.push_back(kron(kron(eye(f, ipow(d, i - 1)), a.mult), eye(f, ipow(d, n - i))));
    fs.push_back(kron(eye(f, ipow(d, n)), row(f, delta)));
    m.faces.push_back(std::move(fs));
  }
  for (int n = 0; n <= N; ++n) {
    std::vector<Mat> ss;
    for (int i = 0; i < n; ++i) ss.push_back(kron(kron(eye(f, ipow(d, i)), col(f, a.unit)), eye(f, ipow(d, n - i - 1))));
    m.degeneracies.push_back(std::move(ss));
  }
  return m;
}

void require_involution(const FinAlgebraData& h, const hopf::ModularPair& mp) {
  auto rep = hopf::check_modular_pair_involution(h, mp);
  if (!rep.all_pass()) throw CheckFailed("not a modular pair in involution: " + rep.first_failure());
}

// σ S²(k) = k σ for every basis k
bool s2_is_conjugation(const FinAlgebraData& k, const Vec& sigma) {
  Mat s2 = k.S() * k.S();
  return k.left_mult(sigma) * s2 == k.right_mult(sigma);
}

std::vector<Mat> identities(const Field& f, const std::vector<std::size_t>& dims) {
  std::vector<Mat> out;
  for (auto n : dims) out.push_back(eye(f, n));
  return out;
}

std::string degree_witness(int n) { return "degree " + std::to_string(n); }

}  // namespace

Mat ext_matrix(const FinAlgebraData& h, int n) {
  const std::size_t d = h.dim, ln = ipow(d, n);
  Mat dn = iterated_coproduct(h, n);
  Mat m(h.field, d * ln, ln);
  for (std::size_t c = 0; c < ln; ++c) {
    Vec v = unit_vec(h.field, ln, c), out = zero_vec(h.field, d * ln);
    for (std::size_t z = 0; z < d; ++z) {
      Vec p = tensor_mult(h, n, dn.column_dense(z), v);
      for (std::size_t t = 0; t < ln; ++t) out[z * ln + t] = p[t];
    }
    m.set_column(c, out);
  }
  return m;
}

Mat ev_matrix(const FinAlgebraData& h, int n) {
  const std::size_t d = h.dim, ln = ipow(d, n);
  Mat m(h.field, ln, d * ln);
  for (std::size_t x = 0; x < d; ++x)
    if (!h.unit[x].is_zero())
      for (std::size_t t = 0; t < ln; ++t) m.set(t, x * ln + t, h.unit[x]);
  return m;
}

Mat lift_matrix(const FinAlgebraData& a, int n) {
  const std::size_t d = a.dim, ln = ipow(d, n);
  Mat m(a.field, d * ln, ln);
  for (std::size_t b = 0; b < ln; ++b) {
    auto bt = index_tuple(b, d, n);
    std::vector<std::pair<Vec, std::pair<std::size_t, Scalar>>> states{{a.unit, {0, a.field.one()}}};
    for (int i = 0; i < n; ++i) {
      decltype(states) next;
      for (const auto& [prod, qc] : states)
        for (const auto& [pq, e] : a.delta().column(bt[i]))
          next.push_back({a.product(prod, a.basis(pq / d)), {qc.first * d + pq % d, qc.second * e}});
      states = std::move(next);
    }
    for (const auto& [prod, qc] : states)
      for (std::size_t y = 0; y < d; ++y)
        if (!prod[y].is_zero()) m.add_to(y * ln + b, qc.first, qc.second * prod[y]);
  }
  return m;
}

Mat proj_matrix(const FinAlgebraData& a, int n) {
  const std::size_t d = a.dim, ln = ipow(d, n);
  const Vec& eps = a.augmentation_form();
  Mat m(a.field, ln, d * ln);
  for (std::size_t y = 0; y < d; ++y)
    if (!eps[y].is_zero())
      for (std::size_t t = 0; t < ln; ++t) m.set(t, y * ln + t, eps[y]);
  return m;
}

CobarOperad::CobarOperad(const FinAlgebraData& h, int max_arity)
    : OperadSlice(h.field, 1, h.dim, max_arity, "Cobar"), h_(h) {
  h.delta();
  for (int n = 0; n <= max_arity; ++n) ext_.push_back(ext_matrix(h, n));
  id_ = h.unit;
  mu_ = kron(col(h.field, h.unit), col(h.field, h.unit)).column_dense(0);
  e_ = Vec{h.field.one()};
}

CobarOperad::CobarOperad(const FinAlgebraData& h, const Vec& delta, int max_arity) : CobarOperad(h, max_arity) {
  name_ = "Cobar (Connes-Moscovici)";
  require_involution(h, {delta, h.unit, hopf::Convention::connes_moscovici});
  for (int n = 0; n <= max_arity; ++n) tau_.push_back(cm_tau(h, delta, h.unit, n));
}

Vec CobarOperad::tau(int n, const Vec& f) const {
  if (tau_.empty()) return OperadSlice::tau(n, f);
  check_arity(n);
  return tau_[n].apply(f);
}

Mat CobarOperad::substitution(int n, const Vec& g) const { return reshape(field_, leaf_, n, ext_[n].apply(g)); }

DualBarOperad::DualBarOperad(const FinAlgebraData& a, int max_arity)
    : OperadSlice(a.field, 1, a.dim, max_arity, "DualBar"), a_(a) {
  a.delta();
  for (int n = 0; n <= max_arity; ++n) lift_.push_back(lift_matrix(a, n));
  const Vec& eps = a.augmentation_form();
  id_ = eps;
  mu_ = zero_vec(a.field, a.dim * a.dim);
  for (std::size_t x = 0; x < a.dim; ++x)
    for (std::size_t y = 0; y < a.dim; ++y) mu_[x * a.dim + y] = dot(eps, a.basis_product(x, y));
  e_ = Vec{a.field.one()};
}

DualBarOperad::DualBarOperad(const FinAlgebraData& a, const Vec& sigma, int max_arity) : DualBarOperad(a, max_arity) {
  name_ = "DualBar (Khalkhali-Rangipour)";
  if (!hopf::is_group_like(a, sigma)) throw CheckFailed("sigma is not group-like");
  if (!s2_is_conjugation(a, sigma)) throw CheckFailed("S^2 is not conjugation by sigma");
  for (int n = 0; n <= max_arity; ++n) tau_.push_back(kr_t(a, a.eps(), sigma, n).transpose());
}

Vec DualBarOperad::tau(int n, const Vec& f) const {
  if (tau_.empty()) return OperadSlice::tau(n, f);
  check_arity(n);
  return tau_[n].apply(f);
}

Mat DualBarOperad::substitution(int n, const Vec& g) const { return reshape(field_, leaf_, n, lift_[n].apply(g)); }

CosimplicialModule SimplicialModule::dual() const { return transpose_simplicial(field, dims, faces, degeneracies, t); }

CosimplicialModule cobar_complex(const FinAlgebraData& c, int N) { return cobar_module(c, c.unit, N); }

SimplicialModule bar_complex(const FinAlgebraData& a, int N) { return bar_module(a, a.augmentation_form(), N); }

CosimplicialModule dual_bar_complex(const FinAlgebraData& a, int N) { return bar_complex(a, N).dual(); }

std::vector<Subquotient> cotor(const FinAlgebraData& c, int D) { return cohomology(cobar_complex(c, D + 1), D); }

std::vector<Subquotient> ext(const FinAlgebraData& a, int D) { return cohomology(dual_bar_complex(a, D + 1), D); }

std::vector<Vec> primitives(const FinAlgebraData& c) {
  const Field& f = c.field;
  Mat one = col(f, c.unit), id = eye(f, c.dim);
  return kernel(c.delta() - kron(id, one) - kron(one, id));
}

std::vector<Vec> derivations_to_ground(const FinAlgebraData& a) {
  const std::size_t d = a.dim;
  const Vec& eps = a.augmentation_form();
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vec r = a.basis_product(x, y);
      r[x] -= eps[y];
      r[y] -= eps[x];
      rows.push_back(r);
    }
  return kernel(Mat::from_rows(a.field, rows, d));
}

CosimplicialModule cm_cocyclic(const FinAlgebraData& h, const hopf::ModularPair& mp, int N) {
  hopf::ModularPair cm{mp.delta, mp.sigma, hopf::Convention::connes_moscovici};
  require_involution(h, cm);
  CosimplicialModule m = cobar_module(h, mp.sigma, N);
  for (int n = 0; n <= N; ++n) m.tau.push_back(cm_tau(h, mp.delta, mp.sigma, n));
  return m;
}

SimplicialModule kr_cyclic(const FinAlgebraData& k, const hopf::ModularPair& mp, int N) {
  hopf::ModularPair kr{mp.delta, mp.sigma, hopf::Convention::khalkhali_rangipour};
  require_involution(k, kr);
  SimplicialModule m = bar_module(k, mp.delta, N);
  for (int n = 0; n <= N; ++n) m.t.push_back(kr_t(k, mp.delta, mp.sigma, n));
  return m;
}

CheckReport psi_duality(const FinAlgebraData& k, const hopf::ModularPair& kr_pair, int N) {
  CheckReport rep;
  FinAlgebraData c = hopf::dualize(k);
  hopf::ModularPair kr{kr_pair.delta, kr_pair.sigma, hopf::Convention::khalkhali_rangipour};
  hopf::ModularPair cm{kr_pair.sigma, kr_pair.delta, hopf::Convention::connes_moscovici};
  bool kr_ok = hopf::check_modular_pair_involution(k, kr).all_pass();
  bool cm_ok = hopf::check_modular_pair_involution(c, cm).all_pass();
  rep.add("(δ,σ) in involution for K iff (ev_σ,δ) in involution for K^∨", kr_ok == cm_ok,
          kr_ok ? "K side passes, dual side fails" : "dual side passes, K side fails");
  auto diff = first_difference(hopf::tau_one(c, cm), hopf::tau_one(k, kr).transpose());
  rep.add("tau_1 = t_1^∨", !diff, diff ? "entry " + std::to_string(diff->second) + "," + std::to_string(diff->first) : "");
  if (!kr_ok || !cm_ok) return rep;
  CosimplicialModule lhs = cm_cocyclic(c, cm, N);
  CosimplicialModule rhs = kr_cyclic(k, kr, N).dual();
  rep.append(check_cosimplicial_morphism(lhs, rhs, identities(c.field, lhs.dims)), "psi: ");
  rep.append(check_cosimplicial(lhs), "Connes-Moscovici module: ");
  return rep;
}

InclusionMaps cotor_inclusion(const FinAlgebraData& c, int N) {
  InclusionMaps out;
  for (int n = 0; n <= N; ++n) {
    out.inclusion.push_back(ext_matrix(c, n));
    out.retraction.push_back(ev_matrix(c, n));
  }
  std::string w;
  for (int n = 0; n <= N && w.empty(); ++n)
    if (out.retraction[n] * out.inclusion[n] != eye(c.field, ipow(c.dim, n))) w = degree_witness(n);
  out.checks.add("ev∘ext = id", w.empty(), w);
  CobarOperad cobar(c, N);
  hochschild::CoEndOperad coend(c, N);
  out.checks.append(operad::check_operad_morphism(cobar, coend, out.inclusion), "ext: ");
  CosimplicialModule omega = cobar_complex(c, N);
  std::string wd, wr;
  for (int n = 0; n < N; ++n) {
    if (wd.empty() && operad::differential(cobar, n) != omega.differential(n)) wd = degree_witness(n);
    if (wr.empty() && out.retraction[n + 1] * operad::differential(coend, n) != omega.differential(n) * out.retraction[n])
      wr = degree_witness(n);
  }
  out.checks.add("cobar operad complex is the cobar construction", wd.empty(), wd);
  out.checks.add("ev is a cochain map", wr.empty(), wr);
  return out;
}

InclusionMaps ext_inclusion(const FinAlgebraData& a, int N) {
  InclusionMaps out;
  for (int n = 0; n <= N; ++n) {
    out.inclusion.push_back(lift_matrix(a, n));
    out.retraction.push_back(proj_matrix(a, n));
  }
  std::string w;
  for (int n = 0; n <= N && w.empty(); ++n)
    if (out.retraction[n] * out.inclusion[n] != eye(a.field, ipow(a.dim, n))) w = degree_witness(n);
  out.checks.add("proj∘lift = id", w.empty(), w);
  DualBarOperad bar(a, N);
  hochschild::EndOperad end(a, N);
  out.checks.append(operad::check_operad_morphism(bar, end, out.inclusion), "lift: ");
  CosimplicialModule dual = dual_bar_complex(a, N);
  std::string wd, wr;
  for (int n = 0; n < N; ++n) {
    if (wd.empty() && operad::differential(bar, n) != dual.differential(n)) wd = degree_witness(n);
    if (wr.empty() && out.retraction[n + 1] * operad::differential(end, n) != dual.differential(n) * out.retraction[n])
      wr = degree_witness(n);
  }
  out.checks.add("dual bar operad complex is the dual bar construction", wd.empty(), wd);
  out.checks.add("proj is a cochain map", wr.empty(), wr);
  return out;
}

DualityMaps duality_maps(const FinAlgebraData& c, int N) {
  DualityMaps out;
  FinAlgebraData a = hopf::dualize(c);
  const std::size_t d = c.dim;
  for (int n = 0; n <= N; ++n) {
    // In dual bases f^∨ and the product form Π φ_i(c_i) keep the coordinates of f and c.
    out.gamma.push_back(eye(c.field, d * ipow(d, n)));
    out.phi.push_back(eye(c.field, ipow(d, n)));
  }
  hochschild::CoEndOperad coend(c, N);
  hochschild::EndOperad end(a, N);
  CobarOperad cobar(c, N);
  DualBarOperad bar(a, N);
  out.checks.append(operad::check_operad_morphism(coend, end, out.gamma), "Gamma: ");
  out.checks.append(operad::check_operad_morphism(cobar, bar, out.phi), "phi: ");
  std::string wi, ws, wt;
  for (int n = 0; n <= N; ++n) {
    if (wi.empty() && (rank(out.phi[n]) != ipow(d, n) || rank(out.gamma[n]) != d * ipow(d, n))) wi = degree_witness(n);
    if (ws.empty() && proj_matrix(a, n) * out.gamma[n] != out.phi[n] * ev_matrix(c, n)) ws = degree_witness(n);
    if (wt.empty() && out.gamma[n] * ext_matrix(c, n) != lift_matrix(a, n) * out.phi[n]) wt = degree_witness(n);
  }
  out.checks.add("phi and Gamma are isomorphisms", wi.empty(), wi);
  out.checks.add("C*(A,ε)∘Gamma = phi∘C*(C,η)", ws.empty(), ws);
  out.checks.add("Gamma∘ext = lift∘phi", wt.empty(), wt);
  return out;
}

HopfCyclicReport hopf_cyclic(const FinAlgebraData& h, const hopf::ModularPair& mp, int D,
                             const operad::RingOptions& opt) {
  HopfCyclicReport rep;
  rep.convention = mp.convention;
  auto mpi = hopf::check_modular_pair_involution(h, mp);
  rep.checks.append(mpi, "modular pair: ");
  if (!mpi.all_pass()) {
    rep.bracket_note = "not a modular pair in involution";
    return rep;
  }
  const bool cm = mp.convention == hopf::Convention::connes_moscovici;
  CosimplicialModule module = cm ? cm_cocyclic(h, mp, D + 1) : kr_cyclic(h, mp, D + 1).dual();
  rep.checks.append(check_cosimplicial(module), "cocyclic module: ");
  rep.complex = lambda_complex(module, D);
  for (const auto& s : rep.complex.cohomology) rep.betti.push_back(s.dim());

  const bool bracket_ok = cm ? mp.sigma == h.unit : mp.delta == h.eps();
  if (!bracket_ok) {
    rep.bracket_note = cm ? "bracket needs sigma = 1 for Connes-Moscovici pairs"
                          : "bracket needs delta = counit for Khalkhali-Rangipour pairs";
    return rep;
  }
  std::unique_ptr<operad::OperadSlice> op;
  if (cm)
    op = std::make_unique<CobarOperad>(h, mp.delta, D + 1);
  else
    op = std::make_unique<DualBarOperad>(h, mp.sigma, D + 1);
  CosimplicialModule from_op = cosimplicial_from_operad(*op, D + 1);
  auto same = check_cosimplicial_morphism(from_op, module, identities(h.field, module.dims));
  rep.checks.add("cocyclic module comes from the cyclic operad", same.all_pass(), same.first_failure());
  rep.checks.append(operad::check_operad_axioms(*op), "cyclic operad: ");
  rep.lie = operad::lambda_cohomology(*op, D);
  rep.checks.append(rep.lie->checks, "HC bracket: ");
  rep.bv = operad::cohomology_ring(*op, D, opt);
  rep.checks.append(rep.bv->checks, cm ? "Cotor BV: " : "Ext BV: ");
  return rep;
}

}  // namespace bvkit::barcobar
