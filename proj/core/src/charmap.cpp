#include "bvkit/charmap.hpp"

#include <memory>
#include <utility>

#include "bvkit/error.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/tensor.hpp"

namespace bvkit::charmap {

using hopf::FinAlgebraData;

namespace {

void require_kind(const ActionData& act, ActionKind k) {
  if (act.kind != k)
    throw InvalidInput(k == ActionKind::module ? "expected a module action" : "expected a comodule coaction");
}

void require_shape(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act) {
  if (h.field != a.field || act.map.field() != a.field) throw FieldMismatch();
  bool ok = act.kind == ActionKind::module
                ? act.map.rows() == a.dim && act.map.cols() == h.dim * a.dim
                : act.map.rows() == a.dim * h.dim && act.map.cols() == a.dim;
  if (!ok) throw DimensionMismatch("action matrix has the wrong shape");
}

// h·v for a basis element h
Vec act_on(const FinAlgebraData& a, const ActionData& act, std::size_t h, const Vec& v) {
  Vec out = zero_vec(a.field, a.dim);
  for (std::size_t c = 0; c < a.dim; ++c)
    if (!v[c].is_zero()) axpy(v[c], act.map.column_dense(h * a.dim + c), out);
  return out;
}

Vec act_vec(const FinAlgebraData& a, const ActionData& act, const Vec& h, const Vec& v) {
  Vec out = zero_vec(a.field, a.dim);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (!h[k].is_zero()) axpy(h[k], act_on(a, act, k, v), out);
  return out;
}

// Expansion of a_1^{(1)}...a_n^{(1)} ⊗ a_1^{(2)} ⊗ ... ⊗ a_n^{(2)}.
struct CoactState {
  Vec prod;
  std::size_t tail;
  Scalar coef;
};

std::vector<CoactState> coact_tuple(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act,
                                    const std::vector<std::size_t>& at) {
  std::vector<CoactState> states{{a.unit, 0, a.field.one()}};
  for (auto ai : at) {
    std::vector<CoactState> next;
    for (const auto& s : states)
      for (const auto& [pk, e] : act.map.column(ai)) {
        std::size_t p = pk / h.dim, k = pk % h.dim;
        next.push_back({a.product(s.prod, a.basis(p)), s.tail * h.dim + k, s.coef * e});
      }
    states = std::move(next);
  }
  return states;
}

std::string names(const FinAlgebraData& x, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + x.basis_names[i];
  return s;
}

}  // namespace

ActionData regular_coaction(const FinAlgebraData& h) { return {ActionKind::comodule, h.delta()}; }

ActionData adjoint_action(const FinAlgebraData& h) {
  const std::size_t d = h.dim;
  Mat m(h.field, d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vec out = zero_vec(h.field, d);
      for (const auto& [pq, e] : h.delta().column(x))
        axpy(e, h.product(h.basis_product(pq / d, y), h.S().column_dense(pq % d)), out);
      m.set_column(x * d + y, out);
    }
  return {ActionKind::module, m};
}

ActionData trivial_action(const FinAlgebraData& h, const FinAlgebraData& a) {
  Mat m(a.field, a.dim, h.dim * a.dim);
  for (std::size_t x = 0; x < h.dim; ++x)
    for (std::size_t y = 0; y < a.dim; ++y) m.set(y, x * a.dim + y, h.eps()[x]);
  return {ActionKind::module, m};
}

ActionData trivial_coaction(const FinAlgebraData& h, const FinAlgebraData& a) {
  Mat m(a.field, a.dim * h.dim, a.dim);
  for (std::size_t y = 0; y < a.dim; ++y)
    for (std::size_t k = 0; k < h.dim; ++k)
      if (!h.unit[k].is_zero()) m.set(y * h.dim + k, y, h.unit[k]);
  return {ActionKind::comodule, m};
}

ActionData coaction_to_action(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act) {
  require_kind(act, ActionKind::comodule);
  require_shape(h, a, act);
  Mat m(a.field, a.dim, h.dim * a.dim);
  for (std::size_t y = 0; y < a.dim; ++y)
    for (const auto& [pk, e] : act.map.column(y)) m.add_to(pk / h.dim, (pk % h.dim) * a.dim + y, e);
  return {ActionKind::module, m};
}

CheckReport check_action(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act) {
  require_shape(h, a, act);
  CheckReport rep;
  const Field& F = a.field;
  const std::size_t dh = h.dim, da = a.dim;
  if (act.kind == ActionKind::module) {
    std::string w;
    for (std::size_t x = 0; x < dh && w.empty(); ++x)
      for (std::size_t y = 0; y < dh && w.empty(); ++y)
        for (std::size_t c = 0; c < da && w.empty(); ++c)
          if (act_vec(a, act, h.basis_product(x, y), a.basis(c)) != act_on(a, act, x, act_on(a, act, y, a.basis(c))))
            w = names(h, {x, y}) + " on " + a.basis_names[c];
    rep.add("(hk)·a = h·(k·a)", w.empty(), w);
    w.clear();
    for (std::size_t c = 0; c < da && w.empty(); ++c)
      if (act_vec(a, act, h.unit, a.basis(c)) != a.basis(c)) w = a.basis_names[c];
    rep.add("1·a = a", w.empty(), w);
    w.clear();
    for (std::size_t x = 0; x < dh && w.empty(); ++x)
      for (std::size_t p = 0; p < da && w.empty(); ++p)
        for (std::size_t q = 0; q < da && w.empty(); ++q) {
          Vec lhs = act_on(a, act, x, a.basis_product(p, q));
          Vec rhs = zero_vec(F, da);
          for (const auto& [uv, e] : h.delta().column(x))
            axpy(e, a.product(act_on(a, act, uv / dh, a.basis(p)), act_on(a, act, uv % dh, a.basis(q))), rhs);
          if (lhs != rhs) w = h.basis_names[x] + " on " + names(a, {p, q});
        }
    rep.add("h·(ab) = (h^{(1)}·a)(h^{(2)}·b)", w.empty(), w);
    w.clear();
    for (std::size_t x = 0; x < dh && w.empty(); ++x)
      if (act_on(a, act, x, a.unit) != scale(h.eps()[x], a.unit)) w = h.basis_names[x];
    rep.add("h·1 = ε(h)1", w.empty(), w);
    return rep;
  }
  const Mat& rho = act.map;
  auto diff = first_difference(kron(rho, Mat::identity(F, dh)) * rho, kron(Mat::identity(F, da), h.delta()) * rho);
  rep.add("coassociative", !diff, diff ? a.basis_names[diff->first] : "");
  Mat eps_row = Mat::from_rows(F, {h.eps()}, dh);
  diff = first_difference(kron(Mat::identity(F, da), eps_row) * rho, Mat::identity(F, da));
  rep.add("counital", !diff, diff ? a.basis_names[diff->first] : "");
  std::string w;
  for (std::size_t p = 0; p < da && w.empty(); ++p)
    for (std::size_t q = 0; q < da && w.empty(); ++q) {
      Vec lhs = rho.apply(a.basis_product(p, q));
      Vec rhs = zero_vec(F, da * dh);
      for (const auto& [uk, e] : rho.column(p))
        for (const auto& [vl, f] : rho.column(q)) {
          Vec x = a.basis_product(uk / dh, vl / dh), y = h.basis_product(uk % dh, vl % dh);
          for (std::size_t i = 0; i < da; ++i)
            if (!x[i].is_zero())
              for (std::size_t j = 0; j < dh; ++j)
                if (!y[j].is_zero()) rhs[i * dh + j] += e * f * x[i] * y[j];
        }
      if (lhs != rhs) w = names(a, {p, q});
    }
  rep.add("rho(ab) = rho(a)rho(b)", w.empty(), w);
  Vec one_one = zero_vec(F, da * dh);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dh; ++j) one_one[i * dh + j] = a.unit[i] * h.unit[j];
  rep.add("rho(1) = 1⊗1", rho.apply(a.unit) == one_one);
  return rep;
}

std::vector<Mat> phi_module(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act, int N) {
  require_kind(act, ActionKind::module);
  require_shape(h, a, act);
  const std::size_t dh = h.dim, da = a.dim;
  std::vector<Mat> out;
  for (int n = 0; n <= N; ++n) {
    const std::size_t hn = ipow(dh, n), an = ipow(da, n);
    Mat m(a.field, da * an, hn);
    for (std::size_t hc = 0; hc < hn; ++hc) {
      auto ht = index_tuple(hc, dh, n);
      Vec col = zero_vec(a.field, da * an);
      std::vector<std::size_t> at(n, 0);
      std::size_t ac = 0;
      do {
        Vec p = a.unit;
        for (int i = 0; i < n && !is_zero(p); ++i) p = a.product(p, act_on(a, act, ht[i], a.basis(at[i])));
        for (std::size_t y = 0; y < da; ++y) col[y * an + ac] = p[y];
        ++ac;
      } while (next_tuple(at, da));
      m.set_column(hc, col);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> phi_comodule(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act, int N) {
  require_kind(act, ActionKind::comodule);
  require_shape(h, a, act);
  const std::size_t dh = h.dim, da = a.dim;
  std::vector<Mat> out;
  for (int n = 0; n <= N; ++n) {
    const std::size_t hn = ipow(dh, n), an = ipow(da, n);
    Mat m(a.field, da * an, hn);
    std::vector<std::size_t> at(n, 0);
    std::size_t ac = 0;
    do {
      for (const auto& s : coact_tuple(h, a, act, at))
        for (std::size_t y = 0; y < da; ++y)
          if (!s.prod[y].is_zero()) m.add_to(y * an + ac, s.tail, s.coef * s.prod[y]);
      ++ac;
    } while (next_tuple(at, da));
    out.push_back(std::move(m));
  }
  return out;
}

Vec dual_right_integral(const FinAlgebraData& h) {
  const std::size_t d = h.dim;
  Mat eq(h.field, d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& [pq, e] : h.delta().column(k)) eq.add_to(k * d + pq % d, pq / d, e);
    for (std::size_t q = 0; q < d; ++q)
      if (!h.unit[q].is_zero()) eq.add_to(k * d + q, k, -h.unit[q]);
  }
  auto ker = kernel(eq);
  if (ker.size() != 1) throw CheckFailed("space of right integrals of the dual has dimension " + std::to_string(ker.size()));
  return ker[0];
}

TraceData integral_trace(const FinAlgebraData& h, const Vec& sigma) {
  if (!hopf::is_group_like(h, sigma)) throw InvalidInput("sigma is not group-like");
  Vec lambda = dual_right_integral(h);
  Mat by_inverse = h.left_mult(h.S().apply(sigma));
  return {by_inverse.transpose().apply(lambda), sigma};
}

CheckReport check_trace(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act,
                        const TraceData& tr) {
  require_shape(h, a, act);
  if (tr.tau.size() != a.dim) throw DimensionMismatch("trace has the wrong length");
  CheckReport rep;
  const Field& F = a.field;
  std::string w;
  for (std::size_t p = 0; p < a.dim && w.empty(); ++p)
    for (std::size_t q = p + 1; q < a.dim && w.empty(); ++q)
      if (dot(tr.tau, a.basis_product(p, q)) != dot(tr.tau, a.basis_product(q, p))) w = names(a, {p, q});
  rep.add("tau(ab) = tau(ba)", w.empty(), w);
  rep.add("nondegenerate", hopf::is_nondegenerate_form(a, tr.tau));
  w.clear();
  if (act.kind == ActionKind::comodule) {
    rep.append(hopf::check_modular_pair_involution(h, {h.eps(), tr.datum, hopf::Convention::khalkhali_rangipour}),
               "modular pair: ");
    for (std::size_t c = 0; c < a.dim && w.empty(); ++c) {
      Vec lhs = zero_vec(F, h.dim);
      for (const auto& [pk, e] : act.map.column(c)) lhs[pk % h.dim] += e * tr.tau[pk / h.dim];
      if (lhs != scale(tr.tau[c], tr.datum)) w = a.basis_names[c];
    }
    rep.add("tau(a^{(1)}) a^{(2)} = tau(a) sigma", w.empty(), w);
  } else {
    rep.append(hopf::check_modular_pair_involution(h, {tr.datum, h.unit, hopf::Convention::connes_moscovici}),
               "modular pair: ");
    for (std::size_t x = 0; x < h.dim && w.empty(); ++x)
      for (std::size_t c = 0; c < a.dim && w.empty(); ++c)
        if (dot(tr.tau, act_on(a, act, x, a.basis(c))) != tr.datum[x] * tr.tau[c]) w = h.basis_names[x] + " on " + a.basis_names[c];
    rep.add("tau(h·a) = delta(h) tau(a)", w.empty(), w);
  }
  return rep;
}

barcobar::SimplicialModule hochschild_cyclic(const FinAlgebraData& a, int N) {
  const Field& F = a.field;
  const std::size_t d = a.dim;
  auto eye = [&](std::size_t n) { return Mat::identity(F, n); };
  barcobar::SimplicialModule m;
  m.field = F;
  for (int n = 0; n <= N; ++n) m.dims.push_back(ipow(d, n + 1));
  for (int n = 0; n < N; ++n) {
    std::vector<Mat> fs;
    for (int i = 0; i <= n; ++i) fs.push_back(kron(kron(eye(ipow(d, i)), a.mult), eye(ipow(d, n - i))));
    // a_{n+1} a_0 ⊗ a_1 ⊗ ... ⊗ a_n
    const std::size_t mid = ipow(d, n), src = ipow(d, n + 2);
    Mat last(F, ipow(d, n + 1), src);
    for (std::size_t idx = 0; idx < src; ++idx) {
      std::size_t a0 = idx / (mid * d), rest = (idx / d) % mid, an = idx % d;
      for (const auto& [z, e] : a.mult.column(an * d + a0)) last.add_to(z * mid + rest, idx, e);
    }
    fs.push_back(std::move(last));
    m.faces.push_back(std::move(fs));
  }
  Mat unit = Mat::from_columns(F, d, {a.unit});
  for (int n = 0; n <= N; ++n) {
    std::vector<Mat> ss;
    for (int i = 0; i < n; ++i) ss.push_back(kron(kron(eye(ipow(d, i + 1)), unit), eye(ipow(d, n - 1 - i))));
    m.degeneracies.push_back(std::move(ss));
    const std::size_t sz = ipow(d, n + 1), head = ipow(d, n);
    Mat t(F, sz, sz);
    for (std::size_t idx = 0; idx < sz; ++idx) t.set((idx % d) * head + idx / d, idx, F.one());
    m.t.push_back(std::move(t));
  }
  return m;
}

std::vector<Mat> gamma_chain(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act, const Vec& tau,
                             int N) {
  require_kind(act, ActionKind::comodule);
  require_shape(h, a, act);
  const std::size_t dh = h.dim, da = a.dim;
  std::vector<Mat> out;
  for (int n = 0; n <= N; ++n) {
    const std::size_t an = ipow(da, n);
    Mat g(a.field, ipow(dh, n), da * an);
    std::vector<std::size_t> at(n, 0);
    std::size_t ac = 0;
    do {
      auto states = coact_tuple(h, a, act, at);
      for (std::size_t a0 = 0; a0 < da; ++a0)
        for (const auto& s : states) {
          Scalar v = s.coef * dot(tau, a.product(a.basis(a0), s.prod));
          if (!v.is_zero()) g.add_to(s.tail, a0 * an + ac, v);
        }
      ++ac;
    } while (next_tuple(at, da));
    out.push_back(std::move(g));
  }
  return out;
}

CharacteristicReport characteristic_map(const FinAlgebraData& h, const FinAlgebraData& a, const ActionData& act,
                                        const TraceData& tr, int D, const CharacteristicOptions& opt) {
  if (D < 0) throw InvalidInput("max degree must be nonnegative");
  CharacteristicReport rep;
  rep.kind = act.kind;
  rep.checks.append(check_action(h, a, act), "action: ");
  rep.checks.append(check_trace(h, a, act, tr), "trace: ");
  if (!rep.checks.all_pass()) return rep;
  const int N = D + 1;
  const bool module = act.kind == ActionKind::module;

  hochschild::EndOperad end = hochschild::frobenius_cyclic(a, hopf::frobenius_from_form(a, tr.tau), N);
  std::unique_ptr<operad::OperadSlice> src;
  CosimplicialModule src_module;
  if (module) {
    src = std::make_unique<barcobar::CobarOperad>(h, tr.datum, N);
    src_module = barcobar::cm_cocyclic(h, {tr.datum, h.unit, hopf::Convention::connes_moscovici}, N);
    rep.phi = phi_module(h, a, act, N);
  } else {
    src = std::make_unique<barcobar::DualBarOperad>(h, tr.datum, N);
    src_module = barcobar::kr_cyclic(h, {h.eps(), tr.datum, hopf::Convention::khalkhali_rangipour}, N).dual();
    rep.phi = phi_comodule(h, a, act, N);
  }
  rep.checks.append(operad::check_operad_morphism(*src, end, rep.phi), "Phi: ");

  CosimplicialModule hoch = hochschild_cyclic(a, N).dual();
  std::vector<Mat> ad;
  for (int n = 0; n <= N; ++n) {
    ad.push_back(end.ad_theta(n));
    rep.chi.push_back(ad.back() * rep.phi[n]);
  }
  rep.checks.append(check_cosimplicial_morphism(cosimplicial_from_operad(end, N), hoch, ad), "Ad∘Theta: ");
  rep.checks.append(check_cosimplicial_morphism(src_module, hoch, rep.chi), "chi: ");
  if (!module) {
    rep.gamma = gamma_chain(h, a, act, tr.tau, N);
    std::string w;
    for (int n = 0; n <= N && w.empty(); ++n)
      if (rep.gamma[n].transpose() != rep.chi[n]) w = "degree " + std::to_string(n);
    rep.checks.add("gamma^∨ = Ad∘C*(A,Theta)∘Phi", w.empty(), w);
  }

  if (opt.cohomology) {
    auto s = operad::cohomology_ring(*src, D, opt.ring);
    auto t = operad::cohomology_ring(end, D, opt.ring);
    rep.checks.append(s.checks, module ? "Cotor: " : "Ext: ");
    rep.checks.append(t.checks, "HH: ");
    rep.on_cohomology = operad::induced_map(s, t, rep.phi);
    rep.checks.append(rep.on_cohomology->checks, "H(Phi): ");
  }
  auto ls = operad::lambda_cohomology(*src, D, opt.random_pairs);
  auto lt = operad::lambda_cohomology(end, D, opt.random_pairs);
  rep.checks.append(ls.checks, "Hopf cyclic: ");
  rep.checks.append(lt.checks, "HC_lambda: ");
  rep.on_cyclic = operad::induced_map(ls, lt, rep.phi);
  rep.checks.append(rep.on_cyclic->checks, "characteristic map: ");
  return rep;
}

}  // namespace bvkit::charmap
