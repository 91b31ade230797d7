#include "bvkit/fixtures.hpp"

#include <array>

#include "bvkit/error.hpp"

namespace bvkit::fixtures {

using hopf::FinAlgebraData;
using hopf::Level;

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < mul.size(); ++h)
    if (mul[g][h] == 0) return h;
  throw InvalidInput("group table without inverses");
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable t;
  for (std::size_t i = 0; i < n; ++i) t.names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  t.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.mul[i][j] = (i + j) % n;
  return t;
}

GroupTable symmetric_group_s3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0},
                                   Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
  GroupTable t;
  t.names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  t.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Perm c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      for (std::size_t r = 0; r < 6; ++r)
        if (perms[r] == c) t.mul[i][j] = r;
    }
  return t;
}

namespace {

FinAlgebraData empty(const Field& f, std::vector<std::string> names) {
  FinAlgebraData a;
  a.field = f;
  a.dim = names.size();
  a.basis_names = std::move(names);
  a.mult = Mat(f, a.dim, a.dim * a.dim);
  a.unit = zero_vec(f, a.dim);
  return a;
}

void with_coalgebra(FinAlgebraData& a) {
  a.comult = Mat(a.field, a.dim * a.dim, a.dim);
  a.counit = zero_vec(a.field, a.dim);
  a.antipode = Mat(a.field, a.dim, a.dim);
}

}  // namespace

FinAlgebraData group_algebra(const Field& f, const GroupTable& g) {
  std::size_t n = g.names.size();
  FinAlgebraData a = empty(f, g.names);
  with_coalgebra(a);
  a.unit[0] = f.one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.mult.set(g.mul[i][j], i * n + j, f.one());
    a.comult->set(i * n + i, i, f.one());
    (*a.counit)[i] = f.one();
    a.antipode->set(g.inverse(i), i, f.one());
  }
  return a;
}

FinAlgebraData dual_group_algebra(const Field& f, const GroupTable& g) {
  std::size_t n = g.names.size();
  std::vector<std::string> names;
  for (const auto& s : g.names) names.push_back("d_" + s);
  FinAlgebraData a = empty(f, names);
  with_coalgebra(a);
  for (std::size_t i = 0; i < n; ++i) {
    a.mult.set(i, i * n + i, f.one());
    a.unit[i] = f.one();
    for (std::size_t j = 0; j < n; ++j) a.comult->set(i * n + j, g.mul[i][j], f.one());
    a.antipode->set(g.inverse(i), i, f.one());
  }
  (*a.counit)[0] = f.one();
  return a;
}

FinAlgebraData sweedler(const Field& f) {
  if (f.characteristic() == 2) throw InvalidInput("the Sweedler algebra needs characteristic different from 2");
  FinAlgebraData a = empty(f, {"1", "g", "x", "gx"});
  with_coalgebra(a);
  // basis element g^a x^b has index a + 2b
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t ga = i % 2, xb = i / 2, gc = j % 2, xd = j / 2;
      if (xb + xd >= 2) continue;
      int sign = (xb * gc) % 2 ? -1 : 1;
      a.mult.set((ga + gc) % 2 + 2 * (xb + xd), i * 4 + j, f.from_int(sign));
    }
  a.unit[0] = f.one();
  Scalar one = f.one();
  a.comult->set(0 * 4 + 0, 0, one);
  a.comult->set(1 * 4 + 1, 1, one);
  a.comult->set(2 * 4 + 0, 2, one);  // x⊗1
  a.comult->set(1 * 4 + 2, 2, one);  // g⊗x
  a.comult->set(3 * 4 + 1, 3, one);  // gx⊗g
  a.comult->set(0 * 4 + 3, 3, one);  // 1⊗gx
  (*a.counit)[0] = one;
  (*a.counit)[1] = one;
  a.antipode->set(0, 0, one);
  a.antipode->set(1, 1, one);
  a.antipode->set(3, 2, -one);
  a.antipode->set(2, 3, one);
  return a;
}

FinAlgebraData exterior_x(const Field& f) {
  FinAlgebraData a = truncated_x2(f);
  a.augmentation.reset();
  with_coalgebra(a);
  Scalar one = f.one();
  a.comult->set(0, 0, one);
  a.comult->set(2, 1, one);  // x⊗1
  a.comult->set(1, 1, one);  // 1⊗x
  (*a.counit)[0] = one;
  a.antipode->set(0, 0, one);
  a.antipode->set(1, 1, -one);
  return a;
}

FinAlgebraData trivial(const Field& f) {
  FinAlgebraData a = empty(f, {"1"});
  with_coalgebra(a);
  a.mult.set(0, 0, f.one());
  a.unit[0] = f.one();
  a.comult->set(0, 0, f.one());
  (*a.counit)[0] = f.one();
  a.antipode->set(0, 0, f.one());
  return a;
}

FinAlgebraData truncated_x2(const Field& f) {
  FinAlgebraData a = empty(f, {"1", "x"});
  a.mult.set(0, 0, f.one());
  a.mult.set(1, 1, f.one());
  a.mult.set(1, 2, f.one());
  a.unit[0] = f.one();
  a.augmentation = unit_vec(f, 2, 0);
  return a;
}

std::vector<std::string> builtin_names() {
  return {"group_z2",      "group_z3",      "group_s3",    "dual_group_z2", "dual_group_z3",
          "dual_group_s3", "sweedler_h4",   "exterior_x",  "trivial",       "truncated_x2"};
}

Fixture builtin(const std::string& name, std::optional<Field> field) {
  Field f = field.value_or(Field::rationals());
  Fixture fx;
  fx.name = name;
  fx.level = Level::hopf;
  if (name == "group_z2") {
    fx.data = group_algebra(f, cyclic_group(2));
  } else if (name == "group_z3") {
    fx.data = group_algebra(f, cyclic_group(3));
  } else if (name == "group_s3") {
    fx.data = group_algebra(f, symmetric_group_s3());
  } else if (name == "dual_group_z2") {
    fx.data = dual_group_algebra(f, cyclic_group(2));
  } else if (name == "dual_group_z3") {
    fx.data = dual_group_algebra(f, cyclic_group(3));
  } else if (name == "dual_group_s3") {
    fx.data = dual_group_algebra(f, symmetric_group_s3());
  } else if (name == "sweedler_h4") {
    fx.data = sweedler(f);
  } else if (name == "exterior_x") {
    fx.data = exterior_x(f);
    if (f.characteristic() != 2) {
      fx.level = Level::algebra;
      fx.notes = "x primitive forces Delta(x)^2 = 2 x⊗x, so this is a bialgebra only in characteristic 2";
    }
  } else if (name == "trivial") {
    fx.data = trivial(f);
  } else if (name == "truncated_x2") {
    fx.data = truncated_x2(f);
    fx.level = Level::algebra;
  } else {
    throw InvalidInput("unknown builtin fixture '" + name + "'");
  }
  auto rep = hopf::certify(fx.data, fx.level);
  if (!rep.all_pass()) throw CheckFailed("fixture " + name + " fails " + rep.first_failure());
  if (fx.data.comult && fx.level == Level::algebra) fx.data.flags.coalgebra = hopf::check_axioms(fx.data, Level::coalgebra).all_pass();
  return fx;
}

}  // namespace bvkit::fixtures
