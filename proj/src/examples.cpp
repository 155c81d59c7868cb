#include "tatecoh/examples.hpp"

#include "tatecoh/error.hpp"

namespace tatecoh {

namespace {

std::string monomial(int i, int j) {
  auto power = [](const char* s, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(s) : std::string(s) + "^" + std::to_string(e);
  };
  std::string out = power("g", i) + power("x", j);
  return out.empty() ? "1" : out;
}

HopfAlgebra build_hopf(const Algebra& a, const std::vector<Vector>& coproducts, Vector counit, Matrix antipode) {
  const std::size_t n = a.dim();
  Coproduct delta(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n * n; ++p)
      if (!coproducts[i][p].is_zero()) delta[i].push_back({coproducts[i][p], p / n, p % n});
  return HopfAlgebra::create(a, std::move(delta), std::move(counit), std::move(antipode));
}

Vector simple_tensor(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  Vector out = zero_vector(a.field(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!x[i].is_zero() && !y[j].is_zero()) out[i * n + j] = x[i] * y[j];
  return out;
}

}  // namespace

HopfAlgebra taft(int n, const FieldDescriptor& f) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Taft algebras need N >= 2");
  if (f.characteristic() != 0 && n % f.characteristic() == 0)
    throw Error(ErrorCode::BadCharacteristic, "the characteristic divides N");
  const FieldElement w = primitive_root_of_unity(f, n);
  std::vector<FieldElement> wp{FieldElement::one(f)};
  for (int k = 1; k < n; ++k) wp.push_back(wp.back() * w);
  const std::size_t dim = static_cast<std::size_t>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i + n * j); };
  std::vector<SparseVector> table(dim * dim);
  std::vector<std::string> labels(dim);
  for (int j1 = 0; j1 < n; ++j1)
    for (int i1 = 0; i1 < n; ++i1) {
      labels[idx(i1, j1)] = monomial(i1, j1);
      for (int j2 = 0; j2 < n; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          if (j1 + j2 >= n) continue;
          // g^i1 x^j1 g^i2 x^j2 = w^(j1 i2) g^(i1+i2) x^(j1+j2)
          table[idx(i1, j1) * dim + idx(i2, j2)].push_back({idx((i1 + i2) % n, j1 + j2), wp[(j1 * i2) % n]});
        }
    }
  Algebra a = Algebra::create(f, labels, unit_vector(f, dim, 0), std::move(table));
  const Vector one = a.basis_vector(0), g = a.basis_vector(idx(1, 0)), x = a.basis_vector(idx(0, 1));
  const Vector ginv = a.basis_vector(idx(n - 1, 0));
  // Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g
  const Vector dg = simple_tensor(a, g, g);
  Vector dx = simple_tensor(a, one, x);
  {
    Vector t = simple_tensor(a, x, g);
    for (std::size_t p = 0; p < t.size(); ++p) dx[p] += t[p];
  }
  Vector sx = a.multiply(x, ginv);
  for (auto& c : sx) c = -c;
  std::vector<Vector> coproducts(dim);
  Vector counit(dim, FieldElement(f));
  Matrix antipode(f, dim, dim);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Vector d = simple_tensor(a, one, one);
      Vector s = one;
      for (int k = 0; k < i; ++k) d = tensor_square_multiply(a, d, dg);
      for (int k = 0; k < j; ++k) {
        d = tensor_square_multiply(a, d, dx);
        s = a.multiply(s, sx);
      }
      for (int k = 0; k < i; ++k) s = a.multiply(s, ginv);
      coproducts[idx(i, j)] = std::move(d);
      counit[idx(i, j)] = j == 0 ? FieldElement::one(f) : FieldElement(f);
      antipode.set_column(idx(i, j), s);
    }
  return build_hopf(a, coproducts, std::move(counit), std::move(antipode));
}

HopfAlgebra sweedler(const FieldDescriptor& f) {
  if (f.characteristic() == 2) throw Error(ErrorCode::BadCharacteristic, "the Sweedler algebra needs characteristic != 2");
  return taft(2, f);
}

HopfAlgebra cyclic_group_algebra(int n, const FieldDescriptor& f) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  const std::size_t dim = n;
  std::vector<SparseVector> table(dim * dim);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(monomial(i, 0));
    for (int j = 0; j < n; ++j) table[i * dim + j].push_back({static_cast<std::size_t>((i + j) % n), FieldElement::one(f)});
  }
  Algebra a = Algebra::create(f, labels, unit_vector(f, dim, 0), std::move(table));
  std::vector<Vector> coproducts;
  Matrix antipode(f, dim, dim);
  for (int i = 0; i < n; ++i) {
    coproducts.push_back(simple_tensor(a, a.basis_vector(i), a.basis_vector(i)));
    antipode(static_cast<std::size_t>((n - i) % n), i) = FieldElement::one(f);
  }
  return build_hopf(a, coproducts, Vector(dim, FieldElement::one(f)), std::move(antipode));
}

Algebra dual_numbers(const FieldDescriptor& f) {
  std::vector<SparseVector> table(4);
  const FieldElement one = FieldElement::one(f);
  table[0] = {{0, one}};
  table[1] = {{1, one}};
  table[2] = {{1, one}};
  return Algebra::create(f, {"1", "t"}, unit_vector(f, 2, 0), std::move(table));
}

HopfAlgebra dual_numbers_hopf(const FieldDescriptor& f) {
  if (f.kind() != FieldKind::PrimeField || f.characteristic() != 2)
    throw Error(ErrorCode::BadCharacteristic, "the dual numbers carry this Hopf structure over F_2 only");
  Algebra a = dual_numbers(f);
  const auto one = a.basis_vector(0), t = a.basis_vector(1);
  Vector dt = simple_tensor(a, t, one);
  Vector b = simple_tensor(a, one, t), c = simple_tensor(a, t, t);
  for (std::size_t p = 0; p < 4; ++p) dt[p] += b[p] + c[p];
  Matrix antipode = Matrix::identity(f, 2);
  return build_hopf(a, {simple_tensor(a, one, one), dt}, Vector{FieldElement::one(f), FieldElement(f)}, antipode);
}

std::vector<std::string> builtin_names() {
  return {"sweedler", "taft3", "taft3_f7", "kz2_f2", "kz3_q", "kz3_cyclo", "dual_f2", "dual_q"};
}

Input builtin(const std::string& name) {
  Input in;
  in.name = name;
  if (name == "sweedler") {
    in.hopf = sweedler(FieldDescriptor::rationals());
  } else if (name == "taft3") {
    in.hopf = taft(3, FieldDescriptor::cyclotomic(3));
  } else if (name == "taft3_f7") {
    in.hopf = taft(3, FieldDescriptor::prime(7));
  } else if (name == "kz2_f2") {
    in.hopf = cyclic_group_algebra(2, FieldDescriptor::prime(2));
  } else if (name == "kz3_q") {
    in.hopf = cyclic_group_algebra(3, FieldDescriptor::rationals());
  } else if (name == "kz3_cyclo") {
    in.hopf = cyclic_group_algebra(3, FieldDescriptor::cyclotomic(3));
  } else if (name == "dual_f2") {
    in.hopf = dual_numbers_hopf(FieldDescriptor::prime(2));
  } else if (name == "dual_q") {
    in.algebra = dual_numbers(FieldDescriptor::rationals());
    return in;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown builtin '" + name + "'");
  }
  in.algebra = in.hopf->algebra();
  return in;
}

}  // namespace tatecoh
