#include "sextic/quintic_ring.hpp"

#include <sstream>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

void check_index(std::size_t i, std::size_t j, std::size_t k) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || k > 4)
    throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
}

void check_size(const std::vector<Scalar>& v, std::size_t n, const char* what) {
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

QuinticRing::QuinticRing(ScalarRing ring) : ring_(ring), table_(50, Scalar::zero(ring)) {}

std::size_t QuinticRing::slot(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // Pairs (1,1),(1,2),…,(1,4),(2,2),…,(4,4).
  static constexpr std::size_t offset[5] = {0, 0, 4, 7, 9};
  return offset[i] + (j - i);
}

const Scalar& QuinticRing::c(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j, k);
  return table_[slot(i, j) * 5 + k];
}

void QuinticRing::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check_index(i, j, k);
  if (!(value.ring() == ring_)) throw Error(ErrorCode::MixedRings, "structure constant");
  table_[slot(i, j) * 5 + k] = value;
}

void QuinticRing::set(std::size_t i, std::size_t j, std::size_t k, long value) {
  set(i, j, k, Scalar(ring_, value));
}

Element QuinticRing::multiply(const Element& u, const Element& v) const {
  check_size(u, 5, "ring element");
  check_size(v, 5, "ring element");
  Element out(5, Scalar::zero(ring_));
  for (std::size_t i = 0; i < 5; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < 5; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar s = u[i] * v[j];
      if (i == 0) {
        out[j] += s;
      } else if (j == 0) {
        out[i] += s;
      } else {
        const std::size_t base = slot(i, j) * 5;
        for (std::size_t k = 0; k < 5; ++k) {
          if (!table_[base + k].is_zero()) out[k] += s * table_[base + k];
        }
      }
    }
  }
  return out;
}

Matrix QuinticRing::multiplication_matrix(const Element& u) const {
  Matrix m(ring_, 5, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    const Element col = multiply(u, basis_element(ring_, j));
    for (std::size_t i = 0; i < 5; ++i) m(i, j) = col[i];
  }
  return m;
}

QuinticRing QuinticRing::in(ScalarRing target) const {
  QuinticRing out(target);
  for (std::size_t p = 0; p < table_.size(); ++p) out.table_[p] = table_[p].in(target);
  return out;
}

bool QuinticRing::operator==(const QuinticRing& rhs) const {
  return ring_ == rhs.ring_ && table_ == rhs.table_;
}

std::string QuinticRing::to_string() const {
  std::ostringstream os;
  os << "QuinticRing over " << ring_.name() << " {";
  bool any = false;
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = i; j <= 4; ++j) {
      for (std::size_t k = 0; k <= 4; ++k) {
        if (c(i, j, k).is_zero()) continue;
        os << (any ? ", " : " ") << "c" << i << j << "^" << k << "=" << c(i, j, k);
        any = true;
      }
    }
  }
  os << " }";
  return os.str();
}

Element unit_element(const ScalarRing& ring) { return basis_element(ring, 0); }

Element basis_element(const ScalarRing& ring, std::size_t i) {
  Element e(5, Scalar::zero(ring));
  e.at(i) = Scalar::one(ring);
  return e;
}

Element lift(const LVector& x) {
  check_size(x, 4, "L vector");
  Element e;
  e.reserve(5);
  e.push_back(Scalar::zero(x[0].ring()));
  e.insert(e.end(), x.begin(), x.end());
  return e;
}

LVector l_part(const Element& u) {
  check_size(u, 5, "ring element");
  return LVector(u.begin() + 1, u.end());
}

std::vector<AssociativityViolation> check_associative(const QuinticRing& q) {
  std::vector<AssociativityViolation> bad;
  for (std::size_t i = 1; i <= 4; ++i) {
    const Element ei = basis_element(q.ring(), i);
    for (std::size_t j = 1; j <= 4; ++j) {
      const Element ej = basis_element(q.ring(), j);
      const Element eij = q.multiply(ei, ej);
      for (std::size_t k = 1; k <= 4; ++k) {
        const Element ek = basis_element(q.ring(), k);
        if (q.multiply(eij, ek) != q.multiply(ei, q.multiply(ej, ek))) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

std::vector<LVector> grid_set(const ScalarRing& ring) {
  std::vector<LVector> g;
  for (std::size_t i = 0; i < 4; ++i) {
    LVector v(4, Scalar::zero(ring));
    v[i] = Scalar::one(ring);
    g.push_back(v);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      LVector v(4, Scalar::zero(ring));
      v[i] = Scalar::one(ring);
      v[j] = Scalar::one(ring);
      g.push_back(v);
    }
  }
  return g;
}

Scalar triple_wedge(const QuinticRing& q, const LVector& x, const LVector& y, const LVector& z) {
  check_size(x, 4, "L vector");
  const LVector yz = l_part(q.multiply(lift(y), lift(z)));
  Matrix m(q.ring(), 4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    m(0, c) = x[c];
    m(1, c) = y[c];
    m(2, c) = z[c];
    m(3, c) = yz[c];
  }
  return determinant(m);
}

Scalar F_form(const QuinticRing& q, const std::array<LVector, 5>& g) {
  auto t = [&](const LVector& a, const LVector& b, const LVector& c) { return triple_wedge(q, a, b, c); };
  return t(g[0], g[1], g[2]) * t(g[0], g[3], g[4]) + t(g[0], g[1], g[3]) * t(g[0], g[4], g[2]) +
         t(g[0], g[1], g[4]) * t(g[0], g[2], g[3]);
}

TripleWedgeTable::TripleWedgeTable(const QuinticRing& q) : ring_(q.ring()) {
  const auto grid = grid_set(q.ring());
  values_.resize(kGridSize * kGridSize * kGridSize);
  for (std::size_t y = 0; y < kGridSize; ++y) {
    for (std::size_t z = 0; z < kGridSize; ++z) {
      const LVector yz = l_part(q.multiply(lift(grid[y]), lift(grid[z])));
      for (std::size_t x = 0; x < kGridSize; ++x) {
        Matrix m(q.ring(), 4, 4);
        for (std::size_t c = 0; c < 4; ++c) {
          m(0, c) = grid[x][c];
          m(1, c) = grid[y][c];
          m(2, c) = grid[z][c];
          m(3, c) = yz[c];
        }
        values_[(x * kGridSize + y) * kGridSize + z] = determinant(m).value();
      }
    }
  }
}

mpq_class TripleWedgeTable::F(const std::array<std::size_t, 5>& g) const {
  mpq_class v = at(g[0], g[1], g[2]) * at(g[0], g[3], g[4]) + at(g[0], g[1], g[3]) * at(g[0], g[4], g[2]) +
                at(g[0], g[1], g[4]) * at(g[0], g[2], g[3]);
  if (ring_.kind() == ScalarKind::PrimeField) {
    mpz_class r;
    mpz_class p = ring_.characteristic();
    mpz_mod(r.get_mpz_t(), v.get_num_mpz_t(), p.get_mpz_t());
    return mpq_class(r);
  }
  return v;
}

namespace {

// Visits all of G⁵ in lexicographic order until visit returns false.
template <typename Visit>
void for_each_grid_tuple(Visit visit) {
  std::array<std::size_t, 5> g{};
  for (g[0] = 0; g[0] < kGridSize; ++g[0])
    for (g[1] = 0; g[1] < kGridSize; ++g[1])
      for (g[2] = 0; g[2] < kGridSize; ++g[2])
        for (g[3] = 0; g[3] < kGridSize; ++g[3])
          for (g[4] = 0; g[4] < kGridSize; ++g[4])
            if (!visit(g)) return;
}

}  // namespace

std::optional<std::array<std::size_t, 5>> first_nonzero_F(const QuinticRing& q) {
  const TripleWedgeTable table(q);
  std::optional<std::array<std::size_t, 5>> found;
  for_each_grid_tuple([&](const std::array<std::size_t, 5>& g) {
    if (sgn(table.F(g)) != 0) {
      found = g;
      return false;
    }
    return true;
  });
  return found;
}

mpz_class F_grid_gcd(const QuinticRing& q) {
  if (q.ring().kind() != ScalarKind::Integer) throw Error(ErrorCode::MixedRings, "F_grid_gcd needs a ring over Z");
  const TripleWedgeTable table(q);
  mpz_class g = 0;
  for_each_grid_tuple([&](const std::array<std::size_t, 5>& t) {
    const mpq_class v = table.F(t);
    if (sgn(v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    return g != 1;
  });
  return g;
}

Scalar discriminant(const QuinticRing& q) {
  if (q.ring().kind() == ScalarKind::PrimeField) throw Error(ErrorCode::MixedRings, "discriminant over Z or Q");
  std::vector<Matrix> mult;
  for (std::size_t i = 0; i < 5; ++i) mult.push_back(q.multiplication_matrix(basis_element(q.ring(), i)));
  Matrix gram(q.ring(), 5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const Matrix prod = mult[i] * mult[j];
      Scalar tr = Scalar::zero(q.ring());
      for (std::size_t k = 0; k < 5; ++k) tr += prod(k, k);
      gram(i, j) = tr;
    }
  }
  return determinant(gram);
}

QuinticRing translate(const QuinticRing& q, const std::vector<Scalar>& shift) {
  check_size(shift, 4, "translation vector");
  QuinticRing out(q.ring());
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = i; j <= 4; ++j) {
      Element a = basis_element(q.ring(), i);
      a[0] = shift[i - 1];
      Element b = basis_element(q.ring(), j);
      b[0] = shift[j - 1];
      const Element p = q.multiply(a, b);
      // Re-express 1, e_k in the basis 1, e_k' = e_k + shift_k.
      Scalar constant = p[0];
      for (std::size_t k = 1; k <= 4; ++k) {
        out.set(i, j, k, p[k]);
        constant -= p[k] * shift[k - 1];
      }
      out.set(i, j, 0, constant);
    }
  }
  return out;
}

QuinticRing normalize_translation(const QuinticRing& q) {
  std::vector<Scalar> shift(4, Scalar::zero(q.ring()));
  shift[0] = -q.c(1, 2, 2);
  shift[1] = -q.c(1, 2, 1);
  shift[2] = -q.c(3, 4, 4);
  shift[3] = -q.c(3, 4, 3);
  return translate(q, shift);
}

}  // namespace sextic
