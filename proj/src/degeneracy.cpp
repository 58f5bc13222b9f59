#include "sextic/degeneracy.hpp"

#include <algorithm>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

using IntVec = std::array<long, 5>;

struct ModRing {
  long p;
  // table[i][j][k]: coefficient of basis k in b_i b_j, basis (1, e1..e4).
  long table[5][5][5];

  explicit ModRing(const QuinticRing& q) : p(q.ring().characteristic()) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        const Element prod = q.multiply(basis_element(q.ring(), i), basis_element(q.ring(), j));
        for (std::size_t k = 0; k < 5; ++k) table[i][j][k] = prod[k].as_integer().get_si();
      }
    }
  }

  IntVec mul(const IntVec& u, const IntVec& v) const {
    IntVec out{};
    for (std::size_t i = 0; i < 5; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < 5; ++j) {
        if (v[j] == 0) continue;
        const long s = u[i] * v[j] % p;
        for (std::size_t k = 0; k < 5; ++k) out[k] = (out[k] + s * table[i][j][k]) % p;
      }
    }
    return out;
  }
};

long inv_mod(long a, long p) {
  long r = 1;
  for (long e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Row-reduces rows mod p; returns the nonzero rows of the RREF.
std::vector<IntVec> rref_mod(std::vector<IntVec> rows, long p, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < 5 && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][c] % p == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[r]);
    const long inv = inv_mod(rows[r][c], p);
    for (auto& v : rows[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const long f = rows[i][c];
      for (std::size_t k = 0; k < 5; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = piv;
  return rows;
}

// Basis of {x : Σ_k row_k·x... } i.e. the nullspace of the matrix whose rows are given.
std::vector<IntVec> nullspace_mod(const std::vector<IntVec>& rows, long p) {
  std::vector<std::size_t> piv;
  const auto red = rref_mod(rows, p, &piv);
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < 5; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    IntVec v{};
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - red[r][f]) % p;
    basis.push_back(v);
  }
  return basis;
}

// Annihilator {v : v·b = 0 for b in gens}.
std::vector<IntVec> annihilator(const ModRing& m, const std::vector<IntVec>& gens) {
  std::vector<IntVec> rows;
  for (const auto& b : gens) {
    // Row k of the map v ↦ v·b: coefficient of basis k is Σ_i v_i (b_i·b)_k.
    IntVec images[5];
    for (std::size_t i = 0; i < 5; ++i) {
      IntVec e{};
      e[i] = 1;
      images[i] = m.mul(e, b);
    }
    for (std::size_t k = 0; k < 5; ++k) {
      IntVec row{};
      for (std::size_t i = 0; i < 5; ++i) row[i] = images[i][k];
      rows.push_back(row);
    }
  }
  return nullspace_mod(rows, m.p);
}

bool in_span(const std::vector<IntVec>& span, const IntVec& v, long p) {
  std::vector<IntVec> rows = span;
  const std::size_t before = rref_mod(rows, p, nullptr).size();
  rows.push_back(v);
  return rref_mod(rows, p, nullptr).size() == before;
}

Element to_element(const IntVec& v, const ScalarRing& ring) {
  Element e;
  for (long x : v) e.emplace_back(ring, x);
  return e;
}

std::optional<VeryDegenerateWitness> search_witness(const QuinticRing& q) {
  const ModRing m(q);
  const long p = m.p;
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) {
      for (std::size_t c = b + 1; c < 5; ++c) {
        const std::array<std::size_t, 3> piv{a, b, c};
        // Free positions: columns right of the row pivot that are not pivots.
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t col = piv[r] + 1; col < 5; ++col)
            if (col != a && col != b && col != c) free.emplace_back(r, col);
        std::size_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= static_cast<std::size_t>(p);
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<IntVec> rows(3, IntVec{});
          for (std::size_t r = 0; r < 3; ++r) rows[r][piv[r]] = 1;
          std::size_t rest = code;
          for (const auto& [r, col] : free) {
            rows[r][col] = static_cast<long>(rest % static_cast<std::size_t>(p));
            rest /= static_cast<std::size_t>(p);
          }
          bool square_zero = true;
          for (std::size_t i = 0; i < 3 && square_zero; ++i)
            for (std::size_t j = i; j < 3 && square_zero; ++j) {
              const IntVec prod = m.mul(rows[i], rows[j]);
              square_zero = std::all_of(prod.begin(), prod.end(), [](long x) { return x == 0; });
            }
          if (!square_zero) continue;
          const auto ann = annihilator(m, rows);
          if (ann.size() < 4) continue;
          for (const auto& v : ann) {
            if (in_span(rows, v, p)) continue;
            VeryDegenerateWitness w;
            for (const auto& r : rows) w.q3.push_back(to_element(r, q.ring()));
            w.q4 = w.q3;
            w.q4.push_back(to_element(v, q.ring()));
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Coordinates of u in the basis (1, α, q3…), over a field.
std::vector<Scalar> adapted_coordinates(const VeryDegenerateWitness& w, const Element& u) {
  const ScalarRing ring = u[0].ring();
  Matrix basis(ring, 5, 5);
  const Element one = unit_element(ring);
  std::vector<const Element*> cols{&one, &w.q4[3], &w.q3[0], &w.q3[1], &w.q3[2]};
  for (std::size_t c = 0; c < 5; ++c)
    for (std::size_t r = 0; r < 5; ++r) basis(r, c) = (*cols[c])[r];
  return solve(basis, u);
}

Classification classify_with_witness(const QuinticRing& q, VeryDegenerateWitness w) {
  const Element u = q.multiply(w.q4[3], w.q4[3]);
  const auto coords = adapted_coordinates(w, u);
  VeryDegenerateType type;
  if (!coords[1].is_zero()) {
    type = VeryDegenerateType::A18;
  } else if (std::any_of(u.begin(), u.end(), [](const Scalar& s) { return !s.is_zero(); })) {
    type = VeryDegenerateType::A19;
  } else {
    type = VeryDegenerateType::A20;
  }
  return Classification{type, std::move(w), u};
}

std::vector<Element> rows_of(const Matrix& m) {
  std::vector<Element> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

// {v : v·b = 0 for all b in gens} over a field.
Matrix annihilator_field(const QuinticRing& q, const std::vector<Element>& gens) {
  Matrix stacked(q.ring(), 5 * gens.size(), 5);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix mb = q.multiplication_matrix(gens[g]);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) stacked(5 * g + r, c) = mb(r, c);
  }
  return nullspace(stacked);
}

bool spans_contain(const std::vector<Element>& span, const Element& v) {
  Matrix a(v[0].ring(), span.size(), 5);
  Matrix b(v[0].ring(), span.size() + 1, 5);
  for (std::size_t r = 0; r < span.size(); ++r)
    for (std::size_t c = 0; c < 5; ++c) a(r, c) = b(r, c) = span[r][c];
  for (std::size_t c = 0; c < 5; ++c) b(span.size(), c) = v[c];
  return rank(a) == rank(b);
}

Element first_outside(const std::vector<Element>& candidates, const std::vector<Element>& span) {
  for (const auto& v : candidates)
    if (!spans_contain(span, v)) return v;
  throw Error(ErrorCode::NotVeryDegenerate, "no vector outside the subspace");
}

Classification classify_rational(const QuinticRing& q) {
  if (first_nonzero_F(q).has_value()) throw Error(ErrorCode::NotVeryDegenerate, "F does not vanish on the grid");
  // Over characteristic 0 the trace-form radical is the nilradical.
  std::vector<Matrix> mult;
  for (std::size_t i = 0; i < 5; ++i) mult.push_back(q.multiplication_matrix(basis_element(q.ring(), i)));
  Matrix gram(q.ring(), 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const Matrix prod = mult[i] * mult[j];
      Scalar tr = Scalar::zero(q.ring());
      for (std::size_t k = 0; k < 5; ++k) tr += prod(k, k);
      gram(i, j) = tr;
    }
  const auto radical = rows_of(nullspace(gram));
  VeryDegenerateWitness w;
  if (radical.size() == 3) {
    const auto ann = rows_of(annihilator_field(q, radical));
    if (ann.size() < 4) throw Error(ErrorCode::NotVeryDegenerate, "annihilator of the radical too small");
    w.q3 = radical;
    w.q4 = radical;
    w.q4.push_back(first_outside(ann, radical));
  } else if (radical.size() == 4) {
    // Ann(R) ∩ R.
    const auto ann = rows_of(annihilator_field(q, radical));
    Matrix sys(q.ring(), 5, ann.size() + radical.size());
    for (std::size_t c = 0; c < ann.size(); ++c)
      for (std::size_t r = 0; r < 5; ++r) sys(r, c) = ann[c][r];
    for (std::size_t c = 0; c < radical.size(); ++c)
      for (std::size_t r = 0; r < 5; ++r) sys(r, ann.size() + c) = -radical[c][r];
    std::vector<Element> meet;
    const Matrix kernel = nullspace(sys);
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
      Element v(5, Scalar::zero(q.ring()));
      for (std::size_t c = 0; c < ann.size(); ++c)
        for (std::size_t r = 0; r < 5; ++r) v[r] += kernel(k, c) * ann[c][r];
      meet.push_back(v);
    }
    if (meet.size() < 3) throw Error(ErrorCode::NotVeryDegenerate, "radical annihilator too small");
    const auto meet_basis = rows_of(nullspace(nullspace(Matrix::from_rows(q.ring(), meet))));
    if (meet_basis.size() < 3) throw Error(ErrorCode::NotVeryDegenerate, "radical annihilator too small");
    w.q3.assign(meet_basis.begin(), meet_basis.begin() + 3);
    w.q4 = w.q3;
    w.q4.push_back(first_outside(radical, w.q3));
  } else {
    throw Error(ErrorCode::NotVeryDegenerate, "nilradical has the wrong dimension");
  }
  return classify_with_witness(q, std::move(w));
}

}  // namespace

const char* to_string(VeryDegenerateType type) {
  switch (type) {
    case VeryDegenerateType::A18: return "A18";
    case VeryDegenerateType::A19: return "A19";
    case VeryDegenerateType::A20: return "A20";
  }
  return "?";
}

VeryDegenerateReport is_very_degenerate(const QuinticRing& q) {
  if (q.ring().kind() != ScalarKind::PrimeField)
    throw Error(ErrorCode::FieldTooLarge, "subspace search needs a prime field");
  if (q.ring().characteristic() > 7) throw Error(ErrorCode::FieldTooLarge, "subspace search needs p <= 7");
  VeryDegenerateReport report;
  report.witness = search_witness(q);
  report.nonzero_tuple = first_nonzero_F(q);
  report.very_degenerate = report.witness.has_value();
  report.methods_agree = report.witness.has_value() != report.nonzero_tuple.has_value();
  return report;
}

Classification classify_very_degenerate(const QuinticRing& q) {
  switch (q.ring().kind()) {
    case ScalarKind::PrimeField: {
      const auto report = is_very_degenerate(q);
      if (!report.witness) throw Error(ErrorCode::NotVeryDegenerate, "no nested null subspaces");
      return classify_with_witness(q, *report.witness);
    }
    case ScalarKind::Integer:
      return classify_rational(q.in(ScalarRing::rationals()));
    case ScalarKind::Rational:
      return classify_rational(q);
  }
  throw Error(ErrorCode::NotVeryDegenerate, "unsupported scalar ring");
}

}  // namespace sextic
