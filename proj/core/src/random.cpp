#include "cochain/random.hpp"

#include <algorithm>

#include "cochain/cone.hpp"

namespace cochain::gen {

namespace {

Scalar random_scalar(const Field& field, Rng& rng) {
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
    return Scalar::from_integer(field, dist(rng));
  }
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  return Scalar::from_rational(field, Rational(num(rng), den(rng)));
}

std::size_t pick(std::size_t max, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, max)(rng);
}

}  // namespace

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng, double zero_bias) {
  Matrix m(field, rows, cols);
  std::bernoulli_distribution zero(zero_bias);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!zero(rng)) m.set(r, c, random_scalar(field, rng));
    }
  }
  return m;
}

CochainComplex random_complex(const Field& field, int lo, int hi, std::size_t max_dim, Rng& rng) {
  std::vector<std::size_t> dims;
  for (int i = lo; i <= hi; ++i) dims.push_back(pick(max_dim, rng));
  std::vector<Matrix> diffs;
  Matrix previous(field, dims.front(), 0);
  std::bernoulli_distribution sparse(0.25);
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    // Rows of d^i must annihilate the image of d^{i-1}.
    const Matrix annihilators = kernel_basis(transpose(previous));
    const Matrix coeffs =
        random_matrix(field, dims[k + 1], annihilators.cols(), rng, sparse(rng) ? 0.6 : 0.0);
    diffs.push_back(coeffs * transpose(annihilators));
    previous = diffs.back();
  }
  return CochainComplex::from_sequence(field, lo, dims, diffs);
}

CochainComplex random_complex_in(const Field& field, int min_degree, int max_degree, std::size_t max_dim,
                                 Rng& rng) {
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  int lo = deg(rng), hi = deg(rng);
  if (lo > hi) std::swap(lo, hi);
  return random_complex(field, lo, hi, max_dim, rng);
}

ChainMap random_chain_map(const CochainComplex& a, const CochainComplex& b, Rng& rng) {
  const Field& field = a.field();
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::map<int, std::size_t> offset;
  std::size_t nvars = 0;
  for (int i = lo; i <= hi; ++i) {
    offset[i] = nvars;
    nvars += b.dim(i) * a.dim(i);
  }
  // Equations d_B^i f^i - f^{i+1} d_A^i = 0, entry by entry.
  std::size_t neqs = 0;
  for (int i = lo - 1; i <= hi; ++i) neqs += b.dim(i + 1) * a.dim(i);
  Matrix system(field, neqs, nvars);
  std::size_t row = 0;
  for (int i = lo - 1; i <= hi; ++i) {
    const Matrix db = b.differential(i);
    const Matrix da = a.differential(i);
    for (std::size_t p = 0; p < b.dim(i + 1); ++p) {
      for (std::size_t q = 0; q < a.dim(i); ++q, ++row) {
        for (std::size_t r = 0; r < b.dim(i); ++r) {
          system.set(row, offset[i] + r * a.dim(i) + q, db.at(p, r));
        }
        for (std::size_t c = 0; c < a.dim(i + 1); ++c) {
          const std::size_t var = offset[i + 1] + p * a.dim(i + 1) + c;
          system.set(row, var, system.at(row, var) - da.at(c, q));
        }
      }
    }
  }
  const Matrix basis = kernel_basis(system);
  const Matrix flat = basis * random_matrix(field, basis.cols(), 1, rng);
  std::map<int, Matrix> comps;
  for (int i = lo; i <= hi; ++i) {
    Matrix f(field, b.dim(i), a.dim(i));
    for (std::size_t t = 0; t < b.dim(i) * a.dim(i); ++t) {
      f.set(t / a.dim(i), t % a.dim(i), flat.at(offset[i] + t, 0));
    }
    comps.emplace(i, std::move(f));
  }
  return ChainMap(a, b, comps);
}

Homotopy random_homotopy(const CochainComplex& a, const CochainComplex& b, Rng& rng) {
  std::map<int, Matrix> comps;
  for (int i = std::min(a.lo(), b.lo() + 1); i <= std::max(a.hi(), b.hi() + 1); ++i) {
    comps.emplace(i, random_matrix(a.field(), b.dim(i - 1), a.dim(i), rng));
  }
  return Homotopy(a, b, comps);
}

CochainComplex random_acyclic(const Field& field, int lo, int hi, std::size_t max_dim, Rng& rng) {
  const CochainComplex c = random_complex(field, lo, hi, max_dim, rng);
  return mapping_cone(ChainMap::identity(c)).complex;
}

ChainMap sum_inclusion(const CochainComplex& a, const CochainComplex& b) {
  const CochainComplex sum = direct_sum_complex(a, b);
  std::map<int, Matrix> comps;
  for (int i = sum.lo(); i <= sum.hi(); ++i) {
    comps.emplace(i, vstack(Matrix::identity(a.field(), a.dim(i)), Matrix(a.field(), b.dim(i), a.dim(i))));
  }
  return ChainMap(a, sum, comps);
}

ChainMap sum_projection(const CochainComplex& a, const CochainComplex& b) {
  const CochainComplex sum = direct_sum_complex(a, b);
  std::map<int, Matrix> comps;
  for (int i = sum.lo(); i <= sum.hi(); ++i) {
    comps.emplace(i, hstack(Matrix::identity(a.field(), a.dim(i)), Matrix(a.field(), a.dim(i), b.dim(i))));
  }
  return ChainMap(sum, a, comps);
}

namespace {

// An acyclic complex whose dimensions fit under room[i] in every degree.
CochainComplex padding_under(const Field& field, const std::map<int, std::size_t>& room, Rng& rng) {
  // MC(id_C)^i = C^{i+1} (+) C^i; choose C^i <= min(room[i], room[i-1]) / 2.
  const int lo = room.begin()->first, hi = room.rbegin()->first;
  std::vector<std::size_t> cdims;
  for (int i = lo; i <= hi + 1; ++i) {
    auto at = [&](int d) { return room.count(d) ? room.at(d) : std::size_t{0}; };
    cdims.push_back(std::min(at(i), at(i - 1)) / 2);
  }
  std::vector<std::size_t> capped;
  for (std::size_t d : cdims) capped.push_back(d == 0 ? 0 : pick(d, rng));
  // Random differentials with these dims.
  std::vector<Matrix> diffs;
  Matrix previous(field, capped.front(), 0);
  for (std::size_t k = 0; k + 1 < capped.size(); ++k) {
    const Matrix annihilators = kernel_basis(transpose(previous));
    diffs.push_back(random_matrix(field, capped[k + 1], annihilators.cols(), rng) * transpose(annihilators));
    previous = diffs.back();
  }
  const CochainComplex c = CochainComplex::from_sequence(field, lo, capped, diffs);
  return mapping_cone(ChainMap::identity(c)).complex;
}

std::map<int, std::size_t> room_left(const CochainComplex& c, int min_degree, int max_degree,
                                     std::size_t max_dim) {
  std::map<int, std::size_t> room;
  for (int i = min_degree; i <= max_degree; ++i) room[i] = max_dim - std::min(max_dim, c.dim(i));
  return room;
}

}  // namespace

ChainMap random_quasi_iso_from(const CochainComplex& m, std::size_t max_dim, Rng& rng) {
  const Field& field = m.field();
  const CochainComplex pad = padding_under(field, room_left(m, m.lo(), m.hi(), max_dim), rng);
  const ChainMap incl = sum_inclusion(m, pad);
  const ChainMap wobble = perturb_by_homotopy(ChainMap::identity(incl.target()),
                                              random_homotopy(incl.target(), incl.target(), rng));
  return compose_chain_maps(wobble, incl);
}

ChainMap random_quasi_iso(const Field& field, int min_degree, int max_degree, std::size_t max_dim,
                          Rng& rng) {
  const CochainComplex m0 = random_complex_in(field, min_degree, max_degree, std::max<std::size_t>(1, max_dim / 2), rng);
  const CochainComplex pad = padding_under(field, room_left(m0, min_degree, max_degree, max_dim), rng);
  const ChainMap proj = sum_projection(m0, pad);
  return compose_chain_maps(random_quasi_iso_from(m0, max_dim, rng), proj);
}

}  // namespace cochain::gen
