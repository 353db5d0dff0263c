#include "cochain/chain_map.hpp"

#include <algorithm>

#include "arith.hpp"
#include "cochain/error.hpp"

namespace cochain {

namespace {

std::string shape_text(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

// Stores only components that can be nonzero; checks the rest are empty.
std::map<int, Matrix> checked_components(const CochainComplex& source, const CochainComplex& target,
                                         const std::map<int, Matrix>& components, int degree_offset,
                                         const char* what) {
  if (!(source.field() == target.field())) {
    throw FieldMismatch(std::string(what) + " between complexes over different fields");
  }
  std::map<int, Matrix> kept;
  for (const auto& [degree, m] : components) {
    const std::size_t rows = target.dim(degree + degree_offset), cols = source.dim(degree);
    if (!(m.field() == source.field())) {
      throw FieldMismatch(std::string(what) + " component at degree " + std::to_string(degree) +
                          " is over " + m.field().name());
    }
    if (m.rows() != rows || m.cols() != cols) {
      throw ShapeMismatch(std::string(what) + " component at degree " + std::to_string(degree) +
                          " has shape " + shape_text(m.rows(), m.cols()) + ", expected " +
                          shape_text(rows, cols));
    }
    if (!m.empty()) kept.emplace(degree, m);
  }
  return kept;
}

void require_parallel(const ChainMap& f, const ChainMap& g, const char* op) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw ShapeMismatch(std::string(op) + ": maps do not share source and target");
  }
}

}  // namespace

ChainMap::ChainMap(CochainComplex source, CochainComplex target, const std::map<int, Matrix>& components)
    : source_(std::make_shared<const CochainComplex>(std::move(source))),
      target_(std::make_shared<const CochainComplex>(std::move(target))),
      components_(checked_components(*source_, *target_, components, 0, "chain map")) {}

ChainMap ChainMap::identity(const CochainComplex& c) {
  std::map<int, Matrix> comps;
  for (int i = c.lo(); i <= c.hi(); ++i) comps.emplace(i, Matrix::identity(c.field(), c.dim(i)));
  return ChainMap(c, c, comps);
}

ChainMap ChainMap::zero(const CochainComplex& source, const CochainComplex& target) {
  return ChainMap(source, target);
}

int ChainMap::lo() const { return std::min(source_->lo(), target_->lo()); }
int ChainMap::hi() const { return std::max(source_->hi(), target_->hi()); }

Matrix ChainMap::component(int degree) const {
  if (auto it = components_.find(degree); it != components_.end()) return it->second;
  return Matrix(field(), target_->dim(degree), source_->dim(degree));
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  for (int i = std::min(a.lo(), b.lo()); i <= std::max(a.hi(), b.hi()); ++i) {
    if (!(a.component(i) == b.component(i))) return false;
  }
  return true;
}

Homotopy::Homotopy(CochainComplex source, CochainComplex target, const std::map<int, Matrix>& components)
    : source_(std::make_shared<const CochainComplex>(std::move(source))),
      target_(std::make_shared<const CochainComplex>(std::move(target))),
      components_(checked_components(*source_, *target_, components, -1, "homotopy")) {}

Homotopy Homotopy::zero(const CochainComplex& source, const CochainComplex& target) {
  return Homotopy(source, target);
}

int Homotopy::lo() const { return std::max(source_->lo(), target_->lo() + 1); }
int Homotopy::hi() const { return std::min(source_->hi(), target_->hi() + 1); }

Matrix Homotopy::component(int degree) const {
  if (auto it = components_.find(degree); it != components_.end()) return it->second;
  return Matrix(source_->field(), target_->dim(degree - 1), source_->dim(degree));
}

bool operator==(const Homotopy& a, const Homotopy& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  const int lo = std::min(a.source().lo(), a.target().lo() + 1);
  const int hi = std::max(a.source().hi(), a.target().hi() + 1);
  for (int i = lo; i <= hi; ++i) {
    if (!(a.component(i) == b.component(i))) return false;
  }
  return true;
}

ChainMapReport validate_chain_map(const ChainMap& f) {
  const CochainComplex& a = f.source();
  const CochainComplex& b = f.target();
  for (int i = f.lo() - 1; i <= f.hi(); ++i) {
    Matrix lhs = b.differential(i) * f.component(i);
    Matrix rhs = f.component(i + 1) * a.differential(i);
    if (!(lhs == rhs)) return {false, i, std::move(lhs), std::move(rhs)};
  }
  return {};
}

void require_valid(const ChainMap& f) {
  const ChainMapReport report = validate_chain_map(f);
  if (!report) {
    throw InvalidChainMap("square at degree " + std::to_string(report.degree) +
                          " does not commute: d f = " + report.target_side->to_string() +
                          ", f d = " + report.source_side->to_string());
  }
}

ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) {
    throw ObjectMismatch("cannot compose: target of the first map differs from source of the second");
  }
  std::map<int, Matrix> comps;
  const int lo = std::min(f.lo(), g.lo()), hi = std::max(f.hi(), g.hi());
  for (int i = lo; i <= hi; ++i) comps.emplace(i, g.component(i) * f.component(i));
  return ChainMap(f.source(), g.target(), comps);
}

ChainMap operator+(const ChainMap& f, const ChainMap& g) {
  require_parallel(f, g, "add");
  std::map<int, Matrix> comps;
  for (int i = f.lo(); i <= f.hi(); ++i) comps.emplace(i, f.component(i) + g.component(i));
  return ChainMap(f.source(), f.target(), comps);
}

ChainMap operator-(const ChainMap& f) {
  std::map<int, Matrix> comps;
  for (int i = f.lo(); i <= f.hi(); ++i) comps.emplace(i, -f.component(i));
  return ChainMap(f.source(), f.target(), comps);
}

ChainMap operator-(const ChainMap& f, const ChainMap& g) { return f + (-g); }

ChainMap shift(const ChainMap& f, int n) {
  std::map<int, Matrix> comps;
  for (int i = f.lo(); i <= f.hi(); ++i) comps.emplace(i - n, f.component(i));
  return ChainMap(shift(f.source(), n), shift(f.target(), n), comps);
}

bool check_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& k) {
  require_parallel(f, g, "check_homotopy");
  if (!(k.source() == f.source()) || !(k.target() == f.target())) {
    throw ShapeMismatch("check_homotopy: homotopy does not run between the maps' complexes");
  }
  const CochainComplex& a = f.source();
  const CochainComplex& b = f.target();
  for (int i = f.lo(); i <= f.hi(); ++i) {
    const Matrix lhs = g.component(i) - f.component(i);
    const Matrix rhs = b.differential(i - 1) * k.component(i) + k.component(i + 1) * a.differential(i);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ChainMap perturb_by_homotopy(const ChainMap& f, const Homotopy& k) {
  if (!(k.source() == f.source()) || !(k.target() == f.target())) {
    throw ShapeMismatch("perturb_by_homotopy: homotopy does not run between the map's complexes");
  }
  const CochainComplex& a = f.source();
  const CochainComplex& b = f.target();
  std::map<int, Matrix> comps;
  for (int i = f.lo(); i <= f.hi(); ++i) {
    comps.emplace(i, f.component(i) + b.differential(i - 1) * k.component(i) +
                         k.component(i + 1) * a.differential(i));
  }
  return ChainMap(a, b, comps);
}

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g) {
  require_parallel(f, g, "find_homotopy");
  const CochainComplex& a = f.source();
  const CochainComplex& b = f.target();
  const Field& field = f.field();

  // Unknowns: entries of k^i, row-major, degree by degree.
  const int klo = std::min(a.lo(), b.lo() + 1), khi = std::max(a.hi(), b.hi() + 1);
  std::map<int, std::size_t> var_offset;
  std::size_t nvars = 0;
  for (int i = klo; i <= khi; ++i) {
    var_offset[i] = nvars;
    nvars += b.dim(i - 1) * a.dim(i);
  }
  // Equations: entries of g^j - f^j, row-major, degree by degree.
  const int elo = f.lo(), ehi = f.hi();
  std::map<int, std::size_t> eq_offset;
  std::size_t neqs = 0;
  for (int j = elo; j <= ehi; ++j) {
    eq_offset[j] = neqs;
    neqs += b.dim(j) * a.dim(j);
  }

  Matrix system(field, neqs, nvars);
  Matrix rhs(field, neqs, 1);
  detail::visit_entries(system, [&](const auto& ar, auto& sys) {
    using T = typename std::decay_t<decltype(ar)>::value_type;
    auto& out = rhs.template entries<T>();
    for (int j = elo; j <= ehi; ++j) {
      const std::size_t rows = b.dim(j), cols = a.dim(j), e0 = eq_offset[j];
      const Matrix diff = g.component(j) - f.component(j);
      const auto& dv = diff.template entries<T>();
      for (std::size_t t = 0; t < dv.size(); ++t) out[e0 + t] = dv[t];

      // d_B^{j-1} k^j : entry (p, c) picks up d_B[p][r] * k^j[r][c].
      if (j >= klo && j <= khi) {
        const Matrix db = b.differential(j - 1);
        const auto& dbv = db.template entries<T>();
        const std::size_t inner = b.dim(j - 1), v0 = var_offset[j];
        for (std::size_t p = 0; p < rows; ++p) {
          for (std::size_t r = 0; r < inner; ++r) {
            const T& coeff = dbv[p * inner + r];
            if (ar.is_zero(coeff)) continue;
            for (std::size_t c = 0; c < cols; ++c) {
              sys[(e0 + p * cols + c) * nvars + v0 + r * cols + c] = coeff;
            }
          }
        }
      }
      // k^{j+1} d_A^j : entry (r, q) picks up k^{j+1}[r][c] * d_A[c][q].
      if (j + 1 >= klo && j + 1 <= khi) {
        const Matrix da = a.differential(j);
        const auto& dav = da.template entries<T>();
        const std::size_t inner = a.dim(j + 1), v0 = var_offset[j + 1];
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < inner; ++c) {
            for (std::size_t q = 0; q < cols; ++q) {
              const T& coeff = dav[c * cols + q];
              if (ar.is_zero(coeff)) continue;
              T& slot = sys[(e0 + r * cols + q) * nvars + v0 + r * inner + c];
              slot = ar.add(slot, coeff);
            }
          }
        }
      }
    }
  });

  const std::optional<Matrix> solution = solve_linear(system, rhs);
  if (!solution) return std::nullopt;

  std::map<int, Matrix> comps;
  for (int i = klo; i <= khi; ++i) {
    const std::size_t rows = b.dim(i - 1), cols = a.dim(i);
    Matrix k(field, rows, cols);
    for (std::size_t t = 0; t < rows * cols; ++t) {
      k.set(t / cols, t % cols, solution->at(var_offset[i] + t, 0));
    }
    comps.emplace(i, std::move(k));
  }
  Homotopy witness(a, b, comps);
  if (!check_homotopy(f, g, witness)) {
    throw std::logic_error("find_homotopy produced a witness that does not verify");
  }
  return witness;
}

Matrix induced_cohomology_map(const ChainMap& f, int degree) {
  const CohomologySpace hs = cohomology(f.source(), degree);
  const CohomologySpace ht = cohomology(f.target(), degree);
  const Matrix images = f.component(degree) * hs.representatives();
  const std::optional<Matrix> coords = solve_linear(ht.cocycle_basis, images);
  if (!coords) {
    throw std::logic_error("chain map sends a cocycle outside the target cocycles at degree " +
                           std::to_string(degree));
  }
  return ht.projection * *coords;
}

bool is_quasi_iso(const ChainMap& f) {
  require_valid(f.source());
  require_valid(f.target());
  require_valid(f);
  for (int i = f.lo(); i <= f.hi(); ++i) {
    if (!is_invertible(induced_cohomology_map(f, i))) return false;
  }
  return true;
}

bool check_homotopy_equivalence(const ChainMap& f, const ChainMap& g, const Homotopy& k_b,
                                const Homotopy& k_a) {
  if (!(f.source() == g.target()) || !(f.target() == g.source())) {
    throw ShapeMismatch("check_homotopy_equivalence: maps do not run in opposite directions");
  }
  return check_homotopy(compose_chain_maps(f, g), ChainMap::identity(f.target()), k_b) &&
         check_homotopy(compose_chain_maps(g, f), ChainMap::identity(f.source()), k_a);
}

}  // namespace cochain
