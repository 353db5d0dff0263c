#pragma once

#include <map>
#include <memory>
#include <optional>

#include "cochain/complex.hpp"

namespace cochain {

// Degreewise matrices f^i : A^i -> B^i. Missing degrees are zero maps.
// Shapes are checked on construction; commuting squares are checked by
// validate_chain_map.
class ChainMap {
 public:
  ChainMap(CochainComplex source, CochainComplex target, const std::map<int, Matrix>& components = {});

  static ChainMap identity(const CochainComplex& c);
  static ChainMap zero(const CochainComplex& source, const CochainComplex& target);

  const CochainComplex& source() const { return *source_; }
  const CochainComplex& target() const { return *target_; }
  const Field& field() const { return source_->field(); }

  // Union of the source and target windows.
  int lo() const;
  int hi() const;

  Matrix component(int degree) const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  std::shared_ptr<const CochainComplex> source_;
  std::shared_ptr<const CochainComplex> target_;
  std::map<int, Matrix> components_;
};

// Degree -1 maps k^i : A^i -> B^{i-1}.
class Homotopy {
 public:
  Homotopy(CochainComplex source, CochainComplex target, const std::map<int, Matrix>& components = {});

  static Homotopy zero(const CochainComplex& source, const CochainComplex& target);

  const CochainComplex& source() const { return *source_; }
  const CochainComplex& target() const { return *target_; }

  // Degrees i at which k^i can be nonzero: A^i and B^{i-1} both inside
  // their windows.
  int lo() const;
  int hi() const;

  Matrix component(int degree) const;

  friend bool operator==(const Homotopy& a, const Homotopy& b);

 private:
  std::shared_ptr<const CochainComplex> source_;
  std::shared_ptr<const CochainComplex> target_;
  std::map<int, Matrix> components_;
};

struct ChainMapReport {
  bool ok = true;
  int degree = 0;
  std::optional<Matrix> target_side;  // d_B^i f^i
  std::optional<Matrix> source_side;  // f^{i+1} d_A^i

  explicit operator bool() const { return ok; }
};

ChainMapReport validate_chain_map(const ChainMap& f);
void require_valid(const ChainMap& f);

// g o f. Throws ObjectMismatch unless f.target() == g.source().
ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f);

ChainMap operator+(const ChainMap& f, const ChainMap& g);
ChainMap operator-(const ChainMap& f, const ChainMap& g);
ChainMap operator-(const ChainMap& f);

// f[n] : A[n] -> B[n] with components f^{i+n} (no sign).
ChainMap shift(const ChainMap& f, int n);

// True iff g^i - f^i = d_B^{i-1} k^i + k^{i+1} d_A^i in every degree.
bool check_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& k);

// Decides f ~ g by solving one linear system in all entries of all k^i at
// once, and returns a witness when one exists.
std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g);

// f + d k + k d, which is a chain map homotopic to f.
ChainMap perturb_by_homotopy(const ChainMap& f, const Homotopy& k);

// Matrix of H^i(f) in the canonical bases from cohomology().
Matrix induced_cohomology_map(const ChainMap& f, int degree);

bool is_quasi_iso(const ChainMap& f);

// f : A -> B, g : B -> A with f g ~ id_B via k_b and g f ~ id_A via k_a.
bool check_homotopy_equivalence(const ChainMap& f, const ChainMap& g, const Homotopy& k_b,
                                const Homotopy& k_a);

}  // namespace cochain
