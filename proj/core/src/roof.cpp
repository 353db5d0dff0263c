#include "cochain/roof.hpp"

#include <algorithm>

#include "cochain/error.hpp"

namespace cochain {

Roof::Roof(ChainMap denom, ChainMap numer) : denom_(std::move(denom)), numer_(std::move(numer)) {
  if (!(denom_.source() == numer_.source())) {
    throw ObjectMismatch("roof legs do not share their source");
  }
  if (!is_quasi_iso(denom_)) throw NotQuasiIsomorphism("roof denominator is not a quasi-isomorphism");
  require_valid(numer_);
}

Cospan::Cospan(ChainMap alpha, ChainMap beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!(alpha_.target() == beta_.target())) throw ObjectMismatch("cospan legs do not share their target");
  require_valid(alpha_.source());
  require_valid(alpha_);
  if (!is_quasi_iso(beta_)) throw NotQuasiIsomorphism("cospan leg beta is not a quasi-isomorphism");
}

FlipResult flip_cospan(const Cospan& c) {
  const ChainMap& alpha = c.alpha();
  const ChainMap& beta = c.beta();
  const CochainComplex& l = alpha.source();
  const CochainComplex& m = beta.source();
  const CochainComplex& kbar = alpha.target();
  const Field& field = alpha.field();

  const int lo = std::min({l.lo(), m.lo(), kbar.lo() + 1});
  const int hi = std::max({l.hi(), m.hi(), kbar.hi() + 1});
  auto blocks = [&](int i) {
    return std::vector<std::size_t>{l.dim(i), m.dim(i), kbar.dim(i - 1)};
  };

  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int i = lo; i <= hi; ++i) dims[i] = l.dim(i) + m.dim(i) + kbar.dim(i - 1);
  for (int i = lo; i < hi; ++i) {
    diffs.emplace(i, BlockBuilder(field, blocks(i + 1), blocks(i))
                         .put(0, 0, l.differential(i))
                         .put(1, 1, m.differential(i))
                         .put(2, 0, -alpha.component(i))
                         .put(2, 1, -beta.component(i))
                         .put(2, 2, -kbar.differential(i - 1))
                         .build());
  }
  CochainComplex k(field, lo, hi, dims, diffs);

  std::map<int, Matrix> to_l, to_m, h;
  for (int i = lo; i <= hi; ++i) {
    to_l.emplace(i, BlockBuilder(field, {l.dim(i)}, blocks(i))
                        .put(0, 0, Matrix::identity(field, l.dim(i)))
                        .build());
    to_m.emplace(i, BlockBuilder(field, {m.dim(i)}, blocks(i))
                        .put(0, 1, -Matrix::identity(field, m.dim(i)))
                        .build());
    h.emplace(i, BlockBuilder(field, {kbar.dim(i - 1)}, blocks(i))
                     .put(0, 2, -Matrix::identity(field, kbar.dim(i - 1)))
                     .build());
  }
  ChainMap gamma2(k, l, to_l);
  ChainMap gamma1(k, m, to_m);
  Homotopy witness(k, kbar, h);

  require_valid(k);
  require_valid(gamma2);
  require_valid(gamma1);

  // (alpha gamma2 - beta gamma1)(l, m, kbar) = alpha(l) + beta(m), before h
  // enters at all.
  const ChainMap difference =
      compose_chain_maps(alpha, gamma2) - compose_chain_maps(beta, gamma1);
  for (int i = lo; i <= hi; ++i) {
    const Matrix expected = BlockBuilder(field, {kbar.dim(i)}, blocks(i))
                                .put(0, 0, alpha.component(i))
                                .put(0, 1, beta.component(i))
                                .build();
    if (!(difference.component(i) == expected)) {
      throw std::logic_error("flip: alpha gamma2 - beta gamma1 is not (alpha, beta, 0) at degree " +
                             std::to_string(i));
    }
  }
  if (!check_homotopy(compose_chain_maps(beta, gamma1), compose_chain_maps(alpha, gamma2), witness)) {
    throw std::logic_error("flip: h is not a homotopy from beta gamma1 to alpha gamma2");
  }
  if (!is_quasi_iso(gamma2)) throw std::logic_error("flip: gamma2 is not a quasi-isomorphism");

  return {std::move(k), std::move(gamma2), std::move(gamma1), std::move(witness)};
}

Roof lift_map_to_roof(const ChainMap& f) {
  require_valid(f.source());
  require_valid(f);
  return Roof(ChainMap::identity(f.source()), f);
}

Roof compose_roofs(const Roof& first, const Roof& second) {
  if (!(first.target() == second.source())) {
    throw ObjectMismatch("compose_roofs: target of the first roof is not the source of the second");
  }
  const FlipResult flip = flip_cospan(Cospan(first.numer(), second.denom()));
  return Roof(compose_chain_maps(first.denom(), flip.gamma2),
              compose_chain_maps(second.numer(), flip.gamma1));
}

bool verify_roof_equivalence(const Roof& first, const Roof& second, const RoofEquivalenceWitness& w) {
  if (!(first.source() == second.source()) || !(first.target() == second.target())) {
    throw ShapeMismatch("verify_roof_equivalence: roofs run between different complexes");
  }
  const CochainComplex& a = first.source();
  const CochainComplex& b = first.target();
  if (!(w.denom3.source() == w.apex3) || !(w.denom3.target() == a) || !(w.numer3.source() == w.apex3) ||
      !(w.numer3.target() == b) || !(w.up.source() == w.apex3) || !(w.up.target() == first.apex()) ||
      !(w.down.source() == w.apex3) || !(w.down.target() == second.apex())) {
    throw ShapeMismatch("verify_roof_equivalence: witness does not conform to the roofs");
  }
  if (!is_quasi_iso(w.denom3)) return false;
  return find_homotopy(compose_chain_maps(first.denom(), w.up), w.denom3).has_value() &&
         find_homotopy(compose_chain_maps(first.numer(), w.up), w.numer3).has_value() &&
         find_homotopy(compose_chain_maps(second.denom(), w.down), w.denom3).has_value() &&
         find_homotopy(compose_chain_maps(second.numer(), w.down), w.numer3).has_value();
}

RoofEquivalenceWitness lift_composition_witness(const ChainMap& f, const ChainMap& g) {
  const FlipResult flip = flip_cospan(Cospan(f, ChainMap::identity(f.target())));
  return {flip.k_complex, flip.gamma2, compose_chain_maps(g, flip.gamma1),
          ChainMap::identity(flip.k_complex), flip.gamma2};
}

}  // namespace cochain
