#pragma once

#include "cochain/chain_map.hpp"

namespace cochain {

// A <--denom-- apex --numer--> B, standing for numer o denom^{-1} in the
// localization of the homotopy category at quasi-isomorphisms.
class Roof {
 public:
  // Throws ObjectMismatch if the legs do not share their source and
  // NotQuasiIsomorphism if denom is not a quasi-isomorphism.
  Roof(ChainMap denom, ChainMap numer);

  const CochainComplex& apex() const { return denom_.source(); }
  const CochainComplex& source() const { return denom_.target(); }
  const CochainComplex& target() const { return numer_.target(); }
  const ChainMap& denom() const { return denom_; }
  const ChainMap& numer() const { return numer_; }

 private:
  ChainMap denom_;
  ChainMap numer_;
};

// L --alpha--> Kbar <--beta-- M with beta a quasi-isomorphism.
class Cospan {
 public:
  Cospan(ChainMap alpha, ChainMap beta);

  const ChainMap& alpha() const { return alpha_; }
  const ChainMap& beta() const { return beta_; }

 private:
  ChainMap alpha_;
  ChainMap beta_;
};

// K with gamma2 : K -> L (a quasi-isomorphism), gamma1 : K -> M and a
// homotopy witness from beta gamma1 to alpha gamma2.
struct FlipResult {
  CochainComplex k_complex;
  ChainMap gamma2;
  ChainMap gamma1;
  Homotopy witness;
};

// Completes a cospan to a square that commutes up to homotopy.
//
// With gamma = (0, alpha) : L -> MC(beta), K = MC(gamma)[-1], so
//   K^i = L^i (+) M^i (+) Kbar^{i-1}
//   d_K^i = [  d_L^i      0        0           ]
//           [    0      d_M^i      0           ]
//           [ -alpha^i  -beta^i  -d_Kbar^{i-1} ]
//   gamma2 = (id, 0, 0),  gamma1 = (0, -id, 0),  h = (0, 0, -id).
//
// Every output invariant is verified before returning; a failure there is
// a std::logic_error.
FlipResult flip_cospan(const Cospan& c);

// The roof (id_A, f).
Roof lift_map_to_roof(const ChainMap& f);

// (f, g) then (f', g'): flip the middle cospan (g, f') to (f'', g'') and
// return (f o f'', g' o g'').
Roof compose_roofs(const Roof& first, const Roof& second);

// A common refinement of two roofs:
//   apex3 = up/down sources, up : apex3 -> first.apex, down : apex3 -> second.apex,
//   denom3 : apex3 -> A, numer3 : apex3 -> B.
struct RoofEquivalenceWitness {
  CochainComplex apex3;
  ChainMap denom3;
  ChainMap numer3;
  ChainMap up;
  ChainMap down;
};

// Checks that denom3 is a quasi-isomorphism and that all four triangles
// commute up to homotopy.
bool verify_roof_equivalence(const Roof& first, const Roof& second, const RoofEquivalenceWitness& w);

// The witness that compose(lift f, lift g) is equivalent to lift(g o f),
// built from the flip inside the composition.
RoofEquivalenceWitness lift_composition_witness(const ChainMap& f, const ChainMap& g);

}  // namespace cochain
