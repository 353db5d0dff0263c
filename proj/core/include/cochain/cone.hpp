#pragma once

#include <optional>

#include "cochain/chain_map.hpp"

namespace cochain {

// MC(f) for f : A -> B, with MC(f)^i = A^{i+1} (+) B^i (A block first) and
//
//   d^i = [ -d_A^{i+1}     0    ]
//         [  f^{i+1}     d_B^i  ]
//
// inclusion : B -> MC(f) is b |-> (0, b); projection : MC(f) -> A[1] is
// (a, b) |-> a.
struct MappingCone {
  CochainComplex complex;
  ChainMap inclusion;
  ChainMap projection;
};

// Throws InvalidComplex / InvalidChainMap on invalid input.
MappingCone mapping_cone(const ChainMap& f);

// X --f--> Y --g--> Z --h--> X[1].
class Triangle {
 public:
  // Throws ObjectMismatch unless f.target == g.source, g.target == h.source
  // and h.target == f.source[1].
  Triangle(ChainMap f, ChainMap g, ChainMap h);

  const ChainMap& f() const { return f_; }
  const ChainMap& g() const { return g_; }
  const ChainMap& h() const { return h_; }

 private:
  ChainMap f_, g_, h_;
};

// (f, inclusion, projection) from mapping_cone(f).
Triangle cone_triangle(const ChainMap& f);

// (f, g, h) |-> (g, h, -f[1]).
Triangle rotate_triangle(const Triangle& t);

// Checks exactness of
//   ... -> H^i(X) -> H^i(Y) -> H^i(Z) -> H^{i+1}(X) -> ...
// at every node: rank of the incoming map equals the nullity of the
// outgoing one, and consecutive induced maps compose to zero.
bool check_les_exact(const Triangle& t);

// Given cone triangles of f1 : X -> Y and f2 : X' -> Y' and maps
// k1 : X -> X', k2 : Y -> Y' with k2 f1 = f2 k1 (or, when s is given,
// k2 f1 - f2 k1 = d s + s d), returns k3 : MC(f1) -> MC(f2),
//   k3^i(a, b) = (k1^{i+1} a, s^{i+1} a + k2^i b).
// Throws InvalidArgument when the square neither commutes nor is witnessed.
ChainMap complete_triangle_morphism(const ChainMap& f1, const ChainMap& f2, const ChainMap& k1,
                                    const ChainMap& k2, const std::optional<Homotopy>& s = std::nullopt);

}  // namespace cochain
