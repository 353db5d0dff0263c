#include "cochain/cone.hpp"

#include <algorithm>
#include <vector>

#include "cochain/error.hpp"

namespace cochain {

MappingCone mapping_cone(const ChainMap& f) {
  const CochainComplex& a = f.source();
  const CochainComplex& b = f.target();
  require_valid(a);
  require_valid(b);
  require_valid(f);
  const Field& field = f.field();

  const int lo = std::min(a.lo() - 1, b.lo()), hi = std::max(a.hi() - 1, b.hi());
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int i = lo; i <= hi; ++i) dims[i] = a.dim(i + 1) + b.dim(i);
  for (int i = lo; i < hi; ++i) {
    diffs.emplace(i, BlockBuilder(field, {a.dim(i + 2), b.dim(i + 1)}, {a.dim(i + 1), b.dim(i)})
                         .put(0, 0, -a.differential(i + 1))
                         .put(1, 0, f.component(i + 1))
                         .put(1, 1, b.differential(i))
                         .build());
  }
  CochainComplex cone(field, lo, hi, dims, diffs);

  std::map<int, Matrix> incl, proj;
  for (int i = lo; i <= hi + 1; ++i) {
    incl.emplace(i, vstack(Matrix(field, a.dim(i + 1), b.dim(i)), Matrix::identity(field, b.dim(i))));
    proj.emplace(i, hstack(Matrix::identity(field, a.dim(i + 1)), Matrix(field, a.dim(i + 1), b.dim(i))));
  }
  ChainMap inclusion(b, cone, incl);
  ChainMap projection(cone, shift(a, 1), proj);
  return {std::move(cone), std::move(inclusion), std::move(projection)};
}

Triangle::Triangle(ChainMap f, ChainMap g, ChainMap h)
    : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
  if (!(f_.target() == g_.source())) throw ObjectMismatch("triangle: target of f is not source of g");
  if (!(g_.target() == h_.source())) throw ObjectMismatch("triangle: target of g is not source of h");
  if (!(h_.target() == shift(f_.source(), 1))) {
    throw ObjectMismatch("triangle: target of h is not the shifted source of f");
  }
}

Triangle cone_triangle(const ChainMap& f) {
  MappingCone mc = mapping_cone(f);
  return Triangle(f, std::move(mc.inclusion), std::move(mc.projection));
}

Triangle rotate_triangle(const Triangle& t) { return Triangle(t.g(), t.h(), -shift(t.f(), 1)); }

bool check_les_exact(const Triangle& t) {
  const CochainComplex& x = t.f().source();
  for (const ChainMap* m : {&t.f(), &t.g(), &t.h()}) {
    require_valid(m->source());
    require_valid(*m);
  }
  const int lo = std::min({x.lo(), t.g().source().lo(), t.h().source().lo()}) - 1;
  const int hi = std::max({x.hi(), t.g().source().hi(), t.h().source().hi()}) + 1;

  // The long sequence, node by node: H^i(f), H^i(g), H^i(h), H^{i+1}(f), ...
  // H^i(X[1]) and H^{i+1}(X) get identical canonical bases because negating
  // a differential leaves its reduced echelon form unchanged.
  std::vector<Matrix> arrows;
  for (int i = lo; i <= hi; ++i) {
    arrows.push_back(induced_cohomology_map(t.f(), i));
    arrows.push_back(induced_cohomology_map(t.g(), i));
    arrows.push_back(induced_cohomology_map(t.h(), i));
  }
  for (std::size_t n = 0; n + 1 < arrows.size(); ++n) {
    const Matrix& in = arrows[n];
    const Matrix& out = arrows[n + 1];
    if (in.rows() != out.cols()) throw std::logic_error("cohomology dimensions disagree along the sequence");
    if (!(out * in).is_zero()) return false;
    if (rank(in) != out.cols() - rank(out)) return false;
  }
  return true;
}

ChainMap complete_triangle_morphism(const ChainMap& f1, const ChainMap& f2, const ChainMap& k1,
                                    const ChainMap& k2, const std::optional<Homotopy>& s) {
  if (!(k1.source() == f1.source()) || !(k1.target() == f2.source()) ||
      !(k2.source() == f1.target()) || !(k2.target() == f2.target())) {
    throw ObjectMismatch("complete_triangle_morphism: k1, k2 do not connect the two triangles");
  }
  const ChainMap k2f1 = compose_chain_maps(k2, f1);
  const ChainMap f2k1 = compose_chain_maps(f2, k1);
  if (s) {
    if (!check_homotopy(f2k1, k2f1, *s)) {
      throw InvalidArgument("complete_triangle_morphism: s is not a homotopy from f2 k1 to k2 f1");
    }
  } else if (!(k2f1 == f2k1)) {
    throw InvalidArgument("complete_triangle_morphism: square does not commute and no homotopy given");
  }

  const MappingCone c1 = mapping_cone(f1);
  const MappingCone c2 = mapping_cone(f2);
  const Field& field = f1.field();
  const CochainComplex& x = f1.source();
  const CochainComplex& y = f1.target();
  const CochainComplex& x2 = f2.source();
  const CochainComplex& y2 = f2.target();

  std::map<int, Matrix> comps;
  const int lo = std::min(c1.complex.lo(), c2.complex.lo());
  const int hi = std::max(c1.complex.hi(), c2.complex.hi());
  for (int i = lo; i <= hi; ++i) {
    BlockBuilder block(field, {x2.dim(i + 1), y2.dim(i)}, {x.dim(i + 1), y.dim(i)});
    block.put(0, 0, k1.component(i + 1)).put(1, 1, k2.component(i));
    if (s) block.put(1, 0, s->component(i + 1));
    comps.emplace(i, block.build());
  }
  ChainMap k3(c1.complex, c2.complex, comps);
  require_valid(k3);
  return k3;
}

}  // namespace cochain
