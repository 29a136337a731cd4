#include "rigidline/transforms.hpp"

namespace rigidline {

namespace {

ProjectionSplit split_for_basis(const Framework& f, const std::vector<Vec>& ortho_basis) {
  const int ambient = f.config.dim;
  const int n = f.config.count();

  std::vector<Rational> gram;  // squared norms of the orthogonal basis vectors
  gram.reserve(ortho_basis.size());
  for (const Vec& u : ortho_basis) gram.push_back(dot(u, u));

  ProjectionSplit out;
  Configuration low;
  low.dim = ambient;
  low.points.reserve(n);
  out.heights.reserve(n);

  std::vector<Vec> coeffs(n);  // Gram coordinates of each point in the span
  for (int i = 0; i < n; ++i) {
    const Point& p = f.config.points[i];
    Point span_part(ambient, Rational(0));
    Vec t(ortho_basis.size());
    for (std::size_t r = 0; r < ortho_basis.size(); ++r) {
      t[r] = dot(p, ortho_basis[r]) / gram[r];
      if (t[r] != 0) span_part = vec_add(span_part, scaled(ortho_basis[r], t[r]));
    }
    out.heights.push_back(vec_sub(p, span_part));
    low.points.push_back(std::move(span_part));
    coeffs[i] = std::move(t);
  }
  out.low = Framework{f.graph, std::move(low)};

  // Reduced span coordinates exist exactly when every basis norm is a
  // rational square: x_r = t_r * |u_r| is then rational and isometric.
  std::vector<Rational> roots(ortho_basis.size());
  bool reducible = true;
  for (std::size_t r = 0; r < ortho_basis.size() && reducible; ++r)
    reducible = rational_sqrt(gram[r], roots[r]);
  if (reducible) {
    Configuration red;
    red.dim = static_cast<int>(ortho_basis.size());
    red.points.reserve(n);
    for (int i = 0; i < n; ++i) {
      Point x(red.dim);
      for (int r = 0; r < red.dim; ++r) x[r] = coeffs[i][r] * roots[r];
      red.points.push_back(std::move(x));
    }
    out.low_reduced = Framework{f.graph, std::move(red)};
  }

  // Same treatment for the complement.
  MatrixR span_rows = MatrixR::from_rows(ortho_basis);
  std::vector<Vec> comp = gram_schmidt(rref_kernel(span_rows).basis);
  std::vector<Rational> comp_gram, comp_roots(comp.size());
  bool comp_reducible = true;
  for (std::size_t r = 0; r < comp.size(); ++r) {
    comp_gram.push_back(dot(comp[r], comp[r]));
    if (!rational_sqrt(comp_gram[r], comp_roots[r])) comp_reducible = false;
  }
  if (comp_reducible) {
    std::vector<Point> hred(n, Point(comp.size(), Rational(0)));
    for (int i = 0; i < n; ++i)
      for (std::size_t r = 0; r < comp.size(); ++r)
        hred[i][r] = dot(out.heights[i], comp[r]) / comp_gram[r] * comp_roots[r];
    out.heights_reduced = std::move(hred);
  }
  return out;
}

}  // namespace

ProjectionSplit project_orthogonal(const Framework& f, int first_k) {
  if (first_k < 1 || first_k > f.config.dim)
    throw Error(Errc::DependentDirections,
                "coordinate count must be between 1 and the ambient dimension");
  std::vector<Vec> basis;
  for (int r = 0; r < first_k; ++r) {
    Vec e(f.config.dim, Rational(0));
    e[r] = 1;
    basis.push_back(std::move(e));
  }
  return split_for_basis(f, basis);
}

ProjectionSplit project_orthogonal(const Framework& f, const std::vector<Vec>& directions) {
  if (directions.empty())
    throw Error(Errc::DependentDirections, "no projection directions given");
  for (const Vec& d : directions)
    if (static_cast<int>(d.size()) != f.config.dim)
      throw Error(Errc::ShapeMismatch, "direction dimension mismatch");
  std::vector<Vec> ortho = gram_schmidt(directions);
  if (ortho.size() != directions.size())
    throw Error(Errc::DependentDirections, "direction vectors are linearly dependent");
  return split_for_basis(f, ortho);
}

Framework apply_affine(const Framework& f, const AffineMap& map) {
  if (map.a.cols() != f.config.dim)
    throw Error(Errc::ShapeMismatch, "map expects dimension " + std::to_string(map.a.cols()));
  if (static_cast<int>(map.b.size()) != map.a.rows())
    throw Error(Errc::ShapeMismatch, "translation size does not match matrix rows");
  Configuration image;
  image.dim = map.a.rows();
  image.points.reserve(f.config.count());
  for (const Point& p : f.config.points) image.points.push_back(vec_add(map.a * p, map.b));
  return Framework{f.graph, std::move(image)};
}

AffineInvarianceVerdict affine_invariance_demo(const Framework& f,
                                               const SuperStabilityCertificate& certificate,
                                               const AffineMap& map) {
  AffineInvarianceVerdict verdict;
  verdict.image = apply_affine(f, map);
  verdict.image_span = affine_span_dim(verdict.image.config);
  if (!certificate.certified() || !certificate.stress) {
    verdict.detail = "input framework carries no certificate";
    return verdict;
  }
  if (verdict.image_span == 0) {
    verdict.detail = "degenerate image: all points coincide";
    return verdict;
  }
  verdict.lift = certify_by_lift(reduce_to_affine_span(verdict.image), f, *certificate.stress);
  verdict.certified = verdict.lift->certified;
  verdict.detail = verdict.certified ? "image certified as affine image of a super-stable framework"
                                     : verdict.lift->failed_check;
  return verdict;
}

}  // namespace rigidline
