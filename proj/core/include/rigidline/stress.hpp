#pragma once

#include <optional>
#include <vector>

#include "rigidline/framework.hpp"
#include "rigidline/psd.hpp"

namespace rigidline {

/// Edge-indexed weights in the graph's canonical edge order; weights of
/// non-edges read as zero.
struct Stress {
  Graph graph;
  Vec values;

  Rational at(int i, int j) const;
  bool is_zero() const { return is_zero_vec(values); }
  bool operator==(const Stress&) const = default;
};

Stress make_stress(const Graph& graph, Vec values);
Stress stress_scaled(const Stress& w, const Rational& s);
Stress stress_sum(const Stress& a, const Stress& b);

/// n x n symmetric matrix with -w_ij off-diagonal and row sums zero by
/// construction, whatever the configuration.
MatrixR stress_matrix(const Graph& graph, const Stress& w);

/// m x (d n) matrix: the row of edge {i,j} carries p_i - p_j in vertex i's
/// column block and the negation in vertex j's block.
MatrixR rigidity_matrix(const Framework& f);

/// Canonical kernel basis of the transposed rigidity matrix; every element
/// satisfies the vertex equilibrium condition exactly.
std::vector<Stress> equilibrium_stress_basis(const Framework& f);

/// Tests the per-vertex equilibrium sums and the matrix identity
/// P_hat * Omega = 0; the two routes must agree (a mismatch is an internal
/// inconsistency, not a verdict).
bool is_equilibrium(const Framework& f, const Stress& w);

/// Configuration in dimension (kernel dim - 1) whose augmented matrix rows
/// span the kernel of Omega(w). Mean-centered canonical kernel vectors,
/// orthogonalized over the rationals.
Configuration universal_configuration(const Graph& graph, const Stress& w);

/// True iff P_hat * Omega = 0 and rank(P_hat) equals the kernel dimension of
/// Omega, so the augmented rows span the whole cokernel.
bool is_universal_for(const Framework& f, const Stress& w);

/// Nonzero symmetric Q with e^T Q e = 0 for every edge direction e.
struct ConicWitness {
  MatrixR q;  // d x d symmetric, nonzero
};

/// Solves the m x d(d+1)/2 linear system over the independent entries of Q
/// (cross terms doubled) and returns a verified witness, or nullopt when the
/// edge directions avoid every conic.
std::optional<ConicWitness> conic_at_infinity(const Framework& f);

/// Exact test: rank of the rigidity matrix equals d n - d(d+1)/2.
/// Requires the configuration to span the ambient dimension and n >= d+1.
bool is_infinitesimally_rigid(const Framework& f);

}  // namespace rigidline
