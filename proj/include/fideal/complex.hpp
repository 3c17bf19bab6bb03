#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fideal/ideal.hpp"

namespace fideal {

/// f-vector (f_{-1}, f_0, ..., f_d). Empty for the void complex; never has
/// trailing zeros. Equality is length-sensitive.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::uint64_t> counts);

  /// f_i for i >= -1; zero past the dimension.
  std::uint64_t at(int i) const noexcept;
  std::uint64_t operator[](int i) const noexcept { return at(i); }

  /// d, where the vector holds d+2 entries. -2 for the void complex.
  int dimension() const noexcept { return static_cast<int>(counts_.size()) - 2; }
  bool empty() const noexcept { return counts_.empty(); }
  std::size_t size() const noexcept { return counts_.size(); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;

  /// "(1,5,8,2)"; the void complex renders as "()".
  std::string to_string() const;

  bool operator==(const FVector&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// A vertex set X inside {1..n}.
struct VertexSet {
  int n = 0;
  Mask mask = 0;

  static VertexSet all(int n) { return {n, full_mask(n)}; }
};

/// A simplicial complex given by its facets. The vertex set is the union of
/// the facets. The void complex has no facets; the irrelevant complex {∅} has
/// the single facet ∅.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal members of `faces` as facets.
  static SimplicialComplex from_faces(std::vector<Mask> faces);
  static SimplicialComplex irrelevant() { return from_faces({0}); }
  static SimplicialComplex simplex(Mask vertices) { return from_faces({vertices}); }

  Mask vertices() const noexcept { return vertices_; }
  const std::vector<Mask>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool is_irrelevant() const noexcept { return facets_.size() == 1 && facets_.front() == 0; }
  bool contains_face(Mask face) const noexcept;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  Mask vertices_ = 0;
  std::vector<Mask> facets_;
};

/// δ_F(I): facets are the generator supports.
SimplicialComplex facet_complex(const MonomialIdeal& ideal);

/// δ_N(I): faces are the supports of square-free monomials outside I.
SimplicialComplex nonface_complex(const MonomialIdeal& ideal);

FVector f_vector(const SimplicialComplex& complex);

/// Throws ErrorCode::void_complex on the void complex.
int dimension(const SimplicialComplex& complex);

/// {F ⊆ X : X \ F ∉ Δ}.
SimplicialComplex alexander_dual(const SimplicialComplex& complex, const VertexSet& ambient);

/// Ideal of k[x_1..x_n] generated by the minimal non-faces of Δ inside X.
MonomialIdeal nonface_ideal(const SimplicialComplex& complex, const VertexSet& ambient);

}  // namespace fideal
