#include "fideal/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace fideal {

namespace {

std::size_t universe_size(Mask universe) {
  return std::size_t{1} << std::bit_width(universe);
}

// is_face[m] for every m inside the bit-width of `universe`.
std::vector<char> face_bitmap(const SimplicialComplex& complex, Mask universe) {
  std::vector<char> is_face(universe_size(universe | complex.vertices()), 0);
  for (Mask f : complex.facets()) {
    // Walk all submasks of f, including f and 0.
    Mask s = f;
    while (true) {
      is_face[s] = 1;
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return is_face;
}

// Maximal members of {m ⊆ universe : is_face[m]}.
std::vector<Mask> maximal_faces(const std::vector<char>& is_face, Mask universe) {
  std::vector<Mask> facets;
  Mask m = universe;
  while (true) {
    if (is_face[m]) {
      bool maximal = true;
      for (Mask rest = universe & ~m; rest; rest &= rest - 1) {
        if (is_face[m | (rest & (~rest + 1))]) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets.push_back(m);
    }
    if (m == 0) break;
    m = (m - 1) & universe;
  }
  return facets;
}

}  // namespace

FVector::FVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

std::uint64_t FVector::at(int i) const noexcept {
  const auto idx = static_cast<std::size_t>(i + 1);
  if (i < -1 || idx >= counts_.size()) return 0;
  return counts_[idx];
}

std::uint64_t FVector::total() const noexcept {
  std::uint64_t s = 0;
  for (auto c : counts_) s += c;
  return s;
}

std::string FVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << ')';
  return os.str();
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Mask> faces) {
  // Reverse canonical order puts supersets first; keep those not covered.
  std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) { return canonical_less(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  for (Mask f : faces) {
    bool covered = std::any_of(c.facets_.begin(), c.facets_.end(),
                               [f](Mask g) { return (f & ~g) == 0; });
    if (!covered) c.facets_.push_back(f);
  }
  std::sort(c.facets_.begin(), c.facets_.end(), canonical_less);
  for (Mask f : c.facets_) c.vertices_ |= f;
  return c;
}

bool SimplicialComplex::contains_face(Mask face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [face](Mask g) { return (face & ~g) == 0; });
}

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) fail(ErrorCode::void_complex, "the zero ideal has no facet complex");
  return SimplicialComplex::from_faces(ideal.generator_masks());
}

SimplicialComplex nonface_complex(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  const Mask universe = full_mask(n);
  std::vector<char> in_ideal(universe_size(universe), 0);
  for (Mask g : ideal.generator_masks()) in_ideal[g] = 1;
  // Upward closure, one variable at a time.
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m <= universe; ++m) {
      if ((m & bit) && in_ideal[m ^ bit]) in_ideal[m] = 1;
    }
  }
  std::vector<char> is_face(in_ideal.size());
  for (std::size_t m = 0; m < in_ideal.size(); ++m) is_face[m] = !in_ideal[m];
  return SimplicialComplex::from_faces(maximal_faces(is_face, universe));
}

FVector f_vector(const SimplicialComplex& complex) {
  if (complex.is_void()) return FVector{};
  const auto is_face = face_bitmap(complex, complex.vertices());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(popcount(complex.vertices())) + 2, 0);
  for (std::size_t m = 0; m < is_face.size(); ++m) {
    if (is_face[m]) ++counts[static_cast<std::size_t>(popcount(static_cast<Mask>(m)))];
  }
  return FVector(std::move(counts));
}

int dimension(const SimplicialComplex& complex) {
  if (complex.is_void()) fail(ErrorCode::void_complex, "the void complex has no dimension");
  // Facets are canonically ordered, largest last.
  return popcount(complex.facets().back()) - 1;
}

namespace {

void check_inside(const SimplicialComplex& complex, const VertexSet& ambient) {
  check_ambient(ambient.n);
  if ((ambient.mask & ~full_mask(ambient.n)) != 0) {
    fail(ErrorCode::index_out_of_range, "vertex set uses indices beyond n");
  }
  if ((complex.vertices() & ~ambient.mask) != 0) {
    fail(ErrorCode::invalid_argument, "complex has vertices outside the ambient vertex set");
  }
}

}  // namespace

SimplicialComplex alexander_dual(const SimplicialComplex& complex, const VertexSet& ambient) {
  check_inside(complex, ambient);
  const Mask x = ambient.mask;
  const auto in_complex = face_bitmap(complex, x);
  std::vector<char> is_face(in_complex.size(), 0);
  Mask f = x;
  while (true) {
    is_face[f] = !in_complex[x & ~f];
    if (f == 0) break;
    f = (f - 1) & x;
  }
  return SimplicialComplex::from_faces(maximal_faces(is_face, x));
}

MonomialIdeal nonface_ideal(const SimplicialComplex& complex, const VertexSet& ambient) {
  check_inside(complex, ambient);
  const Mask x = ambient.mask;
  const auto is_face = face_bitmap(complex, x);
  std::vector<Mask> minimal;
  Mask m = x;
  while (true) {
    if (!is_face[m]) {
      bool all_faces_below = true;
      for (Mask rest = m; rest; rest &= rest - 1) {
        if (!is_face[m & ~(rest & (~rest + 1))]) {
          all_faces_below = false;
          break;
        }
      }
      if (all_faces_below) minimal.push_back(m);
    }
    if (m == 0) break;
    m = (m - 1) & x;
  }
  // The void complex has ∅ as its only minimal non-face: the unit ideal.
  return MonomialIdeal::from_masks(ambient.n, minimal, {.allow_unit = true});
}

}  // namespace fideal
