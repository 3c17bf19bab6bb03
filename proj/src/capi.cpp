#include "fideal/fideal.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "fideal/complex.hpp"
#include "fideal/duality.hpp"
#include "fideal/enumeration.hpp"
#include "fideal/f_ideal.hpp"
#include "fideal/io.hpp"
#include "fideal/kruskal_katona.hpp"

struct fid_ideal {
  fideal::MonomialIdeal value;
};

struct fid_complex {
  fideal::SimplicialComplex value;
};

struct fid_census {
  fideal::CensusRecord value;
};

namespace {

thread_local std::string last_error;

fid_status code_of(fideal::ErrorCode code) {
  using fideal::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return FID_ERR_INVALID_ARGUMENT;
    case ErrorCode::ambient_mismatch: return FID_ERR_AMBIENT_MISMATCH;
    case ErrorCode::ambient_too_large: return FID_ERR_AMBIENT_TOO_LARGE;
    case ErrorCode::index_out_of_range: return FID_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::unit_generator: return FID_ERR_UNIT_GENERATOR;
    case ErrorCode::zero_ideal: return FID_ERR_ZERO_IDEAL;
    case ErrorCode::unit_ideal: return FID_ERR_UNIT_IDEAL;
    case ErrorCode::void_complex: return FID_ERR_VOID_COMPLEX;
    case ErrorCode::invalid_beta: return FID_ERR_INVALID_BETA;
    case ErrorCode::not_complementable: return FID_ERR_NOT_COMPLEMENTABLE;
    case ErrorCode::oracle_unavailable: return FID_ERR_ORACLE_UNAVAILABLE;
    case ErrorCode::inapplicable: return FID_ERR_INAPPLICABLE;
    case ErrorCode::internal_disagreement: return FID_ERR_INTERNAL_DISAGREEMENT;
    case ErrorCode::overflow: return FID_ERR_OVERFLOW;
    case ErrorCode::parse_error: return FID_ERR_PARSE;
  }
  return FID_ERR_INTERNAL;
}

fid_status set_error(fid_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
fid_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fideal::Error& e) {
    return set_error(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FID_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FID_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FID_ERR_INTERNAL, "unknown failure");
  }
}

#define FID_REQUIRE(ptr)                                                   \
  do {                                                                     \
    if ((ptr) == nullptr) return set_error(FID_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

template <class T, class Range>
fid_status copy_out(const Range& values, T* buffer, std::size_t capacity, std::size_t* count) {
  FID_REQUIRE(count);
  *count = values.size();
  if (buffer == nullptr && capacity == 0) return FID_OK;
  if (capacity < values.size()) {
    return set_error(FID_ERR_BUFFER_TOO_SMALL,
                     "need room for " + std::to_string(values.size()) + " entries");
  }
  std::size_t i = 0;
  for (const auto& v : values) buffer[i++] = static_cast<T>(v);
  return FID_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fideal::Check to_check(fideal::Check c) { return c; }

fid_check to_c(fideal::Check c) {
  switch (to_check(c)) {
    case fideal::Check::pass: return FID_CHECK_PASS;
    case fideal::Check::fail: return FID_CHECK_FAIL;
    case fideal::Check::vacuous: return FID_CHECK_VACUOUS;
  }
  return FID_CHECK_VACUOUS;
}

fideal::CensusOptions to_options(const fid_census_options* options) {
  fideal::CensusOptions o;
  if (!options) return o;
  o.budget = options->budget;
  o.witness_cap = options->witness_cap;
  o.workers = options->workers;
  o.seed = options->seed;
  o.prune = options->prune != 0;
  switch (options->mode) {
    case 1: o.mode = fideal::SearchMode::exhaustive; break;
    case 2: o.mode = fideal::SearchMode::sampled; break;
    default: o.mode = fideal::SearchMode::automatic; break;
  }
  o.count_orbits = options->count_orbits != 0;
  return o;
}

std::vector<std::uint64_t> fvec(const std::uint64_t* f, std::size_t len) {
  if (len > 0 && f == nullptr) fideal::fail(fideal::ErrorCode::invalid_argument, "f is null");
  return std::vector<std::uint64_t>(f, f + len);
}

}  // namespace

extern "C" {

const char* fid_last_error(void) { return last_error.c_str(); }

const char* fid_status_string(fid_status status) {
  switch (status) {
    case FID_OK: return "ok";
    case FID_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case FID_ERR_NULL_ARGUMENT: return "null argument";
    case FID_ERR_IO: return "i/o error";
    case FID_ERR_INTERNAL: return "internal error";
    default: break;
  }
  using fideal::ErrorCode;
  for (auto code : {ErrorCode::invalid_argument, ErrorCode::ambient_mismatch, ErrorCode::ambient_too_large,
                    ErrorCode::index_out_of_range, ErrorCode::unit_generator, ErrorCode::zero_ideal,
                    ErrorCode::unit_ideal, ErrorCode::void_complex, ErrorCode::invalid_beta,
                    ErrorCode::not_complementable, ErrorCode::oracle_unavailable, ErrorCode::inapplicable,
                    ErrorCode::internal_disagreement, ErrorCode::overflow, ErrorCode::parse_error}) {
    if (code_of(code) == status) return fideal::to_string(code);
  }
  return "unknown status";
}

void fid_string_free(char* s) { std::free(s); }

const char* fid_version(void) { return "1.0.0"; }

fid_status fid_ideal_from_masks(int n, const uint32_t* masks, size_t count, int allow_unit,
                                fid_ideal** out, int* reduced) {
  FID_REQUIRE(out);
  if (count > 0) FID_REQUIRE(masks);
  return guarded([&] {
    auto ideal = fideal::MonomialIdeal::from_masks(n, std::span<const uint32_t>(masks, count),
                                                   {.allow_unit = allow_unit != 0});
    if (reduced) *reduced = ideal.input_was_reduced();
    *out = new fid_ideal{std::move(ideal)};
    return FID_OK;
  });
}

fid_status fid_ideal_parse(const char* text, int allow_unit, fid_ideal** out, int* reduced, char** label) {
  FID_REQUIRE(text);
  FID_REQUIRE(out);
  return guarded([&] {
    auto parsed = fideal::parse_ideal(text, allow_unit != 0);
    char* label_copy = nullptr;
    if (label) label_copy = parsed.label ? dup_string(*parsed.label) : nullptr;
    if (reduced) *reduced = parsed.reduced;
    if (label) *label = label_copy;
    *out = new fid_ideal{std::move(parsed.ideal)};
    return FID_OK;
  });
}

fid_ideal* fid_ideal_clone(const fid_ideal* ideal) {
  if (!ideal) return nullptr;
  return new (std::nothrow) fid_ideal{ideal->value};
}

void fid_ideal_free(fid_ideal* ideal) { delete ideal; }

fid_status fid_ideal_render(const fid_ideal* ideal, fid_format format, char** out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(format == FID_FORMAT_RECORD ? fideal::render_record(ideal->value)
                                                  : fideal::render_text(ideal->value));
    return FID_OK;
  });
}

int fid_ideal_ambient(const fid_ideal* ideal) { return ideal ? ideal->value.ambient() : -1; }

fid_status fid_ideal_generators(const fid_ideal* ideal, uint32_t* masks, size_t capacity, size_t* count) {
  FID_REQUIRE(ideal);
  return guarded([&] { return copy_out(ideal->value.generator_masks(), masks, capacity, count); });
}

int fid_ideal_equal(const fid_ideal* a, const fid_ideal* b) {
  return a && b && a->value == b->value;
}

fid_status fid_ideal_contains(const fid_ideal* ideal, uint32_t monomial, int* out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = fideal::contains(ideal->value, fideal::Monomial(ideal->value.ambient(), monomial));
    return FID_OK;
  });
}

fid_status fid_ideal_degree_extremes(const fid_ideal* ideal, int* alpha, int* omega) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(alpha);
  FID_REQUIRE(omega);
  return guarded([&] {
    const auto e = fideal::degree_extremes(ideal->value);
    *alpha = e.alpha;
    *omega = e.omega;
    return FID_OK;
  });
}

fid_status fid_ideal_minimal_primes(const fid_ideal* ideal, uint32_t* primes, size_t capacity,
                                    size_t* count, int* height, int* unmixed) {
  FID_REQUIRE(ideal);
  return guarded([&] {
    const auto p = fideal::minimal_primes(ideal->value);
    std::vector<uint32_t> masks;
    for (const auto& m : p.primes) masks.push_back(m.support());
    if (height) *height = p.height;
    if (unmixed) *unmixed = p.unmixed;
    return copy_out(masks, primes, capacity, count);
  });
}

fid_status fid_monomials_of_degree(int n, int d, uint32_t* masks, size_t capacity, size_t* count) {
  return guarded([&] { return copy_out(fideal::masks_of_degree(n, d), masks, capacity, count); });
}

fid_status fid_complex_from_faces(const uint32_t* faces, size_t count, fid_complex** out) {
  FID_REQUIRE(out);
  if (count > 0) FID_REQUIRE(faces);
  return guarded([&] {
    *out = new fid_complex{fideal::SimplicialComplex::from_faces(std::vector<uint32_t>(faces, faces + count))};
    return FID_OK;
  });
}

fid_complex* fid_complex_void(void) { return new (std::nothrow) fid_complex{}; }

void fid_complex_free(fid_complex* complex) { delete complex; }

fid_status fid_facet_complex(const fid_ideal* ideal, fid_complex** out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_complex{fideal::facet_complex(ideal->value)};
    return FID_OK;
  });
}

fid_status fid_nonface_complex(const fid_ideal* ideal, fid_complex** out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_complex{fideal::nonface_complex(ideal->value)};
    return FID_OK;
  });
}

uint32_t fid_complex_vertices(const fid_complex* complex) { return complex ? complex->value.vertices() : 0; }

fid_status fid_complex_facets(const fid_complex* complex, uint32_t* facets, size_t capacity, size_t* count) {
  FID_REQUIRE(complex);
  return guarded([&] { return copy_out(complex->value.facets(), facets, capacity, count); });
}

int fid_complex_is_void(const fid_complex* complex) { return complex ? complex->value.is_void() : 1; }

int fid_complex_equal(const fid_complex* a, const fid_complex* b) {
  return a && b && a->value == b->value;
}

fid_status fid_complex_fvector(const fid_complex* complex, uint64_t* f, size_t capacity, size_t* len) {
  FID_REQUIRE(complex);
  return guarded([&] { return copy_out(fideal::f_vector(complex->value).counts(), f, capacity, len); });
}

fid_status fid_complex_dimension(const fid_complex* complex, int* dim) {
  FID_REQUIRE(complex);
  FID_REQUIRE(dim);
  return guarded([&] {
    *dim = fideal::dimension(complex->value);
    return FID_OK;
  });
}

fid_status fid_alexander_dual(const fid_complex* complex, int n, uint32_t ambient, fid_complex** out) {
  FID_REQUIRE(complex);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_complex{fideal::alexander_dual(complex->value, {n, ambient})};
    return FID_OK;
  });
}

fid_status fid_nonface_ideal(const fid_complex* complex, int n, uint32_t ambient, fid_ideal** out) {
  FID_REQUIRE(complex);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_ideal{fideal::nonface_ideal(complex->value, {n, ambient})};
    return FID_OK;
  });
}

fid_status fid_newton_dual(const fid_ideal* ideal, int allow_unit, fid_ideal** out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_ideal{fideal::newton_dual(ideal->value, {.allow_unit = allow_unit != 0})};
    return FID_OK;
  });
}

fid_status fid_generalized_dual(int n, const uint32_t* exponents, size_t p, const uint32_t* beta,
                                uint32_t* out, size_t capacity_rows, size_t* rows) {
  if (p > 0) FID_REQUIRE(exponents);
  if (n > 0) FID_REQUIRE(beta);
  FID_REQUIRE(rows);
  return guarded([&] {
    const auto width = static_cast<std::size_t>(n < 0 ? 0 : n);
    std::vector<fideal::ExponentMonomial> gens;
    for (std::size_t r = 0; r < p; ++r) {
      gens.emplace_back(std::vector<std::uint32_t>(exponents + r * width, exponents + (r + 1) * width));
    }
    const auto dual = fideal::generalized_newton_dual(fideal::ExponentIdeal(n, gens),
                                                      fideal::BetaVector(beta, beta + width));
    const auto& result = dual.generators();
    *rows = result.size();
    if (out == nullptr && capacity_rows == 0) return FID_OK;
    if (capacity_rows < result.size()) {
      return set_error(FID_ERR_BUFFER_TOO_SMALL, "need room for " + std::to_string(result.size()) + " rows");
    }
    for (std::size_t r = 0; r < result.size(); ++r) {
      for (std::size_t c = 0; c < width; ++c) out[r * width + c] = result[r][c];
    }
    return FID_OK;
  });
}

fid_status fid_dual_divisor_count(const fid_ideal* ideal, int j, uint64_t* lhs, uint64_t* rhs) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(lhs);
  FID_REQUIRE(rhs);
  return guarded([&] {
    const auto c = fideal::dual_divisor_count(ideal->value, j);
    *lhs = c.lhs;
    *rhs = c.rhs;
    return FID_OK;
  });
}

fid_status fid_degree_partition(const fid_ideal* ideal, int d, fid_partition_sizes* sizes) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(sizes);
  return guarded([&] {
    const auto p = fideal::degree_partition(ideal->value, d);
    *sizes = {p.a.size(), p.b.size(), p.c.size(), p.d.size()};
    return FID_OK;
  });
}

fid_status fid_degree_partition_members(const fid_ideal* ideal, int d, fid_partition_class which,
                                        uint32_t* masks, size_t capacity, size_t* count) {
  FID_REQUIRE(ideal);
  return guarded([&] {
    const auto p = fideal::degree_partition(ideal->value, d);
    const std::vector<fideal::Monomial>* part = nullptr;
    switch (which) {
      case FID_CLASS_A: part = &p.a; break;
      case FID_CLASS_B: part = &p.b; break;
      case FID_CLASS_C: part = &p.c; break;
      case FID_CLASS_D: part = &p.d; break;
      default: return set_error(FID_ERR_INVALID_ARGUMENT, "unknown partition class");
    }
    std::vector<uint32_t> out;
    for (const auto& m : *part) out.push_back(m.support());
    return copy_out(out, masks, capacity, count);
  });
}

fid_status fid_is_f_ideal(const fid_ideal* ideal, fid_method method, int* out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    fideal::Method m = fideal::Method::both;
    if (method == FID_METHOD_FVECTOR) m = fideal::Method::fvector;
    else if (method == FID_METHOD_PARTITION) m = fideal::Method::partition;
    *out = fideal::is_f_ideal(ideal->value, m);
    return FID_OK;
  });
}

fid_status fid_certify(const fid_ideal* ideal, fid_certificate* out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    const auto cert = fideal::certify(ideal->value);
    fid_certificate c{};
    c.is_f_ideal = cert.is_f_ideal;
    c.facet_len = cert.facet_fvector.size();
    for (std::size_t i = 0; i < c.facet_len; ++i) c.facet_fvector[i] = cert.facet_fvector.counts()[i];
    c.nonface_len = cert.nonface_fvector.size();
    for (std::size_t i = 0; i < c.nonface_len; ++i) c.nonface_fvector[i] = cert.nonface_fvector.counts()[i];
    c.size_count = cert.sizes.size();
    for (std::size_t d = 0; d < c.size_count; ++d) {
      const auto& s = cert.sizes[d];
      c.sizes[d] = {s.a, s.b, s.c, s.d};
    }
    if (cert.first_failure) {
      c.has_failure = 1;
      c.failure_degree = cert.first_failure->degree;
      c.failure_a = cert.first_failure->a_size;
      c.failure_c = cert.first_failure->c_size;
    }
    for (auto w : cert.warnings) {
      switch (w) {
        case fideal::Warning::full_monomial_generator: c.warnings |= FID_WARN_FULL_MONOMIAL_GENERATOR; break;
        case fideal::Warning::distinct_vertex_sets: c.warnings |= FID_WARN_DISTINCT_VERTEX_SETS; break;
        case fideal::Warning::dimension_mismatch: c.warnings |= FID_WARN_DIMENSION_MISMATCH; break;
      }
    }
    *out = c;
    return FID_OK;
  });
}

fid_status fid_necessary_conditions(const fid_ideal* ideal, fid_necessary_report* out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    const auto r = fideal::necessary_conditions(ideal->value);
    fid_necessary_report c{};
    c.applicable = r.applicable;
    c.alpha = r.alpha;
    c.omega = r.omega;
    c.items[0] = to_c(r.item1);
    c.items[1] = to_c(r.item2);
    c.items[2] = to_c(r.item3);
    c.items[3] = to_c(r.item4);
    c.items[4] = to_c(r.item5);
    c.all_pass = r.all_pass();
    *out = c;
    return FID_OK;
  });
}

fid_status fid_generator_implications(const fid_ideal* ideal, fid_generator_report* out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    const auto r = fideal::generator_degree_implications(ideal->value);
    auto conv = [](const fideal::Implication& i) {
      return fid_implication{i.hypothesis, to_c(i.conclusion), i.lhs, i.rhs};
    };
    *out = fid_generator_report{r.applicable, r.alpha, r.omega, conv(r.raises_alpha), conv(r.lowers_omega)};
    return FID_OK;
  });
}

fid_status fid_n_minus_2_equivalence(const fid_ideal* ideal, fid_equivalence_report* out) {
  FID_REQUIRE(ideal);
  FID_REQUIRE(out);
  return guarded([&] {
    const auto r = fideal::equigenerated_n_minus_2_equivalence(ideal->value);
    *out = fid_equivalence_report{r.applicable, r.ideal_is_f, r.dual_is_f, r.dual_unmixed_with_half_generators,
                                 r.dual_uses_every_variable};
    return FID_OK;
  });
}

fid_status fid_macaulay_expansion(uint64_t a, int j, uint64_t* tops, size_t capacity, size_t* count) {
  return guarded([&] {
    std::vector<uint64_t> out;
    for (const auto& t : fideal::macaulay_expansion(a, j).terms) out.push_back(t.top);
    return copy_out(out, tops, capacity, count);
  });
}

fid_status fid_macaulay_bound(uint64_t a, int j, uint64_t* out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = fideal::macaulay_bound(a, j);
    return FID_OK;
  });
}

fid_status fid_kk_valid(const uint64_t* f, size_t len, int* out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = fideal::kk_valid(fvec(f, len));
    return FID_OK;
  });
}

fid_status fid_kk_valid_dual(const uint64_t* f, size_t len, int n, int* out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = fideal::kk_valid_dual(fvec(f, len), n);
    return FID_OK;
  });
}

fid_status fid_complement_fvector(const uint64_t* f, size_t len, int n, int trimmed, uint64_t* out,
                                  size_t capacity, size_t* out_len) {
  return guarded([&] {
    const auto c = fideal::complement_fvector(fvec(f, len), n);
    return copy_out(trimmed ? c.trimmed : c.raw, out, capacity, out_len);
  });
}

fid_status fid_exists_complex(const uint64_t* f, size_t len, int* out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = fideal::exists_complex_oracle(fvec(f, len));
    return FID_OK;
  });
}

void fid_census_options_default(fid_census_options* options) {
  if (!options) return;
  const fideal::CensusOptions d;
  *options = fid_census_options{d.budget, d.witness_cap, d.workers, d.seed, d.prune ? 1 : 0, 0,
                                d.count_orbits ? 1 : 0};
}

fid_status fid_enumerate_v(int n, int d, const fid_census_options* options, fid_census** out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_census{fideal::enumerate_V(n, d, to_options(options))};
    return FID_OK;
  });
}

fid_status fid_enumerate_all(int n, const fid_census_options* options, fid_census** out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_census{fideal::enumerate_all_fideals(n, to_options(options))};
    return FID_OK;
  });
}

fid_status fid_search_gap(int n, int gap, const fid_census_options* options, fid_census** out) {
  FID_REQUIRE(out);
  return guarded([&] {
    *out = new fid_census{fideal::search_degree_gap(n, gap, to_options(options))};
    return FID_OK;
  });
}

fid_status fid_verify_pairing(int n, int d, const fid_census_options* options, fid_pairing_report* out) {
  FID_REQUIRE(out);
  return guarded([&] {
    const auto r = fideal::verify_duality_pairing(n, d, to_options(options));
    *out = fid_pairing_report{r.count, r.dual_count, r.equal, r.bijection_checked, r.inconclusive};
    return FID_OK;
  });
}

void fid_census_free(fid_census* census) { delete census; }

uint64_t fid_census_count(const fid_census* census) { return census ? census->value.count : 0; }

uint64_t fid_census_candidates(const fid_census* census) { return census ? census->value.candidates : 0; }

int fid_census_budget_exhausted(const fid_census* census) { return census ? census->value.budget_exhausted : 0; }

int fid_census_sampled(const fid_census* census) { return census ? census->value.sampled : 0; }

double fid_census_elapsed(const fid_census* census) { return census ? census->value.elapsed_seconds : 0.0; }

int64_t fid_census_orbits(const fid_census* census) {
  if (!census || !census->value.orbits) return -1;
  return static_cast<int64_t>(*census->value.orbits);
}

size_t fid_census_witness_count(const fid_census* census) { return census ? census->value.witnesses.size() : 0; }

fid_status fid_census_witness(const fid_census* census, size_t index, fid_ideal** out) {
  FID_REQUIRE(census);
  FID_REQUIRE(out);
  if (index >= census->value.witnesses.size()) {
    return set_error(FID_ERR_INDEX_OUT_OF_RANGE, "witness index out of range");
  }
  return guarded([&] {
    *out = new fid_ideal{census->value.witnesses[index]};
    return FID_OK;
  });
}

fid_status fid_census_render(const fid_census* census, fid_format format, char** out) {
  FID_REQUIRE(census);
  FID_REQUIRE(out);
  return guarded([&] {
    std::ostringstream os;
    fideal::write_census(os, census->value,
                         format == FID_FORMAT_RECORD ? fideal::Format::records : fideal::Format::table);
    *out = dup_string(os.str());
    return FID_OK;
  });
}

}  // extern "C"
