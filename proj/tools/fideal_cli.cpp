// Command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fideal/fideal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct Failure {
  fid_status status;
  std::string message;
};

void check(fid_status s) {
  if (s != FID_OK) {
    const std::string detail = fid_last_error();
    throw Failure{s, detail.empty() ? fid_status_string(s) : detail};
  }
}

template <class T>
struct Owned {
  T* ptr = nullptr;
  void (*release)(T*) = nullptr;
  Owned(T* p, void (*r)(T*)) : ptr(p), release(r) {}
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() {
    if (ptr) release(ptr);
  }
  T* get() const { return ptr; }
};

using IdealPtr = Owned<fid_ideal>;
using ComplexPtr = Owned<fid_complex>;
using CensusPtr = Owned<fid_census>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  fid_string_free(s);
  return out;
}

template <class T, class Fn>
std::vector<T> fetch(Fn&& fn) {
  std::size_t count = 0;
  check(fn(nullptr, 0, &count));
  std::vector<T> out(count);
  if (count > 0) check(fn(out.data(), out.size(), &count));
  return out;
}

std::string render_tuple(const std::vector<std::uint64_t>& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f[i]);
  }
  return out + ")";
}

std::string render_face(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (mask >> i & 1u) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

std::string render_monomial(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if (mask >> i & 1u) {
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(i + 1);
    }
  }
  return out;
}

std::vector<std::uint64_t> parse_tuple(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token[0] == '-') {
      throw Failure{FID_ERR_PARSE, "not a non-negative integer: " + token};
    }
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ' || c == '\t') continue;
    if (c == ',') {
      if (token.empty()) throw Failure{FID_ERR_PARSE, "empty entry in vector"};
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

struct InputOptions {
  std::string path;
  std::string expr;
  bool allow_unit = false;
};

std::string read_input(const InputOptions& in) {
  if (!in.expr.empty()) return in.expr;
  if (in.path.empty() || in.path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream file(in.path);
  if (!file) throw Failure{FID_ERR_IO, "cannot open " + in.path};
  return std::string(std::istreambuf_iterator<char>(file), {});
}

IdealPtr load_ideal(const InputOptions& in) {
  const std::string text = read_input(in);
  fid_ideal* raw = nullptr;
  int reduced = 0;
  char* label = nullptr;
  check(fid_ideal_parse(text.c_str(), in.allow_unit ? 1 : 0, &raw, &reduced, &label));
  fid_string_free(label);
  if (reduced) std::cerr << "warning: input generators were not minimal; using the minimal generating set\n";
  return IdealPtr(raw, fid_ideal_free);
}

std::vector<std::uint64_t> fvector_of(const fid_complex* c) {
  return fetch<std::uint64_t>([c](std::uint64_t* b, std::size_t cap, std::size_t* n) {
    return fid_complex_fvector(c, b, cap, n);
  });
}

ComplexPtr facet_of(const fid_ideal* ideal) {
  fid_complex* c = nullptr;
  check(fid_facet_complex(ideal, &c));
  return ComplexPtr(c, fid_complex_free);
}

ComplexPtr nonface_of(const fid_ideal* ideal) {
  fid_complex* c = nullptr;
  check(fid_nonface_complex(ideal, &c));
  return ComplexPtr(c, fid_complex_free);
}

const char* check_name(fid_check c) {
  switch (c) {
    case FID_CHECK_PASS: return "pass";
    case FID_CHECK_FAIL: return "fail";
    case FID_CHECK_VACUOUS: return "vacuous";
  }
  return "?";
}

const char* yes_no(int v) { return v ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free monomial ideals: complexes, f-vectors, duality, f-ideal census"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(fid_version()));

  std::string format = "table";
  bool strict = false;
  unsigned workers = 1;
  std::uint64_t budget = 0;
  std::size_t witness_cap = 0;
  std::uint64_t seed = 1;
  InputOptions input;

  fid_census_options census;
  fid_census_options_default(&census);
  budget = census.budget;
  witness_cap = census.witness_cap;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_flag("--strict", strict, "Exit 1 on a mathematical negative");
  app.add_option("--workers", workers, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", budget, "Candidate budget for enumeration");
  app.add_option("--witness-cap", witness_cap, "Maximum witnesses kept per census");
  app.add_option("--seed", seed, "Seed for randomized search");
  app.add_flag("--allow-unit", input.allow_unit, "Accept the unit monomial as a generator");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input.path, "Ideal file (text or record); '-' or omitted reads stdin");
    sub->add_option("-e,--ideal", input.expr, "Ideal given inline");
  };

  auto* fvector = app.add_subcommand("fvector", "f-vectors of the facet and non-face complexes");
  add_input(fvector);
  auto* complexes = app.add_subcommand("complexes", "Facets of the facet and non-face complexes");
  add_input(complexes);
  auto* dual = app.add_subcommand("dual", "Newton complementary dual");
  add_input(dual);
  auto* check_cmd = app.add_subcommand("check", "Decide the f-ideal property");
  add_input(check_cmd);
  auto* certify = app.add_subcommand("certify", "f-ideal certificate with partition sizes and degree bound reports");
  add_input(certify);
  auto* partition = app.add_subcommand("partition", "A/B/C/D degree partition");
  add_input(partition);
  int partition_degree = -1;
  partition->add_option("-d,--d", partition_degree, "List the members of one degree");
  auto* primes = app.add_subcommand("primes", "Minimal primes (minimal vertex covers)");
  add_input(primes);

  auto* kk = app.add_subcommand("kk", "Check a vector against the four Kruskal-Katona criteria");
  std::string kk_vector;
  int kk_n = -1;
  kk->add_option("vector", kk_vector, "Vector such as (1,5,8,2)")->required();
  kk->add_option("-n,--n", kk_n, "Ambient vertex count for the dual criteria (default f_0)");

  auto* kk_expand = app.add_subcommand("kk-expand", "Macaulay expansion of a with respect to j");
  std::uint64_t expand_a = 0;
  int expand_j = 0;
  kk_expand->add_option("a", expand_a)->required();
  kk_expand->add_option("j", expand_j)->required();

  auto* complement = app.add_subcommand("complement", "Complement vector C(n,i) - f_{n-i-1}");
  std::string complement_vector;
  int complement_n = -1;
  complement->add_option("vector", complement_vector)->required();
  complement->add_option("-n,--n", complement_n)->required();

  int census_n = 0, census_d = 0, census_gap = 0;
  bool no_prune = false, orbits = false;
  std::string mode = "auto";
  auto* enumerate = app.add_subcommand("enumerate", "Census of f-ideals (V(n,d) with --d, all f-ideals without)");
  enumerate->add_option("--n", census_n)->required();
  auto* d_opt = enumerate->add_option("--d", census_d);
  enumerate->add_flag("--no-prune", no_prune, "Do not restrict to C(n,d)/2 generators");
  enumerate->add_flag("--orbits", orbits, "Also count orbits under variable relabeling");
  enumerate->add_option("--mode", mode, "Search mode without --d")->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));

  auto* pair = app.add_subcommand("pair", "Check |V(n,d)| = |V(n,n-d)| through the Newton dual");
  pair->add_option("--n", census_n)->required();
  pair->add_option("--d", census_d)->required();

  auto* gap = app.add_subcommand("gap-search", "Search for f-ideals with a given omega - alpha");
  gap->add_option("--n", census_n)->required();
  gap->add_option("--gap", census_gap)->required();
  gap->add_option("--mode", mode, "Search mode")->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const bool records = format == "records";
  census.budget = budget;
  census.witness_cap = witness_cap;
  census.workers = workers;
  census.seed = seed;
  census.prune = no_prune ? 0 : 1;
  census.mode = mode == "exhaustive" ? 1 : mode == "sampled" ? 2 : 0;
  census.count_orbits = orbits ? 1 : 0;

  try {
    auto emit_census = [&](fid_census* raw) {
      CensusPtr c(raw, fid_census_free);
      char* text = nullptr;
      check(fid_census_render(c.get(), records ? FID_FORMAT_RECORD : FID_FORMAT_TEXT, &text));
      std::cout << take_string(text);
      if (!records && fid_census_orbits(c.get()) >= 0) {
        std::cout << "# orbits=" << fid_census_orbits(c.get()) << '\n';
      }
      const bool negative = fid_census_count(c.get()) == 0 || fid_census_budget_exhausted(c.get());
      return strict && negative ? kExitNegative : kExitOk;
    };

    if (*fvector) {
      auto ideal = load_ideal(input);
      auto facet = facet_of(ideal.get());
      auto nonface = nonface_of(ideal.get());
      const auto ff = fvector_of(facet.get()), fn = fvector_of(nonface.get());
      if (records) {
        std::cout << "{\"facet\":[";
        for (std::size_t i = 0; i < ff.size(); ++i) std::cout << (i ? "," : "") << ff[i];
        std::cout << "],\"nonface\":[";
        for (std::size_t i = 0; i < fn.size(); ++i) std::cout << (i ? "," : "") << fn[i];
        std::cout << "]}\n";
      } else {
        std::cout << "f(facet)   = " << render_tuple(ff) << '\n';
        std::cout << "f(nonface) = " << render_tuple(fn) << '\n';
      }
      return kExitOk;
    }

    if (*complexes) {
      auto ideal = load_ideal(input);
      auto show = [](const char* name, const fid_complex* c) {
        const auto facets = fetch<std::uint32_t>([c](std::uint32_t* b, std::size_t cap, std::size_t* n) {
          return fid_complex_facets(c, b, cap, n);
        });
        std::cout << name << ": ";
        if (fid_complex_is_void(c)) {
          std::cout << "void\n";
          return;
        }
        std::cout << '<';
        for (std::size_t i = 0; i < facets.size(); ++i) std::cout << (i ? ", " : "") << render_face(facets[i]);
        std::cout << ">  f = " << render_tuple(fvector_of(c)) << '\n';
      };
      auto facet = facet_of(ideal.get());
      auto nonface = nonface_of(ideal.get());
      show("facet", facet.get());
      show("nonface", nonface.get());
      return kExitOk;
    }

    if (*dual) {
      auto ideal = load_ideal(input);
      fid_ideal* raw = nullptr;
      check(fid_newton_dual(ideal.get(), input.allow_unit ? 1 : 0, &raw));
      IdealPtr d(raw, fid_ideal_free);
      char* text = nullptr;
      check(fid_ideal_render(d.get(), records ? FID_FORMAT_RECORD : FID_FORMAT_TEXT, &text));
      std::cout << take_string(text) << '\n';
      return kExitOk;
    }

    if (*check_cmd) {
      auto ideal = load_ideal(input);
      fid_certificate cert;
      check(fid_certify(ideal.get(), &cert));
      const std::vector<std::uint64_t> ff(cert.facet_fvector, cert.facet_fvector + cert.facet_len);
      const std::vector<std::uint64_t> fn(cert.nonface_fvector, cert.nonface_fvector + cert.nonface_len);
      if (records) {
        std::cout << "{\"f_ideal\":" << yes_no(cert.is_f_ideal) << ",\"facet\":\"" << render_tuple(ff)
                  << "\",\"nonface\":\"" << render_tuple(fn) << "\"}\n";
      } else if (cert.is_f_ideal) {
        std::cout << "f-ideal: true; f = " << render_tuple(ff) << '\n';
      } else {
        std::cout << "f-ideal: false; f(facet) = " << render_tuple(ff) << ", f(nonface) = " << render_tuple(fn)
                  << '\n';
      }
      return strict && !cert.is_f_ideal ? kExitNegative : kExitOk;
    }

    if (*certify) {
      auto ideal = load_ideal(input);
      fid_certificate cert;
      check(fid_certify(ideal.get(), &cert));
      const std::vector<std::uint64_t> ff(cert.facet_fvector, cert.facet_fvector + cert.facet_len);
      const std::vector<std::uint64_t> fn(cert.nonface_fvector, cert.nonface_fvector + cert.nonface_len);
      std::cout << "f-ideal: " << yes_no(cert.is_f_ideal) << '\n';
      std::cout << "f(facet)   = " << render_tuple(ff) << '\n';
      std::cout << "f(nonface) = " << render_tuple(fn) << '\n';
      std::cout << "d  |A|  |B|  |C|  |D|\n";
      for (std::size_t d = 0; d < cert.size_count; ++d) {
        const auto& s = cert.sizes[d];
        std::cout << d << "  " << s.a << "  " << s.b << "  " << s.c << "  " << s.d << '\n';
      }
      if (cert.has_failure) {
        std::cout << "first failure: d=" << cert.failure_degree << " |A|=" << cert.failure_a
                  << " |C|=" << cert.failure_c << '\n';
      }
      if (cert.warnings & FID_WARN_FULL_MONOMIAL_GENERATOR) std::cout << "warning: x1*...*xn is a generator\n";
      if (cert.warnings & FID_WARN_DISTINCT_VERTEX_SETS) std::cout << "warning: complexes have different vertex sets\n";
      if (cert.warnings & FID_WARN_DIMENSION_MISMATCH) std::cout << "warning: complexes have different dimensions\n";
      if (cert.is_f_ideal) {
        fid_necessary_report nec;
        check(fid_necessary_conditions(ideal.get(), &nec));
        std::cout << "necessary conditions (alpha=" << nec.alpha << ", omega=" << nec.omega << "):";
        for (int i = 0; i < 5; ++i) std::cout << ' ' << check_name(nec.items[i]);
        std::cout << '\n';
        fid_generator_report gen;
        check(fid_generator_implications(ideal.get(), &gen));
        if (gen.applicable) {
          auto line = [](const char* name, const fid_implication& imp, const char* op) {
            std::cout << name << ": " << imp.lhs << ' ' << op << ' ' << imp.rhs << " is "
                      << yes_no(imp.hypothesis);
            if (imp.hypothesis) std::cout << " -> " << check_name(imp.conclusion);
            std::cout << '\n';
          };
          line("degree alpha+1 generator", gen.raises_alpha, ">");
          line("degree omega-1 generator", gen.lowers_omega, "<");
        }
      }
      fid_equivalence_report eq;
      check(fid_n_minus_2_equivalence(ideal.get(), &eq));
      if (eq.applicable) {
        std::cout << "degree n-2: f-ideal=" << yes_no(eq.ideal_is_f) << " dual f-ideal=" << yes_no(eq.dual_is_f)
                  << " dual unmixed with C(n,2)/2 generators=" << yes_no(eq.dual_unmixed_with_half_generators)
                  << " dual uses every variable=" << yes_no(eq.dual_uses_every_variable) << '\n';
      }
      return strict && !cert.is_f_ideal ? kExitNegative : kExitOk;
    }

    if (*partition) {
      auto ideal = load_ideal(input);
      const int n = fid_ideal_ambient(ideal.get());
      if (partition_degree >= 0) {
        for (auto [cls, name] : {std::pair{FID_CLASS_A, "A"}, std::pair{FID_CLASS_B, "B"},
                                 std::pair{FID_CLASS_C, "C"}, std::pair{FID_CLASS_D, "D"}}) {
          const auto members = fetch<std::uint32_t>([&](std::uint32_t* b, std::size_t cap, std::size_t* k) {
            return fid_degree_partition_members(ideal.get(), partition_degree, cls, b, cap, k);
          });
          std::cout << name << ':';
          for (auto m : members) std::cout << ' ' << render_monomial(m);
          std::cout << '\n';
        }
        return kExitOk;
      }
      std::cout << "d  |A|  |B|  |C|  |D|\n";
      for (int d = 0; d <= n; ++d) {
        fid_partition_sizes s;
        check(fid_degree_partition(ideal.get(), d, &s));
        std::cout << d << "  " << s.a << "  " << s.b << "  " << s.c << "  " << s.d << '\n';
      }
      return kExitOk;
    }

    if (*primes) {
      auto ideal = load_ideal(input);
      int height = 0, unmixed = 0;
      const auto ps = fetch<std::uint32_t>([&](std::uint32_t* b, std::size_t cap, std::size_t* k) {
        return fid_ideal_minimal_primes(ideal.get(), b, cap, k, &height, &unmixed);
      });
      for (auto p : ps) {
        std::string gens;
        for (int i = 0; i < 32; ++i) {
          if (p >> i & 1u) gens += (gens.empty() ? "" : ", ") + std::string("x") + std::to_string(i + 1);
        }
        std::cout << '(' << gens << ")\n";
      }
      std::cout << "height=" << height << " unmixed=" << yes_no(unmixed) << '\n';
      return kExitOk;
    }

    if (*kk) {
      const auto f = parse_tuple(kk_vector);
      int valid = 0;
      check(fid_kk_valid(f.data(), f.size(), &valid));
      std::cout << "(ii) Macaulay bounds: " << yes_no(valid) << '\n';
      const int n = kk_n >= 0 ? kk_n : (f.size() > 1 ? static_cast<int>(f[1]) : 0);
      int dual_valid = 0;
      check(fid_kk_valid_dual(f.data(), f.size(), n, &dual_valid));
      std::vector<std::uint64_t> comp;
      bool have_comp = true;
      try {
        comp = fetch<std::uint64_t>([&](std::uint64_t* b, std::size_t cap, std::size_t* k) {
          return fid_complement_fvector(f.data(), f.size(), n, 1, b, cap, k);
        });
      } catch (const Failure& e) {
        if (e.status != FID_ERR_NOT_COMPLEMENTABLE) throw;
        have_comp = false;
      }
      if (have_comp) {
        int comp_valid = 0;
        if (comp.empty()) {
          comp_valid = 1;
        } else {
          check(fid_kk_valid(comp.data(), comp.size(), &comp_valid));
        }
        std::cout << "(iii) complement " << render_tuple(comp) << " is an f-vector: " << yes_no(comp_valid) << '\n';
      } else {
        std::cout << "(iii) complement: undefined (an entry exceeds C(n,t+1))\n";
      }
      std::cout << "(iv) dual bounds with n=" << n << ": " << yes_no(dual_valid) << '\n';
      int exists = 0;
      const fid_status s = fid_exists_complex(f.data(), f.size(), &exists);
      if (s == FID_OK) {
        std::cout << "(i) complex exists: " << yes_no(exists) << '\n';
      } else if (s == FID_ERR_ORACLE_UNAVAILABLE) {
        std::cout << "(i) complex exists: not computed (too many vertices)\n";
      } else {
        check(s);
      }
      return strict && !valid ? kExitNegative : kExitOk;
    }

    if (*kk_expand) {
      const auto tops = fetch<std::uint64_t>([&](std::uint64_t* b, std::size_t cap, std::size_t* k) {
        return fid_macaulay_expansion(expand_a, expand_j, b, cap, k);
      });
      std::uint64_t bound = 0;
      check(fid_macaulay_bound(expand_a, expand_j, &bound));
      std::cout << expand_a << " =";
      for (std::size_t i = 0; i < tops.size(); ++i) {
        std::cout << (i ? " +" : "") << " C(" << tops[i] << ',' << expand_j - static_cast<int>(i) << ')';
      }
      std::cout << "\n" << expand_a << "^(" << expand_j << ") = " << bound << '\n';
      return kExitOk;
    }

    if (*complement) {
      const auto f = parse_tuple(complement_vector);
      const auto raw = fetch<std::uint64_t>([&](std::uint64_t* b, std::size_t cap, std::size_t* k) {
        return fid_complement_fvector(f.data(), f.size(), complement_n, 0, b, cap, k);
      });
      const auto trimmed = fetch<std::uint64_t>([&](std::uint64_t* b, std::size_t cap, std::size_t* k) {
        return fid_complement_fvector(f.data(), f.size(), complement_n, 1, b, cap, k);
      });
      std::cout << "raw     = " << render_tuple(raw) << '\n';
      std::cout << "trimmed = " << render_tuple(trimmed) << '\n';
      return kExitOk;
    }

    if (*enumerate) {
      fid_census* raw = nullptr;
      if (d_opt->count() > 0) {
        check(fid_enumerate_v(census_n, census_d, &census, &raw));
      } else {
        check(fid_enumerate_all(census_n, &census, &raw));
      }
      return emit_census(raw);
    }

    if (*pair) {
      fid_pairing_report r;
      check(fid_verify_pairing(census_n, census_d, &census, &r));
      if (records) {
        std::cout << "{\"n\":" << census_n << ",\"d\":" << census_d << ",\"count\":" << r.count
                  << ",\"dual_count\":" << r.dual_count << ",\"equal\":" << yes_no(r.equal)
                  << ",\"bijection_checked\":" << yes_no(r.bijection_checked)
                  << ",\"inconclusive\":" << yes_no(r.inconclusive) << "}\n";
      } else {
        std::cout << "|V(" << census_n << ',' << census_d << ")| = " << r.count << ", |V(" << census_n << ','
                  << census_n - census_d << ")| = " << r.dual_count << "; equal: " << yes_no(r.equal)
                  << "; bijection checked: " << yes_no(r.bijection_checked);
        if (r.inconclusive) std::cout << "; inconclusive (budget exhausted)";
        std::cout << '\n';
      }
      const bool ok = r.equal && r.bijection_checked && !r.inconclusive;
      return strict && !ok ? kExitNegative : kExitOk;
    }

    if (*gap) {
      fid_census* raw = nullptr;
      check(fid_search_gap(census_n, census_gap, &census, &raw));
      return emit_census(raw);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitInput;
  }
  return kExitInput;
}
