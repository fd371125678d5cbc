// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "numfun/numfun.hpp"

using namespace numfun;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Set partitions of [n] into exactly m blocks, by restricted growth strings.
long count_partitions(std::size_t n, std::size_t m) {
  if (n == 0) return m == 0 ? 1 : 0;
  long count = 0;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t blocks) {
    if (i == n) {
      if (blocks == m) ++count;
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < m; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

Outcome section_identity() {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1; n <= 3; ++n) grid.emplace_back(k, n);
  grid.emplace_back(9, 3);
  auto t0 = Clock::now();
  for (auto [k, n] : grid) {
    auto pair = gamma_epsilon_pair(k, n);
    RatMatrix prod = to_rational(pair.gamma) * pair.epsilon();
    if (!(prod == RatMatrix::identity(prod.rows())))
      return {false, "k=" + std::to_string(k) + " n=" + std::to_string(n)};
  }
  double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return {s < 60.0, buf};
}

Outcome kernel_check() {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto kc = kernel_of_gamma(k, n);
      // Hermite bases must coincide, not just the ranks.
      if (!kc.match || !(kc.kernel.basis_rows() == kc.generated.basis_rows()))
        return {false, "k=" + std::to_string(k) + " n=" + std::to_string(n)};
    }
  return {};
}

Outcome cokernel_check() {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto cc = cokernel_of_pi_gamma(k, n);
      if (!cc.injective || !cc.match || cc.stacked.free_rank != 0)
        return {false, "k=" + std::to_string(k) + " n=" + std::to_string(n)};
    }
  auto c12 = cokernel_of_pi_gamma(1, 2);
  if (!(c12.stacked.torsion == std::vector<Int>{2}) || c12.stacked.free_rank != 0)
    return {false, "k=1 n=2 invariants"};
  return {true, "k=1 n=2 gives (2)"};
}

Outcome stirling_identity() {
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t m = 0; m <= 8; ++m) {
      Int lhs = 0;
      for (std::size_t r = 0; r <= m; ++r) {
        Int term = binomial(Int(static_cast<unsigned long>(m)), r) *
                   power(Int(static_cast<unsigned long>(r)), n);
        lhs += (m - r) % 2 ? -term : term;
      }
      Int rhs = factorial(m) * Int(count_partitions(n, m));
      if (lhs != rhs || stirling2(n, m) != Int(count_partitions(n, m)))
        return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m)};
    }
  return {};
}

Outcome ring_homomorphisms() {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto r = ring_hom_checks(2, n, 1234 + n, 20);
    if (r.pairs < 20 || !r.passed()) return {false, "n=" + std::to_string(n)};
  }
  return {true, "20 pairs at n=2,3"};
}

// Conditions A and B for phi along one argument, at [-(d+2), d+2].
std::pair<bool, bool> scaling_conditions(SetMap const& phi, Element const& x,
                                         std::size_t d, long window) {
  std::vector<Element> devs, multiples;
  for (std::size_t k = 0; k <= d; ++k) {
    devs.push_back(repeated_deviation(phi, x, k));
    multiples.push_back(phi(Int(static_cast<unsigned long>(k)) * x));
  }
  bool a = true, b = true;
  for (long r = -window; r <= window; ++r) {
    Element lhs = phi(Int(r) * x);
    Element ra(phi.target());
    for (std::size_t k = 0; k <= d; ++k) ra += binomial(Int(r), k) * devs[k];
    a = a && lhs == ra;
    b = b && lhs == condition_b_rhs(std::span<Element const>(multiples), Int(r), d);
  }
  return {a, b};
}

Outcome numericality_equivalences() {
  std::mt19937_64 rng(99);
  for (auto const& spec : catalog(3)) {
    std::size_t deg = spec.degree();
    for (std::size_t d = 0; d <= 3; ++d) {
      long window = static_cast<long>(d) + 2;
      // A'/B' at the identity of Z^d.
      auto [ap, bp] = scaling_conditions(arrow_setmap(spec, d, d),
                                         flatten(IntMatrix::identity(d)), d, window);
      // A/B at seeded homs between ranks 1..3.
      bool a = true, b = true;
      for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q)
          for (int t = 0; t < 2; ++t) {
            auto alpha = detail::random_matrix(rng, q, p, -2, 2);
            auto [ai, bi] =
                scaling_conditions(arrow_setmap(spec, p, q), flatten(alpha), d, window);
            a = a && ai;
            b = b && bi;
          }
      bool expected = d >= deg;
      std::string where = spec.name() + " at degree " + std::to_string(d);
      if (ap != bp || a != b) return {false, where + ": A and B disagree"};
      // Below the true degree, A' can hold vacuously (L2 on Z^1 is zero),
      // so only the hom-level conditions are required to fail there.
      if (a != expected || (expected && !ap))
        return {false, where + ": unexpected verdict"};
    }
    if (deg == 3) {
      SetMap phi = arrow_setmap(spec, 2, 2);
      for (int t = 0; t < 3; ++t) {
        std::vector<Element> alpha;
        for (int i = 0; i < 3; ++i)
          alpha.push_back(flatten(detail::random_matrix(rng, 2, 2, -2, 2)));
        for (long a0 = -3; a0 <= 3; ++a0)
          for (long a1 = -3; a1 <= 3; ++a1)
            for (long a2 = -3; a2 <= 3; ++a2)
              if (!cubic_formulae_hold(phi, alpha, {Int(a0), Int(a1), Int(a2)}))
                return {false, spec.name() + ": cubic formulae"};
      }
    }
  }
  return {};
}

Outcome multiset_formula() {
  std::mt19937_64 rng(7);
  for (auto const& spec : catalog(3)) {
    std::size_t n = spec.degree();
    SetMap phi = arrow_setmap(spec, 2, 2);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<Element> alphas;
      for (std::size_t i = 0; i < k; ++i)
        alphas.push_back(flatten(detail::random_matrix(rng, 2, 2, -2, 2)));
      std::vector<Int> a(k, -3);
      while (true) {
        if (!multiset_formula_holds(phi, alphas, a, n))
          return {false, spec.name() + " k=" + std::to_string(k)};
        std::size_t i = 0;
        while (i < k && a[i] == 3) a[i++] = -3;
        if (i == k) break;
        a[i] += 1;
      }
    }
  }
  return {};
}

Outcome morita_reconstruction() {
  for (auto const& spec : {FunctorSpec::tensor(2), FunctorSpec::sym(2),
                           FunctorSpec::ext(2), FunctorSpec::div(2)}) {
    auto m = extract_morita_module(spec, 2);
    for (std::size_t q = 1; q <= 3; ++q) {
      auto inv = reconstruct(m, q);
      if (!inv.torsion.empty() || inv.free_rank != object_dim(spec, q))
        return {false, spec.name() + " q=" + std::to_string(q)};
    }
  }
  auto ext3 = reconstruct(extract_morita_module(FunctorSpec::ext(2), 2), 3);
  return {ext3.free_rank == 3 && ext3.torsion.empty(), "L2 at q=3 has rank 3"};
}

Outcome quasi_homogeneity() {
  for (auto const& spec : {FunctorSpec::sym(2), FunctorSpec::ext(2),
                           FunctorSpec::div(2), FunctorSpec::tensor(2)})
    if (!quasi_homogeneity_test(extract_morita_module(spec, 2)))
      return {false, spec.name() + " not annihilated"};
  auto mixed = FunctorSpec::sum({FunctorSpec::constant(1), FunctorSpec::sym(2)});
  if (quasi_homogeneity_test(extract_morita_module(mixed, 2)))
    return {false, mixed.name() + " annihilated"};
  return {};
}

Outcome quadratic_phenomenon() {
  for (std::size_t k : {1, 2, 4}) {
    auto q = quadratic_split(k);
    if (!q.surjective || !q.integral_section_found)
      return {false, "k=" + std::to_string(k)};
  }
  for (auto const& spec : {FunctorSpec::sym(2), FunctorSpec::ext(2)}) {
    auto direct = restrict_scalars(direct_gamma_structure(spec, 2));
    auto extracted = extract_morita_module(spec, 2);
    if (!(direct.action == extracted.action) ||
        !(direct.relations == extracted.relations))
      return {false, spec.name() + " restriction differs"};
  }
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"section identity", section_identity},
      {"kernel of gamma", kernel_check},
      {"cokernel of (pi, gamma)", cokernel_check},
      {"Stirling identity", stirling_identity},
      {"ring homomorphisms", ring_homomorphisms},
      {"numericality conditions agree", numericality_equivalences},
      {"multiset deviation formula", multiset_formula},
      {"Morita reconstruction", morita_reconstruction},
      {"quasi-homogeneity", quasi_homogeneity},
      {"quadratic splitting", quadratic_phenomenon},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::printf("%s  %2zu  %s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }

  auto t0 = Clock::now();
  VerifyConfig cfg;
  cfg.max_k = 3;
  cfg.max_n = 3;
  bool suites = run_suite("all", cfg)->passed();
  double s = seconds_since(t0);
  bool budget = suites && s < 300.0;
  all = all && budget;
  std::printf("%s  verify all --max-k 3 --max-n 3  %.2f s\n", budget ? "PASS" : "FAIL", s);
  return all ? 0 : 1;
}
