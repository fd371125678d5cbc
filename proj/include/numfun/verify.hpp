#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/augmentation.hpp"
#include "numfun/deviation.hpp"
#include "numfun/divided_power.hpp"
#include "numfun/functor.hpp"
#include "numfun/gamma_epsilon.hpp"
#include "numfun/json_io.hpp"
#include "numfun/morita.hpp"

namespace numfun {

enum class Verdict { Pass, Fail, Observed };

inline char const* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Observed: return "observed";
  }
  return "";
}

/// One checked property at one parameter point. Observed cells record a
/// computed fact that is not asserted.
struct Cell {
  json params = json::object();
  std::string anchor;
  Verdict verdict = Verdict::Pass;
  std::optional<json> witness;

  std::string key() const { return params.dump() + "|" + anchor; }
};

struct SuiteReport {
  std::string suite;
  std::vector<Cell> cells;
  json extra = json::object();  // suite-specific summary fields

  bool passed() const {
    return std::none_of(cells.begin(), cells.end(),
                        [](Cell const& c) { return c.verdict == Verdict::Fail; });
  }

  void add(json params, std::string anchor, bool ok,
           std::optional<json> witness = std::nullopt) {
    Cell c{std::move(params), std::move(anchor),
           ok ? Verdict::Pass : Verdict::Fail, std::nullopt};
    if (!ok) c.witness = std::move(witness);
    cells.push_back(std::move(c));
  }

  void observe(json params, std::string anchor, json value) {
    cells.push_back(
        {std::move(params), std::move(anchor), Verdict::Observed, std::move(value)});
  }

  /// Cells sorted by key, so output does not depend on evaluation order.
  void canonicalize() {
    std::stable_sort(cells.begin(), cells.end(),
                     [](Cell const& a, Cell const& b) { return a.key() < b.key(); });
  }
};

struct VerifyConfig {
  std::optional<std::size_t> k, n;
  std::size_t max_k = 3, max_n = 3;
  std::uint64_t seed = 0;

  std::vector<std::size_t> ks() const {
    if (k) return {*k};
    std::vector<std::size_t> v;
    for (std::size_t i = 1; i <= max_k; ++i) v.push_back(i);
    return v;
  }
  /// Degrees from `from` up to the bound (or the single --n).
  std::vector<std::size_t> ns(std::size_t from = 1) const {
    if (n) return *n >= from ? std::vector<std::size_t>{*n}
                             : std::vector<std::size_t>{};
    std::vector<std::size_t> v;
    for (std::size_t i = from; i <= max_n; ++i) v.push_back(i);
    return v;
  }
  std::size_t top_n() const { return n ? *n : max_n; }
};

namespace detail {

inline json kn(std::size_t k, std::size_t n) { return {{"k", k}, {"n", n}}; }

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return seed * 1000003u + a * 1009u + b;
}

inline std::vector<Int> random_vector(std::mt19937_64& rng, std::size_t k,
                                      long lo, long hi) {
  std::vector<Int> v(k);
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (auto& x : v) x = lo + static_cast<long>(rng() % span);
  return v;
}

inline AugElement random_aug(std::mt19937_64& rng, AugAlgebra const& alg) {
  AugElement u(alg);
  for (int t = 0; t < 3; ++t) {
    auto x = alg.basis()[rng() % alg.dimension()];
    u.add_term(x, Rat(static_cast<long>(rng() % 5) - 2));
  }
  return u;
}

}  // namespace detail

// ---------- deviations ----------

inline SuiteReport verify_deviations(VerifyConfig const& cfg) {
  SuiteReport rep{"deviations", {}, {}};

  bool stirling = true;
  json bad;
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t m = 0; m <= 8; ++m)
      if (stirling_sum_identity(n, m) != factorial(m) * stirling2(n, m)) {
        if (stirling) bad = {{"n", n}, {"m", m}};
        stirling = false;
      }
  rep.add({{"n_max", 8}, {"m_max", 8}},
          "alternating power sum equals m! S(n,m)", stirling, bad);

  bool pascal = true;
  for (long r = -10; r <= 10; ++r)
    for (std::size_t k = 1; k <= 8; ++k)
      if (binomial(r, k) != binomial(r - 1, k) + binomial(r - 1, k - 1))
        pascal = false;
  rep.add({{"r", "[-10,10]"}, {"k_max", 8}}, "binomial Pascal rule", pascal);

  std::size_t top = std::min<std::size_t>(cfg.top_n(), 3);
  for (auto const& spec : catalog(top)) {
    std::size_t d = spec.degree();
    if (cfg.n && d != *cfg.n) continue;
    json p = {{"functor", spec.name()}, {"n", d}};
    CertificateOptions opt;
    opt.seed = detail::mix(cfg.seed, d, static_cast<std::uint64_t>(spec.kind));
    auto cert = degree_certificate(spec, d, opt);
    rep.add(p, "scaling conditions A, B, A', B' and vanishing deviation",
            cert.passed, report_to_json(cert));
    if (d >= 1) {
      auto below = degree_certificate(spec, d - 1, opt);
      rep.add(p, "certificate fails one degree lower", !below.passed,
              report_to_json(below));
    }

    // Multiset deviation formula on 2x2 homs, every a in [-3,3]^k.
    std::mt19937_64 rng(opt.seed + 17);
    SetMap phi = arrow_setmap(spec, 2, 2);
    bool formula = true;
    json fw;
    for (std::size_t k = 1; k <= 3 && formula; ++k) {
      std::vector<Element> alphas;
      for (std::size_t i = 0; i < k; ++i)
        alphas.push_back(flatten(detail::random_matrix(rng, 2, 2, -2, 2)));
      std::vector<Int> a(k, -3);
      while (true) {
        if (!multiset_formula_holds(phi, alphas, a, d)) {
          formula = false;
          fw = {{"k", k}, {"a", vector_to_json(a)}};
          break;
        }
        std::size_t i = 0;
        while (i < k && a[i] == 3) a[i++] = -3;
        if (i == k) break;
        a[i] += 1;
      }
    }
    rep.add(p, "multiset deviation formula", formula, fw);

    if (d == 3) {
      bool cubic = true;
      json cw;
      for (int t = 0; t < 3 && cubic; ++t) {
        std::vector<Element> alpha;
        for (int i = 0; i < 3; ++i)
          alpha.push_back(flatten(detail::random_matrix(rng, 2, 2, -2, 2)));
        for (long a0 = -3; a0 <= 3 && cubic; ++a0)
          for (long a1 = -3; a1 <= 3 && cubic; ++a1)
            for (long a2 = -3; a2 <= 3 && cubic; ++a2)
              if (!cubic_formulae_hold(phi, alpha, {Int(a0), Int(a1), Int(a2)})) {
                cubic = false;
                cw = {{"a", {a0, a1, a2}}};
              }
      }
      rep.add(p, "cubic functor formulae", cubic, cw);
    }
  }
  rep.canonicalize();
  return rep;
}

// ---------- augmentation algebra ----------

inline SuiteReport verify_aug_algebra(VerifyConfig const& cfg) {
  SuiteReport rep{"aug-algebra", {}, {}};
  for (auto k : cfg.ks())
    for (auto n : cfg.ns(0)) {
      AugAlgebra alg(k, n);
      json p = detail::kn(k, n);
      std::size_t count = 0;
      for (std::size_t m = 0; m <= n; ++m) count += multisets_of_size(k, m).size();
      rep.add(p, "dimension equals multiset count",
              alg.dimension() == count && aug_dimension(k, n) == count);

      std::mt19937_64 rng(detail::mix(cfg.seed, k, n));
      bool scaling = true;
      json sw;
      auto zs = zero_one_vectors(k);
      for (int t = 0; t < 4; ++t) zs.push_back(detail::random_vector(rng, k, -3, 3));
      FreeModule mod{k};
      for (auto const& z : zs) {
        Element ze(mod, z);
        std::vector<AugElement> devs;
        for (std::size_t m = 0; m <= n; ++m)
          devs.push_back(class_of_deviation(alg, std::vector<Element>(m, ze)));
        for (long r = -3; r <= 3 && scaling; ++r) {
          AugElement rhs(alg);
          for (std::size_t m = 0; m <= n; ++m) rhs += binomial(Int(r), m) * devs[m];
          if (class_of(alg, Int(r) * ze) != rhs) {
            scaling = false;
            sw = {{"z", vector_to_json(z)}, {"r", r}};
          }
        }
      }
      rep.add(p, "class_of satisfies the scaling relation", scaling, sw);

      bool over = class_of_deviation(
                      alg, std::vector<Element>(n + 1, Element::basis(mod, 0)))
                      .is_zero();
      rep.add(p, "deviation of n+1 classes vanishes", over);

      bool sum_ok = true;
      AugElement one = AugElement::basis(alg, Multiset());
      for (int t = 0; t < 4 && sum_ok; ++t) {
        auto u = detail::random_aug(rng, alg), v = detail::random_aug(rng, alg),
             w = detail::random_aug(rng, alg);
        sum_ok = sum_mul(u, v) == sum_mul(v, u) &&
                 sum_mul(sum_mul(u, v), w) == sum_mul(u, sum_mul(v, w)) &&
                 sum_mul(one, u) == u;
        auto x = detail::random_vector(rng, k, -3, 3),
             y = detail::random_vector(rng, k, -3, 3);
        std::vector<Int> xy(k);
        for (std::size_t i = 0; i < k; ++i) xy[i] = x[i] + y[i];
        sum_ok = sum_ok && sum_mul(class_of(alg, std::span<Int const>(x)),
                                   class_of(alg, std::span<Int const>(y))) ==
                               class_of(alg, std::span<Int const>(xy));
      }
      rep.add(p, "sum multiplication is commutative, associative, unital",
              sum_ok);

      bool functorial = true;
      for (std::size_t l = 1; l <= 2 && functorial; ++l) {
        Hom psi(detail::random_matrix(rng, l, k, -2, 2));
        Hom chi(detail::random_matrix(rng, 2, l, -2, 2));
        AugAlgebra mid(l, n), dst(2, n);
        functorial = pushforward(compose(chi, psi), alg, dst) ==
                         pushforward(chi, mid, dst) * pushforward(psi, alg, mid) &&
                     pushforward(Hom::identity(mod), alg, alg) ==
                         IntMatrix::identity(alg.dimension());
      }
      rep.add(p, "pushforward is functorial", functorial);

      if (k <= 2) {
        bool numerical = true;
        json nw;
        for (std::size_t l = 1; l <= 2; ++l) {
          AugAlgebra dst(l, n);
          SetMap push(FreeModule{l * k}, FreeModule{dst.dimension() * alg.dimension()},
                      [&, l](Element const& x) {
                        return flatten(pushforward(Hom(unflatten(x, l, k)), alg, dst));
                      });
          SampleSpec s;
          std::size_t gens = l * k <= 2 ? 4 : 3;
          for (std::size_t g = 0; g < gens; ++g)
            s.generators.push_back(detail::random_vector(rng, l * k, -2, 2));
          s.scalar_lo = -static_cast<long>(n) - 2;
          s.scalar_hi = static_cast<long>(n) + 2;
          auto r = is_numerical_degree(push, n, s);
          if (!r.passed) {
            numerical = false;
            nw = report_to_json(r);
          }
        }
        rep.add(p, "pushforward is numerical of degree n", numerical, nw);
      }
    }

  for (std::size_t m = 1; m <= 2; ++m)
    for (auto n : cfg.ns(0)) {
      AugAlgebra alg(m * m, n);
      json p = {{"m", m}, {"n", n}};
      std::mt19937_64 rng(detail::mix(cfg.seed, 100 + m, n));
      auto one = identity_class(alg);
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        auto u = detail::random_aug(rng, alg), v = detail::random_aug(rng, alg),
             w = detail::random_aug(rng, alg);
        ok = product_mul(one, u) == u && product_mul(u, one) == u &&
             product_mul(product_mul(u, v), w) == product_mul(u, product_mul(v, w)) &&
             product_mul(u, v + w) == product_mul(u, v) + product_mul(u, w);
        IntMatrix a = detail::random_matrix(rng, m, m, -3, 3),
                  b = detail::random_matrix(rng, m, m, -3, 3);
        ok = ok && product_mul(class_of(alg, flatten(a)), class_of(alg, flatten(b))) ==
                       class_of(alg, flatten(a * b));
      }
      rep.add(p, "product multiplication is unital, associative, [a][b]=[ab]", ok);
    }
  rep.canonicalize();
  return rep;
}

// ---------- gamma / epsilon ----------

inline SuiteReport verify_gamma_epsilon(VerifyConfig const& cfg) {
  SuiteReport rep{"gamma-epsilon", {}, {}};
  for (auto k : cfg.ks())
    for (auto n : cfg.ns(1)) {
      json p = detail::kn(k, n);
      auto pair = gamma_epsilon_pair(k, n);
      bool section = verify_section(pair);
      rep.add(p, "section identity gamma epsilon = 1", section);
      Int nf = factorial(n);
      bool dens = std::all_of(pair.epsilon_denominators.begin(),
                              pair.epsilon_denominators.end(),
                              [&](Int const& d) { return nf % d == 0; });
      rep.add(p, "epsilon denominators divide n!", dens);

      auto kc = kernel_of_gamma(k, n);
      rep.add(p, "kernel equals saturated span of [rz] - r^n [z]", kc.match,
              json{{"kernel_rank", kc.kernel.rank()},
                   {"generated_rank", kc.generated.rank()}});

      auto cc = cokernel_of_pi_gamma(k, n);
      rep.add(p, "(pi, gamma) is injective", cc.injective);
      rep.add(p, "coker (pi, gamma) matches Gamma / products", cc.match,
              json{{"stacked", invariants_to_json(cc.stacked)},
                   {"products", invariants_to_json(cc.products)}});

      auto ie = image_epsilon_decomposition(k, n);
      rep.add(p, "image of epsilon splits along epsilon gamma",
              ie.passed(GammaModule(k, n).dimension()),
              json{{"idempotent", ie.idempotent},
                   {"projector_rank", ie.projector_rank},
                   {"complement_rank", ie.complement_rank},
                   {"kernel_part_rank", ie.kernel_part_rank}});

      std::mt19937_64 rng(detail::mix(cfg.seed, k, n));
      bool natural = true;
      for (std::size_t l = 1; l <= 2 && natural; ++l)
        natural = gamma_is_natural(Hom(detail::random_matrix(rng, l, k, -2, 2)), n);
      rep.add(p, "gamma is natural", natural);

      if (cfg.k && cfg.n) {
        rep.extra["section"] = section;
        rep.extra["kernel_match"] = kc.match;
        rep.extra["coker_invariants"] = vector_to_json(cc.stacked.torsion);
        rep.extra["index"] = cc.index ? int_to_json(*cc.index) : json("infinite");
      }
    }

  if (cfg.top_n() >= 2 && !cfg.k) {
    for (std::size_t k : {1, 2, 4}) {
      auto q = quadratic_split(k);
      json p = {{"k", k}, {"n", 2}};
      rep.add(p, "gamma_2 is onto with an integral section",
              q.surjective && q.integral_section_found);
      rep.observe(p, "explicit epsilon_2 integral", q.epsilon_integral);
      rep.observe(p, "coker gamma_3 at the same rank",
                  invariants_to_json(q.cubic_gamma));
      if (k == 1)
        rep.add({{"k", 1}, {"n", 3}}, "Gamma^3 / products is nontrivial",
                !q.cubic_products_rank1.trivial(),
                invariants_to_json(q.cubic_products_rank1));
    }
  }
  for (auto n : cfg.ns(2)) {
    if (cfg.k && *cfg.k != 4) break;
    auto r = ring_hom_checks(2, n, detail::mix(cfg.seed, 2, n));
    json p = {{"m", 2}, {"n", n}, {"pairs", r.pairs}};
    std::optional<json> w;
    if (r.witness)
      w = json{{"alpha", matrix_to_json(r.witness->first)},
               {"beta", matrix_to_json(r.witness->second)}};
    rep.add(p, "gamma is multiplicative", r.gamma_multiplicative, w);
    rep.add(p, "epsilon is multiplicative", r.epsilon_multiplicative, w);
    rep.add(p, "[nabla_n a][nabla_n b] = n! [nabla_n ab]", r.deviation_product, w);
  }
  rep.canonicalize();
  return rep;
}

// ---------- divided powers and Schur products ----------

inline SuiteReport verify_schur(VerifyConfig const& cfg) {
  SuiteReport rep{"schur", {}, {}};
  for (auto k : cfg.ks())
    for (auto n : cfg.ns(1)) {
      GammaModule gam(k, n);
      json p = detail::kn(k, n);
      rep.add(p, "Gamma dimension is C(k+n-1, n)",
              Int(gam.dimension()) ==
                  binomial(Int(static_cast<long>(k + n) - 1), n));
      bool round = true;
      for (auto const& a : gam.basis()) {
        auto e = GammaElement::basis(gam, a);
        auto t = embed_symmetric(e);
        round = round && project_symmetric(gam, t) == e &&
                is_symmetric_tensor(t, k, n);
      }
      rep.add(p, "orbit embedding and projection are inverse", round);

      std::mt19937_64 rng(detail::mix(cfg.seed, k, n));
      FreeModule mod{k};
      bool homog = true, functorial = true;
      for (int t = 0; t < 4; ++t) {
        Element x(mod, detail::random_vector(rng, k, -3, 3));
        Int r = static_cast<long>(rng() % 7) - 3;
        homog = homog && divided_power(gam, r * x) == power(r, n) * divided_power(gam, x);
        Hom a(detail::random_matrix(rng, 2, k, -2, 2));
        Hom b(detail::random_matrix(rng, 2, 2, -2, 2));
        functorial = functorial &&
                     gamma_of_hom(compose(b, a), n) ==
                         gamma_of_hom(b, n) * gamma_of_hom(a, n) &&
                     gamma_of_hom(Hom(r * IntMatrix::identity(k)), n) ==
                         power(r, n) * IntMatrix::identity(gam.dimension());
      }
      rep.add(p, "divided power is homogeneous of degree n", homog);
      rep.add(p, "Gamma^n is a functor, homogeneous of degree n", functorial);

      IntMatrix g = gamma_matrix(k, n);
      AugAlgebra alg(k, n);
      bool products_ok = true;
      for (std::size_t c = 0; c < alg.dimension(); ++c) {
        auto const& x = alg.basis()[c];
        if (x.cardinality() != n) continue;
        std::vector<Element> xs;
        for (auto i : x.word()) xs.push_back(Element::basis(mod, i));
        auto col = g.column(c);
        products_ok = products_ok && product_of_elements(gam, xs).to_int_vector() == col;
      }
      rep.add(p, "gamma of a top deviation class is the product", products_ok);
    }

  for (std::size_t m = 1; m <= 2; ++m)
    for (auto n : cfg.ns(1)) {
      GammaModule gam(m * m, n);
      json p = {{"m", m}, {"n", n}};
      std::mt19937_64 rng(detail::mix(cfg.seed, 200 + m, n));
      auto one = gamma_identity(gam);
      bool unit = true, assoc = true, powers = true, symmetric = true;
      for (int t = 0; t < 5; ++t) {
        IntMatrix a = detail::random_matrix(rng, m, m, -3, 3),
                  b = detail::random_matrix(rng, m, m, -3, 3);
        auto da = divided_power(gam, flatten(a)), db = divided_power(gam, flatten(b));
        powers = powers && schur_product(da, db) == divided_power(gam, flatten(a * b));
        GammaElement u(gam), v(gam), w(gam);
        for (int s = 0; s < 3; ++s) {
          u.add_term(gam.basis()[rng() % gam.dimension()], Rat(1 + static_cast<long>(rng() % 3)));
          v.add_term(gam.basis()[rng() % gam.dimension()], Rat(1 + static_cast<long>(rng() % 3)));
          w.add_term(gam.basis()[rng() % gam.dimension()], Rat(1 + static_cast<long>(rng() % 3)));
        }
        unit = unit && schur_product(one, u) == u && schur_product(u, one) == u;
        assoc = assoc && schur_product(schur_product(u, v), w) ==
                             schur_product(u, schur_product(v, w));
        // The composite of two orbit sums is again symmetric.
        RatMatrix uv = symmetric_endomorphism(u) * symmetric_endomorphism(v);
        symmetric = symmetric && symmetric_endomorphism(project_endomorphism(gam, uv)) == uv;
      }
      rep.add(p, "Schur product is unital", unit);
      rep.add(p, "Schur product is associative", assoc);
      rep.add(p, "a^[n] b^[n] = (ab)^[n]", powers);
      rep.add(p, "composite of orbit sums is symmetric", symmetric);
    }
  rep.canonicalize();
  return rep;
}

// ---------- Morita dictionary ----------

inline SuiteReport verify_morita(VerifyConfig const& cfg) {
  SuiteReport rep{"morita", {}, {}};
  std::size_t top = std::min<std::size_t>(cfg.top_n(), 2);

  std::vector<FunctorSpec> specs = catalog(top);
  if (top >= 2)
    specs.push_back(FunctorSpec::sum({FunctorSpec::constant(1), FunctorSpec::sym(2)}));
  for (auto const& spec : specs) {
    std::size_t n = spec.degree();
    if (cfg.n && n != *cfg.n) continue;
    json p = {{"functor", spec.name()}, {"n", n}};
    CertificateOptions opt;
    opt.seed = detail::mix(cfg.seed, n, static_cast<std::uint64_t>(spec.kind));
    MoritaModule m;
    try {
      m = extract_morita_module(spec, n, opt);
    } catch (certification_error const& e) {
      rep.add(p, "extraction after degree certificate", false,
              report_to_json(e.report));
      continue;
    }
    auto ax = check_module_axioms(m, 400, opt.seed);
    rep.add(p, "extracted action is a module over the product multiplication",
            ax.passed());
    for (std::size_t q = 1; q <= 3; ++q) {
      auto inv = reconstruct(m, q);
      std::size_t dim = object_dim(spec, q);
      rep.add({{"functor", spec.name()}, {"n", n}, {"q", q}},
              "reconstruction has rank dim F(Z^q) and no torsion",
              inv.torsion.empty() && inv.free_rank == dim,
              json{{"got", invariants_to_json(inv)}, {"expected_rank", dim}});
    }
    if (n == 2 && spec.kind != FunctorSpec::Kind::Sum) {
      rep.add(p, "Ker gamma_2 annihilates the module", quasi_homogeneity_test(m));
      auto g = direct_gamma_structure(spec, n);
      rep.add(p, "direct Gamma structure is a module", check_module_axioms(g).passed());
      rep.add(p, "restriction of the Gamma structure equals the extracted module",
              restrict_scalars(g).action == m.action);
      auto ext = extend_scalars(m);
      auto cmp = compare_modules(ext, g);
      rep.add(p, "extension of scalars matches the direct Gamma structure",
              cmp.passed(),
              json{{"invariants_match", cmp.invariants_match},
                   {"traces_match", cmp.traces_match}});
      rep.observe(p, "restrict after extend: invariants",
                  json{{"module", invariants_to_json(m.invariants())},
                       {"round_trip", invariants_to_json(restrict_scalars(ext).invariants())}});
    }
    if (spec.kind == FunctorSpec::Kind::Sum)
      rep.add(p, "mixed degrees are not quasi-homogeneous",
              !quasi_homogeneity_test(m));
  }

  if (!cfg.n || *cfg.n == 1) {
    auto c = extract_morita_module(FunctorSpec::constant(1), 1);
    rep.add({{"functor", "Z1"}, {"n", 1}},
            "constant functor is not quasi-homogeneous in degree 1",
            !quasi_homogeneity_test(c));
  }
  if (top >= 2 && (!cfg.n || *cfg.n == 2)) {
    auto z = zero_module(2);
    rep.add({{"functor", "0"}, {"n", 2}}, "zero module",
            quasi_homogeneity_test(z) && reconstruct(z, 3).trivial() &&
                extend_scalars(z).generators() == 0);
  }
  if (cfg.top_n() >= 3 && (!cfg.n || *cfg.n == 3)) {
    for (auto const& spec : {FunctorSpec::sym(3), FunctorSpec::ext(3)}) {
      CertificateOptions opt;
      opt.seed = detail::mix(cfg.seed, 3, static_cast<std::uint64_t>(spec.kind));
      auto m = extract_morita_module(spec, 3, opt);
      json p = {{"functor", spec.name()}, {"n", 3}};
      rep.add(p, "extracted action is a module over the product multiplication",
              check_module_axioms(m, 30, opt.seed).passed());
      rep.add(p, "Ker gamma_3 annihilates the module", quasi_homogeneity_test(m));
    }
  }
  rep.canonicalize();
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"deviations", "aug-algebra", "gamma-epsilon", "schur", "morita", "all"};
}

inline std::optional<SuiteReport> run_suite(std::string const& name,
                                            VerifyConfig const& cfg) {
  if (name == "deviations") return verify_deviations(cfg);
  if (name == "aug-algebra") return verify_aug_algebra(cfg);
  if (name == "gamma-epsilon") return verify_gamma_epsilon(cfg);
  if (name == "schur") return verify_schur(cfg);
  if (name == "morita") return verify_morita(cfg);
  if (name == "all") {
    SuiteReport all{"all", {}, {}};
    for (auto const& s : suite_names()) {
      if (s == "all") continue;
      auto r = *run_suite(s, cfg);
      for (auto& c : r.cells) {
        c.params["suite"] = s;
        all.cells.push_back(std::move(c));
      }
    }
    all.canonicalize();
    return all;
  }
  return std::nullopt;
}

inline json report_json(SuiteReport const& r) {
  json cells = json::array();
  for (auto const& c : r.cells) {
    json o = {{"params", c.params}, {"anchor", c.anchor},
              {"verdict", verdict_name(c.verdict)}};
    if (c.witness) o["witness"] = *c.witness;
    cells.push_back(std::move(o));
  }
  json out = {{"suite", r.suite}, {"cells", cells}};
  for (auto const& [key, val] : r.extra.items()) out[key] = val;
  return out;
}

}  // namespace numfun
