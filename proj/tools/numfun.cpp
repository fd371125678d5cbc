// Command-line front end: verification suites, tables, functor operations and
// element serialization.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numfun/numfun.hpp"

using namespace numfun;

namespace {

enum class Format { Json, Csv, Plain };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(json const& p) {
  std::string s;
  for (auto const& [k, v] : p.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

json parse_json_arg(std::string const& text, char const* what) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw input_error(std::string(what) + ": " + e.what());
  }
}

void print_report(SuiteReport const& r, Format f) {
  if (f == Format::Json) {
    std::cout << report_json(r).dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    std::cout << "suite,params,anchor,verdict,witness\n";
    for (auto const& c : r.cells)
      std::cout << r.suite << "," << csv_field(params_text(c.params)) << ","
                << csv_field(c.anchor) << "," << verdict_name(c.verdict) << ","
                << csv_field(c.witness ? c.witness->dump() : "") << "\n";
    return;
  }
  for (auto const& c : r.cells) {
    std::string v = c.verdict == Verdict::Pass   ? "PASS"
                    : c.verdict == Verdict::Fail ? "FAIL"
                                                 : "INFO";
    std::cout << v << "  " << params_text(c.params) << "  " << c.anchor;
    if (c.witness && c.verdict != Verdict::Pass) std::cout << "  " << c.witness->dump();
    std::cout << "\n";
  }
  for (auto const& [k, v] : r.extra.items())
    std::cout << k << " = " << v.dump() << "\n";
  std::cout << (r.passed() ? "all checks passed" : "some checks FAILED") << "\n";
}

// Rows of string cells with a header, in any of the three formats.
void print_table(std::vector<std::string> const& header,
                 std::vector<std::vector<json>> const& rows, Format f) {
  if (f == Format::Json) {
    json a = json::array();
    for (auto const& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      a.push_back(std::move(o));
    }
    std::cout << a.dump(2) << "\n";
    return;
  }
  auto text = [](json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i)
      std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (auto const& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        std::cout << (i ? "," : "") << csv_field(text(r[i]));
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (auto const& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      width[i] = std::max(width[i], text(r[i]).size());
  auto line = [&](std::vector<std::string> const& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << cells[i];
      if (i + 1 < cells.size()) std::cout << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    std::cout << "\n";
  };
  line(header);
  for (auto const& r : rows) {
    std::vector<std::string> cells;
    for (auto const& v : r) cells.push_back(text(v));
    line(cells);
  }
}

void print_value(json const& v, Format f) {
  if (f == Format::Plain && v.is_object()) {
    for (auto const& [k, x] : v.items()) std::cout << k << " = " << x.dump() << "\n";
    return;
  }
  std::cout << v.dump(2) << "\n";
}

std::string invariants_text(CokernelInvariants const& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.torsion.size(); ++i)
    s += (i ? "," : "") + c.torsion[i].get_str();
  s += ")";
  if (c.free_rank) s += " + Z^" + std::to_string(c.free_rank);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with numerical functors, augmentation "
               "algebras and divided powers"};
  app.require_subcommand(1);

  std::string format_name = "json";

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::optional<std::size_t> opt_k, opt_n;
  std::size_t max_k = 3, max_n = 3;
  std::uint64_t seed = 0;
  verify->add_option("suite", suite, "deviations, aug-algebra, gamma-epsilon, schur, morita or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--k", opt_k, "single module rank");
  verify->add_option("--n", opt_n, "single degree");
  verify->add_option("--max-k", max_k, "largest rank in the grid")->capture_default_str();
  verify->add_option("--max-n", max_n, "largest degree in the grid")->capture_default_str();
  verify->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--format", format_name, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();

  // table
  auto* table = app.add_subcommand("table", "tabulate dimensions and invariants");
  std::string what;
  std::size_t t_max_k = 3, t_max_n = 3;
  table->add_option("what", what, "dims, index or invariants")
      ->required()
      ->check(CLI::IsMember({"dims", "index", "invariants"}));
  table->add_option("--max-k", t_max_k)->capture_default_str();
  table->add_option("--max-n", t_max_n)->capture_default_str();
  std::string table_format = "plain";
  table->add_option("--format", table_format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();

  // functor
  auto* functor = app.add_subcommand("functor", "operations on catalog functors");
  std::string fop, spec_text, hom_text;
  std::optional<std::size_t> f_n, f_q;
  std::size_t f_max_q = 4;
  std::uint64_t f_seed = 0;
  functor->add_option("op", fop, "dims, arrow, extract, reconstruct or certify")
      ->required()
      ->check(CLI::IsMember({"dims", "arrow", "extract", "reconstruct", "certify"}));
  functor->add_option("--spec", spec_text, "functor spec JSON, e.g. {\"ext\":2}")->required();
  functor->add_option("--hom", hom_text, "hom JSON {source_rank, target_rank, rows}");
  functor->add_option("--n", f_n, "degree (defaults to the spec's degree)");
  functor->add_option("--q", f_q, "rank of the reconstructed value");
  functor->add_option("--max-q", f_max_q, "largest rank for dims")->capture_default_str();
  functor->add_option("--seed", f_seed)->capture_default_str();
  std::string functor_format = "json";
  functor->add_option("--format", functor_format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();

  // element
  auto* element = app.add_subcommand("element", "compute and serialize elements");
  std::string eop, x_text, u_text;
  std::size_t e_k = 1, e_n = 1;
  element->add_option("op", eop, "class, divided, gamma or epsilon")
      ->required()
      ->check(CLI::IsMember({"class", "divided", "gamma", "epsilon"}));
  element->add_option("--k", e_k, "module rank")->required();
  element->add_option("--n", e_n, "degree")->required();
  element->add_option("--x", x_text, "vector JSON, e.g. [2,0]");
  element->add_option("--u", u_text, "element JSON {\"1^2\": \"1/2\"}");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  auto format_of = [](std::string const& s) {
    return s == "csv" ? Format::Csv : s == "plain" ? Format::Plain : Format::Json;
  };

  try {
    if (*verify) {
      VerifyConfig cfg;
      cfg.k = opt_k;
      cfg.n = opt_n;
      cfg.max_k = max_k;
      cfg.max_n = max_n;
      cfg.seed = seed;
      auto rep = run_suite(suite, cfg);
      print_report(*rep, format_of(format_name));
      return rep->passed() ? 0 : 1;
    }

    if (*table) {
      std::vector<std::vector<json>> rows;
      Format f = format_of(table_format);
      if (what == "dims") {
        for (std::size_t k = 1; k <= t_max_k; ++k)
          for (std::size_t n = 0; n <= t_max_n; ++n)
            rows.push_back({k, n, aug_dimension(k, n), GammaModule(k, n).dimension()});
        print_table({"k", "n", "dim_aug", "dim_gamma"}, rows, f);
      } else {
        for (std::size_t k = 1; k <= t_max_k; ++k)
          for (std::size_t n = 1; n <= t_max_n; ++n) {
            auto cc = cokernel_of_pi_gamma(k, n);
            if (what == "index")
              rows.push_back({k, n, cc.index ? int_to_json(*cc.index) : json("infinite")});
            else
              rows.push_back({k, n, invariants_text(cc.stacked)});
          }
        print_table({"k", "n", what == "index" ? "index" : "invariants"}, rows, f);
      }
      return 0;
    }

    if (*functor) {
      FunctorSpec spec = spec_from_json(parse_json_arg(spec_text, "--spec"));
      Format f = format_of(functor_format);
      std::size_t n = f_n ? *f_n : spec.degree();
      if (fop == "dims") {
        std::vector<std::vector<json>> rows;
        for (std::size_t q = 0; q <= f_max_q; ++q) rows.push_back({q, object_dim(spec, q)});
        print_table({"q", "dim"}, rows, f);
        return 0;
      }
      if (fop == "arrow") {
        if (hom_text.empty()) throw usage_error("functor arrow needs --hom");
        Hom alpha = hom_from_json(parse_json_arg(hom_text, "--hom"));
        IntMatrix m = arrow_map(spec, alpha);
        print_value(hom_to_json(Hom(FreeModule{m.cols()}, FreeModule{m.rows()}, m)), f);
        return 0;
      }
      CertificateOptions opt;
      opt.seed = f_seed;
      if (fop == "certify") {
        auto r = degree_certificate(spec, n, opt);
        print_value(report_to_json(r), f);
        return r.passed ? 0 : 1;
      }
      MoritaModule m;
      try {
        m = extract_morita_module(spec, n, opt);
      } catch (certification_error const& e) {
        std::cerr << e.what() << "\n";
        print_value(report_to_json(e.report), f);
        return 1;
      }
      if (fop == "extract") {
        print_value(module_to_json(m, n), f);
        return 0;
      }
      // reconstruct
      if (!f_q) throw usage_error("functor reconstruct needs --q");
      auto inv = reconstruct(m, *f_q);
      json out = {{"functor", spec_to_json(spec)},
                  {"n", n},
                  {"q", *f_q},
                  {"invariants", invariants_to_json(inv)},
                  {"expected_rank", object_dim(spec, *f_q)}};
      print_value(out, f);
      return 0;
    }

    if (*element) {
      AugAlgebra alg(e_k, e_n);
      GammaModule gam(e_k, e_n);
      auto need_x = [&]() {
        if (x_text.empty()) throw usage_error("element " + eop + " needs --x");
        auto v = vector_from_json(parse_json_arg(x_text, "--x"));
        if (v.size() != e_k) throw input_error("--x must have k entries");
        return Element(FreeModule{e_k}, v);
      };
      auto need_u = [&]() {
        if (u_text.empty()) throw usage_error("element " + eop + " needs --u");
        return parse_json_arg(u_text, "--u");
      };
      json out;
      if (eop == "class") {
        out = combination_to_json(class_of(alg, need_x()));
      } else if (eop == "divided") {
        out = combination_to_json(divided_power(gam, need_x()));
      } else if (eop == "gamma") {
        auto u = combination_from_json(alg, need_u());
        auto v = to_rational(gamma_matrix(e_k, e_n)).apply(std::span<Rat const>(u.to_vector()));
        out = combination_to_json(GammaElement::from_vector(gam, std::span<Rat const>(v)));
      } else {
        auto u = combination_from_json(gam, need_u());
        auto v = epsilon_matrix(e_k, e_n).apply(std::span<Rat const>(u.to_vector()));
        out = combination_to_json(AugElement::from_vector(alg, std::span<Rat const>(v)));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (usage_error const& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (input_error const& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (shape_error const& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (section_error const& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
