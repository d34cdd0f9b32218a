#include "diophant/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "diophant/dioset.hpp"
#include "diophant/enumeration.hpp"
#include "diophant/error.hpp"
#include "diophant/formal.hpp"
#include "diophant/json_io.hpp"
#include "diophant/numtheory.hpp"
#include "diophant/reduction.hpp"
#include "diophant/search.hpp"
#include "diophant/selfcheck.hpp"
#include "diophant/syntax.hpp"

namespace diophant::cli {

namespace {

using json_io::json;

enum class Format { Table, Json };

struct Output {
  Format format = Format::Table;
  std::ostringstream text;

  // Prints `doc` in JSON mode, otherwise the table text.
  void emit(const json& doc, const std::string& table) {
    if (format == Format::Json) {
      text << doc.dump(2) << '\n';
    } else {
      text << table;
      if (!table.empty() && table.back() != '\n') text << '\n';
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::DomainError, "cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) { return json::parse(read_file(path)); }

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

BigInt parse_bigint(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw SyntaxError(ErrorCode::SyntaxError, "expected an integer, got \"" + text + "\"", 1, 1);
  }
  return v;
}

/// "Z", "gauss", "quad:D" or a bare radicand.
RingDescriptor parse_ring(const std::string& text) {
  if (text == "Z") return RingDescriptor::integers();
  if (text == "gauss") return RingDescriptor::gaussian();
  const std::string digits = text.rfind("quad:", 0) == 0 ? text.substr(5) : text;
  const BigInt d = parse_bigint(digits);
  if (!fits_int64(d)) fail(ErrorCode::DomainError, "radicand too large");
  if (d == -1) return RingDescriptor::gaussian();
  return RingDescriptor::quadratic(d.get_si());
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const BigInt v = parse_bigint(trim(item));
    if (v < 0 || !fits_int64(v)) fail(ErrorCode::DomainError, "list entries must be nonnegative");
    out.push_back(static_cast<std::size_t>(v.get_si()));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string element_list(const Assignment& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(v.to_string());
  return "(" + join(parts, ", ") + ")";
}

std::string mask_text(const Mask& m) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) parts.push_back(std::to_string(i));
  }
  return "{" + join(parts, ",") + "}";
}

/// Equation file: "lhs = rhs" or a bare polynomial, over Z.
Polynomial read_equation(const std::string& path) {
  const std::string text = trim(read_file(path));
  const auto eq = text.find('=');
  const RingDescriptor z = RingDescriptor::integers();
  if (eq == std::string::npos) return parse_polynomial(text, z);
  Polynomial lhs = parse_polynomial(text.substr(0, eq), z);
  Polynomial rhs = parse_polynomial(text.substr(eq + 1), z);
  const std::size_t arity = std::max(lhs.arity(), rhs.arity());
  return lhs.with_arity(arity) - rhs.with_arity(arity);
}

int exit_code_for(ErrorCode code) {
  switch (category_of(code)) {
    case ErrorCategory::Parse: return 2;
    case ErrorCategory::Internal: return 3;
    case ErrorCategory::Validation: return 1;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine set workbench: closure algebra, enumeration, reductions and diagonal arguments"};
  app.require_subcommand(1);
  app.fallthrough();

  Output o;
  std::string format_flag = "table";
  std::uint64_t seed = 1;
  unsigned workers = 1;
  app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--workers", workers, "Worker threads for scans")->check(CLI::Range(1u, 256u));

  // nt
  auto* nt = app.add_subcommand("nt", "Number theory: Pell sequences, congruences, four squares, alpha");
  nt->require_subcommand(1);
  std::int64_t pell_a = 2;
  std::uint64_t pell_n = 0, lemma_k = 1;
  auto* nt_pell = nt->add_subcommand("pell", "x_n, y_n for x^2 - (a^2-1) y^2 = 1");
  nt_pell->add_option("--a", pell_a, "a >= 2")->required();
  nt_pell->add_option("--n", pell_n, "index n >= 0")->required();
  auto* nt_lemma5 = nt->add_subcommand("lemma5", "Check y_nk^2 = y_n^2 k^2 mod y_n^4");
  nt_lemma5->add_option("--a", pell_a, "a >= 2")->required();
  nt_lemma5->add_option("--n", pell_n, "n >= 1")->required();
  nt_lemma5->add_option("--k", lemma_k, "k >= 1")->required();
  std::string big_arg;
  auto* nt_four = nt->add_subcommand("foursquares", "Lexicographically greatest four-square decomposition");
  nt_four->add_option("N", big_arg, "natural number")->required();
  std::int64_t pell_d = 2;
  auto* nt_fund = nt->add_subcommand("pellfund", "Fundamental solution of x^2 - d y^2 = 1");
  nt_fund->add_option("D", pell_d, "non-square d >= 2")->required();
  std::int64_t alpha_n = 0;
  std::string alpha_mod;
  auto* nt_alpha = nt->add_subcommand("alpha", "alpha(n) with alpha(0)=0, alpha(1)=1, alpha(n+1)=4alpha(n)-alpha(n-1)");
  nt_alpha->add_option("--n", alpha_n, "index (negative allowed)")->required();
  nt_alpha->add_option("--mod", alpha_mod, "reduce modulo M");

  // enum
  auto* en = app.add_subcommand("enum", "Universal enumeration of polynomials and the diagonal set");
  en->require_subcommand(1);
  std::uint64_t enum_n = 0;
  auto* en_poly = en->add_subcommand("poly", "The N-th polynomial P_N");
  en_poly->add_option("N", enum_n, "index >= 1")->required();
  auto* en_set = en->add_subcommand("set", "The set D_N defined by P_N");
  en_set->add_option("N", enum_n, "index >= 1")->required();
  std::uint64_t diag_max = 10, diag_budget = 5;
  auto* en_diag = en->add_subcommand("diag", "Diagonal report: chi_V(n) = 1 - chi_{D_n}(n)");
  en_diag->add_option("--max", diag_max, "rows 1..N")->required();
  en_diag->add_option("--budget", diag_budget, "box bound per row");

  // reduce
  auto* rd = app.add_subcommand("reduce", "Reductions: N in Z[sqrt d], Z in Z[i]");
  rd->require_subcommand(1);
  std::int64_t quad_d = 2;
  std::string equation_file;
  std::optional<std::uint64_t> emit_radius;
  auto* rd_quad = rd->add_subcommand("quad", "Reduce a natural-number equation to one over Z[sqrt d]");
  rd_quad->add_option("--d", quad_d, "square-free d >= 2")->required();
  rd_quad->add_option("--equation", equation_file, "file with 'lhs = rhs' or a polynomial over Z")->required();
  rd_quad->add_option("--emit-witness", emit_radius,
                      "search naturals up to K for a solution and emit the assembled witness");
  std::string gauss_a;
  auto* rd_gauss = rd->add_subcommand("gauss", "Witness that a rational integer a satisfies the Gaussian system");
  rd_gauss->add_option("--a", gauss_a, "rational integer")->required()->allow_extra_args(false);
  std::string witness_file;
  auto* rd_verify = rd->add_subcommand("gauss-verify", "Check a Gaussian witness file");
  rd_verify->add_option("FILE", witness_file, "witness JSON")->required();
  std::uint64_t alpha_bound = 5;
  auto* rd_alpha = rd->add_subcommand("alpha-solutions", "Gaussian solutions of x^2 - 4xy + y^2 = 1");
  rd_alpha->add_option("--bound", alpha_bound, "component bound")->required();

  // search
  std::string set_file;
  std::uint64_t search_radius = 3, witness_radius = 5;
  auto* sr = app.add_subcommand("search", "Bounded membership scan of a set over a parameter box");
  sr->add_option("--set", set_file, "set JSON")->required();
  sr->add_option("--radius", search_radius, "parameter box radius");
  sr->add_option("--witness-radius", witness_radius, "auxiliary box radius");

  // set
  auto* st = app.add_subcommand("set", "Diophantine set construction");
  st->require_subcommand(1);
  std::string formula_file, ring_arg = "Z", domain_arg = "N";
  auto* st_compile = st->add_subcommand("compile", "Compile a positive existential formula to a set");
  st_compile->add_option("--formula", formula_file, "formula file")->required();
  st_compile->add_option("--ring", ring_arg, "Z, gauss or quad:D");
  st_compile->add_option("--domain", domain_arg, "N or Z")->check(CLI::IsMember({"N", "Z"}));

  // formal
  auto* fm = app.add_subcommand("formal", "Finite diagonal arguments");
  fm->require_subcommand(1);
  std::size_t liar_size = 2;
  std::string system_file;
  auto* fm_liar = fm->add_subcommand("liar", "Liar check, exhaustive by size or on one system");
  auto* size_opt = fm_liar->add_option("--size", liar_size, "largest |F| and |N|")->check(CLI::Range(1, 4));
  fm_liar->add_option("--system", system_file, "JSON with \"system\" and \"truth\"")->excludes(size_opt);
  std::string g_file, alpha_arg = "swap";
  auto* fm_diag = fm->add_subcommand("diag", "Diagonal function f = alpha o g o Delta against the columns of g");
  fm_diag->add_option("--file", g_file, "g as JSON table")->required();
  fm_diag->add_option("--alpha", alpha_arg, "swap, cycle, identity or a comma list");
  std::string template_file;
  auto* fm_quine = fm->add_subcommand("quine", "Self-referential sentence from a one-hole template");
  fm_quine->add_option("--template", template_file, "template file")->required();

  // selfcheck
  std::string fault;
  auto* sc = app.add_subcommand("selfcheck", "Quick invariant suite");
  sc->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"conjoin-product"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_help, e_help;
    const int code = app.exit(e, o_help, e_help);
    out << o_help.str();
    err << e_help.str();
    return code == 0 ? 0 : 2;
  }

  o.format = format_flag == "json" ? Format::Json : Format::Table;
  SearchOptions opts;
  opts.workers = workers;
  int status = 0;

  try {
    if (*nt_pell) {
      const auto p = pell_sequence(pell_a, pell_n);
      o.emit({{"a", p.a}, {"n", p.n}, {"x", json_io::bigint_to_json(p.x)}, {"y", json_io::bigint_to_json(p.y)}},
             "(" + to_string(p.x) + "," + to_string(p.y) + ")");
    } else if (*nt_lemma5) {
      const auto r = check_lemma5(pell_a, pell_n, lemma_k);
      o.emit({{"holds", r.holds},
              {"y_n", json_io::bigint_to_json(r.y_n)},
              {"y_nk", json_io::bigint_to_json(r.y_nk)},
              {"modulus", json_io::bigint_to_json(r.modulus)},
              {"lhs", json_io::bigint_to_json(r.lhs_residue)},
              {"rhs", json_io::bigint_to_json(r.rhs_residue)}},
             std::string(r.holds ? "holds" : "FAILS") + ": y_nk^2 = " + to_string(r.lhs_residue) +
                 ", y_n^2 k^2 = " + to_string(r.rhs_residue) + " (mod " + to_string(r.modulus) + ")");
    } else if (*nt_four) {
      const auto s = four_squares(parse_bigint(big_arg));
      json arr = json::array();
      std::vector<std::string> parts;
      for (const auto& v : s) {
        arr.push_back(json_io::bigint_to_json(v));
        parts.push_back(to_string(v));
      }
      o.emit(arr, "(" + join(parts, ",") + ")");
    } else if (*nt_fund) {
      const auto [x, y] = pell_fundamental(pell_d);
      o.emit({{"d", pell_d}, {"x", json_io::bigint_to_json(x)}, {"y", json_io::bigint_to_json(y)}},
             "(" + to_string(x) + "," + to_string(y) + ")");
    } else if (*nt_alpha) {
      std::optional<BigInt> mod;
      if (!alpha_mod.empty()) mod = parse_bigint(alpha_mod);
      const BigInt v = alpha(alpha_n, mod);
      o.emit({{"n", alpha_n}, {"alpha", json_io::bigint_to_json(v)}}, to_string(v));
    } else if (*en_poly) {
      const auto p = nth_polynomial(enum_n);
      o.emit({{"n", enum_n}, {"polynomial", json_io::polynomial_to_json(p)}, {"text", to_text(p)}}, to_text(p));
    } else if (*en_set) {
      const auto s = universal_set(enum_n);
      o.emit(json_io::set_to_json(s), "D_" + std::to_string(enum_n) + " = { x0 : exists x1..x" +
                                          std::to_string(enum_n) + " in N, " + to_text(s.q()) + " = 0 }");
    } else if (*en_diag) {
      const auto rows = diagonal_report(diag_max, diag_budget, workers);
      json doc = json::array();
      std::string table = "n\tn in D_n\tchi_V(n)\n";
      for (const auto& r : rows) {
        json row = json_io::tristate_to_json(r.state);
        row.erase("radius");
        row["n"] = r.n;
        if (r.chi_v) row["chi_v"] = *r.chi_v;
        doc.push_back(row);
        table += std::to_string(r.n) + "\t" + state_name(r.state) + "\t" +
                 (r.chi_v ? std::to_string(*r.chi_v) : std::string("?")) + "\n";
      }
      o.emit(doc, table);
    } else if (*rd_quad) {
      const Polynomial p = read_equation(equation_file);
      const PolynomialExpr r = reduce_equation_quad(p, quad_d);
      json doc{{"d", quad_d},
               {"ring", json_io::ring_to_json(r.ring())},
               {"params", p.arity()},
               {"arity", r.arity()},
               {"degree_bound", r.degree_bound()},
               {"nodes", r.node_count()}};
      std::string table = "R over " + r.ring().name() + ": " + std::to_string(r.arity()) +
                          " variables, degree <= " + std::to_string(r.degree_bound()) + ", " +
                          std::to_string(r.node_count()) + " expression nodes\n";
      if (emit_radius) {
        const auto box = box_points(SearchDomain::naturals(*emit_radius), p.arity());
        std::optional<std::vector<BigInt>> solution;
        for (const auto& pt : box) {
          if (p.evaluate(pt).is_zero()) {
            solution.emplace();
            for (const auto& v : pt) solution->push_back(v.a());
            break;
          }
        }
        if (!solution) {
          doc["witness"] = nullptr;
          table += "no natural solution with entries <= " + std::to_string(*emit_radius) + "\n";
        } else {
          const Assignment w = reduce_equation_witness(p, quad_d, *solution);
          const bool vanishes = r.evaluate(w).is_zero();
          if (!vanishes) fail(ErrorCode::InternalInconsistency, "assembled witness does not annihilate R");
          const Assignment params(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p.arity()));
          doc["solution"] = json_io::assignment_to_json(params);
          doc["witness"] = json_io::assignment_to_json(w);
          doc["vanishes"] = vanishes;
          table += "witness from solution " + element_list(params) + " annihilates R\n";
        }
      }
      o.emit(doc, table);
    } else if (*rd_gauss) {
      const auto w = gauss_witness(parse_bigint(gauss_a));
      // Witness documents are JSON in either format so they can be fed back to gauss-verify.
      o.text << json_io::gauss_witness_to_json(w).dump(2) << '\n';
    } else if (*rd_verify) {
      const auto w = json_io::gauss_witness_from_json(read_json_file(witness_file));
      const auto r = gauss_verify(w);
      std::vector<std::string> failing;
      for (int i : r.failing) failing.push_back(std::to_string(i));
      o.emit(json_io::gauss_report_to_json(r),
             r.holds ? "all seven equations hold" : "failing equations: " + join(failing, ", "));
      if (!r.holds) status = 1;
    } else if (*rd_alpha) {
      const auto sols = alpha_equation_solutions(alpha_bound);
      json doc = json::array();
      std::string table = "x\ty\tfamily\tindex\n";
      for (const auto& s : sols) {
        json row{{"x", json_io::element_to_json(s.x)}, {"y", json_io::element_to_json(s.y)}};
        if (s.family) {
          row["family"] = *s.family;
          row["index"] = s.index;
        }
        doc.push_back(row);
        table += s.x.to_string() + "\t" + s.y.to_string() + "\t" +
                 (s.family ? std::to_string(*s.family) + "\t" + std::to_string(s.index) : std::string("none\t-")) + "\n";
      }
      o.emit(doc, table);
    } else if (*sr) {
      const DiophantineSet set = json_io::set_from_json(read_json_file(set_file));
      const SearchDomain params = SearchDomain::for_set(set, search_radius);
      const SearchDomain aux = SearchDomain::for_set(set, witness_radius);
      json doc = json::array();
      std::string table = "point\tstate\twitness\n";
      for (const auto& pt : box_points(params, set.params())) {
        const TriState s = membership(set, pt, aux, opts);
        json row = json_io::tristate_to_json(s);
        row["point"] = json_io::assignment_to_json(pt);
        doc.push_back(row);
        const auto* m = std::get_if<Member>(&s);
        table += element_list(pt) + "\t" + state_name(s) + "\t" + (m ? element_list(m->witness) : "-") + "\n";
      }
      o.emit(doc, table);
    } else if (*st_compile) {
      const ParsedFormula f = parse_formula(read_file(formula_file), parse_ring(ring_arg));
      const DiophantineSet s = compile_formula(f, domain_arg == "N" ? SetDomain::Naturals : SetDomain::Integers);
      o.text << json_io::set_to_json(s).dump(2) << '\n';
    } else if (*fm_liar) {
      if (!system_file.empty()) {
        const json doc = read_json_file(system_file);
        const FormalSystem sys = json_io::system_from_json(doc.at("system"));
        Mask truth(sys.formulas, false);
        for (auto i : doc.at("truth").get<std::vector<std::size_t>>()) {
          if (i >= sys.formulas) fail(ErrorCode::DomainError, "truth index outside F");
          truth[i] = true;
        }
        const auto v = liar_check(sys, truth);
        json out_doc{{"confirmed", v.confirmed}, {"antidiagonal", v.antidiagonal}};
        if (v.counterexample) out_doc["counterexample"] = *v.counterexample;
        o.emit(out_doc, std::string(v.confirmed ? "confirmed" : "REFUTED") + ": anti-diagonal " +
                            mask_text(v.antidiagonal) + " is " + (v.confirmed ? "not " : "") + "T-representable");
        if (!v.confirmed) status = 3;
      } else {
        const auto s = liar_exhaustive(liar_size);
        o.emit({{"size", liar_size}, {"instances", s.instances}, {"counterexamples", s.counterexamples}},
               std::to_string(s.instances) + " systems with |F|, |N| <= " + std::to_string(liar_size) + ": " +
                   std::to_string(s.counterexamples) + " counterexamples");
        if (s.counterexamples != 0) status = 3;
      }
    } else if (*fm_diag) {
      const FiniteFunction2 g = json_io::function2_from_json(read_json_file(g_file));
      std::vector<std::size_t> alpha_map(g.codomain_size);
      for (std::size_t y = 0; y < g.codomain_size; ++y) {
        if (alpha_arg == "swap" || alpha_arg == "cycle") {
          alpha_map[y] = (y + 1) % g.codomain_size;
        } else if (alpha_arg == "identity") {
          alpha_map[y] = y;
        }
      }
      if (alpha_arg == "swap" && g.codomain_size != 2) fail(ErrorCode::DomainError, "swap needs |Y| = 2");
      if (alpha_arg != "swap" && alpha_arg != "cycle" && alpha_arg != "identity") alpha_map = parse_index_list(alpha_arg);
      const auto r = diagonal_construct(g, alpha_map);
      json seps = json::array();
      std::string table = "f = (";
      for (std::size_t s = 0; s < r.f.size(); ++s) table += (s ? "," : "") + std::to_string(r.f[s]);
      table += ")\n";
      for (std::size_t t = 0; t < r.separating_point.size(); ++t) {
        const auto& sp = r.separating_point[t];
        seps.push_back(sp ? json(*sp) : json(nullptr));
        table += "column " + std::to_string(t) + ": " +
                 (sp ? "differs at s = " + std::to_string(*sp) : std::string("equals f")) + "\n";
      }
      o.emit({{"f", r.f},
              {"alpha", alpha_map},
              {"alpha_fixed_points", r.alpha_fixed_points},
              {"separating_point", seps},
              {"matching_columns", r.matching_columns}},
             table);
    } else if (*fm_quine) {
      std::string tmpl = read_file(template_file);
      while (!tmpl.empty() && (tmpl.back() == '\n' || tmpl.back() == '\r')) tmpl.pop_back();
      const auto q = quine_sentence(tmpl);
      o.emit({{"template", tmpl}, {"sentence", q.sentence}, {"resolved", q.resolved}, {"holds", q.holds}},
             q.sentence + "\n" + (q.holds ? "fixed point verified" : "FIXED POINT FAILS"));
      if (!q.holds) status = 3;
    } else if (*sc) {
      if (fault == "conjoin-product") debug::set_conjoin_fault(true);
      const auto report = run_selfcheck(seed);
      debug::set_conjoin_fault(false);
      json checks = json::array();
      std::string table;
      for (const auto& c : report.checks) {
        checks.push_back({{"module", c.module}, {"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                          {"detail", c.detail}});
        table += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.module + ": " + c.name + " (" +
                 std::to_string(c.cases) + " cases)" + (c.detail.empty() ? "" : " - " + c.detail) + "\n";
      }
      json modules = json::object();
      for (const auto& [name, counts] : report.per_module()) {
        modules[name] = {{"passed", counts.first}, {"checks", counts.second}};
        table += name + ": " + std::to_string(counts.first) + "/" + std::to_string(counts.second) + "\n";
      }
      o.emit({{"passed", report.passed()}, {"modules", modules}, {"checks", checks}}, table);
      if (!report.passed()) status = 3;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  out << o.text.str();
  return status;
}

}  // namespace diophant::cli
