// Command-line front end: every subcommand reads JSON (file or stdin) and
// writes JSON to stdout, or an indented text rendering with --format text.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hinges/json_io.hpp"

namespace {

using namespace hinges;

json read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return json::parse(ss.str());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

void render_text(const json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object() || it->is_array()) {
        os << pad << it.key() << ":\n";
        render_text(*it, os, indent + 2);
      } else {
        os << pad << it.key() << ": " << it->dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      os << pad << j.dump() << "\n";
    } else {
      for (const auto& e : j) render_text(e, os, indent + 2);
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "text")
    render_text(j, std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

long env_precision() {
  const char* s = std::getenv("HINGE_PRECISION");
  if (!s) return 0;
  return std::strtol(s, nullptr, 10);
}

int run_selftest(std::uint64_t seed, int trials) {
  std::mt19937_64 eng(seed);
  auto uni = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  };
  auto rand_matrix = [&](std::size_t r, std::size_t c) {
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(uni(-3, 3));
    return m;
  };
  auto rand_relation = [&](std::size_t dv, std::size_t dw, std::size_t d) {
    while (true) {
      Subspace s(dv + dw, rand_matrix(d, dv + dw));
      if (s.dim() == d) return LinearRelation(dv, dw, s);
    }
  };
  auto rand_laurent = [&](std::size_t n) {
    while (true) {
      LaurentMatrix g(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (long e = -2; e <= 2; ++e)
            if (uni(0, 2) == 0) g(i, j).set_coeff(e, Rational(uni(-2, 2)));
      if (!g.det().is_zero()) return g;
    }
  };

  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(json{{"check", name}, {"passed", ok}});
    if (!ok) all_ok = false;
  };

  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      std::size_t dv = uni(1, 3), dw = uni(1, 3), dy = uni(1, 3), dz = uni(1, 3);
      GaMorphism p = GaMorphism::of(rand_relation(dv, dw, uni(0, dv + dw)));
      GaMorphism q = GaMorphism::of(rand_relation(dw, dy, uni(0, dw + dy)));
      GaMorphism r = GaMorphism::of(rand_relation(dy, dz, uni(0, dy + dz)));
      GaMorphism l = compose(compose(r, q), p), rr = compose(r, compose(q, p));
      if (l.is_null() != rr.is_null()) ok = false;
      if (!l.is_null() && !(*l.rel == *rr.rel)) ok = false;
    }
    record("associativity", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      std::size_t n = uni(1, 3);
      RationalMatrix a = rand_matrix(n, n), b = rand_matrix(n, n);
      GaMorphism m = compose(GaMorphism::of(graph(b)), GaMorphism::of(graph(a)));
      if (m.is_null() || !(*m.rel == graph(b * a))) ok = false;
    }
    record("graph_homomorphism", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      std::size_t n = uni(1, 3);
      LaurentMatrix g = rand_laurent(n);
      GluedFamily direct = limit_glued(g);
      GluedFamily via = glue(limit_hinge(g).hinge);
      for (std::size_t m = 0; m <= n; ++m)
        if (!(direct.blocks[m] == via.blocks[m])) ok = false;
    }
    record("limit_two_path", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      std::size_t n = uni(1, 3);
      LaurentMatrix g = rand_laurent(n);
      if (factorize(g).m != exponents(g).m) ok = false;
    }
    record("factorization_exponents", ok);
  }
  emit(json{{"seed", seed}, {"trials", trials}, {"passed", all_ok}, {"checks", checks}},
       "json");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact boundary limits of invertible matrix families"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  long precision = env_precision();
  app.add_option("--precision", precision,
                 "working jet precision for factorization and substitution");

  std::string in_path, in_path_b;
  std::vector<std::string> signature_args;
  std::vector<std::string> spec_args;
  std::string signature_arg;
  long degree = -1;
  std::size_t rep_n = 0;
  std::string gmat_path;
  std::uint64_t seed = 1;
  int trials = 25;

  auto* c_exp = app.add_subcommand("exponents", "exponents of a family");
  c_exp->add_option("-i,--input", in_path, "family JSON (default stdin)");

  auto* c_factor = app.add_subcommand("factor", "jet factorization of a family");
  c_factor->add_option("-i,--input", in_path, "family JSON (default stdin)");

  auto* c_lh = app.add_subcommand("limit-hinge", "boundary hinge of a family");
  c_lh->add_option("-i,--input", in_path, "family JSON (default stdin)");

  auto* c_lg = app.add_subcommand("limit-glued", "glued degree limits of a family");
  c_lg->add_option("-i,--input", in_path, "family JSON (default stdin)");

  auto* c_hc = app.add_subcommand("hinge-check", "validate a hinge");
  c_hc->add_option("-i,--input", in_path, "hinge JSON (default stdin)");

  auto* c_hm = app.add_subcommand("hinge-mul", "glued product of two hinges");
  c_hm->add_option("-a,--first", in_path, "first hinge JSON")->required();
  c_hm->add_option("-b,--second", in_path_b, "second hinge JSON")->required();

  auto* c_lam = app.add_subcommand("lambda", "degree operators of a relation");
  c_lam->add_option("-i,--input", in_path, "relation JSON (default stdin)");
  c_lam->add_option("--degree", degree, "restrict to one degree");

  auto* c_rep = app.add_subcommand("rep", "build a representation space");
  c_rep->add_option("--signature", signature_arg, "signature, e.g. 2,1,0")->required();
  c_rep->add_option("-n,--dimension", rep_n, "ambient dimension (default: length)");
  c_rep->add_option("-g,--group-element", gmat_path, "matrix JSON to apply");

  auto* c_rl = app.add_subcommand("rep-limit", "representation limit of a family");
  c_rl->add_option("-i,--input", in_path, "family JSON (default stdin)");
  c_rl->add_option("--signature", signature_arg, "signature, e.g. 2,1,0")->required();

  auto* c_ur = app.add_subcommand("urchin", "boundary point of a family");
  c_ur->add_option("-i,--input", in_path, "family JSON (default stdin)");

  auto* c_pr = app.add_subcommand("project", "project a boundary point");
  c_pr->add_option("-i,--input", in_path, "family or point JSON (default stdin)");
  c_pr->add_option("--signatures", signature_args, "signatures of one compactification")
      ->required()
      ->expected(-1);

  auto* c_sep = app.add_subcommand("separate", "compare two families at the boundary");
  c_sep->add_option("-a,--first", in_path, "first family JSON")->required();
  c_sep->add_option("-b,--second", in_path_b, "second family JSON")->required();
  c_sep->add_option("--spec", spec_args,
                    "compactification spec, signatures joined by ';' (repeatable)")
      ->required();

  auto* c_self = app.add_subcommand("selftest", "run the built-in property suite");
  c_self->add_option("--seed", seed, "random seed");
  c_self->add_option("--trials", trials, "trials per check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_exp->parsed()) {
      emit(exponent_data_to_json(exponents(laurent_matrix_from_json(read_input(in_path)))),
           format);
    } else if (c_factor->parsed()) {
      Factorization f = factorize(laurent_matrix_from_json(read_input(in_path)), precision);
      emit(json{{"m", f.m},
                {"a", laurent_matrix_to_json(f.a)},
                {"b", laurent_matrix_to_json(f.b)},
                {"precision", f.precision},
                {"exact_below", f.exact_below}},
           format);
    } else if (c_lh->parsed()) {
      LimitHinge lh = limit_hinge(laurent_matrix_from_json(read_input(in_path)));
      emit(json{{"exponents", exponent_data_to_json(lh.exp)},
                {"hinge", hinge_to_json(lh.hinge)}},
           format);
    } else if (c_lg->parsed()) {
      emit(glued_to_json(limit_glued(laurent_matrix_from_json(read_input(in_path)))),
           format);
    } else if (c_hc->parsed()) {
      Hinge h = hinge_from_json(read_input(in_path));
      emit(json{{"valid", true},
                {"n", h.n()},
                {"orbit_label", orbit_label(h)},
                {"terms", h.size()}},
           format);
    } else if (c_hm->parsed()) {
      GluedFamily a = glue(hinge_from_json(read_input(in_path)));
      GluedFamily b = glue(hinge_from_json(read_input(in_path_b)));
      emit(glued_to_json(glued_product(a, b)), format);
    } else if (c_lam->parsed()) {
      LinearRelation r = relation_from_json(read_input(in_path));
      LambdaFamily fam = lambda_relation(r);
      if (degree >= 0) {
        if (degree > static_cast<long>(r.dim_v()))
          throw std::invalid_argument("degree exceeds the ambient dimension");
        emit(exterior_to_json(fam.blocks[degree]), format);
      } else {
        json blocks = json::array();
        for (const auto& b : fam.blocks)
          if (b.mat.rows() > 0) blocks.push_back(exterior_to_json(b));
        emit(json{{"shift", fam.shift}, {"blocks", blocks}}, format);
      }
    } else if (c_rep->parsed()) {
      Signature nu = parse_signature(signature_arg);
      std::size_t n = rep_n ? rep_n : nu.size();
      RepSpace rep = build_rep(nu, n);
      json out{{"signature", nu},
               {"n", n},
               {"dim", rep.dim()},
               {"ambient_dim", rep.ambient_dim}};
      if (!gmat_path.empty()) {
        RepOperator op = rho_group(rep, matrix_from_json(read_input(gmat_path)));
        out["operator"] = rep_operator_to_json(op, rep.dim());
      }
      emit(out, format);
    } else if (c_rl->parsed()) {
      Signature nu = parse_signature(signature_arg);
      LaurentMatrix g = laurent_matrix_from_json(read_input(in_path));
      RepSpace rep = build_rep(nu, g.n);
      emit(rep_operator_to_json(rep_limit(rep, g), rep.dim()), format);
    } else if (c_ur->parsed()) {
      emit(urchin_point_to_json(curve_limit(laurent_matrix_from_json(read_input(in_path)))),
           format);
    } else if (c_pr->parsed()) {
      json in = read_input(in_path);
      CompactificationSpec spec;
      for (const auto& s : signature_args) spec.signatures.push_back(parse_signature(s));
      UrchinPoint p =
          in.contains("type") ? urchin_point_from_json(in)
                              : curve_limit(laurent_matrix_from_json(in));
      std::size_t n = std::holds_alternative<InteriorPoint>(p)
                          ? std::get<InteriorPoint>(p).g.rows()
                          : std::get<SpikePoint>(p).hinge.n();
      emit(projection_to_json(project(p, build_zeta(spec, n))), format);
    } else if (c_sep->parsed()) {
      LaurentMatrix g1 = laurent_matrix_from_json(read_input(in_path));
      LaurentMatrix g2 = laurent_matrix_from_json(read_input(in_path_b));
      std::vector<CompactificationSpec> specs;
      for (const auto& s : spec_args) {
        CompactificationSpec spec;
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ';'))
          spec.signatures.push_back(parse_signature(part));
        specs.push_back(std::move(spec));
      }
      emit(json{{"separated", separate(g1, g2, specs)}}, format);
    } else if (c_self->parsed()) {
      return run_selftest(seed, trials);
    }
  } catch (const HingeAxiomError& e) {
    std::cerr << json{{"error", e.what()}, {"axiom", e.axiom}, {"index", e.index}}.dump()
              << "\n";
    return 3;
  } catch (const PrecisionError& e) {
    std::cerr << json{{"error", e.what()}, {"required_precision", e.required}}.dump()
              << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
