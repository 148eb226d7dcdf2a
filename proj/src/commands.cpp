#include "slicewb/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>
#include <tuple>

#include "slicewb/battery.hpp"
#include "slicewb/json_io.hpp"
#include "slicewb/parser.hpp"

namespace slicewb {

namespace {

struct Globals {
  int m = 5;
  int n = 1;
  std::string scalar = "exact";
  bool json_out = false;
  std::uint64_t seed = 20240501;
  double step = 1e-3;
  double tol = 1e-5;
  int samples = 20;
  bool plain = false;

  StencilConfig stencil() const {
    StencilConfig c;
    c.step = step;
    c.tolerance = tol;
    c.samples = samples;
    c.seed = seed;
    c.richardson = !plain;
    return c;
  }
};

/// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SubsetMask mask_of(const std::vector<int>& v, int n) {
  try {
    return subset_from(v, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SliceFunction load_function(const std::string& expr, Globals& g, std::istream& in) {
  if (expr == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("stdin is not valid JSON: ") + e.what());
    }
    SliceFunction f(stem_from_json(j));
    g.m = f.dim();
    g.n = f.nvars();
    return f;
  }
  return parse_slice_function(expr, g.m, g.n);
}

void print_stem(std::ostream& out, const Globals& g, const std::string& title, const SliceFunction& f) {
  if (g.json_out) {
    out << json{{"result", title}, {"stem", to_json(f.stem())}}.dump(2) << "\n";
  } else {
    out << title << ":\n" << to_string(f.stem());
    if (f.is_zero()) out << "\n";
  }
}

struct Check {
  std::string name;
  bool pass;
};

int report_checks(std::ostream& out, const Globals& g, const std::string& title, const std::vector<Check>& checks) {
  bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (g.json_out) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(json{{"check", c.name}, {"pass", c.pass}});
    out << json{{"suite", title}, {"checks", arr}, {"pass", ok}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    out << title << ": " << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? 0 : 1;
}

std::string hname(const std::string& what, int h) { return what + " [h=" + std::to_string(h) + "]"; }

void suite_products(const SliceFunction& f, const Globals& g, std::vector<Check>& out) {
  const int m = f.dim(), n = f.nvars();
  SliceFunction ff = slice_product(f, f);
  out.push_back({"tensor square keeps the parity law", validate_stem(ff.stem())});
  auto points = sample_points(n, m, g.stencil());
  for (int h = 1; h <= n; ++h) {
    if (holomorphy_check(f.stem(), h))
      out.push_back({hname("tensor square stays holomorphic", h), holomorphy_check(ff.stem(), h)});
    SliceFunction xh = coordinate(m, n, h);
    const std::string xs = "x" + std::to_string(h);
    for (const auto& [label, a, b] : {std::tuple{std::string("f.f"), f, f}, std::tuple{xs + ".f", xh, f}, std::tuple{"f." + xs, f, xh}}) {
      SliceFunction lhs = spherical_derivative(slice_product(a, b), h);
      SliceFunction rhs = slice_product(spherical_derivative(a, h), spherical_value(b, h)) +
                          slice_product(spherical_value(a, h), spherical_derivative(b, h));
      out.push_back({hname("Leibniz rule on " + label, h), lhs == rhs});
    }
    if (is_circular_wrt(f, prefix_set(h - 1))) {
      bool ok = true;
      SliceFunction prod = slice_product(xh, f);
      for (const auto& x : points)
        if (!(evaluate<Rational>(prod, x) == x[h - 1] * evaluate<Rational>(f, x))) ok = false;
      out.push_back({hname("x_h . f equals the pointwise product", h), ok});
    }
  }
}

void suite_spherical(const SliceFunction& f, const Globals& g, std::vector<Check>& out) {
  const int m = f.dim(), n = f.nvars();
  auto points = sample_points(n, m, g.stencil());
  for (int h = 1; h <= n; ++h) {
    SliceFunction v = spherical_value(f, h), d = spherical_derivative(f, h);
    out.push_back({hname("f = f^o + Im(x_h) . f'", h), f == v + slice_product(imaginary_coordinate(m, n, h), d)});
    out.push_back({hname("spherical value is idempotent", h), spherical_value(v, h) == v});
    out.push_back({hname("(f')' = 0", h), spherical_derivative(d, h).is_zero()});
    bool value_ok = true, deriv_ok = true;
    bool slice_h = is_slice_wrt(f, singleton(h));
    for (const auto& x : points) {
      PointQ xc = conjugate_coordinate(x, h);
      MultivectorQ fx = evaluate<Rational>(f, x), fxc = evaluate<Rational>(f, xc);
      if (!(evaluate<Rational>(v, x) == (fx + fxc) * Rational(1, 2))) value_ok = false;
      if (slice_h) {
        MultivectorQ im2 = grade_project(x[h - 1], 1) * Rational(2);
        if (!(evaluate<Rational>(d, x) == vector_inverse(im2) * (fx - fxc))) deriv_ok = false;
      }
    }
    out.push_back({hname("f^o(x) = (f(x) + f(conj_h x))/2", h), value_ok});
    if (slice_h) out.push_back({hname("f'(x) = [2 Im x_h]^{-1}(f(x) - f(conj_h x))", h), deriv_ok});
  }
  if (n == 1) {
    bool ok = true;
    auto [I, J, K] = std::tuple{MultivectorQ::generator(m, 3), MultivectorQ::generator(m, 1), MultivectorQ::generator(m, 2)};
    for (const auto& x : points) {
      auto parts = paravector_parts(x[0]);
      MultivectorQ lhs = representation_eval<Rational>(f, I, J, K, parts.alpha, *parts.beta);
      MultivectorQ rhs = evaluate<Rational>(f, PointQ{MultivectorQ::scalar(m, parts.alpha) + I * *parts.beta});
      if (!(lhs == rhs)) ok = false;
    }
    out.push_back({"representation formula", ok});
  }
  out.push_back({"one-variable regularity check agrees with slice regularity",
                 one_var_regularity_check(f) == is_slice_regular(f)});
}

void suite_polyharmonic(const SliceFunction& f, const Globals& g, std::vector<Check>& out) {
  const int m = f.dim(), n = f.nvars(), gamma = sce_exponent(m);
  if (!is_slice_regular(f)) {
    out.push_back({"input is slice regular", false});
    return;
  }
  auto points = sample_points(n, m, g.stencil());
  for (int h = 1; h <= n; ++h) {
    SliceFunction d = spherical_derivative(f, h);
    out.push_back({hname("Delta^{gamma+1} f = 0", h), laplacian_power(f, h, gamma + 1).is_zero()});
    out.push_back({hname("Delta^gamma f' = 0", h), laplacian_power(d, h, gamma).is_zero()});
    bool closed = true;
    for (int k = 1; k <= gamma; ++k) {
      SliceFunction it = laplacian_power(d, h, k);
      if (!(iterated_laplacian_closed_form(f, h, k, 1) == it) || !(iterated_laplacian_closed_form(f, h, k, 2) == it))
        closed = false;
      if (!(iterated_laplacian_sliceregular(f, h, k - 1, 1) == laplacian_power(f, h, k))) closed = false;
    }
    out.push_back({hname("closed forms match iterated Laplacians", h), closed});
    ResidualReport r = laplacian_residuals(f, h, laplacian(f, h), points, g.stencil());
    out.push_back({hname("finite-difference Laplacian agrees", h), r.all_pass()});
  }
  SliceFunction dirac = dirac_symbolic_var1(f);
  out.push_back({"dbar_1 f = (1-m)/2 f'_{s,1}", dirac == ratio(1 - m, 2) * spherical_derivative(f, 1)});
  out.push_back({"finite-difference Dirac agrees", dirac_residuals(f, 1, dirac, points, g.stencil()).all_pass()});
}

void suite_almansi(const SliceFunction& f, const Globals&, std::vector<Check>& out) {
  const int m = f.dim(), n = f.nvars(), gamma = sce_exponent(m);
  SliceAlmansiResult r = slice_almansi_decompose(f, full_set(n));
  out.push_back({"slice Almansi reconstruction", r.reconstruction_exact});
  out.push_back({"slice Almansi components circular", r.components_circular});
  bool poly = std::all_of(r.polyharmonic.begin(), r.polyharmonic.end(), [](const auto& p) { return p.zero; });
  out.push_back({"slice Almansi components gamma-polyharmonic", poly});
  for (int h = 1; h <= n; ++h) {
    auto deg = polyharmonic_degree(f, h, gamma + 1);
    if (!deg) {
      out.push_back({hname("polyharmonic within gamma+1", h), false});
      continue;
    }
    ClassicalAlmansiResult c = classical_almansi(f, h, *deg);
    out.push_back({hname("classical Almansi reconstruction", h), c.reconstruction_exact});
    out.push_back({hname("classical Almansi components harmonic", h), c.components_harmonic});
  }
}

void suite_fueter(const SliceFunction& f, const Globals& g, std::vector<Check>& out) {
  auto points = sample_points(f.nvars(), f.dim(), g.stencil());
  for (int h = 1; h <= f.nvars(); ++h) {
    for (const auto& in : regular_inputs_for(f, h)) {
      if (!is_slice_regular_wrt(in, h)) {
        out.push_back({hname("input slice regular wrt x_h", h), false});
        continue;
      }
      FueterSceCertificate c = fueter_sce(in, h, points, g.stencil());
      out.push_back({hname("Fueter-Sce symbolic certificate", h), c.symbolic_ok()});
      out.push_back({hname("Fueter-Sce finite-difference residual", h), c.numeric_ok()});
    }
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for slice functions over Clifford algebras", "workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("-m", g.m, "algebra dimension (odd, 3..15)");
  app.add_option("-n", g.n, "number of variables");
  app.add_option("--scalar", g.scalar, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  app.add_flag("--json", g.json_out, "JSON output");
  app.add_option("--seed", g.seed, "sampling seed");
  app.add_option("--step", g.step, "finite-difference step");
  app.add_option("--tol", g.tol, "relative tolerance");
  app.add_flag("--plain-differences", g.plain, "skip Richardson extrapolation");

  std::string expr, at_point, kind = "derivative", mode = "classical", suite = "all";
  std::vector<int> vars, set, sub;
  int var = 1, power = 1, degree = 0, numeric = 20, max_k = 6;

  auto* eval = app.add_subcommand("eval", "evaluate at a point");
  eval->add_option("expr", expr)->required();
  eval->add_option("--at", at_point, "point JSON")->required();

  auto* lap = app.add_subcommand("laplacian", "iterated Laplacian in one variable");
  lap->add_option("expr", expr)->required();
  lap->add_option("--var", var);
  lap->add_option("--power", power)->check(CLI::NonNegativeNumber);

  auto* sph = app.add_subcommand("spherical", "spherical value or derivative");
  sph->add_option("expr", expr)->required();
  sph->add_option("--kind", kind)->check(CLI::IsMember({"value", "derivative"}));
  sph->add_option("--vars", vars)->delimiter(',')->required();

  auto* alm = app.add_subcommand("almansi", "Almansi decompositions");
  alm->add_option("expr", expr)->required();
  alm->add_option("--mode", mode)->check(CLI::IsMember({"classical", "slice", "simultaneous"}));
  alm->add_option("--var", var);
  alm->add_option("--degree", degree);
  alm->add_option("--set", set)->delimiter(',');
  alm->add_option("--sub", sub)->delimiter(',');

  auto* fs = app.add_subcommand("fueter-sce", "Fueter-Sce image and certificate");
  fs->add_option("expr", expr)->required();
  fs->add_option("--var", var);
  fs->add_option("--numeric", numeric)->check(CLI::NonNegativeNumber);

  auto* co = app.add_subcommand("coeffs", "coefficient table a_j^(k)");
  co->add_option("--max-k", max_k)->check(CLI::Range(1, 200));

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("expr", expr)->required();
  ver->add_option("--suite", suite)->check(
      CLI::IsMember({"all", "products", "spherical", "polyharmonic", "almansi", "fueter-sce"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*co) {
      CoefficientTable t(max_k);
      if (g.json_out) {
        json arr = json::array();
        for (int k = 1; k <= max_k; ++k)
          for (int j = 1; j <= k; ++j) arr.push_back(json{{"k", k}, {"j", j}, {"a", to_string(t.at(k, j))}});
        out << json{{"table", arr}}.dump(2) << "\n";
      } else {
        out << t.to_csv();
      }
      return 0;
    }

    SliceFunction f = load_function(expr, g, in);

    if (*eval) {
      json pj;
      try {
        pj = json::parse(at_point);
      } catch (const json::exception& e) {
        throw UsageError(std::string("--at is not valid JSON: ") + e.what());
      }
      PointQ x = point_from_json(pj, g.m);
      if (g.scalar == "float") {
        MultivectorF v = evaluate<double>(f, cast_point<double>(x));
        if (g.json_out) {
          json val = json::object();
          for (const auto& [b, c] : v.terms()) val[blade_to_string(b, g.m)] = c;
          out << json{{"value", val}}.dump(2) << "\n";
        } else {
          out << to_string(v) << "\n";
        }
      } else {
        MultivectorQ v = evaluate<Rational>(f, x);
        if (g.json_out)
          out << json{{"value", to_json(v)}}.dump(2) << "\n";
        else
          out << to_string(v) << "\n";
      }
      return 0;
    }

    if (*lap) {
      print_stem(out, g, "laplacian^" + std::to_string(power) + " in x" + std::to_string(var),
                 laplacian_power(f, var, power));
      return 0;
    }

    if (*sph) {
      SubsetMask hs = mask_of(vars, g.n);
      SliceFunction r = kind == "value" ? spherical_value(f, hs) : spherical_derivative(f, hs);
      print_stem(out, g, "spherical " + kind + " wrt " + subset_to_string(hs), r);
      return 0;
    }

    if (*alm) {
      if (mode == "classical") {
        int p = degree;
        if (p == 0) {
          auto d = polyharmonic_degree(f, var, sce_exponent(g.m) + 1);
          if (!d) throw PreconditionError("f is not polyharmonic of degree <= gamma_m + 1 in x" + std::to_string(var));
          p = *d;
        }
        ClassicalAlmansiResult r = classical_almansi(f, var, p);
        if (g.json_out) {
          out << to_json(r).dump(2) << "\n";
        } else {
          for (std::size_t j = 0; j < r.components.size(); ++j)
            out << "h" << j << ":\n" << to_string(r.components[j].stem()) << (r.components[j].is_zero() ? "\n" : "");
          out << "reconstruction: " << (r.reconstruction_exact ? "exact" : "FAILED") << "\n"
              << "harmonic components: " << (r.components_harmonic ? "yes" : "NO") << "\n";
        }
        return r.reconstruction_exact && r.components_harmonic ? 0 : 1;
      }
      SubsetMask H = set.empty() ? full_set(g.n) : mask_of(set, g.n);
      if (mode == "slice") {
        SliceAlmansiResult r = slice_almansi_decompose(f, H);
        bool poly = std::all_of(r.polyharmonic.begin(), r.polyharmonic.end(), [](const auto& p) { return p.zero; });
        if (g.json_out) {
          out << to_json(r).dump(2) << "\n";
        } else {
          for (const auto& [k, s] : r.components)
            out << "S" << subset_to_string(k) << ":\n" << to_string(s.stem()) << (s.is_zero() ? "\n" : "");
          out << "reconstruction: " << (r.reconstruction_exact ? "exact" : "FAILED") << "\n";
        }
        return r.reconstruction_exact && poly ? 0 : 1;
      }
      SubsetMask G = mask_of(sub, g.n);
      SimultaneousResult r = simultaneous_decompose(f, H, G);
      if (g.json_out) {
        out << to_json(r).dump(2) << "\n";
      } else {
        for (const auto& [key, e] : r.components)
          out << "E" << subset_to_string(key.first) << index_to_string(key.second) << ":\n"
              << to_string(e.stem()) << (e.is_zero() ? "\n" : "");
        out << "reconstruction: " << (r.reconstruction_exact ? "exact" : "FAILED") << "\n";
      }
      return r.reconstruction_exact && r.components_harmonic ? 0 : 1;
    }

    if (*fs) {
      g.samples = numeric;
      auto points = sample_points(g.n, g.m, g.stencil());
      FueterSceCertificate c = fueter_sce(f, var, points, g.stencil());
      bool ok = c.symbolic_ok() && c.numeric_ok();
      if (g.json_out) {
        out << to_json(c).dump(2) << "\n";
      } else {
        out << "image Delta^" << sce_exponent(g.m) << " in x" << var << ":\n" << to_string(c.image.stem())
            << (c.image.is_zero() ? "\n" : "");
        out << "Delta^gamma f'_s = 0: " << (c.derivative_polyharmonic ? "yes" : "NO") << "\n";
        if (c.dirac_exact) out << "symbolic dbar g = 0: " << (*c.dirac_exact ? "yes" : "NO") << "\n";
        out << "finite-difference max relative residual: " << c.numeric.max_rel() << " over " << points.size()
            << " points\n";
      }
      return ok ? 0 : 1;
    }

    if (*ver) {
      std::vector<Check> checks;
      bool all = suite == "all";
      if (all || suite == "products") suite_products(f, g, checks);
      if (all || suite == "spherical") suite_spherical(f, g, checks);
      if (all || suite == "polyharmonic") suite_polyharmonic(f, g, checks);
      if (all || suite == "almansi") suite_almansi(f, g, checks);
      if (all || suite == "fueter-sce") suite_fueter(f, g, checks);
      return report_checks(out, g, "verify " + suite, checks);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    err << "certificate failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace slicewb
