#include "slicewb/json_io.hpp"

namespace slicewb {

namespace {

SubsetMask parse_subset_key(const std::string& key, int n) {
  if (key.size() < 2 || key.front() != '{' || key.back() != '}') throw InvalidStem("bad component key '" + key + "'");
  std::vector<int> elems;
  std::string body = key.substr(1, key.size() - 2);
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t comma = body.find(',', start);
    std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      elems.push_back(v);
    } catch (const std::exception&) {
      throw InvalidStem("bad component key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return subset_from(elems, n);
  } catch (const std::invalid_argument& e) {
    throw InvalidStem(e.what());
  }
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InvalidStem(e.what());
  }
  throw InvalidStem("rational must be a \"p/q\" string or an integer");
}

json subset_json(SubsetMask k) { return json(subset_elements(k)); }

}  // namespace

json to_json(const MultivectorQ& x) {
  json j = json::object();
  for (const auto& [b, v] : x.terms()) j[blade_to_string(b, x.dim())] = to_string(v);
  return j;
}

MultivectorQ multivector_from_json(const json& j, int m) {
  if (!j.is_object()) throw InvalidStem("multivector must be a JSON object");
  MultivectorQ out(m);
  for (const auto& [key, val] : j.items()) {
    Blade b;
    try {
      b = parse_blade(key, m);
    } catch (const std::invalid_argument& e) {
      throw InvalidStem(e.what());
    }
    out.add_term(b, rational_from_json(val));
  }
  return out;
}

json to_json(const StemPolynomial& f) {
  json comps = json::object();
  for (const auto& [k, p] : f.components()) {
    json monos = json::array();
    for (const auto& [e, c] : p.terms()) {
      json a = json::array(), b = json::array();
      for (int h = 1; h <= f.nvars(); ++h) {
        a.push_back(e[alpha_var(h)]);
        b.push_back(e[beta_var(h)]);
      }
      monos.push_back(json{{"alpha", a}, {"beta", b}, {"coeff", to_json(c)}});
    }
    comps[subset_to_string(k)] = monos;
  }
  return json{{"m", f.dim()}, {"n", f.nvars()}, {"components", comps}};
}

StemPolynomial stem_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("components"))
      throw InvalidStem("stem JSON needs \"m\", \"n\" and \"components\"");
    const int m = j.at("m").get<int>(), n = j.at("n").get<int>();
    StemPolynomial f(m, n);
    for (const auto& [key, monos] : j.at("components").items()) {
      SubsetMask k = parse_subset_key(key, n);
      LaurentPoly p(m, 2 * n);
      for (const auto& mono : monos) {
        const auto& a = mono.at("alpha");
        const auto& b = mono.at("beta");
        if (!a.is_array() || !b.is_array() || static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
          throw InvalidStem("\"alpha\" and \"beta\" must be arrays of length n");
        Exponents e{};
        for (int h = 1; h <= n; ++h) {
          int ea = a[h - 1].get<int>(), eb = b[h - 1].get<int>();
          if (ea < 0) throw InvalidStem("negative alpha exponent");
          if (std::abs(eb) > 1000 || ea > 1000) throw InvalidStem("exponent out of range");
          e[alpha_var(h)] = static_cast<std::int16_t>(ea);
          e[beta_var(h)] = static_cast<std::int16_t>(eb);
        }
        p.add_term(e, multivector_from_json(mono.at("coeff"), m));
      }
      f.add(k, p);
    }
    return f;
  } catch (const json::exception& e) {
    throw InvalidStem(std::string("stem JSON: ") + e.what());
  }
}

json to_json(const PointQ& x) {
  json arr = json::array();
  for (const auto& c : x) {
    json vec = json::object();
    for (const auto& [b, v] : c.terms())
      if (b != 0) vec[blade_to_string(b, c.dim())] = to_string(v);
    arr.push_back(json{{"alpha", to_string(c.scalar_part())}, {"vector", vec}});
  }
  return arr;
}

PointQ point_from_json(const json& j, int m) {
  try {
    if (!j.is_array()) throw InvalidStem("point must be a JSON array of paravectors");
    PointQ out;
    for (const auto& c : j) {
      MultivectorQ x = MultivectorQ::scalar(m, rational_from_json(c.at("alpha")));
      if (c.contains("vector")) {
        MultivectorQ v = multivector_from_json(c.at("vector"), m);
        if (!is_paravector(v) || sgn(v.scalar_part()) != 0) throw NotParavector("\"vector\" may only hold grade-1 blades");
        x += v;
      }
      out.push_back(std::move(x));
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidStem(std::string("point JSON: ") + e.what());
  }
}

json to_json(const ResidualReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"point", e.point}, {"op", e.op}, {"abs", e.abs}, {"rel", e.rel}, {"pass", e.pass}});
  return json{{"all_pass", r.all_pass()}, {"max_rel", r.max_rel()}, {"points", entries}};
}

json to_json(const ClassicalAlmansiResult& r) {
  json comps = json::array();
  for (const auto& h : r.components) comps.push_back(to_json(h.stem()));
  return json{{"kind", "classical-almansi"},
              {"var", r.var},
              {"degree", r.degree},
              {"components", comps},
              {"certificates",
               {{"reconstruction", r.reconstruction_exact ? "exact-zero" : "nonzero"},
                {"harmonic", r.components_harmonic}}}};
}

json to_json(const SliceAlmansiResult& r) {
  json comps = json::object();
  for (const auto& [k, s] : r.components) comps[subset_to_string(k)] = to_json(s.stem());
  json poly = json::array();
  for (const auto& p : r.polyharmonic)
    poly.push_back(json{{"h", p.h}, {"k", p.k}, {"component", subset_to_string(p.component)}, {"residual", p.zero ? "0" : "nonzero"}});
  json cert{{"reconstruction", r.reconstruction_exact ? "exact-zero" : "nonzero"},
            {"circular", r.components_circular},
            {"polyharmonic", poly}};
  if (r.regular_wrt_p) cert["regular_wrt_min_complement"] = *r.regular_wrt_p;
  return json{{"kind", "slice-almansi"}, {"H", subset_json(r.H)}, {"components", comps}, {"certificates", cert}};
}

std::string index_to_string(const AlmansiIndex& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

json to_json(const SimultaneousResult& r) {
  json comps = json::object();
  for (const auto& [key, e] : r.components) comps[subset_to_string(key.first) + index_to_string(key.second)] = to_json(e.stem());
  return json{{"kind", "simultaneous-almansi"},
              {"H", subset_json(r.H)},
              {"G", subset_json(r.G)},
              {"components", comps},
              {"certificates",
               {{"reconstruction", r.reconstruction_exact ? "exact-zero" : "nonzero"},
                {"harmonic", r.components_harmonic}}}};
}

json to_json(const FueterSceCertificate& c) {
  json j{{"kind", "fueter-sce"},
         {"var", c.h},
         {"image", to_json(c.image.stem())},
         {"certificates",
          {{"laplacian_power_of_spherical_derivative", c.derivative_polyharmonic ? "exact-zero" : "nonzero"},
           {"image_spherical_derivative", c.image_spherical_derivative_zero ? "exact-zero" : "nonzero"}}},
         {"numeric", to_json(c.numeric)},
         {"symbolic_ok", c.symbolic_ok()},
         {"numeric_ok", c.numeric_ok()}};
  if (c.dirac_exact) j["certificates"]["dirac_symbolic"] = *c.dirac_exact ? "exact-zero" : "nonzero";
  return j;
}

}  // namespace slicewb
