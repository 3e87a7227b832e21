#include "polyfock/serialize.hpp"

namespace pfx {

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const GaussianRational& g) {
  return json::array({g.re.to_string(), g.im.to_string()});
}

json to_json(const ExpScalar& s) {
  return json{{"coeff", to_json(s.coeff())}, {"exp", to_json(s.exponent())}};
}

json to_json(const ExpPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(json{{"z", m.zexp}, {"zb", m.zbexp}, {"c", to_json(c)}});
  json u = json::array(), v = json::array();
  for (const auto& x : f.exp_u()) u.push_back(to_json(x));
  for (const auto& x : f.exp_v()) v.push_back(to_json(x));
  return json{{"dims", f.dims()},
              {"prefactor", to_json(f.prefactor())},
              {"exp_u", u},
              {"exp_v", v},
              {"terms", terms}};
}

json to_json(const NormalForm& nf) {
  json terms = json::array();
  for (const auto& [k, c] : nf.terms())
    terms.push_back(json{{"adag", k.adag}, {"a", k.a}, {"c", to_json(c)}});
  return json{{"dims", nf.dims()}, {"terms", terms}};
}

json to_json(const FockColumn& col) {
  json fns = json::array();
  for (const auto& g : col.functions) fns.push_back(to_json(g));
  return json{{"k", col.k}, {"functions", fns}};
}

json to_json(const KernelFunc& kf, const UniPoly& factored) {
  json terms = json::array();
  for (const auto& [m, c] : kf.terms)
    terms.push_back(json{{"zeta", m.zeta},
                         {"zetabar", m.zetabar},
                         {"z", m.z},
                         {"zbar", m.zbar},
                         {"c", to_json(c)}});
  json p = json::array();
  for (const auto& c : factored.coeffs()) p.push_back(c.re.to_string());
  return json{{"level", kf.level},
              {"expanded", json{{"factor", "e^{zeta zbar}"}, {"terms", terms}}},
              {"factored", json{{"lambda", "(z - zeta)(zetabar - zbar)"}, {"p", p}}}};
}

json to_json(const SpectrumReport& rep) {
  json cp = json::array();
  for (const auto& c : rep.characteristic.coeffs()) cp.push_back(to_json(c));
  json evs = json::array();
  for (const auto& e : rep.eigenvalues) {
    json je;
    switch (e.kind) {
      case Eigenvalue::Kind::exact: je["provenance"] = "exact"; break;
      case Eigenvalue::Kind::quadratic: je["provenance"] = "quadratic-closed-form"; break;
      case Eigenvalue::Kind::approximate: je["provenance"] = "float"; break;
    }
    if (e.kind == Eigenvalue::Kind::exact) {
      je["value"] = to_json(e.value);
      je["algebraic_multiplicity"] = e.algebraic_multiplicity;
      je["geometric_multiplicity"] = e.geometric_multiplicity;
      json cols = json::array();
      for (const auto& col : e.eigencolumns) {
        json jc = json::array();
        for (const auto& x : col) jc.push_back(to_json(x));
        cols.push_back(jc);
      }
      je["eigencolumns"] = cols;
      if (!e.generalized_kernel_dims.empty())
        je["generalized_kernel_dims"] = e.generalized_kernel_dims;
    } else {
      je["residual_float"] = e.residual;
      if (e.quadratic_index >= 0) je["quadratic_index"] = e.quadratic_index;
    }
    je["approx_float"] = json::array({e.approx.real(), e.approx.imag()});
    evs.push_back(je);
  }
  json quads = json::array();
  for (const auto& q : rep.quadratics)
    quads.push_back(json{{"b", to_json(q.b)}, {"c", to_json(q.c)}});
  return json{{"k", rep.k},
              {"char_poly_ascending", cp},
              {"eigenvalues", evs},
              {"quadratics", quads}};
}

namespace {

json exact_matrix_rows(const ExactMatrix& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.cols(); ++j) {
      const GaussianRational& e = m.at(i, j);
      if (e.is_real())
        row.push_back(e.re.to_string());
      else
        row.push_back(to_json(e));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json matrices_to_json(const ModelMatrices& m) {
  return json{{"k", m.k},
              {"basis", "lifted-unnormalized"},
              {"raising", exact_matrix_rows(m.raising)},
              {"cartan", exact_matrix_rows(m.cartan)},
              {"lowering", exact_matrix_rows(m.lowering)}};
}

json matrices_to_json(const OrthonormalMatrices& m) {
  return json{{"k", m.k},
              {"basis", "orthonormal-float"},
              {"raising", m.raising},
              {"cartan", m.cartan},
              {"lowering", m.lowering}};
}

json decomposition_report(const ExpPoly& input, const TrueLevelDecomposition& dec) {
  json levels = json::array();
  ExpPoly total(dec.dims);
  for (const auto& [idx, comp] : dec.components) {
    levels.push_back(json{{"index", idx},
                          {"component", to_json(comp)},
                          {"normsq", to_json(norm_sq(comp))}});
    total = total + comp;
  }
  return json{{"levels", levels}, {"residual", to_json(input - total)}};
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("input: " + what);
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

bool nonneg_integer(const json& j) {
  return j.is_number_integer() && j.get<long long>() >= 0;
}

std::vector<unsigned> uvec_from_json(const json& j, unsigned expect) {
  if (!j.is_array() || j.size() != expect) bad("exponent vector has wrong length");
  std::vector<unsigned> v;
  for (const auto& x : j) {
    if (!nonneg_integer(x)) bad("exponents must be non-negative integers");
    v.push_back(x.get<unsigned>());
  }
  return v;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational((long long)j.get<long long>());
  if (!j.is_string()) bad("rational must be a string 'p/q' or an integer");
  try {
    return Rational::from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  } catch (const std::domain_error& e) {
    bad(e.what());
  }
}

GaussianRational gaussian_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("complex value must be [re, im]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

ExpScalar exp_scalar_from_json(const json& j) {
  if (!j.is_object()) bad("ExpScalar must be an object");
  return {gaussian_from_json(field(j, "coeff")), gaussian_from_json(field(j, "exp"))};
}

ExpPoly exp_poly_from_json(const json& j) {
  if (!j.is_object()) bad("function must be an object");
  const json& jd = field(j, "dims");
  if (!nonneg_integer(jd) || jd.get<unsigned>() < 1) bad("dims must be a positive integer");
  unsigned d = jd.get<unsigned>();
  ExpPoly f(d);
  const json& jt = field(j, "terms");
  if (!jt.is_array()) bad("terms must be an array");
  ExpPoly::TermMap seen;
  for (const auto& t : jt) {
    MultiMonomial m{uvec_from_json(field(t, "z"), d), uvec_from_json(field(t, "zb"), d)};
    if (seen.count(m)) bad("duplicate monomial in terms");
    seen[m] = gaussian_from_json(field(t, "c"));
  }
  ExpScalar pre = exp_scalar_from_json(field(j, "prefactor"));
  const json& ju = field(j, "exp_u");
  const json& jv = field(j, "exp_v");
  if (!ju.is_array() || ju.size() != d || !jv.is_array() || jv.size() != d)
    bad("exp_u/exp_v must have length dims");
  std::vector<GaussianRational> u, v;
  for (const auto& x : ju) u.push_back(gaussian_from_json(x));
  for (const auto& x : jv) v.push_back(gaussian_from_json(x));
  // Fold the prefactor coefficient into the term coefficients.
  for (auto& [m, c] : seen) f.set_term(m, c * pre.coeff());
  if (!f.is_zero()) {
    f.set_exp_u(std::move(u));
    f.set_exp_v(std::move(v));
    f.set_exp_shift(pre.exponent());
  }
  return f;
}

NormalForm normal_form_from_json(const json& j) {
  if (!j.is_object()) bad("operator must be an object");
  const json& jd = field(j, "dims");
  if (!nonneg_integer(jd) || jd.get<unsigned>() < 1) bad("dims must be a positive integer");
  unsigned d = jd.get<unsigned>();
  NormalForm nf(d);
  const json& jt = field(j, "terms");
  if (!jt.is_array()) bad("terms must be an array");
  for (const auto& t : jt) {
    WordKey k{uvec_from_json(field(t, "adag"), d), uvec_from_json(field(t, "a"), d)};
    if (nf.terms().count(k)) bad("duplicate word in terms");
    nf.set_term(std::move(k), gaussian_from_json(field(t, "c")));
  }
  return nf;
}

SpectrumReport spectrum_report_from_json(const json& j) {
  if (!j.is_object()) bad("spectrum report must be an object");
  SpectrumReport rep;
  const json& jk = field(j, "k");
  if (!nonneg_integer(jk)) bad("k must be a non-negative integer");
  rep.k = jk.get<unsigned>();
  std::vector<GaussianRational> cp;
  for (const auto& c : field(j, "char_poly_ascending")) cp.push_back(gaussian_from_json(c));
  rep.characteristic = UniPoly(std::move(cp));
  for (const auto& q : field(j, "quadratics"))
    rep.quadratics.push_back({gaussian_from_json(field(q, "b")), gaussian_from_json(field(q, "c"))});
  for (const auto& je : field(j, "eigenvalues")) {
    Eigenvalue e;
    std::string prov = field(je, "provenance").get<std::string>();
    const json& ap = field(je, "approx_float");
    if (!ap.is_array() || ap.size() != 2) bad("approx_float must be [re, im]");
    e.approx = {ap[0].get<double>(), ap[1].get<double>()};
    if (prov == "exact") {
      e.kind = Eigenvalue::Kind::exact;
      e.value = gaussian_from_json(field(je, "value"));
      e.algebraic_multiplicity = field(je, "algebraic_multiplicity").get<unsigned>();
      e.geometric_multiplicity = field(je, "geometric_multiplicity").get<unsigned>();
      for (const auto& col : field(je, "eigencolumns")) {
        std::vector<GaussianRational> v;
        for (const auto& x : col) v.push_back(gaussian_from_json(x));
        e.eigencolumns.push_back(std::move(v));
      }
      if (je.contains("generalized_kernel_dims"))
        for (const auto& x : je["generalized_kernel_dims"])
          e.generalized_kernel_dims.push_back(x.get<unsigned>());
    } else if (prov == "quadratic-closed-form" || prov == "float") {
      e.kind = prov == "float" ? Eigenvalue::Kind::approximate : Eigenvalue::Kind::quadratic;
      e.residual = field(je, "residual_float").get<double>();
      if (je.contains("quadratic_index")) e.quadratic_index = je["quadratic_index"].get<int>();
    } else {
      bad("unknown eigenvalue provenance '" + prov + "'");
    }
    rep.eigenvalues.push_back(std::move(e));
  }
  return rep;
}

FockColumn fock_column_from_json(const json& j) {
  if (!j.is_object()) bad("column must be an object");
  const json& jk = field(j, "k");
  if (!nonneg_integer(jk) || jk.get<unsigned>() < 1) bad("k must be a positive integer");
  FockColumn col;
  col.k = jk.get<unsigned>();
  const json& jf = field(j, "functions");
  if (!jf.is_array() || jf.size() != col.k) bad("functions must be an array of length k");
  for (const auto& x : jf) col.functions.push_back(exp_poly_from_json(x));
  return col;
}

}  // namespace pfx
