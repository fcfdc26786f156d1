#include "locspec/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace locspec {

namespace {

using Json = nlohmann::ordered_json;

// nlohmann's default float serialization is shortest-round-trip; the report
// contract is 17 significant digits, so the document is dumped manually.
void dump(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ',';
        first = false;
        dump(el, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::string:
      out += nlohmann::json(j.get<std::string>()).dump();
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += "null";
  }
}

std::string dump_doc(const Json& j) {
  std::string out;
  dump(j, out);
  out += '\n';
  return out;
}

Json vec_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Json poly_to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (double c : p.coeffs()) arr.push_back(c);
  return arr;
}

Json graph_block(const Graph& g) {
  return Json{{"n", g.vertex_count()}, {"edges", g.edge_count()}};
}

Json spectrum_block(const Spectrum& s) {
  Json j;
  j["eigenvalues"] = vec_to_json(s.eigenvalues);
  j["multiplicities"] = s.multiplicities;
  j["pi"] = vec_to_json(s.pi);
  j["perron_norm_sq"] = s.perron_norm_sq;
  j["lambda0"] = s.lambda0();
  return j;
}

Json config_block(const Config& cfg) {
  Json j;
  j["tol_eig"] = cfg.tol_eig;
  j["tol_m"] = cfg.tol_m;
  j["tol_poly"] = cfg.tol_poly;
  j["tol_vec"] = cfg.tol_vec;
  j["tol_int"] = cfg.tol_int;
  j["tol_ex"] = cfg.tol_ex;
  j["seed"] = cfg.seed;
  j["format"] = cfg.format;
  return j;
}

Json outcome_block(const CheckOutcome& o) {
  Json j;
  j["ran"] = o.ran;
  j["pass"] = o.pass;
  j["margin"] = o.margin;
  j["threshold"] = o.threshold;
  j["decisive"] = o.decisive;
  return j;
}

Json build_doc(const Analysis& an, const Config& cfg,
               const std::string& sections) {
  const bool want_polys = sections == "polys" || sections == "check";
  const bool want_check = sections == "check";
  const CodeReport& rep = an.report;

  Json doc;
  doc["graph"] = graph_block(an.graph);
  doc["set"] = Json{{"members", an.set.members}, {"size", an.set.size()}};
  doc["spectrum"] = spectrum_block(an.spectrum);

  {
    Json ls;
    ls["mu"] = vec_to_json(an.local.mu);
    ls["mult"] = vec_to_json(an.local.mult);
    ls["pi"] = vec_to_json(an.local.pi);
    ls["parent_index"] = an.local.parent_index;
    ls["dual_degree"] = an.local.dual_degree();
    ls["discarded_mass"] = an.local.discarded_mass;
    ls["rho_norm_sq"] = an.rho.norm_sq;
    doc["local_spectrum"] = ls;
  }
  {
    Json part;
    part["eccentricity"] = an.partition.eccentricity();
    Json sizes = Json::array();
    Json layers = Json::array();
    for (const auto& layer : an.partition.layers) {
      sizes.push_back(layer.size());
      layers.push_back(layer.members);
    }
    part["layer_sizes"] = sizes;
    part["layers"] = layers;
    doc["partition"] = part;
  }

  if (want_polys) {
    Json pj;
    Json coeffs = Json::array();
    for (const auto& p : an.polys.polys) coeffs.push_back(poly_to_json(p));
    pj["coeffs"] = coeffs;
    Json values = Json::array();
    for (int k = 0; k < an.polys.values.rows(); ++k)
      values.push_back(vec_to_json(an.polys.values.row(k)));
    pj["values"] = values;
    pj["a_rec"] = an.polys.a_rec;
    pj["b_rec"] = an.polys.b_rec;
    pj["c_rec"] = an.polys.c_rec;
    pj["hoffman"] = poly_to_json(an.hoffman);
    doc["polynomials"] = pj;
  }

  if (want_check) {
    Json v;
    v["overall"] = to_string(rep.overall);
    v["extremal"] = rep.extremality.extremal;
    v["eccentricity"] = rep.extremality.eccentricity;
    v["dual_degree"] = rep.extremality.dual_degree;
    v["combinatorial"] = rep.combinatorial.pass;
    v["theorem1"] = rep.theorem1.outcome.pass;
    v["collinearity"] =
        rep.collinearity.outcome.ran ? Json(rep.collinearity.outcome.pass)
                                     : Json(nullptr);
    v["spectral_excess"] =
        rep.excess.outcome.ran ? Json(rep.excess.outcome.pass) : Json(nullptr);
    v["prop1_ev_subset"] =
        rep.prop1_ran ? Json(rep.prop1.ev_subset) : Json(nullptr);
    if (rep.subconstituents.ran) {
      Json sc;
      sc["assertive"] = rep.subconstituents.assertive;
      sc["coverage_ok"] = rep.subconstituents.coverage_ok;
      sc["ev_cd_equal"] = rep.subconstituents.ev_cd_equal;
      Json layers = Json::array();
      for (const auto& layer : rep.subconstituents.layers) {
        layers.push_back(Json{{"ev", layer.ev},
                              {"dual_degree", layer.dual_degree},
                              {"subset_ok", layer.subset_ok},
                              {"dual_bound_ok", layer.dual_bound_ok},
                              {"mult_identity_max_dev",
                               layer.mult_identity_max_dev}});
      }
      sc["layers"] = layers;
      v["subconstituents"] = sc;
    } else {
      v["subconstituents"] = nullptr;
    }
    if (rep.md.ran) {
      Json md;
      md["mc_dev"] = rep.md.mc_dev;
      md["md_dev"] = rep.md.md_dev;
      md["sign"] = rep.md.sign;
      md["sign_alternates"] = rep.md.sign_alternates;
      md["reciprocity_dev"] = rep.md.reciprocity_dev;
      md["pbar_values"] = rep.md.pbar_values;
      md["ok"] = rep.md.ok;
      v["md_identities"] = md;
    } else {
      v["md_identities"] = nullptr;
    }
    v["note"] = rep.note;
    doc["verdicts"] = v;

    Json m;
    m["combinatorial"] = outcome_block(rep.combinatorial);
    {
      Json t = outcome_block(rep.theorem1.outcome);
      t["residuals"] = rep.theorem1.residuals;
      m["theorem1"] = t;
    }
    if (rep.collinearity.outcome.ran) {
      Json t = outcome_block(rep.collinearity.outcome);
      t["alpha"] = rep.collinearity.alpha;
      t["residuals"] = rep.collinearity.residuals;
      t["z_norm"] = rep.collinearity.z_norm;
      t["candidate"] = poly_to_json(rep.collinearity.candidate);
      t["antipodal_residual"] = rep.collinearity.antipodal_residual;
      m["collinearity"] = t;
    } else {
      m["collinearity"] = nullptr;
    }
    if (rep.excess.outcome.ran) {
      Json t = outcome_block(rep.excess.outcome);
      t["lhs"] = rep.excess.lhs;
      t["rhs"] = rep.excess.rhs;
      m["spectral_excess"] = t;
    } else {
      m["spectral_excess"] = nullptr;
    }
    if (rep.prop1_ran) {
      Json t;
      t["slack"] = rep.prop1.slack;
      t["min_slack"] = rep.prop1.min_slack;
      t["equality"] = rep.prop1.equality;
      t["collinearity_residual"] = rep.prop1.collinearity_residual;
      m["prop1"] = t;
    } else {
      m["prop1"] = nullptr;
    }
    {
      Json t;
      t["sum_identity_max_dev"] = rep.intersection.sum_identity_max_dev;
      t["max_spread"] = rep.intersection.max_spread;
      t["c_layer"] = rep.intersection.c_layer;
      t["a_layer"] = rep.intersection.a_layer;
      t["b_layer"] = rep.intersection.b_layer;
      t["c_spread"] = rep.intersection.c_spread;
      t["a_spread"] = rep.intersection.a_spread;
      t["b_spread"] = rep.intersection.b_spread;
      m["intersection"] = t;
    }
    doc["margins"] = m;
  }

  doc["config"] = config_block(cfg);
  return doc;
}

void print_vec(std::ostream& os, const char* name, const Eigen::VectorXd& v) {
  os << name << " [";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]\n";
}

}  // namespace

std::string render_spectrum_json(const Graph& g, const Spectrum& s,
                                 const Config& cfg) {
  Json doc;
  doc["graph"] = graph_block(g);
  doc["spectrum"] = spectrum_block(s);
  doc["config"] = config_block(cfg);
  return dump_doc(doc);
}

std::string render_spectrum_text(const Graph& g, const Spectrum& s,
                                 const Config& cfg) {
  (void)cfg;
  std::ostringstream os;
  os << "graph: n = " << g.vertex_count() << ", edges = " << g.edge_count()
     << "\n";
  print_vec(os, "distinct eigenvalues:", s.eigenvalues);
  os << "multiplicities: [";
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
    os << (i ? ", " : "") << s.multiplicities[i];
  os << "]\n";
  print_vec(os, "pi:", s.pi);
  os << "perron norm^2 = " << s.perron_norm_sq << "\n";
  return os.str();
}

std::string render_analysis_json(const Analysis& an, const Config& cfg,
                                 const std::string& sections) {
  return dump_doc(build_doc(an, cfg, sections));
}

std::string render_analysis_text(const Analysis& an, const Config& cfg,
                                 const std::string& sections) {
  std::ostringstream os;
  os << render_spectrum_text(an.graph, an.spectrum, cfg);
  os << "set: {";
  for (std::size_t i = 0; i < an.set.members.size(); ++i)
    os << (i ? ", " : "") << an.set.members[i];
  os << "}  |C| = " << an.set.size() << "\n";
  os << "eccentricity = " << an.partition.eccentricity()
     << ", dual degree = " << an.local.dual_degree()
     << (an.report.extremality.extremal ? "  (extremal)" : "") << "\n";
  print_vec(os, "local eigenvalues:", an.local.mu);
  print_vec(os, "local multiplicities:", an.local.mult);
  os << "rho norm^2 = " << an.rho.norm_sq << "\n";

  if (sections == "polys" || sections == "check") {
    os << "predistance polynomials (ascending coefficients):\n";
    for (std::size_t k = 0; k < an.polys.polys.size(); ++k) {
      os << "  p_" << k << ": [";
      const auto& c = an.polys.polys[k].coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
      os << "]\n";
    }
    os << "recurrence a: [";
    for (std::size_t k = 0; k < an.polys.a_rec.size(); ++k)
      os << (k ? ", " : "") << an.polys.a_rec[k];
    os << "]\nrecurrence b: [";
    for (std::size_t k = 0; k < an.polys.b_rec.size(); ++k)
      os << (k ? ", " : "") << an.polys.b_rec[k];
    os << "]\nrecurrence c: [";
    for (std::size_t k = 0; k < an.polys.c_rec.size(); ++k)
      os << (k ? ", " : "") << an.polys.c_rec[k];
    os << "]\nhoffman: [";
    const auto& h = an.hoffman.coeffs();
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << h[i];
    os << "]\n";
  }

  if (sections == "check") {
    const CodeReport& rep = an.report;
    auto line = [&](const char* name, const CheckOutcome& o) {
      if (!o.ran) {
        os << "  " << name << ": skipped\n";
        return;
      }
      os << "  " << name << ": " << (o.pass ? "pass" : "fail")
         << "  (margin " << o.margin << ", threshold " << o.threshold
         << (o.decisive ? ", decisive" : ", borderline") << ")\n";
    };
    os << "verdict: " << to_string(rep.overall) << "\n";
    line("combinatorial", rep.combinatorial);
    line("theorem-1", rep.theorem1.outcome);
    line("collinearity", rep.collinearity.outcome);
    line("spectral-excess", rep.excess.outcome);
    if (rep.excess.outcome.ran)
      os << "  excess lhs = " << rep.excess.lhs
         << ", rhs = " << rep.excess.rhs << "\n";
    if (!rep.note.empty()) os << "note: " << rep.note << "\n";
  }
  return os.str();
}

}  // namespace locspec
