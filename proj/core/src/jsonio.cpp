#include "sigform/jsonio.hpp"

#include <fstream>

namespace sigform {

using nlohmann::json;

json rat_to_json(const Rat& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw ValidationError("bad rational literal: " + j.dump());
    x.canonicalize();
    return x;
  }
  throw ValidationError("expected integer or rational string, got " + j.dump());
}

json qvec_to_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

QVec qvec_from_json(const json& j) {
  check(j.is_array(), "expected an array of rationals");
  QVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

json to_json(const SignatureResult& r) {
  json out;
  out["group"] = r.group;
  out["dim"] = r.dim.get_str();
  out["p"] = r.p.get_str();
  out["q"] = r.q.get_str();
  out["sig"] = r.sig.get_str();
  out["r"] = r.r;
  out["ell"] = r.ell;
  out["invariance"] = r.invariance == Invariance::NoForm      ? "no_form"
                      : r.invariance == Invariance::GInvariant ? "G_invariant"
                                                               : "G_sharp_only";
  out["ambiguity_flag"] = r.ambiguity_flag;
  out["literal_reading_all_plus"] = r.literal_reading_all_plus;
  json contribs = json::array();
  for (const auto& c : r.contributions) {
    json jc;
    jc["word"] = c.word;
    jc["eps"] = c.eps;
    jc["dim_e"] = c.dim_e.get_str();
    jc["w_lambda"] = qvec_to_json(c.w_lambda);
    contribs.push_back(jc);
  }
  out["contributions"] = contribs;
  return out;
}

json to_json(const FoldedDiagram& d) {
  json out;
  json verts = json::array();
  for (const auto& v : d.vertices) {
    json jv;
    jv["orbit"] = v.orbit;
    jv["fill"] = v.imaginary ? "imaginary" : "complex";
    jv["self_joined"] = v.self_joined;
    verts.push_back(jv);
  }
  out["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : d.edges) {
    json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["pairings"] = {e.pairing_from_to, e.pairing_to_from};
    edges.push_back(je);
  }
  out["edges"] = edges;
  return out;
}

RealFormPtr real_form_from_json(const json& spec) {
  if (spec.contains("builtin")) {
    const json& b = spec["builtin"];
    if (b.is_string() && b.get<std::string>().find('(') != std::string::npos)
      return builtin_group(b.get<std::string>());
    std::string label = b.get<std::string>();
    if (spec.contains("params")) {
      const json& p = spec["params"];
      if (p.contains("n")) label += "(" + std::to_string(p["n"].get<int>()) + ")";
      else if (p.contains("type"))
        label += "(" + p["type"].get<std::string>() + "," +
                 std::to_string(p["rank"].get<int>()) + ")";
    }
    return builtin_group(label);
  }
  check(spec.contains("custom"), "group spec needs a 'builtin' or 'custom' field");
  const json& c = spec["custom"];
  check(c.contains("rank"), "custom group: missing field 'rank'");
  int rank = c["rank"].get<int>();
  auto read_mat = [&](const char* field) {
    check(c.contains(field), std::string("custom group: missing field '") + field + "'");
    std::vector<ZVec> rows;
    for (const auto& row : c[field]) {
      ZVec r;
      for (const auto& x : row) r.push_back(x.get<long>());
      check(int(r.size()) == rank, std::string("custom group: '") + field +
                                       "' row has wrong length");
      rows.push_back(r);
    }
    return rows;
  };
  auto roots = read_mat("roots");
  auto coroots = read_mat("coroots");
  check(roots.size() == coroots.size(), "custom group: roots/coroots length mismatch");
  auto theta_rows = read_mat("theta");
  check(int(theta_rows.size()) == rank, "custom group: theta must be rank x rank");
  ZMat theta(theta_rows.begin(), theta_rows.end());
  // assemble the datum, remembering the caller's root order
  auto d = std::make_shared<RootDatum>();
  d->rank = rank;
  {
    std::map<ZVec, ZVec> all;
    for (size_t i = 0; i < roots.size(); ++i) {
      check(all.emplace(roots[i], coroots[i]).second, "custom group: duplicate root");
    }
    for (auto& [r, cr] : all) {
      d->roots.push_back(r);
      d->coroots.push_back(cr);
    }
  }
  d->neg_of.resize(d->roots.size());
  for (size_t i = 0; i < d->roots.size(); ++i) {
    ZVec neg = d->roots[i];
    for (auto& x : neg) x = -x;
    int j = d->root_index(neg);
    check(j >= 0, "custom group: roots must come in +- pairs");
    d->neg_of[i] = j;
  }
  d->validate();
  // grading: "c"/"n" for theta-fixed roots in the INPUT order
  check(c.contains("grading"), "custom group: missing field 'grading'");
  std::vector<std::string> tags = c["grading"].get<std::vector<std::string>>();
  std::map<int, bool> grading;
  size_t tag_at = 0;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (z_apply(theta, roots[i]) != roots[i]) continue;
    check(tag_at < tags.size(), "custom group: grading array too short");
    const std::string& t = tags[tag_at++];
    check(t == "c" || t == "n", "custom group: grading entries must be 'c' or 'n'");
    grading[d->root_index(roots[i])] = (t == "n");
  }
  check(tag_at == tags.size(), "custom group: grading array too long");
  return make_real_form(RootDatumPtr(d), theta, std::move(grading), "custom");
}

RealFormPtr real_form_from_file(const std::string& path) {
  std::ifstream in(path);
  check(bool(in), "cannot open group spec file: " + path);
  json spec;
  try {
    in >> spec;
  } catch (const json::parse_error& e) {
    throw ValidationError("JSON parse error in " + path + ": " + e.what());
  }
  return real_form_from_json(spec);
}

json custom_spec_to_json(const RealForm& rf) {
  json c;
  c["rank"] = rf.rank();
  json roots = json::array(), coroots = json::array(), theta = json::array();
  json grading = json::array();
  for (size_t i = 0; i < rf.datum->roots.size(); ++i) {
    roots.push_back(rf.datum->roots[i]);
    coroots.push_back(rf.datum->coroots[i]);
    if (rf.is_imaginary(int(i))) grading.push_back(rf.noncompact.at(int(i)) ? "n" : "c");
  }
  for (const auto& row : rf.theta) theta.push_back(row);
  c["roots"] = roots;
  c["coroots"] = coroots;
  c["theta"] = theta;
  c["grading"] = grading;
  json out;
  out["custom"] = c;
  return out;
}

}  // namespace sigform
