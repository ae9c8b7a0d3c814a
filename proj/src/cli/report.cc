#include "wkalg/cli/report.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wkalg/conformal/admissible.h"
#include "wkalg/conformal/collapse.h"
#include "wkalg/conformal/decomposition.h"
#include "wkalg/conformal/levels.h"
#include "wkalg/liealg/grading.h"
#include "wkalg/walgebra/central_charge.h"
#include "wkalg/walgebra/coset.h"
#include "wkalg/walgebra/generators.h"

namespace wkalg::cli {

namespace {

Json claim(Json body, const std::string& cite) {
  body["cite"] = cite;
  return body;
}

Json tags_json(const std::vector<LevelTag>& tags) {
  Json out = Json::array();
  for (LevelTag t : tags) out.push_back(to_string(t));
  return out;
}

std::string branch_str(Branch b) { return b == Branch::Generic ? "generic" : "degenerate"; }

Json coset_json(const CosetLevels& c) {
  Json j;
  j["k0"] = c.k0 ? Json(frac(*c.k0)) : Json(nullptr);
  j["k1"] = frac(c.k1);
  return claim(j, "computed");
}

std::string table_cite(const FamilyParams& p) {
  if (p.is_hook() && p.m() >= 2) return p.m() % 2 ? "Table 1" : "Table 2";
  if (p.is_rectangular()) return "Table 3";
  return "computed";
}

std::string generators_cite(const FamilyParams& p) {
  if (p.is_hook()) return "Theorem 41";
  if (p.is_rectangular()) return "Theorem genrect";
  return "computed";
}

std::string levels_cite(const FamilyParams& p) { return p.is_hook() ? "Theorem MT" : "Eq. (levels)"; }

Json query_json(const FamilyParams& p) {
  Json q;
  q["family"] = family_json(p);
  return q;
}

}  // namespace

Json family_json(const FamilyParams& p) {
  Json j;
  j["partition"] = p.partition().str();
  switch (p.family()) {
    case Family::Hook:
      j["kind"] = "hook";
      j["m"] = frac(p.m());
      j["n"] = frac(p.n());
      break;
    case Family::Rectangular:
      j["kind"] = "rectangular";
      j["q"] = frac(p.q());
      j["m"] = frac(p.m());
      break;
    case Family::General:
      j["kind"] = "general";
      break;
  }
  j["N"] = frac(p.h_vee());
  return j;
}

Json info_report(const Partition& partition) {
  const FamilyParams p = FamilyParams::classify(partition);
  const DynkinGrading grading = dynkin_grading(partition);
  const GradedDims dims = graded_dims(grading);

  Json r;
  r["command"] = "info";
  r["query"]["partition"] = partition.str();
  r["family"] = family_json(p);

  Json g;
  g["eigenvalues"] = Json::array();
  for (const Rat& e : grading.eigenvalues()) g["eigenvalues"].push_back(frac(e));
  g["dynkin_labels"] = Json::array();
  for (const Rat& l : grading.labels) g["dynkin_labels"].push_back(frac(l));
  g["x_norm"] = frac(x_norm(grading));
  g["theta_x"] = frac(theta_pairing(grading));
  r["grading"] = claim(g, "computed");

  Json rows = Json::array();
  for (auto it = dims.g.rbegin(); it != dims.g.rend(); ++it) {
    if (it->first > 0) continue;
    Json row;
    row["j"] = frac(Rat(it->first, 2));
    row["dim_g"] = frac(it->second);
    row["dim_gf"] = frac(dims.gf_at(it->first));
    rows.push_back(row);
  }
  Json d;
  d["rows"] = rows;
  d["dim_g"] = frac(dims.total_g());
  d["dim_gf"] = frac(dims.total_gf());
  r["dims"] = claim(d, table_cite(p));

  const HeightInfo hi = height_and_np(partition, 1);
  Json h;
  h["height"] = frac(hi.height);
  h["nilpotency_index"] = frac(hi.height / 2 + 1);
  r["height"] = claim(h, p.is_hook() ? "Lemma 95" : "computed");

  Json gens = Json::array();
  for (const GeneratorSpec& s : strong_generators(p)) {
    Json e;
    e["weight"] = frac(s.weight);
    e["rep"] = to_string(s.rep.tag);
    e["charge"] = frac(s.rep.charge);
    e["multiplicity"] = frac(s.multiplicity);
    gens.push_back(e);
  }
  Json gj;
  gj["list"] = gens;
  gj["natural_algebra"] = natural_algebra(p);
  r["generators"] = claim(gj, generators_cite(p));

  const RationalFn c = central_charge(partition);
  r["central_charge"] = claim(Json{{"c", c.str()}}, "computed");
  if (p.is_hook()) {
    r["closed_form"] = claim(Json{{"agrees", equivalent(c, hook_central_charge_closed(p.m(), p.n()))}},
                             "Eq. (cc1)");
    const HookGoodGrading good = hook_good_grading(p.m(), p.n());
    Json gg;
    gg["eigenvalues"] = Json::array();
    for (const Rat& e : good.eigenvalues) gg["eigenvalues"].push_back(frac(e));
    gg["even"] = good.even;
    gg["dim_g0"] = frac(good.dim_g0);
    gg["consistent"] = hook_good_grading_consistent(p.m(), p.n());
    r["good_grading"] = claim(gg, "Remark good");
  } else if (p.is_rectangular()) {
    r["closed_form"] =
        claim(Json{{"agrees", equivalent(c, rectangular_central_charge_closed(p.q(), p.m()))}}, "C(k)");
  }
  return r;
}

Json levels_report(const FamilyParams& p) {
  Json r;
  r["command"] = "levels";
  r["query"] = query_json(p);
  const RationalFn c = central_charge(p);
  Json levels = Json::array();
  for (const ConformalLevel& l : conformal_levels(p)) {
    Json e;
    e["k"] = frac(l.k);
    e["branch"] = branch_str(l.branch);
    e["tags"] = tags_json(l.tags);
    e["c"] = frac(c(l.k));
    e["c_natural"] = frac(coset_central_charge(p, l.k));
    e["coset"] = coset_json(coset_levels(p, l.k));
    levels.push_back(claim(e, levels_cite(p)));
  }
  r["levels"] = levels;
  Json forms = Json::array();
  for (const auto& [tag, value] : closed_form_levels(p)) {
    forms.push_back(claim(Json{{"tag", to_string(tag)}, {"k", frac(value)}}, levels_cite(p)));
  }
  r["closed_forms"] = forms;
  r["central_charge"] = claim(Json{{"c", c.str()}, {"c_natural", coset_central_charge_symbolic(p).str()}},
                              "computed");
  return r;
}

Json collapse_report(const FamilyParams& p, const Rat& k) {
  const Verdict v = collapse_check(p, k);
  Json r;
  r["command"] = "collapse";
  r["query"] = query_json(p);
  r["query"]["level"] = frac(k);
  r["level"] = claim(Json{{"k", frac(v.level.k)},
                          {"branch", branch_str(v.level.branch)},
                          {"tags", tags_json(v.level.tags)}},
                     levels_cite(p));
  r["coset"] = coset_json(v.coset);
  Json cs = Json::array();
  for (const CValue& cv : v.c_values) {
    Json e;
    e["name"] = cv.name;
    e["rep"] = to_string(cv.rep.tag);
    e["charge"] = frac(cv.rep.charge);
    e["multiplicity"] = frac(cv.multiplicity);
    e["delta"] = frac(cv.delta);
    e["C"] = frac(cv.c);
    e["equal"] = cv.saturated();
    cs.push_back(claim(e, "computed"));
  }
  r["c_values"] = cs;
  r["status"] = claim(Json{{"value", to_string(v.status)}}, "Theorem Criterion2");
  r["target"] = v.target.empty() ? Json(nullptr) : Json(v.target);
  Json notes = Json::array();
  for (const Annotation& a : v.notes) notes.push_back(Json{{"text", a.text}, {"cite", a.cite}});
  r["notes"] = notes;
  return r;
}

Json admissible_report(const FamilyParams& p, const Rat& k) {
  const AdmissibleForm a = admissibility(p, k);
  Json r;
  r["command"] = "admissible";
  r["query"] = query_json(p);
  r["query"]["level"] = frac(k);
  Json body;
  body["p_prime"] = a.p_prime.str();
  body["p"] = a.p.str();
  body["admissible"] = a.admissible;
  body["theta_x"] = frac(a.theta_x);
  body["d_kW"] = a.d_kW ? Json(frac(*a.d_kW)) : Json(nullptr);
  r["form"] = claim(body, "computed");

  const std::vector<LevelTag> tags = (p.family() == Family::General) ? std::vector<LevelTag>{} : tags_at(p, k);
  Json predictions = Json::array();
  for (LevelTag t : tags) {
    std::optional<bool> predicted;
    std::string cite = "Lemma 94";
    const int m = p.m();
    if (t == LevelTag::H1 && p.n() >= 2) predicted = std::gcd(p.n() - 1, m + 1) == 1;
    if (t == LevelTag::H2 && p.n() >= 2 && m >= 2) predicted = std::gcd(p.n() + 1, m) == 1;
    if (p.is_rectangular()) {
      cite = "Remark after Theorem collapsing-rectangular";
      if (t == LevelTag::R1) predicted = std::gcd(m, p.q() + 1) == 1;
      if (t == LevelTag::R2) predicted = false;
      if (t == LevelTag::R3) predicted = true;
    }
    if (!predicted) continue;
    predictions.push_back(claim(Json{{"tag", to_string(t)},
                                     {"predicted", *predicted},
                                     {"agrees", *predicted == a.admissible}},
                                cite));
  }
  r["predictions"] = predictions;
  return r;
}

Json decompose_report(const FamilyParams& p, int i, int range) {
  Json r;
  r["command"] = "decompose";
  r["query"] = query_json(p);
  r["query"]["case"] = frac(i);
  r["query"]["range"] = frac(range);
  try {
    const Decomposition d = decomposition(p, i, range);
    r["refused"] = false;
    r["k"] = frac(d.k);
    r["coset"] = coset_json(d.coset);
    r["conditional_on_noncollapsing"] = d.conditional_on_noncollapsing;
    r["h_mu"] = claim(Json{{"closed_form", frac(h_mu(p, i))}, {"sugawara", frac(h_mu_sugawara(p, i))}},
                      "computed");
    Json ss = Json::array();
    for (const DecompSummand& s : d.summands) {
      Json e;
      e["charge"] = frac(s.charge);
      e["sl_weight"] = weight_json(s.sl_weight);
      e["heis_label"] = frac(s.heis_label);
      e["top_weight_sl"] = frac(s.top_weight_sl);
      ss.push_back(claim(e, "Theorem decomp"));
    }
    r["summands"] = ss;
    Json notes = Json::array();
    for (const Annotation& a : d.notes) notes.push_back(Json{{"text", a.text}, {"cite", a.cite}});
    r["notes"] = notes;
  } catch (const HypothesisError& e) {
    r["refused"] = true;
    r["condition"] = e.condition();
    r["cite"] = e.cite();
  }
  return r;
}

Json verify_report(const std::vector<CheckResult>& results) {
  Json r;
  r["command"] = "verify-paper";
  Json checks = Json::array();
  int failed = 0;
  for (const CheckResult& c : results) {
    checks.push_back(Json{{"id", c.id},
                          {"criterion", frac(c.criterion)},
                          {"section", c.section},
                          {"title", c.title},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    if (!c.passed) ++failed;
  }
  r["checks"] = checks;
  r["total"] = frac(static_cast<long long>(results.size()));
  r["failed"] = frac(failed);
  r["all_passed"] = failed == 0;
  return r;
}

namespace {

std::string str_of(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + str_of(j[i]);
    return s + ")";
  }
  return j.dump();
}

std::string family_line(const Json& fam) {
  std::string s = fam["kind"].get<std::string>() + " partition (" + fam["partition"].get<std::string>() +
                  ") of N = " + fam["N"].get<std::string>();
  if (fam.contains("n")) s += ", m = " + str_of(fam["m"]) + ", n = " + str_of(fam["n"]);
  if (fam.contains("q")) s += ", q = " + str_of(fam["q"]) + ", m = " + str_of(fam["m"]);
  return s;
}

void render_notes(std::ostringstream& os, const Json& notes) {
  for (const Json& n : notes) os << "  note: " << str_of(n["text"]) << "  [" << str_of(n["cite"]) << "]\n";
}

std::string render_info(const Json& r) {
  std::ostringstream os;
  os << family_line(r["family"]) << "\n";
  const Json& g = r["grading"];
  os << "x eigenvalues: " << str_of(g["eigenvalues"]) << "\n";
  os << "weighted Dynkin labels: " << str_of(g["dynkin_labels"]) << "\n";
  os << "(x|x) = " << str_of(g["x_norm"]) << ", (h_theta|x) = " << str_of(g["theta_x"]) << "\n";
  os << "\ngraded dimensions  [" << str_of(r["dims"]["cite"]) << "]\n";
  os << "  j        dim g_j   dim g^f_j\n";
  for (const Json& row : r["dims"]["rows"]) {
    std::string j = str_of(row["j"]);
    os << "  " << j << std::string(j.size() < 9 ? 9 - j.size() : 1, ' ') << str_of(row["dim_g"])
       << std::string(10 - std::min<std::size_t>(9, str_of(row["dim_g"]).size()), ' ')
       << str_of(row["dim_gf"]) << "\n";
  }
  os << "  total: dim g = " << str_of(r["dims"]["dim_g"]) << ", dim g^f = " << str_of(r["dims"]["dim_gf"])
     << "\n";
  os << "\nheight " << str_of(r["height"]["height"]) << ", f in N_" << str_of(r["height"]["nilpotency_index"])
     << "  [" << str_of(r["height"]["cite"]) << "]\n";
  os << "\nstrong generators over " << str_of(r["generators"]["natural_algebra"]) << "  ["
     << str_of(r["generators"]["cite"]) << "]\n";
  for (const Json& e : r["generators"]["list"]) {
    os << "  weight " << str_of(e["weight"]) << "  " << str_of(e["rep"]);
    if (str_of(e["charge"]) != "0") os << " (charge " << str_of(e["charge"]) << ")";
    os << "  x" << str_of(e["multiplicity"]) << "\n";
  }
  os << "\nc(k) = " << str_of(r["central_charge"]["c"]) << "\n";
  if (r.contains("closed_form")) {
    os << "closed form agrees: " << str_of(r["closed_form"]["agrees"]) << "  [" << str_of(r["closed_form"]["cite"])
       << "]\n";
  }
  if (r.contains("good_grading")) {
    const Json& gg = r["good_grading"];
    os << "even good grading " << str_of(gg["eigenvalues"]) << ": even " << str_of(gg["even"]) << ", consistent "
       << str_of(gg["consistent"]) << "  [" << str_of(gg["cite"]) << "]\n";
  }
  return os.str();
}

std::string render_levels(const Json& r) {
  std::ostringstream os;
  os << family_line(r["query"]["family"]) << "\n";
  os << "c(k)         = " << str_of(r["central_charge"]["c"]) << "\n";
  os << "c_natural(k) = " << str_of(r["central_charge"]["c_natural"]) << "\n\n";
  os << "conformal levels:\n";
  for (const Json& l : r["levels"]) {
    os << "  k = " << str_of(l["k"]) << "  tags " << str_of(l["tags"]) << "  branch " << str_of(l["branch"])
       << "  c = " << str_of(l["c"]) << "  k0 = " << str_of(l["coset"]["k0"]) << "  k1 = "
       << str_of(l["coset"]["k1"]) << "  [" << str_of(l["cite"]) << "]\n";
  }
  if (r["levels"].empty()) os << "  (none)\n";
  return os.str();
}

std::string render_collapse(const Json& r) {
  std::ostringstream os;
  os << family_line(r["query"]["family"]) << "\n";
  os << "k = " << str_of(r["level"]["k"]) << "  tags " << str_of(r["level"]["tags"]) << "  branch "
     << str_of(r["level"]["branch"]) << "\n";
  os << "k0 = " << str_of(r["coset"]["k0"]) << ", k1 = " << str_of(r["coset"]["k1"]) << "\n\n";
  os << "  generator    rep        Delta    C        C = Delta\n";
  for (const Json& c : r["c_values"]) {
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(s.size() < w ? w - s.size() : 1, ' '); };
    os << "  " << pad(str_of(c["name"]), 13) << pad(str_of(c["rep"]), 11) << pad(str_of(c["delta"]), 9)
       << pad(str_of(c["C"]), 9) << str_of(c["equal"]) << "\n";
  }
  os << "\nstatus: " << str_of(r["status"]["value"]) << "  [" << str_of(r["status"]["cite"]) << "]\n";
  if (!r["target"].is_null()) os << "target: " << str_of(r["target"]) << "\n";
  render_notes(os, r["notes"]);
  return os.str();
}

std::string render_admissible(const Json& r) {
  std::ostringstream os;
  const Json& f = r["form"];
  os << family_line(r["query"]["family"]) << "\n";
  os << "k = " << str_of(r["query"]["level"]) << ": k + h = " << str_of(f["p_prime"]) << "/" << str_of(f["p"])
     << "\n";
  os << "p' = " << str_of(f["p_prime"]) << ", p = " << str_of(f["p"]) << ", admissible: " << str_of(f["admissible"])
     << "\n";
  os << "(h_theta|x) = " << str_of(f["theta_x"]) << ", d_k^W = " << str_of(f["d_kW"]) << "\n";
  for (const Json& p : r["predictions"]) {
    os << "  " << str_of(p["tag"]) << ": predicted admissible " << str_of(p["predicted"]) << ", agrees "
       << str_of(p["agrees"]) << "  [" << str_of(p["cite"]) << "]\n";
  }
  return os.str();
}

std::string render_decompose(const Json& r) {
  std::ostringstream os;
  os << family_line(r["query"]["family"]) << ", case " << str_of(r["query"]["case"]) << "\n";
  if (r["refused"].get<bool>()) {
    os << "refused: " << str_of(r["condition"]) << "  [" << str_of(r["cite"]) << "]\n";
    return os.str();
  }
  os << "k = " << str_of(r["k"]) << ", k0 = " << str_of(r["coset"]["k0"]) << ", k1 = " << str_of(r["coset"]["k1"])
     << "\n";
  os << "h_mu = " << str_of(r["h_mu"]["closed_form"]) << " (Sugawara " << str_of(r["h_mu"]["sugawara"]) << ")\n";
  if (r["conditional_on_noncollapsing"].get<bool>()) os << "conditional on non-collapsing\n";
  os << "\n  charge  sl(n) weight      top weight\n";
  for (const Json& s : r["summands"]) {
    std::string l = str_of(s["charge"]);
    std::string w = str_of(s["sl_weight"]);
    os << "  " << l << std::string(l.size() < 8 ? 8 - l.size() : 1, ' ') << w
       << std::string(w.size() < 18 ? 18 - w.size() : 1, ' ') << str_of(s["top_weight_sl"]) << "\n";
  }
  render_notes(os, r["notes"]);
  return os.str();
}

std::string render_verify(const Json& r) {
  std::ostringstream os;
  for (const Json& c : r["checks"]) {
    os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << str_of(c["id"]) << "  " << str_of(c["title"]) << "  ("
       << str_of(c["detail"]) << ")\n";
  }
  os << str_of(r["failed"]) << " of " << str_of(r["total"]) << " checks failed\n";
  return os.str();
}

}  // namespace

std::string render_text(const Json& report) {
  const std::string cmd = report.at("command").get<std::string>();
  if (cmd == "info") return render_info(report);
  if (cmd == "levels") return render_levels(report);
  if (cmd == "collapse") return render_collapse(report);
  if (cmd == "admissible") return render_admissible(report);
  if (cmd == "decompose") return render_decompose(report);
  if (cmd == "verify-paper") return render_verify(report);
  return report.dump(2) + "\n";
}

}  // namespace wkalg::cli
