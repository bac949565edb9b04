#include "eulerfan/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace eulerfan::io {

namespace {

double get_num(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) {
    throw parse_error("missing field: " + key);
  }
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw parse_error("field is not a number: " + key);
  }
  return v.get<double>();
}

const json& get_obj(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) {
    throw parse_error("missing field: " + key);
  }
  const json& v = j.at(key);
  if (!v.is_object()) {
    throw parse_error("field is not an object: " + key);
  }
  return v;
}

PrimState read_state(const json& j, const std::string& ctx) {
  PrimState s;
  s.rho = get_num(j, "rho");
  s.u = get_num(j, "u");
  s.v = get_num(j, "v");
  s.p = get_num(j, "p");
  if (!is_valid(s)) {
    throw parse_error(ctx + ": state requires finite fields and rho, p > 0");
  }
  return s;
}

json write_state(const PrimState& s) {
  return {{"rho", s.rho}, {"u", s.u}, {"v", s.v}, {"p", s.p}};
}

}  // namespace

riemann1d::RiemannData read_riemann_data(const json& doc) {
  const double cv = get_num(doc, "c_v");
  return {GasModel(cv), read_state(get_obj(doc, "left"), "left"),
          read_state(get_obj(doc, "right"), "right")};
}

json write_riemann_data(const riemann1d::RiemannData& data) {
  return {{"c_v", data.gas.c_v()},
          {"left", write_state(data.left)},
          {"right", write_state(data.right)}};
}

verifier::FanQuintuple read_quintuple(const json& doc) {
  const riemann1d::RiemannData data = read_riemann_data(doc);
  verifier::FanQuintuple q{data.gas, data.left, data.right, 0, 0, 0, {}};
  if (!doc.contains("mu") || !doc.at("mu").is_array() ||
      doc.at("mu").size() != 3) {
    throw parse_error("missing or malformed field: mu (array of 3 numbers)");
  }
  q.mu0 = doc.at("mu").at(0).get<double>();
  q.mu1 = doc.at("mu").at(1).get<double>();
  q.mu2 = doc.at("mu").at(2).get<double>();
  if (!doc.contains("regions") || !doc.at("regions").is_array() ||
      doc.at("regions").size() != 2) {
    throw parse_error("missing or malformed field: regions (array of 2)");
  }
  for (int i = 0; i < 2; ++i) {
    const json& r = doc.at("regions").at(i);
    q.region[i] = {get_num(r, "rho"),   get_num(r, "alpha"),
                   get_num(r, "beta"),  get_num(r, "gamma"),
                   get_num(r, "delta"), get_num(r, "C"),
                   get_num(r, "p")};
  }
  return q;
}

namespace {

json write_region(const verifier::RegionState& r) {
  return {{"rho", r.rho},     {"alpha", r.alpha}, {"beta", r.beta},
          {"gamma", r.gamma}, {"delta", r.delta}, {"C", r.C},
          {"p", r.p}};
}

}  // namespace

json write_quintuple(const verifier::FanQuintuple& q) {
  return {{"c_v", q.gas.c_v()},
          {"left", write_state(q.left)},
          {"right", write_state(q.right)},
          {"mu", {q.mu0, q.mu1, q.mu2}},
          {"regions", {write_region(q.region[0]), write_region(q.region[1])}}};
}

json write_pattern(const riemann1d::WavePattern& pattern) {
  json doc{{"kind", "wave_pattern"},
           {"table_row", pattern.table_row()},
           {"left_wave", riemann1d::to_string(pattern.left_wave)},
           {"contact", pattern.contact},
           {"right_wave", riemann1d::to_string(pattern.right_wave)}};
  if (pattern.middle) {
    const auto& m = *pattern.middle;
    doc["middle"] = {{"p", m.p},
                     {"v", m.v},
                     {"rho_left", m.rho_left},
                     {"rho_right", m.rho_right},
                     {"u_left", m.u_left},
                     {"u_right", m.u_right}};
  } else {
    doc["middle"] = nullptr;
  }
  return doc;
}

json write_report(const verifier::ResidualReport& report) {
  json conds = json::array();
  for (const auto& c : report.conditions) {
    conds.push_back({{"id", c.id},
                     {"kind", verifier::to_string(c.kind)},
                     {"value", c.value},
                     {"scale", c.scale},
                     {"pass", c.pass}});
  }
  return {{"kind", "verification_report"},
          {"pass", report.pass},
          {"tol_eq", report.tol_eq},
          {"conditions", conds}};
}

json write_subsolution(const subsolution::FindResult& result) {
  const subsolution::FanSubsolution& s = result.sub;
  return {{"kind", "fan_subsolution"},
          {"c_v", s.gas.c_v()},
          {"left", write_state(s.left)},
          {"right", write_state(s.right)},
          {"mu", {s.mu0, s.mu1, s.mu2}},
          {"regions", {write_region(s.region[0]), write_region(s.region[1])}},
          {"slacks",
           {{"eps", {s.eps1, s.eps2}},
            {"eps_tilde", {s.eps_tilde1, s.eps_tilde2}}}},
          {"search", {{"h", result.h}}},
          {"report", write_report(result.report)}};
}

subsolution::FindResult read_subsolution(const json& doc) {
  const riemann1d::RiemannData data = read_riemann_data(doc);
  subsolution::FanSubsolution s{data.gas, data.left, data.right,
                                0,        0,         0,
                                {},       0,         0,
                                0,        0};
  if (!doc.contains("mu") || !doc.at("mu").is_array() ||
      doc.at("mu").size() != 3) {
    throw parse_error("missing or malformed field: mu (array of 3 numbers)");
  }
  s.mu0 = doc.at("mu").at(0).get<double>();
  s.mu1 = doc.at("mu").at(1).get<double>();
  s.mu2 = doc.at("mu").at(2).get<double>();
  if (!doc.contains("regions") || !doc.at("regions").is_array() ||
      doc.at("regions").size() != 2) {
    throw parse_error("missing or malformed field: regions (array of 2)");
  }
  for (int i = 0; i < 2; ++i) {
    const json& r = doc.at("regions").at(i);
    s.region[i] = {get_num(r, "rho"),   get_num(r, "alpha"),
                   get_num(r, "beta"),  get_num(r, "gamma"),
                   get_num(r, "delta"), get_num(r, "C"),
                   get_num(r, "p")};
  }
  const json& sl = get_obj(doc, "slacks");
  if (!sl.contains("eps") || !sl.contains("eps_tilde")) {
    throw parse_error("missing field: slacks.eps / slacks.eps_tilde");
  }
  s.eps1 = sl.at("eps").at(0).get<double>();
  s.eps2 = sl.at("eps").at(1).get<double>();
  s.eps_tilde1 = sl.at("eps_tilde").at(0).get<double>();
  s.eps_tilde2 = sl.at("eps_tilde").at(1).get<double>();
  const double h = get_num(get_obj(doc, "search"), "h");
  auto report = verifier::verify_subsolution(verifier::lift(s));
  return {std::move(s), std::move(report), h};
}

json write_window(const subsolution::SmallnessWindow& window) {
  return {{"kind", "smallness_window"},
          {"upper", window.upper},
          {"v_est", window.v_est}};
}

json write_patched(const patching::PatchedSolution& p) {
  json doc{{"kind", "patched_solution"},
           {"case", patching::to_string(p.case_id)},
           {"normalization",
            {{"reflected", p.norm.reflected},
             {"shift", {p.norm.shift_u, p.norm.shift_v}},
             {"equal_pressures", p.norm.equal_pressures},
             {"original", write_riemann_data(p.norm.original)},
             {"normalized", write_riemann_data(p.norm.normalized)}}},
           {"delta", p.delta},
           {"velocity_shift", {0.0, p.shift_v_delta}},
           {"fan", write_subsolution(p.fan)}};
  doc["aux"] = p.aux ? write_state(*p.aux) : json(nullptr);
  if (p.trailing.kind == patching::TrailingWave::Kind::none) {
    doc["trailing"] = nullptr;
    doc["compatibility_margin"] = nullptr;
  } else {
    doc["trailing"] = {
        {"kind", p.trailing.kind == patching::TrailingWave::Kind::shock
                     ? "shock"
                     : "rarefaction"},
        {"left", write_state(p.trailing.left)},
        {"right", write_state(p.trailing.right)},
        {"speed", p.trailing.speed}};
    doc["compatibility_margin"] = p.compatibility_margin;
  }
  return doc;
}

json write_profile_samples(const riemann1d::SelfSimilarProfile& profile,
                           const std::vector<double>& xi) {
  json samples = json::array();
  for (double x : xi) {
    const PrimState s = riemann1d::evaluate(profile, x);
    samples.push_back(
        {{"xi", x}, {"rho", s.rho}, {"u", s.u}, {"v", s.v}, {"p", s.p}});
  }
  return {{"kind", "selfsimilar_profile"},
          {"pattern", write_pattern(profile.pattern)},
          {"samples", samples}};
}

std::string curves_dsv(const riemann1d::RiemannData& data, int samples) {
  if (samples < 2) throw domain_error("curves: samples must be >= 2");
  const riemann1d::MiddleStates m = riemann1d::solve_middle(data);
  const double lo = std::log(m.p / 10.0);
  const double hi = std::log(m.p * 10.0);
  std::ostringstream out;
  out.precision(17);
  out << "p,v_shock1,v_wave3\n";
  for (int i = 0; i < samples; ++i) {
    const double p = std::exp(lo + (hi - lo) * i / (samples - 1));
    const double v1 =
        data.left.v -
        riemann1d::wave_curve(data.gas, data.left.rho, data.left.p, p);
    const double v3 =
        data.right.v +
        riemann1d::wave_curve(data.gas, data.right.rho, data.right.p, p);
    out << p << ',' << v1 << ',' << v3 << '\n';
  }
  return out.str();
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

void save_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << dump(doc);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace eulerfan::io
