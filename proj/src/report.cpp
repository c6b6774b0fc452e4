#include "qgauss/report.hpp"

#include <sstream>

namespace qgauss {

using nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

ordered_json poly_to_json(const IntPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

IntPoly poly_from_json(const ordered_json& j) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return IntPoly(std::move(coeffs));
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? poly_to_json(*r.witness) : ordered_json(nullptr);
  j["failing_index"] = r.failing_index ? ordered_json(*r.failing_index) : ordered_json(nullptr);
  j["message"] = r.message;
  j["wall_us"] = r.wall_us;
  return j;
}

CheckReport report_from_json(const ordered_json& j) {
  CheckReport r;
  r.check = j.at("check").get<std::string>();
  for (const auto& [name, value] : j.at("params").items())
    r.params.emplace_back(name, value.get<long>());
  const std::string status = j.at("status").get<std::string>();
  r.status = status == "pass" ? Status::pass : status == "fail" ? Status::fail : Status::error;
  if (!j.at("witness").is_null()) r.witness = poly_from_json(j.at("witness"));
  if (!j.at("failing_index").is_null()) r.failing_index = j.at("failing_index").get<long>();
  r.message = j.at("message").get<std::string>();
  r.wall_us = j.at("wall_us").get<long>();
  return r;
}

namespace {

std::string params_compact(const Params& params) {
  std::string s;
  for (const auto& [name, value] : params) {
    if (!s.empty()) s += ";";
    s += name + "=" + std::to_string(value);
  }
  return s;
}

} // namespace

std::string report_csv_header() {
  return "check,params,status,failing_index,wall_us,witness";
}

std::string report_to_csv(const CheckReport& r) {
  std::ostringstream os;
  os << r.check << "," << params_compact(r.params) << "," << to_string(r.status) << ",";
  if (r.failing_index) os << *r.failing_index;
  os << "," << r.wall_us << ",";
  if (r.witness) os << "\"" << r.witness->to_string() << "\"";
  return os.str();
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os << (r.status == Status::pass ? "pass " : r.status == Status::fail ? "FAIL " : "ERROR")
     << " " << r.check;
  for (const auto& [name, value] : r.params) os << " " << name << "=" << value;
  os << " (" << r.wall_us / 1000.0 << " ms)";
  if (r.status == Status::fail && r.witness)
    os << "\n      witness: " << r.witness->to_string();
  if (r.failing_index) os << "\n      failing index: " << *r.failing_index;
  if (!r.message.empty()) os << "\n      " << r.message;
  return os.str();
}

CheckReport make_report(const IdentityCheck& c, long wall_us) {
  CheckReport r{c.name, c.params, c.equal ? Status::pass : Status::fail,
                std::nullopt, std::nullopt, "", wall_us};
  if (!c.equal) {
    r.witness = c.lhs - c.rhs;
    r.message = "two sides differ";
  }
  return r;
}

CheckReport make_report(const IntIdentityCheck& c, long wall_us) {
  CheckReport r{c.name, c.params, c.equal ? Status::pass : Status::fail,
                std::nullopt, std::nullopt, "", wall_us};
  if (!c.equal) {
    r.witness = IntPoly::constant(c.lhs - c.rhs);
    r.message = "two sides differ by " + BigInt(c.lhs - c.rhs).str();
  }
  return r;
}

CheckReport make_report(const NonnegCheck& c, long wall_us) {
  CheckReport r{c.name, c.params, c.verdict.ok ? Status::pass : Status::fail,
                std::nullopt, std::nullopt, "", wall_us};
  if (!c.verdict.ok) {
    r.witness = c.diff;
    r.failing_index = c.verdict.first_negative;
    r.message = "negative coefficient";
  }
  return r;
}

CheckReport make_report(const RatIdentityCheck& c, long wall_us) {
  CheckReport r{c.name, c.params, c.equal ? Status::pass : Status::fail,
                std::nullopt, std::nullopt, "", wall_us};
  if (!c.equal) {
    r.witness = c.lhs.num * c.rhs.den - c.rhs.num * c.lhs.den;
    r.message = "cross-multiplied difference nonzero";
  }
  return r;
}

CheckReport make_report(const ConjectureInstance& c, long wall_us) {
  CheckReport r;
  r.check = "conjecture" + std::to_string(static_cast<int>(c.which));
  r.params = c.params;
  r.status = c.passes() ? Status::pass : Status::fail;
  r.wall_us = wall_us;
  if (!c.passes()) {
    r.witness = c.diff;
    if (!c.nonneg.ok) {
      r.failing_index = c.nonneg.first_negative;
      r.message = "counterexample: negative coefficient";
    } else if (!c.symmetric) {
      r.message = "difference not symmetric";
    } else if (!c.unimodal.ok) {
      r.failing_index = c.unimodal.first_violation;
      r.message = "counterexample: not unimodal";
    } else if (!c.forms_equivalent) {
      r.message = "two stated forms disagree";
    }
  } else if (c.degenerate) {
    r.message = "degenerate (a = b)";
  }
  return r;
}

CheckReport make_report(const Lemma9Check& c, long wall_us) {
  CheckReport r{"lemma9", {{"n", c.n}, {"k", c.k}},
                c.ok() ? Status::pass : Status::fail,
                std::nullopt, std::nullopt, "", wall_us};
  if (!c.ok()) {
    r.witness = c.diff;
    r.failing_index = c.nonneg.first_negative;
    std::string what;
    if (!c.nonneg.ok) what = "negative coefficient";
    if (!c.decomposition_exact) what += std::string(what.empty() ? "" : "; ") + "decomposition mismatch";
    if (!c.u_symmetric || !c.u_unimodal) what += std::string(what.empty() ? "" : "; ") + "U(q) shape violated";
    r.message = what;
  }
  return r;
}

CheckReport make_report(const WZCheck& c, long wall_us) {
  CheckReport r;
  r.check = c.variant == WZVariant::q1 ? "wz-q1" : "wz-q";
  r.params = {{"a", c.a}, {"i", c.i}, {"k_min", c.k_min}, {"k_max", c.k_max}};
  r.status = c.ok() ? Status::pass : Status::fail;
  r.wall_us = wall_us;
  if (!c.ok()) {
    r.witness = c.residual;
    std::string what;
    if (!c.relation_ok) what = "pair relation broken";
    if (!c.certificate_ok) what += std::string(what.empty() ? "" : "; ") + "certificate ratios disagree";
    if (!c.telescope_ok) what += std::string(what.empty() ? "" : "; ") + "telescoping sum != 1";
    r.message = what;
  }
  return r;
}

} // namespace qgauss
