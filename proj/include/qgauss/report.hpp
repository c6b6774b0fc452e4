#ifndef QGAUSS_REPORT_HPP
#define QGAUSS_REPORT_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qgauss/identities.hpp"
#include "qgauss/verify.hpp"

namespace qgauss {

enum class Status { pass, fail, error };

std::string to_string(Status s);

/// Machine-readable outcome of one check instance. A fail always carries
/// the witness polynomial; big coefficients serialize as decimal strings
/// because they do not fit JSON numbers.
struct CheckReport {
  std::string check;
  Params params;
  Status status = Status::pass;
  std::optional<IntPoly> witness;
  std::optional<long> failing_index;
  std::string message;
  long wall_us = 0;
};

/// Dense JSON coefficient array, index = exponent, decimal strings.
nlohmann::ordered_json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::ordered_json& j);

/// Canonical JSON object with fixed field order; re-serializing a parsed
/// report is byte-identical.
nlohmann::ordered_json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::ordered_json& j);

std::string report_csv_header();
std::string report_to_csv(const CheckReport& r);
std::string report_to_text(const CheckReport& r);

CheckReport make_report(const IdentityCheck& c, long wall_us = 0);
CheckReport make_report(const IntIdentityCheck& c, long wall_us = 0);
CheckReport make_report(const NonnegCheck& c, long wall_us = 0);
CheckReport make_report(const RatIdentityCheck& c, long wall_us = 0);
CheckReport make_report(const ConjectureInstance& c, long wall_us = 0);
CheckReport make_report(const Lemma9Check& c, long wall_us = 0);
CheckReport make_report(const WZCheck& c, long wall_us = 0);

} // namespace qgauss

#endif
