#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rattet/certify.hpp"
#include "rattet/families.hpp"
#include "rattet/fixtures.hpp"
#include "rattet/lambert.hpp"
#include "rattet/search.hpp"

namespace rattet {

using Json = nlohmann::ordered_json;

struct Provenance {
  std::string run_id;
  std::string config_hash;
  std::string timestamp;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// kind is one of sporadic, family, family-instance, lambert, certificate, triple, coxeter.
struct ResultRecord {
  std::string kind;
  Json payload;
  Provenance provenance;
};

// Hex SHA-256 of the compact dump of `config`.
std::string config_hash(const Json& config);
/// Provenance for one run: the config hash, a UTC timestamp and a run id derived from both.
Provenance make_provenance(const Json& config);

// {"num": n, "den": d}; throws std::overflow_error if a part does not fit in 64 bits.
Json fraction_json(const Rational& x);
Rational fraction_from_json(const Json& j);
inline Json angle_json(const RationalAngle& a) { return fraction_json(a.fraction()); }
RationalAngle angle_from_json(const Json& j);
// Interval endpoints are exact but long; stored as "num/den" strings.
Json interval_json(const SignedInterval& x);
SignedInterval interval_from_json(const Json& j);

Json to_json(const ResultRecord& r);
ResultRecord record_from_json(const Json& j);
std::string serialize(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> parse_records(std::string_view text);

Json sporadic_payload(const SporadicEntry& e, int row);
Json raw_payload(const PythagoreanQuadruple& x, bool realizable);
Json triple_payload(const PythagoreanTriple& t, bool normalized);
Json family_payload(const FamilySpec& f, const IdentityReport& id, const DomainCertificate& dom);
Json family_instance_payload(int family_id, const FamilyParameters& params, const PythagoreanQuadruple& x,
                             const VolumeCoefficient& v);
Json lambert_payload(const LambertCube& c, const VolumeCoefficient& v);
Json companion_payload(const CompanionTetrahedron& t);
Json coxeter_payload(const CoxeterEntry& e);

Json certificate_payload(const ObstructionCertificate& c);
ObstructionCertificate certificate_from_payload(const Json& j);

/// Row number of the matching reference sporadic row, or 0.
int reference_row(const SporadicEntry& e);
void write_sporadic_csv(std::ostream& out, const std::vector<std::pair<int, SporadicEntry>>& rows);

}  // namespace rattet
