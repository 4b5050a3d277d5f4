#include "rattet/records.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <set>
#include <stdexcept>

#include <openssl/evp.h>

namespace rattet {

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("fraction part " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

Rational parse_fraction_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

Json affine_json(const AffineAngle& a) {
  return Json{{"constant", fraction_json(a.constant)}, {"tau", fraction_json(a.t)}, {"upsilon", fraction_json(a.u)}};
}

Json quadratic_json(const Quadratic& q) {
  return Json{{"tau^2", fraction_json(q.tt)}, {"tau*upsilon", fraction_json(q.tu)},
              {"upsilon^2", fraction_json(q.uu)}, {"tau", fraction_json(q.t)},
              {"upsilon", fraction_json(q.u)}, {"1", fraction_json(q.c)}};
}

Json constraints_json(const std::vector<LinearConstraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs)
    out.push_back(Json{{"tau", fraction_json(c.t)}, {"upsilon", fraction_json(c.u)}, {"constant", fraction_json(c.c)}});
  return out;
}

Json quadruple_json(const PythagoreanQuadruple& x) {
  return Json{{"p", angle_json(x.p())}, {"q", angle_json(x.q())}, {"r", angle_json(x.r())}, {"s", angle_json(x.s())}};
}

PythagoreanQuadruple quadruple_from_json(const Json& j) {
  return {angle_from_json(j.at("p")), angle_from_json(j.at("q")), angle_from_json(j.at("r")),
          angle_from_json(j.at("s"))};
}

Json lengths_json(const EdgeLengths& l) {
  return Json{{"lp", angle_json(l.lp)}, {"lq", angle_json(l.lq)}, {"lr", angle_json(l.lr)}, {"ls", angle_json(l.ls)}};
}

const char* verdict_name(DiameterCheck::Verdict v) {
  switch (v) {
    case DiameterCheck::Verdict::kInside: return "inside";
    case DiameterCheck::Verdict::kOutside: return "outside";
    default: return "inconclusive";
  }
}

DiameterCheck::Verdict verdict_from(const std::string& s) {
  if (s == "inside") return DiameterCheck::Verdict::kInside;
  if (s == "outside") return DiameterCheck::Verdict::kOutside;
  return DiameterCheck::Verdict::kInconclusive;
}

}  // namespace

std::string config_hash(const Json& config) { return sha256_hex(config.dump()); }

Provenance make_provenance(const Json& config) {
  Provenance p;
  p.config_hash = config_hash(config);
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  p.timestamp = buf;
  auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now.time_since_epoch()).count();
  p.run_id = sha256_hex(p.config_hash + std::to_string(ns)).substr(0, 16);
  return p;
}

Json fraction_json(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return Json{{"num", to_int64(r.get_num())}, {"den", to_int64(r.get_den())}};
}

Rational fraction_from_json(const Json& j) {
  std::int64_t n = j.at("num").get<std::int64_t>(), d = j.at("den").get<std::int64_t>();
  if (d <= 0) throw std::invalid_argument("fraction with nonpositive denominator");
  Rational r(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
  r.canonicalize();
  return r;
}

RationalAngle angle_from_json(const Json& j) { return RationalAngle(fraction_from_json(j)); }

Json interval_json(const SignedInterval& x) {
  return Json{{"lo", x.lo.get_str()}, {"hi", x.hi.get_str()}, {"bits", x.precision}};
}

SignedInterval interval_from_json(const Json& j) {
  return {parse_fraction_string(j.at("lo").get<std::string>()), parse_fraction_string(j.at("hi").get<std::string>()),
          j.at("bits").get<int>()};
}

Json to_json(const ResultRecord& r) {
  return Json{{"kind", r.kind},
              {"payload", r.payload},
              {"provenance",
               {{"run_id", r.provenance.run_id},
                {"config_hash", r.provenance.config_hash},
                {"timestamp", r.provenance.timestamp}}}};
}

ResultRecord record_from_json(const Json& j) {
  ResultRecord r;
  r.kind = j.at("kind").get<std::string>();
  static const std::set<std::string> kinds{"sporadic", "family", "family-instance", "lambert",
                                           "certificate", "triple", "coxeter"};
  if (!kinds.contains(r.kind)) throw std::invalid_argument("record_from_json: unknown kind '" + r.kind + "'");
  r.payload = j.at("payload");
  const auto& p = j.at("provenance");
  r.provenance = {p.at("run_id").get<std::string>(), p.at("config_hash").get<std::string>(),
                  p.at("timestamp").get<std::string>()};
  return r;
}

std::string serialize(const std::vector<ResultRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<ResultRecord> parse_records(std::string_view text) {
  auto j = Json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("parse_records: expected a JSON array");
  std::vector<ResultRecord> out;
  for (const auto& e : j) out.push_back(record_from_json(e));
  return out;
}

Json sporadic_payload(const SporadicEntry& e, int row) {
  return Json{{"row", row},
              {"angles", quadruple_json(e.quadruple)},
              {"lengths", lengths_json(e.lengths)},
              {"volume", fraction_json(e.volume.value)},
              {"g3_sign", e.g3_sign},
              {"g4_sign", e.g4_sign},
              {"rational_length", e.rational_length}};
}

Json raw_payload(const PythagoreanQuadruple& x, bool realizable) {
  return Json{{"angles", quadruple_json(x)}, {"realizable", realizable}};
}

Json triple_payload(const PythagoreanTriple& t, bool normalized) {
  return Json{{"angles", {{"p", angle_json(t.p)}, {"q", angle_json(t.q)}, {"r", angle_json(t.r)}}},
              {"normalized", normalized}};
}

Json family_payload(const FamilySpec& f, const IdentityReport& id, const DomainCertificate& dom) {
  Json angles = Json::array();
  for (const auto& a : f.angles) angles.push_back(affine_json(a));
  Json cells = Json::array();
  Json zeros = Json::array();
  for (const auto& z : dom.boundary_zeros)
    zeros.push_back(Json{{"tau", fraction_json(z.tau)}, {"upsilon", fraction_json(z.upsilon)}, {"minor", z.minor},
                         {"order", z.order}});
  Json factors = Json::array();
  for (const auto& s : dom.g3_factors)
    factors.push_back(Json{{"argument", affine_json(s.argument)}, {"sign", s.sign_on_interior}});
  Json polygon = Json::array();
  for (const auto& [t, u] : dom.polygon) polygon.push_back(Json{{"tau", fraction_json(t)}, {"upsilon", fraction_json(u)}});
  Json witness = nullptr;
  if (dom.printed_domain_witness)
    witness = Json{{"tau", fraction_json(dom.printed_domain_witness->first)},
                   {"upsilon", fraction_json(dom.printed_domain_witness->second)}};
  return Json{{"id", f.id},
              {"parameters", f.parameters},
              {"angles", angles},
              {"volume", quadratic_json(f.volume)},
              {"domain", f.domain_label},
              {"printed_domain", constraints_json(f.printed_domain)},
              {"identity",
               {{"verified", id.verified},
                {"samples", id.samples},
                {"points_per_axis", id.points_per_axis},
                {"required_points", id.required_points},
                {"symbolic_zero", id.symbolic_zero},
                {"volume_matches", id.volume_matches}}},
              {"domain_certificate",
               {{"certified", dom.certified},
                {"method", dom.method},
                {"max_depth", dom.max_depth},
                {"cell_count", dom.cell_count},
                {"boundary_zeros", zeros},
                {"polygon", polygon},
                {"g3_factors", factors},
                {"g4_is_g3_squared", dom.g4_is_g3_squared},
                {"domain_tightened", dom.domain_tightened},
                {"certified_domain", constraints_json(dom.certified_domain)},
                {"printed_domain_witness", witness},
                {"swap_duplicates", dom.swap_duplicates},
                {"failure", dom.failure}}}};
}

Json family_instance_payload(int family_id, const FamilyParameters& params, const PythagoreanQuadruple& x,
                             const VolumeCoefficient& v) {
  return Json{{"family", family_id},
              {"tau", fraction_json(params.tau)},
              {"upsilon", fraction_json(params.upsilon)},
              {"angles", quadruple_json(x)},
              {"lengths", lengths_json(edge_lengths(x))},
              {"volume", fraction_json(v.value)}};
}

Json lambert_payload(const LambertCube& c, const VolumeCoefficient& v) {
  return Json{{"role", "cube"},
              {"angles", {{"a", angle_json(c.a())}, {"b", angle_json(c.b())}, {"c", angle_json(c.c())}}},
              {"volume", fraction_json(v.value)},
              {"all_angles_rational", all_angles_rational(c)}};
}

Json companion_payload(const CompanionTetrahedron& t) {
  return Json{{"role", "companion"},
              {"angles", quadruple_json(t.quadruple)},
              {"volume", fraction_json(t.volume.value)},
              {"residual_vanishes", t.residual_vanishes},
              {"route", t.route},
              {"k", fraction_json(t.k)}};
}

Json coxeter_payload(const CoxeterEntry& e) {
  Json j{{"index", e.index}, {"name", e.name}, {"degrees", e.degrees}, {"parameters", e.parameters}};
  if (e.parameters == 0) j["volume"] = fraction_json(e.tabulated);
  else if (e.parameters == 1) j["volume"] = "1/(4k)";
  else j["volume"] = "1/(2kl)";
  return j;
}

Json certificate_payload(const ObstructionCertificate& c) {
  Json sides = Json::array(), dots = Json::array();
  for (const auto& s : c.sides) sides.push_back(interval_json(s));
  for (const auto& d : c.diameter.dots) dots.push_back(interval_json(d));
  Json excesses = Json::array();
  for (const auto& e : c.equation.excesses) excesses.push_back(fraction_json(e));
  return Json{
      {"quadruple", quadruple_json(c.quadruple)},
      {"vertex", c.vertex},
      {"triangle", Json::array({angle_json(c.triangle.angles[0]), angle_json(c.triangle.angles[1]),
                                angle_json(c.triangle.angles[2])})},
      {"sides", sides},
      {"diameter",
       {{"center", {{"lon", fraction_json(c.center.lon)}, {"lat", fraction_json(c.center.lat)}}},
        {"center_source", c.center_source},
        {"radius", angle_json(c.radius)},
        {"verdict", verdict_name(c.diameter.verdict)},
        {"bits", c.diameter.bits},
        {"dots", dots},
        {"cos_radius", interval_json(c.diameter.cos_radius)}}},
      {"area",
       {{"excesses", excesses},
        {"scale", fraction_json(c.equation.scale)},
        {"coefficients", c.equation.coefficients},
        {"target", fraction_json(c.target)},
        {"infeasibility", c.infeasibility}}}};
}

ObstructionCertificate certificate_from_payload(const Json& j) {
  const auto& tri = j.at("triangle");
  const auto& dia = j.at("diameter");
  const auto& area = j.at("area");
  ObstructionCertificate c{quadruple_from_json(j.at("quadruple")),
                           j.at("vertex").get<int>(),
                           {{angle_from_json(tri.at(0)), angle_from_json(tri.at(1)), angle_from_json(tri.at(2))}},
                           {},
                           {fraction_from_json(dia.at("center").at("lon")), fraction_from_json(dia.at("center").at("lat"))},
                           angle_from_json(dia.at("radius")),
                           dia.at("center_source").get<std::string>(),
                           {},
                           {},
                           fraction_from_json(area.at("target")),
                           area.at("infeasibility").get<std::string>()};
  for (int i = 0; i < 3; ++i) c.sides[i] = interval_from_json(j.at("sides").at(i));
  c.diameter.verdict = verdict_from(dia.at("verdict").get<std::string>());
  c.diameter.bits = dia.at("bits").get<int>();
  for (int i = 0; i < 3; ++i) c.diameter.dots[i] = interval_from_json(dia.at("dots").at(i));
  c.diameter.cos_radius = interval_from_json(dia.at("cos_radius"));
  for (int i = 0; i < 3; ++i) c.equation.excesses[i] = fraction_from_json(area.at("excesses").at(i));
  c.equation.scale = fraction_from_json(area.at("scale"));
  c.equation.coefficients = area.at("coefficients").get<std::array<long, 3>>();
  return c;
}

int reference_row(const SporadicEntry& e) {
  for (const auto& r : reference_sporadic_rows())
    if (r.angles == e.quadruple.angles() && r.volume == e.volume.value &&
        r.lengths == std::array<RationalAngle, 4>{e.lengths.lp, e.lengths.lq, e.lengths.lr, e.lengths.ls})
      return r.row;
  return 0;
}

void write_sporadic_csv(std::ostream& out, const std::vector<std::pair<int, SporadicEntry>>& rows) {
  out << "row,p,q,r,s,lp,lq,lr,ls,volume\n";
  for (const auto& [row, e] : rows) {
    out << row;
    for (const auto& a : e.quadruple.angles()) out << ',' << a.str();
    for (const auto* l : {&e.lengths.lp, &e.lengths.lq, &e.lengths.lr, &e.lengths.ls}) out << ',' << l->str();
    out << ',' << e.volume.value.get_str() << '\n';
  }
}

}  // namespace rattet
