// Command-line driver: searches, verification runs and certificates, written as JSON or CSV.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rattet/records.hpp"

namespace fs = std::filesystem;
using namespace rattet;

namespace {

enum Exit { kOk = 0, kMismatch = 2, kInvariant = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out;
  std::string format = "json";
  double tolerance = 1e-8;
  int workers = 1;
  std::string stage = "sporadic";
  std::string grid = "published";
  bool triples = false;
  int family = 0;
  bool paper_example = false;
  int lift = 0;
};

fs::path out_dir(const Options& o) {
  if (!o.out.empty()) return o.out;
  if (const char* env = std::getenv("RATTET_OUT_DIR"); env && *env) return env;
  return "rattet_out";
}

void write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f) throw IoError("write failed for " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

void emit(const Options& o, const std::string& stem, const std::vector<ResultRecord>& records, const std::string& csv) {
  fs::path dir = out_dir(o);
  if (o.format == "csv") write_file(dir / (stem + ".csv"), csv);
  else write_file(dir / (stem + ".json"), serialize(records));
}

DenominatorProfile profile_from(const std::string& grid) {
  if (grid == "published") return DenominatorProfile::published();
  if (grid == "union") return DenominatorProfile::union_grid();
  if (grid.rfind("cap:", 0) == 0) return DenominatorProfile::capped(std::stoll(grid.substr(4)));
  throw CLI::ValidationError("--grid", "expected published, union or cap:N");
}

int cmd_search_quadruples(const Options& o) {
  if (o.triples) {
    Json cfg{{"command", "search-quadruples"}, {"triples", true}, {"workers", o.workers}};
    auto prov = make_provenance(cfg);
    auto rep = search_triples(o.workers);
    std::vector<ResultRecord> recs;
    std::ostringstream csv;
    csv << "p,q,r,normalized\n";
    for (const auto& t : rep.solutions) {
      bool norm = std::find(rep.normalized.begin(), rep.normalized.end(), t) != rep.normalized.end();
      recs.push_back({"triple", triple_payload(t, norm), prov});
      csv << t.p.str() << ',' << t.q.str() << ',' << t.r.str() << ',' << (norm ? 1 : 0) << '\n';
    }
    std::cout << "non-trivial triples: " << rep.solutions.size() << ", up to symmetry: " << rep.normalized.size()
              << ", trivial (r = pi/2) excluded: " << rep.trivial_count << "\n";
    for (const auto& t : rep.normalized) std::cout << "  (" << t.p.str() << ", " << t.q.str() << ", " << t.r.str() << ")\n";
    emit(o, "triples", recs, csv.str());
    PythagoreanTriple smith{{1, 4}, {1, 4}, {2, 3}};
    return rep.normalized == std::vector<PythagoreanTriple>{smith} ? kOk : kMismatch;
  }

  SearchConfig sc;
  sc.tolerance = o.tolerance;
  sc.workers = o.workers;
  sc.profile = profile_from(o.grid);
  Json cfg{{"command", "search-quadruples"}, {"tolerance", o.tolerance}, {"workers", o.workers},
           {"grid", o.grid},                {"stage", o.stage},         {"rule", rule_name(sc.rule)}};
  auto prov = make_provenance(cfg);
  auto rep = run_sporadic_search(sc);

  std::cout << "grid " << rep.profile << ": " << rep.candidate_count << " candidates, " << rep.prefilter_pass
            << " pass the prefilter, " << rep.exact_zero_count << " exact zeros\n"
            << "raw solutions (canonical p>=q, r>=s): " << rep.raw_solution_count << "\n"
            << "realizable: " << rep.realizable_count << ", on a family: " << rep.family_member_count
            << ", sporadic: " << rep.sporadic.size() << "\n"
            << "reference raw figure 172 "
            << (rep.realizable_count == 172 || rep.raw_solution_count == 172 ? "matched" : "not matched") << "; orbit sizes"
            << " raw " << rep.raw_orbits.canonical << "/" << rep.raw_orbits.with_pq_orders << "/"
            << rep.raw_orbits.with_all_orders << ", realizable " << rep.realizable_orbits.canonical << "/"
            << rep.realizable_orbits.with_pq_orders << "/" << rep.realizable_orbits.with_all_orders
            << " (canonical / with p<->q / with p<->q and r<->s)\n";
  for (const auto& [rule, n] : rep.sporadic_count_by_rule) std::cout << "  sporadic under " << rule << ": " << n << "\n";
  std::cout << "elapsed " << rep.seconds << " s\n";

  std::vector<ResultRecord> recs;
  std::ostringstream csv;
  if (o.stage == "raw" || o.stage == "realizable") {
    const auto& xs = o.stage == "raw" ? rep.raw_solutions : rep.realizable;
    csv << "p,q,r,s,realizable\n";
    for (const auto& x : xs) {
      bool real = std::binary_search(rep.realizable.begin(), rep.realizable.end(), x);
      recs.push_back({"sporadic", raw_payload(x, real), prov});
      csv << x.p().str() << ',' << x.q().str() << ',' << x.r().str() << ',' << x.s().str() << ',' << (real ? 1 : 0)
          << '\n';
    }
    emit(o, "quadruples_" + o.stage, recs, csv.str());
    return kOk;
  }

  std::vector<std::pair<int, SporadicEntry>> rows;
  for (const auto& e : rep.sporadic) rows.emplace_back(reference_row(e), e);
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [row, e] : rows) recs.push_back({"sporadic", sporadic_payload(e, row), prov});
  write_sporadic_csv(csv, rows);
  emit(o, "quadruples_sporadic", recs, csv.str());

  std::size_t unmatched = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.first == 0; });
  bool same = unmatched == 0 && rows.size() == reference_sporadic_rows().size();
  std::cout << (same ? "sporadic table matches the reference rows\n" : "sporadic table differs from the reference rows\n");
  return same ? kOk : kMismatch;
}

int cmd_verify_families(const Options& o) {
  Json cfg{{"command", "verify-families"}, {"family", o.family}};
  auto prov = make_provenance(cfg);
  std::vector<ResultRecord> recs;
  std::ostringstream csv;
  csv << "id,parameters,p,q,r,s,volume,domain,identity,domain_certified,domain_tightened\n";
  int checked = 0, passed = 0;
  for (const auto& f : builtin_families()) {
    if (o.family && f.id != o.family) continue;
    ++checked;
    auto id = check_identity(f);
    auto dom = verify_domain(f);
    bool ok = id.verified && dom.certified;
    passed += ok;
    if (!ok)
      std::cerr << "family " << f.id << " failed: " << (id.verified ? dom.failure : id.failure) << "\n";
    recs.push_back({"family", family_payload(f, id, dom), prov});
    csv << f.id << ',' << f.parameters;
    for (const auto& a : f.angles) csv << ',' << a.str();
    csv << ',' << f.volume.str() << ',' << f.domain_label << ',' << id.verified << ',' << dom.certified << ','
        << dom.domain_tightened << '\n';
  }
  if (checked == 0) {
    std::cerr << "no family with id " << o.family << "\n";
    return kMismatch;
  }
  if (!o.family || o.family == 11) {
    FamilyParameters at{Rational(1, 18), 0};
    auto [x, v] = instantiate(family(11), at);
    recs.push_back({"family-instance", family_instance_payload(11, at, x, v), prov});
    std::cout << "family 11 at t = pi/18: " << x.str() << ", volume " << v.value.get_str() << " pi^2\n";
  }
  emit(o, o.family ? "family_" + std::to_string(o.family) : "families", recs, csv.str());
  std::cout << passed << "/" << checked << " families verified\n";
  return passed == checked ? kOk : kMismatch;
}

int cmd_search_lambert(const Options& o) {
  Json cfg{{"command", "search-lambert"}, {"tolerance", o.tolerance}, {"workers", o.workers}};
  auto prov = make_provenance(cfg);
  LambertSearchConfig lc;
  lc.tolerance = o.tolerance;
  lc.workers = o.workers;
  auto rep = search_lambert(lc);
  auto comps = companion_tetrahedra();
  std::vector<ResultRecord> recs;
  std::ostringstream csv;
  csv << "a,b,c,volume\n";
  for (std::size_t i = 0; i < rep.cubes.size(); ++i) {
    const auto& c = rep.cubes[i];
    recs.push_back({"lambert", lambert_payload(c, rep.volumes[i]), prov});
    csv << c.a().str() << ',' << c.b().str() << ',' << c.c().str() << ',' << rep.volumes[i].value.get_str() << '\n';
    std::cout << c.str() << " volume " << rep.volumes[i].value.get_str() << " pi^2\n";
  }
  for (const auto& t : comps) {
    recs.push_back({"lambert", companion_payload(t), prov});
    std::cout << "companion " << t.quadruple.str() << " volume " << t.volume.value.get_str() << " pi^2 via " << t.route
              << " (k = " << t.k.get_str() << ")\n";
  }
  std::cout << rep.candidate_count << " candidates, " << rep.cubes.size() << " cubes, continuous families "
            << (rep.no_family() ? "excluded" : "not excluded") << "\n";
  emit(o, "lambert", recs, csv.str());

  std::set<LambertCube> expected;
  for (const auto& r : reference_lambert_cubes()) expected.insert(LambertCube(r.a, r.b, r.c).sorted());
  bool same = std::set<LambertCube>(rep.cubes.begin(), rep.cubes.end()) == expected && rep.no_family();
  return same ? kOk : kMismatch;
}

int cmd_certify(const Options& o) {
  Json cfg{{"command", "certify"}, {"paper_example", o.paper_example}, {"lift", o.lift}};
  auto prov = make_provenance(cfg);
  std::vector<ResultRecord> recs;
  std::ostringstream csv;
  int code = kOk;
  if (o.paper_example || o.lift == 0) {
    auto x = obstruction_example();
    auto cert = nondecomposability_certificate(x, obstruction_example_center());
    if (!cert) {
      std::cerr << "no certificate for " << x.str() << "\n";
      return kMismatch;
    }
    auto payload = certificate_payload(*cert);
    std::string err = recheck(certificate_from_payload(payload));
    recs.push_back({"certificate", payload, prov});
    std::cout << "certificate for " << x.str() << ": link " << cert->triangle.str() << " at vertex "
              << cert->vertex << ", centre (" << cert->center.lon.get_str() << ", " << cert->center.lat.get_str()
              << ")pi, radius " << cert->radius.str() << "pi, area target " << cert->target.get_str() << " ("
              << cert->infeasibility << ")\n"
              << "re-check from serialized form: " << (err.empty() ? "ok" : err) << "\n";
    csv << "quadruple,vertex,triangle,center_lon,center_lat,radius,target,recheck\n"
        << x.p().str() << ' ' << x.q().str() << ' ' << x.r().str() << ' ' << x.s().str() << ',' << cert->vertex << ','
        << cert->triangle.angles[0].str() << ' ' << cert->triangle.angles[1].str() << ' '
        << cert->triangle.angles[2].str() << ',' << cert->center.lon.get_str() << ',' << cert->center.lat.get_str()
        << ',' << cert->radius.str() << ',' << cert->target.get_str() << ',' << (err.empty() ? "ok" : "failed") << '\n';
    if (!err.empty()) code = kMismatch;
  }
  if (o.lift > 0) {
    // T fills 1/162 of pi^2, i.e. 1/324 of Vol S^3; T' = I2(9) x I2(9) has the same volume.
    Rational t = volume(obstruction_example()).value / 2;
    Rational tp = coxeter_catalog()[8].volume(9, 9) / 2;
    csv << "n,T,T_prime\n";
    for (int n = 3; n <= o.lift; ++n) {
      Rational a = lifted_volume_fraction(t, n), b = lifted_volume_fraction(tp, n);
      recs.push_back({"certificate",
                      Json{{"lift", {{"n", n}, {"T", fraction_json(a)}, {"T_prime", fraction_json(b)}}}}, prov});
      csv << n << ',' << a.get_str() << ',' << b.get_str() << '\n';
      std::cout << "n = " << n << ": " << a.get_str() << " vs " << b.get_str() << " of Vol S^n\n";
      if (a != b) code = kMismatch;
    }
  }
  emit(o, "certificate", recs, csv.str());
  return code;
}

int cmd_catalog(const Options& o) {
  auto prov = make_provenance(Json{{"command", "catalog"}});
  std::vector<ResultRecord> recs;
  std::ostringstream csv;
  csv << "index,name,volume\n";
  for (const auto& e : coxeter_catalog()) {
    recs.push_back({"coxeter", coxeter_payload(e), prov});
    std::string v = e.parameters == 0 ? e.tabulated.get_str() : e.parameters == 1 ? "1/(4k)" : "1/(2kl)";
    csv << e.index << ',' << e.name << ',' << v << '\n';
    std::cout << e.index << "  " << e.name << "  " << v << " pi^2\n";
  }
  emit(o, "coxeter", recs, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational spherical tetrahedra: searches, family checks and certificates"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Output directory (default $RATTET_OUT_DIR or ./rattet_out)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* sq = app.add_subcommand("search-quadruples", "Exhaustive search for rational quadruples");
  sq->add_option("--tolerance", o.tolerance, "Floating-point prefilter tolerance")->check(CLI::PositiveNumber);
  sq->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 1024));
  sq->add_option("--stage", o.stage, "Which stage to export")->check(CLI::IsMember({"raw", "realizable", "sporadic"}));
  sq->add_option("--grid", o.grid, "Candidate grid: published, union or cap:N");
  sq->add_flag("--triples", o.triples, "Search rational triples instead");

  auto* vf = app.add_subcommand("verify-families", "Verify the 42 continuous families");
  vf->add_option("--family", o.family, "Only this family id")->check(CLI::Range(1, 42));

  auto* sl = app.add_subcommand("search-lambert", "Search rational Lambert cubes");
  sl->add_option("--tolerance", o.tolerance, "Floating-point prefilter tolerance")->check(CLI::PositiveNumber);
  sl->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 1024));

  auto* ce = app.add_subcommand("certify", "Non-decomposability certificate and volume lift");
  ce->add_flag("--paper-example", o.paper_example, "Certify the family 11 tetrahedron at t = pi/18");
  ce->add_option("--lift", o.lift, "Compare lifted volume fractions for n = 3..N")->check(CLI::Range(3, 64));

  auto* ca = app.add_subcommand("catalog", "Spherical Coxeter tetrahedra");

  CLI11_PARSE(app, argc, argv);
  try {
    if (sq->parsed()) return cmd_search_quadruples(o);
    if (vf->parsed()) return cmd_verify_families(o);
    if (sl->parsed()) return cmd_search_lambert(o);
    if (ce->parsed()) return cmd_certify(o);
    if (ca->parsed()) return cmd_catalog(o);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
