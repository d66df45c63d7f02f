#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbifold/dihedral.hpp"
#include "orbifold/groups.hpp"
#include "orbifold/part2d.hpp"
#include "orbifold/part3d.hpp"
#include "orbifold/qtorus.hpp"
#include "orbifold/report.hpp"

namespace orbifold::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Report report;
  json payload;
  std::string payload_text;
  std::string cache_status;
};

int cyclic_2d_order(const std::string& spec) {
  const ColourGroup g = parse_group_spec(spec);
  if (!g.is_cyclic() || g.dimension() != 2 || g.weights()[0][0] != 1 % g.order())
    throw UsageError("2D commands need a group of the form cyclic:r:1,r-1, got '" + spec + "'");
  return g.order();
}

ColourGroup group_3d(const std::string& spec) {
  const ColourGroup g = parse_group_spec(spec);
  if (g.dimension() != 3) throw UsageError("3D commands need three weights, got '" + spec + "'");
  return g;
}

int dihedral_rank(const std::string& spec) {
  const std::string prefix = "bd:";
  if (spec.rfind(prefix, 0) != 0) throw UsageError("D_r commands need a group of the form bd:r, got '" + spec + "'");
  std::size_t used = 0;
  int r = 0;
  try {
    r = std::stoi(spec.substr(prefix.size()), &used);
  } catch (const std::exception&) {
    throw UsageError("bad rank in '" + spec + "'");
  }
  if (used != spec.size() - prefix.size() || r < 4) throw UsageError("bd:r needs an integer r >= 4");
  return r;
}

std::vector<long> parse_weight(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad weight entry '" + item + "'");
    }
    if (used != item.size() || v < 0) throw UsageError("bad weight entry '" + item + "'");
    w.push_back(v);
  }
  if (w.empty()) throw UsageError("--weight is required");
  return w;
}

json series_payload(const TruncatedSeries& s) { return json::parse(series_to_json(s)); }

bool is_type_a_group(const ColourGroup& g) {
  if (!g.is_cyclic()) return false;
  const int r = g.order();
  return g.weights()[0][0] == 1 % r && g.weights()[1][0] == (r - 1) % r && g.weights()[2][0] == 0;
}

bool is_klein_group(const ColourGroup& g) { return g == parse_group_spec("product:2x2:(1,0),(0,1),(1,1)"); }

TruncatedSeries load_appendix(const std::filesystem::path& file, Check& checksum) {
  std::ifstream in(file);
  if (!in) throw UsageError("golden file not found: " + file.string());
  std::string line;
  std::string declared;
  std::vector<std::string> data;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# checksum fnv1a64 ";
      if (line.rfind(key, 0) == 0) declared = line.substr(key.size(), 16);
      continue;
    }
    data.push_back(line);
  }
  std::string body;
  for (std::size_t k = 0; k < data.size(); ++k) body += (k ? "\n" : "") + data[k];
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
  checksum = {"golden_checksum", declared == hex, "declared " + declared + ", computed " + hex, {}};

  TruncatedSeries s(3, 24);
  for (const std::string& d : data) {
    std::istringstream ls(d);
    int a = 0, b = 0, c = 0;
    std::string coeff;
    if (!(ls >> a >> b >> c >> coeff)) throw UsageError("malformed golden line: " + d);
    s.add_term(Monomial{a, b, c}, Integer(coeff));
  }
  return s;
}

Outcome appendix_outcome(const JobSpec& job, int bound) {
  Outcome o;
  const ColourGroup g = parse_group_spec("cyclic:3:1,1,1");
  Check checksum;
  const TruncatedSeries golden = load_appendix(job.data_dir / "golden" / "appendix_mu3_111.txt", checksum);
  o.report.add(checksum);
  bool hit = false;
  const TruncatedSeries z = z3d_cached(g, bound, job.cache_dir, {job.shards}, &hit);
  o.cache_status = hit ? "hit" : "miss";
  const TruncatedSeries red = reduce3d(z, 3, bound);
  o.report.add(compare_series("appendix_match", red, golden.truncated(bound)));
  o.payload = series_payload(red);
  o.payload_text = series_to_string(red);
  return o;
}

Outcome run_series_2d(const JobSpec& job) {
  Outcome o;
  const TruncatedSeries s = z2d(cyclic_2d_order(job.group), job.bound);
  o.payload = series_payload(s);
  o.payload_text = series_to_string(s);
  return o;
}

Outcome run_series_3d(const JobSpec& job) {
  Outcome o;
  const ColourGroup g = group_3d(job.group);
  bool hit = false;
  TruncatedSeries s = z3d_cached(g, job.bound, job.cache_dir, {job.shards}, &hit);
  o.cache_status = hit ? "hit" : "miss";
  if (job.signed_series) s = apply_dt_sign(g, s);
  o.payload = series_payload(s);
  o.payload_text = series_to_string(s);
  return o;
}

Outcome run_series_dr(const JobSpec& job) {
  Outcome o;
  const TruncatedSeries s = z_dr(dihedral_rank(job.group), job.bound);
  o.payload = series_payload(s);
  o.payload_text = series_to_string(s);
  return o;
}

Outcome run_reduce(const JobSpec& job) {
  Outcome o;
  const ColourGroup g = group_3d(job.group);
  bool hit = false;
  const TruncatedSeries z = z3d_cached(g, job.bound, job.cache_dir, {job.shards}, &hit);
  o.cache_status = hit ? "hit" : "miss";
  const TruncatedSeries red = reduce3d(z, g.order(), job.bound);
  o.payload = series_payload(red);
  o.payload_text = series_to_string(red);
  return o;
}

Outcome run_verify_2d(const JobSpec& job) {
  Outcome o;
  o.report = verify_2d(cyclic_2d_order(job.group), job.bound);
  return o;
}

Outcome run_verify_dr(const JobSpec& job) {
  Outcome o;
  RuleSet rules;
  if (job.rule2 == "ray-and-above") rules.rule2 = Rule2Reading::RayAndAbove;
  o.report = verify_dr(dihedral_rank(job.group), job.bound, rules);
  o.report.notes.insert(o.report.notes.begin(), "diagonal rule read as " + job.rule2);
  return o;
}

Outcome run_verify_3d(const JobSpec& job) {
  Outcome o;
  const ColourGroup g = group_3d(job.group);
  bool hit = false;
  const TruncatedSeries z = z3d_cached(g, job.bound, job.cache_dir, {job.shards}, &hit);
  o.cache_status = hit ? "hit" : "miss";
  o.report = verify_conjecture(g, z);
  const TruncatedSeries red = reduce3d(z, g.order(), job.bound);

  if (job.bound >= g.order()) {
    const Monomial ones(std::vector<int>(g.order(), 1));
    o.report.notes.push_back("signed coefficient of " + ones.to_string() + ": " +
                             apply_dt_sign(g, z).coeff(ones).get_str());
  }
  if (g == parse_group_spec("cyclic:3:1,1,1")) {
    const std::filesystem::path file = job.data_dir / "golden" / "appendix_mu3_111.txt";
    if (std::filesystem::exists(file)) {
      Check checksum;
      const TruncatedSeries golden = load_appendix(file, checksum);
      o.report.add(checksum);
      const int b = std::min(job.bound, golden.bound());
      o.report.add(compare_series("appendix_match", red.truncated(b), golden.truncated(b)));
    } else {
      o.report.notes.push_back("appendix golden file not found under " + job.data_dir.string());
    }
    for (const Check& c : support_cone_report(red).checks) {
      o.report.notes.push_back("support cone observation " + c.name + ": " + (c.pass ? "holds" : "violated") +
                               (c.first_discrepancy ? " at " + *c.first_discrepancy : ""));
    }
  }
  if ((is_type_a_group(g) || is_klein_group(g)) && job.bound > 16)
    o.report.notes.push_back("product formula comparison skipped above bound 16");
  if (is_type_a_group(g) && job.bound <= 16) {
    const int r = g.order();
    o.report.add(compare_series("young_product", z, young_product_A(r, job.bound)));
    const Check shown = compare_series("young_product_displayed_range", z, young_product_A_displayed(r, job.bound));
    o.report.notes.push_back(std::string("product over 0<a<b<r: ") +
                             (shown.pass ? "also matches" : "differs at " + shown.first_discrepancy.value_or("?")));
  }
  if (is_klein_group(g) && job.bound <= 16) {
    o.report.add(compare_series("young_product_2x2", z, young_product_2x2(job.bound)));
    const Check printed = compare_series(
        "quotient_form_printed", z,
        quotient_form_2x2(job.bound, {Monomial{0, 1, 1, 0}, Monomial{0, 1, 1, 0}, Monomial{0, 1, 1, 0}}));
    const Check fixed = compare_series(
        "quotient_form_pairs", z,
        quotient_form_2x2(job.bound, {Monomial{0, 1, 1, 0}, Monomial{0, 1, 0, 1}, Monomial{0, 0, 1, 1}}));
    o.report.notes.push_back(std::string("quotient form with repeated numerator: ") +
                             (printed.pass ? "matches" : "differs at " + printed.first_discrepancy.value_or("?")));
    o.report.notes.push_back(std::string("quotient form with the three pair products: ") +
                             (fixed.pass ? "matches" : "differs at " + fixed.first_discrepancy.value_or("?")));
  }
  o.payload = series_payload(red);
  o.payload_text = series_to_string(red);
  return o;
}

Outcome run_orbits(const JobSpec& job) {
  Outcome o;
  const ColourGroup g = group_3d(job.group);
  if (!g.is_symmetric()) throw UsageError("orbits needs a group with equal weights");
  const std::vector<long> w = parse_weight(job.weight);
  if (w.size() != static_cast<std::size_t>(g.order())) throw UsageError("--weight needs one entry per colour");
  const OrbitReport rep = s3_orbits(g, w);
  long covered = 0;
  json hist = json::object();
  for (const auto& [size, count] : rep.orbit_sizes) {
    covered += size * count;
    hist[std::to_string(size)] = count;
  }
  o.report.add({"orbits_cover_partitions", covered == rep.partitions,
                std::to_string(covered) + " of " + std::to_string(rep.partitions), {}});
  o.payload["partitions"] = rep.partitions;
  o.payload["orbit_sizes"] = hist;
  o.payload["fixed_by_s3"] = rep.fixed_by_s3;
  o.payload["fixed_by_a3"] = rep.fixed_by_a3;
  std::ostringstream text;
  text << "partitions " << rep.partitions << ", orbit sizes";
  for (const auto& [size, count] : rep.orbit_sizes) text << ' ' << size << ':' << count;
  text << ", fixed by S3 " << rep.fixed_by_s3 << ", fixed by A3 " << rep.fixed_by_a3;
  o.payload_text = text.str();
  return o;
}

Outcome run_refined_2d(const JobSpec& job) {
  Outcome o;
  const int r = cyclic_2d_order(job.group);
  const QSeries q = refined_2d_product(r, job.bound, job.qbound.value_or(job.bound));
  const bool complete = job.qbound.value_or(job.bound) * r >= job.bound;
  if (complete) {
    o.report.add(compare_series("collapse_to_z2d", q_specialize(q), z2d(r, job.bound)));
  } else {
    o.report.notes.push_back("q-bound below bound/r; collapse check skipped");
  }
  o.payload = json::parse(qseries_to_json(q));
  std::ostringstream text;
  for (const auto& [m, c] : q.terms()) {
    text << m.to_string() << ':';
    for (const auto& [e, v] : c.terms()) text << ' ' << v.get_str() << "*q^(" << e << "/2)";
    text << '\n';
  }
  o.payload_text = text.str();
  return o;
}

Outcome run_golden(const JobSpec& job) {
  if (job.name == "appendix") return appendix_outcome(job, 24);
  if (job.name == "d4-layout") {
    Outcome o;
    const std::filesystem::path file = job.data_dir / "golden" / "d4_layout.txt";
    std::ifstream in(file);
    if (!in) throw UsageError("golden file not found: " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string expected = buf.str();
    const std::string actual = OctantLayout(4).golden_text(6, 12);
    Check c{"d4_layout", expected == actual, {}, {}};
    if (!c.pass) {
      std::istringstream a(actual), e(expected);
      std::string la, le;
      for (int line = 1;; ++line) {
        const bool ga = static_cast<bool>(std::getline(a, la));
        const bool ge = static_cast<bool>(std::getline(e, le));
        if (!ga && !ge) break;
        if (la != le || ga != ge) {
          c.first_discrepancy = "line " + std::to_string(line) + ": " + la;
          break;
        }
      }
    }
    o.report.add(c);
    o.payload_text = actual;
    o.payload = actual;
    return o;
  }
  throw UsageError("unknown golden name '" + job.name + "' (appendix, d4-layout)");
}

json job_echo(const JobSpec& job) {
  json j;
  j["command"] = job.command;
  if (!job.group.empty()) j["group"] = job.group;
  if (job.command != "golden") j["bound"] = job.bound;
  if (job.qbound) j["qbound"] = *job.qbound;
  if (!job.weight.empty()) j["weight"] = job.weight;
  if (!job.name.empty()) j["name"] = job.name;
  if (job.signed_series) j["signed"] = true;
  if (job.command == "verify-dr") j["rule2"] = job.rule2;
  j["shards"] = job.shards;
  j["cache_dir"] = job.cache_dir ? job.cache_dir->string() : "";
  return j;
}

void render(const JobSpec& job, const Outcome& o, long timing_ms, std::ostream& out) {
  const bool pass = o.report.all_pass();
  if (job.format == "text") {
    out << "command: " << job.command << '\n';
    if (!job.group.empty()) out << "group: " << job.group << '\n';
    if (job.command != "golden") out << "bound: " << job.bound << '\n';
    if (!o.cache_status.empty()) out << "cache: " << o.cache_status << '\n';
    for (const Check& c : o.report.checks) {
      out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      if (c.first_discrepancy) out << " first discrepancy " << *c.first_discrepancy;
      out << '\n';
    }
    for (const std::string& n : o.report.notes) out << "note: " << n << '\n';
    if (job.out)
      out << "payload: " << job.out->string() << '\n';
    else if (!o.payload_text.empty())
      out << "payload:\n" << o.payload_text << (o.payload_text.back() == '\n' ? "" : "\n");
    out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    out << "timing_ms: " << timing_ms << '\n';
    return;
  }
  json j;
  j["job"] = job_echo(job);
  j["pass"] = pass;
  auto checks = json::array();
  for (const Check& c : o.report.checks) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    cj["first_discrepancy"] = c.first_discrepancy ? json(*c.first_discrepancy) : json(nullptr);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["notes"] = o.report.notes;
  if (!o.cache_status.empty()) j["cache"] = o.cache_status;
  if (job.out)
    j["payload_file"] = job.out->string();
  else if (!o.payload.is_null())
    j["payload"] = o.payload;
  j["timing_ms"] = timing_ms;
  out << j.dump(2) << '\n';
}

void write_payload(const JobSpec& job, const Outcome& o) {
  if (!job.out || o.payload.is_null()) return;
  if (job.out->has_parent_path()) std::filesystem::create_directories(job.out->parent_path());
  std::ofstream f(*job.out, std::ios::trunc);
  if (!f) throw UsageError("cannot write " + job.out->string());
  if (job.format == "text")
    f << o.payload_text;
  else
    f << o.payload.dump() << '\n';
}

}  // namespace

std::filesystem::path default_data_dir() { return ORBIFOLD_DEFAULT_DATA_DIR; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coloured partition generating functions and their product formulas", "orbifold"};
  app.require_subcommand(1);
  JobSpec job;
  job.data_dir = default_data_dir();
  if (const char* env = std::getenv("ORBIFOLD_CACHE_DIR"); env && *env) job.cache_dir = std::filesystem::path(env);

  std::optional<std::string> cache_dir_flag;
  std::optional<std::string> out_flag;
  std::optional<std::string> data_dir_flag;

  struct Sub {
    const char* name;
    const char* help;
    bool group = true;
    bool qbound = false;
    bool weight = false;
    bool golden = false;
  };
  const std::vector<Sub> subs{
      {"series-2d", "Coloured partition series for cyclic:r:1,r-1"},
      {"series-3d", "Coloured plane partition series"},
      {"series-dr", "D_r-partition series for bd:r"},
      {"reduce", "Plane partition series divided by M(t)^r"},
      {"verify-2d", "Factorisation through E(t)^r and the A-type theta sum"},
      {"verify-dr", "Factorisation through E(t)^(r+1) and the D-type theta sum"},
      {"verify-3d", "Positivity of the reduced series and product formulas"},
      {"orbits", "Coordinate-permutation orbits at a fixed colour weight", true, false, true},
      {"refined-2d", "q-refined product for cyclic:r:1,r-1", true, true},
      {"golden", "Recompute and diff a shipped golden file", false, false, false, true},
  };
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->callback([&job, name = std::string(s.name)] { job.command = name; });
    if (s.group) sc->add_option("--group", job.group, "Group spec")->required();
    if (!s.golden) sc->add_option("--bound", job.bound, "Total degree bound")->check(CLI::Range(0, 60));
    if (s.qbound) sc->add_option("--qbound", job.qbound, "Largest q exponent kept")->check(CLI::NonNegativeNumber);
    if (s.weight) sc->add_option("--weight", job.weight, "Colour weight, e.g. 3,3,3")->required();
    if (s.golden) sc->add_option("--name", job.name, "appendix or d4-layout")->required();
    sc->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sc->add_option("--cache-dir", cache_dir_flag, "Plane partition cache directory");
    sc->add_option("--shards", job.shards, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    sc->add_option("--out", out_flag, "Write the payload to this file");
    sc->add_option("--data-dir", data_dir_flag, "Directory holding golden/");
    if (std::string(s.name) == "series-3d") sc->add_flag("--signed", job.signed_series, "Apply the DT sign");
    if (std::string(s.name) == "verify-dr")
      sc->add_option("--rule2", job.rule2, "Reading of the diagonal rule")
          ->check(CLI::IsMember({"ray", "ray-and-above"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  if (cache_dir_flag) job.cache_dir = std::filesystem::path(*cache_dir_flag);
  if (out_flag) job.out = std::filesystem::path(*out_flag);
  if (data_dir_flag) job.data_dir = std::filesystem::path(*data_dir_flag);

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (job.command == "series-2d") o = run_series_2d(job);
    else if (job.command == "series-3d") o = run_series_3d(job);
    else if (job.command == "series-dr") o = run_series_dr(job);
    else if (job.command == "reduce") o = run_reduce(job);
    else if (job.command == "verify-2d") o = run_verify_2d(job);
    else if (job.command == "verify-dr") o = run_verify_dr(job);
    else if (job.command == "verify-3d") o = run_verify_3d(job);
    else if (job.command == "orbits") o = run_orbits(job);
    else if (job.command == "refined-2d") o = run_refined_2d(job);
    else if (job.command == "golden") o = run_golden(job);
    write_payload(job, o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  render(job, o, ms, out);
  return o.report.all_pass() ? kPass : kCheckFailed;
}

}  // namespace orbifold::cli
