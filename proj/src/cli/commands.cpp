#include "torelli/cli.hpp"

#include "torelli/casson.hpp"
#include "torelli/error.hpp"
#include "torelli/euclid.hpp"
#include "torelli/mod2_group.hpp"
#include "torelli/splitting.hpp"
#include "torelli/torus.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace torelli::cli {

bool CommandReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void CommandReport::check(std::string name, Json expected, Json actual) {
  const bool pass = expected == actual;
  checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

void CommandReport::check(std::string name, Json expected, Json actual, bool pass) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

Json CommandReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks)
    list.push_back(Json{{"name", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
  return Json{{"command", command},
              {"inputs", inputs},
              {"outputs", outputs},
              {"checks", list},
              {"seed", seed},
              {"elapsed_ms", elapsed_ms ? Json(*elapsed_ms) : Json(nullptr)}};
}

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::usage, "malformed JSON in " + path + ": " + e.what());
  }
}

// Reports written by this tool can be fed back in; their payload is under "outputs".
Json unwrap_report(Json j) {
  if (j.is_object() && j.contains("command") && j.contains("outputs")) return j.at("outputs");
  return j;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::usage, "malformed JSON for " + what + ": " + e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      require(used == item.size(), ErrorKind::usage, "bad integer '" + item + "' in " + what);
    } catch (const std::logic_error&) {
      fail(ErrorKind::usage, "bad integer '" + item + "' in " + what);
    }
  }
  return out;
}

SpQuadraticForm parse_form_values(const std::string& text) {
  std::vector<std::uint8_t> values;
  for (auto v : parse_int_list(text, "--values")) {
    require(v == 0 || v == 1, ErrorKind::usage, "--values entries must be 0 or 1");
    values.push_back(static_cast<std::uint8_t>(v));
  }
  require(!values.empty() && values.size() % 2 == 0, ErrorKind::usage,
          "--values needs an even number of bits");
  return SpQuadraticForm(std::move(values));
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  if (const char* dir = std::getenv("TORELLI_CACHE_DIR"); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir);
  return std::nullopt;
}

Json form_list(const std::vector<SpQuadraticForm>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(json::encode(f));
  return out;
}

struct Options {
  std::uint64_t seed = 0;
  bool timing = false;
  std::size_t genus = 3;
  int arf_value = 0;
  std::string values;
  std::string json_file;
  std::string matrix;
  bool refined = false;
  std::string class_text;
  std::string mode = "t1";
  std::string svg_file;
  std::string cycles_file;
  std::string cert_file;
  std::string omega0;
  std::size_t budget = 100000;
  std::int64_t bound = kDefaultCoordinateBound;
  std::size_t count = 3;
  bool no_hints = false;
};

SpQuadraticForm form_input(const Options& o) {
  if (!o.values.empty()) return parse_form_values(o.values);
  require(!o.json_file.empty(), ErrorKind::usage, "pass --values or --json");
  return json::decode_form(read_json_file(o.json_file));
}

CommandReport forms_enumerate(const Options& o) {
  CommandReport r{"forms enumerate"};
  r.inputs = Json{{"g", o.genus}, {"arf", o.arf_value}};
  require(o.arf_value == 0 || o.arf_value == 1, ErrorKind::usage, "--arf must be 0 or 1");
  const auto forms = enumerate_forms(o.genus, static_cast<std::uint8_t>(o.arf_value));
  r.outputs = Json{{"count", forms.size()}, {"forms", form_list(forms)}};
  return r;
}

CommandReport forms_arf(const Options& o) {
  CommandReport r{"forms arf"};
  const auto form = form_input(o);
  r.inputs = Json{{"form", json::encode(form)}};
  r.outputs = Json{{"arf", static_cast<int>(arf(form))}};
  return r;
}

CommandReport forms_bc(const Options& o) {
  CommandReport r{"forms bc"};
  const auto form = form_input(o);
  r.inputs = Json{{"form", json::encode(form)}};
  const auto value = birman_craggs_involution_value(form);
  const auto pairwise = birman_craggs_pairwise_sum(form);
  r.outputs = Json{{"involution_value", static_cast<int>(value)},
                   {"pairwise_sum", static_cast<int>(pairwise)}};
  r.check("pairwise-sum-agrees", static_cast<int>(value), static_cast<int>(pairwise));
  return r;
}

CommandReport euclid_reduce(const Options& o) {
  CommandReport r{"euclid reduce"};
  require(!o.matrix.empty(), ErrorKind::usage, "--matrix is required");
  const Sl2Matrix x = json::decode_sl2(parse_json_text(o.matrix, "--matrix"));
  r.inputs = Json{{"matrix", json::encode(x)}, {"refined", o.refined}};
  const Reduction red = o.refined ? reduce_refined(x) : reduce_full(x);
  const bool verified = carries_to_standard(red.word, x);
  r.outputs = Json{{"word", json::encode(red.word)},
                   {"verified", verified},
                   {"iterations", red.iterations},
                   {"product", json::encode(red.word.evaluate())}};
  r.check("verified", true, verified);
  if (o.refined) r.check("even-r1-exponents", true, red.word.is_refined());
  return r;
}

OrthogonalSplitting splitting_input(const Options& o) {
  require(!o.json_file.empty(), ErrorKind::usage, "--json splitting file is required");
  return json::decode_splitting(read_json_file(o.json_file));
}

CommandReport splitting_check(const Options& o) {
  CommandReport r{"splitting check"};
  require(!o.json_file.empty(), ErrorKind::usage, "--json splitting file is required");
  const Json input = read_json_file(o.json_file);
  r.inputs = Json{{"splitting", input}};
  auto summand = [&](const char* key) {
    require(input.is_object() && input.contains(key), ErrorKind::usage,
            std::string("splitting needs ") + key);
    const Json& rows = input.at(key);
    require(rows.is_array() && rows.size() == 2, ErrorKind::precondition,
            std::string(key) + " must have rank 2");
    return Sublattice({json::decode_vector(rows[0]), json::decode_vector(rows[1])});
  };
  const bool orthogonal = is_orthogonal_splitting(summand("V1"), summand("V2"), summand("V3"));
  r.outputs["orthogonal"] = orthogonal;
  if (orthogonal) {
    const OrthogonalSplitting s = json::decode_splitting(input);
    const auto pattern = arf_pattern(s);
    r.outputs["arf_pattern"] = Json::array({pattern[0], pattern[1], pattern[2]});
    r.outputs["symmetric"] = is_symmetric_splitting(s);
  } else {
    r.outputs["symmetric"] = false;
  }
  return r;
}

CommandReport splitting_canonical(const Options& o) {
  CommandReport r{"splitting canonical"};
  const auto s = splitting_input(o);
  r.inputs = Json{{"splitting", json::encode(s)}};
  const auto [canon, sign] = canonical_form(s);
  r.outputs = Json{{"canonical", json::encode(canon)}, {"sign", sign}};
  const auto again = canonical_form(canon);
  r.check("idempotent", true, again.first == canon && again.second == 1);
  return r;
}

CommandReport splitting_sample(const Options& o) {
  CommandReport r{"splitting sample"};
  r.seed = o.seed;
  r.inputs = Json{{"count", o.count}};
  const auto family = seeded_symmetric_family(o.count, o.seed);
  Json list = Json::array();
  for (const auto& s : family) list.push_back(json::encode(s));
  r.outputs = Json{{"splittings", list}};
  return r;
}

CommandReport splitting_generic_class(const Options& o) {
  CommandReport r{"splitting generic-class"};
  r.seed = o.seed;
  require(!o.json_file.empty(), ErrorKind::usage, "--json family file is required");
  const auto family = json::decode_family(unwrap_report(read_json_file(o.json_file)));
  Json list = Json::array();
  for (const auto& s : family) list.push_back(json::encode(s));
  r.inputs = Json{{"splittings", list}, {"bound", o.bound}};
  const GenericClass found = choose_generic_class(family, o.seed, o.bound);
  r.outputs = json::encode(found);
  r.check("primitive", true, is_primitive(found.x));
  r.check("conditions-hold", true, check_generic_class(family, found.x).has_value());
  return r;
}

CommandReport torus_realize(const Options& o) {
  CommandReport r{"torus realize"};
  const auto coords = parse_int_list(o.class_text, "--class");
  require(coords.size() == 2, ErrorKind::usage, "--class takes m,n");
  const torus::HomologyClass w{coords[0], coords[1]};
  r.inputs = Json{{"class", Json::array({w.m, w.n})}, {"mode", o.mode}};
  r.outputs["nu"] = torus::nu(w);
  std::vector<torus::LatticeLine> lines;
  const std::array<torus::Point, 2> marked{torus::kP, torus::kQ};
  if (o.mode == "t1") {
    const auto line = torus::realize_symmetric(w);
    lines.push_back(line);
    r.check("involution-invariant", true, torus::is_involution_invariant(line));
    r.check("avoids-p", true, !line.passes_through(torus::kP));
  } else if (o.mode == "t21") {
    const auto line = torus::realize_nu1(w);
    lines.push_back(line);
    r.check("involution-invariant", true, torus::is_involution_invariant(line));
    r.check("avoids-p", true, !line.passes_through(torus::kP));
    r.check("avoids-q", true, !line.passes_through(torus::kQ));
  } else if (o.mode == "t22") {
    const auto [first, second] = torus::realize_nu0_pair(w);
    lines = {first, second};
    r.check("disjoint", true, torus::disjoint(first, second));
    r.check("swapped-by-involution", true, torus::involution_image(first).same_curve(second));
    r.check("avoids-marked-points", true,
            !first.passes_through(torus::kP) && !first.passes_through(torus::kQ) &&
                !second.passes_through(torus::kP) && !second.passes_through(torus::kQ));
    const auto occupancy = torus::annulus_occupancy(first, second, marked);
    r.outputs["annulus_occupancy"] = Json::array({occupancy[0], occupancy[1]});
    r.check("one-point-per-annulus", Json::array({1, 1}),
            Json::array({occupancy[0], occupancy[1]}));
  } else {
    fail(ErrorKind::usage, "--mode must be t1, t21 or t22");
  }
  Json encoded = Json::array();
  for (const auto& l : lines) encoded.push_back(json::encode(l));
  r.outputs["lines"] = encoded;
  if (!o.svg_file.empty()) {
    std::ofstream out(o.svg_file);
    require(static_cast<bool>(out), ErrorKind::io, "cannot write " + o.svg_file);
    out << torus_svg(lines, o.mode == "t1" ? std::vector<torus::Point>{torus::kP}
                                           : std::vector<torus::Point>{torus::kP, torus::kQ});
    r.outputs["svg"] = o.svg_file;
  }
  return r;
}

CommandReport cert_find(const Options& o) {
  CommandReport r{"cert find"};
  r.seed = o.seed;
  require(!o.cycles_file.empty(), ErrorKind::usage, "--cycles file is required");
  const auto family = json::decode_family(unwrap_report(read_json_file(o.cycles_file)));
  std::vector<CycleDescriptor> cycles;
  for (const auto& s : family) cycles.emplace_back(s);
  Json list = Json::array();
  for (const auto& s : family) list.push_back(json::encode(s));
  r.inputs = Json{{"cycles", list}, {"budget", o.budget}, {"hints", !o.no_hints}};
  std::vector<FunctionalPair> hints;
  if (!o.no_hints) hints.emplace_back(psi1_matrix(), psi3_matrix());
  const auto cert = find_independence_certificate(cycles, o.seed, o.budget, hints);
  r.outputs = Json{{"certificate", json::encode(cert)}};
  const auto replay = verify_certificate(cert);
  r.check("replay", true, replay.valid);
  r.check("full-rank", cycles.size(), cert.rank);
  return r;
}

CommandReport cert_verify(const Options& o) {
  CommandReport r{"cert verify"};
  const std::string path = !o.cert_file.empty() ? o.cert_file : o.json_file;
  require(!path.empty(), ErrorKind::usage, "certificate file is required");
  Json input = unwrap_report(read_json_file(path));
  if (input.is_object() && input.contains("certificate")) input = input.at("certificate");
  r.inputs = Json{{"file", path}};
  const auto cert = json::decode_certificate(input);
  const auto result = verify_certificate(cert);
  r.outputs = Json{{"valid", result.valid},
                   {"detail", result.detail},
                   {"recomputed_rank", result.recomputed_rank},
                   {"cycles", cert.cycles.size()}};
  r.check("certificate-valid", true, result.valid);
  return r;
}

CommandReport census_sp_order(const Options& o) {
  CommandReport r{"census sp-order"};
  r.inputs = Json{{"g", o.genus}};
  r.outputs = Json{{"order", json::encode(sp_order_mod2(o.genus))}};
  return r;
}

CommandReport census_orbit_count(const Options& o) {
  CommandReport r{"census orbit-count"};
  r.inputs = Json{{"g", o.genus}};
  const auto count = hyperelliptic_orbit_count(o.genus);
  r.outputs = Json{{"orbit_count", json::encode(count.value)},
                   {"warning", count.warning ? Json(*count.warning) : Json(nullptr)}};
  return r;
}

CommandReport census_enumerate(const Options& o) {
  CommandReport r{"census enumerate"};
  r.inputs = Json{{"g", o.genus}};
  const auto cached = load_or_enumerate(o.genus, cache_dir_from_env());
  r.outputs = Json{{"count", cached.group.size()},
                   {"cache", to_string(cached.status)},
                   {"cache_file", cached.file ? Json(cached.file->string()) : Json(nullptr)}};
  r.check("order-matches-formula", json::encode(sp_order_mod2(o.genus)),
          json::encode(Integer(cached.group.size())));
  return r;
}

CommandReport census_orbits(const Options& o) {
  CommandReport r{"census orbits"};
  r.inputs = Json{{"g", o.genus}};
  const auto cached = load_or_enumerate(o.genus, cache_dir_from_env());
  const auto orbits = form_orbit_census(cached.group);
  Json list = Json::array();
  Json by_arf = Json{{"0", Json::array()}, {"1", Json::array()}};
  bool preserved = true;
  for (const auto& orbit : orbits) {
    list.push_back(Json{{"arf", orbit.arf},
                        {"size", orbit.size},
                        {"representative", json::encode(SpQuadraticForm::from_bits(
                                               o.genus, orbit.representative))}});
    by_arf[orbit.arf == 0 ? "0" : "1"].push_back(orbit.size);
    preserved = preserved && orbit.arf_constant;
  }
  r.outputs = Json{{"group_order", cached.group.size()},
                   {"cache", to_string(cached.status)},
                   {"orbits", list},
                   {"by_arf", by_arf}};
  r.check("action-preserves-arf", true, preserved);
  return r;
}

CommandReport run_paper_check(const Options& o) {
  PaperCheckOptions options;
  options.seed = o.seed;
  options.cache_dir = cache_dir_from_env();
  if (!o.omega0.empty()) {
    std::vector<std::uint8_t> values;
    for (auto v : parse_int_list(o.omega0, "--omega0")) {
      require(v == 0 || v == 1, ErrorKind::usage, "--omega0 entries must be 0 or 1");
      values.push_back(static_cast<std::uint8_t>(v));
    }
    require(values.size() == 6, ErrorKind::usage, "--omega0 needs six bits");
    options.reference = SpQuadraticForm(std::move(values));
  }
  return paper_check(options);
}

Json error_json(std::string_view kind, const std::string& detail) {
  return Json{{"error", std::string(kind)}, {"detail", detail}};
}

}  // namespace

Outcome execute(const std::vector<std::string>& argv) {
  Options o;
  CLI::App app{"Exact computations for the hyperelliptic Torelli group of genus 3", "torelli"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
  app.add_flag("--timing", o.timing, "Report elapsed_ms (breaks byte-identical output)");

  auto with_common = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };
  auto g_option = [&](CLI::App* sub) {
    sub->add_option("--g", o.genus, "Genus")->capture_default_str();
  };

  enum class Cmd {
    none, forms_enumerate, forms_arf, forms_bc, euclid_reduce, splitting_check,
    splitting_canonical, splitting_sample, splitting_generic, torus_realize, cert_find,
    cert_verify, census_sp_order, census_orbit_count, census_orbits, census_enumerate,
    paper_check
  };
  Cmd cmd = Cmd::none;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Cmd c) {
    auto* sub = with_common(parent->add_subcommand(name, help));
    sub->callback([&cmd, c] { cmd = c; });
    return sub;
  };

  auto* forms = with_common(app.add_subcommand("forms", "Sp-quadratic forms"));
  forms->require_subcommand(1);
  auto* fe = leaf(forms, "enumerate", "All forms with a given Arf invariant", Cmd::forms_enumerate);
  g_option(fe);
  fe->add_option("--arf", o.arf_value, "Arf value (0 or 1)")->capture_default_str();
  for (auto* sub : {leaf(forms, "arf", "Arf invariant of a form", Cmd::forms_arf),
                    leaf(forms, "bc", "Involution value of a genus-3 Arf-0 form", Cmd::forms_bc)}) {
    sub->add_option("--values", o.values, "Comma-separated basis values a1,b1,...");
    sub->add_option("--json", o.json_file, "Form JSON file");
  }

  auto* euclid = with_common(app.add_subcommand("euclid", "SL(2, Z) basis reduction"));
  euclid->require_subcommand(1);
  auto* er = leaf(euclid, "reduce", "Reduce a symplectic basis of Z^2", Cmd::euclid_reduce);
  er->add_option("--matrix", o.matrix, "Rows (a', b') as JSON, e.g. [[3,1],[2,1]]")->required();
  er->add_flag("--refined", o.refined, "Use only R1^2 and R2");

  auto* split = with_common(app.add_subcommand("splitting", "Orthogonal splittings"));
  split->require_subcommand(1);
  leaf(split, "check", "Validate a splitting and test the symmetry criterion", Cmd::splitting_check)
      ->add_option("--json", o.json_file, "Splitting JSON file");
  leaf(split, "canonical", "Canonical representative and sign", Cmd::splitting_canonical)
      ->add_option("--json", o.json_file, "Splitting JSON file");
  leaf(split, "sample", "Seeded family of distinct symmetric splittings", Cmd::splitting_sample)
      ->add_option("--count", o.count, "Family size")
      ->capture_default_str();
  auto* sg = leaf(split, "generic-class", "Generic homology class for a family",
                  Cmd::splitting_generic);
  sg->add_option("--json", o.json_file, "Family JSON file");
  sg->add_option("--bound", o.bound, "Coordinate bound")->capture_default_str();

  auto* torus = with_common(app.add_subcommand("torus", "Lattice lines on the marked torus"));
  torus->require_subcommand(1);
  auto* tr = leaf(torus, "realize", "Realize a primitive class by lattice lines", Cmd::torus_realize);
  tr->add_option("--class", o.class_text, "Class m,n in the basis e1, e2")->required();
  tr->add_option("--mode", o.mode, "t1, t21 or t22")->capture_default_str();
  tr->add_option("--svg", o.svg_file, "Write a fundamental-domain picture");

  auto* cert = with_common(app.add_subcommand("cert", "Linear-independence certificates"));
  cert->require_subcommand(1);
  auto* cf = leaf(cert, "find", "Search for a certificate", Cmd::cert_find);
  cf->add_option("--cycles", o.cycles_file, "Family JSON file")->required();
  cf->add_option("--budget", o.budget, "Candidate functional pairs to try")->capture_default_str();
  cf->add_flag("--no-hints", o.no_hints, "Skip the built-in functional pair");
  auto* cv = leaf(cert, "verify", "Replay a certificate", Cmd::cert_verify);
  cv->add_option("file", o.cert_file, "Certificate JSON file");
  cv->add_option("--json", o.json_file, "Certificate JSON file");

  auto* census = with_common(app.add_subcommand("census", "Sp(2g, Z/2) counts"));
  census->require_subcommand(1);
  g_option(leaf(census, "sp-order", "Order of Sp(2g, Z/2)", Cmd::census_sp_order));
  g_option(leaf(census, "orbit-count", "Hyperelliptic orbit count", Cmd::census_orbit_count));
  g_option(leaf(census, "orbits", "Orbits of forms under Sp(2g, Z/2)", Cmd::census_orbits));
  g_option(leaf(census, "enumerate", "Enumerate Sp(2g, Z/2)", Cmd::census_enumerate));

  leaf(&app, "paper-check", "Run every desk-scale reproduction", Cmd::paper_check)
      ->add_option("--omega0", o.omega0, "Override the reference form (negative control)");

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  Outcome outcome;
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.out = error_json("usage", e.what()).dump(2) + "\n";
    return outcome;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    CommandReport report;
    switch (cmd) {
      case Cmd::forms_enumerate: report = forms_enumerate(o); break;
      case Cmd::forms_arf: report = forms_arf(o); break;
      case Cmd::forms_bc: report = forms_bc(o); break;
      case Cmd::euclid_reduce: report = euclid_reduce(o); break;
      case Cmd::splitting_check: report = splitting_check(o); break;
      case Cmd::splitting_canonical: report = splitting_canonical(o); break;
      case Cmd::splitting_sample: report = splitting_sample(o); break;
      case Cmd::splitting_generic: report = splitting_generic_class(o); break;
      case Cmd::torus_realize: report = torus_realize(o); break;
      case Cmd::cert_find: report = cert_find(o); break;
      case Cmd::cert_verify: report = cert_verify(o); break;
      case Cmd::census_sp_order: report = census_sp_order(o); break;
      case Cmd::census_orbit_count: report = census_orbit_count(o); break;
      case Cmd::census_orbits: report = census_orbits(o); break;
      case Cmd::census_enumerate: report = census_enumerate(o); break;
      case Cmd::paper_check: report = run_paper_check(o); break;
      case Cmd::none: fail(ErrorKind::usage, "no command given");
    }
    report.seed = o.seed;
    if (o.timing)
      report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    outcome.out = report.to_json().dump(2) + "\n";
    outcome.exit_code = report.all_pass() ? kExitOk : kExitFailure;
    for (const auto& c : report.checks)
      if (!c.pass) outcome.err += "check failed: " + c.name + "\n";
  } catch (const Error& e) {
    outcome.exit_code = e.kind() == ErrorKind::usage ? kExitUsage : kExitFailure;
    outcome.out = error_json(to_string(e.kind()), e.what()).dump(2) + "\n";
  } catch (const std::exception& e) {
    outcome.exit_code = kExitFailure;
    outcome.out = error_json("internal", e.what()).dump(2) + "\n";
  }
  return outcome;
}

}  // namespace torelli::cli
