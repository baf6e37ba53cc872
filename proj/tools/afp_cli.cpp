// Command-line front end for libafp. Links only the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "afp/afp.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  std::string command;
  std::string plane_path;
  std::optional<unsigned> q;
  std::string poly;
  std::string out_path;
  std::string what = "translations";
  unsigned base_point = 0;
  bool oracle = false;
  std::string endo_path;
  bool verbose = false;
};

struct PlaneDeleter {
  void operator()(afp_plane* p) const { afp_plane_free(p); }
};
using PlaneHandle = std::unique_ptr<afp_plane, PlaneDeleter>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(afp_status s) {
  switch (s) {
    case AFP_OK: return kExitOk;
    case AFP_VERIFICATION_FAILED: return kExitVerification;
    case AFP_INVALID_ARGUMENT:
    case AFP_IO_ERROR: return kExitUsage;
    default: return kExitInternal;
  }
}

std::vector<unsigned> parse_poly(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError("--poly expects comma-separated non-negative integers, got '" + text + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void validate_paths(const RunConfig& cfg) {
  if (!cfg.plane_path.empty() && !std::filesystem::is_regular_file(cfg.plane_path)) {
    throw UsageError("input file not found: " + cfg.plane_path);
  }
  if (!cfg.endo_path.empty() && !std::filesystem::is_regular_file(cfg.endo_path)) {
    throw UsageError("endomorphism file not found: " + cfg.endo_path);
  }
  if (!cfg.out_path.empty()) {
    const auto parent = std::filesystem::path(cfg.out_path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
      throw UsageError("output directory does not exist: " + parent.string());
    }
  }
  if (cfg.command != "build-plane" && cfg.plane_path.empty() == !cfg.q.has_value()) {
    throw UsageError("give exactly one of --plane or --q");
  }
}

PlaneHandle open_plane(const RunConfig& cfg, afp_status& status) {
  afp_plane* raw = nullptr;
  if (cfg.q) {
    const auto poly = cfg.poly.empty() ? std::vector<unsigned>{} : parse_poly(cfg.poly);
    status = afp_plane_build_ag2(*cfg.q, poly.empty() ? nullptr : poly.data(), poly.size(), &raw);
  } else {
    status = afp_plane_load_file(cfg.plane_path.c_str(), &raw);
  }
  return PlaneHandle(raw);
}

json config_json(const RunConfig& cfg) {
  json c{{"command", cfg.command}};
  c["plane"] = cfg.plane_path.empty() ? json(nullptr) : json(cfg.plane_path);
  c["q"] = cfg.q ? json(*cfg.q) : json(nullptr);
  c["poly"] = cfg.poly.empty() ? json(nullptr) : json(parse_poly(cfg.poly));
  if (cfg.command == "enumerate") c["what"] = cfg.what;
  if (cfg.command == "verify-skewfield") {
    c["base_point"] = cfg.base_point;
    c["oracle"] = cfg.oracle;
    c["endo"] = cfg.endo_path.empty() ? json(nullptr) : json(cfg.endo_path);
  }
  return c;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + cfg.out_path);
}

void print_summary(const json& report, std::ostream& os) {
  std::size_t failed = 0;
  for (const auto& c : report["checks"]) {
    const bool ok = c["status"] == "pass";
    failed += ok ? 0 : 1;
    os << (ok ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (c.contains("detail")) os << ": " << c["detail"].get<std::string>();
    os << "\n";
  }
  os << report["checks"].size() - failed << "/" << report["checks"].size() << " checks passed\n";
}

int run(const RunConfig& cfg) {
  validate_paths(cfg);

  afp_status status = AFP_OK;
  auto plane = open_plane(cfg, status);
  if (status != AFP_OK) {
    std::cerr << "error: " << afp_last_error() << "\n";
    return exit_code(status);
  }

  if (cfg.command == "build-plane") {
    char* text = nullptr;
    status = afp_plane_to_json(plane.get(), &text);
    if (status != AFP_OK) {
      std::cerr << "error: " << afp_last_error() << "\n";
      return exit_code(status);
    }
    std::string s(text);
    afp_string_free(text);
    write_output(cfg, s);
    if (!cfg.out_path.empty()) {
      std::cout << "wrote AG(2," << *cfg.q << "): " << afp_plane_num_points(plane.get()) << " points, "
                << afp_plane_num_lines(plane.get()) << " lines\n";
    }
    return kExitOk;
  }

  char* text = nullptr;
  if (cfg.command == "check-axioms") {
    status = afp_check_axioms(plane.get(), &text);
  } else if (cfg.command == "enumerate") {
    status = afp_enumerate(plane.get(), cfg.what == "dilations" ? AFP_ENUM_DILATIONS : AFP_ENUM_TRANSLATIONS, &text);
  } else if (cfg.command == "verify-group") {
    status = afp_verify_group(plane.get(), &text);
  } else {
    status = afp_verify_skewfield(plane.get(), cfg.base_point, cfg.oracle ? 1 : 0, &text);
  }
  if (!text) {
    std::cerr << "error: " << afp_last_error() << "\n";
    return exit_code(status);
  }
  json body = json::parse(text);
  afp_string_free(text);

  if (!cfg.endo_path.empty()) {
    char* endo_text = nullptr;
    const auto endo = read_file(cfg.endo_path);
    const auto endo_status = afp_check_endomorphism(plane.get(), endo.c_str(), cfg.base_point, &endo_text);
    if (!endo_text) {
      std::cerr << "error: " << afp_last_error() << "\n";
      return exit_code(endo_status);
    }
    auto endo_report = json::parse(endo_text);
    afp_string_free(endo_text);
    for (auto c : endo_report["checks"]) {
      c["name"] = "endomorphism." + c["name"].get<std::string>();
      body["checks"].push_back(std::move(c));
    }
    endo_report.erase("checks");
    body["endomorphism"] = std::move(endo_report);
    if (status == AFP_OK) status = endo_status;
  }

  json report{{"tool", "afp"}, {"version", afp_version()}, {"config", config_json(cfg)}};
  report.update(body);
  write_output(cfg, report.dump(2) + "\n");
  if (!cfg.out_path.empty() || cfg.verbose) print_summary(report, cfg.out_path.empty() ? std::cerr : std::cout);
  return exit_code(status);
}

void add_plane_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--plane", cfg.plane_path, "Plane JSON file {\"num_points\", \"lines\"}");
  sub->add_option("--q", cfg.q, "Build AG(2,q) in memory instead of reading a file (q <= 16)");
  sub->add_option("--poly", cfg.poly,
                  "Irreducible polynomial for q = p^k, k > 1: k+1 comma-separated coefficients, constant term "
                  "first. Defaults: q=4 x^2+x+1, q=8 x^3+x+1, q=9 x^2+1, q=16 x^4+x+1");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Affine planes, translation groups and the skew-field of trace-preserving endomorphisms"};
  app.set_version_flag("--version", std::string(afp_version()));
  app.add_flag("-v,--verbose", cfg.verbose, "Print the check summary even when the report goes to stdout");
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build-plane", "Write AG(2,q) as plane JSON");
  build->add_option("--q", cfg.q, "Field order (prime power <= 16)")->required();
  build->add_option("--poly", cfg.poly, "Irreducible polynomial coefficients, constant term first");
  build->add_option("--out", cfg.out_path, "Output plane JSON (stdout when omitted)");

  auto* axioms = app.add_subcommand("check-axioms", "Check the affine plane axioms");
  add_plane_options(axioms, cfg);
  axioms->add_option("--report", cfg.out_path, "Report JSON path (stdout when omitted)");

  auto* enumerate = app.add_subcommand("enumerate", "List translations or dilations");
  add_plane_options(enumerate, cfg);
  enumerate->add_option("--what", cfg.what, "translations | dilations")
      ->check(CLI::IsMember({"translations", "dilations"}));
  enumerate->add_option("--out", cfg.out_path, "Output JSON path (stdout when omitted)");

  auto* group = app.add_subcommand("verify-group", "Verify the translation group theorems");
  add_plane_options(group, cfg);
  group->add_option("--report", cfg.out_path, "Report JSON path (stdout when omitted)");

  auto* skew = app.add_subcommand("verify-skewfield", "Build and verify the skew-field of trace-preserving endomorphisms");
  add_plane_options(skew, cfg);
  skew->add_option("--base-point", cfg.base_point, "Base point for dilation recovery");
  skew->add_flag("--oracle", cfg.oracle, "Also compare against the brute-force endomorphism oracle");
  skew->add_option("--endo", cfg.endo_path, "Endomorphism JSON {\"group_order\", \"image\"} to check and invert");
  skew->add_option("--report", cfg.out_path, "Report JSON path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
