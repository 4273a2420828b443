// affchar: run a named verification check, or the whole acceptance battery.
//
// Exit codes: 0 PASS, 1 FAIL, 2 invalid input, 3 SKIPPED.

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>

#include "affchar/checks.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitSkipped = 3;

int exit_code(affchar::Status s) {
  switch (s) {
    case affchar::Status::Pass: return kExitPass;
    case affchar::Status::Fail: return kExitFail;
    case affchar::Status::Skipped: return kExitSkipped;
  }
  return kExitFail;
}

std::string report_file_name(const affchar::Criterion& c, std::size_t i) {
  const auto& r = c.reports[i];
  std::ostringstream s;
  s << "c" << std::setw(2) << std::setfill('0') << c.id << "-" << std::setw(2) << i << "-" << r.check << "-"
    << r.params.type << r.params.rank << ".json";
  return s.str();
}

int run_all(const affchar::Caps& caps, affchar::Format format, const std::string& out_dir) {
  const auto criteria = affchar::run_acceptance_battery(caps);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& c : criteria)
      for (std::size_t i = 0; i < c.reports.size(); ++i)
        affchar::emit_report(c.reports[i], affchar::Format::Json, (std::filesystem::path(out_dir) / report_file_name(c, i)).string());
  }
  bool all = true;
  if (format == affchar::Format::Json) {
    affchar::ordered_json j = affchar::ordered_json::array();
    for (const auto& c : criteria) {
      affchar::ordered_json e;
      e["criterion"] = c.id;
      e["title"] = c.title;
      e["status"] = affchar::to_string(c.status);
      e["summary"] = c.summary;
      affchar::ordered_json reports = affchar::ordered_json::array();
      for (const auto& r : c.reports) reports.push_back(affchar::report_json(r));
      e["reports"] = reports;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  }
  for (const auto& c : criteria) {
    all = all && c.status == affchar::Status::Pass;
    if (format == affchar::Format::Text)
      std::cout << std::left << std::setw(8) << affchar::to_string(c.status) << "criterion " << std::setw(3) << c.id
                << c.title << " (" << c.summary << ")\n";
  }
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Demazure and lattice character checks"};
  app.set_version_flag("--version", std::string(affchar::kEngineVersion));

  std::string check;
  std::string type = "A";
  int rank = 1;
  std::string lambda, mu;
  std::optional<int> coset;
  std::int64_t level = 1, depth = 6;
  std::string format = "text";
  std::string out = "-";
  std::optional<std::size_t> cap_orbit, cap_elements;
  bool all = false, list = false;

  app.add_option("check", check, "Check name (see --list)");
  app.add_option("--type", type, "Cartan type A-G");
  app.add_option("--rank", rank, "Rank");
  app.add_option("--lambda", lambda, "Fundamental-coweight coefficients, e.g. 1,0,2,0");
  app.add_option("--mu", mu, "Second coweight, same format as --lambda");
  app.add_option("--coset", coset, "Node of the minuscule class representative (0 for the coroot lattice)");
  app.add_option("--level", level, "Level k")->capture_default_str();
  app.add_option("--depth", depth, "q-depth")->capture_default_str();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", out, "Output path ('-' for stdout); a directory with --all-paper-checks");
  app.add_option("--cap-orbit", cap_orbit, "Cap on orbit and lattice enumeration sizes");
  app.add_option("--cap-elements", cap_elements, "Cap on translations and character terms");
  app.add_flag("--all-paper-checks", all, "Run the full acceptance battery");
  app.add_flag("--list", list, "List check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (list) {
      for (const auto& n : affchar::check_names()) std::cout << n << "\n";
      return kExitPass;
    }
    affchar::Caps caps = affchar::caps_from_env();
    if (cap_orbit) caps.orbit = *cap_orbit;
    if (cap_elements) caps.elements = *cap_elements;
    const affchar::Format fmt = format == "json" ? affchar::Format::Json : affchar::Format::Text;

    if (all) return run_all(caps, fmt, out == "-" ? std::string() : out);
    if (check.empty()) throw affchar::InputError("a check name or --all-paper-checks is required");
    if (type.size() != 1) throw affchar::InputError("--type must be a single letter A-G");

    affchar::CheckParams p;
    p.type = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    p.rank = rank;
    if (!lambda.empty()) p.lambda = affchar::parse_int_list(lambda);
    if (!mu.empty()) p.mu = affchar::parse_int_list(mu);
    p.coset = coset;
    p.level = level;
    p.depth = depth;
    p.caps = caps;
    const affchar::Report r = affchar::run_verification(check, p);
    affchar::emit_report(r, fmt, out);
    return exit_code(r.status);
  } catch (const affchar::InputError& e) {
    std::cerr << "affchar: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "affchar: " << e.what() << "\n";
    return kExitFail;
  }
}
