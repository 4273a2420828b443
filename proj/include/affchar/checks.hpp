#pragma once

// Named verification checks shared by the CLI and the acceptance runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affchar/rootsys.hpp"

namespace affchar {

inline constexpr const char* kEngineVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Caps {
  std::size_t orbit = kDefaultOrbitCap;  // Weyl orbits, fixed-point sets, lattice shells
  std::size_t elements = 5'000'000;      // affine Weyl translations, Demazure terms
};

/// Caps with AFFCHAR_CAP_ORBIT / AFFCHAR_CAP_ELEMENTS applied on top of `base`.
Caps caps_from_env(Caps base = {});

struct CheckParams {
  char type = 'A';
  int rank = 1;
  std::optional<std::vector<std::int64_t>> lambda;  // fundamental-coweight coefficients
  std::optional<std::vector<std::int64_t>> mu;
  std::optional<int> coset;  // node of the minuscule representative, 0 for the root lattice
  std::int64_t level = 1;
  std::int64_t depth = 6;
  Caps caps;
};

struct Report {
  std::string check;
  CheckParams params;
  Status status = Status::Pass;
  std::string claim;
  std::optional<ordered_json> first_discrepancy;  // present iff FAIL
  ordered_json details = ordered_json::object();
  std::string reason;  // SKIPPED only
  bool truncated = false;
  double elapsed_ms = 0;
};

const std::vector<std::string>& check_names();

/// Runs a named check. Unknown names and invalid parameters throw
/// InputError; exceeded caps give a SKIPPED report.
Report run_verification(const std::string& check, const CheckParams& params);

ordered_json params_json(const CheckParams& p);
ordered_json report_json(const Report& r);
std::string report_text(const Report& r);

enum class Format { Text, Json };
/// Writes to `path` through a temporary file and a rename; "-" or empty is stdout.
void emit_report(const Report& r, Format format, const std::string& path);

/// "1,0,2" -> {1, 0, 2}.
std::vector<std::int64_t> parse_int_list(const std::string& text);

// The acceptance battery.

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Report> reports;
  Status status = Status::Pass;
  std::string summary;
  double elapsed_ms = 0;
};

/// Runs every acceptance criterion with the given caps.
std::vector<Criterion> run_acceptance_battery(const Caps& caps);

}  // namespace affchar
