// Copyright 2026 The lmono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the lmono C API.

#include <lmono/lmono.h>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCertificate = 4;

// Raised on any failed precondition or computation; carries the exit code.
struct Exit {
  int code;
  std::string message;
};

int exit_for_status(int status) {
  switch (status) {
    case LMONO_E_DOMAIN:
    case LMONO_E_POLE:
    case LMONO_E_OVERFLOW:
    case LMONO_E_TIE:
    case LMONO_E_DOMINANCE:
    case LMONO_E_SEARCH:
    case LMONO_E_GEOMETRY:
    case LMONO_E_ARGUMENT:
      return kExitUsage;
    default:
      return kExitData;
  }
}

void check(int status) {
  if (status != LMONO_OK) throw Exit{exit_for_status(status), lmono_last_error()};
}

json take_json(char* text) {
  std::unique_ptr<char, decltype(&lmono_string_free)> owner(text, lmono_string_free);
  return json::parse(text);
}

std::string take_text(char* text) {
  std::unique_ptr<char, decltype(&lmono_string_free)> owner(text, lmono_string_free);
  return std::string(text);
}

struct ZerosDeleter {
  void operator()(lmono_zeros* z) const { lmono_zeros_free(z); }
};
struct SourceDeleter {
  void operator()(lmono_source* s) const { lmono_source_free(s); }
};
using ZerosPtr = std::unique_ptr<lmono_zeros, ZerosDeleter>;
using SourcePtr = std::unique_ptr<lmono_source, SourceDeleter>;

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw Exit{kExitUsage, "bad number list '" + text + "'"};
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// "5", "2..2000", "2:2000" or "2-2000".
std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    int v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw Exit{kExitUsage, "bad order range '" + text + "'"};
    }
    return v;
  };
  for (const std::string sep : {"..", ":", "-"}) {
    const auto at = text.find(sep, 1);
    if (at != std::string::npos) return {to_int(text.substr(0, at)), to_int(text.substr(at + sep.size()))};
  }
  const int k = to_int(text);
  return {k, k};
}

std::pair<double, double> parse_point(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2) throw Exit{kExitUsage, "expected re,im but got '" + text + "'"};
  return {v[0], v[1]};
}

struct Options {
  long long d = -4;
  double height = 100.0;
  double step = 0.0;
  std::string s_text;
  std::string k_text = "1";
  int k_max = 0;
  std::string method = "both";
  double tolerance = 0.0;
  double eps = 1e-6;
  std::string cache;
  bool as_json = false;
  bool as_csv = false;
  bool records = false;
  double s1 = 0.0;
  double s2 = 0.0;
  double beta = 0.99;
  long long base = -4;
  int k_start = 1;
  int span = 500;
  std::string rho0 = "0.5,6";
  std::string rho1 = "0.75,9";
  double delta = 1e-3;
  int window = 1000;
  std::vector<std::string> pairs;
};

fs::path cache_dir(const Options& o) {
  if (!o.cache.empty()) return o.cache;
  if (const char* env = std::getenv("LMONO_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') return fs::path(xdg) / "lmono";
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "lmono";
  }
  return ".lmono-cache";
}

fs::path cache_file(const Options& o) {
  return cache_dir(o) / ("d" + std::to_string(o.d) + "_T" + shortest(o.height) + ".csv");
}

void require_discriminant(long long d) {
  if (!lmono_is_fundamental_discriminant(d)) {
    throw Exit{kExitUsage, std::to_string(d) + " is not a fundamental discriminant"};
  }
}

void require_height(double height) {
  if (!(height > 0.0 && height <= 1000.0)) throw Exit{kExitUsage, "-T must lie in (0, 1000]"};
}

struct VerifiedZeros {
  ZerosPtr zeros;
  json count_check;
};

// Cached lists are always re-verified; a fresh scan is stored only once it
// passes the count check.
VerifiedZeros obtain_zeros(const Options& o) {
  require_discriminant(o.d);
  require_height(o.height);
  long long modulus = 0;
  int parity = 0;
  check(lmono_character_info(o.d, &modulus, &parity));
  const double limit = lmono_max_scan_step(modulus, o.height);
  const double step = o.step > 0.0 ? o.step : 0.5 * limit;
  if (step > limit) throw Exit{kExitUsage, "--step exceeds the anti-skip spacing " + shortest(limit)};
  const fs::path path = cache_file(o);
  VerifiedZeros out;
  if (fs::exists(path)) {
    lmono_zeros* raw = nullptr;
    check(lmono_zeros_load(path.c_str(), &raw));
    out.zeros.reset(raw);
    char* report = nullptr;
    check(lmono_zeros_verify(out.zeros.get(), &report));
    out.count_check = take_json(report);
    if (out.count_check["pass"].get<bool>()) {
      std::clog << "lmono: served from cache " << path.string() << '\n';
      return out;
    }
    std::clog << "lmono: cached list failed count_check, rescanning\n";
  }
  lmono_zeros* raw = nullptr;
  check(lmono_zeros_scan(o.d, o.height, step, &raw));
  out.zeros.reset(raw);
  char* report = nullptr;
  check(lmono_zeros_verify(out.zeros.get(), &report));
  out.count_check = take_json(report);
  if (!out.count_check["pass"].get<bool>()) {
    throw Exit{kExitData, "count_check failed: expected " + out.count_check["expected"].dump() + ", found " +
                              out.count_check["found"].dump()};
  }
  check(lmono_zeros_store(out.zeros.get(), path.c_str()));
  return out;
}

SourcePtr source_of(const lmono_zeros* zeros) {
  lmono_source* raw = nullptr;
  check(lmono_source_from_zeros(zeros, &raw));
  return SourcePtr(raw);
}

SourcePtr synthetic_source(const std::vector<double>& re, const std::vector<double>& im) {
  lmono_source* raw = nullptr;
  check(lmono_source_synthetic(re.data(), im.data(), re.size(), &raw));
  return SourcePtr(raw);
}

json constants_of(const lmono_source* source) {
  char* text = nullptr;
  check(lmono_constants_json(source, &text));
  return take_json(text);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_report(const std::string& command, const json& config, const json& constants, const json& result) {
  json report{{"tool", "lmono"},
              {"version", lmono_version()},
              {"command", command},
              {"config", config},
              {"constants", constants},
              {"result", result},
              {"timestamp", utc_timestamp()}};
  std::cout << report.dump(2) << '\n';
}

json base_config(const Options& o) {
  return json{{"d", o.d}, {"T", o.height}, {"cache", cache_dir(o).string()}};
}

double single_s(const Options& o) {
  const auto v = parse_list(o.s_text);
  if (v.size() != 1) throw Exit{kExitUsage, "-s expects one value"};
  return v[0];
}

int cmd_zeros(const Options& o) {
  VerifiedZeros z = obtain_zeros(o);
  if (o.as_csv) {
    char* text = nullptr;
    check(lmono_zeros_csv(z.zeros.get(), &text));
    std::cout << take_text(text);
    return kExitOk;
  }
  char* summary = nullptr;
  check(lmono_zeros_summary_json(z.zeros.get(), &summary));
  json result = take_json(summary);
  result["count_check"] = z.count_check;
  result["cache_file"] = cache_file(o).filename().string();
  print_report("zeros", base_config(o), nullptr, result);
  return kExitOk;
}

int cmd_deriv(const Options& o) {
  require_discriminant(o.d);
  const double s = single_s(o);
  const auto [k_lo, k_hi] = parse_range(o.k_text);
  const bool series = o.method == "series" || o.method == "both";
  const bool zerosum = o.method == "zerosum" || o.method == "both";
  if (series && !(s >= 1.2)) throw Exit{kExitUsage, "series needs s >= 1.2"};
  if (zerosum && !(s > 1.0)) throw Exit{kExitUsage, "zero sum needs s > 1"};
  if (k_lo < 0 || k_hi < k_lo) throw Exit{kExitUsage, "bad order range"};
  if (series && k_hi > 64) throw Exit{kExitUsage, "series supports k <= 64"};
  if (o.method == "zerosum" && k_lo < 1) throw Exit{kExitUsage, "zero sum needs k >= 1"};

  json config = base_config(o);
  config["s"] = s;
  config["k"] = {k_lo, k_hi};
  config["method"] = o.method;
  config["eps"] = o.eps;
  VerifiedZeros z;
  SourcePtr source;
  json constants = nullptr;
  if (zerosum) {
    z = obtain_zeros(o);
    source = source_of(z.zeros.get());
    constants = constants_of(source.get());
  }
  json rows = json::array();
  bool agree = true;
  for (int k = k_lo; k <= k_hi; ++k) {
    json row{{"k", k}};
    if (series) {
      char* text = nullptr;
      check(lmono_deriv_series_json(o.d, s, k, o.eps, &text));
      row["series"] = take_json(text);
    }
    // log L itself has no zero-sum form here; k = 0 is reported by the series alone.
    const bool paired = series && zerosum && k > 0;
    if (zerosum && k > 0) {
      char* text = nullptr;
      check(lmono_deriv_zerosum_json(source.get(), s, k, &text));
      row["zerosum"] = take_json(text);
    }
    if (paired) {
      const json& a = row["series"];
      const json& b = row["zerosum"];
      const double residual = std::abs(a["value"].get<double>() - b["value"].get<double>());
      const double bound = a["error_bound"].get<double>() + b["error_bound"].get<double>();
      row["residual"] = residual;
      row["combined_bound"] = bound;
      row["agree"] = residual <= bound;
      agree = agree && residual <= bound;
    }
    rows.push_back(row);
  }
  print_report("deriv", config, constants, json{{"values", rows}});
  return agree ? kExitOk : kExitCertificate;
}

int cmd_constants(const Options& o) {
  VerifiedZeros z = obtain_zeros(o);
  SourcePtr source = source_of(z.zeros.get());
  const json constants = constants_of(source.get());
  print_report("constants", base_config(o), constants, constants);
  return kExitOk;
}

int cmd_scan(const Options& o) {
  const auto interval = parse_list(o.s_text);
  if (interval.size() != 2) throw Exit{kExitUsage, "scan expects -s a,b"};
  const double a = interval[0];
  const double b = interval[1];
  if (!(b - a >= 1e-3)) throw Exit{kExitUsage, "scan needs b - a >= 1e-3"};
  if (o.k_max < 0 || o.k_max > 1000000) throw Exit{kExitUsage, "--kmax must lie in [0, 1e6]"};
  VerifiedZeros z = obtain_zeros(o);
  SourcePtr source = source_of(z.zeros.get());
  const json constants = constants_of(source.get());
  if (!(a > constants["c_chi"].get<double>())) throw Exit{kExitUsage, "scan needs a > c_chi"};
  long long k_star = 0;
  check(lmono_scan_onset(source.get(), a, b, &k_star));
  const long long k_max = o.k_max > 0 ? o.k_max : 3 * k_star;
  if (k_max > 1000000) throw Exit{kExitUsage, "3 K* exceeds 1e6; pass --kmax"};
  json config = base_config(o);
  config["interval"] = {a, b};
  config["kmax"] = k_max;
  config["tolerance"] = o.tolerance;
  char* text = nullptr;
  const int status = lmono_scan_json(source.get(), a, b, static_cast<int>(k_max), o.tolerance, &text);
  if (status == LMONO_E_NO_FINDINGS) {
    print_report("scan", config, constants,
                 json{{"k_star", k_star}, {"no_findings", true}, {"message", lmono_last_error()}});
    return kExitOk;
  }
  check(status);
  json result = take_json(text);
  print_report("scan", config, constants, result);
  const bool onset_reached = k_max >= k_star;
  return onset_reached && result["certified_count"].get<int>() == 0 ? kExitCertificate : kExitOk;
}

int cmd_fingerprint(const Options& o) {
  const double s = single_s(o);
  if (!(s > 1.0)) throw Exit{kExitUsage, "fingerprint needs s > 1"};
  const auto [k_lo, k_hi] = parse_range(o.k_text);
  if (k_lo < 2 || k_hi < k_lo || k_hi - k_lo >= 100000) throw Exit{kExitUsage, "need 2 <= k_min <= k_max, span <= 1e5"};
  VerifiedZeros z = obtain_zeros(o);
  SourcePtr source = source_of(z.zeros.get());
  const json constants = constants_of(source.get());
  if (!(s > constants["c_chi"].get<double>())) throw Exit{kExitUsage, "fingerprint needs s > c_chi"};
  if (o.records || o.as_csv) {
    char* text = nullptr;
    check(lmono_fingerprint_records(source.get(), s, k_lo, k_hi, o.tolerance, &text));
    std::cout << take_text(text);
    return kExitOk;
  }
  json config = base_config(o);
  config["s"] = s;
  config["k"] = {k_lo, k_hi};
  config["tolerance"] = o.tolerance;
  char* text = nullptr;
  check(lmono_fingerprint_json(source.get(), s, k_lo, k_hi, o.tolerance, &text));
  print_report("fingerprint", config, constants, take_json(text));
  return kExitOk;
}

int cmd_compare(const Options& o) {
  if (!(o.s1 <= o.s2)) throw Exit{kExitUsage, "compare needs s1 <= s2"};
  if (o.k_max < 0 || o.k_max > 100000) throw Exit{kExitUsage, "--kmax must lie in [0, 1e5]"};
  VerifiedZeros z = obtain_zeros(o);
  SourcePtr source = source_of(z.zeros.get());
  const json constants = constants_of(source.get());
  const double big_c = constants["C_chi"].get<double>();
  if (!(big_c < o.s1 && o.s1 <= o.s2)) throw Exit{kExitUsage, "compare needs C_chi < s1 <= s2 (C_chi = " + shortest(big_c) + ")"};
  const int k_max = o.k_max > 0 ? o.k_max : 100000;
  json config = base_config(o);
  config["s1"] = o.s1;
  config["s2"] = o.s2;
  config["kmax"] = k_max;
  config["tolerance"] = o.tolerance;
  char* text = nullptr;
  check(lmono_compare_json(source.get(), o.s1, o.s2, k_max, o.tolerance, &text));
  print_report("compare", config, constants, take_json(text));
  return kExitOk;
}

int cmd_siegel(const Options& o) {
  if (!(o.beta > 0.0 && o.beta < 1.0)) throw Exit{kExitUsage, "--beta must lie in (0, 1)"};
  const auto s_values = parse_list(o.s_text.empty() ? "2,3,5" : o.s_text);
  std::vector<double> re;
  std::vector<double> im;
  json config{{"beta", o.beta}, {"s", s_values}, {"kstart", o.k_start}, {"span", o.span}};
  if (o.base != 0) {
    Options base = o;
    base.d = o.base;
    VerifiedZeros z = obtain_zeros(base);
    for (std::size_t i = 0; i < lmono_zeros_count(z.zeros.get()); ++i) {
      re.push_back(0.5);
      im.push_back(lmono_zeros_ordinate(z.zeros.get(), i));
    }
    config["base"] = o.base;
    config["T"] = o.height;
  }
  for (const auto& p : o.pairs) {
    const auto [x, y] = parse_point(p);
    re.push_back(x);
    im.push_back(y);
  }
  config["pairs"] = o.pairs;
  json constants = nullptr;
  if (!re.empty()) constants = constants_of(synthetic_source(re, im).get());
  re.push_back(o.beta);
  im.push_back(0.0);
  char* text = nullptr;
  check(lmono_siegel_json(re.data(), im.data(), re.size(), s_values.data(), s_values.size(), o.k_start, o.span, &text));
  const json result = take_json(text);
  print_report("synth siegel", config, constants, result);
  return result["stable"].get<bool>() ? kExitOk : kExitCertificate;
}

int cmd_offline(const Options& o) {
  const auto [r0, i0] = parse_point(o.rho0);
  const auto [r1, i1] = parse_point(o.rho1);
  const json config{{"rho0", {r0, i0}}, {"rho1", {r1, i1}}, {"delta", o.delta}, {"window", o.window}};
  const json constants = constants_of(synthetic_source({r0, r1}, {i0, i1}).get());
  char* text = nullptr;
  check(lmono_offline_pair_json(r0, i0, r1, i1, o.delta, o.window, &text));
  const json result = take_json(text);
  print_report("synth offline", config, constants, result);
  return result["certificate"].get<bool>() ? kExitOk : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign structure of derivatives of log L(s, chi) for real primitive characters"};
  app.set_version_flag("--version", std::string(lmono_version()));
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", o.as_json, "JSON report (default)");
    auto* c = cmd->add_flag("--csv", o.as_csv, "CSV output where supported");
    j->excludes(c);
  };
  auto add_zero_options = [&](CLI::App* cmd) {
    cmd->add_option("-d", o.d, "Fundamental discriminant")->required();
    cmd->add_option("-T", o.height, "Zero list height")->capture_default_str();
    cmd->add_option("--step", o.step, "Scan grid step (default: half the anti-skip spacing)");
    cmd->add_option("--cache", o.cache, "Zero cache directory (else $LMONO_CACHE)");
  };

  auto* zeros = app.add_subcommand("zeros", "Scan, verify and cache zeros on the critical line");
  add_zero_options(zeros);
  add_format(zeros);

  auto* deriv = app.add_subcommand("deriv", "k-th derivative of log L at real s");
  add_zero_options(deriv);
  deriv->add_option("-s", o.s_text, "Real point s")->required();
  deriv->add_option("-k", o.k_text, "Order or range a..b")->capture_default_str();
  deriv->add_option("--method", o.method, "series, zerosum or both")
      ->check(CLI::IsMember({"series", "zerosum", "both"}))
      ->capture_default_str();
  deriv->add_option("--eps", o.eps, "Series accuracy target")->capture_default_str();
  add_format(deriv);

  auto* scan = app.add_subcommand("scan", "Locate sign changes of F^(k) inside an interval");
  add_zero_options(scan);
  scan->add_option("-s", o.s_text, "Interval a,b")->required();
  scan->add_option("--kmax", o.k_max, "Largest order (default 3 K*)");
  scan->add_option("--tolerance", o.tolerance, "Extra margin for certified signs");
  add_format(scan);

  auto* fp = app.add_subcommand("fingerprint", "Sign trits of F^(k)(s) over a range of orders");
  add_zero_options(fp);
  fp->add_option("-s", o.s_text, "Real point s")->required();
  fp->add_option("-k", o.k_text, "Order range a..b")->required();
  fp->add_option("--tolerance", o.tolerance, "Extra margin for definite trits");
  fp->add_flag("--records", o.records, "Line records instead of JSON");
  add_format(fp);

  auto* cmp = app.add_subcommand("compare", "First order separating the fingerprints at s1 and s2");
  add_zero_options(cmp);
  cmp->add_option("--s1", o.s1, "First point")->required();
  cmp->add_option("--s2", o.s2, "Second point")->required();
  cmp->add_option("--kmax", o.k_max, "Largest order (default 1e5)");
  cmp->add_option("--tolerance", o.tolerance, "Extra margin for definite trits");
  add_format(cmp);

  auto* constants = app.add_subcommand("constants", "gamma0, c_chi, b_chi, C_chi and D_chi");
  add_zero_options(constants);
  add_format(constants);

  auto* synth = app.add_subcommand("synth", "Synthetic zero configurations");
  synth->require_subcommand(1);
  auto* siegel = synth->add_subcommand("siegel", "Sign stability forced by a dominant real zero");
  siegel->add_option("--beta", o.beta, "Real zero beta")->capture_default_str();
  siegel->add_option("--base", o.base, "Take critical zeros of this discriminant (0 for none)")->capture_default_str();
  siegel->add_option("-T", o.height, "Height of the base zero list")->capture_default_str();
  siegel->add_option("--cache", o.cache, "Zero cache directory");
  siegel->add_option("-s,--s", o.s_text, "Points s, comma separated");
  siegel->add_option("--kstart", o.k_start, "First order searched for M")->capture_default_str();
  siegel->add_option("--span", o.span, "Orders verified past M")->capture_default_str();
  siegel->add_option("--pair", o.pairs, "Extra zero re,im (repeatable)");
  add_format(siegel);
  auto* offline = synth->add_subcommand("offline", "Two-zero configuration with an off-line zero");
  offline->add_option("--rho0", o.rho0, "Critical zero re,im")->capture_default_str();
  offline->add_option("--rho1", o.rho1, "Off-line zero re,im")->capture_default_str();
  offline->add_option("--delta", o.delta, "Angle tolerance")->capture_default_str();
  offline->add_option("--window", o.window, "Orders compared past N")->capture_default_str();
  add_format(offline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (zeros->parsed()) return cmd_zeros(o);
    if (deriv->parsed()) return cmd_deriv(o);
    if (scan->parsed()) return cmd_scan(o);
    if (fp->parsed()) return cmd_fingerprint(o);
    if (cmp->parsed()) return cmd_compare(o);
    if (constants->parsed()) return cmd_constants(o);
    if (siegel->parsed()) return cmd_siegel(o);
    if (offline->parsed()) return cmd_offline(o);
  } catch (const Exit& e) {
    std::cerr << "lmono: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "lmono: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
