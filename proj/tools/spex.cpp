// Command-line surface for the spectral extremal graph library.
//
// Subcommands: construct | rho | minor-check | property-check | search |
// showdown | verify | report.  Exit codes: 0 success / verification pass,
// 1 verification failure, 2 usage or input error.  All output is
// byte-stable for fixed inputs; a wall-clock footer appears only behind
// the explicit --footer flag.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <spex/errors.hpp>
#include <spex/families.hpp>
#include <spex/graph.hpp>
#include <spex/graph6.hpp>
#include <spex/minor.hpp>
#include <spex/search.hpp>
#include <spex/spectral.hpp>

namespace {

using nlohmann::json;

// "%g" prints 1e-9 as "1e-09"; strip the exponent's leading zeros so widths
// echo back exactly as users write them.
std::string format_width(double w) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", w);
  std::string s = buf;
  const std::size_t e = s.find('e');
  if (e != std::string::npos && e + 2 < s.size()) {
    std::size_t digit = e + 2;  // skip the sign
    while (digit + 1 < s.size() && s[digit] == '0') s.erase(digit, 1);
  }
  return s;
}

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string scientific3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string interval_text(const spex::RootInterval& iv) {
  return "[" + fixed(iv.lo, 12) + ", " + fixed(iv.hi, 12) + "]";
}

spex::Graph load_graph(const std::string& g6_text) {
  return spex::graph6_decode(g6_text);
}

spex::SearchConstraint parse_constraint(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (head == "pattern-free") {
    return spex::SearchConstraint::pattern_free(spex::MinorPattern::parse(rest));
  }
  int s = -1, t = -1;
  std::stringstream ss(rest);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.rfind("s=", 0) == 0) {
      s = std::stoi(piece.substr(2));
    } else if (piece.rfind("t=", 0) == 0) {
      t = std::stoi(piece.substr(2));
    } else if (!piece.empty()) {
      throw spex::ParseError("bad constraint parameter '" + piece + "' in '" +
                             text + "'");
    }
  }
  if (head == "kst-minor-free") return spex::SearchConstraint::kst_minor_free(s, t);
  if (head == "k1t-minor-free") return spex::SearchConstraint::k1t_minor_free(t);
  if (head == "st-property") return spex::SearchConstraint::st_property(s, t);
  throw spex::ParseError(
      "unknown constraint '" + head +
      "' (expected kst-minor-free | k1t-minor-free | st-property | pattern-free)");
}

spex::PruningMode parse_pruning(const std::string& text) {
  if (text == "none") return spex::PruningMode::None;
  if (text == "edge-bound") return spex::PruningMode::EdgeBound;
  if (text == "majorization") return spex::PruningMode::MajorizationHeuristic;
  throw spex::ParseError("unknown pruning mode '" + text +
                         "' (expected none | edge-bound | majorization)");
}

void print_verify_report(const spex::VerifyReport& report) {
  std::printf("[%s] %s: %s\n", report.tag.c_str(),
              report.pass ? "PASS" : "FAIL", report.summary.c_str());
  for (const std::string& line : report.details) {
    std::printf("  %s\n", line.c_str());
  }
  const std::size_t shown =
      std::min<std::size_t>(report.counterexamples.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    std::printf("  counterexample: %s\n", report.counterexamples[i].c_str());
  }
  if (report.counterexamples.size() > shown) {
    std::printf("  ... %zu more counterexamples\n",
                report.counterexamples.size() - shown);
  }
}

struct VerifyCampaign {
  std::string tag;
  spex::VerifyParams params;
};

// Plain key=value campaign files: each `theorem=` line opens a new campaign;
// s/t/n/n-min/n-max lines parameterize the current one; '#' starts a comment.
std::vector<VerifyCampaign> parse_campaign_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spex::ParseError("cannot open config file '" + path + "'");
  std::vector<VerifyCampaign> campaigns;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line.erase(0, start);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw spex::ParseError(path + ":" + std::to_string(lineno) +
                             ": expected key=value, got '" + line + "'");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "theorem") {
      campaigns.push_back({value, {}});
      continue;
    }
    if (campaigns.empty()) {
      throw spex::ParseError(path + ":" + std::to_string(lineno) +
                             ": parameter before any theorem= line");
    }
    spex::VerifyParams& p = campaigns.back().params;
    if (key == "s") p.s = std::stoi(value);
    else if (key == "t") p.t = std::stoi(value);
    else if (key == "n") p.n = std::stoi(value);
    else if (key == "n-min") p.n_min = std::stoi(value);
    else if (key == "n-max") p.n_max = std::stoi(value);
    else {
      throw spex::ParseError(path + ":" + std::to_string(lineno) +
                             ": unknown key '" + key + "'");
    }
  }
  if (campaigns.empty()) {
    throw spex::ParseError(path + ": no theorem= campaigns declared");
  }
  return campaigns;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw spex::ParseError("cannot open '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw spex::ParseError(path.string() + ": " + e.what());
  }
  return j;
}

std::string cert_rho_text(const json& rho) {
  if (rho.is_null()) return "-";
  return "[" + fixed(rho.at("lo").get<double>(), 12) + ", " +
         fixed(rho.at("hi").get<double>(), 12) + "]";
}

std::string cert_gap_text(const json& cert) {
  const json& gap = cert.at("gap_lower_bound");
  if (gap.is_null()) return "-";
  std::string text = ">= " + scientific3(gap.get<double>());
  if (cert.at("gap_exact").get<bool>()) text += " (exact)";
  return text;
}

int run_report(const std::string& dir, const std::string& format) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    throw spex::ParseError("no .json certificates in '" + dir + "'");
  }

  std::vector<std::pair<std::string, json>> certs;
  for (const auto& path : paths) {
    json j = read_certificate(path);
    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != 1) {
      std::fprintf(stderr, "refusing %s: unsupported certificate schema\n",
                   path.filename().string().c_str());
      return 1;
    }
    certs.emplace_back(path.filename().string(), std::move(j));
  }

  if (format == "csv") {
    std::printf(
        "file,n,scope,constraint,pruning,classes_examined,feasible_count,"
        "winner,winner_rho_lo,winner_rho_hi,co_winners,runner_up,"
        "gap_lower_bound,gap_exact,config_hash\n");
    for (const auto& [name, c] : certs) {
      const json& spec = c.at("spec");
      std::string co;
      for (const auto& w : c.at("co_winners")) {
        if (!co.empty()) co += ';';
        co += w.get<std::string>();
      }
      const json& wrho = c.at("winner_rho");
      std::printf(
          "%s,%d,%s,%s,%s,%lld,%lld,%s,%s,%s,%s,%s,%s,%s,%s\n",
          csv_quote(name).c_str(), spec.at("n").get<int>(),
          csv_quote(spec.at("scope").get<std::string>()).c_str(),
          csv_quote(spec.at("constraint").get<std::string>()).c_str(),
          csv_quote(spec.at("pruning").get<std::string>()).c_str(),
          static_cast<long long>(c.at("classes_examined").get<long long>()),
          static_cast<long long>(c.at("feasible_count").get<long long>()),
          csv_quote(c.at("winner").is_null()
                        ? "-"
                        : c.at("winner").get<std::string>())
              .c_str(),
          wrho.is_null() ? "-" : fixed(wrho.at("lo").get<double>(), 12).c_str(),
          wrho.is_null() ? "-" : fixed(wrho.at("hi").get<double>(), 12).c_str(),
          csv_quote(co).c_str(),
          csv_quote(c.at("runner_up").is_null()
                        ? "-"
                        : c.at("runner_up").get<std::string>())
              .c_str(),
          c.at("gap_lower_bound").is_null()
              ? "-"
              : scientific3(c.at("gap_lower_bound").get<double>()).c_str(),
          c.at("gap_exact").get<bool>() ? "true" : "false",
          csv_quote(c.at("config_hash").get<std::string>()).c_str());
    }
    return 0;
  }

  // Markdown.
  std::printf(
      "| file | constraint | n | scope | classes | feasible | winner | rho "
      "| gap | hash |\n");
  std::printf("|---|---|---|---|---|---|---|---|---|---|\n");
  for (const auto& [name, c] : certs) {
    const json& spec = c.at("spec");
    std::printf(
        "| %s | %s | %d | %s | %lld | %lld | %s | %s | %s | %s |\n",
        name.c_str(), spec.at("constraint").get<std::string>().c_str(),
        spec.at("n").get<int>(), spec.at("scope").get<std::string>().c_str(),
        static_cast<long long>(c.at("classes_examined").get<long long>()),
        static_cast<long long>(c.at("feasible_count").get<long long>()),
        c.at("winner").is_null() ? "-"
                                 : c.at("winner").get<std::string>().c_str(),
        cert_rho_text(c.at("winner_rho")).c_str(),
        cert_gap_text(c).c_str(),
        c.at("config_hash").get<std::string>().c_str());
  }
  return 0;
}

void print_showdown_table(const spex::ShowdownResult& result) {
  std::printf("showdown n=%d s=%d t=%d\n", result.n, result.s, result.t);
  std::printf("%4s  %-30s  %-36s  %s\n", "rank", "construction",
              "rho enclosure", "gap to next");
  for (std::size_t i = 0; i < result.ranked.size(); ++i) {
    const spex::ShowdownEntry& entry = result.ranked[i];
    std::string gap;
    if (i + 1 < result.ranked.size()) {
      gap = result.adjacent_gaps[i] > 0
                ? ">= " + scientific3(result.adjacent_gaps[i])
                : "tie (exact)";
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3zu%c  %-30s  %-36s  %s", i + 1,
                  entry.designated ? '*' : ' ', entry.label.c_str(),
                  interval_text(entry.rho).c_str(), gap.c_str());
    std::string line = buf;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::printf("%s\n", line.c_str());
  }
  std::printf("constructions:\n");
  for (const spex::ShowdownEntry& entry : result.ranked) {
    std::printf("  %s: %s = %s\n", entry.label.c_str(),
                entry.description.c_str(),
                spex::graph6_encode(entry.graph).c_str());
  }
  const spex::ShowdownEntry& designated =
      result.ranked[static_cast<std::size_t>(result.designated_index)];
  std::printf("designated: %s (rank %d) — strictly first: %s\n",
              designated.label.c_str(), result.designated_index + 1,
              result.designated_strictly_first ? "yes" : "no");
}

json showdown_json(const spex::ShowdownResult& result) {
  json j;
  j["n"] = result.n;
  j["s"] = result.s;
  j["t"] = result.t;
  j["ranked"] = json::array();
  for (const spex::ShowdownEntry& entry : result.ranked) {
    j["ranked"].push_back({{"label", entry.label},
                           {"description", entry.description},
                           {"graph6", spex::graph6_encode(entry.graph)},
                           {"rho", {{"lo", entry.rho.lo}, {"hi", entry.rho.hi}}},
                           {"designated", entry.designated}});
  }
  j["adjacent_gaps"] = result.adjacent_gaps;
  j["designated_index"] = result.designated_index;
  j["designated_strictly_first"] = result.designated_strictly_first;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral extremal graph toolkit"};
  app.require_subcommand(1);
  bool footer = false;
  app.add_flag("--footer", footer,
               "append a footer with the wall-clock time (the only "
               "non-deterministic output)");

  // construct
  auto* construct =
      app.add_subcommand("construct", "build a named family member, print graph6");
  std::string family_text;
  construct
      ->add_option("--family", family_text,
                   "descriptor: complete:n=5 | completebipartite:a=2,b=3 | "
                   "star:t=4 | path:n=5 | cycle:n=6 | starforest:s=2,t=5 | "
                   "starforestcomplement:s=2,t=5 | "
                   "subdividedcomplement:s=2,t=5 | petersen | "
                   "petersencomplement | habc:a=1,b=2,c=2 | "
                   "habccomplement:a=1,b=2,c=2 | hprime:a=1,b=1,c=2 | "
                   "tait:n=13,s=2,t=3 | extremal:n=22,s=5,t=8 | "
                   "subdividedclique:n=7,t=3 | matchingdeletedclique:t=3 | "
                   "cliqueminusedge:t=4 | h1tcomplement:t=4")
      ->required();

  // rho
  auto* rho_cmd = app.add_subcommand("rho", "rigorous spectral-radius enclosure");
  std::string rho_g6, rho_family;
  double rho_width = 1e-9;
  bool rho_json = false;
  rho_cmd->add_option("--g6", rho_g6, "graph6 input");
  rho_cmd->add_option("--family", rho_family, "family descriptor input");
  rho_cmd->add_option("--width", rho_width, "maximum enclosure width")
      ->default_str("1e-9");
  rho_cmd->add_flag("--json", rho_json, "emit the enclosure as JSON");

  // minor-check
  auto* minor_cmd = app.add_subcommand("minor-check", "decide minor containment");
  std::string minor_g6, minor_pattern, minor_mode = "fast";
  bool minor_witness = false;
  minor_cmd->add_option("--g6", minor_g6, "host graph (graph6)")->required();
  minor_cmd
      ->add_option("--pattern", minor_pattern,
                   "star:<leaves> | biclique:<a>,<b> | explicit:<graph6>")
      ->required();
  minor_cmd->add_option("--mode", minor_mode, "fast | brute")
      ->check(CLI::IsMember({"fast", "brute"}))
      ->default_str("fast");
  minor_cmd->add_flag("--witness", minor_witness,
                      "print the verified branch model as JSON");

  // property-check
  auto* prop_cmd = app.add_subcommand(
      "property-check", "decide the biclique-minor-freeness property");
  std::string prop_g6;
  int prop_s = -1, prop_t = -1;
  bool prop_by_definition = false;
  prop_cmd->add_option("--g6", prop_g6, "graph to test (graph6)")->required();
  prop_cmd->add_option("--s", prop_s, "parameter s")->required();
  prop_cmd->add_option("--t", prop_t, "parameter t")->required();
  prop_cmd->add_flag("--by-definition", prop_by_definition,
                     "use unfiltered whole-graph pattern searches (audit path)");

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "exhaustive spectral-extremal search with JSON certificate");
  int search_n = 0;
  std::string search_constraint, search_pruning = "none", search_out;
  bool search_all = false;
  search_cmd->add_option("--n", search_n, "graph order")->required();
  search_cmd
      ->add_option("--constraint", search_constraint,
                   "kst-minor-free:s=2,t=5 | k1t-minor-free:t=6 | "
                   "st-property:s=2,t=5 | pattern-free:star:4")
      ->required();
  search_cmd->add_option("--pruning", search_pruning,
                         "none | edge-bound | majorization (lossy heuristic)")
      ->check(CLI::IsMember({"none", "edge-bound", "majorization"}))
      ->default_str("none");
  search_cmd->add_flag("--all-graphs", search_all,
                       "search all graphs, not just connected ones");
  search_cmd->add_option("--out", search_out,
                         "also write the certificate JSON to this file");

  // showdown
  auto* showdown_cmd = app.add_subcommand(
      "showdown", "rank the candidate constructions at (n, s, t)");
  int sd_n = 0, sd_s = 0, sd_t = 0;
  bool sd_json = false;
  showdown_cmd->add_option("--n", sd_n, "total order")->required();
  showdown_cmd->add_option("--s", sd_s, "parameter s")->required();
  showdown_cmd->add_option("--t", sd_t, "parameter t")->required();
  showdown_cmd->add_flag("--json", sd_json, "emit the ranking as JSON");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run an exhaustive or construction-based statement check");
  std::string verify_tag, verify_config;
  spex::VerifyParams verify_params;
  verify_cmd->add_option("--theorem", verify_tag,
                         "one of: thm1.1 thm1.3 thm1.4 thm1.5 lemma2.2 "
                         "lemma3.0 lemma3.1 thm3.1 lemma3.3");
  verify_cmd->add_option("--s", verify_params.s, "parameter s");
  verify_cmd->add_option("--t", verify_params.t, "parameter t");
  verify_cmd->add_option("--n", verify_params.n, "single order");
  verify_cmd->add_option("--n-min", verify_params.n_min, "sweep start order");
  verify_cmd->add_option("--n-max", verify_params.n_max, "sweep end order");
  verify_cmd->add_option("--config", verify_config,
                         "key=value campaign file (theorem= starts a campaign)");

  // report
  auto* report_cmd = app.add_subcommand(
      "report", "render a directory of certificate JSON files as a table");
  std::string report_dir, report_format = "markdown";
  report_cmd->add_option("--dir", report_dir, "certificate directory")
      ->required();
  report_cmd->add_option("--format", report_format, "markdown | csv")
      ->check(CLI::IsMember({"markdown", "csv"}))
      ->default_str("markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int rc = 0;
  try {
    if (*construct) {
      const spex::Graph g =
          spex::build_family(spex::parse_family(family_text));
      std::printf("%s\n", spex::graph6_encode(g).c_str());
    } else if (*rho_cmd) {
      if (rho_g6.empty() == rho_family.empty()) {
        throw spex::ParseError("rho needs exactly one of --g6 / --family");
      }
      const spex::Graph g = rho_g6.empty()
                                ? spex::build_family(spex::parse_family(rho_family))
                                : load_graph(rho_g6);
      const spex::RhoResult result = spex::rho_enclosure(g, rho_width);
      if (rho_json) {
        json j;
        j["lo"] = result.interval.lo;
        j["hi"] = result.interval.hi;
        j["width"] = rho_width;
        j["disconnected"] = result.disconnected;
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        const double mid = (result.interval.lo + result.interval.hi) / 2;
        std::printf("%s ± %s\n", fixed(mid, 9).c_str(),
                    format_width(rho_width).c_str());
      }
    } else if (*minor_cmd) {
      const spex::Graph host = load_graph(minor_g6);
      const spex::MinorPattern pattern = spex::MinorPattern::parse(minor_pattern);
      const spex::MinorSearchMode mode = minor_mode == "brute"
                                             ? spex::MinorSearchMode::BruteForce
                                             : spex::MinorSearchMode::Fast;
      if (minor_witness) {
        const std::optional<spex::BranchModel> model =
            spex::find_minor(host, pattern, mode);
        if (model) {
          json j;
          j["pattern"] = pattern.to_string();
          j["branch_sets"] = model->branch_sets;
          std::printf("minor\n%s\n", j.dump().c_str());
        } else {
          std::printf("no minor\n");
        }
      } else {
        std::printf("%s\n",
                    spex::has_minor(host, pattern, mode) ? "minor" : "no minor");
      }
    } else if (*prop_cmd) {
      const spex::Graph g = load_graph(prop_g6);
      const bool has =
          prop_by_definition
              ? spex::has_st_property_by_definition(g, prop_s, prop_t)
              : spex::has_st_property(g, prop_s, prop_t);
      std::printf("%s (%d,%d)-property\n", has ? "has" : "lacks", prop_s,
                  prop_t);
    } else if (*search_cmd) {
      spex::SearchSpec spec;
      spec.n = search_n;
      spec.connected_only = !search_all;
      spec.constraint = parse_constraint(search_constraint);
      spec.pruning = parse_pruning(search_pruning);
      const spex::SearchCertificate cert = spex::search_extremal(spec);
      const std::string payload = cert.to_json();
      if (!search_out.empty()) {
        std::ofstream out(search_out, std::ios::binary);
        if (!out) {
          throw spex::ParseError("cannot write '" + search_out + "'");
        }
        out << payload;
      }
      std::fputs(payload.c_str(), stdout);
    } else if (*showdown_cmd) {
      const spex::ShowdownResult result = spex::candidate_showdown(sd_n, sd_s, sd_t);
      if (sd_json) {
        std::printf("%s\n", showdown_json(result).dump(2).c_str());
      } else {
        print_showdown_table(result);
      }
    } else if (*verify_cmd) {
      if (verify_tag.empty() == verify_config.empty()) {
        throw spex::ParseError("verify needs exactly one of --theorem / --config");
      }
      std::vector<VerifyCampaign> campaigns;
      if (!verify_config.empty()) {
        campaigns = parse_campaign_file(verify_config);
      } else {
        campaigns.push_back({verify_tag, verify_params});
      }
      bool all_pass = true;
      for (std::size_t i = 0; i < campaigns.size(); ++i) {
        if (i > 0) std::printf("\n");
        const spex::VerifyReport report =
            spex::verify_theorem(campaigns[i].tag, campaigns[i].params);
        print_verify_report(report);
        all_pass = all_pass && report.pass;
      }
      rc = all_pass ? 0 : 1;
    } else if (*report_cmd) {
      rc = run_report(report_dir, report_format);
    }
  } catch (const spex::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const spex::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const spex::CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const spex::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  if (footer) {
    char buf[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc;
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    std::printf("# completed %s\n", buf);
  }
  return rc;
}
