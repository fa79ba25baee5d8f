// unitforge: batch driver for unit constructions, hypothesis scans,
// condition checkers and exact freeness oracles over integral group rings.
//
// Exit codes: 0 success, 1 usage/internal error, 2 hypothesis violation,
// 3 oracle violation (with witness), 4 inconclusive numeric margin.

#include "unitforge/catalog.hpp"
#include "unitforge/json_io.hpp"
#include "unitforge/pipelines.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace unitforge;

namespace {

constexpr int EXIT_USAGE = 1;
constexpr int EXIT_HYPOTHESIS = 2;
constexpr int EXIT_ORACLE_VIOLATION = 3;
constexpr int EXIT_INCONCLUSIVE = 4;

Elt require_elt(const GroupPtr &G, const std::string &name,
                const std::string &flag) {
  Elt x = G->find_name(name);
  if (x < 0)
    throw UnknownGroup("no element named '" + name + "' (flag " + flag + ")");
  return x;
}

void emit(const Json &j, const std::string &json_path) {
  if (json_path.empty())
    return;
  std::ofstream out(json_path);
  out << j.dump(2) << "\n";
}

int verdict_exit(const FreenessReport &r) {
  switch (r.verdict) {
  case Verdict::CERTIFIED_CONDITION:
  case Verdict::PASSED_TO_BOUND:
    return 0;
  case Verdict::VIOLATION:
    return EXIT_ORACLE_VIOLATION;
  case Verdict::INCONCLUSIVE:
    return EXIT_INCONCLUSIVE;
  }
  return EXIT_USAGE;
}

int combine_exit(int a, int b) {
  // violation dominates inconclusive dominates success
  if (a == EXIT_ORACLE_VIOLATION || b == EXIT_ORACLE_VIOLATION)
    return EXIT_ORACLE_VIOLATION;
  return std::max(a, b);
}

void print_report(const std::string &label, const FreenessReport &r) {
  std::cout << label << ": " << verdict_name(r.verdict);
  if (r.words_checked > 0)
    std::cout << " (" << r.words_checked << " words, bound "
              << r.bound_reached << ")";
  if (!r.witness.empty()) {
    std::cout << " witness:";
    for (const auto &syl : r.witness)
      std::cout << " " << syl.first << "^" << syl.second;
  }
  if (!r.notes.empty())
    std::cout << "\n  " << r.notes;
  std::cout << "\n";
}

int cmd_group_info(const std::string &key, const std::string &json_path) {
  GroupPtr G = load_group(key);
  Json j = group_info_json(G);
  std::cout << "group " << key << ": order " << G->order();
  if (j["abelian"].get<bool>())
    std::cout << ", abelian";
  else if (!j["nilpotency_class"].is_null())
    std::cout << ", nilpotency class " << j["nilpotency_class"].get<int>();
  else
    std::cout << ", not nilpotent";
  std::cout << "\ncenter:";
  for (const auto &z : j["center"])
    std::cout << " " << z.get<std::string>();
  std::cout << "\nelement orders:";
  for (int i = 0; i < G->order(); ++i)
    std::cout << " " << G->name(i) << ":" << j["element_orders"][static_cast<std::size_t>(i)].get<int>();
  std::cout << "\n";
  emit(j, json_path);
  return 0;
}

int cmd_scan(const std::string &key, const std::string &tag_str,
             const std::string &json_path) {
  GroupPtr G = load_group(key);
  std::vector<ScanResult> results;
  if (tag_str.empty()) {
    results = scan_group(G);
  } else {
    auto tag = tag_from_string(tag_str);
    if (!tag)
      throw UnknownGroup("unknown theorem tag '" + tag_str + "'");
    results = scan_group(G, *tag);
  }
  Json arr = Json::array();
  for (const auto &r : results) {
    std::cout << "g=" << G->name(r.g) << " h=" << G->name(r.h) << " ["
              << r.notes << "]:";
    Json tags = Json::array();
    for (TheoremTag t : r.tags) {
      std::cout << " " << tag_name(t);
      tags.push_back(tag_name(t));
    }
    std::cout << "\n";
    Json jr;
    jr["g"] = G->name(r.g);
    jr["h"] = G->name(r.h);
    jr["tags"] = std::move(tags);
    jr["notes"] = r.notes;
    arr.push_back(std::move(jr));
  }
  if (results.empty())
    std::cout << "(no pairs satisfy the hypotheses)\n";
  Json j;
  j["group"] = key;
  j["scan"] = std::move(arr);
  emit(j, json_path);
  return 0;
}

struct CheckArgs {
  std::string key, tag, g_name, h_name, json_path;
  long k = 0, l = 0, t = 0; // 0 = unset (defaults to 1; lemma31: all k)
  long len = -1, syllables = -1;
  unsigned long seed = 1;
  std::vector<std::string> bass; // "k,m" entries

  long k_or(long def) const { return k == 0 ? def : k; }
  long l_or(long def) const { return l == 0 ? def : l; }
  long t_or(long def) const { return t == 0 ? def : t; }
};

std::pair<long, long> parse_bass(const std::string &s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw UnknownGroup("--bass expects 'k,m'");
  return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

int cmd_check(const CheckArgs &args) {
  GroupPtr G = load_group(args.key);
  auto tag = tag_from_string(args.tag);
  if (!tag)
    throw UnknownGroup("unknown theorem tag '" + args.tag + "'");
  Elt g = require_elt(G, args.g_name, "--g");
  Elt h = require_elt(G, args.h_name, "--h");

  Json j;
  j["group"] = args.key;
  j["tag"] = tag_name(*tag);
  j["g"] = args.g_name;
  j["h"] = args.h_name;

  switch (*tag) {
  case TheoremTag::LEMMA31: {
    long oh = element_order(G, h);
    Json arr = Json::array();
    bool all_agree = true;
    for (long k = 1; k < oh; ++k) {
      if (args.k != 0 && k != args.k)
        continue; // --k restricts to a single exponent
      OrderCheckResult r = lemma31_case(G, g, h, k);
      std::cout << "k=" << k << " predicted " << r.predicted.to_string()
                << ", certificate: " << r.verified.certificate
                << (r.agree ? " [agree]" : " [DISAGREE]") << "\n";
      Json jr;
      jr["k"] = k;
      jr["predicted"] = r.predicted.to_string();
      jr["certificate"] = r.verified.certificate;
      jr["agree"] = r.agree;
      arr.push_back(std::move(jr));
      all_agree = all_agree && r.agree;
    }
    j["cases"] = std::move(arr);
    emit(j, args.json_path);
    return all_agree ? 0 : EXIT_ORACLE_VIOLATION;
  }
  case TheoremTag::PROP32: {
    int len = args.len < 0 ? 3 : static_cast<int>(args.len);
    Prop32Result r = prop32_pipeline(G, g, h, args.k_or(1), len, args.seed);
    std::cout << "u = " << r.u.element.to_string() << "\n"
              << "Pierce pattern (lower-left 0, bottom-right e): "
              << (r.pattern_ok ? "ok" : "BROKEN") << "\n"
              << "morphism samples: " << r.morphism.samples_checked << "\n"
              << "metabelian: " << (r.metabelian.passed ? "passed" : "FAILED")
              << " (" << r.metabelian.words << " words, "
              << r.metabelian.commutators << " commutators, "
              << r.metabelian.pairs_checked << " pairs)\n";
    if (!r.metabelian.witness.empty())
      std::cout << "witness: " << r.metabelian.witness << "\n";
    j["pattern_ok"] = r.pattern_ok;
    j["morphism_samples"] = r.morphism.samples_checked;
    j["metabelian_passed"] = r.metabelian.passed;
    j["metabelian_words"] = r.metabelian.words;
    j["metabelian_pairs"] = r.metabelian.pairs_checked;
    j["u"] = element_to_json(r.u.element);
    emit(j, args.json_path);
    return (r.pattern_ok && r.metabelian.passed) ? 0 : EXIT_ORACLE_VIOLATION;
  }
  case TheoremTag::THM33: {
    if (args.bass.size() != 2)
      throw UnknownGroup("thm33 needs exactly two --bass k,m entries");
    auto km1 = parse_bass(args.bass[0]);
    auto km2 = parse_bass(args.bass[1]);
    long len = args.len < 0 ? 10 : args.len;
    Thm33Result r = thm33_pipeline(G, g, h, km1, km2, len);
    print_report("thm33 condition", r.condition);
    print_report("free_monoid_oracle", r.oracle);
    j["condition"] = report_to_json(r.condition);
    j["oracle"] = report_to_json(r.oracle);
    j["unit1"] = unit_to_json(r.unit1);
    j["unit2"] = unit_to_json(r.unit2);
    emit(j, args.json_path);
    return combine_exit(verdict_exit(r.condition), verdict_exit(r.oracle));
  }
  case TheoremTag::THM41: {
    long syl = args.syllables < 0 ? 8 : args.syllables;
    Thm41Result r = thm41_pipeline(G, g, h, args.l_or(1), args.t_or(1), syl);
    std::cout << "matrix system: degree " << r.sys.degree << ", conductor "
              << r.sys.field_conductor
              << (r.sys.restricted ? " (restricted to <g,h>)" : "") << "\n";
    std::cout << "A (image of b_l, triangular basis):\n"
              << r.A.to_string() << "\n";
    std::cout << "B (image of b_t, triangular basis):\n"
              << r.B.to_string() << "\n";
    auto show_ord = [](std::optional<long> o) {
      return o ? std::to_string(*o) : std::string("INFINITE");
    };
    std::cout << "orders: o(u) = " << show_ord(r.matrix_order_u)
              << ", o(v) = " << show_ord(r.matrix_order_v) << "\n";
    print_report("triangular condition", r.condition);
    int code = verdict_exit(r.condition);
    j["degree"] = r.sys.degree;
    j["conductor"] = r.sys.field_conductor;
    j["condition"] = report_to_json(r.condition);
    j["system"] = system_to_json(r.sys);
    if (r.oracle) {
      print_report("free_product_oracle", *r.oracle);
      j["oracle"] = report_to_json(*r.oracle);
      code = combine_exit(code, verdict_exit(*r.oracle));
    }
    emit(j, args.json_path);
    return code;
  }
  case TheoremTag::THM42: {
    long syl = args.syllables < 0 ? 10 : args.syllables;
    Thm42Result r = thm42_pipeline(G, g, h, args.k_or(1), args.l_or(1), syl);
    std::cout << "o(b_k) = o(b_l^*) = " << r.p << " (exact)\n";
    print_report("free_product_oracle", r.oracle);
    j["p"] = r.p;
    j["u"] = unit_to_json(r.u);
    j["oracle"] = report_to_json(r.oracle);
    emit(j, args.json_path);
    return verdict_exit(r.oracle);
  }
  case TheoremTag::COR43: {
    long len = args.len < 0 ? 12 : args.len;
    Cor43Result r = cor43_pipeline(G, g, h, args.k_or(1), args.l_or(1), len);
    print_report("free_group_oracle", r.oracle);
    j["a"] = element_to_json(r.a);
    j["b"] = element_to_json(r.b);
    j["oracle"] = report_to_json(r.oracle);
    emit(j, args.json_path);
    return verdict_exit(r.oracle);
  }
  }
  return EXIT_USAGE;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"unitforge: exact unit constructions and freeness "
               "verification in integral group rings"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help"); // frees -h; check uses --h

  // group info
  auto *group_cmd = app.add_subcommand("group", "group utilities");
  group_cmd->require_subcommand(1);
  auto *info_cmd = group_cmd->add_subcommand("info", "summarize a group");
  std::string info_key, info_json;
  info_cmd->add_option("key", info_key, "catalog key or JSON file")->required();
  info_cmd->add_option("--json", info_json, "write JSON report to file");

  // scan
  auto *scan_cmd =
      app.add_subcommand("scan", "scan (g,h) pairs for theorem hypotheses");
  std::string scan_key, scan_tag, scan_json;
  scan_cmd->add_option("key", scan_key, "catalog key or JSON file")->required();
  scan_cmd->add_option("tag", scan_tag,
                       "optional tag filter (LEMMA31, PROP32, THM33, THM41, "
                       "THM42, COR43)");
  scan_cmd->add_option("--json", scan_json, "write JSON report to file");

  // check
  auto *check_cmd =
      app.add_subcommand("check", "run a theorem pipeline on a chosen pair");
  check_cmd->set_help_flag("--help", "print help");
  CheckArgs ca;
  check_cmd->add_option("key", ca.key, "catalog key or JSON file")->required();
  check_cmd->add_option("tag", ca.tag, "theorem tag")->required();
  check_cmd->add_option("--g", ca.g_name, "element g (by name)")->required();
  check_cmd->add_option("--h", ca.h_name, "element h (by name)")->required();
  check_cmd->add_option("--k", ca.k, "Bovdi exponent k (default 1)");
  check_cmd->add_option("--l", ca.l, "second exponent l (default 1)");
  check_cmd->add_option("--t", ca.t, "right Bovdi exponent t (default 1)");
  check_cmd->add_option("--bass", ca.bass,
                        "Bass parameters k,m (twice for thm33)");
  check_cmd->add_option("--len", ca.len, "word-length bound");
  check_cmd->add_option("--syllables", ca.syllables, "syllable bound");
  check_cmd->add_option("--seed", ca.seed, "sampling seed (default 1)");
  check_cmd->add_option("--json", ca.json_path, "write JSON report to file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info_cmd->parsed())
      return cmd_group_info(info_key, info_json);
    if (scan_cmd->parsed())
      return cmd_scan(scan_key, scan_tag, scan_json);
    if (check_cmd->parsed())
      return cmd_check(ca);
  } catch (const HypothesisViolation &e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return EXIT_HYPOTHESIS;
  } catch (const BadBassParams &e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return EXIT_HYPOTHESIS;
  } catch (const BadParams &e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return EXIT_HYPOTHESIS;
  } catch (const TrivialCase &e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return EXIT_HYPOTHESIS;
  } catch (const UnknownGroup &e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  }
  return EXIT_USAGE;
}
