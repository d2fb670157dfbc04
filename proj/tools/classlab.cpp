// classlab: class sizes, constructions and verification reports.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <classlab/classlab.hpp>

namespace {

using namespace classlab;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBound = 3 };

struct Settings {
  std::string format = "text";
  std::uint64_t bound = kDefaultEnumerationBound;
  std::uint64_t coset_bound = kDefaultCosetIndexBound;
  std::size_t workers = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t pairs = 10'000;
  std::string out_dir = "reports";

  bool json() const { return format == "json"; }

  RunOptions options() const {
    RunOptions o;
    o.enumeration_bound = bound;
    o.coset_bound = coset_bound;
    o.seed = seed;
    o.commuting_pairs = pairs;
    return o;
  }
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_nset(const Settings& s, const std::string& spec) {
  const auto g = evaluate(spec);
  const auto n = all_class_sizes(g, s.bound);
  if (s.json()) {
    Json out = Json::object();
    out["group"] = spec;
    out["order"] = g.order().value();
    const auto sizes = class_size_set_json(n);
    out["sizes"] = sizes["sizes"];
    out["factorizations"] = sizes["factorizations"];
    print_json(out);
    return kOk;
  }
  std::cout << "N(" << spec << "), |G| = " << g.order().value() << ", " << n.size() << " sizes\n";
  for (const auto& m : n)
    std::cout << "  " << m.value() << " = " << m.factorization_string() << '\n';
  return kOk;
}

int cmd_classes(const Settings& s, const std::string& spec) {
  const auto g = evaluate(spec);
  const ClassPartition partition(g, s.bound);
  struct Row {
    std::uint64_t size, order;
    std::string rep;
  };
  std::vector<Row> rows;
  for (const auto& c : partition.classes())
    rows.push_back({c.size.value(), element_order(c.representative).value(), to_cycle_string(c.representative)});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.size != b.size ? a.size < b.size : a.order < b.order;
  });
  if (s.json()) {
    Json out = Json::object();
    out["group"] = spec;
    out["order"] = g.order().value();
    Json list = Json::array();
    for (const auto& r : rows) {
      Json j = Json::object();
      j["representative"] = r.rep;
      j["size"] = r.size;
      j["element_order"] = r.order;
      list.push_back(std::move(j));
    }
    out["classes"] = std::move(list);
    print_json(out);
    return kOk;
  }
  std::cout << spec << ": |G| = " << g.order().value() << ", " << rows.size() << " classes\n";
  std::cout << "  size  order  representative\n";
  for (const auto& r : rows)
    std::cout << "  " << r.size << "  " << r.order << "  " << r.rep << '\n';
  return kOk;
}

int cmd_construct(const Settings& s, const std::string& spec) {
  const auto g = evaluate(spec);
  if (s.json()) {
    Json out = Json::object();
    out["group"] = spec;
    out["degree"] = g.degree();
    out["order"] = g.order().value();
    Json gens = Json::array();
    for (const auto& x : g.generators())
      gens.push_back(to_cycle_string(x));
    out["generators"] = std::move(gens);
    print_json(out);
    return kOk;
  }
  std::cout << spec << " on " << g.degree() << " points, order " << g.order().value() << " = "
            << g.order().factorization_string() << '\n';
  for (const auto& x : g.generators())
    std::cout << "  " << to_cycle_string(x) << '\n';
  return kOk;
}

int cmd_socle_scan(const Settings& s, unsigned kmax) {
  ReplayContext ctx(s.options());
  const auto scan = socle_scan(ctx, kmax);
  const auto survivors = socle_survivors(scan);
  if (s.json()) {
    Json out = Json::object();
    out["kmax"] = kmax;
    Json list = Json::array();
    for (const auto& c : scan) {
      Json j = Json::object();
      j["socle"] = c.name();
      j["k"] = c.factors.size();
      j["aut_order"] = c.aut_order.value();
      j["survives"] = c.survives;
      j["reason"] = c.reason;
      list.push_back(std::move(j));
    }
    out["candidates"] = std::move(list);
    out["survivors"] = survivors;
    print_json(out);
    return kOk;
  }
  for (const auto& c : scan)
    std::cout << "  " << c.name() << "  |Aut(M)| = " << c.aut_order.value() << "  "
              << (c.survives ? "survives" : "eliminated: " + c.reason) << '\n';
  std::cout << "survivors:";
  for (const auto& n : survivors)
    std::cout << ' ' << n;
  std::cout << (survivors.empty() ? " none\n" : "\n");
  return kOk;
}

int cmd_verify(const Settings& s, const std::string& which) {
  std::vector<std::string> ids;
  if (which == "all")
    ids = verify_ids();
  else if (is_verify_id(which))
    ids.push_back(which);
  else {
    std::cerr << "unknown verification id '" << which << "'; expected all or one of:";
    for (const auto& id : verify_ids())
      std::cerr << ' ' << id;
    std::cerr << '\n';
    return kUsage;
  }
  ReplayContext ctx(s.options());
  const auto reports = run_verifications(ids, ctx, s.workers);

  namespace fs = std::filesystem;
  fs::create_directories(s.out_dir);
  bool all_pass = true;
  Json summary = Json::array();
  for (const auto& r : reports) {
    const fs::path base = fs::path(s.out_dir) / r.lemma();
    std::ofstream(base.string() + ".json") << r.to_json().dump(2) << '\n';
    std::ofstream(base.string() + ".txt") << r.to_text();
    all_pass = all_pass && r.passed();
    Json j = Json::object();
    j["id"] = r.lemma();
    j["verdict"] = r.passed() ? "pass" : "fail";
    j["assertions"] = r.assertions().size();
    j["failures"] = r.failures();
    j["report"] = base.string() + ".json";
    summary.push_back(std::move(j));
  }
  if (s.json()) {
    Json out = Json::object();
    out["reports"] = std::move(summary);
    out["verdict"] = all_pass ? "pass" : "fail";
    print_json(out);
  } else {
    for (const auto& r : reports)
      std::cout << r.lemma() << ": " << (r.passed() ? "pass" : "fail") << " (" << r.assertions().size()
                << " assertions, " << r.failures() << " failed)\n";
    std::cout << reports.size() << " reports written to " << s.out_dir << '\n';
  }
  return all_pass ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"class sizes, group constructions and verification reports", "classlab"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings s;

  app.set_config("--config", "", "key = value settings file; command-line flags take precedence")
      ->envname("CLASSLAB_CONFIG");
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", s.bound, "largest group to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--coset-bound", s.coset_bound, "largest coset index to act on")->check(CLI::PositiveNumber);
  app.add_option("--workers", s.workers, "verifications run at once")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "seed for sampled checks");
  app.add_option("--pairs", s.pairs, "commuting pairs sampled by big2")->check(CLI::PositiveNumber);
  app.add_option("--out-dir", s.out_dir, "directory for verify reports");

  std::string spec;
  auto* nset = app.add_subcommand("nset", "class sizes of a group");
  nset->add_option("group", spec, "group expression, e.g. \"A6 x A6\"")->required();
  auto* classes = app.add_subcommand("classes", "conjugacy classes of a group");
  classes->add_option("group", spec, "group expression")->required();
  auto* construct = app.add_subcommand("construct", "generators of a group in cycle notation");
  construct->add_option("group", spec, "group expression")->required();
  std::string which;
  auto* verify = app.add_subcommand("verify", "run verifications and write reports");
  verify->add_option("id", which, "all, or one of: big1 big2 gor wreath index 5e O5 O3 O2 socle final")
      ->required();
  unsigned kmax = kMaxSocleFactors;
  auto* scan = app.add_subcommand("socle-scan", "candidate socles built from A5, A6 and U4(2)");
  scan->add_option("--kmax", kmax, "largest number of simple factors")
      ->check(CLI::Range(1u, kMaxSocleFactors));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*nset)
      return cmd_nset(s, spec);
    if (*classes)
      return cmd_classes(s, spec);
    if (*construct)
      return cmd_construct(s, spec);
    if (*verify)
      return cmd_verify(s, which);
    if (*scan)
      return cmd_socle_scan(s, kmax);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
