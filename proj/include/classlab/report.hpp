#ifndef CLASSLAB_REPORT_HPP
#define CLASSLAB_REPORT_HPP

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arithmetic.hpp"

namespace classlab {

using Json = nlohmann::ordered_json;

/// Where a number in a report comes from.
enum class Provenance {
  Computed,   ///< computed by this run
  Quoted,     ///< a value stated by the argument being replayed, checked against a computed one
  Assumption, ///< taken on trust (a cited result or an external table)
};

inline const char* to_string(Provenance p) {
  switch (p) {
  case Provenance::Computed:
    return "computed-here";
  case Provenance::Quoted:
    return "quoted";
  case Provenance::Assumption:
    return "external-assumption";
  }
  return "?";
}

enum class Outcome { Pass, Fail, Assumed };

inline const char* to_string(Outcome o) {
  switch (o) {
  case Outcome::Pass:
    return "pass";
  case Outcome::Fail:
    return "fail";
  case Outcome::Assumed:
    return "assumed";
  }
  return "?";
}

inline Json to_json(const FactoredNatural& n) { return n.value(); }

inline Json to_json(const ClassSizeSet& s) {
  Json a = Json::array();
  for (const auto& m : s)
    a.push_back(m.value());
  return a;
}

inline Json factorization_json(const FactoredNatural& n) {
  Json a = Json::array();
  for (const auto& f : n.factors())
    a.push_back(Json::array({f.prime, f.exponent}));
  return a;
}

/// {"sizes": [...], "factorizations": [[[p, e], ...], ...]}
inline Json class_size_set_json(const ClassSizeSet& s) {
  Json out = Json::object();
  out["sizes"] = to_json(s);
  Json f = Json::array();
  for (const auto& m : s)
    f.push_back(factorization_json(m));
  out["factorizations"] = std::move(f);
  return out;
}

inline Json to_json(const std::set<std::uint64_t>& s) {
  Json a = Json::array();
  for (auto v : s)
    a.push_back(v);
  return a;
}

struct ReportInput {
  std::string name;
  Json value;
  Provenance provenance = Provenance::Computed;
};

struct Assertion {
  std::string id;
  std::string description;
  std::vector<ReportInput> inputs;
  std::string relation;
  Outcome result = Outcome::Pass;

  bool is_assumption() const noexcept { return result == Outcome::Assumed; }
};

/// The trace of one replay or instance check: ordered assertions and a
/// verdict that passes iff every checked (non-assumed) assertion passes.
class LemmaReport {
public:
  LemmaReport(std::string lemma, std::string title)
    : lemma_(std::move(lemma)), title_(std::move(title)) {}

  const std::string& lemma() const noexcept { return lemma_; }
  const std::string& title() const noexcept { return title_; }
  const std::vector<Assertion>& assertions() const noexcept { return assertions_; }

  /// Record a checked relation; returns `holds` for chaining.
  bool check(std::string description, std::vector<ReportInput> inputs, std::string relation,
             bool holds) {
    assertions_.push_back({next_id(), std::move(description), std::move(inputs),
                           std::move(relation), holds ? Outcome::Pass : Outcome::Fail});
    return holds;
  }

  void assume(std::string description, std::vector<ReportInput> inputs, std::string relation) {
    assertions_.push_back({next_id(), std::move(description), std::move(inputs),
                           std::move(relation), Outcome::Assumed});
  }

  bool passed() const noexcept {
    for (const auto& a : assertions_)
      if (a.result == Outcome::Fail)
        return false;
    return true;
  }

  std::size_t failures() const noexcept {
    std::size_t n = 0;
    for (const auto& a : assertions_)
      n += a.result == Outcome::Fail;
    return n;
  }

  const Assertion* find_relation(const std::string& needle) const {
    for (const auto& a : assertions_)
      if (a.relation.find(needle) != std::string::npos)
        return &a;
    return nullptr;
  }

  Json to_json() const {
    Json out = Json::object();
    out["lemma"] = lemma_;
    out["title"] = title_;
    Json list = Json::array();
    for (const auto& a : assertions_) {
      Json j = Json::object();
      j["id"] = a.id;
      j["description"] = a.description;
      Json inputs = Json::array();
      for (const auto& in : a.inputs) {
        Json i = Json::object();
        i["name"] = in.name;
        i["value"] = in.value;
        i["provenance"] = classlab::to_string(in.provenance);
        inputs.push_back(std::move(i));
      }
      j["inputs"] = std::move(inputs);
      j["relation"] = a.relation;
      j["result"] = classlab::to_string(a.result);
      j["tag"] = a.is_assumption() ? "external-assumption" : "checked";
      list.push_back(std::move(j));
    }
    out["assertions"] = std::move(list);
    out["verdict"] = passed() ? "pass" : "fail";
    return out;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "== " << lemma_ << ": " << title_ << '\n';
    for (const auto& a : assertions_) {
      os << "  [" << classlab::to_string(a.result) << "] " << a.id << "  " << a.description << '\n';
      os << "      " << a.relation << '\n';
      for (const auto& in : a.inputs)
        os << "      " << in.name << " = " << in.value.dump() << "  ("
           << classlab::to_string(in.provenance) << ")\n";
    }
    os << "  verdict: " << (passed() ? "pass" : "fail") << '\n';
    return os.str();
  }

private:
  std::string lemma_;
  std::string title_;
  std::vector<Assertion> assertions_;

  std::string next_id() const { return lemma_ + "." + std::to_string(assertions_.size() + 1); }
};

inline ReportInput computed(std::string name, Json value) {
  return {std::move(name), std::move(value), Provenance::Computed};
}
inline ReportInput quoted(std::string name, Json value) {
  return {std::move(name), std::move(value), Provenance::Quoted};
}
inline ReportInput assumed(std::string name, Json value) {
  return {std::move(name), std::move(value), Provenance::Assumption};
}

/// "{1800, 3240}" for relation strings.
inline std::string set_string(const ClassSizeSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

inline std::string set_or_empty(const ClassSizeSet& s) { return s.empty() ? "∅" : set_string(s); }

} // namespace classlab

#endif
