#ifndef CLASSLAB_VERIFY_HPP
#define CLASSLAB_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "context.hpp"
#include "instance_checks.hpp"
#include "replay.hpp"
#include "report.hpp"
#include "socle_scan.hpp"

namespace classlab {

struct VerifyEntry {
  std::string id;
  std::function<LemmaReport(ReplayContext&)> run;
};

/// Every verification, in report order.
inline const std::vector<VerifyEntry>& verify_registry() {
  static const std::vector<VerifyEntry> entries{
      {"big1", check_big1},
      {"big2", check_big2},
      {"gor", check_gor},
      {"wreath", check_wreath},
      {"index", check_index},
      {"5e", replay_5e},
      {"O5", replay_o5},
      {"O3", replay_o3},
      {"O2", replay_o2},
      {"socle", [](ReplayContext& ctx) { return replay_socle_scan(ctx); }},
      {"final", replay_final},
  };
  return entries;
}

inline std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  for (const auto& e : verify_registry())
    ids.push_back(e.id);
  return ids;
}

inline bool is_verify_id(std::string_view id) {
  const auto& r = verify_registry();
  return std::any_of(r.begin(), r.end(), [&](const VerifyEntry& e) { return e.id == id; });
}

inline LemmaReport run_verification(std::string_view id, ReplayContext& ctx) {
  for (const auto& e : verify_registry())
    if (e.id == id)
      return e.run(ctx);
  throw std::invalid_argument("unknown verification id '" + std::string(id) + "'");
}

/// Runs the given verifications with at most `workers` in flight and returns
/// the reports in the order of `ids`.
inline std::vector<LemmaReport> run_verifications(const std::vector<std::string>& ids, ReplayContext& ctx,
                                                  std::size_t workers = 1) {
  for (const auto& id : ids)
    if (!is_verify_id(id))
      throw std::invalid_argument("unknown verification id '" + id + "'");
  std::vector<LemmaReport> out;
  out.reserve(ids.size());
  if (workers <= 1) {
    for (const auto& id : ids)
      out.push_back(run_verification(id, ctx));
    return out;
  }
  std::deque<std::future<LemmaReport>> running;
  std::size_t next = 0;
  while (next < ids.size() || !running.empty()) {
    while (next < ids.size() && running.size() < workers) {
      running.push_back(std::async(std::launch::async,
                                   [&ctx, id = ids[next]] { return run_verification(id, ctx); }));
      ++next;
    }
    out.push_back(running.front().get());
    running.pop_front();
  }
  return out;
}

} // namespace classlab

#endif
