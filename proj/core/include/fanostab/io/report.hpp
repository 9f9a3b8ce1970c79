#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fanostab/verdict/verdict.hpp"

namespace fanostab {

struct BatchOptions {
  /// GIT verdicts at this slope instead of K-verdicts.
  std::optional<Rat> t;
  VerdictOptions verdict;
  /// Entries processed concurrently; the report keeps input order.
  int threads = 1;
  /// Adds wall-clock timings, which makes the output run-dependent.
  bool timings = false;
  int indent = 2;
};

struct RunReport {
  std::string json;
  /// 0 on success, 2 if some entry hit IncompleteGeometry, 1 on input errors.
  int exit_code = 0;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// JSON object for one verdict; rationals are strings "p/q".
std::string verdict_json(const Verdict& v, int indent = 2);

/// Runs every entry of a JSON array of {"q", "g", "points"?} or
/// {"bidegree", "points"?} objects. Points are arrays of four rationals in
/// x0..x3. Per-entry failures are reported inline.
RunReport run_batch(std::string_view input, const BatchOptions& opt = {});

/// run_batch on a file; an unreadable file gives exit code 1.
RunReport run_batch_file(const std::string& path, const BatchOptions& opt = {});

}  // namespace fanostab
