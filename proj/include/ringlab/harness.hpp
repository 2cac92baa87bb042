#pragma once

#include "ringlab/analysis.hpp"
#include "ringlab/ringexpr.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

class Cache;

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

struct Witness {
  std::vector<Elem> elements;  // indices in the ring under test
  std::string text;            // rendered with construction-native labels
};

struct CheckResult {
  Status status = Status::Pass;
  std::optional<Witness> witness;
  /// Why a check skipped or failed.
  std::string reason;
  /// Discrepancy note carried into the suite report.
  std::string note;
  double millis = 0;

  static CheckResult pass() { return {}; }
  static CheckResult skip(std::string why) { return {Status::Skip, std::nullopt, std::move(why), {}, 0}; }
  static CheckResult fail(const TableRing& r, std::vector<Elem> elements, std::string why);
};

struct CheckContext {
  bool deep_oracle = false;
};

struct Check {
  std::string id;
  /// The claim in words.
  std::string claim;
  /// Which rings the claim speaks about; a ring outside it is a skip.
  std::string applicability;
  bool informational = false;
  /// Not mechanically checkable on finite rings; always skips.
  bool doc_only = false;
  std::function<CheckResult(Analysis&, const CheckContext&)> body;
};

const std::vector<Check>& registry();
/// Throws RingError(UnknownCheck).
const Check& find_check(const std::string& id);

/// Shell-style glob with '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& text);

struct RunOptions {
  Limits limits;
  bool deep_oracle = false;
  Cache* cache = nullptr;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
};

/// Compiles the expression (bundle through the cache when given) and runs one check.
CheckResult run_check(const std::string& check_id, const std::string& expr_text, const RunOptions& options = {});
CheckResult run_check(const Check& check, Analysis& analysis, const CheckContext& ctx);

struct RingResult {
  std::string ring;
  CheckResult result;
};

struct CheckReport {
  std::string id;
  std::string claim;
  bool informational = false;
  std::vector<RingResult> results;
};

struct SuiteReport {
  std::vector<std::string> corpus;  // canonical texts
  std::vector<CheckReport> checks;
  std::size_t pass = 0, fail = 0, skip = 0;
  std::vector<std::string> notes;

  bool ok() const { return fail == 0; }
};

/// Runs every check matching `filter` on every corpus ring. A corpus entry that
/// fails to parse or compile raises the underlying error, its message prefixed
/// with the offending text.
SuiteReport run_suite(const std::vector<std::string>& corpus, const std::string& filter, const RunOptions& options = {});

std::vector<std::string> default_corpus();
/// One expression per line; '#' starts a comment; blank lines are ignored.
std::vector<std::string> read_corpus_file(const std::string& path);

/// Compiles and analyses one expression, reading and filling the cache.
Analysis analyse(const RingExpr& expr, const RunOptions& options);

std::string report_json(const SuiteReport& report, bool with_timing = true);
std::string report_text(const SuiteReport& report);

}  // namespace ringlab
