#pragma once

#include "ringlab/harness.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ringlab::detail {

using CheckBody = std::function<CheckResult(Analysis&, const CheckContext&)>;

class CheckList {
 public:
  explicit CheckList(std::vector<Check>& out) : out_(out) {}
  void add(std::string id, std::string claim, std::string applicability, CheckBody body) {
    out_.push_back({std::move(id), std::move(claim), std::move(applicability), false, false, std::move(body)});
  }
  void informational(std::string id, std::string claim, std::string applicability, CheckBody body) {
    out_.push_back({std::move(id), std::move(claim), std::move(applicability), true, false, std::move(body)});
  }
  void doc_only(std::string id, std::string claim, std::string why) {
    out_.push_back({std::move(id), std::move(claim), "none at finite scale", false, true,
                    [why](Analysis&, const CheckContext&) { return CheckResult::skip("not mechanically checkable: " + why); }});
  }

 private:
  std::vector<Check>& out_;
};

void register_radical_checks(CheckList& list);
void register_class_checks(CheckList& list);
void register_construction_checks(CheckList& list);
void register_group_checks(CheckList& list);

using Statement = std::pair<std::string, bool>;

/// Pass when every statement has the same truth value; otherwise a fail naming
/// the first true and the first false statement.
CheckResult equivalent(const std::vector<Statement>& statements);

/// Pass unless the hypothesis holds and the conclusion does not.
CheckResult implies(const Statement& hypothesis, const Statement& conclusion);

/// A fail carrying the verdict's witness, or pass.
CheckResult from_verdict(const TableRing& r, const Verdict& v, const std::string& context);

inline bool is_power_of_two(std::size_t n) { return n && !(n & (n - 1)); }

/// Little-endian mixed-radix digits of `index`.
std::vector<Elem> digits(std::size_t index, const std::vector<std::size_t>& radices);

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace ringlab::detail
