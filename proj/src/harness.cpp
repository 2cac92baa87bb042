#include "ringlab/harness.hpp"

#include "checks.hpp"
#include "ringlab/cache.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <thread>

namespace ringlab {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

CheckResult CheckResult::fail(const TableRing& r, std::vector<Elem> elements, std::string why) {
  CheckResult res;
  res.status = Status::Fail;
  std::string text = elements.empty() ? why : render_elements(r, elements) + ": " + why;
  res.witness = Witness{std::move(elements), std::move(text)};
  res.reason = std::move(why);
  return res;
}

namespace detail {

CheckResult equivalent(const std::vector<Statement>& statements) {
  const Statement* yes = nullptr;
  const Statement* no = nullptr;
  for (const auto& s : statements) {
    if (s.second && !yes) yes = &s;
    if (!s.second && !no) no = &s;
  }
  if (!yes || !no) return CheckResult::pass();
  CheckResult res;
  res.status = Status::Fail;
  res.reason = "'" + yes->first + "' holds but '" + no->first + "' does not";
  res.witness = Witness{{}, res.reason};
  return res;
}

CheckResult implies(const Statement& hypothesis, const Statement& conclusion) {
  if (!hypothesis.second) return CheckResult::skip("hypothesis '" + hypothesis.first + "' does not hold");
  if (conclusion.second) return CheckResult::pass();
  CheckResult res;
  res.status = Status::Fail;
  res.reason = "'" + hypothesis.first + "' holds but '" + conclusion.first + "' does not";
  res.witness = Witness{{}, res.reason};
  return res;
}

CheckResult from_verdict(const TableRing& r, const Verdict& v, const std::string& context) {
  if (v.holds) return CheckResult::pass();
  return CheckResult::fail(r, v.witness, context + " (" + v.reason + ")");
}

std::vector<Elem> digits(std::size_t index, const std::vector<std::size_t>& radices) {
  std::vector<Elem> out(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    out[i] = static_cast<Elem>(index % radices[i]);
    index /= radices[i];
  }
  return out;
}

}  // namespace detail

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    detail::CheckList list(out);
    detail::register_radical_checks(list);
    detail::register_class_checks(list);
    detail::register_construction_checks(list);
    detail::register_group_checks(list);
    return out;
  }();
  return checks;
}

const Check& find_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw RingError(ErrorCode::UnknownCheck, "unknown check '" + id + "'");
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

Analysis analyse(const RingExpr& expr, const RunOptions& options) {
  RingPtr ring = compile(expr, CompileOptions{options.limits});
  if (!options.cache) return Analysis(ring);
  std::string text = print_canonical(expr);
  if (auto hit = options.cache->load(text, *ring)) return Analysis(ring, std::move(*hit));
  Analysis a(ring);
  options.cache->store(text, *ring, a.bundle());
  return a;
}

CheckResult run_check(const Check& check, Analysis& analysis, const CheckContext& ctx) {
  auto start = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    res = check.body(analysis, ctx);
  } catch (const std::exception& e) {
    res = CheckResult{};
    res.status = Status::Fail;
    res.reason = std::string("check raised an error: ") + e.what();
    res.witness = Witness{{}, res.reason};
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

CheckResult run_check(const std::string& check_id, const std::string& expr_text, const RunOptions& options) {
  const Check& check = find_check(check_id);
  Analysis a = analyse(parse(expr_text), options);
  return run_check(check, a, CheckContext{options.deep_oracle});
}

namespace {

[[noreturn]] void rethrow_annotated(const std::string& text) {
  try {
    throw;
  } catch (const RingError& e) {
    std::string what = e.what();
    std::string prefix = std::string(error_code_name(e.code())) + ": ";
    if (what.rfind(prefix, 0) == 0) what.erase(0, prefix.size());
    throw RingError(e.code(), "'" + text + "': " + what);
  }
}

}  // namespace

SuiteReport run_suite(const std::vector<std::string>& corpus, const std::string& filter, const RunOptions& options) {
  if (corpus.empty()) throw RingError(ErrorCode::Io, "corpus is empty");
  std::vector<const Check*> checks;
  for (const auto& c : registry()) {
    if (glob_match(filter, c.id)) checks.push_back(&c);
  }

  SuiteReport report;
  std::vector<RingExpr> exprs;
  std::vector<RingPtr> rings;
  for (const auto& text : corpus) {
    try {
      exprs.push_back(parse(text));
      rings.push_back(compile(exprs.back(), CompileOptions{options.limits}));
    } catch (...) {
      rethrow_annotated(text);
    }
    report.corpus.push_back(print_canonical(exprs.back()));
  }

  // results[ring][check], filled by workers and read in order afterwards.
  std::vector<std::vector<CheckResult>> results(rings.size());
  std::vector<std::exception_ptr> errors(rings.size());
  std::atomic<std::size_t> next{0};
  const CheckContext ctx{options.deep_oracle};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rings.size();) {
      try {
        const std::string& text = report.corpus[i];
        std::optional<InvariantBundle> cached;
        if (options.cache) cached = options.cache->load(text, *rings[i]);
        bool hit = cached.has_value();
        Analysis a(rings[i], std::move(cached));
        if (options.cache && !hit) options.cache->store(text, *rings[i], a.bundle());
        for (const Check* c : checks) results[i].push_back(run_check(*c, a, ctx));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n_threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(rings.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (...) {
        rethrow_annotated(report.corpus[i]);
      }
    }
  }

  for (std::size_t k = 0; k < checks.size(); ++k) {
    CheckReport cr{checks[k]->id, checks[k]->claim, checks[k]->informational, {}};
    for (std::size_t i = 0; i < rings.size(); ++i) {
      CheckResult& res = results[i][k];
      switch (res.status) {
        case Status::Pass: ++report.pass; break;
        case Status::Fail: ++report.fail; break;
        case Status::Skip: ++report.skip; break;
      }
      if (!res.note.empty()) report.notes.push_back(checks[k]->id + " on " + report.corpus[i] + ": " + res.note);
      cr.results.push_back({report.corpus[i], std::move(res)});
    }
    report.checks.push_back(std::move(cr));
  }
  return report;
}

std::vector<std::string> default_corpus() {
  return {
      "z(2)",
      "z(3)",
      "z(4)",
      "z(6)",
      "z(8)",
      "z(12)",
      "z(16)",
      "z(32)",
      "gf(4)",
      "gf(8)",
      "gf(9)",
      "m(2,z(2))",
      "m(2,z(4))",
      "t(2,z(2))",
      "t(3,z(2))",
      "t(2,z(4))",
      "prod(z(2),z(2))",
      "prod(z(2),gf(4))",
      "prod(z(4),m(2,z(2)))",
      "triv(z(2))",
      "triv(z(4))",
      "quot(z(8),[4])",
      "corner(m(2,z(2)),1)",   // E11
      "corner(m(3,z(2)),17)",  // E11 + E22
      "poly(z(2),3)",
      "poly(z(4),2)",
      "skew(gf(4),frob,2)",
      "skew(gf(4),frob,3)",
      "group(z(2),c(2))",
      "group(z(2),c(4))",
      "group(z(2),c(2)xc(2))",
      "group(z(4),c(2))",
      "group(z(2),q8)",
      "group(z(2),d(4))",
      "group(z(2),s(3))",
      "group(z(2),c(3))",
      "group(z(3),c(4))",
      "group(z(3),c(5))",
      "group(z(9),c(3))",
  };
}

std::vector<std::string> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError(ErrorCode::Io, "cannot read corpus file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace ringlab
