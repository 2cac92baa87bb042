// ring: inspect finite rings, dump their structural subsets, and run the
// UJ# theorem checks over a corpus.
//
// Exit codes: 0 success, 1 a check failed, 2 parse or construction error,
// 3 I/O or usage error.

#include "ringlab/cache.hpp"
#include "ringlab/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using namespace ringlab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

struct Options {
  bool json = false;
  bool deep_oracle = false;
  std::string filter = "*";
  std::string corpus_file;
  std::size_t max_order = 0;
  std::string expr;
  std::string set_name;
  std::string check_id;
  std::string cache_action;
  bool list_checks = false;
};

Limits limits_from(const Options& o) {
  Limits lim;
  if (const char* env = std::getenv("RINGLAB_MAX_ORDER"); env && *env) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end || v < 2) throw RingError(ErrorCode::Io, "RINGLAB_MAX_ORDER must be an integer >= 2");
    lim.max_order = v;
  }
  if (o.max_order) lim.max_order = o.max_order;
  if (lim.max_order > kMaxSupportedOrder) {
    throw RingError(ErrorCode::Io, "order cap above the supported maximum " + std::to_string(kMaxSupportedOrder));
  }
  return lim;
}

void print_parse_error(const std::string& text, const RingError& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::size_t offset = std::string::npos;
  if (auto* s = dynamic_cast<const SyntaxError*>(&e)) offset = s->offset();
  if (auto* r = dynamic_cast<const RangeError*>(&e)) offset = r->offset();
  if (offset != std::string::npos && !text.empty()) {
    std::cerr << "  " << text << "\n  " << std::string(std::min(offset, text.size()), ' ') << "^\n";
  }
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Io:
    case ErrorCode::UnknownCheck: return kExitUsage;
    default: return kExitParse;
  }
}

ordered_json set_json(const TableRing& r, const ElemSet& s) {
  ordered_json a = ordered_json::array();
  s.for_each([&](Elem x) { a.push_back({{"index", x}, {"label", r.label(x)}}); });
  return a;
}

int cmd_inspect(const Options& o, Cache& cache) {
  RunOptions ro{limits_from(o), false, &cache, 0};
  Analysis a = analyse(parse(o.expr), ro);
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  const CleanProfile& cp = a.clean();
  std::vector<std::pair<std::string, std::size_t>> sizes = {
      {"order", r.order()},         {"units", b.units.count()},        {"J", b.jacobson.count()},
      {"Jsharp", b.jsharp.count()}, {"Nil", b.nilpotents.count()},      {"NilStar", b.prime_radical.count()},
      {"Id", b.idempotents.count()}, {"Center", b.center.count()}};
  std::vector<std::pair<std::string, bool>> verdicts;
  for (Pred p : {Pred::UJsharp, Pred::UJ, Pred::UU, Pred::Boolean, Pred::Local, Pred::Division, Pred::Reduced,
                 Pred::Commutative, Pred::Semipotent, Pred::Regular, Pred::Exchange, Pred::DedekindFinite,
                 Pred::TwoPrimal}) {
    verdicts.emplace_back(pred_name(p), a.holds(p));
  }
  verdicts.emplace_back("clean", cp.clean.holds);
  verdicts.emplace_back("strongly clean", cp.strongly_clean.holds);
  verdicts.emplace_back("J#-clean", cp.jsharp_clean.holds);
  verdicts.emplace_back("strongly J#-clean", cp.strongly_jsharp_clean.holds);
  verdicts.emplace_back("strongly nil-clean", cp.strongly_nil_clean.holds);
  verdicts.emplace_back("R/J Boolean", a.radical_quotient().holds(Pred::Boolean));

  std::string text = print_canonical(parse(o.expr));
  if (o.json) {
    ordered_json j;
    j["ring"] = text;
    for (const auto& [k, v] : sizes) j[k] = v;
    ordered_json pj;
    for (const auto& [k, v] : verdicts) pj[k] = v;
    j["predicates"] = pj;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
    std::cout << "order " << r.order() << ", |U|=" << b.units.count() << ", |J|=" << b.jacobson.count()
              << ", |J#|=" << b.jsharp.count() << ", |Nil|=" << b.nilpotents.count()
              << ", |Nil*|=" << b.prime_radical.count() << ", |Id|=" << b.idempotents.count()
              << ", |Z(R)|=" << b.center.count() << "\n";
    for (const auto& [k, v] : verdicts) std::cout << "  " << k << ": " << (v ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_sets(const Options& o, Cache& cache) {
  RunOptions ro{limits_from(o), false, &cache, 0};
  Analysis a = analyse(parse(o.expr), ro);
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  ElemSet s(r.order());
  const std::string& n = o.set_name;
  if (n == "U") s = b.units;
  else if (n == "J") s = b.jacobson;
  else if (n == "Jsharp") s = b.jsharp;
  else if (n == "Nil") s = b.nilpotents;
  else if (n == "NilStar") s = b.prime_radical;
  else if (n == "Id") s = b.idempotents;
  else if (n == "Center") s = b.center;
  else if (n == "Delta") s = augmentation_ideal(r);
  else throw RingError(ErrorCode::Io, "unknown set '" + n + "' (U, J, Jsharp, Nil, NilStar, Id, Center, Delta)");
  if (o.json) {
    ordered_json j;
    j["ring"] = print_canonical(parse(o.expr));
    j["set"] = n;
    j["elements"] = set_json(r, s);
    std::cout << j.dump(2) << "\n";
  } else {
    s.for_each([&](Elem x) { std::cout << x << "\t" << r.label(x) << "\n"; });
  }
  return 0;
}

int cmd_elements(const Options& o) {
  RingPtr r = compile(parse(o.expr), CompileOptions{limits_from(o)});
  if (o.json) {
    std::cout << set_json(*r, ElemSet::full(r->order())).dump(2) << "\n";
  } else {
    for (Elem x = 0; x < r->order(); ++x) std::cout << x << "\t" << r->label(x) << "\n";
  }
  return 0;
}

int cmd_check(const Options& o, Cache& cache) {
  if (o.list_checks) {
    for (const auto& c : registry()) {
      std::cout << c.id << "\t" << c.applicability << "\t" << c.claim << (c.doc_only ? " [doc only]" : "")
                << (c.informational ? " [informational]" : "") << "\n";
    }
    return 0;
  }
  if (o.check_id.empty() || o.expr.empty()) throw RingError(ErrorCode::Io, "usage: ring check <id> <expr>");
  RunOptions ro{limits_from(o), o.deep_oracle, &cache, 0};
  CheckResult res = run_check(o.check_id, o.expr, ro);
  if (o.json) {
    ordered_json j;
    j["id"] = o.check_id;
    j["ring"] = print_canonical(parse(o.expr));
    j["status"] = status_name(res.status);
    if (res.witness) j["witness"] = {{"elements", res.witness->elements}, {"text", res.witness->text}};
    if (!res.reason.empty()) j["reason"] = res.reason;
    if (!res.note.empty()) j["note"] = res.note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << o.check_id << " " << print_canonical(parse(o.expr)) << ": " << status_name(res.status);
    if (res.witness) std::cout << " -- " << res.witness->text;
    else if (!res.reason.empty()) std::cout << " -- " << res.reason;
    std::cout << "\n";
    if (!res.note.empty()) std::cout << "note: " << res.note << "\n";
  }
  return res.status == Status::Fail ? kExitFail : 0;
}

int cmd_verify(const Options& o, Cache& cache) {
  std::vector<std::string> corpus = o.corpus_file.empty() ? default_corpus() : read_corpus_file(o.corpus_file);
  RunOptions ro{limits_from(o), o.deep_oracle, &cache, 0};
  SuiteReport report = run_suite(corpus, o.filter, ro);
  std::cout << (o.json ? report_json(report) : report_text(report));
  return report.ok() ? 0 : kExitFail;
}

int cmd_corpus() {
  for (const auto& e : default_corpus()) std::cout << e << "\n";
  return 0;
}

int cmd_cache(const Options& o, Cache& cache) {
  if (o.cache_action == "path") {
    std::cout << cache.dir().string() << "\n";
  } else if (o.cache_action == "stats") {
    auto s = cache.stats();
    if (o.json) {
      std::cout << ordered_json{{"path", cache.dir().string()}, {"entries", s.entries}, {"bytes", s.bytes}}.dump(2) << "\n";
    } else {
      std::cout << "entries: " << s.entries << "\nbytes: " << s.bytes << "\n";
    }
  } else {
    std::size_t n = cache.clear();
    std::cout << "removed " << n << " entries\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring explorer and UJ# theorem checker"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--max-order", o.max_order, "Largest ring order to build (also RINGLAB_MAX_ORDER)");

  auto* inspect = app.add_subcommand("inspect", "Sizes of the structural subsets and class verdicts");
  inspect->add_option("expr", o.expr, "Ring expression")->required();

  auto* sets = app.add_subcommand("sets", "List one structural subset");
  sets->add_option("expr", o.expr, "Ring expression")->required();
  sets->add_option("set", o.set_name, "U, J, Jsharp, Nil, NilStar, Id, Center or Delta")->required();

  auto* elements = app.add_subcommand("elements", "Index to element description table");
  elements->add_option("expr", o.expr, "Ring expression")->required();

  auto* check = app.add_subcommand("check", "Run one registered check on one ring");
  check->add_option("id", o.check_id, "Check id");
  check->add_option("expr", o.expr, "Ring expression");
  check->add_flag("--list", o.list_checks, "List the registered checks");
  check->add_flag("--deep-oracle", o.deep_oracle, "Enable the ideal-enumeration oracle");

  auto* verify = app.add_subcommand("verify", "Run the checks over a corpus");
  verify->add_option("--corpus", o.corpus_file, "Corpus file, one expression per line");
  verify->add_option("--filter", o.filter, "Glob over check ids");
  verify->add_flag("--deep-oracle", o.deep_oracle, "Enable the ideal-enumeration oracle");

  auto* corpus = app.add_subcommand("corpus", "Print the default corpus");

  auto* cache_cmd = app.add_subcommand("cache", "Manage the invariant cache");
  cache_cmd->add_option("action", o.cache_action, "stats, clear or path")
      ->required()
      ->check(CLI::IsMember({"stats", "clear", "path"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Cache cache(Cache::default_dir());
  try {
    if (inspect->parsed()) return cmd_inspect(o, cache);
    if (sets->parsed()) return cmd_sets(o, cache);
    if (elements->parsed()) return cmd_elements(o);
    if (check->parsed()) return cmd_check(o, cache);
    if (verify->parsed()) return cmd_verify(o, cache);
    if (corpus->parsed()) return cmd_corpus();
    if (cache_cmd->parsed()) return cmd_cache(o, cache);
  } catch (const RingError& e) {
    print_parse_error(o.expr, e);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
