#include "qgauss/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgauss/acceptance.hpp"
#include "qgauss/errors.hpp"
#include "qgauss/report.hpp"
#include "qgauss/verify.hpp"

namespace qgauss::cli {

namespace {

using nlohmann::ordered_json;
using Env = Params;

constexpr long kMaxScanProduct = 10000;  // hard cap on --max-n
constexpr long kMaxInstances = 1000000;  // hard cap on expanded instance counts

long now_us(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

long lookup(const Env& env, const std::string& name) {
  for (const auto& [key, value] : env)
    if (key == name) return value;
  throw UsageError("unknown variable '" + name + "' in range expression");
}

// ---------------------------------------------------------------------------
// Range expressions
// ---------------------------------------------------------------------------

} // namespace

RangeSpec parse_range(const std::string& text) {
  const auto split = text.find("..");
  if (split == std::string::npos) return {text, text};
  const std::string lo = text.substr(0, split);
  const std::string hi = text.substr(split + 2);
  if (lo.empty() || hi.empty() || hi.find("..") != std::string::npos)
    throw UsageError("malformed range '" + text + "' (expected LO..HI)");
  return {lo, hi};
}

long eval_bound(const std::string& text, const Params& env) {
  size_t pos = 0;
  const auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  long total = 0;
  long sign = 1;
  bool expect_term = true;
  skip_spaces();
  if (pos >= text.size()) throw UsageError("empty range bound");
  while (pos < text.size()) {
    skip_spaces();
    if (pos >= text.size()) break;
    const char c = text[pos];
    if (expect_term) {
      if (c == '+' || c == '-') {
        if (c == '-') sign = -sign;
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          value = value * 10 + (text[pos++] - '0');
        total += sign * value;
        sign = 1;
        expect_term = false;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
          name += text[pos++];
        total += sign * lookup(env, name);
        sign = 1;
        expect_term = false;
      } else {
        throw UsageError("unexpected character '" + std::string(1, c) + "' in range bound '" +
                         text + "'");
      }
    } else {
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
        expect_term = true;
      } else {
        throw UsageError("expected + or - in range bound '" + text + "'");
      }
    }
  }
  if (expect_term) throw UsageError("dangling operator in range bound '" + text + "'");
  return total;
}

namespace {

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format '" + name + "'");
}

struct Emitter {
  Format format = Format::text;
  std::ostream* os = nullptr;
  bool csv_header_done = false;
  long pass = 0, fail = 0, error = 0;

  void emit(const CheckReport& r) {
    switch (r.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::error: ++error; break;
    }
    switch (format) {
      case Format::text: *os << report_to_text(r) << "\n"; break;
      case Format::json: *os << report_to_json(r).dump() << "\n"; break;
      case Format::csv:
        if (!csv_header_done) {
          *os << report_csv_header() << "\n";
          csv_header_done = true;
        }
        *os << report_to_csv(r) << "\n";
        break;
    }
  }

  long total() const { return pass + fail + error; }
  int exit_code() const { return error > 0 ? 3 : fail > 0 ? 1 : 0; }
};

// ---------------------------------------------------------------------------
// Instance expansion and the worker pool
// ---------------------------------------------------------------------------

struct VarSpec {
  std::string name;
  std::string default_range;
};

struct IdentitySpec {
  std::vector<VarSpec> vars;
  /// Filters nest entries that fall outside the operation's domain.
  std::function<bool(const Env&)> admissible;
  std::function<CheckReport(const Env&)> run;
  /// Replaces the plain nest expansion when set (remark1 walks quadruples).
  std::function<std::vector<Env>(const std::map<std::string, std::string>&)> expand;
};

void expand_nest(const std::vector<VarSpec>& vars,
                 const std::map<std::string, std::string>& overrides, size_t idx, Env& env,
                 const std::function<bool(const Env&)>& admissible, std::vector<Env>& out) {
  if (idx == vars.size()) {
    if (!admissible || admissible(env)) out.push_back(env);
    return;
  }
  const VarSpec& var = vars[idx];
  const auto it = overrides.find(var.name);
  const RangeSpec range = parse_range(it != overrides.end() ? it->second : var.default_range);
  const long lo = eval_bound(range.lo, env);
  const long hi = eval_bound(range.hi, env);
  for (long value = lo; value <= hi; ++value) {
    env.emplace_back(var.name, value);
    expand_nest(vars, overrides, idx + 1, env, admissible, out);
    env.pop_back();
    if (static_cast<long>(out.size()) > kMaxInstances)
      throw UsageError("range expands to more than " + std::to_string(kMaxInstances) +
                       " instances");
  }
}

std::vector<Env> expand_instances(const IdentitySpec& spec,
                                  const std::map<std::string, std::string>& overrides) {
  if (spec.expand) return spec.expand(overrides);
  std::vector<Env> out;
  Env env;
  expand_nest(spec.vars, overrides, 0, env, spec.admissible, out);
  return out;
}

/// Runs job(0..count-1) on a pool of `workers` threads. Each index is
/// handed out exactly once; results land in slot order, so output is by
/// parameter order no matter which worker finishes first.
std::vector<CheckReport> run_parallel(size_t count,
                                      const std::function<CheckReport(size_t)>& job,
                                      long workers) {
  std::vector<CheckReport> results(count);
  if (count == 0) return results;
  workers = std::max(1L, std::min<long>(workers, static_cast<long>(count)));
  if (workers == 1) {
    for (size_t idx = 0; idx < count; ++idx) results[idx] = job(idx);
    return results;
  }
  std::atomic<size_t> next{0};
  auto body = [&] {
    for (size_t idx; (idx = next.fetch_add(1)) < count;) results[idx] = job(idx);
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (long w = 0; w < workers; ++w) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  return results;
}

CheckReport guarded(const std::string& name, const Env& env,
                    const std::function<CheckReport()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    CheckReport r = body();
    r.wall_us = now_us(start);
    return r;
  } catch (const std::exception& e) {
    CheckReport r;
    r.check = name;
    r.params = env;
    r.status = Status::error;
    r.message = e.what();
    r.wall_us = now_us(start);
    return r;
  }
}

// ---------------------------------------------------------------------------
// Identity registry
// ---------------------------------------------------------------------------

long get(const Env& env, const char* name) { return lookup(env, name); }

const std::map<std::string, IdentitySpec>& identity_registry() {
  static const std::map<std::string, IdentitySpec> registry = [] {
    std::map<std::string, IdentitySpec> reg;

    reg["vandermonde-j"] = {
        {{"x", "0..8"}, {"y", "0..8"}, {"z", "0..x+y"}},
        nullptr,
        [](const Env& e) {
          return make_report(vandermonde_form_j(get(e, "x"), get(e, "y"), get(e, "z")));
        },
        nullptr};
    reg["vandermonde-k"] = {
        {{"x", "0..8"}, {"y", "0..8"}, {"z", "0..x+y"}},
        nullptr,
        [](const Env& e) {
          return make_report(vandermonde_form_k(get(e, "x"), get(e, "y"), get(e, "z")));
        },
        nullptr};
    reg["remark1"] = {
        {{"n", "2..24"}},
        nullptr,
        [](const Env& e) {
          auto pair = remark1_expansion(get(e, "a"), get(e, "b"), get(e, "c"), get(e, "d"));
          IdentityCheck check = get(e, "side") == 1 ? pair.first : pair.second;
          CheckReport r = make_report(check);
          r.params = e;
          return r;
        },
        [](const std::map<std::string, std::string>& overrides) {
          const auto it = overrides.find("n");
          const RangeSpec range = parse_range(it != overrides.end() ? it->second : "2..24");
          const long lo = eval_bound(range.lo, {});
          const long hi = eval_bound(range.hi, {});
          std::vector<Env> out;
          for (long n = lo; n <= hi; ++n)
            for (const Quadruple& t : quadruples_with_product(n))
              for (long side = 1; side <= 2; ++side)
                out.push_back(
                    {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}, {"side", side}});
          return out;
        }};
    reg["i1-special"] = {{{"a", "1..20"}},
                         nullptr,
                         [](const Env& e) { return make_report(i1_special_case(get(e, "a"))); },
                         nullptr};
    reg["lemma1"] = {{{"a", "1..10"}, {"i", "1..10"}},
                     nullptr,
                     [](const Env& e) { return make_report(lemma1_check(get(e, "a"), get(e, "i"))); },
                     nullptr};
    reg["lemma2"] = {{{"a", "1..10"}, {"i", "1..10"}},
                     nullptr,
                     [](const Env& e) { return make_report(lemma2_check(get(e, "a"), get(e, "i"))); },
                     nullptr};
    reg["theorem2"] = {
        {{"a", "1..10"}, {"i", "1..10"}},
        nullptr,
        [](const Env& e) { return make_report(theorem2_check(get(e, "a"), get(e, "i"))); },
        nullptr};
    reg["lemma4"] = {{{"a", "1..8"}, {"i", "1..8"}},
                     nullptr,
                     [](const Env& e) { return make_report(lemma4_check(get(e, "a"), get(e, "i"))); },
                     nullptr};
    reg["lemma5"] = {{{"a", "1..8"}, {"i", "1..8"}},
                     nullptr,
                     [](const Env& e) { return make_report(lemma5_check(get(e, "a"), get(e, "i"))); },
                     nullptr};
    reg["lemma6"] = {{{"i", "1..12"}, {"k", "1..i"}},
                     nullptr,
                     [](const Env& e) { return make_report(lemma6_check(get(e, "i"), get(e, "k"))); },
                     nullptr};
    reg["lemma7"] = {{{"i", "1..12"}, {"k", "0..i"}},
                     [](const Env& e) { return get(e, "k") <= get(e, "i"); },
                     [](const Env& e) { return make_report(lemma7_check(get(e, "i"), get(e, "k"))); },
                     nullptr};
    reg["theorem3-bracket"] = {
        {{"a", "1..8"}, {"i", "1..8"}, {"k", "1..i"}},
        nullptr,
        [](const Env& e) {
          return make_report(theorem3_bracket(get(e, "a"), get(e, "i"), get(e, "k")));
        },
        nullptr};
    reg["lemma8"] = {
        {{"a", "1..7"}, {"b", "a+1..8"}, {"k", "0..a"}},
        [](const Env& e) { return get(e, "a") < get(e, "b") && get(e, "k") <= get(e, "a"); },
        [](const Env& e) {
          return make_report(lemma8_check(get(e, "a"), get(e, "b"), get(e, "k")));
        },
        nullptr};
    reg["lemma9"] = {
        {{"n", "2..30"}, {"k", "1..n"}},
        [](const Env& e) { return 2 * get(e, "k") <= get(e, "n"); },
        [](const Env& e) { return make_report(lemma9_check(get(e, "n"), get(e, "k"))); },
        nullptr};
    return reg;
  }();
  return registry;
}

// ---------------------------------------------------------------------------
// Checkpoints
// ---------------------------------------------------------------------------

struct Checkpoint {
  std::string command;
  ordered_json ranges;
  long last_completed = 0;
};

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
  ordered_json j;
  j["command"] = cp.command;
  j["ranges"] = cp.ranges;
  j["last_completed"] = cp.last_completed;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write checkpoint file " + tmp);
    os << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> load_checkpoint(const std::string& path) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  ordered_json j;
  try {
    is >> j;
    Checkpoint cp;
    cp.command = j.at("command").get<std::string>();
    cp.ranges = j.at("ranges");
    cp.last_completed = j.at("last_completed").get<long>();
    return cp;
  } catch (const std::exception& e) {
    throw UsageError("corrupt checkpoint file " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
  long workers = 0; // 0 = hardware concurrency
};

long effective_workers(const CommonOptions& common) {
  if (common.workers > 0) return common.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<long>(hw);
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = nullptr;

  OutputTarget(const CommonOptions& common, std::ostream& fallback) {
    if (common.out_path.empty()) {
      os = &fallback;
      return;
    }
    file.open(common.out_path, std::ios::trunc);
    if (!file) throw UsageError("cannot open output file " + common.out_path);
    os = &file;
  }
};

int finish(const Emitter& emitter, std::ostream& err,
           const std::chrono::steady_clock::time_point& start) {
  err << emitter.total() << " checks: " << emitter.pass << " pass, " << emitter.fail
      << " fail, " << emitter.error << " error ("
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
      << " s)\n";
  return emitter.exit_code();
}

int cmd_table_ck(long max_i, const CommonOptions& common, std::ostream& out) {
  if (max_i < 1 || max_i > 64) throw UsageError("--max-i must be between 1 and 64");
  OutputTarget target(common, out);
  const auto table = ck_table(max_i);
  switch (parse_format(common.format)) {
    case Format::text: {
      size_t width = 1;
      for (const auto& row : table)
        for (const auto& value : row) width = std::max(width, value.str().size());
      for (size_t i = 0; i < table.size(); ++i) {
        *target.os << "i=" << std::setw(2) << i + 1 << " |";
        for (const auto& value : table[i])
          *target.os << " " << std::setw(static_cast<int>(width)) << value.str();
        *target.os << "\n";
      }
      break;
    }
    case Format::csv: {
      for (size_t i = 0; i < table.size(); ++i) {
        *target.os << i + 1;
        for (const auto& value : table[i]) *target.os << "," << value.str();
        *target.os << "\n";
      }
      break;
    }
    case Format::json: {
      ordered_json j;
      j["max_i"] = max_i;
      ordered_json rows = ordered_json::array();
      for (const auto& row : table) {
        ordered_json r = ordered_json::array();
        for (const auto& value : row) r.push_back(value.str());
        rows.push_back(r);
      }
      j["rows"] = rows;
      *target.os << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

int cmd_check_identity(const std::string& name,
                       const std::map<std::string, std::string>& overrides, bool inject_failure,
                       const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto& registry = identity_registry();
  const auto it = registry.find(name);
  if (it == registry.end()) {
    std::string known;
    for (const auto& [known_name, spec] : registry) known += known_name + " ";
    throw UnknownIdentityError("unknown identity '" + name + "'; available: " + known);
  }
  const IdentitySpec& spec = it->second;

  for (const auto& [flag, range] : overrides) {
    const bool allowed = std::any_of(spec.vars.begin(), spec.vars.end(),
                                     [&](const VarSpec& v) { return v.name == flag; });
    if (!allowed)
      throw UsageError("identity '" + name + "' does not take a --" + flag + " range");
  }

  const std::vector<Env> instances = expand_instances(spec, overrides);
  std::vector<CheckReport> reports = run_parallel(
      instances.size(),
      [&](size_t idx) {
        return guarded(name, instances[idx], [&] { return spec.run(instances[idx]); });
      },
      effective_workers(common));

  if (inject_failure && !reports.empty()) {
    reports.front().status = Status::fail;
    reports.front().witness = IntPoly{-1};
    reports.front().failing_index = 0;
    reports.front().message = "injected failure (test hook)";
  }

  OutputTarget target(common, out);
  Emitter emitter{parse_format(common.format), target.os};
  for (const auto& report : reports) emitter.emit(report);
  return finish(emitter, err, start);
}

struct Slice {
  long key = 0;
  std::vector<Env> instances;
};

int run_sliced_scan(const std::string& command, const ordered_json& ranges,
                    const std::vector<Slice>& slices,
                    const std::function<CheckReport(const Env&)>& runner,
                    const std::string& checkpoint_path, const CommonOptions& common,
                    std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<long> resume_after;
  if (!checkpoint_path.empty()) {
    if (auto cp = load_checkpoint(checkpoint_path)) {
      if (cp->command != command || cp->ranges != ranges)
        throw UsageError("checkpoint file " + checkpoint_path +
                         " belongs to a different command or ranges");
      resume_after = cp->last_completed;
    }
  }

  OutputTarget target(common, out);
  Emitter emitter{parse_format(common.format), target.os};
  for (const Slice& slice : slices) {
    if (resume_after && slice.key <= *resume_after) continue;
    const std::vector<CheckReport> reports = run_parallel(
        slice.instances.size(),
        [&](size_t idx) {
          return guarded(command, slice.instances[idx],
                         [&] { return runner(slice.instances[idx]); });
        },
        effective_workers(common));
    for (const auto& report : reports) emitter.emit(report);
    if (!checkpoint_path.empty())
      save_checkpoint(checkpoint_path, {command, ranges, slice.key});
  }
  return finish(emitter, err, start);
}

int cmd_check_conjecture(int which, long max_n,
                         const std::map<std::string, std::string>& overrides,
                         const std::string& checkpoint_path, const CommonOptions& common,
                         std::ostream& out, std::ostream& err) {
  const std::string command = "check-conjecture " + std::to_string(which);
  std::vector<Slice> slices;
  ordered_json ranges = ordered_json::object();
  std::function<CheckReport(const Env&)> runner;

  const auto allow_only = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [flag, range] : overrides) {
      const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                  [&](const char* name) { return flag == name; });
      if (!ok)
        throw UsageError("conjecture " + std::to_string(which) + " does not take a --" + flag +
                         " range");
    }
  };

  if (which == 1 || which == 2) {
    allow_only({});
    if (max_n < 1 || max_n > kMaxScanProduct)
      throw UsageError("--max-n must be between 1 and " + std::to_string(kMaxScanProduct));
    ranges["max-n"] = std::to_string(max_n);
    for (long n = 1; n <= max_n; ++n) {
      Slice slice{n, {}};
      for (const Quadruple& t : quadruples_with_product(n))
        slice.instances.push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}});
      slices.push_back(std::move(slice));
    }
    const Conjecture target_conj = which == 1 ? Conjecture::C1 : Conjecture::C2;
    runner = [target_conj](const Env& e) {
      return make_report(check_c1_c2(get(e, "a"), get(e, "b"), get(e, "c"), get(e, "d"),
                                     target_conj));
    };
  } else if (which == 3) {
    allow_only({"beta", "a", "b"});
    const std::vector<VarSpec> vars = {{"beta", "1..3"}, {"a", "1..8"}, {"b", "a+1..9"}};
    std::map<std::string, std::string> used;
    for (const VarSpec& v : vars) {
      const auto it = overrides.find(v.name);
      used[v.name] = it != overrides.end() ? it->second : v.default_range;
      ranges[v.name] = used[v.name];
    }
    std::vector<Env> all;
    Env env;
    expand_nest(vars, used, 0, env,
                [](const Env& e) { return get(e, "a") < get(e, "b"); }, all);
    for (const Env& instance : all) {
      if (slices.empty() || slices.back().key != instance.front().second)
        slices.push_back({instance.front().second, {}});
      slices.back().instances.push_back(instance);
    }
    runner = [](const Env& e) {
      return make_report(check_c3(get(e, "a"), get(e, "b"), get(e, "beta")));
    };
  } else if (which == 4) {
    allow_only({"b", "a", "k"});
    const std::vector<VarSpec> vars = {{"b", "2..10"}, {"a", "1..b-1"}, {"k", "0..a"}};
    std::map<std::string, std::string> used;
    for (const VarSpec& v : vars) {
      const auto it = overrides.find(v.name);
      used[v.name] = it != overrides.end() ? it->second : v.default_range;
      ranges[v.name] = used[v.name];
    }
    std::vector<Env> all;
    Env env;
    expand_nest(vars, used, 0, env,
                [](const Env& e) {
                  return get(e, "a") < get(e, "b") && get(e, "k") <= get(e, "a");
                },
                all);
    for (const Env& instance : all) {
      if (slices.empty() || slices.back().key != instance.front().second)
        slices.push_back({instance.front().second, {}});
      slices.back().instances.push_back(instance);
    }
    runner = [](const Env& e) {
      return make_report(check_c4(get(e, "a"), get(e, "b"), get(e, "k")));
    };
  } else {
    throw UsageError("conjecture number must be 1, 2, 3 or 4");
  }

  return run_sliced_scan(command, ranges, slices, runner, checkpoint_path, common, out, err);
}

int cmd_wz(const std::string& variant, const std::map<std::string, std::string>& overrides,
           std::optional<long> k_min, std::optional<long> k_max, const CommonOptions& common,
           std::ostream& out, std::ostream& err) {
  if (variant != "q1" && variant != "q") throw UsageError("wz variant must be 'q1' or 'q'");
  if (k_min.has_value() != k_max.has_value())
    throw UsageError("--k-min and --k-max must be given together");
  const auto start = std::chrono::steady_clock::now();

  const std::vector<VarSpec> vars = {{"a", "1..6"}, {"i", "1..6"}};
  std::map<std::string, std::string> used;
  for (const VarSpec& v : vars) {
    const auto it = overrides.find(v.name);
    used[v.name] = it != overrides.end() ? it->second : v.default_range;
  }
  std::vector<Env> instances;
  Env env;
  expand_nest(vars, used, 0, env,
              [](const Env& e) { return get(e, "a") >= 1 && get(e, "i") >= 1; }, instances);
  if (instances.empty() && (eval_bound(parse_range(used["a"]).lo, {}) < 1 ||
                            eval_bound(parse_range(used["i"]).lo, {}) < 1))
    throw UsageError("wz requires a >= 1 and i >= 1");

  const bool q1 = variant == "q1";
  std::vector<CheckReport> reports = run_parallel(
      instances.size(),
      [&](size_t idx) {
        const Env& e = instances[idx];
        return guarded(q1 ? "wz-q1" : "wz-q", e, [&] {
          const long a = get(e, "a");
          const long i = get(e, "i");
          auto [lo, hi] = wz_default_k_range(a, i);
          if (k_min) {
            lo = *k_min;
            hi = *k_max;
          }
          return make_report(q1 ? wz_check_q1(a, i, lo, hi) : wz_check_q(a, i, lo, hi));
        });
      },
      effective_workers(common));

  OutputTarget target(common, out);
  Emitter emitter{parse_format(common.format), target.os};
  for (const auto& report : reports) emitter.emit(report);
  return finish(emitter, err, start);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gaussian-binomial identity checker and inequality scanner"};
  app.name("qgauss");
  app.require_subcommand(1);

  CommonOptions common;
  const auto add_common = [&](CLI::App* cmd, bool with_workers = true) {
    cmd->add_option("--format", common.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_path, "Write reports to this file instead of stdout");
    if (with_workers)
      cmd->add_option("--workers", common.workers,
                      "Worker thread count (default: hardware concurrency)")
          ->check(CLI::Range(1, 1024));
  };

  // table-ck
  long max_i = 8;
  CLI::App* table_cmd = app.add_subcommand("table-ck", "Print the triangle of c_k(i) values");
  table_cmd->add_option("--max-i", max_i, "Number of rows")->capture_default_str();
  add_common(table_cmd, false);

  // check-identity
  std::string identity_name;
  bool inject_failure = false;
  std::map<std::string, std::string> identity_ranges;
  CLI::App* identity_cmd =
      app.add_subcommand("check-identity", "Verify one identity over parameter ranges");
  identity_cmd->add_option("name", identity_name, "Identity name (see --list)")->required();
  for (const char* flag : {"a", "b", "c", "d", "i", "k", "n", "x", "y", "z"})
    identity_cmd->add_option("--" + std::string(flag), identity_ranges[flag],
                             "Range for " + std::string(flag) + " (LO..HI, bounds may use outer "
                             "variables, e.g. --k 1..i)");
  identity_cmd->add_flag("--inject-failure", inject_failure)->group("");
  add_common(identity_cmd);

  // check-conjecture
  int which = 0;
  long max_n = 64;
  std::string checkpoint_path;
  std::map<std::string, std::string> conjecture_ranges;
  CLI::App* conjecture_cmd =
      app.add_subcommand("check-conjecture", "Scan a conjecture's instance space");
  conjecture_cmd->add_option("which", which, "Conjecture number: 1, 2, 3 or 4")->required();
  conjecture_cmd->add_option("--max-n", max_n, "Largest product ad = bc (conjectures 1 and 2)")
      ->capture_default_str();
  for (const char* flag : {"beta", "a", "b", "k"})
    conjecture_cmd->add_option("--" + std::string(flag), conjecture_ranges[flag],
                               "Range for " + std::string(flag));
  conjecture_cmd->add_option("--checkpoint", checkpoint_path,
                             "Checkpoint file; scans resume after the last completed slice");
  add_common(conjecture_cmd);

  // wz
  std::string wz_variant;
  std::map<std::string, std::string> wz_ranges;
  std::optional<long> k_min, k_max;
  CLI::App* wz_cmd = app.add_subcommand("wz", "Verify a Wilf-Zeilberger pair");
  wz_cmd->add_option("variant", wz_variant, "q1 (rational numbers) or q (rational functions)")
      ->required();
  for (const char* flag : {"a", "i"})
    wz_cmd->add_option("--" + std::string(flag), wz_ranges[flag],
                       "Range for " + std::string(flag));
  wz_cmd->add_option("--k-min", k_min, "Override the k window (default -1..min(a,i)+2)");
  wz_cmd->add_option("--k-max", k_max, "Override the k window upper end");
  add_common(wz_cmd);

  // selftest
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "Run the full acceptance suite and report per-criterion");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    // Drop flags the user never set so defaults in the registry apply.
    const auto prune = [](std::map<std::string, std::string>& ranges) {
      for (auto it = ranges.begin(); it != ranges.end();)
        it = it->second.empty() ? ranges.erase(it) : std::next(it);
    };
    prune(identity_ranges);
    prune(conjecture_ranges);
    prune(wz_ranges);

    if (app.got_subcommand(table_cmd)) return cmd_table_ck(max_i, common, out);
    if (app.got_subcommand(identity_cmd))
      return cmd_check_identity(identity_name, identity_ranges, inject_failure, common, out, err);
    if (app.got_subcommand(conjecture_cmd))
      return cmd_check_conjecture(which, max_n, conjecture_ranges, checkpoint_path, common, out,
                                  err);
    if (app.got_subcommand(wz_cmd))
      return cmd_wz(wz_variant, wz_ranges, k_min, k_max, common, out, err);
    if (app.got_subcommand(selftest_cmd)) return run_acceptance(out) == 0 ? 0 : 1;
    throw UsageError("no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdentityError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace qgauss::cli
