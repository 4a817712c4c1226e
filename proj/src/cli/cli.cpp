#include "lukas/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lukas/asymptotics.hpp"
#include "lukas/bfile.hpp"
#include "lukas/dp.hpp"
#include "lukas/engines.hpp"
#include "lukas/error.hpp"
#include "lukas/path.hpp"

namespace lukas::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* exit_code_help = R"(Exit codes:
  0  success
  1  internal error
  2  usage error or conflicting flags
  3  infinite family (left-to-right query with no end height and no bound)
  4  oracle cap exceeded
  5  engines disagree
  6  engine not applicable to the query
  7  b-file unreadable or malformed
  8  b-file mismatch
  9  selftest failure
  10 invalid query (e.g. end height above the bound)
Environment:
  LUKAS_ORDER  default truncation order for `series` (64 when unset))";

struct QueryFlags {
  std::optional<int> k;
  bool total = false;
  std::string kind = "any";
  std::string orientation = "l2r";
  std::optional<int> bound;
  bool alternate = false;

  void attach(CLI::App& app) {
    auto* k_opt = app.add_option("--k", k, "end height (default 0)")->check(CLI::NonNegativeNumber);
    app.add_flag("--total", total, "sum over all end heights")->excludes(k_opt);
    app.add_option("--kind", kind, "last step: up, flat, down or any")
        ->check(CLI::IsMember({"up", "flat", "down", "any"}))
        ->capture_default_str();
    app.add_option("--orientation", orientation, "l2r (prefixes) or r2l (suffixes)")
        ->check(CLI::IsMember({"l2r", "r2l"}))
        ->capture_default_str();
    app.add_option("--bound", bound, "maximum height t")->check(CLI::NonNegativeNumber);
    app.add_flag("--alternate", alternate, "no two consecutive steps of the same class");
  }

  PathQuery query(int n = 0) const {
    PathQuery q;
    q.n = n;
    q.k = total ? std::nullopt : std::optional<int>(k.value_or(0));
    q.kind = parse_end_kind(kind);
    q.orientation = parse_orientation(orientation);
    q.bound = bound;
    q.alternate = alternate;
    return q;
  }
};

json query_json(const PathQuery& q, bool with_n) {
  json j;
  if (with_n) j["n"] = q.n;
  j["k"] = q.k ? json(*q.k) : json(nullptr);
  j["kind"] = to_string(q.kind);
  j["orientation"] = to_string(q.orientation);
  j["bound"] = q.bound ? json(*q.bound) : json(nullptr);
  j["alternate"] = q.alternate;
  return j;
}

json strings(const std::vector<Count>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

std::string join(const std::vector<Count>& values, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += values[i].get_str();
  }
  return s;
}

std::string fixed(double x, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << x;
  return os.str();
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::infinite_family: return infinite_family;
    case Errc::oracle_cap_exceeded: return oracle_cap_exceeded;
    case Errc::engine_not_applicable: return engine_not_applicable;
    case Errc::engine_disagreement: return engine_disagreement;
    case Errc::bfile_malformed: return bfile_unreadable;
    case Errc::invalid_argument:
    case Errc::height_above_bound:
    case Errc::index_out_of_range: return invalid_query;
    default: return internal_error;
  }
}

std::size_t default_order() {
  if (const char* env = std::getenv("LUKAS_ORDER")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(Errc::invalid_argument, std::string("LUKAS_ORDER must be a positive integer, got '") + env + "'");
  }
  return 64;
}

// --- count -------------------------------------------------------------------

struct CountCmd {
  QueryFlags flags;
  int n = 0;
  std::string engine = "dp";
  int oracle_cap = default_oracle_cap;
  std::string format = "text";

  void attach(CLI::App& app) {
    app.add_option("--n", n, "path length")->required()->check(CLI::NonNegativeNumber);
    flags.attach(app);
    app.add_option("--engine", engine, "oracle, dp, closed, gf or all")
        ->check(CLI::IsMember({"oracle", "dp", "closed", "gf", "all"}))
        ->capture_default_str();
    app.add_option("--oracle-cap", oracle_cap, "largest n the oracle accepts")->capture_default_str();
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  }

  int run(std::ostream& out) const {
    const PathQuery q = flags.query(n);
    Count value;
    json engines = json::array();
    if (engine == "all") {
      std::vector<std::pair<Engine, Count>> results;
      for (Engine e : {Engine::oracle, Engine::dp, Engine::closed, Engine::gf}) {
        if (e == Engine::oracle && q.n > oracle_cap) continue;
        try {
          results.emplace_back(e, engine_count(e, q, oracle_cap));
        } catch (const Error& ex) {
          if (ex.code() != Errc::engine_not_applicable) throw;
        }
      }
      for (const auto& [e, v] : results) {
        engines.push_back(to_string(e));
        if (v != results.front().second) {
          std::string msg = "engines disagree on " + describe(q) + ":";
          for (const auto& [e2, v2] : results) msg += " " + to_string(e2) + "=" + v2.get_str();
          throw Error(Errc::engine_disagreement, msg);
        }
      }
      value = results.front().second;
    } else {
      value = engine_count(parse_engine(engine), q, oracle_cap);
    }
    if (format == "json") {
      json j;
      j["query"] = query_json(q, true);
      j["engine"] = engine;
      j["values"] = strings({value});
      json meta;
      if (engine == "all") meta["engines"] = engines;
      if (engine == "oracle" || engine == "all") meta["oracle_cap"] = oracle_cap;
      j["meta"] = meta.is_null() ? json::object() : meta;
      out << j.dump(2) << '\n';
    } else {
      out << value.get_str() << '\n';
    }
    return ok;
  }
};

// --- series ------------------------------------------------------------------

struct SeriesCmd {
  QueryFlags flags;
  std::optional<std::size_t> order;
  std::string engine = "auto";
  std::string format = "text";

  void attach(CLI::App& app) {
    flags.attach(app);
    app.add_option("--order", order, "number of coefficients (default 64 or LUKAS_ORDER)")
        ->check(CLI::PositiveNumber);
    app.add_option("--engine", engine, "auto (gf when available), gf or dp")
        ->check(CLI::IsMember({"auto", "gf", "dp"}))
        ->capture_default_str();
    app.add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
  }

  int run(std::ostream& out) const {
    const PathQuery q = flags.query();
    const std::size_t ord = order ? *order : default_order();
    std::vector<Count> values;
    Engine used = Engine::dp;
    if (engine == "auto") {
      values = series_counts(q, ord, &used);
    } else if (engine == "gf") {
      auto c = gf_coefficients(q, ord);
      if (!c) throw Error(Errc::engine_not_applicable, "engine gf does not cover " + describe(q));
      values = std::move(*c);
      used = Engine::gf;
    } else {
      values = dp_counts(q, static_cast<int>(ord));
    }
    if (format == "json") {
      json j;
      j["query"] = query_json(q, false);
      j["engine"] = to_string(used);
      j["values"] = strings(values);
      j["meta"] = json{{"order", ord}};
      out << j.dump(2) << '\n';
    } else if (format == "csv") {
      out << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i].get_str() << '\n';
    } else {
      out << join(values, ",") << '\n';
    }
    return ok;
  }
};

// --- check -------------------------------------------------------------------

struct CheckCmd {
  QueryFlags flags;
  std::string bfile;
  long shift = 0;
  long from = 0;
  std::string format = "text";

  void attach(CLI::App& app) {
    app.add_option("--bfile", bfile, "b-file to compare against")->required();
    app.add_option("--shift", shift, "computed index = b-file index + shift")->capture_default_str();
    app.add_option("--from", from, "skip computed indices below this")->capture_default_str();
    flags.attach(app);
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  }

  int run(std::ostream& out) const {
    const PathQuery q = flags.query();
    const BFile b = read_bfile(bfile);
    Engine used = Engine::dp;
    const auto computed = series_counts(q, required_order(b, shift), &used);
    const BFileComparison cmp = compare_bfile(b, computed, shift, from);
    if (format == "json") {
      json j;
      j["query"] = query_json(q, false);
      j["engine"] = to_string(used);
      j["bfile"] = bfile;
      j["shift"] = shift;
      j["from"] = from;
      j["comparisons"] = cmp.comparisons;
      json mism = json::array();
      for (const auto& m : cmp.mismatches) {
        mism.push_back(json{{"index", m.index}, {"computed", m.computed.get_str()}, {"expected", m.expected.get_str()}});
      }
      j["mismatches"] = mism;
      out << j.dump(2) << '\n';
    } else {
      for (const auto& m : cmp.mismatches) {
        out << "mismatch at n=" << m.index << ": computed " << m.computed.get_str() << ", expected "
            << m.expected.get_str() << '\n';
      }
      out << cmp.comparisons << " comparisons, " << cmp.mismatches.size() << " mismatches\n";
    }
    return cmp.mismatches.empty() ? ok : bfile_mismatch;
  }
};

// --- height ------------------------------------------------------------------

struct HeightCmd {
  std::string family;
  int k = 0;
  std::vector<int> lengths;
  int precision = 6;
  std::string route = "gf";
  std::string format = "text";

  void attach(CLI::App& app) {
    app.add_option("--family", family, "return-to-zero, prefix-at-k, suffix-at-k, suffix-any or prefix-any")
        ->required()
        ->check(CLI::IsMember({"return-to-zero", "prefix-at-k", "suffix-at-k", "suffix-any", "prefix-any"}));
    app.add_option("--k", k, "end height for the *-at-k families")->check(CLI::NonNegativeNumber);
    app.add_option("--n-list", lengths, "comma-separated lengths")->required()->delimiter(',')->check(
        CLI::PositiveNumber);
    app.add_option("--precision", precision, "digits after the point")->check(CLI::Range(0, 30))->capture_default_str();
    app.add_option("--route", route, "gf or dp")->check(CLI::IsMember({"gf", "dp"}))->capture_default_str();
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  }

  int run(std::ostream& out) const {
    const HeightFamily f{parse_family(family), k};
    const auto stats = sqrt_pi_ratio_profile(f, lengths, route == "dp" ? HeightRoute::dp : HeightRoute::gf);
    if (format == "json") {
      json j;
      j["query"] = json{{"family", family}, {"k", k}};
      j["route"] = route;
      json rows = json::array();
      for (const auto& s : stats) {
        rows.push_back(json{{"n", s.n},
                            {"mean", s.mean_height.get_str()},
                            {"mean_decimal", fixed(s.mean_height.get_d(), precision)},
                            {"sqrt_pi_n", fixed(s.sqrt_pi_n, precision)},
                            {"ratio", fixed(s.ratio, precision)}});
      }
      j["rows"] = rows;
      j["meta"] = json{{"precision", precision}};
      out << j.dump(2) << '\n';
    } else {
      out << "n\tmean\tmean_decimal\tsqrt_pi_n\tratio\n";
      for (const auto& s : stats) {
        out << s.n << '\t' << s.mean_height.get_str() << '\t' << fixed(s.mean_height.get_d(), precision) << '\t'
            << fixed(s.sqrt_pi_n, precision) << '\t' << fixed(s.ratio, precision) << '\n';
      }
    }
    return ok;
  }
};

// --- selftest ----------------------------------------------------------------

struct Fixture {
  const char* file;
  PathQuery query;
  long shift;
  long from;
};

PathQuery at(int k, Orientation o, EndKind kind = EndKind::any, std::optional<int> bound = std::nullopt) {
  return PathQuery{0, k, kind, o, bound, false};
}

PathQuery total(int t, Orientation o) { return PathQuery{0, std::nullopt, EndKind::any, o, t, false}; }

const std::vector<Fixture>& manifest() {
  constexpr auto l2r = Orientation::left_to_right;
  constexpr auto r2l = Orientation::right_to_left;
  static const std::vector<Fixture> m{
      {"b000108.txt", at(0, l2r), 0, 0},
      {"b000245.txt", at(1, l2r), 0, 0},
      {"b002057.txt", at(2, l2r), 1, 0},
      {"b000344.txt", at(3, l2r), -1, 0},
      {"b000108.txt", at(1, r2l), 0, 1},
      {"b000245.txt", at(2, r2l), 1, 0},
      {"b002057.txt", at(3, r2l), 3, 0},
      {"b001519.txt", at(2, l2r, EndKind::up, 2), 0, 1},
      {"b007051.txt", at(2, l2r, EndKind::up, 3), 1, 0},
      {"b080937.txt", at(2, l2r, EndKind::up, 4), 0, 1},
      {"b000012.txt", total(0, l2r), 0, 0},
      {"b000079.txt", total(1, l2r), 0, 0},
      {"b001906.txt", total(2, l2r), -1, 0},
      {"b003462.txt", total(3, l2r), -1, 0},
      {"b005021.txt", total(4, l2r), 0, 0},
      {"b000012.txt", total(0, r2l), 0, 0},
      {"b000079.txt", total(1, r2l), 0, 0},
      {"b001519.txt", total(2, r2l), -1, 0},
      {"b007051.txt", total(3, r2l), 0, 0},
  };
  return m;
}

struct SelftestCmd {
  bool quick = false;
  std::string fixtures = default_fixture_dir();

  void attach(CLI::App& app) {
    app.add_flag("--quick", quick, "grid up to n = 6 instead of 9");
    app.add_option("--fixtures", fixtures, "b-file directory")->capture_default_str();
  }

  int run(std::ostream& out) const {
    const int max_n = quick ? 6 : 9;
    const GridReport grid = cross_engine_grid(max_n);
    if (grid.first_failure) {
      out << "FAIL grid: " << *grid.first_failure << '\n';
      return selftest_failed;
    }
    out << "grid n<=" << max_n << ": " << grid.tuples << " tuples, " << grid.comparisons << " comparisons ok\n";
    for (const auto& fx : manifest()) {
      const auto path = std::filesystem::path(fixtures) / fx.file;
      const std::string label = std::string(fx.file) + " vs " + describe(fx.query, false) + " shift " +
                                std::to_string(fx.shift);
      BFileComparison cmp;
      try {
        const BFile b = read_bfile(path);
        cmp = compare_bfile(b, series_counts(fx.query, required_order(b, fx.shift)), fx.shift, fx.from);
      } catch (const Error& e) {
        out << "FAIL fixture " << fx.file << ": " << e.what() << '\n';
        return selftest_failed;
      }
      if (!cmp.mismatches.empty()) {
        const auto& mm = cmp.mismatches.front();
        out << "FAIL fixture " << fx.file << ": " << label << ": n=" << mm.index << " computed "
            << mm.computed.get_str() << ", expected " << mm.expected.get_str() << '\n';
        return selftest_failed;
      }
      if (cmp.comparisons == 0) {
        out << "FAIL fixture " << fx.file << ": no comparisons\n";
        return selftest_failed;
      }
      out << "fixture " << label << ": " << cmp.comparisons << " comparisons ok\n";
    }
    out << "selftest passed\n";
    return ok;
  }
};

}  // namespace

#ifndef LUKAS_FIXTURE_DIR
#define LUKAS_FIXTURE_DIR "tests/fixtures/bfiles"
#endif

std::string default_fixture_dir() { return LUKAS_FIXTURE_DIR; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting partial Lukasiewicz paths: prefixes, suffixes, bounded height and alternate paths."};
  app.name("lukas");
  app.footer(exit_code_help);
  app.require_subcommand(1);

  CountCmd count;
  SeriesCmd series;
  CheckCmd check;
  HeightCmd height;
  SelftestCmd selftest;
  auto* count_app = app.add_subcommand("count", "number of paths of one length");
  auto* series_app = app.add_subcommand("series", "generating-function coefficients");
  auto* check_app = app.add_subcommand("check", "compare a series with a b-file");
  auto* height_app = app.add_subcommand("height", "exact average height against sqrt(pi n)");
  auto* selftest_app = app.add_subcommand("selftest", "cross-engine grid and fixture comparisons");
  count.attach(*count_app);
  series.attach(*series_app);
  check.attach(*check_app);
  height.attach(*height_app);
  selftest.attach(*selftest_app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  try {
    if (count_app->parsed()) return count.run(out);
    if (series_app->parsed()) return series.run(out);
    if (check_app->parsed()) return check.run(out);
    if (height_app->parsed()) return height.run(out);
    if (selftest_app->parsed()) return selftest.run(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  return usage_error;
}

}  // namespace lukas::cli
