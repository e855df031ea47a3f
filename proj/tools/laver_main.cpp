// Command-line front end: every library operation behind a subcommand with
// machine-readable output. Progress and diagnostics go to stderr only.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "laver/maximal.hpp"
#include "laver/plot.hpp"
#include "laver/row_cache.hpp"
#include "laver/scan.hpp"
#include "laver/stats.hpp"
#include "laver/table.hpp"
#include "laver/term.hpp"
#include "laver/threshold_store.hpp"
#include "laver/verify.hpp"

namespace {

using laver::ElementId;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitIo = 3;

struct GlobalOptions {
  std::string format = "plain";  // plain | csv | json
  std::string store_path;
  std::uint64_t cache_budget = std::uint64_t{256} << 20;
  std::uint64_t seed = 1;
  bool verbose = false;
};

laver::Table make_table(const GlobalOptions& g) {
  laver::TableConfig cfg;
  cfg.max_row_entries = g.cache_budget / sizeof(ElementId);
  if (!g.store_path.empty())
    return laver::Table(laver::ThresholdStore::load(g.store_path), cfg);
  return laver::Table(cfg);
}

// Store for the statistics passes: loaded from --store when given, else
// scanned in memory up to `needed`.
laver::ThresholdStore stats_store(const GlobalOptions& g, ElementId needed) {
  if (!g.store_path.empty()) {
    laver::ThresholdStore store = laver::ThresholdStore::load(g.store_path);
    if (store.max_p() < needed)
      throw laver::DomainError("store covers " + std::to_string(store.max_p()) +
                               " but " + std::to_string(needed) +
                               " is needed");
    return store;
  }
  laver::ScanOptions opts;
  if (g.verbose)
    opts.progress = [](ElementId done, ElementId target) {
      std::fprintf(stderr, "scan: %llu/%llu\r", (unsigned long long)done,
                   (unsigned long long)target);
    };
  laver::ThresholdStore store = laver::scan(needed, opts);
  if (g.verbose) std::fprintf(stderr, "\n");
  return store;
}

// Exclusive scan lock next to the store file.
class ScanLock {
 public:
  explicit ScanLock(const std::string& store_path)
      : path_(store_path + ".lock") {
    fd_ = ::open(path_.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) throw laver::IoError("cannot open lock file " + path_);
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(fd_);
      fd_ = -1;
      throw laver::IoError("another scan holds the lock on " + path_);
    }
  }
  ~ScanLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
      ::unlink(path_.c_str());
    }
  }
  ScanLock(const ScanLock&) = delete;
  ScanLock& operator=(const ScanLock&) = delete;

 private:
  std::string path_;
  int fd_ = -1;
};

void print_value(const GlobalOptions& g, ElementId value) {
  if (g.format == "json")
    std::cout << nlohmann::json{{"value", value}}.dump() << '\n';
  else
    std::cout << value << '\n';
}

std::string partition_text(const laver::BinaryPartition& partition) {
  std::string out;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    if (i > 0) out += '+';
    out += "2^" + std::to_string(partition.parts[i].first) + " x " +
           std::to_string(partition.parts[i].second);
  }
  return out;
}

laver::BinaryPartition parse_partition_text(const std::string& text) {
  laver::BinaryPartition partition;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  const auto number = [&]() -> std::uint64_t {
    skip_space();
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
      v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
    if (pos == start) throw laver::ParseError("expected a number", pos);
    return v;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '2' || pos + 1 >= text.size() || text[pos + 1] != '^')
      throw laver::ParseError("expected a '2^a x m' term", pos);
    pos += 2;
    const auto exponent = static_cast<int>(number());
    skip_space();
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != '*'))
      throw laver::ParseError("expected 'x' in partition term", pos);
    ++pos;
    const std::uint64_t multiplicity = number();
    partition.parts.emplace_back(exponent, multiplicity);
    skip_space();
    if (pos < text.size()) {
      if (text[pos] != '+')
        throw laver::ParseError("expected '+' between terms", pos);
      ++pos;
      skip_space();
    }
  }
  return partition;
}

int run(int argc, char** argv) {
  CLI::App app{"Laver tables: products, rows, thresholds, statistics and "
               "machine verification"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--store", g.store_path, "Threshold store file to read");
  app.add_option("--cache-budget", g.cache_budget,
                 "Byte budget for row materialization (>= 1 MiB)")
      ->check(CLI::Range(std::uint64_t{1} << 20,
                         std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--seed", g.seed, "Seed for sampled verification suites");
  app.add_flag("--verbose", g.verbose, "Progress and diagnostics on stderr");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Build a threshold store file");
  ElementId scan_max = 0;
  std::string scan_out;
  bool scan_resume_flag = false;
  scan_cmd->add_option("--max", scan_max, "Largest element to scan")->required();
  scan_cmd->add_option("--out", scan_out, "Output store path")->required();
  scan_cmd->add_flag("--resume", scan_resume_flag,
                     "Continue from an existing store at --out");

  // prod
  auto* prod_cmd = app.add_subcommand("prod", "Product of two elements");
  ElementId prod_p = 0, prod_q = 0;
  std::string prod_conv = "back";
  int prod_order = 0;
  prod_cmd->add_option("p", prod_p)->required();
  prod_cmd->add_option("q", prod_q)->required();
  prod_cmd->add_option("--conv", prod_conv, "back or star")
      ->check(CLI::IsMember({"back", "star"}));
  prod_cmd->add_option("--order", prod_order, "Order exponent n (star only)");

  // row / period / threshold
  auto* row_cmd = app.add_subcommand("row", "Row of p up to its period");
  ElementId row_p = 0;
  row_cmd->add_option("p", row_p)->required();

  auto* period_cmd = app.add_subcommand("period", "Period of the row of p");
  ElementId period_p = 0;
  period_cmd->add_option("p", period_p)->required();

  auto* threshold_cmd = app.add_subcommand("threshold", "Threshold of p");
  ElementId threshold_p = 0;
  threshold_cmd->add_option("p", threshold_p)->required();

  // table
  auto* table_cmd = app.add_subcommand("table", "Full star table of order 2^n");
  int table_order = 0;
  table_cmd->add_option("--order", table_order, "Order exponent n (<= 12)")
      ->required()
      ->check(CLI::Range(1, 12));

  // stats
  auto* freq_cmd = app.add_subcommand("freq", "Period frequency census");
  int freq_n = 0;
  freq_cmd->add_option("--n", freq_n, "Census over [1, 2^n]")->required();

  auto* doubling_cmd = app.add_subcommand("doubling", "Period doubling census");
  int doubling_n = 0;
  doubling_cmd->add_option("--n", doubling_n)->required();

  auto* joint_cmd =
      app.add_subcommand("joint", "Joint threshold/period histogram");
  ElementId joint_max = 0;
  joint_cmd->add_option("--max", joint_max)->required();

  auto* growth_cmd =
      app.add_subcommand("growth", "Growth of the period of 1 with the order");
  int growth_max_n = 0;
  growth_cmd->add_option("--max-n", growth_max_n)->required();

  // maximal
  auto* maximal_cmd = app.add_subcommand("maximal", "Maximal-element subsystem");
  maximal_cmd->require_subcommand(1);
  auto* mc_check = maximal_cmd->add_subcommand("check", "Pattern test");
  ElementId mc_check_p = 0;
  mc_check->add_option("p", mc_check_p)->required();
  auto* mc_list = maximal_cmd->add_subcommand("list", "Maximal elements in [lo, hi]");
  ElementId mc_lo = 0, mc_hi = 0;
  mc_list->add_option("lo", mc_lo)->required();
  mc_list->add_option("hi", mc_hi)->required();
  auto* mc_prod = maximal_cmd->add_subcommand("prod", "Fast product, p maximal");
  ElementId mc_prod_p = 0, mc_prod_q = 0;
  mc_prod->add_option("p", mc_prod_p)->required();
  mc_prod->add_option("q", mc_prod_q)->required();
  auto* mc_part = maximal_cmd->add_subcommand("partition", "Binary partition of p");
  ElementId mc_part_p = 0;
  mc_part->add_option("p", mc_part_p)->required();
  auto* mc_from = maximal_cmd->add_subcommand(
      "from-partition", "Element from a '2^a x m + ...' partition");
  std::string mc_from_text;
  std::uint64_t mc_from_gap = 0;
  mc_from->add_option("partition", mc_from_text)->required();
  mc_from->add_option("--leader-gap", mc_from_gap, "Zeros after the leading 1");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term like (1*(1*2))");
  std::string eval_text;
  int eval_order = 0;
  eval_cmd->add_option("expr", eval_text)->required();
  eval_cmd->add_option("--order", eval_order, "Order exponent n")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string verify_suite;
  std::uint64_t verify_max = 0;
  verify_cmd->add_option("suite", verify_suite, "Suite name, or 'all'")
      ->required();
  verify_cmd->add_option("--max", verify_max, "Override the suite bound");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Point dumps as x,y CSV");
  std::string plot_kind;
  ElementId plot_max = 0;
  plot_cmd->add_option("kind", plot_kind, "subset-order or table")
      ->required()
      ->check(CLI::IsMember({"subset-order", "table"}));
  plot_cmd->add_option("--max", plot_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitDomain;
  }

  if (scan_cmd->parsed()) {
    ScanLock lock(scan_out);
    laver::ThresholdStore store;
    if (scan_resume_flag) {
      try {
        store = laver::ThresholdStore::load(scan_out);
        std::fprintf(stderr, "resuming from %llu\n",
                     (unsigned long long)store.max_p());
      } catch (const laver::IoError&) {
        std::fprintf(stderr, "no store at %s, starting fresh\n",
                     scan_out.c_str());
      }
    }
    laver::ScanOptions opts;
    opts.checkpoint_path = scan_out;
    opts.progress = [](ElementId done, ElementId target) {
      std::fprintf(stderr, "scan: %llu/%llu\r", (unsigned long long)done,
                   (unsigned long long)target);
    };
    store = laver::scan_resume(std::move(store), scan_max, opts);
    store.save(scan_out);
    std::fprintf(stderr, "\nscan complete: theta(2..%llu) -> %s\n",
                 (unsigned long long)store.max_p(), scan_out.c_str());
    return kExitOk;
  }

  if (prod_cmd->parsed()) {
    laver::Table t = make_table(g);
    if (prod_conv == "star") {
      if (prod_order == 0)
        throw laver::DomainError("--conv star requires --order");
      print_value(g, t.star_prod(prod_order, prod_p, prod_q));
    } else {
      if (prod_order != 0)
        throw laver::DomainError("--order applies to --conv star only");
      print_value(g, t.back_prod(prod_p, prod_q));
    }
    return kExitOk;
  }

  if (row_cmd->parsed()) {
    laver::Table t = make_table(g);
    const laver::Row row = t.row(row_p);
    if (g.format == "json") {
      std::cout << nlohmann::json{{"p", row.owner},
                                  {"period", row.period()},
                                  {"values", row.values}}
                       .dump()
                << '\n';
    } else {
      for (std::size_t i = 0; i < row.values.size(); ++i)
        std::cout << (i ? "," : "") << row.values[i];
      std::cout << '\n';
    }
    return kExitOk;
  }

  if (period_cmd->parsed()) {
    laver::Table t = make_table(g);
    print_value(g, t.period(period_p));
    return kExitOk;
  }

  if (threshold_cmd->parsed()) {
    laver::Table t = make_table(g);
    print_value(g, t.threshold(threshold_p));
    return kExitOk;
  }

  if (table_cmd->parsed()) {
    laver::Table t = make_table(g);
    const ElementId size = ElementId{1} << table_order;
    if (g.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (ElementId p = 1; p <= size; ++p) {
        nlohmann::json row = nlohmann::json::array();
        for (ElementId q = 1; q <= size; ++q)
          row.push_back(t.star_prod(table_order, p, q));
        rows.push_back(std::move(row));
      }
      std::cout << rows.dump() << '\n';
    } else {
      for (ElementId p = 1; p <= size; ++p) {
        for (ElementId q = 1; q <= size; ++q)
          std::cout << (q > 1 ? "," : "") << t.star_prod(table_order, p, q);
        std::cout << '\n';
      }
    }
    return kExitOk;
  }

  if (freq_cmd->parsed()) {
    const auto store = stats_store(g, ElementId{1} << freq_n);
    const laver::FreqReport report = laver::frequency_table(store, freq_n);
    if (g.format == "json")
      std::cout << laver::to_json(report).dump(2) << '\n';
    else if (g.format == "csv")
      std::cout << laver::to_csv(report);
    else
      for (int k = 0; k <= report.n; ++k)
        std::cout << "period 2^" << k << ": " << report.counts[k] << " ("
                  << report.percent(k) << "%)\n";
    return kExitOk;
  }

  if (doubling_cmd->parsed()) {
    const auto store = stats_store(g, ElementId{1} << (doubling_n + 2));
    const laver::DoublingReport report =
        laver::doubling_counts(store, doubling_n);
    if (g.format == "json")
      std::cout << laver::to_json(report).dump(2) << '\n';
    else if (g.format == "csv")
      std::cout << laver::to_csv(report);
    else {
      for (int k = 0; k <= report.n; ++k)
        std::cout << "doubled to 2^" << k << ": " << report.doubled[k] << '\n';
      std::cout << "doubling total: " << report.doubling_total << '\n';
    }
    return kExitOk;
  }

  if (joint_cmd->parsed()) {
    const auto store = stats_store(g, joint_max);
    const laver::JointReport report = laver::joint_table(store, joint_max);
    for (std::uint64_t theta : report.irregular_thetas)
      std::fprintf(stderr, "note: theta value %llu is not of the form 2^i-2^j\n",
                   (unsigned long long)theta);
    if (g.format == "json")
      std::cout << laver::to_json(report).dump(2) << '\n';
    else
      std::cout << laver::to_csv(report);
    return kExitOk;
  }

  if (growth_cmd->parsed()) {
    laver::TableConfig cfg;
    cfg.max_row_entries = g.cache_budget / sizeof(ElementId);
    if (growth_max_n > 0 && growth_max_n < 62)
      cfg.max_dense_elements =
          std::max(cfg.max_dense_elements, ElementId{1} << growth_max_n);
    laver::Table t = g.store_path.empty()
                         ? laver::Table(cfg)
                         : laver::Table(
                               laver::ThresholdStore::load(g.store_path), cfg);
    const laver::GrowthReport report = laver::pi_of_one_growth(t, growth_max_n);
    if (g.format == "json")
      std::cout << laver::to_json(report).dump(2) << '\n';
    else if (g.format == "csv")
      std::cout << laver::to_csv(report);
    else
      for (const auto& [n, period] : report.periods)
        std::cout << "n=" << n << ": " << period << '\n';
    return kExitOk;
  }

  if (maximal_cmd->parsed()) {
    if (mc_check->parsed()) {
      std::cout << (laver::is_maximal(mc_check_p) ? "true" : "false") << '\n';
      return kExitOk;
    }
    if (mc_list->parsed()) {
      const auto elements = laver::list_maximal(mc_lo, mc_hi);
      if (g.format == "json") {
        std::cout << nlohmann::json(elements).dump() << '\n';
      } else {
        for (ElementId p : elements) std::cout << p << '\n';
      }
      return kExitOk;
    }
    if (mc_prod->parsed()) {
      print_value(g, laver::maximal_prod(mc_prod_p, mc_prod_q));
      return kExitOk;
    }
    if (mc_part->parsed()) {
      const laver::MaximalDecomposition d =
          laver::maximal_to_partition(mc_part_p);
      if (g.format == "json") {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& [exp, mult] : d.partition.parts)
          parts.push_back({{"exponent", exp}, {"multiplicity", mult}});
        std::cout << nlohmann::json{{"parts", parts},
                                    {"leader_gap", d.leader_gap}}
                         .dump()
                  << '\n';
      } else {
        std::cout << partition_text(d.partition) << '\n';
        if (d.leader_gap > 0)
          std::fprintf(stderr, "leader gap: %llu\n",
                       (unsigned long long)d.leader_gap);
      }
      return kExitOk;
    }
    // from-partition
    const laver::BinaryPartition partition = parse_partition_text(mc_from_text);
    print_value(g, laver::partition_to_maximal(partition, mc_from_gap));
    return kExitOk;
  }

  if (eval_cmd->parsed()) {
    laver::Table t = make_table(g);
    const laver::LdTerm term = laver::parse_term(eval_text);
    print_value(g, laver::eval_term(term, eval_order, t));
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    laver::VerifyOptions opts;
    opts.max = verify_max;
    opts.seed = g.seed;
    bool all_pass = true;
    if (verify_suite == "all") {
      nlohmann::json results = nlohmann::json::array();
      for (const std::string& name : laver::suite_names()) {
        const laver::SuiteResult r = laver::run_suite(name, opts);
        std::fprintf(stderr, "%-20s %s (%llu instances, %lld ms)\n",
                     name.c_str(), r.pass() ? "pass" : "FAIL",
                     (unsigned long long)r.instances, (long long)r.millis);
        all_pass = all_pass && r.pass();
        results.push_back(laver::to_json(r));
      }
      std::cout << results.dump(2) << '\n';
    } else {
      const laver::SuiteResult r = laver::run_suite(verify_suite, opts);
      all_pass = r.pass();
      std::cout << laver::to_json(r).dump(2) << '\n';
    }
    return all_pass ? kExitOk : kExitCounterexample;
  }

  if (plot_cmd->parsed()) {
    std::vector<laver::PlotPoint> points;
    if (plot_kind == "subset-order") {
      points = laver::subset_order_points(plot_max);
    } else {
      laver::Table t = make_table(g);
      points = laver::table_points(t, plot_max);
    }
    laver::write_points_csv(std::cout, points);
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const laver::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const laver::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const laver::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const laver::BoundError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
}
