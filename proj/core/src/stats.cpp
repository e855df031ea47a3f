#include "laver/stats.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

namespace laver {

namespace {

void require_cover(const ThresholdStore& store, ElementId p, const char* what) {
  if (store.max_p() < p)
    throw DomainError(std::string(what) + " needs the store to cover " +
                      std::to_string(p) + " (have " +
                      std::to_string(store.max_p()) + ")");
}

// Shortest decimal that round-trips.
std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

double FreqReport::frequency(int k) const {
  return static_cast<double>(counts[static_cast<std::size_t>(k)]) /
         static_cast<double>(std::uint64_t{1} << n);
}

std::string FreqReport::percent(int k) const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", 100.0 * frequency(k));
  return buf;
}

FreqReport frequency_table(const ThresholdStore& store, int n) {
  if (n < 1 || n > 31) throw DomainError("frequency table: n must be in [1, 31]");
  require_cover(store, ElementId{1} << n, "frequency table");
  FreqReport r;
  r.n = n;
  r.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  for (ElementId p = 1; p <= ElementId{1} << n; ++p)
    ++r.counts[static_cast<std::size_t>(floor_log2(store.period(p)))];
  return r;
}

DoublingReport doubling_counts(const ThresholdStore& store, int n) {
  if (n < 1 || n > 30) throw DomainError("doubling counts: n must be in [1, 30]");
  require_cover(store, ElementId{1} << (n + 2), "doubling counts");
  DoublingReport r;
  r.n = n;
  r.doubled.assign(static_cast<std::size_t>(n) + 1, 0);

  const ElementId half = ElementId{1} << (n - 1);
  for (ElementId p = 1; p <= half; ++p) {
    const std::uint64_t before = store.period(p);
    const std::uint64_t after = store.period(p + half);
    if (after == 2 * before)
      ++r.doubled[static_cast<std::size_t>(floor_log2(after))];
  }
  const ElementId grown = ElementId{1} << (n + 1);
  for (ElementId p = 1; p <= grown; ++p)
    if (store.period(p + grown) == 2 * store.period(p)) ++r.doubling_total;

  // The recursion tying N_k(n) to N_k(n-1) must hold exactly; anything else
  // means the store is corrupt.
  if (n >= 2) {
    const FreqReport now = frequency_table(store, n);
    const FreqReport prev = frequency_table(store, n - 1);
    for (int k = 0; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      const std::uint64_t doubled_above = k < n ? r.doubled[ku + 1] : 0;
      const std::uint64_t prev_k = k < n ? prev.counts[ku] : 0;
      if (now.counts[ku] + doubled_above != 2 * prev_k + r.doubled[ku])
        throw FormatError("doubling recursion identity violated at k = " +
                          std::to_string(k) + ", n = " + std::to_string(n));
    }
  }
  return r;
}

bool is_pow2_difference(std::uint64_t theta) {
  if (theta == 0) return false;
  const std::uint64_t shifted = theta >> std::countr_zero(theta);
  return (shifted & (shifted + 1)) == 0;
}

JointReport joint_table(const ThresholdStore& store, ElementId max_p) {
  if (max_p < 2) throw DomainError("joint table requires max_p >= 2");
  require_cover(store, max_p, "joint table");
  JointReport r;
  r.max_p = max_p;
  for (ElementId p = 2; p <= max_p; ++p) {
    const std::uint64_t theta = store.theta(p);
    ++r.cells[{theta, store.period(p)}];
  }
  for (const auto& [cell, count] : r.cells) {
    (void)count;
    if (!is_pow2_difference(cell.first) &&
        (r.irregular_thetas.empty() || r.irregular_thetas.back() != cell.first))
      r.irregular_thetas.push_back(cell.first);
  }
  return r;
}

GrowthReport pi_of_one_growth(Table& table, int max_n) {
  if (max_n < 1 || max_n > 30)
    throw DomainError("growth scan: max_n must be in [1, 30]");
  GrowthReport r;
  r.max_n = max_n;
  std::uint64_t last = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t period = table.period((ElementId{1} << n) - 1);
    r.periods.emplace_back(n, period);
    if (period != last) {
      r.first_attained.emplace_back(period, n);
      last = period;
    }
  }
  return r;
}

std::string to_csv(const FreqReport& r) {
  std::string out = "k,count,frequency\n";
  for (int k = 0; k <= r.n; ++k) {
    out += std::to_string(k);
    out += ',';
    out += std::to_string(r.counts[static_cast<std::size_t>(k)]);
    out += ',';
    out += format_double(r.frequency(k));
    out += '\n';
  }
  return out;
}

std::string to_csv(const DoublingReport& r) {
  std::string out = "k,doubled\n";
  for (int k = 0; k <= r.n; ++k) {
    out += std::to_string(k);
    out += ',';
    out += std::to_string(r.doubled[static_cast<std::size_t>(k)]);
    out += '\n';
  }
  return out;
}

std::string to_csv(const JointReport& r) {
  std::string out = "theta,period,count\n";
  for (const auto& [cell, count] : r.cells) {
    out += std::to_string(cell.first);
    out += ',';
    out += std::to_string(cell.second);
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

std::string to_csv(const GrowthReport& r) {
  std::string out = "n,period\n";
  for (const auto& [n, period] : r.periods) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(period);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const FreqReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= r.n; ++k)
    rows.push_back({{"k", k},
                    {"period", std::uint64_t{1} << k},
                    {"count", r.counts[static_cast<std::size_t>(k)]},
                    {"frequency", r.frequency(k)},
                    {"percent", r.percent(k)}});
  return {{"type", "frequency"}, {"n", r.n}, {"rows", rows}};
}

nlohmann::json to_json(const DoublingReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= r.n; ++k)
    rows.push_back({{"k", k}, {"doubled", r.doubled[static_cast<std::size_t>(k)]}});
  return {{"type", "doubling"},
          {"n", r.n},
          {"rows", rows},
          {"doubling_total", r.doubling_total}};
}

nlohmann::json to_json(const JointReport& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [cell, count] : r.cells)
    cells.push_back(
        {{"theta", cell.first}, {"period", cell.second}, {"count", count}});
  return {{"type", "joint"},
          {"max_p", r.max_p},
          {"cells", cells},
          {"irregular_thetas", r.irregular_thetas}};
}

nlohmann::json to_json(const GrowthReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, period] : r.periods)
    rows.push_back({{"n", n}, {"period", period}});
  nlohmann::json attained = nlohmann::json::array();
  for (const auto& [period, n] : r.first_attained)
    attained.push_back({{"period", period}, {"first_n", n}});
  return {{"type", "growth"},
          {"max_n", r.max_n},
          {"rows", rows},
          {"first_attained", attained}};
}

FreqReport freq_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "frequency")
    throw FormatError("not a frequency report");
  FreqReport r;
  r.n = j.at("n").get<int>();
  r.counts.assign(static_cast<std::size_t>(r.n) + 1, 0);
  for (const auto& row : j.at("rows"))
    r.counts.at(row.at("k").get<std::size_t>()) =
        row.at("count").get<std::uint64_t>();
  return r;
}

DoublingReport doubling_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "doubling")
    throw FormatError("not a doubling report");
  DoublingReport r;
  r.n = j.at("n").get<int>();
  r.doubled.assign(static_cast<std::size_t>(r.n) + 1, 0);
  for (const auto& row : j.at("rows"))
    r.doubled.at(row.at("k").get<std::size_t>()) =
        row.at("doubled").get<std::uint64_t>();
  r.doubling_total = j.at("doubling_total").get<std::uint64_t>();
  return r;
}

JointReport joint_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "joint") throw FormatError("not a joint report");
  JointReport r;
  r.max_p = j.at("max_p").get<ElementId>();
  for (const auto& cell : j.at("cells"))
    r.cells[{cell.at("theta").get<std::uint64_t>(),
             cell.at("period").get<std::uint64_t>()}] =
        cell.at("count").get<std::uint64_t>();
  r.irregular_thetas =
      j.at("irregular_thetas").get<std::vector<std::uint64_t>>();
  return r;
}

GrowthReport growth_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "growth") throw FormatError("not a growth report");
  GrowthReport r;
  r.max_n = j.at("max_n").get<int>();
  for (const auto& row : j.at("rows"))
    r.periods.emplace_back(row.at("n").get<int>(),
                           row.at("period").get<std::uint64_t>());
  for (const auto& row : j.at("first_attained"))
    r.first_attained.emplace_back(row.at("period").get<std::uint64_t>(),
                                  row.at("first_n").get<int>());
  return r;
}

template <typename Report>
void write_report(const Report& r, ReportFormat format,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (format == ReportFormat::kCsv) {
    out << to_csv(r);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
  if (!out) throw IoError("short write to " + path);
}

template void write_report<FreqReport>(const FreqReport&, ReportFormat,
                                       const std::string&);
template void write_report<DoublingReport>(const DoublingReport&, ReportFormat,
                                           const std::string&);
template void write_report<JointReport>(const JointReport&, ReportFormat,
                                        const std::string&);
template void write_report<GrowthReport>(const GrowthReport&, ReportFormat,
                                         const std::string&);

}  // namespace laver
