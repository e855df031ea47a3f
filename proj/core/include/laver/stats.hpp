#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "laver/table.hpp"
#include "laver/threshold_store.hpp"

namespace laver {

// Period census of [1, 2^n]: counts[k] = number of p with period 2^k.
// counts[0] = 1 (only p = 1) and counts[1] = n (the p = 1 + 2^j) always.
struct FreqReport {
  int n = 0;
  std::vector<std::uint64_t> counts;  // k = 0..n

  double frequency(int k) const;
  // Percentage with six decimals, the resolution used for comparisons.
  std::string percent(int k) const;
  bool operator==(const FreqReport&) const = default;
};

// Period-doubling census. doubled[k] counts p in [1, 2^{n-1}] with
// period(p) = 2^{k-1} and period(p + 2^{n-1}) = 2^k, which ties consecutive
// frequency reports together exactly:
//   N_k(n) = 2 N_k(n-1) + P_k(n) - P_{k+1}(n).
// doubling_total counts the p in [1, 2^{n+1}] whose period doubles when the
// bit 2^{n+1} is added (the table's growth step out of order 2^{n+1}).
struct DoublingReport {
  int n = 0;
  std::vector<std::uint64_t> doubled;  // P_k(n), k = 0..n
  std::uint64_t doubling_total = 0;
  bool operator==(const DoublingReport&) const = default;
};

// Histogram of (threshold, period) pairs over p in [2, max_p], plus the
// threshold values that are not of the form 2^i - 2^j (a contiguous run of
// ones in binary). Those are reported, not asserted: whether they exist at
// all is open.
struct JointReport {
  ElementId max_p = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> cells;
  std::vector<std::uint64_t> irregular_thetas;
  bool operator==(const JointReport&) const = default;
};

// Growth of the period of 1 in the order-2^n table (= period(2^n - 1)).
struct GrowthReport {
  int max_n = 0;
  std::vector<std::pair<int, std::uint64_t>> periods;        // (n, period)
  std::vector<std::pair<std::uint64_t, int>> first_attained;  // (value, first n)
  bool operator==(const GrowthReport&) const = default;
};

FreqReport frequency_table(const ThresholdStore& store, int n);
DoublingReport doubling_counts(const ThresholdStore& store, int n);
JointReport joint_table(const ThresholdStore& store, ElementId max_p);
GrowthReport pi_of_one_growth(Table& table, int max_n);

// theta = 2^i - 2^j for some i > j >= 0, i.e. a contiguous ones run.
bool is_pow2_difference(std::uint64_t theta);

std::string to_csv(const FreqReport& r);
std::string to_csv(const DoublingReport& r);
std::string to_csv(const JointReport& r);
std::string to_csv(const GrowthReport& r);

nlohmann::json to_json(const FreqReport& r);
nlohmann::json to_json(const DoublingReport& r);
nlohmann::json to_json(const JointReport& r);
nlohmann::json to_json(const GrowthReport& r);

FreqReport freq_from_json(const nlohmann::json& j);
DoublingReport doubling_from_json(const nlohmann::json& j);
JointReport joint_from_json(const nlohmann::json& j);
GrowthReport growth_from_json(const nlohmann::json& j);

enum class ReportFormat { kCsv, kJson };

// Writes a report to a file (LF endings, UTF-8).
template <typename Report>
void write_report(const Report& r, ReportFormat format, const std::string& path);

}  // namespace laver
