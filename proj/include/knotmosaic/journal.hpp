#ifndef KNOTMOSAIC_JOURNAL_HPP
#define KNOTMOSAIC_JOURNAL_HPP

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/counting.hpp"

namespace knotmosaic {

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// {"m":..,"n":..,"quantity":..,"method":..,"value":"<decimal>"}; values
/// are strings because they outgrow every JSON number type.
inline nlohmann::json to_json(const CountResult& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"quantity", std::string(to_string(r.quantity))},
          {"method", r.method_label()},
          {"value", to_decimal(r.value)}};
}

inline CountResult count_result_from_json(const nlohmann::json& j) {
  CountResult r;
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  const auto quantity = parse_quantity(j.at("quantity").get<std::string>());
  std::string method = j.at("method").get<std::string>();
  if (method.rfind("cache:", 0) == 0) method.erase(0, 6);
  const auto parsed_method = parse_method(method);
  if (!quantity || !parsed_method) throw std::runtime_error("unknown quantity or method in journal record");
  r.quantity = *quantity;
  r.method = *parsed_method;
  r.value = parse_decimal(j.at("value").get<std::string>());
  return r;
}

/// Append-only JSON-lines journal of count results. The last record for a
/// key wins on lookup.
class ResultJournal {
 public:
  explicit ResultJournal(std::filesystem::path file) : file_(std::move(file)) {}

  const std::filesystem::path& path() const { return file_; }

  void append(const CountResult& r) const {
    if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
    std::ofstream out(file_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open result journal " + file_.string());
    nlohmann::json j = to_json(r);
    j["method"] = std::string(to_string(r.method));
    j["timestamp"] = utc_timestamp();
    out << j.dump() << '\n';
  }

  /// Throws std::runtime_error on a malformed record.
  std::optional<CountResult> lookup(int m, int n, Quantity q, std::optional<Method> method = std::nullopt) const {
    std::ifstream in(file_);
    if (!in) return std::nullopt;
    std::optional<CountResult> found;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      CountResult r;
      try {
        r = count_result_from_json(nlohmann::json::parse(line));
      } catch (const std::exception& e) {
        throw std::runtime_error(file_.string() + ":" + std::to_string(line_no) + ": corrupt journal record (" +
                                 e.what() + ")");
      }
      if (r.m == m && r.n == n && r.quantity == q && (!method || r.method == *method)) found = std::move(r);
    }
    if (found) found->from_cache = true;
    return found;
  }

 private:
  std::filesystem::path file_;
};

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_JOURNAL_HPP
