#pragma once

#include <string>
#include <vector>

#include "mfill/io.hpp"

namespace mfill {

inline const char* toolkit_version() { return "0.1.0"; }

/// One checked or computed item; every verdict names the invariant it
/// tested so reports stay traceable.
struct ReportItem {
  std::string name;
  std::string invariant;
  std::string verdict;  // PASS | FAIL | INFO
  std::string value;
  std::string tolerance;
  std::string details;
};

/// Machine-readable experiment record. Deterministic: no timestamps or
/// timing inside the payload (wall time goes to the console channel).
class Report {
 public:
  Report(std::string command, Json config);

  void add_input(const std::string& path, const std::string& digest);
  void add_item(ReportItem item);
  void info(const std::string& name, const std::string& value,
            const std::string& details = "");
  void check(const std::string& name, const std::string& invariant, bool pass,
             const std::string& value, const std::string& tolerance = "",
             const std::string& details = "");

  bool all_passed() const;
  std::size_t fail_count() const;
  const std::vector<ReportItem>& items() const { return items_; }

  /// Structured result object (polygons, embeddings, series, ...).
  void set_payload(Json payload) { payload_ = std::move(payload); }

  Json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  Json config_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<ReportItem> items_;
  Json payload_;
};

/// Minimal deterministic SVG scatter/line plot of (x, y) points with an
/// optional horizontal reference value.
std::string svg_ratio_plot(const std::vector<std::pair<double, double>>& points,
                           const std::string& x_label, const std::string& y_label,
                           double reference = 0, const std::string& ref_label = "");

}  // namespace mfill
