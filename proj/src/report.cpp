#include "mfill/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mfill {

Report::Report(std::string command, Json config)
    : command_(std::move(command)), config_(std::move(config)) {}

void Report::add_input(const std::string& path, const std::string& digest) {
  inputs_.push_back({path, digest});
}

void Report::add_item(ReportItem item) { items_.push_back(std::move(item)); }

void Report::info(const std::string& name, const std::string& value,
                  const std::string& details) {
  items_.push_back({name, "", "INFO", value, "", details});
}

void Report::check(const std::string& name, const std::string& invariant, bool pass,
                   const std::string& value, const std::string& tolerance,
                   const std::string& details) {
  items_.push_back({name, invariant, pass ? "PASS" : "FAIL", value, tolerance, details});
}

bool Report::all_passed() const { return fail_count() == 0; }

std::size_t Report::fail_count() const {
  std::size_t n = 0;
  for (const auto& it : items_)
    if (it.verdict == "FAIL") ++n;
  return n;
}

Json Report::to_json() const {
  Json out;
  out["tool"] = "mfill";
  out["version"] = toolkit_version();
  out["command"] = command_;
  out["config"] = config_;
  Json inputs = Json::array();
  for (const auto& [path, digest] : inputs_) {
    Json in;
    in["path"] = path;
    in["digest"] = digest;
    inputs.push_back(std::move(in));
  }
  out["inputs"] = std::move(inputs);
  Json items = Json::array();
  std::size_t pass = 0, fail = 0;
  for (const auto& it : items_) {
    Json j;
    j["name"] = it.name;
    if (!it.invariant.empty()) j["invariant"] = it.invariant;
    j["verdict"] = it.verdict;
    if (!it.value.empty()) j["value"] = it.value;
    if (!it.tolerance.empty()) j["tolerance"] = it.tolerance;
    if (!it.details.empty()) j["details"] = it.details;
    items.push_back(std::move(j));
    if (it.verdict == "PASS") ++pass;
    if (it.verdict == "FAIL") ++fail;
  }
  out["items"] = std::move(items);
  if (!payload_.is_null()) out["result"] = payload_;
  Json summary;
  summary["pass"] = pass;
  summary["fail"] = fail;
  out["summary"] = std::move(summary);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream ss;
  ss << "mfill " << toolkit_version() << " -- " << command_ << "\n";
  for (const auto& [path, digest] : inputs_)
    ss << "input " << path << " (digest " << digest << ")\n";
  for (const auto& it : items_) {
    ss << "[" << it.verdict << "] " << it.name;
    if (!it.value.empty()) ss << " = " << it.value;
    if (!it.tolerance.empty()) ss << " (tolerance " << it.tolerance << ")";
    if (!it.invariant.empty()) ss << "  {" << it.invariant << "}";
    if (!it.details.empty()) ss << "\n        " << it.details;
    ss << "\n";
  }
  ss << "summary: " << (items_.size() - fail_count()) << "/" << items_.size()
     << " items ok\n";
  return ss.str();
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string svg_ratio_plot(const std::vector<std::pair<double, double>>& points,
                           const std::string& x_label, const std::string& y_label,
                           double reference, const std::string& ref_label) {
  const double W = 640, H = 420, ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!points.empty()) {
    xmin = xmax = points[0].first;
    ymin = ymax = points[0].second;
    for (const auto& [x, y] : points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (reference > 0) {
    ymin = std::min(ymin, reference);
    ymax = std::max(ymax, reference);
  }
  ymin = std::min(ymin, 0.0);
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  double xpad = 0.05 * (xmax - xmin), ypad = 0.08 * (ymax - ymin);
  xmin -= xpad;
  xmax += xpad;
  ymax += ypad;
  auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto Y = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  s << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
    << H - mb << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
    << H - mb << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
    << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n";
  s << "<text x=\"16\" y=\"" << (mt + H - mb) / 2
    << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
    << (mt + H - mb) / 2 << ")\">" << y_label << "</text>\n";
  // Axis extremes.
  s << "<text x=\"" << ml << "\" y=\"" << H - mb + 16
    << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(xmin + xpad) << "</text>\n";
  s << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 16
    << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(xmax - xpad) << "</text>\n";
  s << "<text x=\"" << ml - 6 << "\" y=\"" << Y(ymax - ypad) + 4
    << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(ymax - ypad) << "</text>\n";
  s << "<text x=\"" << ml - 6 << "\" y=\"" << Y(ymin) + 4
    << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(ymin) << "</text>\n";

  if (reference > 0) {
    s << "<line x1=\"" << ml << "\" y1=\"" << Y(reference) << "\" x2=\"" << W - mr
      << "\" y2=\"" << Y(reference)
      << "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
    if (!ref_label.empty())
      s << "<text x=\"" << W - mr - 4 << "\" y=\"" << Y(reference) - 5
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#555\">" << ref_label
        << "</text>\n";
  }

  if (!points.empty()) {
    s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : points) s << fmt(X(x)) << "," << fmt(Y(y)) << " ";
    s << "\"/>\n";
    for (const auto& [x, y] : points)
      s << "<circle cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y))
        << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace mfill
