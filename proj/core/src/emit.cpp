#include "objsize/emit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "objsize/format.hpp"

namespace objsize::sweep {

namespace {

constexpr const char* kTableHeader = "rho,N,mss,model,m_raw,m,n,theta_raw,theta";
constexpr const char* kInfeasible = "infeasible";

void write_row(std::ostream& out, const TableRow& row) {
  out << format_real(row.load) << ',' << row.embedded_count << ',' << row.mss
      << ',' << sizing::to_string(row.model) << ',' << format_real(row.m_raw)
      << ',' << row.m << ',';
  if (row.feasible) {
    out << format_real(row.n) << ',' << format_real(row.theta_raw) << ','
        << row.theta;
  } else {
    out << kInfeasible << ',' << kInfeasible << ',' << kInfeasible;
  }
  out << '\n';
}

void write_mean_row(std::ostream& out, const MeanRow& mean) {
  out << format_real(mean.load) << ",mean," << mean.mss << ','
      << sizing::to_string(mean.model) << ",,,,";
  if (mean.feasible)
    out << format_real(mean.theta_mean_raw) << ',' << mean.theta_mean;
  else
    out << kInfeasible << ',' << kInfeasible;
  out << '\n';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& text, std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw std::runtime_error("csv line " + std::to_string(line_no) +
                             ": bad real '" + text + "'");
  }
}

std::int64_t parse_int(const std::string& text, std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    const std::int64_t value = std::stoll(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw std::runtime_error("csv line " + std::to_string(line_no) +
                             ": bad integer '" + text + "'");
  }
}

template <typename Fn>
void for_each_load_group(const ObjectSizeTable& table, Fn&& fn) {
  std::vector<double> loads;
  for (const TableRow& row : table.rows)
    if (loads.empty() || loads.back() != row.load)
      if (std::find(loads.begin(), loads.end(), row.load) == loads.end())
        loads.push_back(row.load);
  for (const MeanRow& mean : table.means)
    if (std::find(loads.begin(), loads.end(), mean.load) == loads.end())
      loads.push_back(mean.load);
  for (const double load : loads) fn(load);
}

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "md" || name == "markdown") return Format::Markdown;
  if (name == "svg") return Format::Svg;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void write_table_csv(std::ostream& out, const ObjectSizeTable& table) {
  out << kTableHeader << '\n';
  for_each_load_group(table, [&](double load) {
    for (const TableRow& row : table.rows)
      if (row.load == load) write_row(out, row);
    for (const MeanRow& mean : table.means)
      if (mean.load == load) write_mean_row(out, mean);
  });
}

void write_table_markdown(std::ostream& out, const ObjectSizeTable& table) {
  bool first = true;
  for_each_load_group(table, [&](double load) {
    // Column per (mss, model) pair in order of first appearance.
    std::vector<std::pair<std::int64_t, sizing::DelayModel>> columns;
    std::vector<int> n_values;
    for (const TableRow& row : table.rows) {
      if (row.load != load) continue;
      const std::pair<std::int64_t, sizing::DelayModel> column{row.mss,
                                                               row.model};
      if (std::find(columns.begin(), columns.end(), column) == columns.end())
        columns.push_back(column);
      if (std::find(n_values.begin(), n_values.end(), row.embedded_count) ==
          n_values.end())
        n_values.push_back(row.embedded_count);
    }

    if (!first) out << '\n';
    first = false;
    out << "Mean object size (theta, bytes) for rho=" << format_real(load)
        << "\n\n";
    out << "| N |";
    for (const auto& [mss, model] : columns)
      out << ' ' << sizing::to_string(model) << " mss=" << mss << " |";
    out << "\n|---:|";
    for (std::size_t i = 0; i < columns.size(); ++i) out << "---:|";
    out << '\n';

    for (const int n : n_values) {
      out << "| " << n << " |";
      for (const auto& [mss, model] : columns) {
        for (const TableRow& row : table.rows) {
          if (row.load != load || row.embedded_count != n || row.mss != mss ||
              row.model != model)
            continue;
          if (row.feasible)
            out << ' ' << row.theta << " |";
          else
            out << ' ' << kInfeasible << " |";
          break;
        }
      }
      out << '\n';
    }

    out << "| mean |";
    for (const auto& [mss, model] : columns) {
      bool found = false;
      for (const MeanRow& mean : table.means) {
        if (mean.load != load || mean.mss != mss || mean.model != model)
          continue;
        if (mean.feasible)
          out << ' ' << mean.theta_mean << " |";
        else
          out << ' ' << kInfeasible << " |";
        found = true;
        break;
      }
      if (!found) out << " |";
    }
    out << '\n';
  });
}

void write_figure_csv(std::ostream& out,
                      const std::vector<SeriesPoint>& points) {
  out << "x,series,y\n";
  for (const SeriesPoint& point : points)
    out << format_real(point.x) << ',' << point.series << ','
        << format_real(point.y) << '\n';
}

void write_figure_svg(std::ostream& out, const std::vector<SeriesPoint>& points,
                      const std::string& title, const std::string& x_label,
                      const std::string& y_label) {
  constexpr double kWidth = 640, kHeight = 440;
  constexpr double kLeft = 72, kRight = 160, kTop = 44, kBottom = 52;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  static constexpr std::array<const char*, 6> kPalette = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

  std::vector<std::string> series;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool have_point = false;
  for (const SeriesPoint& point : points) {
    if (std::find(series.begin(), series.end(), point.series) == series.end())
      series.push_back(point.series);
    if (!have_point) {
      x_min = x_max = point.x;
      y_min = y_max = point.y;
      have_point = true;
    } else {
      x_min = std::min(x_min, point.x);
      x_max = std::max(x_max, point.x);
      y_min = std::min(y_min, point.y);
      y_max = std::max(y_max, point.y);
    }
  }
  if (x_max == x_min) x_max = x_min + 1.0;
  const double y_pad = y_max == y_min ? 1.0 : 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const auto x_px = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto y_px = [&](double y) {
    return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };
  char buffer[128];
  const auto px = [&](double v) {
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return std::string(buffer);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"15\">" << title << "</text>\n";

  // Axes with 5 tick labels each.
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop + plot_h)
      << "\" x2=\"" << px(kLeft + plot_w) << "\" y2=\"" << px(kTop + plot_h)
      << "\"/>\n";
  out << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\""
      << px(kLeft) << "\" y2=\"" << px(kTop + plot_h) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double fx = x_min + (x_max - x_min) * tick / 4.0;
    const double fy = y_min + (y_max - y_min) * tick / 4.0;
    out << "<text x=\"" << px(x_px(fx) - 8) << "\" y=\""
        << px(kTop + plot_h + 16) << "\">" << format_real(fx) << "</text>\n";
    out << "<text x=\"" << px(kLeft - 64) << "\" y=\"" << px(y_px(fy) + 4)
        << "\">" << format_real(fy) << "</text>\n";
  }
  out << "<text x=\"" << px(kLeft + plot_w / 2 - 10) << "\" y=\""
      << px(kHeight - 12) << "\">" << x_label << "</text>\n";
  out << "<text x=\"12\" y=\"" << px(kTop - 10) << "\">" << y_label
      << "</text>\n";
  out << "</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const SeriesPoint& point : points) {
      if (point.series != series[s]) continue;
      if (!first) out << ' ';
      first = false;
      out << px(x_px(point.x)) << ',' << px(y_px(point.y));
    }
    out << "\"/>\n";
    out << "<text x=\"" << px(kLeft + plot_w + 8) << "\" y=\""
        << px(kTop + 14 + 16 * static_cast<double>(s))
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
        << "\">" << series[s] << "</text>\n";
  }
  out << "</svg>\n";
}

ObjectSizeTable parse_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("csv: missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTableHeader)
    throw std::runtime_error("csv: unexpected header '" + line + "'");

  ObjectSizeTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 9)
      throw std::runtime_error("csv line " + std::to_string(line_no) +
                               ": expected 9 fields, got " +
                               std::to_string(fields.size()));
    if (fields[1] == "mean") {
      MeanRow mean{};
      mean.load = parse_double(fields[0], line_no);
      mean.mss = parse_int(fields[2], line_no);
      mean.model = sizing::delay_model_from_string(fields[3]);
      mean.feasible = fields[8] != kInfeasible;
      if (mean.feasible) {
        mean.theta_mean_raw = parse_double(fields[7], line_no);
        mean.theta_mean = parse_int(fields[8], line_no);
      }
      table.means.push_back(mean);
    } else {
      TableRow row{};
      row.load = parse_double(fields[0], line_no);
      row.embedded_count = static_cast<int>(parse_int(fields[1], line_no));
      row.mss = parse_int(fields[2], line_no);
      row.model = sizing::delay_model_from_string(fields[3]);
      row.m_raw = parse_double(fields[4], line_no);
      row.m = parse_int(fields[5], line_no);
      row.feasible = fields[6] != kInfeasible;
      if (row.feasible) {
        row.n = parse_double(fields[6], line_no);
        row.theta_raw = parse_double(fields[7], line_no);
        row.theta = parse_int(fields[8], line_no);
      }
      table.rows.push_back(row);
    }
  }
  return table;
}

namespace {

template <typename WriteFn>
void emit_to(const std::string& path, WriteFn&& write) {
  if (path.empty()) {
    write(std::cout);
    if (!std::cout) throw io_error("<stdout>", "write failed");
    return;
  }
  std::ofstream out(path);
  if (!out) throw io_error(path, "cannot open for writing");
  write(out);
  out.flush();
  if (!out) throw io_error(path, "write failed");
}

}  // namespace

void emit_table(const ObjectSizeTable& table, Format format,
                const std::string& path) {
  switch (format) {
    case Format::Csv:
      emit_to(path, [&](std::ostream& out) { write_table_csv(out, table); });
      return;
    case Format::Markdown:
      emit_to(path,
              [&](std::ostream& out) { write_table_markdown(out, table); });
      return;
    case Format::Svg:
      throw std::invalid_argument("tables cannot be emitted as svg");
  }
}

void emit_figure(const std::vector<SeriesPoint>& points, Format format,
                 const std::string& path, const std::string& title,
                 const std::string& x_label, const std::string& y_label) {
  switch (format) {
    case Format::Csv:
      emit_to(path, [&](std::ostream& out) { write_figure_csv(out, points); });
      return;
    case Format::Svg:
      emit_to(path, [&](std::ostream& out) {
        write_figure_svg(out, points, title, x_label, y_label);
      });
      return;
    case Format::Markdown:
      throw std::invalid_argument("figures cannot be emitted as markdown");
  }
}

}  // namespace objsize::sweep
