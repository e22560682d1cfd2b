#pragma once

// Report emission: object-size tables as CSV (fixed header
// rho,N,mss,model,m_raw,m,n,theta_raw,theta) or Markdown mirroring the
// reference table layout, figure series as CSV (x,series,y) or a minimal
// self-contained SVG polyline chart. UTF-8, '\n' newlines, comma delimiter,
// no quoting. Infeasible cells render as the literal token `infeasible`;
// mean rows carry `mean` in the N column.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "objsize/sweep.hpp"

namespace objsize::sweep {

enum class Format { Csv, Markdown, Svg };

Format format_from_string(std::string_view name);

// Filesystem failures carry the offending path.
class io_error : public std::runtime_error {
 public:
  io_error(const std::string& path, const std::string& what)
      : std::runtime_error(what + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

void write_table_csv(std::ostream& out, const ObjectSizeTable& table);
void write_table_markdown(std::ostream& out, const ObjectSizeTable& table);

void write_figure_csv(std::ostream& out, const std::vector<SeriesPoint>& points);
void write_figure_svg(std::ostream& out, const std::vector<SeriesPoint>& points,
                      const std::string& title, const std::string& x_label,
                      const std::string& y_label);

// Inverse of write_table_csv, for round-tripping emitted tables. Real
// fields come back at the emitted precision (6 significant digits);
// integer fields exactly.
ObjectSizeTable parse_table_csv(std::istream& in);

// Writes to `path`, or to stdout when `path` is empty. Figures only accept
// Csv and Svg; tables only Csv and Markdown.
void emit_table(const ObjectSizeTable& table, Format format,
                const std::string& path);
void emit_figure(const std::vector<SeriesPoint>& points, Format format,
                 const std::string& path, const std::string& title,
                 const std::string& x_label, const std::string& y_label);

}  // namespace objsize::sweep
