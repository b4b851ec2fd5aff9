// report.hpp: CSV, JSON and SVG writers shared by the command layer.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace rwa::report {

/// File system failure (unwritable directory, failed write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// %.17g with '.' as decimal separator regardless of locale.
std::string format_number(double x);

/// Creates dir if needed and proves it writable with a probe file.
void ensure_writable_dir(const std::filesystem::path& dir);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// '#key: value' metadata lines, the comma header, then one line per row.
std::string render_csv(const Metadata& meta, const Table& table);

/// Object with "metadata" first, then the payload keys.
nlohmann::ordered_json with_metadata(const Metadata& meta, const nlohmann::ordered_json& payload);
std::string render_json(const nlohmann::ordered_json& doc);

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

/// Simple line plot; metadata goes into a leading XML comment.
std::string render_line_svg(const Metadata& meta, const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<Series>& series);

/// Grayscale heatmap of values[ix][iy] (dark = small).
std::string render_heatmap_svg(const Metadata& meta, const std::string& title, const std::vector<double>& x_axis,
                               const std::vector<double>& y_axis, const std::vector<std::vector<double>>& values);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace rwa::report
