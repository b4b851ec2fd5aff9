#include "rwa/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rwa::report {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void ensure_writable_dir(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("output directory '" + dir.string() + "' cannot be created");
    const fs::path probe = dir / ".rwa_write_probe";
    {
        std::ofstream out(probe);
        if (!out || !(out << "ok") || !out.flush())
            throw IoError("output directory '" + dir.string() + "' is not writable");
    }
    fs::remove(probe, ec);
}

namespace {

std::string one_line(const std::string& s) {
    std::string out = s;
    std::replace(out.begin(), out.end(), '\n', ' ');
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string svg_comment(const Metadata& meta) {
    std::string out = "<!--\n";
    for (const auto& [k, v] : meta) {
        std::string line = one_line(k + ": " + v);
        // "--" is not allowed inside XML comments
        for (std::size_t pos; (pos = line.find("--")) != std::string::npos;) line.replace(pos, 2, "- -");
        out += line + "\n";
    }
    return out + "-->\n";
}

std::string fmt(double x, int digits = 6) {
    std::ostringstream s;
    s.precision(digits);
    s << x;
    return s.str();
}

}  // namespace

std::string render_csv(const Metadata& meta, const Table& table) {
    std::string out;
    for (const auto& [k, v] : meta) out += "# " + one_line(k) + ": " + one_line(v) + "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) out += (i ? "," : "") + table.header[i];
    out += "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) throw std::invalid_argument("render_csv: row width differs from header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += format_number(row[i]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json with_metadata(const Metadata& meta, const nlohmann::ordered_json& payload) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    doc["metadata"] = m;
    for (const auto& [k, v] : payload.items()) doc[k] = v;
    return doc;
}

std::string render_json(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_line_svg(const Metadata& meta, const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<Series>& series) {
    constexpr double W = 720, H = 480, L = 70, R = 20, T = 40, B = 50;
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : series) {
        for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
        for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
    }
    if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
    if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << svg_comment(meta);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(title)
      << "</text>\n";
    o << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
        o << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
          << fmt(xv, 4) << "</text>\n";
        o << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
          << fmt(yv, 4) << "</text>\n";
    }
    o << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"13\">"
      << xml_escape(x_label) << "</text>\n";
    o << "<text x=\"16\" y=\"" << H / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << H / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
    double legend_y = T + 14;
    for (const auto& s : series) {
        o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.2\"";
        if (s.dashed) o << " stroke-dasharray=\"5,3\"";
        o << " points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
            o << (i ? " " : "") << fmt(px(s.x[i])) << "," << fmt(py(s.y[i]));
        o << "\"/>\n";
        if (!s.label.empty()) {
            o << "<text x=\"" << L + 10 << "\" y=\"" << legend_y << "\" font-size=\"12\" fill=\"" << s.color << "\">"
              << xml_escape(s.label) << "</text>\n";
            legend_y += 15;
        }
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_heatmap_svg(const Metadata& meta, const std::string& title, const std::vector<double>& x_axis,
                               const std::vector<double>& y_axis, const std::vector<std::vector<double>>& values) {
    constexpr double W = 520, H = 520, L = 60, T = 40, S = 420;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& row : values)
        for (double v : row) lo = std::min(lo, v), hi = std::max(hi, v);
    const double span = hi > lo ? hi - lo : 1.0;
    const double cw = S / static_cast<double>(std::max<std::size_t>(x_axis.size(), 1));
    const double ch = S / static_cast<double>(std::max<std::size_t>(y_axis.size(), 1));

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n" << svg_comment(meta);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(title)
      << "</text>\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values[i].size(); ++j) {
            const int level = static_cast<int>(std::lround(255.0 * (values[i][j] - lo) / span));
            // x runs left to right, y bottom to top
            o << "<rect x=\"" << fmt(L + i * cw) << "\" y=\"" << fmt(T + S - (j + 1) * ch) << "\" width=\""
              << fmt(cw) << "\" height=\"" << fmt(ch) << "\" fill=\"rgb(" << level << "," << level << "," << level
              << ")\"/>\n";
        }
    }
    o << "<text x=\"" << L + S / 2 << "\" y=\"" << T + S + 30 << "\" text-anchor=\"middle\" font-size=\"13\">x ["
      << fmt(x_axis.empty() ? 0 : x_axis.front(), 4) << ", " << fmt(x_axis.empty() ? 0 : x_axis.back(), 4)
      << "]  p [" << fmt(y_axis.empty() ? 0 : y_axis.front(), 4) << ", " << fmt(y_axis.empty() ? 0 : y_axis.back(), 4)
      << "]  gap [" << fmt(lo, 4) << ", " << fmt(hi, 4) << "]</text>\n";
    o << "</svg>\n";
    return o.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out.flush()) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace rwa::report
