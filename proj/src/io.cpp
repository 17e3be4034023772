#include "dsep/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dsep {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    out.push_back(field);
    return out;
}

double parse_double(const std::string& s, const std::string& path, std::size_t lineno) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw input_error(path + ":" + std::to_string(lineno) + ": bad number '" + s + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_instance(const std::string& path, const Instance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    if (!inst.provenance.empty()) out << "# provenance: " << inst.provenance << "\n";
    out << "id,x,y,r\n";
    for (const Disk& d : inst.disks)
        out << d.id << ',' << format_double(d.cx) << ',' << format_double(d.cy) << ','
            << format_double(d.r) << "\n";
    if (!out) throw input_error("failed writing '" + path + "'");
}

Instance read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    Instance inst;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string tag = "# provenance: ";
            if (line.rfind(tag, 0) == 0) {
                if (!inst.provenance.empty()) inst.provenance += "; ";
                inst.provenance += line.substr(tag.size());
            }
            continue;
        }
        if (!header_seen) {
            if (line != "id,x,y,r")
                throw input_error(path + ":" + std::to_string(lineno) +
                                  ": expected header 'id,x,y,r'");
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 4)
            throw input_error(path + ":" + std::to_string(lineno) + ": expected 4 fields");
        Disk d;
        d.id = static_cast<int>(parse_double(fields[0], path, lineno));
        d.cx = parse_double(fields[1], path, lineno);
        d.cy = parse_double(fields[2], path, lineno);
        d.r = parse_double(fields[3], path, lineno);
        inst.disks.push_back(d);
    }
    if (!header_seen) throw input_error(path + ": missing 'id,x,y,r' header");
    validate_instance(inst);
    return inst;
}

std::string separator_record_json(const SeparatorResult& r, int n, std::int64_t m,
                                  double wall_ms) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"algorithm\": \"" << r.algorithm << "\",\n";
    out << "  \"alpha\": " << format_double(r.alpha) << ",\n";
    out << "  \"n\": " << n << ",\n";
    out << "  \"m\": " << m << ",\n";
    out << "  \"size\": " << r.size() << ",\n";
    out << "  \"left\": " << r.left << ",\n";
    out << "  \"right\": " << r.right << ",\n";
    out << "  \"trials_used\": " << r.trials_used << ",\n";
    out << "  \"line\": { \"nx\": " << format_double(r.line.nx)
        << ", \"ny\": " << format_double(r.line.ny) << ", \"c\": " << format_double(r.line.c)
        << " },\n";
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", wall_ms);
    out << "  \"wall_ms\": " << wall << "\n";
    out << "}\n";
    return out.str();
}

void write_scatter_svg(const std::string& path, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<SvgSeries>& series) {
    constexpr double W = 720, H = 540;
    constexpr double ML = 70, MR = 160, MT = 40, MB = 55;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!(x > 0.0) || !(y > 0.0)) continue;  // log axes
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin > xmax) {
        xmin = ymin = 1.0;
        xmax = ymax = 10.0;
    }
    auto pad_range = [](double& lo, double& hi) {
        lo = std::log10(lo);
        hi = std::log10(hi);
        const double pad = std::max(0.05 * (hi - lo), 0.05);
        lo -= pad;
        hi += pad;
    };
    pad_range(xmin, xmax);
    pad_range(ymin, ymax);

    auto px = [&](double logx) { return ML + (logx - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double logy) {
        return H - MB - (logy - ymin) / (ymax - ymin) * (H - MT - MB);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << title << "</text>\n";

    // frame
    out << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << (W - ML - MR)
        << "\" height=\"" << (H - MT - MB)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // decade ticks
    for (int e = static_cast<int>(std::ceil(xmin)); e <= static_cast<int>(std::floor(xmax));
         ++e) {
        const double x = px(e);
        out << "<line x1=\"" << x << "\" y1=\"" << (H - MB) << "\" x2=\"" << x << "\" y2=\""
            << (H - MB + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << (H - MB + 20)
            << "\" text-anchor=\"middle\" font-size=\"12\">1e" << e << "</text>\n";
    }
    for (int e = static_cast<int>(std::ceil(ymin)); e <= static_cast<int>(std::floor(ymax));
         ++e) {
        const double y = py(e);
        out << "<line x1=\"" << (ML - 5) << "\" y1=\"" << y << "\" x2=\"" << ML << "\" y2=\""
            << y << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << (ML - 8) << "\" y=\"" << (y + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << e << "</text>\n";
    }
    out << "<text x=\"" << (ML + (W - ML - MR) / 2) << "\" y=\"" << (H - 12)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << (MT + (H - MT - MB) / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
        << (MT + (H - MT - MB) / 2) << ")\">" << y_label << "</text>\n";

    double legend_y = MT + 14;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!(x > 0.0) || !(y > 0.0)) continue;
            out << "<circle cx=\"" << px(std::log10(x)) << "\" cy=\"" << py(std::log10(y))
                << "\" r=\"3\" fill=\"" << s.color << "\" fill-opacity=\"0.75\"/>\n";
        }
        out << "<circle cx=\"" << (W - MR + 16) << "\" cy=\"" << (legend_y - 4)
            << "\" r=\"4\" fill=\"" << s.color << "\"/>\n";
        out << "<text x=\"" << (W - MR + 26) << "\" y=\"" << legend_y
            << "\" font-size=\"12\">" << s.label << "</text>\n";
        legend_y += 18;
    }
    out << "</svg>\n";
    if (!out) throw input_error("failed writing '" + path + "'");
}

}  // namespace dsep
