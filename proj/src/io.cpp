#include "mindenom/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace mindenom {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double parse_number(const std::string& s, const std::string& path, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SchemaError(path + ":" + std::to_string(line_no) + ": not a number: \"" + s + "\"");
    }
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void write_samples_csv(const std::string& path, const std::vector<Series>& series) {
    auto out = open_out(path);
    out << "series,index,input,statistic\n";
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.samples.size(); ++i)
            out << s.name << ',' << i << ',' << s.samples[i].input << ',' << format_double(s.samples[i].statistic) << '\n';
    finish(out, path);
}

void write_cdf_csv(const std::string& path, const std::vector<Series>& series, const std::vector<double>& grid) {
    auto out = open_out(path);
    out << "series,T,xi_hat\n";
    for (const auto& s : series) {
        const auto est = estimate_on_grid(EmpiricalCDF(statistics(s.samples)), 0.0, 0, grid);
        for (std::size_t k = 0; k < grid.size(); ++k)
            out << s.name << ',' << format_double(grid[k]) << ',' << format_double(est.xi_hat[k]) << '\n';
    }
    finish(out, path);
}

std::vector<CdfCurve> read_cdf_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw SchemaError(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "series,T,xi_hat") throw SchemaError(path + ": expected header series,T,xi_hat");
    std::vector<CdfCurve> curves;
    std::map<std::string, std::size_t> index;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) throw SchemaError(path + ":" + std::to_string(line_no) + ": expected 3 fields");
        const double t = parse_number(fields[1], path, line_no);
        const double xi = parse_number(fields[2], path, line_no);
        if (!(xi >= 0 && xi <= 1)) throw SchemaError(path + ":" + std::to_string(line_no) + ": xi_hat outside [0, 1]");
        auto [it, inserted] = index.emplace(fields[0], curves.size());
        if (inserted) curves.push_back({path, fields[0], {}, {}});
        curves[it->second].t.push_back(t);
        curves[it->second].xi.push_back(xi);
    }
    if (curves.empty()) throw SchemaError(path + ": no data rows");
    return curves;
}

std::string render_svg(const std::vector<CdfCurve>& curves) {
    const double width = 800, height = 500, left = 70, right = 220, top = 30, bottom = 60;
    const double pw = width - left - right, ph = height - top - bottom;
    double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
    for (const auto& c : curves)
        for (double t : c.t)
            if (t > 0) {
                tmin = std::min(tmin, t);
                tmax = std::max(tmax, t);
            }
    if (!std::isfinite(tmin)) {
        tmin = 0.01;
        tmax = 10;
    }
    if (tmax <= tmin) tmax = tmin * 10;
    const double lmin = std::log10(tmin), lmax = std::log10(tmax);
    auto px = [&](double t) { return left + (std::log10(t) - lmin) / (lmax - lmin) * pw; };
    auto py = [&](double xi) { return top + (1 - xi) * ph; };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
       << width << ' ' << height << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int e = static_cast<int>(std::ceil(lmin - 1e-12)); e <= static_cast<int>(std::floor(lmax + 1e-12)); ++e) {
        const double x = px(std::pow(10.0, e));
        os << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\"" << top + ph + 5
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << top + ph + 20 << "\" font-size=\"12\" text-anchor=\"middle\">1e" << e
           << "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double y = py(k / 4.0);
        os << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" font-size=\"12\" text-anchor=\"end\">" << k / 4.0
           << "</text>\n";
    }
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15 << "\" font-size=\"13\" text-anchor=\"middle\">T</text>\n";
    os << "<text x=\"18\" y=\"" << top + ph / 2 << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << top + ph / 2 << ")\">P(statistic &lt;= T)</text>\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* colour = palette[c % (sizeof palette / sizeof *palette)];
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t k = 0; k < curves[c].t.size(); ++k) {
            if (!(curves[c].t[k] > 0)) continue;
            os << (first ? "" : " ") << px(curves[c].t[k]) << ',' << py(curves[c].xi[k]);
            first = false;
        }
        os << "\"/>\n";
        const double ly = top + 15 + 18.0 * static_cast<double>(c);
        os << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 30 << "\" y2=\"" << ly
           << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << left + pw + 35 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">" << xml_escape(curves[c].series)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_merged_csv(const std::string& path, const std::vector<CdfCurve>& curves) {
    auto out = open_out(path);
    out << "source,series,T,xi_hat\n";
    for (const auto& c : curves)
        for (std::size_t k = 0; k < c.t.size(); ++k)
            out << c.source << ',' << c.series << ',' << format_double(c.t[k]) << ',' << format_double(c.xi[k]) << '\n';
    finish(out, path);
}

void write_text_file(const std::string& path, const std::string& content) {
    auto out = open_out(path);
    out << content;
    finish(out, path);
}

} // namespace mindenom
