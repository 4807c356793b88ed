#include "pkpm/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

namespace pkpm {

namespace {

constexpr double kWidth = 640.0, kHeight = 440.0;
constexpr double kLeft = 62.0, kRight = 18.0, kTop = 34.0, kBottom = 46.0;

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

struct Frame {
    double xmin, xmax, ymin, ymax;
    double px(double x) const {
        return kLeft + (x - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        return kHeight - kBottom - (y - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
    }
};

void polyline(std::ostream& os, const Frame& f, const std::vector<double>& xs,
              const std::vector<double>& ys, const char* color, const char* dash) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\"";
    if (dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << " points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << fmt3(f.px(xs[i])) << "," << fmt3(f.py(ys[i])) << " ";
    os << "\"/>\n";
}

}  // namespace

void write_comparison_svg(std::ostream& os, const FrequencyTable& table, LawChoice law,
                          const std::string& title) {
    std::vector<double> hs, freq, sig;
    for (const auto& r : table.rows) {
        hs.push_back(r.h);
        freq.push_back(r.frequency);
        sig.push_back(r.sigmoid);
    }
    const double h_star = table.h_star_estimate;

    Frame f{};
    f.xmin = *std::min_element(hs.begin(), hs.end());
    f.xmax = *std::max_element(hs.begin(), hs.end());
    f.xmin = std::min(f.xmin, h_star);
    f.xmax = std::max(f.xmax, h_star);
    f.ymin = 0.0;
    f.ymax = 1.0;
    for (const auto& r : table.rows) {
        f.ymin = std::min({f.ymin, r.frequency, r.sigmoid});
        f.ymax = std::max({f.ymax, r.frequency, r.sigmoid});
    }
    const double mx = 0.05 * (f.xmax - f.xmin), my = 0.05 * (f.ymax - f.ymin);
    f.xmin -= mx;
    f.xmax += mx;
    f.ymin -= my;
    f.ymax += my;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\" "
          "font-family=\"sans-serif\">" << escape(title) << "</text>\n";

    // frame and ticks
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
       << "\" height=\"" << kHeight - kTop - kBottom
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double x = f.xmin + (f.xmax - f.xmin) * i / 5.0;
        const double y = f.ymin + (f.ymax - f.ymin) * i / 5.0;
        os << "<line x1=\"" << fmt3(f.px(x)) << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
           << fmt3(f.px(x)) << "\" y2=\"" << kHeight - kBottom + 5
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << fmt3(f.px(x)) << "\" y=\"" << kHeight - kBottom + 18
           << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt3(x)
           << "</text>\n";
        os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt3(f.py(y)) << "\" x2=\"" << kLeft
           << "\" y2=\"" << fmt3(f.py(y)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt3(f.py(y) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt3(y)
           << "</text>\n";
    }
    os << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">h</text>\n";
    os << "<text x=\"16\" y=\"" << (kTop + kHeight - kBottom) / 2
       << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
          "transform=\"rotate(-90 16 " << (kTop + kHeight - kBottom) / 2 << ")\">frequency</text>\n";

    // vertical marker at the estimated critical mesh size
    os << "<line x1=\"" << fmt3(f.px(h_star)) << "\" y1=\"" << kTop << "\" x2=\""
       << fmt3(f.px(h_star)) << "\" y2=\"" << kHeight - kBottom
       << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"8,4\"/>\n";
    os << "<text x=\"" << fmt3(f.px(h_star) + 4) << "\" y=\"" << kTop + 14
       << "\" font-size=\"11\" font-family=\"sans-serif\">h* = " << fmt3(h_star) << "</text>\n";

    if (law == LawChoice::two_steps || law == LawChoice::both) {
        // exact step shape, not grid interpolation
        std::vector<double> xs, ys;
        const double lo = f.xmin, hi = f.xmax;
        if (h_star > lo) {
            xs.insert(xs.end(), {lo, std::min(h_star, hi)});
            ys.insert(ys.end(), {1.0, 1.0});
        }
        if (h_star < hi && h_star > lo) {
            xs.insert(xs.end(), {h_star, hi});
            ys.insert(ys.end(), {0.0, 0.0});
        }
        polyline(os, f, xs, ys, "#777777", "2,4");
    }
    if (law == LawChoice::sigmoid || law == LawChoice::both)
        polyline(os, f, hs, sig, "#d62728", "6,3");

    polyline(os, f, hs, freq, "#1f77b4", nullptr);
    for (std::size_t i = 0; i < hs.size(); ++i)
        os << "<circle cx=\"" << fmt3(f.px(hs[i])) << "\" cy=\"" << fmt3(f.py(freq[i]))
           << "\" r=\"3\" fill=\"#1f77b4\"/>\n";

    // legend
    double ly = kTop + 16;
    auto legend = [&](const char* color, const char* dash, const char* label) {
        os << "<line x1=\"" << kWidth - 170 << "\" y1=\"" << ly << "\" x2=\"" << kWidth - 140
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.8\"";
        if (dash) os << " stroke-dasharray=\"" << dash << "\"";
        os << "/>\n<text x=\"" << kWidth - 134 << "\" y=\"" << ly + 4
           << "\" font-size=\"11\" font-family=\"sans-serif\">" << label << "</text>\n";
        ly += 16;
    };
    legend("#1f77b4", nullptr, "empirical frequency");
    if (law == LawChoice::two_steps || law == LawChoice::both)
        legend("#777777", "2,4", "two-steps law");
    if (law == LawChoice::sigmoid || law == LawChoice::both)
        legend("#d62728", "6,3", "sigmoid law");

    os << "</svg>\n";
}

}  // namespace pkpm
