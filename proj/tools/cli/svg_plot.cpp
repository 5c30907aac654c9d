#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "cli/number_format.hpp"
#include "curlicue/analysis.hpp"
#include "curlicue/errors.hpp"

namespace curlicue::cli {

namespace {

constexpr double kWidth = 960.0;
constexpr double kPlotHeight = 320.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 40.0;
constexpr double kAxisBand = 50.0;
constexpr int kMaxTicks = 12;

const char* const kTargetColors[] = {"#c0392b", "#2471a3"};
const char* const kTargetDash[] = {"6,3", "2,3"};

std::string fx(double v) { return format_fixed(v, 2); }

// 1, 2 or 5 times a power of ten giving at most max_ticks ticks over span.
double nice_step(double span, int max_ticks) {
    const double raw = span / max_ticks;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * magnitude >= raw) return m * magnitude;
    }
    return 10.0 * magnitude;
}

std::int64_t integer_stride(std::int64_t count) {
    if (count <= kMaxTicks) return 1;
    return static_cast<std::int64_t>(nice_step(static_cast<double>(count), kMaxTicks));
}

class Canvas {
public:
    Canvas(double lambda_lo, double lambda_hi, double top, double y_max)
        : lambda_lo_(lambda_lo), lambda_hi_(lambda_hi), top_(top), y_max_(y_max) {}

    double x_of(double lambda) const {
        return kLeft + (lambda - lambda_lo_) / (lambda_hi_ - lambda_lo_) * (kWidth - kLeft - kRight);
    }
    double y_of(double intensity) const { return top_ + kPlotHeight * (1.0 - intensity / y_max_); }
    double top() const { return top_; }
    double bottom() const { return top_ + kPlotHeight; }
    bool inside(double lambda) const { return lambda >= lambda_lo_ && lambda <= lambda_hi_; }

private:
    double lambda_lo_, lambda_hi_, top_, y_max_;
};

// Horizontal axis at height y with ticks pointing away from the plot.
void draw_axis(std::ostringstream& svg, const Canvas& c, double y, bool above,
               const std::vector<std::pair<double, std::string>>& ticks, const std::string& label,
               const char* color) {
    const double dir = above ? -1.0 : 1.0;
    svg << "<g class=\"axis\" stroke=\"" << color << "\" fill=\"" << color << "\">\n";
    svg << "<line x1=\"" << fx(kLeft) << "\" y1=\"" << fx(y) << "\" x2=\"" << fx(kWidth - kRight)
        << "\" y2=\"" << fx(y) << "\"/>\n";
    for (const auto& [lambda, text] : ticks) {
        const double x = c.x_of(lambda);
        svg << "<line x1=\"" << fx(x) << "\" y1=\"" << fx(y) << "\" x2=\"" << fx(x) << "\" y2=\""
            << fx(y + dir * 6.0) << "\"/>\n";
        svg << "<text x=\"" << fx(x) << "\" y=\"" << fx(y + dir * (above ? 10.0 : 18.0))
            << "\" stroke=\"none\" text-anchor=\"middle\" font-size=\"11\">" << text << "</text>\n";
    }
    svg << "<text x=\"" << fx(kWidth - kRight) << "\" y=\"" << fx(y + dir * (above ? 26.0 : 34.0))
        << "\" stroke=\"none\" text-anchor=\"end\" font-size=\"12\">" << label << "</text>\n";
    svg << "</g>\n";
}

// Integer values v in [lo, hi] placed at lambda = v * scale, thinned to a
// readable count.
std::vector<std::pair<double, std::string>> integer_ticks(double lo, double hi,
                                                          double lambda_per_unit, bool inverse) {
    std::vector<std::pair<double, std::string>> ticks;
    const auto first = static_cast<std::int64_t>(std::ceil(lo));
    const auto last = static_cast<std::int64_t>(std::floor(hi));
    if (first > last) return ticks;
    const std::int64_t stride = integer_stride(last - first + 1);
    for (std::int64_t v = first; v <= last; ++v) {
        if (v % stride != 0) continue;
        const double lambda = inverse ? lambda_per_unit / static_cast<double>(v)
                                      : lambda_per_unit * static_cast<double>(v);
        ticks.emplace_back(lambda, std::to_string(v));
    }
    return ticks;
}

}  // namespace

std::string render_interferogram_svg(const Interferogram& ig,
                                     std::span<const std::int64_t> targets) {
    if (targets.size() > kMaxPlotTargets) {
        throw InvalidArgument("at most " + std::to_string(kMaxPlotTargets) + " plot targets");
    }
    ig.validate();
    const double x_nm = ig.displacement_unit_nm;
    const double lo = ig.samples.front().lambda_nm;
    const double hi = ig.samples.back().lambda_nm;
    double y_max = 1.0;
    for (const auto& s : ig.samples) y_max = std::max(y_max, s.intensity);

    const bool top_axis = targets.size() > 1;
    const double top = 40.0 + (top_axis ? kAxisBand : 0.0);
    const Canvas c(lo, hi, top, y_max);
    const std::size_t bottom_axes = 2 + (targets.empty() ? 0 : 1);
    const double height = c.bottom() + kAxisBand * static_cast<double>(bottom_axes) + 10.0;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fx(kWidth) << "\" height=\""
        << fx(height) << "\" viewBox=\"0 0 " << fx(kWidth) << ' ' << fx(height)
        << "\" font-family=\"sans-serif\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << fx(kWidth) << "\" height=\"" << fx(height)
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << fx(kLeft) << "\" y=\"20.00\" font-size=\"13\">Interferogram, x = "
        << format_double(x_nm) << " nm, M = " << ig.sum_spec.path_count()
        << ", d = " << ig.sum_spec.order() << "</text>\n";

    // Plot frame and intensity axis.
    svg << "<rect x=\"" << fx(kLeft) << "\" y=\"" << fx(c.top()) << "\" width=\""
        << fx(kWidth - kLeft - kRight) << "\" height=\"" << fx(kPlotHeight)
        << "\" fill=\"none\" stroke=\"#888\"/>\n";
    const double y_step = nice_step(y_max, 5);
    for (double v = 0.0; v <= y_max + 1e-12; v += y_step) {
        svg << "<line x1=\"" << fx(kLeft - 5.0) << "\" y1=\"" << fx(c.y_of(v)) << "\" x2=\""
            << fx(kLeft) << "\" y2=\"" << fx(c.y_of(v)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fx(kLeft - 8.0) << "\" y=\"" << fx(c.y_of(v) + 4.0)
            << "\" text-anchor=\"end\" font-size=\"11\">" << format_fixed(v, 1) << "</text>\n";
    }
    svg << "<text x=\"20.00\" y=\"" << fx(c.top() + kPlotHeight / 2.0)
        << "\" font-size=\"12\" transform=\"rotate(-90 20.00 " << fx(c.top() + kPlotHeight / 2.0)
        << ")\" text-anchor=\"middle\">I</text>\n";

    // Factor markers go under the data.
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const std::int64_t n = targets[t];
        if (n < 4) throw InvalidArgument("plot targets must be at least 4");
        const FactorReport report = extract_factors(ig, n);
        for (const auto& f : report.factors) {
            const double lambda = x_nm / static_cast<double>(f.q);
            if (!c.inside(lambda)) continue;
            const double x = c.x_of(lambda);
            svg << "<line class=\"factor\" x1=\"" << fx(x) << "\" y1=\"" << fx(c.top()) << "\" x2=\""
                << fx(x) << "\" y2=\"" << fx(c.bottom()) << "\" stroke=\"" << kTargetColors[t]
                << "\" stroke-dasharray=\"" << kTargetDash[t] << "\"/>\n";
        }
    }

    svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t j = 0; j < ig.samples.size(); ++j) {
        if (j) svg << ' ';
        svg << fx(c.x_of(ig.samples[j].lambda_nm)) << ',' << fx(c.y_of(ig.samples[j].intensity));
    }
    svg << "\"/>\n";

    // Wavelength axis.
    std::vector<std::pair<double, std::string>> lambda_ticks;
    const double step = nice_step(hi - lo, 8);
    const int decimals = std::max(0, static_cast<int>(-std::floor(std::log10(step))));
    for (double v = std::ceil(lo / step) * step; v <= hi; v += step) {
        lambda_ticks.emplace_back(v, format_fixed(v, decimals));
    }
    double y = c.bottom();
    draw_axis(svg, c, y, false, lambda_ticks, "wavelength (nm)", "black");

    y += kAxisBand;
    draw_axis(svg, c, y, false, integer_ticks(x_nm / hi, x_nm / lo, x_nm, true), "q = x/&#955;",
              "#555");

    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto n = static_cast<double>(targets[t]);
        const bool above = t == 1;
        const double axis_y = above ? c.top() : y + kAxisBand;
        const std::string label = "&#958;_N, N = " + std::to_string(targets[t]);
        draw_axis(svg, c, axis_y, above, integer_ticks(n * lo / x_nm, n * hi / x_nm, x_nm / n, false),
                  label, kTargetColors[t]);
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace curlicue::cli
