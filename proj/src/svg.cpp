#include "cylspec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cylspec/errors.hpp"
#include "cylspec/io.hpp"

namespace cylspec {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 56.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string tick_label(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", v);
  return buffer;
}

// 1-2-5 tick spacing aiming for about `target` intervals.
std::vector<double> nice_ticks(double lo, double hi, int target) {
  double range = hi - lo;
  if (range <= 0) return {lo};
  double raw = range / target;
  double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (magnitude * mult >= raw) {
      step = magnitude * mult;
      break;
    }
  }
  std::vector<double> ticks;
  double first = std::ceil(lo / step) * step;
  for (double t = first; t <= hi + 1e-9 * range; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * range ? 0.0 : t);
  }
  return ticks;
}

class SvgBuilder {
 public:
  SvgBuilder(double x_lo, double x_hi, double y_lo, double y_hi,
             const PlotOptions& options)
      : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" "
            "font-family=\"sans-serif\">\n";
    out_ << "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
      out_ << "<text x=\"480\" y=\"28\" text-anchor=\"middle\" font-size=\"17\">"
           << options.title << "</text>\n";
    }
    draw_axes(options);
  }

  double sx(double x) const {
    return kMarginLeft + (x - x_lo_) / (x_hi_ - x_lo_) * plot_width();
  }
  double sy(double y) const {
    return kHeight - kMarginBottom - (y - y_lo_) / (y_hi_ - y_lo_) * plot_height();
  }

  void rect(double x, double y, double w, double h, const std::string& fill) {
    out_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
         << "\" height=\"" << num(h) << "\" fill=\"" << fill
         << "\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
  }

  void path(const std::string& d, const std::string& stroke) {
    out_ << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"1.8\"/>\n";
  }

  void legend(const std::vector<std::string>& labels) {
    double x = kWidth - kMarginRight - 150.0;
    double y = kMarginTop + 10.0;
    out_ << "<rect x=\"" << num(x - 10) << "\" y=\"" << num(y - 14) << "\" width=\"150\" height=\""
         << num(labels.size() * 18.0 + 8.0)
         << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
      out_ << "<line x1=\"" << num(x) << "\" y1=\"" << num(y + 18.0 * i - 4) << "\" x2=\""
           << num(x + 24) << "\" y2=\"" << num(y + 18.0 * i - 4) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
      out_ << "<text x=\"" << num(x + 30) << "\" y=\"" << num(y + 18.0 * i)
           << "\" font-size=\"12\">" << labels[i] << "</text>\n";
    }
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  double plot_width() const { return kWidth - kMarginLeft - kMarginRight; }
  double plot_height() const { return kHeight - kMarginTop - kMarginBottom; }

  void draw_axes(const PlotOptions& options) {
    double x0 = kMarginLeft;
    double x1 = kWidth - kMarginRight;
    double y0 = kHeight - kMarginBottom;
    double y1 = kMarginTop;
    out_ << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
         << "\" y2=\"" << num(y0) << "\" stroke=\"black\"/>\n";
    out_ << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0)
         << "\" y2=\"" << num(y1) << "\" stroke=\"black\"/>\n";
    for (double t : nice_ticks(x_lo_, x_hi_, 8)) {
      double x = sx(t);
      out_ << "<line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x)
           << "\" y2=\"" << num(y0 + 5) << "\" stroke=\"black\"/>\n";
      out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y0 + 20)
           << "\" text-anchor=\"middle\" font-size=\"12\">" << tick_label(t) << "</text>\n";
      out_ << "<line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x)
           << "\" y2=\"" << num(y1) << "\" stroke=\"#eeeeee\"/>\n";
    }
    for (double t : nice_ticks(y_lo_, y_hi_, 6)) {
      double y = sy(t);
      out_ << "<line x1=\"" << num(x0 - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x0)
           << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
      out_ << "<text x=\"" << num(x0 - 9) << "\" y=\"" << num(y + 4)
           << "\" text-anchor=\"end\" font-size=\"12\">" << tick_label(t) << "</text>\n";
      out_ << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x1)
           << "\" y2=\"" << num(y) << "\" stroke=\"#eeeeee\"/>\n";
    }
    if (!options.x_label.empty()) {
      out_ << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 12)
           << "\" text-anchor=\"middle\" font-size=\"13\">" << options.x_label << "</text>\n";
    }
    if (!options.y_label.empty()) {
      out_ << "<text x=\"18\" y=\"" << num((y0 + y1) / 2)
           << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
           << num((y0 + y1) / 2) << ")\">" << options.y_label << "</text>\n";
    }
  }

  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::ostringstream out_;
};

}  // namespace

std::string render_histogram_svg(const std::vector<HistogramBin>& bins,
                                 const PlotOptions& options) {
  if (bins.empty()) fail(ErrorKind::InvalidParameter, "histogram plot needs data");
  double x_lo = bins.front().lo;
  double x_hi = bins.back().hi;
  double y_hi = 0.0;
  for (const auto& b : bins) y_hi = std::max(y_hi, b.mass_d);
  if (y_hi <= 0.0) y_hi = 1.0;
  y_hi *= 1.08;

  SvgBuilder svg(x_lo, x_hi, 0.0, y_hi, options);
  for (const auto& b : bins) {
    if (b.mass_d <= 0.0) continue;
    double x = svg.sx(b.lo);
    double w = svg.sx(b.hi) - x;
    double y = svg.sy(b.mass_d);
    svg.rect(x, y, w, svg.sy(0.0) - y, kPalette[0]);
  }
  return svg.finish();
}

std::string render_cdf_family_svg(const std::vector<LabeledCdf>& curves,
                                  const PlotOptions& options) {
  if (curves.empty()) fail(ErrorKind::InvalidParameter, "cdf-family plot needs data");
  double x_lo = curves.front().cdf.jumps().front().value;
  double x_hi = x_lo;
  for (const auto& c : curves) {
    if (c.cdf.jumps().empty()) fail(ErrorKind::InvalidParameter, "cdf-family plot needs data");
    x_lo = std::min(x_lo, c.cdf.jumps().front().value);
    x_hi = std::max(x_hi, c.cdf.jumps().back().value);
  }
  if (x_lo == x_hi) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  double pad = 0.04 * (x_hi - x_lo);
  SvgBuilder svg(x_lo - pad, x_hi + pad, 0.0, 1.04, options);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::ostringstream d;
    double level = 0.0;
    d << "M " << num(svg.sx(x_lo - pad)) << " " << num(svg.sy(level));
    for (const auto& j : curves[i].cdf.jumps()) {
      d << " H " << num(svg.sx(j.value));
      level = j.cumulative_d;
      d << " V " << num(svg.sy(level));
    }
    d << " H " << num(svg.sx(x_hi + pad));
    svg.path(d.str(), color);
    labels.push_back(curves[i].label);
  }
  svg.legend(labels);
  return svg.finish();
}

void emit_histogram_svg(const std::vector<HistogramBin>& bins,
                        const std::filesystem::path& path, const PlotOptions& options) {
  write_text_file(render_histogram_svg(bins, options), path);
}

void emit_cdf_family_svg(const std::vector<LabeledCdf>& curves,
                         const std::filesystem::path& path, const PlotOptions& options) {
  write_text_file(render_cdf_family_svg(curves, options), path);
}

}  // namespace cylspec
