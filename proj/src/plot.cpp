#include "rocaware/plot.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace rocaware {

namespace {

constexpr const char* kGlyphs[9] = {"○", "△", "+", "×", "◇", "▽", "⊠", "∗", "⊞"};

constexpr double kWidth = 520, kHeight = 520;
constexpr double kLeft = 60, kTop = 40, kSide = 420;
constexpr double kGlyphR = 5;

constexpr const char* kCurveColor = "#1f4e9c";
constexpr const char* kRandomColor = "#2e8b57";
constexpr const char* kHighlightColor = "#d62728";
constexpr const char* kFprColor = "#e07b00";

// Data range [0,1] sits inside the frame with a small margin so that rates
// of exactly 0 or 1 stay visible.
constexpr double kPad = 0.03;
double px(double x) { return kLeft + kSide * (x + kPad) / (1 + 2 * kPad); }
double py(double y) { return kTop + kSide * (1.0 + kPad - y) / (1 + 2 * kPad); }

class Svg {
public:
    Svg() {
        add("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
            "viewBox=\"0 0 %.0f %.0f\" font-family=\"sans-serif\" font-size=\"12\">\n",
            kWidth, kHeight, kWidth, kHeight);
        add("<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", kWidth, kHeight);
    }

    void add(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
        char buf[512];
        va_list ap;
        va_start(ap, fmt);
        const int n = std::vsnprintf(buf, sizeof buf, fmt, ap);
        va_end(ap);
        if (n >= static_cast<int>(sizeof buf)) {
            std::string big(static_cast<std::size_t>(n) + 1, '\0');
            va_start(ap, fmt);
            std::vsnprintf(big.data(), big.size(), fmt, ap);
            va_end(ap);
            big.pop_back();
            out_ += big;
        } else if (n > 0) {
            out_.append(buf, static_cast<std::size_t>(n));
        }
    }

    std::string finish() {
        out_ += "</svg>\n";
        return std::move(out_);
    }

private:
    std::string out_;
};

void frame(Svg& s, const char* title, const char* xlabel, const char* ylabel) {
    s.add("<text x=\"%.0f\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">%s</text>\n",
          kWidth / 2, title);
    s.add("<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n");
    for (int k = 1; k < 5; ++k) {
        const double v = k / 5.0;
        s.add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", px(v), py(0), px(v), py(1));
        s.add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", px(0), py(v), px(1), py(v));
    }
    s.add("</g>\n");
    s.add("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" stroke=\"black\"/>\n",
          kLeft, kTop, kSide, kSide);
    for (int k = 0; k <= 5; ++k) {
        const double v = k / 5.0;
        s.add("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.1f</text>\n", px(v), kTop + kSide + 16, v);
        s.add("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.1f</text>\n", kLeft - 6, py(v) + 4, v);
    }
    s.add("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%s</text>\n", px(0.5), kTop + kSide + 34, xlabel);
    s.add("<text x=\"16\" y=\"%.2f\" text-anchor=\"middle\" transform=\"rotate(-90 16 %.2f)\">%s</text>\n",
          py(0.5), py(0.5), ylabel);
}

// One glyph per threshold index 0..8, centred on (cx, cy).
void glyph(Svg& s, int idx, double cx, double cy, const char* color) {
    const double r = kGlyphR;
    s.add("<g stroke=\"%s\" fill=\"none\" stroke-width=\"1.2\">", color);
    switch (idx) {
    case 0:
        s.add("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\"/>", cx, cy, r);
        break;
    case 1:
        s.add("<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f\"/>", cx, cy - r, cx - r, cy + r * 0.8,
              cx + r, cy + r * 0.8);
        break;
    case 2:
        s.add("<path d=\"M%.2f %.2fH%.2fM%.2f %.2fV%.2f\"/>", cx - r, cy, cx + r, cx, cy - r, cy + r);
        break;
    case 3:
        s.add("<path d=\"M%.2f %.2fL%.2f %.2fM%.2f %.2fL%.2f %.2f\"/>", cx - r, cy - r, cx + r, cy + r,
              cx - r, cy + r, cx + r, cy - r);
        break;
    case 4:
        s.add("<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f %.2f,%.2f\"/>", cx, cy - r, cx + r, cy, cx,
              cy + r, cx - r, cy);
        break;
    case 5:
        s.add("<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f\"/>", cx, cy + r, cx - r, cy - r * 0.8,
              cx + r, cy - r * 0.8);
        break;
    case 6:
        s.add("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>", cx - r, cy - r, 2 * r, 2 * r);
        s.add("<path d=\"M%.2f %.2fL%.2f %.2fM%.2f %.2fL%.2f %.2f\"/>", cx - r, cy - r, cx + r, cy + r,
              cx - r, cy + r, cx + r, cy - r);
        break;
    case 7: {
        // six spokes
        const double dx = r * std::cos(M_PI / 6), dy = r * 0.5;
        s.add("<path d=\"M%.2f %.2fV%.2fM%.2f %.2fL%.2f %.2fM%.2f %.2fL%.2f %.2f\"/>", cx, cy - r, cy + r,
              cx - dx, cy - dy, cx + dx, cy + dy, cx - dx, cy + dy, cx + dx, cy - dy);
        break;
    }
    default:
        s.add("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>", cx - r, cy - r, 2 * r, 2 * r);
        s.add("<path d=\"M%.2f %.2fH%.2fM%.2f %.2fV%.2f\"/>", cx - r, cy, cx + r, cx, cy - r, cy + r);
        break;
    }
    s.add("</g>\n");
}

std::string interval_text(const Interval& iv) {
    if (iv.is_empty()) return "empty";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%c%.6g, %.6g%c", iv.lo_closed ? '[' : '(', iv.lo, iv.hi,
                  iv.hi_closed ? ']' : ')');
    return buf;
}

bool vertex_ok(const RocPoint& p, const IntervalSet& ok) {
    return ok.intersect(p.thresholds).total_width() > 0.0;
}

// dashed FPR keeps a coinciding TPR visible underneath
void step_path(Svg& s, const StepFunction& f, const char* color, const char* name, bool dashed = false) {
    const auto& b = f.breakpoints();
    const auto& v = f.values();
    s.add("<path class=\"%s\" fill=\"none\" stroke=\"%s\" stroke-width=\"2\"%s d=\"M%.2f %.2f", name, color,
          dashed ? " stroke-dasharray=\"6 4\"" : "", px(b[0]), py(v[0]));
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        s.add("H%.2f", px(b[i + 1]));
        if (v[i + 1] != v[i]) s.add("V%.2f", py(v[i + 1]));
    }
    s.add("\"/>\n");
}

} // namespace

std::vector<ThresholdMarker> threshold_markers(const RocCurve& curve) {
    std::vector<ThresholdMarker> out;
    for (int m = 1; m <= 9; ++m) {
        ThresholdMarker mk;
        mk.threshold = m / 10.0;
        mk.glyph = kGlyphs[m - 1];
        if (auto idx = curve.locate(mk.threshold)) {
            const auto& p = curve.points()[*idx];
            mk.on_curve = Point2{p.fpr, p.tpr};
            mk.curve_interval = p.thresholds;
        }
        mk.on_bisector = {1.0 - mk.threshold, 1.0 - mk.threshold};
        out.push_back(mk);
    }
    return out;
}

std::vector<std::size_t> highlighted_segments(const RocCurve& curve, const IntervalSet& ok_ranges) {
    const auto& pts = curve.points();
    const std::size_t last = pts.size() - 1;
    std::vector<bool> ok(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) ok[i] = vertex_ok(pts[i], ok_ranges);
    std::vector<std::size_t> segs;
    for (std::size_t i = 0; i < last; ++i) {
        const bool a = ok[i] || i == 0;
        const bool b = ok[i + 1] || i + 1 == last;
        if (a && b && (ok[i] || ok[i + 1])) segs.push_back(i);
    }
    return segs;
}

std::string render_decorated_roc(const RocCurve& curve, const IntervalSet& ok_ranges) {
    Svg s;
    char title[64];
    std::snprintf(title, sizeof title, "ROC curve (AUC = %.4f)", curve.auc());
    frame(s, title, "FPR", "TPR");

    s.add("<line class=\"bisector\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
          "stroke-width=\"1.5\"/>\n",
          px(0), py(0), px(1), py(1), kRandomColor);

    s.add("<polyline class=\"roc\" fill=\"none\" stroke=\"%s\" stroke-width=\"2\" points=\"", kCurveColor);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& p = curve.points()[i];
        s.add(i ? " %.2f,%.2f" : "%.2f,%.2f", px(p.fpr), py(p.tpr));
    }
    s.add("\"/>\n");

    s.add("<g class=\"better-than-random\" stroke=\"%s\" stroke-width=\"4\" stroke-linecap=\"round\">\n",
          kHighlightColor);
    for (auto i : highlighted_segments(curve, ok_ranges)) {
        const auto& p = curve.points()[i];
        const auto& q = curve.points()[i + 1];
        s.add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", px(p.fpr), py(p.tpr), px(q.fpr),
              py(q.tpr));
    }
    s.add("</g>\n");

    const auto markers = threshold_markers(curve);
    for (std::size_t k = 0; k < markers.size(); ++k) {
        const auto& mk = markers[k];
        if (mk.on_curve) {
            s.add("<g class=\"marker\" data-threshold=\"%.1f\"><title>t=%.1f %s</title>", mk.threshold,
                  mk.threshold, interval_text(mk.curve_interval).c_str());
            glyph(s, static_cast<int>(k), px(mk.on_curve->x), py(mk.on_curve->y), kCurveColor);
            s.add("</g>\n");
        }
        s.add("<g class=\"marker random\" data-threshold=\"%.1f\"><title>random t=%.1f</title>",
              mk.threshold, mk.threshold);
        glyph(s, static_cast<int>(k), px(mk.on_bisector.x), py(mk.on_bisector.y), kRandomColor);
        s.add("</g>\n");
    }

    // legend
    for (std::size_t k = 0; k < markers.size(); ++k) {
        const double y = py(0.47) + 14.0 * static_cast<double>(k);
        glyph(s, static_cast<int>(k), px(0.76), y - 4, "black");
        s.add("<text x=\"%.2f\" y=\"%.2f\">t = %.1f</text>\n", px(0.76) + 10, y, markers[k].threshold);
    }
    return s.finish();
}

std::string render_decorated_roc(const RocCurve& curve, const ThresholdProfile& profile) {
    return render_decorated_roc(curve, check_better_than_random(profile).ok_ranges);
}

std::string render_classification_plot(const ThresholdProfile& profile) {
    const auto verdict = check_better_than_random(profile);
    Svg s;
    frame(s, "TPR and FPR vs. threshold", "threshold t", "rate");

    auto shade = [&](const IntervalSet& set, const char* color, const char* name) {
        s.add("<g class=\"%s\" fill=\"%s\" fill-opacity=\"0.15\">\n", name, color);
        for (const auto& iv : set)
            s.add("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"><title>%s</title></rect>\n",
                  px(iv.lo), py(1), px(iv.hi) - px(iv.lo), py(0) - py(1), interval_text(iv).c_str());
        s.add("</g>\n");
    };
    shade(verdict.tpr_violations, kCurveColor, "tpr-violations");
    shade(verdict.fpr_violations, kFprColor, "fpr-violations");

    s.add("<line class=\"random\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
          "stroke-width=\"1.5\"/>\n",
          px(0), py(1), px(1), py(0), kRandomColor);
    step_path(s, profile.tpr(), kCurveColor, "tpr");
    step_path(s, profile.fpr(), kFprColor, "fpr", true);

    const double lx = px(0.72), ly = py(0.95);
    s.add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"2\"/>"
          "<text x=\"%.2f\" y=\"%.2f\">TPR(t)</text>\n",
          lx, ly, lx + 20, ly, kCurveColor, lx + 26, ly + 4);
    s.add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"2\" "
          "stroke-dasharray=\"6 4\"/><text x=\"%.2f\" y=\"%.2f\">FPR(t)</text>\n",
          lx, ly + 16, lx + 20, ly + 16, kFprColor, lx + 26, ly + 20);
    s.add("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"1.5\"/>"
          "<text x=\"%.2f\" y=\"%.2f\">random: 1 - t</text>\n",
          lx, ly + 32, lx + 20, ly + 32, kRandomColor, lx + 26, ly + 36);
    return s.finish();
}

} // namespace rocaware
