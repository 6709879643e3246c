#include "pdelum/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdelum/csv.hpp"

namespace pdelum {

namespace {

constexpr double kChromaEps = 1e-6;

int bin_of(double v) {
    const int b = static_cast<int>(std::floor(v * 255.0 + 0.5));
    return std::clamp(b, 0, 255);
}

std::array<long long, 256> histogram256(const Raster& img) {
    std::array<long long, 256> h{};
    for (double v : img.data()) {
        ++h[static_cast<std::size_t>(bin_of(v))];
    }
    return h;
}

} // namespace

double entropy_bits(const Raster& img) {
    const auto h = histogram256(img);
    const double n = static_cast<double>(img.pixel_count());
    double bits = 0.0;
    for (long long c : h) {
        if (c == 0) {
            continue;
        }
        const double p = static_cast<double>(c) / n;
        bits -= p * std::log2(p);
    }
    return bits;
}

MeanStd mean_std(const Raster& img) {
    const PlaneStats s = plane_stats(img);
    return MeanStd{255.0 * s.mean, 255.0 * s.stddev};
}

double avg_gradient(const Raster& img) {
    const int w = img.width();
    const int h = img.height();
    if (w < 2 || h < 2) {
        throw std::invalid_argument("avg_gradient requires width and height >= 2");
    }
    double acc = 0.0;
    for (int y = 0; y + 1 < h; ++y) {
        for (int x = 0; x + 1 < w; ++x) {
            const double dx = (img(x + 1, y) - img(x, y)) * 255.0;
            const double dy = (img(x, y + 1) - img(x, y)) * 255.0;
            acc += std::sqrt((dx * dx + dy * dy) / 2.0);
        }
    }
    return acc / (static_cast<double>(w - 1) * static_cast<double>(h - 1));
}

double colourfulness(const ColorImage& rgb) {
    const auto& R = rgb.planes[0];
    const auto& G = rgb.planes[1];
    const auto& B = rgb.planes[2];
    const std::size_t n = R.pixel_count();

    double sum_rg = 0.0;
    double sum_yb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_rg += (R.data()[i] - G.data()[i]) * 255.0;
        sum_yb += (0.5 * (R.data()[i] + G.data()[i]) - B.data()[i]) * 255.0;
    }
    const double mu_rg = sum_rg / static_cast<double>(n);
    const double mu_yb = sum_yb / static_cast<double>(n);

    double var_rg = 0.0;
    double var_yb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double rg = (R.data()[i] - G.data()[i]) * 255.0 - mu_rg;
        const double yb = (0.5 * (R.data()[i] + G.data()[i]) - B.data()[i]) * 255.0 - mu_yb;
        var_rg += rg * rg;
        var_yb += yb * yb;
    }
    var_rg /= static_cast<double>(n);
    var_yb /= static_cast<double>(n);

    return std::sqrt(var_rg + var_yb) + 0.3 * std::sqrt(mu_rg * mu_rg + mu_yb * mu_yb);
}

double emec(const Raster& img) {
    const int w = img.width();
    const int h = img.height();
    const int bw = (w + 7) / 8;
    const int bh = (h + 7) / 8;
    double acc = 0.0;
    for (int by = 0; by < bh; ++by) {
        for (int bx = 0; bx < bw; ++bx) {
            const int x1 = std::min(bx * 8 + 8, w);
            const int y1 = std::min(by * 8 + 8, h);
            double lo = img(bx * 8, by * 8);
            double hi = lo;
            for (int y = by * 8; y < y1; ++y) {
                for (int x = bx * 8; x < x1; ++x) {
                    lo = std::min(lo, img(x, y));
                    hi = std::max(hi, img(x, y));
                }
            }
            acc += 20.0 * std::log10((hi * 255.0 + 1.0) / (lo * 255.0 + 1.0));
        }
    }
    return acc / (static_cast<double>(bw) * static_cast<double>(bh));
}

double hue_deviation(const ColorImage& a, const ColorImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw std::invalid_argument("hue_deviation requires matching dimensions");
    }
    const ColorImage ha = rgb_to_hsi(a);
    const ColorImage hb = rgb_to_hsi(b);
    const std::size_t n = ha.planes[0].pixel_count();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ha.planes[1].data()[i] < kChromaEps || hb.planes[1].data()[i] < kChromaEps) {
            continue;
        }
        double d = std::fabs(ha.planes[0].data()[i] - hb.planes[0].data()[i]);
        if (d > 180.0) {
            d = 360.0 - d;
        }
        acc += d;
    }
    return acc / static_cast<double>(n);
}

namespace {

struct DirectionalFeatures {
    double blockiness;
    double activity;
    double zero_crossings;
};

/// Features of the horizontal difference signal d(x,y) = v(x+1,y) - v(x,y)
/// on the 255 scale: mean |d| across 8-periodic block boundaries, overall
/// activity (8*mean|d| - blockiness)/7, and the rate of sign changes between
/// horizontally adjacent differences.
DirectionalFeatures horizontal_features(const Raster& img) {
    const int w = img.width();
    const int h = img.height();
    const int boundary_limit = 8 * (w / 8);

    double sum_abs = 0.0;
    double sum_boundary = 0.0;
    long long n_boundary = 0;
    double crossings = 0.0;

    std::vector<double> d(static_cast<std::size_t>(w - 1));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x + 1 < w; ++x) {
            d[static_cast<std::size_t>(x)] = (img(x + 1, y) - img(x, y)) * 255.0;
            sum_abs += std::fabs(d[static_cast<std::size_t>(x)]);
        }
        for (int x = 7; x + 1 < boundary_limit; x += 8) {
            sum_boundary += std::fabs(d[static_cast<std::size_t>(x)]);
            ++n_boundary;
        }
        for (int x = 0; x + 2 < w; ++x) {
            const double s = std::copysign(1.0, d[static_cast<std::size_t>(x)]) *
                             std::copysign(1.0, d[static_cast<std::size_t>(x + 1)]);
            if (s < 0.0) {
                crossings += 1.0;
            }
        }
    }

    const double blockiness = sum_boundary / static_cast<double>(n_boundary);
    const double mean_abs = sum_abs / (static_cast<double>(h) * static_cast<double>(w - 1));
    return DirectionalFeatures{
        blockiness,
        (8.0 * mean_abs - blockiness) / 7.0,
        crossings / (static_cast<double>(h) * static_cast<double>(w - 2)),
    };
}

DirectionalFeatures vertical_features(const Raster& img) {
    const int w = img.width();
    const int h = img.height();
    const int boundary_limit = 8 * (h / 8);

    double sum_abs = 0.0;
    double sum_boundary = 0.0;
    long long n_boundary = 0;
    double crossings = 0.0;

    std::vector<double> d(static_cast<std::size_t>(h - 1));
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y + 1 < h; ++y) {
            d[static_cast<std::size_t>(y)] = (img(x, y + 1) - img(x, y)) * 255.0;
            sum_abs += std::fabs(d[static_cast<std::size_t>(y)]);
        }
        for (int y = 7; y + 1 < boundary_limit; y += 8) {
            sum_boundary += std::fabs(d[static_cast<std::size_t>(y)]);
            ++n_boundary;
        }
        for (int y = 0; y + 2 < h; ++y) {
            const double s = std::copysign(1.0, d[static_cast<std::size_t>(y)]) *
                             std::copysign(1.0, d[static_cast<std::size_t>(y + 1)]);
            if (s < 0.0) {
                crossings += 1.0;
            }
        }
    }

    const double blockiness = sum_boundary / static_cast<double>(n_boundary);
    const double mean_abs = sum_abs / (static_cast<double>(w) * static_cast<double>(h - 1));
    return DirectionalFeatures{
        blockiness,
        (8.0 * mean_abs - blockiness) / 7.0,
        crossings / (static_cast<double>(w) * static_cast<double>(h - 2)),
    };
}

} // namespace

double pqm(const Raster& img) {
    if (img.width() < 16 || img.height() < 16) {
        throw std::invalid_argument("pqm requires width and height >= 16");
    }
    const DirectionalFeatures fh = horizontal_features(img);
    const DirectionalFeatures fv = vertical_features(img);

    const double B = std::max(0.5 * (fh.blockiness + fv.blockiness), 1e-3);
    const double A = std::max(0.5 * (fh.activity + fv.activity), 1e-3);
    const double Z = std::max(0.5 * (fh.zero_crossings + fv.zero_crossings), 1e-3);

    constexpr double kAlpha = -245.9;
    constexpr double kBeta = 261.9;
    constexpr double kGamma1 = -0.0240;
    constexpr double kGamma2 = 0.0160;
    constexpr double kGamma3 = 0.0064;
    return kAlpha + kBeta * std::pow(B, kGamma1) * std::pow(A, kGamma2) * std::pow(Z, kGamma3);
}

AbsoluteMetrics absolute_metrics(const ColorImage& rgb) {
    const Raster inten = intensity_plane(rgb);
    const MeanStd ms = mean_std(inten);
    return AbsoluteMetrics{
        colourfulness(rgb), ms.mu, ms.sigma,
        entropy_bits(inten), avg_gradient(inten), emec(inten),
    };
}

std::string RelativeMetrics::csv_header() {
    return "algo,RC,PQM,RM,RSD,RE,RAG,HDI,REMEC";
}

std::string RelativeMetrics::csv_row(std::string_view algo) const {
    const auto cell = [](const std::optional<double>& v) {
        return v ? format_g9(*v) : std::string("undefined");
    };
    std::string row(algo);
    row += ',';
    row += cell(cef);
    row += ',';
    row += cell(pqm_score);
    row += ',';
    row += cell(rm);
    row += ',';
    row += cell(rsd);
    row += ',';
    row += cell(re);
    row += ',';
    row += cell(rag);
    row += ',';
    row += format_g9(hdi);
    row += ',';
    row += cell(remec);
    return row;
}

RelativeMetrics relative_report(const ColorImage& input, const ColorImage& output) {
    if (input.width() != output.width() || input.height() != output.height()) {
        throw std::invalid_argument("relative_report requires matching dimensions");
    }
    const Raster in_i = intensity_plane(input);
    const Raster out_i = intensity_plane(output);

    const auto ratio = [](double num, double den) -> std::optional<double> {
        if (den == 0.0) {
            return std::nullopt;
        }
        return num / den;
    };

    RelativeMetrics r;
    r.cef = ratio(colourfulness(output), colourfulness(input));
    const MeanStd mi = mean_std(in_i);
    const MeanStd mo = mean_std(out_i);
    r.rm = ratio(mo.mu, mi.mu);
    r.rsd = ratio(mo.sigma, mi.sigma);
    r.re = ratio(entropy_bits(out_i), entropy_bits(in_i));
    if (input.width() >= 2 && input.height() >= 2) {
        r.rag = ratio(avg_gradient(out_i), avg_gradient(in_i));
    }
    r.hdi = hue_deviation(input, output);
    r.remec = ratio(emec(out_i), emec(in_i));
    if (output.width() >= 16 && output.height() >= 16) {
        r.pqm_score = pqm(out_i);
    }
    return r;
}

} // namespace pdelum
