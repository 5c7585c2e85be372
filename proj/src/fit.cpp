#include "dirac_nodal/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dirac_nodal {

namespace {

void logs(const std::vector<double>& x, const std::vector<double>& y, std::vector<double>& lx,
          std::vector<double>& ly) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(x[i]) && std::isfinite(y[i])) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    }
}

}  // namespace

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    logs(x, y, lx, ly);
    if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= double(lx.size());
    my /= double(ly.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

double log_log_slope_robust(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    logs(x, y, lx, ly);
    std::vector<double> slopes;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        for (std::size_t j = i + 1; j < lx.size(); ++j) {
            if (lx[j] != lx[i]) slopes.push_back((ly[j] - ly[i]) / (lx[j] - lx[i]));
        }
    }
    if (slopes.empty()) return std::numeric_limits<double>::quiet_NaN();
    const std::size_t mid = slopes.size() / 2;
    std::nth_element(slopes.begin(), slopes.begin() + mid, slopes.end());
    double med = slopes[mid];
    if (slopes.size() % 2 == 0) {
        med = 0.5 * (med + *std::max_element(slopes.begin(), slopes.begin() + mid));
    }
    return med;
}

}  // namespace dirac_nodal
