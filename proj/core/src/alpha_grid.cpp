#include "dalpha/alpha_grid.hpp"

#include <cmath>
#include <cstdio>

#include "dalpha/errors.hpp"

namespace dalpha {

std::vector<double> alpha_grid(double start, double stop, double step) {
    if (!(start >= 0.0) || !(stop < 1.0) || !(start <= stop) || !(step > 0.0))
        throw InvalidParams("alpha grid needs 0 <= start <= stop < 1 and step > 0");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        double v = start + i * step;
        if (v > stop + step * 1e-9) break;
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
    double a, b, c;
    char tail;
    int got = std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &a, &b, &c, &tail);
    if (got != 3) throw ParseError("alpha grid must look like START:STOP:STEP, got '" + spec + "'");
    try {
        return alpha_grid(a, b, c);
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

std::vector<double> default_alpha_grid() { return alpha_grid(0.0, 0.9, 0.1); }

} // namespace dalpha
