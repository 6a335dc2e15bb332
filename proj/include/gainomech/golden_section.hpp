// golden_section.hpp — bounded scalar minimization
#pragma once

#include <cmath>

namespace gainomech {

// Golden-section search for the minimum of a unimodal f on [a, b] to an
// absolute abscissa tolerance. Returns the midpoint of the final bracket.
template <class F>
double golden_section_minimize(F f, double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (std::abs(b - a) > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace gainomech
