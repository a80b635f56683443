#include "archimedes/solids.hpp"

#include <stdexcept>

#include "archimedes/polygon.hpp"

namespace archimedes {

SolidReport sphere_constants(const Rational& radius, int pi_doublings, int precision_bits) {
    if (radius.sign() <= 0) throw std::invalid_argument("radius must be positive");

    const Rational r = radius;
    const Rational r2 = r * r;
    const Rational r3 = r2 * r;
    const Rational d = Rational(2) * r;

    SolidReport report;
    report.radius = r;
    report.diameter = d;
    report.pi_ref = pi_enclosure(pi_doublings, precision_bits);
    report.volume = scale(report.pi_ref, Rational(4) * r3 / Rational(3));
    report.surface = scale(report.pi_ref, Rational(4) * r2);
    report.cylinder_volume = scale(report.pi_ref, Rational(2) * r3);
    report.cylinder_surface_total = scale(report.pi_ref, Rational(6) * r2);
    report.six_v_over_d3 = scale(report.volume, Rational(6) / (d * d * d));
    report.s_over_4r2 = scale(report.surface, Rational(1) / (Rational(4) * r2));
    return report;
}

CylinderSphereRatios cylinder_sphere_ratios(const Rational& radius, int pi_doublings,
                                            int precision_bits) {
    const SolidReport report = sphere_constants(radius, pi_doublings, precision_bits);
    return {report.cylinder_volume / report.volume,
            report.cylinder_surface_total / report.surface};
}

}  // namespace archimedes
