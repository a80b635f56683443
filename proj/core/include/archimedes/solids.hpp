#pragma once

#include "archimedes/interval.hpp"

namespace archimedes {

// Sphere and cylinder constants parameterized by the pi enclosure:
// V = 4 pi r^3 / 3, S = 4 pi r^2, and for the circumscribing cylinder of
// height 2r: volume 2 pi r^3, total surface 6 pi r^2.
struct SolidReport {
    Rational radius;
    Rational diameter;
    Interval pi_ref;
    Interval volume;
    Interval surface;
    Interval cylinder_volume;
    Interval cylinder_surface_total;
    Interval six_v_over_d3;  // encloses pi
    Interval s_over_4r2;     // encloses pi
};

SolidReport sphere_constants(const Rational& radius, int pi_doublings,
                             int precision_bits = kDefaultPrecisionBits);

// The closing theorem: the cylinder's volume and total surface are each 3/2
// of the sphere's. Both returned enclosures contain 3/2.
struct CylinderSphereRatios {
    Interval volume_ratio;
    Interval surface_ratio;
};
CylinderSphereRatios cylinder_sphere_ratios(const Rational& radius, int pi_doublings,
                                            int precision_bits = kDefaultPrecisionBits);

}  // namespace archimedes
