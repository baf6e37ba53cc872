#pragma once

#include <utility>

#include "afp/field.hpp"
#include "afp/incidence.hpp"

namespace afp {

/// AG(2,q): points (x, y) with index x*q + y. Lines y = m*x + b for every
/// slope m (outer, field-index order) and intercept b (inner), followed by the
/// verticals x = c. The returned plane has already passed check_axioms.
AffinePlane ag2(const FiniteField& field);

inline PointId ag2_point(unsigned q, unsigned x, unsigned y) { return PointId(x * q + y); }
inline std::pair<unsigned, unsigned> ag2_coords(unsigned q, PointId p) { return {p.value / q, p.value % q}; }

}  // namespace afp
