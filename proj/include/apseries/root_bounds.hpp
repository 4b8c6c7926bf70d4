#pragma once

#include <gmpxx.h>

#include "apseries/int_polynomial.hpp"

namespace aps {

// r = 1 + max_{0<=k<n} |a_k| / |a_n|, exact. Every root of p lies strictly
// inside |z| < r. Requires deg p >= 1.
mpq_class cauchy_radius(const IntPolynomial& p);

struct RootCountOptions {
    unsigned initial_precision_bits = 64;
    unsigned max_precision_bits = 1024;
};

// Number of roots (with multiplicity) of p with |z| < radius, certified by an
// argument-principle winding count over adaptively subdivided arcs: an arc is
// accepted only once its image provably lies in a disk excluding the origin,
// which pins the argument increment to its principal value. Precision doubles
// on failure; a root on (or indistinguishably near) the circle ends in
// Errc::indeterminate_at_precision.
unsigned count_roots_in_disk(const IntPolynomial& p, const mpq_class& radius,
                             const RootCountOptions& options = {});

} // namespace aps
