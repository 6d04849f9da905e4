use super::Bounds;
use crate::rng::RngStream;

/// Project every component into its interval.
pub fn repair_clamp(x: &mut [f64], bounds: &Bounds) {
    for ((v, lo), hi) in x.iter_mut().zip(bounds.lower()).zip(bounds.upper()) {
        if v.is_nan() {
            *v = *lo;
        } else if *v < *lo {
            *v = *lo;
        } else if *v > *hi {
            *v = *hi;
        }
    }
}

/// Redraw each out-of-range component uniformly inside its interval; in-range
/// components are left untouched. Draws only for the offending dimensions,
/// in ascending order.
pub fn repair_random_reinit(x: &mut [f64], bounds: &Bounds, rng: &mut RngStream) {
    for ((v, lo), hi) in x.iter_mut().zip(bounds.lower()).zip(bounds.upper()) {
        if !(*lo <= *v && *v <= *hi) {
            *v = rng.uniform_in(*lo, *hi);
        }
    }
}
