//! Quasi-random direction generator.
//!
//! The generator is built from the two-dimensional reverse Halton sequence in
//! bases 2 and 3: the radical inverse of the 1-based sample index, with the
//! digit-reversal permutation applied per digit. The unit-square point is then
//! mapped onto the first octant of the unit sphere by an equal-area
//! parametrization, so a low-discrepancy sequence in the square stays
//! uniformly distributed over the octant.
//!
//! A star discrepancy estimator is included for uniformity checks; it is an
//! exact computation over the critical boxes of the point set and is intended
//! for test-time set sizes (N up to a few thousand).

use std::f64::consts::FRAC_PI_2;

/// A point of the unit square with both coordinates strictly inside (0, 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitSquarePoint {
    pub u1: f64,
    pub u2: f64,
}

/// A direction in the first octant of the unit sphere: all three cosines
/// strictly positive, unit Euclidean norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctantDirection {
    pub mu: f64,
    pub eta: f64,
    pub xi: f64,
}

/// Permutation applied to each digit of the base-`b` expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitPermutation {
    /// Every digit maps to itself (the plain van der Corput sequence).
    Identity,
    /// 0 maps to 0, any other digit d maps to base - d. In base 2 this is
    /// again the identity; in base 3 it swaps 1 and 2.
    Reversal,
}

impl DigitPermutation {
    #[inline]
    fn apply(self, digit: u64, base: u64) -> u64 {
        match self {
            DigitPermutation::Identity => digit,
            DigitPermutation::Reversal => {
                if digit == 0 {
                    0
                } else {
                    base - digit
                }
            }
        }
    }
}

/// Radical inverse of `n` in the given base with a digit permutation:
/// for n = sum_k d_k base^k, returns sum_k perm(d_k) base^(-k-1).
///
/// The sequence is 1-indexed; `n = 0` (which maps to 0.0 and, downstream, to
/// a degenerate pole direction) is rejected.
pub fn radical_inverse(n: u64, base: u32, perm: DigitPermutation) -> f64 {
    assert!(n >= 1, "radical inverse is 1-indexed, got n = 0");
    assert!(base >= 2, "radical inverse needs base >= 2, got {base}");
    let b = u64::from(base);
    let bf = f64::from(base);
    let mut value = 0.0;
    let mut scale = 1.0 / bf;
    let mut rest = n;
    while rest > 0 {
        let digit = rest % b;
        value += perm.apply(digit, b) as f64 * scale;
        scale /= bf;
        rest /= b;
    }
    value
}

/// The i-th point of the reverse Halton sequence in bases (2, 3).
///
/// Deterministic and stateless: the value depends only on `i`. Both
/// components are strictly inside (0, 1) for every i >= 1.
pub fn rh(i: u64) -> UnitSquarePoint {
    UnitSquarePoint {
        u1: radical_inverse(i, 2, DigitPermutation::Reversal),
        u2: radical_inverse(i, 3, DigitPermutation::Reversal),
    }
}

/// The i-th quasi-random direction on the first octant.
///
/// With (u1, u2) = rh(i): xi = 1 - u1, and (mu, eta) split the in-plane
/// component sin(arccos(xi)) by the azimuth u2 * pi/2. The limits u1 -> 1 and
/// u1 -> 0 approach the directions (1, 0, 0)-plane and (0, 0, 1) pole
/// respectively, but are never attained.
pub fn qr1(i: u64) -> OctantDirection {
    let p = rh(i);
    let xi = 1.0 - p.u1;
    // sin(arccos(xi)) = sqrt(1 - xi^2); the form u1 * (2 - u1) avoids
    // cancellation as u1 -> 0.
    let s = (p.u1 * (2.0 - p.u1)).sqrt();
    let phi = p.u2 * FRAC_PI_2;
    OctantDirection {
        mu: s * phi.cos(),
        eta: s * phi.sin(),
        xi,
    }
}

/// Exact star discrepancy D*_N of the first `n` points.
///
/// The supremum over anchored boxes [0,x) x [0,y) is attained on boxes whose
/// upper corner coordinates come from the point coordinates (plus 1): the
/// positive part of the deviation uses strict counts at the corner, the
/// negative part uses closed counts. Every candidate corner is evaluated.
/// Worst case O(N^2 log N); meant for test-time N up to a few thousand.
pub fn star_discrepancy_estimate(points: &[UnitSquarePoint], n: usize) -> f64 {
    assert!(n >= 1, "star discrepancy needs at least one point");
    assert!(
        points.len() >= n,
        "star discrepancy over {n} points but only {} given",
        points.len()
    );
    let pts = &points[..n];
    let nf = n as f64;

    let mut xs: Vec<f64> = pts.iter().map(|p| p.u1).collect();
    xs.push(1.0);
    xs.sort_unstable_by(f64::total_cmp);
    xs.dedup();
    let mut ys: Vec<f64> = pts.iter().map(|p| p.u2).collect();
    ys.push(1.0);
    ys.sort_unstable_by(f64::total_cmp);
    ys.dedup();

    let mut by_x: Vec<(f64, f64)> = pts.iter().map(|p| (p.u1, p.u2)).collect();
    by_x.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));

    // Sweep x candidates in increasing order, maintaining the sorted y values
    // of all points already to the left. Counts then come from binary search.
    let mut inserted: Vec<f64> = Vec::with_capacity(n);
    let mut next = 0;
    let mut worst = 0.0_f64;

    for &x in &xs {
        while next < n && by_x[next].0 < x {
            let y = by_x[next].1;
            let at = inserted.partition_point(|&v| v < y);
            inserted.insert(at, y);
            next += 1;
        }
        // open box: points with u1 < x and u2 < y
        for &y in &ys {
            let count = inserted.partition_point(|&v| v < y);
            let dev = x * y - count as f64 / nf;
            if dev > worst {
                worst = dev;
            }
        }
        while next < n && by_x[next].0 == x {
            let y = by_x[next].1;
            let at = inserted.partition_point(|&v| v < y);
            inserted.insert(at, y);
            next += 1;
        }
        // closed box: points with u1 <= x and u2 <= y
        for &y in &ys {
            let count = inserted.partition_point(|&v| v <= y);
            let dev = count as f64 / nf - x * y;
            if dev > worst {
                worst = dev;
            }
        }
    }
    worst
}
