//! Window characters over residue classes and their finite Fourier
//! spectra.
//!
//! For a modulus `q` and a window half-width `h`, the window character is
//! `chi_q(x) = sum over multiples n of q with |n - x| <= h of sgn(n - x)`.
//! The dashed variant counts the left half-window as `(x-h, x]` instead of
//! `[x-h, x)`, which weights the offset `r = 0` with `-1` and drops
//! `r = -h`. Expanding over offsets `r = n - x` gives the exact finite
//! Fourier expansion `chi_q(x) = sum_{j<q} c_{j,q} e_q(jx)` with
//! `c_{j,q} = (1/q) sum_{|r|<=h} w(r) e_q(rj)`.
//!
//! Power sums of the `|c_{j,q}|^2` are never computed from the complex
//! values: grouping offsets by residue class gives the exact rational
//! `sum_j |c_{j,q}|^2 = (1/q) sum_{a mod q} W(a)^2` where `W(a)` is the
//! signed count of window offsets in class `a`. The classical candidate
//! `2 || h/q ||` is carried alongside; the dashed convention meets it
//! everywhere, the undashed one misses it by exactly `2/q` whenever
//! `2 (h mod q) >= q` with `h mod q != 0`.
//!
//! Sums restricted to primitive frequencies are again exact rationals,
//! obtained through Ramanujan sums of the autocorrelation of `W`; this
//! route is independent of the Moebius-inversion formula it is used to
//! audit.

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{nearest_integer_distance, rat_int, Rational};

/// Signed weight of a window offset `r` with `|r| <= h`.
///
/// Undashed: `sgn(r)`. Dashed: `-1` at `r = 0`, `0` at `r = -h`, `sgn(r)`
/// elsewhere.
pub fn window_weight(r: i64, h: u64, dashed: bool) -> i64 {
    debug_assert!(r.unsigned_abs() <= h);
    if dashed {
        if r == 0 {
            -1
        } else if r == -(h as i64) {
            0
        } else {
            r.signum()
        }
    } else {
        r.signum()
    }
}

/// Signed count of window offsets per residue class:
/// `W(a) = sum_{|r| <= h, r = a mod q} w(r)` for `a = 0..q-1`.
pub fn residue_counts(q: u64, h: u64, dashed: bool) -> Vec<i64> {
    assert!(q >= 1 && h >= 1, "q and h must be positive");
    let mut counts = vec![0i64; q as usize];
    let h = h as i64;
    for r in -h..=h {
        let a = r.rem_euclid(q as i64) as usize;
        counts[a] += window_weight(r, h as u64, dashed);
    }
    counts
}

/// The window character at `x > h`, evaluated in O(1) by counting
/// multiples of `q` on each side of `x` with floor divisions.
pub fn chi_window(q: u64, h: u64, x: u64, dashed: bool) -> Result<i64> {
    if q == 0 || h == 0 {
        return Err(Error::Domain("chi window needs q, h >= 1".into()));
    }
    if x <= h {
        return Err(Error::Domain(format!(
            "window [x-h, x+h] must stay positive: x = {x}, h = {h}"
        )));
    }
    Ok(chi_window_at(q, h, x, dashed))
}

/// [`chi_window`] without domain validation, for hot loops whose caller
/// guarantees `q, h >= 1` and `x > h`.
#[inline]
pub fn chi_window_at(q: u64, h: u64, x: u64, dashed: bool) -> i64 {
    debug_assert!(q >= 1 && h >= 1 && x > h);
    let mult = |a: u64, b: u64| -> i64 {
        // multiples of q in the half-open interval (a, b]
        (b / q) as i64 - (a / q) as i64
    };
    let positive = mult(x, x + h);
    let negative = if dashed {
        mult(x - h, x) // left half-window (x-h, x]
    } else {
        mult(x - h - 1, x - 1) // left half-window [x-h, x)
    };
    positive - negative
}

/// Exact and closed-form power sums of one window spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSum {
    /// `sum_{j < q} |c_{j,q}|^2`, exact.
    pub exact: Rational,
    /// The classical candidate `2 || h/q ||` it is audited against.
    pub closed_form: Rational,
}

impl PowerSum {
    pub fn matches(&self) -> bool {
        self.exact == self.closed_form
    }

    /// `closed_form - exact`; `2/q` in every undashed mismatch.
    pub fn gap(&self) -> Rational {
        self.closed_form.clone() - self.exact.clone()
    }
}

/// `sum_{j<q} |c_{j,q}|^2` computed exactly from signed residue-class
/// counts, paired with the closed-form candidate `2 || h/q ||`.
pub fn coefficient_power_sum(q: u64, h: u64, dashed: bool) -> Result<PowerSum> {
    if q == 0 || h == 0 {
        return Err(Error::Domain("power sum needs q, h >= 1".into()));
    }
    let counts = residue_counts(q, h, dashed);
    let mut total: i128 = 0;
    for c in counts {
        total += (c as i128) * (c as i128);
    }
    let exact = Rational::new(total.into(), (q as i128).into());
    let closed_form =
        rat_int(2) * nearest_integer_distance(&Rational::new((h as i128).into(), (q as i128).into()));
    Ok(PowerSum { exact, closed_form })
}

/// `e(m/q)` with the exponent already reduced mod `q`.
fn unit_root(q: u64, m: u64) -> Complex64 {
    let angle = 2.0 * std::f64::consts::PI * (m % q) as f64 / q as f64;
    Complex64::new(angle.cos(), angle.sin())
}

/// Fourier coefficient `c_{j,q} = (1/q) sum_{|r|<=h} w(r) e_q(rj)`.
/// Exponents are reduced mod `q` in integer arithmetic before any float
/// conversion, so the scaling relation `c_{dj, dq} = c_{j,q}/d` survives
/// to near machine precision.
pub fn window_fourier_coefficient(q: u64, h: u64, j: u64, dashed: bool) -> Complex64 {
    assert!(q >= 1, "modulus must be positive");
    assert!(j < q, "frequency index {j} outside 0..{q}");
    let counts = residue_counts(q, h, dashed);
    let mut sum = Complex64::zero();
    for (a, &w) in counts.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let m = ((a as u128 * j as u128) % q as u128) as u64;
        sum += unit_root(q, m) * w as f64;
    }
    sum / q as f64
}

/// One window spectrum: all coefficients plus the exact power sum.
#[derive(Debug, Clone)]
pub struct WindowSpectrum {
    pub q: u64,
    pub h: u64,
    pub dashed: bool,
    pub coefficients: Vec<Complex64>,
    pub power_sum: PowerSum,
}

impl WindowSpectrum {
    pub fn build(q: u64, h: u64, dashed: bool) -> Result<Self> {
        if q == 0 || h == 0 {
            return Err(Error::Domain("spectrum needs q, h >= 1".into()));
        }
        let coefficients = (0..q)
            .map(|j| window_fourier_coefficient(q, h, j, dashed))
            .collect();
        let power_sum = coefficient_power_sum(q, h, dashed)?;
        Ok(WindowSpectrum { q, h, dashed, coefficients, power_sum })
    }
}

/// Exact and Moebius-inverted forms of a primitive power sum.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitivePowerSum {
    /// `sum over j coprime to ell of |c_{j,ell}|^2`, exact via Ramanujan
    /// sums of the residue-count autocorrelation.
    pub exact: Rational,
    /// `sum_{t | ell} mu(t)/t^2 * (full power sum at ell/t)`, the
    /// inversion of the scaling relation. Must equal `exact` identically.
    pub moebius_form: Rational,
}

/// Power sum over primitive frequencies `gcd(j, ell) = 1`, both by the
/// direct Ramanujan-sum route and by Moebius inversion of full power sums.
pub fn primitive_power_sum(ell: u64, h: u64, dashed: bool) -> Result<PrimitivePowerSum> {
    if ell < 2 {
        return Err(Error::Domain("primitive power sum needs ell >= 2".into()));
    }
    if h == 0 {
        return Err(Error::Domain("primitive power sum needs h >= 1".into()));
    }

    // exact = (1/ell^2) sum_m c_ell(m) T(m), T the autocorrelation of W.
    let ramanujan = ramanujan_sum_row(ell);
    let auto = residue_autocorrelation(ell, h, dashed);
    let mut dot: i128 = 0;
    for (m, &c) in ramanujan.iter().enumerate() {
        dot += c as i128 * auto[m] as i128;
    }
    let exact = Rational::new(dot.into(), ((ell as i128) * (ell as i128)).into());

    // Independent route: invert full sums along the divisors of ell.
    let mut moebius_form = Rational::zero();
    for t in divisors(ell) {
        let m = mobius_small(t);
        if m == 0 {
            continue;
        }
        let full = coefficient_power_sum(ell / t, h, dashed)?.exact;
        moebius_form += Rational::new((m as i64).into(), ((t * t) as i64).into()) * full;
    }
    Ok(PrimitivePowerSum { exact, moebius_form })
}

/// Ramanujan sums `c_ell(m) = sum_{d | gcd(m, ell)} d mu(ell/d)` for
/// `m = 0..ell-1`, built by scattering over divisors.
fn ramanujan_sum_row(ell: u64) -> Vec<i64> {
    let mut row = vec![0i64; ell as usize];
    for d in divisors(ell) {
        let m = mobius_small(ell / d);
        if m == 0 {
            continue;
        }
        let contribution = d as i64 * m as i64;
        let mut pos = 0usize;
        while pos < ell as usize {
            row[pos] += contribution;
            pos += d as usize;
        }
    }
    row
}

/// Cyclic autocorrelation `T(m) = sum_a W(a) W(a - m)` of the signed
/// residue counts, in O(1) per lag through arc intersections. `W` is the
/// difference of two arc indicators for every `h`, because full cycles of
/// the window cancel between the two half-windows.
fn residue_autocorrelation(ell: u64, h: u64, dashed: bool) -> Vec<i64> {
    let s = h % ell;
    let (plus, minus) = window_arcs(ell, s, dashed);
    let mut out = Vec::with_capacity(ell as usize);
    for m in 0..ell {
        let t = arc_intersection(ell, plus, shift_arc(ell, plus, m))
            - arc_intersection(ell, plus, shift_arc(ell, minus, m))
            - arc_intersection(ell, minus, shift_arc(ell, plus, m))
            + arc_intersection(ell, minus, shift_arc(ell, minus, m));
        out.push(t);
    }
    out
}

/// The two arcs with `W = 1 on plus, -1 on minus` (overlaps cancel).
fn window_arcs(ell: u64, s: u64, dashed: bool) -> (Arc, Arc) {
    let plus = Arc { start: 1 % ell, len: s };
    let minus = if dashed {
        Arc { start: (ell - s + 1) % ell, len: s }
    } else {
        Arc { start: (ell - s) % ell, len: s }
    };
    (plus, minus)
}

/// A cyclic arc `{start, start+1, ..., start+len-1}` mod ell.
#[derive(Debug, Clone, Copy)]
struct Arc {
    start: u64,
    len: u64,
}

fn shift_arc(ell: u64, a: Arc, m: u64) -> Arc {
    Arc { start: (a.start + m) % ell, len: a.len }
}

/// `|A ∩ B|` for two cyclic arcs mod ell.
fn arc_intersection(ell: u64, a: Arc, b: Arc) -> i64 {
    if a.len == 0 || b.len == 0 {
        return 0;
    }
    // Rotate so `a` starts at 0; `a` then occupies [0, a.len) without
    // wrapping, while `b` may spill past ell into a second copy.
    let d = (b.start + ell - a.start) % ell;
    let overlap_with_a = |lo: u64, hi: u64| -> i64 {
        let hi = hi.min(a.len);
        if hi > lo {
            (hi - lo) as i64
        } else {
            0
        }
    };
    // First copy of b: [d, min(d + b.len, ell)); wrapped remainder:
    // [0, d + b.len - ell).
    let mut total = overlap_with_a(d, (d + b.len).min(ell));
    if d + b.len > ell {
        total += overlap_with_a(0, d + b.len - ell);
    }
    total
}

/// All divisors of `n`, unsorted order not guaranteed.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Moebius value by trial factorisation; for single small arguments.
pub fn mobius_small(mut n: u64) -> i32 {
    assert!(n >= 1);
    let mut factors = 0;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Precomputed primitive-frequency expansion of one window character:
/// `chi_q(x) = sum over ell | q, ell > 1 of (ell/q) *
/// sum over j coprime to ell of c_{j,ell} e_ell(jx)`.
pub struct PrimitiveExpansion {
    q: u64,
    terms: Vec<(u64, Vec<(u64, Complex64)>)>,
}

impl PrimitiveExpansion {
    pub fn new(q: u64, h: u64, dashed: bool) -> Result<Self> {
        if q == 0 || h == 0 {
            return Err(Error::Domain("expansion needs q, h >= 1".into()));
        }
        let mut terms = Vec::new();
        for ell in divisors(q) {
            if ell == 1 {
                continue;
            }
            let mut coeffs = Vec::new();
            for j in 1..=ell {
                if j.gcd(&ell) == 1 {
                    coeffs.push((j % ell, window_fourier_coefficient(ell, h, j % ell, dashed)));
                }
            }
            terms.push((ell, coeffs));
        }
        Ok(PrimitiveExpansion { q, terms })
    }

    /// Evaluates the expansion at `x`; agrees with `chi_window` to within
    /// accumulated rounding, around 1e-9 at desk scale.
    pub fn evaluate(&self, x: u64) -> Complex64 {
        let mut total = Complex64::zero();
        for (ell, coeffs) in &self.terms {
            let mut inner = Complex64::zero();
            for &(j, c) in coeffs {
                let m = ((j as u128 * x as u128) % *ell as u128) as u64;
                inner += c * unit_root(*ell, m);
            }
            total += inner * (*ell as f64 / self.q as f64);
        }
        total
    }
}

/// One-shot reconstruction of `chi_q(x)` from primitive frequencies.
pub fn reconstruct_chi(q: u64, h: u64, x: u64, dashed: bool) -> Result<Complex64> {
    Ok(PrimitiveExpansion::new(q, h, dashed)?.evaluate(x))
}

/// Exact closed form of the bounded geometric sum
/// `sum_{x = N+1}^{2N} e(alpha x)`.
///
/// Integer `alpha` gives `N` exactly; otherwise the phases are reduced to
/// exact fractional parts before any float conversion and the closed form
/// `e(alpha/2) (e(2N alpha) - e(N alpha)) / (2i sin(pi alpha))` is
/// evaluated with the reduced phase, which it is invariant under.
pub fn bounded_geometric_sum(alpha: &Rational, n: u64) -> Complex64 {
    if alpha.is_integer() {
        return Complex64::new(n as f64, 0.0);
    }
    let f = alpha - alpha.floor(); // in (0, 1)
    let phase = |r: &Rational| -> Complex64 {
        let frac = r - r.floor();
        let angle = 2.0 * std::f64::consts::PI * crate::rational::to_f64(&frac);
        Complex64::new(angle.cos(), angle.sin())
    };
    let half = &f / rat_int(2);
    let n_big = rat_int(n as i64);
    let two_n = rat_int(2 * n as i64);
    let numerator = phase(&(&two_n * &f)) - phase(&(&n_big * &f));
    let sine = (std::f64::consts::PI * crate::rational::to_f64(&f)).sin();
    let denominator = Complex64::new(0.0, 2.0 * sine);
    phase(&half) * numerator / denominator
}

/// A pair of reduced fractions `j/ell != r/t`, carrying the exact spacing
/// bound used on the off-diagonal: `|| j/ell - r/t || >= 1/(ell t)`.
#[derive(Debug, Clone)]
pub struct FareyPair {
    j: u64,
    ell: u64,
    r: u64,
    t: u64,
}

impl FareyPair {
    pub fn new(j: u64, ell: u64, r: u64, t: u64) -> Result<Self> {
        if j == 0 || r == 0 || j > ell || r > t {
            return Err(Error::Domain(
                "fractions must satisfy 1 <= j <= ell, 1 <= r <= t".into(),
            ));
        }
        if j.gcd(&ell) != 1 || r.gcd(&t) != 1 {
            return Err(Error::Domain("fractions must be reduced".into()));
        }
        Ok(FareyPair { j, ell, r, t })
    }

    /// `j/ell - r/t`, exact.
    pub fn alpha(&self) -> Rational {
        Rational::new((self.j as i64).into(), (self.ell as i64).into())
            - Rational::new((self.r as i64).into(), (self.t as i64).into())
    }

    pub fn is_diagonal(&self) -> bool {
        self.j == self.r && self.ell == self.t
    }

    /// `1/(ell t)`, the guaranteed distance to the nearest integer for
    /// distinct fractions.
    pub fn min_spacing(&self) -> Rational {
        Rational::new(1.into(), ((self.ell as i64) * (self.t as i64)).into())
    }

    /// Checks the spacing bound; trivially true on the diagonal.
    pub fn spacing_holds(&self) -> bool {
        if self.is_diagonal() {
            return true;
        }
        nearest_integer_distance(&self.alpha()) >= self.min_spacing()
    }
}
