//! The spectral double cover of `(z^2 + 2m) dz^2`, branch-tracked square
//! roots, and the antiderivatives used by the regularized holonomies.
//!
//! The cover is `{ s^2 = z^2 + 2m }`, a twice-punctured sphere branched over
//! `b_pm = ±sqrt(-2m)`. Two coordinates are used throughout:
//!
//! - the base coordinate `z` together with a sheet sign, with the square-root
//!   branch cut along the straight segment joining the branch points;
//! - the uniformizing coordinate `xi` with `z = c cosh(xi)`,
//!   `c = sqrt(-2m)`, in which the cover is a cylinder (`xi ~ xi + 2 pi i`),
//!   the tautological root is `c sinh(xi)` with no cut at all, and the top
//!   sheet is `Re(xi) > 0`.
//!
//! All log-like quantities are continued along paths (or carried as explicit
//! winding counts) rather than folded to principal values, because the
//! holonomy identities downstream hold only modulo `2 pi i` and continuity is
//! what their asymptotics use.

use crate::error::{Error, Result};
use crate::moduli::ModuliPoint;
use crate::C64;
use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

/// Sheet of the spectral cover. `Top` (+1) is the sheet containing the
/// puncture around which the electric loop runs; there the tautological root
/// behaves like `+z dz` at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sheet {
    Top,
    Bottom,
}

impl Sheet {
    pub fn sign(self) -> f64 {
        match self {
            Sheet::Top => 1.0,
            Sheet::Bottom => -1.0,
        }
    }

    pub fn flip(self) -> Sheet {
        match self {
            Sheet::Top => Sheet::Bottom,
            Sheet::Bottom => Sheet::Top,
        }
    }
}

/// A point on the spectral cover: base coordinate plus sheet sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SheetPoint {
    pub z: C64,
    pub sheet: Sheet,
}

impl SheetPoint {
    pub fn new(z: C64, sheet: Sheet) -> Self {
        SheetPoint { z, sheet }
    }

    pub fn top(z: C64) -> Self {
        SheetPoint { z, sheet: Sheet::Top }
    }

    pub fn bottom(z: C64) -> Self {
        SheetPoint { z, sheet: Sheet::Bottom }
    }
}

/// Identity of a branch point: `Plus` is `+sqrt(-2m)` in the continued
/// branch convention of [`half_period`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchPointId {
    Plus,
    Minus,
}

/// Branch points of the cover, ordered `(principal, -principal)`.
pub fn branch_points(m: C64) -> Result<(C64, C64)> {
    if m.norm_sqr() == 0.0 {
        return Err(Error::DegenerateDifferential);
    }
    let b = (-2.0 * m).sqrt();
    Ok((b, -b))
}

/// The branch point `c = sqrt(-2m)` with the branch continued from `m < 0`
/// (where `c > 0`): `c = |2m|^{1/2} exp(i (arg m - pi) / 2)`.
///
/// This agrees with the principal root for `Im m >= 0` and differs by a sign
/// below the real axis; continuity from the negative real axis is what the
/// ray labelling and `Z_B` conventions use.
pub fn half_period(m: C64) -> Result<C64> {
    if m.norm_sqr() == 0.0 {
        return Err(Error::DegenerateDifferential);
    }
    let r = (2.0 * m.norm()).sqrt();
    let phi = (m.arg() - PI) / 2.0;
    Ok(C64::from_polar(r, phi))
}

/// The `|t| >= 1` solution of `t + 1/t = 2 z / c`, i.e. `t = exp(xi)` with
/// `Re(xi) >= 0`. The unit circle `|t| = 1` is exactly the branch cut.
/// On-cut inputs resolve to the root `rho + sqrt(rho^2 - 1)` (principal
/// square root), a fixed side convention.
pub fn t_plus(z: C64, m: C64) -> Result<C64> {
    let c = half_period(m)?;
    let rho = z / c;
    let s = (rho * rho - 1.0).sqrt();
    let t1 = rho + s;
    let t2 = rho - s;
    // Pick the root outside the unit circle; for |t| = 1 keep t1.
    if t1.norm() >= t2.norm() {
        Ok(t1)
    } else {
        Ok(t2)
    }
}

/// Top-sheet value of `sqrt(z^2 + 2m)` with branch cut on the segment
/// joining the branch points, normalized to `~ +z` at infinity.
pub fn sqrt_p_top(z: C64, m: C64) -> Result<C64> {
    let c = half_period(m)?;
    let t = t_plus(z, m)?;
    Ok(c * (t - 1.0 / t) / 2.0)
}

/// True when `z` lies strictly inside the open branch-cut segment.
pub fn on_cut(z: C64, m: C64, tol: f64) -> bool {
    let c = match half_period(m) {
        Ok(c) => c,
        Err(_) => return false,
    };
    // Project on the cut direction: z = a c with a in (-1, 1) on the cut.
    let a = z / c;
    a.im.abs() * c.norm() < tol && a.re.abs() < 1.0 - tol / c.norm()
}

/// Coefficient of `dz` in the tautological 1-form at a sheet point:
/// `sheet * sqrt(z^2 + 2m)` in the cut branch.
pub fn lambda0(p: SheetPoint, m: C64) -> Result<C64> {
    if m.norm_sqr() == 0.0 {
        // Degenerate differential: the root is just z, no cover needed.
        return Ok(p.sheet.sign() * p.z);
    }
    if on_cut(p.z, m, 1e-13) {
        return Err(Error::OnBranchCut { z: (p.z.re, p.z.im) });
    }
    Ok(p.sheet.sign() * sqrt_p_top(p.z, m)?)
}

/// `xi` coordinate of the top-sheet lift of `z`, with `Im` taken principal.
pub fn xi_top(z: C64, m: C64) -> Result<C64> {
    Ok(t_plus(z, m)?.ln())
}

/// The antiderivative of the top-sheet root in the `xi` coordinate:
///
/// `Lambda0 = m (xi - sinh(2 xi)/2 + ln c - 1/2 - ln 2)`,
///
/// which equals `(z/2) sqrt(z^2+2m) + m log(z + sqrt(z^2+2m)) - m/2 - m log 2`
/// with the log determination `log(z + sqrt(..)) = xi + Log c`. Near `w = 1/z
/// = 0` on the top sheet it expands as `w^{-2}/2 - m log w + O(w)`.
pub fn lambda_big0_at_xi(xi: C64, m: C64) -> Result<C64> {
    let c = half_period(m)?;
    Ok(m * (xi - (2.0 * xi).sinh() / 2.0 + c.ln() - 0.5 - core::f64::consts::LN_2))
}

/// `Lambda0` at a base point, top-sheet branch with principal `xi`-lift.
/// On-cut inputs use the side convention of [`t_plus`].
#[allow(non_snake_case)]
pub fn Lambda0(z: C64, m: C64) -> Result<C64> {
    lambda_big0_at_xi(xi_top(z, m)?, m)
}

/// Derivative of `Lambda0` in `m` at fixed `z` (top sheet):
/// `log((z + sqrt(z^2+2m))/2) = xi + log(c/2)`.
pub fn d_lambda_big0_dm_at_xi(xi: C64, m: C64) -> Result<C64> {
    let c = half_period(m)?;
    Ok(xi + c.ln() - core::f64::consts::LN_2)
}

/// Magnetic central charge `Z_B = -m log(m / (-2e))`, principal log of
/// `-m/2` (continuous from `m < 0`, branch cut on the positive real `m`
/// axis).
pub fn z_b(m: C64) -> Result<C64> {
    if m.norm_sqr() == 0.0 {
        return Err(Error::DegenerateDifferential);
    }
    Ok(-m * ((-m / 2.0).ln() - 1.0))
}

/// `d Z_B / d m = -log(m/(-2e)) - 1`, same branch as [`z_b`].
pub fn d_z_b_dm(m: C64) -> Result<C64> {
    if m.norm_sqr() == 0.0 {
        return Err(Error::DegenerateDifferential);
    }
    Ok(-((-m / 2.0).ln() - 1.0) - 1.0)
}

/// Electric log-coordinate `x_e = -2 pi i (zeta^{-1} m - m3 - zeta conj(m))`,
/// the monodromy of [`a0`] around `w = 0`; `X_e = exp(x_e)`.
pub fn x_e(zeta: C64, pt: &ModuliPoint) -> C64 {
    let i2pi = C64::new(0.0, -2.0 * PI);
    i2pi * (pt.m / zeta - pt.m3 - zeta * pt.m.conj())
}

/// Normalization antiderivative near the irregular singularity:
///
/// `A0(w) = zeta^{-1} w^{-2}/2 + zeta wbar^{-2}/2
///          - (zeta^{-1} m - m3/2) log w - (zeta mbar + m3/2) log wbar`,
///
/// with the log branch shifted by `2 pi i * log_branch` relative to the
/// principal one. Its monodromy around `w = 0` is `x_e`.
pub fn a0(w: C64, zeta: C64, pt: &ModuliPoint, log_branch: i32) -> Result<C64> {
    if w.norm_sqr() == 0.0 {
        return Err(Error::SingularPoint);
    }
    let lw = w.ln() + C64::new(0.0, 2.0 * PI * log_branch as f64);
    a0_with_logw(w, lw, zeta, pt)
}

/// [`a0`] with an explicitly supplied determination of `log w`.
pub fn a0_with_logw(w: C64, log_w: C64, zeta: C64, pt: &ModuliPoint) -> Result<C64> {
    if w.norm_sqr() == 0.0 {
        return Err(Error::SingularPoint);
    }
    let w2 = w * w;
    let zi = 1.0 / zeta;
    Ok(zi / (2.0 * w2) + zeta / (2.0 * w2.conj())
        - (zi * pt.m - 0.5 * pt.m3) * log_w
        - (zeta * pt.m.conj() + 0.5 * pt.m3) * log_w.conj())
}

/// Semiflat Chern antiderivative `C0(w) = (m3/2)(log w - log wbar)
/// = i m3 arg(w)`; purely imaginary. Principal argument.
pub fn c0(w: C64, m3: f64) -> Result<C64> {
    if w.norm_sqr() == 0.0 {
        return Err(Error::SingularPoint);
    }
    Ok(C64::new(0.0, m3 * w.arg()))
}

/// [`c0`] with an explicitly continued `arg w`.
pub fn c0_with_arg(arg_w: f64, m3: f64) -> C64 {
    C64::new(0.0, m3 * arg_w)
}

// ---------------------------------------------------------------------------
// Paths on the cover
// ---------------------------------------------------------------------------

/// A polyline path on the spectral cover. Sheets are constant along segments
/// and flip exactly at the recorded cut crossings: `cut_crossings[k] =
/// (segment index i, branch point)` means the segment from `nodes[i]` to
/// `nodes[i+1]` starts on `nodes[i].sheet` and ends on the flipped sheet (the
/// crossing point is a segment endpoint by construction, see
/// [`CoverPath::from_polyline`]).
#[derive(Debug, Clone)]
pub struct CoverPath {
    nodes: Vec<SheetPoint>,
    cut_crossings: Vec<(usize, BranchPointId)>,
}

impl CoverPath {
    /// Validates the sheet bookkeeping: flips happen exactly at recorded
    /// crossings.
    pub fn new(nodes: Vec<SheetPoint>, cut_crossings: Vec<(usize, BranchPointId)>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::Domain("path needs at least two nodes"));
        }
        for i in 0..nodes.len() - 1 {
            let crossing = cut_crossings.iter().any(|&(k, _)| k == i);
            let flips = nodes[i].sheet != nodes[i + 1].sheet;
            if crossing != flips {
                return Err(Error::Domain("sheet flips must match recorded cut crossings"));
            }
        }
        Ok(CoverPath { nodes, cut_crossings })
    }

    /// Builds a cover path from a base polyline and a starting sheet,
    /// detecting cut crossings and splitting the crossing segments at the
    /// cut so that every stored segment has a constant sheet up to its
    /// endpoint.
    pub fn from_polyline(points: &[C64], start: Sheet, m: C64) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Domain("path needs at least two nodes"));
        }
        let (bp, bm) = branch_points(m)?;
        let c = half_period(m)?;
        let mut nodes: Vec<SheetPoint> = Vec::new();
        let mut crossings: Vec<(usize, BranchPointId)> = Vec::new();
        let mut sheet = start;
        nodes.push(SheetPoint::new(points[0], sheet));
        for w in points.windows(2) {
            let (a, b) = (w[0], w[1]);
            if let Some(x) = segment_cut_intersection(a, b, c) {
                // Split at the crossing; the sheet flips there.
                let which = if (x - bp).norm() <= (x - bm).norm() {
                    BranchPointId::Plus
                } else {
                    BranchPointId::Minus
                };
                crossings.push((nodes.len() - 1, which));
                sheet = sheet.flip();
                nodes.push(SheetPoint::new(x, sheet));
            }
            nodes.push(SheetPoint::new(b, sheet));
        }
        CoverPath::new(nodes, crossings)
    }

    pub fn nodes(&self) -> &[SheetPoint] {
        &self.nodes
    }

    pub fn cut_crossings(&self) -> &[(usize, BranchPointId)] {
        &self.cut_crossings
    }

    pub fn start(&self) -> SheetPoint {
        self.nodes[0]
    }

    pub fn end(&self) -> SheetPoint {
        *self.nodes.last().unwrap()
    }

    /// Closed circle on one sheet, counterclockwise in `z`.
    pub fn circle(center: C64, radius: f64, sheet: Sheet, segments: usize) -> Result<Self> {
        let n = segments.max(8);
        let mut nodes = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let th = 2.0 * PI * (k as f64) / (n as f64);
            nodes.push(SheetPoint::new(center + C64::from_polar(radius, th), sheet));
        }
        CoverPath::new(nodes, Vec::new())
    }

    /// Continuous `xi`-lift of the path nodes; the start node lifts with
    /// `Im xi` nearest to `seed_im` (top sheet: `Re xi >= 0`).
    pub fn xi_lift(&self, m: C64, seed_im: f64) -> Result<Vec<C64>> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut prev: Option<C64> = None;
        for p in &self.nodes {
            let xi0 = xi_top(p.z, m)?;
            let base = match p.sheet {
                Sheet::Top => xi0,
                Sheet::Bottom => -xi0,
            };
            let want_im = match prev {
                None => seed_im,
                Some(q) => q.im,
            };
            // Nodes sitting on the cut (mu = 0) have an ambiguous side; allow
            // both mirror lifts and keep the one continuous with the path.
            let mut best = nearest_im_shift(base, want_im);
            if xi0.re.abs() < 1e-9 {
                let alt = nearest_im_shift(-base, want_im);
                if (alt.im - want_im).abs() < (best.im - want_im).abs() {
                    best = alt;
                }
            }
            out.push(best);
            prev = Some(best);
        }
        Ok(out)
    }
}

fn nearest_im_shift(base: C64, want_im: f64) -> C64 {
    let k = ((want_im - base.im) / (2.0 * PI)).round();
    base + C64::new(0.0, 2.0 * PI * k)
}

/// Intersection of the open segment `(a, b)` with the open branch cut
/// `(-c, c)`, if any. Endpoint touches do not count.
fn segment_cut_intersection(a: C64, b: C64, c: C64) -> Option<C64> {
    // Work in units of the cut: u = z / c maps the cut to (-1, 1) on the
    // real axis.
    let ua = a / c;
    let ub = b / c;
    let da = ua.im;
    let db = ub.im;
    if da == 0.0 && db == 0.0 {
        return None; // collinear: treat as no transversal crossing
    }
    if (da > 0.0 && db > 0.0) || (da < 0.0 && db < 0.0) {
        return None;
    }
    let t = da / (da - db);
    if !(t > 0.0 && t < 1.0) {
        return None;
    }
    let x = ua.re + t * (ub.re - ua.re);
    if x.abs() >= 1.0 {
        return None;
    }
    Some(c * C64::new(x, 0.0))
}

/// Continues `sqrt(z^2 + 2m)` along a base polyline starting from a given
/// root value at `points[0]`; returns the continued values at all nodes.
/// Steps must be small enough that the nearer root is unambiguous.
pub fn continue_sqrt_p(points: &[C64], start_root: C64, m: C64) -> Result<Vec<C64>> {
    let mut out = Vec::with_capacity(points.len());
    let mut cur = start_root;
    let p0 = points[0];
    let v0 = (p0 * p0 + 2.0 * m).sqrt();
    cur = if (v0 - cur).norm() <= (-v0 - cur).norm() { v0 } else { -v0 };
    out.push(cur);
    for &z in &points[1..] {
        let v = (z * z + 2.0 * m).sqrt();
        cur = if (v - cur).norm() <= (-v - cur).norm() { v } else { -v };
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn branch_points_examples() {
        let (p, q) = branch_points(c(-0.5, 0.0)).unwrap();
        assert!((p - c(1.0, 0.0)).norm() < 1e-14);
        assert!((q - c(-1.0, 0.0)).norm() < 1e-14);
        let (p, q) = branch_points(c(0.5, 0.0)).unwrap();
        assert!((p - c(0.0, 1.0)).norm() < 1e-14);
        assert!((q - c(0.0, -1.0)).norm() < 1e-14);
        // m = 1+i: roots of z^2 = -2-2i, product must be 2+2i.
        let m = c(1.0, 1.0);
        let (p, q) = branch_points(m).unwrap();
        assert!((p * q - c(2.0, 2.0)).norm() < 1e-13);
        assert!((p * p + 2.0 * m).norm() < 1e-13);
        assert!(branch_points(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn lambda0_examples() {
        // m = 0 degenerates to sqrt(z^2) = z.
        let v = lambda0(SheetPoint::top(c(10.0, 0.0)), c(0.0, 0.0)).unwrap();
        assert!((v - c(10.0, 0.0)).norm() < 1e-14);
        let v = lambda0(SheetPoint::bottom(c(10.0, 0.0)), c(0.0, 0.0)).unwrap();
        assert!((v + c(10.0, 0.0)).norm() < 1e-14);
        // Square-and-compare oracle: z = 3, m = 1+i -> value^2 = 11+2i, Re > 0.
        let v = lambda0(SheetPoint::top(c(3.0, 0.0)), c(1.0, 1.0)).unwrap();
        assert!((v * v - c(11.0, 2.0)).norm() < 1e-12);
        assert!(v.re > 0.0);
    }

    #[test]
    fn lambda0_on_cut_errors() {
        let m = c(-1.0, 0.0); // cut is [-sqrt2, sqrt2] on the real axis
        let p = SheetPoint::top(c(0.3, 0.0));
        assert!(matches!(lambda0(p, m), Err(Error::OnBranchCut { .. })));
        // Just off the cut is fine and the two sides differ by a sign.
        let above = lambda0(SheetPoint::top(c(0.3, 1e-6)), m).unwrap();
        let below = lambda0(SheetPoint::top(c(0.3, -1e-6)), m).unwrap();
        assert!((above + below).norm() < 1e-4);
    }

    #[test]
    fn lambda_big0_closed_form_values() {
        // Lambda0(0) = (m/2) log(m/(2e)).
        let e = core::f64::consts::E;
        let m = c(2.0 * e, 0.0);
        let v = Lambda0(c(0.0, 0.0), m).unwrap();
        assert!(v.norm() < 1e-12, "expected 0, got {v}");
        let m = c(2.0, 0.0);
        let v = Lambda0(c(0.0, 0.0), m).unwrap();
        assert!((v - c(-1.0, 0.0)).norm() < 1e-12, "expected -1, got {v}");
    }

    #[test]
    fn lambda_big0_derivative_matches_root() {
        // Finite differences of Lambda0 in z against lambda0 (top sheet).
        let m = c(1.0, 0.0);
        let z = c(5.0, 0.0);
        let h = 1e-5;
        let d = (Lambda0(z + c(h, 0.0), m).unwrap() - Lambda0(z - c(h, 0.0), m).unwrap()) / (2.0 * h);
        let v = lambda0(SheetPoint::top(z), m).unwrap();
        assert!((d - v).norm() / v.norm() < 1e-8, "dLambda0 = {d}, lambda0 = {v}");
    }

    #[test]
    fn lambda_big0_asymptotics() {
        // Lambda0(w) = w^{-2}/2 - m log w + O(w) near w = 0 on the top sheet.
        let m = c(0.3, 0.7);
        for &w in &[c(1e-3, 2e-4), c(-2e-4, 1e-3)] {
            let z = 1.0 / w;
            let v = Lambda0(z, m).unwrap();
            let lead = 1.0 / (2.0 * w * w) - m * w.ln();
            assert!((v - lead).norm() < 1e-2 * w.norm(), "residual {}", (v - lead).norm());
        }
    }

    #[test]
    fn z_b_examples() {
        let e = core::f64::consts::E;
        assert!(z_b(c(-2.0 * e, 0.0)).unwrap().norm() < 1e-13);
        assert!((z_b(c(-2.0, 0.0)).unwrap() - c(-2.0, 0.0)).norm() < 1e-13);
        // Finite-difference check of dZ_B/dm at m = -1 + i.
        let m = c(-1.0, 1.0);
        let h = 1e-6;
        let d_num = (z_b(m + c(h, 0.0)).unwrap() - z_b(m - c(h, 0.0)).unwrap()) / (2.0 * h);
        let d = d_z_b_dm(m).unwrap();
        assert!((d_num - d).norm() / d.norm() < 1e-8);
    }

    #[test]
    fn two_lambda_big0_at_branch_point_is_minus_z_b() {
        // 2 Lambda0(c) = -Z_B exactly in the continued branch, for m off the
        // positive real axis.
        for &m in &[c(-1.0, 0.0), c(1.0, 1.0), c(0.0, 2.0), c(-0.3, -0.4)] {
            let v = 2.0 * lambda_big0_at_xi(c(0.0, 0.0), m).unwrap();
            let target = -z_b(m).unwrap();
            assert!((v - target).norm() < 1e-12, "m = {m}: {v} vs {target}");
        }
    }

    #[test]
    fn a0_examples() {
        // zeta = 1, m = 0, m3 = 0, w = 1: only the w^{-2} terms survive.
        let pt = ModuliPoint::new(c(0.0, 0.0), 0.0, 0.0).unwrap();
        let v = a0(c(1.0, 0.0), c(1.0, 0.0), &pt, 0).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-14);

        // Monodromy: A0(w e^{2 pi i}) - A0(w) = x_e.
        let pt = ModuliPoint::new(c(0.0, 1.0), 0.25, 0.0).unwrap();
        let zeta = c(1.0, 0.0);
        let w = c(0.3, 0.1);
        let jump = a0(w, zeta, &pt, 1).unwrap() - a0(w, zeta, &pt, 0).unwrap();
        let xe = x_e(zeta, &pt);
        assert!((jump - xe).norm() < 1e-12, "jump {jump} vs x_e {xe}");
    }

    #[test]
    fn a0_derivative_matches_connection_singular_part() {
        // dA0 against the singular part of the framed connection form by
        // finite differences: coefficient of dw is
        //   -zeta^{-1}/w^3 - (zeta^{-1} m - m3/2)/w
        // and of dwbar the zeta-conjugate partner.
        let pt = ModuliPoint::new(c(1.0, 0.0), 0.5, 0.0).unwrap();
        let zeta = c(2.0, 0.0);
        let w = c(0.5, 0.0);
        let h = 1e-6;
        let re = (a0(w + c(h, 0.0), zeta, &pt, 0).unwrap()
            - a0(w - c(h, 0.0), zeta, &pt, 0).unwrap())
            / (2.0 * h);
        let im = (a0(w + c(0.0, h), zeta, &pt, 0).unwrap()
            - a0(w - c(0.0, h), zeta, &pt, 0).unwrap())
            / (2.0 * h);
        // d/dw = (d/dx - i d/dy)/2, d/dwbar = (d/dx + i d/dy)/2.
        let dw = (re - C64::new(0.0, 1.0) * im) / 2.0;
        let dwb = (re + C64::new(0.0, 1.0) * im) / 2.0;
        let zi = 1.0 / zeta;
        let expect_dw = -zi / (w * w * w) - (zi * pt.m - 0.5 * pt.m3) / w;
        let expect_dwb =
            -zeta / (w * w * w).conj() - (zeta * pt.m.conj() + 0.5 * pt.m3) / w.conj();
        assert!((dw - expect_dw).norm() / expect_dw.norm() < 1e-7);
        assert!((dwb - expect_dwb).norm() / expect_dwb.norm() < 1e-7);
    }

    #[test]
    fn c0_examples() {
        assert!(c0(c(1.0, 0.0), 0.5).unwrap().norm() < 1e-15);
        let v = c0(c(0.0, 1.0), 0.5).unwrap();
        assert!((v - c(0.0, PI / 4.0)).norm() < 1e-15);
        let w = C64::from_polar(1.0, 0.9);
        let v = c0(w, 0.3).unwrap();
        assert!((v - c(0.0, 0.3 * 0.9)).norm() < 1e-14);
        assert!(v.re == 0.0);
    }

    #[test]
    fn cover_path_bookkeeping() {
        let m = c(-1.0, 0.0); // cut [-sqrt2, sqrt2]
        // A vertical polyline crossing the cut once.
        let pts = [c(0.5, 1.0), c(0.5, -1.0)];
        let path = CoverPath::from_polyline(&pts, Sheet::Top, m).unwrap();
        assert_eq!(path.cut_crossings().len(), 1);
        assert_eq!(path.start().sheet, Sheet::Top);
        assert_eq!(path.end().sheet, Sheet::Bottom);
        assert_eq!(path.cut_crossings()[0].1, BranchPointId::Plus);
        // Not crossing: stays on one sheet.
        let pts = [c(3.0, 1.0), c(3.0, -1.0)];
        let path = CoverPath::from_polyline(&pts, Sheet::Top, m).unwrap();
        assert!(path.cut_crossings().is_empty());
        assert_eq!(path.end().sheet, Sheet::Top);
    }

    #[test]
    fn xi_lift_is_continuous() {
        let m = c(-1.0, 0.0);
        // Quarter arc at |z| = 5 on the top sheet.
        let mut pts = Vec::new();
        for k in 0..=40 {
            let th = -PI / 2.0 + (PI / 2.0) * (k as f64) / 40.0;
            pts.push(C64::from_polar(5.0, th));
        }
        let path = CoverPath::from_polyline(&pts, Sheet::Top, m).unwrap();
        let lift = path.xi_lift(m, -PI / 2.0).unwrap();
        for w in lift.windows(2) {
            assert!((w[1] - w[0]).norm() < 0.2);
        }
        assert!((lift[0].im + PI / 2.0).abs() < 0.1);
        assert!(lift.last().unwrap().im.abs() < 0.1);
    }
}
