//! Parameters of a framed bundle and their variations.

use crate::error::{Error, Result};
use crate::C64;
use core::f64::consts::PI;
use num_traits::Float;

/// Coordinates on the moduli space of framed bundles: the simple-pole
/// parameter `m`, the parabolic weight `m3`, and the magnetic framing angle
/// `theta_m` (zero on the Hitchin section).
///
/// The dictionary to Ooguri-Vafa base coordinates is `ov_z = -2 i m`,
/// `theta_e = 2 pi m3`; both are derived on demand and never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliPoint {
    pub m: C64,
    pub m3: f64,
    pub theta_m: f64,
}

impl ModuliPoint {
    /// `m3` must lie in the half-open interval `(-1/2, 1/2]`.
    pub fn new(m: C64, m3: f64, theta_m: f64) -> Result<Self> {
        if !(m3 > -0.5 && m3 <= 0.5) {
            return Err(Error::Domain("m3 must lie in (-1/2, 1/2]"));
        }
        if !m.is_finite() || !theta_m.is_finite() {
            return Err(Error::Domain("non-finite moduli parameters"));
        }
        Ok(ModuliPoint { m, m3, theta_m })
    }

    /// Hitchin-section point: parabolic weight 1/2 and self-dual framing.
    pub fn hitchin(m: C64) -> Self {
        ModuliPoint { m, m3: 0.5, theta_m: 0.0 }
    }

    /// Base coordinate of the corresponding Ooguri-Vafa fibration.
    pub fn ov_z(&self) -> C64 {
        C64::new(0.0, -2.0) * self.m
    }

    /// Electric angle `2 pi m3`.
    pub fn theta_e(&self) -> f64 {
        2.0 * PI * self.m3
    }
}

/// Nonzero twistor parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistorParam {
    zeta: C64,
}

impl TwistorParam {
    pub fn new(zeta: C64) -> Result<Self> {
        if zeta.norm_sqr() == 0.0 || !zeta.is_finite() {
            return Err(Error::Domain("zeta must be finite and nonzero"));
        }
        Ok(TwistorParam { zeta })
    }

    pub fn get(&self) -> C64 {
        self.zeta
    }

    pub fn inv(&self) -> C64 {
        1.0 / self.zeta
    }

    pub fn arg(&self) -> f64 {
        self.zeta.arg()
    }
}

/// A variation of a [`ModuliPoint`], used to pair symplectic forms.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TangentVector {
    pub m_dot: C64,
    pub m3_dot: f64,
    pub theta_m_dot: f64,
}

impl TangentVector {
    pub fn new(m_dot: C64, m3_dot: f64, theta_m_dot: f64) -> Self {
        TangentVector { m_dot, m3_dot, theta_m_dot }
    }

    /// Variation in the `m` direction only.
    pub fn m_dir(m_dot: C64) -> Self {
        TangentVector { m_dot, m3_dot: 0.0, theta_m_dot: 0.0 }
    }

    /// Variation of the parabolic weight only.
    pub fn m3_dir(m3_dot: f64) -> Self {
        TangentVector { m_dot: C64::new(0.0, 0.0), m3_dot, theta_m_dot: 0.0 }
    }

    pub fn scaled(&self, s: f64) -> Self {
        TangentVector {
            m_dot: self.m_dot * s,
            m3_dot: self.m3_dot * s,
            theta_m_dot: self.theta_m_dot * s,
        }
    }
}

/// Principal argument folded into `(-pi, pi]`.
pub fn principal_arg(z: C64) -> f64 {
    let a = z.arg();
    // `arg` returns (-pi, pi] already except for the -pi edge on some inputs.
    if a <= -PI {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Wrap an angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x <= -PI {
        x += 2.0 * PI;
    } else if x > PI {
        x -= 2.0 * PI;
    }
    x
}

/// Distance between two angles modulo 2 pi.
pub fn angle_dist(a: f64, b: f64) -> f64 {
    wrap_angle(a - b).abs()
}
