use core::fmt;

/// Errors shared across the numerical modules.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `m = 0`: the quadratic differential degenerates to a double zero and
    /// the spectral cover is singular.
    DegenerateDifferential,
    /// Evaluation requested on the branch cut joining the branch points.
    OnBranchCut { z: (f64, f64) },
    /// Evaluation at an excluded singular point (w = 0, z = 0, ...).
    SingularPoint,
    /// A quadrature did not reach the requested tolerance.
    Quadrature { location: (f64, f64), estimate: f64 },
    /// Non-finite value produced by an integrand or field evaluation.
    NonFinite { location: (f64, f64) },
    /// The twistor parameter sits on the jump locus `Re(zeta^{-1} m) = 0`
    /// where the magnetic coordinate changes branch.
    WallCrossing,
    /// The twistor parameter sits on the excluded ray where the anti-Stokes
    /// labelling jumps.
    LabellingJump,
    /// Network tracing failed (step-size underflow near a branch point).
    Trace { step: f64, at: (f64, f64) },
    /// A saddle configuration makes the requested path construction
    /// ambiguous.
    CriticalPhase,
    /// Parallel transport failed (step underflow or non-finite state).
    Transport { at: (f64, f64) },
    /// Wedge denominator vanished while extracting Stokes data.
    DegenerateSection,
    /// Connection specification is incomplete (e.g. missing u-field).
    Spec(&'static str),
    /// Argument outside the operation's domain.
    Domain(&'static str),
    /// Newton iteration for the self-duality equation diverged.
    NewtonDiverged { residual: f64 },
    /// Iterative linear solve stalled; the reported value is the final
    /// relative residual.
    LinearSolve { residual: f64 },
    /// Richardson/log-fit extrapolation did not converge.
    Extrapolation { residuals: [f64; 3] },
    /// Integral tail estimate above the requested threshold.
    TailTooLarge { tail: f64, threshold: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateDifferential => {
                write!(f, "m = 0 lies on the discriminant locus; the spectral cover degenerates")
            }
            Error::OnBranchCut { z } => {
                write!(f, "evaluation on the branch cut at z = {} + {}i", z.0, z.1)
            }
            Error::SingularPoint => write!(f, "evaluation at a singular point"),
            Error::Quadrature { location, estimate } => write!(
                f,
                "quadrature tolerance not met near z = {} + {}i (estimate {:e})",
                location.0, location.1, estimate
            ),
            Error::NonFinite { location } => write!(
                f,
                "non-finite integrand value near z = {} + {}i",
                location.0, location.1
            ),
            Error::WallCrossing => {
                write!(f, "Re(zeta^-1 m) = 0: magnetic coordinate jump locus")
            }
            Error::LabellingJump => {
                write!(f, "zeta lies on the excluded ray; anti-Stokes labelling jumps")
            }
            Error::Trace { step, at } => write!(
                f,
                "trace step underflow (step {:e}) near z = {} + {}i",
                step, at.0, at.1
            ),
            Error::CriticalPhase => {
                write!(f, "saddle configuration: path construction ambiguous")
            }
            Error::Transport { at } => {
                write!(f, "parallel transport failed near z = {} + {}i", at.0, at.1)
            }
            Error::DegenerateSection => write!(f, "vanishing wedge of flat sections"),
            Error::Spec(what) => write!(f, "invalid connection spec: {what}"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::NewtonDiverged { residual } => {
                write!(f, "Newton iteration diverged (residual {:e})", residual)
            }
            Error::LinearSolve { residual } => {
                write!(f, "linear solve stalled (relative residual {:e})", residual)
            }
            Error::Extrapolation { residuals } => write!(
                f,
                "extrapolation not converged (residuals {:e}, {:e}, {:e})",
                residuals[0], residuals[1], residuals[2]
            ),
            Error::TailTooLarge { tail, threshold } => write!(
                f,
                "tail estimate {:e} above threshold {:e}; enlarge the domain",
                tail, threshold
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
