//! Constrained engineering design problems.
//!
//! Each problem keeps its published objective. Several published constraint
//! statements contain transcription errors; the corrected forms are noted on
//! each [`Problem`] (see [`Problem::notes`]) and in the comments below.
//! Constraints with large physical scales are divided by their limit so that
//! every `g_i` is dimensionless; the feasible set is unchanged.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::problem::{Problem, SearchSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EngineeringId {
    PressureVessel,
    SpringDesign,
    ThreeBarTruss,
    GearTrain,
    CantileverBeam,
    WeldedBeam,
}

impl EngineeringId {
    pub const ALL: [EngineeringId; 6] = [
        EngineeringId::PressureVessel,
        EngineeringId::SpringDesign,
        EngineeringId::ThreeBarTruss,
        EngineeringId::GearTrain,
        EngineeringId::CantileverBeam,
        EngineeringId::WeldedBeam,
    ];

    pub fn id(self) -> &'static str {
        match self {
            EngineeringId::PressureVessel => "pressure_vessel",
            EngineeringId::SpringDesign => "spring_design",
            EngineeringId::ThreeBarTruss => "three_bar_truss",
            EngineeringId::GearTrain => "gear_train",
            EngineeringId::CantileverBeam => "cantilever_beam",
            EngineeringId::WeldedBeam => "welded_beam",
        }
    }

    /// Best known objective value from the literature, for reporting.
    pub fn known_best(self) -> f64 {
        match self {
            EngineeringId::PressureVessel => 6059.714,
            EngineeringId::SpringDesign => 0.012665,
            EngineeringId::ThreeBarTruss => 263.8958,
            EngineeringId::GearTrain => 2.700857e-12,
            EngineeringId::CantileverBeam => 1.339956,
            EngineeringId::WeldedBeam => 1.724852,
        }
    }

    /// A literature optimum, rounded as commonly reported.
    pub fn literature_optimum(self) -> &'static [f64] {
        match self {
            EngineeringId::PressureVessel => &[0.8125, 0.4375, 42.0984, 176.6366],
            EngineeringId::SpringDesign => &[0.0517, 0.3567, 11.289],
            EngineeringId::ThreeBarTruss => &[0.78868, 0.40825],
            EngineeringId::GearTrain => &[19.0, 16.0, 43.0, 49.0],
            EngineeringId::CantileverBeam => &[6.016, 5.309, 4.494, 3.502, 2.153],
            EngineeringId::WeldedBeam => &[0.2057, 3.4705, 9.0366, 0.2057],
        }
    }

    pub fn problem(self) -> Problem {
        match self {
            EngineeringId::PressureVessel => pressure_vessel(),
            EngineeringId::SpringDesign => spring_design(),
            EngineeringId::ThreeBarTruss => three_bar_truss(),
            EngineeringId::GearTrain => gear_train(),
            EngineeringId::CantileverBeam => cantilever_beam(),
            EngineeringId::WeldedBeam => welded_beam(),
        }
    }
}

impl fmt::Display for EngineeringId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for EngineeringId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        EngineeringId::ALL
            .into_iter()
            .find(|p| p.id() == key)
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

fn space(lower: &[f64], upper: &[f64]) -> SearchSpace {
    SearchSpace::new(lower.to_vec(), upper.to_vec()).expect("engineering bounds are valid")
}

/// Shell/head thicknesses (multiples of 0.0625), inner radius, cylinder length.
pub fn pressure_vessel() -> Problem {
    let objective = |x: &[f64]| {
        let (p1, p2, p3, p4) = (x[0], x[1], x[2], x[3]);
        0.6224 * p1 * p3 * p4 + 1.7781 * p2 * p3 * p3 + 3.1661 * p1 * p1 * p4 + 19.84 * p1 * p1 * p3
    };
    Problem::new(
        EngineeringId::PressureVessel.id(),
        space(&[0.0, 0.0, 10.0, 10.0], &[99.0, 99.0, 200.0, 200.0]),
        objective,
    )
    .with_constraint(|x| -x[0] + 0.0193 * x[2])
    .with_constraint(|x| -x[1] + 0.00954 * x[2])
    // volume >= 1,296,000, scaled by that volume
    .with_constraint(|x| {
        let (r, l) = (x[2], x[3]);
        (-PI * r * r * l - 4.0 / 3.0 * PI * r.powi(3)) / 1_296_000.0 + 1.0
    })
    .with_constraint(|x| x[3] - 240.0)
    .with_grid_dim(0, 0.0625)
    .and_then(|p| p.with_grid_dim(1, 0.0625))
    .expect("thickness dims are in range")
    .with_known_best(EngineeringId::PressureVessel.known_best())
    .with_note("S2 printed as -P3 + 0.00954*P3; uses -P2 + 0.00954*P3")
    .with_note("S4 printed as -P4 - 240; uses P4 - 240")
    .with_note("S3 divided by 1,296,000")
}

/// Wire diameter, mean coil diameter, number of active coils.
pub fn spring_design() -> Problem {
    Problem::new(
        EngineeringId::SpringDesign.id(),
        space(&[0.05, 0.25, 2.0], &[2.0, 1.3, 15.0]),
        |x| (x[2] + 2.0) * x[1] * x[0] * x[0],
    )
    .with_constraint(|x| 1.0 - x[1].powi(3) * x[2] / (71785.0 * x[0].powi(4)))
    .with_constraint(|x| {
        let (d, dm) = (x[0], x[1]);
        (4.0 * dm * dm - d * dm) / (12566.0 * (dm * d.powi(3) - d.powi(4))) + 1.0 / (5108.0 * d * d) - 1.0
    })
    .with_constraint(|x| 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2]))
    .with_constraint(|x| (x[0] + x[1]) / 1.5 - 1.0)
    .with_known_best(EngineeringId::SpringDesign.known_best())
    .with_note("S1 printed without the coil count; uses 1 - P2^3*P3/(71785*P1^4)")
    .with_note("S4 printed as -(P1+P2)/1.5 - 1; uses (P1+P2)/1.5 - 1")
}

const TRUSS_LENGTH: f64 = 100.0;
const TRUSS_LOAD: f64 = 2.0;
const TRUSS_STRESS: f64 = 2.0;

fn truss_guarded(x: &[f64], g: impl Fn(f64, f64, f64) -> f64) -> f64 {
    let (b1, b2) = (x[0], x[1]);
    let denom = SQRT_2 * b1 * b1 + 2.0 * b1 * b2;
    if denom < 1e-12 {
        f64::INFINITY
    } else {
        g(b1, b2, denom)
    }
}

/// Cross-section areas of the outer and middle bars.
pub fn three_bar_truss() -> Problem {
    Problem::new(
        EngineeringId::ThreeBarTruss.id(),
        space(&[0.0, 0.0], &[1.0, 1.0]),
        |x| (2.0 * SQRT_2 * x[0] + x[1]) * TRUSS_LENGTH,
    )
    .with_constraint(|x| {
        truss_guarded(x, |b1, b2, d| (SQRT_2 * b1 + b2) / d * TRUSS_LOAD - TRUSS_STRESS)
    })
    .with_constraint(|x| truss_guarded(x, |_, b2, d| b2 / d * TRUSS_LOAD - TRUSS_STRESS))
    .with_constraint(|x| {
        truss_guarded(x, |b1, b2, _| TRUSS_LOAD / (b1 + SQRT_2 * b2) - TRUSS_STRESS)
    })
    .with_known_best(EngineeringId::ThreeBarTruss.known_best())
    .with_note("objective read as (2*sqrt(2)*B1 + B2)*l")
    .with_note("S1-S3 use the Ray-Saini stress forms with denominator sqrt(2)*B1^2 + 2*B1*B2 (S3: B1 + sqrt(2)*B2)")
}

/// Tooth counts of the four gears; evaluated at integers.
pub fn gear_train() -> Problem {
    Problem::new(
        EngineeringId::GearTrain.id(),
        space(&[12.0; 4], &[60.0; 4]),
        |x| (1.0 / 6.931 - (x[0] * x[1]) / (x[2] * x[3])).powi(2),
    )
    .with_integer_dims(&[0, 1, 2, 3])
    .expect("gear dims are in range")
    .with_known_best(EngineeringId::GearTrain.known_best())
    .with_note("objective squared; printed form is unbounded below")
    .with_note("bounds 12..60 integers, not stated in the printed problem")
}

/// Heights of the five hollow square segments.
pub fn cantilever_beam() -> Problem {
    Problem::new(
        EngineeringId::CantileverBeam.id(),
        space(&[0.01; 5], &[100.0; 5]),
        |x| 0.0624 * x.iter().sum::<f64>(),
    )
    .with_constraint(|x| {
        61.0 / x[0].powi(3) + 37.0 / x[1].powi(3) + 19.0 / x[2].powi(3) + 7.0 / x[3].powi(3)
            + 1.0 / x[4].powi(3)
            - 1.0
    })
    .with_known_best(EngineeringId::CantileverBeam.known_best())
}

mod welded {
    pub const LOAD: f64 = 6000.0;
    pub const LENGTH: f64 = 14.0;
    pub const YOUNG: f64 = 30e6;
    pub const SHEAR_MODULUS: f64 = 12e6;
    pub const TAU_MAX: f64 = 13600.0;
    pub const SIGMA_MAX: f64 = 30000.0;
    pub const DELTA_MAX: f64 = 0.25;
}

/// Weld shear stress.
fn weld_shear(x: &[f64]) -> f64 {
    use welded::*;
    let (h, l, t) = (x[0], x[1], x[2]);
    let primary = LOAD / (SQRT_2 * h * l);
    let moment = LOAD * (LENGTH + l / 2.0);
    let radius = (l * l / 4.0 + ((h + t) / 2.0).powi(2)).sqrt();
    let polar = 2.0 * (SQRT_2 * h * l * (l * l / 12.0 + ((h + t) / 2.0).powi(2)));
    let secondary = moment * radius / polar;
    (primary * primary + 2.0 * primary * secondary * l / (2.0 * radius) + secondary * secondary).sqrt()
}

fn bar_bending_stress(x: &[f64]) -> f64 {
    6.0 * welded::LOAD * welded::LENGTH / (x[3] * x[2] * x[2])
}

fn bar_deflection(x: &[f64]) -> f64 {
    use welded::*;
    4.0 * LOAD * LENGTH.powi(3) / (YOUNG * x[2].powi(3) * x[3])
}

fn buckling_load(x: &[f64]) -> f64 {
    use welded::*;
    let (t, b) = (x[2], x[3]);
    4.013 * YOUNG * (t * t * b.powi(6) / 36.0).sqrt() / (LENGTH * LENGTH)
        * (1.0 - t / (2.0 * LENGTH) * (YOUNG / (4.0 * SHEAR_MODULUS)).sqrt())
}

/// Weld thickness, weld length, bar height, bar thickness.
pub fn welded_beam() -> Problem {
    use welded::*;
    Problem::new(
        EngineeringId::WeldedBeam.id(),
        space(&[0.1, 0.1, 0.1, 0.1], &[2.0, 10.0, 10.0, 2.0]),
        |x| 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]),
    )
    .with_constraint(|x| weld_shear(x) / TAU_MAX - 1.0)
    .with_constraint(|x| bar_bending_stress(x) / SIGMA_MAX - 1.0)
    .with_constraint(|x| bar_deflection(x) / DELTA_MAX - 1.0)
    .with_constraint(|x| x[0] - x[3])
    .with_constraint(|x| 1.0 - buckling_load(x) / LOAD)
    .with_constraint(|x| 0.125 - x[0])
    .with_constraint(|x| 1.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0)
    .with_known_best(EngineeringId::WeldedBeam.known_best())
    .with_note("tau, sigma, delta and P_c from the standard formulation (P=6000, L=14, E=30e6, G=12e6)")
    .with_note("S1, S2, S3 and S5 divided by tau_max, sigma_max, delta_max and P")
    .with_note("S7 printed with a stray factor P; uses 1.10471*Wt^2 + 0.04811*Bh*Bt*(14+Wl) - 5")
    .with_note("bounds 0.1<=Wt,Bt<=2 and 0.1<=Wl,Bh<=10; printed bounds belong to the spring problem")
}

pub fn make_engineering_suite() -> Vec<Problem> {
    EngineeringId::ALL.into_iter().map(EngineeringId::problem).collect()
}
