//! The 23 classical benchmark functions.
//!
//! F1-F7 are unimodal, F8-F13 multimodal with scalable dimension and
//! F14-F23 multimodal with fixed dimension. Dimensions, ranges and minima
//! follow the usual tables for this suite verbatim, including the less common
//! ranges for F3, F9 and F19.

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{check_len, Error, Result};
use crate::problem::{Problem, SearchSpace};
use crate::rng::RngStream;

/// Identifier of a classical function, `F1` through `F23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalId(u8);

/// Broad family of a classical function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modality {
    Unimodal,
    Multimodal,
    FixedDimension,
}

/// Dimension, range and known minimum of one classical function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkSpec {
    pub id: ClassicalId,
    pub dim: usize,
    pub lower: f64,
    pub upper: f64,
    pub f_min: f64,
    pub modality: Modality,
}

impl ClassicalId {
    pub fn new(n: u8) -> Result<Self> {
        if (1..=23).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::UnknownProblem(format!("F{n}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ClassicalId> {
        (1..=23).map(ClassicalId)
    }

    pub fn spec(self) -> BenchmarkSpec {
        use Modality::*;
        let (dim, lower, upper, f_min, modality) = match self.0 {
            1 => (10, -100.0, 100.0, 0.0, Unimodal),
            2 => (10, -10.0, 10.0, 0.0, Unimodal),
            3 => (10, -30.0, 30.0, 0.0, Unimodal),
            4 => (10, -100.0, 100.0, 0.0, Unimodal),
            5 => (10, -30.0, 30.0, 0.0, Unimodal),
            6 => (10, -100.0, 100.0, 0.0, Unimodal),
            7 => (10, -1.28, 1.28, 0.0, Unimodal),
            8 => (10, -500.0, 500.0, -418.9829 * 10.0, Multimodal),
            9 => (10, -10.0, 10.0, 0.0, Multimodal),
            10 => (10, -32.0, 32.0, 0.0, Multimodal),
            11 => (10, -600.0, 600.0, 0.0, Multimodal),
            12 => (10, -50.0, 50.0, 0.0, Multimodal),
            13 => (30, -50.0, 50.0, 0.0, Multimodal),
            14 => (2, -65.0, 65.0, 1.0, Multimodal),
            15 => (4, -5.0, 5.0, 0.0003, Multimodal),
            16 => (2, -5.0, 5.0, -1.0316, Multimodal),
            17 => (2, -5.0, 5.0, 0.398, FixedDimension),
            18 => (2, -2.0, 2.0, 3.0, FixedDimension),
            19 => (3, 1.0, 3.0, -3.86, FixedDimension),
            20 => (6, 0.0, 1.0, -3.32, FixedDimension),
            21 => (4, 0.0, 10.0, -10.1532, FixedDimension),
            22 => (4, 0.0, 10.0, -10.4028, FixedDimension),
            23 => (4, 0.0, 10.0, -10.536, FixedDimension),
            _ => unreachable!("ClassicalId is validated on construction"),
        };
        BenchmarkSpec { id: self, dim, lower, upper, f_min, modality }
    }
}

impl fmt::Display for ClassicalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl FromStr for ClassicalId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))?;
        let n: u8 = digits.parse().map_err(|_| Error::UnknownProblem(s.to_string()))?;
        if digits.starts_with('0') {
            return Err(Error::UnknownProblem(s.to_string()));
        }
        Self::new(n).map_err(|_| Error::UnknownProblem(s.to_string()))
    }
}

// Shekel's foxholes centres (De Jong F5): a 5x5 grid over {-32,-16,0,16,32}^2.
const FOXHOLES: [[f64; 25]; 2] = [
    [
        -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0,
        -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0,
    ],
    [
        -32.0, -32.0, -32.0, -32.0, -32.0, -16.0, -16.0, -16.0, -16.0, -16.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        16.0, 16.0, 16.0, 16.0, 16.0, 32.0, 32.0, 32.0, 32.0, 32.0,
    ],
];

// Kowalik enzyme data; `b` is stored as the reciprocal of the measured times.
const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B: [f64; 11] = [
    1.0 / 0.25,
    1.0 / 0.5,
    1.0,
    1.0 / 2.0,
    1.0 / 4.0,
    1.0 / 6.0,
    1.0 / 8.0,
    1.0 / 10.0,
    1.0 / 12.0,
    1.0 / 14.0,
    1.0 / 16.0,
];

// Hartmann constants (Dixon & Szego).
const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.038150, 0.5743, 0.8828],
];
const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

// Shekel constants (Dixon & Szego); m = 5, 7, 10 use the leading rows.
const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Penalty term `u(x, a, k, m)` of F12 and F13.
fn boundary_penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

fn sum_squares(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn hartmann<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-inner).exp()
        })
        .sum::<f64>()
}

fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let d: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}

fn raw(id: ClassicalId, x: &[f64]) -> f64 {
    let n = x.len() as f64;
    match id.0 {
        1 => sum_squares(x),
        2 => {
            let abs = x.iter().map(|v| v.abs());
            abs.clone().sum::<f64>() + abs.product::<f64>()
        }
        3 => x
            .iter()
            .scan(0.0, |acc, v| {
                *acc += v;
                Some(*acc * *acc)
            })
            .sum(),
        4 => x.iter().fold(0.0, |m: f64, v| m.max(v.abs())),
        5 => x
            .windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
            .sum(),
        6 => x.iter().map(|v| (v + 0.5).floor().powi(2)).sum(),
        7 => x
            .iter()
            .enumerate()
            .map(|(i, v)| (i + 1) as f64 * v.powi(4))
            .sum(),
        8 => x.iter().map(|v| -v * v.abs().sqrt().sin()).sum(),
        9 => x
            .iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
            .sum(),
        10 => {
            let sq = sum_squares(x) / n;
            let cos = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
            -20.0 * (-0.2 * sq.sqrt()).exp() - cos.exp() + 20.0 + E
        }
        11 => {
            let prod: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                .product();
            sum_squares(x) / 4000.0 - prod + 1.0
        }
        12 => {
            let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
            let last = y[y.len() - 1];
            let body: f64 = y
                .windows(2)
                .map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * (PI * w[1]).sin().powi(2)))
                .sum();
            let penalty: f64 = x.iter().map(|&v| boundary_penalty(v, 10.0, 100.0, 4)).sum();
            PI / n * (10.0 * (PI * y[0]).sin().powi(2) + body + (last - 1.0).powi(2)) + penalty
        }
        13 => {
            let last = x[x.len() - 1];
            let body: f64 = x
                .windows(2)
                .map(|w| (w[0] - 1.0).powi(2) * (1.0 + (3.0 * PI * w[1]).sin().powi(2)))
                .sum();
            let penalty: f64 = x.iter().map(|&v| boundary_penalty(v, 5.0, 100.0, 4)).sum();
            0.1 * ((3.0 * PI * x[0]).sin().powi(2)
                + body
                + (last - 1.0).powi(2) * (1.0 + (2.0 * PI * last).sin().powi(2)))
                + penalty
        }
        14 => {
            let s: f64 = (0..25)
                .map(|j| {
                    let d: f64 = (0..2).map(|i| (x[i] - FOXHOLES[i][j]).powi(6)).sum();
                    1.0 / ((j + 1) as f64 + d)
                })
                .sum();
            1.0 / (1.0 / 500.0 + s)
        }
        15 => KOWALIK_A
            .iter()
            .zip(KOWALIK_B)
            .map(|(a, b)| {
                let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
                (a - model).powi(2)
            })
            .sum(),
        16 => {
            let (x1, x2) = (x[0], x[1]);
            4.0 * x1 * x1 - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2 * x2
                + 4.0 * x2.powi(4)
        }
        17 => {
            let (x1, x2) = (x[0], x[1]);
            (x2 - 5.1 / (4.0 * PI * PI) * x1 * x1 + 5.0 / PI * x1 - 6.0).powi(2)
                + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos()
                + 10.0
        }
        18 => {
            let (x1, x2) = (x[0], x[1]);
            let a = 1.0
                + (x1 + x2 + 1.0).powi(2)
                    * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
            let b = 30.0
                + (2.0 * x1 - 3.0 * x2).powi(2)
                    * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
            a * b
        }
        19 => hartmann(x, &HARTMANN3_A, &HARTMANN3_P),
        20 => hartmann(x, &HARTMANN6_A, &HARTMANN6_P),
        21 => shekel(x, 5),
        22 => shekel(x, 7),
        23 => shekel(x, 10),
        _ => unreachable!("ClassicalId is validated on construction"),
    }
}

/// Deterministic part of the function; for F7 this excludes the `[0, 1)` noise.
pub fn evaluate_deterministic(id: ClassicalId, x: &[f64]) -> Result<f64> {
    check_len(id.spec().dim, x.len())?;
    Ok(raw(id, x))
}

/// Full function value. Only F7 draws from `noise`.
pub fn evaluate_classical(id: ClassicalId, x: &[f64], noise: &mut RngStream) -> Result<f64> {
    let value = evaluate_deterministic(id, x)?;
    Ok(if id.0 == 7 { value + noise.unit() } else { value })
}

pub fn classical_problem(id: ClassicalId) -> Problem {
    let spec = id.spec();
    let space = SearchSpace::uniform(spec.dim, spec.lower, spec.upper)
        .expect("classical ranges are non-empty");
    let problem = Problem::new(id.to_string(), space, move |x| raw(id, x)).with_known_best(spec.f_min);
    match id.0 {
        7 => problem.with_additive_noise(),
        12 => problem.with_note("F12: leading term read as 10*sin^2(pi*y1), as in the standard penalized function"),
        13 => problem.with_note("F13: inner sum read as sum_{i<n} (x_i-1)^2 [1 + sin^2(3*pi*x_{i+1})]"),
        _ => problem,
    }
}

/// All 23 classical problems in order F1..F23.
pub fn make_classical_suite() -> Vec<Problem> {
    ClassicalId::all().map(classical_problem).collect()
}
