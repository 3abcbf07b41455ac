//! Random search for pairs violating `|X∘Y|² ≥ |X|² |Y|²`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use weyl_core::forms::norm2;
use weyl_core::json::ToJson;
use weyl_core::sample::{random_nonzero_element, SampleParams};
use weyl_core::{QSqrt2, WeylElement};

#[derive(Clone, Debug)]
pub struct Counterexample {
    /// 0-based trial index within the seeded stream.
    pub trial: u64,
    pub x: WeylElement,
    pub y: WeylElement,
    pub lhs: QSqrt2,
    pub rhs: QSqrt2,
}

impl Counterexample {
    pub fn to_json(&self) -> Value {
        json!({
            "trial": self.trial,
            "x": self.x.to_string(),
            "y": self.y.to_string(),
            "x_json": self.x.to_json(),
            "y_json": self.y.to_json(),
            "norm2_xy": self.lhs.to_json(),
            "norm2_x_times_norm2_y": self.rhs.to_json(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub trials: u64,
    pub seed: u64,
    pub params: SampleParams,
    pub counterexamples: Vec<Counterexample>,
    /// Smallest ratio `|X∘Y|² / (|X|²|Y|²)` seen, as a float for display.
    pub min_ratio: Option<f64>,
}

/// Compares `|X∘Y|²` with `|X|²|Y|²` exactly.
pub fn test_pair(x: &WeylElement, y: &WeylElement) -> (QSqrt2, QSqrt2) {
    let lhs = norm2(&x.compose(y).expect("same arity"));
    let rhs = &norm2(x) * &norm2(y);
    (lhs, rhs)
}

pub fn search(trials: u64, seed: u64, params: SampleParams) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = Vec::new();
    let mut min_ratio: Option<f64> = None;
    for trial in 0..trials {
        let x = random_nonzero_element(&mut rng, &params);
        let y = random_nonzero_element(&mut rng, &params);
        let (lhs, rhs) = test_pair(&x, &y);
        let ratio = lhs.to_f64() / rhs.to_f64();
        min_ratio = Some(min_ratio.map_or(ratio, |m| m.min(ratio)));
        if (&lhs - &rhs).sign() < 0 {
            counterexamples.push(Counterexample { trial, x, y, lhs, rhs });
        }
    }
    Outcome { trials, seed, params, counterexamples, min_ratio }
}
