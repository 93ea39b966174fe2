//! Built-in parameter grids.

use crate::baselines::ResampleSpec;
use crate::error::{Error, Result};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Grids of the main comparison.
    PaperFinal,
    /// The wider RBU grid of the preliminary study; other methods use the
    /// main-comparison grids.
    PaperPrelim,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-final" => Ok(Preset::PaperFinal),
            "paper-prelim" => Ok(Preset::PaperPrelim),
            other => Err(Error::param(format!(
                "unknown preset '{other}' (expected paper-final or paper-prelim)"
            ))),
        }
    }
}

pub const METHODS: [&str; 11] = ["none", "rus", "ros", "smote", "enn", "renn", "tomek", "nm", "rbu", "stl", "senn"];

const RATIOS: [f64; 3] = [0.5, 0.75, 1.0];
const SMOTE_K: [usize; 5] = [1, 3, 5, 7, 9];
const CLEAN_K: [usize; 4] = [1, 3, 5, 7];
const GAMMAS: [f64; 4] = [0.01, 0.1, 1.0, 10.0];
const PRELIM_GAMMAS: [f64; 6] = [0.001, 0.01, 0.1, 1.0, 10.0, 100.0];
const PRELIM_RATIOS: [f64; 6] = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0];

fn product<A: Copy, B: Copy>(a: &[A], b: &[B], f: impl Fn(A, B) -> ResampleSpec) -> Vec<ResampleSpec> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| f(x, y)).collect()
}

/// The grid a preset assigns to `method` (one of [`METHODS`]).
pub fn preset_grid(preset: Preset, method: &str) -> Result<Vec<ResampleSpec>> {
    Ok(match method {
        "none" => vec![ResampleSpec::None],
        "tomek" => vec![ResampleSpec::Tomek],
        "rus" => RATIOS.iter().map(|&ratio| ResampleSpec::Rus { ratio }).collect(),
        "ros" => RATIOS.iter().map(|&ratio| ResampleSpec::Ros { ratio }).collect(),
        "smote" => product(&SMOTE_K, &RATIOS, |k, ratio| ResampleSpec::Smote { k, ratio }),
        "stl" => product(&SMOTE_K, &RATIOS, ResampleSpec::stl),
        "senn" => product(&SMOTE_K, &RATIOS, ResampleSpec::senn),
        "enn" => CLEAN_K.iter().map(|&k| ResampleSpec::Enn { k }).collect(),
        "renn" => CLEAN_K.iter().map(|&k| ResampleSpec::Renn { k }).collect(),
        "nm" => CLEAN_K.iter().map(|&k| ResampleSpec::NearMiss { k, ratio: 1.0 }).collect(),
        "rbu" => match preset {
            Preset::PaperFinal => product(&GAMMAS, &RATIOS, |gamma, ratio| ResampleSpec::Rbu { gamma, ratio }),
            Preset::PaperPrelim => product(&PRELIM_GAMMAS, &PRELIM_RATIOS, |gamma, ratio| ResampleSpec::Rbu {
                gamma,
                ratio,
            }),
        },
        other => {
            return Err(Error::param(format!(
                "unknown method '{other}' (expected one of {})",
                METHODS.join(", ")
            )))
        }
    })
}
