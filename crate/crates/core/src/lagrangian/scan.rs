// SPDX-License-Identifier: Apache-2.0

//! Sweep of charge assignments against mass-term gauge invariance.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    random_point, CouplingConfig, FieldConfiguration, LagrangianError, Model, ParamField, Sector,
};

/// Mass-term variations below this count as invariant.
pub const INVARIANCE_TOL: f64 = 1e-10;

/// Values to combine; every combination is scanned against every sector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanGrid {
    pub t_l: Vec<f64>,
    pub t_r: Vec<f64>,
    pub y_l: Vec<f64>,
    pub y_r: Vec<f64>,
    pub m: Vec<Complex64>,
}

impl Default for ScanGrid {
    fn default() -> Self {
        ScanGrid {
            t_l: vec![0.5, -0.5],
            t_r: vec![-0.5, 0.0, 0.5],
            y_l: vec![-1.0, 1.0 / 3.0],
            y_r: vec![-1.0, -2.0, 1.0 / 3.0],
            m: vec![Complex64::new(0.3, 0.2)],
        }
    }
}

/// One scanned combination.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub sector: Sector,
    pub t_l: f64,
    pub t_r: f64,
    pub y_l: f64,
    pub y_r: f64,
    pub m_re: f64,
    pub m_im: f64,
    /// Largest `|δℒ_mass|` over the sample points.
    pub max_mass_variation: f64,
    pub invariant: bool,
}

/// Local gauge variation of the mass term for every grid combination.
///
/// All combinations share one field configuration, one set of local
/// parameter fields and `points` sample points derived from `seed`.
pub fn charge_constraint_scan(
    grid: &ScanGrid,
    seed: u64,
    points: usize,
) -> Result<Vec<ScanRow>, LagrangianError> {
    let fc = FieldConfiguration::random(seed);
    let params = ParamField::random(seed, true);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<_> = (0..points).map(|_| random_point(&mut rng)).collect();

    let mut rows = Vec::new();
    for &t_l in &grid.t_l {
        for &t_r in &grid.t_r {
            for &y_l in &grid.y_l {
                for &y_r in &grid.y_r {
                    for &m in &grid.m {
                        let model = Model::new(CouplingConfig {
                            t_l,
                            t_r,
                            y_l,
                            y_r,
                            m,
                            ..CouplingConfig::default()
                        })?;
                        for sector in Sector::ALL {
                            let mut worst = 0.0f64;
                            for x in &xs {
                                worst = worst.max(
                                    model.gauge_variation(sector, &fc, &params, x)?.mass.norm(),
                                );
                            }
                            rows.push(ScanRow {
                                sector,
                                t_l,
                                t_r,
                                y_l,
                                y_r,
                                m_re: m.re,
                                m_im: m.im,
                                max_mass_variation: worst,
                                invariant: worst <= INVARIANCE_TOL,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariance_follows_the_charge_constraints() {
        let rows = charge_constraint_scan(&ScanGrid::default(), 4, 5).unwrap();
        assert_eq!(rows.len(), 2 * 3 * 2 * 3 * 3);
        for r in &rows {
            let expect = match r.sector {
                Sector::Lorentz => true,
                Sector::Su2 => r.t_r == -r.t_l,
                Sector::U1 => r.y_l == r.y_r,
            };
            assert_eq!(r.invariant, expect, "{r:?}");
        }
    }

    #[test]
    fn massless_theory_is_always_invariant() {
        let grid = ScanGrid {
            m: vec![Complex64::new(0.0, 0.0)],
            ..ScanGrid::default()
        };
        let rows = charge_constraint_scan(&grid, 1, 3).unwrap();
        assert!(rows.iter().all(|r| r.invariant));
    }
}
