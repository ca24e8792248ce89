//! Independent numeric jobs fanned out over a thread pool.

use rayon::prelude::*;

use crate::error::Result;
use crate::fields::{GaugeFunction, Superpotential};
use crate::model::{AngularMomentum, FieldCase, RadialGrid};
use crate::susy;

use super::tridiagonal::{discretize, lowest_eigenvalues};
use super::verify::{grid_for, oracle_domain};

#[derive(Debug, Clone)]
pub struct SweepJob {
    pub case: FieldCase,
    pub lambda: AngularMomentum,
}

/// Lowest `k` eigenvalues of H₁ for every job, in job order.
pub fn sweep_numeric_levels(
    jobs: &[SweepJob],
    grid: &RadialGrid,
    k: usize,
) -> Vec<Result<Vec<f64>>> {
    jobs.par_iter()
        .map(|job| {
            let gauge = GaugeFunction::new(job.case.clone())?;
            let potentials = susy::partner_potentials(&Superpotential::new(gauge, job.lambda));
            let domain = oracle_domain(&job.case, job.lambda);
            let grid = grid_for(grid, domain)?;
            let t = discretize(|u| potentials.v1(u), &grid, domain)?;
            lowest_eigenvalues(&t, k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_serial_runs() {
        let grid = RadialGrid::new(1e-3, 20.0, 2000).unwrap();
        let jobs: Vec<SweepJob> = [11, 13, 15]
            .iter()
            .map(|&t| SweepJob {
                case: FieldCase::ConstantField { a0: 3.0 },
                lambda: AngularMomentum::half_odd(t).unwrap(),
            })
            .collect();
        let out = sweep_numeric_levels(&jobs, &grid, 2);
        for (job, res) in jobs.iter().zip(out) {
            let single = sweep_numeric_levels(std::slice::from_ref(job), &grid, 2);
            assert_eq!(res.unwrap(), *single[0].as_ref().unwrap());
        }
    }
}
