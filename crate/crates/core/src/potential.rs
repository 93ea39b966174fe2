//! Gaussian mutual class potential.
//!
//! Every majority point contributes `exp(-(d/γ)²)` to the potential at a
//! location and every minority point subtracts the same quantity, so high
//! values mark regions dominated by the majority class.

use crate::dataio::BinaryTask;
use crate::distance::euclidean;
use crate::error::{Error, Result};
use crate::rng::{rng_from_seed, Rng};
use ndarray::{Array2, ArrayView2};
use rand::Rng as _;
use serde::{Deserialize, Serialize};

/// Spread of a single radial basis function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RbfParams {
    gamma: f64,
}

impl RbfParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if gamma > 0.0 && gamma.is_finite() {
            Ok(RbfParams { gamma })
        } else {
            Err(Error::param(format!("gamma must be positive and finite, got {gamma}")))
        }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    #[inline]
    fn kernel(&self, distance: f64) -> f64 {
        let r = distance / self.gamma;
        (-r * r).exp()
    }
}

/// `exp(-(distance/gamma)²)`.
pub fn rbf_value(distance: f64, gamma: f64) -> Result<f64> {
    if !(distance >= 0.0) {
        return Err(Error::param(format!("distance must be non-negative, got {distance}")));
    }
    Ok(RbfParams::new(gamma)?.kernel(distance))
}

fn check_dims(x: &[f64], points: ArrayView2<'_, f64>) -> Result<()> {
    if points.nrows() > 0 && points.ncols() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: points.ncols(),
            found: x.len(),
        });
    }
    Ok(())
}

fn rbf_sum(x: &[f64], points: ArrayView2<'_, f64>, rbf: RbfParams) -> f64 {
    points
        .rows()
        .into_iter()
        .map(|p| rbf.kernel(euclidean(p.to_slice().expect("standard layout"), x)))
        .sum()
}

/// Potential at `x` induced by explicit majority and minority point sets.
pub fn mutual_potential_sets(
    x: &[f64],
    majority: ArrayView2<'_, f64>,
    minority: ArrayView2<'_, f64>,
    gamma: f64,
) -> Result<f64> {
    let rbf = RbfParams::new(gamma)?;
    check_dims(x, majority)?;
    check_dims(x, minority)?;
    Ok(rbf_sum(x, majority, rbf) - rbf_sum(x, minority, rbf))
}

/// Potential at `x` induced by the task's majority and minority sets.
pub fn mutual_potential(x: &[f64], task: &BinaryTask, gamma: f64) -> Result<f64> {
    mutual_potential_sets(x, task.majority(), task.minority(), gamma)
}

/// Relative width of the band below the maximum potential that counts as a tie.
pub const TIE_TOLERANCE: f64 = 1e-10;

/// Absolute tie band around a maximum potential `best`.
pub fn tie_tolerance(best: f64) -> f64 {
    TIE_TOLERANCE * best.abs().max(1.0)
}

/// How [`PotentialField::pop_max`] chooses among equal maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule", content = "seed")]
pub enum TieRule {
    #[default]
    LowestIndex,
    SeededRandom(u64),
}

/// Stateful tie breaker built from a [`TieRule`].
#[derive(Debug, Clone)]
pub enum TieBreaker {
    LowestIndex,
    Random(Rng),
}

impl From<TieRule> for TieBreaker {
    fn from(rule: TieRule) -> Self {
        match rule {
            TieRule::LowestIndex => TieBreaker::LowestIndex,
            TieRule::SeededRandom(seed) => TieBreaker::Random(rng_from_seed(seed)),
        }
    }
}

/// Potentials of the majority points, updated incrementally as points are
/// removed.
///
/// After `k` removals `phi[i]` equals the potential at `points[i]` with the
/// removed points taken out of the majority set (the point itself always
/// contributes its own `exp(0) = 1`).
#[derive(Debug, Clone)]
pub struct PotentialField {
    points: Array2<f64>,
    /// Original indices of the remaining points, in increasing order.
    remaining: Vec<usize>,
    phi: Vec<f64>,
    rbf: RbfParams,
    removed_count: usize,
}

impl PotentialField {
    /// Evaluates the potential at every majority point against the full
    /// majority (self included) and minority sets.
    pub fn init(task: &BinaryTask, gamma: f64) -> Result<Self> {
        let rbf = RbfParams::new(gamma)?;
        let majority = task.majority();
        let minority = task.minority();
        let phi = majority
            .rows()
            .into_iter()
            .map(|p| {
                let x = p.to_slice().expect("standard layout");
                rbf_sum(x, majority, rbf) - rbf_sum(x, minority, rbf)
            })
            .collect();
        Ok(PotentialField {
            points: majority.to_owned(),
            remaining: (0..task.n_majority()).collect(),
            phi,
            rbf,
            removed_count: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.remaining.len()
    }

    pub fn is_empty(&self) -> bool {
        self.remaining.is_empty()
    }

    pub fn gamma(&self) -> f64 {
        self.rbf.gamma
    }

    pub fn removed_count(&self) -> usize {
        self.removed_count
    }

    /// Current potentials, aligned with [`PotentialField::remaining`].
    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    /// Original indices of the points still in the field.
    pub fn remaining(&self) -> &[usize] {
        &self.remaining
    }

    pub fn point(&self, original_index: usize) -> &[f64] {
        self.points
            .row(original_index)
            .to_slice()
            .expect("standard layout")
    }

    /// Removes the point with the largest potential and returns its original
    /// index together with the potential it had.
    ///
    /// Values within `TIE_TOLERANCE · max(1, |Φ_max|)` of the maximum count as
    /// tied, so rounding residue from the incremental updates cannot reorder
    /// points whose exact potentials are equal.
    pub fn pop_max(&mut self, ties: &mut TieBreaker) -> Result<(usize, f64)> {
        let best = self
            .phi
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let floor = best - tie_tolerance(best);
        let pos = match ties {
            TieBreaker::LowestIndex => self.phi.iter().position(|&v| v >= floor),
            TieBreaker::Random(rng) => {
                let tied: Vec<usize> = (0..self.phi.len()).filter(|&i| self.phi[i] >= floor).collect();
                (!tied.is_empty()).then(|| tied[rng.gen_range(0..tied.len())])
            }
        }
        .ok_or_else(|| Error::data("cannot pop from an empty potential field"))?;
        let index = self.remaining.remove(pos);
        let value = self.phi.remove(pos);
        self.removed_count += 1;
        Ok((index, value))
    }

    /// Subtracts the contribution of a removed point located at `removed`
    /// from every remaining potential.
    pub fn subtract_contribution(&mut self, removed: &[f64]) -> Result<()> {
        if removed.len() != self.points.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.points.ncols(),
                found: removed.len(),
            });
        }
        for (phi, &i) in self.phi.iter_mut().zip(&self.remaining) {
            let p = self.points.row(i);
            *phi -= self.rbf.kernel(euclidean(p.to_slice().expect("standard layout"), removed));
        }
        Ok(())
    }
}

/// Axis-aligned bounds of a 2-D grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridBounds {
    pub x: [f64; 2],
    pub y: [f64; 2],
}

impl GridBounds {
    /// Bounding box of the task's points widened by `margin` of each range.
    pub fn around(task: &BinaryTask, margin: f64) -> Result<Self> {
        if task.n_features() != 2 {
            return Err(Error::param(format!(
                "potential grids need 2-D data, got {} features",
                task.n_features()
            )));
        }
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for i in 0..task.n_samples() {
            for (a, v) in task.point(i).iter().enumerate() {
                lo[a] = lo[a].min(*v);
                hi[a] = hi[a].max(*v);
            }
        }
        let pad = |a: usize| {
            let r = hi[a] - lo[a];
            let r = if r > 0.0 { r } else { 1.0 };
            [lo[a] - margin * r, hi[a] + margin * r]
        };
        Ok(GridBounds { x: pad(0), y: pad(1) })
    }
}

/// Potential sampled at the centres of a `resolution × resolution` grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialGrid {
    pub bounds: GridBounds,
    pub resolution: usize,
    pub gamma: f64,
    /// Row-major: `values[row * resolution + col]`, rows along y, columns along x.
    pub values: Vec<f64>,
}

impl PotentialGrid {
    /// Centre of cell `(row, col)`.
    pub fn cell_center(&self, row: usize, col: usize) -> [f64; 2] {
        cell_center(&self.bounds, self.resolution, row, col)
    }

    /// `x,y,phi` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,phi\n");
        for row in 0..self.resolution {
            for col in 0..self.resolution {
                let [x, y] = self.cell_center(row, col);
                let v = self.values[row * self.resolution + col];
                out.push_str(&format!(
                    "{},{},{}\n",
                    crate::dataio::format_g17(x),
                    crate::dataio::format_g17(y),
                    crate::dataio::format_g17(v)
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn cell_center(bounds: &GridBounds, resolution: usize, row: usize, col: usize) -> [f64; 2] {
    let step_x = (bounds.x[1] - bounds.x[0]) / resolution as f64;
    let step_y = (bounds.y[1] - bounds.y[0]) / resolution as f64;
    [
        bounds.x[0] + (col as f64 + 0.5) * step_x,
        bounds.y[0] + (row as f64 + 0.5) * step_y,
    ]
}

/// Samples the mutual potential over a 2-D grid for plotting.
pub fn potential_grid(
    task: &BinaryTask,
    gamma: f64,
    bounds: GridBounds,
    resolution: usize,
) -> Result<PotentialGrid> {
    if task.n_features() != 2 {
        return Err(Error::param(format!(
            "potential grids need 2-D data, got {} features",
            task.n_features()
        )));
    }
    if resolution < 2 {
        return Err(Error::param(format!("resolution must be at least 2, got {resolution}")));
    }
    if !(bounds.x[0] < bounds.x[1] && bounds.y[0] < bounds.y[1]) {
        return Err(Error::param("grid bounds must satisfy lo < hi on both axes"));
    }
    let rbf = RbfParams::new(gamma)?;
    let values = (0..resolution * resolution)
        .map(|cell| {
            let c = cell_center(&bounds, resolution, cell / resolution, cell % resolution);
            rbf_sum(&c, task.majority(), rbf) - rbf_sum(&c, task.minority(), rbf)
        })
        .collect();
    Ok(PotentialGrid {
        bounds,
        resolution,
        gamma,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use proptest::prelude::*;

    /// Direct scalar evaluation of the potential, written independently of
    /// the library routines.
    fn oracle(x: &[f64], majority: &[Vec<f64>], minority: &[Vec<f64>], gamma: f64) -> f64 {
        let term = |p: &Vec<f64>| {
            let d2: f64 = p.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum();
            (-(d2.sqrt() / gamma).powi(2)).exp()
        };
        majority.iter().map(term).sum::<f64>() - minority.iter().map(term).sum::<f64>()
    }

    fn rows(m: ArrayView2<'_, f64>) -> Vec<Vec<f64>> {
        m.rows().into_iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn rbf_known_values() {
        assert_eq!(rbf_value(0.0, 0.3).unwrap(), 1.0);
        assert_abs_diff_eq!(rbf_value(1.0, 1.0).unwrap(), 0.367_879_441_171_442_3, epsilon = 1e-15);
        assert_abs_diff_eq!(rbf_value(2.0, 1.0).unwrap(), 0.018_315_638_888_734_18, epsilon = 1e-15);
        assert!(rbf_value(1.0, 0.0).is_err());
        assert!(rbf_value(1.0, -1.0).is_err());
        assert!(rbf_value(-1.0, 1.0).is_err());
    }

    #[test]
    fn single_majority_point() {
        let k = array![[0.3, 0.7]];
        let empty = Array2::<f64>::zeros((0, 2));
        assert_eq!(mutual_potential_sets(&[0.3, 0.7], k.view(), empty.view(), 1.0).unwrap(), 1.0);
    }

    #[test]
    fn coincident_points_cancel() {
        let p = array![[1.0, 2.0]];
        let t = BinaryTask::new(p.clone(), p).unwrap();
        for x in [[1.0, 2.0], [0.0, 0.0], [5.0, -3.0]] {
            assert_eq!(mutual_potential(&x, &t, 0.7).unwrap(), 0.0);
        }
    }

    #[test]
    fn equidistant_terms_cancel() {
        let t = BinaryTask::new(array![[0.0, 0.0], [1.0, 0.0]], array![[0.0, 1.0]]).unwrap();
        assert_abs_diff_eq!(mutual_potential(&[0.0, 0.0], &t, 1.0).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn off_grid_point_matches_high_precision_value() {
        // 30-digit evaluation: 1.14721049668030978107986222875
        let t = BinaryTask::new(array![[0.0, 0.0], [1.0, 0.0]], array![[0.0, 1.0]]).unwrap();
        assert_abs_diff_eq!(
            mutual_potential(&[0.5, 0.0], &t, 2.0).unwrap(),
            1.147_210_496_680_309_8,
            epsilon = 1e-12
        );
    }

    #[test]
    fn dimension_mismatch() {
        let t = BinaryTask::new(array![[0.0, 0.0]], array![[0.0, 1.0]]).unwrap();
        assert!(matches!(
            mutual_potential(&[0.0], &t, 1.0),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut f = PotentialField::init(&t, 1.0).unwrap();
        assert!(f.subtract_contribution(&[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn field_of_single_point() {
        // The minority point is placed far enough away to vanish in f64.
        let t = BinaryTask::new(array![[0.0]], array![[100.0]]).unwrap();
        let f = PotentialField::init(&t, 1.0).unwrap();
        assert_eq!(f.phi(), &[1.0]);
    }

    #[test]
    fn field_matches_brute_force_values() {
        // 30-digit evaluations of the three majority potentials.
        let t = BinaryTask::new(array![[0.0, 0.0], [0.1, 0.0], [2.0, 0.0]], array![[2.1, 0.0]]).unwrap();
        let f = PotentialField::init(&t, 1.0).unwrap();
        let expected = [
            1.996_210_294_307_987_3,
            1.998_786_041_726_784_3,
            0.055_317_652_005_916_556,
        ];
        for (a, b) in f.phi().iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-12);
        }
    }

    fn field_with(phi: Vec<f64>) -> PotentialField {
        let n = phi.len();
        PotentialField {
            points: Array2::zeros((n, 1)),
            remaining: (0..n).collect(),
            phi,
            rbf: RbfParams::new(1.0).unwrap(),
            removed_count: 0,
        }
    }

    #[test]
    fn pop_max_picks_largest() {
        let mut f = field_with(vec![0.2, 0.9, 0.5]);
        let (i, v) = f.pop_max(&mut TieBreaker::LowestIndex).unwrap();
        assert_eq!((i, v), (1, 0.9));
        assert_eq!(f.remaining(), &[0, 2]);
        assert_eq!(f.removed_count(), 1);
    }

    #[test]
    fn pop_max_ties_lowest_index() {
        let mut f = field_with(vec![0.7, 0.7]);
        assert_eq!(f.pop_max(&mut TieBreaker::LowestIndex).unwrap().0, 0);
    }

    #[test]
    fn pop_max_treats_rounding_residue_as_tie() {
        let mut f = field_with(vec![1.0, 1.0 + 4.0 * f64::EPSILON]);
        assert_eq!(f.pop_max(&mut TieBreaker::LowestIndex).unwrap().0, 0);
        let mut f = field_with(vec![1.0, 1.0 + 1e-6]);
        assert_eq!(f.pop_max(&mut TieBreaker::LowestIndex).unwrap().0, 1);
    }

    #[test]
    fn pop_max_random_ties_only_pick_tied() {
        for seed in 0..20 {
            let mut f = field_with(vec![0.7, 0.1, 0.7]);
            let i = f.pop_max(&mut TieRule::SeededRandom(seed).into()).unwrap().0;
            assert!(i == 0 || i == 2);
        }
    }

    #[test]
    fn pop_max_until_empty() {
        let mut f = field_with(vec![0.4]);
        assert_eq!(f.pop_max(&mut TieBreaker::LowestIndex).unwrap().0, 0);
        assert!(f.is_empty());
        assert!(f.pop_max(&mut TieBreaker::LowestIndex).is_err());
    }

    #[test]
    fn subtracting_coincident_point_removes_one() {
        let t = BinaryTask::new(array![[0.0, 0.0], [5.0, 5.0]], array![[100.0, 100.0]]).unwrap();
        let mut f = PotentialField::init(&t, 1.0).unwrap();
        let before = f.phi()[1];
        f.pop_max(&mut TieBreaker::LowestIndex).unwrap();
        f.subtract_contribution(&[5.0, 5.0]).unwrap();
        assert_abs_diff_eq!(f.phi()[0], before - 1.0, epsilon = 1e-15);
    }

    #[test]
    fn subtracting_distant_point_changes_nothing() {
        let t = BinaryTask::new(array![[0.0, 0.0]], array![[1.0, 0.0]]).unwrap();
        let mut f = PotentialField::init(&t, 1.0).unwrap();
        let before = f.phi()[0];
        f.subtract_contribution(&[1e6, 1e6]).unwrap();
        assert_abs_diff_eq!(f.phi()[0], before, epsilon = 1e-300);
    }

    #[test]
    fn grid_peak_at_single_point() {
        let t = BinaryTask::new(array![[0.0, 0.0]], array![[50.0, 50.0]]).unwrap();
        let bounds = GridBounds { x: [-1.0, 1.0], y: [-1.0, 1.0] };
        let g = potential_grid(&t, 0.5, bounds, 5).unwrap();
        let (arg, _) = g
            .values
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, v)| if *v > acc.1 { (i, *v) } else { acc });
        assert_eq!(arg, 12);
    }

    #[test]
    fn grid_matches_direct_calls() {
        let t = BinaryTask::new(array![[0.0, 0.0], [1.0, 1.0]], array![[0.5, 0.0]]).unwrap();
        let bounds = GridBounds { x: [0.0, 1.0], y: [0.0, 2.0] };
        let g = potential_grid(&t, 0.8, bounds, 2).unwrap();
        assert_eq!(g.values.len(), 4);
        for row in 0..2 {
            for col in 0..2 {
                let c = g.cell_center(row, col);
                assert_eq!(g.values[row * 2 + col], mutual_potential(&c, &t, 0.8).unwrap());
            }
        }
        assert_eq!(g.cell_center(0, 1), [0.75, 0.5]);
    }

    #[test]
    fn grid_antisymmetric_under_mirror_pair() {
        let t = BinaryTask::new(array![[-1.0, 0.0]], array![[1.0, 0.0]]).unwrap();
        let bounds = GridBounds { x: [-2.0, 2.0], y: [-1.0, 1.0] };
        let g = potential_grid(&t, 1.0, bounds, 8).unwrap();
        for row in 0..8 {
            for col in 0..8 {
                let a = g.values[row * 8 + col];
                let b = g.values[row * 8 + (7 - col)];
                assert_abs_diff_eq!(a, -b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn grid_rejects_bad_input() {
        let t = BinaryTask::new(array![[0.0, 0.0, 0.0]], array![[1.0, 0.0, 0.0]]).unwrap();
        let bounds = GridBounds { x: [0.0, 1.0], y: [0.0, 1.0] };
        assert!(potential_grid(&t, 1.0, bounds, 4).is_err());
        let t = BinaryTask::new(array![[0.0, 0.0]], array![[1.0, 0.0]]).unwrap();
        assert!(potential_grid(&t, 1.0, bounds, 1).is_err());
    }

    #[test]
    fn grid_serializations() {
        let t = BinaryTask::new(array![[0.0, 0.0]], array![[1.0, 0.0]]).unwrap();
        let g = potential_grid(&t, 1.0, GridBounds::around(&t, 0.1).unwrap(), 3).unwrap();
        let csv = g.to_csv();
        assert_eq!(csv.lines().count(), 10);
        assert!(csv.starts_with("x,y,phi\n"));
        let json: serde_json::Value = serde_json::from_str(&g.to_json().unwrap()).unwrap();
        assert_eq!(json["resolution"], 3);
        assert_eq!(json["values"].as_array().unwrap().len(), 9);
        assert!(json["bounds"]["x"].is_array());
    }

    fn point_set(m: usize, max: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
        prop::collection::vec(prop::collection::vec(-3.0f64..3.0, m), 1..max)
    }

    fn to_array(v: &[Vec<f64>]) -> Array2<f64> {
        let m = v[0].len();
        Array2::from_shape_vec((v.len(), m), v.concat()).unwrap()
    }

    proptest! {
        #[test]
        fn class_swap_is_antisymmetric(
            (k, minority, x) in (1usize..5).prop_flat_map(|m| (point_set(m, 12), point_set(m, 12), prop::collection::vec(-3.0f64..3.0, m))),
            gamma in 0.05f64..5.0,
        ) {
            let a = mutual_potential_sets(&x, to_array(&k).view(), to_array(&minority).view(), gamma).unwrap();
            let b = mutual_potential_sets(&x, to_array(&minority).view(), to_array(&k).view(), gamma).unwrap();
            prop_assert!((a + b).abs() < 1e-12);
            prop_assert!((a - oracle(&x, &k, &minority, gamma)).abs() < 1e-12);
        }

        #[test]
        fn translation_invariant(
            (k, minority, x, shift) in (1usize..5).prop_flat_map(|m| (point_set(m, 12), point_set(m, 12), prop::collection::vec(-3.0f64..3.0, m), prop::collection::vec(-10.0f64..10.0, m))),
            gamma in 0.05f64..5.0,
        ) {
            let mv = |v: &[Vec<f64>]| v.iter().map(|p| p.iter().zip(&shift).map(|(a, s)| a + s).collect()).collect::<Vec<Vec<f64>>>();
            let xs: Vec<f64> = x.iter().zip(&shift).map(|(a, s)| a + s).collect();
            let a = mutual_potential_sets(&x, to_array(&k).view(), to_array(&minority).view(), gamma).unwrap();
            let b = mutual_potential_sets(&xs, to_array(&mv(&k)).view(), to_array(&mv(&minority)).view(), gamma).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
        }

        #[test]
        fn rbf_increases_with_gamma(d in 1e-3f64..10.0, g in 0.05f64..10.0, dg in 1e-3f64..1.0) {
            // Beyond d/γ ≈ 26 the kernel underflows to 0.
            prop_assume!(d / g < 25.0);
            prop_assert!(rbf_value(d, g + dg).unwrap() > rbf_value(d, g).unwrap());
        }

        #[test]
        fn field_bounds(
            (k, minority) in (1usize..4).prop_flat_map(|m| (point_set(m, 15), point_set(m, 8))),
            gamma in 0.05f64..5.0,
        ) {
            let t = BinaryTask::new(to_array(&k), to_array(&minority)).unwrap();
            let f = PotentialField::init(&t, gamma).unwrap();
            for v in f.phi() {
                prop_assert!(*v >= 1.0 - minority.len() as f64 - 1e-12);
                prop_assert!(*v <= k.len() as f64 + 1e-12);
            }
        }

        #[test]
        fn incremental_matches_naive(
            (k, minority) in (1usize..10).prop_flat_map(|m| (point_set(m, 120), point_set(m, 60))),
            gamma in prop::sample::select(vec![0.01, 0.1, 1.0, 10.0]),
            frac in 0.0f64..1.0,
        ) {
            let t = BinaryTask::new(to_array(&k), to_array(&minority)).unwrap();
            let mut f = PotentialField::init(&t, gamma).unwrap();
            let steps = ((k.len() as f64) * frac) as usize;
            let mut ties = TieBreaker::LowestIndex;
            for _ in 0..steps {
                let (i, _) = f.pop_max(&mut ties).unwrap();
                let p = f.point(i).to_vec();
                f.subtract_contribution(&p).unwrap();
            }
            let reduced: Vec<Vec<f64>> = f.remaining().iter().map(|&i| k[i].clone()).collect();
            let m = rows(t.minority());
            for (v, &i) in f.phi().iter().zip(f.remaining()) {
                let naive = oracle(&k[i], &reduced, &m, gamma);
                prop_assert!((v - naive).abs() < 1e-9);
            }
        }
    }
}
