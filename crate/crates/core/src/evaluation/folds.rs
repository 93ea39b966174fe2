use crate::error::{Error, Result};
use crate::rng::{derive_seed, rng_from_seed};
use rand::seq::SliceRandom;
use serde::Serialize;

/// One train/test split.
///
/// Index lists keep the seeded shuffle order, so methods that break ties by
/// position (RBU, nearest-neighbor searches) do not inherit the row order of
/// the source file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fold {
    pub repeat: usize,
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

/// `repeats × 2` stratified folds: each repeat splits the data into two
/// halves, and each half serves once as the training set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldPlan {
    pub repeats: usize,
    pub seed: u64,
    pub folds: Vec<Fold>,
}

/// Builds a stratified `repeats × 2` plan over samples labelled by
/// `is_minority`. Each class is shuffled and cut in half; when a class has an
/// odd size the spare point goes to alternating halves across classes.
/// Within a half, classes follow each other majority first.
pub fn make_folds(is_minority: &[bool], repeats: usize, seed: u64) -> Result<FoldPlan> {
    if repeats == 0 {
        return Err(Error::param("need at least one repeat"));
    }
    let classes: [Vec<usize>; 2] = [
        (0..is_minority.len()).filter(|&i| !is_minority[i]).collect(),
        (0..is_minority.len()).filter(|&i| is_minority[i]).collect(),
    ];
    for (members, name) in classes.iter().zip(["majority", "minority"]) {
        if members.len() < 2 * repeats {
            return Err(Error::data(format!(
                "the {name} class has {} samples; {repeats}x2 folds need at least {}",
                members.len(),
                2 * repeats
            )));
        }
    }
    let mut folds = Vec::with_capacity(2 * repeats);
    for repeat in 0..repeats {
        let mut rng = rng_from_seed(derive_seed(seed, &["repeat".into(), repeat.into()]));
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut spare_to_a = true;
        for members in &classes {
            let mut shuffled = members.clone();
            shuffled.shuffle(&mut rng);
            let mut half = shuffled.len() / 2;
            if shuffled.len() % 2 == 1 {
                if spare_to_a {
                    half += 1;
                }
                spare_to_a = !spare_to_a;
            }
            a.extend_from_slice(&shuffled[..half]);
            b.extend_from_slice(&shuffled[half..]);
        }
        folds.push(Fold {
            repeat,
            train: a.clone(),
            test: b.clone(),
        });
        folds.push(Fold {
            repeat,
            train: b,
            test: a,
        });
    }
    Ok(FoldPlan { repeats, seed, folds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(n_min: usize, n_maj: usize) -> Vec<bool> {
        let mut v = vec![false; n_maj];
        v.extend(std::iter::repeat_n(true, n_min));
        v
    }

    #[test]
    fn twelve_minority_split_evenly() {
        let y = labels(12, 24);
        let plan = make_folds(&y, 5, 1).unwrap();
        assert_eq!(plan.folds.len(), 10);
        for f in &plan.folds {
            assert_eq!(f.train.iter().filter(|&&i| y[i]).count(), 6);
            assert_eq!(f.test.iter().filter(|&&i| y[i]).count(), 6);
            assert_eq!(f.train.len(), 18);
        }
    }

    #[test]
    fn reproducible() {
        let y = labels(11, 30);
        assert_eq!(make_folds(&y, 5, 3).unwrap(), make_folds(&y, 5, 3).unwrap());
        assert_ne!(make_folds(&y, 5, 3).unwrap(), make_folds(&y, 5, 4).unwrap());
    }

    #[test]
    fn single_repeat_on_four_points() {
        let y = [false, true, false, true];
        let plan = make_folds(&y, 1, 0).unwrap();
        assert_eq!(plan.folds.len(), 2);
        for f in &plan.folds {
            assert_eq!(f.train.iter().filter(|&&i| y[i]).count(), 1);
            assert_eq!(f.train.iter().filter(|&&i| !y[i]).count(), 1);
        }
    }

    #[test]
    fn small_class_rejected() {
        assert!(make_folds(&labels(9, 40), 5, 0).is_err());
        assert!(make_folds(&labels(10, 40), 5, 0).is_ok());
    }

    proptest! {
        #[test]
        fn halves_partition_and_stratify(n_min in 6usize..30, n_maj in 6usize..80, seed in any::<u64>()) {
            let y = labels(n_min, n_maj);
            let plan = make_folds(&y, 3, seed).unwrap();
            for f in &plan.folds {
                let mut all: Vec<usize> = f.train.iter().chain(&f.test).copied().collect();
                all.sort_unstable();
                prop_assert_eq!(all, (0..y.len()).collect::<Vec<_>>());
                let tr_min = f.train.iter().filter(|&&i| y[i]).count() as f64;
                let tr_maj = f.train.iter().filter(|&&i| !y[i]).count() as f64;
                prop_assert!((tr_min - n_min as f64 / 2.0).abs() <= 1.0);
                prop_assert!((tr_maj - n_maj as f64 / 2.0).abs() <= 1.0);
            }
        }
    }
}
