//! Distance kernels shared by every neighborhood-based routine.

#[inline]
pub fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}

#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    squared_euclidean(a, b).sqrt()
}

/// Minkowski distance of order `p`. `p = f64::INFINITY` gives the Chebyshev distance.
pub fn minkowski(a: &[f64], b: &[f64], p: f64) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    if p == 2.0 {
        return euclidean(a, b);
    }
    if p.is_infinite() {
        return a
            .iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
    }
    if p == 1.0 {
        return a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum();
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs().powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let a = [0.0, 0.0];
        let b = [3.0, 4.0];
        assert_eq!(euclidean(&a, &b), 5.0);
        assert_eq!(squared_euclidean(&a, &b), 25.0);
        assert_eq!(minkowski(&a, &b, 1.0), 7.0);
        assert_eq!(minkowski(&a, &b, f64::INFINITY), 4.0);
        assert!((minkowski(&a, &b, 3.0) - 91f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }
}
