//! Uniform periodic tensor grids on boxes Π [−Lⱼ, Lⱼ].

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Fraction of each half-extent that the support box may occupy; the rest is
/// padding for the periodic FFT wrap.
pub const PADDING_FRACTION: f64 = 0.75;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    /// Per-axis half-extent Lⱼ; the axis covers [−Lⱼ, Lⱼ).
    extents: Vec<f64>,
    /// Per-axis point count Nⱼ (power of two, ≥ 16).
    counts: Vec<usize>,
}

impl Grid {
    pub fn new(extents: Vec<f64>, counts: Vec<usize>) -> Result<Arc<Self>> {
        if extents.is_empty() || extents.len() != counts.len() {
            return Err(CoreError::InvalidParam {
                name: "grid",
                reason: format!(
                    "extents ({}) and counts ({}) must be nonempty and equal length",
                    extents.len(),
                    counts.len()
                ),
            });
        }
        for (j, &l) in extents.iter().enumerate() {
            if !(l.is_finite() && l > 0.0) {
                return Err(CoreError::InvalidParam {
                    name: "grid",
                    reason: format!("axis {j} extent must be positive and finite, got {l}"),
                });
            }
        }
        for (j, &n) in counts.iter().enumerate() {
            if n < 16 || !n.is_power_of_two() {
                return Err(CoreError::InvalidParam {
                    name: "grid",
                    reason: format!("axis {j} count must be a power of two ≥ 16, got {n}"),
                });
            }
        }
        Ok(Arc::new(Grid { extents, counts }))
    }

    pub fn dimension(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn extents(&self) -> &[f64] {
        &self.extents
    }

    pub fn count(&self, axis: usize) -> usize {
        self.counts[axis]
    }

    pub fn extent(&self, axis: usize) -> f64 {
        self.extents[axis]
    }

    pub fn num_points(&self) -> usize {
        self.counts.iter().product()
    }

    /// hⱼ = 2Lⱼ/Nⱼ.
    pub fn spacing(&self, axis: usize) -> f64 {
        2.0 * self.extents[axis] / self.counts[axis] as f64
    }

    /// Πⱼ hⱼ, the quadrature volume element.
    pub fn cell_volume(&self) -> f64 {
        (0..self.dimension()).map(|j| self.spacing(j)).product()
    }

    /// The k-th sample coordinate on an axis: −L + k·h (right endpoint excluded).
    pub fn coord(&self, axis: usize, k: usize) -> f64 {
        -self.extents[axis] + k as f64 * self.spacing(axis)
    }

    /// The angular frequency of FFT bin k on an axis: ξ = πm/L with the
    /// signed mode m ∈ [−N/2, N/2).
    pub fn freq(&self, axis: usize, k: usize) -> f64 {
        let n = self.counts[axis];
        let m = if k < n / 2 {
            k as f64
        } else {
            k as f64 - n as f64
        };
        std::f64::consts::PI * m / self.extents[axis]
    }

    /// Row-major strides.
    pub fn strides(&self) -> Vec<usize> {
        let d = self.dimension();
        let mut s = vec![1usize; d];
        for j in (0..d.saturating_sub(1)).rev() {
            s[j] = s[j + 1] * self.counts[j + 1];
        }
        s
    }

    /// Visit every point in row-major order with its spatial coordinates.
    pub fn walk(&self, mut visit: impl FnMut(usize, &[f64])) {
        self.walk_with(|axis, k| self.coord(axis, k), &mut visit)
    }

    /// Visit every point in row-major order with its frequency coordinates.
    pub fn walk_freq(&self, mut visit: impl FnMut(usize, &[f64])) {
        self.walk_with(|axis, k| self.freq(axis, k), &mut visit)
    }

    fn walk_with(&self, coord_of: impl Fn(usize, usize) -> f64, visit: &mut impl FnMut(usize, &[f64])) {
        let d = self.dimension();
        let total = self.num_points();
        let mut idx = vec![0usize; d];
        let mut coords: Vec<f64> = (0..d).map(|j| coord_of(j, 0)).collect();
        for flat in 0..total {
            visit(flat, &coords);
            for j in (0..d).rev() {
                idx[j] += 1;
                if idx[j] < self.counts[j] {
                    coords[j] = coord_of(j, idx[j]);
                    break;
                }
                idx[j] = 0;
                coords[j] = coord_of(j, 0);
            }
        }
    }

    /// Inclusive index range of samples with coordinate in [lo, hi] on an axis.
    pub fn axis_range(&self, axis: usize, lo: f64, hi: f64) -> (usize, usize) {
        let h = self.spacing(axis);
        let l = self.extents[axis];
        let eps = 1e-9 * h;
        let k_lo = (((lo + l) / h) - eps).ceil().max(0.0) as usize;
        let k_hi = ((((hi + l) / h) + eps).floor() as isize).min(self.counts[axis] as isize - 1);
        if k_hi < k_lo as isize {
            (1, 0) // empty range
        } else {
            (k_lo, k_hi as usize)
        }
    }

    /// Visit every point inside the per-axis inclusive index ranges, with
    /// flat index and spatial coordinates.
    pub fn walk_box(&self, ranges: &[(usize, usize)], mut visit: impl FnMut(usize, &[f64])) {
        let d = self.dimension();
        if ranges.iter().any(|&(lo, hi)| hi < lo) {
            return;
        }
        let strides = self.strides();
        let mut idx: Vec<usize> = ranges.iter().map(|&(lo, _)| lo).collect();
        let mut coords: Vec<f64> = (0..d).map(|j| self.coord(j, idx[j])).collect();
        let mut flat: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
        loop {
            visit(flat, &coords);
            let mut j = d;
            while j > 0 {
                j -= 1;
                if idx[j] < ranges[j].1 {
                    idx[j] += 1;
                    flat += strides[j];
                    coords[j] = self.coord(j, idx[j]);
                    break;
                }
                flat -= (idx[j] - ranges[j].0) * strides[j];
                idx[j] = ranges[j].0;
                coords[j] = self.coord(j, idx[j]);
                if j == 0 {
                    return;
                }
            }
        }
    }
}

/// The sub-box outside which a grid function is guaranteed to vanish.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportBox {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl SupportBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(CoreError::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        for j in 0..lo.len() {
            if !(lo[j].is_finite() && hi[j].is_finite() && lo[j] <= hi[j]) {
                return Err(CoreError::InvalidParam {
                    name: "support_box",
                    reason: format!("axis {j}: invalid interval [{}, {}]", lo[j], hi[j]),
                });
            }
        }
        Ok(SupportBox { lo, hi })
    }

    /// Symmetric box Π [−sⱼ, sⱼ].
    pub fn centered(half_widths: Vec<f64>) -> Result<Self> {
        let lo = half_widths.iter().map(|s| -s).collect();
        SupportBox::new(lo, half_widths)
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[f64] {
        &self.lo
    }

    pub fn hi(&self) -> &[f64] {
        &self.hi
    }

    pub fn union(&self, other: &SupportBox) -> Result<SupportBox> {
        if self.dimension() != other.dimension() {
            return Err(CoreError::DimensionMismatch {
                expected: self.dimension(),
                got: other.dimension(),
            });
        }
        let lo = self
            .lo
            .iter()
            .zip(&other.lo)
            .map(|(a, b)| a.min(*b))
            .collect();
        let hi = self
            .hi
            .iter()
            .zip(&other.hi)
            .map(|(a, b)| a.max(*b))
            .collect();
        SupportBox::new(lo, hi)
    }

    pub fn contains(&self, coords: &[f64]) -> bool {
        coords
            .iter()
            .enumerate()
            .all(|(j, &x)| x >= self.lo[j] && x <= self.hi[j])
    }

    /// Per-axis inclusive index ranges of the box on a grid.
    pub fn index_ranges(&self, grid: &Grid) -> Vec<(usize, usize)> {
        (0..self.dimension())
            .map(|j| grid.axis_range(j, self.lo[j], self.hi[j]))
            .collect()
    }
}

/// Reject support boxes reaching within 25% of the periodic boundary.
pub fn check_padding(grid: &Grid, support: &SupportBox) -> Result<()> {
    if support.dimension() != grid.dimension() {
        return Err(CoreError::DimensionMismatch {
            expected: grid.dimension(),
            got: support.dimension(),
        });
    }
    for j in 0..grid.dimension() {
        let l = grid.extent(j);
        let reach = support.lo()[j].abs().max(support.hi()[j].abs());
        if reach > PADDING_FRACTION * l + 1e-12 * l {
            return Err(CoreError::InsufficientPadding {
                axis: j,
                support: reach,
                extent: l,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_counts_and_extents() {
        assert!(Grid::new(vec![1.0], vec![15]).is_err());
        assert!(Grid::new(vec![1.0], vec![48]).is_err());
        assert!(Grid::new(vec![-1.0], vec![32]).is_err());
        assert!(Grid::new(vec![1.0, 2.0], vec![32]).is_err());
    }

    #[test]
    fn spacing_and_coords() {
        let g = Grid::new(vec![2.0], vec![32]).unwrap();
        assert!((g.spacing(0) - 0.125).abs() < 1e-15);
        assert!((g.coord(0, 0) + 2.0).abs() < 1e-15);
        assert!((g.coord(0, 16) - 0.0).abs() < 1e-15);
    }

    #[test]
    fn freq_lattice_is_fftshifted() {
        let g = Grid::new(vec![std::f64::consts::PI], vec![16]).unwrap();
        // L = π gives integer frequencies m
        assert_eq!(g.freq(0, 0), 0.0);
        assert_eq!(g.freq(0, 1), 1.0);
        assert_eq!(g.freq(0, 7), 7.0);
        assert_eq!(g.freq(0, 8), -8.0);
        assert_eq!(g.freq(0, 15), -1.0);
    }

    #[test]
    fn walk_strides_row_major() {
        let g = Grid::new(vec![1.0, 1.0], vec![16, 32]).unwrap();
        assert_eq!(g.strides(), vec![32, 1]);
        let mut last = None;
        let mut seen = 0usize;
        g.walk(|flat, coords| {
            assert_eq!(coords.len(), 2);
            if let Some(prev) = last {
                assert_eq!(flat, prev + 1usize);
            }
            last = Some(flat);
            seen += 1;
        });
        assert_eq!(seen, 512);
    }

    #[test]
    fn box_ranges_and_walk() {
        let g = Grid::new(vec![1.0, 1.0], vec![16, 16]).unwrap();
        let b = SupportBox::centered(vec![0.5, 0.25]).unwrap();
        let ranges = b.index_ranges(&g);
        let mut count = 0;
        g.walk_box(&ranges, |flat, coords| {
            assert!(b.contains(coords), "flat={flat} coords={coords:?}");
            count += 1;
        });
        let expected: usize = ranges.iter().map(|(lo, hi)| hi - lo + 1).product();
        assert_eq!(count, expected);
        assert!(count > 0);
    }

    #[test]
    fn padding_guard() {
        let g = Grid::new(vec![1.0], vec![32]).unwrap();
        let ok = SupportBox::centered(vec![0.75]).unwrap();
        assert!(check_padding(&g, &ok).is_ok());
        let bad = SupportBox::centered(vec![0.8]).unwrap();
        assert!(matches!(
            check_padding(&g, &bad),
            Err(CoreError::InsufficientPadding { .. })
        ));
    }
}
