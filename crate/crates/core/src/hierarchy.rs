//! Recursive domain partitioning and conditioning structure.
//!
//! A [`Hierarchy`] splits the spatial domain into a `J`-ary tree of regions,
//! assigns each region a small knot set picked by maximum-distance ordering,
//! and orders all variables resolution-major. The conditioning set of a
//! variable is the union of its region's ancestor sets and the earlier knots
//! of its own set; [`conditioning_pattern`] turns those sets into the
//! lower-triangular [`SparsityPattern`] every factorization in this crate
//! works on.
//!
//! The low-rank and dense reference configurations are the same machinery:
//! `M = 1` with singleton leaves gives the low-rank pattern, `M = 0` the
//! full lower triangle.

use std::sync::Arc;

use crate::pattern::SparsityPattern;
use crate::{Error, Result};

/// A point of the spatial grid. One-dimensional domains use `y = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Location {
    pub coords: [f64; 2],
    pub original_index: usize,
}

impl Location {
    pub fn new_2d(x: f64, y: f64, original_index: usize) -> Self {
        Self {
            coords: [x, y],
            original_index,
        }
    }

    pub fn new_1d(x: f64, original_index: usize) -> Self {
        Self::new_2d(x, 0.0, original_index)
    }

    fn dist2(&self, other: &Self) -> f64 {
        let dx = self.coords[0] - other.coords[0];
        let dy = self.coords[1] - other.coords[1];
        dx * dx + dy * dy
    }
}

/// Shape of the recursive partition: `M` resolutions beyond the root, `J`
/// children per region, knot counts per non-leaf resolution, and the maximum
/// size a leaf set may reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyConfig {
    pub num_resolutions: usize,
    pub children_per_region: usize,
    pub set_sizes: Vec<usize>,
    pub leaf_cap: usize,
}

impl HierarchyConfig {
    pub fn new(
        num_resolutions: usize,
        children_per_region: usize,
        set_sizes: Vec<usize>,
        leaf_cap: usize,
    ) -> Self {
        Self {
            num_resolutions,
            children_per_region,
            set_sizes,
            leaf_cap,
        }
    }

    /// The dense configuration: a single root set holding all `n` points, so
    /// the conditioning pattern is the full lower triangle.
    pub fn dense(n: usize) -> Self {
        Self::new(0, 2, Vec::new(), n.max(1))
    }

    /// The low-rank configuration: one root set of `rank` knots and singleton
    /// leaves, so every remaining variable conditions on the root set only.
    pub fn low_rank(n: usize, rank: usize) -> Self {
        let leaves = n.saturating_sub(rank).max(2);
        Self::new(1, leaves, vec![rank.max(1)], 1)
    }

    /// Upper bound `N` on the size of any conditioning set plus itself:
    /// the sum of knot counts along a root-to-leaf path plus the leaf cap.
    pub fn implied_max_conditioning(&self) -> usize {
        self.set_sizes.iter().sum::<usize>() + self.leaf_cap
    }

    fn validate(&self) -> Result<()> {
        if self.set_sizes.len() != self.num_resolutions {
            return Err(Error::InvalidConfig(format!(
                "expected {} set sizes, got {}",
                self.num_resolutions,
                self.set_sizes.len()
            )));
        }
        if self.num_resolutions >= 1 && self.children_per_region < 2 {
            return Err(Error::InvalidConfig(
                "at least 2 children per region required".into(),
            ));
        }
        if self.set_sizes.iter().any(|&r| r == 0) {
            return Err(Error::InvalidConfig("set sizes must be >= 1".into()));
        }
        if self.leaf_cap == 0 {
            return Err(Error::InvalidConfig("leaf cap must be >= 1".into()));
        }
        Ok(())
    }
}

/// One node of the partition tree.
#[derive(Debug, Clone)]
pub struct Region {
    pub resolution: usize,
    /// Child indices from the root down to this region (empty for the root).
    pub path: Vec<usize>,
    /// Axis-aligned bounding box `[[x_min, y_min], [x_max, y_max]]`.
    pub bbox: [[f64; 2]; 2],
    /// Knot set: indices into the input location slice, in pick order.
    pub set: Vec<usize>,
    /// The same knots as positions in the global ordering.
    pub set_globals: Vec<usize>,
    /// Global positions of all ancestor knots, coarse to fine.
    pub ancestor_globals: Vec<usize>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// The built partition: region tree, knot sets, and the resolution-major
/// global ordering. Immutable after construction and safe to share.
#[derive(Debug, Clone)]
pub struct Hierarchy {
    regions: Vec<Region>,
    /// Region ids grouped by resolution, in lexicographic path order.
    levels: Vec<Vec<usize>>,
    /// `global_order[g]` is the input index of the variable at position `g`.
    global_order: Vec<usize>,
    /// Inverse of `global_order`.
    rank_of: Vec<usize>,
    locations: Vec<Location>,
}

impl Hierarchy {
    pub fn n(&self) -> usize {
        self.global_order.len()
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// Permutation from global position to input index.
    pub fn global_order(&self) -> &[usize] {
        &self.global_order
    }

    /// Permutation from input index to global position.
    pub fn rank_of(&self) -> &[usize] {
        &self.rank_of
    }

    /// The input locations permuted into global order, the indexing every
    /// factor and filter state uses.
    pub fn ordered_locations(&self) -> Vec<Location> {
        self.global_order
            .iter()
            .map(|&idx| self.locations[idx])
            .collect()
    }

    /// Text rendering of the region tree: path, set size, and box per node.
    pub fn summary(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "n = {}", self.n());
        for (m, level) in self.levels.iter().enumerate() {
            let sizes: Vec<usize> = level.iter().map(|&r| self.regions[r].set.len()).collect();
            let total: usize = sizes.iter().sum();
            let _ = writeln!(
                out,
                "resolution {m}: {} regions, {total} knots, set sizes {:?}",
                level.len(),
                compress_sizes(&sizes)
            );
        }
        for region in &self.regions {
            let indent = "  ".repeat(region.resolution);
            let path = if region.path.is_empty() {
                "root".to_string()
            } else {
                region
                    .path
                    .iter()
                    .map(|j| (j + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            };
            let _ = writeln!(
                out,
                "{indent}{path}: |set| = {}, box x [{:.4}, {:.4}] y [{:.4}, {:.4}]",
                region.set.len(),
                region.bbox[0][0],
                region.bbox[1][0],
                region.bbox[0][1],
                region.bbox[1][1],
            );
        }
        out
    }
}

fn compress_sizes(sizes: &[usize]) -> Vec<usize> {
    let mut distinct: Vec<usize> = sizes.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct
}

/// Greedy maximum-distance ordering.
///
/// Starts nearest the coordinate-wise centroid; each subsequent point
/// maximizes the minimum distance to everything already chosen. All ties
/// break toward the lowest `original_index`. Returns indices into the input
/// slice.
pub fn maxdist_order(locations: &[Location]) -> Result<Vec<usize>> {
    if locations.is_empty() {
        return Err(Error::EmptyLocations);
    }
    for (idx, loc) in locations.iter().enumerate() {
        if !loc.coords[0].is_finite() || !loc.coords[1].is_finite() {
            return Err(Error::NonFinite {
                context: "maxdist ordering",
                index: idx,
            });
        }
    }
    let n = locations.len();
    let inv = 1.0 / n as f64;
    let centroid = locations.iter().fold([0.0f64; 2], |acc, loc| {
        [
            acc[0] + loc.coords[0] * inv,
            acc[1] + loc.coords[1] * inv,
        ]
    });
    let centroid = Location {
        coords: centroid,
        original_index: 0,
    };

    let first = select_best(locations, |idx| -locations[idx].dist2(&centroid));

    let mut order = Vec::with_capacity(n);
    let mut chosen = vec![false; n];
    let mut min_dist2: Vec<f64> = locations
        .iter()
        .map(|loc| loc.dist2(&locations[first]))
        .collect();
    order.push(first);
    chosen[first] = true;

    for _ in 1..n {
        let next = select_best(locations, |idx| {
            if chosen[idx] {
                f64::NEG_INFINITY
            } else {
                min_dist2[idx]
            }
        });
        order.push(next);
        chosen[next] = true;
        update_min_dist(locations, next, &mut min_dist2);
    }
    Ok(order)
}

/// Argmax of `score` with ties broken by lowest `original_index`.
fn select_best(locations: &[Location], score: impl Fn(usize) -> f64 + Sync) -> usize {
    let pick = |best: Option<(f64, usize, usize)>, idx: usize| -> Option<(f64, usize, usize)> {
        let s = score(idx);
        let cand = (s, locations[idx].original_index, idx);
        match best {
            None => Some(cand),
            Some((bs, borig, _)) => {
                if s > bs || (s == bs && cand.1 < borig) {
                    Some(cand)
                } else {
                    best
                }
            }
        }
    };
    let merge = |a: Option<(f64, usize, usize)>, b: Option<(f64, usize, usize)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    };
    #[cfg(feature = "parallel")]
    let best = {
        use rayon::prelude::*;
        (0..locations.len())
            .into_par_iter()
            .fold(|| None, pick)
            .reduce(|| None, merge)
    };
    #[cfg(not(feature = "parallel"))]
    let best = {
        let _ = merge;
        (0..locations.len()).fold(None, pick)
    };
    best.expect("non-empty location set").2
}

fn update_min_dist(locations: &[Location], new: usize, min_dist2: &mut [f64]) {
    let picked = locations[new];
    let update = |(loc, d): (&Location, &mut f64)| {
        let cand = loc.dist2(&picked);
        if cand < *d {
            *d = cand;
        }
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        locations
            .par_iter()
            .zip(min_dist2.par_iter_mut())
            .for_each(update);
    }
    #[cfg(not(feature = "parallel"))]
    {
        locations.iter().zip(min_dist2.iter_mut()).for_each(update);
    }
}

/// Builds the recursive partition and knot assignment.
///
/// Regions split on the longest axis of their bounding box into
/// `children_per_region` balanced slabs of the locations remaining after
/// knot removal; each region's set takes the not-yet-assigned locations of
/// lowest maximum-distance rank. At resolution `M` everything left in a
/// region becomes its leaf set.
pub fn build_hierarchy(locations: &[Location], config: &HierarchyConfig) -> Result<Hierarchy> {
    config.validate()?;
    if locations.is_empty() {
        return Err(Error::EmptyLocations);
    }
    {
        let mut seen: Vec<usize> = locations.iter().map(|l| l.original_index).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidConfig(
                "original_index values must be unique".into(),
            ));
        }
    }

    let order = maxdist_order(locations)?;
    let mut rank = vec![0usize; locations.len()];
    for (r, &idx) in order.iter().enumerate() {
        rank[idx] = r;
    }

    let bbox = tight_bbox(locations, &(0..locations.len()).collect::<Vec<_>>());
    let mut builder = Builder {
        locations,
        rank: &rank,
        config,
        regions: Vec::new(),
        levels: vec![Vec::new(); config.num_resolutions + 1],
    };
    let all: Vec<usize> = (0..locations.len()).collect();
    builder.build_region(all, bbox, 0, Vec::new(), None)?;

    let Builder {
        mut regions,
        levels,
        ..
    } = builder;

    // Assemble the resolution-major global order and per-region global
    // positions.
    let mut global_order = Vec::with_capacity(locations.len());
    for level in &levels {
        for &rid in level {
            let start = global_order.len();
            global_order.extend_from_slice(&regions[rid].set);
            regions[rid].set_globals = (start..global_order.len()).collect();
        }
    }
    let mut rank_of = vec![0usize; locations.len()];
    for (g, &idx) in global_order.iter().enumerate() {
        rank_of[idx] = g;
    }

    // Ancestor knots, top-down: the parent's ancestors plus the parent's set.
    for rid in 0..regions.len() {
        if let Some(parent) = regions[rid].parent {
            let mut anc = regions[parent].ancestor_globals.clone();
            anc.extend_from_slice(&regions[parent].set_globals);
            regions[rid].ancestor_globals = anc;
        }
    }

    Ok(Hierarchy {
        regions,
        levels,
        global_order,
        rank_of,
        locations: locations.to_vec(),
    })
}

struct Builder<'a> {
    locations: &'a [Location],
    rank: &'a [usize],
    config: &'a HierarchyConfig,
    regions: Vec<Region>,
    levels: Vec<Vec<usize>>,
}

impl Builder<'_> {
    fn build_region(
        &mut self,
        mut members: Vec<usize>,
        bbox: [[f64; 2]; 2],
        resolution: usize,
        path: Vec<usize>,
        parent: Option<usize>,
    ) -> Result<usize> {
        let m_max = self.config.num_resolutions;
        members.sort_unstable_by_key(|&idx| self.rank[idx]);

        let rid = self.regions.len();
        self.regions.push(Region {
            resolution,
            path: path.clone(),
            bbox,
            set: Vec::new(),
            set_globals: Vec::new(),
            ancestor_globals: Vec::new(),
            parent,
            children: Vec::new(),
        });
        self.levels[resolution].push(rid);

        if resolution == m_max {
            if members.len() > self.config.leaf_cap {
                return Err(Error::HierarchyTooShallow {
                    size: members.len(),
                    cap: self.config.leaf_cap,
                    region: region_name(&path),
                });
            }
            self.regions[rid].set = members;
            return Ok(rid);
        }

        let take = self.config.set_sizes[resolution].min(members.len());
        let remaining = members.split_off(take);
        self.regions[rid].set = members;

        // Split the remaining locations along the longest axis of this
        // region's box into balanced, deterministic slabs.
        let axis = longest_axis(&bbox);
        let mut sorted = remaining;
        sorted.sort_unstable_by(|&a, &b| {
            let (la, lb) = (&self.locations[a], &self.locations[b]);
            la.coords[axis]
                .partial_cmp(&lb.coords[axis])
                .unwrap()
                .then(la.original_index.cmp(&lb.original_index))
        });

        let j_children = self.config.children_per_region;
        let len = sorted.len();
        let mut child_ids = Vec::with_capacity(j_children);
        let mut prev_hi = bbox[0][axis];
        for c in 0..j_children {
            let lo_idx = split_point(len, j_children, c);
            let hi_idx = split_point(len, j_children, c + 1);
            let chunk = sorted[lo_idx..hi_idx].to_vec();
            // Geometric cut halfway between the neighboring chunk coords;
            // the final slab extends to the region boundary.
            let hi = if c + 1 == j_children || hi_idx == len {
                bbox[1][axis]
            } else if hi_idx == 0 {
                bbox[0][axis]
            } else {
                let a = self.locations[sorted[hi_idx - 1]].coords[axis];
                let b = self.locations[sorted[hi_idx]].coords[axis];
                0.5 * (a + b)
            };
            let mut child_bbox = bbox;
            child_bbox[0][axis] = prev_hi;
            child_bbox[1][axis] = hi;
            prev_hi = hi;

            let mut child_path = path.clone();
            child_path.push(c);
            let child =
                self.build_region(chunk, child_bbox, resolution + 1, child_path, Some(rid))?;
            child_ids.push(child);
        }
        self.regions[rid].children = child_ids;
        Ok(rid)
    }
}

fn region_name(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter()
            .map(|j| (j + 1).to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn split_point(len: usize, parts: usize, c: usize) -> usize {
    // Left-heavy balanced chunking: ceil(c * len / parts).
    (c * len).div_ceil(parts)
}

fn tight_bbox(locations: &[Location], members: &[usize]) -> [[f64; 2]; 2] {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for &idx in members {
        for d in 0..2 {
            lo[d] = lo[d].min(locations[idx].coords[d]);
            hi[d] = hi[d].max(locations[idx].coords[d]);
        }
    }
    [lo, hi]
}

fn longest_axis(bbox: &[[f64; 2]; 2]) -> usize {
    let dx = bbox[1][0] - bbox[0][0];
    let dy = bbox[1][1] - bbox[0][1];
    if dy > dx {
        1
    } else {
        0
    }
}

/// The lower-triangular pattern of the conditioning sets, in global-order
/// indexing: row `g` holds the region's ancestor knots, the earlier knots of
/// the region's own set, and `g` itself.
pub fn conditioning_pattern(h: &Hierarchy) -> Arc<SparsityPattern> {
    let n = h.n();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for region in h.regions() {
        for (k, &g) in region.set_globals.iter().enumerate() {
            let mut row =
                Vec::with_capacity(region.ancestor_globals.len() + k + 1);
            row.extend_from_slice(&region.ancestor_globals);
            row.extend_from_slice(&region.set_globals[..k]);
            row.push(g);
            rows[g] = row;
        }
    }
    SparsityPattern::from_rows(n, rows).expect("conditioning sets form a valid pattern")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(points: &[f64]) -> Vec<Location> {
        points
            .iter()
            .enumerate()
            .map(|(i, &x)| Location::new_1d(x, i))
            .collect()
    }

    #[test]
    fn maxdist_single_point() {
        let locs = line(&[0.3]);
        assert_eq!(maxdist_order(&locs).unwrap(), vec![0]);
    }

    #[test]
    fn maxdist_errors_on_empty() {
        assert!(matches!(maxdist_order(&[]), Err(Error::EmptyLocations)));
    }

    #[test]
    fn maxdist_three_points_on_line() {
        // Centroid 0.4667: nearest is 0.4; farthest from {0.4} is 1.0.
        let locs = line(&[0.0, 0.4, 1.0]);
        assert_eq!(maxdist_order(&locs).unwrap(), vec![1, 2, 0]);
    }

    #[test]
    fn maxdist_unit_square_corners() {
        let locs = vec![
            Location::new_2d(0.0, 0.0, 0),
            Location::new_2d(1.0, 0.0, 1),
            Location::new_2d(0.0, 1.0, 2),
            Location::new_2d(1.0, 1.0, 3),
        ];
        let order = maxdist_order(&locs).unwrap();
        // All corners are equidistant from the centroid: lowest index first,
        // then the opposite corner.
        assert_eq!(order[0], 0);
        assert_eq!(order[1], 3);
    }

    #[test]
    fn hierarchy_single_point_m0() {
        let locs = line(&[0.5]);
        let h = build_hierarchy(&locs, &HierarchyConfig::dense(1)).unwrap();
        assert_eq!(h.regions().len(), 1);
        assert_eq!(h.regions()[0].set, vec![0]);
        assert_eq!(h.global_order(), &[0]);
    }

    #[test]
    fn hierarchy_m0_is_maxdist_order() {
        let locs = line(&[0.9, 0.1, 0.5, 0.3, 0.7]);
        let h = build_hierarchy(&locs, &HierarchyConfig::dense(5)).unwrap();
        assert_eq!(h.global_order(), maxdist_order(&locs).unwrap().as_slice());
        let p = conditioning_pattern(&h);
        assert_eq!(p.nnz(), 15); // full lower triangle
    }

    #[test]
    fn hierarchy_line_two_leaves() {
        // n = 8 on a line, M = 1, J = 2, r_0 = 2: root takes the first two
        // maxdist points, the rest split at the median.
        let xs: Vec<f64> = (0..8).map(|i| i as f64 / 7.0).collect();
        let locs = line(&xs);
        let cfg = HierarchyConfig::new(1, 2, vec![2], 3);
        let h = build_hierarchy(&locs, &cfg).unwrap();

        let order = maxdist_order(&locs).unwrap();
        assert_eq!(h.regions()[0].set, order[..2].to_vec());

        let leaves: Vec<&Region> = h.levels()[1]
            .iter()
            .map(|&rid| &h.regions()[rid])
            .collect();
        assert_eq!(leaves.len(), 2);
        assert_eq!(leaves[0].set.len() + leaves[1].set.len(), 6);
        // Median split: left members all lie at or left of right members.
        let max_left: f64 = leaves[0]
            .set
            .iter()
            .map(|&i| locs[i].coords[0])
            .fold(f64::NEG_INFINITY, f64::max);
        let min_right: f64 = leaves[1]
            .set
            .iter()
            .map(|&i| locs[i].coords[0])
            .fold(f64::INFINITY, f64::min);
        assert!(max_left <= min_right);
    }

    #[test]
    fn leaf_cap_violation_errors() {
        let xs: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let cfg = HierarchyConfig::new(1, 2, vec![2], 3);
        // 7 points remain for 2 leaves: one leaf gets 4 > 3.
        let err = build_hierarchy(&line(&xs), &cfg);
        assert!(matches!(err, Err(Error::HierarchyTooShallow { .. })));
    }

    #[test]
    fn low_rank_pattern_shape() {
        let xs: Vec<f64> = (0..20).map(|i| i as f64 / 19.0).collect();
        let locs = line(&xs);
        let h = build_hierarchy(&locs, &HierarchyConfig::low_rank(20, 5)).unwrap();
        let p = conditioning_pattern(&h);
        for g in 0..5 {
            assert_eq!(p.row(g), (0..=g).collect::<Vec<_>>().as_slice());
        }
        for g in 5..20 {
            let mut expected: Vec<usize> = (0..5).collect();
            expected.push(g);
            assert_eq!(p.row(g), expected.as_slice());
        }
    }

    #[test]
    fn sets_disjoint_and_cover() {
        let locs: Vec<Location> = (0..50)
            .map(|i| Location::new_2d((i % 7) as f64 * 0.13, (i / 7) as f64 * 0.11, i))
            .collect();
        let cfg = HierarchyConfig::new(2, 2, vec![4, 4], 16);
        let h = build_hierarchy(&locs, &cfg).unwrap();
        let mut seen = vec![false; 50];
        for region in h.regions() {
            for &idx in &region.set {
                assert!(!seen[idx], "index {idx} assigned twice");
                seen[idx] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        // Ancestors nest: child ancestors contain parent ancestors plus set.
        for region in h.regions() {
            if let Some(parent) = region.parent {
                let parent = &h.regions()[parent];
                let mut expected = parent.ancestor_globals.clone();
                expected.extend_from_slice(&parent.set_globals);
                assert_eq!(region.ancestor_globals, expected);
            }
        }
    }

    #[test]
    fn ordering_respects_resolution() {
        let locs: Vec<Location> = (0..40)
            .map(|i| Location::new_2d((i as f64 * 0.37) % 1.0, (i as f64 * 0.61) % 1.0, i))
            .collect();
        let cfg = HierarchyConfig::new(2, 2, vec![3, 3], 16);
        let h = build_hierarchy(&locs, &cfg).unwrap();
        let resolution_of = |g: usize| {
            h.regions()
                .iter()
                .find(|r| r.set_globals.contains(&g))
                .unwrap()
                .resolution
        };
        let res: Vec<usize> = (0..40).map(resolution_of).collect();
        assert!(res.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn deterministic_rebuild() {
        let locs: Vec<Location> = (0..64)
            .map(|i| Location::new_2d((i as f64 * 0.29) % 1.0, (i as f64 * 0.53) % 1.0, i))
            .collect();
        let cfg = HierarchyConfig::new(3, 2, vec![3, 3, 3], 8);
        let a = build_hierarchy(&locs, &cfg).unwrap();
        let b = build_hierarchy(&locs, &cfg).unwrap();
        assert_eq!(a.global_order(), b.global_order());
        let pa = conditioning_pattern(&a);
        let pb = conditioning_pattern(&b);
        assert_eq!(*pa, *pb);
    }

    #[test]
    fn nested_conditioning_property() {
        let locs: Vec<Location> = (0..60)
            .map(|i| Location::new_2d((i as f64 * 0.43) % 1.0, (i as f64 * 0.17) % 1.0, i))
            .collect();
        let cfg = HierarchyConfig::new(2, 2, vec![4, 4], 16);
        let h = build_hierarchy(&locs, &cfg).unwrap();
        let p = conditioning_pattern(&h);
        assert!(p.is_elimination_closed());
        // Strong form: for i < j in any row k, row(i) minus its diagonal is
        // contained in row(j).
        for k in 0..p.n() {
            let rk = p.row(k);
            for (a, &i) in rk.iter().enumerate() {
                for &j in &rk[a + 1..] {
                    for &c in p.row(i) {
                        if c != i {
                            assert!(
                                p.position(j, c).is_some(),
                                "row {j} missing {c} from row {i} (both in row {k})"
                            );
                        }
                    }
                }
            }
        }
    }
}
