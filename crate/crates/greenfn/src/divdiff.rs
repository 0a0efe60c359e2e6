//! Confluent divided differences of analytic functions.
//!
//! Three independent representations are provided: the recurrence table
//! (jets supply the confluent entries), a contour-integral form, and the
//! Lagrange-style sum for distinct nodes. A Gelfond-type estimate bounds the
//! magnitude of any divided difference by the scaled maximum of a derivative
//! over the convex hull of the nodes.

use num_complex::Complex64;

use crate::analytic::AnalyticFn;
use crate::error::{Error, Result};
use crate::jet::Jet;

/// Minimum distance the quadrature contour must keep from nodes and poles.
const CONTOUR_CLEARANCE: f64 = 1e-10;

/// Minimum pairwise separation for the distinct-node formula.
const DISTINCT_SEPARATION: f64 = 1e-10;

/// Interpolation nodes with multiplicities expressed as repetition.
///
/// Equal values must occupy contiguous runs; equality is exact, matching the
/// upstream eigenvalue clustering policy. Confluence is never decided by a
/// floating comparison inside this module.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeList {
    nodes: Vec<Complex64>,
}

impl NodeList {
    pub fn new(nodes: Vec<Complex64>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidInput("node list must be non-empty".into()));
        }
        if nodes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("nodes must be finite".into()));
        }
        let mut closed_runs = std::collections::HashSet::new();
        for i in 0..nodes.len() {
            if i > 0 && nodes[i] != nodes[i - 1] {
                closed_runs.insert(key(nodes[i - 1]));
            }
            if closed_runs.contains(&key(nodes[i])) {
                return Err(Error::InvalidInput(
                    "equal nodes must occupy contiguous runs".into(),
                ));
            }
        }
        Ok(Self { nodes })
    }

    /// Expand `(value, multiplicity)` clusters into a node list; the cluster
    /// order is preserved.
    pub fn from_clusters(clusters: &[(Complex64, usize)]) -> Result<Self> {
        let nodes: Vec<Complex64> = clusters
            .iter()
            .flat_map(|&(z, count)| std::iter::repeat_n(z, count))
            .collect();
        Self::new(nodes)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.nodes.iter()
    }

    /// Contiguous runs of equal values as `(value, run length)`.
    pub(crate) fn runs(&self) -> Vec<(Complex64, usize)> {
        let mut runs: Vec<(Complex64, usize)> = Vec::new();
        for &z in &self.nodes {
            match runs.last_mut() {
                Some((v, count)) if *v == z => *count += 1,
                _ => runs.push((z, 1)),
            }
        }
        runs
    }

    fn min_pairwise_distance(&self) -> f64 {
        let mut min = f64::INFINITY;
        for i in 0..self.nodes.len() {
            for j in (i + 1)..self.nodes.len() {
                min = min.min((self.nodes[i] - self.nodes[j]).norm());
            }
        }
        min
    }
}

fn key(z: Complex64) -> (u64, u64) {
    (z.re.to_bits(), z.im.to_bits())
}

/// The first row of the confluent divided-difference table:
/// entry `j` is `f[x_1, ..., x_{j+1}]`.
///
/// Runs of a repeated value are seeded with jet coefficients (the
/// derivative-over-factorial entries); everything else follows the quotient
/// recurrence.
pub fn divided_difference_table<F: AnalyticFn + ?Sized>(
    f: &F,
    nodes: &NodeList,
) -> Result<Vec<Complex64>> {
    let xs = nodes.as_slice();
    let n = xs.len();

    let runs = nodes.runs();
    let mut jets: Vec<Jet> = Vec::with_capacity(runs.len());
    let mut run_of = vec![0usize; n];
    let mut idx = 0;
    for (r, &(value, count)) in runs.iter().enumerate() {
        jets.push(f.jet(value, count - 1)?);
        for _ in 0..count {
            run_of[idx] = r;
            idx += 1;
        }
    }

    let mut col: Vec<Complex64> = (0..n).map(|i| jets[run_of[i]].value()).collect();
    let mut table = vec![Complex64::ZERO; n];
    table[0] = col[0];
    for width in 1..n {
        for i in 0..(n - width) {
            col[i] = if xs[i + width] == xs[i] {
                jets[run_of[i]].coeff(width)
            } else {
                (col[i + 1] - col[i]) / (xs[i + width] - xs[i])
            };
        }
        table[width] = col[0];
    }
    Ok(table)
}

/// The top divided difference `f[x_1, ..., x_N]` by trapezoidal quadrature of
/// `(1/2 pi i) \oint f(z) / prod_k (z - x_k) dz` over a circle enclosing all
/// nodes.
///
/// The circle is centered at the node centroid with radius
/// `max node distance + radius_margin`. Trapezoidal sums converge spectrally
/// for integrands analytic near the contour; the multiplicity structure of
/// the nodes needs no special handling.
pub fn divided_difference_contour<F: AnalyticFn + ?Sized>(
    f: &F,
    nodes: &NodeList,
    radius_margin: f64,
    quad_points: usize,
) -> Result<Complex64> {
    if !(radius_margin > 0.0) || !radius_margin.is_finite() {
        return Err(Error::InvalidInput("radius margin must be positive".into()));
    }
    if quad_points < 4 {
        return Err(Error::InvalidInput("need at least 4 quadrature points".into()));
    }
    let xs = nodes.as_slice();
    let centroid = xs.iter().sum::<Complex64>() / xs.len() as f64;
    let radius = xs
        .iter()
        .map(|&x| (x - centroid).norm())
        .fold(0.0, f64::max)
        + radius_margin;

    for &x in xs {
        let dist = ((x - centroid).norm() - radius).abs();
        if dist < CONTOUR_CLEARANCE {
            return Err(Error::Contour {
                what: format!("node {x}"),
                dist,
            });
        }
    }
    for pole in f.singularities() {
        let dist = ((pole - centroid).norm() - radius).abs();
        if dist < CONTOUR_CLEARANCE {
            return Err(Error::Contour {
                what: format!("pole {pole}"),
                dist,
            });
        }
    }

    let mut acc = Complex64::ZERO;
    for j in 0..quad_points {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / quad_points as f64;
        let dir = Complex64::new(0.0, theta).exp();
        let z = centroid + dir * radius;
        let omega: Complex64 = xs.iter().map(|&x| z - x).product();
        acc += f.jet(z, 0)?.value() / omega * dir * radius;
    }
    Ok(acc / quad_points as f64)
}

/// The top divided difference for pairwise distinct nodes:
/// `sum_j f(x_j) / prod_{k != j} (x_j - x_k)`.
pub fn divided_difference_distinct<F: AnalyticFn + ?Sized>(
    f: &F,
    nodes: &NodeList,
) -> Result<Complex64> {
    let min = nodes.min_pairwise_distance();
    if min <= DISTINCT_SEPARATION {
        return Err(Error::DistinctnessViolation(min));
    }
    let xs = nodes.as_slice();
    let mut acc = Complex64::ZERO;
    for (j, &xj) in xs.iter().enumerate() {
        let denom: Complex64 = xs
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, &xk)| xj - xk)
            .product();
        acc += f.jet(xj, 0)?.value() / denom;
    }
    Ok(acc)
}

/// Gelfond-type estimate: `|f[x_1, ..., x_N]|` is at most
/// `max |f^(N-1)| / (N-1)!` over the convex hull of the nodes.
///
/// By the maximum principle the maximum is attained on the hull boundary,
/// which is sampled at `boundary_samples` points (an approximate maximum;
/// raise the sample count to refine). Jets carry `f^(r)/r!` directly, so the
/// factorial never has to be formed.
pub fn gelfond_bound<F: AnalyticFn + ?Sized>(
    f: &F,
    nodes: &NodeList,
    boundary_samples: usize,
) -> Result<f64> {
    if boundary_samples == 0 {
        return Err(Error::InvalidInput("need at least one boundary sample".into()));
    }
    let order = nodes.len() - 1;
    let mut best = 0.0f64;
    for z in hull_boundary_samples(nodes.as_slice(), boundary_samples) {
        best = best.max(f.jet(z, order)?.coeff(order).norm());
    }
    Ok(best)
}

/// Convex hull of the nodes by Andrew's monotone chain, then `count` points
/// spread along the boundary by arc length. Degenerate hulls (a single point
/// or a collinear set) are sampled along the point or segment. Hull vertices
/// are always included.
fn hull_boundary_samples(points: &[Complex64], count: usize) -> Vec<Complex64> {
    let mut unique: Vec<Complex64> = Vec::new();
    for &p in points {
        if !unique.contains(&p) {
            unique.push(p);
        }
    }
    if unique.len() == 1 {
        return unique;
    }

    let hull = convex_hull(&unique);
    let mut samples = hull.clone();
    if hull.len() == 2 {
        let (a, b) = (hull[0], hull[1]);
        for j in 1..count {
            let s = j as f64 / count as f64;
            samples.push(a + (b - a) * s);
        }
        return samples;
    }

    let perimeter: f64 = (0..hull.len())
        .map(|i| (hull[(i + 1) % hull.len()] - hull[i]).norm())
        .sum();
    if perimeter == 0.0 {
        return samples;
    }
    let mut edge = 0usize;
    let mut edge_start = 0.0f64;
    for j in 0..count {
        let target = perimeter * j as f64 / count as f64;
        loop {
            let len = (hull[(edge + 1) % hull.len()] - hull[edge]).norm();
            if target <= edge_start + len || edge + 1 == hull.len() {
                let s = if len > 0.0 { (target - edge_start) / len } else { 0.0 };
                let a = hull[edge];
                let b = hull[(edge + 1) % hull.len()];
                samples.push(a + (b - a) * s);
                break;
            }
            edge_start += len;
            edge += 1;
        }
    }
    samples
}

/// Counter-clockwise convex hull; collinear sets collapse to their extreme
/// endpoints.
fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).expect("finite nodes"));

    let cross = |o: Complex64, a: Complex64, b: Complex64| -> f64 {
        (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
    };

    let mut lower: Vec<Complex64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.is_empty() {
        // All points collinear: keep the two extremes.
        vec![pts[0], pts[pts.len() - 1]]
    } else {
        lower
    }
}
