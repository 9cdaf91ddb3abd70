use crate::error::{Error, Result};
use crate::nucore::SolvableSystem;

/// Nodes per Gauss–Legendre panel.
pub const PANEL_ORDER: usize = 20;

/// Relative size below which a decaying tail is dropped.
pub const TAIL_THRESHOLD: f64 = 1e-14;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let m = order as f64;
    for i in 0..order.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite rule on `[lo, hi]`: `panels` uniform panels on the middle half
/// and geometrically shrinking panels towards both ends, so integrable
/// endpoint singularities converge.
pub fn integrate(f: impl Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    let (x, w) = gauss_legendre(PANEL_ORDER);
    let panel = |a: f64, b: f64| {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        x.iter()
            .zip(&w)
            .map(|(xi, wi)| wi * f(c + h * xi))
            .sum::<f64>()
            * h
    };
    let width = hi - lo;
    let mut total = 0.0;
    let (a, b) = (lo + 0.25 * width, hi - 0.25 * width);
    let panels = panels.max(1);
    for i in 0..panels {
        total += panel(
            a + (b - a) * i as f64 / panels as f64,
            a + (b - a) * (i + 1) as f64 / panels as f64,
        );
    }
    for k in 2..48 {
        let outer = width * 0.5f64.powi(k);
        let inner = width * 0.5f64.powi(k + 1);
        total += panel(lo + inner, lo + outer);
        total += panel(hi - outer, hi - inner);
    }
    total
}

/// Finite integration interval for levels `ns`: the domain itself, or for an
/// infinite domain the point beyond which every `|Ψ_n|` stays below
/// `1e-14·max|Ψ_n|`.
pub fn integration_interval(system: &SolvableSystem, ns: &[usize]) -> Result<(f64, f64)> {
    let (left, right) = system.domain();
    if right.is_finite() {
        return Ok((left, right));
    }
    let step = 0.05 / system.transformation.scale();
    let limit = 1e5 * step;
    const QUIET_STEPS: usize = 40;
    let mut max = vec![0.0f64; ns.len()];
    let mut quiet = 0;
    let mut r = left;
    while r < limit {
        r += step;
        let mut all_small = true;
        for (k, &n) in ns.iter().enumerate() {
            let v = system.level(n)?.wavefunction(r)?.psi.abs();
            if v > max[k] {
                max[k] = v;
                all_small = false;
            } else if v >= TAIL_THRESHOLD * max[k] {
                all_small = false;
            }
        }
        quiet = if all_small { quiet + 1 } else { 0 };
        if quiet == QUIET_STEPS {
            return Ok((left, r));
        }
    }
    Err(Error::TailTruncation(limit))
}

/// `‖Ψ_n‖` by quadrature.
pub fn quadrature_norm(system: &SolvableSystem, n: usize, quadrature_points: usize) -> Result<f64> {
    let (lo, hi) = integration_interval(system, &[n])?;
    let level = system.level(n)?;
    let panels = quadrature_points / PANEL_ORDER;
    let v = integrate(
        |r| level.wavefunction(r).map_or(0.0, |w| w.psi * w.psi),
        lo,
        hi,
        panels,
    );
    Ok(v.sqrt())
}

/// `<Ψ_i|Ψ_j> / (‖Ψ_i‖‖Ψ_j‖)` for `i, j <= n_max`.
pub fn orthogonality_matrix(
    system: &SolvableSystem,
    n_max: usize,
    quadrature_points: usize,
) -> Result<Vec<Vec<f64>>> {
    let ns: Vec<usize> = (0..=n_max).collect();
    let levels = ns
        .iter()
        .map(|&n| system.level(n))
        .collect::<Result<Vec<_>>>()?;
    let (lo, hi) = integration_interval(system, &ns)?;
    let panels = quadrature_points / PANEL_ORDER;
    let dim = ns.len();
    let mut gram = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let v = integrate(
                |r| match (levels[i].wavefunction(r), levels[j].wavefunction(r)) {
                    (Ok(a), Ok(b)) => a.psi * b.psi,
                    _ => 0.0,
                },
                lo,
                hi,
                panels,
            );
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    let norms: Vec<f64> = (0..dim).map(|i| gram[i][i].sqrt()).collect();
    Ok((0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| gram[i][j] / (norms[i] * norms[j]))
                .collect()
        })
        .collect())
}

/// Largest off-diagonal magnitude.
pub fn max_off_diagonal(matrix: &[Vec<f64>]) -> f64 {
    let mut m: f64 = 0.0;
    for (i, row) in matrix.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                m = m.max(v.abs());
            }
        }
    }
    m
}
