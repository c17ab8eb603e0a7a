use serde::Serialize;

/// Least-squares line through `(log n, log cost)` points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeFit {
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

fn mean(xs: impl Iterator<Item = f64> + Clone) -> f64 {
    let n = xs.clone().count() as f64;
    xs.sum::<f64>() / n
}

fn r_squared(ys: &[f64], predicted: impl Iterator<Item = f64>) -> f64 {
    let my = mean(ys.iter().copied());
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let ss_res: f64 = ys.iter().zip(predicted).map(|(y, p)| (y - p).powi(2)).sum();
    if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    }
}

impl SlopeFit {
    /// Fits `ln y = slope ln x + intercept`. Needs two distinct `x`.
    pub fn fit_loglog(raw: &[(f64, f64)]) -> Option<Self> {
        let points: Vec<(f64, f64)> = raw.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
        if points.len() < 2 {
            return None;
        }
        let mx = mean(points.iter().map(|p| p.0));
        let my = mean(points.iter().map(|p| p.1));
        let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
        if sxx == 0.0 {
            return None;
        }
        let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let slope = sxy / sxx;
        let intercept = my - slope * mx;
        let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
        let r2 = r_squared(&ys, points.iter().map(|p| slope * p.0 + intercept));
        Some(SlopeFit {
            points,
            slope,
            intercept,
            r_squared: r2,
        })
    }
}

/// Least-squares plane `ln cost = slope_n ln n + slope_d ln d + intercept`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JointFit {
    /// `(ln n, ln d, ln cost)`.
    pub points: Vec<(f64, f64, f64)>,
    pub slope_n: f64,
    pub slope_d: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

impl JointFit {
    /// Fits over `(n, d, cost)` triples. Needs points that separate `n`
    /// from `d`.
    pub fn fit_loglog(raw: &[(f64, f64, f64)]) -> Option<Self> {
        let points: Vec<(f64, f64, f64)> = raw.iter().map(|&(n, d, c)| (n.ln(), d.ln(), c.ln())).collect();
        // normal equations over columns (x, z, 1)
        let mut a = [[0.0; 3]; 3];
        let mut b = [0.0; 3];
        for &(x, z, y) in &points {
            let row = [x, z, 1.0];
            for i in 0..3 {
                for j in 0..3 {
                    a[i][j] += row[i] * row[j];
                }
                b[i] += row[i] * y;
            }
        }
        let det = det3(a);
        if det.abs() < 1e-9 {
            return None;
        }
        let solve = |col: usize| {
            let mut m = a;
            for i in 0..3 {
                m[i][col] = b[i];
            }
            det3(m) / det
        };
        let (slope_n, slope_d, intercept) = (solve(0), solve(1), solve(2));
        let ys: Vec<f64> = points.iter().map(|p| p.2).collect();
        let r2 = r_squared(&ys, points.iter().map(|p| slope_n * p.0 + slope_d * p.1 + intercept));
        Some(JointFit {
            points,
            slope_n,
            slope_d,
            intercept,
            r_squared: r2,
        })
    }
}
