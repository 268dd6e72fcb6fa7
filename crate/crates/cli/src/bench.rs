//! Median running times of `Aut` over Q on random maps, laid out as degree by height.

use std::time::Instant;

use autconj_core::projline::random_map_qq;
use autconj_core::qq::aut_qq;
use autconj_core::solver::Algorithm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct BenchSpec {
    pub degrees: Vec<usize>,
    pub heights: Vec<i64>,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub degree: usize,
    pub algorithm: String,
    /// Median milliseconds, one per height bound.
    pub median_ms: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub seed: u64,
    pub trials: usize,
    pub heights: Vec<i64>,
    pub rows: Vec<BenchRow>,
    /// Number of trial maps with a nontrivial automorphism group.
    pub nontrivial: usize,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

fn short_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Crt => "CRT",
        Algorithm::FixedPoints => "FP",
        _ => "?",
    }
}

/// Each (degree, height) cell draws its own maps from a seed derived from the run seed, and
/// every algorithm sees the same maps.
pub fn run_bench(spec: &BenchSpec) -> autconj_core::Result<BenchReport> {
    let mut rows = Vec::new();
    let mut nontrivial = 0;
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    for &d in &spec.degrees {
        let mut cells: Vec<Vec<f64>> = vec![Vec::new(); spec.algorithms.len()];
        for &h in &spec.heights {
            let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
            let maps: Vec<_> = (0..spec.trials).map(|_| random_map_qq(d, h, &mut rng)).collect();
            for (i, &alg) in spec.algorithms.iter().enumerate() {
                let mut times = Vec::with_capacity(maps.len());
                for phi in &maps {
                    let start = Instant::now();
                    let r = aut_qq(phi, alg)?;
                    times.push(start.elapsed().as_secs_f64() * 1e3);
                    if i == 0 && r.elements.len() > 1 {
                        nontrivial += 1;
                    }
                }
                cells[i].push(median(times));
            }
        }
        for (i, &alg) in spec.algorithms.iter().enumerate() {
            rows.push(BenchRow { degree: d, algorithm: short_name(alg).into(), median_ms: cells[i].clone() });
        }
    }
    Ok(BenchReport { seed: spec.seed, trials: spec.trials, heights: spec.heights.clone(), rows, nontrivial })
}

impl BenchReport {
    pub fn table(&self) -> String {
        let mut out = format!("median ms over {} random maps per cell, seed {}\n", self.trials, self.seed);
        out.push_str(&format!("{:>4} {:>4}", "d", "alg"));
        for h in &self.heights {
            out.push_str(&format!(" {:>12}", format!("H={h}")));
        }
        out.push('\n');
        let mut last = None;
        for row in &self.rows {
            let d = if last == Some(row.degree) { String::new() } else { row.degree.to_string() };
            last = Some(row.degree);
            out.push_str(&format!("{:>4} {:>4}", d, row.algorithm));
            for t in &row.median_ms {
                out.push_str(&format!(" {:>12.3}", t));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn table_shape() {
        let spec = BenchSpec { degrees: vec![2], heights: vec![10, 100], trials: 3, algorithms: vec![Algorithm::Crt, Algorithm::FixedPoints], seed: 7 };
        let r = run_bench(&spec).unwrap();
        let t = r.table();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].contains("H=10") && lines[1].contains("H=100"));
        assert!(lines[2].trim_start().starts_with("2  CRT"));
        assert!(lines[3].trim_start().starts_with("FP"));
    }
}
