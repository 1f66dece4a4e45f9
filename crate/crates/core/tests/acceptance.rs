//! Acceptance run: every criterion at zero tolerance, one PASS/FAIL line
//! each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use schur_division::alphabet::dual;
use schur_division::companion::{
    double_companion, giambelli_block, giambelli_general, houmu_ratio, ColumnRange, RecurrentSeq,
};
use schur_division::division::euclid_comparison;
use schur_division::exact::{det_bareiss, det_cofactor, rat};
use schur_division::laurent::{lagrange_interpolate, poly_divmod, PointValueSet};
use schur_division::schur::{gschur, schur_partition};
use schur_division::verify::{
    random_alphabet, random_rational, run_suite, trial_rng, VerifyConfig,
};
use schur_division::{Alphabet, Error, IndexVector, LaurentPoly, Matrix, Rational};

const SEED: u64 = 20_240_611;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suites(names: &[&str], trials: usize, nmax: usize) -> Outcome {
    let config = VerifyConfig {
        trials,
        seed: SEED,
        nmax,
        suites: Vec::new(),
        record_observations: false,
    };
    let mut summary = Vec::new();
    for name in names {
        let report = run_suite(name, &config).map_err(|e| e.to_string())?;
        if let Some(f) = report.failures.first() {
            return Err(format!(
                "{name}: {} of {} trials failed; first: trial {} {} inputs {}",
                report.failures.len(),
                report.trials,
                f.trial,
                f.detail,
                f.inputs
            ));
        }
        summary.push(format!("{name} x{}", report.trials));
    }
    Ok(summary.join(", "))
}

fn alphabet(v: &[i64]) -> Alphabet {
    Alphabet::new(v.iter().map(|&p| Rational::from(p)).collect()).unwrap()
}

fn inverse_power_forms() -> Outcome {
    suites(&["inverse-power-remainders"], 200, 6)
}

fn euclid_proportionality() -> Outcome {
    let (_, rows) =
        euclid_comparison(3, &alphabet(&[1, 2]), &alphabet(&[3])).map_err(|e| e.to_string())?;
    let scalars: Vec<Option<Rational>> = rows.iter().map(|r| r.scalar.clone()).collect();
    if scalars != [Some(rat(-1, 1)), Some(rat(4, 1))] {
        return Err(format!("calibration scalars {scalars:?}, expected [-1, 4]"));
    }
    suites(&["euclid-multischur"], 50, 5).map(|s| format!("{s}; calibration scalars -1, 4"))
}

fn giambelli_suites() -> Outcome {
    suites(&["giambelli-general", "giambelli-block"], 200, 6)
}

fn worked_example() -> Outcome {
    let j = IndexVector::new(vec![-4, -3, -2, 1, 3, 4]);
    let golden = [
        ["S_{12}(A^v)", "S_{14}(A^v)", "S_{1^4,4}(A)", "S_{1^4,2}(A)"],
        [
            "S_{112}(A^v)",
            "S_{114}(A^v)",
            "S_{1^3,4}(A)",
            "S_{1^3,2}(A)",
        ],
        [
            "S_{1^3,2}(A^v)",
            "S_{1^3,4}(A^v)",
            "S_{114}(A)",
            "S_{112}(A)",
        ],
        ["S_{1^5,2}(A^v)", "S_{1^5,4}(A^v)", "S_{4}(A)", "S_{2}(A)"],
    ];
    let mut rng = trial_rng(SEED, "worked-example", 0);
    for trial in 0..20 {
        let a = random_alphabet(&mut rng, 6);
        let err = |e: Error| format!("trial {trial}: {e}");
        let (blocks, block_value) = giambelli_block(&j, &a).map_err(err)?;
        if trial == 0 {
            let labels = blocks.labels.map(ToString::to_string).to_rows();
            if labels != golden {
                return Err(format!("label matrix {labels:?}"));
            }
        }
        let (_, general) = giambelli_general(&j, &a).map_err(err)?;
        let bialt = gschur(&j, &a).map_err(err)?;
        if block_value != bialt || general != bialt {
            return Err(format!(
                "trial {trial}: block {block_value}, general {general}, bialternant {bialt}"
            ));
        }
        let ad = dual(&a).map_err(err)?;
        let p = blocks.p.det().map_err(err)?;
        let n = blocks.n.det().map_err(err)?;
        let s234 = schur_partition(&IndexVector::new(vec![2, 3, 4]), &ad).map_err(err)?;
        let s134 = schur_partition(&IndexVector::new(vec![1, 3, 4]), &a).map_err(err)?;
        if p != s234 || n != s134 {
            return Err(format!(
                "trial {trial}: det P {p} vs {s234}, det N {n} vs {s134}"
            ));
        }
        if blocks.q.entries().iter().all(Zero::is_zero)
            || blocks.m.entries().iter().all(Zero::is_zero)
        {
            return Err(format!("trial {trial}: an off-diagonal block vanished"));
        }
    }
    Ok("golden 4x4 labels; 20 alphabets; det P = S_234(A^v), det N = S_134(A)".into())
}

fn companion_suites() -> Outcome {
    let range = ColumnRange::new(-6, 6).unwrap();
    let mut rng = trial_rng(SEED, "companion-columns", 0);
    for trial in 0..100 {
        let n = rng.gen_range(1..=6);
        let a = random_alphabet(&mut rng, n);
        double_companion(&a, range).map_err(|e| format!("trial {trial}: {e}"))?;
    }
    let s = suites(
        &[
            "companion-factorization",
            "companion-powers",
            "companion-minors",
        ],
        100,
        6,
    )?;
    Ok(format!("{s}; both column routes agree on 100 windows"))
}

fn structural_identities() -> Outcome {
    suites(
        &[
            "box-duality",
            "bialternant-partitions",
            "lagrange-reconstruction",
            "lagrange-inverse-powers",
            "lagrange-complete",
            "kernel-product",
            "companion-coefficients",
        ],
        200,
        6,
    )
}

fn recurrent_ratio() -> Outcome {
    let a = alphabet(&[1, 2, 3]);
    let seq = |w: &[i64]| {
        RecurrentSeq::new(w.iter().map(|&v| Rational::from(v)).collect(), 0, a.clone()).unwrap()
    };
    let seqs = [seq(&[1, 0, 2]), seq(&[0, 1, 1]), seq(&[1, 1, 3])];
    match houmu_ratio(&seqs, &IndexVector::new(vec![0, 1, 2])) {
        Err(Error::Degenerate(_)) => {}
        other => return Err(format!("dependent seeds gave {other:?}")),
    }
    suites(&["recurrent-ratio"], 100, 5)
        .map(|s| format!("{s}; dependent seeds raise the degeneracy error"))
}

// ---- naive oracles ----

fn leibniz(m: &[Vec<Rational>]) -> Rational {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let mut total = Rational::zero();
    for p in perms(n) {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = Rational::from(1);
        for (i, &c) in p.iter().enumerate() {
            term = term * m[i][c].clone();
        }
        total = if inversions % 2 == 0 {
            total + term
        } else {
            total - term
        };
    }
    total
}

/// Schoolbook division on dense coefficient vectors, lowest degree first.
fn long_division(f: &[Rational], g: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let mut q = vec![Rational::zero(); f.len().saturating_sub(dg).max(1)];
    for d in (dg..f.len()).rev() {
        let c = r[d].clone() / g[dg].clone();
        for (i, gi) in g.iter().enumerate() {
            r[d - dg + i] = r[d - dg + i].clone() - c.clone() * gi.clone();
        }
        q[d - dg] = c;
    }
    r.truncate(dg);
    (q, r)
}

fn dense(p: &LaurentPoly, len: usize) -> Vec<Rational> {
    (0..len as i64).map(|d| p.coeff(d)).collect()
}

fn random_dense(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.2) {
                Rational::zero()
            } else {
                random_rational(rng)
            }
        })
        .collect()
}

fn oracle_floor() -> Outcome {
    let mut rng = trial_rng(SEED, "oracle-floor", 0);
    for trial in 0..500 {
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<Rational>> = (0..n).map(|_| random_dense(&mut rng, n)).collect();
        let m = Matrix::from_rows(rows.clone()).unwrap();
        let naive = leibniz(&rows);
        if det_bareiss(&m) != naive || det_cofactor(&m) != naive {
            return Err(format!("det trial {trial}: {rows:?}"));
        }
    }
    for trial in 0..500 {
        let k = rng.gen_range(1..=6);
        let nodes = random_alphabet(&mut rng, k).letters().to_vec();
        let values = random_dense(&mut rng, k);
        let pv = PointValueSet::new(nodes.iter().cloned().zip(values.iter().cloned()).collect())
            .unwrap();
        let p = lagrange_interpolate(&pv).map_err(|e| e.to_string())?;
        // Cramer's rule on the Vandermonde system.
        let vander: Vec<Vec<Rational>> = nodes
            .iter()
            .map(|x| (0..k as i64).map(|e| x.pow(e).unwrap()).collect())
            .collect();
        let dv = leibniz(&vander);
        for col in 0..k {
            let mut replaced = vander.clone();
            for (row, v) in replaced.iter_mut().zip(&values) {
                row[col] = v.clone();
            }
            if p.coeff(col as i64) != leibniz(&replaced) / dv.clone() {
                return Err(format!(
                    "interpolation trial {trial}: nodes {nodes:?} values {values:?}"
                ));
            }
        }
        if p.degree().is_some_and(|d| d >= k as i64) {
            return Err(format!("interpolation trial {trial}: degree too high"));
        }
    }
    for trial in 0..500 {
        let (lf, lg) = (rng.gen_range(1..=9), rng.gen_range(1..=5));
        let f = random_dense(&mut rng, lf);
        let mut g = random_dense(&mut rng, lg);
        *g.last_mut().unwrap() = random_rational(&mut rng);
        let (q, r) = poly_divmod(&LaurentPoly::from_dense(&f), &LaurentPoly::from_dense(&g))
            .map_err(|e| e.to_string())?;
        let (nq, nr) = long_division(&f, &g);
        let fits = |p: &LaurentPoly, len: usize| p.degree().is_none_or(|d| d < len as i64);
        if dense(&q, nq.len()) != nq
            || dense(&r, nr.len()) != nr
            || !fits(&q, nq.len())
            || !fits(&r, nr.len())
        {
            return Err(format!("division trial {trial}: f {f:?} g {g:?}"));
        }
    }
    Ok("Leibniz det, Cramer interpolation, schoolbook division x500 each".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("negative-power remainder forms", inverse_power_forms),
        (
            "Euclidean remainders vs multi-Schur",
            euclid_proportionality,
        ),
        ("hook and block Giambelli determinants", giambelli_suites),
        ("worked example J=[-4,-3,-2,1,3,4]", worked_example),
        ("double companion matrices", companion_suites),
        ("structural identities", structural_identities),
        ("recurrent-sequence ratio", recurrent_ratio),
        ("independent oracle floor", oracle_floor),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {} {name} ({detail}) [{:.1?}]", i + 1, start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
