//! Randomized exact verification of the identities implemented in this
//! crate.
//!
//! Every suite draws rational specializations from a ChaCha stream seeded by
//! `(seed, suite name, trial index)`, so trials are independent of each
//! other and of scheduling: a report is reproducible from its seed and
//! configuration alone. Letters are `p/q` with `p` uniform in
//! `[-50, 50] \ {0}` and `q` uniform in `[1, 20]`, rejection-sampled for
//! distinctness.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::{complete_sym, dual, prod_u, Alphabet, DiffArgument, Generator};
use crate::companion::{
    companion_submatrix, double_companion, double_vandermonde, giambelli_block, giambelli_general,
    houmu_ratio, vandermonde, vandermonde_minor, ColumnRange, RecurrentSeq,
};
use crate::division::{
    dual_resultant_poly, euclid_comparison, lagrange_functional, remainder_dual_resultant,
    remainder_inverse_power_dual, remainder_inverse_power_rectangular, remainder_laurent,
    remainder_x_pow, TailSymmetricExpr,
};
use crate::error::{Error, Result};
use crate::exact::{det_bareiss, det_cofactor, mat_mul, mat_pow_signed, Matrix, Rational};
use crate::laurent::{laurent_split, poly_divmod, remainder_via_interpolation, LaurentPoly};
use crate::schur::{
    box_complement, gschur, jacobi_trudi, multi_schur, schur_partition, IndexVector, MultiSchurSpec,
};

/// Names of all suites, in report order.
pub const SUITES: &[&str] = &[
    "inverse-power-remainders",
    "euclid-multischur",
    "giambelli-general",
    "giambelli-block",
    "companion-factorization",
    "companion-powers",
    "companion-minors",
    "companion-coefficients",
    "box-duality",
    "bialternant-partitions",
    "bialternant-symmetries",
    "lagrange-reconstruction",
    "lagrange-inverse-powers",
    "lagrange-complete",
    "kernel-product",
    "recurrent-ratio",
    "complete-series",
    "laurent-remainders",
    "determinants",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub nmax: usize,
    /// Empty means every suite.
    pub suites: Vec<String>,
    /// Attach per-trial observations (e.g. proportionality scalars).
    pub record_observations: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 200,
            seed: 1,
            nmax: 6,
            suites: Vec::new(),
            record_observations: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub inputs: Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of a verification run. `wall_time` is not serialized, so two
/// runs with the same configuration serialize identically.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub nmax: usize,
    pub suites: Vec<SuiteReport>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializing a report")
    }
}

pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    if config.nmax == 0 {
        return Err(Error::Config("nmax must be at least 1".into()));
    }
    for s in &config.suites {
        if !SUITES.contains(&s.as_str()) {
            return Err(Error::Config(format!(
                "unknown suite {s:?}; known suites: {}",
                SUITES.join(", ")
            )));
        }
    }
    let start = Instant::now();
    let suites = SUITES
        .iter()
        .filter(|s| config.suites.is_empty() || config.suites.iter().any(|c| c == *s))
        .map(|s| run_suite(s, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        seed: config.seed,
        trials: config.trials,
        nmax: config.nmax,
        suites,
        wall_time: start.elapsed(),
    })
}

struct TrialFailure {
    inputs: Value,
    detail: String,
}

type TrialResult = std::result::Result<Option<Value>, TrialFailure>;

fn fail(inputs: Value, detail: impl Into<String>) -> TrialResult {
    Err(TrialFailure {
        inputs,
        detail: detail.into(),
    })
}

/// Turns a kernel error into a trial failure carrying the inputs.
trait OrFail<T> {
    fn or_fail(self, inputs: &Value) -> std::result::Result<T, TrialFailure>;
}

impl<T> OrFail<T> for Result<T> {
    fn or_fail(self, inputs: &Value) -> std::result::Result<T, TrialFailure> {
        self.map_err(|e| TrialFailure {
            inputs: inputs.clone(),
            detail: format!("unexpected error: {e}"),
        })
    }
}

macro_rules! check_eq {
    ($inputs:expr, $left:expr, $right:expr, $what:expr) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return fail($inputs.clone(), format!("{}: {:?} != {:?}", $what, l, r));
        }
    }};
}

/// Runs one suite under `config`; `config.trials` counts random draws (per
/// shape for `euclid-multischur`).
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<SuiteReport> {
    let nmax = config.nmax;
    let trials = config.trials;
    let run = |count: usize, body: &(dyn Fn(&mut ChaCha8Rng, usize) -> TrialResult + Sync)| {
        collect(name, config, count, body)
    };
    let report = match name {
        "inverse-power-remainders" => run(trials, &|rng, _| inverse_power_trial(rng, nmax)),
        "euclid-multischur" => {
            let shapes = euclid_shapes(nmax);
            run(shapes.len() * trials, &|rng, t| {
                let (n, m) = shapes[t / trials];
                euclid_trial(rng, n, m)
            })
        }
        "giambelli-general" => run(trials, &|rng, _| giambelli_general_trial(rng, nmax)),
        "giambelli-block" => run(trials, &|rng, _| giambelli_block_trial(rng, nmax)),
        "companion-factorization" => run(trials, &|rng, _| factorization_trial(rng, nmax)),
        "companion-powers" => run(trials, &|rng, _| powers_trial(rng, nmax)),
        "companion-minors" => run(trials, &|rng, _| minors_trial(rng, nmax)),
        "companion-coefficients" => run(trials, &|rng, _| coefficients_trial(rng, nmax)),
        "box-duality" => run(trials, &|rng, _| box_duality_trial(rng, nmax)),
        "bialternant-partitions" => run(trials, &|rng, _| partitions_trial(rng, nmax)),
        "bialternant-symmetries" => run(trials, &|rng, _| symmetries_trial(rng, nmax)),
        "lagrange-reconstruction" => run(trials, &|rng, _| reconstruction_trial(rng, nmax)),
        "lagrange-inverse-powers" => run(trials, &|rng, _| functional_powers_trial(rng, nmax)),
        "lagrange-complete" => run(trials, &|rng, _| functional_complete_trial(rng, nmax)),
        "kernel-product" => run(trials, &|rng, _| kernel_product_trial(rng, nmax)),
        "recurrent-ratio" => run(trials, &|rng, _| recurrent_trial(rng, nmax.min(5))),
        "complete-series" => run(trials, &|rng, _| series_trial(rng, nmax)),
        "laurent-remainders" => run(trials, &|rng, _| laurent_trial(rng, nmax)),
        "determinants" => run(trials, &|rng, _| determinant_trial(rng)),
        other => return Err(Error::Config(format!("unknown suite {other:?}"))),
    };
    Ok(report)
}

fn collect(
    name: &str,
    config: &VerifyConfig,
    count: usize,
    body: &(dyn Fn(&mut ChaCha8Rng, usize) -> TrialResult + Sync),
) -> SuiteReport {
    let outcomes: Vec<TrialResult> = (0..count)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, name, t);
            body(&mut rng, t)
        })
        .collect();
    let mut failures = Vec::new();
    let mut observations = Vec::new();
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(Some(obs)) if config.record_observations => observations.push(obs),
            Ok(_) => {}
            Err(f) => failures.push(Failure {
                trial,
                inputs: f.inputs,
                detail: f.detail,
            }),
        }
    }
    SuiteReport {
        name: name.to_string(),
        trials: count,
        failures,
        observations,
    }
}

/// Independent stream for `(seed, suite, trial)`.
pub fn trial_rng(seed: u64, suite: &str, trial: usize) -> ChaCha8Rng {
    // FNV-1a over the suite name, stable across builds.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in suite.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(trial as u64);
    rng
}

// ---- random inputs ----

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut p: i64 = rng.gen_range(-50..=49);
    if p >= 0 {
        p += 1;
    }
    let q: i64 = rng.gen_range(1..=20);
    Rational::new(p, q).expect("positive denominator")
}

/// `n` distinct nonzero letters.
pub fn random_alphabet<R: Rng>(rng: &mut R, n: usize) -> Alphabet {
    let mut letters: Vec<Rational> = Vec::with_capacity(n);
    while letters.len() < n {
        let r = random_rational(rng);
        if !letters.contains(&r) {
            letters.push(r);
        }
    }
    Alphabet::new(letters).expect("distinct letters")
}

pub fn random_index<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> IndexVector {
    IndexVector::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

pub fn random_weakly_increasing<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> IndexVector {
    let mut v = random_index(rng, n, lo, hi).0;
    v.sort_unstable();
    IndexVector::new(v)
}

/// Random Laurent polynomial supported in `[vmin, dmax]`.
pub fn random_laurent<R: Rng>(rng: &mut R, vmin: i64, dmax: i64) -> LaurentPoly {
    let terms = rng.gen_range(1..=4);
    LaurentPoly::from_terms((0..terms).map(|_| (rng.gen_range(vmin..=dmax), random_rational(rng))))
}

fn alph(a: &Alphabet) -> Value {
    json!(a
        .letters()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>())
}

fn size<R: Rng>(rng: &mut R, lo: usize, nmax: usize) -> usize {
    rng.gen_range(lo..=nmax.max(lo))
}

// ---- suites ----

fn inverse_power_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let k: i64 = rng.gen_range(0..=10);
    let a = random_alphabet(rng, n);
    let m = rng.gen_range(0..=5);
    let b = random_alphabet(rng, m);
    let inputs = json!({"n": n, "k": k, "A": alph(&a), "B": alph(&b)});

    let oracle = remainder_via_interpolation(&LaurentPoly::x_pow(-k), &a).or_fail(&inputs)?;
    let rect = remainder_inverse_power_rectangular(k, &a).or_fail(&inputs)?;
    let dual_form = remainder_inverse_power_dual(k, &a).or_fail(&inputs)?;
    let routed = remainder_x_pow(-k, &a).or_fail(&inputs)?;
    check_eq!(inputs, rect, oracle, "rectangular form vs interpolation");
    check_eq!(inputs, dual_form, oracle, "dual form vs interpolation");
    check_eq!(inputs, routed, oracle, "remainder_x_pow vs interpolation");

    let f = dual_resultant_poly(&b);
    let oracle = remainder_via_interpolation(&f, &a).or_fail(&inputs)?;
    let closed = remainder_dual_resultant(&a, &b).or_fail(&inputs)?;
    let linear = remainder_laurent(&f, &a).or_fail(&inputs)?;
    check_eq!(
        inputs,
        closed,
        oracle,
        "dual resultant form vs interpolation"
    );
    check_eq!(inputs, linear, oracle, "linear extension vs interpolation");
    Ok(None)
}

/// `(n, m)` with `1 <= n <= min(nmax, 5)` and `n <= m <= 9`.
pub fn euclid_shapes(nmax: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for n in 1..=nmax.min(5) {
        for m in n as i64..=9 {
            out.push((n, m));
        }
    }
    out
}

fn euclid_trial(rng: &mut ChaCha8Rng, n: usize, m: i64) -> TrialResult {
    let a = random_alphabet(rng, n);
    let b = random_alphabet(rng, m as usize);
    let inputs = json!({"n": n, "m": m, "A": alph(&a), "B": alph(&b)});
    let (_, rows) = euclid_comparison(m, &a, &b).or_fail(&inputs)?;
    for row in &rows {
        if row.scalar.is_none() {
            return fail(
                inputs,
                format!(
                    "r={}: formula {} is not proportional to remainder {}",
                    row.r, row.formula, row.remainder
                ),
            );
        }
        if row.formula.degree().unwrap_or(0) > (n - row.r) as i64 {
            return fail(inputs, format!("r={}: formula degree too high", row.r));
        }
    }
    let scalars: Vec<String> = rows
        .iter()
        .map(|r| {
            r.scalar
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default()
        })
        .collect();
    Ok(Some(
        json!({"n": n, "m": m, "A": alph(&a), "B": alph(&b), "scalars": scalars}),
    ))
}

fn giambelli_general_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let j = random_index(rng, n, -6, 6);
    let inputs = json!({"J": j, "A": alph(&a)});
    let (_, value) = giambelli_general(&j, &a).or_fail(&inputs)?;
    let expected = gschur(&j, &a).or_fail(&inputs)?;
    check_eq!(inputs, value, expected, "hook determinant vs bialternant");
    Ok(None)
}

fn giambelli_block_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let j = random_weakly_increasing(rng, n, -6, 6);
    let inputs = json!({"J": j, "A": alph(&a)});
    let (blocks, value) = giambelli_block(&j, &a).or_fail(&inputs)?;
    let expected = gschur(&j, &a).or_fail(&inputs)?;
    check_eq!(inputs, value, expected, "block determinant vs bialternant");
    let reassembled = blocks.assembled().det().or_fail(&inputs)?;
    check_eq!(inputs, reassembled, expected, "reassembled blocks");
    Ok(None)
}

fn factorization_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let inputs = json!({"A": alph(&a), "cols": "-6..6"});
    let range = ColumnRange::new(-6, 6).or_fail(&inputs)?;
    let c = double_companion(&a, range).or_fail(&inputs)?;
    let lhs = mat_mul(&vandermonde(&a), &c).or_fail(&inputs)?;
    let rhs = double_vandermonde(&a, range).or_fail(&inputs)?;
    check_eq!(inputs, lhs, rhs, "V0 * C vs double Vandermonde");
    Ok(None)
}

fn powers_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let inputs = json!({"A": alph(&a)});
    let c1 = companion_submatrix(&a, &IndexVector::constant(1, n)).or_fail(&inputs)?;
    for m in -4..=4 {
        let pow = mat_pow_signed(&c1, m).or_fail(&inputs)?;
        let direct = companion_submatrix(&a, &IndexVector::constant(m, n)).or_fail(&inputs)?;
        check_eq!(inputs, pow, direct, format!("companion power {m}"));
    }
    Ok(None)
}

fn minors_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let j = random_index(rng, n, -6, 6);
    let inputs = json!({"J": j, "A": alph(&a)});
    let cj = companion_submatrix(&a, &j).or_fail(&inputs)?;
    let lhs = mat_mul(&vandermonde(&a), &cj)
        .or_fail(&inputs)?
        .det()
        .or_fail(&inputs)?;
    let rhs = vandermonde_minor(&a, &j).or_fail(&inputs)?;
    check_eq!(inputs, lhs, rhs, "|V0 C_J| vs Vandermonde minor");
    Ok(None)
}

fn coefficients_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let k: i64 = rng.gen_range(0..=12);
    let inputs = json!({"k": k, "A": alph(&a)});
    let r = remainder_x_pow(k, &a).or_fail(&inputs)?;
    for l in 1..=n {
        let j = IndexVector::constant(1, n - l).concat(&[k - n as i64 + 1]);
        let expected =
            Rational::sign_power((n - l) as i64) * jacobi_trudi(&j, &a).or_fail(&inputs)?;
        check_eq!(
            inputs,
            r.coeff(l as i64 - 1),
            expected,
            format!("coefficient of x^{}", l - 1)
        );
    }
    Ok(None)
}

fn box_duality_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let m: i64 = rng.gen_range(0..=6);
    let i = random_weakly_increasing(rng, n, 0, m);
    let inputs = json!({"I": i, "m": m, "A": alph(&a)});
    let j = box_complement(&i, m, n).or_fail(&inputs)?;
    let ad = dual(&a).or_fail(&inputs)?;
    let lhs = gschur(&i, &ad).or_fail(&inputs)?;
    let rhs = gschur(&j, &a).or_fail(&inputs)? * prod_u(&a).pow(-m).or_fail(&inputs)?;
    check_eq!(inputs, lhs, rhs, "S_I(A^v) vs S_J(A) u^-m");
    Ok(None)
}

fn partitions_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let j = random_weakly_increasing(rng, n, 0, 6);
    let inputs = json!({"J": j, "A": alph(&a)});
    let bialt = gschur(&j, &a).or_fail(&inputs)?;
    let jt = jacobi_trudi(&j, &a).or_fail(&inputs)?;
    check_eq!(inputs, bialt, jt, "bialternant vs Jacobi-Trudi");
    let neg = gschur(&j.negated(), &a).or_fail(&inputs)?;
    let ad = dual(&a).or_fail(&inputs)?;
    let rev = gschur(&j.reversed(), &ad).or_fail(&inputs)?;
    check_eq!(inputs, neg, rev, "G_{-J}(A) vs G_{J^w}(A^v)");
    Ok(None)
}

fn symmetries_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 2, nmax);
    let a = random_alphabet(rng, n);
    let mut j = random_index(rng, n, -6, 6);
    let inputs = json!({"J": j, "A": alph(&a)});
    let value = gschur(&j, &a).or_fail(&inputs)?;

    // Letter permutations leave the value unchanged.
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let permuted = gschur(&j, &a.permuted(&perm)).or_fail(&inputs)?;
    check_eq!(inputs, permuted, value, "letter permutation");

    // Swapping exponents e_l = j_l + l - 1 at positions p < q negates.
    let p = rng.gen_range(0..n - 1);
    let q = rng.gen_range(p + 1..n);
    let (ep, eq) = (j[p] + p as i64, j[q] + q as i64);
    let mut swapped = j.clone();
    swapped.0[p] = eq - p as i64;
    swapped.0[q] = ep - q as i64;
    let v = gschur(&swapped, &a).or_fail(&inputs)?;
    check_eq!(inputs, v, -value.clone(), "exponent swap");

    // Forcing a collision gives exactly zero.
    j.0[q] = ep - q as i64;
    let collided = gschur(&j, &a).or_fail(&inputs)?;
    check_eq!(inputs, collided, Rational::zero(), "exponent collision");
    Ok(None)
}

fn reconstruction_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let r = LaurentPoly::from_dense(&(0..n).map(|_| random_rational(rng)).collect::<Vec<_>>());
    let inputs = json!({"A": alph(&a), "r": r});
    let back =
        lagrange_functional(&TailSymmetricExpr::reconstruction(r.clone()), &a).or_fail(&inputs)?;
    check_eq!(inputs, back, r, "Lagrange reconstruction");
    Ok(None)
}

fn functional_powers_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let k: i64 = rng.gen_range(1..=10);
    let inputs = json!({"k": k, "A": alph(&a)});
    let lhs = lagrange_functional(&TailSymmetricExpr::head_power(-k), &a).or_fail(&inputs)?;
    let sign = Rational::sign_power(n as i64 - 1);
    let u = prod_u(&a);
    let rect = schur_partition(&IndexVector::constant(k - 1, n - 1), &a).or_fail(&inputs)?;
    let via_rect = &sign * u.pow(-k).or_fail(&inputs)? * rect;
    let ad = dual(&a).or_fail(&inputs)?;
    let h = complete_sym(k - 1, &DiffArgument::alphabet(&ad));
    let via_dual = h.scale(&(&sign * u.pow(-1).or_fail(&inputs)?));
    check_eq!(
        inputs,
        lhs,
        LaurentPoly::constant(via_rect),
        "L_A(x1^-k) vs rectangle"
    );
    check_eq!(inputs, lhs, via_dual, "L_A(x1^-k) vs dual complete");
    Ok(None)
}

fn functional_complete_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    // With a single letter L_A(1) = 1 adds S_k(-B), so the identity needs n >= 2.
    let n = size(rng, 2, nmax);
    let a = random_alphabet(rng, n);
    let k: i64 = rng.gen_range(1..=10);
    let mb = rng.gen_range(0..=5);
    let b = random_alphabet(rng, mb);
    let inputs = json!({"k": k, "A": alph(&a), "B": alph(&b)});
    let lhs = lagrange_functional(&TailSymmetricExpr::head_dual_complete(k, b.clone()), &a)
        .or_fail(&inputs)?;
    let ad = dual(&a).or_fail(&inputs)?;
    let factor = Rational::sign_power(n as i64 - 1) * prod_u(&a).pow(-1).or_fail(&inputs)?;
    let rhs = complete_sym(k - 1, &DiffArgument::of(&ad, &b)).scale(&factor);
    check_eq!(inputs, lhs, rhs, "L_A(S_k(x1^-1 - B))");
    Ok(None)
}

fn kernel_product_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let xs = random_alphabet(rng, n);
    let mb = rng.gen_range(0..=4);
    let b = random_alphabet(rng, mb);
    let m = b.len() as i64;
    let inputs = json!({"X": alph(&xs), "B": alph(&b)});
    let x1 = &xs.letters()[0];
    let x1_inv = x1.recip().or_fail(&inputs)?;
    let lhs = LaurentPoly::root_polynomial(&xs.without(0))
        .scale(&b.letters().iter().map(|l| &x1_inv - l).product());
    let xd = dual(&xs).or_fail(&inputs)?;
    let mut columns = vec![DiffArgument::alphabet(&xd).with_minus(Generator::XInv); n - 1];
    columns.push(DiffArgument::of(&Alphabet::empty(), &b).with_plus(Generator::Scalar(x1_inv)));
    let j = IndexVector::constant(1, n - 1).concat(&[m + 1]);
    let det = multi_schur(&MultiSchurSpec::new(j, columns)).or_fail(&inputs)?;
    let rhs = det.shift(n as i64 - 1).scale(&prod_u(&xs));
    check_eq!(inputs, lhs, rhs, "kernel product identity");
    Ok(None)
}

fn recurrent_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let j = random_index(rng, n, -6, 6);
    let base: i64 = rng.gen_range(-3..=3);
    let singular = n >= 2 && rng.gen_bool(0.2);
    let mut windows: Vec<Vec<Rational>> = (0..n)
        .map(|_| (0..n).map(|_| random_rational(rng)).collect())
        .collect();
    if singular {
        // Last seed becomes a combination of the first two.
        let c = random_rational(rng);
        windows[n - 1] = windows[0]
            .iter()
            .zip(&windows[1])
            .map(|(p, q)| p + &c * q)
            .collect();
    }
    let inputs = json!({"A": alph(&a), "J": j, "base": base, "singular": singular,
        "seeds": windows.iter().map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()});
    let seqs = windows
        .into_iter()
        .map(|w| {
            let head = RecurrentSeq::new(w, base, a.clone())?;
            let full = (0..2 * n as i64)
                .map(|i| head.term(base + i))
                .collect::<Result<Vec<_>>>()?;
            RecurrentSeq::new(full, base, a.clone())
        })
        .collect::<Result<Vec<_>>>()
        .or_fail(&inputs)?;
    let den = Matrix::try_from_fn(n, n, |k, l| seqs[k].term(l as i64))
        .and_then(|m| m.det())
        .or_fail(&inputs)?;
    match houmu_ratio(&seqs, &j) {
        Ok(v) => {
            if den.is_zero() {
                return fail(inputs, "singular seeds produced a value");
            }
            let expected = gschur(&j, &a).or_fail(&inputs)?;
            check_eq!(inputs, v, expected, "recurrent ratio vs bialternant");
        }
        Err(Error::Degenerate(_)) if den.is_zero() => {}
        Err(e) => return fail(inputs, format!("unexpected error: {e}")),
    }
    Ok(None)
}

fn series_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    const K: usize = 8;
    let gen = |rng: &mut ChaCha8Rng| match rng.gen_range(0..6) {
        0 => Generator::X,
        1 => Generator::XInv,
        _ => Generator::Scalar(random_rational(rng)),
    };
    let plus: Vec<Generator> = (0..rng.gen_range(0..=4)).map(|_| gen(rng)).collect();
    let minus: Vec<Generator> = (0..rng.gen_range(0..=4)).map(|_| gen(rng)).collect();
    let arg = DiffArgument::new(plus.clone(), minus.clone());
    let neg = DiffArgument::new(minus, plus);
    let inputs = json!({"arg": arg.to_string()});
    let s = arg.series(K);
    let t = neg.series(K);
    for d in 0..=K {
        let c = (0..=d).fold(LaurentPoly::zero(), |acc, i| acc + &s[i] * &t[d - i]);
        let expected = if d == 0 {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
        check_eq!(inputs, c, expected, format!("z^{d} of the series product"));
    }

    let n = size(rng, 0, nmax);
    let a = random_alphabet(rng, n);
    let inputs = json!({"A": alph(&a)});
    let s = complete_sym(
        n as i64,
        &DiffArgument::of(&Alphabet::empty(), &a).with_plus(Generator::X),
    );
    check_eq!(
        inputs,
        s,
        LaurentPoly::root_polynomial(&a),
        "S^n(x - A) vs R(x, A)"
    );
    Ok(None)
}

fn laurent_trial(rng: &mut ChaCha8Rng, nmax: usize) -> TrialResult {
    let n = size(rng, 1, nmax);
    let a = random_alphabet(rng, n);
    let f = random_laurent(rng, -6, 8);
    let g = random_laurent(rng, -6, 8);
    let (alpha, beta) = (random_rational(rng), random_rational(rng));
    let inputs = json!({"A": alph(&a), "f": f, "g": g});

    let r = remainder_via_interpolation(&f, &a).or_fail(&inputs)?;
    if r.degree().is_some_and(|d| d >= n as i64) || !r.is_polynomial() {
        return fail(inputs, format!("remainder {r} has the wrong support"));
    }
    for l in a.letters() {
        check_eq!(
            inputs,
            r.eval(l).or_fail(&inputs)?,
            f.eval(l).or_fail(&inputs)?,
            "r(a) vs f(a)"
        );
    }
    check_eq!(
        inputs,
        remainder_laurent(&f, &a).or_fail(&inputs)?,
        r,
        "closed form vs interpolation"
    );

    let (f1, f2) = laurent_split(&f);
    check_eq!(inputs, &f1 + &f2, f, "split and resum");

    let rg = remainder_via_interpolation(&g, &a).or_fail(&inputs)?;
    let combo = f.scale(&alpha) + g.scale(&beta);
    let rc = remainder_via_interpolation(&combo, &a).or_fail(&inputs)?;
    check_eq!(inputs, rc, r.scale(&alpha) + rg.scale(&beta), "linearity");

    let (p, _) = laurent_split(&f);
    let (_, rem) = poly_divmod(&p, &LaurentPoly::root_polynomial(&a)).or_fail(&inputs)?;
    check_eq!(
        inputs,
        remainder_via_interpolation(&p, &a).or_fail(&inputs)?,
        rem,
        "interpolation vs division"
    );
    Ok(None)
}

fn determinant_trial(rng: &mut ChaCha8Rng) -> TrialResult {
    let n = rng.gen_range(1..=5);
    let random_matrix = |rng: &mut ChaCha8Rng| {
        Matrix::from_fn(n, n, |_, _| {
            if rng.gen_bool(0.2) {
                Rational::zero()
            } else {
                random_rational(rng)
            }
        })
    };
    let a = random_matrix(rng);
    let b = random_matrix(rng);
    let inputs = json!({"a": a.to_rows(), "b": b.to_rows()});
    let da = det_bareiss(&a);
    check_eq!(inputs, da, det_cofactor(&a), "Bareiss vs cofactor");
    let ab = mat_mul(&a, &b).or_fail(&inputs)?;
    check_eq!(
        inputs,
        det_bareiss(&ab),
        &da * &det_bareiss(&b),
        "det(ab) vs det(a) det(b)"
    );
    if !da.is_zero() {
        let e: i64 = rng.gen_range(1..=3);
        let prod = mat_mul(
            &mat_pow_signed(&a, e).or_fail(&inputs)?,
            &mat_pow_signed(&a, -e).or_fail(&inputs)?,
        )
        .or_fail(&inputs)?;
        check_eq!(inputs, prod, Matrix::identity(n), "a^e a^-e");
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suites: &[&str]) -> VerifyConfig {
        VerifyConfig {
            trials: 10,
            seed: 7,
            nmax: 4,
            suites: suites.iter().map(|s| s.to_string()).collect(),
            record_observations: false,
        }
    }

    #[test]
    fn every_suite_passes_a_short_run() {
        let report = run_verify(&quick(&[])).unwrap();
        assert_eq!(report.suites.len(), SUITES.len());
        for s in &report.suites {
            assert!(s.passed(), "{}: {:?}", s.name, s.failures.first());
        }
    }

    #[test]
    fn filter_and_config_errors() {
        let report = run_verify(&quick(&["inverse-power-remainders"])).unwrap();
        assert_eq!(report.suites.len(), 1);
        assert!(matches!(
            run_verify(&quick(&["nope"])),
            Err(Error::Config(_))
        ));
        let mut c = quick(&[]);
        c.trials = 0;
        assert!(matches!(run_verify(&c), Err(Error::Config(_))));
    }

    #[test]
    fn reports_are_reproducible() {
        let c = quick(&["giambelli-block", "recurrent-ratio"]);
        let a = run_verify(&c).unwrap().to_json();
        let b = run_verify(&c).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn letters_in_range() {
        let mut rng = trial_rng(3, "x", 0);
        for _ in 0..500 {
            let r = random_rational(&mut rng);
            assert!(!r.is_zero());
            assert!(r.denom() <= &20.into());
            assert!(r.abs() <= Rational::from(50));
        }
    }
}
