//! Exhaustive property checks over sweeps of dimension vectors.
//!
//! Every dimension vector with `1 <= n <= max_n` and entries in
//! `0..=max_entry` is checked. Properties that need exact linear algebra use a
//! smaller sweep. Work is spread over a rayon pool (`QF_THREADS` caps the
//! thread count, `0` or unset means automatic); results are gathered in sweep
//! order, so the report does not depend on scheduling.
//!
//! When a property fails, the reported counterexample comes from the smallest
//! failing dimension vector (by `n`, then total size, then entries) and is the
//! first failing array of it in enumeration order.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dims::{fiber_dim, flag_dim, orbit_dim};
use crate::enumerate::enumerate;
use crate::geometry::{
    commuting_basis, endomorphism_dim, generic_orbit, jordan_rep, orbit_label, OracleParams, RationalMatrix,
};
use crate::multisegment::{nu, nu_bar, Multisegment};
use crate::order::{leq_chutewise_unchecked, leq_geometric, OrderMethod};
use crate::transform::{
    adjoin_chute, can_lower, can_raise, del_chute, inv_i, inv_k, iterate_a, lower, proc_a, proc_b, raise, top,
    transform_t, transform_t_prime, transform_t_prime_with_q_sequences, ExtendedIndex, StepState, Trace,
};
use crate::triangle::{parse_triangle, DimVector, TriangularArray};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_entry: u32,
    pub geometry_max_n: usize,
    pub geometry_max_entry: u32,
    pub oracle: OracleParams,
}

impl VerifyConfig {
    /// Geometric properties are capped at `n <= 3`, entries `<= 2`.
    pub fn new(max_n: usize, max_entry: u32) -> Self {
        VerifyConfig {
            max_n,
            max_entry,
            geometry_max_n: max_n.min(3),
            geometry_max_entry: max_entry.min(2),
            oracle: OracleParams::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Full,
    Geometry,
}

/// The outcome of one property on one dimension vector.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub checked: u64,
    pub failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
        ok
    }
}

/// All arrays of one dimension vector, with the chutewise order cached.
pub struct Case {
    pub w: DimVector,
    pub elements: Vec<TriangularArray>,
    leq: OnceLock<Vec<bool>>,
}

impl Case {
    pub fn new(w: DimVector) -> Self {
        let elements = enumerate(&w);
        Case { w, elements, leq: OnceLock::new() }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        let m = self.elements.len();
        let table = self.leq.get_or_init(|| {
            let mut t = vec![false; m * m];
            for (a, y) in self.elements.iter().enumerate() {
                for (b, z) in self.elements.iter().enumerate() {
                    t[a * m + b] = leq_chutewise_unchecked(y, z);
                }
            }
            t
        });
        table[a * m + b]
    }
}

type CheckFn = fn(&Case, &VerifyConfig) -> Tally;

pub struct Property {
    pub name: &'static str,
    pub description: &'static str,
    pub sweep: Sweep,
    check: CheckFn,
}

impl Property {
    pub fn run(&self, case: &Case, config: &VerifyConfig) -> Tally {
        (self.check)(case, config)
    }
}

pub fn properties() -> Vec<Property> {
    use Sweep::*;
    let p = |name, description, sweep, check: CheckFn| Property { name, description, sweep, check };
    vec![
        p("bijection", "nu_bar(nu(Y)) = Y and nu(nu_bar(b)) = b", Full, check_bijection),
        p("cardinality", "|P(w)| = |P(w*)|", Full, check_cardinality),
        p("order_equivalence", "chutewise, segment and coweight orders agree", Full, check_order_equivalence),
        p("partial_order", "chutewise order is reflexive, antisymmetric, transitive", Full, check_partial_order),
        p("dim_monotone", "Y < Z implies dim O_Y < dim O_Z", Full, check_dim_monotone),
        p("top_bottom", "unique maximum has dim E(w), column-1 array has dim 0", Full, check_top_bottom),
        p("flag_fiber", "orbit_dim = flag_dim + fiber_dim", Full, check_flag_fiber),
        p("transform_inverse", "T'(T(Y)) = Y and T(T'(Y)) = Y", Full, check_transform_inverse),
        p("transform_equality", "T(Y) = T'(Y)", Full, check_transform_equality),
        p("transform_involution", "T(T(Y)) = Y", Full, check_transform_involution),
        p("transform_udim", "udim T(Y) = w*", Full, check_transform_udim),
        p("b_then_a", "a iterated q times from B(Y, k) returns (Y, 0, I(Y, k))", Full, check_b_then_a),
        p("b_dim_drop", "udim B(Y, k) = udim Y - e_1 - ... - e_q", Full, check_b_dim_drop),
        p("q_decreasing", "q-sequences in T' are weakly decreasing", Full, check_q_decreasing),
        p("k_shift", "K_i(Y, k) = K_{i-1}(del_chute Y, k)", Full, check_k_shift),
        p("a_del_chute", "a commutes with del_chute for i > 1", Full, check_a_del_chute),
        p("raise_lower", "raise and lower are mutually inverse", Full, check_raise_lower),
        p("parse_format", "text and JSON round trips", Full, check_parse_format),
        p("jordan_round_trip", "orbit_label(jordan_rep(Y)) = Y", Geometry, check_jordan_round_trip),
        p("stabilizer_dim", "orbit_dim = sum w_i^2 - dim End", Geometry, check_stabilizer_dim),
        p("commuting_dim_invariant", "dim C(x) is constant on orbits", Geometry, check_commuting_invariant),
        p("monotone_sampling", "every oracle sample lies below the returned label", Geometry, check_monotone_sampling),
        p("oracle_agreement", "fourier_oracle(Y) = T(Y)", Geometry, check_oracle_agreement),
        p("oracle_involution", "fourier_oracle(fourier_oracle(Y)) = Y", Geometry, check_oracle_involution),
    ]
}

/// Every `w` with `1 <= n <= max_n` and entries in `0..=max_entry`, ordered
/// by `n`, then total size, then entries.
pub fn dimension_vectors(max_n: usize, max_entry: u32) -> Vec<DimVector> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut v = vec![0u32; n];
        'odometer: loop {
            out.push(DimVector::new(v.clone()).expect("n >= 1"));
            for pos in (0..n).rev() {
                if v[pos] < max_entry {
                    v[pos] += 1;
                    continue 'odometer;
                }
                v[pos] = 0;
            }
            break;
        }
    }
    out.sort_by_key(sweep_key);
    out
}

fn sweep_key(w: &DimVector) -> (usize, u64, Vec<u32>) {
    (w.len(), w.entries().iter().map(|&v| v as u64).sum(), w.entries().to_vec())
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub description: &'static str,
    pub checked: u64,
    pub dimension_vectors: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub max_entry: u32,
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            let status = if p.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {:<24} {} checks over {} dimension vectors", p.name, p.checked, p.dimension_vectors)?;
            if let Some(c) = &p.counterexample {
                writeln!(f, "     counterexample: {c}")?;
            }
        }
        let failed = self.properties.iter().filter(|p| !p.passed).count();
        write!(
            f,
            "verify: max_n={} max_entry={}: {} properties, {} passed, {} failed",
            self.max_n,
            self.max_entry,
            self.properties.len(),
            self.properties.len() - failed,
            failed
        )
    }
}

/// Thread count from `QF_THREADS`; `0`, unset or unparsable means automatic.
pub fn thread_count() -> usize {
    std::env::var("QF_THREADS").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}

/// Runs `f` on a pool sized by `QF_THREADS`.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(thread_count()).build().expect("thread pool");
    pool.install(f)
}

/// Runs every property.
pub fn run(config: &VerifyConfig) -> Report {
    run_selected(config, &[])
}

/// Runs the named properties (all of them when `names` is empty).
pub fn run_selected(config: &VerifyConfig, names: &[&str]) -> Report {
    let selected: Vec<Property> =
        properties().into_iter().filter(|p| names.is_empty() || names.contains(&p.name)).collect();
    let full = dimension_vectors(config.max_n, config.max_entry);
    let geometry: HashSet<Vec<u32>> = dimension_vectors(config.geometry_max_n, config.geometry_max_entry)
        .into_iter()
        .map(|w| w.entries().to_vec())
        .collect();

    let per_w: Vec<Vec<Option<Tally>>> = with_pool(|| {
        full.par_iter()
            .map(|w| {
                let case = Case::new(w.clone());
                let in_geometry = geometry.contains(w.entries());
                selected
                    .iter()
                    .map(|p| match p.sweep {
                        Sweep::Geometry if !in_geometry => None,
                        _ => Some(p.run(&case, config)),
                    })
                    .collect()
            })
            .collect()
    });

    let properties = selected
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let mut checked = 0;
            let mut count = 0;
            let mut counterexample = None;
            for (w, row) in full.iter().zip(&per_w) {
                if let Some(t) = &row[k] {
                    checked += t.checked;
                    count += 1;
                    if counterexample.is_none() {
                        if let Some(detail) = &t.failure {
                            counterexample = Some(format!("w = ({w}): {detail}"));
                        }
                    }
                }
            }
            PropertyReport {
                name: p.name,
                description: p.description,
                checked,
                dimension_vectors: count,
                passed: counterexample.is_none(),
                counterexample,
            }
        })
        .collect();
    Report { max_n: config.max_n, max_entry: config.max_entry, properties }
}

/// Multisegments with dimension vector `w`, built segment by segment without
/// reference to triangular arrays.
pub fn multisegments(w: &DimVector) -> Vec<Multisegment> {
    fn go(w: &[u32], h: usize, open: &mut Vec<u32>, b: &mut Multisegment, out: &mut Vec<Multisegment>) {
        let n = w.len();
        // open[i - 1] segments start at i and still cover vertex h - 1
        if h > n {
            let mut done = b.clone();
            for i in 1..=n {
                done.set(i, n, done.get(i, n) + open[i - 1]);
            }
            out.push(done);
            return;
        }
        fn close(
            w: &[u32],
            h: usize,
            i: usize,
            open: &mut Vec<u32>,
            b: &mut Multisegment,
            out: &mut Vec<Multisegment>,
        ) {
            if i == h {
                let continuing: u32 = open[..h - 1].iter().sum();
                if continuing > w[h - 1] {
                    return;
                }
                open.push(w[h - 1] - continuing);
                go(w, h + 1, open, b, out);
                open.pop();
                return;
            }
            let available = open[i - 1];
            for e in 0..=available {
                open[i - 1] = available - e;
                b.set(i, h - 1, e);
                close(w, h, i + 1, open, b, out);
            }
            open[i - 1] = available;
            b.set(i, h - 1, 0);
        }
        close(w, h, 1, open, b, out);
    }
    let mut out = Vec::new();
    let mut b = Multisegment::zero(w.len());
    go(w.entries(), 1, &mut Vec::new(), &mut b, &mut out);
    out
}

fn check_bijection(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for y in &case.elements {
        let b = nu(y);
        if !t.check(nu_bar(&b) == *y && b.dim_vector() == case.w, || format!("nu_bar(nu({y})) = {}", nu_bar(&b))) {
            return t;
        }
    }
    let all = multisegments(&case.w);
    t.check(all.len() == case.elements.len(), || {
        format!("{} multisegments but {} arrays", all.len(), case.elements.len())
    });
    for b in &all {
        let y = nu_bar(b);
        let ok = TriangularArray::from_chutes(y.chutes().to_vec()).is_ok() && nu(&y) == *b;
        if !t.check(ok, || format!("nu(nu_bar({b})) differs, nu_bar = {y}")) {
            break;
        }
    }
    t
}

fn check_cardinality(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let dual = crate::enumerate::count(&case.w.reverse());
    t.check(dual == case.elements.len(), || format!("|P(w)| = {} but |P(w*)| = {dual}", case.elements.len()));
    t
}

fn check_order_equivalence(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for (a, y) in case.elements.iter().enumerate() {
        for (b, z) in case.elements.iter().enumerate() {
            let c = case.leq(a, b);
            let s = leq_geometric(y, z, OrderMethod::Segments).unwrap_or(!c);
            let k = leq_geometric(y, z, OrderMethod::Coweights).unwrap_or(!c);
            if !t.check(c == s && c == k, || format!("{y} vs {z}: chutewise {c}, segments {s}, coweights {k}")) {
                return t;
            }
        }
    }
    t
}

fn check_partial_order(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let m = case.elements.len();
    let e = &case.elements;
    for a in 0..m {
        if !t.check(case.leq(a, a), || format!("{} is not <= itself", e[a])) {
            return t;
        }
        for b in 0..m {
            if a != b
                && !t.check(!(case.leq(a, b) && case.leq(b, a)), || format!("{} and {} are mutually <=", e[a], e[b]))
            {
                return t;
            }
            if !case.leq(a, b) {
                continue;
            }
            for c in 0..m {
                if case.leq(b, c)
                    && !t.check(case.leq(a, c), || format!("{} <= {} <= {} but not {0} <= {2}", e[a], e[b], e[c]))
                {
                    return t;
                }
            }
        }
    }
    t
}

fn check_dim_monotone(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let dims: Vec<u64> = case.elements.iter().map(orbit_dim).collect();
    for a in 0..case.elements.len() {
        for b in 0..case.elements.len() {
            if a != b && case.leq(a, b) {
                let ok = dims[a] < dims[b];
                if !t.check(ok, || {
                    format!("{} < {} but dims {} >= {}", case.elements[a], case.elements[b], dims[a], dims[b])
                }) {
                    return t;
                }
            }
        }
    }
    t
}

fn check_top_bottom(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let m = case.elements.len();
    let maximal: Vec<usize> = (0..m).filter(|&a| (0..m).all(|b| b == a || !case.leq(a, b))).collect();
    if !t.check(maximal.len() == 1, || format!("{} maximal elements", maximal.len())) {
        return t;
    }
    let top = &case.elements[maximal[0]];
    let expect = case.w.rep_space_dim();
    t.check(orbit_dim(top) == expect, || format!("maximum {top} has dim {} != {expect}", orbit_dim(top)));
    let n = case.w.len();
    let bottom = TriangularArray::from_chutes(
        (1..=n).map(|i| (1..=n - i + 1).map(|j| if j == 1 { case.w.get(i) } else { 0 }).collect()).collect(),
    );
    match bottom {
        Ok(b) => {
            t.check(case.elements.contains(&b), || format!("{b} not enumerated"));
            t.check(orbit_dim(&b) == 0, || format!("{b} has dim {}", orbit_dim(&b)));
        }
        Err(e) => {
            t.check(false, || format!("column-1 array is invalid: {e}"));
        }
    }
    t
}

fn check_flag_fiber(case: &Case, _: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for y in &case.elements {
        if !t.check(orbit_dim(y) == flag_dim(y) + fiber_dim(y), || format!("{y}")) {
            break;
        }
    }
    t
}

fn each(case: &Case, mut f: impl FnMut(&TriangularArray) -> Option<String>) -> Tally {
    let mut t = Tally::default();
    for y in &case.elements {
        let failure = f(y);
        let ok = failure.is_none();
        if !t.check(ok, || failure.unwrap()) {
            break;
        }
    }
    t
}

fn check_transform_inverse(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let a = transform_t_prime(&transform_t(y));
        let b = transform_t(&transform_t_prime(y));
        (a != *y || b != *y).then(|| format!("Y = {y}: T'(T(Y)) = {a}, T(T'(Y)) = {b}"))
    })
}

fn check_transform_equality(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let (a, b) = (transform_t(y), transform_t_prime(y));
        (a != b).then(|| format!("Y = {y}: T = {a}, T' = {b}"))
    })
}

fn check_transform_involution(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let a = transform_t(&transform_t(y));
        (a != *y).then(|| format!("Y = {y}: T(T(Y)) = {a}"))
    })
}

fn check_transform_udim(case: &Case, _: &VerifyConfig) -> Tally {
    let dual = case.w.reverse();
    each(case, |y| {
        let d = transform_t(y).dim_vector();
        (d != dual).then(|| format!("Y = {y}: udim T(Y) = ({d})"))
    })
}

fn finite_i(y: &TriangularArray) -> Vec<(usize, usize)> {
    (1..=y.size())
        .filter_map(|k| match inv_i(y, k) {
            Ok(ExtendedIndex::Finite(i)) => Some((k, i)),
            _ => None,
        })
        .collect()
}

fn check_b_then_a(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        for (k, i) in finite_i(y) {
            let b = match proc_b(y, k) {
                Ok(b) => b,
                Err(e) => return Some(format!("Y = {y}, k = {k}: B failed: {e}")),
            };
            let back = iterate_a(&b.array, b.q, &mut Trace::disabled());
            let expect = StepState::new(y.clone(), 0, i);
            if back.as_ref() != Ok(&expect) {
                return Some(format!("Y = {y}, k = {k}: B gives ({}, {}), a^q gives {back:?}", b.array, b.q));
            }
        }
        None
    })
}

fn check_b_dim_drop(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        for (k, _) in finite_i(y) {
            let b = proc_b(y, k).ok()?;
            let mut expect = y.dim_vector().entries().to_vec();
            for e in expect.iter_mut().take(b.q) {
                *e -= 1;
            }
            if b.array.dim_vector().entries() != &expect[..] {
                return Some(format!("Y = {y}, k = {k}: B gives {} with q = {}", b.array, b.q));
            }
        }
        None
    })
}

fn check_q_decreasing(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let run = std::panic::catch_unwind(|| transform_t_prime_with_q_sequences(y));
        match run {
            Err(_) => Some(format!("Y = {y}: T' rejected its own q-sequence")),
            Ok((_, log)) => {
                log.iter().find(|qs| qs.windows(2).any(|p| p[0] < p[1])).map(|qs| format!("Y = {y}: q-sequence {qs:?}"))
            }
        }
    })
}

fn check_k_shift(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let n = y.size();
        if n < 2 {
            return None;
        }
        let d = del_chute(y).ok()?;
        for k in 1..n {
            for i in 2..=n - k + 1 {
                let (a, b) = (inv_k(y, i, k), inv_k(&d, i - 1, k));
                if a != b {
                    return Some(format!("Y = {y}, i = {i}, k = {k}: {a:?} vs {b:?}"));
                }
            }
        }
        None
    })
}

fn check_a_del_chute(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let n = y.size();
        if n < 2 {
            return None;
        }
        let d = del_chute(y).ok()?;
        for i in 2..=n {
            for k in 1..=n - i + 1 {
                let outer = proc_a(&StepState::new(y.clone(), i, k));
                let inner = proc_a(&StepState::new(d.clone(), i - 1, k));
                let ok = match (&outer, &inner) {
                    (Ok(o), Ok(p)) => {
                        adjoin_chute(&p.array, &top(y)).as_ref() == Ok(&o.array)
                            && o.column_bound == p.column_bound
                            && o.chute_index == i - 1
                            && p.chute_index == i - 2
                    }
                    _ => false,
                };
                if !ok {
                    return Some(format!("Y = {y}, i = {i}, k = {k}: a gives {outer:?}, on del_chute {inner:?}"));
                }
            }
        }
        None
    })
}

fn check_raise_lower(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let n = y.size();
        for i in 1..=n {
            for j in 1..=n - i + 1 {
                if can_raise(y, i, j) {
                    let r = raise(y, i, j).ok()?;
                    if !can_lower(&r, i, j) || lower(&r, i, j).as_ref() != Ok(y) {
                        return Some(format!("Y = {y}: lower(raise(Y, {i}, {j})) != Y"));
                    }
                }
                if can_lower(y, i, j) {
                    let l = lower(y, i, j).ok()?;
                    if !can_raise(&l, i, j) || raise(&l, i, j).as_ref() != Ok(y) {
                        return Some(format!("Y = {y}: raise(lower(Y, {i}, {j})) != Y"));
                    }
                }
            }
        }
        None
    })
}

fn check_parse_format(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| {
        let text = y.to_string();
        if parse_triangle(&text).as_ref() != Ok(y) {
            return Some(format!("'{text}' does not parse back"));
        }
        if TriangularArray::from_json(&y.to_json()).as_ref() != Ok(y) {
            return Some(format!("{y}: JSON round trip"));
        }
        None
    })
}

fn check_jordan_round_trip(case: &Case, _: &VerifyConfig) -> Tally {
    each(case, |y| match orbit_label(&jordan_rep(y)) {
        Ok(l) if l == *y => None,
        other => Some(format!("Y = {y}: orbit_label gives {other:?}")),
    })
}

fn check_stabilizer_dim(case: &Case, _: &VerifyConfig) -> Tally {
    let group: u64 = case.w.entries().iter().map(|&v| (v as u64) * (v as u64)).sum();
    each(case, |y| {
        let end = endomorphism_dim(&jordan_rep(y)) as u64;
        (group - end != orbit_dim(y))
            .then(|| format!("Y = {y}: dim G - dim End = {}, orbit_dim = {}", group - end, orbit_dim(y)))
    })
}

/// An invertible integer matrix drawn from `rng`.
fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d).map(|_| (0..d).map(|_| rng.random_range(-3..=3)).collect()).collect();
        let m = RationalMatrix::from_i64_rows(&rows, d);
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn check_commuting_invariant(case: &Case, config: &VerifyConfig) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(config.oracle.seed);
    each(case, |y| {
        let x = jordan_rep(y);
        let g: Vec<RationalMatrix> =
            x.dim_vector().entries().iter().map(|&d| random_invertible(&mut rng, d as usize)).collect();
        let moved = x.act(&g).ok()?;
        let (a, b) = (commuting_basis(&x).dim(), commuting_basis(&moved).dim());
        if orbit_label(&moved).as_ref() != Ok(y) {
            return Some(format!("Y = {y}: change of basis moved the orbit"));
        }
        (a != b).then(|| format!("Y = {y}: dim C(x) = {a}, after change of basis {b}"))
    })
}

fn check_monotone_sampling(case: &Case, config: &VerifyConfig) -> Tally {
    each(case, |y| match generic_orbit(&jordan_rep(y), &config.oracle) {
        Ok(g) if g.is_monotone() => None,
        Ok(g) => Some(format!("Y = {y}: samples {:?} not all below {}", g.samples, g.label)),
        Err(e) => Some(format!("Y = {y}: {e}")),
    })
}

fn check_oracle_agreement(case: &Case, config: &VerifyConfig) -> Tally {
    each(case, |y| {
        let t = transform_t(y);
        match generic_orbit(&jordan_rep(y), &config.oracle) {
            Ok(g) if g.label == t => None,
            Ok(g) => Some(format!("Y = {y}: oracle {}, T {t}", g.label)),
            Err(e) => Some(format!("Y = {y}: {e}")),
        }
    })
}

fn check_oracle_involution(case: &Case, config: &VerifyConfig) -> Tally {
    each(case, |y| {
        let once = generic_orbit(&jordan_rep(y), &config.oracle).map(|g| g.label);
        let twice = once
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|z| generic_orbit(&jordan_rep(z), &config.oracle).map(|g| g.label));
        match twice {
            Ok(z) if z == *y => None,
            other => Some(format!("Y = {y}: oracle twice gives {other:?}")),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_shape() {
        let ws = dimension_vectors(3, 2);
        assert_eq!(ws.len(), 3 + 9 + 27);
        assert_eq!(ws[0].entries(), &[0]);
        assert_eq!(ws.last().unwrap().entries(), &[2, 2, 2]);
        let distinct: HashSet<_> = ws.iter().map(|w| w.entries().to_vec()).collect();
        assert_eq!(distinct.len(), ws.len());
    }

    #[test]
    fn multisegment_enumeration_matches_count() {
        for w in dimension_vectors(4, 2) {
            let ms = multisegments(&w);
            assert_eq!(ms.len(), crate::enumerate::count(&w), "{w}");
            assert!(ms.iter().all(|b| b.dim_vector() == w));
        }
    }

    #[test]
    fn small_sweep_passes() {
        let report = run(&VerifyConfig::new(3, 2));
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.properties.len(), properties().len());
    }

    #[test]
    fn report_is_deterministic() {
        let c = VerifyConfig::new(3, 1);
        assert_eq!(run(&c).to_string(), run(&c).to_string());
    }

    #[test]
    fn selection() {
        let r = run_selected(&VerifyConfig::new(2, 1), &["cardinality", "oracle_agreement"]);
        assert_eq!(r.properties.len(), 2);
        assert!(r.get("cardinality").unwrap().passed);
    }
}
