//! The combinatorial Fourier transform `T` and its inverse `T'`, both maps
//! `P(w) -> P(w*)`.

use crate::transform::ops::{adjoin_chute, adjoin_ladder, del_chute, del_ladder};
use crate::transform::procedures::{proc_b_traced, proc_big_a_traced};
use crate::transform::trace::Trace;
use crate::triangle::TriangularArray;

/// `T(Y) = A_n^{y_{1n}} A_{n-1}^{y_{2,n-1} - y_{1n}} ... A_1^{y_{n1} - y_{n-1,2}} (T(Del_ladder Y) u (0,...,0))`.
pub fn transform_t(y: &TriangularArray) -> TriangularArray {
    transform_t_traced(y, &mut Trace::disabled())
}

pub fn transform_t_traced(y: &TriangularArray, trace: &mut Trace) -> TriangularArray {
    let n = y.size();
    if n == 1 {
        trace.emit(|| format!("T({y}) = {y}"));
        return y.clone();
    }
    trace.emit(|| format!("T({y}): recurse on last-ladder deletion"));
    trace.push();
    let inner = transform_t_traced(&del_ladder(y).expect("n >= 2"), trace);
    trace.pop();
    let mut x = adjoin_chute(&inner, &vec![0; n]).expect("a zero chute can always be adjoined");
    trace.emit(|| format!("T({y}): start from {x}"));
    trace.push();
    // innermost factor first: A_1 uses the bottom of the last ladder
    for i in (1..=n).rev() {
        let here = y.get(i, n - i + 1);
        let above = y.get_or_zero(i - 1, n - i + 2);
        assert!(here >= above, "exponent of A_{} is negative in {y}", n - i + 1);
        for _ in 0..here - above {
            x = proc_big_a_traced(&x, n - i + 1, trace).expect("A_i is defined for 1 <= i <= n");
        }
    }
    trace.pop();
    trace.emit(|| format!("T({y}) = {x}"));
    x
}

/// `T'(Y)`: peel boxes off the top chute with `B(., 1)`, record how deep each
/// removal reached, and adjoin the resulting counts as the last ladder.
pub fn transform_t_prime(y: &TriangularArray) -> TriangularArray {
    transform_t_prime_traced(y, &mut Trace::disabled())
}

pub fn transform_t_prime_traced(y: &TriangularArray, trace: &mut Trace) -> TriangularArray {
    t_prime(y, trace, &mut Vec::new())
}

/// `T'(Y)` together with the `q`-sequence produced at each recursion level,
/// outermost level first.
pub fn transform_t_prime_with_q_sequences(y: &TriangularArray) -> (TriangularArray, Vec<Vec<usize>>) {
    let mut log = Vec::new();
    let out = t_prime(y, &mut Trace::disabled(), &mut log);
    (out, log)
}

fn t_prime(y: &TriangularArray, trace: &mut Trace, q_log: &mut Vec<Vec<usize>>) -> TriangularArray {
    let n = y.size();
    if n == 1 {
        trace.emit(|| format!("T'({y}) = {y}"));
        return y.clone();
    }
    let w1: u32 = y.chute(1).iter().sum();
    let mut cur = y.clone();
    let mut qs = Vec::with_capacity(w1 as usize);
    trace.emit(|| format!("T'({y}): {w1} applications of B(., 1)"));
    trace.push();
    for _ in 0..w1 {
        let b = proc_b_traced(&cur, 1, trace).expect("top chute is nonzero");
        qs.push(b.q);
        cur = b.array;
    }
    trace.pop();
    assert!(qs.windows(2).all(|p| p[0] >= p[1]), "q-sequence {qs:?} of {y} is not weakly decreasing");
    let p: Vec<u32> = (1..=n).map(|j| qs.iter().filter(|&&q| q >= j).count() as u32).collect();
    trace.emit(|| format!("T'({y}): q = {qs:?}, P = {p:?}"));
    q_log.push(qs);
    trace.push();
    let inner = t_prime(&del_chute(&cur).expect("n >= 2"), trace, q_log);
    trace.pop();
    let out = adjoin_ladder(&inner, &p).expect("P is weakly decreasing");
    trace.emit(|| format!("T'({y}) = {out}"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriangularArray {
        s.parse().unwrap()
    }

    #[test]
    fn t_examples() {
        assert_eq!(transform_t(&t("0,0,3/0,3/3")), t("3,0,0/3,0/3"));
        assert_eq!(transform_t(&t("0,3,0/3,0/3")), t("0,3,0/3,0/3"));
        assert_eq!(transform_t(&t("1,0/1")), t("0,1/1"));
        assert_eq!(transform_t(&t("1")), t("1"));
    }

    #[test]
    fn t_prime_examples() {
        assert_eq!(transform_t_prime(&t("0,1/1")), t("1,0/1"));
        assert_eq!(transform_t_prime(&t("1,0/1")), t("0,1/1"));
        assert_eq!(transform_t_prime(&t("0,3,0/3,0/3")), t("0,3,0/3,0/3"));
    }

    #[test]
    fn q_sequences_are_logged() {
        let (out, log) = transform_t_prime_with_q_sequences(&t("1,0/1"));
        assert_eq!(out, t("0,1/1"));
        assert_eq!(log, vec![vec![2]]);
    }

    #[test]
    fn traced_and_untraced_agree() {
        let y = t("1,1,1/1,2/3");
        let mut tr = Trace::enabled();
        assert_eq!(transform_t_traced(&y, &mut tr), transform_t(&y));
        assert!(tr.lines().iter().any(|l| l.contains("raise(")));
        let mut tr = Trace::enabled();
        assert_eq!(transform_t_prime_traced(&y, &mut tr), transform_t_prime(&y));
        assert!(tr.lines().iter().any(|l| l.contains("lower(")));
    }
}
