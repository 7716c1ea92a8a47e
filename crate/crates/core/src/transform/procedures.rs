//! The step procedure `a`, its iterate `A_i`, and the recursive procedure `B`
//! which undoes a single `A_q`.

use crate::error::{Error, Result};
use crate::transform::invariants::{inv_i, inv_j, inv_k, ExtendedIndex};
use crate::transform::ops::{adjoin_chute, del_chute, lower, raise, top};
use crate::transform::trace::Trace;
use crate::triangle::TriangularArray;

/// Input and output of the step procedure: an array, a chute index `i` and a
/// column bound `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepState {
    pub array: TriangularArray,
    pub chute_index: usize,
    pub column_bound: usize,
}

impl StepState {
    pub fn new(array: TriangularArray, chute_index: usize, column_bound: usize) -> Self {
        StepState { array, chute_index, column_bound }
    }
}

/// Output of `B`: the lowered array and the number `q` of chutes that lost a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BResult {
    pub array: TriangularArray,
    pub q: usize,
}

/// `a(Y, i, k) = (raise(Y, i, K_i(Y, k)), i - 1, K_i(Y, k))`.
pub fn proc_a(state: &StepState) -> Result<StepState> {
    proc_a_traced(state, &mut Trace::disabled())
}

pub fn proc_a_traced(state: &StepState, trace: &mut Trace) -> Result<StepState> {
    let n = state.array.size();
    let (i, k) = (state.chute_index, state.column_bound);
    if i < 1 || i > n || k < 1 || k > n - i + 1 {
        return Err(Error::Index(format!("step state (i = {i}, k = {k}) needs 1 <= i <= {n} and 1 <= k <= n - i + 1")));
    }
    let kk = inv_k(&state.array, i, k)?;
    let array =
        raise(&state.array, i, kk).map_err(|e| Error::Internal(format!("K_{i} picked an illegal column: {e}")))?;
    trace.emit(|| format!("a: i={i} k={k} K={kk} raise({i},{kk}) -> {array}"));
    Ok(StepState { array, chute_index: i - 1, column_bound: kk })
}

/// Iterates `a` `i` times from `(Y, i, n - i + 1)`; returns the final state.
pub fn iterate_a(y: &TriangularArray, i: usize, trace: &mut Trace) -> Result<StepState> {
    let n = y.size();
    if i < 1 || i > n {
        return Err(Error::Index(format!("A_{i} needs 1 <= i <= {n}")));
    }
    let mut state = StepState::new(y.clone(), i, n - i + 1);
    for _ in 0..i {
        state = proc_a_traced(&state, trace)?;
    }
    Ok(state)
}

/// `A_i(Y)`: one box is added to each of the first `i` chutes.
pub fn proc_big_a(y: &TriangularArray, i: usize) -> Result<TriangularArray> {
    proc_big_a_traced(y, i, &mut Trace::disabled())
}

pub fn proc_big_a_traced(y: &TriangularArray, i: usize, trace: &mut Trace) -> Result<TriangularArray> {
    trace.emit(|| format!("A_{i}({y})"));
    trace.push();
    let out = iterate_a(y, i, trace);
    trace.pop();
    Ok(out?.array)
}

/// `B(Y, k)`; requires `I(Y, k)` finite.
pub fn proc_b(y: &TriangularArray, k: usize) -> Result<BResult> {
    proc_b_traced(y, k, &mut Trace::disabled())
}

pub fn proc_b_traced(y: &TriangularArray, k: usize, trace: &mut Trace) -> Result<BResult> {
    let col = match inv_i(y, k)? {
        ExtendedIndex::Finite(j) => j,
        ExtendedIndex::Infinity => return Err(Error::InfiniteI(k)),
    };
    let n = y.size();
    if n == 1 {
        let array = lower(y, 1, 1)?;
        trace.emit(|| format!("B({y}, {k}): n=1 I=1 lower(1,1) -> {array} q=1"));
        return Ok(BResult { array, q: 1 });
    }
    match inv_j(y, k)? {
        ExtendedIndex::Infinity => {
            let array = lower(y, 1, col)?;
            trace.emit(|| format!("B({y}, {k}): I={col} J=inf lower(1,{col}) -> {array} q=1"));
            Ok(BResult { array, q: 1 })
        }
        ExtendedIndex::Finite(j0) => {
            trace.emit(|| format!("B({y}, {k}): I={col} J={j0} recurse on chutes 2.. with k={}", j0 - 1));
            trace.push();
            let inner = proc_b_traced(&del_chute(y)?, j0 - 1, trace);
            trace.pop();
            let BResult { array: z, q: r } = inner?;
            let joined = adjoin_chute(&z, &top(y))
                .map_err(|e| Error::Internal(format!("B could not re-attach the top chute: {e}")))?;
            let array = lower(&joined, 1, col)?;
            trace.emit(|| format!("B({y}, {k}): lower(1,{col}) -> {array} q={}", r + 1));
            Ok(BResult { array, q: r + 1 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriangularArray {
        s.parse().unwrap()
    }

    #[test]
    fn a_examples() {
        let s = proc_a(&StepState::new(t("0,0/0"), 2, 1)).unwrap();
        assert_eq!(s, StepState::new(t("0,0/1"), 1, 1));
        let s = proc_a(&StepState::new(t("0,0/1"), 1, 1)).unwrap();
        assert_eq!(s, StepState::new(t("1,0/1"), 0, 1));
        let s = proc_a(&StepState::new(t("0,0/1"), 1, 2)).unwrap();
        assert_eq!(s, StepState::new(t("0,1/1"), 0, 2));
        assert!(proc_a(&StepState::new(t("0,0/1"), 0, 1)).is_err());
        assert!(proc_a(&StepState::new(t("0,0/1"), 2, 2)).is_err());
    }

    #[test]
    fn big_a_examples() {
        assert_eq!(proc_big_a(&t("0,0/0"), 2).unwrap(), t("1,0/1"));
        assert_eq!(proc_big_a(&t("0,0/1"), 1).unwrap(), t("0,1/1"));
        assert_eq!(proc_big_a(&t("0"), 1).unwrap(), t("1"));
        assert!(proc_big_a(&t("0"), 2).is_err());
    }

    #[test]
    fn b_examples() {
        assert_eq!(proc_b(&t("0,1/1"), 1).unwrap(), BResult { array: t("0,0/1"), q: 1 });
        assert_eq!(proc_b(&t("1,0/1"), 1).unwrap(), BResult { array: t("0,0/0"), q: 2 });
        assert_eq!(proc_b(&t("1"), 1).unwrap(), BResult { array: t("0"), q: 1 });
        assert_eq!(proc_b(&t("0,0/1"), 1), Err(Error::InfiniteI(1)));
    }

    #[test]
    fn b_inverts_a() {
        for w in ["3,3,3", "2,1,2,1", "1,2,3"] {
            for y in crate::enumerate::enumerate(&w.parse().unwrap()) {
                for k in 1..=y.size() {
                    let Ok(ExtendedIndex::Finite(col)) = inv_i(&y, k) else { continue };
                    let b = proc_b(&y, k).unwrap();
                    let back = iterate_a(&b.array, b.q, &mut Trace::disabled()).unwrap();
                    assert_eq!(back, StepState::new(y.clone(), 0, col), "{y} k={k}");
                }
            }
        }
    }

    #[test]
    fn trace_records_steps() {
        let mut tr = Trace::enabled();
        proc_b_traced(&t("1,0/1"), 1, &mut tr).unwrap();
        let lines = tr.into_lines();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains("I=1 J=2"));
        assert!(lines[1].starts_with("  B(1, 1)"));
    }
}
