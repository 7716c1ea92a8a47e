//! The orbit poset `P(w)` with its Hasse diagram.

use std::fmt::Write as _;

use serde::Serialize;

use crate::dims::orbit_dim;
use crate::enumerate::enumerate;
use crate::order::leq_chutewise_unchecked;
use crate::triangle::{DimVector, TriangularArray};

#[derive(Debug, Clone)]
pub struct OrbitPoset {
    dim_vector: DimVector,
    elements: Vec<TriangularArray>,
    // row-major, leq[a * len + b] iff elements[a] <= elements[b]
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    dims: Vec<u64>,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    dim_vector: &'a DimVector,
    elements: &'a [TriangularArray],
    covers: Vec<[usize; 2]>,
    dims: &'a [u64],
}

/// Builds `P(w)` ordered by chutewise dominance, with covers and orbit dimensions.
pub fn hasse(w: &DimVector) -> OrbitPoset {
    let elements = enumerate(w);
    let len = elements.len();
    let mut leq = vec![false; len * len];
    for a in 0..len {
        for b in 0..len {
            leq[a * len + b] = leq_chutewise_unchecked(&elements[a], &elements[b]);
        }
    }
    let covers = transitive_reduction(&leq, len);
    let dims = elements.iter().map(orbit_dim).collect();
    OrbitPoset { dim_vector: w.clone(), elements, leq, covers, dims }
}

/// Strict pairs `a < b` with no `c` strictly between.
fn transitive_reduction(leq: &[bool], len: usize) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && leq[a * len + b];
    let mut covers = Vec::new();
    for a in 0..len {
        for b in 0..len {
            if lt(a, b) && !(0..len).any(|c| lt(a, c) && lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    covers
}

impl OrbitPoset {
    pub fn dim_vector(&self) -> &DimVector {
        &self.dim_vector
    }

    pub fn elements(&self) -> &[TriangularArray] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn index_of(&self, y: &TriangularArray) -> Option<usize> {
        self.elements.iter().position(|e| e == y)
    }

    /// Elements covering `elements[a]`.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.covers.iter().filter(|&&(x, _)| x == a).map(|&(_, y)| y).collect()
    }

    /// Elements covered by `elements[b]`.
    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        self.covers.iter().filter(|&&(_, y)| y == b).map(|&(x, _)| x).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| (0..self.len()).all(|b| a == b || !self.leq(a, b))).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| (0..self.len()).all(|a| a == b || !self.leq(a, b))).collect()
    }

    pub fn to_json(&self) -> String {
        let j = PosetJson {
            dim_vector: &self.dim_vector,
            elements: &self.elements,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            dims: &self.dims,
        };
        serde_json::to_string(&j).expect("poset serializes")
    }

    /// Graphviz rendering; edges point from the smaller orbit to the larger.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"P({})\" {{", self.dim_vector).unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        for (a, e) in self.elements.iter().enumerate() {
            writeln!(s, "  n{a} [label=\"{e}\\n{}\"];", self.dims[a]).unwrap();
        }
        for &(a, b) in &self.covers {
            writeln!(s, "  n{a} -> n{b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriangularArray {
        s.parse().unwrap()
    }

    #[test]
    fn two_element_chain() {
        let p = hasse(&"1,1".parse().unwrap());
        assert_eq!(p.len(), 2);
        let a = p.index_of(&t("1,0/1")).unwrap();
        let b = p.index_of(&t("0,1/1")).unwrap();
        assert_eq!(p.covers(), &[(a, b)]);
    }

    #[test]
    fn single_node() {
        let p = hasse(&"5".parse().unwrap());
        assert_eq!(p.len(), 1);
        assert!(p.covers().is_empty());
    }

    #[test]
    fn bottom_of_w333() {
        let p = hasse(&"3,3,3".parse().unwrap());
        let bottom = p.index_of(&t("3,0,0/3,0/3")).unwrap();
        let mut up: Vec<String> = p.upper_covers(bottom).iter().map(|&c| p.elements()[c].to_string()).collect();
        up.sort();
        assert_eq!(up, vec!["2,1,0/3,0/3", "3,0,0/2,1/3"]);
        assert_eq!(p.minimal(), vec![bottom]);
        assert_eq!(p.maximal(), vec![p.index_of(&t("0,0,3/0,3/3")).unwrap()]);
    }

    #[test]
    fn json_and_dot() {
        let p = hasse(&"1,1".parse().unwrap());
        assert_eq!(
            p.to_json(),
            r#"{"dim_vector":[1,1],"elements":[{"n":2,"chutes":[[1,0],[1]]},{"n":2,"chutes":[[0,1],[1]]}],"covers":[[0,1]],"dims":[0,1]}"#
        );
        let dot = p.to_dot();
        assert!(dot.contains("n0 [label=\"1,0/1\\n0\"];"));
        assert!(dot.contains("n0 -> n1;"));
    }
}
