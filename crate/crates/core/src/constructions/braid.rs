//! Shadows of braid closures.

use crate::knot_graph::{as_universe, Universe};
use crate::planar_map::build_map;

use super::{ensure, ConstructionError};

/// A braid word: generator `i` crosses strand positions `i` and `i + 1`
/// (1-based), so every letter lies in `1..strands`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self, ConstructionError> {
        if strands < 2 {
            return Err(ConstructionError::BadParams(format!("a braid needs at least 2 strands, got {strands}")));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(ConstructionError::BadParams(format!(
                "generator {bad} is outside 1..{} for {strands} strands",
                strands - 1
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// The word `(σ1 σ2 σ3)^(4k−1) (σ2 σ1)^m σ2^l` on four strands.
    pub fn remark_word(k: usize, m: usize, l: usize) -> Result<Self, ConstructionError> {
        if k == 0 || m > 5 || l > 1 {
            return Err(ConstructionError::BadParams(format!(
                "need k ≥ 1, 0 ≤ m ≤ 5, 0 ≤ l ≤ 1; got k={k}, m={m}, l={l}"
            )));
        }
        let mut letters = Vec::with_capacity(3 * (4 * k - 1) + 2 * m + l);
        for _ in 0..4 * k - 1 {
            letters.extend([1, 2, 3]);
        }
        for _ in 0..m {
            letters.extend([2, 1]);
        }
        letters.extend(std::iter::repeat(2).take(l));
        BraidWord::new(4, letters)
    }
}

/// The shadow of the closure of `word`: one crossing per letter.
///
/// The braid runs downward with position 1 on the left; closing arcs pass
/// around the left, so position 1 is outermost.
pub fn braid_closure_shadow(word: &BraidWord) -> Result<Universe, ConstructionError> {
    let n = word.strands;
    let mut crossed = vec![false; n];
    let mut paired = vec![false; n - 1];
    for &i in &word.letters {
        crossed[i - 1] = true;
        crossed[i] = true;
        paired[i - 1] = true;
    }
    if let Some(p) = crossed.iter().position(|&c| !c) {
        return Err(ConstructionError::DisconnectedClosure(format!("strand position {} is never crossed", p + 1)));
    }
    if let Some(i) = paired.iter().position(|&c| !c) {
        return Err(ConstructionError::DisconnectedClosure(format!(
            "positions {} and {} are never crossed, so the closure splits",
            i + 1,
            i + 2
        )));
    }
    // closing arcs carry labels 0..n; inner segments get fresh labels
    let mut pending: Vec<u32> = (0..n as u32).collect();
    let mut next = n as u32;
    let mut rotations: Vec<Vec<u32>> = Vec::with_capacity(word.letters.len());
    for &i in &word.letters {
        let (sw, se) = (next, next + 1);
        next += 2;
        // north-east, north-west, south-west, south-east
        rotations.push(vec![pending[i], pending[i - 1], sw, se]);
        pending[i - 1] = sw;
        pending[i] = se;
    }
    // the segment leaving the bottom of position p is the closing arc p
    for r in rotations.iter_mut() {
        for label in r.iter_mut() {
            if let Some(p) = pending.iter().position(|x| x == label) {
                if *label >= n as u32 {
                    *label = p as u32;
                }
            }
        }
    }
    let u = as_universe(build_map(&rotations)?)?;
    ensure(u.v() == word.letters.len(), || "one crossing per letter".into())?;
    Ok(u)
}

/// Closure shadow of `(σ1 σ2 σ3)^(4k−1) (σ2 σ1)^m σ2^l` on four strands,
/// with `3(4k − 1) + 2m + l` crossings.
pub fn braid_shadow(k: usize, m: usize, l: usize) -> Result<Universe, ConstructionError> {
    braid_closure_shadow(&BraidWord::remark_word(k, m, l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::polygon_family;
    use crate::planar_map::isomorphic;

    #[test]
    fn trefoil() {
        let u = braid_closure_shadow(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        assert!(isomorphic(u.map(), polygon_family(3, 1).unwrap().map()));
    }

    #[test]
    fn word_validation() {
        assert!(matches!(BraidWord::new(4, vec![1, 4]), Err(ConstructionError::BadParams(_))));
        assert!(matches!(BraidWord::new(4, vec![0]), Err(ConstructionError::BadParams(_))));
        assert!(matches!(braid_shadow(0, 0, 0), Err(ConstructionError::BadParams(_))));
        assert!(matches!(braid_shadow(1, 6, 0), Err(ConstructionError::BadParams(_))));
        assert!(matches!(braid_shadow(1, 0, 2), Err(ConstructionError::BadParams(_))));
    }

    #[test]
    fn uncrossed_pairs_disconnect() {
        let w = BraidWord::new(4, vec![1, 3, 1, 3]).unwrap();
        assert!(matches!(braid_closure_shadow(&w), Err(ConstructionError::DisconnectedClosure(_))));
        let w = BraidWord::new(3, vec![1, 1]).unwrap();
        assert!(matches!(braid_closure_shadow(&w), Err(ConstructionError::DisconnectedClosure(_))));
    }

    #[test]
    fn remark_examples() {
        let u = braid_shadow(1, 0, 0).unwrap();
        assert_eq!(u.v(), 9);
        assert!(u.is_knot_graph());
        assert_eq!(u.is_tight(), Ok(true));
        assert!(!braid_shadow(1, 2, 0).unwrap().is_knot_graph());
        assert!(!braid_shadow(1, 1, 1).unwrap().is_knot_graph());
        let word = BraidWord::remark_word(1, 0, 0).unwrap();
        assert_eq!(braid_closure_shadow(&word).unwrap(), braid_shadow(1, 0, 0).unwrap());
    }

    #[test]
    fn trailing_generator_always_splits_the_closure() {
        // a four-strand knot closes a 4-cycle, an odd permutation; the word
        // with l = 1 has one more transposition than the word with l = 0
        for k in 1..=3 {
            for m in 0..=5 {
                let with = braid_shadow(k, m, 1).unwrap().is_knot_graph();
                let without = braid_shadow(k, m, 0).unwrap().is_knot_graph();
                assert!(!(with && without), "k={k} m={m}");
                assert!(!with);
            }
        }
    }
}
