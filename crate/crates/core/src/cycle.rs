//! Machinery specific to the monoid of the oriented cycle on `n` vertices:
//! the distinguished level-generator words, the canonical subset idempotents,
//! the exact integral affine representation, support computation, and
//! ideal-chain level classification.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::word::Word;

/// An exact affine endomorphism of `Z^n` of the restricted shape produced by
/// the cycle monoid's integral representation: output coordinate `k` equals
/// `m[source[k]] + offset[k]`.
///
/// Every generator image has this shape and the shape is closed under
/// composition, so composition stays exact and costs `O(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    /// 0-based input coordinate read by each output coordinate.
    source: Vec<usize>,
    offset: Vec<i64>,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        AffineMap { source: (0..n).collect(), offset: vec![0; n] }
    }

    /// The image of the generator `x_i` (1-based) for the cycle of length
    /// `n`: coordinate `i` is overwritten with coordinate `i+1`, except that
    /// `x_n` writes `m_1 + 1` into coordinate `n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(n >= 3, "the oriented cycle needs n >= 3");
        assert!((1..=n).contains(&i), "generator index out of range");
        let mut map = AffineMap::identity(n);
        if i < n {
            map.source[i - 1] = i; // coordinate i reads m_{i+1}
        } else {
            map.source[n - 1] = 0; // coordinate n reads m_1 ...
            map.offset[n - 1] = 1; // ... plus one
        }
        map
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    /// Composition `self ∘ inner` (apply `inner` first, then `self`).
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        assert_eq!(self.n(), inner.n());
        let n = self.n();
        let mut source = Vec::with_capacity(n);
        let mut offset = Vec::with_capacity(n);
        for k in 0..n {
            let mid = self.source[k];
            source.push(inner.source[mid]);
            offset.push(inner.offset[mid] + self.offset[k]);
        }
        AffineMap { source, offset }
    }

    pub fn apply(&self, input: &[i64]) -> Vec<i64> {
        assert_eq!(input.len(), self.n());
        (0..self.n())
            .map(|k| input[self.source[k]] + self.offset[k])
            .collect()
    }

    /// The set of input coordinates (1-based) the map depends on.
    pub fn support(&self) -> BTreeSet<usize> {
        self.source.iter().map(|&s| s + 1).collect()
    }

    /// 1-based source indices, as printed.
    pub fn source_indices(&self) -> Vec<usize> {
        self.source.iter().map(|&s| s + 1).collect()
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offset
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let src: Vec<String> = self.source.iter().map(|&s| (s + 1).to_string()).collect();
        let off: Vec<String> = self.offset.iter().map(|c| c.to_string()).collect();
        write!(f, "[src=({}); off=({})]", src.join(","), off.join(","))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle length {n} too small (need n >= 3)")]
    CycleTooSmall { n: usize },
    #[error("level index {i} outside 0..={max}")]
    LevelOutOfRange { i: usize, max: usize },
    #[error("subset contains {v}, outside 1..={n}")]
    SubsetOutOfRange { v: usize, n: usize },
    #[error("the full vertex set carries no idempotent")]
    FullSubset,
    #[error("letter {letter} outside 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("witness depth {kmax} too small (need kmax >= 2)")]
    WitnessDepthTooSmall { kmax: usize },
}

/// The word `x_n x_1 ... x_i x_{n-1} ... x_{i+1}` generating the cyclic
/// semigroup at level `i` (for `i = 0` the first block is empty).
pub fn level_generator_word(n: usize, i: usize) -> Result<Word, CycleError> {
    if n < 3 {
        return Err(CycleError::CycleTooSmall { n });
    }
    if i > n - 2 {
        return Err(CycleError::LevelOutOfRange { i, max: n - 2 });
    }
    let mut letters = vec![n];
    letters.extend(1..=i);
    letters.extend(((i + 1)..=(n - 1)).rev());
    Ok(Word::new(letters))
}

/// A proper vertex subset together with its canonical idempotent word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIdempotent {
    pub subset: BTreeSet<usize>,
    pub word: Word,
}

/// The canonical idempotent attached to a proper subset `X` of the cycle's
/// vertices: the empty word for `X = ∅`; the increasing product when `X`
/// does not contain both `1` and `n`; otherwise the wrapped-around product
/// that lists the letters above the initial run `1..=k` first.
pub fn subset_idempotent(n: usize, subset: &BTreeSet<usize>) -> Result<SubsetIdempotent, CycleError> {
    if n < 3 {
        return Err(CycleError::CycleTooSmall { n });
    }
    for &v in subset {
        if v == 0 || v > n {
            return Err(CycleError::SubsetOutOfRange { v, n });
        }
    }
    if subset.len() == n {
        return Err(CycleError::FullSubset);
    }
    let word = if subset.is_empty() {
        Word::empty()
    } else if !(subset.contains(&1) && subset.contains(&n)) {
        Word::new(subset.iter().copied().collect())
    } else {
        // X contains 1 and n: split off the initial run 1..=k.
        let mut k = 1;
        while subset.contains(&(k + 1)) {
            k += 1;
        }
        let mut letters: Vec<usize> = subset.iter().copied().filter(|&v| v > k + 1).collect();
        letters.extend(1..=k);
        Word::new(letters)
    };
    Ok(SubsetIdempotent { subset: subset.clone(), word })
}

/// All `2^n - 1` canonical idempotents, one per proper subset, in bitmask
/// order (empty set first).
pub fn all_idempotents(n: usize) -> Result<Vec<SubsetIdempotent>, CycleError> {
    if n < 3 {
        return Err(CycleError::CycleTooSmall { n });
    }
    assert!(n < 64);
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for mask in 0u64..((1u64 << n) - 1) {
        let subset: BTreeSet<usize> = (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        out.push(subset_idempotent(n, &subset).expect("proper subset"));
    }
    Ok(out)
}

/// The affine map representing a word of the cycle monoid; the leftmost
/// letter acts outermost.
pub fn affine_action(w: &Word, n: usize) -> Result<AffineMap, CycleError> {
    if n < 3 {
        return Err(CycleError::CycleTooSmall { n });
    }
    let mut acc = AffineMap::identity(n);
    for &letter in w.letters() {
        if letter > n {
            return Err(CycleError::LetterOutOfRange { letter, n });
        }
        acc = acc.compose(&AffineMap::generator(n, letter));
    }
    Ok(acc)
}

/// Outcome of the support-based ideal-chain classification.
///
/// `Level(i)` certifies membership in the chain ideal at depth `i` via the
/// support bound `|supp| <= n - i - 2`; `Top` means no membership could be
/// certified (support of size `n - 1` or `n`). Deeper non-membership is
/// deliberately not claimed: the support bound is one-sided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLevel {
    pub level: Level,
    /// Certificate: the support of the word's affine map.
    pub support: BTreeSet<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Top,
    At(usize),
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Top => write!(f, "top"),
            Level::At(i) => write!(f, "{i}"),
        }
    }
}

/// Classifies a word by the largest chain depth its support size certifies:
/// `level = n - 2 - |supp|`, or `Top` when `|supp| >= n - 1`.
pub fn classify_level(w: &Word, n: usize) -> Result<IdealLevel, CycleError> {
    let support = affine_action(w, n)?.support();
    let s = support.len();
    let level = if s >= n - 1 {
        Level::Top
    } else {
        Level::At(n - 2 - s)
    };
    Ok(IdealLevel { level, support })
}

/// Checks that the affine images of the powers `w^1, ..., w^kmax` of the
/// level generator are pairwise distinct, witnessing that the cycle monoid
/// is infinite.
pub fn infiniteness_witness(n: usize, i: usize, kmax: usize) -> Result<bool, CycleError> {
    if kmax < 2 {
        return Err(CycleError::WitnessDepthTooSmall { kmax });
    }
    let base = affine_action(&level_generator_word(n, i)?, n)?;
    let mut seen = std::collections::HashSet::with_capacity(kmax);
    let mut acc = base.clone();
    seen.insert(acc.clone());
    for _ in 1..kmax {
        acc = base.compose(&acc);
        if !seen.insert(acc.clone()) {
            return Ok(false);
        }
    }
    Ok(seen.len() == kmax)
}
