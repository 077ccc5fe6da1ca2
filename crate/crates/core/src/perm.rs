//! Permutations viewed as perfect matchings of a complete bipartite graph,
//! inversion/crossing counting, partial and partitioned permutations,
//! partition schemes, and the sign bookkeeping for removing edges from a
//! diagram.
//!
//! The crossing count of a permutation diagram equals the inversion count of
//! its image sequence, so crossings are computed as inversions rather than by
//! geometric line intersection.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, VarId};

/// Errors from permutation construction and the diagram operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a bijection of 1..={expected}: {images:?}")]
    NotABijection { expected: usize, images: Vec<usize> },
    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("element {element} is not in the ambient set")]
    NotInAmbient { element: usize },
    #[error("duplicate element {element}")]
    DuplicateElement { element: usize },
    #[error("malformed partial permutation: {0}")]
    MalformedPartial(String),
    #[error("the given part is not contained in the permutation")]
    PartNotContained,
    #[error("domains overlap")]
    OverlappingDomains,
    #[error("images overlap")]
    OverlappingImages,
    #[error("part {index}: domain size {domain} does not match word size {word}")]
    IncompatibleSizes {
        index: usize,
        domain: usize,
        word: usize,
    },
    #[error("not a partition of the index range: {0}")]
    NotAPartition(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

/// The sign of a permutation or a sign factor, +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(n: usize) -> Self {
        if n % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.to_int())
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Number of pairs l < l' with word[l] > word[l'].
pub(crate) fn word_inversion_count(word: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                count += 1;
            }
        }
    }
    count
}

/// A sorted set of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet {
    elements: Vec<usize>,
}

impl IndexSet {
    /// Sorts the input; rejects duplicates and zero.
    pub fn new(mut elements: Vec<usize>) -> Result<Self, PermError> {
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(PermError::DuplicateElement { element: pair[0] });
            }
        }
        if elements.first() == Some(&0) {
            return Err(PermError::Parse("elements are 1-based".into()));
        }
        Ok(IndexSet { elements })
    }

    pub fn empty() -> Self {
        IndexSet::default()
    }

    /// The full range {1, ..., n}.
    pub fn range(n: usize) -> Self {
        IndexSet {
            elements: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// 1-based position of `x` within this ordered set.
    pub fn position_of(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok().map(|i| i + 1)
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn intersects(&self, other: &IndexSet) -> bool {
        self.iter().any(|x| other.contains(x))
    }

    /// Elements of `ambient` not in `self`; `self` must be a subset.
    pub fn complement_in(&self, ambient: &IndexSet) -> Result<IndexSet, PermError> {
        if let Some(x) = self.iter().find(|&x| !ambient.contains(x)) {
            return Err(PermError::NotInAmbient { element: x });
        }
        Ok(IndexSet {
            elements: ambient.iter().filter(|&x| !self.contains(x)).collect(),
        })
    }

    /// Merged sorted union (duplicates collapse).
    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut elements: Vec<usize> = self.iter().chain(other.iter()).collect();
        elements.sort_unstable();
        elements.dedup();
        IndexSet { elements }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elements.iter().join(","))
    }
}

impl FromStr for IndexSet {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IndexSet::empty());
        }
        let elements = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::Parse(format!("bad index `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        IndexSet::new(elements)
    }
}

/// ε(S, M): (−1) raised to the sum of the 1-based positions of `set`'s
/// elements within the ordered ambient set `ambient`.
pub fn signsumset(set: &IndexSet, ambient: &IndexSet) -> Result<Sign, PermError> {
    let mut position_sum = 0usize;
    for x in set.iter() {
        position_sum += ambient
            .position_of(x)
            .ok_or(PermError::NotInAmbient { element: x })?;
    }
    Ok(Sign::from_parity(position_sum))
}

/// A permutation of {1, ..., n} stored as its image sequence: the entry at
/// position i (1-based) is the image of i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(PermError::NotABijection {
                    expected: n,
                    images,
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// All permutations of {1, ..., n} in lexicographic order of their image
    /// sequences. `n = 0` yields the single empty permutation.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// All pairs (a, b) with a < b and image(a) > image(b), sorted. These are
    /// exactly the edge crossings of the permutation diagram.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if self.image(a) > self.image(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn inversion_count(&self) -> usize {
        word_inversion_count(&self.images)
    }

    /// (−1) to the number of inversions.
    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.inversion_count())
    }

    /// The signed monomial sgn(π) · Π x[i, π(i)].
    pub fn weight(&self) -> Polynomial {
        let monomial = Monomial::from_exponents(
            (1..=self.size()).map(|i| (VarId::new(i, self.image(i)), 1)),
        );
        Polynomial::from_terms([(monomial, self.sign().to_bigint())])
    }

    /// Removes the edge (i, π(i)) from the diagram and relabels domain and
    /// image order-preservingly to {1, ..., n−1}. Returns the smaller
    /// permutation together with the sign factor (−1)^(π(i)−i), so that
    /// sign(self) = factor · sign(smaller).
    pub fn remove_edge(&self, i: usize) -> Result<(Permutation, Sign), PermError> {
        let n = self.size();
        if i < 1 || i > n {
            return Err(PermError::IndexOutOfRange { index: i, size: n });
        }
        let removed = self.image(i);
        let images = self
            .images
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos + 1 != i)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        // (−1)^(π(i)−i) == (−1)^(π(i)+i)
        let factor = Sign::from_parity(removed + i);
        Ok((Permutation { images }, factor))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let images = s
            .trim()
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::Parse(format!("bad entry `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(images)
    }
}

/// A bijection between a subset of the index range (the domain, kept sorted)
/// and a set of image values. The word lists the images of the domain
/// elements in domain order; its ordering carries the sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialPermutation {
    domain: Vec<usize>,
    word: Vec<usize>,
}

impl PartialPermutation {
    pub fn new(domain: Vec<usize>, word: Vec<usize>) -> Result<Self, PermError> {
        if domain.len() != word.len() {
            return Err(PermError::MalformedPartial(format!(
                "domain has {} entries but word has {}",
                domain.len(),
                word.len()
            )));
        }
        if domain.iter().any(|&d| d == 0) || word.iter().any(|&w| w == 0) {
            return Err(PermError::MalformedPartial("entries are 1-based".into()));
        }
        if !domain.windows(2).all(|p| p[0] < p[1]) {
            return Err(PermError::MalformedPartial(
                "domain must be strictly increasing".into(),
            ));
        }
        let mut sorted_word = word.clone();
        sorted_word.sort_unstable();
        if sorted_word.windows(2).any(|p| p[0] == p[1]) {
            return Err(PermError::MalformedPartial(
                "word entries must be distinct".into(),
            ));
        }
        Ok(PartialPermutation { domain, word })
    }

    pub fn empty() -> Self {
        PartialPermutation {
            domain: Vec::new(),
            word: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn image_word(&self) -> &[usize] {
        &self.word
    }

    pub fn domain_set(&self) -> IndexSet {
        IndexSet {
            elements: self.domain.clone(),
        }
    }

    pub fn image_set(&self) -> IndexSet {
        let mut elements = self.word.clone();
        elements.sort_unstable();
        IndexSet { elements }
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.domain.binary_search(&x).ok().map(|i| self.word[i])
    }

    /// Inversion parity of the image word. The empty part has sign +1.
    pub fn sign(&self) -> Sign {
        Sign::from_parity(word_inversion_count(&self.word))
    }

    /// Order-preserving relabelling of domain and image to {1, ..., len}.
    pub fn to_dense(&self) -> Permutation {
        let image_set = self.image_set();
        let images = self
            .word
            .iter()
            .map(|&w| image_set.position_of(w).expect("word value in image set"))
            .collect();
        Permutation { images }
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}|{}]",
            self.word.iter().join(","),
            self.domain.iter().join(",")
        )
    }
}

impl FromStr for PartialPermutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let body = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse(format!("expected `[word|domain]`, got `{s}`")))?;
        let (word, domain) = body
            .split_once('|')
            .ok_or_else(|| PermError::Parse(format!("missing `|` in `{s}`")))?;
        let parse_list = |t: &str| -> Result<Vec<usize>, PermError> {
            t.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad entry `{x}`")))
                })
                .collect()
        };
        PartialPermutation::new(parse_list(domain)?, parse_list(word)?)
    }
}

/// An ordered tuple of partial permutations (some possibly empty) whose
/// domains partition {1, ..., k} and whose images partition {1, ..., k}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionedPermutation {
    parts: Vec<PartialPermutation>,
    k: usize,
}

impl PartitionedPermutation {
    pub fn new(parts: Vec<PartialPermutation>) -> Result<Self, PermError> {
        let k: usize = parts.iter().map(PartialPermutation::len).sum();
        let mut domain_seen = vec![false; k];
        let mut image_seen = vec![false; k];
        for part in &parts {
            for &d in part.domain() {
                if d > k || domain_seen[d - 1] {
                    return Err(PermError::NotAPartition(format!(
                        "domains do not partition 1..={k}"
                    )));
                }
                domain_seen[d - 1] = true;
            }
            for &w in part.image_word() {
                if w > k || image_seen[w - 1] {
                    return Err(PermError::NotAPartition(format!(
                        "images do not partition 1..={k}"
                    )));
                }
                image_seen[w - 1] = true;
            }
        }
        Ok(PartitionedPermutation { parts, k })
    }

    pub fn parts(&self) -> &[PartialPermutation] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of parts (the number of diagram copies).
    pub fn copies(&self) -> usize {
        self.parts.len()
    }

    /// Reassembles the full permutation of {1, ..., k}.
    pub fn underlying(&self) -> Permutation {
        let mut images = vec![0; self.k];
        for part in &self.parts {
            for (&d, &w) in part.domain().iter().zip(part.image_word()) {
                images[d - 1] = w;
            }
        }
        Permutation { images }
    }

    /// The tuple of image words (upper rows).
    pub fn scheme(&self) -> PartitionScheme {
        PartitionScheme {
            words: self.parts.iter().map(|p| p.image_word().to_vec()).collect(),
        }
    }

    pub fn domains(&self) -> Vec<IndexSet> {
        self.parts.iter().map(|p| p.domain_set()).collect()
    }
}

impl fmt::Display for PartitionedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join("*"))
    }
}

impl FromStr for PartitionedPermutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let parts = s
            .trim()
            .split('*')
            .map(str::parse)
            .collect::<Result<Vec<PartialPermutation>, _>>()?;
        PartitionedPermutation::new(parts)
    }
}

/// An ordered tuple of words with pairwise disjoint letter sets whose union
/// is {1, ..., k}. A scheme indexes an equivalence class of partitioned
/// permutations: those whose tuple of image words equals the scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionScheme {
    words: Vec<Vec<usize>>,
}

impl PartitionScheme {
    pub fn new(words: Vec<Vec<usize>>) -> Result<Self, PermError> {
        let k: usize = words.iter().map(Vec::len).sum();
        let mut seen = vec![false; k];
        for word in &words {
            for &w in word {
                if w < 1 || w > k || seen[w - 1] {
                    return Err(PermError::NotAPartition(format!(
                        "letters do not partition 1..={k}"
                    )));
                }
                seen[w - 1] = true;
            }
        }
        Ok(PartitionScheme { words })
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    /// Total number of letters.
    pub fn k(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    /// Number of words, including empty ones.
    pub fn copies(&self) -> usize {
        self.words.len()
    }

    pub fn nonempty_count(&self) -> usize {
        self.words.iter().filter(|w| !w.is_empty()).count()
    }
}

impl fmt::Display for PartitionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "[]");
        }
        for (i, word) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "[{}]", word.iter().join(","))?;
        }
        Ok(())
    }
}

/// All tuples of `copies` ordered words partitioning {1, ..., k}, in
/// lexicographic order by the letter-to-copy assignment vector and then by
/// the word orderings. The list length is the rising factorial
/// s(s+1)···(s+k−1) with s = `copies`.
pub fn enumerate_schemes(k: usize, copies: usize) -> Vec<PartitionScheme> {
    if copies == 0 {
        return if k == 0 {
            vec![PartitionScheme { words: Vec::new() }]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; k];
    loop {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); copies];
        for (letter0, &copy) in assignment.iter().enumerate() {
            buckets[copy].push(letter0 + 1);
        }
        let per_copy: Vec<Vec<Vec<usize>>> = buckets
            .iter()
            .map(|b| {
                if b.is_empty() {
                    vec![Vec::new()]
                } else {
                    b.iter().copied().permutations(b.len()).collect()
                }
            })
            .collect();
        for combo in per_copy.iter().map(|ws| ws.iter()).multi_cartesian_product() {
            out.push(PartitionScheme {
                words: combo.into_iter().cloned().collect(),
            });
        }
        if !next_assignment(&mut assignment, copies) {
            break;
        }
    }
    out
}

/// Odometer increment with the last digit fastest; false when exhausted.
fn next_assignment(assignment: &mut [usize], base: usize) -> bool {
    for pos in (0..assignment.len()).rev() {
        if assignment[pos] + 1 < base {
            assignment[pos] += 1;
            for later in assignment[pos + 1..].iter_mut() {
                *later = 0;
            }
            return true;
        }
    }
    false
}

/// All ways to assign each edge of `perm` to one of `copies` diagram copies,
/// i.e. all partitioned permutations with the given underlying permutation.
/// The list length is copies^k.
pub fn enumerate_distributions(perm: &Permutation, copies: usize) -> Vec<PartitionedPermutation> {
    let k = perm.size();
    if copies == 0 {
        return if k == 0 {
            vec![PartitionedPermutation {
                parts: Vec::new(),
                k: 0,
            }]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; k];
    loop {
        let parts = (0..copies)
            .map(|copy| {
                let domain: Vec<usize> = (1..=k).filter(|&i| assignment[i - 1] == copy).collect();
                let word = domain.iter().map(|&i| perm.image(i)).collect();
                PartialPermutation { domain, word }
            })
            .collect();
        out.push(PartitionedPermutation { parts, k });
        if !next_assignment(&mut assignment, copies) {
            break;
        }
    }
    out
}

/// The unique permutation whose l-th partial permutation maps the sorted
/// elements of `domains[l]` to the letters of the scheme's l-th word, in
/// order.
pub fn build_sigma(
    scheme: &PartitionScheme,
    domains: &[IndexSet],
) -> Result<Permutation, PermError> {
    if domains.len() != scheme.words().len() {
        return Err(PermError::NotAPartition(format!(
            "expected {} domains, got {}",
            scheme.words().len(),
            domains.len()
        )));
    }
    let k = scheme.k();
    for (index, (word, domain)) in scheme.words().iter().zip(domains).enumerate() {
        if domain.len() != word.len() {
            return Err(PermError::IncompatibleSizes {
                index: index + 1,
                domain: domain.len(),
                word: word.len(),
            });
        }
    }
    let mut images = vec![0usize; k];
    let mut seen = vec![false; k];
    for (word, domain) in scheme.words().iter().zip(domains) {
        for (&w, d) in word.iter().zip(domain.iter()) {
            if d > k || seen[d - 1] {
                return Err(PermError::NotAPartition(format!(
                    "domains do not partition 1..={k}"
                )));
            }
            seen[d - 1] = true;
            images[d - 1] = w;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(PermError::NotAPartition(format!(
            "domains do not cover 1..={k}"
        )));
    }
    Permutation::new(images)
}

/// Merges two disjoint partial permutations into one on the union of their
/// domains. Inside the merged domain, the second part is re-seated on the
/// positions its image set occupies inside the merged image set (the first
/// part takes the remaining positions), and both words are kept. By
/// construction sign(merged) = sign(a) · sign(b).
pub fn canonical_merge(
    a: &PartialPermutation,
    b: &PartialPermutation,
) -> Result<PartialPermutation, PermError> {
    let (da, db) = (a.domain_set(), b.domain_set());
    if da.intersects(&db) {
        return Err(PermError::OverlappingDomains);
    }
    let (ia, ib) = (a.image_set(), b.image_set());
    if ia.intersects(&ib) {
        return Err(PermError::OverlappingImages);
    }
    let universe_d = da.union(&db);
    let universe_j = ia.union(&ib);
    let b_domain: Vec<usize> = ib
        .iter()
        .map(|j| {
            let pos = universe_j.position_of(j).expect("image in union");
            universe_d.elements()[pos - 1]
        })
        .collect();
    let a_domain: Vec<usize> = universe_d
        .iter()
        .filter(|d| !b_domain.contains(d))
        .collect();
    let mut mapping: BTreeMap<usize, usize> = BTreeMap::new();
    for (&d, &w) in a_domain.iter().zip(a.image_word()) {
        mapping.insert(d, w);
    }
    for (&d, &w) in b_domain.iter().zip(b.image_word()) {
        mapping.insert(d, w);
    }
    let word = universe_d.iter().map(|d| mapping[&d]).collect();
    PartialPermutation::new(universe_d.elements().to_vec(), word)
}

/// The four sign factors of the edge-removal decomposition: removing the
/// edges of `part` from the diagram of `p` satisfies
/// sign(p) = domain_sign · image_sign · part_sign · rest_sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSigns {
    /// ε(domain of part, {1..n}).
    pub domain_sign: Sign,
    /// ε(image of part, {1..n}).
    pub image_sign: Sign,
    pub part_sign: Sign,
    pub rest_sign: Sign,
    /// The complement relabelled order-preservingly to a permutation.
    pub rest: Permutation,
}

impl SplitSigns {
    pub fn product(&self) -> Sign {
        self.domain_sign * self.image_sign * self.part_sign * self.rest_sign
    }
}

/// Decomposes sign(p) across a contained partial permutation, per the
/// edge-removal corollary.
pub fn split_sign(p: &Permutation, part: &PartialPermutation) -> Result<SplitSigns, PermError> {
    let n = p.size();
    for (&d, &w) in part.domain().iter().zip(part.image_word()) {
        if d < 1 || d > n {
            return Err(PermError::IndexOutOfRange { index: d, size: n });
        }
        if p.image(d) != w {
            return Err(PermError::PartNotContained);
        }
    }
    let ambient = IndexSet::range(n);
    let domain = part.domain_set();
    let image = part.image_set();
    let domain_sign = signsumset(&domain, &ambient)?;
    let image_sign = signsumset(&image, &ambient)?;
    let remaining_images = image.complement_in(&ambient)?;
    let rest_images: Vec<usize> = (1..=n)
        .filter(|&i| !domain.contains(i))
        .map(|i| {
            remaining_images
                .position_of(p.image(i))
                .expect("remaining image")
        })
        .collect();
    let rest = Permutation {
        images: rest_images,
    };
    Ok(SplitSigns {
        domain_sign,
        image_sign,
        part_sign: part.sign(),
        rest_sign: rest.sign(),
        rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    fn set(elements: &[usize]) -> IndexSet {
        IndexSet::new(elements.to_vec()).unwrap()
    }

    fn partial(domain: &[usize], word: &[usize]) -> PartialPermutation {
        PartialPermutation::new(domain.to_vec(), word.to_vec()).unwrap()
    }

    /// Independent sign oracle: parity of n minus the number of cycles.
    fn sign_by_cycles(p: &Permutation) -> Sign {
        let n = p.size();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at - 1] {
                seen[at - 1] = true;
                at = p.image(at);
            }
        }
        Sign::from_parity(n - cycles)
    }

    #[test]
    fn signsumset_examples() {
        assert_eq!(
            signsumset(&IndexSet::empty(), &IndexSet::range(5)).unwrap(),
            Sign::Plus
        );
        assert_eq!(
            signsumset(&set(&[1, 2]), &IndexSet::range(4)).unwrap(),
            Sign::Minus
        );
        // positions of {2,5} within {2,3,5,7} are 1 and 3
        assert_eq!(
            signsumset(&set(&[2, 5]), &set(&[2, 3, 5, 7])).unwrap(),
            Sign::Plus
        );
        assert_eq!(
            signsumset(&set(&[4]), &IndexSet::range(3)),
            Err(PermError::NotInAmbient { element: 4 })
        );
    }

    #[test]
    fn inversions_of_figure_permutation() {
        // 2,5,1,4,3 has five inversions; the pair (2,3) is the crossing of
        // edges 2->5 and 3->1.
        let p = perm(&[2, 5, 1, 4, 3]);
        assert_eq!(p.inversions(), vec![(1, 3), (2, 3), (2, 4), (2, 5), (4, 5)]);
        assert_eq!(p.inversion_count(), 5);
        assert_eq!(p.sign(), Sign::Minus);
        assert_eq!(sign_by_cycles(&p), Sign::Minus);
    }

    #[test]
    fn inversions_extremes() {
        assert!(Permutation::identity(6).inversions().is_empty());
        assert_eq!(Permutation::identity(6).sign(), Sign::Plus);
        let reversal = perm(&[4, 3, 2, 1]);
        assert_eq!(reversal.inversion_count(), 6);
        assert_eq!(perm(&[2, 1]).sign(), Sign::Minus);
    }

    #[test]
    fn sign_matches_cycle_oracle_exhaustively() {
        for n in 0..=7 {
            for p in Permutation::all(n) {
                assert_eq!(p.sign(), sign_by_cycles(&p), "sign mismatch for {p}");
            }
        }
    }

    #[test]
    fn weight_of_figure_permutation() {
        let p = perm(&[2, 5, 1, 4, 3]);
        let expected: Polynomial = "-x[1,2]*x[2,5]*x[3,1]*x[4,4]*x[5,3]".parse().unwrap();
        assert_eq!(p.weight(), expected);
        let id2: Polynomial = "x[1,1]*x[2,2]".parse().unwrap();
        assert_eq!(Permutation::identity(2).weight(), id2);
        let swap: Polynomial = "-x[1,2]*x[2,1]".parse().unwrap();
        assert_eq!(perm(&[2, 1]).weight(), swap);
    }

    #[test]
    fn remove_edge_from_identity() {
        let (rest, factor) = Permutation::identity(5).remove_edge(1).unwrap();
        assert_eq!(rest, Permutation::identity(4));
        assert_eq!(factor, Sign::Plus);
    }

    #[test]
    fn remove_edge_figure_case() {
        // removing edge 2->5: factor (−1)^(5−2) = −1, and the relabelled
        // leftover 2,1,4,3 has two inversions, hence sign +1; the lemma
        // contract sign(p) = factor · sign(rest) reads −1 = (−1)·(+1).
        let p = perm(&[2, 5, 1, 4, 3]);
        let (rest, factor) = p.remove_edge(2).unwrap();
        assert_eq!(factor, Sign::Minus);
        assert_eq!(rest, perm(&[2, 1, 4, 3]));
        assert_eq!(rest.sign(), Sign::Plus);
        assert_eq!(p.sign(), factor * rest.sign());
    }

    #[test]
    fn remove_edge_rejects_bad_index() {
        assert_eq!(
            perm(&[1, 2]).remove_edge(3),
            Err(PermError::IndexOutOfRange { index: 3, size: 2 })
        );
    }

    #[test]
    fn remove_edge_lemma_exhaustive() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                for i in 1..=n {
                    let (rest, factor) = p.remove_edge(i).unwrap();
                    assert_eq!(p.sign(), factor * rest.sign(), "lemma fails for {p} at {i}");
                }
            }
        }
    }

    #[test]
    fn split_sign_whole_permutation() {
        let p = perm(&[2, 5, 1, 4, 3]);
        let part = partial(&[1, 2, 3, 4, 5], &[2, 5, 1, 4, 3]);
        let split = split_sign(&p, &part).unwrap();
        assert_eq!(split.rest.size(), 0);
        assert_eq!(split.rest_sign, Sign::Plus);
        assert_eq!(split.domain_sign, split.image_sign);
        assert_eq!(split.product(), p.sign());
    }

    #[test]
    fn split_sign_single_edge_matches_remove_edge() {
        for n in 1..=5 {
            for p in Permutation::all(n) {
                for i in 1..=n {
                    let part = partial(&[i], &[p.image(i)]);
                    let split = split_sign(&p, &part).unwrap();
                    let (_, factor) = p.remove_edge(i).unwrap();
                    assert_eq!(split.domain_sign * split.image_sign, factor);
                    assert_eq!(split.product(), p.sign());
                }
            }
        }
    }

    #[test]
    fn split_sign_rejects_foreign_part() {
        let p = perm(&[2, 1]);
        let part = partial(&[1], &[1]);
        assert_eq!(split_sign(&p, &part), Err(PermError::PartNotContained));
    }

    #[test]
    fn split_sign_exhaustive_over_edge_subsets() {
        for n in 1..=5 {
            for p in Permutation::all(n) {
                for mask in 0u32..(1 << n) {
                    let domain: Vec<usize> =
                        (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                    let word: Vec<usize> = domain.iter().map(|&i| p.image(i)).collect();
                    let part = PartialPermutation::new(domain, word).unwrap();
                    let split = split_sign(&p, &part).unwrap();
                    assert_eq!(split.product(), p.sign(), "split fails for {p} mask {mask}");
                }
            }
        }
    }

    #[test]
    fn scheme_enumeration_small_cases() {
        let schemes = enumerate_schemes(1, 2);
        assert_eq!(
            schemes,
            vec![
                PartitionScheme::new(vec![vec![1], vec![]]).unwrap(),
                PartitionScheme::new(vec![vec![], vec![1]]).unwrap(),
            ]
        );
        let schemes = enumerate_schemes(2, 1);
        assert_eq!(
            schemes,
            vec![
                PartitionScheme::new(vec![vec![1, 2]]).unwrap(),
                PartitionScheme::new(vec![vec![2, 1]]).unwrap(),
            ]
        );
        assert_eq!(enumerate_schemes(3, 4).len(), 120);
        assert_eq!(enumerate_schemes(0, 3).len(), 1);
    }

    #[test]
    fn scheme_count_matches_rising_factorial() {
        for k in 0..=5usize {
            for s in 1..=5usize {
                let expected: usize = if k == 0 { 1 } else { (0..k).map(|j| s + j).product() };
                assert_eq!(enumerate_schemes(k, s).len(), expected, "k={k} s={s}");
            }
        }
    }

    #[test]
    fn scheme_of_figure_rows() {
        // the four rows of the erasure figure, as partitioned permutations
        let rows: Vec<PartitionedPermutation> = vec![
            "[3|1]*[1|2]*[2|3]*[|]".parse().unwrap(),
            "[3,2|1,3]*[1|2]*[|]*[|]".parse().unwrap(),
            "[3,1|1,2]*[|]*[2|3]*[|]".parse().unwrap(),
            "[3,1,2|1,2,3]*[|]*[|]*[|]".parse().unwrap(),
        ];
        let expected: Vec<PartitionScheme> = vec![
            PartitionScheme::new(vec![vec![3], vec![1], vec![2], vec![]]).unwrap(),
            PartitionScheme::new(vec![vec![3, 2], vec![1], vec![], vec![]]).unwrap(),
            PartitionScheme::new(vec![vec![3, 1], vec![], vec![2], vec![]]).unwrap(),
            PartitionScheme::new(vec![vec![3, 1, 2], vec![], vec![], vec![]]).unwrap(),
        ];
        for (row, want) in rows.iter().zip(&expected) {
            assert_eq!(row.scheme(), *want);
            assert_eq!(row.underlying(), perm(&[3, 1, 2]));
        }
    }

    #[test]
    fn scheme_of_single_part() {
        let t = PartitionedPermutation::new(vec![partial(&[1, 2, 3], &[2, 3, 1])]).unwrap();
        assert_eq!(
            t.scheme(),
            PartitionScheme::new(vec![vec![2, 3, 1]]).unwrap()
        );
    }

    #[test]
    fn distributions_count_and_round_trip() {
        for k in 0..=4usize {
            for s in 1..=4usize {
                for tau in Permutation::all(k) {
                    let dists = enumerate_distributions(&tau, s);
                    assert_eq!(dists.len(), s.pow(k as u32), "k={k} s={s} tau={tau}");
                    for d in &dists {
                        assert_eq!(d.underlying(), tau);
                    }
                }
            }
        }
    }

    #[test]
    fn distribution_edge_cases() {
        let tau = perm(&[1]);
        assert_eq!(enumerate_distributions(&tau, 5).len(), 5);
    }

    #[test]
    fn build_sigma_identity() {
        let scheme = PartitionScheme::new(vec![(1..=4).collect()]).unwrap();
        let sigma = build_sigma(&scheme, &[IndexSet::range(4)]).unwrap();
        assert_eq!(sigma, Permutation::identity(4));
    }

    #[test]
    fn build_sigma_two_parts() {
        let scheme = PartitionScheme::new(vec![vec![3], vec![1, 2]]).unwrap();
        let sigma = build_sigma(&scheme, &[set(&[2]), set(&[1, 3])]).unwrap();
        assert_eq!(sigma, perm(&[1, 3, 2]));
    }

    #[test]
    fn build_sigma_errors() {
        let scheme = PartitionScheme::new(vec![vec![1, 2]]).unwrap();
        assert!(matches!(
            build_sigma(&scheme, &[set(&[1])]),
            Err(PermError::IncompatibleSizes { .. })
        ));
        assert!(matches!(
            build_sigma(&scheme, &[set(&[1, 3])]),
            Err(PermError::NotAPartition(_))
        ));
    }

    #[test]
    fn build_sigma_round_trip_exhaustive() {
        for k in 0..=4usize {
            for s in 1..=3usize {
                for tau in Permutation::all(k) {
                    for dist in enumerate_distributions(&tau, s) {
                        let sigma = build_sigma(&dist.scheme(), &dist.domains()).unwrap();
                        assert_eq!(sigma, tau);
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_merge_with_empty_part() {
        let t1 = partial(&[1, 4], &[5, 2]);
        let merged = canonical_merge(&t1, &PartialPermutation::empty()).unwrap();
        assert_eq!(merged, t1);
    }

    #[test]
    fn canonical_merge_reseats_second_part() {
        let t1 = partial(&[1], &[2]);
        let t2 = partial(&[2], &[1]);
        let merged = canonical_merge(&t1, &t2).unwrap();
        // the image 1 sits at position 1 of the merged image set, so t2 is
        // re-seated on domain position 1; the merge is the identity word
        assert_eq!(merged, partial(&[1, 2], &[1, 2]));
        assert_eq!(merged.sign(), t1.sign() * t2.sign());
    }

    #[test]
    fn canonical_merge_rejects_overlap() {
        let t1 = partial(&[1], &[2]);
        assert_eq!(
            canonical_merge(&t1, &partial(&[1], &[3])),
            Err(PermError::OverlappingDomains)
        );
        assert_eq!(
            canonical_merge(&t1, &partial(&[2], &[2])),
            Err(PermError::OverlappingImages)
        );
    }

    /// All partial permutations inside {1..universe} with domain size up to
    /// `max_len`, avoiding the domain and image elements of `taken`.
    fn all_partials_avoiding(
        universe: usize,
        max_len: usize,
        taken: &PartialPermutation,
    ) -> Vec<PartialPermutation> {
        let free_domain: Vec<usize> = (1..=universe)
            .filter(|d| !taken.domain().contains(d))
            .collect();
        let free_image: Vec<usize> = (1..=universe)
            .filter(|w| !taken.image_word().contains(w))
            .collect();
        let mut out = Vec::new();
        for len in 0..=max_len.min(free_domain.len()).min(free_image.len()) {
            for domain in free_domain.iter().copied().combinations(len) {
                for word in free_image.iter().copied().permutations(len) {
                    out.push(PartialPermutation::new(domain.clone(), word).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn canonical_merge_sign_multiplicative_exhaustive() {
        let empty = PartialPermutation::empty();
        for t1 in all_partials_avoiding(6, 3, &empty) {
            for t2 in all_partials_avoiding(6, 3, &t1) {
                let merged = canonical_merge(&t1, &t2).unwrap();
                assert_eq!(
                    merged.sign(),
                    t1.sign() * t2.sign(),
                    "merge sign fails for {t1} and {t2}"
                );
            }
        }
    }

    #[test]
    fn parse_and_display_round_trips() {
        let p: Permutation = "2,5,1,4,3".parse().unwrap();
        assert_eq!(p.to_string(), "2,5,1,4,3");
        assert!("2,2,1".parse::<Permutation>().is_err());
        assert!("2,a".parse::<Permutation>().is_err());

        let t: PartitionedPermutation = "[3,2|1,3]*[1|2]*[|]".parse().unwrap();
        assert_eq!(t.to_string(), "[3,2|1,3]*[1|2]*[|]");

        let s: IndexSet = "3,1".parse().unwrap();
        assert_eq!(s.to_string(), "1,3");
        assert_eq!("".parse::<IndexSet>().unwrap(), IndexSet::empty());
    }

    #[test]
    fn partial_permutation_validation() {
        assert!(PartialPermutation::new(vec![2, 1], vec![1, 2]).is_err());
        assert!(PartialPermutation::new(vec![1, 2], vec![1, 1]).is_err());
        assert!(PartialPermutation::new(vec![1], vec![1, 2]).is_err());
        assert_eq!(PartialPermutation::empty().sign(), Sign::Plus);
    }

    #[test]
    fn dense_relabelling_preserves_sign() {
        let t = partial(&[2, 5, 6], &[7, 4, 1]);
        assert_eq!(t.to_dense(), perm(&[3, 2, 1]));
        assert_eq!(t.to_dense().sign(), t.sign());
    }
}
