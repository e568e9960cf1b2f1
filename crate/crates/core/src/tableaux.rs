//! r-tuples of Young diagrams, r-tableaux, reading words and index tableaux.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("not a partition: {rows:?}")));
        }
        Ok(Partition(rows))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.0.first().copied().unwrap_or(0);
        (0..width).map(|c| self.0.iter().filter(|&&len| len > c).count()).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "({})", self.0.iter().join(","))
        }
    }
}

/// All partitions of `k`, in decreasing lexicographic order: (k) first, (1^k) last.
pub fn partitions(k: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Product of hook lengths of a single Young diagram.
pub fn hook_product(part: &Partition) -> u64 {
    let cols = part.conjugate();
    let mut prod = 1u64;
    for (i, &len) in part.0.iter().enumerate() {
        for (j, &col_len) in cols.iter().enumerate().take(len) {
            let arm = len - j - 1;
            let leg = col_len - i - 1;
            prod *= (arm + leg + 1) as u64;
        }
    }
    prod
}

/// An r-tuple of Young diagrams λ = (λ¹,…,λ^r).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDiagram(Vec<Partition>);

impl MultiDiagram {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "need at least one component");
        MultiDiagram(components)
    }

    pub fn from_rows(components: &[&[usize]]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("need at least one component".into()));
        }
        Ok(MultiDiagram(components.iter().map(|c| Partition::new(c.to_vec())).collect::<Result<_>>()?))
    }

    /// The shape ((n),∅,…,∅) of the trivial representation.
    pub fn trivial(r: u32, n: usize) -> Self {
        let mut comps = vec![Partition::empty(); r as usize];
        if n > 0 {
            comps[0] = Partition(vec![n]);
        }
        MultiDiagram(comps)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn r(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for MultiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

/// All ways to write n as an ordered sum of `parts` non-negative integers.
fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// P_{r,n}: every r-tuple of partitions with total size n, in decreasing lexicographic order
/// (so the trivial shape ((n),∅,…) comes first).
pub fn enumerate_diagrams(r: u32, n: usize) -> Vec<MultiDiagram> {
    assert!(r >= 1, "r must be positive");
    let mut out = Vec::new();
    for sizes in weak_compositions(n, r as usize) {
        let choices = sizes.iter().map(|&k| partitions(k)).multi_cartesian_product();
        out.extend(choices.map(MultiDiagram));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// An r-tableau: each component is a list of rows, entries are the numbers 1..n, each once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Vec<usize>>>", into = "Vec<Vec<Vec<usize>>>")]
pub struct RTableau(Vec<Vec<Vec<usize>>>);

impl RTableau {
    /// Validates row shape and the bijective fill; standardness is not required.
    pub fn new(components: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("need at least one component".into()));
        }
        for comp in &components {
            let lens: Vec<usize> = comp.iter().map(Vec::len).collect();
            Partition::new(lens)?;
        }
        let mut entries: Vec<usize> = components.iter().flatten().flatten().copied().collect();
        entries.sort_unstable();
        if entries.iter().enumerate().any(|(i, &e)| e != i + 1) {
            return Err(Error::InvalidInput(format!("entries must be 1..n exactly once: {components:?}")));
        }
        Ok(RTableau(components))
    }

    pub fn components(&self) -> &[Vec<Vec<usize>>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().flatten().map(Vec::len).sum()
    }

    pub fn shape(&self) -> MultiDiagram {
        MultiDiagram(self.0.iter().map(|c| Partition(c.iter().map(Vec::len).collect())).collect())
    }

    /// Rows and columns strictly increasing in every component.
    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|comp| {
            let rows_ok = comp.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
            let cols_ok = comp.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
            rows_ok && cols_ok
        })
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard(self.to_string()))
        }
    }

    /// Component index (0-based) holding the number k.
    pub fn component_of(&self, k: usize) -> Option<usize> {
        self.0.iter().position(|c| c.iter().flatten().any(|&e| e == k))
    }

    /// Relabels entries: the number k becomes `perm[k-1] + 1`.
    pub fn relabel(&self, perm: &[usize]) -> RTableau {
        RTableau(
            self.0
                .iter()
                .map(|c| c.iter().map(|row| row.iter().map(|&e| perm[e - 1] + 1).collect()).collect())
                .collect(),
        )
    }
}

impl TryFrom<Vec<Vec<Vec<usize>>>> for RTableau {
    type Error = Error;
    fn try_from(v: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        RTableau::new(v)
    }
}

impl From<RTableau> for Vec<Vec<Vec<usize>>> {
    fn from(t: RTableau) -> Self {
        t.0
    }
}

impl fmt::Display for RTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps = self.0.iter().map(|c| {
            if c.is_empty() {
                "-".to_string()
            } else {
                c.iter().map(|row| row.iter().join(" ")).join("/")
            }
        });
        write!(f, "({})", comps.collect::<Vec<_>>().join(" | "))
    }
}

/// Non-negative integer per cell, laid out like the source tableau.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct IndexTableau(Vec<Vec<Vec<u32>>>);

impl IndexTableau {
    pub fn components(&self) -> &[Vec<Vec<u32>>] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().flatten().flatten().sum()
    }
}

/// All standard r-tableaux of the given shape, sorted lexicographically by their row
/// reading, so the first one is filled row by row.
pub fn enumerate_standard(shape: &MultiDiagram) -> Vec<RTableau> {
    let n = shape.size();
    let r = shape.0.len();
    // fill[ν][row] grows as numbers 1..n are placed at outer corners
    fn go(
        k: usize,
        n: usize,
        shape: &MultiDiagram,
        fill: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<RTableau>,
    ) {
        if k > n {
            out.push(RTableau(fill.clone()));
            return;
        }
        for nu in 0..shape.0.len() {
            let target = &shape.0[nu].0;
            for row in 0..target.len() {
                let cur = fill[nu][row].len();
                if cur < target[row] && (row == 0 || fill[nu][row - 1].len() > cur) {
                    fill[nu][row].push(k);
                    go(k + 1, n, shape, fill, out);
                    fill[nu][row].pop();
                }
            }
        }
    }
    let mut fill: Vec<Vec<Vec<usize>>> = (0..r).map(|nu| vec![Vec::new(); shape.0[nu].0.len()]).collect();
    let mut out = Vec::new();
    go(1, n, shape, &mut fill, &mut out);
    out.sort();
    out
}

/// f^λ, the number of standard r-tableaux of shape λ.
pub fn dimension(shape: &MultiDiagram) -> usize {
    enumerate_standard(shape).len()
}

/// f^λ by the closed form multinomial(n; |λ¹|,…,|λ^r|) · ∏_ν |λ^ν|! / hooks(λ^ν).
pub fn dimension_by_hooks(shape: &MultiDiagram) -> u64 {
    let factorial = |k: usize| (1..=k as u64).product::<u64>();
    let multinomial = factorial(shape.size()) / shape.0.iter().map(|p| factorial(p.size())).product::<u64>();
    shape.0.iter().fold(multinomial, |acc, p| acc * (factorial(p.size()) / hook_product(p)))
}

/// The reading word: components in order, columns left to right, each column bottom to top.
pub fn word(s: &RTableau) -> Result<Vec<usize>> {
    s.require_standard()?;
    let mut w = Vec::with_capacity(s.size());
    for comp in &s.0 {
        let width = comp.first().map_or(0, Vec::len);
        for col in 0..width {
            for row in comp.iter().rev() {
                if let Some(&e) = row.get(col) {
                    w.push(e);
                }
            }
        }
    }
    Ok(w)
}

/// i(S): i(1) = 0, and i(k+1) = i(k) + 1 when k+1 sits left of k in the word, else i(k).
pub fn index_tableau(s: &RTableau) -> Result<IndexTableau> {
    let w = word(s)?;
    let n = w.len();
    let mut pos = vec![0; n + 1];
    for (p, &e) in w.iter().enumerate() {
        pos[e] = p;
    }
    let mut idx = vec![0u32; n + 1];
    for k in 1..n {
        idx[k + 1] = if pos[k + 1] < pos[k] { idx[k] + 1 } else { idx[k] };
    }
    Ok(IndexTableau(
        s.0.iter().map(|c| c.iter().map(|row| row.iter().map(|&e| idx[e]).collect()).collect()).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn t(v: Vec<Vec<Vec<usize>>>) -> RTableau {
        RTableau::new(v).unwrap()
    }

    /// Oracle: all fillings of the shape by permutations of 1..n, filtered by standardness.
    fn brute_force_standard(shape: &MultiDiagram) -> Vec<RTableau> {
        let n = shape.size();
        let mut out = Vec::new();
        for perm in (1..=n).permutations(n) {
            let mut it = perm.into_iter();
            let comps: Vec<Vec<Vec<usize>>> = shape
                .components()
                .iter()
                .map(|p| p.rows().iter().map(|&len| it.by_ref().take(len).collect()).collect())
                .collect();
            let tab = RTableau(comps);
            if tab.is_standard() {
                out.push(tab);
            }
        }
        out.sort();
        out
    }

    /// Oracle: ordered r-tuples of partitions by brute force over all size vectors.
    fn brute_force_diagram_count(r: u32, n: usize) -> usize {
        let p: Vec<usize> = (0..=n).map(|k| partitions(k).len()).collect();
        (0..r)
            .map(|_| 0..=n)
            .multi_cartesian_product()
            .filter(|s| s.iter().sum::<usize>() == n)
            .map(|s| s.iter().map(|&k| p[k]).product::<usize>())
            .sum()
    }

    #[test]
    fn partitions_of_small_numbers() {
        let p3: Vec<Vec<usize>> = partitions(3).into_iter().map(Into::into).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn diagram_enumeration() {
        let d13 = enumerate_diagrams(1, 3);
        assert_eq!(d13.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["((3))", "((2,1))", "((1,1,1))"]);
        assert_eq!(enumerate_diagrams(2, 2).len(), 5);
        assert_eq!(enumerate_diagrams(3, 1).len(), 3);
        for (r, n) in [(1, 4), (2, 3), (3, 2), (3, 3), (4, 2)] {
            let ds = enumerate_diagrams(r, n);
            assert_eq!(ds.len(), brute_force_diagram_count(r, n));
            assert!(ds.windows(2).all(|w| w[0] > w[1]), "strictly decreasing, no duplicates");
        }
        assert_eq!(enumerate_diagrams(2, 2)[0], MultiDiagram::trivial(2, 2));
    }

    #[test]
    fn standard_tableaux_examples() {
        let s = MultiDiagram::from_rows(&[&[1], &[1]]).unwrap();
        let tabs = enumerate_standard(&s);
        assert_eq!(tabs, vec![t(vec![vec![vec![1]], vec![vec![2]]]), t(vec![vec![vec![2]], vec![vec![1]]])]);
        assert_eq!(enumerate_standard(&MultiDiagram::from_rows(&[&[2], &[]]).unwrap()).len(), 1);
        assert_eq!(enumerate_standard(&MultiDiagram::from_rows(&[&[1, 1], &[]]).unwrap()).len(), 1);
        for (r, n) in [(1, 4), (2, 3), (3, 2), (2, 4)] {
            for shape in enumerate_diagrams(r, n) {
                assert_eq!(enumerate_standard(&shape), brute_force_standard(&shape), "{shape}");
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&MultiDiagram::from_rows(&[&[1], &[1]]).unwrap()), 2);
        assert_eq!(dimension(&MultiDiagram::from_rows(&[&[2, 1], &[]]).unwrap()), 2);
        let total: usize = enumerate_diagrams(2, 2).iter().map(|d| dimension(d).pow(2)).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn sum_of_squares_is_group_order() {
        let factorial = |k: usize| (1..=k).product::<usize>();
        for r in 1..=5u32 {
            for n in 0..=5usize {
                let order = (r as usize).pow(n as u32) * factorial(n);
                if order > 10_000 {
                    continue;
                }
                let diagrams = enumerate_diagrams(r, n);
                let sum: usize = diagrams.iter().map(|d| dimension(d).pow(2)).sum();
                assert_eq!(sum, order, "(r,n)=({r},{n})");
                for d in &diagrams {
                    assert_eq!(dimension(d) as u64, dimension_by_hooks(d));
                }
            }
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_product(&Partition::new(vec![2, 1]).unwrap()), 3);
        assert_eq!(hook_product(&Partition::new(vec![4]).unwrap()), 24);
        assert_eq!(hook_product(&Partition::new(vec![1, 1]).unwrap()), 2);
        assert_eq!(hook_product(&Partition::new(vec![3, 2]).unwrap()), 24);
    }

    #[test]
    fn words() {
        assert_eq!(word(&t(vec![vec![vec![1, 2, 3]]])).unwrap(), vec![1, 2, 3]);
        assert_eq!(word(&t(vec![vec![vec![1], vec![2]]])).unwrap(), vec![2, 1]);
        assert_eq!(word(&t(vec![vec![vec![1]], vec![vec![2]]])).unwrap(), vec![1, 2]);
        assert_eq!(word(&t(vec![vec![vec![1, 3], vec![2]]])).unwrap(), vec![2, 1, 3]);
        assert_eq!(word(&t(vec![vec![], vec![vec![1, 2]]])).unwrap(), vec![1, 2]);
        assert!(matches!(word(&t(vec![vec![vec![2, 1]]])), Err(Error::NotStandard(_))));
    }

    #[test]
    fn index_tableaux() {
        let i = index_tableau(&t(vec![vec![vec![1, 2, 3]]])).unwrap();
        assert_eq!(i.components(), &[vec![vec![0, 0, 0]]]);
        let i = index_tableau(&t(vec![vec![vec![1], vec![2]]])).unwrap();
        assert_eq!(i.components(), &[vec![vec![0], vec![1]]]);
        // 2 in component 1, 1 in component 2: word (2,1), so i(2) = 1 on component 1's cell
        let i = index_tableau(&t(vec![vec![vec![2]], vec![vec![1]]])).unwrap();
        assert_eq!(i.components(), &[vec![vec![1]], vec![vec![0]]]);
    }

    #[test]
    fn word_and_index_invariants() {
        for (r, n) in [(1, 4), (2, 3), (3, 3)] {
            for shape in enumerate_diagrams(r, n) {
                for s in enumerate_standard(&shape) {
                    let mut w = word(&s).unwrap();
                    w.sort();
                    assert_eq!(w, (1..=n).collect::<Vec<_>>());
                    let idx = index_tableau(&s).unwrap();
                    let one_cell = s.components().iter().flatten().flatten().position(|&e| e == 1).unwrap();
                    assert_eq!(idx.components().iter().flatten().flatten().nth(one_cell), Some(&0));
                }
            }
        }
    }

    #[test]
    fn validation_and_json() {
        assert!(RTableau::new(vec![vec![vec![1, 1]]]).is_err());
        assert!(RTableau::new(vec![vec![vec![1], vec![2, 3]]]).is_err());
        let tab: RTableau = serde_json::from_str("[[[1,3],[2]],[]]").unwrap();
        assert_eq!(tab.shape(), MultiDiagram::from_rows(&[&[2, 1], &[]]).unwrap());
        assert_eq!(serde_json::to_string(&tab.shape()).unwrap(), "[[2,1],[]]");
        assert!(serde_json::from_str::<RTableau>("[[[1,2],[4]]]").is_err());
    }
}
