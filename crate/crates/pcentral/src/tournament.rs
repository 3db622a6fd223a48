//! Tournament analysis of coherent 3-central generating sets.
//!
//! A generating set with all pairs non-commuting orients the complete graph:
//! the edge between i and j points from i to j exactly when the commutation
//! exponent `C_{i,j}` is 1. Directed triangles then mark triples whose
//! product is central, and a coherent configuration obeys three structural
//! rules: every vertex outside a triangle orients uniformly towards or away
//! from it, triangles are pairwise disjoint, and no directed cycle is longer
//! than 3. Removing one vertex from each triangle (the *diminish* step)
//! leaves an acyclic tournament.
//!
//! The module also carries the exhaustive search for the largest coherent
//! set of monomial classes inside a split product of degree-3 symbol
//! algebras, which attains `3m + 1`.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde_json::Value;

use crate::clifford::{classify_triple, CliffordElement, PCentralPresentation, TripleCase};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::json::{as_array, as_usize, get, object};
use crate::linalg::FpMatrix;

/// A complete graph with every edge directed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Tournament {
    /// Validates that the edges orient each unordered pair exactly once.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            if j >= n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            if set.contains(&(i, j)) || set.contains(&(j, i)) {
                return Err(Error::DuplicateEdge {
                    i: i.min(j),
                    j: i.max(j),
                });
            }
            set.insert((i, j));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !set.contains(&(i, j)) && !set.contains(&(j, i)) {
                    return Err(Error::MissingEdge { i, j });
                }
            }
        }
        Ok(Self { n, edges: set })
    }

    /// Orients the complete graph on the generators of a p = 3 presentation:
    /// edge i→j exactly when `C_{i,j} = 1`. Every pair must be
    /// non-commuting, otherwise the set cannot span independent lines.
    pub fn from_presentation(pres: &PCentralPresentation) -> Result<Self> {
        if pres.prime() != 3 {
            return Err(Error::Unsupported(format!(
                "tournament analysis is defined for p = 3, got p = {}",
                pres.prime()
            )));
        }
        let n = pres.generator_count();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                match pres.phase_exponent(i, j) {
                    1 => edges.push((i, j)),
                    2 => edges.push((j, i)),
                    _ => return Err(Error::CommutingGenerators { i, j }),
                }
            }
        }
        Self::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    /// All directed triangles, each reported once with sorted vertices.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                for k in (j + 1)..self.n {
                    let forward = self.has_edge(i, j) && self.has_edge(j, k) && self.has_edge(k, i);
                    let backward =
                        self.has_edge(i, k) && self.has_edge(k, j) && self.has_edge(j, i);
                    if forward || backward {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    /// Finds a simple directed cycle with at least `min_len` vertices, if
    /// one exists. Depth-first search attributed to the smallest vertex of
    /// the cycle, with early exit; fine at the vertex counts this toolkit
    /// works with.
    pub fn find_directed_cycle(&self, min_len: usize) -> Option<Vec<usize>> {
        for start in 0..self.n {
            let mut path = vec![start];
            let mut on_path = vec![false; self.n];
            on_path[start] = true;
            if let Some(cycle) = self.cycle_dfs(start, start, &mut path, &mut on_path, min_len) {
                return Some(cycle);
            }
        }
        None
    }

    fn cycle_dfs(
        &self,
        start: usize,
        current: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        min_len: usize,
    ) -> Option<Vec<usize>> {
        for next in 0..self.n {
            if !self.has_edge(current, next) {
                continue;
            }
            if next == start && path.len() >= min_len {
                return Some(path.clone());
            }
            if next > start && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                if let Some(cycle) = self.cycle_dfs(start, next, path, on_path, min_len) {
                    return Some(cycle);
                }
                path.pop();
                on_path[next] = false;
            }
        }
        None
    }

    /// Checks the three structural rules of a coherent configuration and
    /// reports a concrete witness for every failure.
    pub fn validate_propositions(&self) -> PropositionReport {
        let triangles = self.triangles();

        let mut prop1 = None;
        'outer1: for t in &triangles {
            for vertex in 0..self.n {
                if t.contains(&vertex) {
                    continue;
                }
                let towards = t.iter().filter(|&&v| self.has_edge(vertex, v)).count();
                if towards != 0 && towards != 3 {
                    prop1 = Some(Prop1Witness { cycle: *t, vertex });
                    break 'outer1;
                }
            }
        }

        let mut prop2 = None;
        'outer2: for (a, first) in triangles.iter().enumerate() {
            for second in triangles.iter().skip(a + 1) {
                if let Some(&shared) = first.iter().find(|v| second.contains(v)) {
                    prop2 = Some(Prop2Witness {
                        first: *first,
                        second: *second,
                        shared_vertex: shared,
                    });
                    break 'outer2;
                }
            }
        }

        let prop3 = self
            .find_directed_cycle(4)
            .map(|cycle| Prop3Witness { cycle });

        PropositionReport {
            triangles,
            prop1,
            prop2,
            prop3,
        }
    }

    /// Removes the smallest-index vertex of every triangle.
    pub fn diminish(&self) -> Result<DiminishOutcome> {
        self.diminish_with(|t| t[0])
    }

    /// Removes one selected vertex per triangle from an admissible
    /// tournament; the result is relabeled compactly (order preserved) and
    /// verified acyclic. Disjointness of triangles makes the removal order
    /// irrelevant.
    pub fn diminish_with(
        &self,
        selector: impl Fn(&[usize; 3]) -> usize,
    ) -> Result<DiminishOutcome> {
        let report = self.validate_propositions();
        if !report.admissible() {
            return Err(Error::NotAdmissible(report.failure_summary()));
        }
        let mut removed = Vec::new();
        for t in &report.triangles {
            let choice = selector(t);
            if !t.contains(&choice) {
                return Err(Error::SelectionOutsideCycle {
                    vertex: choice,
                    a: t[0],
                    b: t[1],
                    c: t[2],
                });
            }
            removed.push(choice);
        }
        removed.sort_unstable();

        let kept: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in kept.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| relabel[i] != usize::MAX && relabel[j] != usize::MAX)
            .map(|&(i, j)| (relabel[i], relabel[j]));
        let tournament = Self::new(kept.len(), edges)?;
        assert!(
            tournament.find_directed_cycle(3).is_none(),
            "internal error: diminished tournament still has a directed cycle"
        );
        Ok(DiminishOutcome {
            tournament,
            removed,
            kept,
        })
    }

    /// JSON form: `{"n": int, "edges": [[from, to],...]}` with vertices
    /// numbered `0..n-1`.
    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                Value::Array(vec![
                    Value::Number((i as u64).into()),
                    Value::Number((j as u64).into()),
                ])
            })
            .collect();
        object(vec![
            ("n", Value::Number((self.n as u64).into())),
            ("edges", Value::Array(edges)),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "tournament";
        let n = as_usize(get(value, "n", ctx)?, "vertex count")?;
        let edges = as_array(get(value, "edges", ctx)?, "edges")?
            .iter()
            .map(|e| {
                let pair = as_array(e, "edge")?;
                if pair.len() != 2 {
                    return Err(Error::Format("edge must be a pair [from, to]".into()));
                }
                Ok((
                    as_usize(&pair[0], "edge endpoint")?,
                    as_usize(&pair[1], "edge endpoint")?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Witness {
    pub cycle: [usize; 3],
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop2Witness {
    pub first: [usize; 3],
    pub second: [usize; 3],
    pub shared_vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop3Witness {
    pub cycle: Vec<usize>,
}

/// Per-rule outcome with a concrete witness on failure; `None` means pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    pub triangles: Vec<[usize; 3]>,
    /// A triangle and an outside vertex with mixed orientation towards it.
    pub prop1: Option<Prop1Witness>,
    /// Two triangles sharing a vertex.
    pub prop2: Option<Prop2Witness>,
    /// A directed cycle longer than 3.
    pub prop3: Option<Prop3Witness>,
}

impl PropositionReport {
    pub fn admissible(&self) -> bool {
        self.prop1.is_none() && self.prop2.is_none() && self.prop3.is_none()
    }

    pub fn failure_summary(&self) -> String {
        if let Some(w) = &self.prop1 {
            format!(
                "vertex {} orients inconsistently towards triangle ({},{},{})",
                w.vertex, w.cycle[0], w.cycle[1], w.cycle[2]
            )
        } else if let Some(w) = &self.prop2 {
            format!(
                "triangles ({},{},{}) and ({},{},{}) share vertex {}",
                w.first[0],
                w.first[1],
                w.first[2],
                w.second[0],
                w.second[1],
                w.second[2],
                w.shared_vertex
            )
        } else if let Some(w) = &self.prop3 {
            format!(
                "directed cycle of length {} found: {:?}",
                w.cycle.len(),
                w.cycle
            )
        } else {
            "all propositions hold".into()
        }
    }

    fn triple_json(t: &[usize; 3]) -> Value {
        Value::Array(
            t.iter()
                .map(|&v| Value::Number((v as u64).into()))
                .collect(),
        )
    }

    fn prop_json(ok: bool, witness: Option<Value>) -> Value {
        object(vec![
            ("ok", Value::Bool(ok)),
            ("witness", witness.unwrap_or(Value::Null)),
        ])
    }

    /// JSON form: `{"admissible": bool, "prop1": {"ok": bool, "witness": …},
    /// "prop2": …, "prop3": …, "triangles": [[i,j,k],...]}`.
    pub fn to_json(&self) -> Value {
        let prop1 = Self::prop_json(
            self.prop1.is_none(),
            self.prop1.as_ref().map(|w| {
                object(vec![
                    ("cycle", Self::triple_json(&w.cycle)),
                    ("vertex", Value::Number((w.vertex as u64).into())),
                ])
            }),
        );
        let prop2 = Self::prop_json(
            self.prop2.is_none(),
            self.prop2.as_ref().map(|w| {
                object(vec![
                    ("first", Self::triple_json(&w.first)),
                    ("second", Self::triple_json(&w.second)),
                    (
                        "shared_vertex",
                        Value::Number((w.shared_vertex as u64).into()),
                    ),
                ])
            }),
        );
        let prop3 = Self::prop_json(
            self.prop3.is_none(),
            self.prop3.as_ref().map(|w| {
                object(vec![(
                    "cycle",
                    Value::Array(
                        w.cycle
                            .iter()
                            .map(|&v| Value::Number((v as u64).into()))
                            .collect(),
                    ),
                )])
            }),
        );
        object(vec![
            ("admissible", Value::Bool(self.admissible())),
            ("prop1", prop1),
            ("prop2", prop2),
            ("prop3", prop3),
            (
                "triangles",
                Value::Array(self.triangles.iter().map(Self::triple_json).collect()),
            ),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "proposition report";
        let triangles = as_array(get(value, "triangles", ctx)?, "triangles")?
            .iter()
            .map(triple_from_json)
            .collect::<Result<Vec<_>>>()?;
        let witness = |key: &str| -> Result<Option<&Value>> {
            let prop = get(value, key, ctx)?;
            let w = get(prop, "witness", key)?;
            Ok((!w.is_null()).then_some(w))
        };
        let prop1 = witness("prop1")?
            .map(|w| -> Result<Prop1Witness> {
                Ok(Prop1Witness {
                    cycle: triple_from_json(get(w, "cycle", "prop1 witness")?)?,
                    vertex: as_usize(get(w, "vertex", "prop1 witness")?, "vertex")?,
                })
            })
            .transpose()?;
        let prop2 = witness("prop2")?
            .map(|w| -> Result<Prop2Witness> {
                Ok(Prop2Witness {
                    first: triple_from_json(get(w, "first", "prop2 witness")?)?,
                    second: triple_from_json(get(w, "second", "prop2 witness")?)?,
                    shared_vertex: as_usize(
                        get(w, "shared_vertex", "prop2 witness")?,
                        "shared vertex",
                    )?,
                })
            })
            .transpose()?;
        let prop3 = witness("prop3")?
            .map(|w| -> Result<Prop3Witness> {
                Ok(Prop3Witness {
                    cycle: as_array(get(w, "cycle", "prop3 witness")?, "cycle")?
                        .iter()
                        .map(|v| as_usize(v, "cycle vertex"))
                        .collect::<Result<Vec<_>>>()?,
                })
            })
            .transpose()?;
        Ok(Self {
            triangles,
            prop1,
            prop2,
            prop3,
        })
    }
}

fn triple_from_json(value: &Value) -> Result<[usize; 3]> {
    let items = as_array(value, "triangle")?;
    if items.len() != 3 {
        return Err(Error::Format("triangle must list three vertices".into()));
    }
    Ok([
        as_usize(&items[0], "triangle vertex")?,
        as_usize(&items[1], "triangle vertex")?,
        as_usize(&items[2], "triangle vertex")?,
    ])
}

/// Result of the diminish step. Vertices of the reduced tournament are
/// relabeled to `0..kept.len()`, with `kept[new] = old`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiminishOutcome {
    pub tournament: Tournament,
    pub removed: Vec<usize>,
    pub kept: Vec<usize>,
}

impl DiminishOutcome {
    pub fn to_json(&self) -> Value {
        object(vec![
            ("tournament", self.tournament.to_json()),
            (
                "removed",
                Value::Array(
                    self.removed
                        .iter()
                        .map(|&v| Value::Number((v as u64).into()))
                        .collect(),
                ),
            ),
            (
                "kept",
                Value::Array(
                    self.kept
                        .iter()
                        .map(|&v| Value::Number((v as u64).into()))
                        .collect(),
                ),
            ),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "diminish outcome";
        let vertices = |key: &str| -> Result<Vec<usize>> {
            as_array(get(value, key, ctx)?, key)?
                .iter()
                .map(|v| as_usize(v, "vertex"))
                .collect()
        };
        Ok(Self {
            tournament: Tournament::from_json(get(value, "tournament", ctx)?)?,
            removed: vertices("removed")?,
            kept: vertices("kept")?,
        })
    }
}

/// A nonzero exponent vector in (Z/3Z)^n up to scalar multiple: `v` and `2v`
/// name the same class, and the lexicographically smaller one is stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialClass {
    exponents: Vec<u32>,
}

impl MonomialClass {
    pub fn new(exponents: &[u32]) -> Result<Self> {
        if exponents.iter().all(|&e| e == 0) {
            return Err(Error::Format(
                "monomial class must be a nonzero vector".into(),
            ));
        }
        if let Some((index, &value)) = exponents.iter().enumerate().find(|&(_, &e)| e >= 3) {
            return Err(Error::ExponentOutOfRange {
                index,
                value: value as u64,
                p: 3,
            });
        }
        let doubled: Vec<u32> = exponents.iter().map(|&e| (2 * e) % 3).collect();
        let canonical = if doubled.as_slice() < exponents {
            doubled
        } else {
            exponents.to_vec()
        };
        Ok(Self {
            exponents: canonical,
        })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The canonical monomial representative with coefficient 1.
    pub fn representative(&self, pres: &Arc<PCentralPresentation>) -> Result<CliffordElement> {
        CliffordElement::monomial(pres, &self.exponents, CycloNum::one(pres.prime())?)
    }
}

impl std::fmt::Display for MonomialClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        write!(f, "{}", names.join("*"))
    }
}

/// The split tensor product of `m` degree-3 symbol algebras: 2m generators,
/// commutation matrix a direct sum of hyperbolic blocks, all cubes 1.
pub fn split_symbol_product(m: usize) -> Result<Arc<PCentralPresentation>> {
    let n = 2 * m;
    let c = FpMatrix::canonical_alternating(3, n, m)?;
    let one = CycloNum::one(3)?;
    Ok(PCentralPresentation::new(c, vec![one; n])?.into_shared())
}

/// All monomial classes of the split product, in lexicographic order.
pub fn monomial_classes(m: usize) -> Result<Vec<MonomialClass>> {
    let n = 2 * m;
    let count = 3usize.pow(n as u32);
    let mut seen = BTreeSet::new();
    for code in 1..count {
        let mut v = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            v.push((rest % 3) as u32);
            rest /= 3;
        }
        v.reverse();
        seen.insert(MonomialClass::new(&v)?);
    }
    Ok(seen.into_iter().collect())
}

/// Exhaustive branch-and-bound for the largest set of monomial classes that
/// is pairwise non-commuting with every triple coherent (star product zero
/// or scalar). Classification runs through the element engine on canonical
/// representatives. Returns the maximum size and its lexicographically
/// first witness.
pub fn max_coherent_monomial_set(m: usize) -> Result<(usize, Vec<MonomialClass>)> {
    if !(1..=2).contains(&m) {
        return Err(Error::Unsupported(format!(
            "coherent monomial search supports m in {{1, 2}}, got {m}"
        )));
    }
    let pres = split_symbol_product(m)?;
    let classes = monomial_classes(m)?;
    let reps: Vec<CliffordElement> = classes
        .iter()
        .map(|c| c.representative(&pres))
        .collect::<Result<_>>()?;

    let count = classes.len();
    let mut compatible = vec![vec![false; count]; count];
    for i in 0..count {
        for j in (i + 1)..count {
            let non_commuting = !reps[i].commutes_with(&reps[j])?;
            compatible[i][j] = non_commuting;
            compatible[j][i] = non_commuting;
        }
    }
    let mut bad_triples = HashSet::new();
    for i in 0..count {
        for j in (i + 1)..count {
            if !compatible[i][j] {
                continue;
            }
            for k in (j + 1)..count {
                if !compatible[i][k] || !compatible[j][k] {
                    continue;
                }
                if classify_triple(&reps[i], &reps[j], &reps[k])? == TripleCase::NotCoherent {
                    bad_triples.insert([i, j, k]);
                }
            }
        }
    }

    struct Search<'a> {
        count: usize,
        compatible: &'a [Vec<bool>],
        bad_triples: &'a HashSet<[usize; 3]>,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn extend(&mut self, chosen: &mut Vec<usize>, start: usize) {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            for candidate in start..self.count {
                // bound: even taking every remaining class cannot beat best
                if chosen.len() + (self.count - candidate) <= self.best.len() {
                    break;
                }
                if !chosen.iter().all(|&c| self.compatible[c][candidate]) {
                    continue;
                }
                let coherent = chosen.iter().enumerate().all(|(idx, &a)| {
                    chosen[idx + 1..]
                        .iter()
                        .all(|&b| !self.bad_triples.contains(&[a, b, candidate]))
                });
                if !coherent {
                    continue;
                }
                chosen.push(candidate);
                self.extend(chosen, candidate + 1);
                chosen.pop();
            }
        }
    }

    let mut search = Search {
        count,
        compatible: &compatible,
        bad_triples: &bad_triples,
        best: Vec::new(),
    };
    search.extend(&mut Vec::new(), 0);

    let witness: Vec<MonomialClass> = search.best.iter().map(|&i| classes[i].clone()).collect();
    Ok((witness.len(), witness))
}

/// Rebuilds a presentation from the pairwise commutation phases and engine
/// cubes of monomial-class representatives, so a coherent witness can be
/// fed back through [`Tournament::from_presentation`].
pub fn presentation_from_monomial_classes(
    classes: &[MonomialClass],
    base: &Arc<PCentralPresentation>,
) -> Result<PCentralPresentation> {
    let n = classes.len();
    let reps: Vec<CliffordElement> = classes
        .iter()
        .map(|c| c.representative(base))
        .collect::<Result<_>>()?;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let lhs = reps[i].mul(&reps[j])?;
            let rhs = reps[j].mul(&reps[i])?;
            let phase = (0..3)
                .find(|&k| {
                    rhs.scale(&CycloNum::root_power(3, k).expect("valid prime"))
                        .expect("same prime")
                        == lhs
                })
                .expect("monomial products differ by a root-of-unity phase");
            rows[i][j] = phase;
        }
    }
    let powers = reps
        .iter()
        .map(|r| {
            Ok(r.pth_power()?
                .as_scalar()
                .expect("cube of a monomial is scalar"))
        })
        .collect::<Result<Vec<_>>>()?;
    PCentralPresentation::new(FpMatrix::from_rows(3, &rows)?, powers)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn presentation(c: &[&[i64]], alphas: &[i64]) -> Arc<PCentralPresentation> {
        let rows: Vec<Vec<i64>> = c.iter().map(|r| r.to_vec()).collect();
        let powers = alphas
            .iter()
            .map(|&a| CycloNum::from_integer(3, a).unwrap())
            .collect();
        PCentralPresentation::new(FpMatrix::from_rows(3, &rows).unwrap(), powers)
            .unwrap()
            .into_shared()
    }

    fn cycle3() -> Tournament {
        Tournament::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn transitive(n: usize) -> Tournament {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Tournament::new(n, edges).unwrap()
    }

    #[test]
    fn construction_validates_completeness() {
        assert!(Tournament::new(3, [(0, 1), (1, 2)]).is_err());
        assert!(matches!(
            Tournament::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { i: 0, j: 1 })
        ));
        assert!(matches!(
            Tournament::new(2, [(0, 0), (0, 1)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Tournament::new(2, [(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn from_presentation_orients_edges() {
        let pres = presentation(&[&[0, 1], &[2, 0]], &[1, 1]);
        let t = Tournament::from_presentation(&pres).unwrap();
        assert!(t.has_edge(0, 1));
        assert!(!t.has_edge(1, 0));

        let cyclic = presentation(&[&[0, 1, 2], &[2, 0, 1], &[1, 2, 0]], &[1, 1, 1]);
        let t = Tournament::from_presentation(&cyclic).unwrap();
        assert_eq!(t, cycle3());

        let trans = presentation(&[&[0, 1, 1], &[2, 0, 1], &[2, 2, 0]], &[1, 1, 1]);
        let t = Tournament::from_presentation(&trans).unwrap();
        assert_eq!(t, transitive(3));
    }

    #[test]
    fn from_presentation_rejects_commuting_pair() {
        let pres = presentation(&[&[0, 0], &[0, 0]], &[1, 1]);
        assert!(matches!(
            Tournament::from_presentation(&pres),
            Err(Error::CommutingGenerators { i: 0, j: 1 })
        ));
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(cycle3().triangles(), vec![[0, 1, 2]]);
        assert!(transitive(4).triangles().is_empty());
        // triangle plus a uniformly oriented fourth vertex
        let t = Tournament::new(4, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]).unwrap();
        assert_eq!(t.triangles(), vec![[0, 1, 2]]);
    }

    #[test]
    fn propositions_pass_on_clean_inputs() {
        for t in [cycle3(), transitive(5)] {
            let report = t.validate_propositions();
            assert!(report.admissible(), "{}", report.failure_summary());
        }
    }

    #[test]
    fn prop1_catches_mixed_orientation() {
        let t = Tournament::new(4, [(0, 1), (1, 2), (2, 0), (3, 0), (1, 3), (3, 2)]).unwrap();
        let report = t.validate_propositions();
        let w = report.prop1.as_ref().expect("prop1 must fail");
        assert_eq!(w.cycle, [0, 1, 2]);
        assert_eq!(w.vertex, 3);
        assert!(!report.admissible());
    }

    #[test]
    fn prop2_catches_shared_vertex() {
        let t = Tournament::new(
            5,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (0, 3),
                (3, 4),
                (4, 0),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
            ],
        )
        .unwrap();
        let report = t.validate_propositions();
        let w = report.prop2.as_ref().expect("prop2 must fail");
        assert_eq!(w.shared_vertex, 0);
    }

    #[test]
    fn prop3_catches_long_cycles() {
        // 0→1→2→3→0 with chords 0→2, 1→3
        let t = Tournament::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let report = t.validate_propositions();
        let w = report.prop3.as_ref().expect("prop3 must fail");
        assert!(w.cycle.len() >= 4);
        assert!(!report.admissible());
    }

    #[test]
    fn diminish_removes_one_vertex_per_triangle() {
        let out = cycle3().diminish().unwrap();
        assert_eq!(out.removed, vec![0]);
        assert_eq!(out.kept, vec![1, 2]);
        assert_eq!(out.tournament.vertex_count(), 2);
        assert!(out.tournament.triangles().is_empty());

        let untouched = transitive(4).diminish().unwrap();
        assert_eq!(untouched.tournament, transitive(4));
        assert!(untouched.removed.is_empty());

        let t = Tournament::new(4, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]).unwrap();
        let out = t.diminish().unwrap();
        assert_eq!(out.tournament.vertex_count(), 3);
        assert!(out.tournament.find_directed_cycle(3).is_none());
    }

    #[test]
    fn diminish_with_custom_selector() {
        let out = cycle3().diminish_with(|t| t[2]).unwrap();
        assert_eq!(out.removed, vec![2]);
        let err = cycle3().diminish_with(|_| 7);
        assert!(matches!(
            err,
            Err(Error::SelectionOutsideCycle { vertex: 7, .. })
        ));
    }

    #[test]
    fn diminish_rejects_non_admissible() {
        let t = Tournament::new(4, [(0, 1), (1, 2), (2, 0), (3, 0), (1, 3), (3, 2)]).unwrap();
        assert!(matches!(t.diminish(), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn json_round_trip() {
        let t = cycle3();
        assert_eq!(Tournament::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(
            crate::json::to_canonical_string(&t.to_json()),
            "{\"edges\":[[0,1],[1,2],[2,0]],\"n\":3}\n"
        );
    }

    #[test]
    fn report_json_round_trips() {
        let admissible = cycle3().validate_propositions();
        assert_eq!(
            PropositionReport::from_json(&admissible.to_json()).unwrap(),
            admissible
        );
        let failing = Tournament::new(4, [(0, 1), (1, 2), (2, 0), (3, 0), (1, 3), (3, 2)])
            .unwrap()
            .validate_propositions();
        assert_eq!(
            PropositionReport::from_json(&failing.to_json()).unwrap(),
            failing
        );
        let outcome = cycle3().diminish().unwrap();
        assert_eq!(
            DiminishOutcome::from_json(&outcome.to_json()).unwrap(),
            outcome
        );
    }

    #[test]
    fn monomial_class_canonicalization() {
        // (2,2) and (1,1) are the same class; the smaller survives
        let c = MonomialClass::new(&[2, 2]).unwrap();
        assert_eq!(c.exponents(), &[1, 1]);
        let c = MonomialClass::new(&[1, 2]).unwrap();
        assert_eq!(c.exponents(), &[1, 2]);
        assert!(MonomialClass::new(&[0, 0]).is_err());
    }

    #[test]
    fn class_enumeration_counts() {
        assert_eq!(monomial_classes(1).unwrap().len(), 4);
        assert_eq!(monomial_classes(2).unwrap().len(), 40);
    }

    #[test]
    fn coherent_search_m1() {
        let (size, witness) = max_coherent_monomial_set(1).unwrap();
        assert_eq!(size, 4);
        let exps: Vec<&[u32]> = witness.iter().map(|c| c.exponents()).collect();
        assert_eq!(exps, vec![&[0, 1][..], &[1, 0], &[1, 1], &[1, 2]]);
        // realizability: the witness is genuinely coherent
        let pres = split_symbol_product(1).unwrap();
        let reps: Vec<_> = witness
            .iter()
            .map(|c| c.representative(&pres).unwrap())
            .collect();
        assert!(crate::clifford::spans_p_central_space(&reps).unwrap());
    }

    #[test]
    fn coherent_search_rejects_out_of_range() {
        assert!(matches!(
            max_coherent_monomial_set(0),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            max_coherent_monomial_set(3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn witness_tournament_is_admissible() {
        let (_, witness) = max_coherent_monomial_set(1).unwrap();
        let base = split_symbol_product(1).unwrap();
        let derived = presentation_from_monomial_classes(&witness, &base).unwrap();
        let t = Tournament::from_presentation(&derived).unwrap();
        assert!(t.validate_propositions().admissible());
    }
}
