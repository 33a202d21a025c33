//! Machine-readable catalog of irreducible-representation descriptors for a
//! PI Hecke-Kiselman algebra: one-dimensional representations attached to
//! idempotents, lambda-parameterized matrix-type families per cycle level,
//! and the tensor-product structure of maximal ideals across the components
//! of the cyclic core.

use serde::Serialize;
use thiserror::Error;

use crate::cycle::{affine_action, all_idempotents, classify_level, Level};
use crate::graph::{Component, ComponentKind, OrientedGraph};
use crate::matrix::Rational;
use crate::poly::{det_poly, nonzero_rational_roots, Poly};
use crate::rep::{MatrixTypeData, SandwichEntry};
use crate::rewrite::{are_equal, enumerate_monoid, EqualityVerdict};
use crate::word::Word;

/// Value of a one-dimensional representation at a probe word, when the
/// budgeted machinery can decide it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phi {
    Zero,
    One,
    Unknown,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("word `{0}` is not idempotent")]
    NotIdempotent(Word),
    #[error("could not verify idempotency of `{0}` within budget")]
    IdempotencyUnknown(Word),
    #[error("component is neither a singleton nor a cycle; the algebra fails the PI criterion")]
    NonPiComponent,
    #[error("a cycle of length {len} needs {expected} sandwich data sets, got {got}")]
    DataCountMismatch { len: usize, expected: usize, got: usize },
    #[error("sandwich data for level {level} has size {got}, expected {expected}")]
    DataSizeMismatch { level: usize, expected: usize, got: usize },
    #[error("sandwich data supplied but the cyclic core has {0} cycle components; data attaches only when there is exactly one")]
    AmbiguousData(usize),
}

/// Evaluates the one-dimensional representation attached to an idempotent at
/// a probe word. Returns `One` when `e * probe = e`; `Zero` when a
/// certificate shows the idempotent lies outside the probe's two-sided ideal
/// (exact enumeration for acyclic graphs, a support-drop certificate on the
/// standard cycle); `Unknown` otherwise.
pub fn one_dim_rep(
    e: &Word,
    g: &OrientedGraph,
    probe: &Word,
    budget: usize,
) -> Result<Phi, CatalogError> {
    if g.is_acyclic() {
        // The monoid is finite: everything is decided exactly on the
        // multiplication table.
        if let Ok(m) = enumerate_monoid(g, budget) {
            let target = m.eval(e);
            if m.mul(target, target) != target {
                return Err(CatalogError::NotIdempotent(e.clone()));
            }
            let ideal = m.two_sided_ideal(m.eval(probe));
            return Ok(if ideal.contains(&target) { Phi::One } else { Phi::Zero });
        }
        return Ok(Phi::Unknown);
    }
    match are_equal(&e.concat(e), e, g, budget) {
        EqualityVerdict::Equal => {}
        EqualityVerdict::Distinct(_) => return Err(CatalogError::NotIdempotent(e.clone())),
        EqualityVerdict::Unknown => return Err(CatalogError::IdempotencyUnknown(e.clone())),
    }
    if are_equal(&e.concat(probe), e, g, budget) == EqualityVerdict::Equal {
        return Ok(Phi::One);
    }
    if g.is_standard_cycle() {
        let n = g.n();
        let e_supp = affine_action(e, n).expect("validated word").support().len();
        let probe_supp = affine_action(probe, n).expect("validated word").support().len();
        // Support size never grows under two-sided multiplication, so a
        // strictly smaller probe support separates the ideals.
        if probe_supp < e_supp {
            return Ok(Phi::Zero);
        }
    }
    Ok(Phi::Unknown)
}

/// One irreducible-representation descriptor, either a one-dimensional
/// representation induced by an idempotent or a lambda-parameterized family
/// coming from a matrix-type level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepDescriptor {
    Idempotent(IdempotentDescriptor),
    MatrixFamily(MatrixFamilyDescriptor),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentDescriptor {
    pub word: String,
    /// Certified ideal-chain level of the idempotent ("top" or a depth).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<String>,
    pub dim: usize,
    /// For singleton components: the scalar the generator maps to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_image: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixFamilyDescriptor {
    pub level: usize,
    /// Sandwich size for this level.
    pub size: usize,
    pub dim_rule: String,
    /// Dimension away from the exceptional parameters, when data is present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_dim: Option<usize>,
    /// Nonzero parameters where the dimension drops, with the dropped value.
    pub exceptional: Vec<ExceptionalLambda>,
    /// "builtin", "provided", or "needed".
    pub data: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalLambda {
    pub lambda: String,
    pub dim: usize,
}

/// Generic dimension and exceptional parameters of a family, read off the
/// symbolic determinant of the evaluated sandwich matrix.
fn family_annotations(data: &MatrixTypeData) -> (Option<usize>, Vec<ExceptionalLambda>) {
    let size = data.size();
    let mut max_exp = 0u32;
    let poly_matrix: Vec<Vec<Poly>> = (1..=size)
        .map(|b| {
            (1..=size)
                .map(|a| match data.entry(b, a) {
                    SandwichEntry::Theta => Poly::zero(),
                    SandwichEntry::Power(k) => {
                        max_exp = max_exp.max(k);
                        Poly::monomial(k as usize)
                    }
                })
                .collect()
        })
        .collect();
    let det = det_poly(&poly_matrix);
    if det.is_zero() {
        // Degenerate data: no full-rank parameter exists. Report the largest
        // rank seen over a sample set big enough to dodge any fixed minor's
        // root set.
        let samples = 2 + size * max_exp as usize;
        let generic = (0..samples)
            .map(|k| {
                let lam = Rational::from_integer((k as i64 + 2).into());
                data.evaluate(&lam).expect("nonzero sample").rank()
            })
            .max();
        return (generic, Vec::new());
    }
    let mut exceptional = Vec::new();
    if let Some(roots) = nonzero_rational_roots(&det) {
        for root in roots {
            let dim = data.evaluate(&root).expect("nonzero root").rank();
            exceptional.push(ExceptionalLambda { lambda: root.to_string(), dim });
        }
    }
    (Some(size), exceptional)
}

/// Descriptor list for one component of the cyclic core.
///
/// A singleton yields the two scalar representations of its two-element
/// monoid. A cycle of length `j` yields the `2^j - 1` idempotent-induced
/// one-dimensional representations plus one matrix-type family per level
/// `0..=j-2`; family annotations are populated from `data` when given, from
/// the built-in tables when `j == 3`, and flagged `needed` otherwise.
pub fn component_descriptors(
    core: &OrientedGraph,
    component: &Component,
    data: Option<&[MatrixTypeData]>,
) -> Result<Vec<RepDescriptor>, CatalogError> {
    match component.kind {
        ComponentKind::Singleton => {
            let v = component.vertices[0];
            Ok(vec![
                RepDescriptor::Idempotent(IdempotentDescriptor {
                    word: Word::empty().to_string(),
                    level: None,
                    dim: 1,
                    generator_image: Some(0),
                }),
                RepDescriptor::Idempotent(IdempotentDescriptor {
                    word: Word::letter(v).to_string(),
                    level: None,
                    dim: 1,
                    generator_image: Some(1),
                }),
            ])
        }
        ComponentKind::Cycle(j) => {
            if let Some(list) = data {
                if list.len() != j - 1 {
                    return Err(CatalogError::DataCountMismatch {
                        len: j,
                        expected: j - 1,
                        got: list.len(),
                    });
                }
                for (i, d) in list.iter().enumerate() {
                    let expected = MatrixTypeData::expected_size(j, i);
                    if d.size() != expected {
                        return Err(CatalogError::DataSizeMismatch {
                            level: i,
                            expected,
                            got: d.size(),
                        });
                    }
                }
            }
            let order = core
                .cycle_order(&component.vertices)
                .expect("component classified as a cycle");
            let relabel = |w: &Word| -> Word {
                Word::new(w.letters().iter().map(|&k| order[k - 1]).collect())
            };
            let mut out = Vec::with_capacity((1 << j) - 1 + (j - 1));
            for e in all_idempotents(j).expect("cycle length >= 3") {
                let level = classify_level(&e.word, j).expect("canonical word");
                out.push(RepDescriptor::Idempotent(IdempotentDescriptor {
                    word: relabel(&e.word).to_string(),
                    level: Some(match level.level {
                        Level::Top => "top".to_string(),
                        Level::At(i) => i.to_string(),
                    }),
                    dim: 1,
                    generator_image: None,
                }));
            }
            for i in 0..=(j - 2) {
                let (source, tag) = match data {
                    Some(list) => (Some(list[i].clone()), "provided"),
                    None if j == 3 => (MatrixTypeData::c3_level(i), "builtin"),
                    None => (None, "needed"),
                };
                let descriptor = match source {
                    Some(d) => {
                        let (generic_dim, exceptional) = family_annotations(&d);
                        MatrixFamilyDescriptor {
                            level: i,
                            size: d.size(),
                            dim_rule: "rank of the sandwich matrix evaluated at lambda".into(),
                            generic_dim,
                            exceptional,
                            data: tag.into(),
                        }
                    }
                    None => MatrixFamilyDescriptor {
                        level: i,
                        size: MatrixTypeData::expected_size(j, i),
                        dim_rule: "rank of the user-supplied sandwich matrix evaluated at lambda"
                            .into(),
                        generic_dim: None,
                        exceptional: Vec::new(),
                        data: tag.into(),
                    },
                };
                out.push(RepDescriptor::MatrixFamily(descriptor));
            }
            Ok(out)
        }
        ComponentKind::Other => Err(CatalogError::NonPiComponent),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEcho {
    pub n: usize,
    pub arrows: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    pub descriptors: Vec<RepDescriptor>,
    /// Symbolic note on the shape of maximal prime chains for this factor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_chain: Option<String>,
}

/// The full catalog. Descriptor fields are only populated when the graph
/// passes the PI criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub schema: u32,
    pub graph: GraphEcho,
    pub pi: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_prime: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_ideal_structure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_dim_count: Option<u128>,
}

impl CatalogReport {
    /// Deterministic pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Assembles the catalog for a graph: the cyclic core, its components with
/// their descriptor lists, and the count of one-dimensional maximal ideals
/// (the product of the per-component idempotent-descriptor counts). Supplied
/// sandwich data attaches to the unique cycle component when there is one.
pub fn catalog(
    g: &OrientedGraph,
    data: Option<&[MatrixTypeData]>,
) -> Result<CatalogReport, CatalogError> {
    let echo = GraphEcho { n: g.n(), arrows: g.arrows().collect() };
    if !g.is_pi() {
        return Ok(CatalogReport {
            schema: 1,
            graph: echo,
            pi: false,
            theta_prime: None,
            components: None,
            maximal_ideal_structure: None,
            one_dim_count: None,
        });
    }
    let core = g.cyclic_core();
    let comps = core.components();
    if data.is_some() {
        let cycles = comps.iter().filter(|c| matches!(c.kind, ComponentKind::Cycle(_))).count();
        if cycles != 1 {
            return Err(CatalogError::AmbiguousData(cycles));
        }
    }
    let mut reports = Vec::with_capacity(comps.len());
    let mut one_dim_count: u128 = 1;
    for comp in &comps {
        let comp_data = match comp.kind {
            ComponentKind::Cycle(_) => data,
            _ => None,
        };
        let descriptors = component_descriptors(&core, comp, comp_data)?;
        let (kind, length, prime_chain, ones) = match comp.kind {
            ComponentKind::Singleton => ("singleton".to_string(), None, None, 2u128),
            ComponentKind::Cycle(j) => (
                "cycle".to_string(),
                Some(j),
                Some(format!("maximal prime chains have shape J_i < P, i in 0..={}", j - 2)),
                (1u128 << j) - 1,
            ),
            ComponentKind::Other => unreachable!("PI graphs have clean cores"),
        };
        one_dim_count *= ones;
        reports.push(ComponentReport {
            vertices: comp.vertices.clone(),
            kind,
            length,
            descriptors,
            prime_chain,
        });
    }
    Ok(CatalogReport {
        schema: 1,
        graph: echo,
        pi: true,
        theta_prime: Some(core.arrows().collect()),
        components: Some(reports),
        maximal_ideal_structure: Some("tensor-product of per-component choices".to_string()),
        one_dim_count: Some(one_dim_count),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::DEFAULT_BUDGET;
    use std::collections::BTreeSet;
    use std::str::FromStr;

    fn word(s: &str) -> Word {
        Word::from_str(s).unwrap()
    }

    #[test]
    fn one_dim_rep_examples() {
        let c3 = OrientedGraph::cycle(3);
        assert_eq!(
            one_dim_rep(&word("1"), &c3, &word("1"), DEFAULT_BUDGET),
            Ok(Phi::One)
        );
        // The identity's representation kills every non-identity probe.
        assert_eq!(
            one_dim_rep(&Word::empty(), &c3, &word("1"), DEFAULT_BUDGET),
            Ok(Phi::Zero)
        );

        let g = OrientedGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(
            one_dim_rep(&word("1 2"), &g, &word("2"), DEFAULT_BUDGET),
            Ok(Phi::One)
        );
        assert_eq!(
            one_dim_rep(&Word::empty(), &g, &word("2"), DEFAULT_BUDGET),
            Ok(Phi::Zero)
        );

        // Non-idempotent input is rejected.
        assert_eq!(
            one_dim_rep(&word("2 1"), &g, &word("2"), DEFAULT_BUDGET),
            Err(CatalogError::NotIdempotent(word("2 1")))
        );
    }

    #[test]
    fn exhaustive_reps_on_finite_monoids() {
        // For acyclic graphs the idempotent-induced representations are
        // computable exactly: they are multiplicative, send the idempotent
        // to 1, and distinct idempotents give distinct representations.
        let graphs = [
            OrientedGraph::path(2),
            OrientedGraph::path(3),
            OrientedGraph::path(4),
            OrientedGraph::edgeless(3),
            OrientedGraph::new(4, [(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let m = enumerate_monoid(&g, 10_000).unwrap();
            let idems = m.idempotents();
            assert_eq!(idems.len(), 1 << g.n());
            let small = m.size() <= 15;
            let mut reps: BTreeSet<Vec<bool>> = BTreeSet::new();
            for &e in &idems {
                let phi: Vec<bool> =
                    (0..m.size()).map(|x| m.two_sided_ideal(x).contains(&e)).collect();
                assert!(phi[e], "phi_e(e) must be 1");
                for x in 0..m.size() {
                    for y in 0..m.size() {
                        assert_eq!(phi[m.mul(x, y)], phi[x] && phi[y]);
                    }
                }
                // The tri-valued oracle agrees wherever it decides (spot
                // checked exhaustively on the small monoids).
                if small {
                    for (x, &value) in phi.iter().enumerate() {
                        let got =
                            one_dim_rep(m.element(e), &g, m.element(x), DEFAULT_BUDGET).unwrap();
                        let expected = if value { Phi::One } else { Phi::Zero };
                        assert_eq!(got, expected);
                    }
                }
                reps.insert(phi);
            }
            assert_eq!(reps.len(), 1 << g.n());
        }
    }

    #[test]
    fn singleton_descriptors() {
        let g = OrientedGraph::edgeless(1);
        let comps = g.components();
        let ds = component_descriptors(&g, &comps[0], None).unwrap();
        assert_eq!(ds.len(), 2);
        let images: Vec<Option<u8>> = ds
            .iter()
            .map(|d| match d {
                RepDescriptor::Idempotent(i) => i.generator_image,
                _ => panic!("singletons have only idempotent descriptors"),
            })
            .collect();
        assert_eq!(images, vec![Some(0), Some(1)]);
    }

    #[test]
    fn cycle3_descriptors_carry_builtin_annotations() {
        let g = OrientedGraph::cycle(3);
        let comps = g.components();
        let ds = component_descriptors(&g, &comps[0], None).unwrap();
        assert_eq!(ds.len(), 7 + 2);
        let families: Vec<&MatrixFamilyDescriptor> = ds
            .iter()
            .filter_map(|d| match d {
                RepDescriptor::MatrixFamily(f) => Some(f),
                _ => None,
            })
            .collect();
        assert_eq!(families.len(), 2);
        // Level 0: generic dimension 3, drops to 2 at lambda = -1.
        assert_eq!(families[0].level, 0);
        assert_eq!(families[0].generic_dim, Some(3));
        assert_eq!(
            families[0].exceptional,
            vec![ExceptionalLambda { lambda: "-1".into(), dim: 2 }]
        );
        assert_eq!(families[0].data, "builtin");
        // Level 1: generic dimension 3, drops to 1 at lambda = 1.
        assert_eq!(families[1].level, 1);
        assert_eq!(families[1].generic_dim, Some(3));
        assert_eq!(
            families[1].exceptional,
            vec![ExceptionalLambda { lambda: "1".into(), dim: 1 }]
        );
    }

    #[test]
    fn cycle4_families_flag_missing_data() {
        let g = OrientedGraph::cycle(4);
        let comps = g.components();
        let ds = component_descriptors(&g, &comps[0], None).unwrap();
        assert_eq!(ds.len(), 15 + 3);
        for d in &ds {
            if let RepDescriptor::MatrixFamily(f) = d {
                assert_eq!(f.data, "needed");
                assert_eq!(f.generic_dim, None);
                assert_eq!(f.size, MatrixTypeData::expected_size(4, f.level));
            }
        }
    }

    #[test]
    fn descriptor_counts_for_cycles() {
        for j in 3..=6 {
            let g = OrientedGraph::cycle(j);
            let comps = g.components();
            let ds = component_descriptors(&g, &comps[0], None).unwrap();
            assert_eq!(ds.len(), (1 << j) - 1 + (j - 1));
        }
    }

    #[test]
    fn relabeled_cycle_uses_component_vertices() {
        // A 3-cycle living on vertices {2, 4, 5}.
        let g = OrientedGraph::new(5, [(2, 4), (4, 5), (5, 2)]).unwrap();
        let comp = g
            .components()
            .into_iter()
            .find(|c| c.kind == ComponentKind::Cycle(3))
            .unwrap();
        let ds = component_descriptors(&g, &comp, None).unwrap();
        for d in &ds {
            if let RepDescriptor::Idempotent(i) = d {
                for tok in i.word.split_whitespace() {
                    if tok != "e" {
                        let v: usize = tok.parse().unwrap();
                        assert!(comp.vertices.contains(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_c3() {
        let report = catalog(&OrientedGraph::cycle(3), None).unwrap();
        assert!(report.pi);
        assert_eq!(report.one_dim_count, Some(7));
        let comps = report.components.unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, "cycle");
        assert_eq!(comps[0].descriptors.len(), 9);
    }

    #[test]
    fn catalog_tensor_count() {
        // C_3 plus an isolated vertex: 7 * 2 one-dimensional choices.
        let g = OrientedGraph::new(4, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let report = catalog(&g, None).unwrap();
        assert_eq!(report.one_dim_count, Some(14));
        assert_eq!(report.components.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn catalog_non_pi() {
        let g = OrientedGraph::new(
            6,
            [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4)],
        )
        .unwrap();
        let report = catalog(&g, None).unwrap();
        assert!(!report.pi);
        assert!(report.components.is_none());
        assert!(report.one_dim_count.is_none());
    }

    #[test]
    fn catalog_is_deterministic() {
        let g = OrientedGraph::new(4, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let a = catalog(&g, None).unwrap().to_json();
        let b = catalog(&g, None).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn catalog_rejects_ambiguous_data() {
        let g = OrientedGraph::new(
            7,
            [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let data = vec![MatrixTypeData::c3_level(0).unwrap()];
        assert_eq!(
            catalog(&g, Some(&data)),
            Err(CatalogError::AmbiguousData(2))
        );
    }

    #[test]
    fn catalog_accepts_data_for_unique_cycle() {
        let g = OrientedGraph::cycle(3);
        let data = vec![
            MatrixTypeData::c3_level(0).unwrap(),
            MatrixTypeData::c3_level(1).unwrap(),
        ];
        let report = catalog(&g, Some(&data)).unwrap();
        let comps = report.components.unwrap();
        for d in &comps[0].descriptors {
            if let RepDescriptor::MatrixFamily(f) = d {
                assert_eq!(f.data, "provided");
            }
        }
        // Wrong count is rejected.
        let short = vec![MatrixTypeData::c3_level(0).unwrap()];
        assert_eq!(
            catalog(&g, Some(&short)),
            Err(CatalogError::DataCountMismatch { len: 3, expected: 2, got: 1 })
        );
    }
}
