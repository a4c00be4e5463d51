//! Dual-graph model of weighted pointed nodal curves.
//!
//! A curve is a list of irreducible components with geometric genera, a
//! multiset of nodes (unordered component pairs; a self-pair is a
//! self-intersection of one component), and weighted marked points lying at
//! smooth locations of a component. Degrees of the dualizing sheaf, its
//! log twist, and line bundles restricted to subcurves are all exact.
//!
//! Conventions:
//! - `deg(omega|_Y) = sum_{i in Y} (2 g_i - 2) + 2 * #(nodes internal to Y,
//!   self-nodes included) + boundary_length(Y)`; adjunction on a nodal curve.
//! - marked points are smooth by construction: a point is attached to a
//!   component, never to a node. A `coincidence_group` marks points sharing
//!   one location; the weights of a group must total at most one.
//! - zero-weight points are dropped when a curve is built; weights must lie
//!   in `(0, 1]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

/// Default cap on the component count for subcurve enumeration (2^c subsets).
pub const DEFAULT_SUBCURVE_LIMIT: usize = 24;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("curve has no components")]
    EmptyCurve,
    #[error("duplicate component id `{0}`")]
    DuplicateComponent(String),
    #[error("unknown component id `{0}`")]
    UnknownComponent(String),
    #[error("dual graph is not connected")]
    Disconnected,
    #[error("weight {weight} of point `{label}` is outside (0, 1]")]
    WeightOutOfRange { label: String, weight: Rational },
    #[error("coincidence group `{group}` has total weight {total} > 1")]
    GroupOverweight { group: String, total: Rational },
    #[error("coincidence group `{group}` spans more than one component")]
    GroupSplit { group: String },
    #[error("subcurve must contain at least one component")]
    EmptySubcurve,
    #[error("{count} components exceed the subcurve enumeration limit {limit}")]
    TooManyComponents { count: usize, limit: usize },
    #[error("twist vector has {got} entries, curve has {expected} components")]
    TwistLength { expected: usize, got: usize },
    #[error("multidegree must assign exactly the curve's component ids")]
    DegreeKeys,
}

/// JSON form of a curve (schema `curve/v1`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSpec {
    pub components: Vec<ComponentSpec>,
    #[serde(default)]
    pub nodes: Vec<(String, String)>,
    #[serde(default)]
    pub points: Vec<PointSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub id: String,
    pub genus: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSpec {
    /// Component id the point lies on.
    pub on: String,
    pub label: String,
    pub weight: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

/// A weighted marked point, already resolved to a component index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPoint {
    pub component: usize,
    pub label: String,
    pub weight: Rational,
    pub group: Option<String>,
}

/// Validated weighted pointed nodal curve.
#[derive(Debug, Clone)]
pub struct NodalCurve {
    ids: Vec<String>,
    genera: Vec<u32>,
    /// Node multiset as index pairs with `a <= b`; `a == b` is a self-node.
    nodes: Vec<(usize, usize)>,
    points: Vec<MarkedPoint>,
}

/// Nonempty set of component indices of an associated curve, stored as a
/// bitmask. Only meaningful together with the curve that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subcurve {
    mask: u64,
}

impl Subcurve {
    pub fn members(&self) -> Vec<usize> {
        (0..64).filter(|i| self.mask >> i & 1 == 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

/// Per-component degrees of a line bundle, aligned with the component order
/// of the curve it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multidegree {
    values: Vec<Rational>,
}

impl Multidegree {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn degree_on(&self, y: &Subcurve) -> Rational {
        self.values
            .iter()
            .enumerate()
            .filter(|(i, _)| y.contains(*i))
            .map(|(_, v)| v)
            .sum()
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.values.len(), other.values.len());
        Multidegree {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, t: &Rational) -> Multidegree {
        Multidegree {
            values: self.values.iter().map(|v| v * t).collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.values.iter().all(Rational::is_positive)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(Rational::is_integer)
    }
}

impl NodalCurve {
    pub fn from_spec(spec: &CurveSpec) -> Result<Self, CurveError> {
        if spec.components.is_empty() {
            return Err(CurveError::EmptyCurve);
        }
        let mut index = BTreeMap::new();
        let mut ids = Vec::new();
        let mut genera = Vec::new();
        for c in &spec.components {
            if index.insert(c.id.clone(), ids.len()).is_some() {
                return Err(CurveError::DuplicateComponent(c.id.clone()));
            }
            ids.push(c.id.clone());
            genera.push(c.genus);
        }
        let resolve = |id: &String| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| CurveError::UnknownComponent(id.clone()))
        };
        let mut nodes = Vec::new();
        for (a, b) in &spec.nodes {
            let (i, j) = (resolve(a)?, resolve(b)?);
            nodes.push((i.min(j), i.max(j)));
        }
        let mut points = Vec::new();
        for p in &spec.points {
            if p.weight.is_zero() {
                continue; // zero weight carries no information anywhere
            }
            if !p.weight.is_positive() || p.weight > Rational::one() {
                return Err(CurveError::WeightOutOfRange {
                    label: p.label.clone(),
                    weight: p.weight.clone(),
                });
            }
            points.push(MarkedPoint {
                component: resolve(&p.on)?,
                label: p.label.clone(),
                weight: p.weight.clone(),
                group: p.group.clone(),
            });
        }
        let curve = NodalCurve {
            ids,
            genera,
            nodes,
            points,
        };
        curve.check_connected()?;
        curve.check_groups()?;
        Ok(curve)
    }

    pub fn to_spec(&self) -> CurveSpec {
        CurveSpec {
            components: self
                .ids
                .iter()
                .zip(&self.genera)
                .map(|(id, &genus)| ComponentSpec {
                    id: id.clone(),
                    genus,
                })
                .collect(),
            nodes: self
                .nodes
                .iter()
                .map(|&(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
                .collect(),
            points: self
                .points
                .iter()
                .map(|p| PointSpec {
                    on: self.ids[p.component].clone(),
                    label: p.label.clone(),
                    weight: p.weight.clone(),
                    group: p.group.clone(),
                })
                .collect(),
        }
    }

    fn check_connected(&self) -> Result<(), CurveError> {
        let c = self.ids.len();
        let mut parent: Vec<usize> = (0..c).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.nodes {
            if a != b {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let root = find(&mut parent, 0);
        for i in 1..c {
            if find(&mut parent, i) != root {
                return Err(CurveError::Disconnected);
            }
        }
        Ok(())
    }

    fn check_groups(&self) -> Result<(), CurveError> {
        let mut totals: BTreeMap<&str, (usize, Rational)> = BTreeMap::new();
        for p in &self.points {
            if let Some(g) = &p.group {
                let entry = totals
                    .entry(g)
                    .or_insert_with(|| (p.component, Rational::zero()));
                if entry.0 != p.component {
                    return Err(CurveError::GroupSplit { group: g.clone() });
                }
                entry.1 += &p.weight;
            }
        }
        for (g, (_, total)) in totals {
            if total > Rational::one() {
                return Err(CurveError::GroupOverweight {
                    group: g.to_string(),
                    total,
                });
            }
        }
        Ok(())
    }

    pub fn component_count(&self) -> usize {
        self.ids.len()
    }

    pub fn component_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn genus_of(&self, i: usize) -> u32 {
        self.genera[i]
    }

    pub fn nodes(&self) -> &[(usize, usize)] {
        &self.nodes
    }

    pub fn points(&self) -> &[MarkedPoint] {
        &self.points
    }

    pub fn component_index(&self, id: &str) -> Result<usize, CurveError> {
        self.ids
            .iter()
            .position(|x| x == id)
            .ok_or_else(|| CurveError::UnknownComponent(id.to_string()))
    }

    /// Builds a subcurve from component indices.
    pub fn subcurve(&self, members: &[usize]) -> Result<Subcurve, CurveError> {
        if members.is_empty() {
            return Err(CurveError::EmptySubcurve);
        }
        let mut mask = 0u64;
        for &i in members {
            if i >= self.ids.len() {
                return Err(CurveError::UnknownComponent(format!("#{i}")));
            }
            mask |= 1 << i;
        }
        Ok(Subcurve { mask })
    }

    /// Builds a subcurve from component ids.
    pub fn subcurve_by_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Subcurve, CurveError> {
        let members = ids
            .iter()
            .map(|id| self.component_index(id.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        self.subcurve(&members)
    }

    pub fn full_subcurve(&self) -> Subcurve {
        Subcurve {
            mask: (1u64 << self.ids.len()) - 1,
        }
    }

    pub fn complement(&self, y: &Subcurve) -> Subcurve {
        Subcurve {
            mask: self.full_subcurve().mask & !y.mask,
        }
    }

    pub fn subcurve_ids(&self, y: &Subcurve) -> Vec<String> {
        y.members().iter().map(|&i| self.ids[i].clone()).collect()
    }

    /// Arithmetic genus `sum g_i + #nodes - #components + 1`.
    pub fn arithmetic_genus(&self) -> u32 {
        let g: i64 = self.genera.iter().map(|&g| i64::from(g)).sum::<i64>()
            + self.nodes.len() as i64
            - self.ids.len() as i64
            + 1;
        debug_assert!(g >= 0, "connected dual graph forces g >= 0");
        g as u32
    }

    /// Number of nodes with exactly one endpoint in `y`. Self-nodes never
    /// count; `boundary_length(y) == boundary_length(complement(y))`.
    pub fn boundary_length(&self, y: &Subcurve) -> usize {
        self.nodes
            .iter()
            .filter(|&&(a, b)| y.contains(a) != y.contains(b))
            .count()
    }

    /// Number of nodes with both endpoints in `y`, self-nodes included.
    pub fn nodes_internal_to(&self, y: &Subcurve) -> usize {
        self.nodes
            .iter()
            .filter(|&&(a, b)| y.contains(a) && y.contains(b))
            .count()
    }

    /// `deg(omega|_Y)` by adjunction: `sum_{i in Y}(2 g_i - 2) + 2 *
    /// #internal nodes + boundary_length(Y)`.
    pub fn omega_degree_on(&self, y: &Subcurve) -> i64 {
        let genus_part: i64 = y
            .members()
            .iter()
            .map(|&i| 2 * i64::from(self.genera[i]) - 2)
            .sum();
        genus_part + 2 * self.nodes_internal_to(y) as i64 + self.boundary_length(y) as i64
    }

    pub fn weight_sum_on(&self, y: &Subcurve) -> Rational {
        self.points
            .iter()
            .filter(|p| y.contains(p.component))
            .map(|p| &p.weight)
            .sum()
    }

    pub fn total_weight(&self) -> Rational {
        self.points.iter().map(|p| &p.weight).sum()
    }

    /// `deg(omega(a.x)|_Y)`, or plain `deg(omega|_Y)` when `with_weights` is
    /// false.
    pub fn log_omega_degree_on(&self, y: &Subcurve, with_weights: bool) -> Rational {
        let base = Rational::from(self.omega_degree_on(y));
        if with_weights {
            base + self.weight_sum_on(y)
        } else {
            base
        }
    }

    /// Total degree `deg omega(a.x) = 2g - 2 + sum a_j`.
    pub fn log_canonical_degree(&self) -> Rational {
        self.log_omega_degree_on(&self.full_subcurve(), true)
    }

    /// Degree of `omega(a.x)` on one component:
    /// `2 g_i - 2 + 2 * #self-nodes + #nodes to other components + sum of
    /// weights on the component`.
    pub fn component_log_degree(&self, i: usize) -> Rational {
        let y = self.subcurve(&[i]).expect("valid index");
        self.log_omega_degree_on(&y, true)
    }

    /// Multidegree of `omega(a.x)^r`: component-wise `r *
    /// component_log_degree`.
    pub fn canonical_multidegree(&self, r: &Rational) -> Multidegree {
        Multidegree {
            values: (0..self.ids.len())
                .map(|i| r * &self.component_log_degree(i))
                .collect(),
        }
    }

    /// Multidegree of the twist bundle `O_X(sum_i b_i X_i)`: component `j`
    /// receives `sum_{i != j} n_ij (b_i - b_j)` where `n_ij` counts nodes
    /// joining `i` and `j`. Entries sum to zero; constant `b` gives zero.
    pub fn twist_degrees(&self, b: &[i64]) -> Result<Multidegree, CurveError> {
        if b.len() != self.ids.len() {
            return Err(CurveError::TwistLength {
                expected: self.ids.len(),
                got: b.len(),
            });
        }
        let mut values = vec![0i64; self.ids.len()];
        for &(i, j) in &self.nodes {
            if i != j {
                values[j] += b[i] - b[j];
                values[i] += b[j] - b[i];
            }
        }
        Ok(Multidegree {
            values: values.into_iter().map(Rational::from).collect(),
        })
    }

    /// Builds a multidegree from values listed in component order.
    pub fn multidegree(&self, values: Vec<Rational>) -> Result<Multidegree, CurveError> {
        if values.len() != self.ids.len() {
            return Err(CurveError::DegreeKeys);
        }
        Ok(Multidegree { values })
    }

    /// Builds a multidegree from an id -> value map; keys must be exactly
    /// the component ids.
    pub fn multidegree_from_map(
        &self,
        map: &BTreeMap<String, Rational>,
    ) -> Result<Multidegree, CurveError> {
        if map.len() != self.ids.len() {
            return Err(CurveError::DegreeKeys);
        }
        let values = self
            .ids
            .iter()
            .map(|id| map.get(id).cloned().ok_or(CurveError::DegreeKeys))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Multidegree { values })
    }

    pub fn degrees_as_map(&self, d: &Multidegree) -> BTreeMap<String, Rational> {
        self.ids
            .iter()
            .cloned()
            .zip(d.values.iter().cloned())
            .collect()
    }

    /// Enumerates nonempty subcurves with the default component limit. With
    /// `dedup_complements`, yields proper subcurves only, one per
    /// complement pair; otherwise every nonempty subset including the whole
    /// curve.
    pub fn subcurves(
        &self,
        dedup_complements: bool,
    ) -> Result<impl Iterator<Item = Subcurve> + '_, CurveError> {
        self.subcurves_with_limit(dedup_complements, DEFAULT_SUBCURVE_LIMIT)
    }

    pub fn subcurves_with_limit(
        &self,
        dedup_complements: bool,
        limit: usize,
    ) -> Result<impl Iterator<Item = Subcurve> + '_, CurveError> {
        let c = self.ids.len();
        if c > limit || c > 63 {
            return Err(CurveError::TooManyComponents {
                count: c,
                limit: limit.min(63),
            });
        }
        // with dedup: subsets avoiding the last component are exactly one
        // representative per complement pair, and exclude the full curve
        let range = if dedup_complements {
            1..(1u64 << (c - 1))
        } else {
            1..(1u64 << c)
        };
        Ok(range.map(|mask| Subcurve { mask }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_component_curve(g1: u32, g2: u32, weights_on_x2: &[Rational]) -> NodalCurve {
        let spec = CurveSpec {
            components: vec![
                ComponentSpec {
                    id: "X1".into(),
                    genus: g1,
                },
                ComponentSpec {
                    id: "X2".into(),
                    genus: g2,
                },
            ],
            nodes: vec![("X1".into(), "X2".into())],
            points: weights_on_x2
                .iter()
                .enumerate()
                .map(|(k, w)| PointSpec {
                    on: "X2".into(),
                    label: format!("p{k}"),
                    weight: w.clone(),
                    group: None,
                })
                .collect(),
        };
        NodalCurve::from_spec(&spec).unwrap()
    }

    #[test]
    fn arithmetic_genus_examples() {
        // two components g=(2,1), one node
        let c = two_component_curve(2, 1, &[]);
        assert_eq!(c.arithmetic_genus(), 3);
        assert_eq!(c.omega_degree_on(&c.full_subcurve()), 4);

        // one component g=2, no nodes
        let smooth = NodalCurve::from_spec(&CurveSpec {
            components: vec![ComponentSpec {
                id: "X".into(),
                genus: 2,
            }],
            nodes: vec![],
            points: vec![],
        })
        .unwrap();
        assert_eq!(smooth.arithmetic_genus(), 2);

        // irreducible nodal cubic: g=0, one self-node
        let cubic = NodalCurve::from_spec(&CurveSpec {
            components: vec![ComponentSpec {
                id: "C".into(),
                genus: 0,
            }],
            nodes: vec![("C".into(), "C".into())],
            points: vec![],
        })
        .unwrap();
        assert_eq!(cubic.arithmetic_genus(), 1);
        // self-node contributes 2 internally, 0 to any boundary
        let y = cubic.full_subcurve();
        assert_eq!(cubic.omega_degree_on(&y), 0);
        assert_eq!(cubic.boundary_length(&y), 0);
    }

    #[test]
    fn boundary_length_examples() {
        let c = two_component_curve(2, 1, &[]);
        let x1 = c.subcurve_by_ids(&["X1"]).unwrap();
        assert_eq!(c.boundary_length(&x1), 1);
        assert_eq!(c.boundary_length(&c.full_subcurve()), 0);

        // 3-cycle of components: one component sees two incident edges
        let tri = NodalCurve::from_spec(&CurveSpec {
            components: ["A", "B", "C"]
                .iter()
                .map(|id| ComponentSpec {
                    id: id.to_string(),
                    genus: 1,
                })
                .collect(),
            nodes: vec![
                ("A".into(), "B".into()),
                ("B".into(), "C".into()),
                ("C".into(), "A".into()),
            ],
            points: vec![],
        })
        .unwrap();
        let a = tri.subcurve_by_ids(&["A"]).unwrap();
        assert_eq!(tri.boundary_length(&a), 2);
    }

    #[test]
    fn omega_degrees_match_adjunction() {
        let c = two_component_curve(2, 1, &[]);
        let x1 = c.subcurve_by_ids(&["X1"]).unwrap();
        assert_eq!(c.omega_degree_on(&x1), 3); // 2 g_1 - 1

        // single g=0 component in a chain with two external nodes
        let chain = NodalCurve::from_spec(&CurveSpec {
            components: ["A", "B", "C"]
                .iter()
                .map(|id| ComponentSpec {
                    id: id.to_string(),
                    genus: if *id == "B" { 0 } else { 1 },
                })
                .collect(),
            nodes: vec![("A".into(), "B".into()), ("B".into(), "C".into())],
            points: vec![],
        })
        .unwrap();
        let b = chain.subcurve_by_ids(&["B"]).unwrap();
        assert_eq!(chain.omega_degree_on(&b), 0); // -2 + 2
    }

    #[test]
    fn log_omega_degree_examples() {
        let c = two_component_curve(2, 1, &[Rational::one(), Rational::new(1, 5)]);
        let x1 = c.subcurve_by_ids(&["X1"]).unwrap();
        assert_eq!(c.log_omega_degree_on(&x1, true), Rational::from(3));
        // whole curve with total weight 6/5: 4 + 6/5 = 26/5
        assert_eq!(c.log_canonical_degree(), Rational::new(26, 5));
        assert_eq!(
            c.log_omega_degree_on(&c.full_subcurve(), false),
            Rational::from(4)
        );
    }

    #[test]
    fn canonical_multidegree_examples() {
        let c = two_component_curve(2, 1, &[]);
        let d1 = c.canonical_multidegree(&Rational::one());
        assert_eq!(d1.values(), &[Rational::from(3), Rational::from(1)]);
        let d2 = c.canonical_multidegree(&Rational::from(2));
        assert_eq!(d2.values(), &[Rational::from(6), Rational::from(2)]);
        assert_eq!(d1.total(), c.log_canonical_degree());
    }

    #[test]
    fn twist_degrees_examples() {
        let c = two_component_curve(2, 1, &[]);
        let t = c.twist_degrees(&[0, 1]).unwrap();
        assert_eq!(t.values(), &[Rational::from(1), Rational::from(-1)]);
        let z = c.twist_degrees(&[5, 5]).unwrap();
        assert_eq!(z.values(), &[Rational::zero(), Rational::zero()]);

        // chain A-B-C with b = (0, 1, 0): Laplacian by hand gives (1, -2, 1)
        let chain = NodalCurve::from_spec(&CurveSpec {
            components: ["A", "B", "C"]
                .iter()
                .map(|id| ComponentSpec {
                    id: id.to_string(),
                    genus: 1,
                })
                .collect(),
            nodes: vec![("A".into(), "B".into()), ("B".into(), "C".into())],
            points: vec![],
        })
        .unwrap();
        let t = chain.twist_degrees(&[0, 1, 0]).unwrap();
        assert_eq!(
            t.values(),
            &[Rational::from(1), Rational::from(-2), Rational::from(1)]
        );
        assert_eq!(t.total(), Rational::zero());
    }

    #[test]
    fn subcurve_enumeration_counts() {
        let c = two_component_curve(2, 1, &[]);
        assert_eq!(c.subcurves(false).unwrap().count(), 3);
        assert_eq!(c.subcurves(true).unwrap().count(), 1);

        let tri = NodalCurve::from_spec(&CurveSpec {
            components: ["A", "B", "C"]
                .iter()
                .map(|id| ComponentSpec {
                    id: id.to_string(),
                    genus: 1,
                })
                .collect(),
            nodes: vec![("A".into(), "B".into()), ("B".into(), "C".into())],
            points: vec![],
        })
        .unwrap();
        assert_eq!(tri.subcurves(false).unwrap().count(), 7);
        assert_eq!(tri.subcurves(true).unwrap().count(), 3);
        assert!(matches!(
            tri.subcurves_with_limit(false, 2),
            Err(CurveError::TooManyComponents { .. })
        ));
    }

    #[test]
    fn validation_rejects_bad_input() {
        // disconnected
        let err = NodalCurve::from_spec(&CurveSpec {
            components: vec![
                ComponentSpec {
                    id: "A".into(),
                    genus: 1,
                },
                ComponentSpec {
                    id: "B".into(),
                    genus: 1,
                },
            ],
            nodes: vec![],
            points: vec![],
        });
        assert!(matches!(err, Err(CurveError::Disconnected)));

        // weight out of range
        let err = NodalCurve::from_spec(&CurveSpec {
            components: vec![ComponentSpec {
                id: "A".into(),
                genus: 2,
            }],
            nodes: vec![],
            points: vec![PointSpec {
                on: "A".into(),
                label: "p".into(),
                weight: Rational::new(3, 2),
                group: None,
            }],
        });
        assert!(matches!(err, Err(CurveError::WeightOutOfRange { .. })));

        // group over weight one
        let overweight = CurveSpec {
            components: vec![ComponentSpec {
                id: "A".into(),
                genus: 2,
            }],
            nodes: vec![],
            points: vec![
                PointSpec {
                    on: "A".into(),
                    label: "p".into(),
                    weight: Rational::new(2, 3),
                    group: Some("g".into()),
                },
                PointSpec {
                    on: "A".into(),
                    label: "q".into(),
                    weight: Rational::new(1, 2),
                    group: Some("g".into()),
                },
            ],
        };
        assert!(matches!(
            NodalCurve::from_spec(&overweight),
            Err(CurveError::GroupOverweight { .. })
        ));

        // zero weights are dropped, not rejected
        let dropped = NodalCurve::from_spec(&CurveSpec {
            components: vec![ComponentSpec {
                id: "A".into(),
                genus: 2,
            }],
            nodes: vec![],
            points: vec![PointSpec {
                on: "A".into(),
                label: "p".into(),
                weight: Rational::zero(),
                group: None,
            }],
        })
        .unwrap();
        assert!(dropped.points().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "components": [{"id": "X1", "genus": 2}, {"id": "X2", "genus": 1}],
            "nodes": [["X1", "X2"]],
            "points": [{"on": "X2", "label": "p0", "weight": "1/2"}]
        }"#;
        let spec: CurveSpec = serde_json::from_str(text).unwrap();
        let curve = NodalCurve::from_spec(&spec).unwrap();
        assert_eq!(curve.total_weight(), Rational::new(1, 2));
        let back = serde_json::to_string(&curve.to_spec()).unwrap();
        let reparsed: CurveSpec = serde_json::from_str(&back).unwrap();
        let curve2 = NodalCurve::from_spec(&reparsed).unwrap();
        assert_eq!(curve2.component_ids(), curve.component_ids());
        assert_eq!(curve2.points(), curve.points());
    }
}
