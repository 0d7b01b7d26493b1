//! Greedoids with a fully materialized feasible family.
//!
//! Every construction enumerates all `2^n` subsets once (`n <= 20`) and stores
//! a feasibility table, a rank table and a subfeasibility table. All later
//! queries are table lookups or scans over the family.

use std::sync::OnceLock;

use crate::axioms::{self, ClassReport};
use crate::error::{Error, Result, Violation};
use crate::graph::MixedGraph;
use crate::ground::GroundSet;
use crate::subset::{all_subsets, SubsetMask};

/// How a greedoid was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Explicit,
    UniformMatroid { n: usize, k: usize },
    GraphicMatroid(MixedGraph),
    Branching(MixedGraph),
    DirectSum(Box<Provenance>, Box<Provenance>),
    RootedExtension { base: Box<Provenance>, ordering: Vec<usize> },
    Minor { base: Box<Provenance>, deleted: SubsetMask, contracted: SubsetMask },
}

#[derive(Debug, Clone)]
pub struct Greedoid {
    ground: GroundSet,
    feasible: Vec<bool>,
    family: Vec<SubsetMask>,
    rank: Vec<u8>,
    subfeasible: Vec<bool>,
    provenance: Provenance,
    class: OnceLock<ClassReport>,
}

impl PartialEq for Greedoid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.family == other.family
    }
}

impl Greedoid {
    /// Materializes `{X : feasible(X)}` without checking the greedoid axioms.
    pub fn from_predicate(
        ground: GroundSet,
        provenance: Provenance,
        feasible: impl Fn(SubsetMask) -> bool,
    ) -> Self {
        let n = ground.len();
        let table: Vec<bool> = all_subsets(n).map(&feasible).collect();
        Self::from_table(ground, provenance, table)
    }

    fn from_table(ground: GroundSet, provenance: Provenance, feasible: Vec<bool>) -> Self {
        let n = ground.len();
        let size = 1usize << n;
        let family: Vec<SubsetMask> =
            (0..size).filter(|&m| feasible[m]).map(|m| SubsetMask(m as u32)).collect();

        let mut rank = vec![0u8; size];
        for m in 1..size {
            rank[m] = if feasible[m] {
                m.count_ones() as u8
            } else {
                SubsetMask(m as u32).iter().map(|i| rank[m & !(1 << i)]).max().unwrap_or(0)
            };
        }

        let mut subfeasible = feasible.clone();
        for m in (0..size).rev() {
            if !subfeasible[m] {
                subfeasible[m] = (0..n).any(|i| m >> i & 1 == 0 && subfeasible[m | 1 << i]);
            }
        }

        Greedoid { ground, feasible, family, rank, subfeasible, provenance, class: OnceLock::new() }
    }

    /// An explicitly listed family; rejected unless it satisfies both greedoid axioms.
    pub fn explicit(ground: GroundSet, family: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let full = ground.full();
        let mut table = vec![false; 1 << ground.len()];
        for set in family {
            if !set.is_subset_of(full) {
                return Err(Error::BadParams(format!("family member {set} is outside the ground set")));
            }
            table[set.index()] = true;
        }
        let g = Self::from_table(ground, Provenance::Explicit, table);
        g.verify_axioms().map_err(Error::AxiomViolation)?;
        Ok(g)
    }

    pub fn explicit_labels(elements: &[&str], family: &[&[&str]]) -> Result<Self> {
        let ground = GroundSet::new(elements.iter().copied())?;
        let sets = family
            .iter()
            .map(|s| ground.mask(s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::explicit(ground, sets)
    }

    /// `U_{n,k}`: every subset of size at most `k`. Labels default to `e0..`.
    pub fn uniform_matroid(n: usize, k: usize, labels: Option<Vec<String>>) -> Result<Self> {
        if k > n {
            return Err(Error::BadParams(format!("uniform matroid rank {k} exceeds size {n}")));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
        if labels.len() != n {
            return Err(Error::BadParams(format!("expected {n} labels, got {}", labels.len())));
        }
        let ground = GroundSet::new(labels)?;
        Ok(Self::from_predicate(ground, Provenance::UniformMatroid { n, k }, |m| m.len() <= k))
    }

    /// Cycle matroid of the graph (directions ignored); elements are edge ids.
    pub fn graphic_matroid(graph: MixedGraph) -> Result<Self> {
        let ground = GroundSet::new(graph.edge_ids())?;
        let g2 = graph.clone();
        Ok(Self::from_predicate(ground, Provenance::GraphicMatroid(graph), move |m| g2.is_forest(m)))
    }

    /// Branching greedoid: edge sets of trees containing the root whose directed
    /// edges point away from the root.
    pub fn branching(graph: MixedGraph) -> Result<Self> {
        let ground = GroundSet::new(graph.edge_ids())?;
        let g2 = graph.clone();
        Ok(Self::from_predicate(ground, Provenance::Branching(graph), move |m| g2.is_root_tree(m)))
    }

    /// `{A ∪ B : A ∈ F1, B ∈ F2}` on the disjoint union of the ground sets.
    pub fn direct_sum(left: &Greedoid, right: &Greedoid) -> Result<Self> {
        let labels: Vec<String> =
            left.ground.labels().iter().chain(right.ground.labels()).cloned().collect();
        let ground = GroundSet::new(labels)?;
        let shift = left.len();
        let (lf, rf) = (left.ground.full(), right.ground.full());
        let provenance =
            Provenance::DirectSum(Box::new(left.provenance.clone()), Box::new(right.provenance.clone()));
        Ok(Self::from_predicate(ground, provenance, |m| {
            left.is_feasible(m & lf) && right.is_feasible(SubsetMask(m.0 >> shift) & rf)
        }))
    }

    /// `{Y ∈ F : X ⊆ Y} ∪ {prefixes of ordering} ∪ {∅}` for a feasible `X`
    /// and an arbitrary ordering of it.
    pub fn rooted_extension(base: &Greedoid, set: SubsetMask, ordering: &[usize]) -> Result<Self> {
        if !base.is_feasible(set) {
            return Err(Error::BadParams(format!("rooted extension set {set} is not feasible")));
        }
        if ordering.len() != set.len() || SubsetMask::from_indices(ordering.iter().copied()) != set {
            return Err(Error::BadParams("ordering is not a permutation of the set".into()));
        }
        let mut prefixes = vec![SubsetMask::EMPTY];
        for &x in ordering {
            let last = *prefixes.last().unwrap();
            prefixes.push(last.with(x));
        }
        let provenance = Provenance::RootedExtension {
            base: Box::new(base.provenance.clone()),
            ordering: ordering.to_vec(),
        };
        Ok(Self::from_predicate(base.ground.clone(), provenance, |m| {
            (set.is_subset_of(m) && base.is_feasible(m)) || prefixes.contains(&m)
        }))
    }

    /// `(G ∖ deleted) / contracted`. The contracted set must be feasible and
    /// disjoint from the deleted set.
    pub fn minor(&self, deleted: SubsetMask, contracted: SubsetMask) -> Result<Minor> {
        let full = self.ground.full();
        if !deleted.is_subset_of(full) || !contracted.is_subset_of(full) {
            return Err(Error::BadParams("minor sets are outside the ground set".into()));
        }
        if !deleted.is_disjoint(contracted) || !self.is_feasible(contracted) {
            return Err(Error::ContractNotFeasible(contracted));
        }
        let kept: Vec<usize> = (full - deleted - contracted).iter().collect();
        let ground = GroundSet::new(kept.iter().map(|&i| self.ground.label(i).to_string()))?;
        let provenance = Provenance::Minor {
            base: Box::new(self.provenance.clone()),
            deleted,
            contracted,
        };
        let embed = Embedding { kept, contracted };
        let greedoid =
            Self::from_predicate(ground, provenance, |m| self.is_feasible(embed.lift(m)));
        Ok(Minor { greedoid, embedding: embed })
    }

    /// Exhaustive check of `∅ ∈ F` and the exchange property.
    pub fn verify_axioms(&self) -> std::result::Result<(), Violation> {
        if !self.feasible[0] {
            return Err(Violation::EmptySetMissing);
        }
        let mut by_size: Vec<Vec<SubsetMask>> = vec![Vec::new(); self.len() + 1];
        for &x in &self.family {
            by_size[x.len()].push(x);
        }
        for (sx, xs) in by_size.iter().enumerate() {
            for ys in &by_size[sx + 1..] {
                for &x in xs {
                    for &y in ys {
                        if !(y - x).iter().any(|e| self.is_feasible(x.with(e))) {
                            return Err(Violation::Exchange { x, y });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> SubsetMask {
        self.ground.full()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Feasible sets in ascending bitmask order.
    pub fn family(&self) -> &[SubsetMask] {
        &self.family
    }

    /// Cached structural classification.
    pub fn class(&self) -> &ClassReport {
        self.class.get_or_init(|| axioms::classify(self))
    }

    pub fn is_feasible(&self, x: SubsetMask) -> bool {
        self.feasible.get(x.index()).copied().unwrap_or(false)
    }

    pub fn is_subfeasible(&self, x: SubsetMask) -> bool {
        self.subfeasible.get(x.index()).copied().unwrap_or(false)
    }

    pub fn rank(&self, a: SubsetMask) -> usize {
        self.rank[(a & self.full()).index()] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.full())
    }

    /// All maximum-size feasible subsets of `a`, ascending by bitmask.
    pub fn bases_of(&self, a: SubsetMask) -> Vec<SubsetMask> {
        let r = self.rank(a);
        self.family.iter().copied().filter(|x| x.len() == r && x.is_subset_of(a)).collect()
    }

    pub fn bases(&self) -> Vec<SubsetMask> {
        self.bases_of(self.full())
    }

    pub fn is_base(&self, b: SubsetMask) -> bool {
        self.is_feasible(b) && b.len() == self.full_rank()
    }

    /// `Γ(A) = {x ∉ A : A + x ∈ F}`.
    pub fn continuations(&self, a: SubsetMask) -> Result<SubsetMask> {
        if !self.is_feasible(a) {
            return Err(Error::NotFeasible(a));
        }
        Ok(self.continuations_unchecked(a))
    }

    pub(crate) fn continuations_unchecked(&self, a: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices((self.full() - a).iter().filter(|&x| self.is_feasible(a.with(x))))
    }

    /// Lowest-index `y ∈ Y − X` with `X + y` feasible.
    pub fn augment(&self, x: SubsetMask, y: SubsetMask) -> Result<usize> {
        for s in [x, y] {
            if !self.is_feasible(s) {
                return Err(Error::NotFeasible(s));
            }
        }
        if x.len() >= y.len() {
            return Err(Error::BadArgs(format!("|{x}| is not smaller than |{y}|")));
        }
        (y - x).iter().find(|&e| self.is_feasible(x.with(e))).ok_or(Error::NoWitness)
    }

    /// Feasible ordering of `X` built by augmenting from `X` repeatedly.
    pub fn feasible_ordering(&self, x: SubsetMask) -> Result<Vec<usize>> {
        if !self.is_feasible(x) {
            return Err(Error::NotFeasible(x));
        }
        let mut cur = SubsetMask::EMPTY;
        let mut order = Vec::with_capacity(x.len());
        while cur != x {
            let e = self.augment(cur, x)?;
            order.push(e);
            cur = cur.with(e);
        }
        Ok(order)
    }

    pub fn is_feasible_sequence(&self, seq: &[usize]) -> bool {
        let mut cur = SubsetMask::EMPTY;
        seq.iter().all(|&e| {
            let ok = !cur.contains(e) && self.is_feasible(cur.with(e));
            cur = cur.with(e);
            ok
        })
    }

    /// The graph behind a branching greedoid or graphic matroid, if any.
    pub fn graph(&self) -> Option<&MixedGraph> {
        match &self.provenance {
            Provenance::Branching(g) | Provenance::GraphicMatroid(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_branching(&self) -> bool {
        matches!(self.provenance, Provenance::Branching(_))
    }
}

/// Index map from a minor's ground set back into its parent's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub kept: Vec<usize>,
    pub contracted: SubsetMask,
}

impl Embedding {
    /// Parent-side set `Z ∪ contracted` for a minor-side `Z`.
    pub fn lift(&self, z: SubsetMask) -> SubsetMask {
        self.lift_plain(z) | self.contracted
    }

    /// Parent-side image of `Z` without the contracted set.
    pub fn lift_plain(&self, z: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices(z.iter().map(|i| self.kept[i]))
    }

    /// Minor-side index of a parent element, if it was kept.
    pub fn project_element(&self, parent: usize) -> Option<usize> {
        self.kept.iter().position(|&k| k == parent)
    }

    pub fn project(&self, parent: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices(parent.iter().filter_map(|i| self.project_element(i)))
    }
}

#[derive(Debug, Clone)]
pub struct Minor {
    pub greedoid: Greedoid,
    pub embedding: Embedding,
}
