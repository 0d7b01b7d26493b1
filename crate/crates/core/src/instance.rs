//! Instance files.
//!
//! An instance is a TOML document whose first non-blank line is the version
//! header `#greedoid-instance v1`. It holds a greedoid descriptor, optional
//! named weight maps and an optional objective:
//!
//! ```toml
//! #greedoid-instance v1
//! [greedoid]
//! kind = "branching"            # explicit | uniform_matroid | graphic_matroid
//!                               # | branching | direct_sum | rooted_extension | minor
//! [greedoid.graph]
//! nodes = ["r", "v", "u"]
//! root = "r"                    # optional, defaults to the first node
//! edges = [
//!   { id = "a", tail = "r", head = "v", directed = false },
//!   { id = "c", tail = "v", head = "u", directed = true },
//! ]
//!
//! [weights.c]                   # every element, rationals as "p/q" strings
//! a = "1"
//! c = "1/2"
//!
//! [objective]
//! kind = "set_table"            # set_table | linear | path_sum | bottleneck
//!                               # | path_function | ordered_table
//! direction = "max"
//! weights = "c"                 # weight map for linear/path_sum/bottleneck
//! [objective.table]             # sets as comma-joined labels, "" for the empty set;
//! "" = "0"                      # for ordered_table, keys are sequences in order
//! "a" = "2"
//! ```
//!
//! The other greedoid kinds take these fields:
//! `explicit { elements, family }` with `family` a list of label lists,
//! `uniform_matroid { n, k, labels? }`, `graphic_matroid { graph }`,
//! `direct_sum { left, right }`, `rooted_extension { base, ordering }`
//! (the extended set is the set of `ordering`) and
//! `minor { base, deleted?, contracted? }`. Wrappers nest as sub-tables,
//! e.g. `[greedoid.base]`.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::greedoid::Greedoid;
use crate::greedy::{Direction, Objective, ObjectiveKind};
use crate::ground::GroundSet;
use crate::rational::{self, Rational};
use crate::subset::SubsetMask;

pub const HEADER: &str = "#greedoid-instance v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub id: String,
    pub tail: String,
    pub head: String,
    #[serde(default)]
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub nodes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    pub edges: Vec<EdgeSpec>,
}

impl GraphSpec {
    pub fn build(&self) -> Result<MixedGraph> {
        MixedGraph::new(
            self.nodes.iter().map(String::as_str),
            self.edges.iter().map(|e| (e.id.as_str(), e.tail.as_str(), e.head.as_str(), e.directed)),
            self.root.as_deref(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GreedoidSpec {
    Explicit {
        elements: Vec<String>,
        family: Vec<Vec<String>>,
    },
    UniformMatroid {
        n: usize,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    GraphicMatroid {
        graph: GraphSpec,
    },
    Branching {
        graph: GraphSpec,
    },
    DirectSum {
        left: Box<GreedoidSpec>,
        right: Box<GreedoidSpec>,
    },
    RootedExtension {
        base: Box<GreedoidSpec>,
        ordering: Vec<String>,
    },
    Minor {
        base: Box<GreedoidSpec>,
        #[serde(default)]
        deleted: Vec<String>,
        #[serde(default)]
        contracted: Vec<String>,
    },
}

impl GreedoidSpec {
    pub fn build(&self) -> Result<Greedoid> {
        match self {
            GreedoidSpec::Explicit { elements, family } => {
                let ground = GroundSet::new(elements.iter().cloned())?;
                let sets = family.iter().map(|s| ground.mask(s)).collect::<Result<Vec<_>>>()?;
                Greedoid::explicit(ground, sets)
            }
            GreedoidSpec::UniformMatroid { n, k, labels } => Greedoid::uniform_matroid(*n, *k, labels.clone()),
            GreedoidSpec::GraphicMatroid { graph } => Greedoid::graphic_matroid(graph.build()?),
            GreedoidSpec::Branching { graph } => Greedoid::branching(graph.build()?),
            GreedoidSpec::DirectSum { left, right } => Greedoid::direct_sum(&left.build()?, &right.build()?),
            GreedoidSpec::RootedExtension { base, ordering } => {
                let base = base.build()?;
                let order = ordering.iter().map(|l| base.ground().element(l)).collect::<Result<Vec<_>>>()?;
                let set = SubsetMask::from_indices(order.iter().copied());
                Greedoid::rooted_extension(&base, set, &order)
            }
            GreedoidSpec::Minor { base, deleted, contracted } => {
                let base = base.build()?;
                let deleted = base.ground().mask(deleted)?;
                let contracted = base.ground().mask(contracted)?;
                Ok(base.minor(deleted, contracted)?.greedoid)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectiveTag {
    SetTable,
    Linear,
    PathSum,
    Bottleneck,
    PathFunction,
    OrderedTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectionTag {
    Min,
    Max,
}

impl From<DirectionTag> for Direction {
    fn from(d: DirectionTag) -> Self {
        match d {
            DirectionTag::Min => Direction::Min,
            DirectionTag::Max => Direction::Max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectiveSpec {
    pub kind: ObjectiveTag,
    pub direction: DirectionTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<BTreeMap<String, String>>,
}

/// The raw document, before any greedoid is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub greedoid: GreedoidSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub weights: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective: Option<ObjectiveSpec>,
}

impl InstanceFile {
    pub fn to_text(&self) -> String {
        let body = toml::to_string(self).expect("instance documents always serialize");
        format!("{HEADER}\n{body}")
    }
}

/// A validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub file: InstanceFile,
    pub greedoid: Greedoid,
    /// Named weight maps, indexed by element.
    pub weights: BTreeMap<String, Vec<Rational>>,
    pub objective: Option<Objective>,
}

impl Instance {
    pub fn weight(&self, name: &str) -> Option<&[Rational]> {
        self.weights.get(name).map(Vec::as_slice)
    }
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let header = text.lines().enumerate().find(|(_, l)| !l.trim().is_empty());
    match header {
        Some((_, l)) if l.trim() == HEADER => {}
        Some((i, _)) => return Err(Error::Parse { line: i + 1, message: format!("expected header {HEADER:?}") }),
        None => return Err(Error::Parse { line: 1, message: "empty instance file".into() }),
    }
    let file: InstanceFile = toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map_or(1, |s| line_at(text, s.start)),
        message: e.message().to_string(),
    })?;
    build_instance(file, Some(text))
}

/// Validates a document; `source` is only used to attach line numbers.
pub fn build_instance(file: InstanceFile, source: Option<&str>) -> Result<Instance> {
    let locate = |section: &str, key: Option<&str>| source.and_then(|s| find_line(s, section, key));
    let invalid = |line: Option<usize>, e: Error| Error::Validation { line, message: e.to_string() };

    let greedoid = file.greedoid.build().map_err(|e| invalid(locate("greedoid", None), e))?;
    let ground = greedoid.ground();

    let mut weights = BTreeMap::new();
    for (name, map) in &file.weights {
        let section = format!("weights.{name}");
        let mut values = vec![None; ground.len()];
        for (label, text) in map {
            let line = locate(&section, Some(label));
            let i = ground.index_of(label).ok_or_else(|| Error::Validation {
                line,
                message: format!("weight map {name:?} names unknown element {label:?}"),
            })?;
            values[i] = Some(rational::parse(text).ok_or_else(|| Error::Validation {
                line,
                message: format!("{text:?} is not a rational number"),
            })?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::Validation {
                    line: locate(&section, None),
                    message: format!("weight map {name:?} lacks element {:?}", ground.label(i)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        weights.insert(name.clone(), values);
    }

    let objective = match &file.objective {
        None => None,
        Some(spec) => {
            let obj = build_objective(spec, ground, &weights, |key| locate("objective.table", Some(key)))?;
            obj.evaluator(&greedoid).map_err(|e| invalid(locate("objective", None), e))?;
            Some(obj)
        }
    };
    Ok(Instance { file, greedoid, weights, objective })
}

fn build_objective(
    spec: &ObjectiveSpec,
    ground: &GroundSet,
    weights: &BTreeMap<String, Vec<Rational>>,
    locate: impl Fn(&str) -> Option<usize>,
) -> Result<Objective> {
    let direction = spec.direction.into();
    let weight_vector = || {
        let name = spec.weights.as_deref().unwrap_or("c");
        weights.get(name).cloned().ok_or_else(|| Error::Validation {
            line: None,
            message: format!("objective needs weight map {name:?}"),
        })
    };
    let table = || spec.table.as_ref().ok_or_else(|| Error::Validation {
        line: None,
        message: "objective needs a table".into(),
    });
    let value = |key: &str, text: &str| {
        rational::parse(text).ok_or_else(|| Error::Validation {
            line: locate(key),
            message: format!("{text:?} is not a rational number"),
        })
    };
    let set_table = || -> Result<HashMap<SubsetMask, Rational>> {
        let mut out = HashMap::new();
        for (key, text) in table()? {
            let mask = ground.parse_mask(key).map_err(|e| Error::Validation { line: locate(key), message: e.to_string() })?;
            if out.insert(mask, value(key, text)?).is_some() {
                return Err(Error::Validation { line: locate(key), message: format!("set {key:?} listed twice") });
            }
        }
        Ok(out)
    };
    let kind = match spec.kind {
        ObjectiveTag::SetTable => ObjectiveKind::SetTable(set_table()?),
        ObjectiveTag::PathFunction => ObjectiveKind::PathFunction(set_table()?),
        ObjectiveTag::Linear => ObjectiveKind::Linear(weight_vector()?),
        ObjectiveTag::PathSum => ObjectiveKind::PathSum(weight_vector()?),
        ObjectiveTag::Bottleneck => ObjectiveKind::Bottleneck(weight_vector()?),
        ObjectiveTag::OrderedTable => {
            let mut out = HashMap::new();
            for (key, text) in table()? {
                let bad = |message: String| Error::Validation { line: locate(key), message };
                let seq = if key.is_empty() {
                    Vec::new()
                } else {
                    key.split(',')
                        .map(|l| ground.element(l.trim()))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| bad(e.to_string()))?
                };
                if SubsetMask::from_indices(seq.iter().copied()).len() != seq.len() {
                    return Err(bad(format!("sequence {key:?} repeats an element")));
                }
                out.insert(seq, value(key, text)?);
            }
            ObjectiveKind::OrderedTable(out)
        }
    };
    Ok(Objective::new(kind, direction))
}

fn line_at(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Line of `key = ...` inside `[section]`, or of the section header itself.
fn find_line(text: &str, section: &str, key: Option<&str>) -> Option<usize> {
    let mut current = String::new();
    let mut header_line = None;
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if let Some(name) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            current = name.trim().to_string();
            if current == section && header_line.is_none() {
                header_line = Some(i + 1);
            }
            continue;
        }
        if current != section {
            continue;
        }
        if let (Some(key), Some((lhs, _))) = (key, t.split_once('=')) {
            if lhs.trim().trim_matches('"') == key {
                return Some(i + 1);
            }
        }
    }
    header_line
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn header_is_required() {
        let err = parse_instance("[greedoid]\nkind = \"uniform_matroid\"\nn = 2\nk = 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(matches!(parse_instance("  \n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let text = format!("{HEADER}\n[greedoid]\nkind = \"uniform_matroid\"\nn = 2\nk = = 1\n");
        assert!(matches!(parse_instance(&text), Err(Error::Parse { line: 5, .. })));
        let text = format!("{HEADER}\n[greedoid]\nkind = \"hypergraph\"\n");
        assert!(matches!(parse_instance(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_weight_element_is_rejected() {
        let text = format!(
            "{HEADER}\n[greedoid]\nkind = \"uniform_matroid\"\nn = 2\nk = 1\n\n[weights.c]\ne0 = \"1\"\nzz = \"2\"\n"
        );
        match parse_instance(&text) {
            Err(Error::Validation { line, message }) => {
                assert_eq!(line, Some(9));
                assert!(message.contains("zz"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn incomplete_and_malformed_weights() {
        let base = format!("{HEADER}\n[greedoid]\nkind = \"uniform_matroid\"\nn = 2\nk = 1\n[weights.c]\n");
        assert!(matches!(parse_instance(&format!("{base}e0 = \"1\"\n")), Err(Error::Validation { .. })));
        assert!(matches!(
            parse_instance(&format!("{base}e0 = \"1\"\ne1 = \"1/0\"\n")),
            Err(Error::Validation { line: Some(8), .. })
        ));
    }

    #[test]
    fn construction_errors_are_validation_errors() {
        let text = format!(
            "{HEADER}\n[greedoid]\nkind = \"explicit\"\nelements = [\"a\"]\nfamily = [[\"a\"]]\n"
        );
        assert!(matches!(parse_instance(&text), Err(Error::Validation { line: Some(2), .. })));
    }

    #[test]
    fn nested_rooted_extension() {
        let text = format!(
            "{HEADER}\n[greedoid]\nkind = \"rooted_extension\"\nordering = [\"e1\", \"e0\"]\n\
             [greedoid.base]\nkind = \"uniform_matroid\"\nn = 3\nk = 2\n"
        );
        let inst = parse_instance(&text).unwrap();
        assert!(inst.greedoid.class().is_local_forest());
        assert!(inst.greedoid.is_feasible(SubsetMask::singleton(1)));
        assert!(!inst.greedoid.is_feasible(SubsetMask::singleton(0)));
    }

    #[test]
    fn minor_and_direct_sum_descriptors() {
        let text = format!(
            "{HEADER}\n[greedoid]\nkind = \"minor\"\ndeleted = [\"b\"]\n\
             [greedoid.base]\nkind = \"direct_sum\"\n\
             [greedoid.base.left]\nkind = \"uniform_matroid\"\nn = 2\nk = 1\nlabels = [\"a\", \"b\"]\n\
             [greedoid.base.right]\nkind = \"uniform_matroid\"\nn = 1\nk = 1\nlabels = [\"c\"]\n"
        );
        let inst = parse_instance(&text).unwrap();
        assert_eq!(inst.greedoid.ground().labels(), ["a", "c"]);
        assert_eq!(inst.greedoid.family().len(), 4);
    }

    #[test]
    fn fixtures_round_trip() {
        for (name, _) in fixtures::FIXTURES {
            let inst = fixtures::load(name).unwrap();
            let text = inst.file.to_text();
            let again = parse_instance(&text).unwrap();
            assert_eq!(again.file, inst.file, "{name}");
            assert_eq!(again.greedoid, inst.greedoid, "{name}");
            assert_eq!(again.weights, inst.weights, "{name}");
            assert_eq!(again.objective, inst.objective, "{name}");
        }
    }

    #[test]
    fn incomplete_set_table_is_rejected() {
        let text = format!(
            "{HEADER}\n[greedoid]\nkind = \"uniform_matroid\"\nn = 1\nk = 1\n\
             [objective]\nkind = \"set_table\"\ndirection = \"max\"\n[objective.table]\n\"\" = \"0\"\n"
        );
        assert!(matches!(parse_instance(&text), Err(Error::Validation { line: Some(6), .. })));
    }
}
