use serde::{Deserialize, Serialize};

use super::components::{classify_components, ComponentDescriptor};
use super::diameter::descriptor_diameter;
use super::invariants::{
    chromatic_upper_degree, chromatic_upper_edges, clique_number_formula, girth_formula, knit_degree_formula,
};
use super::EngineError;
use crate::closure::ClosureSubmatrix;
use crate::extnat::ExtNat;
use crate::group::GroupProfile;
use crate::matrix::StructuralMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Single,
    Pair,
    Star,
}

/// 1-based column and row labels of a closure block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLabels {
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

impl From<&ClosureSubmatrix> for BlockLabels {
    fn from(b: &ClosureSubmatrix) -> Self {
        BlockLabels { cols: b.cols.iter().map(|c| c + 1).collect(), rows: b.rows.iter().map(|r| r + 1).collect() }
    }
}

/// 1-based cell label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellLabel {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub kind: ComponentKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockLabels>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<CellLabel>,
    pub diameter: u64,
}

impl ComponentReport {
    fn new(d: &ComponentDescriptor, diameter: u64) -> Self {
        let (kind, blocks, cell) = match d {
            ComponentDescriptor::SingleClosure(q) => (ComponentKind::Single, vec![q.into()], None),
            ComponentDescriptor::PairClosure(q, m) => (ComponentKind::Pair, vec![q.into(), m.into()], None),
            ComponentDescriptor::StarCell { row, col } => {
                (ComponentKind::Star, Vec::new(), Some(CellLabel { row: row + 1, col: col + 1 }))
            }
        };
        ComponentReport { kind, blocks, cell, diameter }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub connected: bool,
    pub components: Vec<ComponentReport>,
    pub diameter: ExtNat,
    pub clique_number: u64,
    pub girth: ExtNat,
    pub chromatic_lower: u64,
    pub chromatic_upper_edges: u64,
    pub chromatic_upper_degree: u64,
    pub knit_degree: Option<u64>,
}

impl AnalysisReport {
    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

pub fn analyze(m: &StructuralMatrix, g: GroupProfile) -> Result<AnalysisReport, EngineError> {
    let comps = classify_components(m)?;
    let components: Vec<ComponentReport> =
        comps.iter().map(|d| ComponentReport::new(d, descriptor_diameter(d, m, g, true))).collect();
    let connected = comps.len() == 1;
    let diameter = if connected { ExtNat::Finite(components[0].diameter) } else { ExtNat::Infinite };
    let clique_number = clique_number_formula(m, g)?;
    let report = AnalysisReport {
        connected,
        components,
        diameter,
        clique_number,
        girth: girth_formula(m, g)?,
        chromatic_lower: clique_number,
        chromatic_upper_edges: chromatic_upper_edges(m, g)?,
        chromatic_upper_degree: chromatic_upper_degree(m, g)?,
        knit_degree: knit_degree_formula(m, g)?,
    };
    debug_assert!(report.chromatic_lower <= report.chromatic_upper_edges.min(report.chromatic_upper_degree));
    debug_assert!(!report.connected || report.diameter >= ExtNat::Finite(2));
    Ok(report)
}
