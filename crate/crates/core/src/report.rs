//! Command reports behind the `ratgeom` binary, rendered either as aligned
//! text tables or as JSON carrying the same numbers.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::cosetgeom::{build_cyclic_coset_geometry, CosetGeometry};
use crate::error::{Error, Result};
use crate::geometry::{dot_export, fix_table, scope_columns, separation_check, GroupAction, Scope};
use crate::group::{power_map_rational, FiniteGroup};
use crate::separation::{criterion2, rationality_geometric};
use crate::spec::GroupSpec;
use crate::symgeom::{subset_geometry, symmetric_rationality_demo, SubsetGeometry};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryKind {
    Coset,
    Subsets,
}

impl GeometryKind {
    pub fn name(self) -> &'static str {
        match self {
            GeometryKind::Coset => "coset",
            GeometryKind::Subsets => "subsets",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn scope_name(scope: Scope) -> &'static str {
    match scope {
        Scope::Singletons => "singletons",
        Scope::AllSubsets => "all",
    }
}

/// Process exit code for an error: 2 parse or usage, 3 resource cap,
/// 4 verdict disagreement, 5 flag limit.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::Usage(_)
        | Error::UnknownFamily(_)
        | Error::OutOfRange(_)
        | Error::EmptyGenerators
        | Error::DegreeMismatch(..) => 2,
        Error::OrderCap { .. } | Error::TypeCap { .. } | Error::SubsetCap { .. } | Error::ActionCap { .. } => 3,
        Error::Disagreement(_) => 4,
        Error::FlagLimit { .. } => 5,
        _ => 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub class: usize,
    pub representative: String,
    pub size: usize,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: usize,
    pub class_count: usize,
    pub classes: Vec<ClassRow>,
}

impl GroupSummary {
    pub fn of(group: &FiniteGroup) -> Self {
        GroupSummary {
            degree: group.degree(),
            order: group.order(),
            class_count: group.class_count(),
            classes: group
                .classes()
                .iter()
                .enumerate()
                .map(|(i, c)| ClassRow {
                    class: i + 1,
                    representative: group.element(c.representative).to_string(),
                    size: c.size(),
                    order: c.element_order,
                })
                .collect(),
        }
    }
}

/// A conjugacy class by 1-based number and representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRef {
    pub class: usize,
    pub representative: String,
}

fn class_ref(group: &FiniteGroup, class: usize) -> ClassRef {
    ClassRef {
        class: class + 1,
        representative: group.representative(class).to_string(),
    }
}

fn class_pair(group: &FiniteGroup, pair: Option<(usize, usize)>) -> Option<[ClassRef; 2]> {
    pair.map(|(a, b)| [class_ref(group, a), class_ref(group, b)])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerWitness {
    pub class: ClassRef,
    pub exponent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeInfo {
    pub label: String,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixRow {
    pub class: ClassRef,
    pub values: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoRow {
    pub class: ClassRef,
    pub cycle_type: Vec<usize>,
    pub fix_vector: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Classes,
    Rationality {
        power_map: bool,
        power_map_witness: Option<PowerWitness>,
        geometric: bool,
        geometric_witness: Option<[ClassRef; 2]>,
        cyclic_characters: bool,
        cyclic_characters_witness: Option<[ClassRef; 2]>,
        rational: bool,
    },
    Fixtable {
        geometry: String,
        scope: String,
        types: Vec<TypeInfo>,
        columns: Vec<String>,
        rows: Vec<FixRow>,
    },
    Separate {
        geometry: String,
        scope: String,
        separates: bool,
        witness: Option<[ClassRef; 2]>,
    },
    DemoSubsets {
        n: usize,
        separates: bool,
        power_map_rational: bool,
        lemma_holds: bool,
        rows: Vec<DemoRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub group: GroupSummary,
    pub payload: Payload,
}

enum Built {
    Coset(CosetGeometry),
    Subsets(SubsetGeometry),
}

impl Built {
    fn action(&self) -> &GroupAction {
        match self {
            Built::Coset(c) => c.action(),
            Built::Subsets(s) => s.action(),
        }
    }

    fn types(&self) -> Vec<TypeInfo> {
        let names = self.action().geometry().type_names();
        match self {
            Built::Coset(c) => names
                .iter()
                .enumerate()
                .map(|(i, label)| TypeInfo {
                    label: label.clone(),
                    description: match c.representatives() {
                        Some(reps) => format!("cosets of <{}>", c.group().element(reps[i])),
                        None => format!("cosets of a subgroup of order {}", c.subgroups()[i].order()),
                    },
                })
                .collect(),
            Built::Subsets(_) => names
                .iter()
                .map(|label| TypeInfo {
                    label: label.clone(),
                    description: format!("{label}-subsets"),
                })
                .collect(),
        }
    }
}

fn build_geometry(spec: &GroupSpec, kind: GeometryKind, limits: &Limits) -> Result<Built> {
    match kind {
        GeometryKind::Coset => {
            let group = Arc::new(spec.build(limits.max_order)?);
            Ok(Built::Coset(build_cyclic_coset_geometry(group, limits)?))
        }
        GeometryKind::Subsets => {
            let n = spec
                .symmetric_degree()
                .ok_or_else(|| Error::Usage(format!("the subsets geometry needs a sym:n group, got {spec}")))?;
            Ok(Built::Subsets(subset_geometry(n, limits)?))
        }
    }
}

fn column_label(names: &[String], j: &[usize]) -> String {
    let inner: Vec<&str> = j.iter().map(|&t| names[t].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn cmd_classes(spec: &GroupSpec, limits: &Limits) -> Result<Report> {
    let group = spec.build(limits.max_order)?;
    Ok(Report {
        command: format!("classes {spec}"),
        group: GroupSummary::of(&group),
        payload: Payload::Classes,
    })
}

/// Power-map, geometric and character verdicts side by side; any
/// disagreement is an error.
pub fn cmd_rationality(spec: &GroupSpec, limits: &Limits) -> Result<Report> {
    let group = Arc::new(spec.build(limits.max_order)?);
    let pm = power_map_rational(&group);
    let geo = rationality_geometric(group.clone(), limits)?;
    let c2 = criterion2(&group)?;
    if pm.rational != geo.rational || pm.rational != c2.separates {
        return Err(Error::Disagreement(format!(
            "{spec}: power map {}, geometric {}, cyclic characters {}",
            pm.rational, geo.rational, c2.separates
        )));
    }
    Ok(Report {
        command: format!("rationality {spec}"),
        group: GroupSummary::of(&group),
        payload: Payload::Rationality {
            power_map: pm.rational,
            power_map_witness: pm.witness.map(|(c, m)| PowerWitness {
                class: class_ref(&group, c),
                exponent: m,
            }),
            geometric: geo.rational,
            geometric_witness: class_pair(&group, geo.witness),
            cyclic_characters: c2.separates,
            cyclic_characters_witness: class_pair(&group, c2.witness),
            rational: pm.rational,
        },
    })
}

pub fn cmd_fixtable(spec: &GroupSpec, scope: Scope, kind: GeometryKind, limits: &Limits) -> Result<Report> {
    let built = build_geometry(spec, kind, limits)?;
    let action = built.action();
    let group = action.group();
    let columns = scope_columns(action.geometry().type_count(), scope, limits)?;
    let table = fix_table(action, &columns, limits.max_flags)?;
    let names = action.geometry().type_names();
    Ok(Report {
        command: format!(
            "fixtable {spec} --scope {} --geometry {}",
            scope_name(scope),
            kind.name()
        ),
        group: GroupSummary::of(group),
        payload: Payload::Fixtable {
            geometry: kind.name().into(),
            scope: scope_name(scope).into(),
            types: built.types(),
            columns: columns.iter().map(|j| column_label(names, j)).collect(),
            rows: table
                .rows
                .into_iter()
                .enumerate()
                .map(|(c, values)| FixRow {
                    class: class_ref(group, c),
                    values,
                })
                .collect(),
        },
    })
}

pub fn cmd_separate(spec: &GroupSpec, scope: Scope, kind: GeometryKind, limits: &Limits) -> Result<Report> {
    let built = build_geometry(spec, kind, limits)?;
    let action = built.action();
    let verdict = separation_check(action, scope, limits)?;
    Ok(Report {
        command: format!(
            "separate {spec} --scope {} --geometry {}",
            scope_name(scope),
            kind.name()
        ),
        group: GroupSummary::of(action.group()),
        payload: Payload::Separate {
            geometry: kind.name().into(),
            scope: scope_name(scope).into(),
            separates: verdict.separates,
            witness: class_pair(action.group(), verdict.witness),
        },
    })
}

pub fn cmd_demo_subsets(n: usize, limits: &Limits) -> Result<Report> {
    let demo = symmetric_rationality_demo(n, limits)?;
    let group = demo.geometry.group();
    let rows = demo
        .separation
        .table
        .rows
        .iter()
        .enumerate()
        .map(|(c, values)| DemoRow {
            class: class_ref(group, c),
            cycle_type: group.representative(c).cycle_type(),
            fix_vector: values.clone(),
        })
        .collect();
    Ok(Report {
        command: format!("demo-subsets {n}"),
        group: GroupSummary::of(group),
        payload: Payload::DemoSubsets {
            n,
            separates: demo.separation.separates,
            power_map_rational: demo.power_map.rational,
            lemma_holds: demo.lemma.holds,
            rows,
        },
    })
}

pub fn cmd_export(spec: &GroupSpec, kind: GeometryKind, limits: &Limits) -> Result<String> {
    let built = build_geometry(spec, kind, limits)?;
    Ok(dot_export(built.action().geometry()))
}

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::from(" ");
        for (w, cell) in widths.iter().zip(row) {
            let _ = write!(line, " {cell:<w$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pair_text(pair: &Option<[ClassRef; 2]>) -> String {
    match pair {
        None => String::new(),
        Some([a, b]) => format!(
            " (classes {} {} and {} {} are not separated)",
            a.class, a.representative, b.class, b.representative
        ),
    }
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let g = &self.group;
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(
            out,
            "group: degree {}, order {}, {} class{}",
            g.degree,
            g.order,
            g.class_count,
            if g.class_count == 1 { "" } else { "es" }
        );
        let rows: Vec<Vec<String>> = g
            .classes
            .iter()
            .map(|c| {
                vec![
                    c.class.to_string(),
                    c.representative.clone(),
                    c.size.to_string(),
                    c.order.to_string(),
                ]
            })
            .collect();
        out.push_str(&table(&strings(&["class", "representative", "size", "order"]), &rows));

        match &self.payload {
            Payload::Classes => {}
            Payload::Rationality {
                power_map,
                power_map_witness,
                geometric,
                geometric_witness,
                cyclic_characters,
                cyclic_characters_witness,
                rational,
            } => {
                let pm_note = match power_map_witness {
                    None => String::new(),
                    Some(w) => format!(
                        " (class {} {} is not conjugate to its power {})",
                        w.class.class, w.class.representative, w.exponent
                    ),
                };
                let _ = writeln!(out, "power-map rational: {}{pm_note}", yes_no(*power_map));
                let _ = writeln!(
                    out,
                    "geometric rational: {}{}",
                    yes_no(*geometric),
                    pair_text(geometric_witness)
                );
                let _ = writeln!(
                    out,
                    "cyclic characters rational: {}{}",
                    yes_no(*cyclic_characters),
                    pair_text(cyclic_characters_witness)
                );
                let _ = writeln!(out, "rational: {}", yes_no(*rational));
            }
            Payload::Fixtable {
                geometry,
                scope,
                types,
                columns,
                rows,
            } => {
                let _ = writeln!(out, "geometry: {geometry}, scope: {scope}");
                let trows: Vec<Vec<String>> = types
                    .iter()
                    .map(|t| vec![t.label.clone(), t.description.clone()])
                    .collect();
                out.push_str(&table(&strings(&["type", "objects"]), &trows));
                let mut header = vec!["class".to_string(), "representative".to_string()];
                header.extend(columns.iter().cloned());
                let frows: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        let mut row = vec![r.class.class.to_string(), r.class.representative.clone()];
                        row.extend(r.values.iter().map(u64::to_string));
                        row
                    })
                    .collect();
                out.push_str(&table(&header, &frows));
            }
            Payload::Separate {
                geometry,
                scope,
                separates,
                witness,
            } => {
                let _ = writeln!(out, "geometry: {geometry}, scope: {scope}");
                let _ = writeln!(out, "separates: {}{}", yes_no(*separates), pair_text(witness));
            }
            Payload::DemoSubsets {
                n,
                separates,
                power_map_rational,
                lemma_holds,
                rows,
            } => {
                let mut header = vec!["class".to_string(), "cycle type".to_string()];
                header.extend((0..=*n).map(|k| format!("k={k}")));
                let drows: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        let ct: Vec<String> = r.cycle_type.iter().map(usize::to_string).collect();
                        let mut row = vec![r.class.class.to_string(), ct.join(",")];
                        row.extend(r.fix_vector.iter().map(u64::to_string));
                        row
                    })
                    .collect();
                out.push_str(&table(&header, &drows));
                let _ = writeln!(out, "distinct fix vectors: {}", yes_no(*lemma_holds));
                let _ = writeln!(out, "separates: {}", yes_no(*separates));
                let _ = writeln!(out, "power-map rational: {}", yes_no(*power_map_rational));
            }
        }
        out
    }
}
