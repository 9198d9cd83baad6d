//! Reproductions of the published count tables as TSV, each computed cell
//! marked `=` (agrees), `≠` (disagrees, both values shown) or `·` (not
//! computed, published value shown).

use super::doubly::closed_form_coset_clusters;
use super::{
    affine_cluster_count, affine_variable_count, apq_closed, apq_recurrence, block_faces, doubly_extended_rows,
    face_vector_from_decomposition, fmt_count, int, product_faces, tail_subalgebras, Block, Decomposition,
    DoublyExtendedRow, ExactCount, FaceVector,
};
use crate::error::Result;
use crate::explorer::Budget;
use crate::families::TnwSignature;
use crate::mcg::abstract_quotient_order;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Text(String),
    Match(String),
    Mismatch { computed: String, published: String },
    NotComputed(String),
}

impl Cell {
    pub fn compare(computed: &ExactCount, published: &ExactCount) -> Self {
        if computed == published {
            Cell::Match(fmt_count(computed))
        } else {
            Cell::Mismatch { computed: fmt_count(computed), published: fmt_count(published) }
        }
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Match(v) => format!("= {v}"),
            Cell::Mismatch { computed, published } => format!("≠ {computed} (published {published})"),
            Cell::NotComputed(v) => format!("· {v}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(title: &str, header: &[&str]) -> Self {
        Self { title: title.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn mismatches(&self) -> usize {
        self.rows.iter().flatten().filter(|c| matches!(c, Cell::Mismatch { .. })).count()
    }

    pub fn matches(&self) -> usize {
        self.rows.iter().flatten().filter(|c| matches!(c, Cell::Match(_))).count()
    }

    /// Row whose first cell is `key`.
    pub fn row(&self, key: &str) -> Option<&[Cell]> {
        self.rows.iter().find(|r| matches!(r.first(), Some(Cell::Text(k)) if k == key)).map(|r| r.as_slice())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("# {}\n{}\n", self.title, self.header.join("\t"));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut grid = vec![self.header.clone()];
        grid.extend(self.rows.iter().map(|r| r.iter().map(Cell::render).collect::<Vec<_>>()));
        let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
        let width: Vec<usize> =
            (0..cols).map(|c| grid.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("{}\n", self.title);
        for r in grid {
            let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = width[c])).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn sig(n: &[usize], w: &[u32]) -> TnwSignature {
    TnwSignature::new(n.to_vec(), w.to_vec()).expect("valid signature")
}

/// Abstract twist-group quotient `Γ_τ/<γ>` against the abelian part of the
/// published affine quotient groups (automorphism factors excluded).
pub fn affine_groups_table() -> Table {
    let mut t = Table::new("affine quotients by <gamma>", &["type", "signature", "order"]);
    let mut rows: Vec<(String, TnwSignature, u64)> = Vec::new();
    rows.push(("A_{1,1}".into(), sig(&[], &[]), 1));
    for p in 2..=6 {
        rows.push((format!("A_{{{p},1}}"), sig(&[p], &[1]), p as u64));
        for q in 2..=p {
            rows.push((format!("A_{{{p},{q}}}"), sig(&[p, q], &[1, 1]), (p * q) as u64));
        }
    }
    for n in 4..=8 {
        rows.push((format!("D~_{n}"), sig(&[n - 2, 2, 2], &[1, 1, 1]), 4 * (n as u64 - 2)));
    }
    rows.push(("E~_6".into(), sig(&[3, 3, 2], &[1, 1, 1]), 18));
    rows.push(("E~_7".into(), sig(&[4, 3, 2], &[1, 1, 1]), 24));
    rows.push(("E~_8".into(), sig(&[5, 3, 2], &[1, 1, 1]), 30));
    for n in 2..=6 {
        rows.push((format!("C~_{n}"), sig(&[n], &[2]), n as u64));
    }
    for n in 3..=7 {
        rows.push((format!("B~_{n}"), sig(&[n - 1, 2], &[1, 2]), 2 * (n as u64 - 1)));
    }
    rows.push(("F~_4".into(), sig(&[3, 2], &[2, 1]), 6));
    rows.push(("G~_2".into(), sig(&[2], &[3]), 2));
    for n in 2..=6 {
        rows.push((format!("BC~(4)_{n}"), TnwSignature::bc(vec![n]).expect("valid signature"), n as u64));
    }
    for (name, s, published) in rows {
        let q = abstract_quotient_order(&s);
        let cell = match q.order {
            Some(o) => Cell::compare(&int(o), &int(published)),
            None => Cell::Mismatch { computed: "infinite".into(), published: published.to_string() },
        };
        t.rows.push(vec![Cell::Text(name), Cell::Text(s.spec_string()), cell]);
    }
    t
}

/// Closed form against the recurrence for `1 ≤ p, q ≤ max`.
pub fn apq_table(max: u64) -> Result<Table> {
    let mut t = Table::new("A_{p,q} clusters: closed form vs recurrence", &["p", "q", "closed", "recurrence"]);
    for p in 1..=max {
        for q in 1..=max {
            let closed = apq_closed(p, q)?;
            let rec = apq_recurrence(p, q)?;
            t.rows.push(vec![
                Cell::Text(p.to_string()),
                Cell::Text(q.to_string()),
                Cell::Text(fmt_count(&closed)),
                Cell::compare(&rec, &closed),
            ]);
        }
    }
    Ok(t)
}

/// The published corank-one decomposition of D̂_4 up to `γ`: 6 A_{2,2},
/// 8 D_4 and 2 D_2 × D_2.
pub fn d4_decomposition(budget: &Budget) -> Result<Decomposition> {
    let a22 = block_faces(&Block::Affine(sig(&[2, 2], &[1, 1])), budget)?;
    let d4 = block_faces(&Block::Finite("D_4".into()), budget)?;
    let a1 = block_faces(&Block::Finite("A_1".into()), budget)?;
    let d2d2 = product_faces(&[a1.clone(), a1.clone(), a1.clone(), a1]);
    Ok(Decomposition { rank: 5, parts: vec![(int(6), a22), (int(8), d4), (int(2), d2d2)] })
}

/// Corank totals for D̂_4 up to `γ`: special-framing enumeration, the
/// recursion from the published decomposition, and the closed forms.
pub fn d4_affine_table(budget: &Budget) -> Result<Table> {
    let published = [16, 96, 244, 270, 108];
    let d4 = sig(&[2, 2, 2], &[1, 1, 1]);
    let enumerated = block_faces(&Block::Affine(d4.clone()), budget).ok();
    let recursion = face_vector_from_decomposition(&d4_decomposition(budget)?);
    let mut t = Table::new("D^_4 subalgebras up to gamma", &["corank", "enumeration", "recursion", "closed form"]);
    for (i, &p) in published.iter().enumerate() {
        let c = i + 1;
        let p = int(p);
        let enum_cell = match &enumerated {
            Some(f) => Cell::compare(f.corank(c), &p),
            None => Cell::NotComputed(fmt_count(&p)),
        };
        let rec_cell = match &recursion {
            Ok(f) => Cell::compare(f.corank(c), &p),
            Err(_) => Cell::NotComputed(fmt_count(&p)),
        };
        let closed = match c {
            1 => Cell::compare(&affine_variable_count(&d4)?, &p),
            5 => Cell::compare(&affine_cluster_count(&d4)?, &p),
            _ => Cell::NotComputed(fmt_count(&p)),
        };
        t.rows.push(vec![Cell::Text(c.to_string()), enum_cell, rec_cell, closed]);
    }
    Ok(t)
}

/// Per-coset and quotient cluster counts from the closed forms.
pub fn doubly_extended_clusters_table() -> Result<Table> {
    let mut t = Table::new(
        "doubly extended clusters",
        &["type", "per coset", "group factor", "quotient"],
    );
    for row in doubly_extended_rows() {
        let coset = match (&row.sig, row.uniform) {
            (Some(s), true) => Some(closed_form_coset_clusters(s, row.dual_factor)?),
            _ => None,
        };
        let coset_cell = match &coset {
            Some(c) => Cell::compare(c, &row.published_coset_clusters),
            None => Cell::NotComputed(fmt_count(&row.published_coset_clusters)),
        };
        for (k, (&g, &published)) in row.group_factors.iter().zip(&row.published_clusters).enumerate() {
            let quotient = match &coset {
                Some(c) => Cell::compare(&(c * int(g)), &int(published)),
                None => Cell::NotComputed(published.to_string()),
            };
            let name = if row.group_factors.len() > 1 { format!("{} k={}", row.name, k + 1) } else { row.name.to_string() };
            let first = if k == 0 { coset_cell.clone() } else { Cell::Text(String::new()) };
            t.rows.push(vec![Cell::Text(name), first, Cell::Text(g.to_string()), quotient]);
        }
    }
    Ok(t)
}

/// Corank-one decomposition of a doubly extended row in the quotient by
/// `𝒩` with group factor `g`.
pub fn doubly_extended_decomposition(row: &DoublyExtendedRow, g: u64, budget: &Budget) -> Result<Decomposition> {
    let s = row.sig.as_ref().ok_or_else(|| crate::error::Error::Usage(format!("{} is not a T quiver", row.name)))?;
    let mut parts = Vec::new();
    for t in tail_subalgebras(s, row.dual_factor)? {
        let affine = block_faces(&Block::Affine(t.affine.clone()), budget)?;
        let finite = block_faces(&Block::Finite(format!("A_{}", t.finite_rank)), budget)?;
        parts.push((t.multiplicity * int(g), product_faces(&[affine, finite])));
    }
    Ok(Decomposition { rank: s.rank(), parts })
}

/// Largest affine piece a row needs, by the closed cluster formula.
fn largest_piece(row: &DoublyExtendedRow) -> Result<ExactCount> {
    let mut best = int(0);
    if let Some(s) = &row.sig {
        for t in tail_subalgebras(s, row.dual_factor)? {
            let c = affine_cluster_count(&t.affine)?;
            if c > best {
                best = c;
            }
        }
    }
    Ok(best)
}

/// Codimension counts by facet recursion over enumerated affine and finite
/// pieces. Rows outside `only` (when given), outside the uniform method, or
/// needing a piece larger than the vertex budget are left uncomputed.
pub fn doubly_extended_codim_table(budget: &Budget, only: Option<&[&str]>) -> Result<Table> {
    let mut header = vec!["type".to_string()];
    header.extend((1..=10).map(|k| k.to_string()));
    let mut t = Table { title: "doubly extended codimension counts".into(), header, rows: Vec::new() };
    for row in doubly_extended_rows() {
        let selected = only.map_or(true, |names| names.contains(&row.name));
        let feasible = row.uniform && largest_piece(&row)? <= int(budget.max_vertices as u64);
        for (k, (&g, published)) in row.group_factors.iter().zip(&row.published_codims).enumerate() {
            let computed: Option<FaceVector> = if selected && feasible {
                Some(face_vector_from_decomposition(&doubly_extended_decomposition(&row, g, budget)?)?)
            } else {
                None
            };
            let name = if row.group_factors.len() > 1 { format!("{} k={}", row.name, k + 1) } else { row.name.to_string() };
            let mut cells = vec![Cell::Text(name)];
            for (c, p) in published.iter().enumerate() {
                cells.push(match &computed {
                    Some(f) => Cell::compare(f.corank(c + 1), p),
                    None => Cell::NotComputed(fmt_count(p)),
                });
            }
            t.rows.push(cells);
        }
    }
    Ok(t)
}
