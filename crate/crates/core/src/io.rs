//! TSV readers and writers for every file the tools exchange.
//!
//! All files are UTF-8, LF, tab-separated, one record per line. Lines
//! starting with `#` are comments and skipped on input. Floats are written
//! in shortest round-trip form.

use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::bench::{BenchReport, RunRecord};
use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::{WeightedEdge, WeightedGraph};
use crate::pipeline::{Prediction, SimEvent, SvKind};
use crate::read::Read;

fn parse<T: FromStr>(field: &str, line_no: usize, what: &str) -> Result<T> {
    field.trim().parse().map_err(|_| {
        Error::InvalidInput(format!("line {line_no}: cannot parse {what} from {field:?}"))
    })
}

fn fields(line: &str, expect: usize, line_no: usize) -> Result<Vec<&str>> {
    let fs: Vec<&str> = line.split('\t').collect();
    if fs.len() != expect {
        return Err(Error::InvalidInput(format!(
            "line {line_no}: expected {expect} tab-separated fields, got {}",
            fs.len()
        )));
    }
    Ok(fs)
}

fn data_lines<R: BufRead>(r: R) -> impl Iterator<Item = std::io::Result<(usize, String)>> {
    r.lines().enumerate().filter_map(|(i, line)| match line {
        Ok(l) if l.trim().is_empty() || l.starts_with('#') => None,
        Ok(l) => Some(Ok((i + 1, l))),
        Err(e) => Some(Err(e)),
    })
}

/// `id left length` records; an optional header line (non-numeric first
/// field) is skipped.
pub fn read_reads<R: BufRead>(r: R) -> Result<Vec<Read>> {
    let mut reads = Vec::new();
    let mut first = true;
    for item in data_lines(r) {
        let (line_no, line) = item?;
        let fs = fields(&line, 3, line_no)?;
        let header = std::mem::take(&mut first) && fs[0].trim().parse::<u64>().is_err();
        if header {
            continue;
        }
        reads.push(Read::new(
            parse(fs[0], line_no, "read id")?,
            parse(fs[1], line_no, "left endpoint")?,
            parse(fs[2], line_no, "length")?,
        ));
    }
    Ok(reads)
}

pub fn write_reads<W: Write>(w: &mut W, reads: &[Read]) -> Result<()> {
    for r in reads {
        writeln!(w, "{}\t{}\t{}", r.id, r.left, r.length)?;
    }
    Ok(())
}

/// `idA idB weight` per stored pair; pairs without positional overlap are
/// omitted (their weight is minus infinity).
pub fn write_graph<W: Write>(w: &mut W, g: &WeightedGraph, ids: &[u64]) -> Result<()> {
    for (a, b, weight) in g.stored_pairs() {
        writeln!(w, "{}\t{}\t{}", ids[a as usize], ids[b as usize], weight)?;
    }
    Ok(())
}

/// Edge list with dense vertex indices; the vertex count is the largest
/// index plus one.
pub fn read_graph_edges<R: BufRead>(r: R) -> Result<(usize, Vec<WeightedEdge>)> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for item in data_lines(r) {
        let (line_no, line) = item?;
        let fs = fields(&line, 3, line_no)?;
        let a: u32 = parse(fs[0], line_no, "vertex id")?;
        let b: u32 = parse(fs[1], line_no, "vertex id")?;
        let w: f64 = parse(fs[2], line_no, "weight")?;
        n = n.max(a as usize + 1).max(b as usize + 1);
        edges.push((a, b, w));
    }
    Ok((n, edges))
}

/// `cluster_id comma-separated-ids`, clusters in left-to-right order of
/// their first vertex.
pub fn write_clustering<W: Write>(w: &mut W, c: &Clustering, ids: &[u64]) -> Result<()> {
    for (ci, cluster) in c.normalized().clusters.iter().enumerate() {
        let joined: Vec<String> = cluster.iter().map(|&v| ids[v as usize].to_string()).collect();
        writeln!(w, "{}\t{}", ci, joined.join(","))?;
    }
    Ok(())
}

/// Clusters as lists of external ids (the mapping back to vertices is the
/// caller's business).
pub fn read_clustering<R: BufRead>(r: R) -> Result<Vec<Vec<u64>>> {
    let mut clusters = Vec::new();
    for item in data_lines(r) {
        let (line_no, line) = item?;
        let fs = fields(&line, 2, line_no)?;
        let members: Result<Vec<u64>> =
            fs[1].split(',').map(|s| parse(s, line_no, "vertex id")).collect();
        clusters.push(members?);
    }
    Ok(clusters)
}

pub fn write_cliques<W: Write>(w: &mut W, cliques: &[Vec<u32>], ids: &[u64]) -> Result<()> {
    for (ci, clique) in cliques.iter().enumerate() {
        let joined: Vec<String> = clique.iter().map(|&v| ids[v as usize].to_string()).collect();
        writeln!(w, "{}\t{}", ci, joined.join(","))?;
    }
    Ok(())
}

/// One id per line.
pub fn write_order<W: Write>(w: &mut W, order: &[u32], ids: &[u64]) -> Result<()> {
    for &v in order {
        writeln!(w, "{}", ids[v as usize])?;
    }
    Ok(())
}

pub fn read_order<R: BufRead>(r: R) -> Result<Vec<u64>> {
    let mut order = Vec::new();
    for item in data_lines(r) {
        let (line_no, line) = item?;
        order.push(parse(&line, line_no, "vertex id")?);
    }
    Ok(order)
}

fn parse_kind(s: &str, line_no: usize) -> Result<SvKind> {
    match s.trim() {
        "insertion" => Ok(SvKind::Insertion),
        "deletion" => Ok(SvKind::Deletion),
        other => Err(Error::InvalidInput(format!(
            "line {line_no}: kind must be insertion or deletion, got {other:?}"
        ))),
    }
}

/// `start end kind p_value support`.
pub fn write_predictions<W: Write>(w: &mut W, preds: &[Prediction], comment: Option<&str>) -> Result<()> {
    if let Some(c) = comment {
        writeln!(w, "# {c}")?;
    }
    for p in preds {
        writeln!(w, "{}\t{}\t{}\t{}\t{}", p.start, p.end, p.kind, p.p_value, p.support)?;
    }
    Ok(())
}

pub fn read_predictions<R: BufRead>(r: R) -> Result<Vec<Prediction>> {
    let mut preds = Vec::new();
    for item in data_lines(r) {
        let (line_no, line) = item?;
        let fs = fields(&line, 5, line_no)?;
        preds.push(Prediction {
            start: parse(fs[0], line_no, "start")?,
            end: parse(fs[1], line_no, "end")?,
            kind: parse_kind(fs[2], line_no)?,
            p_value: parse(fs[3], line_no, "p-value")?,
            support: parse(fs[4], line_no, "support")?,
        });
    }
    Ok(preds)
}

/// `position kind length`.
pub fn read_events<R: BufRead>(r: R) -> Result<Vec<SimEvent>> {
    let mut events = Vec::new();
    for item in data_lines(r) {
        let (line_no, line) = item?;
        let fs = fields(&line, 3, line_no)?;
        events.push(SimEvent {
            position: parse(fs[0], line_no, "position")?,
            kind: parse_kind(fs[1], line_no)?,
            length: parse(fs[2], line_no, "length")?,
        });
    }
    Ok(events)
}

pub fn write_events_with_support<W: Write>(
    w: &mut W,
    events: &[SimEvent],
    spanning: &[Vec<u64>],
) -> Result<()> {
    writeln!(w, "# position\tkind\tlength\tspanning_reads")?;
    for (e, ev) in events.iter().enumerate() {
        writeln!(w, "{}\t{}\t{}\t{}", ev.position, ev.kind, ev.length, spanning[e].len())?;
    }
    Ok(())
}

/// One p-value per line, aligned with the cluster file.
pub fn read_pvalues<R: BufRead>(r: R) -> Result<Vec<f64>> {
    let mut ps = Vec::new();
    for item in data_lines(r) {
        let (line_no, line) = item?;
        ps.push(parse(&line, line_no, "p-value")?);
    }
    Ok(ps)
}

/// Aggregated rows: `variant n l mean_cost mean_opcount mean_clusters
/// mean_cluster_size runs seed`.
pub fn write_bench_report<W: Write>(w: &mut W, report: &BenchReport) -> Result<()> {
    writeln!(w, "# variant\tn\tl\tmean_cost\tmean_opcount\tmean_clusters\tmean_cluster_size\truns\tseed")?;
    for row in &report.rows {
        writeln!(
            w,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.algo.label(),
            row.n,
            row.l,
            row.mean_cost,
            row.mean_opcount,
            row.mean_clusters,
            row.mean_cluster_size,
            row.runs,
            row.seed
        )?;
    }
    Ok(())
}

/// Per-solve instrumentation: `variant n l cost opcount`.
pub fn write_run_records<W: Write>(w: &mut W, records: &[RunRecord]) -> Result<()> {
    for r in records {
        writeln!(w, "{}\t{}\t{}\t{}\t{}", r.algo.label(), r.n, r.l, r.cost, r.opcount)?;
    }
    Ok(())
}
