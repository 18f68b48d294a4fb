//! Turning clusterings into filtered variant predictions, plus the
//! synthetic read simulator used to exercise the whole chain.

use rand::SeedableRng;
use rand_distr::{Distribution, Normal, Uniform};

use crate::error::{Error, Result};
use crate::normal::std_normal_sf;
use crate::read::{AlignParams, Read};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvKind {
    Insertion,
    Deletion,
}

impl std::fmt::Display for SvKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SvKind::Insertion => "insertion",
            SvKind::Deletion => "deletion",
        })
    }
}

/// A candidate variant interval with its significance.
#[derive(Clone, Debug, PartialEq)]
pub struct Prediction {
    pub start: f64,
    pub end: f64,
    pub kind: SvKind,
    pub p_value: f64,
    pub support: usize,
}

/// A summarized cluster before any p-value is attached.
#[derive(Clone, Debug, PartialEq)]
pub struct PredictionDraft {
    pub start: f64,
    pub end: f64,
    pub kind: SvKind,
    /// |mean insert size - mu|.
    pub deviation: f64,
    pub support: usize,
}

/// Largest prefix of the sorted p-values that stays under the step-up line
/// `rate * m / total`; returns the original indices of that prefix.
/// `total` is the number of candidates before any filtering.
pub fn bh_select(pvalues: &[f64], rate: f64, total: usize) -> Vec<usize> {
    assert!(rate > 0.0 && rate <= 1.0, "rate must be in (0, 1]");
    assert!(total >= pvalues.len(), "total candidate count below list length");
    let mut idx: Vec<usize> = (0..pvalues.len()).collect();
    idx.sort_by(|&a, &b| pvalues[a].total_cmp(&pvalues[b]).then(a.cmp(&b)));
    for m in (1..=idx.len()).rev() {
        if pvalues[idx[m - 1]] <= rate * m as f64 / total as f64 {
            let mut keep = idx[..m].to_vec();
            keep.sort_unstable();
            return keep;
        }
    }
    Vec::new()
}

/// Greedy disjointness filter: predictions are considered in ascending
/// p-value (ties: ascending start) and kept iff disjoint from everything
/// already kept. Output is sorted by start.
pub fn remove_overlaps(mut preds: Vec<Prediction>) -> Vec<Prediction> {
    preds.sort_by(|a, b| a.p_value.total_cmp(&b.p_value).then(a.start.total_cmp(&b.start)));
    let mut kept: Vec<Prediction> = Vec::new();
    for p in preds {
        let clashes = kept.iter().any(|k| p.start < k.end && k.start < p.end);
        if !clashes {
            kept.push(p);
        }
    }
    kept.sort_by(|a, b| a.start.total_cmp(&b.start));
    kept
}

/// Condenses a cluster of reads into a draft prediction: the span is the
/// intersection of the member spans when non-empty (every member covers it),
/// otherwise the median-left to median-right span; the call is an insertion
/// when the mean insert size falls below `mu`, a deletion otherwise.
pub fn summarize_cluster(cluster: &[u32], reads: &[Read], p: &AlignParams) -> PredictionDraft {
    assert!(!cluster.is_empty(), "cannot summarize an empty cluster");
    let members: Vec<&Read> = cluster.iter().map(|&v| &reads[v as usize]).collect();
    let mut start = f64::NEG_INFINITY;
    let mut end = f64::INFINITY;
    for r in &members {
        start = start.max(r.left);
        end = end.min(r.right());
    }
    if !(start < end) {
        let mut lefts: Vec<f64> = members.iter().map(|r| r.left).collect();
        let mut rights: Vec<f64> = members.iter().map(|r| r.right()).collect();
        start = median(&mut lefts);
        end = median(&mut rights);
        if !(end > start) {
            end = start + 1.0;
        }
    }
    let mean_len = members.iter().map(|r| r.length).sum::<f64>() / members.len() as f64;
    PredictionDraft {
        start,
        end,
        kind: if mean_len < p.mu { SvKind::Insertion } else { SvKind::Deletion },
        deviation: (mean_len - p.mu).abs(),
        support: members.len(),
    }
}

fn median(xs: &mut [f64]) -> f64 {
    xs.sort_unstable_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

/// Where the per-cluster p-values come from.
pub enum PvalueSource<'a> {
    /// Calibrated values supplied alongside the clusters, one per draft.
    External(&'a [f64]),
    /// Two-sided normal tail of the mean deviation at scale
    /// `sigma / sqrt(support)`. A crude stand-in, clearly labelled in CLI
    /// output; selection mechanics do not depend on its calibration.
    PlaceholderZTest { sigma: f64 },
}

pub fn attach_pvalues(drafts: &[PredictionDraft], source: PvalueSource<'_>) -> Result<Vec<Prediction>> {
    let pvalue = |i: usize, d: &PredictionDraft| -> Result<f64> {
        match &source {
            PvalueSource::External(ps) => {
                if ps.len() != drafts.len() {
                    return Err(Error::PvalueCount { expected: drafts.len(), got: ps.len() });
                }
                let p = ps[i];
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidPvalue(p));
                }
                Ok(p)
            }
            PvalueSource::PlaceholderZTest { sigma } => {
                if !(*sigma > 0.0) {
                    return Err(Error::InvalidSigma(*sigma));
                }
                let z = d.deviation / (sigma / (d.support as f64).sqrt());
                Ok((2.0 * std_normal_sf(z)).min(1.0))
            }
        }
    };
    drafts
        .iter()
        .enumerate()
        .map(|(i, d)| {
            Ok(Prediction {
                start: d.start,
                end: d.end,
                kind: d.kind,
                p_value: pvalue(i, d)?,
                support: d.support,
            })
        })
        .collect()
}

/// A planted variant for the simulator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimEvent {
    pub position: f64,
    pub kind: SvKind,
    /// Base pairs gained or lost; must be positive.
    pub length: f64,
}

impl SimEvent {
    /// Reference footprint: deletions occupy `[position, position + length)`,
    /// insertions a single point.
    fn footprint_end(&self) -> f64 {
        match self.kind {
            SvKind::Deletion => self.position + self.length,
            SvKind::Insertion => self.position,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimulatedReads {
    /// Sorted by left endpoint, ids unique.
    pub reads: Vec<Read>,
    /// Per input event: ids of the reads whose span covers it.
    pub spanning: Vec<Vec<u64>>,
}

/// Places `n` reads uniformly on the genome with normal insert sizes; a read
/// whose span strictly contains an event's position sees its apparent length
/// grow by the event's length for a deletion and shrink for an insertion.
/// Deterministic per seed.
pub fn simulate_reads(
    genome_length: f64,
    events: &[SimEvent],
    n: usize,
    p: &AlignParams,
    seed: u64,
) -> Result<SimulatedReads> {
    p.validate()?;
    if !(genome_length > 0.0) {
        return Err(Error::InvalidInput(format!("genome length must be positive, got {genome_length}")));
    }
    validate_events(events, genome_length)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let uniform = Uniform::new(0.0, genome_length).expect("positive genome length");
    let normal = Normal::new(p.mu, p.sigma).expect("positive sigma");
    let mut reads = Vec::with_capacity(n);
    let mut spanning = vec![Vec::new(); events.len()];
    for id in 0..n as u64 {
        let left = uniform.sample(&mut rng);
        let true_len: f64 = normal.sample(&mut rng).max(1.0);
        let mut apparent = true_len;
        for (e, ev) in events.iter().enumerate() {
            if left < ev.position && ev.position < left + true_len {
                apparent += match ev.kind {
                    SvKind::Deletion => ev.length,
                    SvKind::Insertion => -ev.length,
                };
                spanning[e].push(id);
            }
        }
        reads.push(Read::new(id, left, apparent.max(1.0)));
    }
    reads.sort_by(|a, b| (a.left, a.id).partial_cmp(&(b.left, b.id)).unwrap());
    Ok(SimulatedReads { reads, spanning })
}

fn validate_events(events: &[SimEvent], genome_length: f64) -> Result<()> {
    let mut sorted: Vec<&SimEvent> = events.iter().collect();
    sorted.sort_by(|a, b| a.position.total_cmp(&b.position));
    for (i, ev) in sorted.iter().enumerate() {
        if !(ev.length > 0.0) {
            return Err(Error::InvalidEvents(format!("event at {} has non-positive length", ev.position)));
        }
        if ev.position < 0.0 || ev.footprint_end() > genome_length {
            return Err(Error::InvalidEvents(format!("event at {} leaves the genome", ev.position)));
        }
        if i > 0 {
            let prev = sorted[i - 1];
            if ev.position <= prev.position || ev.position < prev.footprint_end() {
                return Err(Error::InvalidEvents(format!(
                    "events at {} and {} overlap",
                    prev.position, ev.position
                )));
            }
        }
    }
    Ok(())
}
