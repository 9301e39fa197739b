//! Executable semantics of the two zero-error problems: the confirmation
//! protocol (color of the sent block over the noiseless channel tells the
//! receiver whether its decoding was error-free) and the complete decoding
//! protocol (same message over a coloring of the closure-graph power pins
//! down the block itself).
//!
//! Verification is adversarial and exhaustive: zero-error claims are
//! universally quantified, so sampling cannot certify them. A seeded random
//! mode exists only to produce demonstration transcripts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::Coloring;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::params::{chromatic_number, Budget};
use crate::power::{and_power, PowerIndex};
use crate::rates::SolveCell;

/// Default cap on the number of sent sequences in an exhaustive sweep.
pub const DEFAULT_SWEEP_LIMIT: usize = 1 << 16;

/// A noisy channel: edge `(a,b)` means input `a` may emerge as output `b`.
/// Every letter can also emerge unchanged; that implicit loop is never
/// stored.
#[derive(Debug, Clone)]
pub struct ChannelModel {
    graph: Digraph,
}

impl ChannelModel {
    pub fn new(graph: Digraph) -> Self {
        ChannelModel { graph }
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn alphabet(&self) -> usize {
        self.graph.n()
    }

    fn letter_closure(&self, a: usize) -> Vec<usize> {
        let mut out = vec![a];
        out.extend(self.graph.out_row(a).iter());
        out.sort_unstable();
        out
    }

    fn letter_sources(&self, b: usize) -> Vec<usize> {
        let mut out = vec![b];
        out.extend((0..self.graph.n()).filter(|&a| a != b && self.graph.has_edge(a, b)));
        out.sort_unstable();
        out
    }
}

fn check_letters(ch: &ChannelModel, x: &[usize]) -> Result<()> {
    for &a in x {
        if a >= ch.alphabet() {
            return Err(Error::VertexOutOfRange {
                v: a,
                n: ch.alphabet(),
            });
        }
    }
    Ok(())
}

fn cartesian(per_coord: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for options in per_coord {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for &o in options {
                let mut seq = prefix.clone();
                seq.push(o);
                next.push(seq);
            }
        }
        out = next;
    }
    out
}

/// Every sequence the channel can output on input `x`, in lexicographic
/// order.
pub fn channel_outputs(ch: &ChannelModel, x: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_letters(ch, x)?;
    let per_coord: Vec<Vec<usize>> = x.iter().map(|&a| ch.letter_closure(a)).collect();
    Ok(cartesian(&per_coord))
}

/// Sequences that could have produced output `y`.
fn channel_sources(ch: &ChannelModel, y: &[usize]) -> Vec<Vec<usize>> {
    let per_coord: Vec<Vec<usize>> = y.iter().map(|&b| ch.letter_sources(b)).collect();
    cartesian(&per_coord)
}

/// One reproducible channel run.
pub fn sample_output(ch: &ChannelModel, x: &[usize], seed: u64) -> Result<Vec<usize>> {
    check_letters(ch, x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(x.iter()
        .map(|&a| {
            let closure = ch.letter_closure(a);
            closure[rng.gen_range(0..closure.len())]
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub sent: Vec<usize>,
    pub received: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProtocolOutcome {
    Pass,
    Fail(Counterexample),
}

impl ProtocolOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, ProtocolOutcome::Pass)
    }
}

fn check_block_coloring(ch: &ChannelModel, t: usize, coloring: &Coloring) -> Result<usize> {
    let total = PowerIndex::new(ch.alphabet(), t)
        .total()
        .filter(|&tot| tot <= DEFAULT_SWEEP_LIMIT)
        .ok_or(Error::TooLarge {
            required: usize::MAX,
            limit: DEFAULT_SWEEP_LIMIT,
        })?;
    if coloring.colors.len() != total {
        return Err(Error::MalformedCertificate(format!(
            "coloring has {} entries for {total} power vertices",
            coloring.colors.len()
        )));
    }
    if let Some((v, &c)) = coloring
        .colors
        .iter()
        .enumerate()
        .find(|(_, &c)| c >= coloring.k)
    {
        return Err(Error::MalformedCertificate(format!(
            "power vertex {v} has color {c} outside palette of size {}",
            coloring.k
        )));
    }
    Ok(total)
}

/// Properness of a block coloring on the t-th AND power of a channel's
/// graph, checked without materializing the power: the reachable distinct
/// blocks are exactly the power's out-neighbors.
fn power_coloring_counterexample(
    ch_like: &ChannelModel,
    t: usize,
    coloring: &Coloring,
) -> Result<Option<Counterexample>> {
    let codec = PowerIndex::new(ch_like.alphabet(), t);
    let total = codec.total().expect("checked by caller");
    for x in 0..total {
        let xs = codec.decode(x);
        for ys in channel_outputs(ch_like, &xs)? {
            let y = codec.encode(&ys);
            if y != x && coloring.colors[x] == coloring.colors[y] {
                return Ok(Some(Counterexample {
                    sent: xs.clone(),
                    received: ys,
                    detail: format!("adjacent blocks share color {}", coloring.colors[x]),
                }));
            }
        }
    }
    Ok(None)
}

/// Adversarial sweep of the confirmation protocol, with no properness
/// precondition: over every sent block and every reachable output, the
/// receiver confirms iff the colors match; a pass requires confirmation
/// exactly on error-free outputs.
pub fn confirm_sweep(ch: &ChannelModel, t: usize, coloring: &Coloring) -> Result<ProtocolOutcome> {
    let total = check_block_coloring(ch, t, coloring)?;
    let codec = PowerIndex::new(ch.alphabet(), t);
    for x in 0..total {
        let xs = codec.decode(x);
        for ys in channel_outputs(ch, &xs)? {
            let y = codec.encode(&ys);
            let confirm = coloring.colors[x] == coloring.colors[y];
            if confirm != (x == y) {
                let detail = if confirm {
                    "false confirmation: corrupted block carries the sent block's color"
                        .to_string()
                } else {
                    "missed confirmation: error-free block rejected".to_string()
                };
                return Ok(ProtocolOutcome::Fail(Counterexample {
                    sent: xs.clone(),
                    received: ys,
                    detail,
                }));
            }
        }
    }
    Ok(ProtocolOutcome::Pass)
}

/// Confirmation-protocol check; rejects a coloring that is not proper on the
/// t-th AND power of the channel graph before sweeping.
pub fn confirm_protocol_check(
    ch: &ChannelModel,
    t: usize,
    coloring: &Coloring,
) -> Result<ProtocolOutcome> {
    check_block_coloring(ch, t, coloring)?;
    if let Some(cx) = power_coloring_counterexample(ch, t, coloring)? {
        return Err(Error::UnverifiedColoring(format!(
            "not a proper coloring of the block graph: {} (sent {:?}, received {:?})",
            cx.detail, cx.sent, cx.received
        )));
    }
    confirm_sweep(ch, t, coloring)
}

/// Adversarial sweep of the complete-decoding protocol: the receiver decodes
/// to the set of blocks that reach the observed output and carry the
/// announced color; a pass requires that set to be exactly the sent block.
pub fn decode_sweep(ch: &ChannelModel, t: usize, coloring: &Coloring) -> Result<ProtocolOutcome> {
    let total = check_block_coloring(ch, t, coloring)?;
    let codec = PowerIndex::new(ch.alphabet(), t);
    for x in 0..total {
        let xs = codec.decode(x);
        for ys in channel_outputs(ch, &xs)? {
            let candidates: Vec<Vec<usize>> = channel_sources(ch, &ys)
                .into_iter()
                .filter(|zs| coloring.colors[codec.encode(zs)] == coloring.colors[x])
                .collect();
            if candidates.len() != 1 || candidates[0] != xs {
                return Ok(ProtocolOutcome::Fail(Counterexample {
                    sent: xs.clone(),
                    received: ys,
                    detail: format!(
                        "decoder is left with {} candidates: {candidates:?}",
                        candidates.len()
                    ),
                }));
            }
        }
    }
    Ok(ProtocolOutcome::Pass)
}

/// Complete-decoding check; rejects a coloring that is not proper on the
/// t-th AND power of the closure graph before sweeping.
pub fn decode_protocol_check(
    ch: &ChannelModel,
    t: usize,
    coloring: &Coloring,
) -> Result<ProtocolOutcome> {
    check_block_coloring(ch, t, coloring)?;
    let closure_channel = ChannelModel::new(ch.graph().closure_graph());
    if let Some(cx) = power_coloring_counterexample(&closure_channel, t, coloring)? {
        return Err(Error::UnverifiedColoring(format!(
            "not a proper coloring of the closure block graph: {} (sent {:?}, received {:?})",
            cx.detail, cx.sent, cx.received
        )));
    }
    decode_sweep(ch, t, coloring)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProtocolVariant {
    Confirm,
    Decode,
}

impl ProtocolVariant {
    pub fn name(self) -> &'static str {
        match self {
            ProtocolVariant::Confirm => "confirm",
            ProtocolVariant::Decode => "decode",
        }
    }
}

/// One row of the noiseless-message length table.
#[derive(Debug, Clone, Serialize)]
pub struct MsgLenRow {
    pub t: usize,
    pub chi: SolveCell,
    /// `ceil(log2 chi)` when chi is exact.
    pub bits: Option<usize>,
    pub rate: Option<f64>,
}

/// Noiseless-message lengths per block length: chromatic number of the
/// relevant power (channel graph for confirmation, closure graph for
/// complete decoding), its bit cost, and the per-letter rate.
pub fn message_length_table(
    ch: &ChannelModel,
    t_max: usize,
    variant: ProtocolVariant,
    budget_secs: f64,
) -> Result<Vec<MsgLenRow>> {
    let base = match variant {
        ProtocolVariant::Confirm => ch.graph().clone(),
        ProtocolVariant::Decode => ch.graph().closure_graph(),
    };
    let mut rows = Vec::new();
    for t in 1..=t_max {
        let power = and_power(&base, t)?;
        let chi = chromatic_number(&power, Budget::seconds(budget_secs));
        let bits = chi
            .optimal
            .then(|| (chi.upper as f64).log2().ceil() as usize);
        rows.push(MsgLenRow {
            t,
            chi: SolveCell {
                lower: chi.lower,
                upper: chi.upper,
                optimal: chi.optimal,
            },
            bits,
            rate: bits.map(|b| b as f64 / t as f64),
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TranscriptVerdict {
    Confirm,
    Reject,
    Decoded { block: Vec<usize> },
    Ambiguous { candidates: Vec<Vec<usize>> },
}

/// One run of the two-channel protocol under a seeded channel.
#[derive(Debug, Clone, Serialize)]
pub struct ChannelTranscript {
    pub sent: Vec<usize>,
    pub received: Vec<usize>,
    /// Color index sent over the noiseless channel.
    pub noiseless_msg: usize,
    pub verdict: TranscriptVerdict,
}

pub fn run_transcript(
    ch: &ChannelModel,
    t: usize,
    coloring: &Coloring,
    sent: &[usize],
    seed: u64,
    variant: ProtocolVariant,
) -> Result<ChannelTranscript> {
    check_block_coloring(ch, t, coloring)?;
    if sent.len() != t {
        return Err(Error::Parse(format!(
            "sent block has length {}, expected {t}",
            sent.len()
        )));
    }
    check_letters(ch, sent)?;
    let codec = PowerIndex::new(ch.alphabet(), t);
    let received = sample_output(ch, sent, seed)?;
    let msg = coloring.colors[codec.encode(sent)];
    let verdict = match variant {
        ProtocolVariant::Confirm => {
            if coloring.colors[codec.encode(&received)] == msg {
                TranscriptVerdict::Confirm
            } else {
                TranscriptVerdict::Reject
            }
        }
        ProtocolVariant::Decode => {
            let candidates: Vec<Vec<usize>> = channel_sources(ch, &received)
                .into_iter()
                .filter(|zs| coloring.colors[codec.encode(zs)] == msg)
                .collect();
            if candidates.len() == 1 {
                TranscriptVerdict::Decoded {
                    block: candidates.into_iter().next().unwrap(),
                }
            } else {
                TranscriptVerdict::Ambiguous { candidates }
            }
        }
    };
    Ok(ChannelTranscript {
        sent: sent.to_vec(),
        received,
        noiseless_msg: msg,
        verdict,
    })
}
