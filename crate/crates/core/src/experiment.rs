//! Join-coarseness experiment on connected cographs.
//!
//! For each graph with a 2-homogeneous equitable partition: take the
//! partition from the cotree search, sample nine images of it under random
//! elements of the automorphism group, and record the cell count of the
//! join of every nonempty subset of these ten partitions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cograph::{aut_generators, enumerate_connected_cotrees, nice_automorphism, random_cotree, Cotree};
use crate::equitability::{is_weight_equitable, DEFAULT_WE_TOL};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::oracle::involution_to_partition;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::spectral::{perron, DEFAULT_PERRON_TOL};

pub const PARTITIONS_PER_GRAPH: usize = 10;
pub const RNG_NAME: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";
pub const RECORDS_HEADER: &str = "graph_id,n,k,subset_id,cells,seed";
pub const HISTOGRAM_HEADER: &str = "k,cells,frequency";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Every connected cograph on `n` vertices.
    Enumerate { n: usize },
    /// `count` random connected cographs on `n` vertices that admit a
    /// 2-homogeneous partition.
    Random { count: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub seed: Option<u64>,
    pub tol: f64,
    /// Fraction of records whose join is re-verified as weight-equitable.
    pub spot_check_rate: f64,
    /// Random mode gives up after `count * max_attempts_factor` draws.
    pub max_attempts_factor: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            seed: None,
            tol: DEFAULT_WE_TOL,
            spot_check_rate: 0.1,
            max_attempts_factor: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentRecord {
    pub graph_id: String,
    pub n: usize,
    /// Number of partitions joined.
    pub k: usize,
    /// Bitmask over the ten partition slots.
    pub subset_id: u32,
    pub cells: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphRun {
    pub graph_id: String,
    pub graph: Graph,
    pub seed: u64,
    pub partitions: Vec<Partition>,
    /// Cell count of the join for every subset mask; index 0 is unused.
    pub cells: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HistogramRow {
    pub k: usize,
    pub cells: usize,
    pub frequency: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutput {
    pub source: Source,
    pub master_seed: u64,
    pub runs: Vec<GraphRun>,
    pub skipped: usize,
    pub spot_checked: usize,
    pub spot_check_failures: usize,
}

pub fn run_experiment(source: Source, config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let master_seed = config.seed.ok_or(Error::SeedRequired)?;
    let mut master = ChaCha8Rng::seed_from_u64(master_seed);
    let mut checker = ChaCha8Rng::seed_from_u64(master_seed);
    checker.set_stream(1);
    let mut runs = Vec::new();
    let mut skipped = 0;
    let mut spot = (0usize, 0usize);

    let mut process = |t: &Cotree, index: usize, seed: u64, prefix: &str, spot: &mut (usize, usize)| -> Result<Option<GraphRun>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(partitions) = sample_partitions(t, &mut rng)? else {
            return Ok(None);
        };
        let graph = t.reconstruct();
        let joins = subset_joins(&partitions)?;
        let nu = perron(&graph, DEFAULT_PERRON_TOL)?.nu;
        for join in joins.iter().skip(1) {
            if checker.gen_bool(config.spot_check_rate) {
                spot.0 += 1;
                if !is_weight_equitable(&graph, &nu, join, config.tol)? {
                    spot.1 += 1;
                }
            }
        }
        Ok(Some(GraphRun {
            graph_id: format!("{prefix}{index}-{}", to_graph6(&graph)),
            graph,
            seed,
            partitions,
            cells: joins.iter().map(Partition::num_cells).collect(),
        }))
    };

    match source {
        Source::Enumerate { n } => {
            for (index, t) in enumerate_connected_cotrees(n)?.iter().enumerate() {
                let seed = master.next_u64();
                match process(t, index, seed, "e", &mut spot)? {
                    Some(run) => runs.push(run),
                    None => skipped += 1,
                }
            }
        }
        Source::Random { count, n } => {
            let limit = count.saturating_mul(config.max_attempts_factor).max(1);
            let mut attempts = 0;
            while runs.len() < count {
                if attempts == limit {
                    return Err(Error::NoHomogeneousPartition);
                }
                let seed = master.next_u64();
                let t = random_cotree(n, seed)?;
                match process(&t, attempts, seed, "r", &mut spot)? {
                    Some(run) => runs.push(run),
                    None => skipped += 1,
                }
                attempts += 1;
            }
        }
    }
    Ok(ExperimentOutput {
        source,
        master_seed,
        runs,
        skipped,
        spot_checked: spot.0,
        spot_check_failures: spot.1,
    })
}

/// The cotree-search partition followed by nine images under
/// `∏ g_i^{m_i}` with `m_i` uniform in `1..=ord(g_i)`. `None` if the
/// cograph has no 2-homogeneous equitable partition.
pub fn sample_partitions(t: &Cotree, rng: &mut impl Rng) -> Result<Option<Vec<Partition>>> {
    let gamma = match nice_automorphism(t) {
        Ok(gamma) => gamma,
        Err(Error::NoSuchAutomorphism) => return Ok(None),
        Err(e) => return Err(e),
    };
    let base = involution_to_partition(&gamma)?;
    let generators: Vec<(Permutation, usize)> = aut_generators(t)
        .into_iter()
        .map(|g| {
            let order = g.order();
            (g, order)
        })
        .collect();
    let mut out = vec![base.clone()];
    for _ in 1..PARTITIONS_PER_GRAPH {
        let mut element = Permutation::identity(t.n());
        for (g, order) in &generators {
            let m = rng.gen_range(1..=*order);
            element = element.compose(&g.pow(m));
        }
        out.push(base.apply(&element)?);
    }
    Ok(Some(out))
}

/// Joins of every subset of `partitions`, indexed by bitmask. Entry 0 is
/// the discrete partition (the empty join).
pub fn subset_joins(partitions: &[Partition]) -> Result<Vec<Partition>> {
    let n = partitions.first().map_or(0, Partition::len);
    let mut joins = Vec::with_capacity(1 << partitions.len());
    joins.push(Partition::discrete(n));
    for mask in 1usize..(1 << partitions.len()) {
        let low = mask.trailing_zeros() as usize;
        let join = joins[mask & (mask - 1)].join(&partitions[low])?;
        joins.push(join);
    }
    Ok(joins)
}

/// Recomputes the join for `subset` and checks that it is weight-equitable.
pub fn verify_record(g: &Graph, partitions: &[Partition], subset: u32, tol: f64) -> Result<bool> {
    let chosen: Vec<&Partition> = (0..partitions.len())
        .filter(|&i| subset >> i & 1 == 1)
        .map(|i| &partitions[i])
        .collect();
    let join = crate::partition::join_all(g.n(), chosen)?;
    let nu = perron(g, DEFAULT_PERRON_TOL)?.nu;
    is_weight_equitable(g, &nu, &join, tol)
}

impl ExperimentOutput {
    pub fn records(&self) -> impl Iterator<Item = ExperimentRecord> + '_ {
        self.runs.iter().flat_map(|run| {
            (1..run.cells.len()).map(move |mask| ExperimentRecord {
                graph_id: run.graph_id.clone(),
                n: run.graph.n(),
                k: mask.count_ones() as usize,
                subset_id: mask as u32,
                cells: run.cells[mask],
                seed: run.seed,
            })
        })
    }

    /// For each `k`, the fraction of `k`-subsets whose join has a given
    /// number of cells.
    pub fn histogram(&self) -> Vec<HistogramRow> {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut totals: BTreeMap<usize, usize> = BTreeMap::new();
        for r in self.records() {
            *counts.entry((r.k, r.cells)).or_default() += 1;
            *totals.entry(r.k).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|((k, cells), c)| HistogramRow {
                k,
                cells,
                frequency: c as f64 / totals[&k] as f64,
            })
            .collect()
    }

    /// Most frequent cell count among joins of `k` partitions; ties go to
    /// the smaller count.
    pub fn mode(&self, k: usize) -> Option<usize> {
        self.histogram()
            .into_iter()
            .filter(|row| row.k == k)
            .fold(None, |best: Option<HistogramRow>, row| match best {
                Some(b) if b.frequency >= row.frequency => Some(b),
                _ => Some(row),
            })
            .map(|row| row.cells)
    }

    pub fn records_csv(&self) -> String {
        let mut out = String::from(RECORDS_HEADER);
        out.push('\n');
        for r in self.records() {
            let _ = writeln!(out, "{},{},{},{},{},{}", r.graph_id, r.n, r.k, r.subset_id, r.cells, r.seed);
        }
        out
    }

    pub fn histogram_csv(&self) -> String {
        let mut out = String::from(HISTOGRAM_HEADER);
        out.push('\n');
        for row in self.histogram() {
            let _ = writeln!(out, "{},{},{:.6}", row.k, row.cells, row.frequency);
        }
        out
    }

    pub fn meta(&self) -> String {
        let source = match self.source {
            Source::Enumerate { n } => format!("enumerate n={n}"),
            Source::Random { count, n } => format!("random count={count} n={n}"),
        };
        format!(
            "rng: {RNG_NAME}\nseed: {}\nsource: {source}\ngraphs: {}\nskipped: {}\nspot_checked: {}\nspot_check_failures: {}\n",
            self.master_seed,
            self.runs.len(),
            self.skipped,
            self.spot_checked,
            self.spot_check_failures,
        )
    }
}
