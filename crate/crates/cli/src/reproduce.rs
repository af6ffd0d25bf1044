use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use yb_core::cohomology::classify_h2;
use yb_core::deform::{d4, DeformationFamily};
use yb_core::linalg::rational::int;
use yb_core::poly::TruncPoly;
use yb_core::rack::{d3_transpositions, d4_reflections};
use yb_core::yb::{build_cq, build_jones, build_tau};
use yb_core::{sample, Config};

use crate::output::{Failure, Report};
use crate::Format;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    /// c_Q of the transpositions in S3 against the expected 9x9 matrix.
    #[value(name = "d3-matrix")]
    D3Matrix,
    /// The transposition quandle of S3 has a one-dimensional H2.
    #[value(name = "d3-rigid")]
    D3Rigid,
    /// The reflection quandle of D4 has sixteen entropic directions.
    #[value(name = "d4-16")]
    D4Sixteen,
    /// Trace of c(λ)² against its closed form.
    #[value(name = "d4-trace")]
    D4Trace,
    /// The two-dimensional Jones operator.
    Jones,
}

/// Row `r`, column `c` is 1 when basis vector `c` is sent to basis vector `r`.
const D3_EXPECTED: [&str; 9] = [
    "100000000", "000000100", "000100000", "000000010", "000010000", "010000000", "000001000", "001000000",
    "000000001",
];

pub fn run(format: Format, example: Example, seed: u64, cfg: &Config) -> Result<(), Failure> {
    let mut out = Report::new(format, "reproduce");
    let ok = match example {
        Example::D3Matrix => {
            let r = d3_transpositions();
            let c = build_cq(&r).matrix().constant_term();
            let mismatches: Vec<(usize, usize)> = D3_EXPECTED
                .iter()
                .enumerate()
                .flat_map(|(row, s)| s.bytes().enumerate().map(move |(col, b)| (row, col, b == b'1')))
                .filter(|&(row, col, one)| c.get(row, col) != int(i64::from(one)))
                .map(|(row, col, _)| (row, col))
                .collect();
            out.rack(&r).field("mismatches", "differing entries (row, col)", json!(mismatches));
            mismatches.is_empty()
        }
        Example::D3Rigid | Example::D4Sixteen => {
            let (r, expected) = if example == Example::D3Rigid { (d3_transpositions(), 1) } else { (d4_reflections(), 16) };
            let rep = classify_h2(&r, cfg)?;
            out.rack(&r)
                .field("dimE2", "dim E2", json!(rep.dim_e))
                .field("dimH2", "dim H2", json!(rep.dim_h))
                .field("expected", "expected", json!(expected));
            rep.dim_e == expected && rep.dim_h == expected && rep.verified
        }
        Example::D4Trace => {
            let r = d4_reflections();
            let constants = |v: Vec<yb_core::linalg::Rational>| v.into_iter().map(|x| TruncPoly::constant(x, 1)).collect::<Vec<_>>();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut vectors = vec![vec![int(0); 16]];
            vectors.extend((0..5).map(|_| (0..16).map(|_| sample::rational(&mut rng, 9)).collect()));
            let mut rows = Vec::new();
            let mut all = true;
            for lambda in vectors {
                let fam = DeformationFamily::from_rack(&r, d4::orbit_params(&constants(lambda))?, cfg)?;
                let (computed, closed) = d4::trace_square_formula(&fam)?;
                all &= computed == closed;
                rows.push(json!({ "trace": computed.to_string(), "closedForm": closed.to_string() }));
            }
            out.rack(&r).field("samples", "trace vs closed form", json!(rows));
            all
        }
        Example::Jones => {
            let holds: Vec<bool> = [int(1), int(2), yb_core::linalg::rational::rat(1, 3)]
                .iter()
                .map(|q| build_jones(q).map(|c| c.check_ybe().holds()))
                .collect::<Result<_, _>>()?;
            let initial = build_jones(&int(1))? == build_tau(2)?;
            out.field("ybeAtQ", "YBE at q = 1, 2, 1/3", json!(holds)).field("qOneIsFlip", "c at q = 1 is the flip", json!(initial));
            holds.iter().all(|&h| h) && initial
        }
    };
    out.field("match", "match", json!(ok));
    out.print();
    if ok {
        Ok(())
    } else {
        Err(Failure::math("computed values differ from the expected ones"))
    }
}
