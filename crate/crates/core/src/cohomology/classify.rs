use serde::Serialize;

use super::coboundary::{coboundary_space, cocycle_space};
use super::entropic::entropic_basis;
use crate::config::Config;
use crate::error::Error;
use crate::linalg::sum_and_intersection_dims;
use crate::rack::Rack;

/// Dimensions of the degree-2 cocycles, coboundaries and entropic cochains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H2Report {
    #[serde(rename = "dimZ2")]
    pub dim_z: usize,
    #[serde(rename = "dimB2")]
    pub dim_b: usize,
    #[serde(rename = "dimE2")]
    pub dim_e: usize,
    #[serde(rename = "dimH2")]
    pub dim_h: usize,
    #[serde(rename = "dimEcapB")]
    pub dim_intersection: usize,
    #[serde(rename = "dimEplusB")]
    pub dim_sum: usize,
    /// `Z² = E² ⊕ B²`: trivial intersection, the sum has the dimension of `Z²`,
    /// and `E²` lies in `Z²`.
    pub verified: bool,
}

pub fn classify_h2(rack: &Rack, cfg: &Config) -> Result<H2Report, Error> {
    cfg.check_rack_size(rack.size())?;
    let z = cocycle_space(rack, 2, cfg)?;
    let b = coboundary_space(rack, 2, cfg)?;
    let e = entropic_basis(rack, 2, cfg)?.subspace();
    let (dim_sum, dim_intersection) = sum_and_intersection_dims(&e, &b)?;
    let inside = e.is_subspace_of(&z)?;
    let verified = inside && dim_intersection == 0 && dim_sum == z.dim();
    Ok(H2Report {
        dim_z: z.dim(),
        dim_b: b.dim(),
        dim_e: e.dim(),
        dim_h: z.dim() - b.dim(),
        dim_intersection,
        dim_sum,
        verified,
    })
}

/// First triple `(x, y, z)` violating
/// `α(x,y) + α(x^y,z) = α(x,z) + α(x^z,y^z)` modulo `m`, if any.
pub fn rack_cocycle_witness(rack: &Rack, alpha: &[Vec<u64>], modulus: u64) -> Result<Option<[usize; 3]>, Error> {
    let n = rack.size();
    if modulus == 0 {
        return Err(Error::OutOfRange("modulus must be positive".into()));
    }
    if alpha.len() != n || alpha.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension(format!("cocycle table must be {n}x{n}")));
    }
    let a = |x: usize, y: usize| alpha[x][y] % modulus;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = (a(x, y) + a(rack.op(x, y), z)) % modulus;
                let rhs = (a(x, z) + a(rack.op(x, z), rack.op(y, z))) % modulus;
                if lhs != rhs {
                    return Ok(Some([x, y, z]));
                }
            }
        }
    }
    Ok(None)
}

pub fn rack_cocycle_check(rack: &Rack, alpha: &[Vec<u64>], modulus: u64) -> Result<bool, Error> {
    Ok(rack_cocycle_witness(rack, alpha, modulus)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::{d3_transpositions, d4_reflections};

    #[test]
    fn small_reports() {
        let cfg = Config::default();
        let t = classify_h2(&Rack::trivial(2).unwrap(), &cfg).unwrap();
        assert_eq!((t.dim_z, t.dim_b, t.dim_e, t.dim_h, t.verified), (16, 0, 16, 16, true));
        let r = classify_h2(&d3_transpositions(), &cfg).unwrap();
        assert_eq!((r.dim_e, r.dim_h, r.verified), (1, 1, true));
        let d = classify_h2(&d4_reflections(), &cfg).unwrap();
        assert_eq!((d.dim_e, d.dim_h, d.verified), (16, 16, true));
    }

    #[test]
    fn size_limit() {
        let cfg = Config { size_limit: 3, ..Config::default() };
        assert!(matches!(classify_h2(&d4_reflections(), &cfg), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn cocycle_examples() {
        let r = d3_transpositions();
        assert!(rack_cocycle_check(&r, &vec![vec![0; 3]; 3], 3).unwrap());
        let t = Rack::trivial(3).unwrap();
        let any = vec![vec![0, 1, 2], vec![2, 2, 0], vec![1, 0, 1]];
        assert!(rack_cocycle_check(&t, &any, 3).unwrap());
        assert!(rack_cocycle_check(&r, &any, 0).is_err());
        assert!(rack_cocycle_check(&r, &[vec![0; 3]], 3).is_err());
    }
}
