use serde::Serialize;

use super::entropic_by_degree;
use crate::error::Error;
use crate::rack::Rack;
use crate::yb::{PolyMatrix, YBOperator, YbeVerdict};

/// Yang-Baxter verdicts for `c_Q f` and `τ f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RMatrixVerdicts {
    #[serde(serialize_with = "verdict")]
    pub cq_f: YbeVerdict,
    #[serde(serialize_with = "verdict")]
    pub tau_f: YbeVerdict,
}

impl RMatrixVerdicts {
    pub fn agree(&self) -> bool {
        self.cq_f.holds() == self.tau_f.holds()
    }
}

fn verdict<S: serde::Serializer>(v: &YbeVerdict, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_bool(v.holds())
}

/// Checks the Yang-Baxter equation for `c_Q f` and for `τ f`, where `f` is
/// an invertible map on `V ⊗ V` that is entropic in every `h`-degree.
pub fn rmatrix_equivalence(rack: &Rack, f: &PolyMatrix) -> Result<RMatrixVerdicts, Error> {
    let n = rack.size();
    if f.rows() != n * n || f.cols() != n * n {
        return Err(Error::Dimension(format!("expected a {0}x{0} matrix", n * n)));
    }
    if entropic_by_degree(rack, f)?.contains(&false) {
        return Err(Error::NotEntropic);
    }
    f.inverse()?;
    let cq = YBOperator::from_rack(rack, f.order());
    let tau = YBOperator::tau(n, f.order())?;
    let cq_f = YBOperator::new(n, cq.matrix().mul(f)?)?.check_ybe();
    let tau_f = YBOperator::new(n, tau.matrix().mul(f)?)?.check_ybe();
    Ok(RMatrixVerdicts { cq_f, tau_f })
}
