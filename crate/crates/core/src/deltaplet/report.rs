use serde::Serialize;

use super::theta::{check_prime, p_power, theta_as_symfunc};
use crate::error::{AlgebraError, Result};
use crate::symfunc::{
    change_basis, comultiplication_image, cotangent_reduce, expand, is_additive, plethysm, Basis,
    SymFunc, EXACT_VARS_PER_DEGREE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified statement with the value that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub witness: String,
}

impl Check {
    fn new(check: impl Into<String>, ok: bool, witness: impl ToString) -> Check {
        Check {
            check: check.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: witness.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Largest iterate `θ_1^{∘n}` examined by [`linearization_report`].
pub const THETA_ITERATES: u32 = 3;

/// Linearisation checks of `Λ_p` for a small prime `p ≤ 5`:
/// `F = ψ_p` is additive with `Δ×F = F⊗F`, its cotangent image is `p·θ_1`,
/// and `θ_1^{∘n}` has linear part `θ_n` for `n ≤ 3`.
pub fn linearization_report(p: u32) -> Result<Vec<Check>> {
    check_prime(p)?;
    if p > 5 {
        return Err(AlgebraError::descriptor(format!(
            "linearization checks are sized for p <= 5, got {p}"
        )));
    }
    let f = SymFunc::generator(Basis::PowerSum, p);
    let mut out = Vec::new();

    out.push(Check::new("F additive", is_additive(&f)?, &f));

    let n = p * EXACT_VARS_PER_DEGREE;
    let lhs = comultiplication_image(&f, n)?;
    let rhs = &expand(&f, n, "x")? * &expand(&f, n, "y")?;
    out.push(Check::new("F comultiplicative", lhs == rhs, &lhs));

    let theta1 = theta_as_symfunc(1, p)?;
    let ct = cotangent_reduce(&f, Basis::Witt)?;
    let expected = theta1.scale(&p_power(p, 1));
    out.push(Check::new("cotangent F = p*theta1", ct == expected, &ct));

    // iterate in the power-sum basis, where plethysm is cheapest
    let theta1_p = change_basis(&theta1, Basis::PowerSum)?;
    let mut iterate = theta1_p.clone();
    for k in 1..=THETA_ITERATES {
        if k > 1 {
            iterate = plethysm(&theta1_p, &iterate)?;
        }
        let linear = cotangent_reduce(&iterate, Basis::Witt)?.integralize()?;
        let target = theta_as_symfunc(k, p)?;
        out.push(Check::new(
            format!("theta1^{k} = theta{k} mod decomposables"),
            linear == target,
            &linear,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_for_two() {
        let r = linearization_report(2).unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.iter().all(Check::passed), "{r:?}");
        assert_eq!(r[2].witness, "2*w[2]");
        assert_eq!(r[4].witness, "w[4]");
    }

    #[test]
    fn json_shape() {
        let c = Check::new("x", true, "w[2]");
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"check":"x","status":"pass","witness":"w[2]"}"#
        );
    }

    #[test]
    fn large_primes_are_rejected() {
        assert!(linearization_report(7).is_err());
        assert!(linearization_report(4).is_err());
    }
}
