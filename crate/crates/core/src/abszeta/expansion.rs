//! Subset expansion of the absolute Hurwitz zeta, the absolute zeta and the
//! epsilon factor of a canonical form.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::abszeta::barnes::{ln_multi_gamma, ln_multi_sine_integral, multi_hurwitz_series};
use crate::abszeta::omega::{EvalResult, Method, OmegaVector, SignedLog};
use crate::error::{Error, Result};
use crate::zeta::CanonicalAbsForm;

/// One subset `I` of `{1, ..., a}` in the expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetTerm {
    /// 1-based indices into the numerator orders.
    pub subset: Vec<usize>,
    /// `|I|` plus the global sign exponent.
    pub sign_exponent: u64,
    /// `2 (-deg f + m(I))`; the argument of each factor is `s + shift`.
    pub shift_twice: i64,
    pub omega: OmegaVector,
}

impl SubsetTerm {
    pub fn shift(&self) -> f64 {
        self.shift_twice as f64 / 2.0
    }

    pub fn order(&self) -> usize {
        self.omega.order()
    }

    /// `(-1)^{sign_exponent}`.
    pub fn sign(&self) -> i64 {
        if self.sign_exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `"s+k"`, `"s-k"` or `"s"`, with half-integers written as `k/2`.
    pub fn shift_label(&self) -> String {
        let (op, mag) = if self.shift_twice < 0 {
            ("-", -self.shift_twice)
        } else {
            ("+", self.shift_twice)
        };
        match mag {
            0 => "s".into(),
            m if m % 2 == 0 => format!("s{op}{}", m / 2),
            m => format!("s{op}{m}/2"),
        }
    }
}

impl Serialize for SubsetTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SubsetTerm", 5)?;
        st.serialize_field("I", &self.subset)?;
        st.serialize_field("sign", &self.sign())?;
        st.serialize_field("shift", &self.shift_label())?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("omega", &self.omega)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AbsExpansion {
    pub form: CanonicalAbsForm,
    pub terms: Vec<SubsetTerm>,
    /// 0 for `f` itself, `c_N(1)` when `zeta_N = (-1)^{c_N(1)} g_N` is wrapped.
    pub global_sign_exponent: u64,
}

impl AbsExpansion {
    pub fn deg_f(&self) -> f64 {
        self.form.deg_f()
    }

    pub fn weight(&self) -> i64 {
        self.form.weight()
    }

    pub fn sign(&self) -> i8 {
        self.form.sign()
    }

    pub fn order(&self) -> usize {
        self.form.b()
    }

    pub fn omega(&self) -> &OmegaVector {
        &self.terms[0].omega
    }

    /// `(-1)^{global_sign_exponent}`.
    pub fn wrap_sign(&self) -> i8 {
        if self.global_sign_exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `Z(w, s) = sum_I (-1)^{|I|} zeta_b(w, s + shift_I, n)` by the lattice series.
    pub fn z_series(&self, w: Complex64, s: Complex64, tol: f64) -> Result<EvalResult> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut abs_error = 0.0;
        let tol = tol / self.terms.len() as f64;
        for t in &self.terms {
            let x = s + t.shift();
            if x.im != 0.0 {
                return Err(Error::Domain(
                    "the Hurwitz shift s + shift must be real".into(),
                ));
            }
            let r = multi_hurwitz_series(w, x.re, &t.omega, tol)?;
            value += r.value * t.sign() as f64;
            abs_error += r.abs_error;
        }
        Ok(EvalResult {
            value,
            abs_error,
            method: Method::Series,
        })
    }

    /// `prod_I Gamma_b(s + shift_I, n)^{(-1)^{sign_exponent}}`, with
    /// gamma arguments anywhere off the poles.
    pub fn ln_zeta(&self, s: f64) -> Result<SignedLog> {
        self.terms
            .iter()
            .try_fold(SignedLog::one(Method::Continued), |acc, t| {
                let g = ln_multi_gamma(s + t.shift(), &t.omega)?;
                Ok(acc.mul(&g.powi(t.sign())))
            })
    }

    /// `prod_I S_b(s + shift_I, n)^{(-1)^{sign_exponent}}`, with each sine
    /// from its contour integral so no gamma value is shared with
    /// [`Self::ln_zeta`].
    pub fn ln_epsilon(&self, s: f64) -> Result<SignedLog> {
        self.terms
            .iter()
            .try_fold(SignedLog::one(Method::Integral), |acc, t| {
                let g = ln_multi_sine_integral(s + t.shift(), &t.omega)?;
                Ok(acc.mul(&g.powi(t.sign())))
            })
    }
}

impl Serialize for AbsExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AbsExpansion", 6)?;
        let deg = self.form.deg_f_twice();
        if deg % 2 == 0 {
            st.serialize_field("degF", &(deg / 2))?;
        } else {
            st.serialize_field("degF", &self.deg_f())?;
        }
        st.serialize_field("D", &self.weight())?;
        st.serialize_field("C", &self.sign())?;
        st.serialize_field("wrapSign", &self.wrap_sign())?;
        st.serialize_field("terms", &self.terms)?;
        st.end()
    }
}

/// All `2^a` subset terms of a form.
pub fn theorem1_expand(form: &CanonicalAbsForm, global_sign_exponent: u64) -> Result<AbsExpansion> {
    let omega = OmegaVector::new(form.n.clone()).map_err(|_| {
        Error::Capability("forms without denominator factors have no gamma expansion".into())
    })?;
    let a = form.a();
    if a >= 32 {
        return Err(Error::Capability(format!("2^{a} subset terms")));
    }
    let terms = (0u64..1 << a)
        .map(|mask| {
            let subset: Vec<usize> = (0..a)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let m_sum: u64 = subset.iter().map(|&i| form.m[i - 1]).sum();
            SubsetTerm {
                sign_exponent: subset.len() as u64 + global_sign_exponent,
                subset,
                shift_twice: 2 * m_sum as i64 - form.deg_f_twice(),
                omega: omega.clone(),
            }
        })
        .collect();
    Ok(AbsExpansion {
        form: form.clone(),
        terms,
        global_sign_exponent,
    })
}

/// `zeta_f(s)` in log form, for `s` with every gamma argument positive.
pub fn abs_zeta_log(exp: &AbsExpansion, s: f64) -> Result<SignedLog> {
    if let Some(t) = exp.terms.iter().find(|t| s + t.shift() <= 0.0) {
        return Err(Error::Domain(format!(
            "gamma argument {} + {} is not positive",
            s,
            t.shift()
        )));
    }
    exp.ln_zeta(s)
}

pub fn abs_zeta_eval(exp: &AbsExpansion, s: f64) -> Result<EvalResult> {
    Ok(abs_zeta_log(exp, s)?.to_eval())
}

/// Relative residual of `zeta_f(D - s)^C = epsilon_f(s) zeta_f(s)`.
pub fn functional_eq_residual(exp: &AbsExpansion, s: f64) -> Result<f64> {
    let lhs = exp
        .ln_zeta(exp.weight() as f64 - s)?
        .powi(i64::from(exp.sign()));
    let rhs = exp.ln_epsilon(s)?.mul(&exp.ln_zeta(s)?);
    Ok(lhs.relative_gap(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(kappa: i8, m: Vec<u64>, n: Vec<u64>) -> CanonicalAbsForm {
        CanonicalAbsForm::new(kappa, 0, m, n).unwrap()
    }

    #[test]
    fn first_form_single_term() {
        let e = theorem1_expand(&form(1, vec![], vec![1, 1]), 0).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].shift_label(), "s+2");
        assert_eq!(e.terms[0].sign(), 1);
    }

    #[test]
    fn fourth_form_sixteen_terms() {
        let e = theorem1_expand(&form(1, vec![1; 4], vec![2; 10]), 0).unwrap();
        assert_eq!(e.terms.len(), 16);
        for t in &e.terms {
            assert_eq!(t.shift_twice, 2 * (16 + t.subset.len() as i64));
            assert_eq!(t.sign(), if t.subset.len() % 2 == 0 { 1 } else { -1 });
            assert_eq!(t.order(), 10);
        }
    }

    #[test]
    fn wrapping_flips_signs() {
        let e = theorem1_expand(&form(-1, vec![], vec![1, 1, 2]), 3).unwrap();
        assert_eq!(e.terms[0].sign(), -1);
        assert_eq!(e.wrap_sign(), -1);
    }

    #[test]
    fn json_shape() {
        let e = theorem1_expand(&form(1, vec![1], vec![2, 2, 2]), 0).unwrap();
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["degF"], -5);
        assert_eq!(v["D"], -5);
        assert_eq!(v["C"], 1);
        assert_eq!(v["wrapSign"], 1);
        assert_eq!(v["terms"][1]["I"][0], 1);
        assert_eq!(v["terms"][1]["shift"], "s+6");
        assert_eq!(v["terms"][1]["omega"][2], 2);
    }

    #[test]
    fn half_integer_shift_label() {
        let f = CanonicalAbsForm::new(1, 1, vec![], vec![1, 1]).unwrap();
        let e = theorem1_expand(&f, 0).unwrap();
        assert_eq!(e.terms[0].shift_label(), "s+3/2");
    }

    #[test]
    fn numerator_only_rejected() {
        assert!(matches!(
            theorem1_expand(&form(1, vec![1], vec![]), 0),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn nonpositive_argument_rejected() {
        let e = theorem1_expand(&form(1, vec![], vec![1, 1]), 0).unwrap();
        assert!(matches!(abs_zeta_eval(&e, -2.0), Err(Error::Domain(_))));
    }
}
