use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{gcd, RSeries};
use crate::tvector::TVector;

/// `P(n) = 0` written as `sum_r coeff(r) t_r = d_coeff * d`, divided through
/// by the content of all coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityConstraint {
    pub n: u32,
    pub coeff: RSeries,
    pub d_coeff: i64,
    /// Content that was divided out: `P(n) = content * (lhs - rhs)`.
    pub content: i64,
}

/// Expands `P(n) = 0` as a linear relation between the `t_r` and `d`.
///
/// In `P(n)` each `t_r` contributes `n^2 + 2n(1 - r) + 2r + 1`, less 4 when
/// `r = 2`, and `d` contributes `-(n - 1)^2`.
pub fn equality_constraint(n: u32) -> Result<EqualityConstraint> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let n = n as i64;
    let t2 = n * n + 2 * n * (1 - 2) + 2 * 2 + 1 - 4;
    // n^2 + 2n + 1 - 2r(n - 1) for r >= 3
    let raw = RSeries::new(vec![t2], -2 * (n - 1), n * n + 2 * n + 1);
    let d_raw = (n - 1) * (n - 1);
    let content = gcd(raw.content(), d_raw);
    Ok(EqualityConstraint {
        n: n as u32,
        coeff: raw.divide(content),
        d_coeff: d_raw / content,
        content,
    })
}

impl EqualityConstraint {
    pub fn coeff(&self, r: u32) -> i64 {
        self.coeff.coeff(r)
    }

    /// `sum coeff(r) t_r - d_coeff d`; zero exactly when `P(n) = 0`.
    pub fn defect(&self, tv: &TVector) -> i128 {
        self.coeff.apply(tv) - self.d_coeff as i128 * tv.d() as i128
    }

    pub fn is_satisfied(&self, tv: &TVector) -> bool {
        self.defect(tv) == 0
    }

    /// First multiplicity from which every coefficient is negative.
    pub fn negative_from(&self) -> u32 {
        (2..)
            .find(|&r| r >= self.coeff.tail_start() && self.coeff(r) < 0)
            .unwrap()
    }

    /// Every coefficient written out up to `r_max`, e.g.
    /// `9t2 + 7t3 + t4 - 5t5 - 11t6 = 9d`.
    pub fn expanded(&self, r_max: u32) -> String {
        let mut lhs = Terms::default();
        for r in 2..=r_max {
            lhs.push(self.coeff(r), &format!("t{r}"));
        }
        format!("{} = {}", lhs.finish(), scaled(self.d_coeff, "d"))
    }

    /// Renders with the terms for `r` where `keep(r)` is false left out.
    pub(crate) fn render_filtered(
        &self,
        keep: impl Fn(u32) -> bool,
        tail_end: Option<u32>,
    ) -> String {
        let neg = self.negative_from();
        let mut lhs = Terms::default();
        for r in 2..neg {
            if keep(r) {
                lhs.push(self.coeff(r), &format!("t{r}"));
            }
        }
        let mut rhs = Terms::default();
        rhs.push(self.d_coeff, "d");
        match tail_end {
            // finitely many tail terms survive
            Some(end) => {
                for r in neg..end {
                    if keep(r) {
                        rhs.push(-self.coeff(r), &format!("t{r}"));
                    }
                }
            }
            None => {
                // -coeff(r) = slope' r - intercept'
                let slope = -self.coeff.slope;
                let intercept = self.coeff.intercept;
                let mut inner = scaled(slope, "r");
                inner.push_str(&format!(" - {intercept}"));
                rhs.raw(format!("sum_{{r>={neg}}} ({inner}) t_r"));
            }
        }
        format!("{} = {}", lhs.finish(), rhs.finish())
    }
}

/// `t2 + t3 = d + sum_{r>=5} (r - 4) t_r` style.
impl fmt::Display for EqualityConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_filtered(|_| true, None))
    }
}

fn scaled(k: i64, var: &str) -> String {
    match k {
        1 => var.to_string(),
        -1 => format!("-{var}"),
        _ => format!("{k}{var}"),
    }
}

#[derive(Default)]
struct Terms(String);

impl Terms {
    fn push(&mut self, k: i64, var: &str) {
        if k == 0 {
            return;
        }
        if self.0.is_empty() {
            self.0 = scaled(k, var);
        } else {
            let sign = if k < 0 { " - " } else { " + " };
            self.0.push_str(sign);
            self.0.push_str(&scaled(k.abs(), var));
        }
    }

    fn raw(&mut self, s: String) {
        if self.0.is_empty() {
            self.0 = s;
        } else {
            self.0.push_str(" + ");
            self.0.push_str(&s);
        }
    }

    fn finish(self) -> String {
        if self.0.is_empty() {
            "0".into()
        } else {
            self.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_instances() {
        let three = equality_constraint(3).unwrap();
        assert_eq!(three.to_string(), "t2 + t3 = d + sum_{r>=5} (r - 4) t_r");
        assert_eq!((three.coeff(2), three.coeff(3), three.coeff(4)), (1, 1, 0));
        assert_eq!(three.coeff(9), -5);

        let four = equality_constraint(4).unwrap();
        assert_eq!(
            four.to_string(),
            "9t2 + 7t3 + t4 = 9d + sum_{r>=5} (6r - 25) t_r"
        );
        assert_eq!(four.content, 1);

        let five = equality_constraint(5).unwrap();
        assert_eq!(
            five.to_string(),
            "4t2 + 3t3 + t4 = 4d + sum_{r>=5} (2r - 9) t_r"
        );
        assert_eq!(five.expanded(6), "4t2 + 3t3 + t4 - t5 - 3t6 = 4d");
    }

    #[test]
    fn rejects_small_orders() {
        assert!(matches!(
            equality_constraint(1),
            Err(Error::InvalidOrder(1))
        ));
    }

    #[test]
    fn content_is_fully_reduced() {
        for n in 2..40 {
            let eq = equality_constraint(n).unwrap();
            assert_eq!(gcd(eq.coeff.content(), eq.d_coeff), 1, "n = {n}");
            assert_eq!(eq.d_coeff * eq.content, (n as i64 - 1).pow(2));
        }
    }
}
