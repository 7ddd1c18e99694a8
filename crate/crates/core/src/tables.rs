//! 2x2 exposure/outcome contingency tables and their relative frequencies.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the "joint frequencies sum to one" invariant.
const SUM_TOL: f64 = 1e-12;

/// Observed counts of the four (exposure, outcome) cells.
///
/// Cells are named explicitly (`e0_d0` is unexposed without the outcome,
/// `e1_d1` exposed with the outcome) so that a transposed table cannot be
/// ingested silently. Counts stay exact integers; the total is needed
/// unrounded by the bootstrap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContingencyTable {
    pub e0_d0: u64,
    pub e0_d1: u64,
    pub e1_d0: u64,
    pub e1_d1: u64,
}

impl ContingencyTable {
    /// Build a table, rejecting an all-zero one.
    pub fn new(e0_d0: u64, e0_d1: u64, e1_d0: u64, e1_d1: u64) -> Result<Self> {
        let t = Self {
            e0_d0,
            e0_d1,
            e1_d0,
            e1_d1,
        };
        if t.total() == 0 {
            return Err(Error::EmptyTable);
        }
        Ok(t)
    }

    /// Total number of observations.
    pub fn total(&self) -> u64 {
        self.e0_d0 + self.e0_d1 + self.e1_d0 + self.e1_d1
    }

    /// Counts in `(e0_d0, e0_d1, e1_d0, e1_d1)` order.
    pub fn counts(&self) -> [u64; 4] {
        [self.e0_d0, self.e0_d1, self.e1_d0, self.e1_d1]
    }

    /// The four margins `(e=0, e=1, d=0, d=1)`.
    pub fn margins(&self) -> [u64; 4] {
        [
            self.e0_d0 + self.e0_d1,
            self.e1_d0 + self.e1_d1,
            self.e0_d0 + self.e1_d0,
            self.e0_d1 + self.e1_d1,
        ]
    }

    /// Verify that every margin is positive, naming the first empty one.
    ///
    /// Identification needs all four: conditional risks and the relative
    /// risk are undefined otherwise.
    pub fn check_margins(&self) -> Result<()> {
        const NAMES: [&str; 4] = ["e=0", "e=1", "d=0", "d=1"];
        for (margin, name) in self.margins().into_iter().zip(NAMES) {
            if margin == 0 {
                return Err(Error::DegenerateMargin { margin: name });
            }
        }
        Ok(())
    }

    /// Convert counts to observed relative frequencies.
    pub fn frequencies(&self) -> Result<JointFrequencies> {
        self.check_margins()?;
        let n = self.total() as f64;
        Ok(JointFrequencies {
            p_e0_d1: self.e0_d1 as f64 / n,
            p_e1_d1: self.e1_d1 as f64 / n,
            p_e0_d0: self.e0_d0 as f64 / n,
            p_e1_d0: self.e1_d0 as f64 / n,
            p_e1: (self.e1_d0 + self.e1_d1) as f64 / n,
            p_d1: (self.e0_d1 + self.e1_d1) as f64 / n,
        })
    }

    /// Read a table from CSV with header `e0_d0,e0_d1,e1_d0,e1_d1` and a
    /// single data row.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr
            .headers()
            .map_err(|e| Error::MalformedCsv {
                reason: e.to_string(),
            })?
            .clone();
        let expected = ["e0_d0", "e0_d1", "e1_d0", "e1_d1"];
        let got: Vec<&str> = headers.iter().collect();
        if got != expected {
            return Err(Error::MalformedCsv {
                reason: format!("header must be {}, got {}", expected.join(","), got.join(",")),
            });
        }
        let mut rows = rdr.records();
        let record = match rows.next() {
            Some(Ok(r)) => r,
            Some(Err(e)) => {
                return Err(Error::MalformedCsv {
                    reason: e.to_string(),
                })
            }
            None => {
                return Err(Error::MalformedCsv {
                    reason: "missing data row".to_string(),
                })
            }
        };
        if rows.next().is_some() {
            return Err(Error::MalformedCsv {
                reason: "expected exactly one data row".to_string(),
            });
        }
        let mut counts = [0u64; 4];
        for (slot, field) in counts.iter_mut().zip(record.iter()) {
            *slot = field.parse().map_err(|_| Error::MalformedCsv {
                reason: format!("count {field:?} is not a nonnegative integer"),
            })?;
        }
        Self::new(counts[0], counts[1], counts[2], counts[3])
    }
}

/// Observed relative frequencies of the table together with the two margins
/// the identification constraints pin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointFrequencies {
    pub p_e0_d1: f64,
    pub p_e1_d1: f64,
    pub p_e0_d0: f64,
    pub p_e1_d0: f64,
    pub p_e1: f64,
    pub p_d1: f64,
}

impl JointFrequencies {
    /// Build frequencies directly from the four joint probabilities,
    /// deriving the margins. Used by synthetic populations whose exact
    /// frequencies are known in closed form.
    pub fn from_joints(p_e0_d1: f64, p_e1_d1: f64, p_e0_d0: f64, p_e1_d0: f64) -> Result<Self> {
        for (name, v) in [
            ("p_e0_d1", p_e0_d1),
            ("p_e1_d1", p_e1_d1),
            ("p_e0_d0", p_e0_d0),
            ("p_e1_d0", p_e1_d0),
        ] {
            if !(0.0..=1.0).contains(&v) || !v.is_finite() {
                return Err(Error::OutOfRange {
                    name,
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        let sum = p_e0_d1 + p_e1_d1 + p_e0_d0 + p_e1_d0;
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::OutOfRange {
                name: "joint frequency sum",
                value: sum,
                lo: 1.0 - SUM_TOL,
                hi: 1.0 + SUM_TOL,
            });
        }
        Ok(Self {
            p_e0_d1,
            p_e1_d1,
            p_e0_d0,
            p_e1_d0,
            p_e1: p_e1_d0 + p_e1_d1,
            p_d1: p_e0_d1 + p_e1_d1,
        })
    }

    /// Observed relative risk `P(d=1|e=1) / P(d=1|e=0)`.
    pub fn relative_risk(&self) -> Result<f64> {
        let p_e0 = 1.0 - self.p_e1;
        if self.p_e1 <= 0.0 {
            return Err(Error::DegenerateMargin { margin: "e=1" });
        }
        if p_e0 <= 0.0 {
            return Err(Error::DegenerateMargin { margin: "e=0" });
        }
        let risk_exposed = self.p_e1_d1 / self.p_e1;
        let risk_unexposed = self.p_e0_d1 / p_e0;
        if risk_unexposed == 0.0 {
            return Err(Error::DegenerateMargin { margin: "d=1 within e=0" });
        }
        Ok(risk_exposed / risk_unexposed)
    }

    /// `P(d=1 | e=0)`, the mean prognosis without exposure must equal this.
    pub fn risk_given_unexposed(&self) -> f64 {
        self.p_e0_d1 / (1.0 - self.p_e1)
    }

    /// `P(d=1 | e=1)`, the mean prognosis under exposure must equal this.
    pub fn risk_given_exposed(&self) -> f64 {
        self.p_e1_d1 / self.p_e1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn table1() -> ContingencyTable {
        ContingencyTable::new(110_986, 1823, 6277, 647).unwrap()
    }

    fn table2() -> ContingencyTable {
        ContingencyTable::new(4679, 318, 7538, 1631).unwrap()
    }

    fn table3() -> ContingencyTable {
        ContingencyTable::new(3649, 114, 1864, 978).unwrap()
    }

    #[test]
    fn frequencies_of_published_tables() {
        let f = table1().frequencies().unwrap();
        assert_abs_diff_eq!(f.p_e1, 6924.0 / 119_733.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.p_d1, 2470.0 / 119_733.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.p_e1, 0.0578, epsilon = 5e-5);
        assert_abs_diff_eq!(f.p_d1, 0.0206, epsilon = 5e-5);

        let f3 = table3().frequencies().unwrap();
        assert_abs_diff_eq!(f3.p_e1, 2842.0 / 6605.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f3.p_d1, 1092.0 / 6605.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f3.p_e1, 0.4303, epsilon = 5e-5);
        assert_abs_diff_eq!(f3.p_d1, 0.1653, epsilon = 5e-5);
    }

    #[test]
    fn uniform_table_frequencies() {
        let f = ContingencyTable::new(1, 1, 1, 1).unwrap().frequencies().unwrap();
        assert_eq!(f.p_e0_d0, 0.25);
        assert_eq!(f.p_e0_d1, 0.25);
        assert_eq!(f.p_e1_d0, 0.25);
        assert_eq!(f.p_e1_d1, 0.25);
        assert_eq!(f.p_e1, 0.5);
        assert_eq!(f.p_d1, 0.5);
    }

    #[test]
    fn relative_risk_of_published_tables() {
        let rr1 = table1().frequencies().unwrap().relative_risk().unwrap();
        assert_abs_diff_eq!(rr1, 5.8, epsilon = 0.05);
        let rr2 = table2().frequencies().unwrap().relative_risk().unwrap();
        assert_abs_diff_eq!(rr2, 2.8, epsilon = 0.05);
        let rr3 = table3().frequencies().unwrap().relative_risk().unwrap();
        assert_abs_diff_eq!(rr3, 11.0, epsilon = 0.5);
    }

    #[test]
    fn empty_table_rejected() {
        assert_eq!(ContingencyTable::new(0, 0, 0, 0), Err(Error::EmptyTable));
    }

    #[test]
    fn zero_margin_named() {
        let t = ContingencyTable::new(5, 0, 7, 0).unwrap();
        assert_eq!(
            t.frequencies(),
            Err(Error::DegenerateMargin { margin: "d=1" })
        );
        let t = ContingencyTable::new(0, 0, 7, 3).unwrap();
        assert_eq!(
            t.frequencies(),
            Err(Error::DegenerateMargin { margin: "e=0" })
        );
    }

    #[test]
    fn from_joints_rejects_bad_sum() {
        assert!(JointFrequencies::from_joints(0.3, 0.3, 0.3, 0.2).is_err());
        assert!(JointFrequencies::from_joints(0.25, 0.25, 0.25, 0.25).is_ok());
    }

    #[test]
    fn csv_round_trip() {
        let csv = "e0_d0,e0_d1,e1_d0,e1_d1\n110986,1823,6277,647\n";
        let t = ContingencyTable::from_csv(csv.as_bytes()).unwrap();
        assert_eq!(t, table1());
    }

    #[test]
    fn csv_rejects_wrong_header() {
        let csv = "a,b,c,d\n1,2,3,4\n";
        assert!(matches!(
            ContingencyTable::from_csv(csv.as_bytes()),
            Err(Error::MalformedCsv { .. })
        ));
    }

    #[test]
    fn csv_rejects_extra_rows() {
        let csv = "e0_d0,e0_d1,e1_d0,e1_d1\n1,2,3,4\n5,6,7,8\n";
        assert!(matches!(
            ContingencyTable::from_csv(csv.as_bytes()),
            Err(Error::MalformedCsv { .. })
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // frequencies times N recover the counts exactly
            #[test]
            fn round_trip_counts(
                a in 0u64..100_000,
                b in 0u64..100_000,
                c in 0u64..100_000,
                d in 0u64..100_000,
            ) {
                prop_assume!(a > 0 && b > 0 && c > 0 && d > 0);
                let t = ContingencyTable::new(a, b, c, d).unwrap();
                let f = t.frequencies().unwrap();
                let n = t.total() as f64;
                prop_assert_eq!((f.p_e0_d0 * n).round() as u64, a);
                prop_assert_eq!((f.p_e0_d1 * n).round() as u64, b);
                prop_assert_eq!((f.p_e1_d0 * n).round() as u64, c);
                prop_assert_eq!((f.p_e1_d1 * n).round() as u64, d);
                prop_assert!((f.p_e0_d0 + f.p_e0_d1 + f.p_e1_d0 + f.p_e1_d1 - 1.0).abs() < 1e-12);
            }

            // relative risk is invariant under scaling all counts
            #[test]
            fn rr_scale_invariant(
                a in 1u64..10_000,
                b in 1u64..10_000,
                c in 1u64..10_000,
                d in 1u64..10_000,
                k in 2u64..20,
            ) {
                let rr1 = ContingencyTable::new(a, b, c, d).unwrap()
                    .frequencies().unwrap().relative_risk().unwrap();
                let rr2 = ContingencyTable::new(a * k, b * k, c * k, d * k).unwrap()
                    .frequencies().unwrap().relative_risk().unwrap();
                prop_assert!((rr1 - rr2).abs() <= 1e-9 * rr1.abs());
            }

            // independence case: p_e1_d1 * (1 - p_e1) = p_e0_d1 * p_e1 forces RR = 1
            #[test]
            fn rr_one_under_independence(
                pe in 1u64..20,
                pd in 1u64..20,
                n in 20u64..60,
            ) {
                // counts proportional to a product measure
                let (qe, qd) = (n - pe.min(n - 1), n - pd.min(n - 1));
                let t = ContingencyTable::new(qe * qd, qe * pd, pe * qd, pe * pd).unwrap();
                let f = t.frequencies().unwrap();
                prop_assert!((f.relative_risk().unwrap() - 1.0).abs() < 1e-9);
            }
        }
    }
}
