use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::PrError;

/// Variable names accepted by the parser, in canonical order.
pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 'w'];

/// Integer-coefficient polynomial in the variables `x, y, z, w`.
///
/// Only the variables that occur are kept, in canonical order; exponent
/// vectors index into [`Polynomial::variables`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    variables: Vec<char>,
    monomials: Vec<(i64, Vec<u32>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub homogeneous: bool,
    /// Distinct total degrees, ascending.
    pub degrees: Vec<u32>,
}

impl Polynomial {
    pub fn variables(&self) -> &[char] {
        &self.variables
    }

    pub fn monomials(&self) -> &[(i64, Vec<u32>)] {
        &self.monomials
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn degree(&self) -> u32 {
        self.total_degrees().last().copied().unwrap_or(0)
    }

    fn total_degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.monomials.iter().map(|(_, e)| e.iter().sum()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn homogeneity(&self) -> HomogeneityReport {
        let degrees = self.total_degrees();
        HomogeneityReport {
            homogeneous: degrees.len() <= 1,
            degrees,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity().homogeneous
    }

    /// `None` on i128 overflow.
    pub fn eval(&self, values: &[i128]) -> Option<i128> {
        self.monomials.iter().try_fold(0i128, |acc, (c, exps)| {
            let term = exps
                .iter()
                .zip(values)
                .try_fold(i128::from(*c), |t, (&e, &v)| t.checked_mul(v.checked_pow(e)?))?;
            acc.checked_add(term)
        })
    }

    pub fn is_root(&self, values: &[u64]) -> bool {
        let vals: Vec<i128> = values.iter().map(|&v| i128::from(v)).collect();
        self.eval(&vals) == Some(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, exps)) in self.monomials.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
            write!(f, "{sign}")?;
            let mag = c.unsigned_abs();
            let vars: Vec<String> = exps
                .iter()
                .zip(&self.variables)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = PrError;

    /// Syntax: monomials joined by `+`/`-`, each an optional integer
    /// coefficient followed by variables with optional `^exponent`,
    /// separated by `*` or juxtaposed: `x^2+y^2-z^2`, `2x + 3*y - z`, `xy - z^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| PrError::MalformedPolynomial(format!("{s:?}: {msg}"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty"));
        }
        let mut pos = 0;
        let mut raw: Vec<(i64, [u32; 4])> = Vec::new();
        while pos < chars.len() {
            let mut sign = 1i64;
            if chars[pos] == '+' || chars[pos] == '-' {
                if chars[pos] == '-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad("expected + or -"));
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef: i64 = if pos > start {
                chars[start..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad("coefficient too large"))?
            } else {
                1
            };
            let mut exps = [0u32; 4];
            let mut any = pos > start;
            loop {
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                    if pos >= chars.len() || !VARIABLES.contains(&chars[pos]) {
                        return Err(bad("expected a variable after *"));
                    }
                }
                let Some(var) = chars.get(pos).and_then(|c| VARIABLES.iter().position(|v| v == c)) else {
                    break;
                };
                pos += 1;
                let mut e = 1u32;
                if chars.get(pos) == Some(&'^') {
                    pos += 1;
                    let st = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    e = chars[st..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad("expected an exponent after ^"))?;
                }
                exps[var] += e;
                any = true;
            }
            if !any {
                return Err(bad(&format!("unexpected input at position {pos}")));
            }
            raw.push((sign * coef, exps));
        }
        let used: Vec<usize> = (0..4).filter(|&i| raw.iter().any(|(_, e)| e[i] > 0)).collect();
        if used.is_empty() {
            return Err(PrError::ZeroVariables);
        }
        let mut combined: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (c, e) in raw {
            let key: Vec<u32> = used.iter().map(|&i| e[i]).collect();
            *combined.entry(key).or_insert(0) += c;
        }
        // highest total degree first, then lexicographically larger exponents
        let mut monomials: Vec<(i64, Vec<u32>)> = combined.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect();
        monomials.sort_by(|a, b| {
            let da: u32 = a.1.iter().sum();
            let db: u32 = b.1.iter().sum();
            db.cmp(&da).then_with(|| b.1.cmp(&a.1))
        });
        Ok(Polynomial {
            variables: used.iter().map(|&i| VARIABLES[i]).collect(),
            monomials,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_classifies() {
        let p: Polynomial = "x^2+y^2-z^2".parse().unwrap();
        assert_eq!(p.variables(), &['x', 'y', 'z']);
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), 2);
        assert!(p.is_root(&[3, 4, 5]));
        assert!(!p.is_root(&[3, 4, 6]));

        let schur: Polynomial = "x + y - z".parse().unwrap();
        assert!(schur.is_homogeneous());
        let shifted: Polynomial = "x+y-z-1".parse().unwrap();
        let h = shifted.homogeneity();
        assert!(!h.homogeneous);
        assert_eq!(h.degrees, vec![0, 1]);

        let mixed: Polynomial = "2x*y - 3 z^2 + xy".parse().unwrap();
        assert_eq!(mixed.to_string(), "3*x*y-3*z^2");
        assert!(mixed.is_root(&[1, 1, 1]));
    }

    #[test]
    fn display_reparses() {
        for s in ["x^2+y^2-z^2", "x+y-z-1", "2*x*y-w^3", "-x+4"] {
            let p: Polynomial = s.parse().unwrap();
            assert_eq!(p.to_string().parse::<Polynomial>().unwrap(), p, "{s}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!("5".parse::<Polynomial>(), Err(PrError::ZeroVariables)));
        assert!(matches!("x - x".parse::<Polynomial>(), Ok(_)));
        for bad in ["", "x +", "x ^", "a+b", "x**y", "x y z"] {
            let r = bad.parse::<Polynomial>();
            assert!(r.is_err() || bad == "x y z", "{bad}");
        }
    }
}
