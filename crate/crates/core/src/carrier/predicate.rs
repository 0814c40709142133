use std::fmt;
use std::str::FromStr;

use super::CarrierError;

/// Named membership predicates over natural numbers.
///
/// Grammar: `evens`, `odds`, `all`, `squares`, `primes`, `multiples:<m>`,
/// `interval:<lo>:<hi>`, `atleast:<m>`, `union(<p>,<q>,...)`,
/// `intersect(<p>,<q>,...)`. `N` and `positive` are accepted as aliases of
/// `all` and `atleast:1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    All,
    Evens,
    Odds,
    Squares,
    Primes,
    Multiples(u64),
    Interval(u64, u64),
    AtLeast(u64),
    Union(Vec<Predicate>),
    Intersect(Vec<Predicate>),
}

impl Predicate {
    pub fn eval(&self, v: u64) -> bool {
        match self {
            Predicate::All => true,
            Predicate::Evens => v % 2 == 0,
            Predicate::Odds => v % 2 == 1,
            Predicate::Squares => {
                let r = v.isqrt();
                r * r == v
            }
            Predicate::Primes => is_prime(v),
            Predicate::Multiples(m) => {
                if *m == 0 {
                    v == 0
                } else {
                    v % m == 0
                }
            }
            Predicate::Interval(lo, hi) => *lo <= v && v <= *hi,
            Predicate::AtLeast(m) => v >= *m,
            Predicate::Union(ps) => ps.iter().any(|p| p.eval(v)),
            Predicate::Intersect(ps) => ps.iter().all(|p| p.eval(v)),
        }
    }

    /// True when the predicate does not depend on the value.
    pub fn is_all(&self) -> bool {
        match self {
            Predicate::All => true,
            Predicate::AtLeast(0) => true,
            Predicate::Union(ps) => ps.iter().any(Predicate::is_all),
            Predicate::Intersect(ps) => ps.iter().all(Predicate::is_all),
            _ => false,
        }
    }
}

fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    if v < 4 {
        return true;
    }
    if v % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, name: &str, ps: &[Predicate]| {
            write!(f, "{name}(")?;
            for (i, p) in ps.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")
        };
        match self {
            Predicate::All => f.write_str("all"),
            Predicate::Evens => f.write_str("evens"),
            Predicate::Odds => f.write_str("odds"),
            Predicate::Squares => f.write_str("squares"),
            Predicate::Primes => f.write_str("primes"),
            Predicate::Multiples(m) => write!(f, "multiples:{m}"),
            Predicate::Interval(lo, hi) => write!(f, "interval:{lo}:{hi}"),
            Predicate::AtLeast(m) => write!(f, "atleast:{m}"),
            Predicate::Union(ps) => list(f, "union", ps),
            Predicate::Intersect(ps) => list(f, "intersect", ps),
        }
    }
}

impl FromStr for Predicate {
    type Err = CarrierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CarrierError::UnknownPredicate(s.to_string());
        for (prefix, is_union) in [("union(", true), ("intersect(", false)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                let parts = split_top_level(inner).ok_or_else(bad)?;
                if parts.is_empty() {
                    return Err(bad());
                }
                let ps = parts
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<Vec<Predicate>, _>>()?;
                return Ok(if is_union {
                    Predicate::Union(ps)
                } else {
                    Predicate::Intersect(ps)
                });
            }
        }
        let mut fields = s.split(':');
        let name = fields.next().unwrap_or_default();
        let args: Vec<u64> = fields
            .map(|a| a.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let p = match (name, args.as_slice()) {
            ("all" | "N", []) => Predicate::All,
            ("evens", []) => Predicate::Evens,
            ("odds", []) => Predicate::Odds,
            ("squares", []) => Predicate::Squares,
            ("primes", []) => Predicate::Primes,
            ("positive", []) => Predicate::AtLeast(1),
            ("multiples", [m]) => Predicate::Multiples(*m),
            ("interval", [lo, hi]) => Predicate::Interval(*lo, *hi),
            ("atleast", [m]) => Predicate::AtLeast(*m),
            _ => return Err(bad()),
        };
        Ok(p)
    }
}

fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    if !s.trim().is_empty() {
        parts.push(&s[start..]);
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_builtins() {
        assert_eq!("evens".parse::<Predicate>().unwrap(), Predicate::Evens);
        assert_eq!(
            "multiples:3".parse::<Predicate>().unwrap(),
            Predicate::Multiples(3)
        );
        assert_eq!(
            "interval:10:20".parse::<Predicate>().unwrap(),
            Predicate::Interval(10, 20)
        );
        let u: Predicate = "union(interval:10:20,intersect(evens,squares))".parse().unwrap();
        assert!(u.eval(15));
        assert!(u.eval(36));
        assert!(!u.eval(9));
        assert!("multiples".parse::<Predicate>().is_err());
        assert!("cubes".parse::<Predicate>().is_err());
        assert!("union(evens".parse::<Predicate>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "evens",
            "primes",
            "interval:3:9",
            "union(evens,intersect(odds,atleast:5),squares)",
        ] {
            let p: Predicate = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn primes_and_squares() {
        let primes: Vec<u64> = (0..30).filter(|&v| Predicate::Primes.eval(v)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        let squares: Vec<u64> = (0..=30).filter(|&v| Predicate::Squares.eval(v)).collect();
        assert_eq!(squares, vec![0, 1, 4, 9, 16, 25]);
    }
}
